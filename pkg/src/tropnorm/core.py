"""Two-element tropical semiring {0, -1} and normal matrices over it.

A normal matrix is identified with its set of zero positions: the diagonal
is always zero, every other entry is 0 or -1.  Internally each matrix keeps
one bitmask per row (bit j-1 set means entry (i, j) is zero), which makes
tropical products and row/column extraction cheap up to n ~ 12 and beyond.

All indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

ZERO = 0
MINUS_ONE = -1

_SCALARS = (ZERO, MINUS_ONE)


class DimensionMismatch(ValueError):
    """Raised when two matrices of different orders are combined."""


class MatrixFormatError(ValueError):
    """Raised by parse_matrix on malformed input text."""


def oplus_scalar(a: int, b: int) -> int:
    """Tropical sum: max(a, b)."""
    _check_scalar(a)
    _check_scalar(b)
    return max(a, b)


def odot_scalar(a: int, b: int) -> int:
    """Tropical product on {0, -1}: zero iff both arguments are zero."""
    _check_scalar(a)
    _check_scalar(b)
    return ZERO if (a == ZERO and b == ZERO) else MINUS_ONE


def _check_scalar(a: int) -> None:
    if a not in _SCALARS:
        raise ValueError(f"scalar must be 0 or -1, got {a!r}")


@dataclass(frozen=True)
class NormalMatrix:
    """Square matrix over {0, -1} with zero diagonal, stored as row bitmasks.

    rows[i] has bit (j-1) set iff entry (i+1, j) is zero.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be >= 1, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match order")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"row {i + 1} has bits outside [1..n]")
            if not r & (1 << i):
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be zero")

    # -- construction ------------------------------------------------

    @classmethod
    def from_zeros(cls, n: int, zeros: Iterable[tuple[int, int]]) -> "NormalMatrix":
        """Build from 1-based zero positions; the diagonal is added for free."""
        rows = [1 << i for i in range(n)]
        for i, j in zeros:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"position ({i},{j}) out of range for n={n}")
            rows[i - 1] |= 1 << (j - 1)
        return cls(n, tuple(rows))

    @classmethod
    def from_entries(cls, entries: list[list[int]]) -> "NormalMatrix":
        n = len(entries)
        zeros = [
            (i + 1, j + 1)
            for i in range(n)
            for j in range(n)
            if entries[i][j] == ZERO
        ]
        for i in range(n):
            if entries[i][i] != ZERO:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be zero")
        return cls.from_zeros(n, zeros)

    # -- inspection --------------------------------------------------

    @property
    def zeros(self) -> frozenset[tuple[int, int]]:
        """1-based positions of the zero entries (diagonal included)."""
        out = []
        for i, r in enumerate(self.rows):
            t = r
            while t:
                low = t & -t
                out.append((i + 1, low.bit_length()))
                t ^= low
        return frozenset(out)

    def entry(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        return ZERO if self.rows[i - 1] & (1 << (j - 1)) else MINUS_ONE

    def row_mask(self, i: int) -> int:
        self._check_index(i)
        return self.rows[i - 1]

    def col_mask(self, j: int) -> int:
        self._check_index(j)
        bit = 1 << (j - 1)
        m = 0
        for i, r in enumerate(self.rows):
            if r & bit:
                m |= 1 << i
        return m

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range for n={self.n}")

    def __le__(self, other: "NormalMatrix") -> bool:
        """Entrywise order: since -1 < 0, A <= B iff zeros(A) <= zeros(B)."""
        _same_order(self, other)
        return all(ra & ~rb == 0 for ra, rb in zip(self.rows, other.rows))


def _same_order(a: NormalMatrix, b: NormalMatrix) -> int:
    if a.n != b.n:
        raise DimensionMismatch(f"orders differ: {a.n} vs {b.n}")
    return a.n


# -- distinguished matrices -----------------------------------------


def identity(n: int) -> NormalMatrix:
    return NormalMatrix(n, tuple(1 << i for i in range(n)))


def all_zero(n: int) -> NormalMatrix:
    full = (1 << n) - 1
    return NormalMatrix(n, (full,) * n)


def elementary_e(i: int, j: int, n: int) -> NormalMatrix:
    """All entries zero except a single -1 at (i, j); requires i != j."""
    if i == j:
        raise ValueError("E(i,i) would break the zero diagonal")
    full = (1 << n) - 1
    rows = list((full,) * n)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"position ({i},{j}) out of range for n={n}")
    rows[i - 1] &= ~(1 << (j - 1))
    return NormalMatrix(n, tuple(rows))


def elementary_u(i: int, j: int, n: int) -> NormalMatrix:
    """Diagonal plus a single zero at (i, j); requires i != j."""
    if i == j:
        raise ValueError("U(i,i) coincides with the identity; rejected")
    return NormalMatrix.from_zeros(n, [(i, j)])


def make_elementary(kind: str, n: int, i: int = 0, j: int = 0) -> NormalMatrix:
    """Dispatch on kind in {'E', 'U', 'I', 'Z'}."""
    if kind == "I":
        return identity(n)
    if kind == "Z":
        return all_zero(n)
    if kind == "E":
        return elementary_e(i, j, n)
    if kind == "U":
        return elementary_u(i, j, n)
    raise ValueError(f"unknown elementary kind {kind!r}")


# -- tropical algebra ------------------------------------------------


def mat_oplus(a: NormalMatrix, b: NormalMatrix) -> NormalMatrix:
    """Entrywise max: union of the zero patterns."""
    n = _same_order(a, b)
    return NormalMatrix(n, tuple(ra | rb for ra, rb in zip(a.rows, b.rows)))


def mat_odot(a: NormalMatrix, b: NormalMatrix) -> NormalMatrix:
    """Tropical product: entry (i,j) is zero iff some t has a_it = b_tj = 0.

    Bit-parallel: row i of the product is the union of the rows of b indexed
    by the zero columns of row i of a.
    """
    n = _same_order(a, b)
    brows = b.rows
    rows = []
    for ra in a.rows:
        acc = 0
        t = ra
        while t:
            low = t & -t
            acc |= brows[low.bit_length() - 1]
            t ^= low
        rows.append(acc)
    return NormalMatrix(n, tuple(rows))


def naive_odot(a: NormalMatrix, b: NormalMatrix) -> NormalMatrix:
    """Independent oracle: triple-loop max-plus evaluation over {0, -1}.

    Deliberately avoids the bitmask path so the two products can be checked
    against each other.
    """
    n = _same_order(a, b)
    ea = [[a.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    eb = [[b.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(max(ea[i][t] + eb[t][j] for t in range(n)))
        out.append(row)
    # max-plus over {0,-1} can produce -2; clamp to the semiring
    clamped = [[ZERO if v == 0 else MINUS_ONE for v in row] for row in out]
    return NormalMatrix.from_entries(clamped)


def transpose(a: NormalMatrix) -> NormalMatrix:
    n = a.n
    rows = []
    for i in range(n):
        bit = 1 << i
        r = 0
        for j in range(n):
            if a.rows[j] & bit:
                r |= 1 << j
        rows.append(r)
    return NormalMatrix(n, tuple(rows))


def permute_conjugate(a: NormalMatrix, i: int, j: int) -> NormalMatrix:
    """Conjugation P_ij A P_ij by the transposition (i j): relabel i <-> j."""
    a._check_index(i)
    a._check_index(j)
    if i == j:
        return a
    swap = {i: j, j: i}
    zeros = [
        (swap.get(p, p), swap.get(q, q))
        for (p, q) in a.zeros
    ]
    return NormalMatrix.from_zeros(a.n, zeros)


# -- counting --------------------------------------------------------


def nu(a: NormalMatrix) -> int:
    """Total number of zero entries; at least n."""
    return sum(r.bit_count() for r in a.rows)


def nu_row(a: NormalMatrix, i: int) -> int:
    """Number of zeros in row i (diagonal included)."""
    return a.row_mask(i).bit_count()


def sigma_row(a: NormalMatrix, b: NormalMatrix, i: int) -> int:
    """Off-diagonal zeros of the pair in row i."""
    _same_order(a, b)
    return nu_row(a, i) + nu_row(b, i) - 2


def sigma(a: NormalMatrix, b: NormalMatrix) -> int:
    """Total off-diagonal zeros of the pair: nu(A) + nu(B) - 2n."""
    n = _same_order(a, b)
    return nu(a) + nu(b) - 2 * n


# -- text I/O --------------------------------------------------------


def parse_matrix(text: str) -> NormalMatrix:
    """Parse newline-separated rows of '0' / '-' glyphs."""
    lines = [ln for ln in text.splitlines() if ln.strip() != ""]
    n = len(lines)
    if n == 0:
        raise MatrixFormatError("empty matrix text")
    rows = []
    for i, ln in enumerate(lines):
        ln = ln.strip()
        if len(ln) != n:
            raise MatrixFormatError(
                f"line {i + 1} has {len(ln)} characters, expected {n}"
            )
        r = 0
        for j, ch in enumerate(ln):
            if ch == "0":
                r |= 1 << j
            elif ch != "-":
                raise MatrixFormatError(
                    f"unexpected character {ch!r} at line {i + 1}, column {j + 1}"
                )
        if not r & (1 << i):
            raise MatrixFormatError(f"diagonal entry ({i + 1},{i + 1}) is not '0'")
        rows.append(r)
    return NormalMatrix(n, tuple(rows))


def format_matrix(a: NormalMatrix) -> str:
    lines = []
    for i in range(a.n):
        r = a.rows[i]
        lines.append("".join("0" if r & (1 << j) else "-" for j in range(a.n)))
    return "\n".join(lines)


# -- enumeration helpers ---------------------------------------------


def offdiag_positions(n: int) -> list[tuple[int, int]]:
    """Row-major list of the n(n-1) off-diagonal positions (1-based)."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def from_offdiag_mask(n: int, mask: int) -> NormalMatrix:
    """Matrix whose off-diagonal zeros are the set bits of mask, in the
    order given by offdiag_positions."""
    pos = offdiag_positions(n)
    rows = [1 << i for i in range(n)]
    t = mask
    while t:
        low = t & -t
        i, j = pos[low.bit_length() - 1]
        rows[i - 1] |= 1 << (j - 1)
        t ^= low
    return NormalMatrix(n, tuple(rows))


def to_offdiag_mask(a: NormalMatrix) -> int:
    pos = offdiag_positions(a.n)
    m = 0
    for idx, (i, j) in enumerate(pos):
        if a.rows[i - 1] & (1 << (j - 1)):
            m |= 1 << idx
    return m


def all_normal_matrices(n: int) -> Iterator[NormalMatrix]:
    """All 2^(n^2-n) normal matrices, in off-diagonal mask order."""
    for mask in range(1 << (n * n - n)):
        yield from_offdiag_mask(n, mask)
