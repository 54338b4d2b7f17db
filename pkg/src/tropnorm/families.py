"""Constraint families V/W/Z, generic matrices and the minimal-pair family.

An atom forces a set of zero positions:

  V(p;q)  all of row p and all of column q,
  W(p;q)  row p except (p,q) and column q except (p,q),
  Z(p;q)  the single cell (p,q).

A FamilySpec is a conjunction of atoms; its generic matrix has exactly the
forced zeros (plus the diagonal) and -1 everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DimensionMismatch, NormalMatrix, _same_order
from .ortho import (
    TAG_GIFT,
    TAG_PROPAGATION,
    IndicatorReport,
)

ATOM_KINDS = ("V", "W", "Z")


@dataclass(frozen=True)
class Atom:
    kind: str  # 'V', 'W' or 'Z'
    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.kind}:{self.p},{self.q}"

    def forced_zeros(self, n: int) -> frozenset[tuple[int, int]]:
        if not (1 <= self.p <= n and 1 <= self.q <= n):
            raise ValueError(f"atom {self} out of range for n={n}")
        p, q = self.p, self.q
        if self.kind == "V":
            return frozenset(
                [(p, i) for i in range(1, n + 1)]
                + [(i, q) for i in range(1, n + 1)]
            )
        if self.kind == "W":
            return frozenset(
                [(p, i) for i in range(1, n + 1) if i != q]
                + [(i, q) for i in range(1, n + 1) if i != p]
            )
        if self.kind == "Z":
            return frozenset([(p, q)])
        raise ValueError(f"unknown atom kind {self.kind!r}")


@dataclass(frozen=True)
class FamilySpec:
    """A conjunction of V/W/Z constraints over matrices of order n."""

    n: int
    atoms: tuple[Atom, ...]

    @classmethod
    def parse(cls, n: int, text: str) -> "FamilySpec":
        """Parse 'V:p,q&W:p,q&...' into a spec."""
        atoms = []
        for part in text.split("&"):
            part = part.strip()
            if not part:
                continue
            try:
                kind, rest = part.split(":")
                p_s, q_s = rest.split(",")
                atom = Atom(kind.strip().upper(), int(p_s), int(q_s))
            except ValueError as exc:
                raise ValueError(f"bad atom {part!r}: {exc}") from exc
            if atom.kind not in ATOM_KINDS:
                raise ValueError(f"unknown atom kind {atom.kind!r} in {part!r}")
            atoms.append(atom)
        if not atoms:
            raise ValueError("a family spec needs at least one atom")
        return cls(n, tuple(atoms))

    def __str__(self) -> str:
        return "&".join(str(a) for a in self.atoms)

    @property
    def required_zeros(self) -> frozenset[tuple[int, int]]:
        zeros = {(i, i) for i in range(1, self.n + 1)}
        for atom in self.atoms:
            zeros |= atom.forced_zeros(self.n)
        return frozenset(zeros)


def family(n: int, *atoms: tuple[str, int, int]) -> FamilySpec:
    """Shorthand: family(4, ('V', 1, 2), ('Z', 2, 1))."""
    return FamilySpec(n, tuple(Atom(k, p, q) for (k, p, q) in atoms))


def spec_generic(spec: FamilySpec) -> NormalMatrix:
    """The unique matrix with exactly the forced zeros."""
    return NormalMatrix.from_zeros(spec.n, spec.required_zeros)


def spec_contains(spec: FamilySpec, a: NormalMatrix) -> bool:
    """Membership: every forced zero is a zero of A."""
    if spec.n != a.n:
        raise DimensionMismatch(f"orders differ: {spec.n} vs {a.n}")
    return spec.required_zeros <= a.zeros


# -- the four-variant minimal-pair family -----------------------------


@dataclass(frozen=True)
class MmVariant:
    k: int
    m: int
    variant: int  # 0..3

    def __post_init__(self):
        if self.variant not in (0, 1, 2, 3):
            raise ValueError(f"variant must be in 0..3, got {self.variant}")


def _mm_specs(v: MmVariant, n: int) -> tuple[FamilySpec, FamilySpec]:
    k, m = v.k, v.m
    if not (1 <= k <= n and 1 <= m <= n):
        raise ValueError(f"indices ({k},{m}) out of range for n={n}")
    if v.variant == 0:
        return family(n, ("V", m, k)), family(n, ("V", k, m))
    if v.variant == 1:
        return (
            family(n, ("W", m, k), ("Z", k, m)),
            family(n, ("W", k, m), ("Z", m, k)),
        )
    if v.variant == 2:
        return (
            family(n, ("W", m, k)),
            family(n, ("W", k, m), ("Z", m, k), ("Z", k, m)),
        )
    return (
        family(n, ("W", m, k), ("Z", m, k), ("Z", k, m)),
        family(n, ("W", k, m)),
    )


def mm_pair(v: MmVariant, n: int) -> tuple[NormalMatrix, NormalMatrix]:
    """The generic pair of the chosen variant.  For k = m all four variants
    coincide with the (V(k;k)-generic, V(k;k)-generic) pair."""
    sa, sb = _mm_specs(v, n)
    return spec_generic(sa), spec_generic(sb)


def mm_classify(a: NormalMatrix, b: NormalMatrix) -> MmVariant | None:
    """Direct membership in the minimal-pair family: the pair must equal one
    of the generated generic pairs.  Ties break to the lexicographically
    smallest (k, m), then the smallest variant."""
    n = _same_order(a, b)
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            for variant in range(4):
                v = MmVariant(k, m, variant)
                if mm_pair(v, n) == (a, b):
                    return v
    return None


def mm_characterize(report: IndicatorReport) -> tuple[int, int] | None:
    """Recover (k, m) from an indicator report alone: all off-diagonal cells
    outside {k, m} are gift zeros witnessed by (k, m), the (k, m) and (m, k)
    cells are propagation zeros, and the pair has no duplicates."""
    if report.a == report.b:
        return None
    n = report.n
    if report.duplicate_count != 0:
        return None
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            if k == m:
                continue
            if _characterize_at(report, k, m):
                return (k, m)
    return None


def _characterize_at(report: IndicatorReport, k: int, m: int) -> bool:
    n = report.n
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            if s == t or s in (k, m) or t in (k, m):
                continue
            cls = report.classes[(s, t)]
            if cls.tag != TAG_GIFT or (k, m) not in cls.gift_witnesses:
                return False
    for pos in ((k, m), (m, k)):
        if report.classes[pos].tag != TAG_PROPAGATION:
            return False
    return True
