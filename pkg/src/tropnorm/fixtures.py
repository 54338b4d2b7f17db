"""Hard-coded matrices used as test fixtures and counterexamples.

Everything here is stored in the text glyph format ('0' for zero, '-' for
minus one) and parsed on demand, so the fixtures double as parser tests.
"""

from __future__ import annotations

from .core import NormalMatrix, parse_matrix

# The four generic pairs of the minimal family at n = 6, (k, m) = (4, 3).
# Variant i differs from the others only at the (4,3) / (3,4) cells.
_MM43_N6 = {
    0: (
        """
        0--0--
        -0-0--
        000000
        ---0--
        ---00-
        ---0-0
        """,
        """
        0-0---
        -00---
        --0---
        000000
        --0-0-
        --0--0
        """,
    ),
    1: (
        """
        0--0--
        -0-0--
        000-00
        --00--
        ---00-
        ---0-0
        """,
        """
        0-0---
        -00---
        --00--
        00-000
        --0-0-
        --0--0
        """,
    ),
    2: (
        """
        0--0--
        -0-0--
        000-00
        ---0--
        ---00-
        ---0-0
        """,
        """
        0-0---
        -00---
        --00--
        000000
        --0-0-
        --0--0
        """,
    ),
    3: (
        """
        0--0--
        -0-0--
        000000
        --00--
        ---00-
        ---0-0
        """,
        """
        0-0---
        -00---
        --0---
        00-000
        --0-0-
        --0--0
        """,
    ),
}

# Minimal orthogonal pairs outside the four-variant family, n = 3..6.
_MINIMAL_OUTSIDERS = {
    3: (
        """
        0--
        -0-
        --0
        """,
        """
        000
        000
        000
        """,
    ),
    4: (
        """
        0--0
        -00-
        -00-
        0--0
        """,
        """
        0-0-
        -0-0
        0-0-
        -0-0
        """,
    ),
    5: (
        """
        0--0-
        -00-0
        -00-0
        0--0-
        -00-0
        """,
        """
        0-0--
        -0-0-
        0-0--
        -0-00
        ---00
        """,
    ),
    6: (
        """
        0--0--
        -0--0-
        --0--0
        0--0--
        -0--0-
        --0--0
        """,
        """
        0---00
        -0-0-0
        --000-
        -000--
        0-0-0-
        00---0
        """,
    ),
}

# 3x3 circulant: self-orthogonal with only three off-diagonal zeros, yet not
# of the single-index row-and-column form.
_CIRCULANT_3 = """
0-0
00-
-00
"""

# The two order-3 vertices at distance 3 in the W-pattern graph, plus the
# intermediate vertices of a length-3 path between them.
_WNL3_A = """
0-0
-0-
-00
"""
_WNL3_B = """
00-
-00
--0
"""
_WNL3_PATH_1 = """
00-
000
0-0
"""
_WNL3_PATH_2 = """
0-0
00-
000
"""


def _parse(block: str) -> NormalMatrix:
    return parse_matrix("\n".join(ln.strip() for ln in block.strip().splitlines()))


def mm43_pair_n6(variant: int) -> tuple[NormalMatrix, NormalMatrix]:
    a, b = _MM43_N6[variant]
    return _parse(a), _parse(b)


def minimal_pair_outside_family(n: int) -> tuple[NormalMatrix, NormalMatrix]:
    if n not in _MINIMAL_OUTSIDERS:
        raise ValueError(f"no stored outsider pair for n={n}")
    a, b = _MINIMAL_OUTSIDERS[n]
    return _parse(a), _parse(b)


def circulant_3() -> NormalMatrix:
    return _parse(_CIRCULANT_3)


def wnl3_distance_example() -> tuple[NormalMatrix, NormalMatrix]:
    return _parse(_WNL3_A), _parse(_WNL3_B)


def wnl3_distance_path() -> list[NormalMatrix]:
    a, b = wnl3_distance_example()
    return [a, _parse(_WNL3_PATH_1), _parse(_WNL3_PATH_2), b]
