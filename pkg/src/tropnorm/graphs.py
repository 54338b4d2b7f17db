"""Relation graphs on normal matrices.

Three graphs share the machinery:

* ORTHO: vertices are all normal matrices except the two trivial ones,
  edges are orthogonal pairs, loops mark self-orthogonal matrices;
* VNL: vertices carry some full row p / column q zero pattern (p != q),
  edges demand A carrying pattern (p;q) and B the swapped one;
* WNL: the analogous graph for the weak pattern (row p and column q
  zero except possibly the (p,q) cell), with the three sufficient
  conditions on corner cells as the edge rule.

VNL and WNL adjacency depends only on which patterns a matrix carries,
so vertices are grouped into classes with equal pattern signatures and
all metrics are computed on the (small) class graph; the blow-up back
to the full graph only needs class sizes.  ORTHO is built explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import NormalMatrix, from_offdiag_mask, to_offdiag_mask
from .ortho import is_orthogonal

ORTHO = "ortho"
VNL = "vnl"
WNL = "wnl"
GRAPH_KINDS = (ORTHO, VNL, WNL)

ORTHO_BUILD_GUARD = 4
PATTERN_BUILD_GUARD = 5

INFINITY = math.inf


# -- off-diagonal slot helpers -------------------------------------------


def _slot(n: int, i: int, j: int) -> int:
    """Bit index of off-diagonal cell (i, j) in row-major mask order."""
    return (i - 1) * (n - 1) + (j - 1 if j < i else j - 2)


def _pat_row(n: int, p: int) -> int:
    m = 0
    for j in range(1, n + 1):
        if j != p:
            m |= 1 << _slot(n, p, j)
    return m


def _pat_col(n: int, q: int) -> int:
    m = 0
    for i in range(1, n + 1):
        if i != q:
            m |= 1 << _slot(n, i, q)
    return m


def _pat_v(n: int, p: int, q: int) -> int:
    return _pat_row(n, p) | _pat_col(n, q)


def _pat_w(n: int, p: int, q: int) -> int:
    if p == q:
        return _pat_v(n, p, p)
    return _pat_v(n, p, q) & ~(1 << _slot(n, p, q))


def _cell(n: int, p: int, q: int) -> int:
    return 1 << _slot(n, p, q)


def _sig_transpose_perm(n: int) -> np.ndarray:
    """Permutation sending signature slot (p, q) to (q, p)."""
    perm = np.zeros(n * n, dtype=np.int64)
    for p in range(n):
        for q in range(n):
            perm[p * n + q] = q * n + p
    return perm


def _signatures(masks: np.ndarray, n: int, patterns: list[int]) -> np.ndarray:
    """Pack pattern containment of each mask into one integer per mask."""
    sig = np.zeros(len(masks), dtype=np.int64)
    for s, pat in enumerate(patterns):
        sig |= ((masks & pat) == pat).astype(np.int64) << s
    return sig


def _apply_perm(sig: np.ndarray, perm: np.ndarray) -> np.ndarray:
    out = np.zeros_like(sig)
    for s in range(len(perm)):
        out |= ((sig >> s) & 1) << perm[s]
    return out


# -- graph value ----------------------------------------------------------


@dataclass
class OrthoGraph:
    kind: str
    n: int
    vertices: list[NormalMatrix]
    _index: dict = field(repr=False)            # offdiag mask -> vertex idx
    # explicit representation (ORTHO)
    _adj: list | None = field(default=None, repr=False)
    _loops: set | None = field(default=None, repr=False)
    # quotient representation (VNL / WNL)
    _class_of: np.ndarray | None = field(default=None, repr=False)
    _class_sizes: list | None = field(default=None, repr=False)
    _class_adj: list | None = field(default=None, repr=False)  # int bitsets
    _stats: dict | None = field(default=None, repr=False)

    def vertex_index(self, a: NormalMatrix) -> int:
        if a.n != self.n:
            raise ValueError(f"order {a.n} vertex in an order {self.n} graph")
        idx = self._index.get(to_offdiag_mask(a))
        if idx is None:
            raise ValueError("matrix is not a vertex of this graph")
        return idx

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)


# -- adjacency predicates -------------------------------------------------


def _vnl_patterns(n: int) -> list[int]:
    return [_pat_v(n, p, q) for p in range(1, n + 1) for q in range(1, n + 1)]


def _wnl_patterns(n: int) -> tuple[list[int], list[int], list[int]]:
    w, wzo, wzz = [], [], []
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            base = _pat_w(n, p, q)
            w.append(base)
            if p == q:
                wzo.append(base)
                wzz.append(base)
            else:
                wzo.append(base | _cell(n, q, p))
                wzz.append(base | _cell(n, p, q) | _cell(n, q, p))
    return w, wzo, wzz


def adjacent(kind: str, a: NormalMatrix, b: NormalMatrix) -> bool:
    """Edge predicate, loops included (a == b tests for a loop)."""
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    n = a.n
    if b.n != n:
        raise ValueError("vertices have different orders")
    if not _is_vertex(kind, a) or not _is_vertex(kind, b):
        raise ValueError(f"arguments must be vertices of the {kind} graph")
    if kind == ORTHO:
        return is_orthogonal(a, b)
    am = to_offdiag_mask(a)
    bm = to_offdiag_mask(b)
    if kind == VNL:
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if (am & _pat_v(n, p, q)) == _pat_v(n, p, q) and (
                    bm & _pat_v(n, q, p)
                ) == _pat_v(n, q, p):
                    return True
        return False
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            a_w = (am & _pat_w(n, k, m)) == _pat_w(n, k, m)
            b_w = (bm & _pat_w(n, m, k)) == _pat_w(n, m, k)
            if not (a_w and b_w):
                continue
            if k == m:
                return True
            a_zs = bool(am & _cell(n, k, m))
            a_zo = bool(am & _cell(n, m, k))
            b_zs = bool(bm & _cell(n, m, k))
            b_zo = bool(bm & _cell(n, k, m))
            if (a_zs and a_zo) or (a_zo and b_zo) or (b_zs and b_zo):
                return True
    return False


def _is_vertex(kind: str, a: NormalMatrix) -> bool:
    n = a.n
    full = (1 << (n * n - n)) - 1
    m = to_offdiag_mask(a)
    if kind == ORTHO:
        return m not in (0, full)
    if m == full:
        return False
    pats = _pat_v if kind == VNL else _pat_w
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p != q and (m & pats(n, p, q)) == pats(n, p, q):
                return True
    return False


# -- construction ----------------------------------------------------------


def build(kind: str, n: int) -> OrthoGraph:
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    if kind == ORTHO:
        if n > ORTHO_BUILD_GUARD:
            raise ValueError(f"ORTHO build refused above n={ORTHO_BUILD_GUARD}")
        return _build_ortho(n)
    if n > PATTERN_BUILD_GUARD:
        raise ValueError(f"{kind} build refused above n={PATTERN_BUILD_GUARD}")
    return _build_pattern_graph(kind, n)


def _build_ortho(n: int) -> OrthoGraph:
    slots = n * n - n
    full = (1 << slots) - 1
    masks = [m for m in range(1 << slots) if m not in (0, full)]
    vertices = [from_offdiag_mask(n, m) for m in masks]
    v = len(vertices)

    # rows and columns of each vertex as n-bit integers
    rowarr = np.zeros((v, n), dtype=np.int64)
    colarr = np.zeros((v, n), dtype=np.int64)
    for idx, mat in enumerate(vertices):
        for i in range(n):
            rowarr[idx, i] = mat.rows[i]
        for j in range(n):
            colarr[idx, j] = mat.col_mask(j + 1)

    adj_bits: list[int] = []
    loops: set[int] = set()
    ok = np.empty(v, dtype=bool)
    for idx, mat in enumerate(vertices):
        ok[:] = True
        # A (.) B all zero: every row of A meets every column of B
        for i in range(n):
            ri = int(rowarr[idx, i])
            for j in range(n):
                ok &= (colarr[:, j] & ri) != 0
        # B (.) A all zero: every row of B meets every column of A
        for j in range(n):
            cj = int(colarr[idx, j])
            for i in range(n):
                ok &= (rowarr[:, i] & cj) != 0
        if ok[idx]:
            loops.add(idx)
        okc = ok.copy()
        okc[idx] = False
        bits = int.from_bytes(
            np.packbits(okc, bitorder="little").tobytes(), "little"
        )
        adj_bits.append(bits)

    g = OrthoGraph(
        kind=ORTHO,
        n=n,
        vertices=vertices,
        _index={m: i for i, m in enumerate(masks)},
        _adj=adj_bits,
        _loops=loops,
    )
    return g


def _build_pattern_graph(kind: str, n: int) -> OrthoGraph:
    slots = n * n - n
    full = (1 << slots) - 1
    allm = np.arange(1 << slots, dtype=np.int64)
    perm = _sig_transpose_perm(n)

    if kind == VNL:
        pats = _vnl_patterns(n)
        sig = _signatures(allm, n, pats)
        sigs = [sig]
    else:
        w, wzo, wzz = _wnl_patterns(n)
        sigs = [
            _signatures(allm, n, w),
            _signatures(allm, n, wzo),
            _signatures(allm, n, wzz),
        ]

    # vertex filter: some off-diagonal (p,q) pattern, and not the top matrix
    offdiag_bits = 0
    for p in range(n):
        for q in range(n):
            if p != q:
                offdiag_bits |= 1 << (p * n + q)
    is_vert = (sigs[0] & offdiag_bits) != 0
    is_vert[full] = False
    vmask = allm[is_vert]
    vsigs = [s[is_vert] for s in sigs]

    # quotient by the signature tuple
    key = np.stack(vsigs, axis=1)
    uniq, class_of = np.unique(key, axis=0, return_inverse=True)
    class_of = class_of.reshape(-1)
    k = len(uniq)
    sizes = np.bincount(class_of, minlength=k).tolist()

    if kind == VNL:
        s = uniq[:, 0]
        st = _apply_perm(s, perm)
        adjm = (s[:, None] & st[None, :]) != 0
    else:
        w, wzo, wzz = uniq[:, 0], uniq[:, 1], uniq[:, 2]
        wt = _apply_perm(w, perm)
        wzot = _apply_perm(wzo, perm)
        wzzt = _apply_perm(wzz, perm)
        adjm = (
            ((wzz[:, None] & wt[None, :]) != 0)
            | ((wzo[:, None] & wzot[None, :]) != 0)
            | ((w[:, None] & wzzt[None, :]) != 0)
        )
    assert (adjm == adjm.T).all()

    class_adj = []
    for c in range(k):
        bits = int.from_bytes(
            np.packbits(adjm[c], bitorder="little").tobytes(), "little"
        )
        class_adj.append(bits)

    vertices = [from_offdiag_mask(n, int(m)) for m in vmask]
    g = OrthoGraph(
        kind=kind,
        n=n,
        vertices=vertices,
        _index={int(m): i for i, m in enumerate(vmask)},
        _class_of=class_of,
        _class_sizes=sizes,
        _class_adj=class_adj,
    )
    return g


# -- metrics ----------------------------------------------------------------


def _bfs_bitset(adj: list[int], start: int, nbits: int):
    """Distance list from start over bitset adjacency (loops absent)."""
    dist = [INFINITY] * nbits
    dist[start] = 0
    seen = 1 << start
    frontier = 1 << start
    d = 0
    while frontier:
        nxt = 0
        t = frontier
        while t:
            low = t & -t
            nxt |= adj[low.bit_length() - 1]
            t ^= low
        nxt &= ~seen
        d += 1
        t = nxt
        while t:
            low = t & -t
            dist[low.bit_length() - 1] = d
            t ^= low
        seen |= nxt
        frontier = nxt
    return dist


def _class_dist_matrix(g: OrthoGraph):
    k = len(g._class_sizes)
    # strip the diagonal (self-adjacency is not a step between classes)
    return [
        _bfs_bitset([g._class_adj[c] for c in range(k)], a, k) for a in range(k)
    ]


def dist(g: OrthoGraph, u: NormalMatrix, v: NormalMatrix):
    iu = g.vertex_index(u)
    iv = g.vertex_index(v)
    if iu == iv:
        return 0
    if g._adj is not None:
        return _bfs_bitset(g._adj, iu, g.num_vertices)[iv]
    cu = int(g._class_of[iu])
    cv = int(g._class_of[iv])
    k = len(g._class_sizes)
    if cu != cv:
        return _bfs_bitset(g._class_adj, cu, k)[cv]
    if g._class_adj[cu] & (1 << cu):
        return 1
    if g._class_adj[cu] & ~(1 << cu):
        return 2
    return INFINITY


def _quotient_stats(g: OrthoGraph) -> dict:
    sizes = g._class_sizes
    adj = g._class_adj
    k = len(sizes)
    self_adj = [bool(adj[c] & (1 << c)) for c in range(k)]
    others = [adj[c] & ~(1 << c) for c in range(k)]

    edges = 0
    loops = 0
    for a in range(k):
        if self_adj[a]:
            loops += sizes[a]
            edges += sizes[a] * (sizes[a] - 1) // 2
        t = others[a]
        while t:
            low = t & -t
            b = low.bit_length() - 1
            if b > a:
                edges += sizes[a] * sizes[b]
            t ^= low

    dmat = _class_dist_matrix(g)
    diam = 0
    for a in range(k):
        for b in range(a + 1, k):
            diam = max(diam, dmat[a][b])
        if sizes[a] >= 2:
            if self_adj[a]:
                intra = 1
            elif others[a]:
                intra = 2
            else:
                intra = INFINITY
            diam = max(diam, intra)
    connected = diam < INFINITY

    girth = INFINITY
    for a in range(k):
        if self_adj[a] and (
            sizes[a] >= 3 or (sizes[a] >= 2 and others[a])
        ):
            girth = 3
            break
    if girth > 3:
        for a in range(k):
            t = others[a]
            while t:
                low = t & -t
                b = low.bit_length() - 1
                if b > a and others[a] & others[b] & ~(1 << a) & ~(1 << b):
                    girth = 3
                    break
                t ^= low
            if girth == 3:
                break
    if girth > 4:
        for a in range(k):
            if sizes[a] < 2:
                continue
            t = others[a]
            nb = 0
            while t:
                low = t & -t
                b = low.bit_length() - 1
                nb += 1
                if sizes[b] >= 2 or nb >= 2:
                    girth = 4
                    break
                t ^= low
            if girth == 4:
                break
    if girth > 4:
        girth = min(girth, _simple_girth(others, k, cap=girth))

    return {
        "kind": g.kind,
        "n": g.n,
        "vertices": g.num_vertices,
        "edges": edges,
        "loops": loops,
        "girth": girth,
        "diameter": diam,
        "connected": connected,
    }


def _simple_girth(adj: list[int], nbits: int, cap=INFINITY):
    """Girth of a simple graph given as bitset rows (no self bits)."""
    best = cap
    for root in range(nbits):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                if 2 * dist[x] >= best - 1:
                    break
                t = adj[x]
                while t:
                    low = t & -t
                    y = low.bit_length() - 1
                    t ^= low
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif y != parent[x]:
                        best = min(best, dist[x] + dist[y] + 1)
            frontier = nxt
        if best == 3:
            break
    return best


def _explicit_stats(g: OrthoGraph) -> dict:
    adj = g._adj
    v = g.num_vertices
    edges = sum(b.bit_count() for b in adj) // 2
    loops = len(g._loops)

    diam = 0
    connected = True
    for s in range(v):
        d = _bfs_bitset(adj, s, v)
        m = max(d)
        if m == INFINITY:
            connected = False
            diam = INFINITY
            break
        diam = max(diam, m)

    girth = INFINITY
    for u in range(v):
        t = adj[u]
        while t:
            low = t & -t
            w = low.bit_length() - 1
            t ^= low
            if w > u and adj[u] & adj[w] & ~(1 << u) & ~(1 << w):
                girth = 3
                break
        if girth == 3:
            break
    if girth > 3:
        girth = _simple_girth(adj, v, cap=girth)

    return {
        "kind": g.kind,
        "n": g.n,
        "vertices": v,
        "edges": edges,
        "loops": loops,
        "girth": girth,
        "diameter": diam,
        "connected": connected,
    }


def stats(g: OrthoGraph) -> dict:
    if g._stats is None:
        g._stats = _explicit_stats(g) if g._adj is not None else _quotient_stats(g)
    return g._stats


def diameter(g: OrthoGraph):
    return stats(g)["diameter"]


def girth(g: OrthoGraph):
    return stats(g)["girth"]


def is_connected(g: OrthoGraph) -> bool:
    return stats(g)["connected"]


def has_loop(g: OrthoGraph, u: NormalMatrix) -> bool:
    iu = g.vertex_index(u)
    if g._loops is not None:
        return iu in g._loops
    c = int(g._class_of[iu])
    return bool(g._class_adj[c] & (1 << c))
