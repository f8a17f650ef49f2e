"""Structure verification: distance-regularity, isomorphism
certificates, 2-design parameters, and incidence p-rank.

Distance-regularity is checked from every base vertex, not just one.
The definition quantifies over all vertex pairs, and the graphs this
package cares about are not all vertex-transitive, so a single-base
check would prove nothing.  Violations come back as values carrying
the lexicographically smallest witness; malformed inputs (disconnected
or irregular graphs) raise instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf import field_new
from .geometry import Design, DesignParameters, Graph, f_map
from .linalg import Matrix
from .polarity import Polarity
from .subspace import Subspace


class GraphStructureError(Exception):
    """The graph fails a precondition (disconnected or irregular)."""

    def __init__(self, reason: str, witness):
        super().__init__(f"{reason}: witness {witness}")
        self.reason = reason
        self.witness = witness


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple
    c: tuple
    diameter: int

    def __post_init__(self):
        if len(self.b) != self.diameter or len(self.c) != self.diameter:
            raise ValueError("need diameter many b and c entries")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise ValueError("intersection numbers must be positive")
        if self.c and self.c[0] != 1:
            raise ValueError("c_1 must be 1")

    def __str__(self):
        bs = ",".join(str(x) for x in self.b)
        cs = ",".join(str(x) for x in self.c)
        return "{" + bs + ";" + cs + "}"

    def to_json(self):
        return {"b": list(self.b), "c": list(self.c), "diameter": self.diameter}


@dataclass(frozen=True)
class NotDRG:
    """Witness that some pair of vertices breaks distance-regularity."""

    base: int
    vertex: int
    distance: int
    kind: str  # "b" or "c"
    expected: int
    found: int
    base_label: str
    vertex_label: str

    def to_json(self):
        return {
            "base": self.base,
            "vertex": self.vertex,
            "distance": self.distance,
            "kind": self.kind,
            "expected": self.expected,
            "found": self.found,
            "base_label": self.base_label,
            "vertex_label": self.vertex_label,
        }


@dataclass(frozen=True)
class NotDesign:
    """Witness that a point configuration is not a 2-design."""

    kind: str  # "block_size", "replication", or "pair_count"
    witness: tuple
    expected: int
    found: int

    def to_json(self):
        return {
            "kind": self.kind,
            "witness": list(self.witness),
            "expected": self.expected,
            "found": self.found,
        }


@dataclass(frozen=True)
class IsoCertificate:
    """An explicit vertex permutation claimed to be an isomorphism."""

    mapping: tuple
    source: str
    target: str

    def __post_init__(self):
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(n)):
            raise ValueError("mapping is not a bijection of 0..n-1")

    def to_json(self):
        return {"mapping": list(self.mapping), "source": self.source, "target": self.target}


def _bfs_levels(adj, base: int, n: int):
    """Masks of the distance classes seen from base."""
    seen = 1 << base
    levels = [1 << base]
    frontier = 1 << base
    while True:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= ~seen
        if not nxt:
            return levels, seen
        levels.append(nxt)
        seen |= nxt
        frontier = nxt


def intersection_array(g: Graph):
    """The intersection array, or a NotDRG witness.

    Runs a BFS from every vertex; for a vertex u at distance i from the
    base, the neighbor counts one level out and one level back must
    agree with the first occurrence of distance i anywhere in the scan.
    """
    n = g.n
    if n == 0:
        raise GraphStructureError("empty", ())
    degs = g.degrees()
    k0 = degs[0]
    for i, dg in enumerate(degs):
        if dg != k0:
            raise GraphStructureError("irregular", (0, i))
    full = (1 << n) - 1
    b = {}
    c = {}
    for base in range(n):
        levels, seen = _bfs_levels(g.adj, base, n)
        if seen != full:
            missing = (~seen & full)
            raise GraphStructureError("disconnected", (base, (missing & -missing).bit_length() - 1))
        top = len(levels) - 1
        for i, level in enumerate(levels):
            up = levels[i + 1] if i < top else 0
            down = levels[i - 1] if i > 0 else 0
            m = level
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                bu = (g.adj[u] & up).bit_count()
                if b.setdefault(i, bu) != bu:
                    return NotDRG(base, u, i, "b", b[i], bu, repr(g.labels[base]), repr(g.labels[u]))
                if i > 0:
                    cu = (g.adj[u] & down).bit_count()
                    if c.setdefault(i, cu) != cu:
                        return NotDRG(base, u, i, "c", c[i], cu, repr(g.labels[base]), repr(g.labels[u]))
    d = max(b)
    assert b[d] == 0 and all(b[i] > 0 for i in range(d))
    return IntersectionArray(
        tuple(b[i] for i in range(d)),
        tuple(c[i] for i in range(1, d + 1)),
        d,
    )


def check_isomorphism(g1: Graph, g2: Graph, cert: IsoCertificate) -> bool:
    """Does cert map g1 onto g2 edge-for-edge and non-edge-for-non-edge?

    Compares the full permuted adjacency mask of every vertex, so
    missing edges are caught as well as wrong ones.
    """
    if g1.n != g2.n:
        raise ValueError(f"vertex counts differ: {g1.n} vs {g2.n}")
    if len(cert.mapping) != g1.n:
        raise ValueError("certificate size does not match the graphs")
    mp = cert.mapping
    for i in range(g1.n):
        row = 0
        for j in g1.neighbors(i):
            row |= 1 << mp[j]
        if row != g2.adj[mp[i]]:
            return False
    return True


def f_certificate(g: Graph, d: Design, h: Subspace, s: Polarity) -> IsoCertificate:
    """The block map as an index permutation: twisted vertex i goes to
    the design block holding exactly the points of f(W_i)."""
    mapping = []
    for tag, w in g.labels:
        mapping.append(d.block_index(sorted(f_map(w, h, s))))
    return IsoCertificate(
        tuple(mapping),
        source=f"twisted-grassmann[{g.n}]",
        target=f"design-blocks[{d.b}]",
    )


def check_2design(d: Design):
    """DesignParameters if d is a 2-design, else the first violation.

    Scans blocks, then points, then point pairs, each in index order,
    so a failing design always reports the same witness.
    """
    if d.b == 0:
        raise ValueError("empty design")
    k = len(d.blocks[0])
    for bi, blk in enumerate(d.blocks):
        if len(blk) != k:
            return NotDesign("block_size", (bi,), k, len(blk))
    v = d.v
    rep = [0] * v
    paircount = {}
    for blk in d.blocks:
        for p in blk:
            rep[p] += 1
        for a, bb in combinations(blk, 2):
            paircount[(a, bb)] = paircount.get((a, bb), 0) + 1
    r = rep[0]
    for p in range(v):
        if rep[p] != r:
            return NotDesign("replication", (p,), r, rep[p])
    lam = paircount.get((0, 1), 0)
    for a in range(v):
        for bb in range(a + 1, v):
            got = paircount.get((a, bb), 0)
            if got != lam:
                return NotDesign("pair_count", (a, bb), lam, got)
    return DesignParameters(v=v, b=d.b, r=r, k=k, lambda_=lam)


def p_rank(d: Design, p: int) -> int:
    """Rank of the b x v incidence matrix over GF(p)."""
    field = field_new(p, 1)
    return Matrix(field, d.incidence_rows()).rank()


def vertex_statistics(g: Graph):
    """Per-vertex degree and triangle count, for structural exploration."""
    out = []
    for u in range(g.n):
        tri = 0
        for v in g.neighbors(u):
            tri += (g.adj[u] & g.adj[v]).bit_count()
        out.append({"degree": g.degree(u), "triangles": tri // 2})
    return out
