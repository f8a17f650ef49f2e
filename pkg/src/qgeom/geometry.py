"""Grassmann and twisted Grassmann graphs, geometric and
pseudo-geometric designs, and the block map tying them together.

Vertex and block orders are deterministic: subspace enumeration order
throughout, with the twisted graph listing its A-family (subspaces not
inside the hyperplane) before its B-family.  Designs index points by
the sorted list of canonical projective representatives.

Internally every subspace is turned into a bitmask over radix-q vector
encodings, so intersection dimensions reduce to popcounts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .gf import Field, field_from_order
from .polarity import Polarity, polarity_new
from .subspace import (
    ProjectivePoint,
    Subspace,
    affine_points,
    coordinate_hyperplane,
    enumerate_k_subspaces,
    full_space,
    gaussian_binomial,
    projective_points,
)


class Graph:
    """Undirected graph: labels plus one adjacency bitmask per vertex."""

    __slots__ = ("labels", "adj")

    def __init__(self, labels, adj):
        labels = tuple(labels)
        adj = tuple(adj)
        if len(labels) != len(adj):
            raise ValueError("one label per adjacency row required")
        n = len(adj)
        cols = [0] * n
        for i, row in enumerate(adj):
            if row >> n:
                raise ValueError(f"adjacency row {i} has bits beyond vertex range")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
            m = row
            while m:
                low = m & -m
                cols[low.bit_length() - 1] |= 1 << i
                m ^= low
        if tuple(cols) != adj:
            raise ValueError("adjacency is not symmetric")
        self.labels = labels
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges, labels=None):
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(labels if labels is not None else range(n), adj)

    @property
    def n(self) -> int:
        return len(self.adj)

    def is_adjacent(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def degrees(self):
        return [row.bit_count() for row in self.adj]

    def neighbors(self, i: int):
        row = self.adj[i]
        out = []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self):
        """Sorted (i, j) pairs with i < j."""
        out = []
        for i, row in enumerate(self.adj):
            row >>= i + 1
            while row:
                low = row & -row
                out.append((i, i + 1 + low.bit_length() - 1))
                row ^= low
        return out

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges()})"


class Design:
    """Point set plus blocks given as sorted tuples of point indices.

    Blocks must be distinct; repeated blocks raise at construction
    time, since the automorphism arguments downstream assume a block is
    recoverable from its point set.
    """

    __slots__ = ("points", "blocks", "block_labels", "_index", "_masks")

    def __init__(self, points, blocks, block_labels=None):
        self.points = tuple(points)
        v = len(self.points)
        canon = []
        for bi, block in enumerate(blocks):
            t = tuple(sorted(block))
            if len(set(t)) != len(t):
                raise ValueError(f"block {bi} repeats a point")
            if t and not (0 <= t[0] and t[-1] < v):
                raise ValueError(f"block {bi} has point indices outside 0..{v - 1}")
            canon.append(t)
        if len(set(canon)) != len(canon):
            seen = {}
            for bi, t in enumerate(canon):
                if t in seen:
                    raise ValueError(f"blocks {seen[t]} and {bi} are identical")
                seen[t] = bi
        self.blocks = tuple(canon)
        if block_labels is None:
            block_labels = range(len(self.blocks))
        self.block_labels = tuple(block_labels)
        if len(self.block_labels) != len(self.blocks):
            raise ValueError("one label per block required")
        self._index = None
        self._masks = None

    @property
    def v(self) -> int:
        return len(self.points)

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_index(self, block) -> int:
        if self._index is None:
            self._index = {blk: i for i, blk in enumerate(self.blocks)}
        return self._index[tuple(sorted(block))]

    def has_block(self, block) -> bool:
        if self._index is None:
            self._index = {blk: i for i, blk in enumerate(self.blocks)}
        return tuple(sorted(block)) in self._index

    def block_masks(self):
        if self._masks is None:
            self._masks = [sum(1 << i for i in blk) for blk in self.blocks]
        return self._masks

    def incidence_rows(self):
        """b rows of v 0/1 entries, block order by construction."""
        v = self.v
        out = []
        for blk in self.blocks:
            row = [0] * v
            for i in blk:
                row[i] = 1
            out.append(tuple(row))
        return out

    def __repr__(self):
        return f"Design(v={self.v}, b={self.b})"


@dataclass(frozen=True)
class DesignParameters:
    v: int
    b: int
    r: int
    k: int
    lambda_: int

    def __post_init__(self):
        if self.b * self.k != self.v * self.r:
            raise ValueError("counting identity b*k = v*r fails")
        if self.lambda_ * (self.v - 1) != self.r * (self.k - 1):
            raise ValueError("counting identity lambda*(v-1) = r*(k-1) fails")

    def to_json(self):
        return {"v": self.v, "b": self.b, "r": self.r, "k": self.k, "lambda": self.lambda_}


def _vector_code(q: int, v) -> int:
    code = 0
    for x in reversed(v):
        code = code * q + x
    return code


def subspace_mask(s: Subspace) -> int:
    """Bitmask with one bit per vector of s, radix-q encoded."""
    q = s.field.q
    m = 0
    for v in s.vectors():
        m |= 1 << _vector_code(q, v)
    return m


@lru_cache(maxsize=None)
def _point_order(field: Field, n: int):
    """Canonical [V] point list and rep -> index lookup."""
    pts = projective_points(full_space(field, n))
    return tuple(pts), {p.rep: i for i, p in enumerate(pts)}


def point_index_map(field: Field, n: int) -> dict:
    return _point_order(field, n)[1]


def _powers_of(q: int, upto: int) -> dict:
    return {q ** d: d for d in range(upto + 1)}


def grassmann_graph(n: int, k: int, q: int) -> Graph:
    """J_q(n,k): k-subspaces of GF(q)^n, adjacent when meeting in dim k-1."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    field = field_from_order(q)
    subs = list(enumerate_k_subspaces(full_space(field, n), k))
    masks = [subspace_mask(s) for s in subs]
    target = q ** (k - 1)
    nv = len(subs)
    adj = [0] * nv
    for i in range(nv):
        mi = masks[i]
        for j in range(i + 1, nv):
            if (mi & masks[j]).bit_count() == target:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(subs, adj)


def _check_twisted_instance(field: Field, e: int, h: Subspace):
    if e < 2:
        raise ValueError(f"e must be >= 2, got {e}")
    n = 2 * e + 1
    if h.ambient_dim != n or h.dim != n - 1:
        raise ValueError(f"h must be a hyperplane of GF({field.q})^{n}")
    if h.field != field:
        raise ValueError("h is defined over a different field")
    return n


def twisted_grassmann(field: Field, e: int, h: Subspace = None, s: Polarity = None) -> Graph:
    """The van Dam-Koolen twisted Grassmann graph on A ∪ B.

    A holds the (e+1)-subspaces of V not inside h, B the (e-1)-subspaces
    of h; A vertices come first.  Adjacency: A-A pairs meet in dim e,
    an A vertex covers its B neighbors, B-B pairs meet in dim e-2.  The
    polarity argument is accepted for signature parity with the design
    constructor; the graph itself never consults it.
    """
    if h is None:
        h = coordinate_hyperplane(field, 2 * e + 1)
    n = _check_twisted_instance(field, e, h)
    q = field.q
    hmask = subspace_mask(h)
    a_subs = []
    a_masks = []
    for w in enumerate_k_subspaces(full_space(field, n), e + 1):
        m = subspace_mask(w)
        if m & ~hmask:
            a_subs.append(w)
            a_masks.append(m)
    b_subs = list(enumerate_k_subspaces(h, e - 1))
    b_masks = [subspace_mask(w) for w in b_subs]

    na, nb = len(a_subs), len(b_subs)
    nv = na + nb
    adj = [0] * nv
    t_aa = q ** e
    t_bb = q ** (e - 2)
    for i in range(na):
        mi = a_masks[i]
        for j in range(i + 1, na):
            if (mi & a_masks[j]).bit_count() == t_aa:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        for j in range(nb):
            if b_masks[j] & ~mi == 0:
                adj[i] |= 1 << (na + j)
                adj[na + j] |= 1 << i
    for i in range(nb):
        mi = b_masks[i]
        for j in range(i + 1, nb):
            if (mi & b_masks[j]).bit_count() == t_bb:
                adj[na + i] |= 1 << (na + j)
                adj[na + j] |= 1 << (na + i)

    labels = [("A", w) for w in a_subs] + [("B", w) for w in b_subs]
    return Graph(labels, adj)


def pg_design(field: Field, e: int) -> Design:
    """The geometric design: points of PG(2e,q), blocks the (e+1)-subspaces."""
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    n = 2 * e + 1
    points, index = _point_order(field, n)
    blocks = []
    labels = []
    for u in enumerate_k_subspaces(full_space(field, n), e + 1):
        blocks.append(sorted(index[p.rep] for p in projective_points(u)))
        labels.append(("PG", u))
    return Design(points, blocks, labels)


def f_map(w: Subspace, h: Subspace, s: Polarity) -> frozenset:
    """The block of point indices assigned to a twisted-graph vertex.

    For w in the A family: points of s(w ∩ h) together with the points
    of w outside h.  For w in the B family: points of s(w).  Either way
    the block has (q^(e+1)-1)/(q-1) points.
    """
    if h.dim % 2 != 0 or h.ambient_dim != h.dim + 1:
        raise ValueError("h must be a hyperplane of odd-dimensional ambient space")
    if s.h != h:
        raise ValueError("polarity is not a polarity of h")
    e = h.dim // 2
    index = point_index_map(w.field, h.ambient_dim)
    if w.dim == e + 1 and not h.contains(w):
        core = s.apply(w.intersect(h))
        pts = projective_points(core) + affine_points(w, h)
    elif w.dim == e - 1 and h.contains(w):
        pts = projective_points(s.apply(w))
    else:
        raise ValueError("w is in neither vertex family of the twisted graph")
    return frozenset(index[p.rep] for p in pts)


def jt_design(field: Field, e: int, h: Subspace = None, s: Polarity = None) -> Design:
    """The Jungnickel-Tonchev design: f-images of the A family, then the
    point sets of the (e+1)-subspaces of h."""
    if h is None:
        h = coordinate_hyperplane(field, 2 * e + 1)
    n = _check_twisted_instance(field, e, h)
    if s is None:
        s = polarity_new(field, h)
    if s.h != h:
        raise ValueError("polarity is not a polarity of h")
    points, index = _point_order(field, n)
    hmask = subspace_mask(h)
    blocks = []
    labels = []
    for w in enumerate_k_subspaces(full_space(field, n), e + 1):
        if subspace_mask(w) & ~hmask:
            blocks.append(sorted(f_map(w, h, s)))
            labels.append(("A", w))
    for u in enumerate_k_subspaces(h, e + 1):
        blocks.append(sorted(index[p.rep] for p in projective_points(u)))
        labels.append(("B", u))
    return Design(points, blocks, labels)


def block_graph(d: Design, threshold: int) -> Graph:
    """Blocks as vertices, adjacent when the intersection size hits threshold."""
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    masks = d.block_masks()
    nb = len(masks)
    adj = [0] * nb
    for i in range(nb):
        mi = masks[i]
        for j in range(i + 1, nb):
            if (mi & masks[j]).bit_count() == threshold:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(d.block_labels, adj)


def intersection_spectrum(d: Design) -> Counter:
    """Multiset of |B1 ∩ B2| over unordered distinct block pairs."""
    masks = d.block_masks()
    out = Counter()
    nb = len(masks)
    for i in range(nb):
        mi = masks[i]
        for j in range(i + 1, nb):
            out[(mi & masks[j]).bit_count()] += 1
    return out
