"""Canonical forms and isomorphism testing for t-designs and their line graphs.

The canonical form is the lexicographically least relabelled block list over a
search tree whose first levels individualize a generating sequence
``u_1, u_2, ...`` (each ``u_j`` ranging over all points outside the closure of
the earlier ones) and whose remaining levels break the still non-singleton
cells of the refined coloring.  Because generating sequences have at most
``floor(1 + log2 v)`` members, at most ``v ** floor(1 + log2 v)`` sequences
exist.

Two kinds of pruning keep the search small without changing its result:

* the encoding of a node under "every point gets the start position of its
  cell" is a lower bound for every leaf below it, so a node whose bound is not
  below the best leaf is cut;
* two leaves with equal encodings yield an automorphism; children in the same
  orbit of the automorphisms fixing the current path are explored once.

Either way the returned leaf is the first leaf with minimum encoding in plain
depth-first order (smallest candidate first), so the relabeling itself is also
deterministic.
"""
from __future__ import annotations

import hashlib
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .core import Design, closure, generator_bound, validate
from .linegraph import Graph
from .reconstruct import ReconstructionResult, reconstruct


class InvalidDesignError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Ordered partition of the points."""

    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def unit(cls, v: int) -> "Coloring":
        return cls((tuple(range(v)),))

    def cell_index(self) -> dict[int, int]:
        return {x: i for i, cell in enumerate(self.cells) for x in cell}

    def positions(self) -> dict[int, int]:
        """Start position of each point's cell."""
        pos, start = {}, 0
        for cell in self.cells:
            for x in cell:
                pos[x] = start
            start += len(cell)
        return pos

    @property
    def discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def individualize(self, x: int) -> "Coloring":
        out = []
        for cell in self.cells:
            if x in cell and len(cell) > 1:
                out.append((x,))
                out.append(tuple(y for y in cell if y != x))
            else:
                out.append(cell)
        return Coloring(tuple(out))


@dataclass
class SearchStats:
    sequences: int = 0
    leaves: int = 0
    nodes: int = 0
    pruned_bound: int = 0
    pruned_orbit: int = 0
    automorphisms: int = 0
    incell_branchings: int = 0

    def merge(self, other: "SearchStats"):
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))


@dataclass(frozen=True)
class CanonicalForm:
    relabeling: tuple[int, ...]
    canonical_blocks: tuple[tuple[int, ...], ...]
    digest: str
    params: tuple[int, int, int, int]
    stats: SearchStats = field(compare=False, hash=False, repr=False, default_factory=SearchStats)

    def encoding(self) -> bytes:
        return encode(self.params, self.canonical_blocks)

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.digest == other.digest

    def __hash__(self):
        return hash(self.digest)


def encode(params: tuple[int, int, int, int], blocks: Sequence[Sequence[int]]) -> bytes:
    """Header ``t v k lambda b`` then every point, all as big-endian uint32."""
    t, v, k, lam = params
    head = struct.pack(">5I", t, v, k, lam, len(blocks))
    return head + b"".join(struct.pack(f">{len(B)}I", *B) for B in blocks)


# -- refinement -------------------------------------------------------------

def _refine_cells(blocks, inc, cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        idx = {}
        for i, cell in enumerate(cells):
            for x in cell:
                idx[x] = i
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for x in cell:
                sig = tuple(sorted(tuple(sorted(idx[y] for y in blocks[b] if y != x)) for b in inc[x]))
                groups.setdefault(sig, []).append(x)
            if len(groups) > 1:
                split = True
                for sig in sorted(groups):
                    out.append(tuple(groups[sig]))
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def refine(design: Design, coloring: Coloring) -> Coloring:
    """Coarsest equitable refinement of ``coloring`` under block signatures.

    A point's signature is the sorted list, over its blocks, of the sorted cell
    indices of the other points of the block.  Cells split into sub-cells
    ordered by signature until nothing splits.
    """
    inc = design.blocks_through()
    return Coloring(tuple(_refine_cells(design.blocks, inc, list(coloring.cells))))


# -- search -----------------------------------------------------------------

def _orbit_roots(perms: list[list[int]], v: int) -> list[int]:
    parent = list(range(v))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in perms:
        for x in range(v):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(v)]


class _Search:
    def __init__(self, design: Design):
        self.design = design
        self.v = design.v
        self.blocks = design.blocks
        self.inc = design.blocks_through()
        self.full = frozenset(range(self.v))
        self.best: list[tuple[int, ...]] | None = None
        self.best_pos: dict[int, int] | None = None
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []
        self.stats = SearchStats()

    def code(self, pos: dict[int, int]) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(pos[x] for x in B)) for B in self.blocks)

    def refine(self, cells):
        return _refine_cells(self.blocks, self.inc, cells)

    def run(self, roots: Sequence[int] | None = None):
        cells = self.refine([tuple(range(self.v))])
        self.node(cells, [], frozenset(), roots)

    def leaf(self, cells, pos):
        self.stats.leaves += 1
        code = self.code(pos)
        if self.best is None or code < self.best:
            self.best, self.best_pos = code, pos
            self.best_order = [c[0] for c in cells]
        elif code == self.best:
            g = [self.best_order[pos[x]] for x in range(self.v)]
            if any(g[x] != x for x in range(self.v)) and g not in self.autos:
                self.autos.append(g)
                self.stats.automorphisms += 1

    def node(self, cells, path, closed, roots=None):
        self.stats.nodes += 1
        pos = {}
        start = 0
        for cell in cells:
            for x in cell:
                pos[x] = start
            start += len(cell)
        if len(cells) == self.v:
            # every completion of the sequence below gives this same labeling
            if closed != self.full:
                self.stats.sequences += 1
            self.leaf(cells, pos)
            return
        if self.best is not None and self.code(pos) >= self.best:
            self.stats.pruned_bound += 1
            return

        if closed == self.full:
            target = next(c for c in cells if len(c) > 1)
            candidates = sorted(target)
            self.stats.incell_branchings += 1
        else:
            candidates = [x for x in range(self.v) if x not in closed]
            if roots is not None:
                candidates = [x for x in candidates if x in roots]

        explored: list[int] = []
        seen_autos = -1
        orbit = None
        for x in candidates:
            if explored:
                if len(self.autos) != seen_autos:
                    seen_autos = len(self.autos)
                    fixing = [g for g in self.autos if all(g[p] == p for p in path)]
                    orbit = _orbit_roots(fixing, self.v) if fixing else None
                if orbit is not None and any(orbit[x] == orbit[e] for e in explored):
                    self.stats.pruned_orbit += 1
                    continue
            explored.append(x)
            child = self.refine(_individualize(cells, x))
            if closed == self.full:
                child_closed = closed
            else:
                child_closed = closure(self.design, closed | {x})
                if child_closed == self.full:
                    self.stats.sequences += 1
            self.node(child, path + [x], child_closed)


def _individualize(cells, x):
    out = []
    for cell in cells:
        if x in cell and len(cell) > 1:
            out.append((x,))
            out.append(tuple(y for y in cell if y != x))
        else:
            out.append(cell)
    return out


def _run_subtree(design: Design, root: int):
    s = _Search(design)
    s.run(roots=[root])
    return s.best, s.best_pos, s.stats


def canonical_form(design: Design, *, threads: int = 1, check: bool = True) -> CanonicalForm:
    """Canonical relabeling, block list and SHA-256 digest of a valid design.

    ``stats.sequences`` counts the generating sequences explored: prefixes
    whose closure reached the whole point set, or whose refined coloring was
    already discrete (all completions of those give the same labeling).  With ``threads > 1`` the first-level choices run in
    separate processes (without sharing automorphisms across them); the result
    is identical.
    """
    if check:
        report = validate(design)
        if not report.ok:
            raise InvalidDesignError(f"cannot canonize an invalid design:\n{report}")
    if threads > 1 and design.v > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_run_subtree, [design] * design.v, range(design.v)))
        stats = SearchStats()
        best = best_pos = None
        for code, pos, st in parts:
            stats.merge(st)
            if best is None or code < best:
                best, best_pos = code, pos
    else:
        s = _Search(design)
        s.run()
        best, best_pos, stats = s.best, s.best_pos, s.stats
    p = design.params
    params = (p.t, p.v, p.k, p.lam)
    blocks = tuple(best)
    digest = hashlib.sha256(encode(params, blocks)).hexdigest()
    relabeling = tuple(best_pos[x] for x in range(design.v))
    return CanonicalForm(relabeling, blocks, digest, params, stats)


def sequence_bound(v: int) -> int:
    return v ** generator_bound(v)


# -- isomorphism ------------------------------------------------------------

def _maps_blocks(d1: Design, d2: Design, phi: Sequence[int]) -> bool:
    if sorted(phi) != list(range(d2.v)) or d1.b != d2.b:
        return False
    return sorted(tuple(sorted(phi[x] for x in B)) for B in d1.blocks) == sorted(d2.blocks)


def are_isomorphic(d1: Design, d2: Design, **kw) -> list[int] | None:
    """A point bijection taking the blocks of d1 onto those of d2, or None."""
    if d1.params != d2.params or d1.b != d2.b:
        return None
    c1 = canonical_form(d1, **kw)
    c2 = canonical_form(d2, **kw)
    if c1.digest != c2.digest:
        return None
    inverse2 = [0] * d2.v
    for x, y in enumerate(c2.relabeling):
        inverse2[y] = x
    phi = [inverse2[c1.relabeling[x]] for x in range(d1.v)]
    if not _maps_blocks(d1, d2, phi):
        raise AssertionError("canonical forms agree but the induced map is not an isomorphism")
    return phi


def brute_force_iso(d1: Design, d2: Design) -> list[int] | None:
    """Backtracking isomorphism search, independent of the canonical-form engine.

    Points of d1 are mapped one at a time.  After each step, for every block
    through the new point (in either design) its already-mapped part S must
    lie in as many blocks of the one design as its image does in the other.
    """
    if d1.params != d2.params or d1.b != d2.b:
        return None
    v = d1.v

    def subset_counts(d):
        counts: dict[tuple[int, ...], int] = {}
        for B in d.blocks:
            for mask in range(1, 1 << len(B)):
                S = tuple(x for i, x in enumerate(B) if mask >> i & 1)
                counts[S] = counts.get(S, 0) + 1
        return counts

    cnt1, cnt2 = subset_counts(d1), subset_counts(d2)
    inc1, inc2 = d1.blocks_through(), d2.blocks_through()
    deg1 = sorted(len(x) for x in inc1)
    if deg1 != sorted(len(x) for x in inc2):
        return None

    # map points that share many blocks with already ordered ones first
    order = [0]
    placed = {0}
    while len(order) < v:
        def score(y):
            return (max((sum(1 for z in d1.blocks[b] if z in placed) for b in inc1[y]), default=0), -y)
        y = max((y for y in range(v) if y not in placed), key=score)
        order.append(y)
        placed.add(y)

    phi: dict[int, int] = {}
    inv: dict[int, int] = {}

    def consistent(x, y) -> bool:
        for b in inc1[x]:
            S = tuple(z for z in d1.blocks[b] if z in phi)
            img = tuple(sorted(phi[z] for z in S))
            if cnt1.get(S, 0) != cnt2.get(img, 0):
                return False
        for b in inc2[y]:
            S = tuple(z for z in d2.blocks[b] if z in inv)
            pre = tuple(sorted(inv[z] for z in S))
            if cnt2.get(S, 0) != cnt1.get(pre, 0):
                return False
        return True

    def extend(i) -> bool:
        if i == v:
            return True
        x = order[i]
        for y in range(v):
            if y in inv or len(inc1[x]) != len(inc2[y]):
                continue
            phi[x], inv[y] = y, x
            if consistent(x, y) and extend(i + 1):
                return True
            del phi[x], inv[y]
        return False

    if not extend(0):
        return None
    out = [phi[x] for x in range(v)]
    assert _maps_blocks(d1, d2, out)
    return out


@dataclass(frozen=True)
class GraphIsoResult:
    isomorphic: bool
    first: ReconstructionResult
    second: ReconstructionResult
    point_map: tuple[int, ...] | None = None
    vertex_map: tuple[int, ...] | None = None


def line_graph_isomorphic(g1: Graph, g2: Graph, t: int, k: int, lam: int, **kw) -> GraphIsoResult:
    """Decide isomorphism of two line graphs by reconstructing and canonizing their designs.

    On success the vertex map sends vertex i of g1 (block i of the first
    reconstruction) to the vertex of g2 holding the image block; it is checked
    edge by edge.
    """
    r1 = reconstruct(g1, t, k, lam)
    r2 = reconstruct(g2, t, k, lam)
    phi = are_isomorphic(r1.design, r2.design, **kw)
    if phi is None:
        return GraphIsoResult(False, r1, r2)
    where = {B: i for i, B in enumerate(r2.design.blocks)}
    vmap = [where[tuple(sorted(phi[x] for x in B))] for B in r1.design.blocks]
    if sorted(vmap) != list(range(g2.n)):
        raise AssertionError("induced vertex map is not a bijection")
    for i in range(g1.n):
        image = 0
        for j in range(g1.n):
            if g1.adj[i] >> j & 1:
                image |= 1 << vmap[j]
        if image != g2.adj[vmap[i]]:
            raise AssertionError(f"vertex map does not preserve the neighbourhood of {i}")
    return GraphIsoResult(True, r1, r2, tuple(phi), tuple(vmap))
