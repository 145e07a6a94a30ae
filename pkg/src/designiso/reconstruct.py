"""Recover a t-design from its line graph through its point-cliques.

The blocks through a point form a clique of size r in the line graph.  When
b > k^2(k-1) these are the only maximum cliques, so each one is read back as
a point.  The output is always certified: the recovered design is validated
and its line graph must equal the input under the identity vertex map.
"""
from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass, field

from .core import Design, Params, ValidationReport, derived_counts, validate
from .linegraph import Graph, _bits, line_graph

log = logging.getLogger(__name__)


class ReconstructionError(ValueError):
    """The graph is not the line graph of a design with the given parameters."""


class ReconstructionRefused(ReconstructionError):
    """Input is below the b > k^2(k-1) threshold."""


class CliqueCountError(ReconstructionError):
    def __init__(self, msg: str, found: int, expected: int, cliques=()):
        super().__init__(msg)
        self.found = found
        self.expected = expected
        self.cliques = tuple(cliques)


@dataclass(frozen=True)
class Certificate:
    report: ValidationReport
    line_graph_equal: bool
    warnings: tuple[str, ...] = ()
    spielman_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return self.report.ok and self.line_graph_equal


@dataclass(frozen=True)
class ReconstructionResult:
    design: Design
    point_cliques: tuple[frozenset[int], ...]
    certificate: Certificate
    selected: bool = field(default=False)


def solve_v(b: int, t: int, k: int, lam: int) -> int:
    """The v >= k with C(v,t)·λ = b·C(k,t)."""
    if b < 1:
        raise ValueError("b must be positive")
    target = b * math.comb(k, t)
    v = k
    while math.comb(v, t) * lam < target:
        v += 1
    if math.comb(v, t) * lam != target:
        raise ReconstructionError(
            f"no integer v with C(v,{t})*{lam} = {b}*C({k},{t}) = {target}")
    return v


def rands_f(k: int, t: int, s: int) -> int:
    """Upper estimate of the order beyond which s-intersecting families are stars."""
    if not 0 < s < t <= k:
        raise ValueError(f"need 0 < s < t <= k, got k={k} t={t} s={s}")
    if s < t - 1:
        return s + math.comb(k, s) * (k - s + 1) * (k - s)
    return s + (k - s) * math.comb(k, s) ** 2


def threshold(k: int) -> int:
    return k * k * (k - 1)


# -- clique search ----------------------------------------------------------

def _peel(adj: tuple[int, ...], members: int) -> int:
    """Drop the member with most non-neighbours (highest index on ties) until a clique remains."""
    while True:
        size = members.bit_count()
        worst, worst_miss = -1, 0
        for x in _bits(members):
            miss = size - 1 - (adj[x] & members).bit_count()
            if miss >= worst_miss and miss > 0:
                worst, worst_miss = x, miss
        if worst < 0:
            return members
        members &= ~(1 << worst)


def _heuristic_cliques(graph: Graph, r: int, v: int) -> set[int]:
    adj = graph.adj
    found: set[int] = set()
    covered = [0] * graph.n   # union of found cliques containing each vertex
    for i, j in graph.edges():
        if covered[i] >> j & 1:
            continue
        clique = _peel(adj, (adj[i] & adj[j]) | (1 << i) | (1 << j))
        if clique.bit_count() == r and clique not in found:
            found.add(clique)
            for x in _bits(clique):
                covered[x] |= clique
    return found


def _exact_cliques(graph: Graph, r: int) -> set[int]:
    """Maximal cliques of size >= r, Bron–Kerbosch with Tomita pivoting."""
    adj = graph.adj
    out: set[int] = set()

    def expand(R: int, size: int, P: int, X: int):
        if not P and not X:
            if size >= r:
                out.add(R)
            return
        if size + P.bit_count() < r:
            return
        pivot = max(_bits(P | X), key=lambda u: (adj[u] & P).bit_count())
        for u in _bits(P & ~adj[pivot]):
            expand(R | (1 << u), size + 1, P & adj[u], X & adj[u])
            P &= ~(1 << u)
            X |= 1 << u

    expand(0, 0, (1 << graph.n) - 1, 0)
    return out


def point_cliques(graph: Graph, r: int, v: int) -> list[frozenset[int]]:
    """The v maximum cliques of size r, sorted by their vertex lists."""
    if graph.n < 2 or r < 2:
        raise ValueError("need at least 2 vertices and r >= 2")
    cliques = _heuristic_cliques(graph, r, v)
    if len(cliques) != v:
        log.info("heuristic found %d cliques of size %d, expected %d; running exact enumeration",
                 len(cliques), r, v)
        cliques = _exact_cliques(graph, r)
        bigger = [c for c in cliques if c.bit_count() > r]
        if bigger:
            raise CliqueCountError(
                f"found a clique of size {bigger[0].bit_count()} > r = {r}", len(cliques), v)
    out = sorted((frozenset(_bits(c)) for c in cliques), key=sorted)
    if len(out) != v:
        raise CliqueCountError(
            f"found {len(out)} maximum cliques of size {r}, expected {v}", len(out), v, out)
    return out


def _consistent_families(cliques, n: int, v: int, k: int, meet: int):
    """Choose v cliques covering every vertex exactly k times, pairwise sharing <= meet vertices.

    Needed when the point-stars are not the only maximum cliques (v below the
    Rands bound), e.g. the Fano planes inside PG(3,2).
    """
    cands = [sorted(C) for C in cliques]
    sets = [frozenset(C) for C in cands]
    clash = [[j for j in range(len(cands)) if j != i and len(sets[i] & sets[j]) > meet]
             for i in range(len(cands))]
    by_vertex = [[] for _ in range(n)]
    for i, C in enumerate(cands):
        for x in C:
            by_vertex[x].append(i)
    cover = [0] * n
    banned = [0] * len(cands)
    chosen: list[int] = []

    def rec():
        if len(chosen) == v:
            if all(c == k for c in cover):
                yield sorted(chosen)
            return
        best_opts = None
        for x in range(n):
            if cover[x] < k:
                opts = [i for i in by_vertex[x]
                        if not banned[i] and all(cover[y] < k for y in cands[i])]
                if len(opts) < k - cover[x]:
                    return
                if best_opts is None or len(opts) < len(best_opts):
                    best_opts = opts
        if best_opts is None:
            return
        for i in best_opts:
            chosen.append(i)
            for y in cands[i]:
                cover[y] += 1
            for j in clash[i]:
                banned[j] += 1
            banned[i] += 1
            yield from rec()
            # i stays banned for the later siblings
            for j in clash[i]:
                banned[j] -= 1
            for y in cands[i]:
                cover[y] -= 1
            chosen.pop()
        for i in best_opts:
            banned[i] -= 1

    yield from rec()


def _certify(graph: Graph, params: Params, cliques, notes, spielman):
    blocks = [[] for _ in range(graph.n)]
    for p, C in enumerate(cliques):
        for vertex in C:
            blocks[vertex].append(p)
    design = Design(params, blocks)
    report = validate(design)
    equal = report.ok and line_graph(design) == graph
    return design, Certificate(report, equal, tuple(notes), spielman)


def reconstruct(graph: Graph, t: int, k: int, lam: int, *, force: bool = False) -> ReconstructionResult:
    """Rebuild the design whose line graph is ``graph``.

    Points are numbered by the sorted order of their cliques; block i is
    vertex i.  Raises ReconstructionRefused when b <= k^2(k-1) unless
    ``force`` is set.  If the maximum cliques are not exactly the v point-stars,
    a family of v cliques consistent with the parameters is searched for and
    the first one passing the certificate is used.
    """
    b = graph.n
    if b <= threshold(k) and not force:
        raise ReconstructionRefused(
            f"refusing reconstruction: b = {b} <= k^2(k-1) = {threshold(k)}; "
            f"point-cliques are only guaranteed to be the maximum cliques when b > k^2(k-1)")
    v = solve_v(b, t, k, lam)
    params = Params(t, v, k, lam)
    try:
        counts = derived_counts(params)
    except ValueError as exc:
        raise ReconstructionError(str(exc)) from None
    r = counts.r

    notes = []
    if t >= 2 and v < rands_f(k, t, 1):
        notes.append(f"v = {v} < f(k,t,1) = {rands_f(k, t, 1)}: maximum cliques need not all be "
                     f"point-cliques; relying on the certificate")
        warnings.warn(notes[-1], stacklevel=2)
    spielman = math.sqrt(b) - 2 > (k - 1) ** 2 if (t == 2 and lam == 1) else None

    try:
        cliques = point_cliques(graph, r, v)
    except CliqueCountError as exc:
        if exc.found <= v:
            raise
        candidates = exc.cliques
    else:
        design, cert = _certify(graph, params, cliques, notes, spielman)
        if cert.ok:
            return ReconstructionResult(design, tuple(cliques), cert)
        candidates = sorted((frozenset(_bits(c)) for c in _exact_cliques(graph, r)), key=sorted)

    meet = counts.lambda_s[2] if t >= 2 else r
    log.info("selecting %d of %d maximum cliques", v, len(candidates))
    for pick in _consistent_families(candidates, b, v, k, meet):
        cliques = [candidates[i] for i in pick]
        design, cert = _certify(graph, params, cliques, notes, spielman)
        if cert.ok:
            return ReconstructionResult(design, tuple(cliques), cert, selected=True)
    raise ReconstructionError(
        f"no family of {v} maximum cliques yields a {params} design with this line graph")
