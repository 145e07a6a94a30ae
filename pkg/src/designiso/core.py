"""Parameters, exact counting, validation and subdesign closure for t-designs.

Points are the integers ``0..v-1``; a block is a strictly increasing tuple of
points.  All counting is done with Python integers and
:class:`fractions.Fraction`, never floats.
"""
from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

# λ_s cross-checks are exhaustive up to this many s-subsets, sampled above it.
EXHAUSTIVE_LIMIT = 10**6
SAMPLE_SIZE = 2000
SAMPLE_SEED = 20100621


@dataclass(frozen=True)
class Params:
    t: int
    v: int
    k: int
    lam: int

    def __post_init__(self):
        if not (1 <= self.t <= self.k <= self.v):
            raise ValueError(f"need 1 <= t <= k <= v, got t={self.t} k={self.k} v={self.v}")
        if self.lam < 1:
            raise ValueError(f"lambda must be >= 1, got {self.lam}")

    @property
    def nontrivial(self) -> bool:
        return self.t < self.k < self.v

    def __str__(self):
        return f"{self.t}-({self.v},{self.k},{self.lam})"


@dataclass(frozen=True)
class DerivedCounts:
    b: int
    r: int
    lambda_s: tuple[int, ...]


@dataclass(frozen=True)
class Design:
    """A point set ``range(v)`` with a list of k-blocks.

    Each block is normalised to a sorted tuple; the order of the block list is
    kept as given (it is the vertex order of the line graph).  No validity
    checks happen here, use :func:`validate`.
    """

    params: Params
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, params: Params, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "blocks", tuple(tuple(sorted(B)) for B in blocks))

    @property
    def v(self) -> int:
        return self.params.v

    @property
    def b(self) -> int:
        return len(self.blocks)

    def sorted_blocks(self) -> "Design":
        return Design(self.params, sorted(self.blocks))

    def blocks_through(self) -> list[list[int]]:
        """Index of incident block numbers for every point."""
        inc: list[list[int]] = [[] for _ in range(self.v)]
        for i, B in enumerate(self.blocks):
            for x in B:
                if 0 <= x < self.v:
                    inc[x].append(i)
        return inc

    def relabel(self, perm: Sequence[int] | Mapping[int, int]) -> "Design":
        """Image under the point map ``x -> perm[x]``, blocks re-sorted."""
        return Design(self.params, sorted(tuple(sorted(perm[x] for x in B)) for B in self.blocks))

    def induced(self, points: Iterable[int]) -> tuple["Design", list[int]]:
        """Substructure on ``points`` (blocks entirely inside), relabelled to 0..w-1.

        Returns the design and the list mapping new labels back to old points.
        The λ of the result is copied from the parent.
        """
        pts = sorted(set(points))
        index = {x: i for i, x in enumerate(pts)}
        blocks = [tuple(index[x] for x in B) for B in self.blocks if all(x in index for x in B)]
        p = self.params
        sub = Design(Params(p.t, len(pts), p.k, p.lam), sorted(blocks))
        return sub, pts


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str
    witness: object = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def rules(self) -> set[str]:
        return {x.rule for x in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(f"{x.rule}: {x.detail}" for x in self.violations)


@dataclass(frozen=True)
class ClosureChain:
    generators: tuple[int, ...]
    fixpoints: tuple[frozenset[int], ...] = field(default=())


# -- counting ---------------------------------------------------------------

def lambda_s(params: Params, s: int) -> Fraction:
    """Number of blocks through a fixed s-set, λ·C(v-s, t-s)/C(k-s, t-s)."""
    t, v, k, lam = params.t, params.v, params.k, params.lam
    if not 0 <= s <= t:
        raise ValueError(f"s must lie in [0, {t}], got {s}")
    return Fraction(lam * math.comb(v - s, t - s), math.comb(k - s, t - s))


def derived_counts(params: Params) -> DerivedCounts:
    table = [lambda_s(params, s) for s in range(params.t + 1)]
    bad = [s for s, x in enumerate(table) if x.denominator != 1]
    if bad:
        raise ValueError(f"parameters {params} are inadmissible: lambda_s not integral for s={bad}")
    ls = tuple(int(x) for x in table)
    b, r = ls[0], ls[1]
    t, v, k, lam = params.t, params.v, params.k, params.lam
    assert b * k == v * r
    assert math.comb(v, t) * lam == b * math.comb(k, t)
    if t >= 2:
        assert r * (k - 1) == ls[2] * (v - 1)
    return DerivedCounts(b=b, r=r, lambda_s=ls)


def check_admissibility(params: Params) -> ValidationReport:
    t, v, k, lam = params.t, params.v, params.k, params.lam
    out = []
    for s in range(1, t + 1):
        num = lam * math.comb(v - s, t - s)
        den = math.comb(k - s, t - s)
        if num % den:
            out.append(Violation("divisibility",
                                 f"lambda*C({v - s},{t - s}) = {num} is not divisible by C({k - s},{t - s}) = {den}",
                                 s))
    if (t, k, lam) == (3, 4, 1) and v % 6 not in (2, 4):
        out.append(Violation("hanani", f"an SQS({v}) needs v = 2 or 4 (mod 6), got {v % 6}", v))
    return ValidationReport(tuple(out))


def fisher_lower_bound(params: Params) -> int | None:
    """Ray-Chaudhuri–Wilson lower bound on b, or None outside its range."""
    t, v, k = params.t, params.v, params.k
    s = t // 2
    if t % 2 == 0:
        return math.comb(v, s) if v >= k + s else None
    return 2 * math.comb(v - 1, s) if v - 1 >= k + s else None


# -- validation -------------------------------------------------------------

def _count_s_subsets(design: Design, s: int) -> Counter:
    c: Counter = Counter()
    for B in design.blocks:
        c.update(itertools.combinations(B, s))
    return c


def _subset_sample(v: int, s: int, rng: random.Random) -> Iterable[tuple[int, ...]]:
    for _ in range(SAMPLE_SIZE):
        yield tuple(sorted(rng.sample(range(v), s)))


def validate(design: Design) -> ValidationReport:
    p = design.params
    t, v, k, lam = p.t, p.v, p.k, p.lam
    out: list[Violation] = []

    seen: dict[tuple[int, ...], int] = {}
    for i, B in enumerate(design.blocks):
        if len(B) != k:
            out.append(Violation("block-size", f"block {i} has {len(B)} points, expected {k}", B))
        if len(set(B)) != len(B):
            out.append(Violation("repeated-point", f"block {i} repeats a point", B))
        bad = [x for x in B if not 0 <= x < v]
        if bad:
            out.append(Violation("point-range", f"block {i} has points outside [0, {v})", tuple(bad)))
        if B in seen:
            out.append(Violation("duplicate-block", f"blocks {seen[B]} and {i} are equal", B))
        else:
            seen[B] = i
    if out:
        return ValidationReport(tuple(out))

    cover = _count_s_subsets(design, t)
    if len(cover) != math.comb(v, t) or any(c != lam for c in cover.values()):
        for T in itertools.combinations(range(v), t):
            c = cover.get(T, 0)
            if c != lam:
                out.append(Violation("t-coverage", f"{t}-subset {T} lies in {c} blocks, expected {lam}", T))
                if len(out) >= 20:
                    break
        return ValidationReport(tuple(out))

    # redundant cross-check of the λ_s identities for s < t
    rng = random.Random(SAMPLE_SEED)
    for s in range(t):
        want = lambda_s(p, s)
        if s == 0:
            if design.b != want:
                out.append(Violation("s-coverage", f"b = {design.b}, expected {want}", 0))
            continue
        cover = _count_s_subsets(design, s)
        if math.comb(v, s) <= EXHAUSTIVE_LIMIT:
            subsets: Iterable = itertools.combinations(range(v), s)
        else:
            subsets = _subset_sample(v, s, rng)
        for S in subsets:
            if cover.get(S, 0) != want:
                out.append(Violation("s-coverage",
                                     f"{s}-subset {S} lies in {cover.get(S, 0)} blocks, expected {want}", S))
                break
    return ValidationReport(tuple(out))


# -- closure and generating sequences ---------------------------------------

def closure(design: Design, seed: Iterable[int]) -> frozenset[int]:
    """Least superset of ``seed`` absorbing every block that meets it in >= t points."""
    t = design.params.t
    Y = set(seed)
    pending = [B for B in design.blocks]
    changed = True
    while changed:
        changed = False
        rest = []
        for B in pending:
            hit = sum(1 for x in B if x in Y)
            if hit == len(B):
                continue
            if hit >= t:
                Y.update(B)
                changed = True
            else:
                rest.append(B)
        pending = rest
    return frozenset(Y)


def generating_sequence(design: Design, first: int) -> ClosureChain:
    v = design.v
    if not 0 <= first < v:
        raise ValueError(f"point {first} not in [0, {v})")
    gens = [first]
    Y = closure(design, gens)
    chain = [Y]
    while len(Y) < v:
        u = min(x for x in range(v) if x not in Y)
        gens.append(u)
        Y = closure(design, Y | {u})
        chain.append(Y)
    return ClosureChain(tuple(gens), tuple(chain))


def generator_bound(v: int) -> int:
    """floor(1 + log2 v), computed exactly."""
    return v.bit_length()


def kreher_rees_admissible(v: int, w: int, t: int, k: int) -> bool:
    """False when a proper t-(w,k,λ) subdesign of a t-(v,k,λ) design is ruled out."""
    if not (w < v and t >= 2):
        raise ValueError("need w < v and t >= 2")
    ok = v >= 2 * w if t % 2 else v >= 2 * w + 1
    if t == 2:
        ok = ok and v >= (k - 1) * w + 1
    return ok


def is_subdesign(sub: Design, whole: Design, embedding: Mapping[int, int] | Sequence[int]) -> bool:
    if sub.params.t != whole.params.t or sub.params.k != whole.params.k or sub.params.lam != whole.params.lam:
        return False
    if not validate(sub).ok:
        return False
    image = [embedding[x] for x in range(sub.v)]
    if len(set(image)) != sub.v or not all(0 <= y < whole.v for y in image):
        return False
    blocks = set(whole.blocks)
    return all(tuple(sorted(image[x] for x in B)) in blocks for B in sub.blocks)
