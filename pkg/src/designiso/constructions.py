"""Deterministic constructions of designs used as test corpora.

Random point permutations use SplitMix64 followed by a Fisher–Yates shuffle
(see :func:`random_permutation`) so that scrambled corpora are reproducible
bit for bit from the seed alone.
"""
from __future__ import annotations

import itertools
import math

from .core import Design, Params

MASK64 = (1 << 64) - 1
COMPLETE_LIMIT = 10**7


def fano() -> Design:
    blocks = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)]
    return Design(Params(2, 7, 3, 1), sorted(blocks))


def boolean_sqs(d: int) -> Design:
    """SQS(2^d): points are vectors of GF(2)^d, blocks the 4-sets summing to zero."""
    if d < 3:
        raise ValueError(f"boolean SQS needs d >= 3, got {d}")
    v = 1 << d
    blocks = []
    for a, b, c in itertools.combinations(range(v), 3):
        x = a ^ b ^ c
        if x > c:
            blocks.append((a, b, c, x))
    return Design(Params(3, v, 4, 1), blocks)


def _bose(n: int) -> list[tuple[int, ...]]:
    # v = 6n+3 on Z_{2n+1} x Z_3 with the idempotent commutative quasigroup x∘y = (x+y)/2
    m = 2 * n + 1
    half = n + 1
    pt = lambda x, i: x + m * (i % 3)
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(m)]
    for x, y in itertools.combinations(range(m), 2):
        z = (x + y) * half % m
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return blocks


def _skolem(n: int) -> list[tuple[int, ...]]:
    # v = 6n+1 on Z_{2n} x Z_3 plus infinity, half-idempotent quasigroup on Z_{2n}
    m = 2 * n
    inf = 3 * m
    pt = lambda x, i: x + m * (i % 3)

    def op(x, y):
        s = (x + y) % m
        return s // 2 if s % 2 == 0 else n + s // 2

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for x in range(n):
        for i in range(3):
            blocks.append((inf, pt(x + n, i), pt(x, i + 1)))
    for x, y in itertools.combinations(range(m), 2):
        z = op(x, y)
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return blocks


def _projective(v: int) -> list[tuple[int, ...]]:
    # points and lines of PG(d, 2): nonzero vectors x, lines {x, y, x^y}; point x has label x-1
    blocks = []
    for x, y in itertools.combinations(range(1, v + 1), 2):
        z = x ^ y
        if z > y:
            blocks.append((x - 1, y - 1, z - 1))
    return blocks


def sts(v: int) -> Design:
    """A Steiner triple system of order v.

    PG(d,2) when v = 2^(d+1) - 1, otherwise Bose (v = 3 mod 6) or Skolem
    (v = 1 mod 6).  Bose systems of order 15 contain no Pasch configuration,
    the projective one does.
    """
    if v < 7 or v % 6 not in (1, 3):
        raise ValueError(f"no STS({v}): need v >= 7 and v = 1 or 3 (mod 6)")
    if (v + 1) & v == 0:
        blocks = _projective(v)
    elif v % 6 == 3:
        blocks = _bose((v - 3) // 6)
    else:
        blocks = _skolem((v - 1) // 6)
    return Design(Params(2, v, 3, 1), sorted(tuple(sorted(B)) for B in blocks))


def complete_design(v: int, k: int, t: int) -> Design:
    if not 1 <= t <= k <= v:
        raise ValueError(f"need 1 <= t <= k <= v, got t={t} k={k} v={v}")
    n = math.comb(v, k)
    if n > COMPLETE_LIMIT:
        raise ValueError(f"complete design would have C({v},{k}) = {n} blocks (limit {COMPLETE_LIMIT})")
    return Design(Params(t, v, k, math.comb(v - t, k - t)), itertools.combinations(range(v), k))


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014), the pinned generator for scrambling."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection of the biased tail."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def random_permutation(n: int, seed: int) -> list[int]:
    """Fisher–Yates: for i = n-1 down to 1 swap p[i] with p[below(i+1)]."""
    rng = SplitMix64(seed)
    p = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        p[i], p[j] = p[j], p[i]
    return p


def scramble(design: Design, seed: int) -> Design:
    """Relabel points by ``random_permutation(v, seed)``; blocks come back sorted."""
    return design.relabel(random_permutation(design.v, seed))


def _pasch_configurations(design: Design):
    blocks = design.blocks
    index = {}
    for i, B in enumerate(blocks):
        for pair in itertools.combinations(B, 2):
            index[pair] = i

    def through(x, y):
        return index.get((x, y) if x < y else (y, x))

    for i, j in itertools.combinations(range(len(blocks)), 2):
        common = set(blocks[i]) & set(blocks[j])
        if len(common) != 1:
            continue
        a = common.pop()
        b, c = (x for x in blocks[i] if x != a)
        d, e = (x for x in blocks[j] if x != a)
        for d_, e_ in ((d, e), (e, d)):
            l = through(b, d_)
            m = through(c, e_)
            if l is None or m is None:
                continue
            f = [x for x in blocks[l] if x not in (b, d_)][0]
            if f in (a, c, d, e) or f not in blocks[m]:
                continue
            yield tuple(sorted((i, j, l, m)))


def pasch_switch(design: Design) -> Design | None:
    """Swap the lexicographically first Pasch configuration for its complementary trade."""
    p = design.params
    if (p.t, p.k, p.lam) != (2, 3, 1):
        raise ValueError(f"pasch_switch needs a 2-(v,3,1) design, got {p}")
    found = min(_pasch_configurations(design), default=None)
    if found is None:
        return None
    quad = [design.blocks[i] for i in found]
    a = (set(quad[0]) & set(quad[1])).pop()
    b, c = (x for x in quad[0] if x != a)
    rest = set(quad[1]) - {a}
    f = (set().union(*quad) - set(quad[0]) - set(quad[1])).pop()
    # name d as the point sharing a block with f and b
    fb = next(B for B in quad[2:] if f in B and b in B)
    d = (set(fb) - {f, b}).pop()
    e = (rest - {d}).pop()
    new = [(a, b, d), (a, c, e), (f, b, c), (f, d, e)]
    blocks = [B for i, B in enumerate(design.blocks) if i not in found]
    blocks += [tuple(sorted(B)) for B in new]
    return Design(p, sorted(blocks))
