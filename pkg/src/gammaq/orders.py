"""Reduced words of the longest element, convex orders and minimal pairs."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .arquiver import ARQuiver
from .errors import BadRoot, NotReducedW0, OutOfRange
from .rootsys import DynkinQuiverA, Segment, SignedRoot, positive_roots, weyl_apply


@dataclass(frozen=True)
class ReducedWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        for i in self.letters:
            if not 1 <= i <= self.n:
                raise OutOfRange(f"letter {i} not in 1..{self.n}")

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def parse(cls, n: int, text: str) -> "ReducedWord":
        try:
            letters = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
        except ValueError as exc:
            raise OutOfRange(f"cannot parse word {text!r}") from exc
        return cls(n, letters)

    def roots(self) -> list[SignedRoot]:
        """``beta_z = s_{i1} ... s_{i(z-1)} alpha_{iz}`` for each position z."""
        return [weyl_apply(self.letters[:z], Segment(i, i), self.n) for z, i in enumerate(self.letters)]


def reading(ar: ARQuiver, kind: str) -> ReducedWord:
    """The L- or U-reading of the vertices of ``ar``; emits the row of each vertex."""
    if kind == "L":
        key = lambda c: (c.i - 1 - c.p, -c.i)
    elif kind == "U":
        key = lambda c: (-(c.i - 1 + c.p), c.i)
    else:
        raise ValueError("reading kind must be 'L' or 'U'")
    return ReducedWord(ar.n, tuple(c.i for c in sorted(ar.vertices, key=key)))


@dataclass(frozen=True)
class ConvexTotalOrder:
    """A total order on the positive roots of A_n, smallest first.

    Convexity is not enforced here; use :func:`is_convex`.
    """

    n: int
    sequence: tuple[Segment, ...]

    def __post_init__(self) -> None:
        if sorted(self.sequence) != positive_roots(self.n):
            raise BadRoot("sequence must list every positive root exactly once")

    @cached_property
    def rank(self) -> dict[Segment, int]:
        return {r: k for k, r in enumerate(self.sequence)}

    def lt(self, x: Segment, y: Segment) -> bool:
        return self.rank[x] < self.rank[y]

    def __str__(self) -> str:
        return " < ".join(map(str, self.sequence))


def order_from_word(w: ReducedWord) -> ConvexTotalOrder:
    n = w.n
    big_n = n * (n + 1) // 2
    if len(w) != big_n:
        raise NotReducedW0(f"a reduced word of w0 in A_{n} has {big_n} letters, got {len(w)}")
    seq = []
    for z, r in enumerate(w.roots(), 1):
        if not r.positive:
            raise NotReducedW0(f"beta_{z} = {r} is negative")
        seq.append(r.segment)
    if len(set(seq)) != big_n:
        raise NotReducedW0("word repeats a root")
    return ConvexTotalOrder(n, tuple(seq))


def summing_triples(n: int) -> Iterable[tuple[Segment, Segment, Segment]]:
    for g in positive_roots(n):
        for x, y in g.splits():
            yield x, y, g


def is_convex(o: ConvexTotalOrder) -> bool:
    rk = o.rank
    for x, y, g in summing_triples(o.n):
        lo, hi = sorted((rk[x], rk[y]))
        if not lo < rk[g] < hi:
            return False
    return True


def is_adapted(w: ReducedWord, q: DynkinQuiverA) -> bool:
    """Is each letter a source of the quiver after reflecting at the previous letters?"""
    if w.n != q.n:
        return False
    cur = q
    for i in w.letters:
        if not cur.is_source(i):
            return False
        cur = cur.reflect(i)
    return True


def partial_leq(ar: ARQuiver, x: Segment, y: Segment) -> bool:
    """``x <=_Q y``: there is a path from ``y`` to ``x``."""
    return ar.has_path(y, x)


def compatible(o: ConvexTotalOrder, ar: ARQuiver) -> bool:
    """Does ``x <_Q y`` imply ``x < y`` in ``o``?"""
    rk = o.rank
    for x in o.sequence:
        for y in o.sequence:
            if x != y and partial_leq(ar, x, y) and rk[x] > rk[y]:
                return False
    return True


def minimal_pairs(o: ConvexTotalOrder, gamma: Segment) -> list[tuple[Segment, Segment]]:
    """Pairs ``(x, y)`` with ``x < y`` and ``x + y = gamma`` admitting no
    ``(x', y')`` with ``x < x' < gamma < y' < y``.

    Sweeps the pairs by decreasing rank of the smaller member, keeping the
    smallest larger member seen so far.
    """
    rk = o.rank
    gamma.check_rank(o.n)
    g = rk[gamma]
    pairs = [tuple(sorted(s, key=rk.__getitem__)) for s in gamma.splits()]
    pairs.sort(key=lambda pr: -rk[pr[0]])
    out = []
    best = None  # least rank of a larger member among pairs straddling gamma
    for x, y in pairs:
        if best is None or rk[y] < best:
            out.append((x, y))
        if rk[x] < g < rk[y]:
            best = rk[y] if best is None else min(best, rk[y])
    out.sort(key=lambda pr: rk[pr[0]])
    return out


def foata_normal_form(letters: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Cartier-Foata normal form; letters commute when they differ by more than 1."""
    height: dict[int, int] = {}
    layers: list[list[int]] = []
    for a in letters:
        h = max(height.get(b, 0) for b in (a - 1, a, a + 1)) + 1
        height[a] = h
        if h > len(layers):
            layers.append([])
        layers[h - 1].append(a)
    return tuple(tuple(sorted(layer)) for layer in layers)


def commutation_equivalent(w1: ReducedWord, w2: ReducedWord) -> bool:
    return w1.n == w2.n and foata_normal_form(w1.letters) == foata_normal_form(w2.letters)
