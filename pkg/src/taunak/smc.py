"""Semibrick pairs and 2-simple-minded collections.

A semibrick pair ``S_p ⊔ S_n[1]`` over a Nakayama algebra is the same thing as
a two-coloured arc pattern (green arcs for ``S_p``, red for ``S_n``).  The
collections of full rank are exactly the maximal admissible patterns, so
completability and maximality are decided in the arc model while the
defining Hom/Ext conditions are checked at module level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import arcs as am
from .serial import AlgebraSpec, Indec, ext_dim, hom_dim, hom_kind, is_brick, parse_indec


@dataclass(frozen=True)
class SemibrickPair:
    positive: frozenset[Indec]
    negative: frozenset[Indec]

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))

    @classmethod
    def of(cls, positive: Iterable = (), negative: Iterable = ()) -> "SemibrickPair":
        conv = lambda xs: frozenset(x if isinstance(x, Indec) else parse_indec(x) if isinstance(x, str) else Indec(*x)
                                    for x in xs)
        return cls(conv(positive), conv(negative))

    @property
    def rank(self) -> int:
        return len(self.positive) + len(self.negative)

    def pattern(self) -> am.ArcPattern:
        return am.ArcPattern(frozenset(map(am.arc_of, self.positive)), frozenset(map(am.arc_of, self.negative)))

    @classmethod
    def from_pattern(cls, p: am.ArcPattern) -> "SemibrickPair":
        return cls(frozenset(map(am.module_of, p.green)), frozenset(map(am.module_of, p.red)))

    def to_json(self) -> dict:
        return {"positive": [str(x) for x in sorted(self.positive)],
                "negative": [str(x) for x in sorted(self.negative)]}

    @classmethod
    def from_json(cls, obj: dict) -> "SemibrickPair":
        return cls.of(obj.get("positive", []), obj.get("negative", []))

    def __str__(self) -> str:
        items = [str(x) for x in sorted(self.positive)] + [f"{x}[1]" for x in sorted(self.negative)]
        return " ⊔ ".join(items) if items else "0"

    def sort_key(self):
        return (sorted(self.positive), sorted(self.negative))


class SmcError(ValueError):
    pass


def is_semibrick_pair(spec: AlgebraSpec, pair: SemibrickPair) -> tuple[bool, str | None]:
    """Checks bricks, Hom-orthogonality inside each part, and Hom = 0 = Ext from S_p to S_n."""
    for x in pair.positive | pair.negative:
        if not spec.contains(x) or not is_brick(spec, x):
            return False, f"{x} is not a brick"
    for part in (pair.positive, pair.negative):
        for a, b in combinations(sorted(part), 2):
            if hom_dim(spec, a, b) or hom_dim(spec, b, a):
                return False, f"Hom between {a} and {b} is nonzero"
    for a in sorted(pair.positive):
        for b in sorted(pair.negative):
            if hom_dim(spec, a, b):
                return False, f"Hom({a}, {b}) is nonzero"
            if ext_dim(spec, a, b):
                return False, f"Ext({a}, {b}) is nonzero"
    return True, None


def is_mutation_compatible(spec: AlgebraSpec, pair: SemibrickPair) -> tuple[bool, str | None]:
    """Every nonzero map from a negative brick to a positive brick is mono or epi."""
    for s in sorted(pair.positive):
        for t in sorted(pair.negative):
            if hom_kind(spec, t, s) == "proper":
                return False, f"the map {t} -> {s} is neither mono nor epi"
    return True, None


def is_completable(spec: AlgebraSpec, pair: SemibrickPair) -> tuple[bool, object]:
    """Extension search in the arc model; returns the completing pattern or the obstruction."""
    ok, why = is_semibrick_pair(spec, pair)
    if not ok:
        return False, why
    p = pair.pattern()
    admissible, violation = am.is_admissible(spec, p)
    if not admissible:
        cond, c1, c2 = violation
        return False, f"condition ({cond}) fails for {am.module_of(c1.arc)} and {am.module_of(c2.arc)}"
    full = am.extend_to_maximal(spec, p)
    if full is None or len(full) != spec.n:
        raise AssertionError(f"greedy extension of {pair} stalled at {full}")
    return True, full


def completable_bruteforce(spec: AlgebraSpec, pair: SemibrickPair) -> bool:
    """Whether some maximal pattern contains the pair's pattern."""
    p = pair.pattern()
    return any(p.green <= q.green and p.red <= q.red for q in am.enumerate_maximal_patterns(spec))


def is_2smc(spec: AlgebraSpec, pair: SemibrickPair) -> bool:
    by_arcs = is_semibrick_pair(spec, pair)[0] and am.is_maximal(spec, pair.pattern())
    by_rank = (is_semibrick_pair(spec, pair)[0] and is_mutation_compatible(spec, pair)[0]
               and pair.rank == spec.n)
    if by_arcs != by_rank:
        raise AssertionError(f"maximality and rank criteria disagree on {pair}")
    return by_arcs


@lru_cache(maxsize=None)
def all_smcs(spec: AlgebraSpec) -> tuple[SemibrickPair, ...]:
    return tuple(sorted((SemibrickPair.from_pattern(p) for p in am.enumerate_maximal_patterns(spec)),
                        key=SemibrickPair.sort_key))


def _approximation_length(spec: AlgebraSpec, x: Indec, s: Indec) -> int:
    """Filtration length k of the minimal left Filt(s)-approximation of x[-1] (0 if Ext(x, s) = 0).

    The approximation is the universal extension of x by the longest uniserial
    s^(k) in Filt(s) for which the concatenation M(x, s, ..., s) exists.
    """
    if spec.target(x) != s.top:
        return 0
    k = 0
    while True:
        nxt = k + 1
        if nxt > 1 and spec.target(s) != s.top:
            break
        if nxt * s.len > spec.l(s.top) or x.len + nxt * s.len > spec.l(x.top):
            break
        k = nxt
    return k


def mutate_smc(spec: AlgebraSpec, pair: SemibrickPair, s: Indec) -> SemibrickPair:
    """Left mutation at a positive brick, by arc arithmetic."""
    if s not in pair.positive:
        raise SmcError(f"{s} is not in the positive part of {pair}")
    pos: set[Indec] = set()
    neg: set[Indec] = {s}
    for x in pair.positive - {s}:
        k = _approximation_length(spec, x, s)
        pos.add(Indec(x.top, x.len + k * s.len))
    for y in pair.negative:
        kind = hom_kind(spec, y, s)
        if kind == "none":
            neg.add(y)
        elif kind == "mono":
            pos.add(Indec(s.top, s.len - y.len))
        elif kind == "epi":
            neg.add(Indec(spec.shift(y.top, s.len), y.len - s.len))
        else:
            raise SmcError(f"{pair} is not mutation compatible at {y} -> {s}")
    out = SemibrickPair(frozenset(pos), frozenset(neg))
    if not is_2smc(spec, out):
        raise AssertionError(f"mutation of {pair} at {s} produced {out}, not a 2-smc")
    return out


def mutate_smc_right(spec: AlgebraSpec, pair: SemibrickPair, s: Indec) -> SemibrickPair:
    """Right mutation at a negative brick: the unique Smc whose left mutation at s is ``pair``."""
    if s not in pair.negative:
        raise SmcError(f"{s} is not in the negative part of {pair}")
    hits = [y for y in all_smcs(spec) if s in y.positive and mutate_smc(spec, y, s) == pair]
    if len(hits) != 1:
        raise AssertionError(f"right mutation of {pair} at {s}: {len(hits)} candidates")
    return hits[0]
