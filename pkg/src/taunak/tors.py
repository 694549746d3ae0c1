"""The lattice of torsion classes with its brick-labelled Hasse quiver.

Vertices are support tau-tilting pairs; each carries the set of
indecomposables of its torsion class ``Fac M``.  Arrows point from the larger
to the smaller torsion class and are labelled by the brick
``M / rad(M ⊔ M', M)`` of the mutated summand ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from . import tilting as tt
from .serial import AlgebraSpec, Indec, SignedIndec, hom_dim, is_brick, radical_window
from .tilting import Obj, obj_str


@dataclass(frozen=True)
class Arrow:
    source: Obj
    target: Obj
    label: Indec
    summand: SignedIndec


@dataclass(frozen=True)
class Polygon:
    top: Obj
    bottom: Obj
    side1: tuple[Indec, ...]
    side2: tuple[Indec, ...]

    @property
    def pair(self) -> frozenset[Indec]:
        return frozenset((self.side1[0], self.side2[0]))

    def to_json(self) -> dict:
        return {"top": tt.obj_str(self.top), "bottom": tt.obj_str(self.bottom),
                "sides": [[str(b) for b in self.side1], [str(b) for b in self.side2]]}


@dataclass
class TorsLattice:
    spec: AlgebraSpec
    vertices: list[Obj]
    torsion: dict[Obj, frozenset[Indec]]
    arrows: list[Arrow]
    _out: dict = field(default_factory=dict, repr=False)
    _in: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for v in self.vertices:
            self._out[v] = []
            self._in[v] = []
        for a in self.arrows:
            self._out[a.source].append(a)
            self._in[a.target].append(a)

    def __hash__(self):
        return id(self)

    @cached_property
    def by_torsion(self) -> dict[frozenset[Indec], Obj]:
        return {t: v for v, t in self.torsion.items()}

    @property
    def top(self) -> Obj:
        return next(v for v in self.vertices if not self._in[v])

    @property
    def bottom(self) -> Obj:
        return next(v for v in self.vertices if not self._out[v])

    def out_arrows(self, v: Obj) -> list[Arrow]:
        return self._out[v]

    def in_arrows(self, v: Obj) -> list[Arrow]:
        return self._in[v]

    def out_labels(self, v: Obj) -> frozenset[Indec]:
        return frozenset(a.label for a in self._out[v])

    def in_labels(self, v: Obj) -> frozenset[Indec]:
        return frozenset(a.label for a in self._in[v])

    def leq(self, u: Obj, v: Obj) -> bool:
        return self.torsion[u] <= self.torsion[v]

    def meet(self, u: Obj, v: Obj) -> Obj:
        # an intersection of torsion classes is a torsion class
        return self.by_torsion[self.torsion[u] & self.torsion[v]]

    def join(self, u: Obj, v: Obj) -> Obj:
        need = self.torsion[u] | self.torsion[v]
        cands = [w for w in self.vertices if need <= self.torsion[w]]
        best = min(cands, key=lambda w: len(self.torsion[w]))
        if not all(self.torsion[best] <= self.torsion[w] for w in cands):
            raise AssertionError("no least upper bound")
        return best

    def vertex_of_torsion(self, t: Iterable[Indec]) -> Obj:
        return self.by_torsion[frozenset(t)]

    def interval(self, lo: Obj, hi: Obj) -> list[Obj]:
        return [w for w in self.vertices if self.leq(lo, w) and self.leq(w, hi)]

    def paths(self, src: Obj, dst: Obj) -> Iterator[list[Arrow]]:
        """All directed paths from src down to dst."""
        if src == dst:
            yield []
            return
        for a in self._out[src]:
            if self.leq(dst, a.target):
                for rest in self.paths(a.target, dst):
                    yield [a] + rest

    def some_path(self, src: Obj, dst: Obj) -> list[Arrow]:
        path = []
        cur = src
        while cur != dst:
            a = next(a for a in self._out[cur] if self.leq(dst, a.target))
            path.append(a)
            cur = a.target
        return path


def arrow_label(spec: AlgebraSpec, u: Obj, at: SignedIndec) -> Indec:
    """M / rad(M ⊔ M', M) for the mutated summand M of u."""
    m = at.base
    t = radical_window(spec, tt.mods(u), m)
    return Indec(m.top, m.len - t)


@lru_cache(maxsize=None)
def build_lattice(spec: AlgebraSpec) -> TorsLattice:
    g = tt.all_stt(spec)
    torsion = {v: tt.fac(spec, tt.mods(v)) for v in g.vertices}
    arrows = [Arrow(s, t, arrow_label(spec, s, at), at) for s, t, at, _ in g.arrows]
    return TorsLattice(spec, list(g.vertices), torsion, arrows)


def label_oracle(lat: TorsLattice, a: Arrow) -> list[Indec]:
    """Bricks in T ∩ T'^⊥ for the arrow T -> T' (should be exactly the label)."""
    spec = lat.spec
    lower = lat.torsion[a.target]
    return [b for b in lat.torsion[a.source] if is_brick(spec, b)
            and all(hom_dim(spec, x, b) == 0 for x in lower)]


def x_of(lat: TorsLattice, u: Obj) -> tuple[frozenset[Indec], frozenset[Indec]]:
    """X(U) = Out labels ⊔ In labels[1], as (positive, negative)."""
    return lat.out_labels(u), lat.in_labels(u)


def polygons(lat: TorsLattice) -> list[Polygon]:
    """Polygons at every pair of down-arrows and every pair of up-arrows, coalesced by label pair."""
    found: dict[frozenset[Indec], Polygon] = {}
    for v in lat.vertices:
        for a, b in combinations(lat.out_arrows(v), 2):
            poly = _polygon(lat, v, lat.meet(a.target, b.target), a, b)
            found.setdefault(poly.pair, poly)
        for a, b in combinations(lat.in_arrows(v), 2):
            top = lat.join(a.source, b.source)
            down = [x for x in lat.out_arrows(top)]
            # the down-arrows from the join that lead to the two given sources
            first = next(x for x in down if lat.leq(a.source, x.target) and not lat.leq(b.source, x.target))
            second = next(x for x in down if lat.leq(b.source, x.target) and not lat.leq(a.source, x.target))
            poly = _polygon(lat, top, v, first, second)
            found.setdefault(poly.pair, poly)
    return sorted(found.values(), key=lambda p: sorted(p.pair))


def _polygon(lat: TorsLattice, top: Obj, bottom: Obj, a: Arrow, b: Arrow) -> Polygon:
    inside = set(lat.interval(bottom, top)) - {top, bottom}

    def side(first: Arrow) -> tuple[Indec, ...]:
        labels = [first.label]
        cur = first.target
        while cur != bottom:
            nxt = [x for x in lat.out_arrows(cur) if x.target in inside or x.target == bottom]
            if len(nxt) != 1:
                raise AssertionError(f"interval below {obj_str(top)} is not a polygon")
            labels.append(nxt[0].label)
            cur = nxt[0].target
        return tuple(labels)

    s1, s2 = side(a), side(b)
    if len(s1) - 1 + len(s2) - 1 != len(inside):
        raise AssertionError("polygon sides do not exhaust the open interval")
    if s1 > s2:
        s1, s2 = s2, s1
    return Polygon(top, bottom, s1, s2)


def maximal_green_sequences(lat: TorsLattice) -> list[tuple[Indec, ...]]:
    return sorted(tuple(a.label for a in p) for p in lat.paths(lat.top, lat.bottom))


def interval_iso(lat: TorsLattice, u: Obj) -> dict[Obj, frozenset[Indec]]:
    """T ↦ T ∩ J(u) on the interval [Fac M, ⊥(tau M) ∩ P^⊥] (Λ-level torsion sets)."""
    spec = lat.spec
    if not tt.is_tau_rigid(spec, u):
        raise tt.RigidityError(f"{obj_str(u)} is not support tau-rigid")
    lo = tt.fac(spec, tt.mods(u))
    hi = tt.perp_category(spec, u)
    j = tt.jasso_members(spec, u)
    return {v: lat.torsion[v] & j for v in lat.vertices if lo <= lat.torsion[v] <= hi}


def to_dot(lat: TorsLattice) -> str:
    names = {v: f"v{i}" for i, v in enumerate(lat.vertices)}
    lines = ["digraph tors {", "  rankdir=TB;"]
    for v in lat.vertices:
        lines.append(f'  {names[v]} [label="{obj_str(v)}"];')
    for a in lat.arrows:
        lines.append(f'  {names[a.source]} -> {names[a.target]} [label="{a.label}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json(lat: TorsLattice) -> dict:
    return {
        "vertices": [obj_str(v) for v in lat.vertices],
        "arrows": [{"source": obj_str(a.source), "target": obj_str(a.target), "label": str(a.label)}
                   for a in lat.arrows],
    }
