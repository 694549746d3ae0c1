"""The tau-cluster morphism category and its cube complex.

A morphism ``[U]: W -> J_W(U)`` is a wide subcategory together with a support
tau-rigid object of it.  Composition uses the inverse E-bijection.  Every
rank-k morphism spans a k-cube whose vertices are ``J_W(U_S)`` for the
summand subsets ``S``; the classifying space is the union of these cubes.
Local CAT(0)-ness is certified by Gromov's link condition: the link of every
vertex must be a flag simplicial complex.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable

import networkx as nx

from . import tilting as tt
from . import wide as wd
from .serial import AlgebraSpec, Indec, SignedIndec
from .tors import build_lattice, x_of
from .wide import Wide


@dataclass(frozen=True)
class MorphW:
    source: Wide
    payload: frozenset[SignedIndec]

    def __post_init__(self):
        object.__setattr__(self, "payload", frozenset(self.payload))

    @property
    def target(self) -> Wide:
        return wd.jasso(self.source, self.payload)

    @property
    def rank(self) -> int:
        return len(self.payload)

    def __str__(self) -> str:
        return f"[{tt.obj_str(self.payload)}]: {self.source} -> {self.target}"

    def sort_key(self):
        return (self.source.sort_key(), sorted((x.shifted, x.base) for x in self.payload))


class CompositionError(ValueError):
    pass


def identity(w: Wide) -> MorphW:
    return MorphW(w, frozenset())


def compose(f: MorphW, g: MorphW) -> MorphW:
    """g ∘ f, for f: W -> W1 and g: W1 -> W2."""
    if f.target is not g.source:
        raise CompositionError(f"target {f.target} of the first map is not the source {g.source} of the second")
    pre = wd.e_inverse(f.source, f.payload, g.payload)
    return MorphW(f.source, f.payload | pre)


def subcube_morphism(f: MorphW, lo: frozenset[SignedIndec], hi: frozenset[SignedIndec]) -> MorphW:
    """The morphism J(U_lo) -> J(U_hi) of the factorization cube, for lo ⊆ hi ⊆ payload."""
    return MorphW(wd.jasso(f.source, lo), wd.e_obj(f.source, lo, hi - lo))


@dataclass
class FactorizationCube:
    base: MorphW
    vertices: dict[frozenset, Wide]
    edges: dict[tuple[frozenset, frozenset], MorphW]

    @property
    def dimension(self) -> int:
        return self.base.rank

    def maximal_chains(self) -> list[list[MorphW]]:
        """Chains of edges from the source to the target whose composite is the base morphism."""
        full = self.base.payload
        out = []
        for perm in permutations(sorted(full)):
            chain = []
            cur = frozenset()
            for x in perm:
                nxt = cur | {x}
                chain.append(self.edges[(cur, nxt)])
                cur = nxt
            total = chain[0] if chain else identity(self.base.source)
            for e in chain[1:]:
                total = compose(total, e)
            if total != self.base:
                raise AssertionError(f"chain {perm} composes to {total}, not {self.base}")
            out.append(chain)
        return out


def factorization_cube(f: MorphW) -> FactorizationCube:
    full = sorted(f.payload)
    verts = {}
    for k in range(len(full) + 1):
        for sub in combinations(full, k):
            verts[frozenset(sub)] = wd.jasso(f.source, frozenset(sub))
    if len(set(map(id, verts.values()))) != len(verts):
        raise AssertionError(f"factorization cube of {f} is not embedded: intermediate objects repeat")
    edges = {}
    for s in verts:
        for x in full:
            if x not in s:
                edges[(s, s | {x})] = subcube_morphism(f, s, s | {x})
    return FactorizationCube(f, verts, edges)


def first_factors(f: MorphW) -> list[MorphW]:
    return [MorphW(f.source, frozenset([x])) for x in sorted(f.payload)]


def last_factors(f: MorphW) -> list[MorphW]:
    return [subcube_morphism(f, f.payload - {x}, f.payload) for x in sorted(f.payload)]


def last_bricks(f: MorphW) -> tuple[frozenset[Indec], frozenset[Indec]]:
    """br^{-1} of the last factors of f: W -> 0, as (positive, negative) bricks.

    Each last factor is [P_S] or [P_S[1]] out of a rank-one Filt(S).
    """
    pos, neg = set(), set()
    for g in last_factors(f):
        (s,) = g.source.simples
        (y,) = g.payload
        (neg if y.shifted else pos).add(s)
    return frozenset(pos), frozenset(neg)


# -- the whole category ---------------------------------------------------

@dataclass
class CubeComplex:
    spec: AlgebraSpec
    objects: list[Wide]
    morphisms: list[MorphW]
    by_rank: dict[int, list[MorphW]] = field(default_factory=dict)

    def __post_init__(self):
        for m in self.morphisms:
            self.by_rank.setdefault(m.rank, []).append(m)

    def __hash__(self):
        return id(self)

    @property
    def cubes_by_rank(self) -> list[int]:
        top = max(self.by_rank) if self.by_rank else 0
        return [len(self.by_rank.get(k, [])) for k in range(top + 1)]

    @property
    def cells_by_rank(self) -> list[int]:
        c = Counter(w.rank for w in self.objects)
        return [c.get(k, 0) for k in range(self.spec.n + 1)]

    @cached_property
    def out_of(self) -> dict[Wide, list[MorphW]]:
        d = defaultdict(list)
        for m in self.morphisms:
            d[m.source].append(m)
        return d

    @cached_property
    def into(self) -> dict[Wide, list[MorphW]]:
        d = defaultdict(list)
        for m in self.morphisms:
            d[m.target].append(m)
        return d

    def stats(self) -> dict:
        return {"cubes_by_rank": self.cubes_by_rank, "cells_by_rank": self.cells_by_rank}


@lru_cache(maxsize=None)
def build_cube_complex(spec: AlgebraSpec) -> CubeComplex:
    objects = wd.all_wides(spec)
    morphisms = [MorphW(w, u) for w in objects for u in w.rigid_objects]
    morphisms.sort(key=lambda m: (m.rank, m.sort_key()))
    return CubeComplex(spec, objects, morphisms)


@dataclass
class Report:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        if len(self.failures) < 20:
            self.failures.append(msg)

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}


def check_cubical(c: CubeComplex, composable_limit: int | None = None) -> list[Report]:
    """The five cubical-category axioms, checked exhaustively (or up to a limit on composable pairs)."""
    additivity = Report("rank additivity")
    cube = Report("Fac(f) is a standard cube")
    embed = Report("factorization cubes embed")
    firsts = Report("determined by first factors")
    lasts = Report("determined by last factors")

    pairs = 0
    for f in c.morphisms:
        for g in c.out_of[f.target]:
            if composable_limit is not None and pairs >= composable_limit:
                break
            pairs += 1
            h = compose(f, g)
            additivity.checked += 1
            if h.rank != f.rank + g.rank or h.target is not g.target:
                additivity.fail(f"{g} ∘ {f} = {h}")

    for f in c.morphisms:
        k = f.rank
        try:
            fc = factorization_cube(f)
        except AssertionError as exc:
            embed.fail(str(exc))
            continue
        embed.checked += 1
        cube.checked += 1
        if len(fc.vertices) != 2 ** k or len(fc.edges) != k * 2 ** max(k - 1, 0) * (1 if k else 0):
            cube.fail(f"{f}: {len(fc.vertices)} vertices, {len(fc.edges)} edges")
        # each sub-inclusion gives exactly one morphism, and it factors f
        for lo in fc.vertices:
            for hi in fc.vertices:
                if lo < hi:
                    mid = subcube_morphism(f, lo, hi)
                    head = MorphW(f.source, lo)
                    tail = subcube_morphism(f, hi, f.payload)
                    if compose(compose(head, mid), tail) != f:
                        cube.fail(f"{f}: factorization through {tt.obj_str(lo)} ⊂ {tt.obj_str(hi)} breaks")
        if k <= 3 and len(fc.maximal_chains()) != _factorial(k):
            cube.fail(f"{f}: wrong number of maximal chains")

    seen_first: dict = {}
    seen_last: dict = {}
    for f in c.morphisms:
        key = (f.source, frozenset(first_factors(f)))
        firsts.checked += 1
        if key in seen_first and seen_first[key] != f:
            firsts.fail(f"{f} and {seen_first[key]} share first factors")
        seen_first[key] = f
        lkey = (f.target, frozenset(last_factors(f)))
        lasts.checked += 1
        if lkey in seen_last and seen_last[lkey] != f:
            lasts.fail(f"{f} and {seen_last[lkey]} share last factors")
        seen_last[lkey] = f
    return [additivity, cube, embed, firsts, lasts]


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def check_last_bricks(c: CubeComplex) -> Report:
    """br^{-1}(last[U]) = X(U) for every U: W -> 0, compared inside tors(Λ_W)."""
    rep = Report("last factors give X(U)")
    for w in c.objects:
        lat = build_lattice(w.algebra)
        for u in w.stt:
            f = MorphW(w, u)
            got = last_bricks(f)
            pos, neg = x_of(lat, w.down_obj(u))
            want = (frozenset(w.to_lam[x] for x in pos), frozenset(w.to_lam[x] for x in neg))
            rep.checked += 1
            if got != want:
                rep.fail(f"{f}: last bricks {got} but X(U) = {want}")
    return rep


# -- links ------------------------------------------------------------------

@dataclass
class Link:
    vertex: Wide
    simplices: set[frozenset]
    duplicates: int = 0

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        for s in self.simplices:
            g.add_nodes_from(s)
            for a, b in combinations(s, 2):
                g.add_edge(a, b)
        return g

    def non_flag_cliques(self) -> list[frozenset]:
        return [frozenset(q) for q in nx.find_cliques(self.graph) if frozenset(q) not in self.simplices]

    @property
    def is_flag(self) -> bool:
        return self.duplicates == 0 and not self.non_flag_cliques()


def links(c: CubeComplex) -> dict[Wide, Link]:
    """One link vertex per edge-end at a vertex; one simplex per cube corner there."""
    out = {w: Link(w, set()) for w in c.objects}
    seen: dict[tuple[Wide, frozenset], MorphW] = {}
    for f in c.morphisms:
        if f.rank == 0:
            continue
        full = f.payload
        for k in range(len(full) + 1):
            for sub in combinations(sorted(full), k):
                s = frozenset(sub)
                corner = wd.jasso(f.source, s)
                ends = set()
                for x in full:
                    if x in s:
                        ends.add(("in", subcube_morphism(f, s - {x}, s)))
                    else:
                        ends.add(("out", subcube_morphism(f, s, s | {x})))
                simplex = frozenset(ends)
                key = (corner, simplex)
                if key in seen and seen[key] != f:
                    out[corner].duplicates += 1
                seen[key] = f
                out[corner].simplices.add(simplex)
    return out


def check_links_flag(c: CubeComplex) -> tuple[bool, dict[Wide, bool]]:
    per = {w: lk.is_flag for w, lk in links(c).items()}
    return all(per.values()), per


def check_forward_spheres(c: CubeComplex) -> Report:
    """The first-factor link of W is a combinatorial (rank - 1)-sphere."""
    rep = Report("forward links are spheres")
    for w in c.objects:
        if w.rank == 0:
            continue
        facets = [frozenset(m.payload) for m in c.out_of[w] if m.rank == w.rank]
        rep.checked += 1
        ridge = Counter()
        for fct in facets:
            for x in fct:
                ridge[fct - {x}] += 1
        if any(v != 2 for k, v in ridge.items() if w.rank >= 2) or (w.rank == 1 and len(facets) != 2):
            rep.fail(f"{w}: ridges not shared by exactly two facets")
    return rep


def to_dot(c: CubeComplex) -> str:
    names = {w: f"w{i}" for i, w in enumerate(c.objects)}
    lines = ["digraph W {"]
    for w in c.objects:
        lines.append(f'  {names[w]} [label="{w}"];')
    for m in c.by_rank.get(1, []):
        lines.append(f'  {names[m.source]} -> {names[m.target]} [label="{tt.obj_str(m.payload)}"];')
    for m in c.by_rank.get(2, []):
        lines.append(f'  {names[m.source]} -> {names[m.target]} [style=dashed, color=gray, label="{tt.obj_str(m.payload)}"];')
    lines.append("}")
    return "\n".join(lines)
