"""Support tau-rigid pairs over a (possibly disconnected) Nakayama algebra.

Objects of the two-term category are frozensets of :class:`SignedIndec`:
modules ``M`` and shifted projectives ``P[1]``.  Support tau-rigidity is a
pairwise condition (``Hom(M_a, tau M_b) = 0`` and ``Hom(P, M) = 0``), so most
questions reduce to cliques in a precomputed compatibility relation.

Everything here works for one algebra at a time.  Wide subcategories are
handled in :mod:`taunak.wide` by re-presenting them as algebras and calling
back into these functions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .serial import (AlgebraSpec, Indec, SignedIndec, ext_dim, hom_dim, hom_windows,
                     in_fac, radical_window, tau)

Obj = frozenset  # frozenset[SignedIndec]


class RigidityError(ValueError):
    """Raised when an object violates the support tau-rigid conditions."""


def mods(u: Iterable[SignedIndec]) -> list[Indec]:
    return sorted(x.base for x in u if not x.shifted)


def shifts(u: Iterable[SignedIndec]) -> list[Indec]:
    return sorted(x.base for x in u if x.shifted)


def obj(modules: Iterable[Indec] = (), shifted: Iterable[Indec] = ()) -> Obj:
    return frozenset([SignedIndec(m) for m in modules] + [SignedIndec(p, True) for p in shifted])


def obj_str(u: Iterable[SignedIndec]) -> str:
    items = [str(x) for x in sorted(u, key=lambda s: (s.shifted, s.base))]
    return " ⊔ ".join(items) if items else "0"


@lru_cache(maxsize=None)
def signed_indecs(spec: AlgebraSpec) -> tuple[SignedIndec, ...]:
    return tuple(SignedIndec(x) for x in spec.indecs) + tuple(SignedIndec(p, True) for p in spec.projectives)


def _pair_ok(spec: AlgebraSpec, x: SignedIndec, y: SignedIndec) -> bool:
    if x.shifted and y.shifted:
        return True
    if x.shifted or y.shifted:
        p, m = (x.base, y.base) if x.shifted else (y.base, x.base)
        return hom_dim(spec, p, m) == 0
    return hom_dim(spec, x.base, tau(spec, y.base)) == 0 and hom_dim(spec, y.base, tau(spec, x.base)) == 0


@lru_cache(maxsize=None)
def compat(spec: AlgebraSpec) -> dict[SignedIndec, frozenset[SignedIndec]]:
    """For each indecomposable, the indecomposables it can be summed with (itself included if rigid)."""
    xs = signed_indecs(spec)
    return {x: frozenset(y for y in xs if _pair_ok(spec, x, y)) for x in xs}


def check_signed(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> None:
    for x in u:
        if not spec.contains(x.base):
            raise RigidityError(f"{x.base} is not a module over {spec}")
        if x.shifted and not spec.is_projective(x.base):
            raise RigidityError(f"{x.base} is not projective, so {x} is not an object")


def is_tau_rigid(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> bool:
    """Support tau-rigidity; raises on a shifted non-projective."""
    u = list(u)
    check_signed(spec, u)
    c = compat(spec)
    return all(y in c[x] for x in u for y in u)


def is_stt(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> bool:
    u = frozenset(u)
    return len(u) == spec.n and is_tau_rigid(spec, u)


def fac(spec: AlgebraSpec, modules: Iterable[Indec]) -> frozenset[Indec]:
    """Indecomposables of Fac(M): for uniserial summands these are just their quotients."""
    return frozenset(Indec(m.top, k) for m in modules for k in range(1, m.len + 1))


def perp_category(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> frozenset[Indec]:
    """Indecomposables of the category ⊥(tau M) ∩ P^⊥."""
    ms, ps = mods(u), shifts(u)
    taus = [t for t in (tau(spec, m) for m in ms) if t is not None]
    return frozenset(x for x in spec.indecs
                     if all(hom_dim(spec, x, t) == 0 for t in taus)
                     and all(hom_dim(spec, p, x) == 0 for p in ps))


def ext_projectives(spec: AlgebraSpec, cat: Iterable[Indec]) -> frozenset[Indec]:
    cat = list(cat)
    return frozenset(x for x in cat if all(ext_dim(spec, x, y) == 0 for y in cat))


def bongartz_complement(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> frozenset[Indec]:
    u = frozenset(u)
    if not is_tau_rigid(spec, u):
        raise RigidityError(f"{obj_str(u)} is not support tau-rigid")
    return ext_projectives(spec, perp_category(spec, u)) - set(mods(u))


def bongartz_completion(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> Obj:
    u = frozenset(u)
    return u | obj(bongartz_complement(spec, u))


def completions(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> list[SignedIndec]:
    """Indecomposables Y not in u with u ⊔ Y support tau-rigid."""
    u = frozenset(u)
    c = compat(spec)
    return [y for y in signed_indecs(spec) if y not in u and y in c[y] and all(y in c[x] for x in u)]


def mutate_stt(spec: AlgebraSpec, t: Iterable[SignedIndec], at: SignedIndec) -> tuple[Obj, str]:
    """The other completion of ``t - at``, with direction ``left`` or ``right``."""
    t = frozenset(t)
    if at not in t:
        raise RigidityError(f"{at} is not a summand of {obj_str(t)}")
    if not is_stt(spec, t):
        raise RigidityError(f"{obj_str(t)} is not support tau-tilting")
    rest = t - {at}
    cands = [y for y in completions(spec, rest) if y != at]
    if len(cands) != 1:
        raise AssertionError(f"almost complete {obj_str(rest)} has completions {cands} besides {at}")
    new = cands[0]
    rest_fac = fac(spec, mods(rest))
    left = new.shifted or new.base in rest_fac
    return rest | {new}, "left" if left else "right"


@dataclass
class ExchangeGraph:
    spec: AlgebraSpec
    vertices: list[Obj]
    # (source, target, mutated summand, replacement); arrows point to the smaller torsion class
    arrows: list[tuple[Obj, Obj, SignedIndec, SignedIndec]] = field(default_factory=list)

    def degree_ok(self) -> bool:
        deg = {v: 0 for v in self.vertices}
        for s, t, _, _ in self.arrows:
            deg[s] += 1
            deg[t] += 1
        return all(d == self.spec.n for d in deg.values())


def _sort_obj(u: Obj):
    return (sorted((x.shifted, x.base) for x in u),)


@lru_cache(maxsize=None)
def all_stt(spec: AlgebraSpec) -> ExchangeGraph:
    """Breadth-first closure under mutation starting from (Λ, 0)."""
    start = obj(spec.projectives)
    seen = {start}
    queue = deque([start])
    arrows = []
    while queue:
        t = queue.popleft()
        for x in sorted(t):
            new, direction = mutate_stt(spec, t, x)
            if direction == "left":
                repl = next(iter(new - t))
                arrows.append((t, new, x, repl))
            if new not in seen:
                seen.add(new)
                queue.append(new)
    return ExchangeGraph(spec, sorted(seen, key=_sort_obj), sorted(arrows, key=lambda a: (_sort_obj(a[0]), a[2])))


@lru_cache(maxsize=None)
def all_rigid(spec: AlgebraSpec) -> tuple[Obj, ...]:
    """Every support tau-rigid object, the zero object included."""
    c = compat(spec)
    xs = [x for x in signed_indecs(spec) if x in c[x]]
    out = []

    def rec(i, chosen):
        if i == len(xs):
            out.append(frozenset(chosen))
            return
        rec(i + 1, chosen)
        x = xs[i]
        if all(x in c[y] for y in chosen):
            chosen.append(x)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return tuple(sorted(out, key=lambda u: (len(u), _sort_obj(u))))


# -- Jasso categories and E-maps ---------------------------------------------

def jasso_members(spec: AlgebraSpec, u: Iterable[SignedIndec]) -> frozenset[Indec]:
    """Indecomposables of (M ⊔ P)^⊥ ∩ ⊥(tau M)."""
    u = list(u)
    ms, ps = mods(u), shifts(u)
    taus = [t for t in (tau(spec, m) for m in ms) if t is not None]
    return frozenset(x for x in spec.indecs
                     if all(hom_dim(spec, m, x) == 0 for m in ms + ps)
                     and all(hom_dim(spec, x, t) == 0 for t in taus))


def wide_simples(spec: AlgebraSpec, members: Iterable[Indec]) -> frozenset[Indec]:
    """Simple objects of a wide subcategory: members without a proper nonzero submodule inside it."""
    members = frozenset(members)
    return frozenset(x for x in members
                     if not any(Indec(spec.shift(x.top, k), x.len - k) in members for k in range(1, x.len)))


def torsion_free_part(spec: AlgebraSpec, m: Iterable[Indec], x: Indec) -> Indec | None:
    """x / rad(M, x), the quotient by the largest image of a radical map from M."""
    t = radical_window(spec, m, x)
    return Indec(x.top, x.len - t) if t < x.len else None


def e_single(spec: AlgebraSpec, u: SignedIndec, y: SignedIndec) -> SignedIndec:
    """E_u(y) for indecomposable u and y with u ⊔ y support tau-rigid.

    The result is an object of J(u), still written as a module over ``spec``;
    ``shifted`` refers to projectivity inside J(u).
    """
    if u == y or not is_tau_rigid(spec, (u, y)):
        raise RigidityError(f"{u} ⊔ {y} is not support tau-rigid")
    if u.shifted:
        if not y.shifted:
            return y
        q = torsion_free_part(spec, [u.base], y.base)
        return SignedIndec(q, True)
    m = u.base
    if not y.shifted and not in_fac(m, y.base):
        return SignedIndec(torsion_free_part(spec, [m], y.base))
    # The summand is pinned down by the interval isomorphism: the largest torsion
    # class containing u ⊔ y, cut down to J(u), must be q^⊥ ∩ J(u).
    j = jasso_members(spec, [u])
    if y.shifted:
        target_class = {x for x in j if hom_dim(spec, y.base, x) == 0}
    else:
        ty = tau(spec, y.base)
        target_class = {x for x in j if hom_dim(spec, x, ty) == 0}
    quotients = [torsion_free_part(spec, [m], b) for b in sorted(bongartz_complement(spec, [u]))]
    hits = [q for q in quotients if {x for x in j if hom_dim(spec, q, x) == 0} == target_class]
    if len(hits) != 1:
        raise AssertionError(f"E_{u}({y}): expected one Bongartz quotient, found {hits}")
    return SignedIndec(hits[0], True)
