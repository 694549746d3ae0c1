"""Wide subcategories of mod Λ and their re-presentation as Nakayama algebras.

A wide subcategory ``W = Filt(S)`` of a Nakayama algebra is equivalent to
``mod Λ_W`` for a Nakayama algebra ``Λ_W`` (possibly disconnected): the simples
of ``Λ_W`` are the bricks of ``S``, its arrows are the nonzero extensions
between them, and its uniserial modules are the concatenations of consecutive
simples.  :class:`Wide` builds ``Λ_W`` with a dictionary both ways, so that all
tau-tilting questions inside ``W`` are answered by :mod:`taunak.tilting` on
``Λ_W`` and translated back to modules over ``Λ``.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from . import tilting as tt
from .serial import AlgebraSpec, Indec, SignedIndec, ext_dim, hom_dim, union_spec


class WideError(ValueError):
    pass


class Wide:
    """The wide subcategory Filt(simples) of mod ``lam``.

    Instances are interned per (algebra, simples), so identity is equality.
    """

    _cache: dict = {}

    def __new__(cls, lam: AlgebraSpec, simples: Iterable[Indec]):
        key = (lam, frozenset(simples))
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.lam = lam
            inst.simples = key[1]
            cls._cache[key] = inst
        return inst

    def __repr__(self) -> str:
        inner = ", ".join(map(str, sorted(self.simples)))
        return f"Filt({inner})" if self.simples else "0"

    __str__ = __repr__

    def __reduce__(self):
        return (Wide, (self.lam, tuple(sorted(self.simples))))

    @property
    def rank(self) -> int:
        return len(self.simples)

    def sort_key(self):
        return (-self.rank, sorted(self.simples))

    # -- re-presentation ---------------------------------------------------
    @cached_property
    def _presentation(self):
        lam = self.lam
        simples = sorted(self.simples)
        for a in simples:
            if not a.len <= lam.n:
                raise WideError(f"{a} is not a brick")
        for a, b in permutations(simples, 2):
            if hom_dim(lam, a, b):
                raise WideError(f"{a} and {b} are not Hom-orthogonal")
        succ: dict[Indec, Indec] = {}
        pred: dict[Indec, Indec] = {}
        for a in simples:
            outs = [b for b in simples if ext_dim(lam, a, b)]
            if len(outs) > 1:
                raise WideError(f"{a} extends {len(outs)} simples; Ext-quiver out-degree exceeds 1")
            if outs:
                if outs[0] in pred:
                    raise WideError(f"{outs[0]} has Ext-quiver in-degree exceeding 1")
                succ[a] = outs[0]
                pred[outs[0]] = a
        # chains start at their source, cycles at their smallest simple
        components: list[list[Indec]] = []
        placed: set[Indec] = set()
        starts = [a for a in simples if a not in pred] + simples
        for s in starts:
            if s in placed:
                continue
            comp = [s]
            placed.add(s)
            while comp[-1] in succ and succ[comp[-1]] not in placed:
                comp.append(succ[comp[-1]])
                placed.add(comp[-1])
            components.append(comp)
        components.sort(key=lambda c: min(c))
        order = [a for c in components for a in c]
        kupisch: list[list[int]] = []
        to_lam: dict[Indec, Indec] = {}
        vertex = 0
        for comp in components:
            ls = []
            for pos, a in enumerate(comp):
                v = vertex + pos + 1
                length, k, cur = a.len, 1, a
                to_lam[Indec(v, 1)] = a
                # extend by the next simple while the concatenated uniserial exists over Λ
                while cur in succ:
                    nxt = succ[cur]
                    if length + nxt.len > lam.l(a.top):
                        break
                    length += nxt.len
                    k += 1
                    cur = nxt
                    to_lam[Indec(v, k)] = Indec(a.top, length)
                ls.append(k)
            kupisch.append(ls)
            vertex += len(comp)
        algebra = union_spec(kupisch) if kupisch else AlgebraSpec(0, (), ())
        return algebra, to_lam, order

    @property
    def algebra(self) -> AlgebraSpec:
        return self._presentation[0]

    @property
    def to_lam(self) -> dict[Indec, Indec]:
        return self._presentation[1]

    @cached_property
    def from_lam(self) -> dict[Indec, Indec]:
        return {v: k for k, v in self.to_lam.items()}

    @cached_property
    def members(self) -> frozenset[Indec]:
        """Indecomposables of W as Λ-modules."""
        return frozenset(self.to_lam.values())

    def ext_quiver(self) -> list[tuple[Indec, Indec]]:
        return [(a, b) for a in sorted(self.simples) for b in sorted(self.simples) if ext_dim(self.lam, a, b)]

    # -- translation -------------------------------------------------------
    def down(self, x: SignedIndec) -> SignedIndec:
        """Λ-coordinates to Λ_W-coordinates."""
        try:
            return SignedIndec(self.from_lam[x.base], x.shifted)
        except KeyError:
            raise WideError(f"{x.base} is not in {self}") from None

    def up(self, x: SignedIndec) -> SignedIndec:
        return SignedIndec(self.to_lam[x.base], x.shifted)

    def down_obj(self, u: Iterable[SignedIndec]) -> frozenset[SignedIndec]:
        return frozenset(self.down(x) for x in u)

    def up_obj(self, u: Iterable[SignedIndec]) -> frozenset[SignedIndec]:
        return frozenset(self.up(x) for x in u)

    @cached_property
    def projectives(self) -> frozenset[Indec]:
        return frozenset(self.to_lam[p] for p in self.algebra.projectives)

    def is_rigid(self, u: Iterable[SignedIndec]) -> bool:
        u = list(u)
        try:
            low = self.down_obj(u)
        except WideError:
            return False
        try:
            return tt.is_tau_rigid(self.algebra, low) and len(low) == len(u)
        except tt.RigidityError:
            return False

    @cached_property
    def rigid_objects(self) -> tuple[frozenset[SignedIndec], ...]:
        return tuple(self.up_obj(u) for u in tt.all_rigid(self.algebra))

    @cached_property
    def stt(self) -> tuple[frozenset[SignedIndec], ...]:
        return tuple(u for u in self.rigid_objects if len(u) == self.rank)


def whole(lam: AlgebraSpec) -> Wide:
    return Wide(lam, lam.simples)


def zero(lam: AlgebraSpec) -> Wide:
    return Wide(lam, ())


@lru_cache(maxsize=None)
def jasso(w: Wide, u: frozenset[SignedIndec]) -> Wide:
    """J_W(u) = (M ⊔ P)^⊥ ∩ ⊥(tau_W M) ∩ W, computed inside Λ_W."""
    low = w.down_obj(u)
    if not tt.is_tau_rigid(w.algebra, low):
        raise tt.RigidityError(f"{tt.obj_str(u)} is not support tau-rigid in {w}")
    spec = w.algebra
    simples = tt.wide_simples(spec, tt.jasso_members(spec, low))
    return Wide(w.lam, (w.to_lam[s] for s in simples))


@lru_cache(maxsize=None)
def e_one(w: Wide, u: SignedIndec, y: SignedIndec) -> SignedIndec:
    """E^W_u(y) for indecomposable u, in Λ-coordinates (shift relative to J_W(u))."""
    res = tt.e_single(w.algebra, w.down(u), w.down(y))
    return w.up(res)


def e_map(w: Wide, u: Iterable[SignedIndec], y: SignedIndec, order: Sequence[SignedIndec] | None = None) -> SignedIndec:
    """E^W_u(y) for any support tau-rigid u, by the recursive formula.

    ``order`` is the ordered decomposition of u used by the recursion; the
    default is the sorted one.
    """
    u = frozenset(u)
    order = list(order) if order is not None else sorted(u)
    if not order:
        return y
    first, rest = order[0], order[1:]
    inner = jasso(w, frozenset([first]))
    return e_map(inner, [e_one(w, first, r) for r in rest], e_one(w, first, y),
                 order=[e_one(w, first, r) for r in rest])


def e_obj(w: Wide, u: Iterable[SignedIndec], v: Iterable[SignedIndec],
          order: Sequence[SignedIndec] | None = None) -> frozenset[SignedIndec]:
    return frozenset(e_map(w, u, y, order) for y in v)


def e_domain(w: Wide, u: frozenset[SignedIndec]) -> list[SignedIndec]:
    """Indecomposables y not in u with u ⊔ y support tau-rigid in W."""
    low = w.down_obj(u)
    return [w.up(y) for y in tt.completions(w.algebra, low)]


@lru_cache(maxsize=None)
def e_inverse_table(w: Wide, u: frozenset[SignedIndec]) -> dict[SignedIndec, SignedIndec]:
    """Preimage lookup for E^W_u on indecomposables, by exhaustive scan."""
    table = {}
    for y in e_domain(w, u):
        img = e_map(w, u, y)
        if img in table:
            raise AssertionError(f"E_{u} is not injective: {table[img]} and {y} both map to {img}")
        table[img] = y
    return table


def e_inverse(w: Wide, u: frozenset[SignedIndec], v: Iterable[SignedIndec]) -> frozenset[SignedIndec]:
    table = e_inverse_table(w, u)
    try:
        return frozenset(table[x] for x in v)
    except KeyError as exc:
        raise tt.RigidityError(f"{exc.args[0]} is not in the image of E_{tt.obj_str(u)}") from None


def psi(w: Wide, ordered: Sequence[SignedIndec]) -> list[tuple[Wide, SignedIndec]]:
    """Signed tau-exceptional sequence of an ordered decomposition.

    Returns the entries together with the wide subcategory each one lives in,
    so that ``result[k] = (W_k, X_k)`` with ``X_k`` support tau-rigid in ``W_k``.
    """
    ordered = list(ordered)
    if not w.is_rigid(ordered) or len(set(ordered)) != len(ordered):
        raise tt.RigidityError(f"{tt.obj_str(ordered)} is not support tau-rigid in {w}")
    if not ordered:
        return []
    last = ordered[-1]
    inner = jasso(w, frozenset([last]))
    head = [e_one(w, last, x) for x in ordered[:-1]]
    return psi(inner, head) + [(w, last)]


def psi_inverse(w: Wide, seq: Sequence[SignedIndec]) -> list[SignedIndec]:
    """Reverse search: the ordered decomposition whose Psi is ``seq``."""
    seq = list(seq)
    if not seq:
        return []
    last = seq[-1]
    inner = jasso(w, frozenset([last]))
    head = psi_inverse(inner, seq[:-1])
    table = e_inverse_table(w, frozenset([last]))
    return [table[x] for x in head] + [last]


def all_wides(lam: AlgebraSpec) -> list[Wide]:
    """Every wide subcategory, as Filt of the positive part of each 2-smc.

    Positive parts are read off the torsion lattice: the Out labels of a
    support tau-tilting pair.
    """
    from .tors import build_lattice
    lat = build_lattice(lam)
    out = {Wide(lam, lat.out_labels(v)) for v in lat.vertices}
    return sorted(out, key=Wide.sort_key)
