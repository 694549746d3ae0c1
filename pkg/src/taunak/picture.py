"""Picture groups, the brick algebra and the homomorphism phi.

The picture group has one generator ``X_S`` per brick and one relation per
polygon of the torsion lattice.  Equality of group words is never decided in
the group itself.  Every check is routed through

    phi: X_S -> 1 + S,   X_S^-1 -> 1 - S

into the units of the brick algebra, the free abelian group on the bricks
and a unit, where ``S * T`` is the unique brick extension of ``T`` by ``S``
when there is one and zero otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import tilting as tt
from .cubes import CubeComplex, MorphW, Report, build_cube_complex, compose
from .serial import AlgebraSpec, Indec, hom_dim, parse_indec
from .tors import TorsLattice, build_lattice, maximal_green_sequences, polygons

STYLES = ("polygon", "path", "mgs", "coset")


# -- words -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Coset:
    """The coset symbol g_T of the vertex with index ``index`` in the lattice."""

    index: int

    def __str__(self) -> str:
        return f"g[{self.index}]"


Gen = Indec | Coset
Letter = tuple  # (Gen, +1 | -1)


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[Letter, ...] = ()

    @classmethod
    def of(cls, gens: Iterable[Gen]) -> "GroupWord":
        return cls(tuple((g, 1) for g in gens))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def tokens(self) -> list[str]:
        out = []
        for g, e in self.letters:
            base = str(g) if isinstance(g, Coset) else f"X[{g}]"
            out.append(base if e == 1 else base + "^-1")
        return out

    def __str__(self) -> str:
        return " ".join(self.tokens()) if self.letters else "e"


_TOKEN = re.compile(r"^(?:X\[(?P<brick>M\(\d+,\d+\))\]|g\[(?P<coset>\d+)\])(?P<inv>\^-1)?$")


def parse_word(tokens: Sequence[str]) -> GroupWord:
    letters = []
    for tok in tokens:
        m = _TOKEN.match(tok.strip())
        if not m:
            raise ValueError(f"cannot parse word token {tok!r}")
        gen = parse_indec(m["brick"]) if m["brick"] else Coset(int(m["coset"]))
        letters.append((gen, -1 if m["inv"] else 1))
    return GroupWord(tuple(letters))


# -- the brick algebra ---------------------------------------------------------

def brick_product(spec: AlgebraSpec, s: Indec, t: Indec) -> Indec | None:
    """S * T on bricks: the middle term of T -> B -> S, read off the arcs."""
    if hom_dim(spec, s, t) or hom_dim(spec, t, s):
        return None
    if spec.target(s) != t.top:
        return None
    total = s.len + t.len
    if total > min(spec.l(s.top), spec.block_size(s.top)):
        return None
    return Indec(s.top, total)


class BrickElement:
    """An integer combination of the unit (key ``None``) and bricks."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: AlgebraSpec, coeffs: dict | None = None):
        self.spec = spec
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def one(cls, spec: AlgebraSpec) -> "BrickElement":
        return cls(spec, {None: 1})

    @classmethod
    def brick(cls, spec: AlgebraSpec, s: Indec, coeff: int = 1) -> "BrickElement":
        return cls(spec, {s: coeff})

    def _check(self, other: "BrickElement") -> None:
        if self.spec != other.spec:
            raise ValueError(f"brick algebra elements over {self.spec} and {other.spec} cannot be combined")

    def __add__(self, other: "BrickElement") -> "BrickElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BrickElement(self.spec, out)

    def __neg__(self) -> "BrickElement":
        return BrickElement(self.spec, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "BrickElement") -> "BrickElement":
        return self + (-other)

    def __mul__(self, other: "BrickElement") -> "BrickElement":
        return brick_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, BrickElement) and self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> tuple:
        return tuple(sorted(((k is not None, k or Indec(0, 0)), v) for k, v in self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (_, k), v in self.key():
            name = "1" if k == Indec(0, 0) else str(k)
            if name == "1":
                term = str(abs(v))
            else:
                term = name if abs(v) == 1 else f"{abs(v)}{name}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, term))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {t}" for s, t in parts[1:])

    __repr__ = __str__


def brick_mul(x: BrickElement, y: BrickElement) -> BrickElement:
    x._check(y)
    spec = x.spec
    out: dict = {}
    for a, u in x.coeffs.items():
        for b, v in y.coeffs.items():
            if a is None:
                key = b
            elif b is None:
                key = a
            else:
                key = brick_product(spec, a, b)
                if key is None:
                    continue
            out[key] = out.get(key, 0) + u * v
    return BrickElement(spec, out)


def phi(spec: AlgebraSpec, word: GroupWord, cosets: dict[int, BrickElement] | None = None) -> BrickElement:
    """The image of a word in the units of the brick algebra.

    Coset symbols are evaluated through ``cosets`` when the word contains any.
    """
    acc = BrickElement.one(spec)
    for g, e in word.letters:
        if isinstance(g, Coset):
            if cosets is None:
                raise ValueError(f"no value given for the coset symbol {g}")
            val = cosets[g.index]
            if e == -1:
                val = _unit_inverse(val)
        else:
            val = BrickElement(spec, {None: 1, g: e})
        acc = acc * val
    return acc


def _unit_inverse(x: BrickElement) -> BrickElement:
    """Inverse of 1 + N with N nilpotent, as the finite series 1 - N + N^2 - ..."""
    one = BrickElement.one(x.spec)
    nil = x - one
    if None in nil.coeffs:
        raise ValueError(f"{x} is not of the form 1 + nilpotent")
    out, term, sign = one, one, 1
    while True:
        term = term * nil
        sign = -sign
        if not term.coeffs:
            return out
        out = out + (term if sign > 0 else -term)


# -- presentations -------------------------------------------------------------

@dataclass
class Presentation:
    spec: AlgebraSpec
    style: str
    generators: list[Indec]
    relations: list[tuple[GroupWord, GroupWord]]
    cosets: list[tt.Obj] = field(default_factory=list)

    def to_json(self) -> dict:
        gens = [f"X[{g}]" for g in self.generators] + [str(Coset(i)) for i in range(len(self.cosets))]
        out = {"style": self.style, "generators": gens,
               "relations": [[lhs.tokens(), rhs.tokens()] for lhs, rhs in self.relations]}
        if self.cosets:
            out["cosets"] = [tt.obj_str(v) for v in self.cosets]
        return out

    def to_text(self) -> str:
        lines = [f"generators: {', '.join(self.to_json()['generators'])}", "relations:"]
        lines += [f"  {lhs} = {rhs}" for lhs, rhs in self.relations]
        return "\n".join(lines)


def relations_from_json(obj: dict) -> list[tuple[GroupWord, GroupWord]]:
    return [(parse_word(lhs), parse_word(rhs)) for lhs, rhs in obj["relations"]]


def _cyclic_key(word: GroupWord) -> tuple:
    letters = [(str(g), e) for g, e in word.letters]
    if not letters:
        return ()
    return min(tuple(letters[i:] + letters[:i]) for i in range(len(letters)))


def canonical_relation(lhs: GroupWord, rhs: GroupWord) -> tuple:
    """Key of the relator lhs rhs^-1 up to rotation and inversion."""
    rel = lhs * rhs.inverse()
    return min(_cyclic_key(rel), _cyclic_key(rel.inverse()))


def _relation(a: GroupWord, b: GroupWord) -> tuple[GroupWord, GroupWord]:
    # longer side on the left, then the lexicographically larger one
    ka, kb = (len(a), a.tokens()), (len(b), b.tokens())
    return (a, b) if ka >= kb else (b, a)


def _dedupe(rels: Iterable[tuple[GroupWord, GroupWord]]) -> list[tuple[GroupWord, GroupWord]]:
    seen, out = set(), []
    for lhs, rhs in rels:
        key = canonical_relation(lhs, rhs)
        if key not in seen:
            seen.add(key)
            out.append((lhs, rhs))
    return out


def label_word(path) -> GroupWord:
    return GroupWord.of(a.label for a in path)


def presentation(spec: AlgebraSpec, style: str = "polygon") -> Presentation:
    if style not in STYLES:
        raise ValueError(f"unknown presentation style {style!r}; choose from {', '.join(STYLES)}")
    lat = build_lattice(spec)
    gens = list(spec.bricks)
    if style == "polygon":
        rels = [_relation(GroupWord.of(p.side1), GroupWord.of(p.side2)) for p in polygons(lat)]
        return Presentation(spec, style, gens, _dedupe(rels))
    if style == "mgs":
        words = [GroupWord.of(w) for w in maximal_green_sequences(lat)]
        rels = [_relation(words[0], w) for w in words[1:]]
        return Presentation(spec, style, gens, _dedupe(rels))
    if style == "path":
        rels = []
        for u in lat.vertices:
            for v in lat.vertices:
                if u != v and lat.leq(v, u):
                    words = sorted((label_word(p) for p in lat.paths(u, v)), key=lambda w: w.tokens())
                    rels += [_relation(words[0], w) for w in words[1:]]
        return Presentation(spec, style, gens, _dedupe(rels))
    index = {v: i for i, v in enumerate(lat.vertices)}
    rels = [(GroupWord.of([Coset(index[a.source])]), GroupWord.of([a.label, Coset(index[a.target])]))
            for a in lat.arrows]
    rels.append((GroupWord.of([Coset(index[lat.bottom])]), GroupWord()))
    return Presentation(spec, style, gens, rels, cosets=list(lat.vertices))


# -- verification --------------------------------------------------------------

class PathValues:
    """phi of the label word of directed paths, with a record of any disagreement."""

    def __init__(self, lat: TorsLattice):
        self.lat = lat
        self.spec = lat.spec
        self._memo: dict = {}
        self.conflicts: list[tuple[tt.Obj, tt.Obj, GroupWord, GroupWord]] = []

    def value(self, u: tt.Obj, v: tt.Obj) -> tuple[BrickElement, GroupWord]:
        key = (u, v)
        if key in self._memo:
            return self._memo[key]
        if u == v:
            res = (BrickElement.one(self.spec), GroupWord())
        else:
            res = None
            for a in self.lat.out_arrows(u):
                if not self.lat.leq(v, a.target):
                    continue
                tail, word = self.value(a.target, v)
                cand = (BrickElement(self.spec, {None: 1, a.label: 1}) * tail, GroupWord.of([a.label]) * word)
                if res is None:
                    res = cand
                elif cand[0] != res[0]:
                    self.conflicts.append((u, v, res[1], cand[1]))
        self._memo[key] = res
        return res


def verify_presentation(spec: AlgebraSpec, styles: Sequence[str] = STYLES) -> list[Report]:
    """Checks (i)-(iv): relations, generator images, path invariance, coset separation."""
    lat = build_lattice(spec)
    pv = PathValues(lat)
    index = {v: i for i, v in enumerate(lat.vertices)}
    cosets = {index[v]: pv.value(v, lat.bottom)[0] for v in lat.vertices}

    rel_rep = Report("phi respects every relation")
    for style in styles:
        pres = presentation(spec, style)
        for lhs, rhs in pres.relations:
            rel_rep.checked += 1
            if phi(spec, lhs, cosets) != phi(spec, rhs, cosets):
                rel_rep.fail(f"[{style}] {lhs} = {rhs}")

    gen_rep = Report("phi(X_S) nontrivial and distinct")
    images: dict[BrickElement, Indec] = {}
    one = BrickElement.one(spec)
    for s in spec.bricks:
        img = phi(spec, GroupWord.of([s]))
        gen_rep.checked += 1
        if img == one:
            gen_rep.fail(f"phi(X[{s}]) = 1")
        if img in images:
            gen_rep.fail(f"phi(X[{s}]) = phi(X[{images[img]}])")
        images[img] = s

    path_rep = Report("path invariance")
    for u in lat.vertices:
        for v in lat.vertices:
            if lat.leq(v, u):
                path_rep.checked += 1
                pv.value(u, v)
    for u, v, w1, w2 in pv.conflicts:
        path_rep.fail(f"{tt.obj_str(u)} -> {tt.obj_str(v)}: {w1} vs {w2}")

    coset_rep = Report("g_T separated by phi")
    seen: dict[BrickElement, tt.Obj] = {}
    for v in lat.vertices:
        coset_rep.checked += 1
        val = cosets[index[v]]
        if val in seen:
            coset_rep.fail(f"g[{tt.obj_str(v)}] and g[{tt.obj_str(seen[val])}] have equal images")
        seen[val] = v
    return [rel_rep, gen_rep, path_rep, coset_rep]


# -- the group functor -----------------------------------------------------------

@lru_cache(maxsize=None)
def group_functor_F(m: MorphW) -> GroupWord:
    """Label word of a path from Fac M down to 0 in tors of the source, as Λ-bricks."""
    w = m.source
    lat = build_lattice(w.algebra)
    low = w.down_obj(m.payload)
    start = lat.vertex_of_torsion(tt.fac(w.algebra, tt.mods(low)))
    path = lat.some_path(start, lat.bottom)
    return GroupWord.of(w.to_lam[a.label] for a in path)


def check_functor(c: CubeComplex) -> list[Report]:
    """Functoriality of phi∘F on composable pairs and separation of co-targeted morphisms."""
    spec = c.spec
    val = {m: phi(spec, group_functor_F(m)) for m in c.morphisms}
    func = Report("phi∘F is a functor")
    for f in c.morphisms:
        for g in c.out_of[f.target]:
            func.checked += 1
            if val[compose(f, g)] != val[g] * val[f]:
                func.fail(f"F({g} ∘ {f})")
    faithful = Report("phi∘F separates co-targeted morphisms")
    groups: dict = {}
    for m in c.morphisms:
        groups.setdefault((m.source, m.target), []).append(m)
    for ms in groups.values():
        seen: dict[BrickElement, MorphW] = {}
        for m in ms:
            faithful.checked += 1
            if val[m] in seen:
                faithful.fail(f"{m} and {seen[val[m]]} have equal images")
            seen[val[m]] = m
    return [func, faithful]


def verify_all(spec: AlgebraSpec) -> list[Report]:
    return verify_presentation(spec) + check_functor(build_cube_complex(spec))
