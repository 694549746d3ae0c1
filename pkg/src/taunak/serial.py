"""Serial module arithmetic for Nakayama algebras.

A connected Nakayama algebra is fixed by its number of simples ``n`` and its
Kupisch series ``l(1), ..., l(n)``.  Every indecomposable is uniserial, written
``M(i, j)``: top ``S_i`` and composition factors ``S_i, S_{i+1}, ..., S_{i+j-1}``
read cyclically.  Everything in this module is a closed formula in ``(i, j)``.

Wide subcategories of a Nakayama algebra are again module categories of
(possibly disconnected) Nakayama algebras, so :class:`AlgebraSpec` also allows
a disjoint union of connected blocks.  Vertices of block ``b`` are numbered
consecutively and arithmetic wraps inside the block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence


class SpecError(ValueError):
    """Raised for an invalid Kupisch series or malformed module token."""


@dataclass(frozen=True, order=True)
class Indec:
    """The serial module M(top, len)."""

    top: int
    len: int

    def __str__(self) -> str:
        return f"M({self.top},{self.len})"

    __repr__ = __str__


@dataclass(frozen=True, order=True)
class SignedIndec:
    """An indecomposable object of the two-term category: a module or a shifted projective."""

    base: Indec
    shifted: bool = False

    def __str__(self) -> str:
        return f"{self.base}[1]" if self.shifted else str(self.base)

    __repr__ = __str__


@dataclass(frozen=True)
class AlgebraSpec:
    """A Nakayama algebra given by its Kupisch series.

    ``blocks`` lists the sizes of the connected components (consecutive
    vertex ranges).  User input is always connected; disjoint unions only
    arise when a wide subcategory is re-presented as an algebra.
    """

    n: int
    kupisch: tuple[int, ...]
    blocks: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "kupisch", tuple(int(x) for x in self.kupisch))
        if not self.blocks:
            object.__setattr__(self, "blocks", (self.n,) if self.n else ())

    # -- vertex arithmetic ------------------------------------------------
    @cached_property
    def _block_of(self) -> dict[int, tuple[int, int]]:
        out = {}
        offset = 0
        for size in self.blocks:
            for v in range(offset + 1, offset + size + 1):
                out[v] = (offset, size)
            offset += size
        return out

    def l(self, i: int) -> int:
        return self.kupisch[i - 1]

    def shift(self, i: int, k: int) -> int:
        """The vertex ``(i + k)`` reduced into the block of ``i``."""
        offset, size = self._block_of[i]
        return offset + (i - offset - 1 + k) % size + 1

    def block_size(self, i: int) -> int:
        return self._block_of[i][1]

    @property
    def connected(self) -> bool:
        return len(self.blocks) == 1

    @property
    def is_linear(self) -> bool:
        """True for the path algebra quotient of A_n (only meaningful when connected)."""
        return self.l(self.n) == 1

    @property
    def kind(self) -> str:
        if not self.connected:
            return "union"
        return "linear" if self.is_linear else "cyclic"

    @property
    def rank(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(1, self.n + 1)

    # -- modules ----------------------------------------------------------
    @cached_property
    def indecs(self) -> tuple[Indec, ...]:
        return tuple(Indec(i, j) for i in self.vertices() for j in range(1, self.l(i) + 1))

    @cached_property
    def bricks(self) -> tuple[Indec, ...]:
        return tuple(x for x in self.indecs if x.len <= self.block_size(x.top))

    def projective(self, i: int) -> Indec:
        return Indec(i, self.l(i))

    @cached_property
    def projectives(self) -> tuple[Indec, ...]:
        return tuple(self.projective(i) for i in self.vertices())

    @cached_property
    def simples(self) -> tuple[Indec, ...]:
        return tuple(Indec(i, 1) for i in self.vertices())

    def is_projective(self, x: Indec) -> bool:
        return x.len == self.l(x.top)

    def is_injective(self, x: Indec) -> bool:
        prev = self.shift(x.top, -1)
        # M(i, j) is a proper submodule of M(i-1, j+1) whenever the latter exists.
        return not (self.has_arrow(prev) and self.l(prev) >= x.len + 1)

    def has_arrow(self, v: int) -> bool:
        """Whether the arrow v -> v+1 exists (i.e. is nonzero)."""
        return self.l(v) > 1

    def contains(self, x: Indec) -> bool:
        return 1 <= x.top <= self.n and 1 <= x.len <= self.l(x.top)

    def factors(self, x: Indec) -> tuple[int, ...]:
        """Composition factors of ``x`` from top to socle."""
        return tuple(self.shift(x.top, k) for k in range(x.len))

    def socle(self, x: Indec) -> int:
        return self.shift(x.top, x.len - 1)

    def target(self, x: Indec) -> int:
        """The vertex one past the socle: t(a) for the arc of ``x``."""
        return self.shift(x.top, x.len)

    def __str__(self) -> str:
        ks = ",".join(map(str, self.kupisch))
        if self.connected:
            return f"({self.n},[{ks}])"
        return f"({self.n},[{ks}],blocks={list(self.blocks)})"


def _check_block(kup: Sequence[int]) -> None:
    m = len(kup)
    for idx, val in enumerate(kup, start=1):
        if val < 1:
            raise SpecError(f"l({idx}) = {val} is not positive")
    for idx in range(1, m + 1):
        prev = kup[(idx - 2) % m]
        if kup[idx - 1] < prev - 1:
            raise SpecError(f"l({idx}) = {kup[idx - 1]} < l({(idx - 2) % m + 1}) - 1")
    for idx in range(1, m):
        if kup[idx - 1] <= 1:
            raise SpecError(f"l({idx}) = {kup[idx - 1]} must exceed 1 for {idx} < n")


def validate_spec(n: int, kupisch: Sequence[int]) -> AlgebraSpec:
    """Validate a connected Kupisch series and return its spec."""
    kup = [int(x) for x in kupisch]
    if n < 1:
        raise SpecError("n must be positive")
    if len(kup) != n:
        raise SpecError(f"Kupisch series has {len(kup)} entries, expected {n}")
    _check_block(kup)
    return AlgebraSpec(n, tuple(kup))


def union_spec(parts: Sequence[Sequence[int]]) -> AlgebraSpec:
    """Disjoint union of connected Nakayama algebras, each given by its Kupisch list."""
    kup: list[int] = []
    for p in parts:
        _check_block(list(p))
        kup.extend(p)
    return AlgebraSpec(len(kup), tuple(kup), tuple(len(p) for p in parts))


def spec_from_json(obj: dict) -> AlgebraSpec:
    try:
        return validate_spec(int(obj["n"]), obj["kupisch"])
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed algebra object: {obj!r}") from exc


def spec_to_json(spec: AlgebraSpec) -> dict:
    return {"n": spec.n, "kupisch": list(spec.kupisch)}


# -- Hom / Ext -----------------------------------------------------------

@lru_cache(maxsize=None)
def hom_windows(spec: AlgebraSpec, x: Indec, y: Indec) -> tuple[int, ...]:
    """Lengths t of the common serial windows: quotient M(i,t) of x equal to a submodule of y.

    Each window contributes one basis vector of Hom(x, y).
    """
    if spec._block_of[x.top] != spec._block_of[y.top]:
        return ()
    return tuple(
        t for t in range(1, min(x.len, y.len) + 1)
        if x.top == spec.shift(y.top, y.len - t)
    )


def hom_dim(spec: AlgebraSpec, x: Indec | None, y: Indec | None) -> int:
    if x is None or y is None:
        return 0
    return len(hom_windows(spec, x, y))


def hom_kind(spec: AlgebraSpec, x: Indec, y: Indec) -> str:
    """One of ``none``, ``iso``, ``mono``, ``epi``, ``proper``."""
    ws = hom_windows(spec, x, y)
    if not ws:
        return "none"
    if x == y:
        return "iso"
    if x.len in ws:
        return "mono"
    if y.len in ws:
        return "epi"
    return "proper"


def syzygy(spec: AlgebraSpec, x: Indec) -> Indec | None:
    if spec.is_projective(x):
        return None
    return Indec(spec.shift(x.top, x.len), spec.l(x.top) - x.len)


def ext_dim(spec: AlgebraSpec, x: Indec, y: Indec) -> int:
    """dim Ext^1(x, y) from 0 -> Omega x -> P_0 -> x -> 0."""
    if spec.is_projective(x):
        return 0
    p0 = spec.projective(x.top)
    return hom_dim(spec, syzygy(spec, x), y) - hom_dim(spec, p0, y) + hom_dim(spec, x, y)


def tau(spec: AlgebraSpec, x: Indec) -> Indec | None:
    if spec.is_projective(x):
        return None
    return Indec(spec.shift(x.top, 1), x.len)


def tau_inverse(spec: AlgebraSpec, x: Indec) -> Indec | None:
    if spec.is_injective(x):
        return None
    return Indec(spec.shift(x.top, -1), x.len)


def is_brick(spec: AlgebraSpec, x: Indec) -> bool:
    return x.len <= spec.block_size(x.top)


def quotient(x: Indec, t: int) -> Indec | None:
    """x modulo its submodule of length t."""
    return Indec(x.top, x.len - t) if t < x.len else None


def radical_window(spec: AlgebraSpec, sources: Iterable[Indec], y: Indec) -> int:
    """Length of rad(U, y): the largest image of a non-isomorphism from a summand of U into y.

    For a uniserial target the images of maps are nested, so the sum of the
    images is the largest one.
    """
    best = 0
    for u in sources:
        for t in hom_windows(spec, u, y):
            if u == y and t == y.len:
                continue
            best = max(best, t)
    return best


def in_fac(x: Indec, y: Indec) -> bool:
    """Whether y is a quotient of x (Fac of a uniserial module, indecomposable part)."""
    return x.top == y.top and y.len <= x.len


# -- notation ------------------------------------------------------------

_TOKEN = re.compile(r"^\s*M\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(\[1\])?\s*$")


def parse_signed(token: str, spec: AlgebraSpec | None = None) -> SignedIndec:
    m = _TOKEN.match(token)
    if not m:
        raise SpecError(f"cannot parse module token {token!r}")
    x = SignedIndec(Indec(int(m.group(1)), int(m.group(2))), bool(m.group(3)))
    if spec is not None:
        if not spec.contains(x.base):
            raise SpecError(f"{x.base} is not a module over {spec}")
        if x.shifted and not spec.is_projective(x.base):
            raise SpecError(f"{x.base} is not projective, so {x} is not allowed")
    return x


def parse_indec(token: str, spec: AlgebraSpec | None = None) -> Indec:
    x = parse_signed(token, spec)
    if x.shifted:
        raise SpecError(f"unexpected shift in {token!r}")
    return x.base


def parse_list(text: str, spec: AlgebraSpec | None = None) -> list[SignedIndec]:
    """Parse a comma/whitespace separated token list such as ``"M(1,2) M(2,1)[1]"``."""
    tokens = re.findall(r"M\(\s*\d+\s*,\s*\d+\s*\)(?:\[1\])?", text)
    leftover = re.sub(r"M\(\s*\d+\s*,\s*\d+\s*\)(?:\[1\])?", "", text)
    if leftover.strip(" ,;+⊔\t\n"):
        raise SpecError(f"cannot parse module list {text!r}")
    return [parse_signed(t, spec) for t in tokens]


def fmt_objects(objs: Iterable[SignedIndec | Indec]) -> list[str]:
    return [str(o) for o in sorted(objs, key=_sort_key)]


def _sort_key(o):
    if isinstance(o, Indec):
        return (False, o)
    return (o.shifted, o.base)
