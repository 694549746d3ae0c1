"""Bricks as arcs on a marked punctured disk.

An arc is stored as ``(source, length)``.  Lifting the disk to its universal
cover turns an arc into an integer interval ``[s, s + l]`` together with all its
translates by ``n``.  Two arcs in minimal position cross in the interior once
for every pair of lifts whose endpoints strictly interleave, and they share a
boundary point whenever two lifted endpoints coincide.  All the geometry used
here reduces to these integer comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .serial import AlgebraSpec, Indec, ext_dim, hom_dim, hom_kind

GREEN, RED = "green", "red"


@dataclass(frozen=True, order=True)
class Arc:
    source: int
    length: int

    def __str__(self) -> str:
        return f"({self.source},{self.length})"

    __repr__ = __str__


@dataclass(frozen=True, order=True)
class ColoredArc:
    arc: Arc
    color: str

    @property
    def key(self):
        return (self.arc.source, self.arc.length, 0 if self.color == GREEN else 1)


@dataclass(frozen=True)
class ArcPattern:
    green: frozenset[Arc]
    red: frozenset[Arc]

    def __post_init__(self):
        object.__setattr__(self, "green", frozenset(self.green))
        object.__setattr__(self, "red", frozenset(self.red))
        if self.green & self.red:
            raise ValueError(f"arcs {sorted(self.green & self.red)} carry both colors")

    @classmethod
    def of(cls, green: Iterable = (), red: Iterable = ()) -> "ArcPattern":
        return cls(frozenset(Arc(*a) for a in green), frozenset(Arc(*a) for a in red))

    @property
    def colored(self) -> list[ColoredArc]:
        out = [ColoredArc(a, GREEN) for a in self.green] + [ColoredArc(a, RED) for a in self.red]
        return sorted(out, key=lambda c: c.key)

    def __len__(self) -> int:
        return len(self.green) + len(self.red)

    def sort_key(self):
        return tuple(c.key for c in self.colored)

    def to_json(self) -> dict:
        return {"green": [[a.source, a.length] for a in sorted(self.green)],
                "red": [[a.source, a.length] for a in sorted(self.red)]}

    @classmethod
    def from_json(cls, obj: dict) -> "ArcPattern":
        return cls.of(map(tuple, obj.get("green", [])), map(tuple, obj.get("red", [])))

    def __str__(self) -> str:
        g = " ".join(map(str, sorted(self.green)))
        r = " ".join(map(str, sorted(self.red)))
        return f"green[{g}] red[{r}]"


# -- basic arc data ------------------------------------------------------

def arcs(spec: AlgebraSpec) -> list[Arc]:
    return [Arc(i, k) for i in spec.vertices() for k in range(1, min(spec.l(i), spec.n) + 1)]


def target(spec: AlgebraSpec, a: Arc) -> int:
    return spec.shift(a.source, a.length)


def is_loop(spec: AlgebraSpec, a: Arc) -> bool:
    return a.length == spec.n


def module_of(a: Arc) -> Indec:
    return Indec(a.source, a.length)


def arc_of(x: Indec) -> Arc:
    return Arc(x.top, x.len)


def rotate(spec: AlgebraSpec, a: Arc, r: int) -> Arc:
    return Arc(spec.shift(a.source, r), a.length)


def rotate_pattern(spec: AlgebraSpec, p: ArcPattern, r: int) -> ArcPattern:
    return ArcPattern(frozenset(rotate(spec, a, r) for a in p.green),
                      frozenset(rotate(spec, a, r) for a in p.red))


# -- intersections -------------------------------------------------------

def _lifts(spec: AlgebraSpec, a1: Arc, a2: Arc) -> Iterator[tuple[int, int, int, int]]:
    """Lifts of a2 that can meet the base lift [s1, s1 + l1] of a1."""
    n = spec.n
    x1, y1 = a1.source, a1.source + a1.length
    for k in range(-2, 3):
        x2 = a2.source + k * n
        y2 = x2 + a2.length
        if y2 >= x1 and x2 <= y1:
            yield x1, y1, x2, y2


def crossings(spec: AlgebraSpec, a1: Arc, a2: Arc) -> int:
    """Number of interior crossings in minimal position."""
    return sum(1 for x1, y1, x2, y2 in _lifts(spec, a1, a2)
               if x1 < x2 < y1 < y2 or x2 < x1 < y2 < y1)


@dataclass(frozen=True)
class Intersection:
    """Case tag with the arcs in the roles (a1, a2) of the case table."""

    tag: str
    first: Arc
    second: Arc
    crossings: int
    ccw: Arc | None = None

    @property
    def interior(self) -> bool:
        return self.tag in ("L-a", "S-f", "S-g")


def classify_intersection(spec: AlgebraSpec, a1: Arc, a2: Arc) -> Intersection:
    """Case tag of the pair, its role assignment and the counterclockwise arc.

    Loop cases (some arc of length n) put the loop first.  Two distinct loops
    always cross twice, so they fall under L-a.  Short cases are decided by
    the crossing count first and then by which endpoints coincide.
    """
    if a1 == a2:
        raise ValueError("classify_intersection needs two distinct arcs")
    c = crossings(spec, a1, a2)
    s1, s2 = a1.source, a2.source
    t1, t2 = target(spec, a1), target(spec, a2)
    if is_loop(spec, a1) or is_loop(spec, a2):
        loop, other = (a1, a2) if is_loop(spec, a1) else (a2, a1)
        if c:
            return Intersection("L-a", loop, other, c)
        if other.source == loop.source:
            return Intersection("L-b", loop, other, c, ccw=loop)
        if target(spec, other) == loop.source:
            return Intersection("L-c", loop, other, c, ccw=other)
        return Intersection("L-d", loop, other, c)
    if c >= 2:
        return Intersection("S-g", a1, a2, c)
    if c == 1:
        return Intersection("S-f", a1, a2, c)
    if t1 == s2 and t2 == s1:
        return Intersection("S-c", a1, a2, c)
    if t1 == s2:
        return Intersection("S-b", a1, a2, c)
    if t2 == s1:
        return Intersection("S-b", a2, a1, c)
    if s1 == s2:
        longer, shorter = (a1, a2) if a1.length > a2.length else (a2, a1)
        return Intersection("S-d", longer, shorter, c, ccw=longer)
    if t1 == t2:
        shorter, longer = (a1, a2) if a1.length < a2.length else (a2, a1)
        return Intersection("S-e", shorter, longer, c, ccw=shorter)
    return Intersection("S-a", a1, a2, c)


def predicted_claims(spec: AlgebraSpec, inter: Intersection) -> list[tuple[str, Arc, Arc, object]]:
    """Module-level consequences of a case, as (quantity, from, to, expected) claims.

    Quantities: ``hom`` (dimension), ``ext`` (dimension), ``kind`` (hom_kind),
    ``nonzero`` (hom nonzero) and ``proper_if_nonzero``.
    """
    a, b = inter.first, inter.second
    tag = inter.tag
    fits_a = a.length + b.length <= spec.l(a.source)
    fits_b = a.length + b.length <= spec.l(b.source)
    if tag in ("L-a", "S-g"):
        return [("nonzero", a, b, True), ("nonzero", b, a, True)]
    if tag in ("L-b", "S-d"):
        return [("kind", a, b, "epi"), ("hom", b, a, 0), ("ext", b, a, 0)]
    if tag == "L-c":
        return [("kind", b, a, "mono"), ("hom", a, b, 0), ("ext", a, b, 0)]
    if tag == "S-e":
        return [("kind", a, b, "mono"), ("hom", b, a, 0), ("ext", b, a, 0)]
    if tag in ("L-d", "S-a"):
        return [("hom", a, b, 0), ("hom", b, a, 0), ("ext", a, b, 0), ("ext", b, a, 0)]
    if tag == "S-b":
        return [("hom", a, b, 0), ("hom", b, a, 0), ("ext", b, a, 0), ("ext", a, b, int(fits_a))]
    if tag == "S-c":
        return [("hom", a, b, 0), ("hom", b, a, 0),
                ("ext", a, b, int(fits_a)), ("ext", b, a, int(fits_b))]
    if tag == "S-f":
        return [("some_nonzero", a, b, True), ("proper_if_nonzero", a, b, True),
                ("proper_if_nonzero", b, a, True)]
    raise AssertionError(tag)


def check_claims(spec: AlgebraSpec, inter: Intersection) -> list[str]:
    """Claims of the case that disagree with module-level Hom/Ext; empty when consistent."""
    bad = []
    for what, a, b, expected in predicted_claims(spec, inter):
        x, y = module_of(a), module_of(b)
        if what == "hom":
            got = hom_dim(spec, x, y)
        elif what == "ext":
            got = ext_dim(spec, x, y)
        elif what == "kind":
            got = hom_kind(spec, x, y)
        elif what == "nonzero":
            got = hom_dim(spec, x, y) > 0
        elif what == "some_nonzero":
            got = hom_dim(spec, x, y) > 0 or hom_dim(spec, y, x) > 0
        elif what == "proper_if_nonzero":
            got = hom_kind(spec, x, y) in ("none", "proper")
        else:
            raise AssertionError(what)
        if got != expected:
            bad.append(f"{inter.tag} {what}({x},{y}) = {got}, expected {expected}")
    return bad


# -- admissibility -------------------------------------------------------

def pair_violation(spec: AlgebraSpec, c1: ColoredArc, c2: ColoredArc) -> str | None:
    """The first admissibility condition the two colored arcs violate, or None."""
    if c1.arc == c2.arc:
        return None if c1.color == c2.color else "disjoint"
    inter = classify_intersection(spec, c1.arc, c2.arc)
    if inter.interior:
        return "a"
    color = {c1.arc: c1.color, c2.arc: c2.color}
    if inter.ccw is not None:
        cw = inter.second if inter.ccw == inter.first else inter.first
        if color[inter.ccw] != RED or color[cw] != GREEN:
            return "b"
    for x, y in ((c1, c2), (c2, c1)):
        if target(spec, x.arc) == y.arc.source and x.color == GREEN and y.color == RED:
            if x.arc.length + y.arc.length <= spec.l(x.arc.source):
                return "c"
    return None


def is_admissible(spec: AlgebraSpec, p: ArcPattern) -> tuple[bool, tuple | None]:
    """Admissibility with the first violation as ``(condition, arc, arc)``."""
    cs = p.colored
    for i, c1 in enumerate(cs):
        for c2 in cs[i + 1:]:
            v = pair_violation(spec, c1, c2)
            if v:
                return False, (v, c1, c2)
    return True, None


def colored_arcs(spec: AlgebraSpec) -> list[ColoredArc]:
    return sorted((ColoredArc(a, col) for a in arcs(spec) for col in (GREEN, RED)), key=lambda c: c.key)


def compatibility(spec: AlgebraSpec) -> dict[ColoredArc, set[ColoredArc]]:
    cs = colored_arcs(spec)
    ok = {c: set() for c in cs}
    for i, c1 in enumerate(cs):
        for c2 in cs[i + 1:]:
            if pair_violation(spec, c1, c2) is None:
                ok[c1].add(c2)
                ok[c2].add(c1)
    return ok


def _pattern(chosen: Iterable[ColoredArc]) -> ArcPattern:
    chosen = list(chosen)
    return ArcPattern(frozenset(c.arc for c in chosen if c.color == GREEN),
                      frozenset(c.arc for c in chosen if c.color == RED))


def _search(order: Sequence[ColoredArc], ok, start: int, prefix: tuple[ColoredArc, ...]) -> Iterator[ArcPattern]:
    """Backtracking over colored arcs in canonical order with pairwise pruning."""

    def rec(i: int, chosen: list[ColoredArc]):
        if i == len(order):
            if all(not all(c in ok[x] for x in chosen) for c in order if c not in chosen):
                yield _pattern(chosen)
            return
        c = order[i]
        if all(c in ok[x] for x in chosen):
            chosen.append(c)
            yield from rec(i + 1, chosen)
            chosen.pop()
            # skipping c only pays off if something already chosen or still to come blocks it
            if not any(c not in ok[x] for x in chosen) and all(
                    c in ok[y] for y in order[i + 1:] if all(y in ok[x] for x in chosen)):
                return
        yield from rec(i + 1, chosen)

    yield from rec(start, list(prefix))


def enumerate_maximal_patterns(spec: AlgebraSpec, parallel: int = 1) -> list[ArcPattern]:
    """All maximal admissible patterns, sorted canonically."""
    ok = compatibility(spec)
    order = colored_arcs(spec)
    if parallel > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(parallel) as pool:
            chunks = pool.map(_branch, [(spec, i) for i in range(len(order) + 1)])
            found = {p for chunk in chunks for p in chunk}
    else:
        found = set(_search(order, ok, 0, ()))
    return sorted(found, key=ArcPattern.sort_key)


def _branch(args) -> list[ArcPattern]:
    """Maximal patterns whose first colored arc (in canonical order) is ``order[i]``."""
    spec, i = args
    ok = compatibility(spec)
    order = colored_arcs(spec)
    if i == len(order):
        return []
    head = order[i]
    # everything before i is excluded; maximality is still tested against the full order
    out = []
    for p in _search(order, ok, i + 1, (head,)):
        chosen = set(p.colored)
        if any(c not in chosen and all(c in ok[x] for x in chosen) for c in order):
            continue
        out.append(p)
    return out


def extend_to_maximal(spec: AlgebraSpec, p: ArcPattern) -> ArcPattern | None:
    """Greedy single-arc extension, green arcs first; None if p is not admissible."""
    if not is_admissible(spec, p)[0]:
        return None
    ok = compatibility(spec)
    chosen = list(p.colored)
    for c in sorted(colored_arcs(spec), key=lambda c: (c.color != GREEN, c.key)):
        if c not in chosen and all(c in ok[x] for x in chosen):
            chosen.append(c)
    return _pattern(chosen)


def is_maximal(spec: AlgebraSpec, p: ArcPattern) -> bool:
    if not is_admissible(spec, p)[0]:
        return False
    ok = compatibility(spec)
    chosen = p.colored
    return not any(c not in chosen and all(c in ok[x] for x in chosen) for c in colored_arcs(spec))


# -- arc paths -----------------------------------------------------------

@dataclass(frozen=True)
class PathResult:
    module: Indec | None
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.module is not None


def compose_path(spec: AlgebraSpec, steps: Sequence[tuple[Arc, bool]]) -> PathResult:
    """Compose an arc path; each step is ``(arc, forward)``.

    The walk is followed on the universal cover.  It is an arc path when the
    net displacement from the start is a counterclockwise boundary arc of a
    brick length, i.e. lies in ``[1, min(l(v), n)]``.
    """
    if not steps:
        raise ValueError("an arc path needs at least one step")
    first, fwd = steps[0]
    start = first.source if fwd else target(spec, first)
    pos = start
    for a, forward in steps:
        expected = a.source if forward else target(spec, a)
        if (pos - 1) % spec.n + 1 != expected:
            return PathResult(None, "endpoint mismatch")
        pos += a.length if forward else -a.length
    total = pos - start
    if not 1 <= total <= min(spec.l(start), spec.n):
        return PathResult(None, "not a brick length")
    return PathResult(Indec(start, total))


def reverse_path(steps: Sequence[tuple[Arc, bool]]) -> list[tuple[Arc, bool]]:
    return [(a, not f) for a, f in reversed(steps)]


def is_proper_path(spec: AlgebraSpec, steps: Sequence[tuple[Arc, bool]]) -> bool:
    """Every contiguous subpath is an arc path or the reverse of one."""
    for i in range(len(steps)):
        for j in range(i + 1, len(steps) + 1):
            sub = steps[i:j]
            if not (compose_path(spec, sub).ok or compose_path(spec, reverse_path(sub)).ok):
                return False
    return True


# -- drawing -------------------------------------------------------------

def _angle(spec: AlgebraSpec, v: float) -> float:
    return math.pi / 2 + 2 * math.pi * (v - 1) / spec.n


def arc_points(spec: AlgebraSpec, a: Arc, radius: float = 2.0, samples: int = 48) -> list[tuple[float, float]]:
    """A polyline for the arc hugging the boundary, deeper for longer arcs."""
    depth = 0.2 + 0.55 * a.length / spec.n
    pts = []
    for k in range(samples + 1):
        u = k / samples
        theta = _angle(spec, a.source + u * a.length)
        r = radius * (1 - depth * math.sin(math.pi * u))
        pts.append((r * math.cos(theta), r * math.sin(theta)))
    return pts


def marked_points(spec: AlgebraSpec, radius: float = 2.0) -> list[tuple[int, float, float]]:
    return [(v, radius * math.cos(_angle(spec, v)), radius * math.sin(_angle(spec, v))) for v in spec.vertices()]


def to_tikz(spec: AlgebraSpec, p: ArcPattern) -> str:
    lines = [r"\begin{tikzpicture}[scale=0.75]",
             r"  \draw (0,0) circle[radius=2cm];",
             r"  \draw (-.1,-.1) to (.1,.1);",
             r"  \draw (-.1,.1) to (.1,-.1);"]
    for c in p.colored:
        color = "green!60!black" if c.color == GREEN else "red"
        coords = " ".join(f"({x:.3f},{y:.3f})" for x, y in arc_points(spec, c.arc, samples=12))
        lines.append(f"  \\draw[very thick,{color}] plot [smooth] coordinates{{{coords}}};")
    for v, x, y in marked_points(spec):
        lines.append(f"  \\node at ({x:.3f},{y:.3f}) [draw,fill,circle,scale=0.4]{{}};")
        lines.append(f"  \\node at ({1.15 * x:.3f},{1.15 * y:.3f}) {{${v}$}};")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines)


def to_svg(spec: AlgebraSpec, p: ArcPattern, size: int = 240) -> str:
    scale = size / 5.0
    cx = cy = size / 2

    def tr(x, y):
        return cx + scale * x, cy - scale * y

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
           f'<circle cx="{cx}" cy="{cy}" r="{2 * scale}" fill="none" stroke="black"/>',
           f'<path d="M{cx - 4},{cy - 4} L{cx + 4},{cy + 4} M{cx - 4},{cy + 4} L{cx + 4},{cy - 4}" stroke="black"/>']
    for c in p.colored:
        pts = [tr(x, y) for x, y in arc_points(spec, c.arc)]
        d = "M" + " L".join(f"{x:.2f},{y:.2f}" for x, y in pts)
        color = "#2a9d2a" if c.color == GREEN else "#d62728"
        out.append(f'<path d="{d}" fill="none" stroke="{color}" stroke-width="3"/>')
    for v, x, y in marked_points(spec):
        px, py = tr(x, y)
        lx, ly = tr(1.15 * x, 1.15 * y)
        out.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="3" fill="black"/>')
        out.append(f'<text x="{lx:.2f}" y="{ly:.2f}" text-anchor="middle" dominant-baseline="middle">{v}</text>')
    out.append("</svg>")
    return "\n".join(out)
