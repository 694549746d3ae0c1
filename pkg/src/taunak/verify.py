"""Cross-pipeline verification suite.

Each check recomputes one identity two independent ways (closed formula
against linear algebra, arc model against module theory, category against
lattice) and records counterexamples.  ``run_all`` is what ``taunak verify
--all`` executes.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Callable

from . import arcs as am
from . import oracles as orc
from . import tilting as tt
from . import wide as wd
from .cubes import (Report, build_cube_complex, check_cubical, check_forward_spheres, check_last_bricks,
                    check_links_flag)
from .picture import check_functor, verify_presentation
from .serial import AlgebraSpec, ext_dim, hom_dim, hom_kind
from .smc import SemibrickPair, is_mutation_compatible, is_semibrick_pair, mutate_smc
from .tors import build_lattice, label_oracle, x_of


def check_oracles(spec: AlgebraSpec, with_ext: bool = True) -> Report:
    rep = Report("closed forms agree with linear algebra")
    for x, y in orc.all_pairs(spec):
        rep.checked += 1
        if hom_dim(spec, x, y) != orc.hom_dim_rep(spec, x, y):
            rep.fail(f"hom({x},{y})")
        if hom_kind(spec, x, y) != orc.hom_kind_rep(spec, x, y):
            rep.fail(f"kind({x},{y})")
        if with_ext and ext_dim(spec, x, y) != orc.ext_dim_rep(spec, x, y):
            rep.fail(f"ext({x},{y})")
    return rep


def check_arc_cases(spec: AlgebraSpec) -> Report:
    rep = Report("intersection cases agree with Hom/Ext")
    for a, b in permutations(am.arcs(spec), 2):
        rep.checked += 1
        for msg in am.check_claims(spec, am.classify_intersection(spec, a, b)):
            rep.fail(msg)
    return rep


def check_admissibility(spec: AlgebraSpec) -> Report:
    """Pairwise admissibility equals the module-level semibrick-pair and compatibility conditions."""
    rep = Report("admissibility equals module conditions")
    for c1, c2 in combinations(am.colored_arcs(spec), 2):
        if c1.arc == c2.arc:
            continue
        pair = SemibrickPair.from_pattern(am.ArcPattern(
            [c.arc for c in (c1, c2) if c.color == am.GREEN], [c.arc for c in (c1, c2) if c.color == am.RED]))
        module_ok = is_semibrick_pair(spec, pair)[0] and is_mutation_compatible(spec, pair)[0]
        rep.checked += 1
        if (am.pair_violation(spec, c1, c2) is None) != module_ok:
            rep.fail(f"{c1.arc}/{c1.color} with {c2.arc}/{c2.color}")
    return rep


def check_census(spec: AlgebraSpec, parallel: int = 1) -> Report:
    """SttPair -> X(U) is a bijection onto the maximal arc patterns."""
    rep = Report("X(U) is a bijection onto maximal patterns")
    lat = build_lattice(spec)
    patterns = am.enumerate_maximal_patterns(spec, parallel)
    images = [SemibrickPair(*x_of(lat, v)).pattern() for v in lat.vertices]
    rep.checked = len(images)
    if len(set(images)) != len(images):
        rep.fail("X is not injective")
    if set(images) != set(patterns):
        rep.fail(f"{len(set(images) ^ set(patterns))} patterns differ")
    for p in patterns:
        if len(p) != spec.n:
            rep.fail(f"maximal pattern {p} has {len(p)} arcs")
    return rep


def check_lattice(spec: AlgebraSpec) -> Report:
    rep = Report("lattice labels and degrees")
    lat = build_lattice(spec)
    if not tt.all_stt(spec).degree_ok():
        rep.fail("exchange graph is not regular")
    for a in lat.arrows:
        rep.checked += 1
        if label_oracle(lat, a) != [a.label]:
            rep.fail(f"{tt.obj_str(a.source)} -> {tt.obj_str(a.target)}: {a.label} vs {label_oracle(lat, a)}")
    return rep


def check_smc_mutation(spec: AlgebraSpec) -> Report:
    rep = Report("smc mutation follows lattice arrows")
    lat = build_lattice(spec)
    for a in lat.arrows:
        rep.checked += 1
        src, dst = SemibrickPair(*x_of(lat, a.source)), SemibrickPair(*x_of(lat, a.target))
        if mutate_smc(spec, src, a.label) != dst:
            rep.fail(f"mutation of {src} at {a.label}")
    return rep


def check_wides(spec: AlgebraSpec) -> Report:
    rep = Report("wide subcategories re-present as algebras")
    wides = wd.all_wides(spec)
    if len(wides) != len(tt.all_stt(spec).vertices):
        rep.fail(f"{len(wides)} wide subcategories for {len(tt.all_stt(spec).vertices)} pairs")
    for w in wides:
        rep.checked += 1
        if set(w.members) != orc.filt_members(spec, w.simples):
            rep.fail(f"{w}: members differ from the Filt closure")
    return rep


def check_e_maps(spec: AlgebraSpec) -> Report:
    """E_u is injective for every rigid u, and independent of the summand order."""
    rep = Report("E-maps are bijections, independent of order")
    w = wd.whole(spec)
    for u in w.rigid_objects:
        rep.checked += 1
        table = wd.e_inverse_table(w, u)
        if len(table) != len(wd.e_domain(w, u)):
            rep.fail(f"E_{tt.obj_str(u)} not injective")
        if len(u) >= 2:
            for y in wd.e_domain(w, u):
                images = {wd.e_map(w, u, y, order) for order in permutations(sorted(u))}
                if len(images) != 1:
                    rep.fail(f"E_{tt.obj_str(u)}({y}) depends on the order: {images}")
    return rep


CHECKS: dict[str, Callable[[AlgebraSpec], list[Report]]] = {
    "oracles": lambda s: [check_oracles(s)],
    "arcs": lambda s: [check_arc_cases(s), check_admissibility(s)],
    "census": lambda s: [check_census(s)],
    "lattice": lambda s: [check_lattice(s), check_smc_mutation(s)],
    "wide": lambda s: [check_wides(s), check_e_maps(s)],
    "cubical": lambda s: check_cubical(build_cube_complex(s)) + [check_last_bricks(build_cube_complex(s)),
                                                                 check_forward_spheres(build_cube_complex(s))],
    "flag": lambda s: [_flag_report(s)],
    "picture": lambda s: verify_presentation(s) + check_functor(build_cube_complex(s)),
}


def _flag_report(spec: AlgebraSpec) -> Report:
    rep = Report("links are flag")
    _, per = check_links_flag(build_cube_complex(spec))
    for w, ok in per.items():
        rep.checked += 1
        if not ok:
            rep.fail(f"link of {w} is not flag")
    return rep


def run_all(spec: AlgebraSpec, only: list[str] | None = None) -> list[Report]:
    out = []
    for name, fn in CHECKS.items():
        if only is None or name in only:
            out += fn(spec)
    return out
