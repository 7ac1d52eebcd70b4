"""The property catalogue.  Every check builds an instance from an
:class:`InstanceSpec` and evaluates one claim at structured witness points,
computing the two sides by separate routes where the claim is an
equivalence."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .. import exactnum as qn
from ..errors import GenriError, InputError
from ..exactnum import EQ, Vec, mpq
from ..genpoly import (
    Constraint, GenPolyhedron, UnionSet, affine_hull, closure, find_point, homogenize_cone,
    linear_image_fm, negate, ri_representation, same_set, singleton, translate, union_to_json,
)
from ..interiors import InteriorKind, cone_at, interior_membership, normal_cone
from ..cover import covers
from ..nearconvex import (
    NEITHER, NearlyConvexSet, characterizations, classify, is_convex, nc_linear_image, nc_translate,
    qri_of_nearly_convex,
)
from ..separation import point_set_separation, qri_disjointness_equivalence
from ..setmap import (
    SetMap, aff_graph_check, domain_of, epi_formula_check, graph_theorem_check, range_of,
)
from .brute import BruteOracle
from .generate import (
    InstanceSpec, gen_convex_map, gen_nc_map, gen_nearly_convex, gen_nonconvex_map, gen_pl_function,
    gen_polyhedron, gen_union, member_points, witness_points,
)

ALL_KINDS = tuple(k.value for k in InteriorKind)


@dataclass
class Outcome:
    """Result of one instance: ``status`` is ``pass``, ``na`` or ``violation``;
    discrepancies are flagged findings that are not violations."""

    status: str = "pass"
    reason: str = ""
    violations: list[dict] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)

    def violate(self, **detail) -> None:
        self.status = "violation"
        self.violations.append(detail)

    def note(self, key: str, k: int = 1) -> None:
        self.notes[key] = self.notes.get(key, 0) + k


def na(reason: str) -> Outcome:
    return Outcome("na", reason)


@dataclass(frozen=True)
class Check:
    name: str
    make: Callable[[InstanceSpec], object]
    evaluate: Callable[[object, InstanceSpec], Outcome]
    dims: tuple[int, ...] = (1, 2, 3, 4)
    coeff_bound: int = 4
    pieces: int = 3
    corpus: tuple[str, ...] = ()
    # union view of an instance and its inverse, for shrinking
    as_union: Callable[[object], UnionSet] | None = None
    from_union: Callable[[object, UnionSet], object] | None = None


def verdicts(S: UnionSet, x: Vec, kinds: Sequence[str] = ALL_KINDS) -> dict[str, bool]:
    return {k: interior_membership(k, S, x).verdict for k in kinds}


def certificates(S: UnionSet, x: Vec, kinds: Sequence[str] = ALL_KINDS) -> dict:
    """Recomputed production certificates, plus brute-force verdicts in the
    plane and on the line."""
    out = {"oracle": {k: {"verdict": c.verdict, "evidence": c.to_json()}
                      for k in kinds for c in [interior_membership(k, S, x)]}}
    out["brute"] = None
    if S.dim <= 2:
        try:
            b = BruteOracle(S).verdicts(x)
            out["brute"] = {k: b[k] for k in kinds}
        except InputError:
            pass
    return out


def _rng(spec: InstanceSpec, what: str) -> random.Random:
    return spec.rng("check", what)


# ---------------------------------------------------------------- interior chain

CHAIN = (("ri", "sqri"), ("sqri", "iri"), ("iri", "qri"), ("ri", "rint"), ("rint", "iri"),
         ("rint", "ri"), ("qi", "qri"))


def eval_chain(S: UnionSet, spec: InstanceSpec) -> Outcome:
    out = Outcome()
    for x in witness_points(S, spec):
        v = verdicts(S, x)
        for a, b in CHAIN:
            if v[a] and not v[b]:
                out.violate(point=qn.fmt_vec(x), implication=f"{a}=>{b}", certificates=certificates(S, x, (a, b)))
    return out


def eval_collapse(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """A convex polyhedron: the chain kinds coincide everywhere and the
    relative interior is nonempty; the quasi-interior joins them exactly when
    the polyhedron is full-dimensional (otherwise it is empty)."""
    out = Outcome()
    P = S.pieces[0]
    full = affine_hull(P).flat_dim == S.dim
    out.note("full_dimensional" if full else "lower_dimensional")
    seen_ri = False
    for x in witness_points(S, spec):
        v = verdicts(S, x)
        seen_ri |= v["ri"]
        chain = {v[k] for k in ("ri", "rint", "sqri", "iri", "qri")}
        if len(chain) > 1:
            out.violate(point=qn.fmt_vec(x), verdicts=v, certificates=certificates(S, x))
        elif full and v["qi"] != v["ri"]:
            out.violate(point=qn.fmt_vec(x), verdicts=v, certificates=certificates(S, x))
        elif not full and v["qi"]:
            out.violate(point=qn.fmt_vec(x), verdicts=v, reason="quasi-interior point of a lower-dimensional set")
        elif not full and v["ri"]:
            out.note("qi_empty_lower_dim_points")
    if not seen_ri:
        out.violate(point=None, reason="no relative interior point among the witnesses")
    return out


# ---------------------------------------------------------------- betweenness

def betweenness_check(S: UnionSet, x: Vec) -> bool:
    """For every ``z`` in ``S`` some ``z0`` in ``S`` has ``x`` strictly between
    ``z`` and ``z0``; equivalently ``cone(x - S)`` lies in ``cone(S - x)``.  The
    reflected pieces ``2x - P`` give ``cone(x - P)`` directly."""
    x = tuple(x)
    if not S.contains(x):
        return False
    mine = []
    for part in cone_at(S, x).parts:
        mine.append(part.closed if part.exact else part.open_part())
    mine.append(singleton(qn.zeros(S.dim)))
    two_x = qn.scale(mpq(2), x)
    for P in S.pieces:
        part = homogenize_cone(translate(negate(P), two_x), x)
        target = part.closed if part.exact else part.open_part()
        if not covers(target, mine).covered:
            return False
    return True


def eval_betweenness(S: UnionSet, spec: InstanceSpec) -> Outcome:
    out = Outcome()
    for x in member_points(S, witness_points(S, spec)):
        iri = interior_membership("iri", S, x).verdict
        betw = betweenness_check(S, x)
        if iri and not betw:
            out.violate(point=qn.fmt_vec(x), iri=True, betweenness=False,
                        certificates=certificates(S, x, ("iri",)))
        elif betw and not iri:
            out.discrepancies.append({"point": qn.fmt_vec(x), "iri": False, "betweenness": True,
                                      "instance": union_to_json(S),
                                      "certificates": certificates(S, x, ("iri",))})
    return out


# ---------------------------------------------------------------- segments

SEG_KINDS = ("ri", "sqri", "iri", "qri")


def make_seg(spec: InstanceSpec) -> UnionSet:
    if spec.seed % 2:
        return gen_nearly_convex(spec)
    return UnionSet.single(gen_polyhedron(spec))


def eval_seg(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """Convex sets: each interior kind is stable along segments towards any
    member.  Nearly convex sets: a member point on such a segment from a
    quasi-relative interior point is again in the quasi-relative interior."""
    out = Outcome()
    rng = _rng(spec, "seg")
    convex = len(S.pieces) == 1
    out.note("convex" if convex else "nearly_convex")
    members = member_points(S, witness_points(S, spec))
    kinds = SEG_KINDS if convex else ("qri",)
    for k in kinds:
        inside = [x for x in members if interior_membership(k, S, x).verdict]
        for xb in inside[:4]:
            others = rng.sample(members, min(3, len(members)))
            for x0 in others:
                for t in (mpq(1, 3), mpq(1, 2), mpq(rng.randint(1, 7), 8)):
                    w = tuple((1 - t) * a + t * b for a, b in zip(xb, x0))
                    if not convex and not S.contains(w):
                        continue
                    if not interior_membership(k, S, w).verdict:
                        out.violate(kind=k, start=qn.fmt_vec(xb), end=qn.fmt_vec(x0), t=qn.fmt(t),
                                    point=qn.fmt_vec(w), certificates=certificates(S, w, (k,)))
    return out


# ---------------------------------------------------------------- linear images

def _random_matrix(rng: random.Random, m: int, n: int, bound: int = 2) -> list[Vec]:
    return [tuple(mpq(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(m)]


def make_image(spec: InstanceSpec) -> UnionSet:
    if spec.seed % 2:
        return UnionSet.single(gen_polyhedron(spec))
    return gen_union(spec)


def _image(S: UnionSet, T: Sequence[Vec]) -> UnionSet:
    return UnionSet(len(T), tuple(linear_image_fm(P, T) for P in S.pieces))


def eval_linear_image(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """Images of intrinsic relative interior points are intrinsic relative
    interior points of the image; for a convex set every such point of the
    image comes from one."""
    out = Outcome()
    rng = _rng(spec, "image")
    n = S.dim
    m = rng.randint(1, n)
    T = _random_matrix(rng, m, n)
    TS = _image(S, T)
    convex = len(S.pieces) == 1
    for x in member_points(S, witness_points(S, spec)):
        if interior_membership("iri", S, x).verdict:
            y = qn.matvec(T, x)
            if not interior_membership("iri", TS, y).verdict:
                out.violate(direction="image", point=qn.fmt_vec(x), image=qn.fmt_vec(y),
                            matrix=[qn.fmt_vec(r) for r in T])
    if convex:
        riP = ri_representation(S.pieces[0])
        for y in member_points(TS, witness_points(TS, spec)):
            if not interior_membership("iri", TS, y).verdict:
                continue
            fiber = riP.with_constraints(Constraint(row, EQ, yi) for row, yi in zip(T, y))
            if find_point(fiber) is None:
                out.violate(direction="preimage", image=qn.fmt_vec(y), matrix=[qn.fmt_vec(r) for r in T])
    return out


# ---------------------------------------------------------------- near convexity

def make_classify(spec: InstanceSpec) -> UnionSet:
    r = spec.seed % 3
    if r == 0:
        return gen_union(spec)
    if r == 1:
        return gen_nearly_convex(spec)
    return UnionSet.single(gen_polyhedron(spec))


def eval_classify(S: UnionSet, spec: InstanceSpec) -> Outcome:
    out = Outcome()
    cls = classify(S).cls
    out.note(cls)
    ch = characterizations(S)
    if len(set(ch.values())) > 1:
        out.violate(characterizations=ch, cls=cls)
    if spec.seed % 3 == 1 and cls == NEITHER:
        out.violate(reason="constructive nearly convex instance classified neither")
    return out


def make_nc(spec: InstanceSpec) -> UnionSet:
    return gen_nearly_convex(spec)


def make_nc_full(spec: InstanceSpec) -> UnionSet:
    return gen_nearly_convex(spec, full=spec.seed % 4 != 0)


def _nc(S: UnionSet) -> NearlyConvexSet | None:
    try:
        return NearlyConvexSet.build(S)
    except InputError:
        return None


def eval_sandwich(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """With ``C`` the relative interior of the closed hull: same closure, and
    qri(C) in qri(S) in qri(cl C) pointwise."""
    N = _nc(S)
    if N is None:
        return na("not nearly convex")
    out = Outcome()
    C = UnionSet.single(ri_representation(N.hull))
    if not covers(C.pieces[0], list(S.pieces)).covered:
        return na("inner set not contained")
    Cl = UnionSet.single(closure(C.pieces[0]))
    if not same_set(Cl.pieces[0], N.hull):
        out.violate(reason="closures differ")
    for x in witness_points(S, spec):
        a = interior_membership("qri", C, x).verdict
        b = interior_membership("qri", S, x).verdict
        c = interior_membership("qri", Cl, x).verdict
        if a and not b or b and not c:
            out.violate(point=qn.fmt_vec(x), inner=a, middle=b, outer=c)
    return out


def eval_normal(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """qri iff the normal cone is a subspace; qi iff it is trivial."""
    if classify(S).cls == NEITHER:
        return na("not nearly convex")
    out = Outcome()
    for x in member_points(S, witness_points(S, spec)):
        v = verdicts(S, x, ("qri", "qi"))
        N = normal_cone(S, x)
        sub, triv = N.is_subspace(), N.is_trivial()
        out.note("qri_true" if v["qri"] else "qri_false")
        if v["qri"] != sub or v["qi"] != triv:
            out.violate(point=qn.fmt_vec(x), qri=v["qri"], normal_subspace=sub, qi=v["qi"], normal_trivial=triv,
                        certificates=certificates(S, x, ("qri", "qi")))
    return out


def eval_sep_point(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """qri iff the point cannot be properly separated; qi iff it cannot be
    separated at all."""
    if classify(S).cls == NEITHER:
        return na("not nearly convex")
    out = Outcome()
    for x in member_points(S, witness_points(S, spec)):
        v = verdicts(S, x, ("qri", "qi"))
        proper = point_set_separation(x, S, proper=True).separable
        plain = point_set_separation(x, S, proper=False).separable
        if v["qri"] == proper or v["qi"] == plain:
            out.violate(point=qn.fmt_vec(x), qri=v["qri"], properly_separable=proper, qi=v["qi"],
                        separable=plain, certificates=certificates(S, x, ("qri", "qi")))
    return out


def eval_qi_qri(S: UnionSet, spec: InstanceSpec) -> Outcome:
    N = _nc(S)
    if N is None:
        return na("not nearly convex")
    p = find_point(ri_representation(N.hull))
    if p is None or not interior_membership("qi", S, p).verdict:
        return na("empty quasi-interior")
    out = Outcome()
    for x in witness_points(S, spec):
        v = verdicts(S, x, ("qi", "qri"))
        if v["qi"] != v["qri"]:
            out.violate(point=qn.fmt_vec(x), verdicts=v, certificates=certificates(S, x, ("qi", "qri")))
    return out


def eval_nc_formula(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """qri and qi of a nearly convex set are its points in the corresponding
    interior of the closure; qri equals the relative interior of the closure
    on members and commutes with translation.  The intrinsic relative interior
    is compared with the same formula as an open conjecture (flagged)."""
    N = _nc(S)
    if N is None:
        return na("not nearly convex")
    out = Outcome()
    rng = _rng(spec, "translate")
    v_shift = tuple(mpq(rng.randint(-3, 3)) for _ in range(S.dim))
    N2 = nc_translate(N, v_shift)
    ri_cl = qri_of_nearly_convex(N)
    Cl = UnionSet.single(N.hull)
    for x in witness_points(S, spec):
        v = verdicts(S, x, ("qri", "qi", "iri"))
        member = S.contains(x)
        formula = member and ri_cl.contains(x)
        cl_qri = member and interior_membership("qri", Cl, x).verdict
        cl_qi = member and interior_membership("qi", Cl, x).verdict
        shifted = interior_membership("qri", N2.body, qn.add(x, v_shift)).verdict
        if not (v["qri"] == formula == cl_qri == shifted) or v["qi"] != cl_qi:
            out.violate(point=qn.fmt_vec(x), qri=v["qri"], formula=formula, closure_qri=cl_qri,
                        translated=shifted, qi=v["qi"], closure_qi=cl_qi)
        if v["iri"] != formula:
            out.discrepancies.append({"point": qn.fmt_vec(x), "iri": v["iri"], "ri_of_closure": formula,
                                      "instance": union_to_json(S)})
    return out


# ---------------------------------------------------------------- two sets

def make_pair(spec: InstanceSpec) -> tuple[UnionSet, UnionSet]:
    S1 = gen_nearly_convex(spec, salt=1)
    S2 = gen_nearly_convex(spec, salt=2)
    rng = _rng(spec, "pair")
    p1 = rng.choice(member_points(S1, witness_points(S1, spec)))
    p2 = rng.choice(member_points(S2, witness_points(S2, spec)))
    shift = qn.sub(p1, p2)
    return S1, UnionSet(S2.dim, tuple(translate(P, shift) for P in S2.pieces))


def eval_pair(inst: tuple[UnionSet, UnionSet], spec: InstanceSpec) -> Outcome:
    S1, S2 = inst
    N1, N2 = _nc(S1), _nc(S2)
    if N1 is None or N2 is None:
        return na("not nearly convex")
    rep = qri_disjointness_equivalence(N1, N2)
    if not rep.condition_holds:
        o = na("difference hypothesis fails")
        o.discrepancies.append({"hypothesis_failure": rep.to_json(), "first": union_to_json(S1),
                                "second": union_to_json(S2)})
        return o
    out = Outcome()
    out.note("properly_separable" if rep.properly_separable else "not_properly_separable")
    if not rep.equivalence_verified:
        out.violate(report=rep.to_json(), first=union_to_json(S1), second=union_to_json(S2))
    return out


def eval_image_laws(S: UnionSet, spec: InstanceSpec) -> Outcome:
    """Linear images of a nearly convex set: qri points map into qri; equality
    for injective maps with quasi-regular image, and for convex sets; the
    image and the image of qri are nearly convex."""
    N = _nc(S)
    if N is None:
        return na("not nearly convex")
    out = Outcome()
    rng = _rng(spec, "image_laws")
    n = S.dim
    m = rng.randint(1, n + 1)
    T = _random_matrix(rng, m, n)
    mats = [qn.fmt_vec(r) for r in T]
    try:
        TN = nc_linear_image(N, T)
    except GenriError:
        out.violate(reason="image not nearly convex", matrix=mats)
        return out
    TS = TN.body
    qri_img = UnionSet.single(linear_image_fm(ri_representation(N.hull), T))
    if classify(qri_img).cls == NEITHER:
        out.violate(reason="image of qri not nearly convex", matrix=mats)
    for x in member_points(S, witness_points(S, spec)):
        if interior_membership("qri", S, x).verdict:
            y = qn.matvec(T, x)
            if not interior_membership("qri", TS, y).verdict:
                out.violate(direction="image", point=qn.fmt_vec(x), matrix=mats)
    injective = qn.rank(list(map(list, zip(*T)))) == n if m >= n else False
    convex = is_convex(S)[0]
    out.note("injective" if injective else "not_injective")
    out.note("convex" if convex else "not_convex")
    ys = member_points(TS, witness_points(TS, spec))
    regular = all(interior_membership("iri", TS, y).verdict == interior_membership("qri", TS, y).verdict
                  for y in ys)
    if not (convex or (injective and regular)):
        out.note("equality_not_applicable")
        return out
    riS = ri_representation(N.hull)
    for y in ys:
        if not interior_membership("qri", TS, y).verdict:
            continue
        if injective:
            sol = qn.solve_linear(T, y).solution
            ok = sol is not None and interior_membership("qri", S, sol).verdict
        else:
            fiber = riS.with_constraints(Constraint(row, EQ, yi) for row, yi in zip(T, y))
            ok = find_point(fiber) is not None
        if not ok:
            out.violate(direction="preimage", image=qn.fmt_vec(y), matrix=mats)
    return out


# ---------------------------------------------------------------- maps

def _graph_points(F: SetMap, spec: InstanceSpec) -> list[Vec]:
    return member_points(F.graph, witness_points(F.graph, spec))


def _theorem_outcome(out: Outcome, rep, tag: str = "") -> None:
    if not rep.applicable:
        out.note(f"not_applicable:{rep.reason}")
        return
    out.note(f"points{tag}", rep.points_checked)
    for d in rep.directions:
        out.note(f"{d}{tag}")
    for v in rep.violations:
        out.violate(theorem=rep.theorem + tag, **v)


def make_iri_graph(spec: InstanceSpec) -> tuple[SetMap, SetMap]:
    return gen_convex_map(spec), gen_nonconvex_map(spec)


def eval_iri_graph(inst: tuple[SetMap, SetMap], spec: InstanceSpec) -> Outcome:
    F, H = inst
    out = Outcome()
    rep = graph_theorem_check("iri_graph", F, _graph_points(F, spec))
    _theorem_outcome(out, rep, ":convex")
    rep2 = graph_theorem_check("iri_graph", H, _graph_points(H, spec))
    _theorem_outcome(out, rep2, ":general")
    return out


def make_sqri_graph(spec: InstanceSpec) -> SetMap:
    return gen_convex_map(spec, full_slices=True)


def eval_sqri_graph(F: SetMap, spec: InstanceSpec) -> Outcome:
    pts = _graph_points(F, spec)
    rep = graph_theorem_check("sqri_graph", F, pts)
    if not rep.applicable:
        return na(rep.reason)
    out = Outcome()
    _theorem_outcome(out, rep)
    for z in pts:
        v = verdicts(F.graph, z, ("sqri", "iri"))
        if v["sqri"] != v["iri"]:
            out.violate(point=qn.fmt_vec(z), reason="sqri and iri differ on a graph", verdicts=v)
    return out


def _graph_eval(theorem: str) -> Callable[[SetMap, InstanceSpec], Outcome]:
    def run(F: SetMap, spec: InstanceSpec) -> Outcome:
        rep = graph_theorem_check(theorem, F, _graph_points(F, spec))
        if not rep.applicable:
            return na(rep.reason)
        out = Outcome()
        _theorem_outcome(out, rep)
        return out
    run.__name__ = f"eval_{theorem}"
    return run


def eval_aff_graph(F: SetMap, spec: InstanceSpec) -> Outcome:
    rep = aff_graph_check(F)
    if not rep.applicable:
        return na("slice without interior")
    out = Outcome()
    if not rep.holds:
        out.violate(report=rep.to_json())
    return out


def make_pl(spec: InstanceSpec):
    return gen_pl_function(spec)


def eval_epi(f, spec: InstanceSpec) -> Outcome:
    E = f.epigraph.graph
    rep = epi_formula_check(f, member_points(E, witness_points(E, spec)))
    out = Outcome()
    _theorem_outcome(out, rep)
    return out


def make_dom_rge(spec: InstanceSpec):
    return gen_nc_map(spec) if spec.seed % 2 == 0 else gen_pl_function(spec)


def eval_dom_rge(inst, spec: InstanceSpec) -> Outcome:
    """Domain and range of a nearly convex map are nearly convex; the
    epigraphical map has the function's domain."""
    out = Outcome()
    if isinstance(inst, SetMap):
        if classify(inst.graph).cls == NEITHER:
            return na("graph not nearly convex")
        for name, U in (("domain", domain_of(inst)), ("range", range_of(inst))):
            c = classify(U)
            out.note(f"{name}:{c.cls}")
            if c.cls == NEITHER:
                out.violate(set=name, witness=qn.fmt_vec(c.witness) if c.witness else None)
        return out
    D = domain_of(inst.epigraph)
    if len(D.pieces) != 1 or not same_set(D.pieces[0], inst.domain):
        out.violate(reason="domain of the epigraphical map differs from the domain")
    return out


# ---------------------------------------------------------------- brute force

def make_brute(spec: InstanceSpec) -> UnionSet:
    return gen_union(spec, rays=False)


def eval_brute(S: UnionSet, spec: InstanceSpec) -> Outcome:
    out = Outcome()
    B = BruteOracle(S)
    grid = B.grid()
    out.note("grid_points", len(grid))
    for g in grid:
        x = tuple(mpq(t.numerator, t.denominator) for t in g)
        if S.contains(x) != B.contains(g):
            out.violate(point=qn.fmt_vec(x), reason="membership differs")
    pts = witness_points(S, spec)
    out.note("witness_points", len(pts))
    for x in pts:
        v = verdicts(S, x)
        b = B.verdicts(x)
        if v != b:
            out.violate(point=qn.fmt_vec(x), oracle=v, brute=b)
    return out


# ---------------------------------------------------------------- registry

def _map_union(F: SetMap) -> UnionSet:
    return F.graph


def _map_from_union(F: SetMap, U: UnionSet) -> SetMap:
    return SetMap(F.dim_x, F.dim_y, U)


def _ident(S: UnionSet) -> UnionSet:
    return S


def _from(_: object, U: UnionSet) -> UnionSet:
    return U


_U = dict(as_union=_ident, from_union=_from)
_M = dict(as_union=_map_union, from_union=_map_from_union)

CHECKS: dict[str, Check] = {c.name: c for c in [
    Check("chain_3_3", gen_union, eval_chain, **_U),
    Check("convex_collapse", lambda s: UnionSet.single(gen_polyhedron(s)), eval_collapse, **_U),
    Check("betweenness_vs_iri", gen_union, eval_betweenness, corpus=("plus_sign",), **_U),
    Check("seg_stability", make_seg, eval_seg, **_U),
    Check("linear_image_iri", make_image, eval_linear_image, **_U),
    Check("classify_equiv", make_classify, eval_classify, dims=(1, 2, 3),
          corpus=("l_shape", "open_square_with_corner", "half_open_pair", "plus_sign"), **_U),
    Check("sandwich_qri", make_nc, eval_sandwich, **_U),
    Check("normal_qri", make_nc, eval_normal, **_U),
    Check("sep_point", make_nc, eval_sep_point, **_U),
    Check("qi_eq_qri", make_nc_full, eval_qi_qri, **_U),
    Check("nc_qri_formula", make_nc, eval_nc_formula, **_U),
    Check("two_set_sep", make_pair, eval_pair, dims=(1, 2, 3)),
    Check("image_laws", make_nc, eval_image_laws, dims=(1, 2, 3), **_U),
    Check("iri_graph", make_iri_graph, eval_iri_graph, dims=(2, 3, 4)),
    Check("sqri_graph", make_sqri_graph, eval_sqri_graph, dims=(2, 3, 4), **_M),
    Check("qri_graph_fwd", gen_nc_map, _graph_eval("qri_graph_fwd"), dims=(2, 3, 4), **_M),
    Check("qri_graph_bwd", gen_nc_map, _graph_eval("qri_graph_bwd"), dims=(2, 3, 4), **_M),
    Check("qri_int_graph", gen_nc_map, _graph_eval("qri_int_graph"), dims=(2, 3, 4), **_M),
    Check("qi_graph_bwd", gen_nc_map, _graph_eval("qi_graph_bwd"), dims=(2, 3, 4), **_M),
    Check("aff_graph", gen_nc_map, eval_aff_graph, dims=(2, 3, 4), **_M),
    Check("epi_formula", make_pl, eval_epi, dims=(2, 3, 4)),
    Check("dom_rge", make_dom_rge, eval_dom_rge, dims=(2, 3, 4)),
    Check("brute_concordance", make_brute, eval_brute, dims=(1, 2), coeff_bound=2, **_U),
]}

GRAPH_SUITE = ("iri_graph", "sqri_graph", "qri_graph_fwd", "qri_graph_bwd", "qri_int_graph", "qi_graph_bwd",
               "aff_graph", "epi_formula", "dom_rge")
SUITES = {
    "all": tuple(CHECKS),
    "graph": GRAPH_SUITE,
    "interiors": ("chain_3_3", "convex_collapse", "betweenness_vs_iri", "seg_stability", "linear_image_iri",
                  "brute_concordance"),
    "nearconvex": ("classify_equiv", "sandwich_qri", "normal_qri", "sep_point", "qi_eq_qri", "nc_qri_formula",
                   "two_set_sep", "image_laws"),
}
