from __future__ import annotations

import json
from pathlib import Path

import pytest

from genri import exactnum as qn
from genri.errors import InputError
from genri.genpoly import UnionSet, box, poly_to_json, same_set
from genri.harness import CHECKS, SUITES, InstanceSpec, betweenness_check, generate, run_check, witness_points
from genri.harness.brute import BruteOracle
from genri.harness.checks import Check, Outcome
from genri.harness.corpus import CORPUS, corpus_instance
from genri.harness.generate import KINDS
from genri.harness.runner import CheckReport, instance_seed, report_lines, resolve_checks, run_suite, suite_exit_code
from genri.harness.shrink import shrink
from genri.nearconvex import NEITHER, classify

from shapes import P, U, plus_sign

V = qn.vec
GOLDEN = Path(__file__).parent / "golden"


def test_golden_polyhedron():
    expected = json.loads((GOLDEN / "polyhedron_seed1_dim2.json").read_text())
    assert poly_to_json(generate(InstanceSpec(seed=1, dim=2), "polyhedron")) == expected


def test_generation_is_seeded():
    for kind in KINDS:
        a = generate(InstanceSpec(seed=5, dim=2), kind)
        b = generate(InstanceSpec(seed=5, dim=2), kind)
        assert a == b, kind
    assert generate(InstanceSpec(seed=1, dim=2), "polyhedron") != generate(InstanceSpec(seed=2, dim=2), "polyhedron")


def test_unknown_kind():
    with pytest.raises(InputError):
        generate(InstanceSpec(seed=1), "torus")


def test_nearly_convex_generator_never_neither():
    for seed in range(25):
        for dim in (1, 2, 3):
            S = generate(InstanceSpec(seed=seed, dim=dim), "nearly_convex")
            assert classify(S).cls != NEITHER


def test_witness_points_interval():
    pts = witness_points(UnionSet.single(P(1, ((1,), ">=", 0), ((1,), "<=", 1))))
    assert {V([0]), V([1]), V(["1/2"])} <= set(pts)
    assert all(0 <= p[0] <= 1 for p in pts)


def test_witness_points_plus_sign():
    pts = set(witness_points(plus_sign()))
    want = [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1], ["1/2", 0], ["-1/2", 0], [0, "1/2"], [0, "-1/2"]]
    assert {V(p) for p in want} <= pts


def test_witness_points_skip_empty_pieces():
    S = UnionSet(1, (P(1, ((1,), ">=", 0), ((1,), "<=", 1)), P(1, ((1,), ">", 5), ((1,), "<", 5))))
    assert len(S.pieces) == 1
    assert all(p[0] <= 1 for p in witness_points(S))


def test_betweenness_on_plus_sign():
    assert betweenness_check(plus_sign(), V([0, 0]))
    assert not betweenness_check(plus_sign(), V(["1/2", 0]))


def test_corpus_contents():
    assert set(CORPUS) >= {"plus_sign", "l_shape"}
    got, want = corpus_instance("plus_sign"), plus_sign()
    assert len(got.pieces) == 2 and all(any(same_set(a, b) for b in want.pieces) for a in got.pieces)
    with pytest.raises(InputError):
        corpus_instance("nothing")


def test_known_discrepancy_is_flagged():
    rep = run_check("betweenness_vs_iri", 3, 1)
    hits = [d for d in rep.discrepancies if d.get("corpus") == "plus_sign"]
    assert hits and any(d.get("point") == ["0", "0"] for d in hits)
    assert rep.status == "ok"


def test_instance_seeds_are_independent_of_count():
    a = [instance_seed(7, i) for i in range(5)]
    assert a == [instance_seed(7, i) for i in range(5)] and len(set(a)) == 5
    r3 = run_check("chain_3_3", 3, 11)
    r2 = run_check("chain_3_3", 2, 11)
    assert r3.passes == 3 and r2.passes == 2


def test_report_lines_are_stable():
    a = report_lines(run_suite(["classify_equiv", "normal_qri"], 4, 3))
    b = report_lines(run_suite(["classify_equiv", "normal_qri"], 4, 3))
    assert a == b and a.count("\n") == 2
    for line in a.splitlines():
        d = json.loads(line)
        assert d["status"] == "ok" and d["violations"] == []


def test_resolve_checks():
    assert resolve_checks(["graph"]) == list(SUITES["graph"])
    assert resolve_checks(["chain_3_3", "chain_3_3"]) == ["chain_3_3"]
    assert set(resolve_checks(["all"])) == set(CHECKS)
    with pytest.raises(InputError):
        resolve_checks(["nope"])


def _report(**kw) -> CheckReport:
    r = CheckReport("x", 4, 0, instances=4)
    for k, v in kw.items():
        setattr(r, k, v)
    return r


def test_statuses_and_exit_codes():
    assert _report(passes=4).status == "ok"
    assert _report(passes=1, not_applicable=3).status == "vacuous"
    assert _report(not_applicable=4, budget_exhausted=4).status == "budget_exhausted"
    assert _report(violations=[{"i": 0}]).status == "violation"
    assert suite_exit_code([_report(passes=4)]) == 0
    assert suite_exit_code([_report(passes=4), _report(violations=[{}])]) == 1
    assert suite_exit_code([_report(passes=1, not_applicable=3)]) == 1
    assert suite_exit_code([_report(not_applicable=4, budget_exhausted=4)]) == 3


def test_violations_are_reverified_and_shrunk():
    def evaluate(S, spec):
        out = Outcome()
        if len(S.pieces) >= 2:
            out.violate(pieces=len(S.pieces))
        return out

    def make(spec):
        return U(box((0, 0), (1, 1)), box((2, 0), (3, 1)), box((0, 2), (1, 3)))

    bogus = Check("bogus", make, evaluate, dims=(2,),
                  as_union=lambda S: S, from_union=lambda _, T: T)
    rep = run_check(bogus, 2, 0)
    assert rep.status == "violation" and len(rep.violations) == 2
    for v in rep.violations:
        assert v["reverified"] and len(v["shrunk"]["pieces"]) == 2


def test_shrink_minimizes():
    S = U(box((0, 0), (3, 3)), box((5, 5), (6, 6)), box((-4, 0), (-3, 2)))

    def bad(T):
        return any(p.contains(V([0, 0])) for p in T.pieces)

    small = shrink(S, bad)
    assert len(small.pieces) == 1 and bad(small)
    assert len(small.pieces[0].constraints) < 4


def test_brute_oracle_limits():
    with pytest.raises(InputError):
        BruteOracle(UnionSet.single(box((0, 0, 0), (1, 1, 1))))
    with pytest.raises(InputError):
        BruteOracle(UnionSet.single(P(1, ((1,), ">=", 0))))
    o = BruteOracle(plus_sign())
    v = o.verdicts(V([0, 0]))
    assert not any(v.values())
    v = o.verdicts(V(["1/2", 0]))
    assert not v["qri"] and not v["rint"]
