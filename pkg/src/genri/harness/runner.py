"""Suite runner: deterministic per-instance seeds, aggregation into one
report per check, violation re-verification and shrinking."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import GenriError, InputError, ResourceError
from ..exactnum import mpq
from ..genpoly import union_to_json
from .checks import CHECKS, SUITES, Check, Outcome
from .corpus import corpus_instance
from .generate import InstanceSpec
from .shrink import shrink

NA_LIMIT = mpq(1, 2)


def instance_seed(base_seed: int, index: int) -> int:
    """64-bit seed for instance ``index``, independent of every other index."""
    h = hashlib.sha256(f"{base_seed}:{index}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def instance_spec(check: Check, base_seed: int, index: int) -> InstanceSpec:
    return InstanceSpec(
        seed=instance_seed(base_seed, index),
        dim=check.dims[index % len(check.dims)],
        pieces=check.pieces,
        coeff_bound=check.coeff_bound,
    )


def spec_json(spec: InstanceSpec) -> dict:
    return {"seed": spec.seed, "dim": spec.dim, "pieces": spec.pieces, "coeff_bound": spec.coeff_bound,
            "strict_prob": str(spec.strict_prob)}


@dataclass
class CheckReport:
    check: str
    count: int
    seed: int
    instances: int = 0
    passes: int = 0
    not_applicable: int = 0
    budget_exhausted: int = 0
    na_reasons: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)
    corpus: list[dict] = field(default_factory=list)

    @property
    def na_rate(self) -> mpq:
        return mpq(self.not_applicable, self.instances) if self.instances else mpq(0)

    @property
    def status(self) -> str:
        if self.violations:
            return "violation"
        if self.instances and self.budget_exhausted == self.instances:
            return "budget_exhausted"
        if self.na_rate > NA_LIMIT:
            return "vacuous"
        return "ok"

    def to_json(self) -> dict:
        return {
            "check": self.check, "count": self.count, "seed": self.seed, "instances": self.instances,
            "passes": self.passes, "not_applicable": self.not_applicable,
            "budget_exhausted": self.budget_exhausted, "na_rate": str(self.na_rate),
            "na_reasons": dict(sorted(self.na_reasons.items())), "violations": self.violations,
            "discrepancies": self.discrepancies, "notes": dict(sorted(self.notes.items())),
            "corpus": self.corpus, "status": self.status,
        }


def _evaluate(check: Check, inst: object, spec: InstanceSpec) -> Outcome:
    try:
        return check.evaluate(inst, spec)
    except ResourceError as e:
        o = Outcome("na", f"budget: {e}")
        o.note("budget_exhausted")
        return o


def _instance_json(check: Check, inst: object):
    if check.as_union is not None:
        return union_to_json(check.as_union(inst))
    to_json = getattr(inst, "to_json", None)
    if to_json is not None:
        return to_json()
    if isinstance(inst, tuple):
        return [_instance_json_any(x) for x in inst]
    return None


def _instance_json_any(x: object):
    if hasattr(x, "to_json"):
        return x.to_json()
    return union_to_json(x)


def _shrunk(check: Check, inst: object, spec: InstanceSpec):
    if check.as_union is None or check.from_union is None:
        return None

    def bad(U):
        return check.evaluate(check.from_union(inst, U), spec).status == "violation"

    return union_to_json(shrink(check.as_union(inst), bad))


def run_check(check: Check | str, count: int, base_seed: int, shrink_violations: bool = True) -> CheckReport:
    if isinstance(check, str):
        if check not in CHECKS:
            raise InputError(f"unknown check {check!r}")
        check = CHECKS[check]
    rep = CheckReport(check.name, count, base_seed)
    for name in check.corpus:
        inst = corpus_instance(name)
        spec = InstanceSpec(seed=0, dim=inst.dim)
        o = _evaluate(check, inst, spec)
        rep.corpus.append({"name": name, "status": o.status, "reason": o.reason,
                           "violations": o.violations, "discrepancies": o.discrepancies})
        for v in o.violations:
            rep.violations.append({"corpus": name, **v})
        for d in o.discrepancies:
            rep.discrepancies.append({"corpus": name, **d})
    for i in range(count):
        spec = instance_spec(check, base_seed, i)
        rep.instances += 1
        try:
            inst = check.make(spec)
        except ResourceError as e:
            o = Outcome("na", f"budget: {e}")
            o.note("budget_exhausted")
            inst = None
        else:
            o = _evaluate(check, inst, spec)
        for k, v in o.notes.items():
            rep.notes[k] = rep.notes.get(k, 0) + v
        if o.notes.get("budget_exhausted"):
            rep.budget_exhausted += 1
        for d in o.discrepancies:
            rep.discrepancies.append({"index": i, "spec": spec_json(spec), **d})
        if o.status == "na":
            rep.not_applicable += 1
            rep.na_reasons[o.reason] = rep.na_reasons.get(o.reason, 0) + 1
        elif o.status == "violation":
            entry = {"index": i, "spec": spec_json(spec), "instance": _instance_json(check, inst),
                     "violations": o.violations}
            # re-run from scratch to confirm before reporting
            again = _evaluate(check, check.make(spec), spec)
            entry["reverified"] = again.status == "violation"
            if shrink_violations:
                try:
                    entry["shrunk"] = _shrunk(check, inst, spec)
                except GenriError:
                    entry["shrunk"] = None
            rep.violations.append(entry)
        else:
            rep.passes += 1
    return rep


def resolve_checks(names: Iterable[str]) -> list[str]:
    out: list[str] = []
    for name in names:
        if name in SUITES:
            out += [c for c in SUITES[name] if c not in out]
        elif name in CHECKS:
            if name not in out:
                out.append(name)
        else:
            raise InputError(f"unknown check or suite {name!r}")
    return out


def run_suite(checks: Sequence[str], count: int, base_seed: int) -> list[CheckReport]:
    if count < 0:
        raise InputError("count must be nonnegative")
    return [run_check(c, count, base_seed) for c in resolve_checks(checks)]


def report_lines(reports: Sequence[CheckReport]) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True, separators=(",", ":")) + "\n" for r in reports)


def suite_exit_code(reports: Sequence[CheckReport]) -> int:
    statuses = {r.status for r in reports}
    if "violation" in statuses or "vacuous" in statuses:
        return 1
    if "budget_exhausted" in statuses:
        return 3
    return 0
