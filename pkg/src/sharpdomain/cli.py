"""Command-line front end.

Exit codes: 0 when the check holds, 1 when it fails (a witness is printed),
2 on any usage, parse or validation error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import engine, oracle
from .domains import IdealDomain, QuadraticDomain, ValuationDomain
from .errors import (BudgetExceeded, NormBoundExceeded, NotPseudoDedekind, ParseError,
                     PreconditionViolated, ValidationError)
from .exact import ExactReal
from .literals import evaluate, parse_domain, parse_expression, parse_ideal
from .report import FAILS, HOLDS, SCHEMA_VERSION, CheckReport, Stats, render_text
from .valuation import DEFAULT_PROBES, vg_diagnose

__all__ = ["CommandLine", "parse", "run", "main", "load_reports", "DEFAULT_BUDGET"]

SUBCOMMANDS = ("eval", "check-pair", "check-def", "sweep", "diagnose")
ARITY = {"eval": 1, "check-pair": 2, "check-def": 3, "sweep": 0, "diagnose": 0}
DEFAULT_BUDGET = {"quad": 30, "val": 4}


@dataclass
class CommandLine:
    subcommand: str
    domain: IdealDomain
    domain_text: str
    inputs: List[str] = field(default_factory=list)
    budget: Optional[int] = None
    json: bool = False
    probe_points: Optional[Tuple[ExactReal, ...]] = None
    restricted: bool = False
    seed: int = 0
    samples: int = 500

    @property
    def effective_budget(self) -> int:
        return self.budget if self.budget is not None else DEFAULT_BUDGET[self.domain.kind]


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def _parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="sharpdomain", description="Ideal arithmetic and sharpness checks.")
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    p.add_argument("domain", help="quad:d=<int> or val:gens=<real>,...")
    p.add_argument("inputs", nargs="*", help="ideal literals or an ideal expression")
    p.add_argument("--budget", type=int, help="norm bound (quad) or largest cut value (val)")
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--probe-points", help="comma-separated non-group cut points (val)")
    p.add_argument("--restricted", action="store_true", help="sweep only ideals with I_v = D")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled identity checks")
    p.add_argument("--samples", type=int, default=500, help="pairs sampled by the identity check")
    return p


def _parse_probes(text: str) -> Tuple[ExactReal, ...]:
    out = []
    offset = 0
    for chunk in text.split(","):
        try:
            out.append(ExactReal.parse(chunk))
        except ParseError as err:
            raise ParseError(err.message, text, err.pos + offset) from None
        offset += len(chunk) + 1
    return tuple(out)


def parse(argv: Sequence[str]) -> CommandLine:
    ns = _parser().parse_args(list(argv))
    probes = _parse_probes(ns.probe_points) if ns.probe_points else None
    domain = parse_domain(ns.domain, probes=probes)
    if probes is not None and not isinstance(domain, ValuationDomain):
        raise ValidationError("--probe-points only applies to val: domains")
    if len(ns.inputs) != ARITY[ns.subcommand]:
        raise ValidationError(
            f"{ns.subcommand} takes {ARITY[ns.subcommand]} input(s), got {len(ns.inputs)}")
    if ns.budget is not None and ns.budget < 0:
        raise ValidationError("--budget must be nonnegative")
    cmd = CommandLine(ns.subcommand, domain, ns.domain, list(ns.inputs), ns.budget, ns.json,
                      probes, ns.restricted, ns.seed, ns.samples)
    # literals are validated before anything runs
    if cmd.subcommand == "eval":
        parse_expression(domain, cmd.inputs[0])
    else:
        for text in cmd.inputs:
            parse_ideal(domain, text)
    return cmd


# -- execution ---------------------------------------------------------------


def _doc(payload) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def _run_eval(cmd: CommandLine) -> Tuple[int, str]:
    result = evaluate(cmd.domain, parse_expression(cmd.domain, cmd.inputs[0]))
    text = cmd.domain.literal(result)
    if cmd.json:
        return 0, _doc({"schema": SCHEMA_VERSION, "domain": cmd.domain.describe(),
                        "expression": cmd.inputs[0], "result": text})
    return 0, text


def _check_def(cmd: CommandLine) -> CheckReport:
    d = cmd.domain
    i, a, b = (parse_ideal(d, t) for t in cmd.inputs)
    w = oracle.def41_search(d, i, a, b)
    if w is not None:
        witness = {"A'": d.literal(w.a), "B'": d.literal(w.b), "provenance": w.provenance}
        verdict = HOLDS
    else:
        witness = {"I": d.literal(i), "A": d.literal(a), "B": d.literal(b),
                   "A*B": d.literal(d.mul(a, b)), "result": "no factorization I = A'B' with A' >= A, B' >= B"}
        verdict = FAILS
    return CheckReport(domain=d.describe(), check="def41_search", inputs=[d.literal(x) for x in (i, a, b)],
                       verdict=verdict, witness=witness,
                       stats=Stats(1, [] if w else [[d.literal(x) for x in (i, a, b)]], 0.0))


def _sweep(cmd: CommandLine) -> List[CheckReport]:
    d = cmd.domain
    budget = cmd.effective_budget
    if cmd.restricted:
        first = engine.vtop_restricted_sweep(d, budget)
    else:
        first = engine.sharp_sweep(d, budget)
    return [
        first,
        engine.pseudo_dedekind_sweep(d, budget),
        oracle.equivalence_harness(d, budget),
        engine.identity_sweep(d, budget, cmd.samples, cmd.seed),
    ]


def _diagnose(cmd: CommandLine) -> Tuple[int, str]:
    d = cmd.domain
    sharp, reason = d.prediction()
    payload = {"schema": SCHEMA_VERSION, "domain": d.describe(), "predicted_sharp": sharp,
               "reason": reason}
    if isinstance(d, ValuationDomain):
        diag = vg_diagnose(d.group)
        payload.update(rank=diag.rank, structure=diag.structure, completeness=diag.completeness)
        summary = f"{diag.structure}, {diag.completeness}"
        why = "complete value group" if sharp else "value group not complete"
    else:
        maximal = d.order.maximal
        payload.update(maximal_order=maximal)
        summary = "maximal order (Dedekind)" if maximal else "non-maximal order (Noetherian, not integrally closed)"
        why = "Dedekind domain" if sharp else "Noetherian but not Dedekind"
    line = f"{summary}; predicted {'sharp' if sharp else 'not sharp'} ({why})"
    payload["summary"] = line
    code = 0 if sharp else 1
    if cmd.json:
        return code, _doc(payload)
    return code, f"{d.describe()}: {line}\n  prediction from theory, not a sweep result"


def run(cmd: CommandLine) -> Tuple[int, str]:
    if cmd.subcommand == "eval":
        return _run_eval(cmd)
    if cmd.subcommand == "diagnose":
        return _diagnose(cmd)
    if cmd.subcommand == "check-pair":
        i, h = (parse_ideal(cmd.domain, t) for t in cmd.inputs)
        reports = [engine.sharp_pair_check(cmd.domain, i, h)]
    elif cmd.subcommand == "check-def":
        reports = [_check_def(cmd)]
    else:
        reports = _sweep(cmd)
    code = 0 if all(r.holds for r in reports) else 1
    if cmd.json:
        if len(reports) == 1:
            return code, _doc(reports[0].to_dict())
        return code, _doc({"schema": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]})
    return code, "\n\n".join(render_text(r) for r in reports)


def load_reports(text: str) -> List[CheckReport]:
    """Inverse of the JSON output of ``check-pair``, ``check-def`` and ``sweep``."""
    data = json.loads(text)
    if "reports" in data:
        return [CheckReport.from_dict(r) for r in data["reports"]]
    return [CheckReport.from_dict(data)]


_ERRORS = (ParseError, ValidationError, ValueError, BudgetExceeded, NormBoundExceeded,
           NotPseudoDedekind, PreconditionViolated)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        code, out = run(parse(argv))
    except _ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
