"""Run every check on the standard domains and write the reports as JSON.

    python3 scripts/run_sweeps.py --out results/
"""
import argparse
import json
import time
from pathlib import Path

from sharpdomain import engine, oracle
from sharpdomain.domains import QuadraticDomain, ValuationDomain

DOMAINS = {
    "quad-5": (lambda: QuadraticDomain(-5), 30),
    "quad-3": (lambda: QuadraticDomain(-3), 10),
    "quad-1": (lambda: QuadraticDomain(-1), 30),
    "quad2": (lambda: QuadraticDomain(2), 20),
    "val1": (lambda: ValuationDomain([1]), 6),
    "val2_3": (lambda: ValuationDomain(["2/3"]), 4),
    "val1_sqrt2": (lambda: ValuationDomain([1, "sqrt2"]), 4),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--only", nargs="*", choices=sorted(DOMAINS))
    ap.add_argument("--samples", type=int, default=500)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in args.only or DOMAINS:
        make, budget = DOMAINS[name]
        dom = make()
        t0 = time.perf_counter()
        reports = [engine.sharp_sweep(dom, budget), engine.pseudo_dedekind_sweep(dom, budget),
                   oracle.equivalence_harness(dom, budget),
                   engine.identity_sweep(dom, budget, args.samples)]
        path = args.out / f"{name}.json"
        path.write_text(json.dumps({"schema": 1, "reports": [r.to_dict() for r in reports]}, indent=2))
        verdicts = ", ".join(f"{r.check}={r.scope}" for r in reports)
        print(f"{dom.describe():22s} {time.perf_counter() - t0:6.1f}s  {verdicts}")


if __name__ == "__main__":
    main()
