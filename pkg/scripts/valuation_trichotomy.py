"""Compare sweep verdicts with the completeness prediction over many value groups.

For each group the sharp sweep, the pseudo-Dedekind sweep and the
prediction from completeness are printed side by side; the last column flags
any mismatch between sweep and prediction.
"""
import argparse

from sharpdomain import engine
from sharpdomain.domains import ValuationDomain
from sharpdomain.valuation import vg_diagnose

GROUPS = [
    ["1"], ["2/3"], ["sqrt2"], ["1/2", "3"], ["sqrt2", "2*sqrt2"],
    ["1", "sqrt2"], ["1", "sqrt3"], ["sqrt2", "sqrt3"], ["1", "sqrt6"], ["1", "sqrt2", "sqrt3"],
]
PROBES = ["sqrt3", "sqrt3/2", "4-sqrt3", "sqrt6-1", "1/3*sqrt2+1/5"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=3)
    args = ap.parse_args()
    print(f"{'group':28s} {'diagnosis':22s} {'sharp sweep':12s} {'pseudo-Ded.':12s} agrees")
    for gens in GROUPS:
        dom = ValuationDomain(gens, probes=PROBES, height=1 if len(gens) > 2 else 2)
        diag = vg_diagnose(dom.group)
        s = engine.sharp_sweep(dom, args.budget)
        pd = engine.pseudo_dedekind_sweep(dom, args.budget)
        agree = s.holds == diag.predicted_sharp
        print(f"{dom.describe():28s} {diag.structure + ', ' + diag.completeness:22s} "
              f"{s.verdict:12s} {pd.verdict:12s} {'yes' if agree else 'NO'}")


if __name__ == "__main__":
    main()
