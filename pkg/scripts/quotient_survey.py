"""Quotients, d, and crossing data for every ring in the problems/ folder.

    python scripts/quotient_survey.py
"""

import json
from pathlib import Path

from vgit import graded_ring as gr, loci
from vgit.corpus import ring_from_problem

ROOT = Path(__file__).resolve().parents[1] / "problems"


def names(R, gens):
    out = []
    for g in gens:
        base = R.monomial_name(g.monomial)
        z = "" if not g.z_degree else ("z*" if g.z_degree == 1 else f"z^{g.z_degree}*")
        out.append(z + base)
    return ", ".join(out) or "-"


def main():
    for path in sorted(ROOT.glob("*.json")):
        problem = json.loads(path.read_text())
        if problem["problem"] != "affine_torus":
            continue
        R = ring_from_problem(problem)
        print(f"== {path.stem}: weights {list(R.gen_weights)}")
        print(f"   X//0: {names(R, gr.invariant_ring(R).gens)}")
        for sign in "+-":
            pres = gr.proj_quotient(R, sign, 1)
            print(f"   X//{sign}: {'empty' if pres.empty else names(R, pres.gens)}")
        try:
            print(f"   d = {gr.find_d(R).d}")
        except gr.NoDCertified as exc:
            print(f"   d: {exc}")
        if R.is_polynomial:
            print(f"   {loci.classify_crossing(R.gen_weights).summary}")


if __name__ == "__main__":
    main()
