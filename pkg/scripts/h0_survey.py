"""Survey H0 verdicts on random ordinary quivers with potential (n = 3).

Counts finite / infinite / undetermined verdicts and, for finite complete
runs, cross-checks the dimension against a dense quotient computed by
linear algebra.

    python3 scripts/h0_survey.py --samples 50 --seed 1
"""

import argparse
import collections
import random
import sys
from pathlib import Path

from qpcat.ginzburg import ginzburg
from qpcat.jacobian import COMPLETE, FINITE, h0

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from oracles import (dense_quotient_dims, element_to_words, random_potential,  # noqa: E402
                     random_quiver)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-steps", type=int, default=200)
    ap.add_argument("--oracle-length", type=int, default=6)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    verdicts = collections.Counter()
    agree = disagree = 0
    for _ in range(args.samples):
        q = random_quiver(rng, rng.randint(1, 4), rng.randint(1, 5))
        W = random_potential(rng, q, 3, lengths=(2, 3, 4), homogeneous_length=True)
        res = h0(ginzburg(W), max_steps=args.max_steps, max_basis=5000)
        verdicts[res.verdict] += 1
        if res.verdict != FINITE or res.system.status != COMPLETE:
            continue
        if max((len(p) for p in res.basis), default=0) >= args.oracle_length:
            continue
        arrows = {a.name: (a.source, a.target) for a in q.arrows}
        dims = dense_quotient_dims(arrows, q.vertices,
                                   [element_to_words(r) for r in res.relations],
                                   args.oracle_length)
        if sum(dims.values()) == res.dimension:
            agree += 1
        else:
            disagree += 1
    for k in sorted(verdicts):
        print(f"{k:>13}: {verdicts[k]}")
    print(f"oracle agreement on finite cases: {agree} agree, {disagree} disagree")


if __name__ == "__main__":
    main()
