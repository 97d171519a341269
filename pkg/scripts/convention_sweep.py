"""Compare the two Leibniz sign conventions on random graded potentials.

The library applies d letter by letter with the sign of the degrees to the
right of the letter.  The alternative takes the sign from the letters to the
left.  This script counts how often d^2 = 0 fails under each.

    python3 scripts/convention_sweep.py --samples 128 --seed 0
"""

import argparse
import random
import sys
from pathlib import Path

from qpcat.ginzburg import apply_d, ginzburg
from qpcat.gqa import AlgElement, compose

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from oracles import random_potential, random_quiver  # noqa: E402


def apply_d_left(x, pres):
    q = pres.extended
    out = []
    for p, c in x.items():
        word = p.arrows
        before = 0
        for i, g in enumerate(word):
            sign = -1 if before % 2 else 1
            before += q.arrow(g).degree
            left = q.path(*word[:i]) if i else None
            right = q.path(*word[i + 1:]) if i + 1 < len(word) else None
            for r, e in pres.d_on_generators[g].items():
                t = compose(r, right) if right is not None else r
                t = compose(left, t) if left is not None and t is not None else t
                if t is not None:
                    out.append((t, sign * c * e))
    return AlgElement(out)


def d_squared_fails(pres, d):
    return any(d(d(AlgElement.of(pres.extended.path(g)), pres), pres)
               for g in pres.generators())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=128)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    fails = {"right": 0, "left": 0}
    tried = 0
    while tried < args.samples:
        n = rng.choice([3, 4, 5])
        q = random_quiver(rng, rng.randint(1, 3), rng.randint(1, 4),
                          degrees=tuple(range(3 - n, 1)))
        W = random_potential(rng, q, n, lengths=(1, 2, 3, 4))
        if not W.terms:
            continue
        tried += 1
        pres = ginzburg(W)
        fails["right"] += d_squared_fails(pres, apply_d)
        fails["left"] += d_squared_fails(pres, apply_d_left)
    print(f"samples: {tried}")
    for k, v in fails.items():
        print(f"{k:>5} rule: d^2 != 0 on {v} potentials")


if __name__ == "__main__":
    main()
