#!/usr/bin/env python3
"""Write diagonal (Fermat-type) pairs through random points, plus a batch manifest.

Each pair is f1 = sum a_i x_i^d1, f2 = sum b_i x_i^d2 in d1 + d2 + 1 variables
over F_p with random coefficients; the last coefficients are solved for so that
a random point lies on both hypersurfaces.
"""

import argparse
import json
import random
from pathlib import Path


def diagonal(coeffs, degree):
    return " + ".join(f"{c}*x{i}^{degree}" for i, c in enumerate(coeffs))


def through_point(rng, point, degree, p):
    coeffs = [rng.randrange(1, p) for _ in point[:-1]]
    partial = sum(c * pow(x, degree, p) for c, x in zip(coeffs, point)) % p
    last = (-partial * pow(pow(point[-1], degree, p), p - 2, p)) % p
    return coeffs + [last]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, required=True)
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--M", type=int, default=8)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=20201)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    p, total = args.prime, args.M + 2
    degrees = [(d1, total - d1) for d1 in range(2, total // 2 + 1)]
    args.out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for k in range(args.count):
        d1, d2 = degrees[k % len(degrees)]
        while True:
            point = [rng.randrange(1, p) for _ in range(total + 1)]
            a = through_point(rng, point, d1, p)
            b = through_point(rng, point, d2, p)
            if a[-1] and b[-1]:
                break
        name = f"fermat_{k:02d}.txt"
        (args.out / name).write_text(
            f"# field {p}\n# diagonal pair, degrees {d1} {d2}\n{diagonal(a, d1)}\n{diagonal(b, d2)}\n"
        )
        manifest.append({"pair": name, "point": ",".join(map(str, point)), "condition": "auto",
                         "samples": args.samples})
    (args.out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
