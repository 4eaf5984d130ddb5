#!/usr/bin/env python3
"""Brute-force conjugacy classes of 2x2 matrices over small prime fields.

For each p, every matrix in M_2(F_p) is sorted into its GL_2(F_p) orbit. An
orbit is a 2-dimensional representation of the one-loop quiver; it is
decomposable when F_p^2 splits into two invariant lines, and absolutely
indecomposable when it stays indecomposable over the algebraic closure
(a single Jordan block). Writes the counts as JSON.

    enumerate_classes.py [--out PATH] [--check PATH] [primes...]
"""

import argparse
import itertools
import json
import sys


def mat_mul(a, b, p):
    return (
        ((a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
         (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p))


def det(a, p):
    return (a[0] * a[3] - a[1] * a[2]) % p


def inverse(a, p):
    d = pow(det(a, p), p - 2, p)
    return ((a[3] * d) % p, (-a[1] * d) % p, (-a[2] * d) % p, (a[0] * d) % p)


def invariant_lines(a, p):
    lines = []
    for v in [(0, 1)] + [(1, t) for t in range(p)]:
        w = ((a[0] * v[0] + a[1] * v[1]) % p, (a[2] * v[0] + a[3] * v[1]) % p)
        if (w[0] * v[1] - w[1] * v[0]) % p == 0:
            lines.append(v)
    return lines


def is_decomposable(a, p):
    # two distinct invariant lines span F_p^2
    return len(invariant_lines(a, p)) >= 2


def is_absolutely_indecomposable(a, p):
    # not scalar, and the characteristic polynomial has a double root in F_p
    if a[1] == 0 and a[2] == 0 and a[0] == a[3]:
        return False
    tr, dt = (a[0] + a[3]) % p, det(a, p)
    return any((lam * lam - tr * lam + dt) % p == 0 and (2 * lam - tr) % p == 0 for lam in range(p))


def count_classes(p):
    mats = list(itertools.product(range(p), repeat=4))
    group = [g for g in mats if det(g, p) != 0]
    seen = set()
    counts = {"all": 0, "indecomposable": 0, "absolutely_indecomposable": 0}
    for a in mats:
        if a in seen:
            continue
        orbit = {mat_mul(mat_mul(g, a, p), inverse(g, p), p) for g in group}
        seen |= orbit
        counts["all"] += 1
        if not is_decomposable(a, p):
            counts["indecomposable"] += 1
        if is_absolutely_indecomposable(a, p):
            counts["absolutely_indecomposable"] += 1
    return counts


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("primes", nargs="*", type=int, default=[2, 3, 5])
    parser.add_argument("--out", help="write the JSON document here (default stdout)")
    parser.add_argument("--check", help="compare against an existing JSON document")
    args = parser.parse_args()

    doc = {"quiver": "one loop", "dimension": 2,
           "fields": {str(p): count_classes(p) for p in args.primes}}
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"

    if args.check:
        with open(args.check) as f:
            stored = json.load(f)
        if stored != doc:
            print("stored counts differ from enumeration", file=sys.stderr)
            return 1
        print("stored counts match enumeration")
        return 0
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
