"""Coxeter polynomials of Cambrian lattices across Coxeter elements and duality classes.

Usage: python3 scripts/coxeter_polynomials.py [--types A3,B3,H3,A4]
"""
import argparse

from cambrep.coxeter import build_group, cambrian
from cambrep.exact import poly_str
from cambrep.poset import dual, flip_flop, is_isomorphic
from cambrep.reptype import coxeter_polynomial


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--types", default="A3,B3,H3,A4")
    args = parser.parse_args()
    for t in args.types.split(","):
        G = build_group(t)
        lattices = {c: cambrian(G, c) for c in G.coxeter_elements()}
        reps = []
        for P in lattices.values():
            if not any(is_isomorphic(P, Q) is not None or is_isomorphic(dual(P), Q) is not None for Q in reps):
                reps.append(P)
        polys = {coxeter_polynomial(P) for P in lattices.values()}
        flips = all(coxeter_polynomial(flip_flop(P)) == coxeter_polynomial(P) for P in lattices.values())
        print(f"{t}: {len(lattices)} Coxeter elements, {len(reps)} lattices up to duality, "
              f"{len(polys)} distinct polynomial(s), flip-flop invariant: {flips}")
        for p in sorted(polys):
            print(f"    {poly_str(p)}")


if __name__ == "__main__":
    main()
