"""Which cycle lengths admit a cycle-plus-vertex wild witness in rank-3 Cambrian lattices.

Usage: python3 scripts/witness_lengths.py [--max-cycle 14]
"""
import argparse
import time

from cambrep.coxeter import build_group, cambrian
from cambrep.reptype import hereditary_wild_cert, validate_certificate


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-cycle", type=int, default=14)
    parser.add_argument("--types", default="A3,B3,H3")
    args = parser.parse_args()
    for t in args.types.split(","):
        G = build_group(t)
        for c in G.coxeter_elements():
            P = cambrian(G, c)
            start = time.perf_counter()
            found = []
            for length in range(4, args.max_cycle + 1):
                cert = hereditary_wild_cert(P, cycle_lengths=[length])
                if cert is not None and validate_certificate(P, cert)[0]:
                    found.append(length)
            print(f"{t:3s} c={','.join(map(str, c))}  n={P.n:3d}  cycle lengths {found}  "
                  f"({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
