"""Minimal genus (exact and odd-only) for every nonempty subset of {1..N}.

    python scripts/min_genus_survey.py --max 5
"""
import argparse
from itertools import combinations

from doldcalc.genus_opt import min_genus_exact, min_genus_odd, upper_bound_genus
from doldcalc.literals import format_set, format_spectrum


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max", type=int, default=5)
    args = p.parse_args()
    universe = range(1, args.max + 1)
    print("set\tbound\tmin\twitness\tmin_odd")
    for m in range(1, args.max + 1):
        for A in combinations(universe, m):
            exact = min_genus_exact(A)
            odd = min_genus_odd(A).genus if all(n % 2 for n in A) else "-"
            print(
                f"{format_set(A)}\t{upper_bound_genus(A).genus}\t{exact.genus}"
                f"\t{format_spectrum(exact.spectrum)}\t{odd}"
            )


if __name__ == "__main__":
    main()
