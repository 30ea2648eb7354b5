"""Print (#Sp, #AP, #AP_odd) per genus and compare with the published counts.

    python scripts/reproduce_counts.py --to 16 --jobs 4
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from doldcalc.spectra_enum import summarize  # noqa: E402
from paper_tables import TABLE3  # noqa: E402

PUBLISHED = {g: (sp, ap, odd) for g, sp, ap, odd in TABLE3}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--from", dest="g_from", type=int, default=1)
    p.add_argument("--to", dest="g_to", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()

    bad = 0
    print(f"{'g':>3} {'#Sp':>9} {'#AP':>8} {'#AP_odd':>8} {'secs':>7}  published")
    for g in range(args.g_from, args.g_to + 1):
        t = time.perf_counter()
        s = summarize(g, args.jobs)
        dt = time.perf_counter() - t
        ref = PUBLISHED.get(g)
        mark = "-" if ref is None else ("ok" if ref == s.as_tuple() else f"MISMATCH {ref}")
        bad += ref is not None and ref != s.as_tuple()
        print(f"{g:>3} {s.count_spectra:>9} {s.count_ap_sets:>8} {s.count_mper_sets:>8} {dt:>7.2f}  {mark}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
