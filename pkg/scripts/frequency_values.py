"""Compare the reported frequencies f(324)=8, f(291)=9, f(312)=10 against
both readings: the unrestricted f(m) and the count |B(m, 21)| with b + c_1 <= 21."""

import argparse
import json

from partition_lab.squared import B_solutions, count_B, frequency

REPORTED = {324: 8, 291: 9, 312: 10}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=21)
    ap.add_argument("--show", action="store_true", help="print the solution tuples")
    args = ap.parse_args()

    rows = []
    for m, reported in REPORTED.items():
        rows.append({"m": m, "reported": reported, "f": frequency(m), "B": count_B(m, args.n)})
        if args.show:
            for sset in B_solutions(m, args.n):
                for sol in sset.solutions:
                    print(m, sset.a, sset.b, tuple(x for x in sol if x))
    both = {
        "global f(m)": all(r["f"] == r["reported"] for r in rows),
        f"|B(m, {args.n})|": all(r["B"] == r["reported"] for r in rows),
    }
    print(json.dumps({"rows": rows, "matches": both}, indent=2))


if __name__ == "__main__":
    main()
