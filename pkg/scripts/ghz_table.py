#!/usr/bin/env python3
"""Print the GHZ closed-form table next to the dynamic-program values."""

import argparse

from qcorr import ccm, ghz_closed_form, make_ghz


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-direct", type=int, default=8,
                        help="largest size to cross-check with the dynamic program")
    args = parser.parse_args()

    print(f"{'n':>3} {'closed':>12} {'direct':>12} {'diff':>10}")
    for n in range(2, 11):
        closed = ghz_closed_form(n)
        if n <= args.max_direct:
            direct = ccm(make_ghz(n).to_density()).value
            print(f"{n:>3} {closed:>12.6f} {direct:>12.6f} {abs(closed - direct):>10.2e}")
        else:
            print(f"{n:>3} {closed:>12.6f} {'-':>12} {'-':>10}")


if __name__ == "__main__":
    main()
