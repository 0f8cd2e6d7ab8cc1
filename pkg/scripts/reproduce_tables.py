#!/usr/bin/env python3
"""Regenerate the reference tables and the limit bracket on stdout.

Everything is exact; the decimals are rendered from the fractions they sit
next to. Equivalent CLI calls are shown before each block.
"""

from harmonic_knapsack.cli import run


def main() -> int:
    for family in ("lee", "caprara", "refined"):
        print(f"$ harmonic-knapsack table --family {family} --k-min 2 --k-max 12")
        run(["table", "--family", family, "--k-min", "2", "--k-max", "12"])
        print()
    print("$ harmonic-knapsack sylvester --count 7")
    run(["sylvester", "--count", "7"])
    print()
    print("$ harmonic-knapsack limit --terms 10")
    run(["limit", "--terms", "10"])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
