#!/usr/bin/env python3
"""Show the packer's bins-per-bundle ratio approaching the knapsack optimum.

Replays growing numbers of witness bundles through the online packer at
k = 12, mu = 12/11 and prints the exact ratio next to the closed-form
optimum 391/231 it converges to.
"""

from fractions import Fraction

from harmonic_knapsack import (
    HarmonicParams,
    adversarial_instance,
    harmonic_pack,
    solve_closed_form,
    to_decimal,
)


def main() -> int:
    params = HarmonicParams(12, Fraction(12, 11))
    target = solve_closed_form(params).opt
    print(f"closed-form optimum: {target} = {to_decimal(target, 8)}")
    print(f"{'bundles':>8}  {'bins':>6}  {'ratio':>12}  {'decimal':>10}")
    for n in (10, 30, 100, 300, 1000, 3000):
        result = harmonic_pack(params, adversarial_instance(params, n, Fraction(1, 1000)))
        print(
            f"{n:>8}  {result.bins_used:>6}  {str(result.ratio):>12}  "
            f"{to_decimal(result.ratio, 6):>10}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
