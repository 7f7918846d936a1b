"""Verification checks on every family for one exponent, as a table.

Run: python3 demos/verify_summary.py [p]
"""

import sys

from pelastica.verify import run_suite


def main() -> None:
    p = float(sys.argv[1]) if len(sys.argv) > 1 else 3.0
    print(f"{'check':<20}{'family':<12}{'residual':>12}{'tolerance':>12}  ok")
    for rep in run_suite(p):
        print(f"{rep.name:<20}{rep.metadata['family']:<12}{rep.residual_norm:>12.2e}{rep.tolerance:>12.1e}  {rep.passed}")
    print("\nwith the multiplier scaled by 1.1:")
    for rep in run_suite(p, "weak", families=("wavelike", "orbitlike", "circular")):
        bad = run_suite(p, "weak", families=(rep.metadata["family"],), lam=1.1 * rep.metadata["lambda"])[0]
        print(f"{'weak_residual':<20}{rep.metadata['family']:<12}{bad.residual_norm:>12.2e}{bad.tolerance:>12.1e}  {bad.passed}")


if __name__ == "__main__":
    main()
