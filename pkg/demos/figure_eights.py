"""Closed figure-eights for a few exponents, written as SVG files.

Run: python3 demos/figure_eights.py
"""

from pathlib import Path

from pelastica.curves import closure_check, figure_eight, to_svg

OUT = Path(__file__).with_name("out")


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for p in (6 / 5, 2.0, 10.0):
        tr = figure_eight(p, N=1, n_samples=3001)
        rep = closure_check(tr)
        name = OUT / f"eight_p{p:.3g}.svg"
        name.write_text(to_svg(tr))
        print(f"p={p:<5.3g} q*={tr.params['q']:.12f}  gap={rep.position_gap:.1e}  -> {name.name}")


if __name__ == "__main__":
    main()
