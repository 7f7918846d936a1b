"""Classify curvature data in every family and trace one period of each.

Run: python3 demos/classify_tour.py
"""

from pathlib import Path

from pelastica.classify import FlatCoreSpec, classify
from pelastica.curves import to_svg, trace_family
from pelastica.verify import class_window

OUT = Path(__file__).with_name("out")

CASES = [
    # (p, lambda, (w0, w'0), hint)
    (3.0, -1.0, (0.4, 0.3), None),
    (3.0, 1.0, (0.5, 0.0), None),
    (3.0, 1.0, ((1.0 / 2.0) ** (2.0 / 3.0), 0.0), None),
    (1.5, 1.0, (0.0, 0.2), None),
    (1.5, 0.0, (0.0, 1.0), None),
    (4.0, 2.0, (0.0, 0.0), FlatCoreSpec(3, (1, -1, 1), (0.5, 1.0, 0.3))),
    (4.0, 2.0, (0.0, 0.0), "linear"),
]


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for i, (p, lam, data, hint) in enumerate(CASES):
        cls = classify(p, lam, data, hint)
        fields = {k: v for k, v in cls.to_dict().items() if k not in ("p", "lambda", "family")}
        print(f"p={p:<4} lambda={lam:<5} data={data} -> {cls.family}")
        print("   ", {k: (round(v, 6) if isinstance(v, float) else v) for k, v in fields.items()})
        tr = trace_family(cls, s_range=class_window(cls), n_samples=1500)
        (OUT / f"tour_{i}_{cls.family}.svg").write_text(to_svg(tr))


if __name__ == "__main__":
    main()
