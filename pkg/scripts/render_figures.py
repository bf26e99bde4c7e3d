#!/usr/bin/env python3
"""Emit the standard gallery of SVG pictures: the four-region shading
of the alcove plane, a theta lower interval, and its extension across
the distinguished wall.

Usage: python scripts/render_figures.py [--out-dir figures]
"""

import argparse
import pathlib

from bruhat_forge import regions, weyl
from bruhat_forge.render import render_interval, render_regions


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--radius", type=int, default=8)
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    identity = weyl.identity()

    (out / "four_regions.svg").write_text(render_regions(args.radius) + "\n")
    (out / "theta_1_3_lower.svg").write_text(
        render_interval(identity, regions.theta((1, 3))) + "\n"
    )
    (out / "theta_1_3_s_lower.svg").write_text(
        render_interval(identity, regions.theta1((1, 3))) + "\n"
    )
    for name in ("four_regions", "theta_1_3_lower", "theta_1_3_s_lower"):
        print(f"wrote {out / (name + '.svg')}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
