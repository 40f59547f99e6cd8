"""Divergence table for the Euclidean group A~3.

The canonical-word divergence is unbounded for this group; the table shows
the observed maxima growing with the radius, in contrast with the constant
columns the 2-dimensional groups produce (see ft_tables.py).
"""

import argparse
from pathlib import Path

from coxlang import divergence_scan, parse_system
from coxlang.experiments import divergence_tsv

GROUP = Path(__file__).resolve().parent.parent / "groups" / "a3tilde.cox"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radii", default="8,12,16")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    radii = tuple(int(r) for r in args.radii.split(","))
    system = parse_system(GROUP.read_text())
    print(divergence_tsv(divergence_scan(system, radii,
                                         threads=args.threads), system),
          end="")


if __name__ == "__main__":
    main()
