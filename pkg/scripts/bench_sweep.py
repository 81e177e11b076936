#!/usr/bin/env python3
"""Sweep work-register sizes below the safe size and time the sessions.

Prints the per-size summary table and writes one CSV row per run, so
the success/failure mix as the register shrinks can be plotted later.
"""

from __future__ import annotations

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from shorsim.cli import main as shorsim_main
from shorsim.model import safe_qubits


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int, nargs="?", default=25610987, metavar="N")
    parser.add_argument(
        "--sizes",
        default=None,
        metavar="L1,L2,...",
        help="register sizes; default sweeps from the safe size down by 5s to 30",
    )
    parser.add_argument("--runs", type=int, default=4, metavar="R")
    parser.add_argument("--seed", type=int, default=None, metavar="S")
    parser.add_argument("--workers", type=int, default=1, metavar="W")
    parser.add_argument(
        "--out", type=pathlib.Path, default=pathlib.Path("bench_sweep.csv"), metavar="PATH"
    )
    args = parser.parse_args()

    if args.sizes is None:
        top = safe_qubits(args.n)
        sizes = ",".join(str(s) for s in range(top, 29, -5))
    else:
        sizes = args.sizes

    argv = [
        "bench", str(args.n),
        "--qubits", sizes,
        "--runs", str(args.runs),
        "--workers", str(args.workers),
        "--out", str(args.out),
    ]
    if args.seed is not None:
        argv += ["--seed", str(args.seed)]
    code = shorsim_main(argv)
    if code == 0:
        print(f"per-run rows written to {args.out}")
    return code


if __name__ == "__main__":
    sys.exit(main())
