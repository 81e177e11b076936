#!/usr/bin/env python3
"""Export readout spectra for a batch of (modulus, base) pairs as CSV.

Each pair becomes one file named spectrum_N{n}_y{y}_L{qubits}.csv in the
output directory. Small registers are dumped exhaustively; large ones
fall back to the peaks-plus-rings truncation with a coverage column.
"""

from __future__ import annotations

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from shorsim.cli import main as shorsim_main
from shorsim.model import safe_qubits

DEFAULT_CASES = [
    # modulus, base, qubits (None means the safe size)
    (187, 36, None),
    (187, 56, None),
    (1328881, 205920, None),
    (1328881, 505980, None),
]


def parse_case(text: str) -> tuple[int, int, int | None]:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected N:Y or N:Y:L, got {text!r}")
    n, y = int(parts[0]), int(parts[1])
    qubits = int(parts[2]) if len(parts) == 3 else None
    return n, y, qubits


def run(cases: list[tuple[int, int, int | None]], out_dir: pathlib.Path, rings: int) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for n, y, qubits in cases:
        qubits = qubits if qubits is not None else safe_qubits(n)
        path = out_dir / f"spectrum_N{n}_y{y}_L{qubits}.csv"
        argv = ["dist", str(n), str(y), "--qubits", str(qubits), "--rings", str(rings),
                "--out", str(path)]
        code = shorsim_main(argv)
        status = "ok" if code == 0 else f"failed ({code})"
        print(f"{path}: {status}")
        worst = max(worst, code)
    return worst


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "cases",
        nargs="*",
        type=parse_case,
        metavar="N:Y[:L]",
        help="modulus:base[:qubits] triples; a stock batch runs when omitted",
    )
    parser.add_argument(
        "--out-dir", type=pathlib.Path, default=pathlib.Path("spectra"), metavar="DIR"
    )
    parser.add_argument(
        "--rings", type=int, default=4, metavar="K",
        help="neighbor rings per peak when the register is too large to dump (default 4)",
    )
    args = parser.parse_args()
    cases = args.cases if args.cases else DEFAULT_CASES
    return run(cases, args.out_dir, args.rings)


if __name__ == "__main__":
    sys.exit(main())
