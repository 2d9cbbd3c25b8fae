#!/usr/bin/env python3
"""Write the CSV data behind every standard figure into an output directory.

Usage: python scripts/figure_data.py [outdir]
"""

import io
import sys
from contextlib import redirect_stdout
from pathlib import Path

from srq1.cli import run_cli
from srq1.figures import FIGURE_SCANS


def main(outdir="figure_data"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for fig, scans in sorted(FIGURE_SCANS.items()):
        for i, argv in enumerate(scans):
            buf = io.StringIO()
            with redirect_stdout(buf):
                code = run_cli(argv)
            if code != 0:
                print(f"fig {fig} scan {i} failed with exit code {code}",
                      file=sys.stderr)
                return code
            path = out / f"fig{fig:02d}_{i}.csv"
            path.write_text(buf.getvalue())
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
