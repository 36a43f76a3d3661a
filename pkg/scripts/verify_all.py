#!/usr/bin/env python3
"""Run every theorem verification at its default scale and print the reports.

Exit status is 0 only if all five drivers pass.  Equivalent to running the
``hsw verify`` subcommands one after another.
"""

import sys

from hsw.cli import main

RUNS = [
    ["verify", "coincidence", "--k", "2", "--order", "12"],
    ["verify", "coincidence", "--k", "1"],
    ["verify", "coincidence", "--k", "3"],
    ["verify", "addition", "--max-degree", "9", "--z", "z"],
    ["verify", "pythagoras", "--max-N", "5", "--z", "z"],
    ["verify", "regularization", "--count", "100", "--max-weight", "5"],
    ["verify", "harmonic-hom", "--letters", "2,3,5/2", "--max-weight", "2"],
]

if __name__ == "__main__":
    worst = 0
    for argv in RUNS:
        print(f"$ hsw {' '.join(argv)}")
        worst = max(worst, main(argv))
        print()
    sys.exit(worst)
