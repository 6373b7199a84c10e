#!/usr/bin/env python3
"""Regenerate corpus/*.txt from the built-in example definitions."""

import argparse
from pathlib import Path

from lexshell import example, format_complex
from lexshell.corpus import EXAMPLE_IDS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in EXAMPLE_IDS:
        if name == "path-graph(k)":  # parametric, no single file
            continue
        (out / f"{name}.txt").write_text(format_complex(example(name), header=name))
        print(out / f"{name}.txt")


if __name__ == "__main__":
    main()
