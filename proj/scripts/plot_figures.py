#!/usr/bin/env python3
"""Plot the CSV files written by `mcfluct figure` into PNGs, one per figure id."""

import argparse
import csv
import re
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

NAME = re.compile(r"fig(?P<id>\w+?)_N(?P<N>\d+)_(?P<tag>\w+?)_(?P<kind>mce|ce|enumerated)\.csv$")


def read_curve(path):
    xs, ys = [], []
    with open(path, newline="") as f:
        rows = csv.reader(line for line in f if not line.startswith("#"))
        next(rows)
        for n, value in rows:
            xs.append(int(n))
            ys.append(float(value))
    return xs, ys


def label(tag, kind, N):
    name = tag.replace("g", "g=", 1).replace("_", "/") if tag.startswith("g") else tag
    return f"{name}, N={N} ({kind.upper() if kind != 'enumerated' else 'enumerated'})"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("directory", type=Path, help="directory passed to `mcfluct figure --out`")
    parser.add_argument("--out", type=Path, help="where to write PNGs (default: same directory)")
    args = parser.parse_args()
    out = args.out or args.directory
    out.mkdir(parents=True, exist_ok=True)

    figures = defaultdict(list)
    for path in sorted(args.directory.glob("fig*.csv")):
        m = NAME.match(path.name)
        if m:
            figures[m["id"]].append((m, path))
    if not figures:
        raise SystemExit(f"no figure CSVs in {args.directory}")

    for fig_id, curves in sorted(figures.items()):
        fig, ax = plt.subplots(figsize=(6, 4))
        for m, path in curves:
            xs, ys = read_curve(path)
            text = label(m["tag"], m["kind"], m["N"])
            if m["kind"] == "enumerated":
                ax.plot(xs, ys, "o", markersize=4, fillstyle="none", label=text)
            else:
                ax.plot(xs, ys, "--" if m["kind"] == "ce" else "-", linewidth=1.2, label=text)
        ax.set_xlabel("n")
        ax.set_ylabel(r"$\delta N_0$")
        ax.set_title(f"figure {fig_id}")
        ax.legend(fontsize=7)
        fig.tight_layout()
        target = out / f"fig{fig_id}.png"
        fig.savefig(target, dpi=150)
        plt.close(fig)
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
