#!/usr/bin/env python3
"""Plot S_a / S_f against lambda t / pi from a jc-sweep CSV."""

import argparse
import csv
import math
import sys


def load(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        sys.exit(f"{path}: no data rows")
    return {key: [float(r[key]) for r in rows] for key in rows[0]}


def dips(t, s, threshold):
    """Local minima of s below threshold."""
    return [(t[i], s[i]) for i in range(1, len(s) - 1) if s[i] < s[i - 1] and s[i] <= s[i + 1] and s[i] < threshold]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", nargs="+")
    ap.add_argument("-o", "--output", help="image file; shows a window when omitted")
    ap.add_argument("--check", action="store_true", help="print S_a dips instead of plotting")
    ap.add_argument("--threshold", type=float, default=0.05)
    args = ap.parse_args()

    data = [(path, load(path)) for path in args.csv]

    if args.check:
        for path, d in data:
            found = dips(d["scaled_t"], d["S_a"], args.threshold)
            print(f"{path}: {len(found)} dips below {args.threshold}")
            for t, s in found:
                print(f"  t = {t:.4f}  (nearest integer off by {abs(t - round(t)):.4f})  S_a = {s:.3e}")
        return

    import matplotlib

    if args.output:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(len(data), 1, figsize=(7, 2.6 * len(data)), sharex=True, squeeze=False)
    for ax, (path, d) in zip(axes[:, 0], data):
        t = d["scaled_t"]
        if "S_a" in d:
            ax.plot(t, d["S_a"], lw=1.0, label="S_a")
        if "S_f" in d:
            ax.plot(t, d["S_f"], lw=1.0, ls="--", label="S_f")
        for key, style in (("S_a_oracle", "k:"), ("S_f_oracle", "r:")):
            if key in d:
                ax.plot(t, d[key], style, lw=0.8, label=key)
        ax.axhline(math.log(2), color="grey", lw=0.5)
        ax.set_ylabel("entropy")
        ax.set_title(path, fontsize=9)
        ax.legend(fontsize=8, loc="upper right")
    axes[-1, 0].set_xlabel(r"$\lambda t / \pi$")
    fig.tight_layout()
    if args.output:
        fig.savefig(args.output, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
