#!/usr/bin/env python3
"""Writes the synthetic winter-storm directional spectrum bundled with the repo.

The matrix is a JONSWAP frequency spectrum times a cos-2s spreading function (half-angle form),
scaled to a target significant height. Cell widths use the same midpoint rule
as the C++ code (half cells at both ends), so `hs_reported` equals 4 sqrt(m0)
of the written matrix.
"""
import math
import sys

G = 9.81
HS_TARGET = 6.5      # m
TP = 14.0            # s
GAMMA = 3.3
SPREAD_S = 10
MEAN_DIR_DEG = 270.0


def cell_widths(axis):
    n = len(axis)
    if n < 2:
        return [1.0] * n
    w = [0.0] * n
    w[0] = (axis[1] - axis[0]) / 2
    w[-1] = (axis[-1] - axis[-2]) / 2
    for i in range(1, n - 1):
        w[i] = (axis[i + 1] - axis[i - 1]) / 2
    return w


def jonswap(f):
    fp = 1.0 / TP
    sigma = 0.07 if f <= fp else 0.09
    r = math.exp(-((f - fp) ** 2) / (2 * sigma**2 * fp**2))
    return G**2 * (2 * math.pi) ** -4 * f**-5 * math.exp(-1.25 * (fp / f) ** 4) * GAMMA**r


def main(path):
    freqs = [round(0.04 + 0.01 * i, 2) for i in range(27)]
    dirs_deg = [MEAN_DIR_DEG + d for d in range(-84, 85, 12)]
    dirs = [math.radians(d) for d in dirs_deg]
    df = cell_widths(freqs)
    dth = cell_widths(dirs)

    spread = [max(math.cos((d - math.radians(MEAN_DIR_DEG)) / 2), 0.0) ** (2 * SPREAD_S) for d in dirs]
    norm = sum(s * w for s, w in zip(spread, dth))
    spread = [s / norm for s in spread]

    energy = [jonswap(f) for f in freqs]
    m0_raw = sum(e * w for e, w in zip(energy, df))
    scale = (HS_TARGET / 4) ** 2 / m0_raw
    matrix = [[scale * e * s for s in spread] for e in energy]

    printed = [[float(f"{v:.9g}") for v in row] for row in matrix]
    m0 = sum(printed[i][j] * df[i] * dth[j] for i in range(len(freqs)) for j in range(len(dirs)))
    hs = 4 * math.sqrt(m0)

    with open(path, "w", newline="\n") as out:
        out.write("# SYNTHETIC sample: not measured data.\n")
        out.write("# Shape modeled on a winter storm sea state (JONSWAP, Tp 14 s, cos-2s spreading with s = 10).\n")
        out.write("# Regenerate with data/make_sample_spectrum.py.\n")
        out.write("station: Les Pierres Noires (CANDHIS buoy), synthetic\n")
        out.write("month: 2014-02\n")
        out.write(f"hs_reported: {hs:.3f} m\n")
        out.write("freqs_hz: " + " ".join(f"{f:.9g}" for f in freqs) + "\n")
        out.write("dirs_rad: " + " ".join(f"{d:.9g}" for d in dirs) + "\n")
        for row in printed:
            out.write(" ".join(f"{v:.9g}" for v in row) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "pierres_noires_2014_02_synthetic.spec")
