"""
Point transforms
================

Per-pixel intensity remapping on a synthetic scan: the photographic
negative, the power-law gray stretch, and arbitrary lookup tables.

Run from the repository root:

    python3 demos/01_point_transforms.py

Outputs land in demos/output/.
"""

import os

import numpy as np

from grayfilt import Image, apply_lut, gray_stretch, negate, save_pgm

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)


def make_scan(side=96):
    """A dim, noisy background with one bright sinuous stripe, roughly the
    look of a vessel cross-section in a low-contrast acquisition."""
    rng = np.random.default_rng(7)
    pixels = rng.integers(18, 42, size=(side, side)).astype(np.uint8)
    ys = np.arange(side)
    centers = (side / 2 + (side / 5) * np.sin(ys / 9.0)).astype(int)
    for y, cx in zip(ys, centers):
        pixels[y, max(cx - 1, 0):min(cx + 2, side)] = 200
    return Image(pixels)


scan = make_scan()
save_pgm(os.path.join(OUT, "scan.pgm"), scan)

# 1. The negative reverses intensity order: dark background becomes bright,
#    the bright stripe becomes dark. Content is unchanged, but structures
#    sitting near black are often easier to read near white.
neg = negate(scan)
save_pgm(os.path.join(OUT, "scan_negative.pgm"), neg)
print("negative: pixel 0 ->", negate(Image([[0]])).pixels[0, 0],
      "| pixel 200 ->", negate(Image([[200]])).pixels[0, 0])
print("negating twice restores the input:", negate(neg) == scan)

# 2. The gray stretch keeps the same orientation as the negative trick but
#    with a smooth curve: gamma > 1 compresses the low end of the scale and
#    expands the high end, leaving more distinct gray tones.
stretched = gray_stretch(scan, gamma=2.0)
save_pgm(os.path.join(OUT, "scan_stretched.pgm"), stretched)
for r in (0, 64, 128, 192, 255):
    s = gray_stretch(Image([[r]]), 2.0).pixels[0, 0]
    print(f"stretch gamma=2: {r:3d} -> {s:3d}")

# 3. Both of the above are special cases of a 256-entry lookup table.
#    Any monotone (or non-monotone) curve can be expressed this way;
#    here a table that posterizes a smooth ramp into four flat bands.
ramp = Image(np.tile(np.arange(256, dtype=np.uint8), (32, 1)))
bands = (np.arange(256) // 64) * 85
posterized = apply_lut(ramp, bands)
save_pgm(os.path.join(OUT, "ramp.pgm"), ramp)
save_pgm(os.path.join(OUT, "ramp_posterized.pgm"), posterized)
print("posterized gray levels:", sorted(set(posterized.pixels.ravel().tolist())))

print("wrote", sorted(os.listdir(OUT)))
