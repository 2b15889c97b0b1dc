"""
Laplacian filtering and unsharp masking
=======================================

Second-derivative edge response, Laplacian sharpening, and sharpening by
subtracting a blurred copy, demonstrated on a soft-edged synthetic blob.

    python3 demos/02_sharpening.py
"""

import os

import numpy as np

from grayfilt import (
    Image,
    box_blur,
    clamp_to_display,
    laplacian,
    laplacian_sharpen,
    save_pgm,
    unsharp_mask,
)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)


def make_blob(side=96):
    """A soft luminous blob with one crisp rim: the smooth interior barely
    excites a second-derivative filter, the rim excites it strongly."""
    yy, xx = np.mgrid[0:side, 0:side]
    r2 = (yy - side / 2) ** 2 + (xx - side / 2) ** 2
    soft = 40 + 150 * np.exp(-r2 / (2 * (side / 6) ** 2))
    soft[r2 < (side / 8) ** 2] = 230
    return Image(soft.astype(np.uint8))


blob = make_blob()
save_pgm(os.path.join(OUT, "blob.pgm"), blob)

# 1. The Laplacian responds where intensity curves, not where it merely
#    slopes, and it is isotropic: edge direction does not matter. Its raw
#    output is signed, so it needs a display mapping before saving.
for variant in ("four", "eight"):
    response = laplacian(blob, variant)
    print(f"laplacian {variant}: signed range "
          f"[{response.values.min():.0f}, {response.values.max():.0f}]")
    save_pgm(os.path.join(OUT, f"blob_laplacian_{variant}.pgm"),
             clamp_to_display(response, "rescale"))

# On a constant image the response is exactly zero everywhere.
flat = Image(np.full((8, 8), 77, dtype=np.uint8))
print("laplacian of a constant is zero:",
      bool(np.all(laplacian(flat, "eight").values == 0)))

# 2. Laplacian sharpening subtracts the response from the image (the center
#    stencil coefficient is negative), boosting edges while leaving flat
#    regions untouched.
save_pgm(os.path.join(OUT, "blob_sharpened.pgm"), laplacian_sharpen(blob, "eight"))
print("sharpening preserves flats:", laplacian_sharpen(flat, "four") == flat)

# 3. Unsharp masking reaches a similar result from the other direction:
#    blur, subtract the blur from the original, and display the residue.
#    With the default clamp display only the bright side of edges survives.
save_pgm(os.path.join(OUT, "blob_blurred.pgm"), box_blur(blob, radius=2))
save_pgm(os.path.join(OUT, "blob_unsharp.pgm"), unsharp_mask(blob, radius=2))
save_pgm(os.path.join(OUT, "blob_unsharp_rescaled.pgm"),
         unsharp_mask(blob, radius=2, display="rescale"))

print("unsharp of a constant is black:",
      bool(np.all(unsharp_mask(flat).pixels == 0)))
print("wrote", sorted(p for p in os.listdir(OUT) if p.startswith("blob")))
