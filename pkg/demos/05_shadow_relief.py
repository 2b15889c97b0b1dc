"""
Shadow relief
=============

A directional difference (northeast neighbor minus southwest neighbor) plus
a mid-gray bias turns edges into a relief-lit rendering: flat areas sit at
neutral 128, one side of each intensity step is highlighted and the other
shadowed. Inverting swaps the lit and shadowed sides.

    python3 demos/05_shadow_relief.py
"""

import os

import numpy as np

from grayfilt import Image, save_pgm, shadow_invert, shadow_ne

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

# A tiny worked case first: a single bright dot. The rendering stays at 128
# everywhere except on the two diagonals through the dot.
dot = np.zeros((3, 3), dtype=np.uint8)
dot[1, 1] = 100
print("shadow of a single dot:")
print(shadow_ne(Image(dot)).pixels)

flat = Image(np.full((4, 4), 90, dtype=np.uint8))
print("flat region maps to:", shadow_ne(flat).pixels[0, 0])

# Now a richer scene: bright rings, whose edges face every direction.
side = 96
yy, xx = np.mgrid[0:side, 0:side]
radius = np.sqrt((yy - side / 2) ** 2 + (xx - side / 2) ** 2)
rings = np.where((radius.astype(int) // 8) % 2 == 0, 190, 40).astype(np.uint8)
img = Image(rings)

save_pgm(os.path.join(OUT, "rings.pgm"), img)
save_pgm(os.path.join(OUT, "rings_shadow.pgm"), shadow_ne(img))
save_pgm(os.path.join(OUT, "rings_shadow_inverted.pgm"), shadow_invert(img))

print("shadow and inverted shadow written; inversion is an exact negative:",
      shadow_invert(img) == Image(255 - shadow_ne(img).pixels))
