"""
The convolution engine
======================

Correlation vs. true convolution (kernel rotated by 180 degrees), impulse
responses, border policies, and kernels loaded from text files.

    python3 demos/03_convolution.py
"""

import os

import numpy as np

from grayfilt import (
    Image,
    Kernel,
    clamp_to_display,
    convolve,
    correlate,
    parse_kernel,
    rot180,
    save_pgm,
)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

# 1. An impulse image makes the anchoring visible: correlating stamps the
#    kernel flipped, convolving stamps it as-is.
impulse = np.zeros((5, 5), dtype=np.uint8)
impulse[2, 2] = 1
img = Image(impulse)
asymmetric = Kernel([[1, 2, 3], [4, 5, 6], [7, 8, 9]])

print("kernel:")
print(asymmetric.coeffs)
print("correlate impulse response (flipped):")
print(correlate(img, asymmetric, border="zero").values[1:4, 1:4])
print("convolve impulse response (as-is):")
print(convolve(img, asymmetric, border="zero").values[1:4, 1:4])

# The two operations coincide exactly when the kernel is point-symmetric,
# and convolve is always correlate with the rotated kernel.
rng = np.random.default_rng(3)
probe = Image(rng.integers(0, 256, (16, 16), np.uint8))
print("convolve == correlate(rot180):",
      convolve(probe, asymmetric) == correlate(probe, rot180(asymmetric)))

# 2. Border policies decide what the window sees beyond the frame.
#    "replicate" extends the nearest pixel (no artificial gradients at the
#    frame); "zero" treats the outside as black.
edge_img = Image(np.full((6, 6), 200, dtype=np.uint8))
ones = Kernel(np.ones((3, 3)))
print("replicate border corner sum:", correlate(edge_img, ones).values[0, 0])
print("zero border corner sum:     ",
      correlate(edge_img, ones, border="zero").values[0, 0])

# 3. Kernels can come from small text files: a dimensions line then rows.
kernel_path = os.path.join(OUT, "gaussian3.txt")
with open(kernel_path, "w") as fh:
    fh.write("3 3\n1 2 1\n2 4 2\n1 2 1\n")
smoothing = parse_kernel(open(kernel_path).read())

noisy = rng.integers(0, 256, (96, 96)).astype(np.uint8)
smoothed = convolve(Image(noisy), smoothing)
save_pgm(os.path.join(OUT, "noise.pgm"), Image(noisy))
save_pgm(os.path.join(OUT, "noise_smoothed.pgm"),
         clamp_to_display(smoothed, "rescale"))
print("smoothed noise written; signed range",
      f"[{smoothed.values.min():.0f}, {smoothed.values.max():.0f}]")
