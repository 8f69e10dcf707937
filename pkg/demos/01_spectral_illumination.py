"""Global non-uniform illumination via random-kernel spectral filtering.

A small random kernel, multiplied against the image spectrum, realizes a
circular convolution that reshapes the low-frequency (illumination)
content.  Signed weights mean sampled filters can brighten, darken,
invert, or color-cast — the diversity is the point.
"""

import numpy as np

from physaug import clamp_unit, global_illumination, sample_kernel

from _common import OUTPUT_DIR, make_sample_photo, save_strip

photo = make_sample_photo()

# A delta kernel is the identity of circular convolution: sanity anchor.
delta = np.zeros((3, 3))
delta[1, 1] = 1.0
identity = global_illumination(photo, delta)
print(f"delta-kernel residual: {np.abs(identity - photo).max():.2e} (expect ~0)")

# Sampled kernels: each seed is a different illumination condition.
# Mild weight variance keeps most results short of full clamp saturation.
panels = [photo]
for seed in range(5):
    kernel = sample_kernel(np.random.default_rng(seed), size=3, sigma2=0.25)
    field = global_illumination(photo, kernel)
    panels.append(clamp_unit(field))
    print(f"seed {seed}: kernel sum {kernel.sum():+.2f}, "
          f"raw field range [{field.min():+.2f}, {field.max():+.2f}]")

path = save_strip(panels, OUTPUT_DIR / "01_illumination_variants.png")
print(f"wrote {path} (leftmost panel is the input)")
