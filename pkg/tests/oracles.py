"""Independent brute-force oracles for the numeric paths.

These reimplement the contracts with plain per-pixel Python loops and
stay deliberately independent of the library's FFT/vectorized code: a
shared bug cannot hide in both routes.
"""

from __future__ import annotations

import math

import numpy as np


def circular_convolve_pixelwise(img: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Direct O(H*W*n^2) circular convolution, kernel anchored at its
    geometric center."""
    height, width, channels = img.shape
    n = kernel.shape[0]
    c = n // 2
    out = np.zeros_like(img, dtype=np.float64)
    for ch in range(channels):
        for y in range(height):
            for x in range(width):
                acc = 0.0
                for dy in range(-c, c + 1):
                    for dx in range(-c, c + 1):
                        acc += kernel[c + dy, c + dx] * img[(y - dy) % height, (x - dx) % width, ch]
                out[y, x, ch] = acc
    return out


def planar_wave_pixelwise(frequency, orientation, phase_offset, height, width, coordinate_scale=1.0):
    """Scalar-loop evaluation of one unit-norm planar wave."""
    raw = np.empty((height, width))
    for y in range(height):
        for x in range(width):
            arg = (
                x * coordinate_scale * math.cos(orientation)
                + y * coordinate_scale * math.sin(orientation)
                + phase_offset
            )
            raw[y, x] = math.cos(2.0 * math.pi * frequency * arg)
    norm = math.sqrt(float((raw * raw).sum()))
    if norm < 1e-12:
        return np.full((height, width), 1.0 / math.sqrt(height * width))
    return raw / norm


def occlusion_field_pixelwise(spec) -> np.ndarray:
    """Scalar-loop composition of modulation * wave over particle types."""
    out = np.zeros((spec.height, spec.width, 3))
    for triple, modulation in zip(spec.waves, spec.modulations):
        for c, ws in enumerate(triple):
            wave = planar_wave_pixelwise(
                ws.frequency, ws.orientation, ws.phase_offset,
                spec.height, spec.width, ws.coordinate_scale,
            )
            for y in range(spec.height):
                for x in range(spec.width):
                    out[y, x, c] += modulation[y, x] * wave[y, x]
    return out
