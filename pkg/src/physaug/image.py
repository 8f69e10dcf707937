"""Image buffer contract and value-range management.

Images are plain numpy arrays of shape (H, W, 3), RGB channel order,
float64 values nominally in [0, 1].  Intermediate perturbation fields may
leave that range; every public augmentation clamps its final output back
into [0, 1].  8-bit file content maps to the unit range by v / 255.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_image",
    "clamp_unit",
    "quantize_roundtrip",
    "quantize_to_u8",
    "u8_to_unit",
]


def as_image(array) -> np.ndarray:
    """Validate and return an (H, W, 3) float64 image buffer.

    Raises ValueError on wrong shape, empty dimensions, or non-finite
    values.  Does not enforce the [0, 1] range: inputs are nominally in
    range but intermediates are allowed outside it.
    """
    img = np.asarray(array, dtype=np.float64)
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) image, got shape {img.shape}")
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValueError(f"image dimensions must be >= 1, got shape {img.shape}")
    bad = ~np.isfinite(img)
    if bad.any():
        index = tuple(int(i) for i in np.argwhere(bad)[0])
        raise ValueError(f"non-finite value at pixel index {index}")
    return img


def clamp_unit(img: np.ndarray) -> np.ndarray:
    """Clamp every value into [0, 1]; shape is preserved.

    Raises ValueError naming the first offending pixel index if the input
    contains NaN or infinity.
    """
    arr = np.asarray(img, dtype=np.float64)
    bad = ~np.isfinite(arr)
    if bad.any():
        index = tuple(int(i) for i in np.argwhere(bad)[0])
        raise ValueError(f"non-finite value at pixel index {index}")
    return np.clip(arr, 0.0, 1.0)


def quantize_to_u8(img: np.ndarray) -> np.ndarray:
    """Map unit-range values onto uint8 with round-half-away-from-zero.

    Input must already lie in [0, 1]; out-of-range values are a contract
    violation, not silently clipped.
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
        raise ValueError("quantization input must lie in [0, 1]; clamp first")
    # floor(v*255 + 0.5) is round-half-away-from-zero for nonnegative v.
    return np.floor(arr * 255.0 + 0.5).astype(np.uint8)


def u8_to_unit(arr: np.ndarray) -> np.ndarray:
    """Convert uint8 image content to unit-range float64 (v / 255)."""
    return np.asarray(arr, dtype=np.float64) / 255.0


def quantize_roundtrip(img: np.ndarray) -> np.ndarray:
    """Snap unit-range values onto the 8-bit grid: v -> round(v*255)/255.

    Idempotent: applying it twice equals applying it once, so an image
    that already went through a save/load cycle is reproduced exactly.
    """
    return u8_to_unit(quantize_to_u8(img))
