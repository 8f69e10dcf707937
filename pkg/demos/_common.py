"""Shared helpers for the demo scripts."""

from pathlib import Path

import numpy as np

from physaug import save_image

OUTPUT_DIR = Path(__file__).parent / "output"


def make_sample_photo(height=128, width=192):
    """Synthetic photo stand-in: sky gradient, sun disc, hills, texture."""
    y, x = np.mgrid[0:height, 0:width].astype(float)
    ny, nx = y / height, x / width

    sky_r = 0.55 + 0.25 * (1 - ny)
    sky_g = 0.65 + 0.2 * (1 - ny)
    sky_b = 0.85 - 0.15 * ny
    img = np.stack([sky_r, sky_g, sky_b], axis=-1)

    sun = np.exp(-(((nx - 0.75) ** 2 + (ny - 0.25) ** 2) / 0.004))
    img += sun[..., None] * np.array([0.35, 0.3, 0.1])

    hills = ny > 0.62 + 0.06 * np.sin(2 * np.pi * 2.3 * nx)
    img[hills] = np.stack([0.18 + 0.1 * ny, 0.32 + 0.15 * ny, 0.12 + 0.05 * ny], axis=-1)[hills]

    rng = np.random.default_rng(7)
    img += rng.normal(0, 0.01, size=img.shape)
    return np.clip(img, 0, 1)


def normalize_for_view(field):
    """Map a signed field onto [0, 1] for visualization."""
    lo, hi = field.min(), field.max()
    if hi - lo < 1e-12:
        return np.full_like(field, 0.5)
    return (field - lo) / (hi - lo)


def save_strip(images, path, pad=4):
    """Tile equally sized images horizontally with white padding."""
    height, width = images[0].shape[:2]
    strip = np.ones((height, len(images) * (width + pad) - pad, 3))
    for i, img in enumerate(images):
        x0 = i * (width + pad)
        strip[:, x0 : x0 + width] = img
    OUTPUT_DIR.mkdir(exist_ok=True)
    save_image(strip, path)
    return path
