"""2D Fourier transforms and global non-uniform illumination.

Illumination variation concentrates in the low-frequency part of an
image's spectrum, so a diverse family of non-uniform illumination
conditions is generated by multiplying the image spectrum with the
spectrum of a small random kernel.  A pointwise spectral product is
exactly circular (wrap-around) convolution, which is the boundary
handling used here.

DFT convention: ``fft2`` is the standard unnormalized forward transform;
``ifft2`` carries the 1/(H*W) factor, so ``ifft2(fft2(x)) == x`` up to
floating-point residue.  Arbitrary (non-power-of-two) sizes are
supported.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "fft2",
    "ifft2",
    "sample_kernel",
    "embed_kernel",
    "global_illumination",
]


def fft2(field: np.ndarray) -> np.ndarray:
    """Unnormalized forward 2D DFT of a single-channel field."""
    arr = np.asarray(field)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2D field, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"field dimensions must be >= 1, got shape {arr.shape}")
    return np.fft.fft2(arr)


def ifft2(spectrum: np.ndarray) -> np.ndarray:
    """Inverse 2D DFT, including the 1/(H*W) normalization."""
    arr = np.asarray(spectrum)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2D spectrum, got shape {arr.shape}")
    return np.fft.ifft2(arr)


def sample_kernel(rng: np.random.Generator, size: int = 3, sigma2: float = 4.0) -> np.ndarray:
    """Draw an n x n filter kernel with i.i.d. zero-mean normal weights.

    ``sigma2`` is the weight variance (default 4, i.e. standard deviation
    2).  Weights are signed and not normalized to unit sum, so sampled
    filters may amplify; final output clamping handles the range.
    """
    if size < 1 or size % 2 == 0:
        raise ValueError(f"kernel size must be a positive odd integer, got {size}")
    if not sigma2 > 0:
        raise ValueError(f"kernel weight variance must be positive, got {sigma2}")
    return rng.normal(0.0, np.sqrt(sigma2), size=(size, size))


def _check_kernel(kernel: np.ndarray) -> np.ndarray:
    k = np.asarray(kernel, dtype=np.float64)
    if k.ndim != 2 or k.shape[0] != k.shape[1]:
        raise ValueError(f"kernel must be square, got shape {k.shape}")
    if k.shape[0] % 2 == 0:
        raise ValueError(f"kernel size must be odd, got {k.shape[0]}")
    if not np.isfinite(k).all():
        raise ValueError("kernel weights must be finite")
    return k


def embed_kernel(kernel: np.ndarray, height: int, width: int) -> np.ndarray:
    """Embed a small kernel into an H x W field for spectral filtering.

    The kernel's geometric center lands at index (0, 0) and negative
    offsets wrap around, so multiplying spectra realizes a circular
    convolution anchored at the kernel center (a delta kernel becomes the
    identity).
    """
    k = _check_kernel(kernel)
    n = k.shape[0]
    if n > min(height, width):
        raise ValueError(f"kernel size {n} exceeds image dimensions ({height}, {width})")
    field = np.zeros((height, width), dtype=np.float64)
    field[:n, :n] = k
    c = n // 2
    return np.roll(field, (-c, -c), axis=(0, 1))


def global_illumination(img: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Circularly convolve each channel of an image with a filter kernel.

    Computed as the inverse transform of the pointwise product of the
    image spectrum and the embedded-kernel spectrum.  The result is the
    raw illumination field: real-valued, same shape as the input, and not
    clamped to [0, 1].
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) image, got shape {arr.shape}")
    height, width = arr.shape[:2]
    kernel_spectrum = fft2(embed_kernel(kernel, height, width))
    out = np.empty_like(arr)
    for c in range(3):
        out[:, :, c] = ifft2(fft2(arr[:, :, c]) * kernel_spectrum).real
    return out
