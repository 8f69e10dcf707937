"""In-memory array transforms for training loops.

Applies the physaug perturbation family directly to numpy arrays,
bypassing file I/O, with outputs numerically identical (within 8-bit
quantization) to what the batch CLI writes for the same pixels, config,
and seed.

Configs cross this boundary as the same serialized YAML document the CLI
reads (or an equivalent mapping): one schema, two consumers.  Seeds use
the core two-stage keying, so a sampler based on an item's seed replays
the exact per-sample sequence the file pipeline produced for it::

    import physaug, physaug_train

    item_seed = physaug.derive_item_seed(global_seed, "train/img001.png")
    sampler = physaug_train.make_sampler("mode: physaug", item_seed)
    augmented = sampler(frame)          # call k uses sample seed k

Accepted arrays are (H, W, 3) row-major, dtype float32 (unit range) or
uint8; uint8 converts by v / 255 at the boundary, mirroring image
loading.  The input buffer is never mutated; the output is a freshly
allocated array of the input's dtype.
"""

from __future__ import annotations

import numpy as np

import physaug
from physaug import (
    PipelineConfig,
    derive_sample_seed,
    load_config_text,
    npm1,
    npm2,
    quantize_to_u8,
    u8_to_unit,
)
from physaug.config import config_from_dict

__version__ = "0.1.0"

__all__ = ["ArraySpecError", "transform", "make_sampler", "Sampler", "__version__"]

_TRANSFORM_MODES = ("physaug", "npm1", "npm2")


class ArraySpecError(ValueError):
    """Input array violates the (H, W, 3) float32/uint8 buffer contract."""


def _resolve_config(config) -> PipelineConfig:
    if isinstance(config, PipelineConfig):
        cfg = config
    elif isinstance(config, (str, bytes)):
        text = config.decode("utf-8") if isinstance(config, bytes) else config
        cfg = load_config_text(text)
    elif isinstance(config, dict):
        cfg = config_from_dict(config)
    else:
        raise ValueError(
            f"config must be a YAML document, mapping, or PipelineConfig, got {type(config).__name__}"
        )
    if cfg.mode not in _TRANSFORM_MODES:
        raise ValueError(
            f"mode {cfg.mode!r} is not an array transform; expected one of {_TRANSFORM_MODES}"
        )
    return cfg


def _check_array(array) -> np.ndarray:
    if not isinstance(array, np.ndarray):
        raise ArraySpecError(
            f"expected a numpy array of shape (H, W, 3), found {type(array).__name__}"
        )
    if array.ndim != 3 or array.shape[2] != 3 or array.shape[0] < 1 or array.shape[1] < 1:
        raise ArraySpecError(f"expected shape (H, W, 3), found {array.shape}")
    if array.dtype not in (np.float32, np.uint8):
        raise ArraySpecError(f"expected dtype float32 or uint8, found {array.dtype}")
    return array


def _apply(cfg: PipelineConfig, img: np.ndarray, seed: int) -> np.ndarray:
    if cfg.mode == "physaug":
        return physaug.physaug(img, cfg.physaug, seed)
    if cfg.mode == "npm1":
        return npm1(img, cfg.physaug, seed)
    return npm2(img, cfg.physaug, cfg.npm, seed)


def transform(array: np.ndarray, config, seed: int) -> np.ndarray:
    """Augment one image array under a serialized config and an explicit
    seed.  Returns a fresh buffer of the input's dtype; uint8 outputs are
    quantized exactly like PNG output, float32 outputs stay continuous in
    [0, 1]."""
    arr = _check_array(array)
    cfg = _resolve_config(config)
    unit = u8_to_unit(arr) if arr.dtype == np.uint8 else np.asarray(arr, dtype=np.float64)
    out = _apply(cfg, unit, seed)
    if arr.dtype == np.uint8:
        return quantize_to_u8(out)
    return out.astype(np.float32)


class Sampler:
    """Reproducible per-call transform: call k derives its seed from
    (base_seed, k).  Single-threaded; instances never share state, so
    interleaved samplers do not disturb each other's sequences."""

    def __init__(self, config, base_seed: int):
        self._cfg = _resolve_config(config)
        self._base_seed = int(base_seed)
        self._calls = 0

    @property
    def calls(self) -> int:
        return self._calls

    def __call__(self, array: np.ndarray) -> np.ndarray:
        seed = derive_sample_seed(self._base_seed, self._calls)
        self._calls += 1
        return transform(array, self._cfg, seed)


def make_sampler(config, base_seed: int) -> Sampler:
    """Build a stateful sampler over a serialized config.  Two samplers
    with the same base seed produce identical call sequences."""
    return Sampler(config, base_seed)
