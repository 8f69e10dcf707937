"""Full physics-based perturbation, its ablations, and reference synthesizers.

The perturbation applied to an image J is

    out = Q * (h_g + h_o) + lam

where h_g is the global non-uniform illumination field (random-kernel
spectral filtering of J), h_o the particle-induced occlusion field
(image-independent), Q a constant incident-light coefficient, and lam a
scalar brightness offset standing in for light scattered into the viewing
path by the atmosphere: lam = L_inf * (1 - exp(-d)) for a per-image depth
d drawn uniformly from ``depth_range``.

Two non-physical ablations keep the sampled fields but change the
composition: ``npm1`` drops the atmospheric term; ``npm2`` mixes the
perturbed and the clean image with a factor in [0, 1] plus a residual
offset.  All three share one per-item generator and a fixed sampling
order (kernel, then occlusion, then depth), so paired comparisons under
the same seed are exact: physaug - npm1 equals lam before clamping.

Also included are the two classic imaging models used as reference
corruption synthesizers: multiplicative incident light (low light) and
the scattering model I = t*J + A*(1 - t) (fog).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import as_image, clamp_unit
from .occlusion import (
    DEFAULT_FREQ_RANGE,
    DEFAULT_PHASE_OFFSET,
    OcclusionSpec,
    compose_occlusion,
    sample_occlusion_spec,
)
from .spectral import global_illumination, sample_kernel

__all__ = [
    "PhysAugConfig",
    "NpmConfig",
    "FogParams",
    "RetinexParams",
    "PerturbationDraws",
    "sample_atmospheric_term",
    "expected_atmospheric_term",
    "sample_draws",
    "apply_physaug",
    "apply_npm1",
    "apply_npm2",
    "physaug_raw",
    "npm1_raw",
    "npm2_raw",
    "physaug",
    "npm1",
    "npm2",
    "synthesize_fog",
    "synthesize_illumination",
]


@dataclass(frozen=True)
class PhysAugConfig:
    """Sampling distributions and constants of the perturbation model.

    Defaults reproduce the reference operating point: 3x3 kernel with
    N(0, 4) weights, frequencies and orientations uniform on (-512, 512),
    phase offset -pi/4, one extra particle type, Q = 1, atmospheric light
    at infinity 0.1 with depth uniform on (0, 10).

    ``coordinate_scale`` multiplies the integer pixel coordinates fed to
    the planar waves; ``atmospheric_l_inf`` is expressed against the
    [0, 1] value range (rescale it if you work in [0, 255]).
    """

    incident_light: float = 1.0
    kernel_size: int = 3
    kernel_sigma2: float = 4.0
    num_particle_types: int = 1
    freq_range: tuple[float, float] = DEFAULT_FREQ_RANGE
    phase_offset: float = DEFAULT_PHASE_OFFSET
    atmospheric_l_inf: float = 0.1
    depth_range: tuple[float, float] = (0.0, 10.0)
    coordinate_scale: float = 1.0

    def __post_init__(self):
        if self.kernel_size < 1 or self.kernel_size % 2 == 0:
            raise ValueError(f"kernel_size must be a positive odd integer, got {self.kernel_size}")
        if not self.kernel_sigma2 > 0:
            raise ValueError(f"kernel_sigma2 must be positive, got {self.kernel_sigma2}")
        if self.num_particle_types < 0:
            raise ValueError(f"num_particle_types must be >= 0, got {self.num_particle_types}")
        lo, hi = self.freq_range
        if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
            raise ValueError(f"invalid freq_range {self.freq_range}")
        if not math.isfinite(self.phase_offset):
            raise ValueError("phase_offset must be finite")
        if not (math.isfinite(self.atmospheric_l_inf) and self.atmospheric_l_inf >= 0):
            raise ValueError(f"atmospheric_l_inf must be >= 0, got {self.atmospheric_l_inf}")
        dlo, dhi = self.depth_range
        if not (math.isfinite(dlo) and math.isfinite(dhi) and 0 <= dlo <= dhi):
            raise ValueError(f"invalid depth_range {self.depth_range}")
        if not (math.isfinite(self.incident_light) and math.isfinite(self.coordinate_scale)):
            raise ValueError("incident_light and coordinate_scale must be finite")


@dataclass(frozen=True)
class NpmConfig:
    """Mixing parameters for the second non-physical ablation."""

    mixing_factor: float = 0.5
    residual: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.mixing_factor <= 1.0:
            raise ValueError(f"mixing_factor must lie in [0, 1], got {self.mixing_factor}")
        if not math.isfinite(self.residual):
            raise ValueError(f"residual must be finite, got {self.residual}")


@dataclass(frozen=True)
class FogParams:
    """Scattering-model parameters: per-pixel (or scalar) transmission in
    [0, 1] and scalar atmospheric light in [0, 1]."""

    transmission: float | np.ndarray = 0.5
    atmospheric_light: float = 0.8

    def __post_init__(self):
        t = np.asarray(self.transmission, dtype=np.float64)
        if t.size == 0 or not np.isfinite(t).all():
            raise ValueError("transmission must be finite and non-empty")
        if t.min() < 0.0 or t.max() > 1.0:
            raise ValueError("transmission values must lie in [0, 1]")
        if not 0.0 <= self.atmospheric_light <= 1.0:
            raise ValueError(f"atmospheric_light must lie in [0, 1], got {self.atmospheric_light}")


@dataclass(frozen=True)
class RetinexParams:
    """Incident-light map (scalar or per-pixel, nonnegative) multiplied
    onto the image, which plays the role of the reflectance."""

    light: float | np.ndarray = 0.4

    def __post_init__(self):
        l_map = np.asarray(self.light, dtype=np.float64)
        if l_map.size == 0 or not np.isfinite(l_map).all():
            raise ValueError("light map must be finite and non-empty")
        if l_map.min() < 0.0:
            raise ValueError("light map values must be >= 0")


@dataclass(frozen=True)
class PerturbationDraws:
    """One augmentation's sampled randomness: filter kernel, occlusion
    spec, and the scalar atmospheric term."""

    kernel: np.ndarray
    occlusion: OcclusionSpec
    atmospheric: float = 0.0


def sample_atmospheric_term(rng: np.random.Generator, cfg: PhysAugConfig) -> float:
    """Draw the additive atmospheric brightness L_inf * (1 - exp(-d)),
    d uniform over ``cfg.depth_range``.  Lies in [0, L_inf)."""
    depth = rng.uniform(*cfg.depth_range)
    return cfg.atmospheric_l_inf * (1.0 - math.exp(-depth))


def expected_atmospheric_term(cfg: PhysAugConfig) -> float:
    """Closed-form mean of the atmospheric term over its depth range."""
    lo, hi = cfg.depth_range
    if hi == lo:
        return cfg.atmospheric_l_inf * (1.0 - math.exp(-lo))
    mean_decay = (math.exp(-lo) - math.exp(-hi)) / (hi - lo)
    return cfg.atmospheric_l_inf * (1.0 - mean_decay)


def sample_draws(
    rng: np.random.Generator, cfg: PhysAugConfig, height: int, width: int
) -> PerturbationDraws:
    """Sample all randomness for one augmentation in the fixed order:
    kernel, then occlusion spec, then depth."""
    kernel = sample_kernel(rng, cfg.kernel_size, cfg.kernel_sigma2)
    occ = sample_occlusion_spec(
        rng,
        height,
        width,
        cfg.num_particle_types,
        freq_range=cfg.freq_range,
        phase_offset=cfg.phase_offset,
        coordinate_scale=cfg.coordinate_scale,
    )
    atmospheric = sample_atmospheric_term(rng, cfg)
    return PerturbationDraws(kernel=kernel, occlusion=occ, atmospheric=atmospheric)


def _reflected_field(img: np.ndarray, draws: PerturbationDraws, incident_light: float) -> np.ndarray:
    """Q * (h_g + h_o): the shared perturbation along the reflected path."""
    h_g = global_illumination(img, draws.kernel)
    h_o = compose_occlusion(draws.occlusion)
    return incident_light * (h_g + h_o)


def apply_physaug(img: np.ndarray, draws: PerturbationDraws, incident_light: float = 1.0) -> np.ndarray:
    """Full perturbation for given draws; raw (unclamped) field."""
    return _reflected_field(as_image(img), draws, incident_light) + draws.atmospheric


def apply_npm1(img: np.ndarray, draws: PerturbationDraws, incident_light: float = 1.0) -> np.ndarray:
    """First ablation: drops the atmospheric term; raw field."""
    return _reflected_field(as_image(img), draws, incident_light)


def apply_npm2(
    img: np.ndarray,
    draws: PerturbationDraws,
    npm: NpmConfig,
    incident_light: float = 1.0,
) -> np.ndarray:
    """Second ablation: mix the perturbed field and the clean image, plus
    a residual offset; raw field."""
    arr = as_image(img)
    perturbed = _reflected_field(arr, draws, incident_light)
    lam = npm.mixing_factor
    return lam * perturbed + (1.0 - lam) * arr + npm.residual


def _draws_for(img: np.ndarray, cfg: PhysAugConfig, seed: int) -> tuple[np.ndarray, PerturbationDraws]:
    arr = as_image(img)
    rng = np.random.default_rng(seed)
    return arr, sample_draws(rng, cfg, arr.shape[0], arr.shape[1])


def physaug_raw(img: np.ndarray, cfg: PhysAugConfig, seed: int) -> np.ndarray:
    """Seeded full perturbation before clamping."""
    arr, draws = _draws_for(img, cfg, seed)
    return apply_physaug(arr, draws, cfg.incident_light)


def npm1_raw(img: np.ndarray, cfg: PhysAugConfig, seed: int) -> np.ndarray:
    """Seeded first ablation before clamping.  Uses the same sampling
    order as ``physaug_raw``, so with equal seeds the two raw outputs
    differ by exactly the sampled atmospheric constant."""
    arr, draws = _draws_for(img, cfg, seed)
    return apply_npm1(arr, draws, cfg.incident_light)


def npm2_raw(img: np.ndarray, cfg: PhysAugConfig, npm: NpmConfig, seed: int) -> np.ndarray:
    """Seeded second ablation before clamping (same sampling order)."""
    arr, draws = _draws_for(img, cfg, seed)
    return apply_npm2(arr, draws, npm, cfg.incident_light)


def physaug(img: np.ndarray, cfg: PhysAugConfig, seed: int) -> np.ndarray:
    """Seeded full perturbation, clamped to [0, 1].

    Deterministic: the same (image, config, seed) triple yields a
    bit-identical output regardless of processing order or worker count.
    """
    return clamp_unit(physaug_raw(img, cfg, seed))


def npm1(img: np.ndarray, cfg: PhysAugConfig, seed: int) -> np.ndarray:
    """Seeded first ablation, clamped to [0, 1]."""
    return clamp_unit(npm1_raw(img, cfg, seed))


def npm2(img: np.ndarray, cfg: PhysAugConfig, npm: NpmConfig, seed: int) -> np.ndarray:
    """Seeded second ablation, clamped to [0, 1].  With mixing factor 1
    and zero residual this reduces exactly to ``npm1``; with mixing
    factor 0 and zero residual it reproduces the input."""
    return clamp_unit(npm2_raw(img, cfg, npm, seed))


def synthesize_fog(img: np.ndarray, params: FogParams) -> np.ndarray:
    """Scattering-model fog: I = t*J + A*(1 - t), clamped.

    Transmission 1 is the identity; transmission 0 yields the constant
    atmospheric-light image.
    """
    arr = as_image(img)
    t = np.asarray(params.transmission, dtype=np.float64)
    if t.ndim == 2:
        if t.shape != arr.shape[:2]:
            raise ValueError(f"transmission shape {t.shape} does not match image {arr.shape[:2]}")
        t = t[:, :, None]
    elif t.ndim != 0:
        raise ValueError(f"transmission must be a scalar or (H, W) array, got shape {t.shape}")
    return clamp_unit(t * arr + params.atmospheric_light * (1.0 - t))


def synthesize_illumination(img: np.ndarray, params: RetinexParams) -> np.ndarray:
    """Multiplicative incident light: I = L * R pointwise, clamped.  The
    input image plays the reflectance role; a light map below 1 darkens
    (low-light synthesis)."""
    arr = as_image(img)
    l_map = np.asarray(params.light, dtype=np.float64)
    if l_map.ndim == 2:
        if l_map.shape != arr.shape[:2]:
            raise ValueError(f"light map shape {l_map.shape} does not match image {arr.shape[:2]}")
        l_map = l_map[:, :, None]
    elif l_map.ndim not in (0, 3):
        raise ValueError(f"light map must be scalar, (H, W), or (H, W, 3), got shape {l_map.shape}")
    elif l_map.ndim == 3 and l_map.shape != arr.shape:
        raise ValueError(f"light map shape {l_map.shape} does not match image {arr.shape}")
    return clamp_unit(l_map * arr)
