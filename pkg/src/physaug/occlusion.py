"""Particle-induced local occlusion fields from sinusoidal planar waves.

Non-transparent particles reflect and absorb single-wavelength light; the
resulting local occlusions are modeled by combining unit-norm sinusoidal
planar waves.  One wave over integer pixel coordinates (x across, y down)
is

    raw(x, y) = cos(2*pi*f*(x*cos(w) + y*sin(w) + phi))

normalized to unit L2 norm over the whole field.  Frequency ``f`` and
orientation ``w`` are sampled from a wide uniform range; since cos/sin
are periodic the orientation distribution is effectively uniform, while
frequencies span sub-pixel to image-scale wavelengths.

Per particle type, one random per-pixel modulation matrix (shared across
R, G, B) scales an independent wave per channel; the occlusion field is
the sum over particle types.  The field never reads image content.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CHANNELS",
    "PlanarWaveSpec",
    "OcclusionSpec",
    "planar_wave",
    "sample_occlusion_spec",
    "compose_occlusion",
]

CHANNELS = ("R", "G", "B")

DEFAULT_PHASE_OFFSET = -math.pi / 4
DEFAULT_FREQ_RANGE = (-512.0, 512.0)

# Below this raw-field norm the wave is treated as degenerate and replaced
# by the constant unit-norm field.
_NORM_EPS = 1e-12


@dataclass(frozen=True)
class PlanarWaveSpec:
    """One sinusoidal planar wave: frequency, orientation angle (radians),
    additive phase offset, and the color channel it applies to."""

    frequency: float
    orientation: float
    phase_offset: float = DEFAULT_PHASE_OFFSET
    channel: str = "R"
    coordinate_scale: float = 1.0

    def __post_init__(self):
        for name in ("frequency", "orientation", "phase_offset", "coordinate_scale"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
        if self.channel not in CHANNELS:
            raise ValueError(f"channel must be one of {CHANNELS}, got {self.channel!r}")


@dataclass(frozen=True)
class OcclusionSpec:
    """Sampled occlusion parameters: per particle type, one (H, W)
    modulation matrix plus one wave spec per channel.

    ``waves[i]`` is the (R, G, B) wave triple for particle type i;
    ``modulations[i]`` is that type's modulation matrix.  With n extra
    particle types there are n + 1 entries (types are indexed 0..n).
    """

    height: int
    width: int
    waves: tuple[tuple[PlanarWaveSpec, PlanarWaveSpec, PlanarWaveSpec], ...]
    modulations: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.height < 1 or self.width < 1:
            raise ValueError(f"dimensions must be >= 1, got ({self.height}, {self.width})")
        if len(self.waves) != len(self.modulations):
            raise ValueError(
                f"{len(self.waves)} wave triples but {len(self.modulations)} modulation matrices"
            )
        if not self.waves:
            raise ValueError("at least one particle type is required")
        for i, m in enumerate(self.modulations):
            if np.asarray(m).shape != (self.height, self.width):
                raise ValueError(
                    f"modulation {i} has shape {np.asarray(m).shape}, "
                    f"expected ({self.height}, {self.width})"
                )

    @property
    def num_particle_types(self) -> int:
        """The n of the type index range 0..n."""
        return len(self.waves) - 1


def planar_wave(spec: PlanarWaveSpec, height: int, width: int) -> np.ndarray:
    """Evaluate one planar wave on an H x W pixel grid, unit L2 norm.

    If the raw field is numerically zero everywhere the constant field
    1/sqrt(H*W) is returned instead, which also has unit norm.
    """
    if height < 1 or width < 1:
        raise ValueError(f"dimensions must be >= 1, got ({height}, {width})")
    y = np.arange(height, dtype=np.float64)[:, None] * spec.coordinate_scale
    x = np.arange(width, dtype=np.float64)[None, :] * spec.coordinate_scale
    argument = x * math.cos(spec.orientation) + y * math.sin(spec.orientation) + spec.phase_offset
    raw = np.cos(2.0 * math.pi * spec.frequency * argument)
    norm = float(np.linalg.norm(raw))
    if norm < _NORM_EPS:
        return np.full((height, width), 1.0 / math.sqrt(height * width))
    return raw / norm


def sample_occlusion_spec(
    rng: np.random.Generator,
    height: int,
    width: int,
    num_particle_types: int = 1,
    *,
    freq_range: tuple[float, float] = DEFAULT_FREQ_RANGE,
    phase_offset: float = DEFAULT_PHASE_OFFSET,
    coordinate_scale: float = 1.0,
) -> OcclusionSpec:
    """Draw an occlusion spec for an H x W image.

    Sampling order is fixed and part of the determinism contract: for
    each particle type i = 0..n, first the modulation matrix (i.i.d.
    standard normal entries), then per channel R, G, B a frequency and an
    orientation, each uniform over ``freq_range``.
    """
    if num_particle_types < 0:
        raise ValueError(f"num_particle_types must be >= 0, got {num_particle_types}")
    if height < 1 or width < 1:
        raise ValueError(f"dimensions must be >= 1, got ({height}, {width})")
    lo, hi = freq_range
    if not lo <= hi:
        raise ValueError(f"invalid freq_range {freq_range}")
    waves = []
    modulations = []
    for _ in range(num_particle_types + 1):
        modulations.append(rng.standard_normal((height, width)))
        triple = []
        for channel in CHANNELS:
            frequency = rng.uniform(lo, hi)
            orientation = rng.uniform(lo, hi)
            triple.append(
                PlanarWaveSpec(
                    frequency=frequency,
                    orientation=orientation,
                    phase_offset=phase_offset,
                    channel=channel,
                    coordinate_scale=coordinate_scale,
                )
            )
        waves.append(tuple(triple))
    return OcclusionSpec(
        height=height,
        width=width,
        waves=tuple(waves),
        modulations=tuple(modulations),
    )


def compose_occlusion(spec: OcclusionSpec) -> np.ndarray:
    """Compose the (H, W, 3) occlusion field: per channel, the sum over
    particle types of modulation * wave.  Raw field, not clamped."""
    out = np.zeros((spec.height, spec.width, 3), dtype=np.float64)
    for triple, modulation in zip(spec.waves, spec.modulations):
        m = np.asarray(modulation, dtype=np.float64)
        for c, wave_spec in enumerate(triple):
            out[:, :, c] += m * planar_wave(wave_spec, spec.height, spec.width)
    return out
