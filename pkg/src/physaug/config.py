"""Pipeline configuration: one YAML document, one schema, two consumers.

The batch CLI and the training bindings read the same document, so a
config tuned against saved files transfers unchanged into a training
loop.  Every constant of the perturbation model appears as a default; an
empty document reproduces the reference operating point.

Schema (all keys optional, shown with defaults)::

    config_version: 1
    mode: physaug            # physaug | npm1 | npm2 | fog | lowlight
    global_seed: 0           # unsigned 64-bit
    workers: 1
    samples_per_image: 1
    input_dir: null          # usually given on the command line
    output_dir: null
    physaug:
      incident_light: 1.0
      kernel_size: 3
      kernel_sigma2: 4.0
      num_particle_types: 1
      freq_range: [-512.0, 512.0]
      phase_offset: -0.7853981633974483    # -pi/4
      atmospheric_l_inf: 0.1
      depth_range: [0.0, 10.0]
      coordinate_scale: 1.0
    npm:
      mixing_factor: 0.5
      residual: 0.0
    fog:
      transmission: 0.5
      atmospheric_light: 0.8
    lowlight:
      light: 0.4
    synthesize:
      fog_transmissions: [0.9, 0.7, 0.5, 0.3, 0.1]
      lowlight_lights: [0.8, 0.6, 0.4, 0.3, 0.2]

Unknown keys are rejected (they are almost always typos).
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from pathlib import Path

import yaml

from .perturbation import FogParams, NpmConfig, PhysAugConfig, RetinexParams

__all__ = [
    "CONFIG_VERSION",
    "MODES",
    "SynthesizeConfig",
    "PipelineConfig",
    "load_config",
    "load_config_text",
    "config_from_dict",
]

CONFIG_VERSION = 1

MODES = ("physaug", "npm1", "npm2", "fog", "lowlight")

DEFAULT_FOG_TRANSMISSIONS = (0.9, 0.7, 0.5, 0.3, 0.1)
DEFAULT_LOWLIGHT_LIGHTS = (0.8, 0.6, 0.4, 0.3, 0.2)


@dataclass(frozen=True)
class SynthesizeConfig:
    """Severity ladders for the reference corruption synthesizers
    (severity 1 is the mildest entry)."""

    fog_transmissions: tuple[float, ...] = DEFAULT_FOG_TRANSMISSIONS
    lowlight_lights: tuple[float, ...] = DEFAULT_LOWLIGHT_LIGHTS

    def __post_init__(self):
        if not self.fog_transmissions or not self.lowlight_lights:
            raise ValueError("severity ladders must be non-empty")
        for t in self.fog_transmissions:
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"fog transmission {t} outside [0, 1]")
        for light in self.lowlight_lights:
            if light < 0.0:
                raise ValueError(f"lowlight level {light} must be >= 0")


@dataclass(frozen=True)
class PipelineConfig:
    mode: str = "physaug"
    global_seed: int = 0
    workers: int = 1
    samples_per_image: int = 1
    input_dir: str | None = None
    output_dir: str | None = None
    physaug: PhysAugConfig = field(default_factory=PhysAugConfig)
    npm: NpmConfig = field(default_factory=NpmConfig)
    fog: FogParams = field(default_factory=FogParams)
    lowlight: RetinexParams = field(default_factory=RetinexParams)
    synthesize: SynthesizeConfig = field(default_factory=SynthesizeConfig)
    config_version: int = CONFIG_VERSION

    def __post_init__(self):
        if self.config_version != CONFIG_VERSION:
            raise ValueError(
                f"unsupported config_version {self.config_version}, expected {CONFIG_VERSION}"
            )
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not isinstance(self.global_seed, int) or not 0 <= self.global_seed < 2**64:
            raise ValueError(f"global_seed must be an unsigned 64-bit integer, got {self.global_seed!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.samples_per_image < 1:
            raise ValueError(f"samples_per_image must be >= 1, got {self.samples_per_image}")
        if self.input_dir is not None and self.input_dir == self.output_dir:
            raise ValueError("output_dir must be distinct from input_dir")


def _build(cls, data: dict, context: str):
    if not isinstance(data, dict):
        raise ValueError(f"{context}: expected a mapping, got {type(data).__name__}")
    known = {f.name for f in fields(cls)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"{context}: unknown keys {sorted(unknown)}; known keys are {sorted(known)}")
    # YAML lists arrive as lists; range/ladder fields are tuples.
    coerced = {k: tuple(v) if isinstance(v, list) else v for k, v in data.items()}
    return cls(**coerced)


def config_from_dict(data: dict) -> PipelineConfig:
    """Build a validated PipelineConfig from a parsed mapping.  Missing
    keys fall back to defaults; unknown keys raise ValueError."""
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ValueError(f"config root must be a mapping, got {type(data).__name__}")
    known = {f.name for f in fields(PipelineConfig)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"config: unknown keys {sorted(unknown)}; known keys are {sorted(known)}")

    kwargs = dict(data)
    for key, cls in (
        ("physaug", PhysAugConfig),
        ("npm", NpmConfig),
        ("fog", FogParams),
        ("lowlight", RetinexParams),
        ("synthesize", SynthesizeConfig),
    ):
        if key in kwargs and kwargs[key] is not None:
            kwargs[key] = _build(cls, kwargs[key], context=key)
        else:
            kwargs.pop(key, None)
    return PipelineConfig(**kwargs)


def load_config_text(text: str) -> PipelineConfig:
    """Parse a YAML config document.  An empty document yields defaults."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ValueError(f"config is not valid YAML: {exc}") from exc
    return config_from_dict(data if data is not None else {})


def load_config(path: str | Path) -> PipelineConfig:
    """Read and parse a YAML config file."""
    return load_config_text(Path(path).read_text(encoding="utf-8"))
