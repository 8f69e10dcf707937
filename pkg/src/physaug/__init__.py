"""Physics-based image augmentation.

Perturbs images the way the atmosphere does: a random-kernel spectral
filter produces global non-uniform illumination, modulated unit-norm
planar waves add particle-like local occlusions, and a depth-dependent
scalar adds scattered atmospheric light.  Ships with the two non-physical
ablation variants, reference fog/low-light synthesizers, the mean
performance under corruption (mPC) metric, and a deterministic batch
CLI (``physaug``).
"""

from .config import MODES, PipelineConfig, SynthesizeConfig, load_config, load_config_text
from .image import as_image, clamp_unit, quantize_roundtrip, quantize_to_u8, u8_to_unit
from .metrics import (
    DATASET_GRIDS,
    CorruptionResultsTable,
    ResultsFormatError,
    format_report,
    mpc,
    parse_results,
    per_corruption_means,
    summarize,
)
from .occlusion import (
    CHANNELS,
    OcclusionSpec,
    PlanarWaveSpec,
    compose_occlusion,
    planar_wave,
    sample_occlusion_spec,
)
from .perturbation import (
    FogParams,
    NpmConfig,
    PerturbationDraws,
    PhysAugConfig,
    RetinexParams,
    apply_npm1,
    apply_npm2,
    apply_physaug,
    expected_atmospheric_term,
    npm1,
    npm1_raw,
    npm2,
    npm2_raw,
    physaug,
    physaug_raw,
    sample_atmospheric_term,
    sample_draws,
    synthesize_fog,
    synthesize_illumination,
)
from .pipeline import (
    RunSummary,
    augment_array,
    find_images,
    load_image,
    run_augment,
    run_preview,
    run_synthesize,
    save_image,
)
from .seeding import derive_item_seed, derive_sample_seed
from .spectral import embed_kernel, fft2, global_illumination, ifft2, sample_kernel

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # image
    "as_image",
    "clamp_unit",
    "quantize_roundtrip",
    "quantize_to_u8",
    "u8_to_unit",
    # seeding
    "derive_item_seed",
    "derive_sample_seed",
    # spectral
    "fft2",
    "ifft2",
    "sample_kernel",
    "embed_kernel",
    "global_illumination",
    # occlusion
    "CHANNELS",
    "PlanarWaveSpec",
    "OcclusionSpec",
    "planar_wave",
    "sample_occlusion_spec",
    "compose_occlusion",
    # perturbation
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
    "physaug",
    "physaug_raw",
    "npm1",
    "npm1_raw",
    "npm2",
    "npm2_raw",
    "synthesize_fog",
    "synthesize_illumination",
    # metrics
    "DATASET_GRIDS",
    "CorruptionResultsTable",
    "ResultsFormatError",
    "parse_results",
    "mpc",
    "per_corruption_means",
    "summarize",
    "format_report",
    # config & pipeline
    "MODES",
    "PipelineConfig",
    "SynthesizeConfig",
    "load_config",
    "load_config_text",
    "RunSummary",
    "find_images",
    "load_image",
    "save_image",
    "augment_array",
    "run_augment",
    "run_preview",
    "run_synthesize",
]
