"""Planar waves and the particle occlusion field they compose.

Each wave is a unit-L2-norm cosine over pixel coordinates; orientation
comes from a wide uniform draw (cos/sin wrap it onto the circle) and
frequency spans sub-pixel to image-scale wavelengths.  Per particle type
a random per-pixel matrix modulates one wave per color channel; the sum
over types is the occlusion field added to the image.
"""

import numpy as np

from physaug import (
    PlanarWaveSpec,
    compose_occlusion,
    planar_wave,
    sample_occlusion_spec,
)

from _common import OUTPUT_DIR, normalize_for_view, save_strip

H = W = 128

# A few hand-picked waves, from coarse to fine.
specs = [
    PlanarWaveSpec(frequency=0.01, orientation=0.3),
    PlanarWaveSpec(frequency=0.05, orientation=1.2),
    PlanarWaveSpec(frequency=0.11, orientation=-0.7),
    PlanarWaveSpec(frequency=137.0, orientation=41.5),   # wide-range draw
]
panels = []
for spec in specs:
    field = planar_wave(spec, H, W)
    print(f"f={spec.frequency:<7g} w={spec.orientation:<5g} "
          f"|field|_2={np.linalg.norm(field):.6f}")
    panels.append(np.repeat(normalize_for_view(field)[..., None], 3, axis=2))
save_strip(panels, OUTPUT_DIR / "02_planar_waves.png")

# Full sampled occlusion fields (image-independent).
rng = np.random.default_rng(42)
fields = []
for _ in range(3):
    spec = sample_occlusion_spec(rng, H, W, num_particle_types=1)
    field = compose_occlusion(spec)
    fields.append(normalize_for_view(field))
    print(f"occlusion field: mean {field.mean():+.4f}, std {field.std():.4f} "
          f"({spec.num_particle_types + 1} particle types)")
path = save_strip(fields, OUTPUT_DIR / "02_occlusion_fields.png")
print(f"wrote {OUTPUT_DIR / '02_planar_waves.png'} and {path}")
