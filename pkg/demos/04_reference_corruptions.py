"""Reference corruption synthesizers: fog and low light.

Fog follows the scattering model I = t*J + A*(1 - t): as transmission t
falls, pixels pull toward the atmospheric light A.  Low light is
multiplicative incident light on the reflectance.  Both are deterministic,
which makes them handy for building fixed severity-laddered corpora
(see the `physaug synthesize` CLI verb).
"""

import numpy as np

from physaug import FogParams, RetinexParams, synthesize_fog, synthesize_illumination

from _common import OUTPUT_DIR, make_sample_photo, save_strip

photo = make_sample_photo()

fog_panels = [photo]
for t in (0.9, 0.7, 0.5, 0.3, 0.1):
    hazy = synthesize_fog(photo, FogParams(transmission=t, atmospheric_light=0.8))
    fog_panels.append(hazy)
    print(f"fog t={t}: mean deviation from clean {np.abs(hazy - photo).mean():.4f}")
save_strip(fog_panels, OUTPUT_DIR / "04_fog_ladder.png")

dark_panels = [photo]
for light in (0.8, 0.6, 0.4, 0.3, 0.2):
    dark = synthesize_illumination(photo, RetinexParams(light=light))
    dark_panels.append(dark)
    print(f"lowlight L={light}: mean brightness {dark.mean():.3f}")
path = save_strip(dark_panels, OUTPUT_DIR / "04_lowlight_ladder.png")
print(f"wrote {OUTPUT_DIR / '04_fog_ladder.png'} and {path}")
