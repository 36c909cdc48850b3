"""The two-stream backbone and what the joint attention stages buy you.

Runs a randomly initialized model over a template/search pair, prints every
stage shape, then flips the fusion switch to show that without joint
attention the template features cannot see the search region at all.
"""

import numpy as np

from movitrack.backbone import backbone_forward
from movitrack.config import ModelConfig
from movitrack.model import TrackerModel, bind_weights
from movitrack.weights import build_manifest, random_store

rng = np.random.default_rng(42)
store = random_store(seed=42)
print("model tensors:", len(build_manifest().entries))
print("parameters:   ", build_manifest().total_params)

z_in = rng.standard_normal((3, 128, 128)).astype(np.float32)
x_in = rng.standard_normal((3, 256, 256)).astype(np.float32)

model = TrackerModel(ModelConfig(), store)
trace = model.trace(z_in, x_in)
print("\ntemplate (3,128,128) + search (3,256,256)")
print("  backbone  ->", trace.z_feat.shape, "/", trace.x_feat.shape)
print("  xcorr     ->", trace.correlation.shape)
print("  adjusted  ->", trace.adjusted.shape)
print("  head      -> score", trace.output.score.shape,
      "size", trace.output.size.shape, "offset", trace.output.offset.shape)

# --- fusion on/off ------------------------------------------------------------
# bump one search pixel and watch whether the *template* features move
x_bumped = x_in.copy()
x_bumped[0, 100, 100] += 1.0

for fusion in (True, False):
    cfg = ModelConfig(fusion=fusion)
    weights = bind_weights(cfg, store).backbone
    z_a, _ = backbone_forward(z_in, x_in, cfg, weights)
    z_b, _ = backbone_forward(z_in, x_bumped, cfg, weights)
    delta = np.abs(z_a - z_b).max()
    label = "on " if fusion else "off"
    print(f"fusion {label}: max |template delta| after a 1-pixel search bump = {delta:.3e}")
