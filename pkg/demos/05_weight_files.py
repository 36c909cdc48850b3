"""The named-tensor weight format: manifest, round-trip, and raw bytes.

The file layout is deliberately tiny: magic 'MVTW', a version, an entry
count, then (name, dtype, shape, float32 payload) records. The manifest
derived from the model config pins the exact tensor names and shapes a
complete model must provide.
"""

import os
import struct

import numpy as np

from movitrack.config import ModelConfig
from movitrack.weights import build_manifest, load_weights, random_store, save_weights

OUT = os.path.join(os.path.dirname(__file__), "demo_output")
os.makedirs(OUT, exist_ok=True)

manifest = build_manifest(ModelConfig())
print(f"manifest: {len(manifest.entries)} tensors, {manifest.total_params} parameters")
print("first entries:")
for name, shape in manifest.entries[:6]:
    print(f"  {name:<40} {shape}")
print("  ...")
for name, shape in manifest.entries[-3:]:
    print(f"  {name:<40} {shape}")

store = random_store(manifest, seed=1)
path = os.path.join(OUT, "demo.mvtw")
save_weights(store, path)
size = os.path.getsize(path)
print(f"\nwrote {path} ({size / 1e6:.1f} MB, ~4 bytes/param + headers)")

with open(path, "rb") as fh:
    head = fh.read(12)
magic, version, count = head[:4], *struct.unpack("<II", head[4:])
print(f"header: magic={magic!r} version={version} entries={count}")

loaded = load_weights(path, manifest)
bit_exact = all(np.array_equal(store[n], loaded[n]) for n in store)
print("round-trip bit-exact:", bit_exact)

# manifest validation rejects wrong shapes with the offending tensor named
from movitrack.errors import WeightFormatError
from movitrack.weights import WeightStore

tampered = WeightStore()
for name in store:
    arr = store[name]
    tampered.add(name, arr[:-1] if name == "neck.adjust.conv.bias" else arr)
bad_path = os.path.join(OUT, "tampered.mvtw")
save_weights(tampered, bad_path)
try:
    load_weights(bad_path, manifest)
except WeightFormatError as exc:
    print("tampered file rejected:", exc)
