"""Tour of the numerical kernels: convolution, normalization, attention.

Every kernel operates on plain float32 numpy arrays in (C, H, W) layout.
This script cross-checks a few of them against naive summation, the same
way the test suite does at scale.
"""

import numpy as np

from movitrack.core import (
    AttentionSpec,
    ConvSpec,
    EncoderLayerWeights,
    batch_norm_inference,
    conv2d,
    multi_head_attention,
    silu,
    softmax,
)

rng = np.random.default_rng(0)

# --- convolution -----------------------------------------------------------
# a 3x3 all-ones kernel over a 4x4 ramp sums each in-bounds neighborhood
x = np.arange(16, dtype=np.float32).reshape(1, 4, 4)
spec = ConvSpec(in_channels=1, out_channels=1, kernel=(3, 3), stride=1, padding=1)
out = conv2d(x, spec, np.ones((1, 1, 3, 3), np.float32))
print("ramp input:\n", x[0])
print("3x3 box-sum:\n", out[0])

# the same thing by explicit loops
naive = np.zeros((4, 4))
for yy in range(4):
    for xx in range(4):
        for i in range(-1, 2):
            for j in range(-1, 2):
                if 0 <= yy + i < 4 and 0 <= xx + j < 4:
                    naive[yy, xx] += x[0, yy + i, xx + j]
print("max |conv - naive| =", np.abs(out[0] - naive).max())

# --- strided convolution shapes ---------------------------------------------
img = rng.standard_normal((3, 256, 256)).astype(np.float32)
stem = ConvSpec(3, 16, (3, 3), stride=2, padding=1)
feat = conv2d(img, stem, rng.standard_normal(stem.weight_shape).astype(np.float32))
print("\nstride-2 stem: (3, 256, 256) ->", feat.shape)

# --- batch norm in inference mode --------------------------------------------
mean, var = feat.mean(axis=(1, 2)), feat.var(axis=(1, 2))
normed = batch_norm_inference(feat, mean, var, np.ones(16, np.float32), np.zeros(16, np.float32))
print("after BN with matching stats: mean ~ %.1e, var ~ %.3f" % (normed.mean(), normed.var()))
print("silu(1) =", silu(np.ones(1, np.float32))[0])

# --- self-attention -----------------------------------------------------------
# every attention row is a softmax, so the weights form a distribution
scores = rng.standard_normal((5, 5)).astype(np.float32) * 3
attn = softmax(scores, axis=-1)
print("\nattention row sums:", attn.sum(axis=-1))


def random_layer(d, ffn):
    def lin(rows, cols):
        return (rng.uniform(-1, 1, (rows, cols)) / np.sqrt(cols)).astype(np.float32)

    z = np.zeros(d, np.float32)
    return EncoderLayerWeights(
        norm1_gamma=np.ones(d, np.float32), norm1_beta=z,
        wq=lin(d, d), bq=z, wk=lin(d, d), bk=z, wv=lin(d, d), bv=z, wo=lin(d, d), bo=z,
        norm2_gamma=np.ones(d, np.float32), norm2_beta=z,
        w1=lin(ffn, d), b1=np.zeros(ffn, np.float32), w2=lin(d, ffn), b2=z,
    )


# a 2-layer encoder over 10 tokens; no positional embeddings, so permuting
# the tokens permutes the outputs
aspec = AttentionSpec(embed_dim=16, num_heads=4, ffn_dim=32, layers=2)
layers = [random_layer(16, 32) for _ in range(aspec.layers)]
tokens = rng.standard_normal((10, 16)).astype(np.float32)
encoded = multi_head_attention(tokens, aspec, layers)
perm = rng.permutation(10)
encoded_perm = multi_head_attention(tokens[perm], aspec, layers)
print("permutation equivariance: max |delta| =", np.abs(encoded_perm - encoded[perm]).max())
