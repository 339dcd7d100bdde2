# Sampled moment images of the model manifolds.
#
# Samples are Liouville-uniform (uniform in log|t| along each log end) and
# truncated at depth 10. A CSV with the samples is written next to this file
# for plotting.
#
# Run with:  python demos/03_moment_images.py

# %%
from pathlib import Path

import numpy as np

from bmoment.models.checks import convexity_check, verify_leaf_image
from bmoment.models.families import BSphere, LocalModel, ZeroWeightProduct
from bmoment.models.fixtures import two_clusters
from bmoment.models.sampling import image_sample
from bmoment.serialization import write_csv

for fam in (BSphere(), LocalModel(), ZeroWeightProduct()):
    s = image_sample(fam, 20_000, seed=1)
    print(fam.family, s.summary()["min"], s.summary()["max"])

# %%
# Convexity by density: midpoints of random pairs must have a sample nearby.
s = image_sample(LocalModel(), 100_000, seed=0)
print("local model:", convexity_check(s, m=1000, delta=0.05))
print("two clusters:", convexity_check(two_clusters(), m=1000, delta=0.05))

# %%
# With zero weights the image is already the image of one leaf inside Z.
for n in (100, 1000, 10_000):
    print(n, verify_leaf_image(ZeroWeightProduct(), n))

# %%
out = Path(__file__).with_name("local_model_samples.csv")
write_csv(image_sample(LocalModel(), 2000, seed=0), out)
print("wrote", out, "rows:", sum(1 for _ in open(out)) - 1)
print("fraction with r < -5:", np.mean(s.moments[:, 1] < -5))
