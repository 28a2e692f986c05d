"""
Components without centering
============================

PCA subtracts the mean, which fills in every zero of a sparse matrix.
Modularity components work on the raw data instead.
"""

# %%
import numpy as np

import modcomp
from modcomp.cluster import kmeans_labels, label_agreement
from modcomp.datasets import three_blobs
from modcomp.pca import zero_count

rng = np.random.default_rng(3)
X = rng.random((8, 40)) * (rng.random((8, 40)) < 0.3)
pca = modcomp.pca_fit(X, 2)

print("zeros before centering:", zero_count(X))
print("zeros after centering:", zero_count(pca.center(X)))

# %%
# On clustered data both embeddings feed k-means equally well.
X3, truth = three_blobs(n=90, seed=0)
mca_emb = modcomp.embed(modcomp.fit(X3, 2), X3)
pca_emb = modcomp.pca_embed(modcomp.pca_fit(X3, 2), X3)

for name, emb in [("modularity", mca_emb), ("pca", pca_emb)]:
    labels = kmeans_labels(emb, 3, seed=0)
    print(name, "agreement:", label_agreement(labels, truth))
