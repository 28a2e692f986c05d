"""
Deflating one component at a time
=================================

Removing the first components from the data removes exactly their
eigenvalues from the modularity spectrum and leaves the rest untouched.
"""

# %%
import numpy as np

import modcomp

rng = np.random.default_rng(7)
X = rng.normal(size=(5, 20)) + 3.0
model = modcomp.fit(X)
print("beta:", model.beta)

# %%
def spectrum(Y):
    st = modcomp.stats(Y)
    B = Y.T @ Y - np.outer(st.d, st.d) / st.two_m
    return np.sort(np.linalg.eigvalsh(B))[::-1]

for i in range(1, model.num_components + 1):
    Xi = modcomp.deflate(X, model, i)
    print(f"after removing {i - 1} components:", np.round(spectrum(Xi)[: model.num_components], 6))
