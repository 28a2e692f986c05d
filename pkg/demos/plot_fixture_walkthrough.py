"""
A two-point walkthrough
=======================

Two points in the plane, (2, 0) and (0, 1), stored as columns.  Every
quantity here is small enough to check by hand.
"""

# %%
import numpy as np

import modcomp

X = np.array([[2.0, 0.0], [0.0, 1.0]])

# %%
# Degrees are the row sums of the Gram matrix, and the modularity matrix
# subtracts their outer product scaled by the total weight.
st = modcomp.stats(X)
print("degrees:", st.d, "total weight:", st.two_m)

G = X.T @ X
B = G - np.outer(st.d, st.d) / st.two_m
print("B =\n", B)

# %%
# One component exists, because the rank is two.
model = modcomp.fit(X)
rec = model.components[0]
print("beta:", rec.beta)
print("b:", rec.b)
print("m:", rec.m, "|m|^2 =", rec.m @ rec.m)
print("c:", rec.c)

# %%
# Projecting the data onto c recovers sqrt(beta) * b.
print("c^T X:", rec.c @ X)
print("sqrt(beta) b:", np.sqrt(rec.beta) * rec.b)
