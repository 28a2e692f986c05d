"""
Auditing a data matrix
======================

The rank-one update behind the solver needs distinct singular values and a
data-sum direction that touches every singular vector.  The audit reports
which of those hold.
"""

# %%
import numpy as np

import modcomp

rng = np.random.default_rng(0)
X = rng.random((4, 12))
report = modcomp.check_assumptions(X)
print("k:", report.k, "betas:", report.beta_count, "passed:", report.passed)
print("alpha:", report.alpha)
print("beta:", report.beta)

# %%
# Repeated singular values break strict interlacing.
report = modcomp.check_assumptions(np.eye(3))
print("identity passed:", report.passed)
for v in report.violations:
    print("  ", v.kind, "at", v.i, "gap", v.gap)

# %%
# fit refuses matrices that fail the audit.
try:
    modcomp.fit(np.eye(3))
except modcomp.ModcompError as exc:
    print(type(exc).__name__, exc)
