"""
Tables, moments and bounds
==========================

Evaluates the closed-form weight tables, solves the power moments, and
runs two scopes of the verification harness.
"""

# %%
from bchwork.tables import expected_weights
from bchwork.verify import griesmer_check, pless_solve, verify_tables

exp = expected_weights(2, 7, 2)
print("table at (2, 7):", exp.enumerator())
print("moment solve:", pless_solve(127, 2, 14, exp.weights))

# %%
print(griesmer_check(15, 4, 8, 2))
print(griesmer_check(31, 10, 12, 2))

# %%
report = verify_tables("duals")
print(report.to_markdown())

# %%
# larger grids; the default budget skips the 3^15-codeword cases
report = verify_tables("examples")
print(report.to_markdown())
