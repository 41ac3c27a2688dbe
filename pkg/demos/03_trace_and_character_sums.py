"""
Trace form and character sums
=============================

The delta_2 code written as Tr(a x^(1+q^h) + b x).  Weights are predicted
twice, by summing characters and by case analysis, and checked against
counting nonzero coordinates.
"""

# %%
import numpy as np

from bchwork.bch import C_TILDE, build_code
from bchwork.trace import (
    TraceCodeSpec,
    charsum_check,
    gauss_sum,
    min_weight_census,
    pair_weights,
    structure_facts,
    trace_weight_distribution,
)
from bchwork.weights import weight_distribution

spec = TraceCodeSpec(3, 3)
w = pair_weights(spec)
vals, counts = np.unique(w, return_counts=True)
print("weights over all (a, b):", dict(zip(vals.tolist(), counts.tolist())))

# %%
# same distribution as the cyclic code
dist, mult = trace_weight_distribution(TraceCodeSpec(3, 4, "delta3"))
print("trace form == cyclic form:",
      dist == weight_distribution(build_code(3, 4, "auto3", C_TILDE)))

# %%
for q in (3, 5, 7):
    print(f"G(eta, chi_1) over GF({q}) = {gauss_sum(q):.6f}")

# %%
rep = charsum_check(TraceCodeSpec(3, 4))
print("mismatches:", rep["direct_mismatches"], rep["closed_form_mismatches"])
print("cases:", rep["case_tallies"])

# %%
print(min_weight_census(TraceCodeSpec(3, 4)))
print(structure_facts(3, 4))
