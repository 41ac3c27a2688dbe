"""
Two measured discrepancies
==========================

1. For q = 3 mod 4 and odd m, the unit in front of eta'(-a) eta(u) has to be
   iota^(3m+3) rather than iota^(3m+1) for the case analysis to reproduce the
   weights.
2. The secret-sharing ratio w_min / w_max > (q-1)/q fails for the delta_3
   code at (q, m) = (2, 5).
"""

# %%
import numpy as np

from bchwork.bch import C_TILDE, build_code
from bchwork.trace import TraceCodeSpec, closed_form_weights, odd_m_unit, pair_weights
from bchwork.weights import secret_sharing_ratio_holds, wmin_wmax

for q, m in [(3, 3), (5, 3), (7, 3)]:
    spec = TraceCodeSpec(q, m)
    truth = pair_weights(spec)
    printed = np.count_nonzero(closed_form_weights(spec, literal=True) != truth)
    fixed = np.count_nonzero(closed_form_weights(spec) != truth)
    print(f"(q, m) = ({q}, {m}) unit {odd_m_unit(q, m, literal=True):+d} -> {printed} wrong pairs;"
          f" unit {odd_m_unit(q, m):+d} -> {fixed}")

# %%
for m, index in [(5, 2), (5, 3), (6, 2), (6, 3), (7, 2)]:
    lo, hi = wmin_wmax(build_code(2, m, f"auto{index}", C_TILDE))
    print(f"m={m} delta_{index}: {lo}/{hi} holds={secret_sharing_ratio_holds(lo, hi, 2)}")
