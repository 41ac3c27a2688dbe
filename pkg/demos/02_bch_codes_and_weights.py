"""
BCH codes and their weight distributions
========================================

Builds the codes at the second and third largest coset leaders and
counts codewords by weight, exhaustively.
"""

# %%
from bchwork.bch import C, C_TILDE, bose_distance, build_code, encode
from bchwork.weights import (
    dual_min_distance,
    macwilliams,
    min_weight_codewords,
    weight_distribution,
)

code = build_code(2, 5, "auto2", C_TILDE)
print(f"[n, k] = [{code.n}, {code.k}], delta = {code.delta}, Bose = {bose_distance(code)}")
print("generator:", code.generator)

# %%
word = encode(code, [1, 0, 1] + [0] * (code.k - 3))
print("a codeword:", "".join(map(str, word)), "weight", int((word != 0).sum()))

dist = weight_distribution(code)
print("enumerator:", dist.enumerator())

# %%
# MacWilliams turns the distribution into the dual's
dual = macwilliams(dist)
print("dual minimum distance:", dual.min_weight, "by search:", dual_min_distance(code))

# %%
# the 310 lightest words
light = min_weight_codewords(code)
print(light.shape[0], "codewords of weight", dist.min_weight)

# %%
# a ternary one, and its augmented sibling
for variant in (C_TILDE, C):
    c3 = build_code(3, 4, "auto3", variant)
    d3 = weight_distribution(c3)
    print(variant, f"[{c3.n}, {c3.k}, {d3.min_weight}]")
