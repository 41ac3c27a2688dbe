"""
Finite fields and cyclotomic cosets
===================================

Walks through the field encoding used everywhere else, then the coset
leaders that pick out the design distances.
"""

# %%
from bchwork.cyclotomic import closed_form_leader, coset_of, coset_table
from bchwork.gf import extension_field, make_field

F = make_field(2, 4)
print("GF(16) modulus, low degree first:", F.modulus)
print("alpha =", F.alpha, "has order", F.order_of(F.alpha))

# elements are integers: 0b1011 is 1 + x + x^3
a, b = 0b1011, 0b0110
print("a + b =", F.add(a, b), " a * b =", F.mul(a, b), " a / b =", F.div(a, b))

# %%
# GF(3) sits inside GF(3^4); the trace lands there
big = extension_field(3, 4)
sub = big.subfield(3)
print("Tr(alpha^j) for j < 10:", [sub.trace(big.alpha_pow(j)) for j in range(10)])

# %%
# cosets of 3 modulo 2^4 - 1 and the three largest leaders
print("coset of 3 mod 15:", coset_of(3, 2, 4).elements)
table = coset_table(2, 6)
print("largest leaders mod 63:", table.leaders[-3:], "sizes", table.sizes[-3:])
for k in (1, 2, 3):
    print(f"closed form, rank {k}:", closed_form_leader(k, 2, 6))
