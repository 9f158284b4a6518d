"""Tour of GF(2^(4n)) arithmetic: the layer everything else stands on.

Elements are plain Python ints; bit i is the coefficient of X^i in the
polynomial basis determined by the modulus.  Run with:

    python demos/01_field_arithmetic.py
"""

from diffspectrum import Field, default_modulus, is_irreducible

# A field needs one parameter: n.  The field is GF(2^(4n)) and the studied
# exponent is d = 2^(3n) + 2^(2n) + 2^n - 1.
field = Field(2)
print(f"n = {field.n}: GF(2^{field.degree}), q = {field.q}, d = {field.d}")
print(f"default modulus: {field.modulus:#x} "
      f"(irreducible: {is_irreducible(field.modulus)})")
print(f"smallest irreducible of degree 12: {default_modulus(12):#x}")
print()

# Basic operations.  Addition is XOR; everything reduces mod the modulus.
a, b = 0x53, 0xCA
print(f"a = {a:#x}, b = {b:#x}")
print(f"a + b        = {field.add(a, b):#x}")
print(f"a * b        = {field.mul(a, b):#x}")
print(f"a / b        = {field.div(a, b):#x}")
print(f"a^(-1)       = {field.inv(a):#x}   (check: {field.mul(a, field.inv(a)):#x})")
print(f"a^2          = {field.square(a):#x}")
print(f"sqrt(a^2)    = {field.sqrt(field.square(a)):#x}")
print(f"a^d          = {field.pow(a, field.d):#x}")
print(f"a^(-3)       = {field.pow(a, -3):#x}")
print()

# The Frobenius tower: x -> x^(2^n) generates the subfield lattice
# GF(q) < GF(q^2) < GF(q^4).
x = 0x2B
print(f"x            = {x:#x}")
print(f"x^q          = {field.frobenius_q(x, 1):#x}")
print(f"x^(q^2)      = {field.frobenius_q(x, 2):#x}")
print(f"x^(q^4) == x : {field.frobenius_q(x, 4) == x}")
print()

# Relative trace and norm project onto subfields (arguments are the
# absolute degrees of the tower, here GF(2^8) -> GF(2^2) = GF(q)).
tr = field.trace_rel(x, field.n, field.degree)
nm = field.norm_rel(x, field.n, field.degree)
print(f"Tr down to GF(q):   {tr:#x}  (lands in GF(q): {field.in_subfield(tr, field.n)})")
print(f"Norm down to GF(q): {nm:#x}  (lands in GF(q): {field.in_subfield(nm, field.n)})")
print()

# Subfields are enumerable and recognisable.
gf_q = list(field.iter_subfield(field.n))
print(f"GF(q) inside GF(q^4): {[field.encode_hex(v) for v in gf_q]}")
print(f"is 0x2b in GF(q^2)?   {field.in_subfield(0x2B, 2 * field.n)}")
print()

# The multiplicative group is cyclic of order q^4 - 1 = (q-1)(q+1)(q^2+1).
print(f"group order {field.group_order} factors as "
      f"{' * '.join(str(f) for f in field.unity_factors)}")
g = field.primitive_element()
print(f"smallest generator: {g:#x} "
      f"(g^order = {field.pow(g, field.group_order):#x})")
