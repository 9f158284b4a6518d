"""Solving x^d + (x+1)^d = b: the four cases, end to end.

Every b in GF(q^4) lands in exactly one case — q^2 solutions (b = 1),
q^2 - q solutions (b a nontrivial (q+1)-st root of unity), 2 solutions
(the paired family), or none — and the solver both predicts the count and
produces the explicit roots.  Run with:

    python demos/02_solving_and_classification.py
"""

from diffspectrum import (
    Field,
    classify,
    generic_intermediates,
    iter_mu_witnesses,
    solve,
    verify_solution,
)

field = Field(2)
q = field.q
print(f"GF(2^{field.degree}), q = {q}, d = {field.d}\n")

# --- b = 1: the whole subfield GF(q^2) solves the equation -------------
classification, solutions = solve(field, 1)
print(f"b = 0x1   -> {classification.case}, {len(solutions)} solutions "
      f"(all of GF({q * q}))")
sample = sorted(solutions)[:4]
print(f"          first few: {[field.encode_hex(x) for x in sample]}")
print()

# --- b in mu_(q+1) \ {1}: q^2 - q solutions, built from explicit data --
mu_b = next(
    b for b in range(2, 1 << field.degree)
    if field.pow(b, q + 1) == 1 and b != 1
)
classification, solutions = solve(field, mu_b)
print(f"b = {field.encode_hex(mu_b)}   -> {classification.case}, "
      f"{len(solutions)} solutions (q^2 - q = {q * q - q})")
witness = next(iter(iter_mu_witnesses(field, mu_b)))
print(f"          sample witness: z={witness.z:#x} w={witness.w:#x} "
      f"t={witness.t:#x} -> x={witness.x:#x}")
print(f"          verifies: {verify_solution(field, witness.x, mu_b)}")
print()

# --- the paired family: exactly two roots, x and x + 1 -----------------
paired_b = next(
    b for b in range(1 << field.degree)
    if classify(field, b).case == "GENERIC_TWO"
)
classification, solutions = solve(field, paired_b)
roots = sorted(solutions)
print(f"b = {field.encode_hex(paired_b)}   -> {classification.case}, "
      f"roots {[field.encode_hex(x) for x in roots]}")
print(f"          complementary pair: {roots[0] ^ roots[1] == 1}")

# The construction runs through a chain of intermediates with tight
# structural constraints; all of them are inspectable.
chain = generic_intermediates(field, paired_b)
print(f"          chain: alpha={chain.alpha:#x} beta={chain.beta:#x} "
      f"delta={chain.delta:#x} T={chain.T:#x}")
print(f"          T^q == delta*T: "
      f"{field.frobenius_q(chain.T, 1) == field.mul(chain.delta, chain.T)}")
print()

# --- everything else: no solutions, and the chain says why -------------
empty_b = next(
    b for b in range(2, 1 << field.degree)
    if not field.in_subfield(b, 2 * field.n)
    and classify(field, b).case == "NO_SOLUTION"
)
classification, solutions = solve(field, empty_b)
chain = generic_intermediates(field, empty_b)
print(f"b = {field.encode_hex(empty_b)}   -> {classification.case}, "
      f"{len(solutions)} solutions (failure tag: {chain.failure})")
print()

# --- the dispatcher agrees with brute force everywhere -----------------
brute = {
    b: sum(
        1 for x in range(1 << field.degree)
        if field.pow(x, field.d) ^ field.pow(x ^ 1, field.d) == b
    )
    for b in range(1 << field.degree)
}
agree = all(
    len(solve(field, b)[1]) == brute[b] for b in range(1 << field.degree)
)
print(f"solver count == brute-force count for all {1 << field.degree} b: {agree}")
