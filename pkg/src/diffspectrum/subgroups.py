"""Roots-of-unity subgroups of GF(2^(4n))* and the c + 1/c machinery.

The multiplicative group has order q^4 - 1 = (q-1)(q+1)(q^2+1) with the
three factors pairwise coprime, so every nonzero x splits uniquely as
z * lam * t with z in mu_(q-1), lam in mu_(q+1), t in mu_(q^2+1), where
mu_m denotes the group of m-th roots of unity.

The quadratic c^2 + z*c + 1 over a subfield GF(2^m) always has two roots
in GF(2^(2m)); they multiply to 1 and land either both in GF(2^m) or both
in mu_(2^m + 1), decided by the absolute trace of 1/z.  Solving the
derivative equation reduces to locating such roots, so the Artin-Schreier
and quadratic solvers live here too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientTooSmall, NotInSubfield, ZeroElement
from .field import Field

LOCATION_SUBFIELD = "subfield"
LOCATION_UNITY_COSET = "unity_coset"


@dataclass(frozen=True)
class UnityTriple:
    """Unique factorization of a nonzero element over the three subgroups.

    lam is the mu_(q+1) component (named for lambda, which Python reserves).
    """
    z: int
    lam: int
    t: int


@dataclass(frozen=True)
class QuadraticRoots:
    """Roots of a quadratic, sorted ascending; a repeated root appears twice.

    location is set only by c_plus_inv_decompose: "subfield" when both roots
    lie in GF(2^m)*, "unity_coset" when both lie in mu_(2^m + 1) \\ {1}.
    """
    roots: tuple[int, ...]
    location: str | None = None


def mu_member(field: Field, a: int, m: int) -> bool:
    """Whether a is an m-th root of unity; m must divide q^4 - 1."""
    if m < 1 or field.group_order % m:
        raise ValueError(f"mu_{m} is not a subgroup: {m} does not divide q^4 - 1")
    return a != 0 and field.pow(a, m) == 1


def decompose_unity(field: Field, x: int) -> UnityTriple:
    """Split nonzero x into its mu_(q-1) x mu_(q+1) x mu_(q^2+1) components.

    Uses the CRT exponents precomputed on the field: raising x to e_i kills
    the other two components and fixes the i-th, and the exponents sum to 1
    modulo the group order, so z * lam * t == x.
    """
    if x == 0:
        raise ZeroElement("0 has no unity decomposition")
    e1, e2, e3 = field.crt_exponents
    return UnityTriple(field.pow(x, e1), field.pow(x, e2), field.pow(x, e3))


def solve_artin_schreier(field: Field, w: int, k: int) -> QuadraticRoots:
    """Roots in GF(2^k) of y^2 + y = w, for w in GF(2^k) with k | 4n.

    Solvable iff the absolute trace of w vanishes, in which case the two
    roots differ by 1.  Odd k uses the half-trace; even k uses the weighted
    sum over a fixed trace-1 element theta:

        y = sum_{i=0}^{k-2} (theta^(2^(i+1)) + ... + theta^(2^(k-1))) * w^(2^i)
    """
    if k < 1 or field.degree % k:
        raise ValueError(f"GF(2^{k}) is not a subfield of GF(2^{field.degree})")
    if not field.in_subfield(w, k):
        raise NotInSubfield(f"{w:#x} is not in GF(2^{k})")
    if field.trace_rel(w, 1, k) != 0:
        return QuadraticRoots(())
    if k % 2:
        # half-trace: w + w^4 + w^16 + ... ((k+1)/2 terms)
        y = cur = w
        for _ in range(k // 2):
            cur = field.frobenius2(cur, 2)
            y ^= cur
    else:
        theta = field.trace_one_element(k)
        powers = [theta]
        for _ in range(k - 1):
            powers.append(field.square(powers[-1]))
        suffix = 0  # sum of theta^(2^j) for j > i
        y = 0
        wi = w
        coeffs = []
        for i in range(k - 1):
            coeffs.append(wi)
            wi = field.square(wi)
        for i in range(k - 2, -1, -1):
            suffix ^= powers[i + 1]
            y ^= field.mul(suffix, coeffs[i])
    assert field.square(y) ^ y == w
    return QuadraticRoots(tuple(sorted((y, y ^ 1))))


def solve_quadratic(field: Field, u: int, v: int, k: int) -> QuadraticRoots:
    """Roots in GF(2^k) of x^2 + u*x + v = 0.

    u = 0 degenerates to the bijective square map: one root, reported twice.
    Otherwise the substitution x = u*y reduces to y^2 + y = v/u^2.
    """
    if k < 1 or field.degree % k:
        raise ValueError(f"GF(2^{k}) is not a subfield of GF(2^{field.degree})")
    for name, val in (("u", u), ("v", v)):
        if not field.in_subfield(val, k):
            raise NotInSubfield(f"coefficient {name}={val:#x} is not in GF(2^{k})")
    if u == 0:
        r = field.sqrt(v)
        return QuadraticRoots((r, r))
    base = solve_artin_schreier(field, field.div(v, field.square(u)), k)
    if not base.roots:
        return base
    return QuadraticRoots(tuple(sorted(field.mul(u, y) for y in base.roots)))


def c_plus_inv_decompose(field: Field, zval: int, m: int) -> QuadraticRoots:
    """The two c with c + 1/c = zval, for nonzero zval in GF(2^m).

    The roots of c^2 + zval*c + 1 lie in GF(2^(2m)), multiply to 1, and sit
    either both in GF(2^m)* (absolute trace of 1/zval over GF(2^m) is 0) or
    both in mu_(2^m + 1) \\ {1} (trace is 1); the returned location tag
    records which.  Requires 2m | 4n so the ambient field contains both
    homes.
    """
    if zval == 0:
        raise ZeroElement("zval must be nonzero")
    if m < 1 or field.degree % (2 * m):
        raise AmbientTooSmall(
            f"roots of c + 1/c = z over GF(2^{m}) live in GF(2^{2 * m}), "
            f"which GF(2^{field.degree}) does not contain")
    if not field.in_subfield(zval, m):
        raise NotInSubfield(f"{zval:#x} is not in GF(2^{m})")
    qr = solve_quadratic(field, zval, 1, 2 * m)
    assert len(qr.roots) == 2  # trace of 1/zval^2 over GF(2^(2m)) is always 0
    tr = field.trace_rel(field.inv(zval), 1, m)
    location = LOCATION_SUBFIELD if tr == 0 else LOCATION_UNITY_COSET
    return QuadraticRoots(qr.roots, location)


def solve_t_from_T(field: Field, Tval: int) -> list[int]:
    """The t in mu_(q^2 + 1) \\ {1} with t + 1/t = Tval, for Tval in GF(q^2)*.

    Returns the two such t (each other's inverses, sorted) when the absolute
    trace of 1/Tval over GF(q^2) is 1, and the empty list when it is 0, in
    which case both candidates sit in GF(q^2) instead.
    """
    dec = c_plus_inv_decompose(field, Tval, 2 * field.n)
    if dec.location == LOCATION_SUBFIELD:
        return []
    return list(dec.roots)
