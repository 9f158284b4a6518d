"""Polynomial-basis arithmetic for GF(2^(4n)).

Elements are plain Python ints: bit i of the int is the coefficient of X^i
in the canonical residue of degree < 4n, so 0 and 1 are the field's zero
and one.  A Field instance fixes n and the irreducible modulus and carries
every derived constant the rest of the library needs:

    q           = 2^n
    d           = q^3 + q^2 + q - 1   (the exponent under study)
    group_order = q^4 - 1             = (q-1)(q+1)(q^2+1)

Fields are immutable after construction apart from internal memo tables,
so instances are safe to share between concurrent workers.
"""

from __future__ import annotations

import math
import re
from typing import Iterator

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    MalformedHex,
    NotInSubfield,
    OutOfRange,
    ReducibleModulus,
)

Element = int

# Degree cap: keeps q^4 - 1 within 64 bits so encodings stay portable.
MAX_N = 15

# mul/pow/inv consult log tables only up to this field degree; beyond it the
# schoolbook routines are used even when tables were built for a sweep.
TABLE_FAST_PATH_BITS = 20

_HEX_RE = re.compile(r"0[xX][0-9a-fA-F]+\Z")


# ---------------------------------------------------------------------------
# GF(2)[X] helpers on plain ints (no field modulus attached)
# ---------------------------------------------------------------------------

def _pmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def _pmod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[X]."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def is_irreducible(f: int) -> bool:
    """Whether f is irreducible over GF(2).

    A polynomial of degree m is irreducible iff it shares no factor with
    X^(2^i) - X for every i up to m/2, since that product collects all
    irreducible polynomials of degree dividing i.
    """
    m = f.bit_length() - 1
    if m < 1:
        return False
    r = 2  # X
    for _ in range(m // 2):
        r = _pmod(_pmul(r, r), f)
        if _pgcd(r ^ 2, f) != 1:
            return False
    return True


def default_modulus(degree: int) -> int:
    """Smallest irreducible polynomial of the given degree.

    Smallest in the integer encoding, which orders polynomials by their
    coefficient sequences from the leading term down.  Degree 4 gives
    X^4 + X + 1 = 0x13.
    """
    for c in range(1, 1 << degree, 2):  # even c is divisible by X
        f = (1 << degree) | c
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {degree}")  # pragma: no cover


def _prime_factors(x: int) -> list[int]:
    out = []
    p = 2
    while p * p <= x:
        if x % p == 0:
            out.append(p)
            while x % p == 0:
                x //= p
        p += 1 if p == 2 else 2
    if x > 1:
        out.append(x)
    return out


# ---------------------------------------------------------------------------
# the field itself
# ---------------------------------------------------------------------------

class Field:
    """GF(2^(4n)) with polynomial-basis arithmetic.

    Parameters
    ----------
    n : int
        Tower parameter, 1 <= n <= MAX_N.  The field has degree 4n.
    modulus : int, optional
        Irreducible polynomial of degree exactly 4n, including the leading
        term (0x13 means X^4 + X + 1).  Defaults to the smallest irreducible
        of that degree.
    """

    def __init__(self, n: int, modulus: int | None = None):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError("n must be a positive integer")
        if n > MAX_N:
            raise ValueError(f"n={n} not supported (max {MAX_N})")
        self.n = n
        self.degree = 4 * n
        self.q = 1 << n
        self.d = self.q ** 3 + self.q ** 2 + self.q - 1
        self.size = 1 << self.degree
        self.group_order = self.size - 1
        if modulus is None:
            modulus = default_modulus(self.degree)
        else:
            if modulus.bit_length() - 1 != self.degree:
                raise DegreeMismatch(
                    f"modulus {modulus:#x} has degree {modulus.bit_length() - 1}, "
                    f"need {self.degree}")
            if not is_irreducible(modulus):
                raise ReducibleModulus(f"modulus {modulus:#x} is reducible")
        self.modulus = modulus

        # x -> x^d permutes the field; everything downstream relies on it.
        assert math.gcd(self.d, self.group_order) == 1

        # Orders of the three unity subgroups mu_(q-1), mu_(q+1), mu_(q^2+1)
        # whose (pairwise coprime) product is the full group order, plus the
        # CRT exponents projecting onto each factor: e_i = 1 mod m_i and
        # e_i = 0 mod the other two.
        self.unity_factors = (self.q - 1, self.q + 1, self.q ** 2 + 1)
        exps = []
        for m_i in self.unity_factors:
            rest = self.group_order // m_i
            exps.append(rest * pow(rest, -1, m_i) % self.group_order)
        self.crt_exponents = tuple(exps)

        self._tables: tuple[list[int], list[int]] | None = None
        self._fast_tables = False
        self._primitive: int | None = None
        self._subfield_bases: dict[int, tuple[int, ...]] = {}
        self._trace_one: dict[int, int] = {}

    def __repr__(self) -> str:
        return f"Field(n={self.n}, modulus={self.modulus:#x})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field)
                and self.n == other.n and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.n, self.modulus))

    # -- basic ring operations ------------------------------------------

    def add(self, a: int, b: int) -> int:
        """Sum (= difference) of two elements."""
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Product of two elements."""
        if self._fast_tables:
            if a == 0 or b == 0:
                return 0
            exp, log = self._tables
            return exp[(log[a] + log[b]) % self.group_order]
        return self._mul_schoolbook(a, b)

    def _mul_schoolbook(self, a: int, b: int) -> int:
        m, mod, r = self.degree, self.modulus, 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> m:
                a ^= mod
        return r

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises DivisionByZero on 0."""
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self._fast_tables:
            exp, log = self._tables
            return exp[(self.group_order - log[a]) % self.group_order]
        # extended Euclid in GF(2)[X]
        u, v = a, self.modulus
        g1, g2 = 1, 0
        while u != 1:
            j = u.bit_length() - v.bit_length()
            if j < 0:
                u, v = v, u
                g1, g2 = g2, g1
                j = -j
            u ^= v << j
            g1 ^= g2 << j
        return _pmod(g1, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a raised to the integer exponent e.

        Negative exponents are accepted for nonzero bases; the exponent is
        reduced modulo q^4 - 1 before the square-and-multiply ladder runs.
        """
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 has no multiplicative inverse")
            return 1 if e == 0 else 0
        e %= self.group_order
        if self._fast_tables:
            exp, log = self._tables
            return exp[log[a] * e % self.group_order]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def sqrt(self, a: int) -> int:
        """The unique square root: squaring is a bijection in characteristic 2."""
        return self.pow(a, 1 << (self.degree - 1))

    # -- Frobenius, trace, norm ------------------------------------------

    def frobenius2(self, a: int, j: int) -> int:
        """a^(2^j), the j-fold squaring map."""
        return self.pow(a, 1 << (j % self.degree))

    def frobenius_q(self, a: int, i: int) -> int:
        """a^(q^i) for i >= 0; composing four times is the identity."""
        if i < 0:
            raise ValueError("Frobenius power must be nonnegative")
        return self.frobenius2(a, self.n * i % self.degree)

    def _check_tower(self, a: int, l: int, k: int) -> None:
        if l < 1 or k % l or self.degree % k:
            raise ValueError(f"need a subfield tower: {l} | {k} | {self.degree}")
        if not self.in_subfield(a, k):
            raise NotInSubfield(f"{a:#x} is not in GF(2^{k})")

    def trace_rel(self, a: int, l: int, k: int) -> int:
        """Relative trace from GF(2^k) down to GF(2^l): sum of a^(2^(l*i))."""
        self._check_tower(a, l, k)
        acc = cur = a
        for _ in range(k // l - 1):
            cur = self.frobenius2(cur, l)
            acc ^= cur
        return acc

    def norm_rel(self, a: int, l: int, k: int) -> int:
        """Relative norm from GF(2^k) down to GF(2^l): product of a^(2^(l*i))."""
        self._check_tower(a, l, k)
        acc = cur = a
        for _ in range(k // l - 1):
            cur = self.frobenius2(cur, l)
            acc = self.mul(acc, cur)
        return acc

    def in_subfield(self, a: int, k: int) -> bool:
        """Whether a lies in the subfield GF(2^k); requires k | 4n."""
        if k < 1 or self.degree % k:
            raise ValueError(f"GF(2^{k}) is not a subfield of GF(2^{self.degree})")
        return self.frobenius2(a, k) == a

    # -- hex codec --------------------------------------------------------

    def encode_hex(self, a: int) -> str:
        """Lowercase 0x-prefixed hex of the element's bit sequence."""
        if not 0 <= a < self.size:
            raise OutOfRange(f"{a:#x} does not encode an element of GF(2^{self.degree})")
        return format(a, "#x")

    def decode_hex(self, s: str) -> int:
        """Parse an element from hex; strict inverse of encode_hex."""
        if not isinstance(s, str) or not _HEX_RE.fullmatch(s):
            raise MalformedHex(f"not a hex element encoding: {s!r}")
        v = int(s, 16)
        if v >= self.size:
            raise OutOfRange(f"{s} encodes degree >= {self.degree}")
        return v

    # -- subfield enumeration ---------------------------------------------

    def subfield_basis(self, k: int) -> tuple[int, ...]:
        """GF(2)-basis of GF(2^k) inside this field, reduced so that the
        enumeration index map of iter_subfield is strictly increasing."""
        if k < 1 or self.degree % k:
            raise ValueError(f"GF(2^{k}) is not a subfield of GF(2^{self.degree})")
        if k not in self._subfield_bases:
            self._subfield_bases[k] = self._compute_subfield_basis(k)
        return self._subfield_bases[k]

    def _compute_subfield_basis(self, k: int) -> tuple[int, ...]:
        m = self.degree
        # kernel of the GF(2)-linear map x -> x^(2^k) + x
        pivots: dict[int, tuple[int, int]] = {}
        kernel = []
        for j in range(m):
            vec = self.frobenius2(1 << j, k) ^ (1 << j)
            mask = 1 << j
            while vec:
                lead = vec.bit_length() - 1
                if lead not in pivots:
                    pivots[lead] = (vec, mask)
                    break
                pv, pm = pivots[lead]
                vec ^= pv
                mask ^= pm
            else:
                kernel.append(mask)  # the mask *is* the fixed element
        assert len(kernel) == k
        # reduced echelon form: distinct leading bits, none present in the
        # other vectors, sorted ascending -> index enumeration is monotone
        basis: list[int] = []
        for v in kernel:
            for b in basis:
                if (v >> (b.bit_length() - 1)) & 1:
                    v ^= b
            if v:
                lead = v.bit_length() - 1
                basis = [b ^ v if (b >> lead) & 1 else b for b in basis]
                basis.append(v)
        basis.sort()
        assert len(basis) == k
        return tuple(basis)

    def iter_subfield(self, k: int) -> Iterator[int]:
        """All 2^k elements of GF(2^k), in increasing integer order."""
        basis = self.subfield_basis(k)
        for idx in range(1 << k):
            x = 0
            while idx:
                low = idx & -idx
                x ^= basis[low.bit_length() - 1]
                idx ^= low
            yield x

    def trace_one_element(self, k: int) -> int:
        """A fixed element of GF(2^k) with absolute trace 1.

        Found by scanning the full field in integer order for absolute trace
        1 and pushing that witness down with the relative trace, which keeps
        the choice deterministic for every k at once.
        """
        if k < 1 or self.degree % k:
            raise ValueError(f"GF(2^{k}) is not a subfield of GF(2^{self.degree})")
        if k not in self._trace_one:
            u = 0
            while self.trace_rel(u, 1, self.degree) != 1:
                u += 1
            theta = self.trace_rel(u, k, self.degree)
            assert self.trace_rel(theta, 1, k) == 1
            self._trace_one[k] = theta
        return self._trace_one[k]

    # -- discrete-log tables ----------------------------------------------

    def primitive_element(self) -> int:
        """The smallest generator of the multiplicative group.

        Found by scanning upward from 2 and rejecting any candidate whose
        order divides a maximal proper divisor of q^4 - 1; cached.
        """
        if self._primitive is None:
            order = self.group_order
            g = 2
            fac = _prime_factors(order)
            while any(self.pow(g, order // p) == 1 for p in fac):
                g += 1
            self._primitive = g
        return self._primitive

    def discrete_logs(self) -> tuple[list[int], list[int]]:
        """(exp, log) tables over a fixed primitive element.

        exp has length q^4 - 1 with exp[i] = g^i; log is its inverse keyed
        by element (log[0] is a dead slot).  Built once per field.  Scalar
        mul/pow/inv switch to the tables only for degrees up to
        TABLE_FAST_PATH_BITS; the exhaustive sweeps use them directly.
        """
        if self._tables is None:
            order = self.group_order
            g = self.primitive_element()
            exp = [1] * order
            log = [0] * (order + 1)
            cur = 1
            for i in range(order):
                exp[i] = cur
                log[cur] = i
                cur = self._mul_schoolbook(cur, g)
            assert cur == 1
            self._tables = (exp, log)
            self._fast_tables = self.degree <= TABLE_FAST_PATH_BITS
        return self._tables

    def ensure_tables(self) -> None:
        """Build the discrete-log tables now (idempotent)."""
        self.discrete_logs()


def make_field(n: int, modulus: int | None = None) -> Field:
    """Construct GF(2^(4n)); see Field for the modulus convention."""
    return Field(n, modulus)
