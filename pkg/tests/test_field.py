"""Field arithmetic: moduli, axioms, Frobenius/trace/norm, codec, subfields."""

import random

import pytest

import oracle_naive
from diffspectrum.errors import (
    DegreeMismatch,
    DivisionByZero,
    MalformedHex,
    NotInSubfield,
    OutOfRange,
    ReducibleModulus,
)
from diffspectrum.field import Field, default_modulus, is_irreducible, make_field

# Smallest irreducible polynomial per degree, frozen from the
# trial-division scan in oracle_naive (re-derived below as a cross-check).
EXPECTED_MODULI = {
    4: 0x13,
    8: 0x11B,
    12: 0x1009,
    16: 0x1002B,
    20: 0x100009,
    24: 0x100001B,
}


class TestModuli:
    @pytest.mark.parametrize("degree,expected", sorted(EXPECTED_MODULI.items()))
    def test_default_modulus_frozen_values(self, degree, expected):
        assert default_modulus(degree) == expected

    @pytest.mark.parametrize("degree", sorted(EXPECTED_MODULI))
    def test_default_modulus_against_trial_division(self, degree):
        assert default_modulus(degree) == oracle_naive.smallest_irreducible(degree)

    def test_rabin_test_agrees_with_trial_division_for_degree_4(self):
        for f in range(1 << 4, 1 << 5):
            assert is_irreducible(f) == oracle_naive.is_irreducible_by_trial_division(f)

    def test_rabin_test_agrees_with_trial_division_for_degree_8(self):
        for f in range(1 << 8, 1 << 9):
            assert is_irreducible(f) == oracle_naive.is_irreducible_by_trial_division(f)


class TestConstruction:
    def test_n1_defaults(self):
        field = make_field(1)
        assert field.modulus == 0x13
        assert field.q == 2
        assert field.d == 13
        assert field.degree == 4
        assert field.group_order == 15

    def test_n2_derived_integers(self):
        field = make_field(2)
        assert field.q == 4
        assert field.d == 83
        assert field.group_order == 255

    def test_reducible_override_rejected(self):
        # X^4 + X^2 + 1 = (X^2 + X + 1)^2
        with pytest.raises(ReducibleModulus):
            Field(1, 0x15)

    def test_wrong_degree_override_rejected(self):
        with pytest.raises(DegreeMismatch):
            Field(1, 0x11B)

    def test_bad_n_rejected(self):
        with pytest.raises(ValueError):
            Field(0)
        with pytest.raises(ValueError):
            Field(-3)
        with pytest.raises(ValueError):
            Field(99)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_supported_n_construct(self, n):
        field = Field(n)
        assert field.degree == 4 * n

    def test_equality_and_hash(self):
        assert Field(1) == Field(1)
        assert hash(Field(1)) == hash(Field(1))
        assert Field(1) != Field(1, 0x19)
        assert Field(1) != Field(2)


class TestRingAxioms:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_random_triples(self, fields, n):
        field = fields[n]
        rng = random.Random(42)
        size = 1 << field.degree
        for _ in range(10_000):
            a, b, c = (rng.randrange(size) for _ in range(3))
            assert field.mul(a, b) == field.mul(b, a)
            assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
            assert field.mul(a, b ^ c) == field.mul(a, b) ^ field.mul(a, c)
            assert field.mul(a, 1) == a
            assert field.add(a, a) == 0

    @pytest.mark.parametrize("n", [1, 2])
    def test_inverses_exhaustive(self, fields, n):
        field = fields[n]
        for a in range(1, 1 << field.degree):
            assert field.mul(a, field.inv(a)) == 1

    def test_inv_zero_raises(self, f1):
        with pytest.raises(DivisionByZero):
            f1.inv(0)
        with pytest.raises(DivisionByZero):
            f1.div(3, 0)

    @pytest.mark.parametrize("n", [1, 2])
    def test_pow_group_order_is_one_exhaustive(self, fields, n):
        field = fields[n]
        for a in range(1, 1 << field.degree):
            assert field.pow(a, field.group_order) == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_power_map_d_is_bijective(self, fields, n):
        field = fields[n]
        images = {field.pow(a, field.d) for a in range(1 << field.degree)}
        assert len(images) == 1 << field.degree

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pow_d_roundtrip(self, fields, n):
        field = fields[n]
        d_inverse = pow(field.d, -1, field.group_order)
        rng = random.Random(42)
        for _ in range(200):
            a = rng.randrange(1, 1 << field.degree)
            assert field.pow(field.pow(a, field.d), d_inverse) == a

    def test_pow_zero_base(self, f1):
        assert f1.pow(0, 0) == 1
        assert f1.pow(0, 5) == 0
        with pytest.raises(DivisionByZero):
            f1.pow(0, -1)

    def test_pow_negative_exponent(self, f2):
        rng = random.Random(42)
        for _ in range(50):
            a = rng.randrange(1, 1 << f2.degree)
            assert f2.pow(a, -1) == f2.inv(a)

    @pytest.mark.parametrize("n", [1, 2])
    def test_mul_agrees_with_naive_oracle_exhaustive(self, fields, n):
        field = fields[n]
        size = 1 << field.degree
        rng = random.Random(42)
        pairs = [(rng.randrange(size), rng.randrange(size)) for _ in range(2000)]
        if n == 1:
            pairs = [(a, b) for a in range(size) for b in range(size)]
        for a, b in pairs:
            assert field.mul(a, b) == oracle_naive.field_mul(field.modulus, a, b)

    def test_table_fast_path_is_bit_identical_to_schoolbook(self):
        plain = Field(2)
        fast = Field(2)
        fast.ensure_tables()
        assert fast._fast_tables and not plain._fast_tables
        for a in range(1 << 8):
            for b in range(0, 1 << 8, 7):
                assert fast.mul(a, b) == plain.mul(a, b)
        for a in range(1, 1 << 8):
            assert fast.inv(a) == plain.inv(a)
            assert fast.pow(a, 83) == plain.pow(a, 83)


class TestSqrtFrobenius:
    def test_sqrt_fixed_points(self, f2):
        assert f2.sqrt(0) == 0
        assert f2.sqrt(1) == 1

    @pytest.mark.parametrize("n", [1, 2])
    def test_sqrt_inverts_square_exhaustive(self, fields, n):
        field = fields[n]
        for a in range(1 << field.degree):
            assert field.sqrt(field.square(a)) == a
            assert field.square(field.sqrt(a)) == a

    def test_frobenius_q_basics(self, f2):
        rng = random.Random(42)
        for _ in range(200):
            a = rng.randrange(1 << f2.degree)
            assert f2.frobenius_q(a, 0) == a
            assert f2.frobenius_q(f2.frobenius_q(a, 2), 2) == a
            assert f2.frobenius_q(a, 1) == f2.pow(a, f2.q)

    def test_frobenius_fixes_base_subfield(self, f2):
        for a in f2.iter_subfield(f2.n):
            for i in range(4):
                assert f2.frobenius_q(a, i) == a

    def test_frobenius_negative_power_rejected(self, f1):
        with pytest.raises(ValueError):
            f1.frobenius_q(3, -1)


class TestTraceNorm:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_trace_of_zero(self, fields, n):
        field = fields[n]
        assert field.trace_rel(0, 1, field.degree) == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_absolute_trace_of_one_over_gf_q(self, fields, n):
        # Tr from GF(q) to GF(2) of 1 is a sum of n ones.
        assert fields[n].trace_rel(1, 1, n) == n % 2

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_trace_tower_transitivity(self, fields, n):
        field = fields[n]
        rng = random.Random(42)
        subfield = list(field.iter_subfield(2 * n))
        for _ in range(200):
            a = rng.choice(subfield)
            assert field.trace_rel(a, 1, 2 * n) == field.trace_rel(
                field.trace_rel(a, n, 2 * n), 1, n
            )

    def test_norm_of_one(self, f2):
        assert f2.norm_rel(1, f2.n, f2.degree) == 1

    def test_norm_of_base_subfield_element_is_fourth_power(self, f2):
        for a in f2.iter_subfield(f2.n):
            assert f2.norm_rel(a, f2.n, f2.degree) == f2.pow(a, 4)

    def test_norm_multiplicativity(self, f2):
        rng = random.Random(42)
        size = 1 << f2.degree
        for _ in range(500):
            a, b = rng.randrange(size), rng.randrange(size)
            lhs = f2.norm_rel(f2.mul(a, b), f2.n, f2.degree)
            rhs = f2.mul(
                f2.norm_rel(a, f2.n, f2.degree), f2.norm_rel(b, f2.n, f2.degree)
            )
            assert lhs == rhs

    @pytest.mark.parametrize("n", [1, 2])
    def test_trace_and_norm_land_in_target_subfield_exhaustive(self, fields, n):
        field = fields[n]
        towers = [(1, n), (1, 2 * n), (1, 4 * n), (n, 2 * n), (n, 4 * n), (2 * n, 4 * n)]
        for l, k in towers:
            for a in field.iter_subfield(k):
                assert field.in_subfield(field.trace_rel(a, l, k), l)
                assert field.in_subfield(field.norm_rel(a, l, k), l)

    def test_trace_is_additive(self, f2):
        rng = random.Random(42)
        size = 1 << f2.degree
        for _ in range(500):
            a, b = rng.randrange(size), rng.randrange(size)
            assert f2.trace_rel(a ^ b, 1, f2.degree) == f2.trace_rel(
                a, 1, f2.degree
            ) ^ f2.trace_rel(b, 1, f2.degree)

    def test_trace_rejects_element_outside_claimed_subfield(self, f2):
        outsider = f2.primitive_element()
        assert not f2.in_subfield(outsider, 2 * f2.n)
        with pytest.raises(NotInSubfield):
            f2.trace_rel(outsider, 1, 2 * f2.n)
        with pytest.raises(NotInSubfield):
            f2.norm_rel(outsider, f2.n, 2 * f2.n)

    def test_trace_rejects_bad_tower(self, f2):
        with pytest.raises(ValueError):
            f2.trace_rel(1, 3, 8)  # 3 does not divide 8
        with pytest.raises(ValueError):
            f2.trace_rel(1, 1, 3)  # GF(2^3) is not a subfield of GF(2^8)


class TestSubfields:
    @pytest.mark.parametrize("n", [1, 2])
    def test_membership_counts(self, fields, n):
        field = fields[n]
        for k in (n, 2 * n, 4 * n):
            members = [a for a in range(1 << field.degree) if field.in_subfield(a, k)]
            assert len(members) == 1 << k

    def test_trivial_memberships(self, f2):
        for k in (1, 2, 4, 8):
            assert f2.in_subfield(0, k)
            assert f2.in_subfield(1, k)

    def test_primitive_element_is_outside_gf_q2(self, f2):
        assert not f2.in_subfield(f2.primitive_element(), 2 * f2.n)

    def test_primitive_element_has_full_order(self, f2):
        g = f2.primitive_element()
        assert f2.pow(g, f2.group_order) == 1
        for p in (3, 5, 17):  # prime factors of 255
            assert f2.pow(g, f2.group_order // p) != 1

    @pytest.mark.parametrize("n", [1, 2])
    def test_iter_subfield_sorted_and_consistent(self, fields, n):
        field = fields[n]
        for k in (n, 2 * n, 4 * n):
            listed = list(field.iter_subfield(k))
            assert listed == sorted(listed)
            assert len(listed) == 1 << k
            assert all(field.in_subfield(a, k) for a in listed)

    def test_iter_subfield_is_closed_under_field_ops(self, f2):
        members = list(f2.iter_subfield(2 * f2.n))
        member_set = set(members)
        for a in members:
            for b in members:
                assert f2.mul(a, b) in member_set
                assert (a ^ b) in member_set

    def test_trace_one_element(self, f2):
        for k in (2, 4, 8):
            theta = f2.trace_one_element(k)
            assert f2.in_subfield(theta, k)
            assert f2.trace_rel(theta, 1, k) == 1


class TestHexCodec:
    def test_one_and_x(self, f1):
        assert f1.encode_hex(1) == "0x1"
        assert f1.encode_hex(2) == "0x2"

    def test_roundtrip(self, f2):
        for a in range(1 << f2.degree):
            assert f2.decode_hex(f2.encode_hex(a)) == a

    def test_decode_out_of_range(self, f1):
        with pytest.raises(OutOfRange):
            f1.decode_hex("0x10")

    def test_encode_out_of_range(self, f1):
        with pytest.raises(OutOfRange):
            f1.encode_hex(16)
        with pytest.raises(OutOfRange):
            f1.encode_hex(-1)

    @pytest.mark.parametrize("bad", ["", "10", "0x", "0xZZ", " 0x1", "0x1 ", "1"])
    def test_decode_malformed(self, f1, bad):
        with pytest.raises(MalformedHex):
            f1.decode_hex(bad)

    def test_errors_are_value_errors_too(self, f1):
        with pytest.raises(ValueError):
            f1.decode_hex("bogus")
        with pytest.raises(ValueError):
            f1.decode_hex("0x10")
