"""Classification and constructive solving, cross-checked against scans."""

import pytest

import oracle_naive
from diffspectrum.errors import InternalDegenerate, PreconditionViolated
from diffspectrum.solver import (
    CASE_B_EQUALS_ONE,
    CASE_GENERIC_TWO,
    CASE_MU,
    CASE_NO_SOLUTION,
    SolutionSet,
    classify,
    generic_intermediates,
    is_in_s2,
    iter_mu_witnesses,
    solve,
    solve_b_equals_1,
    solve_generic,
    solve_mu_case,
    verify_solution,
)

# Complete solution map for n=1 (modulus 0x13), frozen from the naive
# exhaustive scan in oracle_naive before the solver was written.
N1_SOLUTIONS = {
    0x0: [],
    0x1: [0, 1, 6, 7],
    0x2: [],
    0x3: [],
    0x4: [],
    0x5: [],
    0x6: [2, 3],
    0x7: [4, 5],
    0x8: [],
    0x9: [14, 15],
    0xA: [],
    0xB: [12, 13],
    0xC: [],
    0xD: [10, 11],
    0xE: [8, 9],
    0xF: [],
}

# Membership of the two-solution family at n=1, frozen from the same scan.
N1_S2_MEMBERS = [0x9, 0xB, 0xD, 0xE]

# Expected family sizes: exactly one b with q^2 solutions, q with q^2 - q,
# q^3(q-1)/2 with two, and the rest with none.
def expected_frequencies(q: int) -> dict[str, int]:
    s2 = q**3 * (q - 1) // 2
    return {
        CASE_B_EQUALS_ONE: 1,
        CASE_MU: q,
        CASE_GENERIC_TWO: s2,
        CASE_NO_SOLUTION: q**4 - 1 - q - s2,
    }


class TestVerifySolution:
    def test_zero_and_one_solve_b_equals_1(self, f1):
        assert verify_solution(f1, 0, 1)
        assert verify_solution(f1, 1, 1)

    def test_invariant_under_complement(self, f2):
        for x in range(1 << f2.degree):
            b = f2.pow(x, f2.d) ^ f2.pow(x ^ 1, f2.d)
            assert verify_solution(f2, x, b)
            assert verify_solution(f2, x ^ 1, b)


class TestClassify:
    def test_b_one(self, f2):
        result = classify(f2, 1)
        assert result.case == CASE_B_EQUALS_ONE
        assert result.predicted_count == f2.q**2

    def test_b_zero(self, f2):
        result = classify(f2, 0)
        assert result.case == CASE_NO_SOLUTION
        assert result.predicted_count == 0

    def test_mu_members(self, f2):
        q = f2.q
        mu = [b for b in range(1, 1 << f2.degree) if f2.pow(b, q + 1) == 1]
        assert len(mu) == q + 1
        for b in mu:
            if b == 1:
                continue
            result = classify(f2, b)
            assert result.case == CASE_MU
            assert result.predicted_count == q**2 - q

    def test_out_of_range_b_rejected(self, f1):
        with pytest.raises(PreconditionViolated):
            classify(f1, 16)
        with pytest.raises(PreconditionViolated):
            classify(f1, -1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_case_frequencies_exhaustive(self, fields, n):
        field = fields[n]
        tally: dict[str, int] = {}
        for b in range(1 << field.degree):
            tally[classify(field, b).case] = tally.get(classify(field, b).case, 0) + 1
        assert tally == expected_frequencies(field.q)


class TestIsInS2:
    def test_one_is_excluded(self, f2):
        assert not is_in_s2(f2, 1)

    def test_gf_q2_is_excluded(self, f2):
        for b in f2.iter_subfield(2 * f2.n):
            assert not is_in_s2(f2, b)

    def test_n1_members_frozen(self, f1):
        members = [b for b in range(16) if is_in_s2(f1, b)]
        assert members == N1_S2_MEMBERS

    @pytest.mark.parametrize("n,expected", [(1, 4), (2, 96), (3, 1792)])
    def test_cardinality_exhaustive(self, fields, n, expected):
        field = fields[n]
        count = sum(is_in_s2(field, b) for b in range(1 << field.degree))
        assert count == expected == field.q**3 * (field.q - 1) // 2

    @pytest.mark.parametrize("n", [1, 2])
    def test_disjoint_from_subfield_and_mu(self, fields, n):
        field = fields[n]
        q = field.q
        for b in range(1 << field.degree):
            if is_in_s2(field, b):
                assert not field.in_subfield(b, 2 * n)
                assert field.pow(b, q + 1) != 1


class TestSolveBEquals1:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_iterates_exactly_the_frobenius_fixed_points(self, fields, n):
        field = fields[n]
        solutions = solve_b_equals_1(field)
        expected = {x for x in range(1 << field.degree) if field.frobenius_q(x, 2) == x}
        assert set(solutions) == expected
        assert len(solutions) == field.q**2

    def test_zero_and_one_present(self, f2):
        solutions = solve_b_equals_1(f2)
        assert 0 in solutions and 1 in solutions

    def test_every_member_solves(self, f2):
        for x in solve_b_equals_1(f2):
            assert verify_solution(f2, x, 1)


class TestMuCase:
    def test_rejects_non_mu_b(self, f2):
        with pytest.raises(PreconditionViolated):
            list(iter_mu_witnesses(f2, 1))
        with pytest.raises(PreconditionViolated):
            list(iter_mu_witnesses(f2, 0))
        outsider = f2.primitive_element()
        with pytest.raises(PreconditionViolated):
            list(iter_mu_witnesses(f2, outsider))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_count_for_every_mu_b(self, fields, n):
        field = fields[n]
        q = field.q
        for b in range(2, 1 << field.degree):
            if field.pow(b, q + 1) != 1:
                continue
            solutions = solve_mu_case(field, b)
            assert len(solutions) == q**2 - q

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_bruteforce_sets(self, fields, n):
        field = fields[n]
        q = field.q
        oracle = oracle_naive.solution_sets(field.modulus, field.degree, field.d)
        for b in range(2, 1 << field.degree):
            if field.pow(b, q + 1) != 1:
                continue
            assert set(solve_mu_case(field, b)) == oracle.get(b, set())

    def test_witness_invariants(self, f2):
        q = f2.q
        b = next(
            b for b in range(2, 1 << f2.degree) if f2.pow(b, q + 1) == 1
        )
        c = f2.sqrt(b)
        witnesses = list(iter_mu_witnesses(f2, b))
        assert len(witnesses) == q**2 - q
        for w in witnesses:
            assert f2.in_subfield(w.z, f2.n) and w.z != 0
            assert f2.in_subfield(w.w, f2.n) and w.w != 0
            assert w.T == w.z ^ f2.inv(w.z) ^ f2.mul(c, w.w)
            assert f2.trace_rel(f2.inv(w.T), 1, 2 * f2.n) == 1
            assert w.t ^ f2.inv(w.t) == w.T
            assert f2.pow(w.t, q * q + 1) == 1
            assert w.x == f2.inv(1 ^ f2.mul(w.z, w.t))
            assert verify_solution(f2, w.x, b)

    @pytest.mark.parametrize("n", [1, 2])
    def test_no_solution_lies_in_gf_q2(self, fields, n):
        field = fields[n]
        q = field.q
        for b in range(2, 1 << field.degree):
            if field.pow(b, q + 1) != 1:
                continue
            for x in solve_mu_case(field, b):
                assert not field.in_subfield(x, 2 * n)


class TestGenericCase:
    def test_rejects_subfield_b(self, f2):
        with pytest.raises(PreconditionViolated):
            generic_intermediates(f2, 1)

    def test_solve_generic_returns_empty_inside_gf_q2(self, f2):
        assert len(solve_generic(f2, 1)) == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_two_verified_solutions_for_every_member(self, fields, n):
        field = fields[n]
        for b in range(1 << field.degree):
            if not is_in_s2(field, b):
                continue
            solutions = solve_generic(field, b)
            assert len(solutions) == 2
            xs = sorted(solutions)
            assert xs[1] == xs[0] ^ 1  # the complementary pair
            for x in xs:
                assert verify_solution(field, x, b)

    @pytest.mark.parametrize("n", [1, 2])
    def test_nonmembers_truly_have_no_solutions(self, fields, n):
        field = fields[n]
        oracle = oracle_naive.solution_sets(field.modulus, field.degree, field.d)
        for b in range(1 << field.degree):
            if field.in_subfield(b, 2 * n) or is_in_s2(field, b):
                continue
            assert oracle.get(b, set()) == set()
            assert len(solve_generic(field, b)) == 0

    @pytest.mark.parametrize("n", [1, 2])
    def test_chain_invariants_for_every_member(self, fields, n):
        field = fields[n]
        q = field.q
        for b in range(1 << field.degree):
            if field.in_subfield(b, 2 * n):
                continue
            chain = generic_intermediates(field, b)
            # scalar definitions hold whether or not the chain completed
            assert chain.alpha == field.pow(chain.c, q * q + 1)
            assert chain.beta == chain.c ^ field.frobenius_q(chain.c, 2)
            assert chain.beta != 0
            assert field.pow(chain.delta, q + 1) == 1
            if chain.failure is not None:
                continue
            assert chain.alpha != 1
            assert field.frobenius_q(chain.gamma, 2) == 1 ^ chain.gamma
            uu = chain.U ^ field.square(chain.U)
            assert field.in_subfield(uu, n)
            assert field.frobenius_q(chain.T, 1) == field.mul(chain.delta, chain.T)
            assert len(chain.t_pair) == 2
            for branch in chain.branches:
                assert field.pow(branch.t, q * q + 1) == 1
                assert field.pow(branch.lam, q + 1) == 1
                assert field.in_subfield(branch.z, n) and branch.z != 0
                assert verify_solution(field, branch.x, b)

    def test_failure_tags_are_no_solution_evidence(self, f1):
        oracle = oracle_naive.solution_sets(f1.modulus, f1.degree, f1.d)
        for b in range(1 << f1.degree):
            if f1.in_subfield(b, 2):
                continue
            chain = generic_intermediates(f1, b)
            if chain.failure is None:
                assert len(oracle.get(b, set())) == 2
            else:
                assert oracle.get(b, set()) == set()


class TestSolveDispatch:
    def test_frozen_n1_map(self, f1):
        for b, expected in N1_SOLUTIONS.items():
            classification, solutions = solve(f1, b)
            assert sorted(solutions) == expected
            assert classification.predicted_count == len(expected)

    def test_pair_shape(self, f1):
        classification, solutions = solve(f1, 1)
        assert classification.case == CASE_B_EQUALS_ONE
        assert len(solutions) == 4

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_soundness_and_completeness_exhaustive(self, fields, n):
        field = fields[n]
        oracle = oracle_naive.solution_sets(field.modulus, field.degree, field.d)
        for b in range(1 << field.degree):
            classification, solutions = solve(field, b)
            expected = oracle.get(b, set())
            assert len(solutions) == len(expected) == classification.predicted_count
            assert set(solutions) == expected

    @pytest.mark.parametrize("n", [1, 2])
    def test_explicit_sets_closed_under_complement(self, fields, n):
        field = fields[n]
        for b in range(1 << field.degree):
            _, solutions = solve(field, b)
            if solutions.variant == "explicit":
                members = set(solutions)
                assert {x ^ 1 for x in members} == members


class TestSolutionSet:
    def test_duplicate_roots_rejected(self, f1):
        with pytest.raises(InternalDegenerate):
            SolutionSet.explicit(f1, [3, 3])

    def test_explicit_container_protocol(self, f1):
        solutions = SolutionSet.explicit(f1, [5, 4])
        assert len(solutions) == 2
        assert list(solutions) == [4, 5]
        assert 4 in solutions and 5 in solutions and 6 not in solutions
        assert "0x4" in repr(solutions)

    def test_subfield_container_protocol(self, f2):
        solutions = SolutionSet.subfield_q2(f2)
        assert len(solutions) == f2.q**2
        listed = list(solutions)
        assert listed == sorted(listed)
        assert all(x in solutions for x in listed)
        assert f2.primitive_element() not in solutions
        assert "four" not in solutions  # non-int is simply absent
        assert "GF" in repr(solutions)

    def test_empty_container_protocol(self, f1):
        solutions = SolutionSet.empty(f1)
        assert len(solutions) == 0
        assert list(solutions) == []
        assert 0 not in solutions
