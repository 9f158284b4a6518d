"""Exact solution sets for x^d + (x+1)^d = b over GF(2^(4n)).

Every b falls into one of four classification cases:

* ``B_EQUALS_ONE`` -- b = 1; the solution set is the entire subfield
  GF(q^2), of size q^2.
* ``MU_CASE`` -- b lies in the order-(q+1) roots-of-unity subgroup
  mu_{q+1} minus {1}; there are exactly q^2 - q solutions, each produced
  by a witness pair (z, w) in GF(q)* x GF(q)*.
* ``GENERIC_TWO`` -- b lies outside GF(q^2) and the explicit
  construction below completes; there are exactly 2 solutions, and they
  form a complementary pair {x, x+1}.
* ``NO_SOLUTION`` -- everything else; the equation has no roots.

The generic construction builds candidate solutions from a chain of
field scalars (c, alpha, beta, gamma, delta, U, T) and a pair of
unit-subgroup elements t.  For b outside GF(q^2) the chain can fail in a
small number of well-defined ways (a denominator vanishing, the trace
obstruction blocking t, or a completed candidate failing the original
equation); each failure is reported as evidence that b has no solutions
rather than as an error.  Membership in the two-solution family is
decided by running the chain and verifying its output, which keeps the
classifier exactly consistent with brute force by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Iterator, Optional, Tuple

from .errors import InternalDegenerate, PreconditionViolated
from .field import Element, Field
from .subgroups import solve_t_from_T

__all__ = [
    "CASE_B_EQUALS_ONE",
    "CASE_MU",
    "CASE_GENERIC_TWO",
    "CASE_NO_SOLUTION",
    "Classification",
    "SolutionSet",
    "MuCaseWitness",
    "GenericBranch",
    "GenericIntermediates",
    "classify",
    "generic_intermediates",
    "is_in_s2",
    "iter_mu_witnesses",
    "solve",
    "solve_b_equals_1",
    "solve_generic",
    "solve_mu_case",
    "verify_solution",
]

CASE_B_EQUALS_ONE = "B_EQUALS_ONE"
CASE_MU = "MU_CASE"
CASE_GENERIC_TWO = "GENERIC_TWO"
CASE_NO_SOLUTION = "NO_SOLUTION"

VARIANT_SUBFIELD_Q2 = "subfield_q2"
VARIANT_EXPLICIT = "explicit"
VARIANT_EMPTY = "empty"

# Failure tags reported by the generic chain.  Each names the first
# quantity that degenerated; all of them certify "no solutions for b".
FAIL_DELTA_ONE = "delta_is_one"
FAIL_ALPHA_ONE = "alpha_plus_one_vanishes"
FAIL_U_DEGENERATE = "u_plus_u_squared_vanishes"
FAIL_T_SUBFIELD = "t_trace_obstruction"
FAIL_LAMBDA = "lambda_ratio_degenerate"
FAIL_Z_DENOMINATOR = "z_denominator_vanishes"
FAIL_Z_ZERO = "z_vanishes"
FAIL_ANSATZ_POLE = "ansatz_pole"
FAIL_UNVERIFIED = "candidate_fails_equation"


def verify_solution(field: Field, x: Element, b: Element) -> bool:
    """Plug x into x^d + (x+1)^d and compare with b."""
    d = field.d
    return field.pow(x, d) ^ field.pow(x ^ 1, d) == b


@dataclass(frozen=True)
class Classification:
    """Case tag plus the solution count that the case guarantees."""

    case: str
    predicted_count: int


class SolutionSet:
    """Immutable container for the roots of x^d + (x+1)^d = b.

    Three shapes exist: the full subfield GF(q^2) (b = 1), an explicit
    sorted tuple of elements (mu case and generic case), and the empty
    set.  The subfield shape stores no elements; iteration walks the
    subfield lazily and membership tests use the Frobenius fixed-point
    check, so ``len`` stays O(1) even when q^2 is large.
    """

    __slots__ = ("field", "variant", "_elements")

    def __init__(
        self,
        field: Field,
        variant: str,
        elements: Optional[Tuple[Element, ...]],
    ) -> None:
        self.field = field
        self.variant = variant
        self._elements = elements

    # -- constructors ------------------------------------------------

    @classmethod
    def subfield_q2(cls, field: Field) -> "SolutionSet":
        """All of GF(q^2), the solution set for b = 1."""
        return cls(field, VARIANT_SUBFIELD_Q2, None)

    @classmethod
    def explicit(cls, field: Field, xs) -> "SolutionSet":
        """A finite list of verified roots, stored sorted."""
        xs = tuple(sorted(xs))
        if len(set(xs)) != len(xs):
            raise InternalDegenerate("duplicate roots in an explicit solution set")
        return cls(field, VARIANT_EXPLICIT, xs)

    @classmethod
    def empty(cls, field: Field) -> "SolutionSet":
        return cls(field, VARIANT_EMPTY, ())

    # -- container protocol -------------------------------------------

    def __len__(self) -> int:
        if self.variant == VARIANT_SUBFIELD_Q2:
            return self.field.q**2
        return len(self._elements)

    def __iter__(self) -> Iterator[Element]:
        if self.variant == VARIANT_SUBFIELD_Q2:
            return self.field.iter_subfield(2 * self.field.n)
        return iter(self._elements)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        if self.variant == VARIANT_SUBFIELD_Q2:
            return 0 <= x < (1 << self.field.degree) and self.field.in_subfield(
                x, 2 * self.field.n
            )
        return x in self._elements

    def __repr__(self) -> str:
        if self.variant == VARIANT_SUBFIELD_Q2:
            return f"SolutionSet(all of GF(2^{2 * self.field.n}), size {len(self)})"
        shown = ", ".join(self.field.encode_hex(x) for x in self._elements)
        return f"SolutionSet([{shown}])"


# ---------------------------------------------------------------------
# Case b = 1: the solution set is the entire subfield GF(q^2).
# ---------------------------------------------------------------------


def solve_b_equals_1(field: Field) -> SolutionSet:
    """Solution set for b = 1: every x in GF(q^2) and nothing else.

    On GF(q^2) the exponent d reduces to 2q modulo q^2 - 1, so
    x^d + (x+1)^d = (x + (x+1))^(2q) = 1 for all subfield x.
    """
    return SolutionSet.subfield_q2(field)


# ---------------------------------------------------------------------
# Mu case: b in mu_{q+1} \ {1}.
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class MuCaseWitness:
    """One witness (z, w) together with the root x it produced.

    z and w range over GF(q)*; T = z + 1/z + c*w with c = sqrt(b); t is
    the unit-subgroup root of u^2 + T*u + 1 chosen for this witness.
    """

    z: Element
    w: Element
    T: Element
    t: Element
    x: Element


def iter_mu_witnesses(field: Field, b: Element) -> Iterator[MuCaseWitness]:
    """Yield every witness for b in mu_{q+1} \\ {1}, two roots per good pair.

    Walks all (z, w) in GF(q)* x GF(q)*.  For each pair the quantity
    T = z + 1/z + c*w (c = sqrt(b)) lies outside GF(q), hence is nonzero;
    when the trace obstruction vanishes the two roots t of
    u^2 + T*u + 1 lie in the unit subgroup mu_{q^2+1} and each yields
    the solution x = 1/(1 + z*t).
    """
    n = field.n
    if b == 1 or field.pow(b, field.q + 1) != 1:
        raise PreconditionViolated(
            f"{field.encode_hex(b)} is not in the mu_(q+1) subgroup minus 1"
        )
    c = field.sqrt(b)
    for z in field.iter_subfield(n):
        if z == 0:
            continue
        z_inv = field.inv(z)
        for w in field.iter_subfield(n):
            if w == 0:
                continue
            T = z ^ z_inv ^ field.mul(c, w)
            if T == 0:
                raise InternalDegenerate(
                    "T = z + 1/z + c*w vanished; it must lie outside GF(q)"
                )
            for t in solve_t_from_T(field, T):
                zt = field.mul(z, t)
                if zt == 1:
                    raise InternalDegenerate(
                        "1 + z*t vanished for a unit-subgroup t"
                    )
                yield MuCaseWitness(z=z, w=w, T=T, t=t, x=field.inv(1 ^ zt))


def solve_mu_case(field: Field, b: Element) -> SolutionSet:
    """All q^2 - q roots for b in mu_{q+1} \\ {1}, deduplicated and sorted.

    Distinct witnesses can reproduce the same root; the defining count
    q^2 - q applies to the deduplicated set and is asserted here.
    """
    roots = [witness.x for witness in iter_mu_witnesses(field, b)]
    expected = field.q**2 - field.q
    if len(roots) != expected:
        raise InternalDegenerate(
            f"mu-case witness sweep produced {len(roots)} roots, "
            f"expected {expected}"
        )
    # distinct witnesses yield distinct roots; explicit() raises on duplicates
    return SolutionSet.explicit(field, roots)


# ---------------------------------------------------------------------
# Generic case: b outside GF(q^2).
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class GenericBranch:
    """One completed branch of the generic construction.

    t is one of the two unit-subgroup roots paired with T; the remaining
    fields are the scalars built from it, ending in the verified root x.
    """

    t: Element
    A: Element
    B: Element
    B1: Element
    lam: Element
    z: Element
    x: Element


@dataclass(frozen=True)
class GenericIntermediates:
    """Trace of the generic construction for one b outside GF(q^2).

    ``failure`` is None exactly when both branches completed and their
    roots verified, i.e. when b has two solutions.  On failure the
    scalars computed before the degeneracy are retained and ``branches``
    holds whatever branches did verify (at most one).
    """

    b: Element
    c: Element
    alpha: Element
    beta: Element
    delta: Optional[Element] = None
    gamma: Optional[Element] = None
    U: Optional[Element] = None
    T: Optional[Element] = None
    t_pair: Tuple[Element, ...] = ()
    branches: Tuple[GenericBranch, ...] = ()
    failure: Optional[str] = dataclass_field(default=None)

    @property
    def solutions(self) -> Tuple[Element, ...]:
        """The verified roots found by the chain, in branch order."""
        return tuple(branch.x for branch in self.branches)


def generic_intermediates(field: Field, b: Element) -> GenericIntermediates:
    """Run the explicit construction for b outside GF(q^2).

    Builds c = 1/sqrt(b) and the scalar chain

        alpha = c^(q^2+1),  beta = c + c^(q^2),  gamma = c/beta,
        delta = (beta/alpha)^(q-1),
        U = gamma + gamma^q + (alpha^(q+1) + 1)/(delta alpha^(q-1) beta^2),
        T = (1 + delta^q)/sqrt(U + U^2),

    then for each unit-subgroup root t of u^2 + T*u + 1 assembles

        B1 = gamma t + gamma^(q^2)/t,   B  = gamma/t + gamma^(q^2) t,
        A  = (alpha T + T^q)/(alpha + 1),
        lam = sqrt((B1^q + B)/(B1 + B^q)),
        z  = (lam^2 + 1)/(lam (A + B1) + B/lam),
        x  = 1/(1 + z lam t),

    and keeps the branch only if x satisfies the original equation.
    Any vanishing denominator or failed verification stops that path
    and is recorded in ``failure``; a fully successful run (two
    verified branches) has ``failure is None``.
    """
    n, q = field.n, field.q
    if field.in_subfield(b, 2 * n):
        raise PreconditionViolated(
            f"{field.encode_hex(b)} lies in GF(q^2); the generic construction "
            "requires b outside that subfield"
        )
    c = field.inv(field.sqrt(b))
    c_q2 = field.frobenius_q(c, 2)
    alpha = field.mul(c, c_q2)
    beta = c ^ c_q2  # nonzero precisely because b is outside GF(q^2)
    delta = field.pow(field.div(beta, alpha), q - 1)
    result = GenericIntermediates(b=b, c=c, alpha=alpha, beta=beta, delta=delta)
    if delta == 1:
        return _failed(result, FAIL_DELTA_ONE)
    if alpha == 1:
        return _failed(result, FAIL_ALPHA_ONE)

    gamma = field.div(c, beta)
    gamma_q = field.frobenius_q(gamma, 1)
    gamma_q2 = field.frobenius_q(gamma, 2)
    U = (
        gamma
        ^ gamma_q
        ^ field.div(
            field.pow(alpha, q + 1) ^ 1,
            field.mul(delta, field.mul(field.pow(alpha, q - 1), field.square(beta))),
        )
    )
    result = _extend(result, gamma=gamma, U=U)
    uu = U ^ field.square(U)
    if uu == 0:
        return _failed(result, FAIL_U_DEGENERATE)

    T = field.div(1 ^ field.frobenius_q(delta, 1), field.sqrt(uu))
    T_q = field.frobenius_q(T, 1)
    t_pair = tuple(solve_t_from_T(field, T))
    result = _extend(result, T=T, t_pair=t_pair)
    if not t_pair:
        return _failed(result, FAIL_T_SUBFIELD)

    A = field.div(field.mul(alpha, T) ^ T_q, alpha ^ 1)
    branches = []
    branch_failure = None
    for t in t_pair:
        t_inv = field.inv(t)
        B1 = field.mul(gamma, t) ^ field.mul(gamma_q2, t_inv)
        B = field.mul(gamma, t_inv) ^ field.mul(gamma_q2, t)
        lam_num = field.frobenius_q(B1, 1) ^ B
        lam_den = B1 ^ field.frobenius_q(B, 1)
        if lam_num == 0 or lam_den == 0:
            branch_failure = branch_failure or FAIL_LAMBDA
            continue
        lam = field.sqrt(field.div(lam_num, lam_den))
        z_den = field.mul(lam, A ^ B1) ^ field.div(B, lam)
        if z_den == 0:
            branch_failure = branch_failure or FAIL_Z_DENOMINATOR
            continue
        z = field.div(field.square(lam) ^ 1, z_den)
        if z == 0:
            branch_failure = branch_failure or FAIL_Z_ZERO
            continue
        zlt = field.mul(field.mul(z, lam), t)
        if zlt == 1:
            branch_failure = branch_failure or FAIL_ANSATZ_POLE
            continue
        x = field.inv(1 ^ zlt)
        if not verify_solution(field, x, b):
            branch_failure = branch_failure or FAIL_UNVERIFIED
            continue
        branches.append(GenericBranch(t=t, A=A, B=B, B1=B1, lam=lam, z=z, x=x))

    result = _extend(result, branches=tuple(branches))
    if len(branches) != 2:
        return _failed(result, branch_failure or FAIL_UNVERIFIED)
    return result


def _extend(result: GenericIntermediates, **updates) -> GenericIntermediates:
    """Copy a frozen intermediates record with some fields replaced."""
    state = {
        "b": result.b,
        "c": result.c,
        "alpha": result.alpha,
        "beta": result.beta,
        "delta": result.delta,
        "gamma": result.gamma,
        "U": result.U,
        "T": result.T,
        "t_pair": result.t_pair,
        "branches": result.branches,
        "failure": result.failure,
    }
    state.update(updates)
    return GenericIntermediates(**state)


def _failed(result: GenericIntermediates, tag: str) -> GenericIntermediates:
    return _extend(result, failure=tag)


def is_in_s2(field: Field, b: Element) -> bool:
    """Membership test for the two-solution family.

    False for every b in GF(q^2) (those b belong to the other cases);
    otherwise True exactly when the generic construction completes with
    two verified roots.  Running the construction is a constant number
    of field operations, and tying membership to its success keeps the
    classifier consistent with exhaustive search by construction.
    """
    if field.in_subfield(b, 2 * field.n):
        return False
    return generic_intermediates(field, b).failure is None


def solve_generic(field: Field, b: Element) -> SolutionSet:
    """The two roots for a generic b, or the empty set.

    The two completed branches always emit the complementary pair
    {x, x+1}, which is asserted via the duplicate check in
    ``SolutionSet.explicit`` plus the count check in ``solve``.
    """
    if field.in_subfield(b, 2 * field.n):
        return SolutionSet.empty(field)
    chain = generic_intermediates(field, b)
    if chain.failure is not None:
        return SolutionSet.empty(field)
    return SolutionSet.explicit(field, chain.solutions)


# ---------------------------------------------------------------------
# Classification and the top-level solver.
# ---------------------------------------------------------------------


def classify(field: Field, b: Element) -> Classification:
    """Assign b to its case and predict the exact solution count.

    Precedence: b = 1 first, then the mu_{q+1} subgroup, then the
    generic two-solution family, else no solutions.  The three families
    are pairwise disjoint (the first two live inside GF(q^2), the third
    outside), so the precedence is cosmetic.
    """
    q = field.q
    if not 0 <= b < (1 << field.degree):
        raise PreconditionViolated(
            f"b = {b:#x} is outside the field of degree {field.degree}"
        )
    if b == 1:
        return Classification(CASE_B_EQUALS_ONE, q**2)
    if b != 0 and field.pow(b, q + 1) == 1:
        return Classification(CASE_MU, q**2 - q)
    if is_in_s2(field, b):
        return Classification(CASE_GENERIC_TWO, 2)
    return Classification(CASE_NO_SOLUTION, 0)


def solve(field: Field, b: Element) -> Tuple[Classification, SolutionSet]:
    """Classification and complete solution set of x^d + (x+1)^d = b.

    Dispatches on ``classify`` and asserts that the constructed set has
    exactly the predicted cardinality.
    """
    classification = classify(field, b)
    case = classification.case
    if case == CASE_B_EQUALS_ONE:
        solutions = solve_b_equals_1(field)
    elif case == CASE_MU:
        solutions = solve_mu_case(field, b)
    elif case == CASE_GENERIC_TWO:
        solutions = solve_generic(field, b)
    else:
        solutions = SolutionSet.empty(field)
    if len(solutions) != classification.predicted_count:
        raise InternalDegenerate(
            f"case {case} predicted {classification.predicted_count} roots "
            f"but the construction produced {len(solutions)}"
        )
    return classification, solutions
