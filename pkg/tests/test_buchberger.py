import random
from fractions import Fraction

import pytest

from redring.buchberger import (
    CofactorRow,
    GBState,
    chain_criterion_skip,
    critical_pair,
    gb,
    is_groebner_basis,
    member_ideal,
    verify_cofactors,
)
from redring.core import (
    ContractViolationError,
    NonTerminationError,
    ideal_congruence_holds,
    normal_form,
    project_reduction_relation,
)
from redring.oracles import gcd_membership_oracle
from redring.poly import make_poly_domain
from redring.relations import is_church_rosser
from redring.scalars import (
    RationalFieldDomain,
    make_field_domain,
    make_integer_domain,
    make_integer_quotient_domain,
)

Q = make_field_domain()
Z = make_integer_domain()


class TwoIndexField(RationalFieldDomain):
    """The rational field with its multiplier set split into two equal halves."""

    name = "q2"
    multiplier_indices = (0, 1)


def test_critical_pair_field_example():
    a1, a2 = critical_pair(Q, Fraction(1), Fraction(2), 0, Fraction(3), 0)
    assert a1 == 0 and a2 == 0


def test_critical_pair_self_pair_is_symmetric():
    z = Z.mntcrs(6, 0, 6, 0)[0]
    a1, a2 = critical_pair(Z, z, 6, 0, 6, 0)
    assert a1 == a2


def test_critical_pair_replays_certificates():
    z = Z.mntcrs(4, 0, 6, 0)[0]
    a1, a2 = critical_pair(Z, z, 4, 0, 6, 0)
    m1 = Z.find_multiplier(z, 4, 0)
    m2 = Z.find_multiplier(z, 6, 0)
    assert a1 == z - m1 * 4
    assert a2 == z - m2 * 6
    assert Z.less(a1, z) and Z.less(a2, z)


def test_critical_pair_contract_violation():
    with pytest.raises(ContractViolationError):
        critical_pair(Z, 1, 4, 0, 6, 0)  # 1 is irreducible modulo both


def test_gb_empty_input():
    res = gb(Z, ())
    assert res.basis == ()
    assert res.rows == []
    assert res.trace.pairs_processed == 0


def test_gb_drops_zero_generators():
    res = gb(Z, (0, 4, 0, 6))
    assert res.basis[:2] == (4, 6)
    assert verify_cofactors(Z, res.rows, (0, 4, 0, 6))


def test_gb_field_singleton():
    res = gb(Q, (Fraction(7),))
    assert res.basis == (Fraction(7),)
    assert res.rows == []


def test_gb_integers_membership():
    res = gb(Z, (4, 6))
    assert res.basis[:2] == (4, 6)
    assert member_ideal(Z, 2, res.basis)
    assert not member_ideal(Z, 3, res.basis)
    rng = random.Random(3)
    for _ in range(50):
        x = rng.randint(-100, 100)
        assert member_ideal(Z, x, res.basis) == gcd_membership_oracle((4, 6), x)


def test_gb_input_is_prefix_and_rows_cover_additions():
    res = gb(Z, (9, 6))
    assert res.basis[: 2] == (9, 6)
    assert len(res.rows) == len(res.basis) - 2
    assert verify_cofactors(Z, res.rows, (9, 6))


def test_member_ideal_trivial_zero():
    assert member_ideal(Z, 0, gb(Z, (4, 6)).basis)


def test_member_ideal_check_flag():
    with pytest.raises(ValueError):
        member_ideal(Z, 2, (4, 6), check=True)
    assert member_ideal(Z, 2, gb(Z, (4, 6)).basis, check=True)


def test_is_groebner_basis_empty_and_singleton():
    assert is_groebner_basis(Q, ())
    assert is_groebner_basis(Q, (Fraction(1),))


def test_is_groebner_basis_rejects_zero():
    with pytest.raises(ValueError):
        is_groebner_basis(Z, (4, 0))


def test_is_groebner_basis_cross_checked_with_projection():
    ball = list(range(-12, 13))
    assert is_groebner_basis(Z, (4, 6)) is False
    rel = project_reduction_relation(Z, [4, 6], ball)
    assert is_church_rosser(rel) is False
    basis = gb(Z, (4, 6)).basis
    rel2 = project_reduction_relation(Z, basis, ball)
    assert is_church_rosser(rel2) is True
    assert is_groebner_basis(Z, basis) is True


def test_criterion_fixpoint_property():
    rng = random.Random(7)
    for _ in range(25):
        gens = tuple(rng.randint(-60, 60) for _ in range(rng.randint(1, 3)))
        res = gb(Z, gens)
        assert is_groebner_basis(Z, res.basis)
        assert verify_cofactors(Z, res.rows, gens)


def test_membership_agrees_with_ideal_congruence_on_finite_domain():
    rng = random.Random(11)
    m12 = make_integer_quotient_domain(12)
    for _ in range(15):
        gens = tuple(rng.randrange(12) for _ in range(rng.randint(1, 2)))
        basis = gb(m12, gens).basis
        for a in range(12):
            assert member_ideal(m12, a, basis) == ideal_congruence_holds(m12, a, 0, gens)


def test_multi_index_domain_enumerates_index_pairs():
    dom = TwoIndexField()
    res = gb(dom, (Fraction(2), Fraction(5)))
    assert res.basis == (Fraction(2), Fraction(5))
    assert is_groebner_basis(dom, res.basis)
    text = res.trace.to_text()
    assert "indices 0 1" in text and "indices 1 0" in text


def test_verify_cofactors_empty_and_perturbed():
    assert verify_cofactors(Z, [], (4, 6))
    res = gb(Z, (4, 6))
    assert verify_cofactors(Z, res.rows, (4, 6))
    row = res.rows[0]
    bad = CofactorRow(row.element, {k: v + 1 for k, v in row.cofactors.items()})
    assert not verify_cofactors(Z, [bad], (4, 6))


def test_chain_criterion_size_two_basis_never_skips():
    R = make_poly_domain(Q, ("x", "y"), "lex")
    basis = [R.parse("x^2"), R.parse("y^2")]
    state = GBState(basis=basis, pair_queue=None, done={(0, 0), (1, 1)})
    z = R.mntcrs(basis[0], 0, basis[1], 0)[0]
    assert not chain_criterion_skip(R, state, 0, 1, z)


def test_chain_criterion_skip_requires_both_side_pairs():
    R = make_poly_domain(Q, ("x", "y"), "lex")
    basis = [R.parse("x^2"), R.parse("y^2"), R.parse("x*y")]
    z = R.mntcrs(basis[0], 0, basis[1], 0)[0]  # x^2*y^2, divisible by x*y
    both = GBState(basis=basis, pair_queue=None, done={(0, 2), (1, 2)})
    assert chain_criterion_skip(R, both, 0, 1, z)
    one = GBState(basis=basis, pair_queue=None, done={(0, 2)})
    assert not chain_criterion_skip(R, one, 0, 1, z)


def test_chain_criterion_absent_without_domain_hook():
    state = GBState(basis=[4, 6, 2], pair_queue=None, done={(0, 2), (1, 2)})
    assert not chain_criterion_skip(Z, state, 0, 1, 12)


def test_chain_criterion_never_fires_over_ring_coefficients():
    # skipping based on single-element reducibility is unsound when the
    # coefficient domain is not a field; this system used to lose 6*x*y
    ring = make_poly_domain(make_integer_domain(), ("x", "y"), "deglex")
    gens = (ring.parse("-3*x*y^2"), ring.parse("-2*x^2*y - 2*x"))
    res = gb(ring, gens, chain_criterion=True)
    assert res.trace.chain_skips == 0
    assert is_groebner_basis(ring, res.basis)
    assert member_ideal(ring, ring.parse("6*x*y"), res.basis)


def test_completion_covers_annihilator_pairs():
    m24 = make_integer_quotient_domain(24)
    ring = make_poly_domain(m24, ("x", "y"), "lex")
    g = ring.parse("4*x + y")
    res = gb(ring, (g,))
    assert is_groebner_basis(ring, res.basis)
    # 6y = 6*(4x + y) lies in the ideal and must reduce to zero
    assert member_ideal(ring, ring.parse("6*y"), res.basis)
    assert verify_cofactors(ring, res.rows, (g,))
    assert any("indices 0 ann" in line for line in res.trace.lines)


def test_chain_criterion_conservative_on_polynomials():
    rng = random.Random(13)
    R = make_poly_domain(Q, ("x", "y"), "degrevlex")
    for _ in range(10):
        gens = []
        for _ in range(2):
            items = [
                (Fraction(rng.randint(1, 4)), (rng.randint(0, 2), rng.randint(0, 2)))
                for _ in range(rng.randint(1, 3))
            ]
            p = R.poly(items)
            if not p.is_zero:
                gens.append(p)
        if not gens:
            continue
        with_crit = gb(R, gens, chain_criterion=True)
        without = gb(R, gens, chain_criterion=False)
        assert with_crit.trace.critical_pairs_reduced <= without.trace.critical_pairs_reduced
        for g in with_crit.basis:
            assert normal_form(R, g, without.basis)[0].is_zero
        for g in without.basis:
            assert normal_form(R, g, with_crit.basis)[0].is_zero


def test_trace_replay_determinism():
    R = make_poly_domain(make_integer_quotient_domain(24), ("x", "y"), "degrevlex")
    gens = (R.parse("4*x^2 + y"), R.parse("6*x*y"))
    first = gb(R, gens)
    second = gb(R, gens)
    assert first.trace.to_text() == second.trace.to_text()
    assert first.trace.digest() == second.trace.digest()
    assert first.basis == second.basis


def test_trace_records_additions_and_finals():
    res = gb(Z, (4, 6))
    text = res.trace.to_text()
    assert "init 0 4" in text
    assert "pair 0 1" in text
    assert any(line.startswith("add 2 ") for line in text.splitlines())
    assert text.splitlines()[-1].startswith("final ")


def test_pair_cap_raises():
    with pytest.raises(NonTerminationError):
        gb(Z, (4, 6, 9, 15), max_pairs=2)


def test_state_invariants_hold_at_exit():
    res = gb(Z, (0, 4, 6))
    assert all(not Z.is_zero(g) for g in res.basis)
    # queue discipline: processing covered every pair up to the final size
    n = len(res.basis)
    text = res.trace.to_text()
    for j in range(n):
        for i in range(j + 1):
            assert f"pair {i} {j}" in text
