from __future__ import annotations

import random
from fractions import Fraction as Q

import pytest

from rootneg import linalg
from rootneg.negativity import (
    NegativityQuery,
    certify_exponent,
    check_class_negativity,
    check_negativity,
    fundamental_lattice_index,
    integral_class_constant,
    rank_one_bound,
    span_basis_of_integral_roots,
    verify_fundamental_lemma,
    weight_lattice_basis,
)
from rootneg.params import SubspaceBasis, full_space, integral_roots
from rootneg.rootsys import Parameter, build_root_system, rho


def test_query_validation():
    lam = Parameter.of([Q(0)])
    with pytest.raises(ValueError):
        NegativityQuery(lam, "loose")
    with pytest.raises(ValueError):
        NegativityQuery(lam, "strict", SubspaceBasis(1, ()))
    with pytest.raises(ValueError):
        NegativityQuery(lam, "weak", denominator=0)


def test_strict_rank_one_contract_cases():
    rs = build_root_system("A1")
    v = check_negativity(rs, NegativityQuery(Parameter.of([-1]), "strict"))
    assert v.feasible
    assert v.span_basis == ((1,),)
    assert v.witness_omega == (Q(1, 2),)
    # a non-integral parameter has no integral roots, so nothing can be
    # subtracted and the positive real part stands in the way
    v = check_negativity(rs, NegativityQuery(Parameter.of([Q(1, 2)]), "strict"))
    assert not v.feasible
    assert v.witness_omega is None and v.span_basis == ()


def test_weak_at_zero_is_tight_everywhere():
    rs = build_root_system("A2")
    v = check_negativity(rs, NegativityQuery(Parameter.of([0, 0]), "weak", full_space(rs)))
    assert v.feasible
    assert v.witness_omega == (Q(0), Q(0))
    assert v.tight_generators == (0, 1)


def test_strict_member_verdict_ignores_overall_sign():
    # strict feasibility is about the parameter modulo the cone of positive
    # integral roots, so +rho passes with a large witness
    rs = build_root_system("A2")
    v = check_negativity(rs, NegativityQuery(Parameter.of([1, 1]), "strict"))
    assert v.feasible and v.witness_omega == (Q(2), Q(2))
    v = check_negativity(rs, NegativityQuery(Parameter.of([-1, 0]), "strict"))
    assert v.feasible and v.witness_omega == (Q(2, 3), Q(1, 3))


def test_imaginary_part_blocks_integral_mode():
    rs = build_root_system("A2")
    lam = Parameter((Q(-1), Q(-1)), (Q(1, 2), Q(0)))
    assert not check_negativity(
        rs, NegativityQuery(lam, "integral", full_space(rs))
    ).feasible
    assert check_negativity(
        rs, NegativityQuery(lam, "weak", full_space(rs))
    ).feasible


def test_weak_on_proper_subspace():
    rs = build_root_system("A2")
    sub = SubspaceBasis(2, ((Q(1), Q(1)),))
    v = check_negativity(rs, NegativityQuery(Parameter.of([-1, -1]), "weak", sub))
    assert v.feasible and v.tight_generators == ()


def test_class_negativity_strict_needs_every_member():
    rs = build_root_system("A2")
    rep = check_class_negativity(rs, Parameter.of([Q(1, 2), Q(1, 2)]), "strict")
    assert not rep.ok
    by_re = {m.mu.re: m.verdict.feasible for m in rep.members}
    assert by_re == {
        (Q(1, 2), Q(1, 2)): True,
        (Q(-1, 2), Q(1)): False,
        (Q(1), Q(-1, 2)): False,
    }
    rep = check_class_negativity(rs, Parameter.of([-1, -1]), "strict")
    assert rep.ok and len(rep.members) == 1


def test_class_negativity_subspace_mapping_must_cover():
    rs = build_root_system("A2")
    lam = Parameter.of([Q(1, 2), Q(1, 2)])
    with pytest.raises(ValueError):
        check_class_negativity(rs, lam, "weak", {lam: full_space(rs)})
    with pytest.raises(ValueError):
        check_class_negativity(rs, lam, "strict", full_space(rs))


def test_span_basis_and_weight_lattice():
    rs = build_root_system("A2")
    sigma = integral_roots(rs, Parameter.of([Q(1, 2), Q(1, 2)]), 1)
    assert span_basis_of_integral_roots(rs, sigma) == ((1, 1),)
    s_basis, weights = weight_lattice_basis(rs, sigma)
    assert s_basis == ((1, 1),) and weights == ((Q(1, 2),),)
    # every weight vector pairs integrally with every positive integral coroot
    for name in ("A2", "B2", "G2", "BC1"):
        sys_ = build_root_system(name)
        lam = rho(sys_).scale(Q(-1))
        sig = integral_roots(sys_, lam, 2)
        s_b, w_b = weight_lattice_basis(sys_, sig)
        for w in w_b:
            for beta in sig:
                if sum(beta) <= 0:
                    continue
                coweight = sys_.coroot_coweight_coords(beta)
                value = sum(
                    c * sum(Q(s_i) * cw for s_i, cw in zip(s, coweight))
                    for c, s in zip(w, s_b)
                )
                assert value.denominator == 1


def test_fundamental_lemma_rank_one():
    rs = build_root_system("A1")
    rep = verify_fundamental_lemma(rs, Parameter.of([-1]), "strict")
    assert not rep.vacuous
    assert rep.n_lattice == 2 and rep.integrality_ok
    assert rep.edge_trivial and rep.edge_basis.dim == 0
    assert rep.parabolic.label == "A1"
    assert rep.containing_member is not None
    assert rep.re_lambda_on_edge_zero
    assert rep.im_lambda_on_edge_zero is None


def test_fundamental_lemma_a2():
    rs = build_root_system("A2")
    rep = verify_fundamental_lemma(rs, Parameter.of([-1, -1]), "strict")
    assert not rep.vacuous
    assert rep.n_lattice == 3 and rep.integrality_ok and rep.edge_trivial
    assert rep.parabolic.label == "A2"


def test_fundamental_lemma_partial_integrality():
    rs = build_root_system("A2")
    rep = verify_fundamental_lemma(rs, Parameter.of([Q(1, 2), Q(1, 2)]), "weak")
    assert not rep.vacuous
    assert rep.edge_basis.dim == 1
    assert rep.edge_basis.vectors == ((Q(-1), Q(1)),)
    assert rep.parabolic.label == "A1"
    assert rep.n_lattice == 2 and rep.integrality_ok
    assert rep.edge_trivial is None and rep.im_lambda_on_edge_zero is None
    assert rep.re_lambda_on_edge_zero  # (1/2,1/2) pairs to zero with (-1,1)


def test_fundamental_lemma_denominator_two_non_reduced():
    rs = build_root_system("BC1")
    rep = verify_fundamental_lemma(rs, Parameter.of([Q(-1, 2)]), "strict", denominator=2)
    assert not rep.vacuous and rep.edge_trivial
    assert rep.parabolic.label == "BC1" and rep.n_lattice == 2
    # the doubled coroot pairs to -1/4, outside (1/2)Z, so the flag is honest
    assert not rep.integrality_ok


def test_lattice_index_table():
    expected = {
        "A1": 2, "A2": 3, "A3": 4, "A4": 5,
        "B2": 2, "B3": 2, "C3": 2, "D4": 4, "G2": 1,
    }
    for name, n in expected.items():
        rs = build_root_system(name)
        assert fundamental_lattice_index(rs, rho(rs).scale(Q(-1))) == n


def test_integral_class_constant():
    a2 = build_root_system("A2")
    assert integral_class_constant(a2, Parameter.of([-1, -1])) == 1
    b2 = build_root_system("B2")
    assert integral_class_constant(b2, Parameter.of([Q(1, 2), Q(1)])) == 2
    with pytest.raises(ValueError):
        integral_class_constant(b2, Parameter.of([Q(1, 2), Q(1, 2)]))


def test_certify_exponent_basic():
    cert = certify_exponent(1, ((1,),), 0, (1,), (0,), (0,))
    assert cert.solvable and cert.coefficients == (Q(1),)
    assert cert.lattice_ok and cert.ds1_ok and cert.ds2_ok
    cert = certify_exponent(1, ((1,),), 0, (Q(1, 2),), (0,), (0,), denominator=2)
    assert cert.lattice_ok
    cert = certify_exponent(1, ((1,),), 0, (Q(1, 2),), (0,), (0,), denominator=1)
    assert cert.solvable and not cert.lattice_ok and cert.ds1_ok


def test_certify_exponent_edge_and_solvability():
    # one spherical functional in a two-dimensional space: the difference
    # must lie on its line for solvability
    cert = certify_exponent(2, ((1, 0),), 1, (1, 1), (0, 0), (0, 0))
    assert not cert.solvable and cert.coefficients is None
    assert not cert.ds1_ok and not cert.lattice_ok and not cert.ds2_ok
    cert = certify_exponent(2, ((1, 0),), 1, (1, 0), (0, 0), (0, 0))
    assert cert.solvable and cert.coefficients == (Q(1),)
    assert cert.ds1_ok and cert.ds2_ok
    # nu is carried through unchanged
    assert certify_exponent(2, ((1, 0),), 1, (1, 0), (0, 0), (0, Q(1, 3))).nu == (
        Q(0),
        Q(1, 3),
    )


def test_certify_exponent_empty_spherical_set():
    cert = certify_exponent(1, (), 1, (0,), (0,), (0,))
    assert cert.solvable and cert.coefficients == ()
    assert cert.lattice_ok and cert.ds1_ok and cert.ds2_ok
    cert = certify_exponent(1, (), 1, (1,), (0,), (0,))
    assert not cert.solvable and not cert.ds2_ok


def test_certify_exponent_validation():
    with pytest.raises(ValueError):
        certify_exponent(0, (), 0, (), (), ())
    with pytest.raises(ValueError):
        certify_exponent(2, ((1, 0), (2, 0)), 0, (0, 0), (0, 0), (0, 0))
    with pytest.raises(ValueError):
        certify_exponent(2, ((1, 0),), 0, (0, 0), (0, 0), (0, 0))  # edge_dims wrong
    with pytest.raises(ValueError):
        certify_exponent(2, ((1,),), 1, (0, 0), (0, 0), (0, 0))
    with pytest.raises(ValueError):
        certify_exponent(1, (), 1, (0, 0), (0,), (0,))
    with pytest.raises(ValueError):
        certify_exponent(1, (), 1, (0,), (0,), (0,), denominator=0)


def test_rank_one_bound_values():
    assert rank_one_bound() == 18
    assert rank_one_bound(None) == 18
    assert rank_one_bound("  ") == 18
    assert rank_one_bound("A1") == 72
    assert rank_one_bound("A2") == 162
    assert rank_one_bound("B2") == 72
    assert rank_one_bound("G2") == 18
    assert rank_one_bound("A1xA1") == 288


def test_witness_actually_certifies():
    # replay every returned witness against the defining inequalities
    rng = random.Random(5)
    for name in ("A2", "B2", "BC1"):
        rs = build_root_system(name)
        for _ in range(30):
            lam = Parameter(
                tuple(Q(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(rs.rank)),
                tuple(Q(0) for _ in range(rs.rank)),
            )
            v = check_negativity(rs, NegativityQuery(lam, "strict"))
            if not v.feasible:
                continue
            # solve cartan . c = re(lam) for the root coordinates of lam,
            # then check (lam - omega)(fundamental coweight i) = c_i - omega_i < 0
            cols = [[Q(rs.cartan[i][j]) for j in range(rs.rank)] for i in range(rs.rank)]
            re_root = linalg.solve(cols, [Q(x) for x in lam.re])
            assert re_root is not None
            for i in range(rs.rank):
                omega_i = sum(
                    c * Q(beta[i]) for c, beta in zip(v.witness_omega, v.span_basis)
                )
                assert re_root[i] - omega_i < 0
