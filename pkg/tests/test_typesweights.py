"""Tests for tame types, admissible sets, and modular weight sets.

Derived values are checked against oracles implemented here from first
principles (direct enumeration / the tensor expansion) before freezing.
"""

from itertools import product

import pytest

from tamelift.typesweights import (
    AdmElt,
    HTWeight,
    MalformedDecomposition,
    NotGeneric,
    NotInX,
    RhoBarData,
    TameTypeSpec,
    adm_set,
    adm_slot,
    ht_weights_below,
    j_sigma,
    jh_sigma_lambda_tau,
    jh_sigma_tau,
    kisin_matrix,
    membership_b_sets,
    s_count,
    s_total,
    sgn,
    shape_of,
    tau_of_wtilde,
    w_of_rhobar,
    w_rho_lambda_tau,
    x_rho_lambda,
    x_wtilde_lambda,
)
from tamelift.weights import SerreWeight, Params, t_mu


def rb(p=13, r=(5,), irreducible=False, gamma=None):
    f = len(r)
    if gamma is None:
        gamma = (False,) * f
    return RhoBarData(p=p, f=f, irreducible=irreducible, r=r, gamma_nonzero=gamma)


# ---------------------------------------------------------------------------
# construction and serialization


def test_rhobar_validation():
    with pytest.raises(ValueError):
        rb(irreducible=True, gamma=(True,))
    with pytest.raises(ValueError):
        RhoBarData(p=13, f=2, irreducible=False, r=(5,), gamma_nonzero=(False, False))


def test_rhobar_json_round_trip():
    rho = RhoBarData(
        p=101, f=2, irreducible=True, r=(20, 33), gamma_nonzero=(False, False)
    )
    assert RhoBarData.from_json(rho.to_json()) == rho


def test_rhobar_depth():
    assert rb(p=13, r=(5,)).depth() == 5
    assert rb(p=13, r=(10,)).depth() == 1


def test_adm_parse_label_round_trip():
    w = AdmElt(((False, (2, 1)), (True, (1, 0))))
    assert AdmElt.parse(w.label()) == w
    with pytest.raises(MalformedDecomposition):
        AdmElt.parse("q(1,0)")


# ---------------------------------------------------------------------------
# admissible sets


def test_adm_slot_size():
    for m, n in [(1, 0), (2, 0), (3, 0), (2, 1), (3, 1), (2, 2)]:
        assert len(adm_slot((m, n))) == 2 * (m - n + 1) - 1


def test_adm_set_f1_explicit():
    # oracle: lam' ranges over (1,0) and (0,1); w*t(0,1) is excluded
    got = adm_set(HTWeight(((1, 0),)))
    expect = {
        AdmElt(((False, (1, 0)),)),
        AdmElt(((False, (0, 1)),)),
        AdmElt(((True, (1, 0)),)),
    }
    assert got == frozenset(expect)
    assert AdmElt(((True, (0, 1)),)) not in got


def test_adm_set_multiplicative():
    lam = HTWeight(((2, 0), (1, 0)))
    assert len(adm_set(lam)) == 5 * 3


def test_ht_weights_below():
    lam = HTWeight(((3, 0),))
    assert [w.pairs[0] for w in ht_weights_below(lam)] == [(2, 1), (3, 0)]
    assert len(ht_weights_below(HTWeight(((3, 0), (2, 0))))) == 2 * 1


# ---------------------------------------------------------------------------
# tau_of_wtilde


def test_a_footer_congruences():
    p = 13
    for r in (4, 5, 7):
        rho = rb(p=p, r=(r,))
        for m, n in [(1, 0), (2, 1), (2, 0)]:
            t_case = tau_of_wtilde(rho, AdmElt(((False, (m, n)),)))
            assert t_case.a_residues[0] == (-(r + 1) + m - n) % p
            wt_case = tau_of_wtilde(rho, AdmElt(((True, (m, n)),)))
            assert wt_case.a_residues[0] == ((r + 1) + m - n) % p


def test_a_footer_irreducible_sign():
    rho = rb(p=13, r=(5,), irreducible=True)
    t_case = tau_of_wtilde(rho, AdmElt(((False, (2, 1)),)))
    # sgn(s_0) = -1 flips the footer sign
    assert t_case.a_residues[0] == ((5 + 1) + 1) % 13


def test_a_footer_trivial_case():
    rho = rb(p=13, r=(5,))
    tau = tau_of_wtilde(rho, AdmElt(((False, (0, 0)),)))
    assert tau.a_residues[0] == (-(5 + 1)) % 13


def test_tau_lowest_alcove_frozen():
    rho = rb(p=13, r=(5,))
    tau = tau_of_wtilde(rho, AdmElt(((False, (1, 0)),)))
    assert tau.s == (False,) and tau.mu == ((4, 0),)
    tau2 = tau_of_wtilde(rho, AdmElt(((True, (1, 0)),)))
    assert tau2.s == (True,) and tau2.mu == ((4, 0),)


def test_a_invertibility_for_deep_rho():
    rho = rb(p=101, r=(40,))
    tau = tau_of_wtilde(rho, AdmElt(((False, (2, 1)),)))
    assert tau.a_invertible_up_to(3)


# ---------------------------------------------------------------------------
# JH sets


def test_jh_sigma_tau_classical_f1():
    # principal series with character distance mu_diff + 1 = 5 at p = 13:
    # the two factors have diffs 5 and p - 1 - 5 = 7
    tau = TameTypeSpec(p=13, f=1, s=(False,), mu=((4, 0),))
    jh = jh_sigma_tau(tau)
    assert len(jh) == 2
    assert sorted(w.diffs[0] for w in jh.values()) == [5, 7]


def test_jh_sigma_tau_count_and_genericity():
    tau = TameTypeSpec(p=13, f=2, s=(False, True), mu=((4, 0), (6, 1)))
    jh = jh_sigma_tau(tau)
    assert len(jh) == 4 and len(set(jh.values())) == 4
    depth = tau.depth()
    for w in jh.values():
        for d in w.diffs:
            assert depth - 1 < d + 1 < tau.p - (depth - 1)


def test_jh_sigma_tau_shallow_raises():
    with pytest.raises(NotGeneric):
        jh_sigma_tau(TameTypeSpec(p=13, f=1, s=(False,), mu=((0, 0),)))


def interval_jh_oracle(lam, tau):
    """Independent hypercuboid description of JH(sigmabar(lam, tau)).

    Base origin mu + s(lam_j) per embedding; graph coordinates s(v) with
    v_j in [-(l1-l2), l1-l2-1].
    """
    params = Params(tau.p, tau.f)
    base = []
    for j, (a, b) in enumerate(tau.mu):
        l1, l2 = lam.pairs[j]
        base.append((a + l2, b + l1) if tau.s[j] else (a + l1, b + l2))
    spreads = [range(-(l1 - l2), l1 - l2) for l1, l2 in lam.pairs]
    out = set()
    for v in product(*spreads):
        omega = tuple(sgn(tau.s[j]) * v[j] for j in range(tau.f))
        out.add(t_mu(params, tuple(base), omega))
    return out


def test_jh_sigma_lambda_tau_at_eta():
    tau = TameTypeSpec(p=13, f=2, s=(False, True), mu=((4, 0), (6, 1)))
    assert jh_sigma_lambda_tau(HTWeight.eta(2), tau) == frozenset(
        jh_sigma_tau(tau).values()
    )


def test_jh_sigma_lambda_tau_f1_size():
    tau = TameTypeSpec(p=13, f=1, s=(False,), mu=((4, 0),))
    got = jh_sigma_lambda_tau(HTWeight(((2, 0),)), tau)
    assert len(got) == 4


@pytest.mark.parametrize(
    "lam_pairs,s,mu",
    [
        (((2, 0),), (False,), ((4, 0),)),
        (((2, 0),), (True,), ((4, 0),)),
        (((3, 1),), (False,), ((6, 1),)),
        (((3, 0),), (True,), ((6, 0),)),
        (((2, 0), (1, 0)), (False, True), ((4, 0), (6, 1))),
        (((2, 1), (3, 1)), (True, False), ((5, 0), (7, 2))),
    ],
)
def test_jh_sigma_lambda_tau_matches_interval_oracle(lam_pairs, s, mu):
    p = 19
    tau = TameTypeSpec(p=p, f=len(s), s=s, mu=mu)
    lam = HTWeight(lam_pairs)
    got = jh_sigma_lambda_tau(lam, tau)
    assert got == frozenset(interval_jh_oracle(lam, tau))
    assert len(got) == 1
    for l1, l2 in lam_pairs:
        pass
    expected = 1
    for l1, l2 in lam_pairs:
        expected *= 2 * (l1 - l2)
    assert len(got) == expected


def test_jh_sigma_lambda_tau_shallow_raises():
    tau = TameTypeSpec(p=13, f=1, s=(False,), mu=((1, 0),))
    with pytest.raises(NotGeneric):
        jh_sigma_lambda_tau(HTWeight(((3, 0),)), tau)


# ---------------------------------------------------------------------------
# W(rhobar)


def test_w_of_rhobar_classical_reducible():
    rho = rb(p=13, r=(5,))
    params = rho.params
    got = set(w_of_rhobar(rho).values())
    # classical pair: F(r, 0) and F(p-3-r, r+1)
    assert got == {
        SerreWeight.make(params, ((5, 0),)),
        SerreWeight.make(params, ((13 - 3 - 5 + 5 + 1, 5 + 1),)),
    }


def test_w_of_rhobar_classical_irreducible():
    rho = rb(p=13, r=(5,), irreducible=True)
    got = sorted(w.diffs[0] for w in w_of_rhobar(rho).values())
    # classical pair for niveau two: diffs r and p-1-r
    assert got == [5, 7]


def test_w_of_rhobar_gamma_pinned():
    rho = rb(p=13, r=(5,), gamma=(True,))
    got = w_of_rhobar(rho)
    assert set(got) == {(0,)}
    assert got[(0,)] == t_mu(rho.params, ((5, 0),), (0,))


def test_w_of_rhobar_counts():
    rho = rb(p=101, r=(20, 33))
    assert len(w_of_rhobar(rho)) == 4
    rho2 = rb(p=101, r=(20, 33), gamma=(True, False))
    assert len(w_of_rhobar(rho2)) == 2
    assert len(set(w_of_rhobar(rho).values())) == 4


def test_j_sigma_round_trip():
    rho = rb(p=101, r=(20, 33))
    seen = set()
    for b in w_of_rhobar(rho):
        seen.add(j_sigma(b))
    assert seen == {frozenset(), {0}, {1}, {0, 1}}


# ---------------------------------------------------------------------------
# X(rhobar, lambda) and the intersection


def test_x_rho_lambda_no_gamma_is_adm():
    lam = HTWeight(((2, 0),))
    rho = rb(p=23, r=(9,))
    assert x_rho_lambda(rho, lam) == adm_set(lam)


def test_x_rho_lambda_exclusion():
    lam = HTWeight(((2, 0),))
    rho = rb(p=23, r=(9,), gamma=(True,))
    removed = adm_set(lam) - x_rho_lambda(rho, lam)
    assert removed == {AdmElt(((False, (0, 2)),))}


def brute_membership(rho, lam, w):
    """Oracle: weights of W(rhobar) lying in JH via the actual JH set."""
    jh = jh_sigma_lambda_tau(lam, tau_of_wtilde(rho, w))
    return {b: wt for b, wt in w_of_rhobar(rho).items() if wt in jh}


@pytest.mark.parametrize(
    "rho",
    [
        rb(p=101, r=(40,)),
        rb(p=101, r=(40,), irreducible=True),
        rb(p=101, r=(40,), gamma=(True,)),
    ],
)
@pytest.mark.parametrize("lam_pairs", [((1, 0),), ((2, 0),), ((3, 1),)])
def test_intersection_formula_matches_jh_f1(rho, lam_pairs):
    lam = HTWeight(lam_pairs)
    for w in adm_set(lam):
        assert w_rho_lambda_tau(rho, lam, w) == brute_membership(rho, lam, w)


def test_intersection_formula_matches_jh_f2():
    rho = RhoBarData(
        p=101,
        f=2,
        irreducible=False,
        r=(40, 29),
        gamma_nonzero=(False, True),
    )
    lam = HTWeight(((2, 0), (2, 1)))
    for w in adm_set(lam):
        assert w_rho_lambda_tau(rho, lam, w) == brute_membership(rho, lam, w)


def test_x_rho_lambda_definitional_characterization():
    lam = HTWeight(((2, 0),))
    for gamma in ((False,), (True,)):
        rho = rb(p=101, r=(40,), gamma=gamma)
        via_jh = {
            w
            for w in adm_set(lam)
            if brute_membership(rho, lam, w)
        }
        assert via_jh == x_rho_lambda(rho, lam)


def test_eta_intersection_counts_by_flips():
    # at lam = eta the intersection has 2^(number of flipped, gamma-free slots)
    rho = RhoBarData(
        p=101, f=2, irreducible=False, r=(40, 29), gamma_nonzero=(False, False)
    )
    lam = HTWeight.eta(2)
    for w in adm_set(lam):
        flips = sum(1 for flip, _ in w.slots if flip)
        assert len(w_rho_lambda_tau(rho, lam, w)) == 2**flips


# ---------------------------------------------------------------------------
# component counts


def test_s_count_frozen():
    assert s_count((False, (2, 1)), False) == 2
    assert s_count((False, (1, 2)), True) == 1
    assert s_count((False, (1, 2)), False) == 2
    assert s_count((False, (2, 2)), False) == 2
    assert s_count((False, (2, 2)), True) == 2
    assert s_count((True, (2, 1)), False) == 2
    assert s_count((True, (3, 0)), False) == 1
    assert s_count((True, (1, 1)), False) == 1
    assert s_count((False, (1, 0)), False) == 1


def brute_x_wtilde_lambda(rho, w, lam):
    """Oracle: independent per-slot enumeration of X(wtilde, lam)."""

    def slot_admissible(slot, lp, gamma_flag):
        flip, (mm, nn) = slot
        a, b = lp
        if mm + nn != a + b or not (b <= mm <= a):
            return False
        if flip and (mm, nn) == (b, a):
            return False
        if gamma_flag and not flip and (mm, nn) == (b, a):
            return False
        return True

    f = rho.f
    count = 1
    for j in range(f):
        k = f - 1 - j
        a, b = lam.pairs[j]
        s = a + b
        good = 0
        for x in range(s // 2 + 1, a + 1):
            if slot_admissible(w.slots[k], (x, s - x), rho.gamma_nonzero[k]):
                good += 1
        count *= good
    return count


@pytest.mark.parametrize("gamma", [(False,), (True,)])
@pytest.mark.parametrize("lam_pairs", [((3, 0),), ((2, 1),), ((2, 0),)])
def test_s_total_matches_brute_force_f1(gamma, lam_pairs):
    rho = rb(p=101, r=(40,), gamma=gamma)
    lam = HTWeight(lam_pairs)
    for w in adm_set(lam):
        expect = brute_x_wtilde_lambda(rho, w, lam)
        assert s_total(w, lam, rho) == expect
        assert len(x_wtilde_lambda(rho, w, lam)) == expect


def test_s_total_matches_brute_force_f2_sample():
    rho = RhoBarData(
        p=101, f=2, irreducible=False, r=(40, 29), gamma_nonzero=(False, True)
    )
    lam = HTWeight(((3, 0), (2, 0)))
    for w in adm_set(lam):
        assert s_total(w, lam, rho) == brute_x_wtilde_lambda(rho, w, lam)


# ---------------------------------------------------------------------------
# shapes and Kisin matrices


def test_shape_of_rows():
    assert shape_of("t", 2, 1, False) == (False, (2, 1))
    assert shape_of("t", 2, 1, True) == (False, (2, 1))
    assert shape_of("t", 1, 2, False) == (False, (1, 2))
    assert shape_of("t", 1, 2, True) == (True, (1, 2))
    assert shape_of("wt", 2, 1, False) == (True, (2, 1))
    assert shape_of("wt", 2, 1, True) == (False, (2, 1))
    assert shape_of("wt", 1, 2, True) == (True, (1, 2))
    assert shape_of("wt", 1, 1, True) == (True, (1, 1))
    with pytest.raises(ValueError):
        shape_of("x", 1, 0, False)


def test_kisin_matrix_diagonal_when_gamma_zero():
    rho = rb(p=13, r=(5,))
    (mat,) = kisin_matrix(rho, AdmElt(((False, (2, 1)),)))
    assert mat[0][1].is_zero() and mat[1][0].is_zero()
    assert mat[0][0].degree("v") == 2 and mat[1][1].degree("v") == 1


def test_kisin_matrix_wt_pattern():
    rho = rb(p=13, r=(5,), gamma=(True,))
    (mat,) = kisin_matrix(rho, AdmElt(((True, (2, 1)),)))
    assert mat[0][0].is_zero()
    assert mat[0][1].degree("v") == 1
    assert mat[1][0].degree("v") == 2
    assert not mat[1][1].is_zero() and mat[1][1].degree("v") == 1


def test_kisin_matrix_not_in_x():
    rho = rb(p=13, r=(5,), gamma=(True,))
    with pytest.raises(NotInX):
        kisin_matrix(rho, AdmElt(((False, (0, 2)),)))
    # allowed when gamma = 0
    kisin_matrix(rb(p=13, r=(5,)), AdmElt(((False, (0, 2)),)))


def shape_from_matrix(mat):
    if mat[0][1].is_zero() and not mat[0][0].is_zero():
        m = mat[0][0].degree("v")
        n = mat[1][1].degree("v")
        return shape_of("t", m, n, not mat[1][0].is_zero())
    m = mat[1][0].degree("v")
    n = mat[0][1].degree("v")
    return shape_of("wt", m, n, not mat[1][1].is_zero())


def test_shape_round_trip_through_matrices():
    for gamma in ((False, False), (True, False), (True, True)):
        rho = RhoBarData(
            p=101, f=2, irreducible=False, r=(40, 29), gamma_nonzero=gamma
        )
        for slots in product(
            [(False, (2, 1)), (True, (2, 1)), (False, (3, 0)), (True, (3, 1))],
            repeat=2,
        ):
            w = AdmElt(slots)
            try:
                mats = kisin_matrix(rho, w)
            except NotInX:
                continue
            for k, mat in enumerate(mats):
                flip, (m, n) = w.slots[k]
                expect = shape_of(
                    "wt" if flip else "t", m, n, rho.gamma_nonzero[k]
                )
                assert shape_from_matrix(mat) == expect


# ---------------------------------------------------------------------------
# membership sets sanity


def test_membership_b_sets_structure():
    rho = rb(p=101, r=(40,))
    lam = HTWeight(((1, 0),))
    (vals_t,) = membership_b_sets(rho, lam, AdmElt(((False, (1, 0)),)))
    assert vals_t == {0, -1}
    (vals_wt,) = membership_b_sets(rho, lam, AdmElt(((True, (1, 0)),)))
    assert vals_wt == {0, 1}
