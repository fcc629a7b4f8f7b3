from __future__ import annotations

from fractions import Fraction as Fr

import pytest

from leonard.affine import AffineMap, apply
from leonard.classify import CaseTag, main_case
from leonard.errors import DegenerateData, DiameterTooSmall, FitInconsistent, InadmissibleField
from leonard.field import QQ, BinaryField, PrimeField, QuadraticExtension
from leonard.parray import ParameterArray, validate
from leonard.typefit import (ALLOWED_CASES, TypeIData, TypeIIData, TypeIIIData, TypeIVData, TypeKind,
                             case_clauses, detect_type, evaluate, fit, generate, predict_case,
                             random_extension_type_i, random_typedata, reciprocal_root_data)
from corpus import corpus
from oracles import type_i, type_ii, type_iii, type_iv


def test_detect_reference_arrays(pa_a, pa_b):
    assert detect_type(pa_a).kind is TypeKind.II
    assert detect_type(pa_b).kind is TypeKind.II
    assert detect_type(pa_a.over(PrimeField(7))).kind is TypeKind.II


def test_fit_reference_arrays(pa_a, pa_b):
    assert fit(pa_a) == TypeIIData(3, 0, 1, 0, 0, 1, 0, 0)
    assert fit(pa_b) == TypeIIData(3, 0, 5, 1, 0, 1, Fr(-1, 5), 0)


def test_generate_gives_pa_a(pa_a):
    assert generate(TypeIIData(3, 0, 1, 0, 0, 1, 0, 0)) == pa_a


def test_type_i_with_q_two():
    # smallest |tau| with every split entry nonzero
    taus = sorted((Fr(n, k) for n in range(-6, 7) for k in (1, 2)), key=lambda t: (abs(t), t))
    tau = next(t for t in taus if all(x != 0 for seq in type_i(3, 2, 0, 1, 3, 0, 1, 5, t)[2:] for x in seq))
    td = TypeIData(3, Fr(2), 0, 1, 3, 0, 1, 5, tau)
    pa = generate(td)
    assert validate(pa).ok
    assert [list(pa.theta), list(pa.theta_star), list(pa.varphi), list(pa.phi)] == list(type_i(3, 2, 0, 1, 3, 0, 1, 5, tau))
    tag = detect_type(pa)
    assert tag.kind is TypeKind.I and set(tag.roots) == {2, Fr(1, 2)} and tag.q == 2
    assert fit(pa) == td


def test_reciprocal_root_relation():
    td = TypeIData(3, Fr(2), 0, 1, 3, 0, 1, 5, Fr(1, 2))
    pa = generate(td)
    other = fit(pa, q=Fr(1, 2))
    assert other == reciprocal_root_data(td)
    # (mu, h, mu*, h*, tau) -> (h q^d, mu q^d, h* q^d, mu* q^d, tau q^(d+1))
    assert (other.mu, other.h, other.mu_star, other.h_star, other.tau) == (24, 8, 40, 8, 8)
    assert generate(other) == pa


def test_type_iii_plus_forbidden_shift():
    # s = i h / 2 for odd i would make theta_{d-i} equal theta_0
    with pytest.raises(DegenerateData):
        generate(TypeIIIData(4, 0, Fr(2), Fr(3), 0, 1, 0, 1))
    # the even shift s = 2h/2 is allowed; pick tau so no split entry vanishes
    tau = next(t for t in range(1, 20) if all(x != 0 for seq in type_iii(4, 0, 2, 2, 0, 1, 0, t)[2:] for x in seq))
    assert validate(generate(TypeIIIData(4, 0, Fr(2), Fr(2), 0, 1, 0, tau))).ok


def test_type_iii_minus_needs_nonzero_s():
    with pytest.raises(DegenerateData):
        generate(TypeIIIData(5, 0, 1, 0, 0, 1, 1, 1))
    for seed in range(10):
        td = random_typedata(TypeKind.IIIminus, 5, QQ, seed)
        assert all(x != 0 for x in (td.h, td.h_star, td.s, td.s_star))


def test_type_iv_random_data():
    F = BinaryField(2)
    td = random_typedata(TypeKind.IV, 3, F, 0)
    assert td.s not in (F.zero, F.one) and td.s_star not in (F.zero, F.one)
    pa = generate(td)
    assert detect_type(pa).kind is TypeKind.IV
    assert fit(pa) == td


def test_type_iv_outside_binary_fields():
    with pytest.raises(InadmissibleField):
        random_typedata(TypeKind.IV, 3, BinaryField(1), 0)
    with pytest.raises(InadmissibleField):
        random_typedata(TypeKind.IV, 3, PrimeField(7), 0)
    with pytest.raises(InadmissibleField):
        random_typedata(TypeKind.IIIplus, 6, PrimeField(3), 0)


def test_random_data_is_deterministic():
    a = random_typedata(TypeKind.II, 4, QQ, 1)
    assert a == random_typedata(TypeKind.II, 4, QQ, 1)
    assert validate(generate(a)).ok


def test_small_diameter_rejected():
    pa = ParameterArray.build([0, 1, 3], [0, 2, 3], [1, 1], [1, 1])
    with pytest.raises(DiameterTooSmall):
        detect_type(pa)


def test_fit_rejects_wrong_family(pa_b):
    bad = pa_b.replace(phi=(pa_b.phi[0], pa_b.phi[1], pa_b.phi[2] + 1))
    with pytest.raises(FitInconsistent):
        fit(bad)


def test_predict_case_examples():
    assert predict_case(TypeIIData(3, 0, 1, 0, 0, 1, 0, 0)) is CaseTag.I
    assert predict_case(TypeIIData(3, 0, 5, 1, 0, 1, Fr(-1, 5), 0)) is CaseTag.III
    for e in corpus():
        if e.kind is TypeKind.IIIminus:
            assert predict_case(e.td) in (CaseTag.III, CaseTag.IV, CaseTag.VII)


def _oracle_entries(td):
    if td.kind is TypeKind.I:
        return type_i(td.d, td.q, td.eta, td.mu, td.h, td.eta_star, td.mu_star, td.h_star, td.tau)
    if td.kind is TypeKind.II:
        return type_ii(td.d, td.eta, td.mu, td.h, td.eta_star, td.mu_star, td.h_star, td.tau)
    if td.kind is TypeKind.IV:
        return type_iv(td.theta0, td.theta_star0, td.h, td.s, td.h_star, td.s_star, td.r)
    return type_iii(td.d, td.eta, td.h, td.s, td.eta_star, td.h_star, td.s_star, td.tau)


def test_closed_forms_match_oracle():
    n = 0
    for e in corpus():
        if e.field is QQ and e.case is not None or e.kind is TypeKind.IV:
            assert list(evaluate(e.td)) == list(_oracle_entries(e.td)), e.label
            n += 1
    assert n > 100


def test_fit_roundtrip_on_corpus():
    for e in corpus():
        td = e.td
        if td.kind is TypeKind.I:
            assert fit(e.pa, q=td.q) == td
            assert fit(e.pa) in (td, reciprocal_root_data(td))
        else:
            assert fit(e.pa) == td, e.label


def test_extension_roots():
    for seed in range(4):
        td = random_extension_type_i(4, seed)
        assert isinstance(td.field, QuadraticExtension) and td.q.b != 0
        pa = generate(td)
        assert pa.field is QQ
        tag = detect_type(pa)
        assert tag.q_in_extension and set(tag.roots) == {td.q, 1 / td.q}
        assert fit(pa, q=td.q) == td


def test_detection_is_affine_invariant():
    m = AffineMap(Fr(-3, 2), 7, Fr(2, 5), -1)
    for e in corpus()[::5]:
        if e.field is QQ:
            tag = detect_type(e.pa)
            other = detect_type(apply(e.pa, m))
            assert (tag.kind, set(tag.roots)) == (other.kind, set(other.roots))


def test_allowed_cases_cover_targeted_generation():
    for e in corpus():
        if e.case is not None:
            assert e.case in ALLOWED_CASES[e.kind]
            assert predict_case(e.td) is e.case
        assert len(case_clauses(e.td)) == 1
        assert predict_case(e.td) is main_case(e.pa)[0], e.label


# scalar-side conditions against sequence-side conditions -------------------------


def _sequence_side(pa):
    d, th, ts, vp, ph = pa.d, pa.theta, pa.theta_star, pa.varphi, pa.phi

    def constant(xs):
        return all(x == xs[0] for x in xs)

    return {
        "theta_sym": constant([th[i] + th[d - i] for i in range(d + 1)]),
        "theta_star_sym": constant([ts[i] + ts[d - i] for i in range(d + 1)]),
        "ratio": constant([(ts[i] - ts[0]) / (th[i] - th[0]) for i in range(1, d + 1)]),
        "cross_ratio": constant([(ts[d - i] - ts[d]) / (th[i] - th[0]) for i in range(1, d + 1)]),
        "vp_neg_ph": all(vp[i] == -ph[i] for i in range(d)),
        "vp_neg_ph_rev": all(vp[i] == -ph[d - 1 - i] for i in range(d)),
        "ph_pal": all(ph[i] == ph[d - 1 - i] for i in range(d)),
        "vp_pal": all(vp[i] == vp[d - 1 - i] for i in range(d)),
    }


def _scalar_side(td):
    k = td.kind
    if k is TypeKind.IV:
        same = td.s == td.s_star
        return dict(theta_sym=True, theta_star_sym=True, ratio=same, cross_ratio=same, vp_neg_ph=False,
                    vp_neg_ph_rev=False, ph_pal=same, vp_pal=same)
    if k is TypeKind.I:
        a, b = td.mu == -td.h, td.mu_star == -td.h_star
        eq, opp = td.mu * td.h_star == td.mu_star * td.h, td.mu * td.mu_star == td.h * td.h_star
    elif k is TypeKind.II:
        a, b = td.h == 0, td.h_star == 0
        eq, opp = td.mu * td.h_star == td.mu_star * td.h, td.mu * td.h_star == -td.mu_star * td.h
    else:
        a, b = td.s == 0, td.s_star == 0
        eq, opp = td.h * td.s_star == td.h_star * td.s, td.h * td.s_star == -td.h_star * td.s
        if k is TypeKind.IIIminus:
            # theta-sums never flatten and varphi never equals -phi termwise
            return dict(theta_sym=False, theta_star_sym=False, ratio=eq, cross_ratio=opp, vp_neg_ph=False,
                        vp_neg_ph_rev=False, ph_pal=eq, vp_pal=opp)
    t = td.tau == 0
    return dict(theta_sym=a, theta_star_sym=b, ratio=eq, cross_ratio=opp, vp_neg_ph=t and a,
                vp_neg_ph_rev=t and b, ph_pal=eq, vp_pal=opp)


def test_symmetry_conditions_agree():
    for e in corpus():
        assert _scalar_side(e.td) == _sequence_side(e.pa), e.label
