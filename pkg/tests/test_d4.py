from __future__ import annotations

from fractions import Fraction as Fr

import pytest

from leonard.d4 import ORDER, D4Element, act, act_word, compose, inverse, orbit, word
from leonard.field import QQ
from leonard.parray import arrays_equal, validate
from corpus import corpus
from oracles import parameter_array, relative, split_system

E = D4Element


def _rational_sample(n=12):
    return [e.pa for e in corpus() if e.field is QQ][::7][:n]


def _letters(g):
    return "" if g is E.ID else g.code


def test_down_is_an_involution():
    assert compose(E.DOWN, E.DOWN) is E.ID


def test_down_after_star_names_down_star():
    # "apply *, then Down" acts like "apply down, then *"
    assert compose(E.DDOWN, E.STAR) is E.DOWN_STAR
    assert word("sD") is word("ds") is E.DOWN_STAR


def test_double_reversal_squares_to_identity():
    assert compose(E.DOWN_DDOWN, E.DOWN_DDOWN) is E.ID


def test_codes_and_symbols_roundtrip():
    assert [g.code for g in ORDER] == ["id", "d", "D", "dD", "s", "ds", "Ds", "dDs"]
    for g in ORDER:
        assert E.parse(g.code) is g and E.parse(g.symbol) is g
        assert word(_letters(g)) is g
    with pytest.raises(ValueError):
        word("x")


def test_every_word_reduces_to_eight_elements():
    import itertools

    seen = set()
    for n in range(5):
        for w in itertools.product("dDs", repeat=n):
            seen.add(word("".join(w)))
    assert seen == set(ORDER)


def test_group_axioms():
    for g in ORDER:
        assert compose(g, E.ID) is g and compose(E.ID, g) is g
        assert compose(g, inverse(g)) is E.ID and compose(inverse(g), g) is E.ID
        for h in ORDER:
            for k in ORDER:
                assert compose(compose(g, h), k) is compose(g, compose(h, k))
    # non-abelian, as a dihedral group of order 8 should be
    assert compose(E.DOWN, E.STAR) is not compose(E.STAR, E.DOWN)
    assert sum(1 for g in ORDER if compose(g, g) is E.ID) == 6


def test_down_reverses_dual_side_of_pa_b(pa_b):
    rel = orbit(pa_b)[E.DOWN]
    assert rel.theta == pa_b.theta
    assert rel.theta_star == (Fr(3, 2), Fr(1, 10), Fr(-9, 10), Fr(-3, 2))
    assert rel.varphi == (Fr(27, 2), Fr(46, 5), Fr(3, 2))
    assert rel.phi == (Fr(-15, 2), Fr(-54, 5), Fr(-15, 2))


def test_big_down_on_pa_a(pa_a):
    rel = act(pa_a, E.DDOWN)
    assert rel.theta == (Fr(3, 2), Fr(1, 2), Fr(-1, 2), Fr(-3, 2))
    assert rel.theta_star == pa_a.theta_star
    assert rel.varphi == (Fr(3, 2), 2, Fr(3, 2)) and rel.phi == (Fr(-3, 2), -2, Fr(-3, 2))


def test_pa_a_is_self_dual(pa_a):
    assert arrays_equal(act(pa_a, E.STAR), pa_a)
    assert arrays_equal(act(pa_a, E.ID), pa_a)


def test_orbit_keeps_coincidences(pa_a, pa_b):
    orb = orbit(pa_a)
    assert list(orb) == list(ORDER)
    assert len({x.entries() for x in orb.values()}) == 4
    assert len({x.entries() for x in orbit(pa_b).values()}) == 8


def test_relatives_stay_valid():
    for pa in _rational_sample(20):
        for rel in orbit(pa).values():
            assert validate(rel).ok


def test_relatives_match_matrix_oracle(pa_a, pa_b):
    # relatives of the realized system, read back through the trace formulas
    for pa in [pa_a, pa_b] + _rational_sample(6):
        system = split_system(pa.theta, pa.theta_star, pa.varphi)
        for g in ORDER:
            th, ts, vp, ph = parameter_array(relative(system, _letters(g)))
            rel = act(pa, g)
            assert (list(rel.theta), list(rel.theta_star), list(rel.varphi), list(rel.phi)) == (th, ts, vp, ph), g


def test_composition_respects_action():
    for pa in _rational_sample(5):
        for g in ORDER:
            for h in ORDER:
                assert arrays_equal(act(pa, compose(g, h)), act(act(pa, h), g))


def test_generators_and_braid_relations():
    for pa in _rational_sample(5):
        for x in "sdD":
            assert arrays_equal(act_word(pa, x + x), pa)
        assert arrays_equal(act_word(pa, "Ds"), act_word(pa, "sd"))
        assert arrays_equal(act_word(pa, "ds"), act_word(pa, "sD"))
        assert arrays_equal(act_word(pa, "dD"), act_word(pa, "Dd"))
