from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orderone.abelian import H1_0, Q2_0, GUElement, OElement, Z2, h2, phi, t2, x, y
from orderone.delta1 import (
    GU_SEEDS,
    CESymbol,
    InvalidSymbolError,
    SeedAssignment,
    all_symbols,
    check_relations,
    g_universal,
    seven_step_eval,
    u_k_closed,
    u_M,
    u_Q,
    u_U,
)
from strategies import gu_elements, symbols

WINDOW = range(-20, 21)
S = CESymbol.parse


def test_symbol_parsing():
    assert S("T3@-2") == CESymbol("T", 3, -2)
    assert str(CESymbol("Q", 4, 0)) == "Q4@0"
    assert S("H1@+5") == CESymbol("H", 1, 5)


@pytest.mark.parametrize("text", ["T4@0", "H0@1", "E3@0", "Q1@0", "X1@0", "T3", "T3@", "T3@1.5", "t3@0"])
def test_symbol_parser_rejects(text):
    with pytest.raises(InvalidSymbolError):
        S(text)


def test_alphabet_has_twelve_types():
    assert len(list(all_symbols(0, 0))) == 12


def test_seven_step_gu_examples():
    assert g_universal(S("T3@4")) == t2(4) + h2(4) - h2(3)
    assert g_universal(S("Q4@1")) == Q2_0 + 2 * t2(1) - 2 * t2(0) + h2(1) - 2 * h2(0) + h2(-1)
    assert g_universal(S("E0@5")) == -h2(5)
    assert g_universal(S("H1@7")) == H1_0


def test_q4_expanded_form_matches_step_seven():
    for m in WINDOW:
        expanded = Q2_0 + 2 * t2(m) - 2 * t2(m - 1) + h2(m) - 2 * h2(m - 1) + h2(m - 2)
        assert g_universal(CESymbol("Q", 4, m)) == expanded


def test_g_universal_examples():
    assert g_universal(S("T2@3")) == t2(3)
    assert g_universal(S("H2@-1")) == h2(-1)
    for m in WINDOW:
        assert g_universal(CESymbol("Q", 2, m)) == Q2_0


def test_seed_recovery():
    for m in WINDOW:
        assert g_universal(CESymbol("T", 2, m)) == t2(m)
        assert g_universal(CESymbol("H", 2, m)) == h2(m)
    assert g_universal(S("H1@0")) == H1_0
    assert g_universal(S("Q2@0")) == Q2_0


def test_torsion_values():
    for m in WINDOW:
        assert 2 * g_universal(CESymbol("H", 1, m)) == GUElement()
        assert 2 * g_universal(CESymbol("Q", 2, m)) == GUElement()


def test_seed_must_be_two_torsion():
    with pytest.raises(ValueError):
        SeedAssignment(t2=lambda m: 0, h2=lambda m: 0, h1=1, q2=0)


def test_invalid_symbol_rejected():
    with pytest.raises(InvalidSymbolError):
        seven_step_eval(GU_SEEDS, "T3@0")
    with pytest.raises(InvalidSymbolError):
        u_k_closed(("T", 3, 0))


@pytest.mark.parametrize("fn", [g_universal, u_M, u_Q, u_U, u_k_closed], ids=lambda f: f.__name__)
def test_canonical_functions_satisfy_relations(fn):
    assert check_relations(fn, WINDOW) == []


@given(gu_elements, gu_elements, st.integers(0, 1), st.integers(0, 1))
def test_any_seeds_satisfy_relations(a, b, hb, qb):
    # seeds m -> shifted multiples of fixed elements, torsion seeds from G_U
    seed = SeedAssignment(
        t2=lambda m: m * a + t2(m), h2=lambda m: (m * m) * b - h2(m), h1=hb * H1_0, q2=qb * Q2_0
    )
    assert check_relations(lambda s: seven_step_eval(seed, s), range(-6, 7)) == []


def test_check_relations_reports_constructed_violation():
    def broken(s):
        if s == CESymbol("T", 0, 3):
            return g_universal(s) + t2(99)
        return g_universal(s)

    found = check_relations(broken, WINDOW)
    assert [(v.relation, v.m) for v in found] == [("T0_m = T3_m", 3)]
    assert "T0_m = T3_m" in str(found[0])


def test_u_M_values():
    assert u_M(S("E1@4")) == 1
    for s in all_symbols(-20, 20):
        want = 1 if (s.family in "EH" and s.sup == 1) else 0
        assert u_M(s) == want and isinstance(u_M(s), Z2)


def test_u_Q_values():
    assert u_Q(S("T3@2")) == 0
    for s in all_symbols(-20, 20):
        assert u_Q(s) == (1 if s.family == "Q" else 0)


def test_u_U_values():
    assert u_U(S("E0@5")) == -1
    for s in all_symbols(-20, 20):
        want = {("H", 2): 1, ("E", 2): 1, ("E", 0): -1}.get((s.family, s.sup), 0)
        assert u_U(s) == want


def test_u_k_closed_examples():
    assert u_k_closed(S("T3@0")) == x(0) + x(-3) + y(0)
    for m in WINDOW:
        assert u_k_closed(CESymbol("H", 1, m)) == OElement()
        assert u_k_closed(CESymbol("Q", 2, m)) == OElement()


@given(symbols())
def test_phi_of_universal_is_closed_form(s):
    assert phi(g_universal(s)) == u_k_closed(s)
