from fractions import Fraction

import pytest

from evaluator import (
    EvalRoute,
    IntersectionKey,
    KeyOutcome,
    bracket,
    enumerate_keys,
    evaluate,
    kappa_bracket,
    lambda_bracket,
    make_key,
    psi_closed_g1,
    psi_multinomial_g0,
    require_key,
)
from evaluator.cache import MemoTable
from indexing import InvalidIndexError, Kind, MultiIndex, UnstableError, UnsupportedGenusError, parse_index_spec

ROUTES = [EvalRoute.SPLITTING, EvalRoute.PUNCTURE_DILATON]


def tau(text: str) -> MultiIndex:
    return parse_index_spec(text, Kind.S0)


def kappa(text: str) -> MultiIndex:
    return parse_index_spec(text, Kind.S1)


@pytest.mark.parametrize("route", ROUTES)
@pytest.mark.parametrize("g,m,p,expected", [
    (0, "0:3", "", Fraction(1)),
    (0, "0:3,1:1", "", Fraction(1)),
    (0, "0:4,2:1", "", Fraction(1)),
    (0, "0:3,1:2", "", Fraction(2)),
    (1, "1:1", "", Fraction(1, 24)),
    (1, "0:1,2:1", "", Fraction(1, 24)),
    (1, "1:2", "", Fraction(1, 24)),
    (1, "0:2,3:1", "", Fraction(1, 24)),
    (1, "0:1,1:1,2:1", "", Fraction(1, 12)),
    (1, "1:3", "", Fraction(1, 12)),
    (1, "0:1", "1:1", Fraction(1, 24)),
    (0, "0:4", "1:1", Fraction(1)),
    (0, "0:5", "1:2", Fraction(5)),
    (0, "0:5", "2:1", Fraction(1)),
    (1, "0:2", "1:2", Fraction(1, 8)),
])
def test_known_values(route, g, m, p, expected):
    assert bracket(g, tau(m), kappa(p), route) == expected


def test_make_key_checks_stability_before_dimension():
    assert make_key(0, tau("0:2"), kappa("")) is KeyOutcome.INVALID
    assert make_key(0, tau("0:3,1:1"), kappa("1:1")) is KeyOutcome.ZERO
    assert isinstance(make_key(0, tau("0:3"), kappa("")), IntersectionKey)


def test_require_key_raises_on_unstable():
    with pytest.raises(UnstableError, match="unstable"):
        require_key(0, tau("0:2"), kappa(""))
    assert require_key(1, tau("0:1,1:1"), kappa("")) is None


def test_unsupported_genus():
    with pytest.raises(UnsupportedGenusError):
        bracket(2, tau("1:1"), kappa(""))


def test_dimension_mismatch_is_zero():
    assert bracket(1, tau("0:1,1:1")) == 0


def test_key_rejects_kind_mix():
    with pytest.raises(InvalidIndexError):
        IntersectionKey(0, kappa("1:1"), kappa(""))


def test_kappa0_scalar():
    key = IntersectionKey(1, tau("0:2"), kappa("1:2"))
    assert key.n == 2
    assert key.kappa0 == 2


def test_kappa_bracket():
    assert kappa_bracket(kappa("1:1"), 1) == Fraction(1, 24)
    assert kappa_bracket(kappa("1:1"), 0) == 1
    assert kappa_bracket(kappa("1:2"), 0) == 5
    with pytest.raises(UnstableError):
        kappa_bracket(kappa(""), 1)


def test_lambda_bracket():
    assert lambda_bracket(kappa(""), 1, 1, 1) == Fraction(1, 24)
    assert lambda_bracket(kappa("1:1"), 1, 2, 1) == Fraction(1, 24)
    assert lambda_bracket(kappa("1:1"), 0, 1, 1) == Fraction(1, 24)
    assert lambda_bracket(kappa(""), 1, 4, 0) == 0
    assert lambda_bracket(kappa(""), 2, 2, 1) == 0
    with pytest.raises(UnstableError):
        lambda_bracket(kappa(""), 1, 2, 0)


@pytest.mark.parametrize("b,expected", [
    ([0, 0, 0], 1),
    ([1, 1, 0, 0, 0], 2),
    ([2, 1, 0, 0, 0, 0], 3),
    ([1, 0, 0], 0),
])
def test_psi_multinomial_g0(b, expected):
    assert psi_multinomial_g0(b) == expected


def test_psi_multinomial_needs_three_points():
    with pytest.raises(InvalidIndexError):
        psi_multinomial_g0([0, 0])


@pytest.mark.parametrize("b,expected", [
    ([1], Fraction(1, 24)),
    ([5], Fraction(1, 24)),
    ([2, 1], Fraction(1, 12)),
    ([1, 1, 1], Fraction(1, 12)),
])
def test_psi_closed_g1(b, expected):
    assert psi_closed_g1(b) == expected


def test_psi_closed_g1_rejects_zero_entries():
    with pytest.raises(InvalidIndexError):
        psi_closed_g1([0, 1])


def test_closed_form_route_is_psi_only():
    key = IntersectionKey(1, tau("0:1"), kappa("1:1"))
    with pytest.raises(InvalidIndexError):
        evaluate(key, EvalRoute.CLOSED_FORM)


def test_routes_agree_on_small_keys():
    for g in (0, 1):
        for key in enumerate_keys(g, 5, 5):
            assert evaluate(key, EvalRoute.SPLITTING) == evaluate(key, EvalRoute.PUNCTURE_DILATON), str(key)


def test_enumerate_keys_respects_bounds():
    keys = list(enumerate_keys(0, 4, 1))
    assert {str(k) for k in keys} == {"<tau_0^3>_0", "<tau_0^3 tau_1>_0", "<tau_0^4 kappa_1>_0"}


def test_memo_table_ceiling(monkeypatch):
    monkeypatch.setenv("MODULI_CACHE_LIMIT", "2")
    table = MemoTable[int, int]("test")
    for i in range(3):
        table.store(i, i)
    assert len(table) == 2
    assert table.get(2) is None
    assert table.get(1) == 1


def test_memo_table_unlimited(monkeypatch):
    monkeypatch.setenv("MODULI_CACHE_LIMIT", "0")
    table = MemoTable[int, int]("test")
    for i in range(10):
        table.store(i, i)
    assert len(table) == 10


@pytest.mark.parametrize("g", [0, 1])
def test_brackets_are_nonnegative(g):
    keys = list(enumerate_keys(g, 6, 6))
    assert keys
    for key in keys:
        assert evaluate(key) >= 0, str(key)
