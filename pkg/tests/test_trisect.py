import pytest
from hypothesis import given, strategies as st

from mingenus.abelian import RankStatus
from mingenus.errors import InvariantViolation
from mingenus.kirby import euler_characteristic
from mingenus.presentation import parse_presentation
from mingenus.trisect import (
    TrisectionParams, certify, chu_tillmann_bound, construct, trisection_from_link, verify_chain,
)
from strategies import presentations


@pytest.mark.parametrize("args, expected", [
    ((3, 4, 6), (7, 3, 3, 3)),
    ((1, 2, 2), (3, 1, 1, 1)),
    ((0, 1, 0), (1, 0, 0, 0)),
])
def test_trisection_from_link(args, expected):
    assert trisection_from_link(*args) == TrisectionParams(*expected)


def test_trisection_from_link_unbalanced():
    assert trisection_from_link(2, 2, 5) == TrisectionParams(6, 2, 4, 2)


def test_trisection_from_link_errors():
    with pytest.raises(ValueError):
        trisection_from_link(1, 3, 1)
    with pytest.raises(ValueError):
        trisection_from_link(1, 0, 0)


@pytest.mark.parametrize("chi, rank, bound", [(0, 3, 7), (2, 0, 0), (2, 1, 3)])
def test_chu_tillmann_bound(chi, rank, bound):
    assert chu_tillmann_bound(chi, rank) == bound


@pytest.mark.parametrize("args, chain, t_hat", [
    ((3, 4, 2), (3, 3, 3, 3), 6),
    ((1, 1, 1), (1, 1, 1, 1), 2),
    ((2, 2, 1), (2, 2, 2, 2), 3),
])
def test_verify_chain(args, chain, t_hat):
    frag = verify_chain(*args)
    assert frag.chain == chain and frag.t_Lhat == t_hat and frag.num_Lhat == 2 * args[2]


def test_verify_chain_rejects_wrong_bound():
    with pytest.raises(ValueError):
        verify_chain(3, 5, 2)


def test_params_invariant():
    with pytest.raises(ValueError):
        TrisectionParams(2, 3, 0, 0)


def test_certify_three_generator_example():
    c = certify(parse_presentation("<x,y,z | x^3 y^-2, [y,z]>"))
    assert c.params == TrisectionParams(7, 3, 3, 3)
    assert c.chi == 0 and c.bound == 7
    assert c.status is RankStatus.CONDITIONAL
    assert c.rank_report.abelian_lower_bound == 2
    assert (c.t_L, c.t_Lhat, c.num_L, c.num_Lhat) == (4, 6, 2, 4)
    assert c.intermediate == TrisectionParams(5, 3, 3, 3)


def test_certify_z2():
    c = certify(parse_presentation("<x | x^2>"))
    assert (c.params, c.chi, c.status) == (TrisectionParams(3, 1, 1, 1), 2, RankStatus.PROVEN)


def test_certify_s4():
    c = certify(parse_presentation("< | >"))
    assert (c.params, c.chi, c.status) == (TrisectionParams(0, 0, 0, 0), 2, RankStatus.PROVEN)
    assert any("G != 1" in note for note in c.notes)
    assert c.t_L is None


def test_certificate_problems_detect_tampering():
    from dataclasses import replace
    c = certify(parse_presentation("<x | x^2>"))
    assert c.problems() == []
    assert "chain" in replace(c, chain=(1, 1, 1, 0)).problems()
    assert "g" in replace(c, params=TrisectionParams(4, 1, 1, 1)).problems()
    assert "status" in replace(c, status=RankStatus.CONDITIONAL).problems()


@given(presentations())
def test_certificate_closed_forms(p):
    c = construct(p)
    cert = c.certificate
    n, r = p.n, len(p.relators)
    assert cert.params.g == n + 2 * r == chu_tillmann_bound(cert.chi, n)
    assert cert.params.k == (n, n, n)
    assert euler_characteristic(c.M) == 2 + cert.params.g - sum(cert.params.k) == cert.chi
    if r:
        assert cert.params == trisection_from_link(n, 2 * r, n + 2 * r - 1)
    assert len(set(cert.chain)) == 1


@given(presentations(max_gens=3, max_rels=3, max_len=6), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_stabilization_monotone(p, a, b, c):
    base = certify(p)
    s = certify(p, stabilization=(a, b, c))
    assert s.params.g == base.params.g + 2 * a + b + c
    assert s.chi == base.chi + 2 * a + b + c
    assert s.params.g == chu_tillmann_bound(s.chi, p.n)
    assert s.params.k == base.params.k


def test_invariant_violation_is_distinct_error():
    assert issubclass(InvariantViolation, RuntimeError)
