"""Randomized properties at ranks beyond the exhaustive range."""

from hypothesis import given, settings, strategies as st

from affcrystal import (
    Multicharge,
    MultiPartition,
    Multisegment,
    canonical_multicharge,
    charge_sharp,
    epsilon,
    epsilon_star_vector,
    f_v,
    fock_f,
    format_multipartition,
    format_multisegment,
    hat_f,
    is_aperiodic,
    minimal_multicharge,
    mullineux,
    parse_multipartition,
    parse_multisegment,
    raising_path,
    reconstruct,
    rho,
    sharp,
    star,
    tilde_e,
    tilde_f,
    weight,
)
from affcrystal.infinity import replay

import oracles

E = st.integers(min_value=2, max_value=6)


@st.composite
def any_multisegment(draw):
    e = draw(E)
    keys = st.tuples(st.integers(0, e - 1), st.integers(1, 8))
    entries = draw(st.dictionaries(keys, st.integers(1, 3), max_size=8))
    return Multisegment(e, entries)


@st.composite
def crystal_vertex(draw, max_rank=14):
    """An aperiodic multisegment reached by a random lowering path from the empty one."""
    e = draw(E)
    path = draw(st.lists(st.integers(0, e - 1), max_size=max_rank))
    return replay(e, path, tilde_f)


@st.composite
def charge(draw, e=None):
    e = e or draw(E)
    counts = draw(st.lists(st.integers(0, 2), min_size=e, max_size=e).filter(lambda c: sum(c) > 0))
    return canonical_multicharge(counts, e)


@st.composite
def flotw(draw, max_rank=14):
    v = draw(charge())
    lam = MultiPartition.empty(v.level)
    for i in draw(st.lists(st.integers(0, v.e - 1), max_size=max_rank)):
        mu = fock_f(lam, v, i)
        if mu is not None:
            lam = mu
    return lam, v


@given(any_multisegment())
def test_text_round_trip(psi):
    text = format_multisegment(psi)
    assert parse_multisegment(text, psi.e) == psi
    assert format_multisegment(parse_multisegment(text, psi.e)) == text


@given(any_multisegment())
def test_json_round_trip(psi):
    assert Multisegment.from_json(psi.to_json()) == psi


@given(any_multisegment())
def test_rho_involution(psi):
    r = rho(psi)
    assert rho(r) == psi and r.rank == psi.rank and is_aperiodic(r) == is_aperiodic(psi)


@given(E, st.integers(1, 9), st.integers(-20, 20))
def test_tail_head_duality(e, length, tail):
    psi = parse_multisegment(f"({length};{tail}]", e)
    assert format_multisegment(psi) == f"[{(tail - length + 1) % e};{length})"


@given(any_multisegment())
def test_aperiodic_heads_or_tails(psi):
    heads = {}
    for (h, l), _ in psi.items():
        heads.setdefault(l, set()).add(h)
    assert is_aperiodic(psi) == all(len(s) < psi.e for s in heads.values())


@settings(max_examples=60, deadline=None)
@given(crystal_vertex(), st.data())
def test_operator_pairs(psi, data):
    i = data.draw(st.integers(0, psi.e - 1))
    assert tilde_e(tilde_f(psi, i), i) == psi
    assert tilde_f(psi, i) == oracles.f_by_word(psi, i)
    assert weight(psi) == oracles.weight_by_content(psi)


@settings(max_examples=60, deadline=None)
@given(crystal_vertex(), st.data())
def test_star_intertwines(psi, data):
    i = data.draw(st.integers(0, psi.e - 1))
    assert star(hat_f(psi, i)) == tilde_f(star(psi), i)
    assert epsilon(star(psi), i) == epsilon_star_vector(psi)[i]


@settings(max_examples=60, deadline=None)
@given(crystal_vertex())
def test_involutions(psi):
    s, h = star(psi), sharp(psi)
    assert star(s) == psi and sharp(h) == psi
    assert s == sharp(rho(psi)) == rho(h)


@settings(max_examples=40, deadline=None)
@given(crystal_vertex(), st.randoms(use_true_random=False))
def test_path_independence(psi, rng):
    path = raising_path(psi, choose=rng.choice)
    assert star(psi, path) == star(psi) and sharp(psi, path) == sharp(psi)


@given(charge())
def test_charge_sharp_involution(v):
    assert charge_sharp(charge_sharp(v)) == v


@settings(max_examples=60, deadline=None)
@given(flotw())
def test_reconstruct_round_trip(pair):
    lam, v = pair
    psi = f_v(lam, v)
    if lam.rank:
        assert reconstruct(psi, v) == lam
        vmin = minimal_multicharge(psi)
        assert f_v(reconstruct(psi, vmin), vmin) == psi


@settings(max_examples=60, deadline=None)
@given(flotw())
def test_mullineux_involution(pair):
    lam, v = pair
    w = charge_sharp(v)
    mu = mullineux(lam, v)
    assert mu.rank == lam.rank and mullineux(mu, w) == lam
    assert f_v(mu, w) == sharp(f_v(lam, v))


@settings(max_examples=60)
@given(flotw())
def test_multipartition_text(pair):
    lam, _ = pair
    assert parse_multipartition(format_multipartition(lam)) == lam
