import pytest

from affcrystal import checks
from affcrystal.checks import CheckResult, all_multisegments, canonical_charges, commutation_checks, selfcheck

import oracles


def test_result_bookkeeping():
    r = CheckResult("demo")
    r.expect(True, "fine")
    for k in range(8):
        r.expect(False, lambda k=k: f"bad {k}")
    assert not r.passed and r.checked == 9 and r.nfail == 8
    assert len(r.failures) == checks.MAX_EXAMPLES
    assert r.line().startswith("FAIL  demo")


def test_canonical_charges():
    assert len(canonical_charges(4)) == 4 + 10 + 20
    assert all(v.is_canonical() for v in canonical_charges(3))


@pytest.mark.parametrize("e", [2, 3, 4])
def test_all_multisegments_count(e):
    # all vectors of multiplicities: prod_l 1/(1-q^l)^e
    aperiodic = oracles.aperiodic_counts(e, 5)
    for n in range(6):
        found = all_multisegments(e, n)
        assert len(set(found)) == len(found)
        assert sum(1 for psi in found if checks.is_aperiodic(psi)) == aperiodic[n]


@pytest.mark.parametrize("e", [2, 3, 4])
def test_selfcheck_green(e):
    results = selfcheck(e, 3)
    assert [r.name for r in results] == [fn(e, 0).name for _, fn in checks.SUITE]
    assert all(r.passed and r.checked > 0 for r in results), [r.line() for r in results if not r.passed]


def test_selfcheck_catches_broken_operator(monkeypatch):
    real = checks.tilde_f

    def broken(psi, i):
        out = real(psi, i)
        return out if psi.rank != 2 else real(out, i)

    monkeypatch.setattr(checks, "tilde_f", broken)
    assert not checks.check_operator_pairs(3, 3).passed


def test_commutation_cases():
    dich, lit = commutation_checks(3, 4)
    assert dich.passed
    # the word-for-word '> 1' reading misses exactly the a_i + a^_i = 0 cases, starting with the empty vertex
    assert not lit.passed and lit.failures[0].startswith("∅ i=j=0, a+a^=0")
    assert all("a+a^=0" in f for f in lit.failures)
    expected = 0
    for chi in checks.vertices(3, 4):
        for i in range(3):
            st = checks.stats(chi, i)
            expected += st.a + st.a_hat == 0
    assert lit.nfail == expected
