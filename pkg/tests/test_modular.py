"""Prime-field M_j computation and the two nonzero-residue criteria."""

import json

import pytest

from heckebn.certificates import Certificate
from heckebn.errors import InapplicablePrimeError
from heckebn.giambelli import pk_beta
from heckebn.modular import (
    ModularRun,
    certify_mod,
    criterion_e61,
    criterion_e62,
    find_gk,
    find_gpk,
    mj_mod,
    theorem43_gate,
    valid_primes_above,
)


def test_find_gk_values():
    assert find_gk(1) == 3
    assert find_gk(2) == 3
    assert find_gk(8) == 17
    assert find_gk(9) == 19
    with pytest.raises(ValueError):
        find_gk(0)


def test_find_gpk_values():
    # crossing table for the certificate default prime
    expected = {1: 3, 2: 3, 8: 13, 9: 17, 10: 23, 11: 23, 12: 29, 13: 37,
                14: 37, 15: 41, 16: 47, 17: 53, 18: 59, 19: 67, 20: 71,
                21: 79, 22: 89, 23: 97, 24: 101}
    for k, g in expected.items():
        assert find_gpk(k) == g, k


def test_valid_primes_above():
    assert valid_primes_above(8) == [17, 19]
    assert valid_primes_above(1, 3) == [3, 5, 7]
    assert all(g > 2 * 12 for g in valid_primes_above(12, 4))


def test_mj_mod_small_frozen():
    run = mj_mod(3, 11)
    assert run.m == (4, 2, 5)
    assert run.unit == 10
    assert run.e == 24
    assert run.m_at(2) == 5
    assert run.m_at(3) == 0
    assert run.m_at(-1) == 0
    assert mj_mod(1, 5).m == (4,)


def test_mj_mod_rejects_small_or_composite_primes():
    with pytest.raises(InapplicablePrimeError):
        mj_mod(8, 13)
    with pytest.raises(InapplicablePrimeError):
        mj_mod(4, 7)
    with pytest.raises(ValueError):
        mj_mod(3, 9)
    with pytest.raises(ValueError):
        mj_mod(3, 2)


def test_mj_matches_rational_reduction():
    # dual path: native F_g determinant vs the exact rational coefficients
    # of P_k(1, beta, 0) scaled by u^k and reduced mod g
    for k in range(1, 13):
        pk = pk_beta(k)
        coeffs = pk.polynomial.coeffs_in("beta")
        for g in valid_primes_above(k, 2):
            run = mj_mod(k, g)
            u = run.unit
            uk = pow(u, k, g)
            expected = []
            for c in coeffs:
                num = c.numerator * uk % g
                den = pow(c.denominator % g, g - 2, g)
                expected.append(num * den % g)
            while len(expected) > 1 and expected[-1] == 0:
                expected.pop()
            assert list(run.m) == expected, (k, g)


def test_mj_unit_is_minus_one():
    # Wilson: (g-1)! = -1, and 2^{g-1} = 1 by Fermat, so u = -1 mod g
    for k, g in [(1, 3), (2, 5), (3, 11), (5, 13), (10, 23)]:
        assert mj_mod(k, g).unit == g - 1


def test_mj_degree_bound():
    for k, g in [(4, 11), (6, 17), (9, 23)]:
        run = mj_mod(k, g)
        assert len(run.m) - 1 <= k * k // 4


def test_criterion_e61():
    run = mj_mod(3, 11)
    assert criterion_e61(run) == (4, True)
    # indices 5 and 10 exceed the beta-degree, so only M_0 contributes


def test_criterion_e62():
    run = mj_mod(3, 11)
    assert criterion_e62(run, 1) == (0, False)
    # l = 3 reaches M_2 = 5 at index (g-1)/2 - 3 = 2
    assert criterion_e62(run, 3) == (5, True)
    with pytest.raises(ValueError):
        criterion_e62(run, 0)
    with pytest.raises(ValueError):
        criterion_e62(run, run.e // 2 + 1)


def test_certify_mod_prime_sweep():
    seen = {}
    for k in range(10, 25):
        cert = certify_mod(k)
        assert cert is not None, k
        assert cert.g0 == find_gpk(k)
        assert cert.verify()
        seen[k] = (cert.criterion, cert.ell)
    for k, pattern in seen.items():
        if k == 17:
            assert pattern == ("e6.2", 1)
        else:
            assert pattern == ("e6.1", 0), k


def test_certify_mod_17_details():
    cert = certify_mod(17)
    assert cert.g0 == 53
    assert cert.m_indices == (25, 51)
    assert criterion_e61(mj_mod(17, 53))[1] is False
    assert cert.verify(deep=True)


def test_certify_mod_inapplicable_defaults():
    for k in (8, 9):
        with pytest.raises(InapplicablePrimeError):
            certify_mod(k)
    cert8 = certify_mod(8, fallback=True)
    assert cert8 is not None and cert8.g0 == 17
    cert9 = certify_mod(9, fallback=True)
    assert cert9 is not None and cert9.g0 == 19
    with pytest.raises(ValueError):
        certify_mod(3, g=15)


def test_certificate_json_round_trip():
    cert = certify_mod(11)
    obj = cert.to_json_obj()
    assert obj["kind"] == "modular"
    assert obj["criterion"] == "e6.1"
    assert all(isinstance(v, str) for v in obj["M_values_used"])
    text = json.dumps(obj)
    back = Certificate.from_json_obj(json.loads(text))
    assert back == cert
    assert back.hash() == cert.hash()
    assert back.verify(deep=True)


def test_certificate_verify_rejects_tampering():
    cert = certify_mod(10)
    bad = Certificate.from_json_obj({
        **cert.to_json_obj(),
        "witness_residue": "0",
    })
    assert not bad.verify()
    wrong_value = list(cert.m_values)
    wrong_value[0] = (wrong_value[0] + 1) % cert.g0
    bad2 = Certificate.from_json_obj({
        **cert.to_json_obj(),
        "M_values_used": [str(v) for v in wrong_value],
    })
    assert not bad2.verify(deep=True)


def test_theorem43_gate():
    assert theorem43_gate(17, 8)
    assert theorem43_gate(19, 8)
    assert not theorem43_gate(13, 8)
    assert not theorem43_gate(23, 11)
    assert theorem43_gate(31, 11)
    assert not theorem43_gate(15, 2)
    assert not theorem43_gate(2, 1)
    assert theorem43_gate(3, 1)


def test_modular_run_is_frozen():
    run = mj_mod(2, 7)
    with pytest.raises(AttributeError):
        run.m = (0,)
    assert isinstance(run, ModularRun)
