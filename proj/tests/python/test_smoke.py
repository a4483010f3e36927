from itertools import combinations, permutations
from math import comb

import pytest

import permstat as ps


def contains(w, pat):
    k = len(pat)
    order = sorted(range(k), key=lambda i: pat[i])
    for idx in combinations(range(len(w)), k):
        vals = [w[i] for i in idx]
        if sorted(range(k), key=lambda i: vals[i]) == order:
            return True
    return False


def maj(w):
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def involutions(n):
    for w in permutations(range(1, n + 1)):
        if all(w[w[i] - 1] == i + 1 for i in range(n)):
            yield w


def maj_coeffs(n, pat):
    c = [0] * (n * (n - 1) // 2 + 1)
    for w in involutions(n):
        if not contains(w, pat):
            c[maj(w)] += 1
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def test_permutation_roundtrip():
    s = ps.Permutation("216453")
    assert str(s) == "216453"
    assert s.word == [2, 1, 6, 4, 5, 3]
    assert s.is_involution()
    assert s.maj() == maj(s.word)
    assert ps.Permutation([1, 3, 2]) == ps.Permutation("132")
    assert s.contains(ps.Permutation("321"))
    assert len({ps.Permutation("12"), ps.Permutation("12")}) == 1


@pytest.mark.parametrize("pat", ["123", "132", "213", "231", "312", "321"])
def test_maj_genfun_matches_reference(pat):
    for n in range(0, 8):
        got = ps.genfun(pat, n, weight="maj")
        assert got.q_coefficients() == maj_coeffs(n, [int(c) for c in pat])


def test_cardinalities():
    for n in range(0, 11):
        assert ps.genfun("321", n, weight="count").at_one() == comb(n, (n + 1) // 2)
        assert len(ps.members("231", n)) == (1 if n == 0 else 2 ** (n - 1))


def test_q_binomial_and_reversal():
    assert str(ps.genfun("321", 4)) == "1 + q + 2*q^2 + q^3 + q^4"
    for n in range(0, 10):
        assert ps.genfun("321", n) == ps.q_binomial(n, (n + 1) // 2)
        assert ps.genfun("123", n) == ps.reverse_in_q(ps.genfun("321", n), n * (n - 1) // 2)


def test_poly_api():
    p = ps.Poly.parse("1 + 2*q^2*t + p*q^3")
    assert p.terms() == {(0, 0, 0): 1, (0, 2, 1): 2, (1, 3, 0): 1}
    assert p + ps.Poly() == p
    assert (p * ps.Poly.parse("1")) == p
    assert ps.Poly().is_zero()


def test_formulas():
    ids = ps.formula_ids()
    assert "mi_321" in ids and "ii_231" in ids
    for n in range(0, 9):
        assert ps.formula("mi_321", n) == ps.genfun("321", n)
        assert ps.formula("ii_231", n) == ps.genfun("231", n, weight="inv")


def test_bijections():
    assert ps.bijection("theta", "41235") == "35421"
    assert ps.bijection("phi321", "132458967") == "010111100"
    r = ps.verify_bijection("phi321", 8)
    assert r["failures"] == 0 and r["checked"] > 0


def test_verify_and_conjecture():
    rep = ps.verify("errata")
    assert rep["ok"] is True
    ids = {w["id"] for w in rep["warnings"]}
    assert {"mi_231", "table:123,231"} <= ids
    c = ps.conjecture("mi-wilf", max_len=3, n_max=7)
    assert c["id"] == "mi-wilf"
    assert c == ps.conjecture("mi-wilf", max_len=3, n_max=7, jobs=1)


def test_errors():
    with pytest.raises(ps.CapExceeded):
        ps.genfun("123", 12, cap_inv=10)
    with pytest.raises(ValueError):
        ps.genfun("123", 3, population="nope")
    with pytest.raises(Exception):
        ps.Permutation("3x1")
