import random

import pytest

from quadbalance import InputError, Monomial, MonomialIdeal, parse_monomial, polarize
from quadbalance.monomials import format_monomial


def m(n, *pairs):
    exps = [0] * n
    for v, e in pairs:
        exps[v] = e
    return Monomial(tuple(exps))


def test_parse_basic():
    assert parse_monomial("x1*x2", 3).exponents == (1, 1, 0)
    assert parse_monomial("x3^2", 3).exponents == (0, 0, 2)
    assert parse_monomial("x2^3*x1", 2).exponents == (1, 3)
    assert parse_monomial("1", 2).exponents == (0, 0)
    # repeated variable multiplies
    assert parse_monomial("x1*x1", 2).exponents == (2, 0)


def test_parse_errors_carry_position():
    with pytest.raises(InputError) as err:
        parse_monomial("x1*y2", 3)
    assert "y2" in str(err.value)
    with pytest.raises(InputError):
        parse_monomial("x4", 3)
    with pytest.raises(InputError):
        parse_monomial("", 3)
    with pytest.raises(InputError):
        parse_monomial("x0", 3)


def test_format_round_trip():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        exps = tuple(rng.randint(0, 3) for _ in range(n))
        mono = Monomial(exps)
        assert parse_monomial(format_monomial(mono), n) == mono


def test_monomial_ops():
    a = m(3, (0, 1), (1, 1))
    b = m(3, (0, 2), (1, 1), (2, 1))
    assert a.degree == 2 and b.degree == 4
    assert a.divides(b) and not b.divides(a)
    assert (a * a).exponents == (2, 2, 0)
    assert a.is_squarefree() and not b.is_squarefree()
    assert a.support() == frozenset({0, 1})


def test_ideal_minimalizes():
    ideal = MonomialIdeal.from_strings(3, ["x1*x2", "x1^2*x2", "x1*x2*x3"])
    assert ideal.generator_strings() == ["x1*x2"]
    assert ideal.contains(parse_monomial("x1*x2*x3^4", 3))
    assert not ideal.contains(parse_monomial("x1*x3", 3))


def test_ideal_flags():
    zero = MonomialIdeal(3, ())
    unit = MonomialIdeal.from_strings(3, ["1"])
    assert zero.is_zero() and not zero.is_unit() and zero.is_proper()
    assert unit.is_unit() and not unit.is_proper()
    quad = MonomialIdeal.from_strings(3, ["x1*x2", "x3^2"])
    assert quad.generated_in_degree(2)
    assert not MonomialIdeal.from_strings(3, ["x1", "x2*x3"]).generated_in_degree(2)


def test_polarize_single_power():
    ideal = MonomialIdeal.from_strings(1, ["x1^2"])
    pol, classes = polarize(ideal)
    assert pol.generator_strings() == ["x1*x2"]
    assert classes == [(0, 1)]


def test_polarize_mixed():
    ideal = MonomialIdeal.from_strings(2, ["x1^2", "x2^2", "x1*x2"])
    pol, classes = polarize(ideal)
    assert pol.n == 4
    assert set(pol.generator_strings()) == {"x1*x2", "x3*x4", "x1*x3"}
    assert classes == [(0, 1), (2, 3)]


def test_polarize_fixes_squarefree():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 6)
        gens = set()
        for _ in range(rng.randint(1, 6)):
            size = rng.randint(1, n)
            gens.add(frozenset(rng.sample(range(n), size)))
        ideal = MonomialIdeal(
            n,
            tuple(
                Monomial(tuple(1 if j in g else 0 for j in range(n))) for g in gens
            ),
        )
        pol, classes = polarize(ideal)
        assert pol == ideal
        assert all(len(c) == 1 for c in classes)


def test_polarize_degrees_match():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 4)
        exps = []
        for _ in range(rng.randint(1, 5)):
            exps.append(tuple(rng.randint(0, 3) for _ in range(n)))
        exps = [e for e in exps if sum(e)]
        if not exps:
            continue
        ideal = MonomialIdeal(n, tuple(Monomial(e) for e in exps))
        pol, _classes = polarize(ideal)
        assert pol.is_squarefree()
        assert sorted(g.degree for g in pol.generators) == sorted(
            g.degree for g in ideal.generators
        )
