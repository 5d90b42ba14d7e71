import random

import pytest

from quadbalance import (
    GF,
    QQ,
    BudgetExceededError,
    InputError,
    LinearForm,
    Monomial,
    MonomialIdeal,
    build_matching_instance,
    certify_transversal_ranks,
    check_height_inequality,
    decompose_degree_two,
    find_matching,
    find_regular_sequence,
    height,
    is_regular_sequence_of_products,
    minimal_primes,
    monomial_as_product,
    sample_forms,
)

from oracles import random_quadratic_exponents

TRIANGLE = MonomialIdeal.from_strings(3, ["x1*x2", "x1*x3", "x2*x3"])


def quadratic_ideal(rng, n, max_gens, allow_squares=True):
    exps = random_quadratic_exponents(rng, n, max_gens, allow_squares)
    return MonomialIdeal(n, tuple(Monomial(e) for e in exps))


def test_decomposition_examples():
    dec = decompose_degree_two(TRIANGLE, (0, 1))
    assert dec.prime == (0, 1) and dec.g == 2
    assert dec.spaces == ((1, 2), (2,))
    squares = MonomialIdeal.from_strings(3, ["x1^2", "x2^2", "x3^2"])
    assert decompose_degree_two(squares, (0, 1, 2)).spaces == ((0,), (1,), (2,))
    shared = MonomialIdeal.from_strings(3, ["x1*x3", "x2*x3"])
    assert decompose_degree_two(shared, (2,)).spaces == ((0, 1),)


def test_decomposition_rejects_bad_input():
    with pytest.raises(InputError, match="misses the generator"):
        decompose_degree_two(TRIANGLE, (0,))
    with pytest.raises(InputError, match="divides no generator"):
        decompose_degree_two(MonomialIdeal.from_strings(2, ["x1*x2"]), (0, 1))
    with pytest.raises(InputError, match="degree exactly 2"):
        decompose_degree_two(MonomialIdeal.from_strings(3, ["x1*x2*x3"]), (0,))
    with pytest.raises(InputError):
        decompose_degree_two(MonomialIdeal.from_strings(2, []), (0,))


def test_height_inequality():
    dec = decompose_degree_two(TRIANGLE, (0, 1))
    assert check_height_inequality(dec, ())
    assert check_height_inequality(dec, (0,))
    assert check_height_inequality(dec, (0, 1))
    # (x1x2, x2x3) really has height 1; position spaces collapse onto x2
    thin = decompose_degree_two(
        MonomialIdeal.from_strings(3, ["x1*x2", "x2*x3"]), (0, 2)
    )
    assert thin.spaces == ((1,), (1,))
    assert not check_height_inequality(thin, (0, 1))


def test_matching_instances():
    dec = decompose_degree_two(TRIANGLE, (0, 1))
    assert build_matching_instance(dec, (1,)).neighbors == ((0,), (2,))
    assert build_matching_instance(dec, ()).neighbors == ((0,), (1,))
    assert build_matching_instance(dec, (0, 1)).neighbors == ((1, 2), (2,))
    with pytest.raises(InputError):
        build_matching_instance(dec, (2,))


def test_find_matching():
    dec = decompose_degree_two(TRIANGLE, (0, 1))
    full = find_matching(build_matching_instance(dec, (0, 1)))
    assert full.ok and full.matching == (1, 2)
    idle = find_matching(build_matching_instance(dec, ()))
    assert idle.matching == (0, 1)
    thin = decompose_degree_two(
        MonomialIdeal.from_strings(3, ["x1*x2", "x2*x3"]), (0, 2)
    )
    stuck = find_matching(build_matching_instance(thin, (0, 1)))
    assert not stuck.ok and stuck.matching is None
    assert stuck.deficient == (0, 1)


def test_hall_condition_on_random_ideals():
    # height-g input admits a perfect matching for every subset of positions
    rng = random.Random(53)
    for _ in range(60):
        n = rng.randint(2, 6)
        ideal = quadratic_ideal(rng, n, 8)
        prime = sorted(minimal_primes(ideal)[0])
        dec = decompose_degree_two(ideal, prime)
        for mask in range(1 << dec.g):
            active = tuple(j for j in range(dec.g) if mask >> j & 1)
            inst = find_matching(build_matching_instance(dec, active))
            assert inst.ok
            assert check_height_inequality(dec, active)


def test_sample_forms():
    dec = decompose_degree_two(TRIANGLE, (0, 1))
    forms = sample_forms(dec, seed=0)
    assert len(forms) == 2
    assert forms[0].coefficients[0] == 0
    assert all(1 <= forms[0].coefficients[v] <= 32 for v in (1, 2))
    # singleton spaces are normalized, not sampled
    assert forms[1].coefficients == (0, 0, 1)
    squares = MonomialIdeal.from_strings(3, ["x1^2", "x2^2", "x3^2"])
    dec2 = decompose_degree_two(squares, (0, 1, 2))
    for j, form in enumerate(sample_forms(dec2, seed=7)):
        assert form.coefficients == tuple(1 if v == j else 0 for v in range(3))


def test_certify_examples():
    empty = certify_transversal_ranks((), ())
    assert empty.ok and empty.subsets_checked == 1
    l1 = LinearForm((0, 1, 1))
    l2 = LinearForm((0, 0, 1))
    cert = certify_transversal_ranks((0, 1), (l1, l2))
    assert cert.ok and cert.subsets_checked == 4
    assert cert.failing_subset is None and cert.field_name == "Q"
    bad = certify_transversal_ranks((0, 1), (LinearForm((0, 1, 0)),) * 2)
    assert not bad.ok and bad.failing_subset == ()
    with pytest.raises(InputError):
        certify_transversal_ranks((0, 1), (l1,))


def test_certify_depends_on_field():
    # over GF(2) the two forms become equal
    l1 = LinearForm((0, 1, 1))
    l2 = LinearForm((0, 1, 3))
    assert certify_transversal_ranks((0, 1), (l1, l2), QQ).ok
    assert not certify_transversal_ranks((0, 1), (l1, l2), GF(2)).ok


def test_products_of_monomials():
    prod = monomial_as_product(Monomial((2, 1, 0)))
    assert [f.coefficients for f in prod.factors] == [
        (1, 0, 0), (1, 0, 0), (0, 1, 0),
    ]
    with pytest.raises(InputError):
        monomial_as_product(Monomial((0, 0)))


def test_regular_sequence_criterion_negative():
    a = monomial_as_product(Monomial((2, 1, 0)))
    b = monomial_as_product(Monomial((0, 2, 1)))
    ok, witness = is_regular_sequence_of_products((a, b))
    assert not ok
    assert witness.choice == (2, 0) and witness.rank == 1
    assert [f.coefficients for f in witness.forms] == [(0, 1, 0), (0, 1, 0)]


def test_regular_sequence_criterion_positive():
    a = monomial_as_product(Monomial((1, 1, 0, 0)))
    b = monomial_as_product(Monomial((0, 0, 1, 1)))
    assert is_regular_sequence_of_products((a, b)) == (True, None)
    assert is_regular_sequence_of_products((a,)) == (True, None)
    assert is_regular_sequence_of_products(()) == (True, None)
    with pytest.raises(InputError):
        is_regular_sequence_of_products((a, monomial_as_product(Monomial((1, 1)))))


def test_cubic_ideal_has_no_regular_pair_of_monomials():
    # height 2, but every pair of generators shares a linear factor up to
    # the transversal criterion, so no two generators form a regular sequence
    ideal = MonomialIdeal.from_strings(3, ["x1^2*x2", "x1*x3^2", "x2^2*x3"])
    gens = ideal.generators
    assert [str(m) for m in gens] == ["x1^2*x2", "x1*x3^2", "x2^2*x3"]
    assert height(ideal) == 2
    expected_witness = {
        (0, 1): ((1, 0, 0), (1, 0, 0)),
        (0, 2): ((0, 1, 0), (0, 1, 0)),
        (1, 2): ((0, 0, 1), (0, 0, 1)),
    }
    for (i, j), coeffs in expected_witness.items():
        ok, witness = is_regular_sequence_of_products(
            (monomial_as_product(gens[i]), monomial_as_product(gens[j]))
        )
        assert not ok
        assert tuple(f.coefficients for f in witness.forms) == coeffs
        assert witness.rank == 1


def test_find_regular_sequence_squares():
    squares = MonomialIdeal.from_strings(3, ["x1^2", "x2^2", "x3^2"])
    cert = find_regular_sequence(squares)
    assert cert.ok and cert.prime == (0, 1, 2)
    assert cert.subsets_checked == 8 and cert.attempts == 1
    prods = cert.products()
    assert len(prods) == 3
    for i, p in enumerate(prods):
        assert all(
            f.coefficients == tuple(1 if v == i else 0 for v in range(3))
            for f in p.factors
        )


def test_find_regular_sequence_triangle():
    cert = find_regular_sequence(TRIANGLE, seed=0)
    assert cert.ok and cert.prime == (0, 1)
    assert cert.seed == 0 and cert.attempts == 1
    assert cert.subsets_checked == 4
    assert cert.forms[1].coefficients == (0, 0, 1)
    c0 = cert.forms[0].coefficients
    assert c0[0] == 0 and c0[1] > 0 and c0[2] > 0
    ok, witness = is_regular_sequence_of_products(cert.products())
    assert ok and witness is None


def test_find_regular_sequence_octahedron_ideal():
    ideal = MonomialIdeal.from_strings(6, ["x1*x2", "x3*x4", "x5*x6"])
    cert = find_regular_sequence(ideal)
    assert cert.ok and cert.prime == (0, 2, 4)
    products = {
        tuple(sorted(f.coefficients.index(1) for f in p.factors))
        for p in cert.products()
    }
    assert products == {(0, 1), (2, 3), (4, 5)}


def test_find_regular_sequence_is_deterministic():
    a = find_regular_sequence(TRIANGLE, seed=11)
    b = find_regular_sequence(TRIANGLE, seed=11)
    assert a == b
    assert find_regular_sequence(TRIANGLE, seed=12).ok


def test_prime_override():
    cert = find_regular_sequence(TRIANGLE, prime=(1, 2))
    assert cert.ok and cert.prime == (1, 2)
    with pytest.raises(InputError, match="not a minimal prime"):
        find_regular_sequence(TRIANGLE, prime=(0,))
    path = MonomialIdeal.from_strings(3, ["x1*x2", "x2*x3"])
    assert find_regular_sequence(path, prime=(1,)).prime == (1,)
    with pytest.raises(InputError, match="height is 1"):
        find_regular_sequence(path, prime=(0, 2))


def test_field_choice():
    cert = find_regular_sequence(TRIANGLE, field=GF(5))
    assert cert.ok and cert.field_name == "GF(5)"
    ok, _ = is_regular_sequence_of_products(cert.products(), GF(5))
    assert ok


def test_rejects_out_of_scope_input():
    with pytest.raises(InputError):
        find_regular_sequence(MonomialIdeal.from_strings(2, []))
    with pytest.raises(InputError):
        find_regular_sequence(MonomialIdeal.from_strings(2, ["1"]))
    with pytest.raises(InputError, match="offending: x1"):
        find_regular_sequence(MonomialIdeal.from_strings(2, ["x1", "x1*x2"]))


def test_hard_cap_on_prime_size():
    n = 21
    squares = MonomialIdeal.from_strings(n, [f"x{i}^2" for i in range(1, n + 1)])
    with pytest.raises(BudgetExceededError):
        find_regular_sequence(squares)


def test_random_ideals_yield_certified_sequences():
    rng = random.Random(59)
    for _ in range(80):
        n = rng.randint(2, 7)
        ideal = quadratic_ideal(rng, n, 10)
        g = height(ideal)
        cert = find_regular_sequence(ideal, seed=rng.randrange(1 << 30))
        assert cert.ok and len(cert.forms) == g
        products = cert.products()
        # independent re-check of regularity, enumerating factor choices
        ok, witness = is_regular_sequence_of_products(products)
        assert ok, witness
        # every product expands to monomials inside the ideal
        for p, form in zip(cert.prime, cert.forms):
            for v, c in enumerate(form.coefficients):
                if c:
                    exps = [0] * n
                    exps[p] += 1
                    exps[v] += 1
                    assert ideal.contains(Monomial(tuple(exps)))
