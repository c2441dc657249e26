"""Buchberger engine, division, and the ideal-operation suite."""

import random
from fractions import Fraction

import pytest

from oracle import (
    colon as oracle_colon,
    exps_to_ideal,
    ideal_to_exps,
    intersect as oracle_intersect,
    minimalize,
    random_exps,
    saturate as oracle_saturate,
)

from reeslab import (
    BUDGET,
    leading_term,
    GrevLex,
    Ideal,
    Lex,
    PolyRing,
    RationalField,
    ResourceBudget,
    ResourceBudgetError,
    buchberger,
    colon,
    divide,
    eliminate,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    interreduce,
    intersection,
    membership,
    normal_form,
    poly_str,
    radical_membership,
    s_polynomial,
    saturation,
    unit_ideal,
    zero_ideal,
)

R = PolyRing(("x", "y"), RationalField())
x, y = R.gens()
R3 = PolyRing(("x", "y", "z"), RationalField())
x3, y3, z3 = R3.gens()


def random_sparse_poly(rng, ring, max_terms=3, max_deg=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * ring.nvars
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(ring.nvars)] += 1
        terms[tuple(e)] = ring.field.coerce(rng.choice([-3, -2, -1, 1, 2, 3]))
    return ring.from_terms(terms)


def test_division_remainder_and_cofactors():
    f = x**3 * y + x * y**2 + y
    divisors = [x * y - 1, y**2 - 1]
    quotients, remainder = divide(f, divisors, with_quotients=True)
    rebuilt = remainder
    for q, g in zip(quotients, divisors):
        rebuilt = rebuilt + q * g
    assert rebuilt == f
    # no remainder term is divisible by any divisor lead
    for exps in remainder.terms:
        assert not all(a >= b for a, b in zip(exps, (1, 1)))
        assert not all(a >= b for a, b in zip(exps, (0, 2)))


def test_division_keeps_irreducible_heads():
    # heads that no divisor reaches must fall through to the remainder
    _, rem = divide(x**2 + y, [x**2 - y], order=Lex())
    assert rem == 2 * y
    _, rem2 = divide(y**2 + x, [y**3 - 1])
    assert rem2 == y**2 + x


def test_lex_groebner_classic():
    gb = buchberger((x**2 - y, y**2 - 1), order=Lex())
    assert [poly_str(g) for g in gb] == ["y^2 - 1", "x^2 - y"]
    assert normal_form(x**2 + y, gb, Lex()) == 2 * y


def test_groebner_is_monic_reduced_deterministic():
    gens = (x**2 + x * y, x * y**2 - x, y**3 - y)
    first = buchberger(gens)
    second = buchberger(tuple(reversed(gens)))
    assert [poly_str(g) for g in first] == [poly_str(g) for g in second]
    for g in first:
        _, c = max(
            ((e, c) for e, c in g.terms.items()),
            key=lambda item: GrevLex().key(item[0]),
        )
        assert c == Fraction(1)
    # no head divides another, no tail term reducible by another head
    heads = [leading_term(g, GrevLex())[0] for g in first]
    for i, e in enumerate(heads):
        for j, f in enumerate(heads):
            if i != j:
                assert not all(a >= b for a, b in zip(f, e))


def test_spoly_certificate_random():
    rng = random.Random(23)
    for _ in range(30):
        ring = R if rng.random() < 0.5 else R3
        gens = tuple(
            random_sparse_poly(rng, ring)
            for _ in range(rng.randint(1, 3))
        )
        gens = tuple(g for g in gens if not g.is_zero)
        if not gens:
            continue
        gb = Ideal(ring, gens).groebner()
        polys = gb.polys
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                s = s_polynomial(polys[i], polys[j], gb.order)
                assert gb.normal_form(s).is_zero
        for g in gens:
            assert gb.normal_form(g).is_zero


def test_budget_error():
    tiny = ResourceBudget(max_basis=1, max_pairs=200000)
    with pytest.raises(ResourceBudgetError):
        buchberger((x**2 - y, x * y - 1), budget=tiny)
    tiny_pairs = ResourceBudget(max_basis=5000, max_pairs=0)
    with pytest.raises(ResourceBudgetError):
        buchberger((x**2 - y, x * y - 1), budget=tiny_pairs)


def test_membership_and_unit():
    a = Ideal(R, (x**2, y))
    assert membership(x**3 + x * y, a)
    assert not membership(x, a)
    assert not a.is_unit()
    assert unit_ideal(R).is_unit()
    assert zero_ideal(R).is_zero
    assert Ideal(R, (x, x + 1)).is_unit()


def test_ideal_sum_product_power():
    a = Ideal(R, (x,))
    b = Ideal(R, (y,))
    assert ideal_equal(ideal_sum(a, b), Ideal(R, (x, y)))
    assert ideal_equal(ideal_product(a, b), Ideal(R, (x * y,)))
    m = Ideal(R, (x, y))
    m3 = ideal_power(m, 3)
    assert ideal_equal(
        m3, Ideal(R, (x**3, x**2 * y, x * y**2, y**3))
    )
    assert ideal_power(m, 0).is_unit()
    assert ideal_power(m, 1) is m


def test_intersection_colon_saturation_frozen():
    assert ideal_equal(
        intersection(Ideal(R, (x,)), Ideal(R, (y,))), Ideal(R, (x * y,))
    )
    q = colon(Ideal(R, (x**2, y**2)), Ideal(R, (x * y,)))
    assert ideal_equal(q, Ideal(R, (x, y)))
    m = Ideal(R, (x, y))
    sat, steps = saturation(Ideal(R, (x * y**2, x**2 * y)), m)
    assert ideal_equal(sat, Ideal(R, (x * y,)))
    assert steps == 1
    sat2, steps2 = saturation(Ideal(R, (x,)), m)
    assert ideal_equal(sat2, Ideal(R, (x,)))
    assert steps2 == 0


def test_colon_by_zero_rejected():
    with pytest.raises(Exception):
        colon(Ideal(R, (x,)), zero_ideal(R))


def test_eliminate():
    Rt = PolyRing(("t", "x", "y"), RationalField())
    t, xt, yt = Rt.gens()
    a = Ideal(Rt, (xt - t**2, yt - t**3))
    small = eliminate(a, ("t",))
    assert small.ring.variables == ("x", "y")
    sx, sy = small.ring.gens()
    assert ideal_equal(small, Ideal(small.ring, (sx**3 - sy**2,)))


def test_radical_membership():
    a = Ideal(R, (x**2,))
    assert radical_membership(x, a)
    assert not radical_membership(y, a)
    assert radical_membership(x + y, Ideal(R, (x, y**3)))
    assert not radical_membership(x + y, Ideal(R, (x**3 * y**3,)))


def test_interreduce_monomial_and_general():
    polys = interreduce([x**2, x**2 * y, y**3, y**3 * x])
    assert sorted(poly_str(p) for p in polys) == ["x^2", "y^3"]
    polys2 = interreduce([x + y, x - y, x**2])
    assert len(polys2) == 2


def test_adjunction_properties_random():
    rng = random.Random(5)
    for _ in range(25):
        nvars = rng.choice([2, 3])
        ring = R if nvars == 2 else R3
        a = exps_to_ideal(ring, random_exps(rng, nvars, 3, 4))
        b = exps_to_ideal(ring, random_exps(rng, nvars, 2, 3))
        q = colon(a, b)
        # b*(a:b) inside a, and a inside a:b
        for g in ideal_product(b, q).gens:
            assert membership(g, a)
        for g in a.gens:
            assert membership(g, q)
        meet = intersection(a, b)
        for g in meet.gens:
            assert membership(g, a) and membership(g, b)


def test_monomial_ops_match_oracle_sample():
    rng = random.Random(17)
    for _ in range(20):
        nvars = rng.choice([2, 3])
        ring = R if nvars == 2 else R3
        ae = random_exps(rng, nvars, 3, 4)
        be = random_exps(rng, nvars, 3, 4)
        a = exps_to_ideal(ring, ae)
        b = exps_to_ideal(ring, be)
        got = ideal_to_exps(intersection(a, b))
        assert got == oracle_intersect(ae, be)
        got_colon = ideal_to_exps(colon(a, b))
        assert got_colon == minimalize(oracle_colon(ae, be))
        m_gens = Ideal(ring, ring.gens())
        sat, steps = saturation(a, m_gens)
        want_sat, want_steps = oracle_saturate(ae, nvars)
        assert ideal_to_exps(sat) == want_sat
        assert steps == want_steps


def test_groebner_cache_reused():
    a = Ideal(R, (x**2 - y,))
    gb1 = a.groebner()
    gb2 = a.groebner()
    assert gb1 is gb2
