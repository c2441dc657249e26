"""Brute-force references for monomial-ideal arithmetic.

Everything here works on plain exponent tuples so the answers cannot
share code paths with the library.  Counting routines refuse to answer
unless they can certify their own bound.
"""

from itertools import product


def minimalize(exps):
    """Drop exponents divisible by another; sorted for stable compare."""
    exps = sorted(set(map(tuple, exps)))
    keep = []
    for e in exps:
        if not any(
            f != e and all(a >= b for a, b in zip(e, f)) for f in exps
        ):
            keep.append(e)
    return sorted(keep)


def divides(e, f):
    return all(a <= b for a, b in zip(e, f))


def member(e, gens):
    return any(divides(g, e) for g in gens)


def intersect(a, b):
    out = [
        tuple(max(x, y) for x, y in zip(e, f))
        for e in a
        for f in b
    ]
    return minimalize(out)


def colon(a, b):
    """Componentwise a - b clipped at zero, intersected over b's gens."""
    result = None
    for f in b:
        piece = minimalize(
            tuple(max(x - y, 0) for x, y in zip(e, f)) for e in a
        )
        result = piece if result is None else intersect(result, piece)
    return minimalize(result)


def colon_maximal(a, nvars):
    """Colon by the ideal of all the variables."""
    units = [
        tuple(1 if j == i else 0 for j in range(nvars))
        for i in range(nvars)
    ]
    return colon(a, units)


def saturate(a, nvars, cap=60):
    """Iterate colon by the variable ideal; (stable gens, strict steps)."""
    current = minimalize(a)
    steps = 0
    for _ in range(cap):
        bigger = colon_maximal(current, nvars)
        if bigger == current:
            return current, steps
        current = bigger
        steps += 1
    raise RuntimeError("saturation did not stabilize within the cap")


def degree_tuples(nvars, degree):
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree + 1):
        for rest in degree_tuples(nvars - 1, degree - first):
            out.append((first, *rest))
    return out


def colength(a, nvars):
    """Count of monomials outside a; None when infinite."""
    a = minimalize(a)
    box = []
    for i in range(nvars):
        pures = [e[i] for e in a if all(x == 0 for j, x in enumerate(e) if j != i)]
        if not pures:
            return None
        box.append(min(pures))
    count = 0
    for e in product(*(range(b) for b in box)):
        if not member(e, a):
            count += 1
    return count


def quotient_bound(a, b, nvars, cap=60):
    """Least N with every degree-N multiple of a's gens inside b.

    Certifies that any monomial of a whose degree exceeds
    max-gen-degree + N already lies in b; None when no such N exists
    under the cap, meaning the quotient is not finite there.
    """
    for n in range(cap):
        shifts = degree_tuples(nvars, n)
        ok = True
        for g in a:
            for s in shifts:
                if not member(tuple(x + y for x, y in zip(g, s)), b):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return n
    return None


def subquotient(a, b, nvars):
    """Count of monomials in a but not b; None when infinite."""
    a = minimalize(a)
    b = minimalize(b)
    n = quotient_bound(a, b, nvars)
    if n is None:
        return None
    top = max(sum(g) for g in a) + n
    count = 0
    for d in range(top):
        for e in degree_tuples(nvars, d):
            if member(e, a) and not member(e, b):
                count += 1
    return count


def random_exps(rng, nvars, max_gens, max_deg, allow_trivial=False):
    """A random minimal monomial generating set, nonempty."""
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            d = rng.randint(0 if allow_trivial else 1, max_deg)
            e = [0] * nvars
            for _ in range(d):
                e[rng.randrange(nvars)] += 1
            gens.append(tuple(e))
        gens = minimalize(gens)
        if gens:
            return gens


def exps_to_ideal(ring, exps):
    from reeslab import Ideal

    return Ideal(ring, tuple(ring.monomial(e) for e in exps))


def ideal_to_exps(ideal):
    """Exponents of a monomial ideal's generators, minimalized."""
    out = []
    for g in ideal.gens:
        terms = list(g.terms)
        assert len(terms) == 1, "not a monomial ideal"
        out.append(terms[0])
    return minimalize(out)
