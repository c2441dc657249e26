"""Buchberger engine and the ideal-operation suite.

Plain Buchberger with the coprime and chain criteria is enough at desk
scale (2-4 variables, generators of modest degree), and a small kernel
is easier to certify than a clever one.  Everything is deterministic:
a fixed S-pair strategy, canonical sorting of reduced bases, no
randomness.  Iterative loops run under a budget; exceeding it raises
ResourceBudgetError rather than returning a silently truncated answer.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceBudgetError, RingMismatchError
from .ring import (
    DEFAULT_ORDER,
    BlockElimination,
    PolyRing,
    Polynomial,
    leading_term,
    poly_str,
    total_degree,
)


@dataclass
class ResourceBudget:
    """Caps for the iterative algorithms; see REESLAB_BUDGET in the CLI."""

    max_basis: int = 5000
    max_pairs: int = 200000
    truncation_cap: int = 40
    saturation_cap: int = 50


BUDGET = ResourceBudget()


def _exps_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monic(f, order=DEFAULT_ORDER):
    """Scale f so its leading coefficient is 1."""
    _, lc = leading_term(f, order)
    field = f.ring.field
    if lc == field.one:
        return f
    inv = field.invert(lc)
    mul = field.mul
    return Polynomial(f.ring, {e: mul(c, inv) for e, c in f.terms.items()})


def divide(f, divisors, order=DEFAULT_ORDER, with_quotients=False):
    """Multivariate division: f = sum(q_i * divisors[i]) + remainder.

    No remainder term is divisible by the leading term of any divisor.
    Quotients are tracked only on request; the first return value is
    None otherwise.  Candidate terms live in a max-heap keyed by the
    order, with stale entries skipped lazily.
    """
    ring = f.ring
    field = ring.field
    key = order.key
    zero = field.zero
    divs = []
    for idx, g in enumerate(divisors):
        if g.is_zero:
            continue
        if g.ring != ring:
            raise RingMismatchError(f"{ring!r} vs {g.ring!r}")
        le, lc = leading_term(g, order)
        divs.append((sum(le), le, field.invert(lc), g.terms, idx))
    # low-degree leads first so the degree early-break below is sharp
    divs.sort(key=lambda d: (d[0], key(d[1]), d[4]))
    quotients = [{} for _ in divisors] if with_quotients else None
    work = dict(f.terms)
    heap = [(tuple(-c for c in key(e)), e) for e in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, exps = heapq.heappop(heap)
        coeff = work.pop(exps, None)
        if coeff is None:
            continue
        deg = sum(exps)
        reduced = False
        for lead_deg, le, lc_inv, gterms, idx in divs:
            if lead_deg > deg:
                break
            if all(a >= b for a, b in zip(exps, le)):
                shift = tuple(a - b for a, b in zip(exps, le))
                factor = field.mul(coeff, lc_inv)
                if with_quotients:
                    q = quotients[idx]
                    acc = field.add(q.get(shift, zero), factor)
                    if acc == zero:
                        q.pop(shift, None)
                    else:
                        q[shift] = acc
                for ge, gc in gterms.items():
                    tgt = tuple(a + b for a, b in zip(shift, ge))
                    if tgt == exps:
                        continue
                    old = work.get(tgt)
                    if old is None:
                        val = field.neg(field.mul(factor, gc))
                        if val != zero:
                            work[tgt] = val
                            heapq.heappush(
                                heap, (tuple(-c for c in key(tgt)), tgt)
                            )
                    else:
                        val = field.sub(old, field.mul(factor, gc))
                        if val == zero:
                            del work[tgt]
                        else:
                            work[tgt] = val
                reduced = True
                break
        if not reduced:
            remainder[exps] = coeff
    rem = Polynomial(ring, remainder)
    if not with_quotients:
        return None, rem
    return [Polynomial(ring, q) for q in quotients], rem


def normal_form(f, divisors, order=DEFAULT_ORDER):
    """Remainder of f on division by the given polynomials."""
    if isinstance(divisors, GroebnerBasis):
        order = divisors.order
        divisors = divisors.polys
    return divide(f, divisors, order)[1]


def s_polynomial(f, g, order=DEFAULT_ORDER):
    """Cancel the leading terms of f and g against their lcm."""
    ef, cf = leading_term(f, order)
    eg, cg = leading_term(g, order)
    lcm = _exps_lcm(ef, eg)
    field = f.ring.field
    a = Polynomial(
        f.ring, {tuple(l - e for l, e in zip(lcm, ef)): field.invert(cf)}
    )
    b = Polynomial(
        g.ring, {tuple(l - e for l, e in zip(lcm, eg)): field.invert(cg)}
    )
    return a * f - b * g


def buchberger(gens, order=DEFAULT_ORDER, budget=None):
    """Reduced Groebner basis of the ideal spanned by the generators.

    Normal selection strategy: pairs are popped by lcm total degree,
    then the order key of the lcm, then generator indices.  Pairs with
    coprime leads are never queued; the chain criterion drops a pair
    when a third basis element divides its lcm and both flanking pairs
    were already treated.
    """
    budget = budget or BUDGET
    ring = None
    basis = []
    seen = set()
    for g in gens:
        if g.is_zero:
            continue
        if ring is None:
            ring = g.ring
        elif g.ring != ring:
            raise RingMismatchError(f"{ring!r} vs {g.ring!r}")
        m = monic(g, order)
        if m not in seen:
            seen.add(m)
            basis.append(m)
    if not basis:
        return []
    key = order.key
    leads = [leading_term(g, order)[0] for g in basis]
    heap = []
    pending = set()
    pushes = 0

    def queue_pairs(t):
        nonlocal pushes
        lt = leads[t]
        # the s-polynomial of two single terms cancels identically, so
        # such pairs are treated without ever entering the queue
        single_t = len(basis[t].terms) == 1
        for i in range(t):
            if _coprime(leads[i], lt):
                continue
            if single_t and len(basis[i].terms) == 1:
                continue
            lcm = _exps_lcm(leads[i], lt)
            heapq.heappush(heap, (sum(lcm), key(lcm), i, t))
            pending.add((i, t))
            pushes += 1
        if pushes > budget.max_pairs:
            raise ResourceBudgetError(
                f"S-pair budget {budget.max_pairs} exceeded; "
                "raise REESLAB_BUDGET"
            )

    for t in range(len(basis)):
        queue_pairs(t)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lcm = _exps_lcm(leads[i], leads[j])
        skip = False
        for l in range(len(basis)):
            if l == i or l == j or not _divides(leads[l], lcm):
                continue
            a = (i, l) if i < l else (l, i)
            b = (j, l) if j < l else (l, j)
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r.is_zero:
            continue
        basis.append(monic(r, order))
        leads.append(leading_term(r, order)[0])
        if len(basis) > budget.max_basis:
            raise ResourceBudgetError(
                f"basis size budget {budget.max_basis} exceeded; "
                "raise REESLAB_BUDGET"
            )
        queue_pairs(len(basis) - 1)
    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    # minimalize, tail-reduce each element against the rest, sort
    key = order.key
    by_lead = sorted(basis, key=lambda g: key(leading_term(g, order)[0]))
    minimal = []
    min_leads = []
    for g in by_lead:
        lg = leading_term(g, order)[0]
        if any(_divides(l, lg) for l in min_leads):
            continue
        minimal.append(g)
        min_leads.append(lg)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others, order) if others else g
        reduced.append(monic(r, order))
    reduced.sort(key=lambda g: key(leading_term(g, order)[0]))
    return reduced


class GroebnerBasis:
    """A reduced basis with its order; iterates over the polynomials."""

    __slots__ = ("ring", "order", "polys", "lead_exps")

    def __init__(self, ring, order, polys):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self.lead_exps = tuple(leading_term(p, order)[0] for p in self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def normal_form(self, f):
        return divide(f, self.polys, self.order)[1]

    def contains(self, f):
        if f.is_zero:
            return True
        return self.normal_form(f).is_zero

    @property
    def is_unit(self):
        # a reduced basis of the unit ideal is exactly [1]
        return bool(self.polys) and total_degree(self.polys[0]) == 0

    def max_lead_degree(self):
        return max((sum(e) for e in self.lead_exps), default=0)


class Ideal:
    """A finitely generated ideal with cached reduced bases.

    The generator list keeps its given order (zeros dropped, duplicates
    collapsed); value-level questions go through a Groebner basis,
    cached per monomial order.  Cache writes are idempotent, so sharing
    an Ideal across threads is safe.
    """

    __slots__ = ("ring", "gens", "_gb", "_cache")

    def __init__(self, ring, gens=()):
        polys = []
        seen = set()
        for g in gens:
            if isinstance(g, (int, Fraction)):
                g = ring.const(g)
            if not isinstance(g, Polynomial):
                raise TypeError(f"cannot use {g!r} as an ideal generator")
            if g.ring != ring:
                raise RingMismatchError(f"{ring!r} vs {g.ring!r}")
            if g.is_zero or g in seen:
                continue
            seen.add(g)
            polys.append(g)
        self.ring = ring
        self.gens = tuple(polys)
        self._gb = {}
        self._cache = {}

    def __repr__(self):
        inner = ", ".join(poly_str(g) for g in self.gens)
        return f"ideal({inner or '0'})"

    def groebner(self, order=DEFAULT_ORDER):
        gb = self._gb.get(order)
        if gb is None:
            gb = GroebnerBasis(self.ring, order, buchberger(self.gens, order))
            self._gb[order] = gb
        return gb

    def contains(self, f):
        if isinstance(f, (int, Fraction)):
            f = self.ring.const(f)
        return self.groebner().contains(f)

    def contains_ideal(self, other):
        gb = self.groebner()
        return all(gb.contains(g) for g in other.gens)

    @property
    def is_zero(self):
        return not self.gens

    def is_unit(self):
        if not self.gens:
            return False
        return self.groebner().is_unit


def zero_ideal(ring):
    return Ideal(ring, ())


def unit_ideal(ring):
    return Ideal(ring, (ring.one,))


def _same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring!r} vs {b.ring!r}")


def membership(f, a):
    """Is f in the ideal (normal form against its basis vanishes)?"""
    return a.contains(f)


def ideal_equal(a, b):
    """Value equality via mutual generator membership."""
    _same_ring(a, b)
    return a.contains_ideal(b) and b.contains_ideal(a)


def ideal_sum(a, b):
    _same_ring(a, b)
    return Ideal(a.ring, a.gens + b.gens)


def ideal_product(a, b):
    _same_ring(a, b)
    prods = [f * g for f in a.gens for g in b.gens]
    return Ideal(a.ring, interreduce(prods))


def ideal_power(a, n):
    """a^n with per-ideal caching; n = 0 gives the unit ideal."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("power must be a nonnegative integer")
    cached = a._cache.get(("power", n))
    if cached is not None:
        return cached
    if n == 0:
        result = unit_ideal(a.ring)
    elif n == 1:
        result = a
    else:
        result = ideal_product(ideal_power(a, n - 1), a)
    a._cache[("power", n)] = result
    return result


# beyond this many general generators the quadratic NF sweep is skipped
_INTERREDUCE_NF_CAP = 300


def interreduce(polys, order=DEFAULT_ORDER):
    """Trim a generator list without changing the ideal it spans.

    Monomial lists are cut to their minimal generators exactly; general
    lists are greedily normal-formed against what is already kept.
    """
    live = []
    seen = set()
    for g in polys:
        if g is None or g.is_zero:
            continue
        g = monic(g, order)
        if g not in seen:
            seen.add(g)
            live.append(g)
    if not live:
        return []
    if all(g.is_monomial for g in live):
        exps = sorted(
            (next(iter(g.terms)) for g in live),
            key=lambda e: (sum(e), order.key(e)),
        )
        kept = []
        for e in exps:
            if not any(_divides(k, e) for k in kept):
                kept.append(e)
        ring = live[0].ring
        one = ring.field.one
        return [Polynomial(ring, {e: one}) for e in kept]
    if len(live) > _INTERREDUCE_NF_CAP:
        return live
    live.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    kept = []
    for g in live:
        r = normal_form(g, kept, order) if kept else g
        if not r.is_zero:
            kept.append(monic(r, order))
    return kept


def _fresh_name(ring, base):
    name = base
    k = 0
    while name in ring.variables:
        name = f"{base}{k}"
        k += 1
    return name


def _lift(f, ext, offset, nold):
    # embed f, placing old variable i at position offset + i of ext
    pre = (0,) * offset
    post = (0,) * (ext.nvars - offset - nold)
    return Polynomial(ext, {pre + e + post: c for e, c in f.terms.items()})


def intersection(a, b):
    """a ∩ b via the auxiliary-variable elimination construction."""
    _same_ring(a, b)
    ring = a.ring
    if a.is_zero or b.is_zero:
        return zero_ideal(ring)
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    tname = _fresh_name(ring, "t")
    ext = PolyRing((tname,) + ring.variables, ring.field)
    n = ring.nvars
    t = ext.var(tname)
    one_minus_t = ext.one - t
    gens = [t * _lift(f, ext, 1, n) for f in a.gens]
    gens += [one_minus_t * _lift(g, ext, 1, n) for g in b.gens]
    gb = buchberger(gens, BlockElimination(1))
    out = []
    for p in gb:
        if all(e[0] == 0 for e in p.terms):
            out.append(Polynomial(ring, {e[1:]: c for e, c in p.terms.items()}))
    return Ideal(ring, out)


def colon(a, b):
    """a : b, intersecting (a ∩ (g))/g over the generators g of b."""
    _same_ring(a, b)
    if b.is_zero:
        raise ValueError("colon by the zero ideal")
    ring = a.ring
    if a.is_zero:
        return zero_ideal(ring)
    result = None
    for g in b.gens:
        if a.contains(g):
            continue  # a : (g) is the unit ideal
        meet = intersection(a, Ideal(ring, (g,)))
        qgens = []
        for h in meet.gens:
            qs, rem = divide(h, [g], with_quotients=True)
            if not rem.is_zero:
                raise ArithmeticError(
                    "member of an intersection with (g) must divide by g"
                )
            qgens.append(qs[0])
        piece = Ideal(ring, qgens)
        result = piece if result is None else intersection(result, piece)
    if result is None:
        return unit_ideal(ring)
    return result


def saturation(a, b, budget=None):
    """(a : b^infinity, number of colon steps until the chain is stable)."""
    budget = budget or BUDGET
    current = a
    for steps in range(budget.saturation_cap + 1):
        nxt = colon(current, b)
        if ideal_equal(nxt, current):
            return current, steps
        current = nxt
    raise ResourceBudgetError(
        f"saturation not stable within {budget.saturation_cap} steps; "
        "raise REESLAB_BUDGET"
    )


def eliminate(a, drop):
    """Generators of a ∩ K[kept variables], in the smaller ring."""
    ring = a.ring
    drop = list(drop)
    if not drop:
        raise ValueError("no variables to eliminate")
    if len(set(drop)) != len(drop):
        raise ValueError("duplicate variables to eliminate")
    for v in drop:
        ring.var_index(v)
    dropset = set(drop)
    keep = [v for v in ring.variables if v not in dropset]
    if not keep:
        raise ValueError("cannot eliminate every variable")
    first = [v for v in ring.variables if v in dropset]
    ext = PolyRing(tuple(first + keep), ring.field)
    perm = [ring.var_index(v) for v in ext.variables]
    k = len(first)

    def move(f):
        return Polynomial(
            ext, {tuple(e[i] for i in perm): c for e, c in f.terms.items()}
        )

    gb = buchberger([move(g) for g in a.gens], BlockElimination(k))
    target = PolyRing(tuple(keep), ring.field)
    out = []
    for p in gb:
        if all(all(x == 0 for x in e[:k]) for e in p.terms):
            out.append(Polynomial(target, {e[k:]: c for e, c in p.terms.items()}))
    return Ideal(target, out)


def radical_membership(f, a):
    """Is f in the radical of a (inverse-variable trick, ideal reaches 1)?"""
    ring = a.ring
    if isinstance(f, (int, Fraction)):
        f = ring.const(f)
    if f.ring != ring:
        raise RingMismatchError(f"{ring!r} vs {f.ring!r}")
    if f.is_zero:
        return True
    if a.contains(f):
        return True
    zname = _fresh_name(ring, "z")
    ext = PolyRing(ring.variables + (zname,), ring.field)
    n = ring.nvars
    z = ext.var(zname)
    gens = [_lift(g, ext, 0, n) for g in a.gens]
    gens.append(ext.one - z * _lift(f, ext, 0, n))
    gb = buchberger(gens, DEFAULT_ORDER)
    return bool(gb) and total_degree(gb[0]) == 0
