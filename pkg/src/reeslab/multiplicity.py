"""Multiplicities of power quotients against the stabilized colon locus.

The annihilator of outer^n/inner^n stabilizes in radical; its locus
dimension t fixes which normalized coefficient of the inner truncation
function counts.  At t = 0 the quotient has finite length and the
multiplicity is that length itself, which the length engine certifies
directly; the statement that the inner function is eventually this
constant is exactly the degree-zero case of the fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .asymptotics import (
    EventualPolynomial,
    fit_eventual_polynomial,
    normalized_leading_coefficient,
)
from .errors import (
    LengthCertificationError,
    NotStabilizedError,
    PreconditionError,
)
from .groebner import Ideal, ideal_equal, ideal_power, radical_membership
from .lengths import FunctionTable, hilbert_samples, subquotient_length
from .reduction import (
    _require_containment,
    analytic_spread,
    depth_positive,
    grade_cm,
    local_dimension,
    radical_colon_stability,
    reduction_test,
    rees_criterion,
)


def stabilized_colon(outer, inner, n_max=3):
    """The colon proxy whose radical the chain settles on, plus the
    first stable index."""
    report = radical_colon_stability(outer, inner, n_max)
    return report.proxy, report.stable_from


def module_multiplicity(outer, inner, n, t, k_range=None):
    """Multiplicity of outer^n/inner^n sampled against dimension t.

    The inner function k -> length of outer^n/(inner^n + m^k·outer^n)
    is fitted and its normalized coefficient at degree t returned.  For
    t = 0 that function is eventually the certified finite length of
    the quotient itself, which is returned without sampling.
    """
    _require_containment(outer, inner)
    if t < 0:
        raise PreconditionError("dimension must be nonnegative")
    big = ideal_power(outer, n)
    small = ideal_power(inner, n)
    if t == 0:
        return Fraction(
            subquotient_length(big, small, check_containment=False)
        )
    if k_range is None:
        ks = list(range(1, t + 7))
    else:
        ks = list(k_range)
    while True:
        table = hilbert_samples(big, small, range(ks[0], ks[-1] + 1))
        try:
            fit = fit_eventual_polynomial(table.values, table.start)
            break
        except NotStabilizedError:
            if ks[-1] >= t + 15:
                raise
            ks = list(range(ks[0], ks[-1] + 4))
    return normalized_leading_coefficient(fit, t)


@dataclass(frozen=True)
class MultiplicityReport:
    proxy: Ideal
    r: int
    t: int
    e_table: FunctionTable
    e_fit: EventualPolynomial
    verdicts: dict
    hypotheses: dict


def multiplicity_function(outer, inner, n_range=None, stab_n_max=3, window=3):
    """Table and fit of n -> e(outer^n/inner^n), with theorem verdicts.

    The table starts at the stable index r of the colon chain.  Every
    verdict names its hypotheses; ones that cannot be machine-checked
    here are recorded as assumed, failed hypotheses make the verdict
    not applicable.
    """
    _require_containment(outer, inner)
    proxy, r = stabilized_colon(outer, inner, stab_n_max)
    t = 0 if proxy.is_unit() else local_dimension(proxy)
    ns = list(n_range) if n_range is not None else list(range(r, r + 5))
    if ns[0] < r:
        raise PreconditionError(
            f"the multiplicity table starts at the stable index {r}"
        )
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise PreconditionError("sample range must be consecutive ascending")
    values = []
    for n in ns:
        e = module_multiplicity(outer, inner, n, t)
        if e.denominator != 1 or e < 0:
            raise LengthCertificationError(
                f"multiplicity at n={n} is not a nonnegative integer: {e}"
            )
        values.append(int(e))
    table = FunctionTable(ns[0], tuple(values))
    fit = fit_eventual_polynomial(table.values, table.start, window)
    dim = outer.ring.dim
    if not fit.is_zero and fit.degree > dim - t:
        raise PreconditionError(
            "multiplicity growth exceeds dim R - t; internal error"
        )
    verdicts, hypotheses = _verdicts(outer, inner, t, fit, r)
    return MultiplicityReport(proxy, r, t, table, fit, verdicts, hypotheses)


def _reduction_status(outer, inner):
    # (is_reduction, known): a direct hit is final; otherwise the degree
    # criterion decides both ways, unless the table is not certifiable
    direct = reduction_test(outer, inner)
    if direct.is_reduction:
        return True, True
    try:
        crit = rees_criterion(outer, inner)
    except (LengthCertificationError, NotStabilizedError):
        return False, False
    return crit.verdict == "REDUCTION", True


def _verdicts(outer, inner, t, efit, stable_from):
    verdicts = {}
    hypotheses = {}
    if ideal_equal(outer, inner):
        for name in (
            "ci_degree",
            "deviation_one_degree",
            "deviation_one_reduction_iff",
            "height_separation",
        ):
            verdicts[name] = "not_applicable"
        hypotheses["pair_trivial"] = "verified"
        return verdicts, hypotheses
    ring = outer.ring
    dim = ring.dim
    spread = analytic_spread(inner)
    grade = grade_cm(inner)
    deg = -1 if efit.is_zero else efit.degree
    red, red_known = _reduction_status(outer, inner)
    hypotheses["reduction_status_known"] = (
        "verified" if red_known else "failed"
    )

    # complete-intersection count: degree drops exactly on reduction
    if grade == len(inner.gens):
        hypotheses["complete_intersection"] = "verified"
        if not red_known:
            verdicts["ci_degree"] = "inconclusive"
        else:
            expected = spread - 1 if red else spread
            verdicts["ci_degree"] = (
                "verified" if deg == expected else "failed"
            )
    else:
        hypotheses["complete_intersection"] = "failed"
        verdicts["ci_degree"] = "not_applicable"

    # deviation-one statements; the localized spread drop is not
    # machine-checked here and is carried as an assumption
    if spread == grade + 1:
        hypotheses["analytic_deviation_one"] = "verified"
        hypotheses["localized_spread_drop"] = "assumed"
        if red_known and not red:
            verdicts["deviation_one_degree"] = (
                "verified" if deg == spread - 1 else "failed"
            )
        else:
            verdicts["deviation_one_degree"] = "not_applicable"
        dp = depth_positive(inner)
        hypotheses["depth_positive"] = "verified" if dp else "failed"
        hypotheses["spread_equals_dim_minus_one"] = (
            "verified" if spread == dim - 1 else "failed"
        )
        hypotheses["colon_radical_stable_from_one"] = (
            "verified" if stable_from == 1 else "failed"
        )
        if (
            dp
            and spread == dim - 1
            and stable_from == 1
            and red_known
        ):
            ok = red == (deg <= spread - 2)
            verdicts["deviation_one_reduction_iff"] = (
                "verified" if ok else "failed"
            )
        else:
            verdicts["deviation_one_reduction_iff"] = "not_applicable"
    else:
        hypotheses["analytic_deviation_one"] = "failed"
        verdicts["deviation_one_degree"] = "not_applicable"
        verdicts["deviation_one_reduction_iff"] = "not_applicable"

    # a principal ideal has no embedded components here, so when the
    # radicals genuinely differ the growth tracks its height
    if len(inner.gens) == 1:
        hypotheses["principal_unmixed"] = "verified"
        separated = any(
            not radical_membership(g, inner) for g in outer.gens
        )
        hypotheses["radical_strictly_larger"] = (
            "verified" if separated else "failed"
        )
        if separated:
            verdicts["height_separation"] = (
                "verified" if deg == grade else "failed"
            )
        else:
            verdicts["height_separation"] = "not_applicable"
    else:
        hypotheses["principal_unmixed"] = "failed"
        verdicts["height_separation"] = "not_applicable"
    return verdicts, hypotheses
