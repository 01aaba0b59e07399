"""Reference integer sequences and closed-form generating functions.

These serve as independent cross-checks for the census machinery: classical
recurrences and binomial formulas on one side, series built from exponentials
and square roots on the other.  A few sequences have no handy closed form and
are produced by running their classical continued-fraction weights forward;
those are pinned against hard-coded prefixes so a defect in the evaluator
cannot silently vandalize both sides of a test.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .cfrac import jfraction_series
from .series import Series
from .subsets import SubsetId


def factorials(n_max: int) -> list[int]:
    return [factorial(n) for n in range(n_max + 1)]


def catalan_numbers(n_max: int) -> list[int]:
    return [comb(2 * n, n) // (n + 1) for n in range(n_max + 1)]


def motzkin_numbers(n_max: int) -> list[int]:
    out = [1]
    for n in range(1, n_max + 1):
        val = out[n - 1]
        for k in range(n - 1):
            val += out[k] * out[n - 2 - k]
        out.append(val)
    return out


def schroder_numbers(n_max: int) -> list[int]:
    """Large Schroder numbers 1, 2, 6, 22, 90, ..."""
    out = [1]
    for n in range(1, n_max + 1):
        val = out[n - 1]
        for k in range(n):
            val += out[k] * out[n - 1 - k]
        out.append(val)
    return out


def central_binomials(n_max: int) -> list[int]:
    return [comb(2 * n, n) for n in range(n_max + 1)]


def central_trinomials(n_max: int) -> list[int]:
    """Coefficient of y^n in (1 + y + y^2)^n."""
    return [
        sum(comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1))
        for n in range(n_max + 1)
    ]


def bell_numbers(n_max: int) -> list[int]:
    out = [1]
    for n in range(n_max):
        out.append(sum(comb(n, k) * out[k] for k in range(n + 1)))
    return out


def no_singleton_partition_counts(n_max: int) -> list[int]:
    """Set partitions with every block of size at least 2: 1, 0, 1, 1, 4, 11, ..."""
    out = [1]
    if n_max >= 1:
        out.append(0)
    for n in range(2, n_max + 1):
        out.append(sum(comb(n - 1, k) * out[n - 1 - k] for k in range(1, n)))
    return out


def derangement_numbers(n_max: int) -> list[int]:
    out = [1]
    if n_max >= 1:
        out.append(0)
    for n in range(2, n_max + 1):
        out.append((n - 1) * (out[n - 1] + out[n - 2]))
    return out


def zigzag_numbers(n_max: int) -> list[int]:
    """Alternating-permutation counts 1, 1, 1, 2, 5, 16, 61, 272, ...

    Boustrophedon recurrence: each triangle row starts at 0 and adds the
    previous row read backwards; the row's last entry is the next term.
    """
    out = [1]
    row = [1]
    for n in range(1, n_max + 1):
        new = [0]
        for k in range(1, n + 1):
            new.append(new[k - 1] + row[n - k])
        row = new
        out.append(row[n])
    return out


def odd_double_factorials(n_max: int) -> list[int]:
    """1, 1, 3, 15, 105, ...: products of the first n odd numbers."""
    out = [1]
    for n in range(1, n_max + 1):
        out.append(out[-1] * (2 * n - 1))
    return out


def even_double_factorials(n_max: int) -> list[int]:
    """1, 2, 8, 48, ...: 2^n times n factorial."""
    return [(1 << n) * factorial(n) for n in range(n_max + 1)]


def labeled_graph_counts(n_max: int) -> list[int]:
    return [1 << comb(n, 2) for n in range(n_max + 1)]


def baxter_numbers(n_max: int) -> list[int]:
    out = [1]
    for n in range(1, n_max + 1):
        total = Fraction(0)
        denom = comb(n + 1, 1) * comb(n + 1, 2)
        for k in range(1, n + 1):
            total += Fraction(
                comb(n + 1, k - 1) * comb(n + 1, k) * comb(n + 1, k + 1), denom
            )
        if total.denominator != 1:
            raise AssertionError(f"non-integer Baxter value at n={n}")
        out.append(int(total))
    return out


def _forward_run(dee, ell, n_max: int, pinned: tuple[int, ...], label: str) -> list[int]:
    series = jfraction_series(dee, ell, n_max, ring="rational")
    values = series.integer_coefficients()
    for i, expect in enumerate(pinned[: n_max + 1]):
        if values[i] != expect:
            raise AssertionError(
                f"{label} forward run disagrees with pinned value at n={i}: "
                f"{values[i]} != {expect}"
            )
    return values


def genocchi_numbers(n_max: int) -> list[int]:
    """1, 1, 3, 17, 155, 2073, ...: tangent-related counts."""
    return _forward_run(
        lambda h: h ** 3 * (h + 1),
        lambda h: (h + 1) * (2 * h + 1),
        n_max,
        (1, 1, 3, 17, 155, 2073, 38227, 929569),
        "genocchi",
    )


def median_genocchi_numbers(n_max: int) -> list[int]:
    """1, 1, 2, 8, 56, 608, ..."""
    return _forward_run(
        lambda h: h ** 4,
        lambda h: 2 * h * (h + 1) + 1,
        n_max,
        (1, 1, 2, 8, 56, 608, 9440, 198272),
        "median genocchi",
    )


def consecutive_123_avoider_counts(n_max: int) -> list[int]:
    """Permutations with no rising run of length three: 1, 1, 2, 5, 17, 70, ..."""
    return _forward_run(
        lambda h: h * h,
        lambda h: h + 1,
        n_max,
        (1, 1, 2, 5, 17, 70, 349, 2017),
        "consecutive-123 avoiders",
    )


# -- closed-form generating functions (exact, over Fraction) ---------------


def _z(order: int) -> Series:
    coeffs = [Fraction(0)] * (order + 1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return Series("rational", tuple(coeffs))


def _const(order: int, c: Fraction | int) -> Series:
    coeffs = [Fraction(c)] + [Fraction(0)] * order
    return Series("rational", tuple(coeffs))


def egf_no_double_step_counts(n_max: int) -> list[int]:
    """Coefficients of exp(z)/cos(z), as plain counts."""
    cos = [Fraction(0)] * (n_max + 1)
    for k in range(0, n_max + 1, 2):
        cos[k] = Fraction((-1) ** (k // 2), factorial(k))
    egf = _z(n_max).exp() * Series("rational", tuple(cos)).recip()
    return egf.egf_to_ogf().integer_coefficients()


def egf_involution_counts(n_max: int) -> list[int]:
    """Coefficients of exp(z + z^2/2), as plain counts."""
    z = _z(n_max)
    half_sq = (z * z).scale(Fraction(1, 2))
    return (z + half_sq).exp().egf_to_ogf().integer_coefficients()


def egf_unimodal_cycle_counts(n_max: int) -> list[int]:
    """Coefficients of exp((exp(2z) + 2z - 1)/4), as plain counts."""
    z = _z(n_max)
    e2z = z.scale(2).exp()
    inner = (e2z + z.scale(2) - _const(n_max, 1)).scale(Fraction(1, 4))
    return inner.exp().egf_to_ogf().integer_coefficients()


def ogf_increasing_exc_def_counts(n_max: int) -> list[int]:
    """Coefficients of 2 / (1 + z + sqrt(1 - 6z + 5z^2))."""
    coeffs = [Fraction(0)] * (n_max + 1)
    coeffs[0] = Fraction(1)
    if n_max >= 1:
        coeffs[1] = Fraction(-6)
    if n_max >= 2:
        coeffs[2] = Fraction(5)
    root = Series("rational", tuple(coeffs)).sqrt()
    denom = _const(n_max, 1) + _z(n_max) + root
    return denom.recip().scale(2).integer_coefficients()


def ogf_catalan_counts(n_max: int) -> list[int]:
    """Coefficients of 2 / (1 + sqrt(1 - 4z)); equals the Catalan numbers."""
    coeffs = [Fraction(0)] * (n_max + 1)
    coeffs[0] = Fraction(1)
    if n_max >= 1:
        coeffs[1] = Fraction(-4)
    root = Series("rational", tuple(coeffs)).sqrt()
    return (_const(n_max, 1) + root).recip().scale(2).integer_coefficients()


def closed_form_counts(subset: SubsetId, n_max: int) -> list[int] | None:
    """Known count formula for a class, or None where no product form exists."""
    if subset is SubsetId.ALL:
        return factorials(n_max)
    if subset is SubsetId.CYCLIC:
        return [0] + [factorial(n - 1) for n in range(1, n_max + 1)]
    if subset in (
        SubsetId.AVOID321,
        SubsetId.UNIMODAL_NONCROSSING_NO_NESTED_FP,
        SubsetId.NONCROSSING,
    ):
        return catalan_numbers(n_max)
    if subset is SubsetId.INCREASING_WEAK_EXC:
        return bell_numbers(n_max)
    if subset is SubsetId.CYCLIC_INCREASING_EXC:
        return [0] + bell_numbers(n_max - 1) if n_max >= 1 else [0]
    if subset is SubsetId.UNIMODAL_CYCLES:
        return egf_unimodal_cycle_counts(n_max)
    if subset in (SubsetId.INCREASING_EXC_AND_DEF, SubsetId.UNIMODAL_NONCROSSING):
        return ogf_increasing_exc_def_counts(n_max)
    if subset is SubsetId.NO_DOUBLE_EXC_OR_DEF:
        return egf_no_double_step_counts(n_max)
    if subset is SubsetId.INVOLUTIONS:
        return egf_involution_counts(n_max)
    if subset is SubsetId.INVOLUTIONS321:
        return [comb(n, n // 2) for n in range(n_max + 1)]
    return None
