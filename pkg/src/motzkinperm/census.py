"""Cross-source census reports and the package-wide self-check registry.

A census report pulls the same numbers from up to three independent sources
— direct enumeration, the continued fraction, and a closed form — and
records whether they agree.  ``check_all`` bundles every cross-check the
package makes into one callable suite, which is what the command-line
``check`` subcommand runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import bell, mobius
from .cfrac import WeightScheme, jfraction_series
from .invert import RecoveryStatus, classify_weights, invert_jfraction, regenerate
from .oracle import (
    MAX_BRUTE_N,
    consecutive_123_distribution,
    distribution,
    members,
    set_partitions,
    sweep_counts,
)
from .paths import enumerate_paths, path_to_perm, perm_to_path
from .perms import random_permutation, stats
from .schemes import scheme_for
from .sequences import (
    baxter_numbers,
    closed_form_counts,
    consecutive_123_avoider_counts,
    genocchi_numbers,
    median_genocchi_numbers,
)
from .subsets import SubsetId

SOURCE_BRUTE = "BruteForce"
SOURCE_CFRAC = "ContinuedFraction"
SOURCE_CLOSED = "ClosedForm"

_SOURCE_TOKENS = {"bf": SOURCE_BRUTE, "cf": SOURCE_CFRAC, "closed": SOURCE_CLOSED}


@dataclass(frozen=True)
class CensusReport:
    """Per-size census values from several sources, with agreement flags."""

    subset: str
    n_max: int
    marks: str
    values: dict[str, list]
    agreements: dict[str, bool]

    @property
    def passing(self) -> bool:
        return all(self.agreements.values())


def census(
    subset: SubsetId,
    n_max: int,
    marks: str = "",
    sources: Iterable[str] = ("bf", "cf", "closed"),
    workers: int | None = None,
    scheme: WeightScheme | None = None,
) -> CensusReport:
    """Compute the class census for sizes 0..n_max from the chosen sources.

    With ``marks`` empty the values are plain counts; otherwise they are
    marker polynomials, and the closed-form source (counts only) is refused.
    ``scheme`` overrides the catalogue scheme, which is how the mutation
    check injects a corrupted one.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    chosen: list[str] = []
    for token in sources:
        if token not in _SOURCE_TOKENS:
            raise ValueError(
                f"unknown source {token!r}; valid sources: bf, cf, closed"
            )
        name = _SOURCE_TOKENS[token]
        if name not in chosen:
            chosen.append(name)
    if not chosen:
        raise ValueError("at least one source is required")
    if marks and SOURCE_CLOSED in chosen:
        raise ValueError("closed forms carry no markers; drop 'closed' or the marks")
    if SOURCE_BRUTE in chosen and n_max > MAX_BRUTE_N:
        raise ValueError(
            f"brute force is capped at size {MAX_BRUTE_N}; requested {n_max}"
        )

    values: dict[str, list] = {}
    if SOURCE_BRUTE in chosen:
        if marks:
            values[SOURCE_BRUTE] = [
                distribution(n, subset, marks, workers) for n in range(n_max + 1)
            ]
        else:
            values[SOURCE_BRUTE] = [
                sweep_counts(n)[subset] for n in range(n_max + 1)
            ]
    if SOURCE_CFRAC in chosen:
        sch = scheme if scheme is not None else scheme_for(subset, marks)
        series = sch.series(n_max)
        if marks:
            values[SOURCE_CFRAC] = list(series.coeffs)
        else:
            values[SOURCE_CFRAC] = [c.value_at_ones() for c in series.coeffs]
    if SOURCE_CLOSED in chosen:
        closed = closed_form_counts(subset, n_max)
        if closed is not None:
            values[SOURCE_CLOSED] = closed

    present = [s for s in chosen if s in values]
    agreements: dict[str, bool] = {}
    for i, a in enumerate(present):
        for b in present[i + 1 :]:
            agreements[f"{a}={b}"] = values[a] == values[b]
    return CensusReport(subset.value, n_max, marks, values, agreements)


# -- the self-check suite ----------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, failures: list[str]) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures[:4]))
    return CheckResult(name, True)


def _check_path_bijection(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    for n in range(0, min(max_n, 6) + 1):
        seen: set[str] = set()
        for values in members(n, SubsetId.ALL):
            path = perm_to_path(values)
            if path_to_perm(path).values != values:
                failures.append(f"round trip broke on {values}")
            seen.add(path.to_text())
        expected = {p.to_text() for p in enumerate_paths(n)}
        if seen != expected:
            failures.append(f"image mismatch at n={n}")
    for n in range(7, min(max_n, MAX_BRUTE_N) + 1):
        for _ in range(100):
            values = random_permutation(n, rng)
            if path_to_perm(perm_to_path(values)).values != values:
                failures.append(f"round trip broke on {values}")
    return _result("path-bijection", failures)


def _check_full_class_census(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    cap = min(max_n, 6)
    for marks in ("xvwt", "xvwq"):
        series = scheme_for(SubsetId.ALL, marks).series(cap)
        for n in range(cap + 1):
            want = distribution(n, SubsetId.ALL, marks)
            if series[n] != want:
                failures.append(f"marks {marks} disagree at n={n}")
    return _result("census-full-class", failures)


def _check_subset_censuses(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    cap = min(max_n, 7)
    schemes = {subset: scheme_for(subset, "") for subset in SubsetId}
    series = {subset: sch.counts(cap) for subset, sch in schemes.items()}
    closed = {subset: closed_form_counts(subset, cap) for subset in SubsetId}
    for n in range(cap + 1):
        counted = sweep_counts(n)
        for subset in SubsetId:
            if series[subset][n] != counted[subset]:
                failures.append(
                    f"{subset.value} fraction says {series[subset][n]} at n={n}, "
                    f"enumeration says {counted[subset]}"
                )
            formula = closed[subset]
            if formula is not None and formula[n] != counted[subset]:
                failures.append(
                    f"{subset.value} closed form says {formula[n]} at n={n}, "
                    f"enumeration says {counted[subset]}"
                )
    return _result("census-subsets", failures)


def _check_consecutive_123(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    cap = min(max_n, 6)
    series = scheme_for("Consecutive123", "w").series(cap)
    avoiders = consecutive_123_avoider_counts(cap)
    for n in range(cap + 1):
        want = consecutive_123_distribution(n)
        got = series[n]
        if got != want:
            failures.append(f"run-count distribution disagrees at n={n}")
        if got.substitute(w=0) != avoiders[n]:
            failures.append(f"run-free count disagrees at n={n}")
    return _result("consecutive-123", failures)


def _check_bell_pipeline(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    cap = min(max_n + 1, 7)
    for n in range(1, cap + 1):
        images: set[str] = set()
        for values in members(n, SubsetId.CYCLIC_INCREASING_EXC):
            epath = bell.cycle_to_path(values)
            if bell.path_to_cycle(epath).values != values:
                failures.append(f"cycle path round trip broke on {values}")
            bpath = bell.shorten_path(epath)
            if bell.lengthen_path(bpath).to_text() != epath.to_text():
                failures.append(f"surgery round trip broke on {values}")
            images.add(bell.block_path_to_partition(bpath).to_text())
        expected = {
            bell.SetPartition.of(p).to_text() for p in set_partitions(n - 1)
        }
        if images != expected:
            failures.append(f"partition image mismatch at n={n}")
    return _result("bell-pipeline", failures)


def _check_area_law(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    for n in range(0, min(max_n, 7) + 1):
        for values in members(n, SubsetId.AVOID321):
            if perm_to_path(values).area() != stats(values).inversions:
                failures.append(f"area law broke on {values}")
    return _result("area-law", failures)


def _check_mobius(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    for family in mobius.FAMILIES:
        for n in range(2, min(max_n, 7) + 1):
            formula = mobius.mobius_count(family, n)
            counted = mobius.brute_count(family, n)
            if formula != counted:
                failures.append(
                    f"family {family} at n={n}: formula {formula}, count {counted}"
                )
    return _result("mobius-formulas", failures)


def _check_invert_roundtrip(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    for trial in range(5):
        ell = [rng.randint(0, 3) for _ in range(7)]
        dee = [rng.randint(1, 4) for _ in range(7)]
        series = jfraction_series(
            lambda h: dee[h - 1], lambda h: ell[h], 12, ring="rational"
        )
        rec = invert_jfraction(list(series.coeffs))
        if rec.status is not RecoveryStatus.COMPLETE:
            failures.append(f"trial {trial}: status {rec.status.value}")
            continue
        if list(rec.ell) != ell[:6] or list(rec.dee) != dee[:6]:
            failures.append(f"trial {trial}: recovered weights differ")
        if regenerate(rec) != list(series.coeffs):
            failures.append(f"trial {trial}: regeneration differs")
    return _result("invert-roundtrip", failures)


def _check_reference_recoveries(max_n: int, rng: random.Random) -> CheckResult:
    failures: list[str] = []
    nice = {
        "genocchi": genocchi_numbers(12),
        "median-genocchi": median_genocchi_numbers(12),
        "run-free": consecutive_123_avoider_counts(12),
    }
    for label, terms in nice.items():
        verdict = classify_weights(invert_jfraction(terms))
        if verdict != "nonnegative-integers":
            failures.append(f"{label} classified {verdict}")
    baxter = classify_weights(invert_jfraction(baxter_numbers(12)))
    if baxter != "negative-or-fractional":
        failures.append(f"baxter classified {baxter}")
    return _result("reference-recoveries", failures)


def _check_corrupted_scheme(max_n: int, rng: random.Random) -> CheckResult:
    base = scheme_for(SubsetId.ALL, "")
    bumped = WeightScheme(
        name="All(corrupted)",
        down=lambda h: base.down(h) + (1 if h == 1 else 0),
        level_fixed=base.level_fixed,
        level_upper=base.level_upper,
        level_lower=base.level_lower,
    )
    report = census(SubsetId.ALL, 2, sources=("bf", "cf"), scheme=bumped)
    if report.passing:
        return CheckResult(
            "corrupted-scheme",
            False,
            "a deliberately wrong fall weight went undetected at n=2",
        )
    return CheckResult("corrupted-scheme", True)


_CHECKS: tuple[tuple[str, Callable[[int, random.Random], CheckResult]], ...] = (
    ("path-bijection", _check_path_bijection),
    ("census-full-class", _check_full_class_census),
    ("census-subsets", _check_subset_censuses),
    ("consecutive-123", _check_consecutive_123),
    ("bell-pipeline", _check_bell_pipeline),
    ("area-law", _check_area_law),
    ("mobius-formulas", _check_mobius),
    ("invert-roundtrip", _check_invert_roundtrip),
    ("reference-recoveries", _check_reference_recoveries),
    ("corrupted-scheme", _check_corrupted_scheme),
)


def check_all(max_n: int = 6, seed: int = 0) -> list[CheckResult]:
    """Run every cross-check; a raised exception counts as a failure."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    results = []
    for name, fn in _CHECKS:
        rng = random.Random(seed)
        try:
            results.append(fn(max_n, rng))
        except Exception as exc:  # a crashed check must not hide the rest
            results.append(CheckResult(name, False, f"crashed: {exc}"))
    return results
