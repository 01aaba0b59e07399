"""Membership predicates for the permutation families under study.

Each predicate is evaluated directly on the one-line values (the noncrossing
family is the exception: its definition is a discipline on the diagram
replay, so it reads the ray-choice transcript).
"""

from __future__ import annotations

import enum
from typing import Sequence

from .perms import DiagonalType, classify_entries, cycle_list, ray_choices


class SubsetId(enum.Enum):
    ALL = "All"
    CYCLIC = "Cyclic"
    AVOID321 = "Avoid321"
    UNIMODAL_NONCROSSING_NO_NESTED_FP = "UnimodalNoncrossingNoNestedFp"
    NONCROSSING = "Noncrossing"
    INCREASING_EXC = "IncreasingExc"
    INCREASING_WEAK_EXC = "IncreasingWeakExc"
    CYCLIC_INCREASING_EXC = "CyclicIncreasingExc"
    UNIMODAL_CYCLES = "UnimodalCycles"
    UNIMODAL_CYCLES_INCREASING_EXC = "UnimodalCyclesIncreasingExc"
    INCREASING_EXC_AND_DEF = "IncreasingExcAndDef"
    UNIMODAL_NONCROSSING = "UnimodalNoncrossing"
    NO_DOUBLE_EXC_OR_DEF = "NoDoubleExcOrDef"
    INVOLUTIONS = "Involutions"
    INVOLUTIONS321 = "Involutions321"

    @classmethod
    def from_name(cls, name: str) -> "SubsetId":
        for member in cls:
            if member.value == name:
                return member
        raise ValueError(
            f"unknown subset {name!r}; choose from "
            + ", ".join(m.value for m in cls)
        )


def is_cyclic(values: Sequence[int]) -> bool:
    """Single cycle through every element (the empty permutation is not)."""
    return len(values) >= 1 and len(cycle_list(values)) == 1


def avoids_321(values: Sequence[int]) -> bool:
    """No falling triple: no i < j < k with pi(i) > pi(j) > pi(k)."""
    n = len(values)
    if n < 3:
        return True
    # pi(j) is the middle of a falling triple iff something larger precedes it
    # and something smaller follows it.
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 1
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(values[j], suffix_min[j + 1])
    prefix_max = 0
    for j in range(n):
        if prefix_max > values[j] > suffix_min[j + 1]:
            return False
        prefix_max = max(prefix_max, values[j])
    return True


def _increasing(seq: list[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def has_increasing_excedance_values(values: Sequence[int]) -> bool:
    return _increasing([v for i, v in enumerate(values, 1) if v > i])


def has_increasing_weak_excedance_values(values: Sequence[int]) -> bool:
    return _increasing([v for i, v in enumerate(values, 1) if v >= i])


def has_increasing_deficiency_values(values: Sequence[int]) -> bool:
    return _increasing([v for i, v in enumerate(values, 1) if v < i])


def _cycle_unimodal(cycle: Sequence[int]) -> bool:
    # minimum-first: strictly rises, then strictly falls; length <= 2 trivially
    i = 1
    while i < len(cycle) and cycle[i] > cycle[i - 1]:
        i += 1
    while i < len(cycle) and cycle[i] < cycle[i - 1]:
        i += 1
    return i == len(cycle)


def has_unimodal_cycles(values: Sequence[int]) -> bool:
    return all(_cycle_unimodal(c) for c in cycle_list(values))


def has_noncrossing_cycles(values: Sequence[int]) -> bool:
    """The set partition induced by the cycles is noncrossing."""
    n = len(values)
    block_of = [0] * (n + 1)
    mins = {}
    maxs = {}
    for b, cyc in enumerate(cycle_list(values)):
        for i in cyc:
            block_of[i] = b
        mins[b] = min(cyc)
        maxs[b] = max(cyc)
    stack: list[int] = []
    for i in range(1, n + 1):
        b = block_of[i]
        if i == mins[b]:
            stack.append(b)
        if stack[-1] != b:
            return False
        if i == maxs[b]:
            stack.pop()
    return True


def has_nested_fixed_point(values: Sequence[int]) -> bool:
    """Some fixed point j sits under an arc: i < j < k with pi(i)=k or pi(k)=i."""
    n = len(values)
    prefix_max = 0
    suffix_min = [0] * (n + 2)
    suffix_min[n + 1] = n + 1
    for i in range(n, 0, -1):
        suffix_min[i] = min(values[i - 1], suffix_min[i + 1])
    for j in range(1, n + 1):
        v = values[j - 1]
        if v == j and (prefix_max > j or suffix_min[j + 1] < j):
            return True
        prefix_max = max(prefix_max, v)
    return False


def has_no_double_excedance_or_deficiency(values: Sequence[int]) -> bool:
    for i, v in enumerate(values, 1):
        if i < v < values[v - 1]:
            return False
        if i > v > values[v - 1]:
            return False
    return True


def is_involution(values: Sequence[int]) -> bool:
    return all(values[v - 1] == i for i, v in enumerate(values, 1))


def is_noncrossing(values: Sequence[int]) -> bool:
    """Noncrossing discipline on the diagram replay.

    Every LOWER_BOUNCE closes the innermost open horizontal ray, every CLOSE
    closes the two innermost rays and those rays form a chained pair, and no
    UPPER_BOUNCE occurs.
    """
    entries = classify_entries(values)
    choices = ray_choices(values)
    for (typ, h), choice in zip(entries, choices):
        if typ is DiagonalType.UPPER_BOUNCE:
            return False
        if typ is DiagonalType.LOWER_BOUNCE and choice.k != h:
            return False
        if typ is DiagonalType.CLOSE:
            if choice.j != h or choice.k != h or not choice.completes_cycle:
                return False
    return True


def is_member(values: Sequence[int], subset: SubsetId) -> bool:
    if subset is SubsetId.ALL:
        return True
    if subset is SubsetId.CYCLIC:
        return is_cyclic(values)
    if subset is SubsetId.AVOID321:
        return avoids_321(values)
    if subset is SubsetId.UNIMODAL_NONCROSSING_NO_NESTED_FP:
        return (
            has_unimodal_cycles(values)
            and has_noncrossing_cycles(values)
            and not has_nested_fixed_point(values)
        )
    if subset is SubsetId.NONCROSSING:
        return is_noncrossing(values)
    if subset is SubsetId.INCREASING_EXC:
        return has_increasing_excedance_values(values)
    if subset is SubsetId.INCREASING_WEAK_EXC:
        return has_increasing_weak_excedance_values(values)
    if subset is SubsetId.CYCLIC_INCREASING_EXC:
        return is_cyclic(values) and has_increasing_excedance_values(values)
    if subset is SubsetId.UNIMODAL_CYCLES:
        return has_unimodal_cycles(values)
    if subset is SubsetId.UNIMODAL_CYCLES_INCREASING_EXC:
        return has_unimodal_cycles(values) and has_increasing_excedance_values(values)
    if subset is SubsetId.INCREASING_EXC_AND_DEF:
        return has_increasing_excedance_values(values) and has_increasing_deficiency_values(values)
    if subset is SubsetId.UNIMODAL_NONCROSSING:
        return has_unimodal_cycles(values) and has_noncrossing_cycles(values)
    if subset is SubsetId.NO_DOUBLE_EXC_OR_DEF:
        return has_no_double_excedance_or_deficiency(values)
    if subset is SubsetId.INVOLUTIONS:
        return is_involution(values)
    if subset is SubsetId.INVOLUTIONS321:
        return is_involution(values) and avoids_321(values)
    raise ValueError(f"unhandled subset {subset!r}")


def membership_vector(values: Sequence[int]) -> dict[SubsetId, bool]:
    """All fifteen memberships at once, sharing the expensive intermediates."""
    cyclic = is_cyclic(values)
    inc_exc = has_increasing_excedance_values(values)
    unimodal = has_unimodal_cycles(values)
    noncross_cycles = has_noncrossing_cycles(values)
    avoid = avoids_321(values)
    involution = is_involution(values)
    return {
        SubsetId.ALL: True,
        SubsetId.CYCLIC: cyclic,
        SubsetId.AVOID321: avoid,
        SubsetId.UNIMODAL_NONCROSSING_NO_NESTED_FP: (
            unimodal and noncross_cycles and not has_nested_fixed_point(values)
        ),
        SubsetId.NONCROSSING: is_noncrossing(values),
        SubsetId.INCREASING_EXC: inc_exc,
        SubsetId.INCREASING_WEAK_EXC: has_increasing_weak_excedance_values(values),
        SubsetId.CYCLIC_INCREASING_EXC: cyclic and inc_exc,
        SubsetId.UNIMODAL_CYCLES: unimodal,
        SubsetId.UNIMODAL_CYCLES_INCREASING_EXC: unimodal and inc_exc,
        SubsetId.INCREASING_EXC_AND_DEF: (
            inc_exc and has_increasing_deficiency_values(values)
        ),
        SubsetId.UNIMODAL_NONCROSSING: unimodal and noncross_cycles,
        SubsetId.NO_DOUBLE_EXC_OR_DEF: has_no_double_excedance_or_deficiency(values),
        SubsetId.INVOLUTIONS: involution,
        SubsetId.INVOLUTIONS321: involution and avoid,
    }
