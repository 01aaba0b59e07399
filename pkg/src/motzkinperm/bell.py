"""From single-cycle permutations through path surgery to set partitions.

Three bijections compose here.  A permutation of [n] forming one cycle with
increasing excedance values encodes as an *elevated* colored path of length
n whose interior stays above the axis: a lower bounce at height h picks one
of h open horizontal rays (colors 0..h-1), an upper bounce always acts on
the oldest vertical ray (color h), and an interior down step picks any open
horizontal ray except the one that would close the cycle early (colors
0..h-2), the cycle finally closing on the last step.  A one-step surgery
turns those elevated paths into *grounded* paths one step shorter, with
down-step colors 0..h-1 and level colors 0..h.  Reading a grounded path left
to right as instructions — open a block, close a singleton, join a block,
join and finish a block — yields a set partition of [n-1].

The three path families are Bell-counted, and every arrow is invertible, so
single-cycle permutations with increasing excedance values biject with set
partitions one size down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .paths import ColoredMotzkinPath, ColoredStep, enumerate_paths
from .perms import DiagonalType, Permutation, _DiagramState, classify_entries, ray_choices
from .subsets import SubsetId, is_member


@dataclass(frozen=True)
class SetPartition:
    """Blocks covering 1..n, each sorted, ordered by smallest element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if list(block) != sorted(block):
                raise ValueError(f"block {block} is not sorted")
            if seen & set(block):
                raise ValueError("blocks overlap")
            seen |= set(block)
        if seen and seen != set(range(1, max(seen) + 1)):
            raise ValueError("blocks do not cover 1..n")
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise ValueError("blocks are not ordered by minimum")

    @classmethod
    def of(cls, blocks: Sequence[Sequence[int]]) -> "SetPartition":
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        return cls(tuple(canon))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse ``"1 9 | 2 | 3 4 7 8"``; an empty string is the partition of nothing."""
        text = text.strip()
        if not text:
            return cls(())
        return cls.of([[int(v) for v in part.split()] for part in text.split("|")])

    def to_text(self) -> str:
        return " | ".join(" ".join(str(v) for v in block) for block in self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


# -- the two path families ---------------------------------------------------


def _elevated_down_colors(h: int) -> int:
    return 1 if h == 1 else h - 1


def _elevated_level_colors(h: int) -> int:
    return h + 1


def _grounded_down_colors(h: int) -> int:
    return h


def _grounded_level_colors(h: int) -> int:
    return h + 1


def validate_cycle_path(path: ColoredMotzkinPath) -> None:
    """Check the elevated-family constraints; raise ValueError otherwise."""
    n = len(path.steps)
    if n == 0:
        raise ValueError("the elevated family has no empty path")
    if n == 1:
        st = path.steps[0]
        if st.letter != "L" or st.color != 0:
            raise ValueError("a length-1 path must be the level step L0")
        return
    height = 0
    for i, st in enumerate(path.steps, start=1):
        last = i == n
        if st.letter == "U":
            height += 1
        elif st.letter == "D":
            if last:
                if st.height != 1 or st.color != 0:
                    raise ValueError("the final step must fall from height 1 with color 0")
            else:
                if st.height < 2 or st.color > st.height - 2:
                    raise ValueError(
                        f"interior down step {i} needs height >= 2 and color "
                        f"<= height-2, got height {st.height} color {st.color}"
                    )
            height -= 1
        else:
            if st.color > st.height:
                raise ValueError(f"level step {i} has color {st.color} > height {st.height}")
        if not last and height < 1:
            raise ValueError(f"interior touches the axis at step {i}")
    if height != 0:
        raise ValueError("path does not return to the axis")


def validate_block_path(path: ColoredMotzkinPath) -> None:
    """Check the grounded-family constraints; raise ValueError otherwise."""
    for i, st in enumerate(path.steps, start=1):
        if st.letter == "D" and st.color > st.height - 1:
            raise ValueError(
                f"down step {i} has color {st.color}, allowed 0..{st.height - 1}"
            )
        if st.letter == "L" and st.color > st.height:
            raise ValueError(f"level step {i} has color {st.color} > height {st.height}")


def enumerate_cycle_paths(n: int) -> Iterator[ColoredMotzkinPath]:
    """The elevated family of length n (Bell-counted one size down)."""
    return enumerate_paths(
        n, _elevated_down_colors, _elevated_level_colors, elevated=True
    )


def enumerate_block_paths(n: int) -> Iterator[ColoredMotzkinPath]:
    """The grounded family of length n (Bell-counted)."""
    return enumerate_paths(n, _grounded_down_colors, _grounded_level_colors)


# -- single-cycle permutations <-> elevated paths ----------------------------


def cycle_to_path(perm: Permutation | Sequence[int]) -> ColoredMotzkinPath:
    """Encode a single-cycle permutation with increasing excedance values."""
    values = perm.values if isinstance(perm, Permutation) else tuple(perm)
    if not is_member(values, SubsetId.CYCLIC_INCREASING_EXC):
        raise ValueError(
            "input must be a single cycle whose excedance values increase "
            "left to right"
        )
    n = len(values)
    entries = classify_entries(values)
    choices = ray_choices(values)
    pairs: list[tuple[str, int]] = []
    for i, ((typ, h), choice) in enumerate(zip(entries, choices), start=1):
        if typ is DiagonalType.OPEN:
            pairs.append(("U", 0))
        elif typ is DiagonalType.FIXED:
            pairs.append(("L", 0))
        elif typ is DiagonalType.UPPER_BOUNCE:
            if choice.j != 1:
                raise AssertionError("upper bounce off the oldest ray expected")
            pairs.append(("L", h))
        elif typ is DiagonalType.LOWER_BOUNCE:
            pairs.append(("L", choice.k - 1))
        else:
            if choice.completes_cycle:
                if i != n:
                    raise AssertionError("cycle closed before the final step")
                pairs.append(("D", 0))
            else:
                if choice.j != 1:
                    raise AssertionError("interior close off the oldest ray expected")
                r = choice.k - 1 - (1 if choice.k > choice.cycle_k else 0)
                pairs.append(("D", r))
    path = ColoredMotzkinPath.from_pairs(pairs)
    validate_cycle_path(path)
    return path


def path_to_cycle(path: ColoredMotzkinPath) -> Permutation:
    """Decode an elevated-family path back to its single-cycle permutation."""
    validate_cycle_path(path)
    n = len(path.steps)
    vals = [0] * n
    state = _DiagramState()
    for i, st in enumerate(path.steps, start=1):
        h = st.height
        if st.letter == "U":
            state.open_rays(i)
        elif st.letter == "L":
            if h == 0:
                vals[i - 1] = i
            elif st.color == h:
                col = state.upper_bounce(1, i)
                vals[col - 1] = i
            else:
                row = state.lower_bounce(st.color + 1, i)
                vals[i - 1] = row
        else:
            if i == n:
                col, row, completed = state.close(1, 1)
                if not completed:
                    raise AssertionError("final close failed to complete the cycle")
            else:
                blocked = state.cycle_k(1)
                k = st.color + 1 if st.color + 1 < blocked else st.color + 2
                col, row, completed = state.close(1, k)
                if completed:
                    raise AssertionError("interior close completed the cycle")
            vals[col - 1] = i
            vals[i - 1] = row
    return Permutation(tuple(vals))


# -- the one-step surgery between the families -------------------------------


def shorten_path(path: ColoredMotzkinPath) -> ColoredMotzkinPath:
    """Elevated family, length n  ->  grounded family, length n-1.

    A level step whose color equals its height is *marked*.  If the path has
    one, the rightmost marked step at height h becomes a down step of color
    h-1 and the final step is dropped; otherwise the leading up step becomes
    a level step of color 0 and the final step is dropped.
    """
    validate_cycle_path(path)
    steps = path.steps
    if len(steps) == 1:
        return ColoredMotzkinPath(())
    marked = [
        i
        for i, st in enumerate(steps)
        if st.letter == "L" and st.color == st.height
    ]
    if marked:
        cut = marked[-1]
        pairs = [(st.letter, st.color) for st in steps[:cut]]
        pairs.append(("D", steps[cut].height - 1))
        pairs.extend((st.letter, st.color) for st in steps[cut + 1 : -1])
    else:
        pairs = [("L", 0)]
        pairs.extend((st.letter, st.color) for st in steps[1:-1])
    out = ColoredMotzkinPath.from_pairs(pairs)
    validate_block_path(out)
    return out


def lengthen_path(path: ColoredMotzkinPath) -> ColoredMotzkinPath:
    """Grounded family, length n  ->  elevated family, length n+1.

    Inverse of :func:`shorten_path`: an empty path becomes the lone level
    step; a path starting with a level step is re-elevated wholesale; and
    otherwise the leftmost down step of maximal color at its height (there
    is always one: the last descent from height 1 qualifies) turns back into
    a marked level step.
    """
    validate_block_path(path)
    steps = path.steps
    if not steps:
        return ColoredMotzkinPath.from_pairs([("L", 0)])
    if steps[0].letter == "L":
        pairs = [("U", 0)]
        pairs.extend((st.letter, st.color) for st in steps[1:])
        pairs.append(("D", 0))
    else:
        cut = next(
            i
            for i, st in enumerate(steps)
            if st.letter == "D" and st.color == st.height - 1
        )
        pairs = [(st.letter, st.color) for st in steps[:cut]]
        pairs.append(("L", steps[cut].height))
        pairs.extend((st.letter, st.color) for st in steps[cut + 1 :])
        pairs.append(("D", 0))
    out = ColoredMotzkinPath.from_pairs(pairs)
    validate_cycle_path(out)
    return out


# -- grounded paths -> set partitions ----------------------------------------


def block_path_to_partition(path: ColoredMotzkinPath) -> SetPartition:
    """Read a grounded-family path as block-building instructions.

    Open blocks are kept oldest-first.  An up step opens a block; a level
    step of color equal to the height closes {i} as a singleton; a level
    step of lower color c joins block c and leaves it open; a down step of
    color c joins block c and closes it.
    """
    validate_block_path(path)
    open_blocks: list[list[int]] = []
    done: list[list[int]] = []
    for i, st in enumerate(path.steps, start=1):
        if st.letter == "U":
            open_blocks.append([i])
        elif st.letter == "L":
            if st.color == st.height:
                done.append([i])
            else:
                open_blocks[st.color].append(i)
        else:
            block = open_blocks.pop(st.color)
            block.append(i)
            done.append(block)
    if open_blocks:
        raise AssertionError("blocks left open on a closed path")
    return SetPartition.of(done)


def cycle_to_partition(perm: Permutation | Sequence[int]) -> SetPartition:
    """The full pipeline: single-cycle permutation of [n] -> partition of [n-1]."""
    return block_path_to_partition(shorten_path(cycle_to_path(perm)))


def weak_exc_partition(perm: Permutation | Sequence[int]) -> SetPartition:
    """Partition of [n] generated by i ~ p(i) at every strict descent i > p(i).

    Restricted to permutations whose weak excedance values increase, this is
    a bijection onto set partitions of [n].
    """
    values = perm.values if isinstance(perm, Permutation) else tuple(perm)
    if not is_member(values, SubsetId.INCREASING_WEAK_EXC):
        raise ValueError(
            "weak excedance values must increase left to right"
        )
    n = len(values)
    parent = list(range(n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, v in enumerate(values, start=1):
        if v < i:
            ra, rb = find(i), find(v)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)
    return SetPartition.of(list(groups.values()))
