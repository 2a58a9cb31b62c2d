"""Brute-force ground truth over Dyck paths.

A Dyck path of semilength n is represented as a word over {"U", "D"} of
length 2n whose prefixes never contain more D's than U's.  This module
enumerates all such words and tallies their UD- and UUD-factor counts into
the empirical coefficient triangle that everything else is checked against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

DEFAULT_CAP = 16


class Provenance(enum.Enum):
    """Which generator produced a coefficient triangle."""

    ORACLE = "oracle"
    FORMULA = "formula"
    REC_FIXED_K = "rec-k"
    REC_FIXED_N = "rec-n"


@dataclass(frozen=True)
class FactorStats:
    """UD/UUD factor counts of one path of semilength n."""

    n: int
    ud_count: int
    uud_count: int


@dataclass(frozen=True)
class CoeffTriangle:
    """Counts of paths of semilength n by (ud_count, uud_count).

    Only nonzero entries are stored.
    """

    n: int
    entries: dict[tuple[int, int], int]
    provenance: Provenance = Provenance.ORACLE

    def total(self) -> int:
        return sum(self.entries.values())

    def row_sum(self, k: int) -> int:
        return sum(v for (kk, _), v in self.entries.items() if kk == k)

    def same_entries(self, other: "CoeffTriangle") -> bool:
        return self.n == other.n and self.entries == other.entries


def is_dyck_word(word: str) -> bool:
    """True iff word is a balanced U/D word never dipping below the axis."""
    height = 0
    for ch in word:
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def _check_cap(n: int, cap: int | None) -> None:
    if n < 0:
        raise ValueError(f"semilength must be nonnegative, got {n}")
    if cap is not None and n > cap:
        raise ValueError(
            f"semilength {n} exceeds the enumeration cap {cap}; "
            f"raise the cap explicitly for a deliberate large run"
        )


def enumerate_paths(n: int, cap: int | None = DEFAULT_CAP):
    """Yield every Dyck word of semilength n exactly once, in lexicographic
    order with U < D."""
    _check_cap(n, cap)
    if n == 0:
        yield ""
        return
    word: list[str] = []
    # DFS stack; D pushed before U so U pops (and is emitted) first.
    stack: list[tuple[str, int, int]] = [("U", 1, 0)]
    while stack:
        step, ups, downs = stack.pop()
        del word[ups + downs - 1 :]
        word.append(step)
        if ups + downs == 2 * n:
            yield "".join(word)
            continue
        if downs < ups:
            stack.append(("D", ups, downs + 1))
        if ups < n:
            stack.append(("U", ups + 1, downs))


def count_factors(word: str) -> FactorStats:
    """Scan a Dyck word and count UD and UUD factor occurrences.

    Every start index is examined independently (occurrences of these
    particular factors can never overlap anyway).
    """
    if not is_dyck_word(word):
        raise ValueError(f"not a Dyck word: {word!r}")
    k = 0
    m = 0
    for i in range(len(word) - 1):
        if word[i] == "U" and word[i + 1] == "D":
            k += 1
            if i > 0 and word[i - 1] == "U":
                m += 1
    return FactorStats(len(word) // 2, k, m)


def oracle_triangle(n: int, cap: int | None = DEFAULT_CAP) -> CoeffTriangle:
    """Exhaustively enumerate all paths of semilength n and tally factor
    counts.

    The walk extends prefixes one step at a time, carrying the UD/UUD counts
    incrementally (appending D after U closes a UD, after UU also a UUD);
    once the U budget is exhausted the all-D tail is folded in directly.
    This is the same sliding-window count as count_factors, fused into the
    enumeration -- the unit tests assert the equivalence path by path.
    """
    _check_cap(n, cap)
    if n == 0:
        return CoeffTriangle(0, {(0, 0): 1}, Provenance.ORACLE)
    counts: dict[tuple[int, int], int] = {}

    def walk(ups: int, downs: int, run: int, k: int, m: int) -> None:
        if ups == n:
            # only D's remain; the first of them closes any open factor
            if downs < n:
                if run >= 1:
                    k += 1
                if run >= 2:
                    m += 1
            key = (k, m)
            counts[key] = counts.get(key, 0) + 1
            return
        walk(ups + 1, downs, run + 1 if run < 2 else 2, k, m)
        if ups > downs:
            walk(ups, downs + 1, 0, k + (1 if run >= 1 else 0), m + (1 if run >= 2 else 0))

    walk(0, 0, 0, 0, 0)
    return CoeffTriangle(n, counts, Provenance.ORACLE)
