"""Explicit bases of the graded quotients, the 5373540-element table of the
9-letter degree-9 diagram space, and the even-run experiment.

Basis selection is greedy over lexicographic word order with exact rank
updates; the rank can never exceed the formula dimension, so the row spaces
involved stay small even when the word blocks are large.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .chains import Chain, Multidegree, Word
from .dims import h_dim_multidegree, h_dim_total, witt_multidegree
from .linalg import RowSpace
from .moves import eta_word
from .quotients import canonical_l, canonical_prime
from .scalars import InputError, ResourceLimitError

DEFAULT_MAX_BLOCK = 2_000_000


def enum_words(m, max_block: int = DEFAULT_MAX_BLOCK) -> list[Word]:
    """All words with the given multidegree, in lexicographic order."""
    md = tuple(m)
    if not md or any(x < 0 for x in md):
        raise InputError(f"bad multidegree {m!r}")
    total = sum(md)
    count = factorial(total)
    for x in md:
        count //= factorial(x)
    if count > max_block:
        raise ResourceLimitError(
            f"multidegree {md} has {count} words, over the bound {max_block}")
    letters = []
    for letter, x in enumerate(md, start=1):
        letters.extend([letter] * x)
    return sorted(set(permutations(letters)))


@dataclass
class BasisSet:
    """Selected representatives with the rank data certifying them."""

    multidegree: Multidegree
    space: str
    words: list[Word]
    certificate: dict

    def to_dict(self) -> dict:
        return {
            "multidegree": list(self.multidegree),
            "space": self.space,
            "dimension": len(self.words),
            "words": [list(w) for w in self.words],
            "certificate": self.certificate,
        }


def _eta_row(word: Word) -> dict[Word, int]:
    return dict(eta_word(word))


def lie_basis(m, max_block: int = DEFAULT_MAX_BLOCK) -> BasisSet:
    """Greedy lexicographic selection of words with independent left-fold
    canonical forms; the count matches the necklace number."""
    md = tuple(m)
    target = witt_multidegree(md)
    space = RowSpace()
    chosen: list[Word] = []
    for word in enum_words(md, max_block):
        if space.rank == target:
            break
        if space.insert(_eta_row(word)):
            chosen.append(word)
    if len(chosen) != target:
        raise ArithmeticError(
            f"basis selection found {len(chosen)} words, formula says {target}")
    return BasisSet(md, "lie", chosen, {"rank": len(chosen), "target": target})


def _prime_row(p: int, word: Word):
    image = canonical_prime(Chain.of_word(p, word)).image
    return dict(image.terms)


def h_basis(m, max_block: int = DEFAULT_MAX_BLOCK) -> BasisSet:
    """Greedy lexicographic selection of words with independent primed
    canonical forms; certified against the re-attachment kernel dimension."""
    md = tuple(m)
    p = len(md)
    target = h_dim_multidegree(md)
    space = RowSpace()
    chosen: list[Word] = []
    for word in enum_words(md, max_block):
        if space.rank == target:
            break
        if space.insert(_prime_row(p, word)):
            chosen.append(word)
    if len(chosen) != target:
        raise ArithmeticError(
            f"basis selection found {len(chosen)} words, formula says {target}")
    certificate = {"rank": len(chosen), "target": target,
                   "ell_kernel_dim": _ell_kernel_dim(md)}
    if certificate["ell_kernel_dim"] != target:
        raise ArithmeticError("re-attachment kernel dimension disagrees with the formula")
    return BasisSet(md, "h", chosen, certificate)


def _ell_kernel_dim(md: Multidegree) -> int:
    """dim ker of the re-attachment map on (Lie part) tensor (letters), per
    multidegree: ambient rank minus image rank, all by exact row reduction."""
    p = len(md)
    ambient = RowSpace()
    image = RowSpace()
    for letter, count in enumerate(md, start=1):
        if count < 1:
            continue
        left_md = md[:letter - 1] + (count - 1,) + md[letter:]
        if sum(left_md) == 0:
            ambient.insert({((), letter): 1})
            image.insert({(letter,): 1})
            continue
        for u in enum_words(left_md):
            row = {(w, letter): c for w, c in eta_word(u).items()}
            if not row:
                continue
            ambient.insert(row)
            appended = Chain(p, {w + (letter,): c for w, c in eta_word(u).items()})
            lie = canonical_l(appended)
            image.insert({w: c for w, c in lie.chain.terms.items()})
    return ambient.rank - image.rank


# The degree-9, 9-letter table: letter-usage patterns (zeros suppressed,
# sorted ascending) with their printed aggregate counts. An aggregate is
# (number of ways to assign distinct letters to the pattern) times the
# per-assignment dimension.
SECTION4_LINES: list[tuple[tuple[int, ...], int]] = [
    ((1, 1, 1, 1, 1, 1, 1, 1, 1), 5040),
    ((1, 1, 1, 1, 1, 1, 1, 2), 181440),
    ((1, 1, 1, 1, 1, 1, 3), 211680),
    ((1, 1, 1, 1, 1, 4), 105840),
    ((1, 1, 1, 1, 5), 26460),
    ((1, 1, 1, 6), 3528),
    ((1, 1, 7), 252),
    ((1, 1, 1, 1, 1, 2, 2), 952560),
    ((1, 1, 1, 1, 2, 3), 1058400),
    ((1, 1, 1, 2, 4), 264600),
    ((1, 1, 2, 5), 31752),
    ((1, 1, 1, 2, 2, 2), 1058400),
    ((1, 1, 2, 2, 3), 793800),
    ((1, 1, 1, 3, 3), 176400),
    ((1, 1, 3, 4), 52920),
    ((1, 2, 2, 2, 2), 196560),
    ((1, 2, 2, 4), 77112),
    ((1, 2, 6), 1512),
    ((1, 2, 3, 3), 105840),
    ((1, 3, 5), 3528),
    ((1, 4, 4), 2016),
    ((2, 2, 2, 3), 51408),
    ((2, 2, 5), 2268),
    ((2, 3, 4), 8064),
    ((3, 3, 3), 2016),
    ((3, 6), 72),
    ((4, 5), 72),
]

SECTION4_TOTAL = 5373540


def pattern_assignments(pattern: tuple[int, ...], p: int = 9) -> int:
    """Ways to assign distinct letters from 1..p to the parts of a pattern."""
    if len(pattern) > p:
        raise InputError("pattern has more parts than letters")
    count = factorial(p) // factorial(p - len(pattern))
    for value in set(pattern):
        count //= factorial(pattern.count(value))
    return count


def section4_table(p: int = 9, n: int = 9) -> dict:
    """Recompute every line of the degree-9 table and its grand total.

    Each line is checked as assignments(pattern) * per-assignment dimension
    against the printed aggregate, and the grand total against both the
    printed 5373540 and the closed formula.
    """
    if (p, n) != (9, 9):
        raise InputError("the tabulated computation is the degree-9, 9-letter one")
    lines = []
    grand = 0
    for pattern, printed in SECTION4_LINES:
        per = h_dim_multidegree(pattern)
        ways = pattern_assignments(pattern, p)
        computed = ways * per
        grand += computed
        lines.append({
            "pattern": list(pattern),
            "assignments": ways,
            "per_assignment": per,
            "computed": computed,
            "printed": printed,
            "match": computed == printed,
        })
    formula_total = h_dim_total(n, p)
    return {
        "lines": lines,
        "grand_total": grand,
        "printed_total": SECTION4_TOTAL,
        "formula_total": formula_total,
        "match": grand == SECTION4_TOTAL == formula_total and all(l["match"] for l in lines),
    }


@dataclass(frozen=True)
class RunPredicate:
    """One normalization variant of the even-run condition on words.

    leading_one: the word must start with letter 1.
    interior_only: only runs of 2s strictly between two smaller letters are
    constrained (boundary runs exempt); otherwise every maximal run counts.
    generalized: constrain runs of every letter value larger than both
    neighbours, not just runs of 2s.
    """

    name: str
    leading_one: bool = False
    interior_only: bool = False
    generalized: bool = False

    def accepts(self, word: Word) -> bool:
        if self.leading_one and (not word or word[0] != 1):
            return False
        if self.generalized:
            return not self._has_even_general_run(word)
        return not self._has_even_two_run(word)

    def _has_even_two_run(self, word: Word) -> bool:
        i = 0
        n = len(word)
        while i < n:
            if word[i] != 2:
                i += 1
                continue
            j = i
            while j < n and word[j] == 2:
                j += 1
            interior = i > 0 and j < n
            if (j - i) % 2 == 0 and (interior or not self.interior_only):
                return True
            i = j
        return False

    def _has_even_general_run(self, word: Word) -> bool:
        # a block of letters, every one larger than both flanking letters,
        # whose length is even; both flanks must exist, so this form is
        # interior-only by construction
        n = len(word)
        for i in range(n):
            for j in range(i + 2, n):
                block = word[i + 1:j]
                if (j - i - 1) % 2:
                    continue
                if all(x > word[i] and x > word[j] for x in block):
                    return True
        return False


EVENRUN_VARIANTS: list[RunPredicate] = [
    RunPredicate("all_runs_odd"),
    RunPredicate("all_runs_odd_leading_1", leading_one=True),
    RunPredicate("interior_runs_odd", interior_only=True),
    RunPredicate("interior_runs_odd_leading_1", leading_one=True, interior_only=True),
    RunPredicate("general_interior_runs_odd", interior_only=True, generalized=True),
]


def evenrun_experiment(m, variants: list[RunPredicate] | None = None,
                       max_block: int = DEFAULT_MAX_BLOCK) -> dict:
    """Count predicate-passing two-letter words against the necklace number
    and rank-test their canonical forms. Reports matches; asserts nothing."""
    md = tuple(m)
    if len(md) != 2:
        raise InputError("the even-run experiment is about two-letter words")
    target = witt_multidegree(md)
    words = enum_words(md, max_block)
    results = []
    for predicate in variants or EVENRUN_VARIANTS:
        passing = [w for w in words if predicate.accepts(w)]
        space = RowSpace()
        for w in passing:
            space.insert(_eta_row(w))
        results.append({
            "variant": predicate.name,
            "count": len(passing),
            "target_dimension": target,
            "rank": space.rank,
            "independent": space.rank == len(passing),
            "spanning": space.rank == target,
            "matches_dimension": len(passing) == target and space.rank == target,
        })
    return {"multidegree": list(md), "target_dimension": target, "variants": results}
