"""Permutations, pattern occurrences, and the exhaustive census oracle.

A permutation of length n is a tuple of the integers 1..n.  A pattern is just
a (usually short) permutation; the empty tuple is the empty pattern and occurs
exactly once in everything.

The census is the ground truth for the whole package: it walks S_n
exhaustively (lexicographically, pruning branches whose prefix already
contains an avoided pattern, which cannot change the count) and tallies
permutations meeting occurrence constraints exactly.  Everything symbolic in
the other modules is ultimately checked against it.

Text format shared with the CLI: a pattern is a compact digit string ("132")
when all values are single digits, otherwise comma-separated values
("10,1,2,..."); "eps" is the empty pattern; pattern sets are
semicolon-separated.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateEntries, LengthTooLarge, ParseError, PreconditionViolated

Pattern = tuple[int, ...]

DEFAULT_MAX_N = 10
_ENV_MAX_N = "PATGF_MAX_N"


def feasibility_bound(override: int | None = None) -> int:
    """The largest n census will enumerate; PATGF_MAX_N overrides the default."""
    if override is not None:
        return override
    env = os.environ.get(_ENV_MAX_N)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"{_ENV_MAX_N} must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_N


def is_permutation(word: Sequence[int]) -> bool:
    """Check that word is a permutation of {1..n}.

    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 3), (1, 1)]]
    [True, True, True, False, False]
    """
    n = len(word)
    return sorted(word) == list(range(1, n + 1))


def validate_permutation(word: Sequence[int]) -> Pattern:
    p = tuple(word)
    if not is_permutation(p):
        raise ParseError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def parse_pattern(text: str) -> Pattern:
    """Parse one pattern: "132", "10,1,2,...", or "eps" for the empty pattern."""
    text = text.strip()
    if text == "eps":
        return ()
    if not text:
        raise ParseError("empty pattern text (use 'eps' for the empty pattern)")
    try:
        if "," in text:
            entries = tuple(int(part) for part in text.split(","))
        else:
            entries = tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise ParseError(f"cannot parse pattern {text!r}") from exc
    if not is_permutation(entries):
        raise ParseError(f"{text!r} is not a permutation of 1..{len(entries)}")
    return entries


def parse_pattern_set(text: str) -> tuple[Pattern, ...]:
    """Parse a semicolon-separated pattern set; blank input is the empty set."""
    text = text.strip()
    if not text:
        return ()
    return canonical_patterns(parse_pattern(part) for part in text.split(";"))


def format_pattern(p: Pattern) -> str:
    if not p:
        return "eps"
    if all(v <= 9 for v in p):
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def format_pattern_set(patterns: Iterable[Pattern]) -> str:
    return ";".join(format_pattern(p) for p in patterns)


def canonical_patterns(patterns: Iterable[Pattern]) -> tuple[Pattern, ...]:
    """Deduplicate and sort patterns by (length, lexicographic)."""
    return tuple(sorted(set(patterns), key=lambda p: (len(p), p)))


@dataclass(frozen=True)
class PatternQuery:
    """Occurrence constraints: avoid all of A, each of B exactly once, each of
    C at least once.  The three sets must be pairwise disjoint."""

    avoid: tuple[Pattern, ...] = ()
    exactly_once: tuple[Pattern, ...] = ()
    at_least_once: tuple[Pattern, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "avoid", canonical_patterns(self.avoid))
        object.__setattr__(self, "exactly_once", canonical_patterns(self.exactly_once))
        object.__setattr__(self, "at_least_once", canonical_patterns(self.at_least_once))
        sets = [set(self.avoid), set(self.exactly_once), set(self.at_least_once)]
        for i in range(3):
            for j in range(i + 1, 3):
                if sets[i] & sets[j]:
                    raise PreconditionViolated(
                        "avoid / exactly-once / at-least-once sets must be disjoint"
                    )

    def with_implicit(self, pattern: Pattern) -> "PatternQuery":
        """The same query with `pattern` adjoined to the avoid set."""
        if pattern in self.avoid:
            return self
        return PatternQuery(self.avoid + (pattern,), self.exactly_once, self.at_least_once)


def count_occurrences(p: Sequence[int], t: Pattern, cap: int | None = None) -> int:
    """Number of subsequences of p order-isomorphic to t.

    The search places t's entries left to right; each candidate value must fall
    in the window forced by the already-placed entries (value-window pruning)
    and enough positions must remain (length pruning).  With `cap`, counting
    stops as soon as `cap` occurrences are found.

    >>> count_occurrences((2, 1, 3), (1, 2))
    2
    >>> count_occurrences((3, 2, 1), (1, 2))
    0
    >>> count_occurrences((1, 3, 2), ())
    1
    """
    k = len(t)
    n = len(p)
    if k == 0:
        return 1
    if k > n:
        return 0
    chosen: list[int | None] = [None] * k
    count = 0

    def rec(j: int, start: int) -> bool:
        nonlocal count
        if j == k:
            count += 1
            return cap is not None and count >= cap
        lo, hi = 0, n + 1
        tj = t[j]
        for i in range(k):
            w = chosen[i]
            if w is None:
                continue
            if t[i] < tj:
                if w > lo:
                    lo = w
            elif w < hi:
                hi = w
        need = k - j
        for pos in range(start, n - need + 1):
            w = p[pos]
            if lo < w < hi:
                chosen[j] = w
                if rec(j + 1, pos + 1):
                    chosen[j] = None
                    return True
                chosen[j] = None
        return False

    rec(0, 0)
    return count


def occurrences(p: Sequence[int], t: Pattern) -> int:
    """Exact occurrence count of pattern t in p."""
    return count_occurrences(p, t)


def contains(p: Sequence[int], t: Pattern) -> bool:
    """True iff t occurs in p at least once."""
    return count_occurrences(p, t, cap=1) >= 1


def avoids_all(p: Sequence[int], patterns: Iterable[Pattern]) -> bool:
    """True iff no pattern in the set occurs in p (vacuously true when empty)."""
    return all(not contains(p, t) for t in patterns)


def _completes(prefix: list[int], v: int, t: Pattern) -> bool:
    """Does appending v to prefix create an occurrence of t ending at v?"""
    k = len(t)
    if k == 1:
        return True
    if k > len(prefix) + 1:
        return False
    chosen: list[int | None] = [None] * k
    chosen[k - 1] = v
    m = len(prefix)

    def rec(j: int, start: int) -> bool:
        if j == k - 1:
            return True
        lo, hi = 0, 1 << 30
        tj = t[j]
        for i in range(k):
            w = chosen[i]
            if w is None:
                continue
            if t[i] < tj:
                if w > lo:
                    lo = w
            elif w < hi:
                hi = w
        need = (k - 1) - j
        for pos in range(start, m - need + 1):
            w = prefix[pos]
            if lo < w < hi:
                chosen[j] = w
                if rec(j + 1, pos + 1):
                    return True
                chosen[j] = None
        return False

    return rec(0, 0)


def _census_branch(avoid: tuple[Pattern, ...], exactly: tuple[Pattern, ...],
                   atleast: tuple[Pattern, ...], n: int, first: int | None) -> int:
    """Count the completions of one first-value branch (or all of S_n).

    The walk is depth-first in lexicographic order.  A value extending the
    current prefix is rejected as soon as it completes an occurrence of an
    avoided pattern, which skips every permutation with that prefix; since any
    occurrence survives in all completions, no counted permutation is lost.
    """
    prefix: list[int] = []
    used = [False] * (n + 1)
    count = 0

    def leaf_ok() -> bool:
        for t in exactly:
            if count_occurrences(prefix, t, cap=2) != 1:
                return False
        for t in atleast:
            if count_occurrences(prefix, t, cap=1) == 0:
                return False
        return True

    def extend():
        nonlocal count
        depth = len(prefix)
        if depth == n:
            if leaf_ok():
                count += 1
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            blocked = False
            for t in avoid:
                if len(t) <= depth + 1 and _completes(prefix, v, t):
                    blocked = True
                    break
            if not blocked:
                used[v] = True
                prefix.append(v)
                extend()
                prefix.pop()
                used[v] = False

    if first is not None:
        used[first] = True
        prefix.append(first)
    extend()
    return count


def census(query: PatternQuery, n: int, *, bound: int | None = None,
           workers: int = 1) -> int:
    """f_{A;B}^C(n): exhaustive count over S_n for the given constraints.

    Raises LengthTooLarge past the feasibility bound (default 10, or
    PATGF_MAX_N) so that an infeasible run is a deliberate decision.
    With workers > 1 the lexicographic range is split by leading value across
    processes; aggregation is additive, so the result is identical.
    """
    limit = feasibility_bound(bound)
    if n > limit:
        raise LengthTooLarge(n, limit)
    if n < 0:
        raise PreconditionViolated("census length must be non-negative")
    if any(len(t) == 0 for t in query.avoid):
        return 0  # the empty pattern occurs in every permutation
    # The empty pattern occurs exactly once in everything: vacuous constraint.
    exactly = tuple(t for t in query.exactly_once if t)
    atleast = tuple(t for t in query.at_least_once if t)
    avoid = tuple(sorted(query.avoid, key=len))
    if workers > 1 and n >= 2:
        args = [(avoid, exactly, atleast, n, v) for v in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_census_worker, args))
    return _census_branch(avoid, exactly, atleast, n, None)


def _census_worker(args) -> int:
    return _census_branch(*args)


def census_series(query: PatternQuery, order: int, *, bound: int | None = None,
                  workers: int = 1) -> list[int]:
    """[f(0), f(1), ..., f(order)] for the query."""
    limit = feasibility_bound(bound)
    if order > limit:
        raise LengthTooLarge(order, limit)
    return [census(query, n, bound=limit, workers=workers) for n in range(order + 1)]


def flatten(word: Sequence[int]) -> Pattern:
    """The unique permutation order-isomorphic to a word of distinct values.

    >>> flatten((5, 7, 6))
    (1, 3, 2)
    >>> flatten(())
    ()
    """
    if len(set(word)) != len(word):
        raise DuplicateEntries(f"cannot flatten {tuple(word)}: repeated values")
    ranks = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(ranks[v] for v in word)


def all_permutations(n: int):
    """Yield S_n in lexicographic order (used by tests; census does not)."""
    from itertools import permutations

    return permutations(range(1, n + 1))
