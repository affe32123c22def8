"""Exact colorings of [1, n]: canonical form, detection, constructions, I/O.

A coloring is stored canonically as a restricted growth string: color ids are
positive integers assigned in order of first occurrence, so position 1 always
holds color 1 and every other position holds at most one more than the
maximum seen so far.  Two label assignments inducing the same partition of
[1, n] canonicalize to the identical Coloring, which is what lets the search
oracle quotient away color renamings.

The serialized form is {"n": <int>, "colors": [<int>, ...]} with one color id
per integer, 1-based; a single whitespace-separated row of labels is accepted
as a plain-text alternative.  Readers take arbitrary positive labels and
canonicalize; writers always emit canonical ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .equations import SchurSolution, enumerate_solutions
from .errors import ColoringParseError, DomainError, EmptyInput
from .formulas import rs_formula, rs_weak_formula


@dataclass(frozen=True)
class Coloring:
    """An exact r-coloring of [1, n] in canonical first-occurrence form."""

    n: int
    colors: tuple[int, ...]  # colors[i - 1] is the color of integer i
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise EmptyInput("a coloring needs at least one element")
        if len(self.colors) != self.n:
            raise DomainError(
                f"expected {self.n} color entries, got {len(self.colors)}"
            )
        top = 0
        for i, c in enumerate(self.colors, start=1):
            if c < 1 or c > top + 1:
                raise DomainError(
                    f"not a restricted growth string: color {c} at position {i} "
                    f"after maximum {top}"
                )
            if c > top:
                top = c
        if top != self.r:
            raise DomainError(f"r = {self.r} but {top} colors actually appear")

    def color_of(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise DomainError(f"{x} is outside [1, {self.n}]")
        return self.colors[x - 1]

    def classes(self) -> list[list[int]]:
        """Color classes as ascending member lists, indexed by color id - 1."""
        out: list[list[int]] = [[] for _ in range(self.r)]
        for x, c in enumerate(self.colors, start=1):
            out[c - 1].append(x)
        return out


def canonicalize(raw: Sequence) -> Coloring:
    """Relabel arbitrary color labels by first occurrence.

    Idempotent, and the result induces exactly the same partition of [1, n]
    as the input.  Labels may be any hashable values.
    """
    labels = list(raw)
    if not labels:
        raise EmptyInput("cannot canonicalize an empty label sequence")
    ids: dict = {}
    out = []
    for lab in labels:
        if lab not in ids:
            ids[lab] = len(ids) + 1
        out.append(ids[lab])
    return Coloring(n=len(out), colors=tuple(out), r=len(ids))


def from_classes(n: int, classes: Iterable[Iterable[int]]) -> Coloring:
    """Build a coloring from disjoint classes that cover [1, n] exactly."""
    label = [0] * (n + 1)
    for cid, members in enumerate(classes, start=1):
        for x in members:
            if not 1 <= x <= n:
                raise DomainError(f"class member {x} is outside [1, {n}]")
            if label[x]:
                raise DomainError(f"{x} appears in two classes")
            label[x] = cid
    missing = [x for x in range(1, n + 1) if not label[x]]
    if missing:
        raise DomainError(f"classes must cover [1, {n}]; missing {missing[:5]}")
    return canonicalize(label[1:])


def surplus_count(c: Coloring) -> int:
    """Number of integers whose color already appeared at a smaller integer.

    For an exact r-coloring this is always n - r: each color is new exactly
    once.
    """
    seen: set[int] = set()
    surplus = 0
    for col in c.colors:
        if col in seen:
            surplus += 1
        else:
            seen.add(col)
    return surplus


def _scan_solutions(
    c: Coloring, m: int, t_target: int | None, distinct: bool
) -> tuple[int, SchurSolution | None]:
    # Repeated values share a color, so a solution's color count is the number
    # of distinct colors over its value set.  The witness returned is the
    # first solution, in (total, lexicographic) order, to reach the reported
    # count.
    colors = c.colors
    best = 0
    witness = None
    for sol in enumerate_solutions(m, c.n, distinct=distinct):
        seen = {colors[v - 1] for v in sol.terms}
        seen.add(colors[sol.total - 1])
        count = len(seen)
        if count > best:
            best = count
            witness = sol
            if t_target is not None and count >= t_target:
                break
    return best, witness


def max_solution_colors(
    c: Coloring, m: int, t_target: int | None = None
) -> tuple[int, SchurSolution | None]:
    """Largest number of distinct colors any solution of E_m shows under c.

    Returns (0, None) when [1, n] holds no solution at all.  When t_target is
    given the scan stops at the first solution with at least that many colors
    and returns it as witness; otherwise the full maximum is computed and the
    witness is the first solution attaining it.
    """
    if m < 3:
        raise DomainError(f"m must be at least 3, got {m}")
    if t_target is not None and t_target < 1:
        raise DomainError(f"t_target must be positive, got {t_target}")
    return _scan_solutions(c, m, t_target, distinct=False)


def has_t_colored_solution(
    c: Coloring, m: int, t: int
) -> tuple[bool, SchurSolution | None]:
    """Does some solution of E_m show at least t distinct colors under c?

    For t = m only solutions with pairwise distinct values can qualify
    (repeated values share a color), so the scan restricts to those.  Returns
    the first qualifying solution as witness, or (False, None).
    """
    if m < 3:
        raise DomainError(f"m must be at least 3, got {m}")
    if not 1 <= t <= m:
        raise DomainError(f"t must lie in [1, m] = [1, {m}], got {t}")
    count, witness = _scan_solutions(c, m, t, distinct=(t == m))
    if count >= t:
        return True, witness
    return False, None


def construct_rainbow_lower(m: int, n: int) -> Coloring:
    """Extremal coloring showing RS_m(n) > rs_formula(m, n) - 1, for m >= 4.

    One block [1, head] with head = n + 2 - rs_formula(m, n), then singletons,
    for exactly rs_formula(m, n) - 1 colors in total.  Every solution with
    strictly increasing summands has its two smallest summands inside the
    block, so no solution is rainbow.
    """
    head = n + 2 - rs_formula(m, n)
    return Coloring(
        n=n,
        colors=tuple([1] * head + list(range(2, n - head + 2))),
        r=n - head + 1,
    )


def construct_weak_lower(t: int, m: int, n: int) -> Coloring:
    """Extremal coloring with rs_weak_formula(t, m, n) - 1 colors and no
    solution showing t distinct colors; needs t >= 3.

    Same shape as the rainbow construction: one block [1, n + 2 - k] plus
    singletons, where k = rs_weak_formula(t, m, n).  At t = m it coincides
    with construct_rainbow_lower.
    """
    if t < 3:
        raise DomainError(
            f"the block construction needs t >= 3, got {t}; "
            "at t = 2 the value is the constant 2"
        )
    k = rs_weak_formula(t, m, n)
    head = n + 2 - k
    return Coloring(
        n=n,
        colors=tuple([1] * head + list(range(2, n - head + 2))),
        r=n - head + 1,
    )


def merge_classes(c: Coloring, c1: int, c2: int) -> Coloring:
    """Unify two color classes and recanonicalize.

    The result is an exact coloring with r - 1 colors.  Merging can only
    lower the number of distinct colors a solution shows, so merges of a
    coloring without t-colored solutions never create one.
    """
    if c1 == c2 or not 1 <= c1 <= c.r or not 1 <= c2 <= c.r:
        raise DomainError(
            f"need two distinct color ids in [1, {c.r}], got {c1} and {c2}"
        )
    return canonicalize([c1 if col == c2 else col for col in c.colors])


def coloring_to_json(c: Coloring) -> str:
    """Serialize in canonical form with stable key order."""
    return json.dumps({"n": c.n, "colors": list(c.colors)}, sort_keys=True)


def coloring_from_json(text: str) -> Coloring:
    """Parse and canonicalize a {"n": ..., "colors": [...]} document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColoringParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ColoringParseError("expected a JSON object with 'n' and 'colors'")
    if "n" not in doc or "colors" not in doc:
        raise ColoringParseError("missing required key 'n' or 'colors'")
    n, labels = doc["n"], doc["colors"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ColoringParseError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(labels, list) or len(labels) != n:
        raise ColoringParseError(f"'colors' must be a list of exactly {n} labels")
    for lab in labels:
        if not isinstance(lab, int) or isinstance(lab, bool) or lab < 1:
            raise ColoringParseError(f"color labels must be positive integers, got {lab!r}")
    return canonicalize(labels)


def coloring_from_text(text: str) -> Coloring:
    """Parse one whitespace-separated row of positive integer labels."""
    fields = text.split()
    if not fields:
        raise ColoringParseError("empty coloring text")
    try:
        labels = [int(f) for f in fields]
    except ValueError as exc:
        raise ColoringParseError(f"labels must be integers: {exc}") from exc
    for lab in labels:
        if lab < 1:
            raise ColoringParseError(f"color labels must be positive, got {lab}")
    return canonicalize(labels)


def parse_coloring(text: str) -> Coloring:
    """Accept either the JSON document form or the plain-text row form."""
    if text.lstrip().startswith("{"):
        return coloring_from_json(text)
    return coloring_from_text(text)
