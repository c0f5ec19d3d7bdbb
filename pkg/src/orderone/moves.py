"""Crossing a CE stratum, seen as a change of census.

Each CE type changes a handful of chambers and triple-point counts near the
CE.  ``census_delta`` tabulates the change from the negative to the positive
side; ``apply_move`` and ``apply_sequence`` replay a CE trace on a census.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .abelian import OElement
from .census import Census
from .delta1 import CESymbol, InvalidSymbolError

__all__ = [
    "MoveNotApplicableError",
    "MoveDelta",
    "census_delta",
    "parse_direction",
    "parse_move",
    "format_move",
    "apply_move",
    "apply_sequence",
]


class MoveNotApplicableError(ValueError):
    def __init__(self, message: str, index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


def _acc(d: dict[int, int], k: int, v: int) -> None:
    s = d.get(k, 0) + v
    if s:
        d[k] = s
    else:
        d.pop(k, None)


@dataclass(frozen=True)
class MoveDelta:
    d_chi: dict[int, int] = field(default_factory=dict)
    d_n: dict[int, int] = field(default_factory=dict)

    def as_o_element(self) -> OElement:
        return OElement(x=self.d_chi, y={m: v // 2 for m, v in self.d_n.items()})

    def __neg__(self) -> "MoveDelta":
        return MoveDelta({m: -v for m, v in self.d_chi.items()}, {m: -v for m, v in self.d_n.items()})

    def __bool__(self) -> bool:
        return bool(self.d_chi or self.d_n)


def census_delta(s: CESymbol) -> MoveDelta:
    if not isinstance(s, CESymbol):
        raise InvalidSymbolError(f"not a CE symbol: {s!r}")
    a, m = s.sup, s.deg
    chi: dict[int, int] = {}
    n: dict[int, int] = {}
    if s.family in ("E", "H"):
        # new 3-cell (or removed 1-handle) above, lost 2-handle (added 1-handle) below
        _acc(chi, m + a - 2, 1)
        _acc(chi, m - a, -1)
    elif s.family == "T":
        _acc(chi, m + a - 3, 1)
        _acc(chi, m - a, 1)
        _acc(n, m, 2)
    else:
        # simplex of degree m-a replaced by one of degree m+a-4; triple points re-labelled
        _acc(chi, m + a - 4, 1)
        _acc(chi, m - a, -1)
        _acc(n, m, 2 * a - 4)
        _acc(n, m - 1, 4 - 2 * a)
    return MoveDelta(chi, n)


def parse_direction(d) -> int:
    if d in (1, "+", "positive", "pos"):
        return 1
    if d in (-1, "-", "negative", "neg"):
        return -1
    raise ValueError(f"direction must be positive or negative, got {d!r}")


def parse_move(text: str) -> tuple[CESymbol, int]:
    """Parse ``T3@0:+`` into a symbol and a sign."""
    sym, sep, d = text.strip().rpartition(":")
    if not sep:
        raise ValueError(f"move {text!r} lacks a ':+' or ':-' direction")
    return CESymbol.parse(sym), parse_direction(d)


def format_move(s: CESymbol, direction: int) -> str:
    return f"{s}:{'+' if direction > 0 else '-'}"


def apply_move(c: Census, s: CESymbol, direction=1) -> Census:
    sign = parse_direction(direction)
    delta = census_delta(s)
    chi = dict(c.chi)
    n = dict(c.n)
    for m, v in delta.d_chi.items():
        _acc(chi, m, sign * v)
    for m, v in delta.d_n.items():
        _acc(n, m, sign * v)
    bad = sorted(m for m, v in n.items() if v < 0)
    if bad:
        raise MoveNotApplicableError(
            f"move not applicable: {format_move(s, sign)} leaves a negative triple-point count at degree(s) {bad}"
        )
    return Census(c.genus, chi, n)


def apply_sequence(c: Census, moves: Iterable[tuple[CESymbol, int]]) -> Census:
    for i, (s, d) in enumerate(moves):
        try:
            c = apply_move(c, s, d)
        except MoveNotApplicableError as exc:
            raise MoveNotApplicableError(f"move #{i}: {exc}", index=i) from None
    return c
