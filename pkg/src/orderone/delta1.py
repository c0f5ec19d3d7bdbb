"""CE symbols, the relation system cutting out order one invariants, and the
canonical functions on decorated symbols.

A decorated symbol ``R^a_m`` is a CE type (family R, superscript a) together
with the degree m at the CE.  A function on decorated symbols comes from an
order one invariant exactly when it satisfies the relations in
``RELATIONS``; such a function is determined by its values on ``T2_m``,
``H2_m`` (arbitrary) and ``H1_0``, ``Q2_0`` (2-torsion), which is what
``seven_step_eval`` implements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator

from .abelian import H1_0, Q2_0, GUElement, OElement, Z2, h2, t2, x, y

__all__ = [
    "FAMILIES",
    "InvalidSymbolError",
    "CESymbol",
    "all_symbols",
    "SeedAssignment",
    "seven_step_eval",
    "Violation",
    "RELATIONS",
    "check_relations",
    "GU_SEEDS",
    "g_universal",
    "u_M",
    "u_Q",
    "u_U",
    "u_k_closed",
    "SYMBOL_FUNCTIONS",
]

FAMILIES: dict[str, tuple[int, ...]] = {
    "E": (0, 1, 2),
    "H": (1, 2),
    "T": (0, 1, 2, 3),
    "Q": (2, 3, 4),
}


class InvalidSymbolError(ValueError):
    pass


_SYMBOL_RE = re.compile(r"^([EHTQ])(\d)@([+-]?\d+)$")


@dataclass(frozen=True, order=True)
class CESymbol:
    family: str
    sup: int
    deg: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES or self.sup not in FAMILIES[self.family]:
            raise InvalidSymbolError(f"no CE type {self.family}{self.sup}")
        if isinstance(self.deg, bool) or not isinstance(self.deg, int):
            raise InvalidSymbolError(f"degree must be an integer, got {self.deg!r}")

    @classmethod
    def parse(cls, text: str) -> "CESymbol":
        """Parse ``T3@-2`` style text."""
        m = _SYMBOL_RE.match(text.strip())
        if not m:
            raise InvalidSymbolError(f"cannot parse CE symbol {text!r}")
        return cls(m.group(1), int(m.group(2)), int(m.group(3)))

    def shift(self, dm: int) -> "CESymbol":
        return CESymbol(self.family, self.sup, self.deg + dm)

    def __str__(self) -> str:
        return f"{self.family}{self.sup}@{self.deg}"


def all_symbols(lo: int, hi: int) -> Iterator[CESymbol]:
    """Every valid symbol with lo <= deg <= hi, family-major order."""
    for fam, sups in FAMILIES.items():
        for a in sups:
            for m in range(lo, hi + 1):
                yield CESymbol(fam, a, m)


def _S(fam: str, a: int, m: int) -> CESymbol:
    return CESymbol(fam, a, m)


@dataclass(frozen=True)
class SeedAssignment:
    """Free values from which an element of the relation group is built.

    ``t2`` and ``h2`` give the values on T2_m and H2_m for every m.  ``h1`` and
    ``q2`` are the values on H1_0 and Q2_0 and must satisfy 2v = 0.  Values
    may live in any abelian group whose elements support +, -, integer *, ==.
    """

    t2: Callable[[int], Any]
    h2: Callable[[int], Any]
    h1: Any
    q2: Any

    def __post_init__(self) -> None:
        zero = 0 * self.h1
        for name in ("h1", "q2"):
            v = getattr(self, name)
            if 2 * v != zero:
                raise ValueError(f"{name} seed {v!r} is not 2-torsion")


def seven_step_eval(seed: SeedAssignment, s: CESymbol) -> Any:
    if not isinstance(s, CESymbol):
        raise InvalidSymbolError(f"not a CE symbol: {s!r}")
    fam, a, m = s.family, s.sup, s.deg
    if fam in ("E", "H") and a == 1:
        return seed.h1
    if fam in ("E", "H") and a == 2:
        return seed.h2(m)
    if fam == "E":  # E0
        return -seed.h2(m)
    if fam == "T":
        if a in (1, 2):
            return seed.t2(m)
        return _t3(seed, m)
    if a == 2:
        return seed.q2
    q3 = seed.q2 + seed.t2(m) - seed.t2(m - 1)
    if a == 3:
        return q3
    return q3 + _t3(seed, m) - _t3(seed, m - 1)


def _t3(seed: SeedAssignment, m: int) -> Any:
    return seed.t2(m) + seed.h2(m) - seed.h2(m - 1)


@dataclass(frozen=True)
class Violation:
    relation: str
    m: int
    lhs: Any
    rhs: Any

    def __str__(self) -> str:
        return f"{self.relation} fails at m={self.m}: {self.lhs} != {self.rhs}"


def _twice(v):
    return 2 * v, 0 * v


# (name, function m -> (lhs, rhs)) with g bound at check time
RELATIONS: list[tuple[str, Callable[[Callable, int], tuple[Any, Any]]]] = [
    ("E2_m = H2_m", lambda g, m: (g(_S("E", 2, m)), g(_S("H", 2, m)))),
    ("-E0_m = H2_m", lambda g, m: (-g(_S("E", 0, m)), g(_S("H", 2, m)))),
    ("E1_m = H1_m", lambda g, m: (g(_S("E", 1, m)), g(_S("H", 1, m)))),
    ("T0_m = T3_m", lambda g, m: (g(_S("T", 0, m)), g(_S("T", 3, m)))),
    ("T1_m = T2_m", lambda g, m: (g(_S("T", 1, m)), g(_S("T", 2, m)))),
    ("2H1_m = 0", lambda g, m: _twice(g(_S("H", 1, m)))),
    ("H1_m = H1_{m-1}", lambda g, m: (g(_S("H", 1, m)), g(_S("H", 1, m - 1)))),
    ("2Q2_m = 0", lambda g, m: _twice(g(_S("Q", 2, m)))),
    ("Q2_m = Q2_{m-1}", lambda g, m: (g(_S("Q", 2, m)), g(_S("Q", 2, m - 1)))),
    (
        "H2_m - H2_{m-1} = T3_m - T2_m",
        lambda g, m: (g(_S("H", 2, m)) - g(_S("H", 2, m - 1)), g(_S("T", 3, m)) - g(_S("T", 2, m))),
    ),
    (
        "Q4_m - Q3_m = T3_m - T3_{m-1}",
        lambda g, m: (g(_S("Q", 4, m)) - g(_S("Q", 3, m)), g(_S("T", 3, m)) - g(_S("T", 3, m - 1))),
    ),
    (
        "Q3_m - Q2_m = T2_m - T2_{m-1}",
        lambda g, m: (g(_S("Q", 3, m)) - g(_S("Q", 2, m)), g(_S("T", 2, m)) - g(_S("T", 2, m - 1))),
    ),
]


def check_relations(g: Callable[[CESymbol], Any], degree_window: Iterable[int]) -> list[Violation]:
    """Every relation instance in the window that ``g`` fails."""
    out = []
    for m in degree_window:
        for name, rel in RELATIONS:
            lhs, rhs = rel(g, m)
            if lhs != rhs:
                out.append(Violation(name, m, lhs, rhs))
    return out


GU_SEEDS = SeedAssignment(t2=t2, h2=h2, h1=H1_0, q2=Q2_0)

_ZERO2 = Z2(0)
_M_SEEDS = SeedAssignment(t2=lambda m: _ZERO2, h2=lambda m: _ZERO2, h1=Z2(1), q2=_ZERO2)
_Q_SEEDS = SeedAssignment(t2=lambda m: _ZERO2, h2=lambda m: _ZERO2, h1=_ZERO2, q2=Z2(1))
_U_SEEDS = SeedAssignment(t2=lambda m: 0, h2=lambda m: 1, h1=0, q2=0)


def g_universal(s: CESymbol) -> GUElement:
    return seven_step_eval(GU_SEEDS, s)


def u_M(s: CESymbol) -> Z2:
    """Matching-tangency indicator: 1 exactly on E1 and H1."""
    return seven_step_eval(_M_SEEDS, s)


def u_Q(s: CESymbol) -> Z2:
    """Quadruple-point indicator: 1 exactly on the Q family."""
    return seven_step_eval(_Q_SEEDS, s)


def u_U(s: CESymbol) -> int:
    return seven_step_eval(_U_SEEDS, s)


def u_k_closed(s: CESymbol) -> OElement:
    """Jump of the chamber/triple-point invariant k across a CE, in closed form."""
    if not isinstance(s, CESymbol):
        raise InvalidSymbolError(f"not a CE symbol: {s!r}")
    a, m = s.sup, s.deg
    if s.family in ("E", "H"):
        return x(m + a - 2) - x(m - a)
    if s.family == "T":
        return x(m + a - 3) + x(m - a) + y(m)
    return x(m + a - 4) - x(m - a) + (a - 2) * y(m) + (2 - a) * y(m - 1)


SYMBOL_FUNCTIONS: dict[str, Callable[[CESymbol], Any]] = {
    "gu": g_universal,
    "uk": u_k_closed,
    "um": u_M,
    "uq": u_Q,
    "uu": u_U,
}
