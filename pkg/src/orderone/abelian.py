"""Exact arithmetic in the coefficient groups of the order one invariants.

Three groups appear:

* ``GUElement``: the universal coefficient group, free abelian on the symbols
  ``t2[m]`` and ``h2[m]`` (m any integer) plus two Z/2 generators ``h1_0`` and
  ``q2_0``.  Its torsion-free part is the subgroup K.
* ``OElement``: the free abelian group on ``x[n]`` and ``y[n]``, where the
  chamber/triple-point invariant k takes its values.
* ``Z2``: integers mod 2, used for the Z/2-valued invariants.

The homomorphisms ``phi`` (G_U -> O), ``F_map`` (O -> K), ``eta`` (K -> Z) and
``theta`` (O -> Z) connect them.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

__all__ = [
    "Z2",
    "GUElement",
    "OElement",
    "t2",
    "h2",
    "H1_0",
    "Q2_0",
    "x",
    "y",
    "ranged_index_list",
    "phi",
    "F_map",
    "eta",
    "theta",
    "in_image_phi",
]


class Z2(int):
    """An integer reduced mod 2 that stays reduced under +, -, and *."""

    def __new__(cls, value: int = 0) -> "Z2":
        return super().__new__(cls, int(value) % 2)

    def __add__(self, other):
        if isinstance(other, int):
            return Z2(int(self) + int(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return Z2(int(self) - int(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Z2(int(other) - int(self))
        return NotImplemented

    def __neg__(self) -> "Z2":
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return Z2(int(self) * int(other))
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Z2({int(self)})"

    def __str__(self) -> str:
        return str(int(self))


def _clean(items: Iterable[tuple[int, int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for k, v in items:
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _combine(a: Mapping[int, int], b: Mapping[int, int], sign: int = 1) -> dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + sign * v
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def _scale(a: Mapping[int, int], n: int) -> dict[int, int]:
    if n == 0:
        return {}
    return {k: n * v for k, v in a.items()}


def _fmt_terms(parts: list[tuple[str, int, int]]) -> str:
    """Render (name, index, coefficient) triples as ``2*h2[0] - x[-1]``."""
    if not parts:
        return "0"
    out = []
    for i, (name, idx, c) in enumerate(parts):
        mag = abs(c)
        term = f"{name}[{idx}]" if idx is not None else name
        if mag != 1:
            term = f"{mag}*{term}"
        if i == 0:
            out.append(term if c > 0 else f"-{term}")
        else:
            out.append(("+ " if c > 0 else "- ") + term)
    return " ".join(out)


def _map_to_json(d: Mapping[int, int]) -> dict[str, int]:
    return {str(k): d[k] for k in sorted(d)}


def _map_from_json(obj, field: str) -> dict[int, int]:
    if obj is None:
        return {}
    if not isinstance(obj, dict):
        raise ValueError(f"{field}: expected an object mapping integers to integers")
    out = []
    for k, v in obj.items():
        try:
            key = int(k)
        except (TypeError, ValueError):
            raise ValueError(f"{field}: key {k!r} is not a decimal integer") from None
        if str(key) != k:
            raise ValueError(f"{field}: key {k!r} is not a decimal integer")
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"{field}[{k}]: coefficient must be an integer")
        out.append((key, v))
    return _clean(out)


class GUElement:
    """Element of G_U = K + Z/2 + Z/2 in canonical (zero-free) form."""

    __slots__ = ("_t", "_h", "_m", "_q")

    def __init__(
        self,
        t: Mapping[int, int] | None = None,
        h: Mapping[int, int] | None = None,
        m_bit: int = 0,
        q_bit: int = 0,
    ) -> None:
        self._t = _clean((t or {}).items())
        self._h = _clean((h or {}).items())
        self._m = int(m_bit) % 2
        self._q = int(q_bit) % 2

    @property
    def t_coef(self) -> dict[int, int]:
        return dict(self._t)

    @property
    def h_coef(self) -> dict[int, int]:
        return dict(self._h)

    @property
    def m_bit(self) -> int:
        return self._m

    @property
    def q_bit(self) -> int:
        return self._q

    @property
    def in_k(self) -> bool:
        """True when both torsion coefficients vanish."""
        return self._m == 0 and self._q == 0

    def free_part(self) -> "GUElement":
        """Projection onto K."""
        return GUElement(self._t, self._h)

    def __add__(self, other):
        if not isinstance(other, GUElement):
            return NotImplemented
        return GUElement(
            _combine(self._t, other._t),
            _combine(self._h, other._h),
            self._m + other._m,
            self._q + other._q,
        )

    def __sub__(self, other):
        if not isinstance(other, GUElement):
            return NotImplemented
        return GUElement(
            _combine(self._t, other._t, -1),
            _combine(self._h, other._h, -1),
            self._m + other._m,
            self._q + other._q,
        )

    def __neg__(self) -> "GUElement":
        return GUElement(_scale(self._t, -1), _scale(self._h, -1), self._m, self._q)

    def __mul__(self, n):
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return GUElement(_scale(self._t, n), _scale(self._h, n), self._m * n, self._q * n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GUElement):
            return NotImplemented
        return (self._t, self._h, self._m, self._q) == (other._t, other._h, other._m, other._q)

    def __hash__(self) -> int:
        return hash((frozenset(self._t.items()), frozenset(self._h.items()), self._m, self._q))

    def __bool__(self) -> bool:
        return bool(self._t or self._h or self._m or self._q)

    def terms(self) -> Iterator[tuple[str, int | None, int]]:
        for k in sorted(self._t):
            yield "t2", k, self._t[k]
        for k in sorted(self._h):
            yield "h2", k, self._h[k]
        if self._m:
            yield "h1_0", None, 1
        if self._q:
            yield "q2_0", None, 1

    def __str__(self) -> str:
        return _fmt_terms(list(self.terms()))

    def __repr__(self) -> str:
        return f"GUElement({self})"

    def to_json(self) -> dict:
        out: dict = {}
        if self._t:
            out["t2"] = _map_to_json(self._t)
        if self._h:
            out["h2"] = _map_to_json(self._h)
        if self._m:
            out["h1_0"] = 1
        if self._q:
            out["q2_0"] = 1
        return out

    @classmethod
    def from_json(cls, obj) -> "GUElement":
        if not isinstance(obj, dict):
            raise ValueError("G_U element must be a JSON object")
        unknown = set(obj) - {"t2", "h2", "h1_0", "q2_0"}
        if unknown:
            raise ValueError(f"unknown G_U field(s): {sorted(unknown)}")
        bits = []
        for name in ("h1_0", "q2_0"):
            b = obj.get(name, 0)
            if b not in (0, 1) or isinstance(b, bool):
                raise ValueError(f"{name}: must be 0 or 1")
            bits.append(b)
        return cls(_map_from_json(obj.get("t2"), "t2"), _map_from_json(obj.get("h2"), "h2"), *bits)


class OElement:
    """Element of the free abelian group on {x[n]} and {y[n]}."""

    __slots__ = ("_x", "_y")

    def __init__(self, x: Mapping[int, int] | None = None, y: Mapping[int, int] | None = None) -> None:
        self._x = _clean((x or {}).items())
        self._y = _clean((y or {}).items())

    @property
    def x_coef(self) -> dict[int, int]:
        return dict(self._x)

    @property
    def y_coef(self) -> dict[int, int]:
        return dict(self._y)

    def __add__(self, other):
        if not isinstance(other, OElement):
            return NotImplemented
        return OElement(_combine(self._x, other._x), _combine(self._y, other._y))

    def __sub__(self, other):
        if not isinstance(other, OElement):
            return NotImplemented
        return OElement(_combine(self._x, other._x, -1), _combine(self._y, other._y, -1))

    def __neg__(self) -> "OElement":
        return OElement(_scale(self._x, -1), _scale(self._y, -1))

    def __mul__(self, n):
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return OElement(_scale(self._x, n), _scale(self._y, n))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, OElement):
            return NotImplemented
        return self._x == other._x and self._y == other._y

    def __hash__(self) -> int:
        return hash((frozenset(self._x.items()), frozenset(self._y.items())))

    def __bool__(self) -> bool:
        return bool(self._x or self._y)

    def terms(self) -> Iterator[tuple[str, int, int]]:
        for k in sorted(self._x):
            yield "x", k, self._x[k]
        for k in sorted(self._y):
            yield "y", k, self._y[k]

    def __str__(self) -> str:
        return _fmt_terms(list(self.terms()))

    def __repr__(self) -> str:
        return f"OElement({self})"

    def to_json(self) -> dict:
        out: dict = {}
        if self._x:
            out["x"] = _map_to_json(self._x)
        if self._y:
            out["y"] = _map_to_json(self._y)
        return out

    @classmethod
    def from_json(cls, obj) -> "OElement":
        if not isinstance(obj, dict):
            raise ValueError("O element must be a JSON object")
        unknown = set(obj) - {"x", "y"}
        if unknown:
            raise ValueError(f"unknown O field(s): {sorted(unknown)}")
        return cls(_map_from_json(obj.get("x"), "x"), _map_from_json(obj.get("y"), "y"))


def t2(m: int) -> GUElement:
    return GUElement(t={m: 1})


def h2(m: int) -> GUElement:
    return GUElement(h={m: 1})


H1_0 = GUElement(m_bit=1)
Q2_0 = GUElement(q_bit=1)


def x(n: int) -> OElement:
    return OElement(x={n: 1})


def y(n: int) -> OElement:
    return OElement(y={n: 1})


def ranged_index_list(two_a: int, two_b: int) -> list[tuple[int, int]]:
    """Signed integers k for the oriented sum over a < k < b.

    Bounds are passed doubled, so ``(-1, 1)`` means a = -1/2, b = 1/2.  For
    a < b every integer strictly between gets sign +1; a == b gives nothing;
    a > b gives the integers strictly between b and a with sign -1.
    """
    if two_a == two_b:
        return []
    sign = 1
    lo, hi = two_a, two_b
    if lo > hi:
        lo, hi, sign = hi, lo, -1
    first = lo // 2 + 1  # smallest k with 2k > lo
    last = -((-hi) // 2) - 1  # largest k with 2k < hi
    return [(k, sign) for k in range(first, last + 1)]


def phi(g: GUElement) -> OElement:
    xs: list[tuple[int, int]] = []
    ys: list[tuple[int, int]] = []
    for m, c in g._h.items():
        xs += [(m, c), (m - 2, -c)]
    for m, c in g._t.items():
        xs += [(m - 1, c), (m - 2, c)]
        ys.append((m, c))
    return OElement(_clean(xs), _clean(ys))


def _F_x(m: int) -> list[tuple[int, int]]:
    # sum over -1/2 < k < floor(m/2) + 1/2 of h2[m - 2k]
    return [(m - 2 * k, s) for k, s in ranged_index_list(-1, 2 * (m // 2) + 1)]


def _F_y_h(m: int) -> list[tuple[int, int]]:
    # h2 part of F(y[m]): minus the sum over -1/2 < k < m - 1/2 of h2[k]
    return [(k, -s) for k, s in ranged_index_list(-1, 2 * m - 1)]


def F_map(o: OElement) -> GUElement:
    """The left inverse of ``phi`` normalised by F(x[-2]) = F(x[-1]) = 0."""
    hs: list[tuple[int, int]] = []
    for m, c in o._x.items():
        hs += [(k, c * s) for k, s in _F_x(m)]
    for m, c in o._y.items():
        hs += [(k, c * s) for k, s in _F_y_h(m)]
    return GUElement(t=dict(o._y), h=_clean(hs))


def eta(g: GUElement) -> int:
    """Sum of the h2 coefficients of an element of K."""
    if not g.in_k:
        raise ValueError(f"eta is defined on K only; got torsion in {g}")
    return sum(g._h.values())


def theta(variant: int, o: OElement) -> int:
    """theta_0 counts even x coefficients, theta_1 odd ones; y counts -1."""
    if variant not in (0, 1):
        raise ValueError("theta variant must be 0 or 1")
    return sum(c for n, c in o._x.items() if n % 2 == variant) - sum(o._y.values())


def in_image_phi(o: OElement) -> bool:
    even = sum(c for n, c in o._x.items() if n % 2 == 0)
    odd = sum(c for n, c in o._x.items() if n % 2 == 1)
    return even == odd == sum(o._y.values())
