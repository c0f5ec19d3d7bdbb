"""Census model of a stable immersion and the invariants computed from it.

A census records the genus of the surface, the Euler characteristic of each
degree-m region of the complement, and the number of triple points of each
degree.  Every formula here (k, f^K, U) depends on the immersion only through
this data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .abelian import GUElement, OElement, Z2, ranged_index_list

__all__ = [
    "ParityError",
    "Census",
    "ValidationReport",
    "k_of",
    "fk_of",
    "u_of",
    "uhat_of",
    "standard_census",
    "mirror",
    "validate",
    "u_mirror_difference",
]


class ParityError(ValueError):
    """A triple-point count is odd, so k and f^K are undefined."""


def _prune(d: Mapping[int, int]) -> dict[int, int]:
    return {int(k): int(v) for k, v in sorted(d.items()) if v}


@dataclass(frozen=True)
class Census:
    genus: int
    chi: dict[int, int] = field(default_factory=dict)
    n: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")
        object.__setattr__(self, "chi", _prune(self.chi))
        object.__setattr__(self, "n", _prune(self.n))
        for m, c in self.n.items():
            if c < 0:
                raise ValueError(f"triple-point count at degree {m} is negative ({c})")

    def __hash__(self) -> int:
        return hash((self.genus, tuple(self.chi.items()), tuple(self.n.items())))

    @property
    def total_triple_points(self) -> int:
        return sum(self.n.values())

    def odd_degrees(self) -> list[int]:
        return [m for m, c in self.n.items() if c % 2]

    def require_even(self) -> None:
        odd = self.odd_degrees()
        if odd:
            raise ParityError(f"odd triple-point count at degree(s) {odd}")

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "chambers": [{"degree": m, "euler": c} for m, c in sorted(self.chi.items())],
            "triple_points": [{"degree": m, "count": c} for m, c in sorted(self.n.items())],
        }

    @classmethod
    def from_json(cls, obj, *, strict: bool = True) -> "Census":
        """Build from the census file format.

        With ``strict`` an odd triple-point count is rejected here; otherwise it
        is kept so that ``validate`` can report it.
        """
        if not isinstance(obj, dict):
            raise ValueError("census: expected a JSON object")
        unknown = set(obj) - {"genus", "chambers", "triple_points"}
        if unknown:
            raise ValueError(f"census: unknown field(s) {sorted(unknown)}")
        if "genus" not in obj:
            raise ValueError("census: missing field 'genus'")
        genus = obj["genus"]
        if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
            raise ValueError("census.genus: must be a non-negative integer")
        chi = _entries(obj.get("chambers", []), "chambers", "euler")
        n = _entries(obj.get("triple_points", []), "triple_points", "count")
        for m, c in n.items():
            if c < 0:
                raise ValueError(f"census.triple_points: negative count at degree {m}")
            if strict and c % 2:
                raise ParityError(f"census.triple_points: odd count {c} at degree {m}")
        return cls(genus, chi, n)


def _entries(items, name: str, value_key: str) -> dict[int, int]:
    if not isinstance(items, list):
        raise ValueError(f"census.{name}: expected a list")
    out: dict[int, int] = {}
    for i, item in enumerate(items):
        if not isinstance(item, dict) or set(item) != {"degree", value_key}:
            raise ValueError(f"census.{name}[{i}]: expected keys 'degree' and '{value_key}'")
        m, v = item["degree"], item[value_key]
        for label, val in (("degree", m), (value_key, v)):
            if isinstance(val, bool) or not isinstance(val, int):
                raise ValueError(f"census.{name}[{i}].{label}: must be an integer")
        if m in out:
            raise ValueError(f"census.{name}: duplicate degree {m}")
        out[m] = v
    return out


def k_of(c: Census) -> OElement:
    c.require_even()
    return OElement(x=c.chi, y={m: v // 2 for m, v in c.n.items()})


def fk_of(c: Census) -> GUElement:
    """f^K straight from the census, term by term."""
    c.require_even()
    h: dict[int, int] = {}
    for m, e in c.chi.items():
        for k, s in ranged_index_list(-1, 2 * (m // 2) + 1):
            h[m - 2 * k] = h.get(m - 2 * k, 0) + s * e
    t: dict[int, int] = {}
    for m, v in c.n.items():
        half = v // 2
        t[m] = half
        for k, s in ranged_index_list(-1, 2 * m - 1):
            h[k] = h.get(k, 0) - s * half
    return GUElement(t=t, h=h)


def u_of(c: Census) -> int:
    c.require_even()
    return sum(e * ((m + 2) // 2) for m, e in c.chi.items()) - sum(m * (v // 2) for m, v in c.n.items())


def uhat_of(c: Census) -> Z2:
    return Z2(u_of(c))


def standard_census(g: int, c_side: int) -> Census:
    """Census of a standard embedding whose compact side has degree ``c_side``."""
    if c_side not in (-1, 1):
        raise ValueError("c_side must be -1 or +1")
    return Census(g, {0: 2 - g, c_side: 1 - g})


def mirror(c: Census) -> Census:
    """Effect of precomposing with an orientation-reversing diffeomorphism."""
    return Census(c.genus, {-m: e for m, e in c.chi.items()}, {3 - m: v for m, v in c.n.items()})


@dataclass(frozen=True)
class ValidationReport:
    genus: int
    odd_degrees: list[int]
    identity_failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.odd_degrees and not self.identity_failures

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "odd_triple_point_degrees": self.odd_degrees,
            "identity_failures": self.identity_failures,
        }


def validate(c: Census) -> ValidationReport:
    """Check parity and the two Euler-characteristic identities.

    These are necessary for the census to come from an immersion; they are not
    known to be sufficient.
    """
    total = c.total_triple_points
    g = c.genus
    even = sum(e for m, e in c.chi.items() if m % 2 == 0)
    odd = sum(e for m, e in c.chi.items() if m % 2 == 1)
    failures = []
    for label, chi_sum, want in (("even", even, 2 - g), ("odd", odd, 1 - g)):
        got = Fraction(2 * chi_sum - total, 2)
        if got != want:
            failures.append(f"{label} degrees: sum chi - N/2 = {got}, expected {want}")
    return ValidationReport(g, c.odd_degrees(), failures)


def u_mirror_difference(c: Census) -> int:
    """U(i o h) - U(i) for orientation-reversing h, valid when ``validate`` passes."""
    return (1 - c.genus) + 2 * (2 - c.genus - u_of(c))
