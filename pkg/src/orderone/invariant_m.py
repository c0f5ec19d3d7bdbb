"""Differences of M, U and Q for pairs related by a diffeomorphism or for two
embeddings, computed from Z/2 homology data of the surface.

All matrices are expressed in a basis of H_1(F; Z/2) where the intersection
form is ``standard_symplectic(g)``; ``to_standard_basis`` converts data given
relative to another form.  Regular homotopy of the two immersions being
compared is assumed by the caller and cannot be checked from this data.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .abelian import Z2
from .gf2 import GF2Matrix

__all__ = [
    "DiffeoAction",
    "EmbeddingSides",
    "m_diffeo",
    "lagrangian_dual_bases",
    "m_from_bases",
    "m_embeddings",
    "epsilon_pair",
    "epsilon_hat_pair",
    "u_diff_embeddings",
    "uhat_diff_embeddings",
    "q_diff_embeddings",
    "uhat_diff_diffeo",
    "q_diff_diffeo",
    "embedding_quadratic_form",
    "same_quadratic_form",
    "to_standard_basis",
]


def _pairing(u: int, v: int, J: GF2Matrix) -> int:
    return bin(u & J.apply(v)).count("1") & 1


@dataclass(frozen=True)
class DiffeoAction:
    genus: int
    h_star: GF2Matrix
    orientation: str = "preserving"

    def __post_init__(self) -> None:
        n = 2 * self.genus
        if self.h_star.shape != (n, n):
            raise ValueError(f"h_star must be {n}x{n} for genus {self.genus}, got {self.h_star.shape}")
        if self.orientation not in ("preserving", "reversing"):
            raise ValueError("orientation must be 'preserving' or 'reversing'")
        if not self.h_star.is_invertible():
            raise ValueError("h_star is singular")
        J = gf2.standard_symplectic(self.genus)
        if self.h_star.T @ J @ self.h_star != J:
            raise ValueError("h_star does not preserve the intersection form")

    @property
    def epsilon(self) -> int:
        return 0 if self.orientation == "preserving" else 1

    def inverse(self) -> "DiffeoAction":
        return DiffeoAction(self.genus, self.h_star.inverse(), self.orientation)

    def to_json(self) -> dict:
        return {"genus": self.genus, "h_star": self.h_star.to_json(), "orientation": self.orientation}

    @classmethod
    def from_json(cls, obj) -> "DiffeoAction":
        if not isinstance(obj, dict):
            raise ValueError("diffeo: expected a JSON object")
        unknown = set(obj) - {"genus", "h_star", "orientation", "form"}
        if unknown:
            raise ValueError(f"diffeo: unknown field(s) {sorted(unknown)}")
        g = _genus(obj, "diffeo")
        if "h_star" not in obj:
            raise ValueError("diffeo: missing field 'h_star'")
        h = GF2Matrix.from_json(obj["h_star"], "diffeo.h_star")
        if obj.get("form") is not None:
            C = to_standard_basis(GF2Matrix.from_json(obj["form"], "diffeo.form"))
            h = C.inverse() @ h @ C
        return cls(g, h, obj.get("orientation", "preserving"))


@dataclass(frozen=True)
class EmbeddingSides:
    """Maps on H_1 induced by the inclusions into the compact side (``map0``)
    and the non-compact side (``map1``), plus the degree of the compact side."""

    genus: int
    map0: GF2Matrix
    map1: GF2Matrix
    c_side: int

    def __post_init__(self) -> None:
        g = self.genus
        if self.c_side not in (-1, 1):
            raise ValueError("c_side must be -1 or +1")
        for name in ("map0", "map1"):
            m = getattr(self, name)
            if m.cols != 2 * g:
                raise ValueError(f"{name} must have {2 * g} columns for genus {g}")
            if m.cols - m.rank() != g:
                raise ValueError(f"{name}: not a valid side-kernel for genus {g} (kernel dimension {m.cols - m.rank()})")
        A = GF2Matrix.from_vectors(gf2.kernel_packed(self.map0), 2 * g)
        B = GF2Matrix.from_vectors(gf2.kernel_packed(self.map1), 2 * g)
        if (A @ gf2.standard_symplectic(g) @ B.T).rank() != g:
            raise ValueError("cannot form dual basis: the two side kernels pair degenerately")

    def to_json(self) -> dict:
        return {"genus": self.genus, "c_side": self.c_side, "map0": self.map0.to_json(), "map1": self.map1.to_json()}

    @classmethod
    def from_json(cls, obj) -> "EmbeddingSides":
        if not isinstance(obj, dict):
            raise ValueError("embedding: expected a JSON object")
        unknown = set(obj) - {"genus", "c_side", "map0", "map1", "form"}
        if unknown:
            raise ValueError(f"embedding: unknown field(s) {sorted(unknown)}")
        g = _genus(obj, "embedding")
        for key in ("c_side", "map0", "map1"):
            if key not in obj:
                raise ValueError(f"embedding: missing field '{key}'")
        m0 = GF2Matrix.from_json(obj["map0"], "embedding.map0")
        m1 = GF2Matrix.from_json(obj["map1"], "embedding.map1")
        if obj.get("form") is not None:
            C = to_standard_basis(GF2Matrix.from_json(obj["form"], "embedding.form"))
            m0, m1 = m0 @ C, m1 @ C
        return cls(g, m0, m1, obj["c_side"])


def _genus(obj: dict, what: str) -> int:
    g = obj.get("genus")
    if isinstance(g, bool) or not isinstance(g, int) or g < 0:
        raise ValueError(f"{what}.genus: must be a non-negative integer")
    return g


def to_standard_basis(form: GF2Matrix) -> GF2Matrix:
    """Change of basis C (new coords -> old coords) making ``form`` standard."""
    return gf2.symplectic_basis(form)


def m_diffeo(d: DiffeoAction) -> Z2:
    n = 2 * d.genus
    return Z2((d.h_star + gf2.identity(n)).rank())


def lagrangian_dual_bases(
    e: EmbeddingSides,
    a_change: GF2Matrix | None = None,
    b_change: GF2Matrix | None = None,
) -> tuple[GF2Matrix, GF2Matrix]:
    """Bases a_i of ker(map0), b_j of ker(map1) with a_i . b_j = delta_ij.

    Returned as g x 2g matrices whose rows are the vectors.  ``a_change`` and
    ``b_change`` (invertible g x g) replace the default kernel bases before the
    b-basis is dualised against the a-basis.
    """
    g = e.genus
    J = gf2.standard_symplectic(g)
    A = GF2Matrix.from_vectors(gf2.kernel_packed(e.map0), 2 * g)
    B = GF2Matrix.from_vectors(gf2.kernel_packed(e.map1), 2 * g)
    if a_change is not None:
        A = a_change @ A
    if b_change is not None:
        B = b_change @ B
    P = A @ J @ B.T
    # A J (P^-T B)^T = P P^-1 = I
    B = P.inverse().T @ B
    return A, B


def m_from_bases(A: GF2Matrix, B: GF2Matrix, A2: GF2Matrix, B2: GF2Matrix) -> Z2:
    """Dimension mod 2 of the span of a'_i - a_i and b'_i - b_i."""
    return Z2((A + A2).stack(B + B2).rank())


def m_embeddings(
    e: EmbeddingSides,
    e2: EmbeddingSides,
    *,
    changes: tuple[GF2Matrix | None, GF2Matrix | None] = (None, None),
) -> Z2:
    """M(e') - M(e).  ``changes`` optionally re-chooses the a-basis of each side."""
    if e.genus != e2.genus:
        raise ValueError(f"genus mismatch: {e.genus} vs {e2.genus}")
    A, B = lagrangian_dual_bases(e, changes[0])
    A2, B2 = lagrangian_dual_bases(e2, changes[1])
    return m_from_bases(A, B, A2, B2)


def _same_genus(e, e2) -> None:
    if e.genus != e2.genus:
        raise ValueError(f"genus mismatch: {e.genus} vs {e2.genus}")


def epsilon_pair(e: EmbeddingSides, e2: EmbeddingSides) -> int:
    _same_genus(e, e2)
    return (e2.c_side - e.c_side) // 2


def epsilon_hat_pair(e: EmbeddingSides, e2: EmbeddingSides) -> Z2:
    _same_genus(e, e2)
    return Z2(e.c_side != e2.c_side)


def u_diff_embeddings(e: EmbeddingSides, e2: EmbeddingSides) -> int:
    return (1 - e.genus) * epsilon_pair(e, e2)


def uhat_diff_embeddings(e: EmbeddingSides, e2: EmbeddingSides) -> Z2:
    return Z2(1 - e.genus) * epsilon_hat_pair(e, e2)


def q_diff_embeddings(e: EmbeddingSides, e2: EmbeddingSides) -> Z2:
    return m_embeddings(e, e2) + uhat_diff_embeddings(e, e2)


def uhat_diff_diffeo(d: DiffeoAction) -> Z2:
    return Z2((1 - d.genus) * d.epsilon)


def q_diff_diffeo(d: DiffeoAction, m_value: int | None = None) -> Z2:
    if m_value is None:
        m_value = m_diffeo(d)
    return Z2(m_value) + uhat_diff_diffeo(d)


def embedding_quadratic_form(e: EmbeddingSides) -> tuple[int, ...]:
    """Values on the coordinate vectors of the Z/2 quadratic form that vanishes
    on both side kernels and refines the intersection form.

    Embeddings with different forms are not regularly homotopic.
    """
    g = e.genus
    J = gf2.standard_symplectic(g)
    A, B = lagrangian_dual_bases(e)
    out = []
    for j in range(2 * g):
        v = 1 << j
        out.append(sum(_pairing(v, a, J) * _pairing(v, b, J) for a, b in zip(A.packed_rows, B.packed_rows)) % 2)
    return tuple(out)


def same_quadratic_form(e: EmbeddingSides, e2: EmbeddingSides) -> bool:
    _same_genus(e, e2)
    return embedding_quadratic_form(e) == embedding_quadratic_form(e2)
