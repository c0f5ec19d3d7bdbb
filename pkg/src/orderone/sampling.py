"""Random generators for censuses, move traces, symplectic matrices and
embedding side data.  Used by the test suite and the experiment scripts."""

from __future__ import annotations

import random

from . import gf2
from .census import Census, standard_census
from .delta1 import CESymbol, FAMILIES
from .gf2 import GF2Matrix
from .invariant_m import EmbeddingSides, lagrangian_dual_bases
from .moves import MoveNotApplicableError, apply_move

__all__ = [
    "random_symbol",
    "random_census",
    "random_valid_census",
    "random_trace",
    "random_standard",
    "random_invertible",
    "transvection",
    "random_symplectic",
    "random_orthogonal",
    "embedding_from_symplectic",
    "random_embedding",
    "random_embedding_pair",
]


def random_symbol(rng: random.Random, max_deg: int = 5) -> CESymbol:
    fam = rng.choice(list(FAMILIES))
    return CESymbol(fam, rng.choice(FAMILIES[fam]), rng.randint(-max_deg, max_deg))


def random_census(rng: random.Random, max_genus: int = 6, spread: int = 6, size: int = 6) -> Census:
    """Arbitrary census data with even triple-point counts; no identities imposed."""
    g = rng.randint(0, max_genus)
    chi = {rng.randint(-spread, spread): rng.randint(-10, 10) for _ in range(rng.randint(0, size))}
    n = {rng.randint(-spread, spread): 2 * rng.randint(0, 5) for _ in range(rng.randint(0, size))}
    return Census(g, chi, n)


def random_valid_census(rng: random.Random, **kw) -> Census:
    """Random census adjusted at degrees 0 and -1 so both identities hold."""
    c = random_census(rng, **kw)
    half = c.total_triple_points // 2
    chi = dict(c.chi)
    chi.pop(0, None)
    chi.pop(-1, None)
    even = sum(e for m, e in chi.items() if m % 2 == 0)
    odd = sum(e for m, e in chi.items() if m % 2 == 1)
    chi[0] = 2 - c.genus + half - even
    chi[-1] = 1 - c.genus + half - odd
    return Census(c.genus, chi, c.n)


def random_trace(
    rng: random.Random, start: Census, length: int, max_deg: int = 5
) -> tuple[Census, list[tuple[CESymbol, int]]]:
    """Random applicable move sequence of the given length; returns (end, trace)."""
    c = start
    trace = []
    while len(trace) < length:
        s = random_symbol(rng, max_deg)
        d = rng.choice((1, -1))
        try:
            c = apply_move(c, s, d)
        except MoveNotApplicableError:
            continue
        trace.append((s, d))
    return c, trace


def random_standard(rng: random.Random, max_genus: int = 6) -> Census:
    return standard_census(rng.randint(0, max_genus), rng.choice((-1, 1)))


def random_invertible(rng: random.Random, n: int) -> GF2Matrix:
    while True:
        m = GF2Matrix(n, n, (rng.getrandbits(n) for _ in range(n)))
        if m.is_invertible():
            return m


def transvection(v: int, g: int) -> GF2Matrix:
    """x -> x + (x . v) v, which preserves the standard form."""
    n = 2 * g
    J = gf2.standard_symplectic(g)
    Jv = J.apply(v)
    cols = []
    for j in range(n):
        e = 1 << j
        cols.append(e ^ (v if (Jv >> j) & 1 else 0))
    return GF2Matrix.from_vectors(cols, n).T


def random_symplectic(rng: random.Random, g: int, steps: int | None = None) -> GF2Matrix:
    n = 2 * g
    h = gf2.identity(n)
    for _ in range(steps if steps is not None else 3 * n + 2):
        v = rng.getrandbits(n)
        if v:
            h = transvection(v, g) @ h
    return h


def _quad(v: int, A: GF2Matrix, B: GF2Matrix, J: GF2Matrix) -> int:
    s = 0
    Jv = J.apply(v)
    for a, b in zip(A.packed_rows, B.packed_rows):
        s ^= (bin(a & Jv).count("1") & 1) & (bin(b & Jv).count("1") & 1)
    return s


def random_orthogonal(rng: random.Random, A: GF2Matrix, B: GF2Matrix, steps: int | None = None) -> GF2Matrix:
    """Random product of transvections along vectors where the quadratic form
    vanishing on the rows of A and B takes the value 1; these preserve it."""
    n = A.cols
    g = n // 2
    J = gf2.standard_symplectic(g)
    h = gf2.identity(n)
    for _ in range(steps if steps is not None else 3 * n + 2):
        v = rng.getrandbits(n)
        if v and _quad(v, A, B, J):
            h = transvection(v, g) @ h
    return h


def embedding_from_symplectic(
    rng: random.Random, S: GF2Matrix, c_side: int, extra_rows: int = 0
) -> EmbeddingSides:
    """Side data whose kernels are spanned by the images under S of the
    standard a- and b-vectors, with random redundant rows."""
    n = S.rows
    g = n // 2
    J = gf2.standard_symplectic(g)
    St = S.T
    L0 = GF2Matrix.from_vectors(St.packed_rows[:g], n)
    L1 = GF2Matrix.from_vectors(St.packed_rows[g:], n)
    # rows of L J annihilate exactly span(L) since L is Lagrangian
    maps = []
    for L in (L0, L1):
        base = random_invertible(rng, g) @ L @ J
        rows = list(base.packed_rows)
        for _ in range(extra_rows):
            mix = rng.getrandbits(g) if g else 0
            rows.append((GF2Matrix(1, g, [mix]) @ base).row(0) if g else 0)
        rng.shuffle(rows)
        maps.append(GF2Matrix.from_vectors(rows, n))
    return EmbeddingSides(g, maps[0], maps[1], c_side)


def random_embedding(rng: random.Random, g: int) -> EmbeddingSides:
    return embedding_from_symplectic(rng, random_symplectic(rng, g), rng.choice((-1, 1)), rng.randint(0, 2))


def random_embedding_pair(
    rng: random.Random, g: int, same_form: bool = True
) -> tuple[EmbeddingSides, EmbeddingSides]:
    """Two embeddings of a genus-g surface.  With ``same_form`` the second is
    obtained through a map preserving the first one's quadratic form, the
    homological shadow of the two being regularly homotopic."""
    e = random_embedding(rng, g)
    if not same_form:
        return e, random_embedding(rng, g)
    A, B = lagrangian_dual_bases(e)
    S = A.stack(B).T  # columns a_1..a_g, b_1..b_g
    h = random_orthogonal(rng, A, B)
    e2 = embedding_from_symplectic(rng, h @ S, rng.choice((-1, 1)), rng.randint(0, 2))
    return e, e2
