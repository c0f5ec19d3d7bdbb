"""Dense GF(2) linear algebra on bit-packed rows.

Row i of a matrix is a Python int whose bit j is entry (i, j); vectors are
ints in the same convention at the internal level and tuples of 0/1 at the
public level.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "GF2Matrix",
    "pack",
    "unpack",
    "rank",
    "kernel_basis",
    "solve",
    "identity",
    "zeros",
    "standard_symplectic",
    "symplectic_basis",
]


def pack(bits: Sequence[int]) -> int:
    v = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"GF(2) entry must be 0 or 1, got {b!r}")
        if b:
            v |= 1 << j
    return v


def unpack(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> j) & 1 for j in range(n))


class GF2Matrix:
    __slots__ = ("rows", "cols", "_r")

    def __init__(self, rows: int, cols: int, packed: Iterable[int] = ()) -> None:
        r = list(packed)
        if len(r) != rows:
            raise ValueError(f"expected {rows} rows, got {len(r)}")
        mask = (1 << cols) - 1
        if any(v & ~mask for v in r):
            raise ValueError("row has bits beyond the column count")
        self.rows = rows
        self.cols = cols
        self._r = tuple(r)

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "GF2Matrix":
        if cols is None:
            cols = len(data[0]) if data else 0
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {cols}")
        return cls(len(data), cols, (pack(row) for row in data))

    @classmethod
    def from_vectors(cls, vectors: Iterable[int], cols: int) -> "GF2Matrix":
        vs = list(vectors)
        return cls(len(vs), cols, vs)

    def to_lists(self) -> list[list[int]]:
        return [list(unpack(v, self.cols)) for v in self._r]

    def row(self, i: int) -> int:
        return self._r[i]

    @property
    def packed_rows(self) -> tuple[int, ...]:
        return self._r

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self._r[i] >> j) & 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.shape == other.shape and self._r == other._r

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._r))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.to_lists()})"

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        return GF2Matrix(self.rows, self.cols, (a ^ b for a, b in zip(self._r, other._r)))

    __sub__ = __add__

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        out = []
        for v in self._r:
            acc = 0
            j = 0
            while v:
                if v & 1:
                    acc ^= other._r[j]
                v >>= 1
                j += 1
            out.append(acc)
        return GF2Matrix(self.rows, other.cols, out)

    def apply(self, v: int) -> int:
        """Matrix times column vector, both packed."""
        out = 0
        for i, r in enumerate(self._r):
            if bin(r & v).count("1") & 1:
                out |= 1 << i
        return out

    def transpose(self) -> "GF2Matrix":
        out = [0] * self.cols
        for i, v in enumerate(self._r):
            j = 0
            while v:
                if v & 1:
                    out[j] |= 1 << i
                v >>= 1
                j += 1
        return GF2Matrix(self.cols, self.rows, out)

    @property
    def T(self) -> "GF2Matrix":
        return self.transpose()

    def stack(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.cols:
            raise ValueError("cannot stack matrices with different column counts")
        return GF2Matrix(self.rows + other.rows, self.cols, self._r + other._r)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "GF2Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        n = self.rows
        work = [(v, 1 << i) for i, v in enumerate(self._r)]
        for col in range(n):
            bit = 1 << col
            piv = next((i for i in range(col, n) if work[i][0] & bit), None)
            if piv is None:
                raise ValueError("matrix is singular over GF(2)")
            work[col], work[piv] = work[piv], work[col]
            pv, pa = work[col]
            for i in range(n):
                if i != col and work[i][0] & bit:
                    work[i] = (work[i][0] ^ pv, work[i][1] ^ pa)
        return GF2Matrix(n, n, (a for _, a in work))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and rank(self) == self.rows

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": self.to_lists()}

    @classmethod
    def from_json(cls, obj, name: str = "matrix") -> "GF2Matrix":
        if not isinstance(obj, dict) or set(obj) != {"rows", "cols", "data"}:
            raise ValueError(f"{name}: expected keys 'rows', 'cols', 'data'")
        r, c, data = obj["rows"], obj["cols"], obj["data"]
        if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in (r, c)):
            raise ValueError(f"{name}: rows and cols must be non-negative integers")
        if not isinstance(data, list) or len(data) != r:
            raise ValueError(f"{name}.data: expected {r} rows")
        for i, row in enumerate(data):
            if not isinstance(row, list) or len(row) != c:
                raise ValueError(f"{name}.data[{i}]: expected {c} entries")
            if any(b not in (0, 1) or isinstance(b, bool) for b in row):
                raise ValueError(f"{name}.data[{i}]: entries must be 0 or 1")
        return cls.from_lists(data, c)


def _echelon(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        piv = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= pv
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(m: GF2Matrix) -> int:
    return len(_echelon(m.packed_rows, m.cols)[1])


def kernel_packed(m: GF2Matrix) -> list[int]:
    rows, pivots = _echelon(m.packed_rows, m.cols)
    pivset = set(pivots)
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = 1 << f
        for row, p in zip(rows, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def kernel_basis(m: GF2Matrix) -> list[tuple[int, ...]]:
    """Basis of {v : Mv = 0}, one vector per free column."""
    return [unpack(v, m.cols) for v in kernel_packed(m)]


def solve_packed(a: GF2Matrix, b: int) -> int | None:
    # augment column `cols` with b
    aug = [r | (((b >> i) & 1) << a.cols) for i, r in enumerate(a.packed_rows)]
    rows, pivots = _echelon(aug, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    v = 0
    for row, p in zip(rows, pivots):
        if (row >> a.cols) & 1:
            v |= 1 << p
    return v


def solve(a: GF2Matrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some x with Ax = b, or None when the system is inconsistent."""
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {a.rows} rows")
    v = solve_packed(a, pack(b))
    return None if v is None else unpack(v, a.cols)


def identity(n: int) -> GF2Matrix:
    return GF2Matrix(n, n, (1 << i for i in range(n)))


def zeros(r: int, c: int) -> GF2Matrix:
    return GF2Matrix(r, c, [0] * r)


def standard_symplectic(g: int) -> GF2Matrix:
    """[[0, I_g], [I_g, 0]]: the intersection form in a basis a_1..a_g, b_1..b_g."""
    return GF2Matrix(2 * g, 2 * g, [1 << (i + g) for i in range(g)] + [1 << i for i in range(g)])


def symplectic_basis(form: GF2Matrix) -> GF2Matrix:
    """Columns a_1..a_g, b_1..b_g of a basis in which ``form`` becomes standard.

    ``form`` must be symmetric, zero on the diagonal and nondegenerate.  The
    returned C satisfies C^T form C = standard_symplectic(g).
    """
    n = form.rows
    if form.cols != n or n % 2:
        raise ValueError("intersection form must be square of even size")
    if form.transpose() != form or any(form[i, i] for i in range(n)):
        raise ValueError("intersection form must be symmetric with zero diagonal")
    if rank(form) != n:
        raise ValueError("intersection form is degenerate")

    def pair(u: int, v: int) -> int:
        return bin(u & form.apply(v)).count("1") & 1

    remaining = [1 << i for i in range(n)]
    a_vecs, b_vecs = [], []
    while remaining:
        u = remaining.pop(0)
        j = next(i for i, w in enumerate(remaining) if pair(u, w))
        v = remaining.pop(j)
        a_vecs.append(u)
        b_vecs.append(v)
        remaining = [w ^ (u if pair(w, v) else 0) ^ (v if pair(w, u) else 0) for w in remaining]
    return GF2Matrix.from_vectors(a_vecs + b_vecs, n).transpose()
