"""Lattice vectors, the character/cocharacter pairing, and exact matrix inertia.

The two dual lattices are tagged 'M' (characters, monomial exponents) and 'N'
(cocharacters, one-parameter subgroup directions). All matrix arithmetic is
exact rational; inertia is computed by symmetric congruence elimination and
never sees a floating-point number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intlin import primitive_tuple

SIDES = ("M", "N")
OTHER_SIDE = {"M": "N", "N": "M"}


@dataclass(frozen=True, order=True)
class LatticeVector:
    """An element of the character lattice M or the cocharacter lattice N."""

    coords: tuple[int, ...]
    side: str

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be 'M' or 'N', got {self.side!r}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if not self.coords:
            raise ValueError("rank must be positive")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check_compatible(self, other: "LatticeVector"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        if self.side != other.side:
            raise ValueError(f"side mismatch: {self.side} vs {other.side}")

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check_compatible(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.side)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        self._check_compatible(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.side)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords), self.side)

    def scale(self, k: int) -> "LatticeVector":
        return LatticeVector(tuple(k * a for a in self.coords), self.side)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def mvec(*coords: int) -> LatticeVector:
    return LatticeVector(tuple(coords), "M")


def nvec(*coords: int) -> LatticeVector:
    return LatticeVector(tuple(coords), "N")


def pairing(alpha: LatticeVector, v: LatticeVector) -> int:
    """The perfect pairing <alpha, v> between M and N: the standard dot product."""
    if alpha.side != "M" or v.side != "N":
        raise ValueError(f"pairing needs (M, N) arguments, got ({alpha.side}, {v.side})")
    if alpha.rank != v.rank:
        raise ValueError(f"rank mismatch: {alpha.rank} vs {v.rank}")
    return sum(a * b for a, b in zip(alpha.coords, v.coords))


def primitive(v: LatticeVector) -> LatticeVector:
    """The primitive vector on the ray through v. Errors on the zero vector.

    >>> primitive(nvec(6, -9)).coords
    (2, -3)
    """
    return LatticeVector(primitive_tuple(v.coords), v.side)


@dataclass(frozen=True)
class Inertia:
    """Signature data of a symmetric matrix: counts of +, -, 0 eigenvalues."""

    n_plus: int
    n_minus: int
    n_zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)

    @property
    def size(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def is_negative_definite(self) -> bool:
        return self.n_plus == 0 and self.n_zero == 0

    def is_negative_semidefinite(self) -> bool:
        return self.n_plus == 0


class SymmetricRationalMatrix:
    """A symmetric matrix with exact rational entries.

    Only symmetry is enforced; entries may be arbitrary Fractions. Rows are
    stored in full for convenience, but construction rejects asymmetry.
    """

    MAX_SIZE = 64

    def __init__(self, rows):
        rows = [tuple(Fraction(x) for x in row) for row in rows]
        n = len(rows)
        if n > self.MAX_SIZE:
            raise ValueError(f"matrices beyond size {self.MAX_SIZE} are unsupported")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        self.rows: tuple[tuple[Fraction, ...], ...] = tuple(rows)
        self.size = n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SymmetricRationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SymmetricRationalMatrix({[list(map(str, r)) for r in self.rows]})"

    def apply(self, vec):
        """Matrix-vector product, exact."""
        return tuple(sum(r[j] * Fraction(vec[j]) for j in range(self.size)) for r in self.rows)

    def permuted(self, perm) -> "SymmetricRationalMatrix":
        """Simultaneous row/column permutation (a congruence)."""
        return SymmetricRationalMatrix(
            [[self.rows[perm[i]][perm[j]] for j in range(self.size)] for i in range(self.size)]
        )


def inertia(mat: SymmetricRationalMatrix) -> Inertia:
    """Exact eigenvalue sign counts via symmetric congruence elimination.

    A nonzero diagonal pivot contributes its sign and is eliminated by a rank-1
    Schur complement. When the leading diagonal entry vanishes but its row does
    not, the 2x2 block [[0, b], [b, c]] is indefinite and is eliminated as a
    whole, contributing one +1 and one -1 (Haynsworth additivity). Zero rows
    count toward n_zero directly.
    """
    work = [list(row) for row in mat.rows]
    n_plus = n_minus = n_zero = 0
    while work:
        m = len(work)
        d = work[0][0]
        if d != 0:
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            new = [
                [work[i][j] - work[i][0] * work[0][j] / d for j in range(1, m)]
                for i in range(1, m)
            ]
            work = new
            continue
        j = next((k for k in range(1, m) if work[0][k] != 0), None)
        if j is None:
            n_zero += 1
            work = [row[1:] for row in work[1:]]
            continue
        # bring column j next to the zero pivot, then split off the 2x2 block
        if j != 1:
            for row in work:
                row[1], row[j] = row[j], row[1]
            work[1], work[j] = work[j], work[1]
        b = work[0][1]
        c = work[1][1]
        n_plus += 1
        n_minus += 1
        b2 = b * b
        new = []
        for i in range(2, m):
            u_i, v_i = work[i][0], work[i][1]
            row = []
            for k in range(2, m):
                u_k, v_k = work[k][0], work[k][1]
                corr = -c * u_i * u_k / b2 + (u_i * v_k + v_i * u_k) / b
                row.append(work[i][k] - corr)
            new.append(row)
        work = new
    return Inertia(n_plus, n_minus, n_zero)
