"""The boundedness filtration: lattice-point polyhedra of the levels, module
generators over the bounded ring, dimension counts, and the total-stability
certificate.

Level n collects the exponents beta with <beta, u> >= 0 along the rays inside
sigma and >= -n along the divisors at infinity met by the closure of S. Level
zero is the bounded ring itself; each level is a finitely generated module
over it, with generators computed by Dickson decomposition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from math import ceil, floor

from .bounded import (
    BinomialSet,
    FSData,
    K_sets,
    TCStatus,
    Tentacle,
    adapted_fan,
    check_tc,
    is_trivial_bounded_ring,
    subfan_FS,
)
from .cones import RationalCone
from .hilbert import (
    ModuleGenerators,
    SemigroupBasis,
    ShiftedPolyhedron,
    dickson_decompose,
)
from .intlin import vec_add

Vec = tuple[int, ...]

INFINITE = "infinite"


@dataclass(frozen=True)
class FiltrationLevel:
    """One level of the filtration: its polyhedron, module generators over the
    bounded ring, and its dimension (lattice-point count, or infinite with a
    finite module rank)."""

    fs: FSData
    n: int
    polyhedron: ShiftedPolyhedron
    generators: ModuleGenerators
    dimension: int | str

    @property
    def module_rank(self) -> int:
        return len(self.generators.generators)


def level_polyhedron(fs: FSData, n: int) -> ShiftedPolyhedron:
    cons = tuple((u, 0 if in_sigma else n) for u, in_sigma in fs.rays)
    return ShiftedPolyhedron(2, "M", cons)


def filtration_level(fs: FSData, n: int) -> FiltrationLevel:
    """Polyhedron, Dickson module generators and dimension of level n."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    poly = level_polyhedron(fs, n)
    gens = dickson_decompose(poly, fs.dual_basis)
    rec = poly.recession_cone()
    if rec.is_zero():
        dim = _count_lattice_points(poly)
    else:
        dim = INFINITE
    return FiltrationLevel(fs, n, poly, gens, dim)


def _count_lattice_points(poly: ShiftedPolyhedron) -> int:
    verts = poly.vertices()
    if not verts:
        return 0
    n = poly.rank
    lo = [floor(min(v[c] for v in verts)) for c in range(n)]
    hi = [ceil(max(v[c] for v in verts)) for c in range(n)]
    return sum(
        1 for x in product(*(range(lo[c], hi[c] + 1) for c in range(n)))
        if poly.contains(x)
    )


def filtration_multiplicativity_check(level_m: FiltrationLevel, level_n: FiltrationLevel) -> bool:
    """Level m times level n lands in level m+n: checked on module generators."""
    if level_m.fs != level_n.fs:
        raise ValueError("levels must come from the same subfan")
    target = level_polyhedron(level_m.fs, level_m.n + level_n.n)
    return all(
        target.contains(vec_add(a, b))
        for a in level_m.generators.generators
        for b in level_n.generators.generators
    )


class StabilityVerdict(enum.Enum):
    TOTALLY_STABLE = "TotallyStable"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class StabilityReport:
    verdict: StabilityVerdict
    bounded_basis: SemigroupBasis
    levels: tuple[FiltrationLevel, ...]

    def dimensions(self) -> list[int | str]:
        return [lv.dimension for lv in self.levels]


def total_stability_certificate(
    sigma: RationalCone, s: BinomialSet | Tentacle, n_max: int
) -> StabilityReport:
    """Certify total stability of the cone of nonnegative polynomials on S.

    Requires the compatibility condition, which holds automatically for these
    two classes on their adapted fans. When only constants are bounded, every
    filtration level is a finite-dimensional space; their dimensions up to
    n_max are emitted with the verdict TotallyStable. A nontrivial bounded
    ring rules the certificate out (NotApplicable).
    """
    if not isinstance(s, (BinomialSet, Tentacle)):
        raise TypeError("stability certificates cover binomial sets and tentacles")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    fan = adapted_fan(s, sigma)
    report = check_tc(fan, sigma, s)
    if report.status is not TCStatus.VERIFIED:
        raise ValueError(f"compatibility not verified: {report.reason}")
    k0 = K_sets(s)[1]
    fs = subfan_FS(fan, sigma, k0)
    if not is_trivial_bounded_ring(sigma, s):
        return StabilityReport(StabilityVerdict.NOT_APPLICABLE, fs.dual_basis, ())
    levels = tuple(filtration_level(fs, n) for n in range(n_max + 1))
    for lv in levels:
        if lv.dimension == INFINITE:
            raise AssertionError(
                "level with trivial bounded ring must be finite-dimensional"
            )
    return StabilityReport(StabilityVerdict.TOTALLY_STABLE, fs.dual_basis, levels)
