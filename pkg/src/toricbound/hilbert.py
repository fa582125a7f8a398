"""Affine semigroup computations: Hilbert bases, Dickson module generators,
semigroup membership and integer relations among generators.

The Hilbert basis algorithm triangulates a pointed cone into simplicial
pieces, enumerates the half-open fundamental parallelepiped of each piece,
and filters the union down to the irreducible elements. Non-pointed cones are
reduced modulo their lineality lattice; lower-dimensional cones are handled in
coordinates on the saturated span lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from .cones import RationalCone
from .intlin import (
    dot,
    integer_kernel,
    integer_solve,
    is_zero,
    rank_of,
    saturate,
    solve_rational,
    vec_neg,
    vec_sub,
)

Vec = tuple[int, ...]

HILBERT_MAX_RANK = 4


@dataclass(frozen=True)
class SemigroupBasis:
    """Minimal generating data for the semigroup of lattice points of a cone.

    ``generators`` is the unique minimal set for the pointed part. For a
    non-pointed cone, ``lineality_units`` holds a lattice basis of the
    lineality space, available with both signs.
    """

    rank: int
    side: str
    generators: tuple[Vec, ...]
    lineality_units: tuple[Vec, ...] = ()

    def is_trivial(self) -> bool:
        """True iff the semigroup is {0}."""
        return not self.generators and not self.lineality_units

    def cone(self) -> RationalCone:
        vecs = list(self.generators)
        for u in self.lineality_units:
            vecs.append(u)
            vecs.append(vec_neg(u))
        return RationalCone.from_generators(vecs, self.rank, self.side)


@dataclass(frozen=True)
class ModuleGenerators:
    """A finite generator set B0 with target = B0 + semigroup(base)."""

    base: SemigroupBasis
    generators: tuple[Vec, ...]


@dataclass(frozen=True)
class ShiftedPolyhedron:
    """The polyhedron {beta : <beta, u> >= -m for all (u, m) in constraints}."""

    rank: int
    side: str
    constraints: tuple[tuple[Vec, int], ...]

    def contains(self, beta) -> bool:
        beta = tuple(int(x) for x in beta)
        return all(dot(u, beta) >= -m for u, m in self.constraints)

    def recession_cone(self) -> RationalCone:
        return RationalCone.from_inequalities(
            [u for u, _ in self.constraints], self.rank, self.side
        )

    def vertices(self) -> list[tuple[Fraction, ...]]:
        """All vertices, by enumerating feasible square subsystems."""
        n = self.rank
        verts: list[tuple[Fraction, ...]] = []
        for subset in combinations(self.constraints, n):
            rows = [u for u, _ in subset]
            if rank_of(rows) < n:
                continue
            sol = solve_rational(rows, [-m for _, m in subset])
            if sol is None:
                continue
            pt = tuple(sol)
            if all(dot(u, pt) >= -m for u, m in self.constraints) and pt not in verts:
                verts.append(pt)
        return verts


def hilbert_basis(cone: RationalCone) -> SemigroupBasis:
    """The minimal generating set of lattice ∩ cone.

    Supported up to ambient rank 4. For non-pointed input the result is the
    Hilbert basis of the pointed quotient, lifted, together with a lattice
    basis of the lineality space as +/- units.

    >>> cone = RationalCone.from_generators([(1, 0), (1, 2)], 2, "M")
    >>> hilbert_basis(cone).generators
    ((1, 0), (1, 1), (1, 2))
    """
    if cone.rank > HILBERT_MAX_RANK:
        raise ValueError(f"hilbert basis supported up to rank {HILBERT_MAX_RANK}")
    if cone.is_zero():
        return SemigroupBasis(cone.rank, cone.side, ())
    if cone.is_pointed():
        gens = _hilbert_pointed(cone.extreme_rays(), cone.rank, cone.side)
        return SemigroupBasis(cone.rank, cone.side, gens)
    lin = cone.lineality_basis
    proj = integer_kernel(lin)
    if not proj:
        # the cone is the whole space
        return SemigroupBasis(cone.rank, cone.side, (), lin)
    images = [tuple(dot(q, g) for q in proj) for g in cone.extreme_rays()]
    qgens = _hilbert_pointed_from_vectors(images, len(proj), cone.side)
    lifts = sorted(integer_solve(proj, h) for h in qgens)
    return SemigroupBasis(cone.rank, cone.side, tuple(lifts), lin)


def _hilbert_pointed_from_vectors(vectors, rank: int, side: str) -> tuple[Vec, ...]:
    cone = RationalCone.from_generators(vectors, rank, side)
    return _hilbert_pointed(cone.extreme_rays(), cone.rank, cone.side)


def _hilbert_pointed(rays: tuple[Vec, ...], rank: int, side: str) -> tuple[Vec, ...]:
    if not rays:
        return ()
    d = rank_of(rays)
    if d < rank:
        span = saturate(rays)
        coords = [_coordinates_in(span, g) for g in rays]
        sub = _hilbert_pointed_from_vectors(coords, d, side)
        back = [tuple(sum(c[i] * span[i][j] for i in range(d)) for j in range(rank)) for c in sub]
        return tuple(sorted(back))
    cone = RationalCone.from_generators(rays, rank, side)
    rays = cone.extreme_rays()
    candidates: set[Vec] = set(rays)
    for simplex in _triangulate(rays, rank):
        candidates |= _parallelepiped_points(simplex)
    ineqs = cone.inequalities

    def in_cone(v: Vec) -> bool:
        return all(dot(a, v) >= 0 for a in ineqs)

    ordered = sorted(candidates, key=lambda v: (sum(map(abs, v)), v))
    basis = []
    for x in ordered:
        reducible = False
        for c in ordered:
            if c == x:
                continue
            rest = vec_sub(x, c)
            if not is_zero(rest) and in_cone(rest):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return tuple(sorted(basis))


def _coordinates_in(basis: list[Vec], v: Vec) -> Vec:
    rows = [tuple(b[c] for b in basis) for c in range(len(v))]
    sol = solve_rational(rows, v)
    if sol is None or any(f.denominator != 1 for f in sol):
        raise ValueError("vector is not in the saturated span lattice")
    return tuple(int(f) for f in sol)


def _triangulate(rays: tuple[Vec, ...], d: int) -> list[tuple[Vec, ...]]:
    """Split a pointed full-dimensional cone on its extreme rays into simplicial
    subcones by incremental placing."""
    if len(rays) == d:
        return [rays]
    start: list[Vec] = []
    rest: list[Vec] = []
    for r in rays:
        if len(start) < d and rank_of(start + [r]) > len(start):
            start.append(r)
        else:
            rest.append(r)
    simplices = [tuple(start)]
    placed = list(start)
    for r in rest:
        visible = []
        for facet, normal in _boundary_facets(simplices, placed, d):
            if dot(normal, r) < 0:
                visible.append(facet)
        if not visible:
            raise AssertionError("extreme ray inside current hull; input not canonical")
        for facet in visible:
            simplices.append(facet + (r,))
        placed.append(r)
    return simplices


def _boundary_facets(simplices, placed, d):
    """(facet rays, outward-invalidating normal) pairs on the hull boundary.

    A facet of some simplex lies on the boundary of the union iff all placed
    rays sit weakly on its inner side.
    """
    seen = set()
    out = []
    for simplex in simplices:
        for facet in combinations(simplex, d - 1):
            key = frozenset(facet)
            if key in seen:
                continue
            seen.add(key)
            kern = integer_kernel(list(facet))
            if len(kern) != 1:
                continue
            w = kern[0]
            opposite = next(v for v in simplex if v not in facet)
            s = dot(w, opposite)
            if s < 0:
                w = vec_neg(w)
            if all(dot(w, p) >= 0 for p in placed):
                out.append((facet, w))
    return out


def _parallelepiped_points(simplex: tuple[Vec, ...]) -> set[Vec]:
    """Nonzero lattice points of {sum t_i g_i : 0 <= t_i < 1}."""
    n = len(simplex[0])
    rows = [tuple(g[c] for g in simplex) for c in range(n)]
    lo = [sum(min(0, g[c]) for g in simplex) for c in range(n)]
    hi = [sum(max(0, g[c]) for g in simplex) for c in range(n)]
    pts: set[Vec] = set()
    for x in product(*(range(lo[c], hi[c] + 1) for c in range(n))):
        if is_zero(x):
            continue
        t = solve_rational(rows, x)
        if t is None:
            continue
        if all(0 <= ti < 1 for ti in t):
            pts.add(tuple(x))
    return pts


def semigroup_contains(basis: SemigroupBasis, beta) -> bool:
    """Whether beta is a nonnegative integer combination of the basis elements
    (lineality units usable with both signs)."""
    beta = tuple(int(x) for x in beta)
    if len(beta) != basis.rank:
        raise ValueError("rank mismatch")
    if is_zero(beta):
        return True
    if basis.lineality_units:
        proj = integer_kernel(basis.lineality_units)
        if not proj:
            return True
        qbeta = tuple(dot(q, beta) for q in proj)
        images = [tuple(dot(q, g) for q in proj) for g in basis.generators]
        images = [g for g in images if not is_zero(g)]
        return _pointed_contains(images, qbeta)
    return _pointed_contains(list(basis.generators), beta)


def _pointed_contains(gens: list[Vec], beta: Vec) -> bool:
    if is_zero(beta):
        return True
    if not gens:
        return False
    rank = len(beta)
    cone = RationalCone.from_generators(gens, rank, "M")
    linpairs = {v for v in cone.inequalities if vec_neg(v) in set(cone.inequalities)}
    w = tuple(
        sum(a[c] for a in cone.inequalities if a not in linpairs) for c in range(rank)
    )
    weights = [dot(w, g) for g in gens]
    if any(x <= 0 for x in weights):
        raise AssertionError("positive functional failed; cone not pointed?")
    ineqs = cone.inequalities
    memo: dict[Vec, bool] = {}

    def rec(t: Vec) -> bool:
        if is_zero(t):
            return True
        if t in memo:
            return memo[t]
        memo[t] = False
        if all(dot(a, t) >= 0 for a in ineqs):
            wt = dot(w, t)
            for g, wg in zip(gens, weights):
                if wg <= wt and rec(vec_sub(t, g)):
                    memo[t] = True
                    break
        return memo[t]

    return rec(beta)


def dickson_decompose(poly: ShiftedPolyhedron, base: SemigroupBasis) -> ModuleGenerators:
    """Minimal B0 with (poly ∩ lattice) = B0 + semigroup(base).

    The recession cone of the polyhedron must equal the cone of the base
    semigroup. Enumeration runs over the box hull of the vertices padded by
    the generator offsets; irreducible points (not reachable from the
    polyhedron by subtracting a generator) are exactly the minimal module
    generators, listed in graded-lex order.
    """
    if poly.rank > 3:
        raise ValueError("dickson_decompose supported up to rank 3")
    if poly.recession_cone() != base.cone():
        raise ValueError("recession cone does not match the base semigroup")
    if base.lineality_units:
        proj = integer_kernel(base.lineality_units)
        if not proj:
            return ModuleGenerators(base, ((0,) * poly.rank,))
        qrank = len(proj)
        qcons = []
        for u, m in poly.constraints:
            ubar = _functional_through(proj, u)
            qcons.append((ubar, m))
        qimages = [tuple(dot(q, g) for q in proj) for g in base.generators]
        qimages = [g for g in qimages if not is_zero(g)]
        qpoly = ShiftedPolyhedron(qrank, poly.side, tuple(qcons))
        qbase = SemigroupBasis(qrank, base.side, tuple(sorted(set(qimages))))
        inner = _dickson_pointed(qpoly, qbase)
        lifted = sorted(integer_solve(proj, b) for b in inner)
        return ModuleGenerators(base, tuple(lifted))
    gens = _dickson_pointed(poly, base)
    return ModuleGenerators(base, gens)


def _functional_through(proj: list[Vec], u: Vec) -> Vec:
    # u = ubar ∘ proj; solvable and integral since u kills the lineality lattice
    rows = [tuple(proj[i][c] for i in range(len(proj))) for c in range(len(u))]
    sol = solve_rational(rows, u)
    if sol is None or any(f.denominator != 1 for f in sol):
        raise ValueError("constraint does not descend to the quotient")
    return tuple(int(f) for f in sol)


def _dickson_pointed(poly: ShiftedPolyhedron, base: SemigroupBasis) -> tuple[Vec, ...]:
    verts = poly.vertices()
    if not verts:
        return ()
    n = poly.rank
    hs = list(base.generators)
    lo = [floor(min(v[c] for v in verts)) + sum(min(0, h[c]) for h in hs) for c in range(n)]
    hi = [ceil(max(v[c] for v in verts)) + sum(max(0, h[c]) for h in hs) for c in range(n)]
    found = []
    for x in product(*(range(lo[c], hi[c] + 1) for c in range(n))):
        if poly.contains(x):
            found.append(tuple(x))
    found.sort(key=lambda v: (sum(map(abs, v)), v))
    minimal = [
        b for b in found
        if not any(poly.contains(vec_sub(b, h)) for h in hs)
    ]
    return tuple(sorted(minimal, key=lambda v: (sum(map(abs, v)), v)))


def lattice_kernel_relations(gens) -> list[Vec]:
    """Canonical basis of the integer relations {c : sum c_i * gens_i = 0}."""
    gens = [tuple(int(x) for x in (g.coords if hasattr(g, "coords") else g)) for g in gens]
    if len(gens) > 8:
        raise ValueError("at most 8 generators supported")
    if not gens:
        return []
    n = len(gens[0])
    if n > 4:
        raise ValueError("rank at most 4 supported")
    rows = [tuple(g[c] for g in gens) for c in range(n)]
    kern = integer_kernel(rows)
    from .intlin import hnf

    return [tuple(r) for r in hnf(kern)]


def binomial_parts(relation: Vec) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Split a relation vector into (index, exponent) lists for the two
    monomials of the candidate binomial."""
    plus = tuple((i, c) for i, c in enumerate(relation) if c > 0)
    minus = tuple((i, -c) for i, c in enumerate(relation) if c < 0)
    return plus, minus
