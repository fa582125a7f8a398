import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricbound.cli import corpus_entry
from toricbound.linalg import (
    Inertia,
    LatticeVector,
    SymmetricRationalMatrix,
    inertia,
    mvec,
    nvec,
    pairing,
    primitive,
)
from toricbound.serialize import matrix_from_json

from oracles import inertia_oracle


class TestPairing:
    def test_orthogonal_basis_vectors(self):
        assert pairing(mvec(1, 0), nvec(0, 1)) == 0

    def test_plain_dot_product(self):
        assert pairing(mvec(2, 1), nvec(1, 1)) == 3

    def test_hyperbola_boundary_ray(self):
        # (k, 1) pairs to zero with (1, -k): the added rays of the hyperbola fan
        # lie on the boundary of the half-space 2*v1 + v2 >= 0
        assert pairing(mvec(2, 1), nvec(1, -2)) == 0

    def test_rank_mismatch(self):
        with pytest.raises(ValueError, match="rank"):
            pairing(mvec(1, 0, 0), nvec(1, 0))

    def test_side_mismatch(self):
        with pytest.raises(ValueError, match="side|pairing"):
            pairing(nvec(1, 0), nvec(0, 1))
        with pytest.raises(ValueError):
            pairing(mvec(1, 0), mvec(0, 1))


class TestLatticeVector:
    def test_arithmetic(self):
        a, b = mvec(1, 2), mvec(3, -1)
        assert (a + b).coords == (4, 1)
        assert (a - b).coords == (-2, 3)
        assert (-a).coords == (-1, -2)
        assert a.scale(3).coords == (3, 6)

    def test_mixed_sides_rejected(self):
        with pytest.raises(ValueError):
            mvec(1, 0) + nvec(0, 1)

    def test_mixed_ranks_rejected(self):
        with pytest.raises(ValueError):
            mvec(1, 0) + mvec(1, 0, 0)

    def test_bad_side(self):
        with pytest.raises(ValueError):
            LatticeVector((1, 0), "X")


class TestPrimitive:
    @pytest.mark.parametrize(
        "vec,expected",
        [((2, 4), (1, 2)), ((0, -3), (0, -1)), ((6, -9), (2, -3))],
    )
    def test_examples(self, vec, expected):
        assert primitive(nvec(*vec)).coords == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            primitive(nvec(0, 0))


def _corpus_matrix(name):
    return matrix_from_json(corpus_entry(name)["input"])


class TestInertia:
    def test_diag(self):
        assert inertia(SymmetricRationalMatrix([[1, 0], [0, -1]])).as_tuple() == (1, 1, 0)

    def test_mondal_netzer_single_curve(self):
        sig = inertia(_corpus_matrix("mondal-netzer-MY1"))
        assert sig.n_plus == 1
        assert sig.as_tuple() == (1, 8, 0)

    def test_mondal_netzer_union(self):
        sig = inertia(_corpus_matrix("mondal-netzer-MY"))
        assert sig.as_tuple() == (0, 13, 1)
        assert sig.is_negative_semidefinite() and not sig.is_negative_definite()

    def test_oracle_on_paper_matrices(self):
        for name in ("mondal-netzer-MY1", "mondal-netzer-MY"):
            mat = _corpus_matrix(name)
            assert inertia(mat).as_tuple() == inertia_oracle(mat.rows)

    def test_hyperbolic_block(self):
        assert inertia(SymmetricRationalMatrix([[0, 1], [1, 0]])).as_tuple() == (1, 1, 0)

    def test_zero_rows(self):
        assert inertia(SymmetricRationalMatrix([[0, 0], [0, 0]])).as_tuple() == (0, 0, 2)

    def test_rational_entries(self):
        mat = SymmetricRationalMatrix([[Fraction(1, 2), 1], [1, Fraction(3)]])
        assert inertia(mat).as_tuple() == (2, 0, 0)
        singular = SymmetricRationalMatrix([[Fraction(1, 2), 1], [1, Fraction(2)]])
        assert inertia(singular).as_tuple() == (1, 0, 1)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            SymmetricRationalMatrix([[0, 1], [2, 0]])

    def test_inertia_totals(self):
        sig = Inertia(1, 2, 3)
        assert sig.size == 6


def _random_symmetric(rng, n, denom=False):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            x = Fraction(rng.randint(-5, 5), rng.randint(1, 3) if denom else 1)
            rows[i][j] = rows[j][i] = x
    return rows


class TestInertiaProperties:
    def test_permutation_invariance(self):
        rng = random.Random(1)
        for _ in range(40):
            rows = _random_symmetric(rng, 6, denom=True)
            mat = SymmetricRationalMatrix(rows)
            perm = list(range(6))
            rng.shuffle(perm)
            assert inertia(mat) == inertia(mat.permuted(perm))

    def test_unimodular_congruence_invariance(self):
        rng = random.Random(2)
        for _ in range(30):
            n = rng.randint(2, 5)
            rows = _random_symmetric(rng, n)
            # random unimodular: product of elementary shears
            P = [[int(i == j) for j in range(n)] for i in range(n)]
            for _ in range(6):
                i, j = rng.sample(range(n), 2)
                c = rng.randint(-2, 2)
                for k in range(n):
                    P[k][j] += c * P[k][i]
            PtAP = [
                [
                    sum(
                        P[a][i] * rows[a][b] * P[b][j]
                        for a in range(n)
                        for b in range(n)
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
            assert inertia(SymmetricRationalMatrix(rows)) == inertia(
                SymmetricRationalMatrix(PtAP)
            )

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 8), st.randoms(use_true_random=False))
    def test_matches_charpoly_descartes_oracle(self, n, rnd):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                rows[i][j] = rows[j][i] = rnd.randint(-4, 4)
        assert inertia(SymmetricRationalMatrix(rows)).as_tuple() == inertia_oracle(rows)
