import math
import random
from fractions import Fraction

import numpy as np
import pytest

from genutil import random_jacobi
from palinfrac.errors import (
    DegenerateSpectrum,
    NotAnEigenvalue,
    SizeTooSmall,
    ToleranceTooLoose,
)
from palinfrac.jacobi import (
    JacobiMatrix,
    Spectrum,
    charpoly_check,
    eigenvalues,
    eigenvector,
    from_jfraction,
    gershgorin_interval,
    is_persymmetric,
    normalized_poly_sequence,
    truncate_first,
)
from palinfrac.jfraction import JFraction, chebyshev_jfraction


class TestTypes:
    def test_matrix_validation(self):
        with pytest.raises(ValueError):
            JacobiMatrix((), ())
        with pytest.raises(ValueError):
            JacobiMatrix((0.0, 0.0), ())
        with pytest.raises(ValueError):
            JacobiMatrix((0.0, 0.0), (-1.0,))

    def test_dense(self):
        m = JacobiMatrix((1.0, 2.0), (3.0,)).dense()
        assert np.allclose(m, [[1.0, 3.0], [3.0, 2.0]])

    def test_matrix_json_round_trip(self):
        h = JacobiMatrix((0.0, 1.0), (0.5,))
        assert JacobiMatrix.from_json_obj(h.to_json_obj()) == h

    def test_spectrum_validation(self):
        with pytest.raises(DegenerateSpectrum):
            Spectrum((0.0, 0.0), 1e-12)
        with pytest.raises(DegenerateSpectrum):
            Spectrum((0.0, 1.0, 0.5), 1e-12)
        with pytest.raises(ValueError):
            Spectrum((0.0,), 0.0)


class TestFromJFraction:
    def test_examples(self, chain3):
        h = from_jfraction(JFraction((0, 0, 0), (Fraction(1, 2), Fraction(1, 2))))
        assert h == chain3
        assert from_jfraction(JFraction((5,), ())) == JacobiMatrix((5.0,), ())
        assert from_jfraction(JFraction((0, 0), (1,))).offdiag == (1.0,)


class TestRecurrence:
    def test_values_at_eigenvalue(self, chain3):
        values = normalized_poly_sequence(chain3, 1.0)
        assert abs(values[-1]) <= 1e-14

    def test_values_at_zero(self, chain3):
        assert normalized_poly_sequence(chain3, 0.0) == pytest.approx(
            [1.0, 0.0, -1.0, 0.0], abs=1e-15
        )

    def test_single_site(self):
        assert normalized_poly_sequence(JacobiMatrix((4.0,), ()), 4.0) == [1.0, 0.0]

    def test_companion_recurrence_of_truncation(self, chain3):
        # values of the second-kind recurrence match the truncated chain
        b0 = chain3.offdiag[0]
        trunc = truncate_first(chain3)
        for x in (-0.7, 0.3, 2.1):
            left = (1.0,) + chain3.offdiag
            right = chain3.offdiag + (1.0,)
            q_prev, q_cur = -1.0, 0.0
            second_kind = []
            for k in range(chain3.size):
                q_prev, q_cur = q_cur, ((x - chain3.diag[k]) * q_cur - left[k] * q_prev) / right[k]
                second_kind.append(q_cur)
            truncated = normalized_poly_sequence(trunc, x)
            for k in range(trunc.size + 1):
                assert second_kind[k] * b0 == pytest.approx(truncated[k], rel=1e-12)


class TestCharpolyCheck:
    def test_worked_points(self, chain3):
        assert charpoly_check(chain3, 2.0) <= 1e-12
        assert charpoly_check(chain3, 1e6) <= 1e-10

    def test_two_site_exact(self):
        h = JacobiMatrix((0.0, 0.0), (1.0,))
        assert normalized_poly_sequence(h, 0.0)[-1] == -1.0
        assert charpoly_check(h, 0.0) == 0.0

    def test_random_matrices_random_points(self):
        rng = random.Random(31)
        for _ in range(20):
            h = random_jacobi(rng, rng.randint(1, 12))
            for _ in range(100):
                x = rng.uniform(-5.0, 5.0)
                assert charpoly_check(h, x) <= 1e-10


class TestTruncation:
    def test_examples(self, chain3):
        t = truncate_first(chain3)
        assert t.diag == (0.0, 0.0)
        assert t.offdiag == (chain3.offdiag[0],)
        assert truncate_first(JacobiMatrix((1.0, 2.0), (1.0,))) == JacobiMatrix((2.0,), ())
        assert truncate_first(JacobiMatrix((1.0, 2.0, 3.0), (1.0, 1.0))) == JacobiMatrix(
            (2.0, 3.0), (1.0,)
        )

    def test_too_small(self):
        with pytest.raises(SizeTooSmall):
            truncate_first(JacobiMatrix((1.0,), ()))


class TestEigenvalues:
    def test_worked_example(self, chain3):
        spec = eigenvalues(chain3)
        assert spec.eigenvalues == pytest.approx((-1.0, 0.0, 1.0), abs=1e-12)

    def test_single_site(self):
        assert eigenvalues(JacobiMatrix((3.5,), ())).eigenvalues == (3.5,)

    def test_two_site(self):
        spec = eigenvalues(JacobiMatrix((0.0, 0.0), (1.0,)))
        assert spec.eigenvalues == pytest.approx((-1.0, 1.0), abs=1e-14)

    def test_tolerance_too_loose(self, chain3):
        with pytest.raises(ToleranceTooLoose):
            eigenvalues(chain3, tol=10.0)

    def test_matches_dense_solver(self):
        rng = random.Random(37)
        for _ in range(25):
            h = random_jacobi(rng, rng.randint(2, 12))
            ours = np.asarray(eigenvalues(h).eigenvalues)
            reference = np.linalg.eigvalsh(h.dense())
            assert np.abs(ours - reference).max() <= 1e-10

    def test_sturm_count_totals(self, chain3):
        from palinfrac.jacobi import _count_leq

        lo, hi = gershgorin_interval(chain3)
        assert _count_leq(chain3, lo - 1e-9) == 0
        assert _count_leq(chain3, hi + 1e-9) == 3
        assert _count_leq(chain3, 0.5) == 2
        assert _count_leq(chain3, 0.0) == 2  # half-open: the eigenvalue 0 counts

    def test_gershgorin_contains_spectrum(self):
        rng = random.Random(41)
        for _ in range(20):
            h = random_jacobi(rng, rng.randint(1, 10))
            lo, hi = gershgorin_interval(h)
            eigs = np.linalg.eigvalsh(h.dense())
            assert lo - 1e-12 <= eigs.min() and eigs.max() <= hi + 1e-12


class TestEigenvector:
    def test_worked_example(self, chain3):
        v = eigenvector(chain3, 0.0)
        assert v == pytest.approx(np.array([1.0, 0.0, -1.0]) / math.sqrt(2), abs=1e-14)

    def test_single_site(self):
        assert eigenvector(JacobiMatrix((4.0,), ()), 4.0) == pytest.approx([1.0])

    def test_two_site(self):
        v = eigenvector(JacobiMatrix((0.0, 0.0), (1.0,)), 1.0)
        assert v == pytest.approx(np.array([1.0, 1.0]) / math.sqrt(2), abs=1e-14)

    def test_rejects_non_eigenvalue(self, chain3):
        with pytest.raises(NotAnEigenvalue):
            eigenvector(chain3, 0.5)

    def test_orthogonality(self):
        rng = random.Random(43)
        for _ in range(10):
            h = random_jacobi(rng, rng.randint(2, 12))
            spec = eigenvalues(h)
            vectors = [eigenvector(h, lam) for lam in spec.eigenvalues]
            for i in range(len(vectors)):
                for j in range(i + 1, len(vectors)):
                    assert abs(float(vectors[i] @ vectors[j])) <= 1e-8

    def test_spectral_reconstruction(self):
        rng = random.Random(47)
        for _ in range(10):
            h = random_jacobi(rng, rng.randint(2, 12))
            spec = eigenvalues(h)
            basis = np.column_stack([eigenvector(h, lam) for lam in spec.eigenvalues])
            rebuilt = basis @ np.diag(spec.eigenvalues) @ basis.T
            dense = h.dense()
            scale = np.abs(dense).max()
            assert np.abs(rebuilt - dense).max() <= 1e-8 * scale


class TestPersymmetry:
    def test_examples(self, chain3):
        assert is_persymmetric(chain3, 1e-15)
        assert not is_persymmetric(JacobiMatrix((1.0, 2.0), (1.0,)), 1e-12)
        assert is_persymmetric(JacobiMatrix((0.0, 5.0, 0.0), (3.0, 3.0)), 0.0)

    def test_tolerance_is_inclusive(self):
        h = JacobiMatrix((0.0, 1e-9), (1.0,))
        assert is_persymmetric(h, 1e-9)
        assert not is_persymmetric(h, 1e-10)


class TestExactFloatConsistency:
    def test_chebyshev_chain_spectrum_is_cosine_grid(self):
        for n in range(2, 11):
            h = from_jfraction(chebyshev_jfraction(n))
            computed = eigenvalues(h).eigenvalues
            expected = sorted(math.cos(k * math.pi / n) for k in range(n + 1))
            assert computed == pytest.approx(expected, abs=1e-10)
