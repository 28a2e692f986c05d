import numpy as np
import pytest

from modcomp.components import fit
from modcomp.errors import ComponentCountTooLarge, DimensionMismatch, IndexOutOfRange, TooFewPoints
from modcomp.pca import pca_embed, pca_fit, zero_count

from oracles import align


def covariance_oracle(X, r):
    Xc = X - X.mean(axis=1, keepdims=True)
    w, V = np.linalg.eigh(np.cov(Xc))
    return w[::-1][:r], V[:, ::-1][:, :r]


class TestPcaFit:
    def test_hand_example(self):
        model = pca_fit([[1.0, 3.0], [2.0, 2.0]], 1)
        np.testing.assert_allclose(model.mean, [2.0, 2.0])
        np.testing.assert_allclose(np.abs(model.components[0]), [1.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(model.variances, [2.0], rtol=1e-15)
        w, _ = covariance_oracle(np.array([[1.0, 3.0], [2.0, 2.0]]), 1)
        np.testing.assert_allclose(model.variances, w, rtol=1e-14)

    def test_identical_columns(self):
        X = np.tile([[1.0], [4.0], [2.0]], (1, 5))
        model = pca_fit(X, 2)
        np.testing.assert_allclose(model.variances, 0.0, atol=1e-30)
        assert model.advisories

    def test_covariance_oracle(self):
        X = np.random.default_rng(0).normal(size=(6, 40)) * np.arange(1, 7)[:, None]
        model = pca_fit(X, 4)
        w, V = covariance_oracle(X, 4)
        np.testing.assert_allclose(model.variances, w, rtol=1e-10)
        for i in range(4):
            np.testing.assert_allclose(model.components[i], align(V[:, i], model.components[i]), atol=1e-8)
        np.testing.assert_allclose(model.components @ model.components.T, np.eye(4), atol=1e-10)
        assert np.all(np.diff(model.variances) <= 0)

    def test_too_few_points(self):
        with pytest.raises(TooFewPoints):
            pca_fit(np.ones((3, 1)), 1)

    def test_too_many_components(self):
        with pytest.raises(ComponentCountTooLarge):
            pca_fit(np.random.default_rng(0).normal(size=(3, 3)), 3)

    def test_standardize(self):
        X = np.random.default_rng(1).normal(size=(3, 50)) * np.array([[1.0], [1000.0], [0.01]])
        model = pca_fit(X, 3, standardize=True)
        np.testing.assert_allclose(model.variances.sum(), 3.0, rtol=1e-12)


class TestPcaEmbed:
    def test_hand_example(self):
        X = np.array([[1.0, 3.0], [2.0, 2.0]])
        model = pca_fit(X, 1)
        E = pca_embed(model, X, 1)
        np.testing.assert_allclose(E, [[-1.0, 1.0]], atol=1e-15)

    def test_empty(self):
        X = np.array([[1.0, 3.0], [2.0, 2.0]])
        assert pca_embed(pca_fit(X, 1), X, 0).shape == (0, 2)

    def test_out_of_range(self):
        X = np.array([[1.0, 3.0], [2.0, 2.0]])
        with pytest.raises(IndexOutOfRange):
            pca_embed(pca_fit(X, 1), X, 2)

    def test_dimension_mismatch(self):
        model = pca_fit(np.random.default_rng(0).normal(size=(3, 6)), 1)
        with pytest.raises(DimensionMismatch):
            pca_embed(model, np.ones((4, 6)))

    def test_training_scores_centered_and_uncorrelated(self):
        X = np.random.default_rng(2).uniform(size=(5, 60))
        model = pca_fit(X, 4)
        E = pca_embed(model, X)
        np.testing.assert_allclose(E.mean(axis=1), 0.0, atol=1e-10)
        cov = np.cov(E)
        off = cov - np.diag(np.diag(cov))
        assert np.max(np.abs(off)) <= 1e-8 * model.variances.max()
        np.testing.assert_allclose(np.diag(cov), model.variances, rtol=1e-10)


class TestSparsityContrast:
    def test_centering_densifies(self):
        rng = np.random.default_rng(3)
        X = rng.uniform(size=(20, 30))
        X[rng.uniform(size=X.shape) < 0.8] = 0.0
        X[:, 0] += 0.5
        model = pca_fit(X, 2)
        before, after = zero_count(X), zero_count(model.center(X))
        assert before > 0.7 * X.size and after < before
        assert after == 0
        # MCA consumes X as is: the fitted model was computed from the sparse matrix itself
        mca = fit(X, 2)
        assert mca.stats.d.shape == (30,)
        assert zero_count(X) == before
