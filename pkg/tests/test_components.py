import numpy as np
import pytest

from modcomp.components import check_assumptions, deflate, embed, fit, project_onto_component, row_scale_factors
from modcomp.datasets import two_blobs
from modcomp.errors import (
    ComponentCountTooLarge,
    DegenerateGraph,
    DimensionMismatch,
    IndexOutOfRange,
    RankTooSmall,
    SeparationViolated,
)
from modcomp.linalg import apply_pinv_left
from modcomp.modularity import partition_by_sign

from oracles import align, dense_eigh_desc, explicit_B, explicit_pinv


@pytest.fixture
def fixture_model(fixture_X):
    return fit(fixture_X, 1)


@pytest.fixture(scope="module")
def random_fit():
    X = np.random.default_rng(11).uniform(size=(8, 12))
    return X, fit(X)


def data_with_orthogonal_direction():
    """Right singular vector v_2 is orthogonal to the all-ones vector, so its weight in d vanishes."""
    V = np.column_stack([np.ones(3) / np.sqrt(3), np.array([1.0, -1.0, 0.0]) / np.sqrt(2),
                         np.array([1.0, 1.0, -2.0]) / np.sqrt(6)])
    return np.diag([3.0, 2.0, 1.0]) @ V.T


class TestFit:
    def test_fixture(self, fixture_model):
        rec = fixture_model.components[0]
        assert rec.index == 1
        np.testing.assert_allclose(rec.beta, 1.6, rtol=1e-15)
        np.testing.assert_allclose(rec.b, np.array([1.0, -1.0]) / np.sqrt(2), atol=1e-15)
        np.testing.assert_allclose(rec.m, [0.35355339059327373, -0.7071067811865476], atol=1e-15)
        np.testing.assert_allclose(rec.m @ rec.m, 0.625, rtol=1e-15)
        np.testing.assert_allclose(rec.c, np.array([1.0, -2.0]) / np.sqrt(5), atol=1e-15)
        np.testing.assert_allclose(rec.modularity, 1.6, rtol=1e-14)

    def test_fixture_against_explicit_oracle(self, fixture_X, fixture_model):
        w, V = dense_eigh_desc(explicit_B(fixture_X))
        b = align(V[:, 0], fixture_model.components[0].b)
        m = b @ explicit_pinv(fixture_X)
        np.testing.assert_allclose(fixture_model.components[0].m, m, atol=1e-14)

    def test_rank_one(self):
        with pytest.raises(RankTooSmall):
            fit(np.ones((2, 2)), 1)
        with pytest.raises(RankTooSmall):
            fit(np.ones((2, 2)))

    def test_too_many_components(self, fixture_X):
        with pytest.raises(ComponentCountTooLarge):
            fit(fixture_X, 2)

    def test_refuses_on_violation(self):
        with pytest.raises(SeparationViolated):
            fit(np.eye(2))

    def test_refuses_degenerate(self):
        X = np.random.default_rng(0).normal(size=(3, 8))
        with pytest.raises(DegenerateGraph):
            fit(X - X.mean(axis=1, keepdims=True))

    def test_zero_components(self, fixture_X):
        model = fit(fixture_X, 0)
        assert model.num_components == 0 and model.C.shape == (2, 0)

    def test_invariants(self, random_fit):
        X, model = random_fit
        assert model.num_components == model.rank - 1 == 7
        C = model.C
        off = C.T @ C - np.eye(C.shape[1])
        assert np.max(np.abs(off)) <= 1e-10
        for rec in model.components:
            assert abs(rec.beta * (rec.m @ rec.m) - 1) <= 1e-8
            np.testing.assert_allclose(rec.c @ X, np.sqrt(rec.beta) * rec.b, atol=1e-8)
            # both constructions of m agree
            np.testing.assert_allclose(rec.m, apply_pinv_left(model.factors, rec.b), atol=1e-10)
            np.testing.assert_allclose(rec.m, rec.b @ explicit_pinv(X), atol=1e-10)
            assert abs(rec.b @ np.ones(X.shape[1])) <= 1e-9

    def test_matches_explicit_eigensolver(self, random_fit):
        X, model = random_fit
        w, V = dense_eigh_desc(explicit_B(X))
        np.testing.assert_allclose(model.beta, w[: model.num_components], rtol=1e-10)
        for i, rec in enumerate(model.components):
            np.testing.assert_allclose(rec.b, align(V[:, i], rec.b), atol=1e-8)

    def test_normalize_rows(self):
        X = np.random.default_rng(3).uniform(size=(4, 9)) * np.array([[1.0], [100.0], [0.01], [5.0]])
        model = fit(X, 2, normalize_rows=True)
        Xn = X / np.linalg.norm(X, axis=1, keepdims=True)
        ref = fit(Xn, 2)
        np.testing.assert_allclose(model.beta, ref.beta, rtol=1e-12)
        np.testing.assert_allclose(embed(model, X), embed(ref, Xn), atol=1e-10)

    def test_row_scale_keeps_zero_rows(self):
        np.testing.assert_array_equal(row_scale_factors([[3.0, 4.0], [0.0, 0.0]]), [0.2, 1.0])

    def test_wrong_attribute_count(self, fixture_model):
        with pytest.raises(DimensionMismatch):
            embed(fixture_model, np.ones((3, 2)))


class TestProjection:
    def test_fixture(self, fixture_X, fixture_model):
        P = project_onto_component(fixture_model, fixture_X, 1)
        expected = np.array([[0.4, -0.4], [-0.8, 0.8]])
        np.testing.assert_allclose(P, expected, atol=1e-15)
        c = fixture_model.components[0].c
        np.testing.assert_allclose(P, np.outer(c, c) @ fixture_X, atol=1e-15)

    def test_closed_form(self, random_fit):
        X, model = random_fit
        for rec in model.components:
            P = project_onto_component(model, X, rec.index)
            np.testing.assert_allclose(P, np.outer(rec.c, rec.b) / np.linalg.norm(rec.m), atol=1e-8)
            np.testing.assert_allclose(P, np.sqrt(rec.beta) * np.outer(rec.c, rec.b), atol=1e-8)

    def test_residual_orthogonal_to_components(self, random_fit):
        X, model = random_fit
        R = X - sum(project_onto_component(model, X, i) for i in range(1, model.num_components + 1))
        assert np.max(np.abs(model.C.T @ R)) <= 1e-9

    @pytest.mark.parametrize("i", [0, 2])
    def test_out_of_range(self, fixture_X, fixture_model, i):
        with pytest.raises(IndexOutOfRange):
            project_onto_component(fixture_model, fixture_X, i)


class TestEmbed:
    def test_fixture(self, fixture_X, fixture_model):
        E = embed(fixture_model, fixture_X, 1)
        np.testing.assert_allclose(E, [[0.894427190999916, -0.894427190999916]], atol=1e-15)
        np.testing.assert_allclose(E[0], np.sqrt(1.6) * np.array([1.0, -1.0]) / np.sqrt(2), atol=1e-15)

    def test_empty(self, fixture_X, fixture_model):
        assert embed(fixture_model, fixture_X, 0).shape == (0, 2)

    def test_too_many(self, fixture_X, fixture_model):
        with pytest.raises(IndexOutOfRange):
            embed(fixture_model, fixture_X, 2)

    def test_rows_are_scaled_eigenvectors(self, random_fit):
        X, model = random_fit
        E = embed(model, X)
        np.testing.assert_allclose(E, np.sqrt(model.beta)[:, None] * np.array([r.b for r in model.components]), atol=1e-8)

    def test_two_blob_signs(self):
        X, truth = two_blobs()
        model = fit(X, 1)
        E = embed(model, X)
        np.testing.assert_array_equal(partition_by_sign(E[0]), partition_by_sign(model.components[0].b))


class TestDeflate:
    def test_fixture(self, fixture_X, fixture_model):
        X2 = deflate(fixture_X, fixture_model, 2)
        np.testing.assert_allclose(X2, [[1.6, 0.4], [0.8, 0.2]], atol=1e-15)
        assert np.linalg.matrix_rank(X2) == 1

    def test_first_is_identity(self, fixture_X, fixture_model):
        np.testing.assert_array_equal(deflate(fixture_X, fixture_model, 1), fixture_X)

    @pytest.mark.parametrize("i", [0, 3])
    def test_out_of_range(self, fixture_X, fixture_model, i):
        with pytest.raises(IndexOutOfRange):
            deflate(fixture_X, fixture_model, i)

    def test_brauer(self, random_fit):
        X, model = random_fit
        w, _ = dense_eigh_desc(explicit_B(X))
        X2 = deflate(X, model, 2)
        w2, V2 = dense_eigh_desc(explicit_B(X2))
        np.testing.assert_allclose(w2[0], model.beta[1], atol=1e-8)
        rec = model.components[1]
        np.testing.assert_allclose(align(V2[:, 0], rec.b), rec.b, atol=1e-8)
        expected = np.sort(np.concatenate([[0.0], w[1:]]))
        np.testing.assert_allclose(np.sort(w2), expected, atol=1e-8)


class TestCheckAssumptions:
    def test_fixture(self, fixture_X):
        rep = check_assumptions(fixture_X)
        assert rep.passed and rep.k == 2 and rep.positive_alpha_count == 2 and rep.beta_count == 1
        np.testing.assert_allclose(rep.alpha, [4.0, 1.0])
        np.testing.assert_allclose(rep.beta, [1.6])

    def test_identity(self):
        rep = check_assumptions(np.eye(2))
        assert not rep.passed
        assert [v.kind for v in rep.violations][0] == "alpha_tie"

    def test_rank_one(self):
        rep = check_assumptions(np.ones((2, 2)))
        assert rep.passed and rep.k == 1 and rep.beta_count == 0
        assert any("no modularity components" in a for a in rep.advisories)

    def test_zero_matrix(self):
        rep = check_assumptions(np.zeros((2, 3)))
        assert not rep.passed and rep.degenerate and rep.k == 0

    def test_centered(self):
        X = np.random.default_rng(5).normal(size=(3, 7))
        rep = check_assumptions(X - X.mean(axis=1, keepdims=True))
        assert rep.degenerate

    def test_vanishing_weight(self):
        rep = check_assumptions(data_with_orthogonal_direction())
        kinds = {(v.i, v.kind) for v in rep.violations}
        assert (2, "y_component_zero") in kinds
        assert rep.beta_count == 0

    def test_near_collision(self):
        X = data_with_orthogonal_direction()
        X = X + 1e-6 * np.random.default_rng(0).normal(size=X.shape)
        rep = check_assumptions(X)
        assert rep.beta_count == 2
        assert {v.kind for v in rep.violations} & {"beta_equals_alpha_i", "beta_equals_alpha_next"}
        scale = rep.alpha[0]
        assert all(0 < v.gap <= 1e-8 * scale for v in rep.violations)

    def test_gram_with_negative_entries_still_audited(self):
        X = np.random.default_rng(4).normal(size=(5, 9)) + 0.2
        rep = check_assumptions(X)
        assert rep.k == 5 and rep.beta_count == 4
