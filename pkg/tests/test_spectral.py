import numpy as np
import pytest

from coxspec.coxmaps import eta_rho
from coxspec.randwalk import build_operator, sample_interior, simplex_point, uniform_point
from coxspec.spectral import (
    Embedding,
    InvarianceError,
    check_faithful,
    edge_class_lengths,
    gram_invariance_check,
    lambda1,
    lambda1_cluster,
    spectral_representation,
    spectrum_clusters,
)

PHI = (1 + np.sqrt(5)) / 2

CANONICAL = {
    "A3": (1 + np.sqrt(2)) / 3,
    "B3": (1 + np.sqrt(3)) / 3,
    "H3": (1 + np.sqrt(2 + PHI)) / 3,
}


def minimum_point(group):
    eta, rho = eta_rho(group.datum)
    denom = 12 + rho + 6 * eta
    return simplex_point(np.array([3 + rho + eta, 3 + 3 * eta, 6 + 2 * eta]) / denom)


class TestClusters:
    @pytest.mark.parametrize("name", ["A3", "B3", "H3"])
    def test_canonical_lambda1(self, graphs, name):
        op = build_operator(graphs[name], uniform_point(3))
        assert lambda1(op) == pytest.approx(CANONICAL[name], abs=1e-10)

    @pytest.mark.parametrize("name", ["A3", "B3", "H3"])
    def test_lambda1_multiplicity_three(self, graphs, name):
        op = build_operator(graphs[name], uniform_point(3))
        assert lambda1_cluster(op).multiplicity == 3

    def test_multiplicity_three_at_random_interior(self, graphs):
        rng = np.random.default_rng(8)
        for name, graph in graphs.items():
            for _ in range(5):
                op = build_operator(graph, sample_interior(rng, 3))
                assert lambda1_cluster(op).multiplicity == 3

    def test_clusters_cover_spectrum(self, graphs):
        op = build_operator(graphs["H3"], uniform_point(3))
        clusters = spectrum_clusters(op)
        assert sum(c.multiplicity for c in clusters) == 120
        vals = [c.eigenvalue for c in clusters]
        assert vals == sorted(vals, reverse=True)
        assert clusters[0].eigenvalue == pytest.approx(1.0, abs=1e-12)
        assert clusters[0].multiplicity == 1


class TestEmbedding:
    def test_points_on_sphere(self, graphs):
        op = build_operator(graphs["H3"], uniform_point(3))
        emb = spectral_representation(op, lambda1_cluster(op))
        assert emb.dim == 3
        norms = np.linalg.norm(emb.points, axis=1)
        assert norms.max() - norms.min() <= 1e-9

    def test_faithful_at_interior(self, graphs):
        op = build_operator(graphs["H3"], uniform_point(3))
        emb = spectral_representation(op, lambda1_cluster(op))
        assert check_faithful(emb)

    def test_top_cluster_not_faithful(self, graphs):
        # the constant eigenfunction collapses all vertices to one point
        op = build_operator(graphs["A3"], uniform_point(3))
        top = spectrum_clusters(op)[0]
        with pytest.warns(UserWarning, match="multiplicity-1"):
            emb = spectral_representation(op, top)
        assert not check_faithful(emb)
        assert np.abs(emb.points - emb.points[0]).max() <= 1e-10

    def test_residual_guard(self, graphs):
        op = build_operator(graphs["A3"], uniform_point(3))
        cluster = lambda1_cluster(op)
        broken = type(cluster)(
            eigenvalue=cluster.eigenvalue + 0.1,
            multiplicity=cluster.multiplicity,
            basis=cluster.basis,
        )
        with pytest.raises(InvarianceError):
            spectral_representation(op, broken)


class TestClassLengths:
    @pytest.mark.parametrize("name", ["A3", "B3", "H3"])
    def test_equilateral_at_minimum(self, groups, graphs, name):
        op = build_operator(graphs[name], minimum_point(groups[name]))
        emb = spectral_representation(op, lambda1_cluster(op))
        lengths = edge_class_lengths(emb, graphs[name])
        assert max(lengths) / min(lengths) == pytest.approx(1.0, abs=1e-7)

    def test_three_distinct_lengths_at_uniform(self, graphs):
        op = build_operator(graphs["H3"], uniform_point(3))
        emb = spectral_representation(op, lambda1_cluster(op))
        lengths = sorted(edge_class_lengths(emb, graphs["H3"]))
        assert lengths[1] - lengths[0] > 1e-4
        assert lengths[2] - lengths[1] > 1e-4

    def test_tampered_embedding_detected(self, graphs):
        op = build_operator(graphs["H3"], uniform_point(3))
        emb = spectral_representation(op, lambda1_cluster(op))
        pts = emb.points.copy()
        pts[17] *= 1.5
        bad = Embedding(points=pts, cluster=emb.cluster)
        with pytest.raises(InvarianceError):
            edge_class_lengths(bad, graphs["H3"])


class TestInvariance:
    def test_gram_invariance_exhaustive(self, h3, graphs):
        rng = np.random.default_rng(9)
        op = build_operator(graphs["H3"], sample_interior(rng, 3))
        emb = spectral_representation(op, lambda1_cluster(op))
        dev = gram_invariance_check(emb, h3, gamma_indices=range(h3.order))
        assert dev <= 1e-8

    def test_gram_invariance_all_groups(self, groups, graphs):
        for name, group in groups.items():
            op = build_operator(graphs[name], uniform_point(3))
            emb = spectral_representation(op, lambda1_cluster(op))
            assert gram_invariance_check(emb, group) <= 1e-8
