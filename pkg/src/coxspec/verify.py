"""Named verification suites over the built-in groups.

Each check returns a record with a measured value, its tolerance and a
verdict; suites aggregate records and the CLI turns them into a JSON
report.  The same records back the acceptance test module.
"""

import numpy as np

from .coxeter import build_group, cayley_graph
from .coxmaps import (
    fundamental_vectors,
    gram_inverse,
    orbit_eigenfunctions,
    psi_delta_inverse,
    psi_lambda_of,
    psi_maps,
)
from .fourier import char_poly_coeffs, crosscheck_mu1, rep_fourier
from .linalg import eigh_symmetric, perron_frobenius
from .mesh import cayley_faces
from .randwalk import build_operator, sample_interior, simplex_point, uniform_point
from .solids import (
    _lambda1_fn,
    boundary_limit,
    closed_form_minimum,
    critical_certificate,
    curve_limit,
    curve_point,
    directional_derivative,
    minimize_lambda1,
)
from .spectral import (
    edge_class_lengths,
    gram_invariance_check,
    lambda1,
    lambda1_cluster,
    spectral_representation,
    spectrum_clusters,
)

SUITE_NAMES = ("closed_forms", "invariants", "theorem2", "curves", "all")

PHI = (1 + np.sqrt(5)) / 2

# second eigenvalue of the canonical Laplacian, per group
CANONICAL_LAMBDA1 = {
    "A3": (1 + np.sqrt(2)) / 3,
    "B3": (1 + np.sqrt(3)) / 3,
    "H3": (1 + np.sqrt(2 + PHI)) / 3,
}
PF_LAMBDA = {"A3": 2 + np.sqrt(2), "B3": 4 + 2 * np.sqrt(3), "H3": 2 / (2 - np.sqrt(2 + PHI))}
GROUP_ORDERS = {"A3": 24, "B3": 48, "H3": 120}


def _check(cid, value, tolerance, passed=None):
    value = float(value)
    if passed is None:
        passed = value <= tolerance
    return {"id": cid, "value": value, "tolerance": tolerance, "passed": bool(passed)}


_GROUPS = {}


def get_group(name):
    if name not in _GROUPS:
        _GROUPS[name] = build_group(name)
    return _GROUPS[name]


def suite_closed_forms():
    checks = []
    for name in ("A3", "B3", "H3"):
        group = get_group(name)
        x0, lam0 = closed_form_minimum(group.datum)
        res = minimize_lambda1(group)
        checks.append(_check(f"min_lambda_{name}", abs(res.optimized.lam - lam0), 1e-9))
        checks.append(
            _check(
                f"min_point_{name}",
                np.abs(res.optimized.x.weights - x0.weights).max(),
                1e-6,
            )
        )

        graph = cayley_graph(group)
        op = build_operator(graph, uniform_point(3))
        cluster = lambda1_cluster(op)
        checks.append(
            _check(
                f"canonical_lambda1_{name}",
                abs(cluster.eigenvalue - CANONICAL_LAMBDA1[name]),
                1e-9,
            )
        )
        checks.append(
            _check(
                f"canonical_mult_{name}",
                cluster.multiplicity,
                3,
                passed=cluster.multiplicity == 3,
            )
        )

        lam_pf, _ = perron_frobenius(gram_inverse(group.datum))
        checks.append(_check(f"pf_gram_inverse_{name}", abs(lam_pf - PF_LAMBDA[name]), 1e-9))
        checks.append(
            _check(
                f"psi_lambda_uniform_{name}",
                abs(psi_lambda_of(group, uniform_point(3)) - CANONICAL_LAMBDA1[name]),
                1e-9,
            )
        )
    return checks


def suite_invariants():
    checks = []
    rng = np.random.default_rng(20240613)

    for name in ("A3", "B3", "H3"):
        group = get_group(name)
        checks.append(
            _check(
                f"group_order_{name}",
                group.order,
                GROUP_ORDERS[name],
                passed=group.order == GROUP_ORDERS[name],
            )
        )

    h3 = get_group("H3")
    graph = cayley_graph(h3)
    n_edges = len(graph.edges)
    checks.append(_check("h3_edges", n_edges, 180, passed=n_edges == 180))
    census = {}
    for f in cayley_faces(graph):
        census[len(f)] = census.get(len(f), 0) + 1
    checks.append(
        _check(
            "h3_face_census",
            sum(census.values()),
            62,
            passed=census == {4: 30, 6: 20, 10: 12},
        )
    )
    euler = graph.n_vertices - n_edges + sum(census.values())
    checks.append(_check("h3_euler", euler, 2, passed=euler == 2))

    # Fourier cross-check and the H3 characteristic polynomial
    for name in ("A3", "B3", "H3"):
        group = get_group(name)
        gname = cayley_graph(group)
        dev = max(
            crosscheck_mu1(sample_interior(rng, 3), group, gname) for _ in range(50)
        )
        checks.append(_check(f"fourier_crosscheck_{name}", dev, 1e-9))
    dev = 0.0
    for i in range(1, 10):
        for j in range(1, 10 - i):
            x = simplex_point(np.array([i, j, 10 - i - j]) / 10)
            c2, c1, c0 = char_poly_coeffs(rep_fourier(x, h3).matrix)
            xx, yy, zz = x.weights
            q = 1 - 4 * xx * yy - 3 * xx * zz - (3 - PHI) * yy * zz
            dev = max(
                dev, abs(c2 + 1), abs(c1 + q), abs(c0 - (q + 2 * (2 - PHI) * xx * yy * zz))
            )
    checks.append(_check("h3_char_poly_grid", dev, 1e-12))

    # Psi consistency: closed-form eigenvalue map vs the eigensolver,
    # and the round trip through the fundamental domain
    for name in ("A3", "B3", "H3"):
        group = get_group(name)
        gname = cayley_graph(group)
        dev_lam, dev_rt = 0.0, 0.0
        for _ in range(100):
            x = sample_interior(rng, 3)
            dev_lam = max(
                dev_lam,
                abs(psi_lambda_of(group, x) - lambda1(build_operator(gname, x))),
            )
            x_back, _ = psi_maps(psi_delta_inverse(group, x))
            dev_rt = max(dev_rt, np.abs(x_back.weights - x.weights).max())
        checks.append(_check(f"psi_vs_eigensolver_{name}", dev_lam, 1e-9))
        checks.append(_check(f"psi_round_trip_{name}", dev_rt, 1e-9))

    # bipartite spectral symmetry on H3
    vals, _ = eigh_symmetric(build_operator(graph, sample_interior(rng, 3)).matrix)
    checks.append(_check("h3_spectrum_symmetry", np.abs(vals + vals[::-1]).max(), 1e-9))

    # orbit eigenfunction norms and Gram invariance at the uniform point
    fp = psi_delta_inverse(h3, uniform_point(3))
    phi_mat = orbit_eigenfunctions(h3, fp)
    checks.append(
        _check(
            "orbit_eigenfunction_norms",
            np.abs(phi_mat.T @ phi_mat - (h3.order / 3) * np.eye(3)).max(),
            1e-8,
        )
    )
    op = build_operator(graph, uniform_point(3))
    emb = spectral_representation(op, lambda1_cluster(op))
    checks.append(_check("gram_invariance", gram_invariance_check(emb, h3), 1e-8))

    # orbit moment matrix proportional to the identity
    p = fp.point
    moment = sum(np.outer(e @ p, e @ p) for e in h3.elements)
    checks.append(
        _check("moment_matrix_identity", np.abs(moment - (h3.order / 3) * np.eye(3)).max(), 1e-8)
    )

    # convexity of lambda_1 on the simplex
    f = _lambda1_fn(graph)
    worst_mid = -np.inf
    for _ in range(200):
        a, b = sample_interior(rng, 3), sample_interior(rng, 3)
        mid = f((a.weights + b.weights) / 2)
        worst_mid = max(worst_mid, mid - (f(a.weights) + f(b.weights)) / 2)
    checks.append(_check("midpoint_convexity", max(worst_mid, 0.0), 1e-9))

    worst_margin = np.inf
    count = 0
    while count < 200:
        x = sample_interior(rng, 3, margin=0.15)
        d = rng.normal(size=3)
        d -= d.mean()
        d *= 0.05 / np.abs(d).max()
        if np.any(x.weights + d <= 0) or np.any(x.weights - d <= 0):
            continue
        margin = (f(x.weights + d) + f(x.weights - d)) / 2 - f(x.weights)
        worst_margin = min(worst_margin, margin)
        count += 1
    checks.append(
        _check("strict_convexity_margin", worst_margin, 1e-10, passed=worst_margin > 1e-10)
    )
    return checks


def suite_theorem2():
    checks = []
    h3 = get_group("H3")
    graph = cayley_graph(h3)
    x0, _ = closed_form_minimum(h3.datum)

    cert0 = critical_certificate(x0, h3, graph)
    checks.append(_check("x0_gradient_norm", cert0.gradient_norm, 1e-6))
    checks.append(
        _check(
            "x0_equilateral",
            max(cert0.class_lengths) / min(cert0.class_lengths) - 1,
            1e-7,
            passed=cert0.equilateral,
        )
    )

    cert_hat = critical_certificate(uniform_point(3), h3, graph)
    checks.append(
        _check(
            "xhat_gradient_norm",
            cert_hat.gradient_norm,
            1e-3,
            passed=cert_hat.gradient_norm > 1e-3,
        )
    )
    checks.append(
        _check(
            "xhat_not_equilateral",
            max(cert_hat.class_lengths) / min(cert_hat.class_lengths) - 1,
            1e-7,
            passed=not cert_hat.equilateral,
        )
    )

    # derivative identity from the equilateral correspondence
    rng = np.random.default_rng(42)
    f = _lambda1_fn(graph)
    worst = 0.0
    done = 0
    while done < 20:
        x = sample_interior(rng, 3)
        op = build_operator(graph, x)
        clusters = spectrum_clusters(op)
        top = clusters[1]
        gap = min(
            clusters[0].eigenvalue - top.eigenvalue,
            top.eigenvalue - clusters[2].eigenvalue,
        )
        if gap <= 1e-4:
            continue
        emb = spectral_representation(op, top)
        k, n = top.multiplicity, graph.n_vertices
        for a in range(3):
            for b in range(a + 1, 3):
                xi = np.zeros(3)
                xi[a], xi[b] = 1.0, -1.0
                d = directional_derivative(f, x.weights, xi)
                ia, jb = graph.successors[0, a], graph.successors[0, b]
                lhs = emb.points[0] @ emb.points[ia] - emb.points[0] @ emb.points[jb]
                worst = max(worst, abs(lhs - (k / n) * d))
        done += 1
    checks.append(_check("derivative_identity", worst, 1e-5))
    return checks


def suite_curves():
    checks = []
    h3 = get_group("H3")
    graph = cayley_graph(h3)

    s = curve_point("C2", 1e3, h3)
    other = min(s.class_lengths[0], s.class_lengths[2])
    checks.append(_check("c2_beta_length_shrinks", s.class_lengths[1] / other, 1e-2))

    _, pts0, _ = curve_limit("C2", h3, 0)
    checks.append(_check("c2_limit_t0_count", len(pts0), 20, passed=len(pts0) == 20))
    _, ptsi, _ = curve_limit("C2", h3, "inf")
    checks.append(_check("c2_limit_tinf_count", len(ptsi), 60, passed=len(ptsi) == 60))

    for target, expected in (
        ([0.0, 0.5, 0.5], 12),
        ([0.5, 0.0, 0.5], 20),
        ([0.5, 0.5, 0.0], 30),
    ):
        _, count, _ = boundary_limit(np.array(target), h3)
        checks.append(
            _check(
                f"edge_limit_{expected}", count, expected, passed=count == expected
            )
        )

    lams = []
    for eps in (1e-2, 1e-3, 1e-4):
        x = simplex_point(np.array([(1 - eps) / 2, eps, (1 - eps) / 2]))
        lams.append(lambda1(build_operator(graph, x)))
    monotone = lams[0] < lams[1] < lams[2]
    checks.append(
        _check("boundary_lambda1", lams[-1], 0.999, passed=monotone and lams[-1] > 0.999)
    )
    return checks


_SUITES = {
    "closed_forms": suite_closed_forms,
    "invariants": suite_invariants,
    "theorem2": suite_theorem2,
    "curves": suite_curves,
}


def run_suite(name):
    """Run a named suite; returns {"suite", "checks", "passed"}."""
    if name == "all":
        checks = [c for key in _SUITES for c in _SUITES[key]()]
    elif name in _SUITES:
        checks = _SUITES[name]()
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return {"suite": name, "checks": checks, "passed": all(c["passed"] for c in checks)}
