"""Closed-form machinery for reflection groups: fundamental-domain
vectors dual to the simple roots, the maps between fundamental points and
simplex weights/eigenvalues, and exact edge-length formulas.

For a fundamental point p = sum_j alpha_j p_j on the unit sphere there is
a unique interior simplex point X and eigenvalue lam with
lam p = sum_j x_j sigma_j(p); both directions of that correspondence are
implemented here, the inverse through the Perron-Frobenius eigenvector of
a strictly positive matrix.
"""

from dataclasses import dataclass

import numpy as np

from .coxeter import ReflectionGroup
from .linalg import cross_product_k, det, perron_frobenius, solve
from .randwalk import SimplexPoint, simplex_point


class DomainError(ValueError):
    pass


def eta_rho(datum):
    """Shape constants of the built-in rank-3 family.

    eta = -2 * Gram_23 is 1, sqrt(2) or the golden ratio for A3/B3/H3;
    rho = 3 - eta^2 equals 4 det(Gram).
    """
    if datum.rank != 3 or datum.orders[0, 1] != 2 or datum.orders[0, 2] != 3:
        raise DomainError("eta/rho constants require the built-in rank-3 ordering")
    eta = -2.0 * datum.gram()[1, 2]
    return eta, 3.0 - eta**2


def gram_inverse(datum):
    """Inverse Gram matrix; closed form for the rank-3 built-ins, linear
    solve otherwise."""
    gram = datum.gram()
    if datum.rank == 3 and datum.orders[0, 1] == 2 and datum.orders[0, 2] == 3:
        eta, rho = eta_rho(datum)
        return (1.0 / rho) * np.array(
            [[1 + rho, eta, 2], [eta, 3, 2 * eta], [2, 2 * eta, 4]]
        )
    return solve(gram, np.eye(datum.rank))


def fundamental_vectors(group: ReflectionGroup):
    """Vectors p_j with <n_i, p_j> = V * delta_ij, V = det(n_1..n_k) > 0.

    p_j is the alternating (k-1)-ary cross product of the simple roots
    with n_j omitted.
    """
    roots = group.roots
    k = group.rank
    v = det(roots.T)
    if v <= 0:
        raise DomainError("root orientation must have positive determinant")
    ps = []
    for j in range(k):
        others = [roots[i] for i in range(k) if i != j]
        ps.append((-1.0) ** j * cross_product_k(*others))
    p = np.stack(ps)
    assert np.abs(roots @ p.T - v * np.eye(k)).max() <= 1e-12
    return p, v


@dataclass(frozen=True)
class FundamentalPoint:
    """Point of the spherical fundamental domain with its cone coordinates."""

    group: ReflectionGroup
    alphas: np.ndarray  # positive coefficients over the p_j
    point: np.ndarray   # sum_j alpha_j p_j, unit norm

    @property
    def volume(self):
        return fundamental_vectors(self.group)[1]


def fundamental_point(group, alphas):
    """Normalize positive cone coefficients onto the unit sphere."""
    alphas = np.asarray(alphas, dtype=float)
    if alphas.shape != (group.rank,) or np.any(alphas <= 0):
        raise DomainError("need strictly positive coefficients, one per generator")
    pvecs, _ = fundamental_vectors(group)
    p = alphas @ pvecs
    scale = np.linalg.norm(p)
    return FundamentalPoint(group=group, alphas=alphas / scale, point=p / scale)


def psi_maps(fp: FundamentalPoint):
    """Simplex point and eigenvalue realizing lam p = sum_j x_j sigma_j(p).

    The unnormalized weights are x' = V diag(alpha)^{-1} M^{-1} alpha and
    lam' = sum_j x'_j - 2V; rescaling by sum_j x'_j lands on the simplex.
    """
    group = fp.group
    _, v = fundamental_vectors(group)
    minv = gram_inverse(group.datum)
    alphas = fp.alphas
    xprime = v * (minv @ alphas) / alphas
    total = xprime.sum()
    lam = (total - 2.0 * v) / total
    x = simplex_point(xprime / total)

    # defining relation, checked rather than assumed
    lhs = lam * fp.point
    rhs = sum(
        x.weights[j] * (group.generators[j] @ fp.point) for j in range(group.rank)
    )
    assert np.abs(lhs - rhs).max() <= 1e-10
    return x, float(lam)


def psi_delta_inverse(group, x: SimplexPoint):
    """Fundamental point mapping to the given interior simplex point.

    alpha is the Perron-Frobenius eigenvector of the positive matrix
    A = V diag(x)^{-1} M^{-1}, scaled onto the unit sphere.
    """
    if not x.interior:
        raise DomainError("inverse map requires an interior simplex point")
    _, v = fundamental_vectors(group)
    minv = gram_inverse(group.datum)
    a = v * minv / x.weights[:, None]
    _, alpha = perron_frobenius(a)
    return fundamental_point(group, alpha)


def psi_lambda_of(group, x: SimplexPoint):
    """lam = 1 - 2 V mu with mu the reciprocal Perron-Frobenius
    eigenvalue of V diag(x)^{-1} M^{-1}; equals psi_maps of the inverse."""
    if not x.interior:
        raise DomainError("requires an interior simplex point")
    _, v = fundamental_vectors(group)
    minv = gram_inverse(group.datum)
    a = v * minv / x.weights[:, None]
    lam_pf, _ = perron_frobenius(a)
    return 1.0 - 2.0 * v / lam_pf


def edge_lengths_closed_form(fp: FundamentalPoint):
    """Euclidean length of each edge-class image of the orbit map:
    ||p - sigma_j(p)|| = 2 alpha_j V."""
    _, v = fundamental_vectors(fp.group)
    return 2.0 * fp.alphas * v


def orbit_points(group, p, dedup_tol=1e-6):
    """Deduplicated orbit of a point and the element -> orbit-index map."""
    images = group.elements @ np.asarray(p, dtype=float)
    reps = []
    index = np.empty(group.order, dtype=int)
    for i, q in enumerate(images):
        for r, rep in enumerate(reps):
            if np.abs(rep - q).max() < dedup_tol:
                index[i] = r
                break
        else:
            index[i] = len(reps)
            reps.append(q)
    return np.stack(reps), index


def orbit_eigenfunctions(group, fp: FundamentalPoint):
    """Columns r are gamma -> <gamma p, e_r>: pairwise orthogonal
    eigenfunctions of the realized operator with squared norm |G| / k."""
    return group.elements @ fp.point
