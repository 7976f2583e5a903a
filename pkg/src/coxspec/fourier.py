"""Group Fourier transform of the walk restricted to the geometric
3-dimensional representation.

The transform at the geometric representation is just the 3x3 symmetric
matrix x sigma_1 + y sigma_2 + z sigma_3; each of its eigenvalues occurs
in the spectrum of the full operator with multiplicity at least three.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import eigh_symmetric
from .randwalk import SimplexPoint, build_operator
from .coxeter import cayley_graph
from .spectral import lambda1


@dataclass(frozen=True)
class RepSpectrum:
    point: SimplexPoint
    matrix: np.ndarray  # 3x3 symmetric
    roots: np.ndarray   # descending eigenvalues mu_1 >= mu_2 >= mu_3


def rep_fourier(x: SimplexPoint, group):
    """Fourier transform of the walk at the geometric representation."""
    if group.rank != 3:
        raise ValueError("geometric Fourier transform implemented for rank 3")
    mat = np.tensordot(x.weights, group.generators, axes=1)
    vals, _ = eigh_symmetric(mat)
    return RepSpectrum(point=x, matrix=mat, roots=vals)


def char_poly_coeffs(mat):
    """Coefficients (c2, c1, c0) of det(t I - mat) = t^3 + c2 t^2 + c1 t + c0."""
    tr = np.trace(mat)
    minors = 0.5 * (tr**2 - np.trace(mat @ mat))
    return -float(tr), float(minors), -float(np.linalg.det(mat))


def mu1(x: SimplexPoint, group):
    """Largest geometric-representation eigenvalue."""
    return float(rep_fourier(x, group).roots[0])


def crosscheck_mu1(x: SimplexPoint, group, graph=None):
    """|mu_1(X) - lambda_1(P_X)| against the full eigensolver."""
    if graph is None:
        graph = cayley_graph(group)
    lam = lambda1(build_operator(graph, x))
    return abs(mu1(x, group) - lam)
