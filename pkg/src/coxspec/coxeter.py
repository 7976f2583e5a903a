"""Finite rank-3 Coxeter reflection groups and their Cayley graphs.

A group is built from its matrix of orders m_ij: the simple roots are the
Cholesky factor rows of the Gram matrix M_ij = -cos(pi/m_ij), generators
are the corresponding reflections, and the full element list is produced
by breadth-first closure under right multiplication.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .linalg import det

DEDUP_TOL = 1e-6


class CoxeterError(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterDatum:
    """Coxeter matrix of generator-product orders (diagonal entries 2)."""

    name: str
    orders: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.orders, dtype=int)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise CoxeterError("order matrix must be square")
        if not np.array_equal(m, m.T):
            raise CoxeterError("order matrix must be symmetric")
        if np.any(np.diag(m) != 2):
            raise CoxeterError("diagonal orders must be 2 (involutive generators)")
        if np.any(m[~np.eye(len(m), dtype=bool)] < 2):
            raise CoxeterError("off-diagonal orders must be >= 2")
        object.__setattr__(self, "orders", m)

    @property
    def rank(self):
        return self.orders.shape[0]

    def gram(self):
        """Gram matrix of the simple roots: -cos(pi/m_ij), ones on diagonal."""
        g = -np.cos(np.pi / self.orders)
        np.fill_diagonal(g, 1.0)
        return g

    def is_finite(self):
        return np.all(np.linalg.eigvalsh(self.gram()) > 0)


def _rank3_datum(name, m23):
    # generator ordering: m12 = 2, m13 = 3, m23 varies (3, 4 or 5)
    return CoxeterDatum(name, np.array([[2, 2, 3], [2, 2, m23], [3, m23, 2]]))


BUILTIN_NAMES = ("A3", "B3", "H3")


def coxeter_datum(name):
    """Built-in rank-3 data; the generator ordering puts the commuting
    pair first, so eta = -2 M_23 is 1, sqrt(2), golden ratio."""
    try:
        return _rank3_datum(name, {"A3": 3, "B3": 4, "H3": 5}[name])
    except KeyError:
        raise CoxeterError(f"unknown built-in group {name!r}") from None


def simple_roots(datum):
    """Unit simple roots realizing the Gram matrix, with positive
    determinant orientation.

    Cholesky of the (positive definite) Gram matrix yields rows with the
    required inner products and a positive determinant for free.
    """
    gram = datum.gram()
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError:
        raise CoxeterError(f"{datum.name}: not a finite Coxeter group") from None
    roots = chol  # row i is n_i
    assert det(roots.T) > 0
    return roots


def reflection_matrix(n):
    """Householder reflection about the hyperplane with unit normal n."""
    n = np.asarray(n, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise CoxeterError("reflection normal must be a unit vector")
    return np.eye(len(n)) - 2.0 * np.outer(n, n)


@dataclass(frozen=True)
class ReflectionGroup:
    """Complete matrix group with generator-multiplication structure.

    elements[0] is the identity; successors[i, j] is the index of
    elements[i] @ generators[j].
    """

    datum: CoxeterDatum
    roots: np.ndarray        # (k, k), row i = simple root n_i
    generators: np.ndarray   # (k, k, k)
    elements: np.ndarray     # (n, k, k)
    successors: np.ndarray   # (n, k) int

    @property
    def rank(self):
        return self.datum.rank

    @property
    def order(self):
        return self.elements.shape[0]

    def element_index(self, matrix):
        """Index of the group element entrywise closest to `matrix`."""
        dist = np.abs(self.elements - matrix).max(axis=(1, 2))
        i = int(dist.argmin())
        if dist[i] >= DEDUP_TOL:
            raise CoxeterError("matrix is not a group element")
        return i

    @cached_property
    def word_parity(self):
        """Parity of each element's word length (0 for rotations)."""
        dets = np.linalg.det(self.elements)
        return (dets < 0).astype(int)

    def left_action_permutation(self, g):
        """Vertex permutation i -> index(element_g . element_i)."""
        products = self.elements[g][None, :, :] @ self.elements
        perm = np.empty(self.order, dtype=int)
        for i in range(self.order):
            perm[i] = self.element_index(products[i])
        return perm


def generate_group(datum, max_elements=100_000):
    """Breadth-first closure of the generating reflections.

    Elements are floating matrices deduplicated by entrywise distance;
    the closure counts (24 / 48 / 120 for the built-ins) are stable under
    this tolerance because distinct elements are well separated.
    """
    roots = simple_roots(datum)
    k = datum.rank
    gens = np.stack([reflection_matrix(roots[j]) for j in range(k)])

    elements = [np.eye(k)]
    stacked = np.eye(k)[None, :, :]
    successors = []
    frontier = [0]
    while frontier:
        new_frontier = []
        for i in frontier:
            successors.append(np.full(k, -1, dtype=int))
            for j in range(k):
                cand = elements[i] @ gens[j]
                dist = np.abs(stacked - cand).max(axis=(1, 2))
                hit = int(dist.argmin())
                if dist[hit] < DEDUP_TOL:
                    successors[i][j] = hit
                else:
                    if len(elements) >= max_elements:
                        raise CoxeterError("group too large or not finite")
                    elements.append(cand)
                    stacked = np.concatenate([stacked, cand[None]], axis=0)
                    successors[i][j] = len(elements) - 1
                    new_frontier.append(len(elements) - 1)
        frontier = new_frontier

    return ReflectionGroup(
        datum=datum,
        roots=roots,
        generators=gens,
        elements=stacked,
        successors=np.stack(successors),
    )


def build_group(name, **kwargs):
    return generate_group(coxeter_datum(name), **kwargs)


@dataclass(frozen=True)
class CayleyGraph:
    """Cayley graph on group-element indices, edges labeled by generator.

    For involutive generators each edge equivalence class is a single
    generator label with multiplicity 1.
    """

    group: ReflectionGroup
    successors: np.ndarray  # (n, N) int, neighbor along each class

    @property
    def n_vertices(self):
        return self.successors.shape[0]

    @property
    def n_classes(self):
        return self.successors.shape[1]

    @property
    def multiplicities(self):
        return np.ones(self.n_classes, dtype=int)

    @cached_property
    def edges(self):
        """Sorted list of (i, j, class_label) with i < j."""
        out = []
        for i in range(self.n_vertices):
            for j in range(self.n_classes):
                nb = int(self.successors[i, j])
                if i < nb:
                    out.append((i, nb, j))
        return out

    def adjacency(self, i):
        return [(int(self.successors[i, j]), j) for j in range(self.n_classes)]

    def bipartition(self):
        return self.group.word_parity


def cayley_graph(group):
    # successors double as the adjacency structure: neighbor of vertex i
    # along class j is i * s_j
    return CayleyGraph(group=group, successors=group.successors)
