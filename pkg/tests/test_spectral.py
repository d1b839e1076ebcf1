"""Exact characteristic polynomials, spectral radius, sandwich bounds."""

import math

import numpy as np
import pytest

from gyrograph import (
    Graph,
    IntMatrix,
    IntPolynomial,
    adjacency_matrix,
    build_gn,
    char_poly_exact,
    closed_form_charpoly_gn,
    integer_determinant,
    pendant_split_matrices,
    power_graph,
    spectral_radius,
    verify_spectral_bounds,
)

GN3_CHARPOLY = IntPolynomial({8: 1, 6: -10, 5: -8, 4: 9, 3: 8})


@pytest.fixture(scope="module")
def gn3_adj():
    return adjacency_matrix(power_graph(build_gn(3)))


def test_adjacency_matrix_k2():
    assert adjacency_matrix(Graph.complete(2)).rows == ((0, 1), (1, 0))


def test_adjacency_matrix_k1():
    assert adjacency_matrix(Graph.complete(1)).rows == ((0,),)


def test_adjacency_matrix_gn3_block_form(gn3_adj):
    # Clique block J - I on the first half, pendant block with only the
    # first row/column populated, zero block on the second half.
    for i in range(4):
        for j in range(4):
            assert gn3_adj[i, j] == (1 if i != j else 0)
            assert gn3_adj[i + 4, j + 4] == 0
            assert gn3_adj[i, j + 4] == (1 if i == 0 else 0)


# ---------------------------------------------------------------------------
# Exact characteristic polynomial
# ---------------------------------------------------------------------------


def test_charpoly_k2():
    assert char_poly_exact(adjacency_matrix(Graph.complete(2))) == IntPolynomial(
        {2: 1, 0: -1}
    )


def test_charpoly_k4_factored_form():
    # (x - 3)(x + 1)^3
    expected = IntPolynomial({1: 1, 0: -3}) * IntPolynomial({1: 1, 0: 1}) ** 3
    assert char_poly_exact(adjacency_matrix(Graph.complete(4))) == expected


def test_charpoly_gn3_factored_form(gn3_adj):
    cubic = IntPolynomial({3: 1, 2: -2, 1: -7, 0: 8})
    expected = IntPolynomial.x_power(3) * IntPolynomial({0: 1, 1: 1}) ** 2 * cubic
    assert char_poly_exact(gn3_adj) == expected == GN3_CHARPOLY


def test_charpoly_against_bareiss_determinant(gn3_adj):
    # Independent oracle: evaluate det(x0*I - A) by fraction-free
    # elimination at small integers.
    p = char_poly_exact(gn3_adj)
    n = gn3_adj.n
    for x0 in range(-2, 3):
        rows = [
            [x0 * (i == j) - gn3_adj[i, j] for j in range(n)] for i in range(n)
        ]
        assert integer_determinant(IntMatrix.from_rows(rows)) == p(x0)


def test_charpoly_against_numpy_eigenvalues(gn3_adj):
    roots = np.sort(np.linalg.eigvalsh(gn3_adj.to_numpy()))
    p = char_poly_exact(gn3_adj)
    coeffs = [p.coefficient(k) for k in range(p.degree, -1, -1)]
    nproots = np.sort(np.roots(coeffs).real)
    assert np.allclose(roots, nproots, atol=1e-8)


def test_charpoly_trace_and_edge_coefficients():
    for graph in (power_graph(build_gn(3)), Graph.complete(5), Graph.cycle(6)):
        p = char_poly_exact(adjacency_matrix(graph))
        n = graph.n
        assert p.coefficient(n) == 1
        assert p.coefficient(n - 1) == 0  # zero trace
        assert p.coefficient(n - 2) == -graph.edge_count


def test_newton_identity_sum_of_squared_roots():
    # p2 = c1^2 - 2 c2 must equal 2|E| for adjacency matrices.
    for n in (3, 4):
        graph = power_graph(build_gn(n))
        p = char_poly_exact(adjacency_matrix(graph))
        c1 = p.coefficient(graph.n - 1)
        c2 = p.coefficient(graph.n - 2)
        assert c1 * c1 - 2 * c2 == 2 * graph.edge_count


@pytest.mark.parametrize("n", [3, 4, 5])
def test_closed_form_equals_exact_charpoly(n):
    graph = power_graph(build_gn(n))
    assert closed_form_charpoly_gn(n) == char_poly_exact(adjacency_matrix(graph))


def test_closed_form_degree_is_order():
    for n in (3, 4, 5, 6):
        assert closed_form_charpoly_gn(n).degree == 2**n


def test_closed_form_gn4_factored():
    cubic = IntPolynomial({3: 1, 2: -6, 1: -15, 0: 48})
    expected = IntPolynomial.x_power(7) * IntPolynomial({0: 1, 1: 1}) ** 6 * cubic
    assert closed_form_charpoly_gn(4) == expected


def test_charpoly_dimension_bound():
    with pytest.raises(ValueError, match="dimension"):
        char_poly_exact(IntMatrix.zeros(65))


def test_bareiss_determinant_basics():
    assert integer_determinant(IntMatrix.from_rows([[2, 0], [0, 3]])) == 6
    assert integer_determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert integer_determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0


# ---------------------------------------------------------------------------
# Spectral radius
# ---------------------------------------------------------------------------


def test_spectral_radius_k4():
    assert spectral_radius(adjacency_matrix(Graph.complete(4))) == pytest.approx(
        3.0, abs=1e-10
    )


def test_spectral_radius_gn3_matches_cubic_root(gn3_adj):
    # Largest root of x^3 - 2x^2 - 7x + 8 = (x - 1)(x^2 - x - 8).
    lam = spectral_radius(gn3_adj)
    assert lam == pytest.approx((1 + math.sqrt(33)) / 2, abs=1e-9)


def test_spectral_radius_zero_matrix():
    assert spectral_radius(IntMatrix.zeros(4)) == 0.0


def test_spectral_radius_bipartite_graph():
    # Shifted iteration must handle the +-lambda symmetry of K33.
    k33 = Graph.from_edges(6, [(i, j + 3) for i in range(3) for j in range(3)])
    assert spectral_radius(adjacency_matrix(k33)) == pytest.approx(3.0, abs=1e-9)


def test_spectral_radius_rejects_non_symmetric():
    with pytest.raises(ValueError, match="symmetric"):
        spectral_radius(IntMatrix.from_rows([[0, 1], [0, 0]]))


def test_spectral_radius_matches_numpy_on_random_graphs():
    rng = np.random.default_rng(7)
    for _ in range(5):
        n = 9
        mat = np.triu((rng.random((n, n)) < 0.4).astype(int), 1)
        mat = mat + mat.T
        m = IntMatrix.from_rows(mat.tolist())
        assert spectral_radius(m) == pytest.approx(
            float(np.max(np.linalg.eigvalsh(mat))), abs=1e-8
        )


@pytest.mark.parametrize("n", [3, 4, 5])
def test_spectral_sandwich_bounds(n):
    s = verify_spectral_bounds(n, tol=1e-10)
    m = 2 ** (n - 1)
    assert s.satisfied
    assert s.bound_lower == m - 1
    assert s.bound_upper == pytest.approx(m - 1 + math.sqrt(m))
    assert s.bound_lower < s.spectral_radius <= s.bound_upper


def test_pendant_split_reassembles_adjacency(gn3_adj):
    d, e = pendant_split_matrices(3)
    total = [
        [d[i, j] + e[i, j] for j in range(8)] for i in range(8)
    ]
    assert IntMatrix.from_rows(total).rows == gn3_adj.rows


@pytest.mark.parametrize("n", [3, 4])
def test_pendant_part_charpoly_is_rank_two(n):
    m = 2 ** (n - 1)
    _, e = pendant_split_matrices(n)
    assert char_poly_exact(e) == IntPolynomial({2 * m: 1, 2 * m - 2: -m})
    eigs = np.linalg.eigvalsh(e.to_numpy())
    assert eigs[-1] == pytest.approx(math.sqrt(m), abs=1e-9)
    assert eigs[0] == pytest.approx(-math.sqrt(m), abs=1e-9)
    assert np.allclose(np.sort(np.abs(eigs))[:-2], 0, atol=1e-9)


@pytest.mark.parametrize("n", [3, 4])
def test_weyl_split_bound(n):
    # lambda_1(A) <= lambda_1(D) + lambda_1(E), with both parts known.
    m = 2 ** (n - 1)
    d, e = pendant_split_matrices(n)
    lam_d = spectral_radius(d)
    lam_e = spectral_radius(e)
    lam_a = spectral_radius(adjacency_matrix(power_graph(build_gn(n))))
    assert lam_d == pytest.approx(m - 1, abs=1e-9)
    assert lam_e == pytest.approx(math.sqrt(m), abs=1e-9)
    assert lam_a <= lam_d + lam_e + 1e-9


def test_vertex_deletion_strictly_decreases_radius():
    # Removing any vertex of the n=3 power graph lowers the top eigenvalue.
    graph = power_graph(build_gn(3))
    lam = float(np.max(np.linalg.eigvalsh(adjacency_matrix(graph).to_numpy())))
    for u in graph.vertices():
        rest = sorted(set(graph.vertices()) - {u})
        idx = {v: i for i, v in enumerate(rest)}
        sub = Graph.from_edges(
            7,
            [
                (idx[a], idx[b])
                for a, b in graph.edges
                if a in idx and b in idx
            ],
        )
        sub_lam = float(
            np.max(np.linalg.eigvalsh(adjacency_matrix(sub).to_numpy()))
        )
        assert sub_lam < lam - 1e-9
