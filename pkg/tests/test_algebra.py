import numpy as np
import pytest

from conftest import random_connected_graph
from netosc import (
    SPINOR,
    build_hamiltonian,
    build_matrices,
    decompose,
    hamiltonian_power,
    kron,
    path_graph,
)


def kron_by_definition(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Index-by-index Kronecker product, the layout oracle for kron()."""
    p, q = a.shape
    r, s = b.shape
    out = np.zeros((p * r, q * s), dtype=np.result_type(a, b))
    for i in range(p):
        for j in range(q):
            for k in range(r):
                for l in range(s):
                    out[i * r + k, j * s + l] = a[i, j] * b[k, l]
    return out


class TestSpinorBasis:
    def test_anticommutator_is_identity_exactly(self):
        anti = SPINOR.a_hat @ SPINOR.b_hat + SPINOR.b_hat @ SPINOR.a_hat
        assert np.array_equal(anti, SPINOR.e_hat)

    def test_nilpotency_exactly(self):
        zero = np.zeros((2, 2))
        assert np.array_equal(SPINOR.a_hat @ SPINOR.a_hat, zero)
        assert np.array_equal(SPINOR.b_hat @ SPINOR.b_hat, zero)

    def test_three_letter_words_collapse(self):
        assert np.array_equal(SPINOR.a_hat @ SPINOR.b_hat @ SPINOR.a_hat, SPINOR.a_hat)
        assert np.array_equal(SPINOR.b_hat @ SPINOR.a_hat @ SPINOR.b_hat, SPINOR.b_hat)

    def test_products_are_idempotent(self):
        assert np.array_equal(SPINOR.ab @ SPINOR.ab, SPINOR.ab)
        assert np.array_equal(SPINOR.ba @ SPINOR.ba, SPINOR.ba)

    def test_stored_products_match_multiplication(self):
        assert np.array_equal(SPINOR.ab, SPINOR.a_hat @ SPINOR.b_hat)
        assert np.array_equal(SPINOR.ba, SPINOR.b_hat @ SPINOR.a_hat)

    def test_basis_is_read_only(self):
        with pytest.raises(ValueError):
            SPINOR.a_hat[0, 0] = 9.0


class TestKron:
    def test_identity_factor_gives_block_diagonal(self, rng):
        b = rng.normal(size=(3, 3))
        out = kron(np.eye(2), b)
        np.testing.assert_array_equal(out[:3, :3], b)
        np.testing.assert_array_equal(out[3:, 3:], b)
        np.testing.assert_array_equal(out[:3, 3:], np.zeros((3, 3)))

    def test_layout_matches_definition(self, rng):
        for p, q, r, s in ((2, 2, 2, 2), (2, 3, 3, 2), (1, 4, 2, 2)):
            a = rng.normal(size=(p, q))
            b = rng.normal(size=(r, s))
            np.testing.assert_array_equal(kron(a, b), kron_by_definition(a, b))

    def test_signed_spinor_blocks(self):
        L = build_matrices(path_graph(2, 1.0)).laplacian
        out = kron(L, SPINOR.a_hat)
        np.testing.assert_array_equal(out[:2, :2], SPINOR.a_hat)
        np.testing.assert_array_equal(out[:2, 2:], -SPINOR.a_hat)

    def test_mixed_product_property(self, rng):
        for size in (2, 3):
            a, b, c, d = (rng.normal(size=(size, size)) for _ in range(4))
            np.testing.assert_allclose(
                kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12
            )


class TestBuildHamiltonian:
    def test_path2_equals_unit_degree_form(self):
        # sqrt(D) = I on the unit chain, so H_hat = L (x) a_hat + I (x) b_hat
        m = build_matrices(path_graph(2, 1.0))
        h = build_hamiltonian(m)
        expected = kron(m.laplacian, SPINOR.a_hat) + kron(np.eye(2), SPINOR.b_hat)
        np.testing.assert_allclose(h.matrix, expected, atol=1e-15)

    def test_forms_agree_on_random_graphs(self, rng):
        for n in (2, 4, 6, 8):
            m = build_matrices(random_connected_graph(rng, n))
            h = build_hamiltonian(m)
            assert np.max(np.abs(h.diagonal_form - h.nilpotent_form)) <= 1e-12 * max(
                1.0, np.max(np.abs(h.matrix))
            )
            assert np.isrealobj(h.matrix)

    def test_plus_rows_carry_sqrt_degree(self, rng):
        # the sqrt(D) (x) diag(+1,-1) part puts +sqrt(d_i) at interleaved (+) slots
        m = build_matrices(random_connected_graph(rng, 5))
        diag_part = kron(m.sqrt_degree, np.diag([1.0, -1.0]))
        d = np.diag(m.degree)
        for i in range(5):
            assert diag_part[2 * i, 2 * i] == np.sqrt(d[i])
            assert diag_part[2 * i + 1, 2 * i + 1] == -np.sqrt(d[i])

    def test_square_expansion(self, rng):
        # H_hat^2 = H sqrt(D) (x) ab + L (x) ba
        for g in (path_graph(2, 1.0), random_connected_graph(rng, 5)):
            m = build_matrices(g)
            h = build_hamiltonian(m)
            expected = kron(m.semi_normalized @ m.sqrt_degree, SPINOR.ab) + kron(
                m.laplacian, SPINOR.ba
            )
            np.testing.assert_allclose(h.matrix @ h.matrix, expected, atol=1e-12)

    def test_square_block_identity(self, rng):
        # the same square regrouped on identity and swap blocks:
        # H_hat^2 = [D - (A + sqrt(D)^-1 A sqrt(D))/2] (x) I
        #           - [(A - sqrt(D)^-1 A sqrt(D))/2] (x) swap
        m = build_matrices(random_connected_graph(rng, 6))
        h = build_hamiltonian(m)
        conj = m.inv_sqrt_degree @ m.adjacency @ m.sqrt_degree
        swap = np.array([[0.0, 1.0], [1.0, 0.0]])
        expected = kron(m.degree - 0.5 * (m.adjacency + conj), np.eye(2)) - kron(
            0.5 * (m.adjacency - conj), swap
        )
        np.testing.assert_allclose(h.matrix @ h.matrix, expected, atol=1e-12)


class TestHamiltonianPower:
    def test_zeroth_even_power_is_identity(self, rng):
        m = build_matrices(random_connected_graph(rng, 4))
        d = decompose(m)
        np.testing.assert_allclose(
            hamiltonian_power(m, d, 0, "even"), np.eye(8), atol=1e-12
        )

    def test_zeroth_odd_power_is_hamiltonian(self, rng):
        m = build_matrices(random_connected_graph(rng, 4))
        d = decompose(m)
        h = build_hamiltonian(m)
        np.testing.assert_allclose(hamiltonian_power(m, d, 0, "odd"), h.matrix, atol=1e-12)

    def test_path4_third_power_pair(self):
        m = build_matrices(path_graph(4, 1.0))
        d = decompose(m)
        h = build_hamiltonian(m)
        naive = np.linalg.matrix_power(h.matrix, 6)
        closed = hamiltonian_power(m, d, 3, "even")
        assert np.max(np.abs(closed - naive)) <= 1e-10 * max(1.0, np.max(np.abs(naive)))
        naive = np.linalg.matrix_power(h.matrix, 7)
        closed = hamiltonian_power(m, d, 3, "odd")
        assert np.max(np.abs(closed - naive)) <= 1e-10 * max(1.0, np.max(np.abs(naive)))

    def test_matches_naive_powers_on_random_graphs(self, rng):
        for trial in range(8):
            n = int(rng.integers(2, 9))
            m = build_matrices(random_connected_graph(rng, n))
            d = decompose(m)
            h = build_hamiltonian(m)
            naive = np.eye(2 * n)
            for exponent in range(0, 16):
                k, parity = divmod(exponent, 2)
                closed = hamiltonian_power(m, d, k, "odd" if parity else "even")
                scale = max(1.0, np.max(np.abs(naive)))
                assert np.max(np.abs(closed - naive)) <= 1e-10 * scale, (
                    f"exponent {exponent} on trial {trial}"
                )
                naive = naive @ h.matrix

    def test_rejects_bad_arguments(self, rng):
        m = build_matrices(random_connected_graph(rng, 3))
        d = decompose(m)
        with pytest.raises(ValueError):
            hamiltonian_power(m, d, -1, "even")
        with pytest.raises(ValueError):
            hamiltonian_power(m, d, 1, "sideways")
