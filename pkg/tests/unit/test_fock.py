"""Tests for the truncated Fock-space oracle."""

import warnings
from functools import reduce

import numpy as np
import pytest

from holoquant.config import global_config
from holoquant.exceptions import DimensionError, TailDominanceWarning, TruncationLimitError
from holoquant.fock import (
    annihilation,
    coherent_overlap,
    coherent_state,
    completeness_quadrature,
    creation,
    default_cutoff,
    displaced_diagonal,
    displaced_parity,
    displaced_parity_details,
    displacement,
    euler_weights,
    fock_state,
    husimi_symbol,
    ladder_matrix,
    normal_quantize,
    number_operator,
    parity,
    s_quantize,
    vacuum,
    weyl_quantize,
    weyl_symbol,
)
from holoquant.models import FockOp, FockTruncation
from holoquant.parsing import parse_symbol


class TestTruncation:
    """Basis layout and size limits."""

    def test_dimension_and_index(self):
        trunc = FockTruncation.uniform(2, 3)
        assert trunc.dimension == 16
        assert trunc.index_of((1, 2)) == 6
        np.testing.assert_array_equal(trunc.occupations()[6], [1, 2])

    def test_occupations_outside_cutoff(self):
        with pytest.raises(DimensionError):
            FockTruncation.uniform(1, 3).index_of((4,))

    def test_dimension_cap(self):
        global_config.max_dimension = 100
        with pytest.raises(TruncationLimitError):
            FockTruncation.uniform(2, 10)

    def test_operator_shape_is_checked(self):
        with pytest.raises(DimensionError):
            FockOp(truncation=FockTruncation.uniform(1, 2), matrix=np.eye(2))


class TestOperators:
    """Ladder, number, parity and displacement operators."""

    def test_ladder_matrix(self):
        np.testing.assert_allclose(ladder_matrix(3), [[0, 1, 0], [0, 0, np.sqrt(2)], [0, 0, 0]])

    def test_number_operator_from_ladders(self):
        trunc = FockTruncation.uniform(2, 4)
        for mode in range(2):
            product = creation(trunc, mode) @ annihilation(trunc, mode)
            np.testing.assert_allclose(product.matrix, number_operator(trunc, mode).matrix)

    def test_commutator_below_the_cutoff(self):
        trunc = FockTruncation.uniform(1, 6)
        a, ad = annihilation(trunc), creation(trunc)
        commutator = (a @ ad - ad @ a).matrix
        np.testing.assert_allclose(commutator[:6, :6], np.eye(6), atol=1e-12)

    def test_parity_signs(self):
        trunc = FockTruncation.uniform(2, 1)
        np.testing.assert_allclose(np.diag(parity(trunc).matrix).real, [1, -1, -1, 1])

    def test_displacement_is_unitary(self):
        trunc = FockTruncation.uniform(2, 8)
        D = displacement(trunc, [0.3 + 0.2j, -0.5j])
        np.testing.assert_allclose((D @ D.dagger()).matrix, np.eye(trunc.dimension), atol=1e-12)

    def test_displacement_amplitude_count(self):
        with pytest.raises(DimensionError):
            displacement(FockTruncation.uniform(2, 3), 0.5)

    def test_displaced_vacuum_is_coherent(self, single_mode):
        alpha = 0.8 - 0.4j
        displaced = displacement(single_mode, alpha).matrix @ vacuum(single_mode).vector
        np.testing.assert_allclose(displaced[:20], coherent_state(single_mode, alpha).vector[:20], atol=1e-10)

    def test_displacement_composition(self, single_mode):
        alpha, beta = 0.4 + 0.1j, -0.3 + 0.5j
        composed = (displacement(single_mode, alpha) @ displacement(single_mode, beta)).matrix @ vacuum(single_mode).vector
        phase = np.exp((alpha * np.conj(beta) - np.conj(alpha) * beta) / 2)
        np.testing.assert_allclose(composed, phase * coherent_state(single_mode, alpha + beta).vector, atol=1e-10)


class TestStates:
    """Coherent and number states."""

    def test_coherent_state_norm_and_tail(self, single_mode):
        state = coherent_state(single_mode, 1.0)
        assert state.norm == pytest.approx(1.0, abs=1e-12)
        assert state.tail < 1e-12

    def test_truncated_coherent_state_reports_tail(self):
        state = coherent_state(FockTruncation.uniform(1, 3), 2.0)
        assert state.tail > 0.1
        assert state.norm ** 2 == pytest.approx(1.0 - state.tail)

    def test_overlap_closed_form(self, single_mode):
        alpha, beta = 0.7 + 0.2j, -0.1 + 0.6j
        numeric = np.vdot(coherent_state(single_mode, beta).vector, coherent_state(single_mode, alpha).vector)
        assert numeric == pytest.approx(coherent_overlap(beta, alpha), abs=1e-10)
        assert abs(coherent_overlap(beta, alpha)) ** 2 == pytest.approx(np.exp(-abs(alpha - beta) ** 2))

    def test_fock_state(self):
        state = fock_state(FockTruncation.uniform(2, 2), (1, 2))
        assert state.vector[5] == 1.0
        assert state.norm == 1.0

    def test_default_cutoff(self):
        assert default_cutoff([0.0]) == 30
        assert default_cutoff([2.0, 1.0]) == 62

    def test_completeness(self):
        trunc = FockTruncation.uniform(1, 10)
        resolved = completeness_quadrature(trunc)
        np.testing.assert_allclose(resolved.matrix, np.eye(11), atol=1e-3)

    def test_completeness_is_single_mode(self):
        with pytest.raises(DimensionError):
            completeness_quadrature(FockTruncation.uniform(2, 2))


class TestQuantization:
    """Symbols to operators."""

    def test_normal_quantization_of_number_symbol(self):
        trunc = FockTruncation.uniform(1, 5)
        op = normal_quantize(parse_symbol("a0*ad0", 1), trunc)
        np.testing.assert_allclose(op.matrix, number_operator(trunc).matrix)

    def test_weyl_quantization_adds_half(self):
        trunc = FockTruncation.uniform(1, 5)
        op = weyl_quantize(parse_symbol("a0*ad0", 1), trunc)
        np.testing.assert_allclose(np.diag(op.matrix).real, np.arange(6) + 0.5)

    def test_antinormal_quantization(self):
        trunc = FockTruncation.uniform(1, 5)
        op = s_quantize(parse_symbol("a0*ad0", 1), 1, trunc)
        np.testing.assert_allclose(np.diag(op.matrix).real, np.arange(6) + 1.0)

    def test_real_symbols_give_hermitian_operators(self):
        trunc = FockTruncation.uniform(2, 3)
        op = weyl_quantize(parse_symbol("a0*ad1 + a1*ad0 + i*a0^2 - i*ad0^2", 2), trunc)
        assert op.is_hermitian()

    def test_mode_mismatch(self):
        with pytest.raises(DimensionError):
            normal_quantize(parse_symbol("a0", 1), FockTruncation.uniform(2, 2))


class TestSymbols:
    """Operators back to phase-space values."""

    def test_one_photon_parity_is_negative(self):
        rho = FockOp.projector(fock_state(FockTruncation.uniform(1, 13), (1,)))
        assert displaced_parity(rho, 0.0) == pytest.approx(-1.0, abs=1e-10)
        assert weyl_symbol(rho, 0.0) == pytest.approx(-2.0, abs=1e-10)

    def test_identity_has_unit_weyl_symbol(self, single_mode):
        identity = FockOp.identity(single_mode)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            for z in (0.0, 0.5 + 0.5j, -1.0j):
                assert weyl_symbol(identity, z, "regularized") == pytest.approx(1.0, abs=1e-8)

    def test_auto_regime_warns_before_regularizing(self, single_mode):
        """Identity-like operators never converge directly; auto says so and still returns 1."""
        with pytest.warns(TailDominanceWarning, match="falling back"):
            value = weyl_symbol(FockOp.identity(single_mode), 0.5)
        assert value == pytest.approx(1.0, abs=1e-8)

    def test_small_cutoff_vacuum_is_not_tail_dominated(self):
        rho = FockOp.projector(vacuum(FockTruncation.uniform(1, 3)))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            details = displaced_parity_details(rho, 0.0)
        assert details.regime == "direct"
        assert details.top_fraction == 0.0
        assert details.value == pytest.approx(1.0)

    def test_small_cutoff_coherent_state_is_tail_dominated(self):
        rho = FockOp.projector(coherent_state(FockTruncation.uniform(1, 3), 2.0))
        with pytest.warns(TailDominanceWarning):
            displaced_parity(rho, 2.0, "direct")

    def test_regularized_regime_for_polynomial_operators(self, single_mode):
        op = weyl_quantize(parse_symbol("a0*ad0", 1), single_mode)
        z = 0.6 - 0.3j
        with pytest.warns(TailDominanceWarning):
            details = displaced_parity_details(op, z)
        assert details.regime == "regularized"
        assert 2 * details.value == pytest.approx(abs(z) ** 2, abs=1e-6)

    def test_direct_regime_for_decaying_operators(self, single_mode):
        rho = FockOp.projector(coherent_state(single_mode, 0.5))
        details = displaced_parity_details(rho, 0.5)
        assert details.regime == "direct"
        assert details.value == pytest.approx(1.0, abs=1e-8)

    def test_unknown_regime(self, single_mode):
        with pytest.raises(ValueError):
            displaced_parity(FockOp.identity(single_mode), 0.0, summation="cesaro")

    def test_weyl_symbol_of_product_is_moyal_product(self, single_mode):
        from holoquant.algebra import moyal_star

        F, G = parse_symbol("a0 + ad0^2", 1), parse_symbol("2*ad0 - i*a0*ad0", 1)
        product = weyl_quantize(F, single_mode) @ weyl_quantize(G, single_mode)
        expected = moyal_star(F, G)
        for z in (0.3, 0.2 - 0.7j, -0.5 + 0.1j):
            assert weyl_symbol(product, z, "regularized") == pytest.approx(expected.evaluate([z]), abs=1e-6)

    def test_husimi_symbol_is_normal_symbol(self, single_mode):
        F = parse_symbol("a0^2*ad0 + 3*ad0", 1)
        op = normal_quantize(F, single_mode)
        z = 0.4 + 0.9j
        assert husimi_symbol(op, z) == pytest.approx(F.evaluate([z]), abs=1e-8)

    def test_point_must_match_modes(self, single_mode):
        with pytest.raises(DimensionError):
            weyl_symbol(FockOp.identity(single_mode), [0.0, 0.0])

    def test_multimode_diagonal_matches_dense_product(self, rng):
        trunc = FockTruncation(cutoffs=(5, 4))
        size = (trunc.dimension, trunc.dimension)
        raw = rng.normal(size=size) + 1j * rng.normal(size=size)
        op = FockOp(truncation=trunc, matrix=raw)
        diagonal = displaced_diagonal(op, [0.4 - 0.2j, -0.3j])
        D = reduce(np.kron, diagonal.columns)
        dense = (D.conj() * (raw @ D)).sum(axis=0)
        shape = tuple(block.shape[1] for block in diagonal.columns)
        assert diagonal.values.shape == shape
        np.testing.assert_allclose(diagonal.values, dense.reshape(shape), atol=1e-12)

    def test_two_mode_coherent_parity_at_large_cutoff(self):
        trunc = FockTruncation(cutoffs=(48, 48))
        rho = FockOp.projector(coherent_state(trunc, [1.5, 1.5]))
        xi = [1.0, 1.2 + 0.3j]
        expected = np.exp(-2 * (0.25 + abs(0.3 - 0.3j) ** 2))
        assert displaced_parity(rho, xi, "direct") == pytest.approx(expected, abs=1e-8)

    def test_euler_weights_sum_polynomials(self):
        n = np.arange(4)
        w = euler_weights(3)
        assert np.sum(w) == pytest.approx(0.5)
        assert np.sum(w * n) == pytest.approx(-0.25)
