"""Nichols algebra computation against the quantum symmetrizer oracle."""

import pytest

from nicholsforge.braided import DiagonalBraiding
from nicholsforge.nichols import (
    FINITE,
    ORACLE_MAX_DEGREE,
    UNDETERMINED,
    dims_symmetry_warning,
    hilbert_series,
    nichols_compute,
    symmetrizer_rank,
)


def test_rank_one_truncated_line():
    # q a primitive N-th root: B(V) = K[x]/(x^N)
    for N in (2, 3, 5):
        report = nichols_compute(DiagonalBraiding.from_entries([[f"zeta({N})"]]), N + 2)
        assert report.termination == FINITE
        assert report.dims == (1,) * N + (0,) * 3
        assert report.total_dim == N
        assert hilbert_series(report) == [1] * N


def test_rank_one_q_equals_one_stays_free():
    report = nichols_compute(DiagonalBraiding.from_entries([["1"]]), 5)
    assert report.termination == UNDETERMINED
    assert report.total_dim is None
    assert report.dims == (1, 1, 1, 1, 1, 1)  # polynomial ring, no relations found


def test_quantum_plane_dims():
    qp = DiagonalBraiding.from_entries([["-1", "1"], ["1", "-1"]])
    report = nichols_compute(qp, 6)
    assert report.termination == FINITE
    assert hilbert_series(report) == [1, 2, 1]
    assert report.total_dim == 4
    assert report.relations  # x_i^2 die in degree 2


def test_symmetrizer_rank_is_independent_check():
    qp = DiagonalBraiding.from_entries([["-1", "1"], ["1", "-1"]])
    assert [symmetrizer_rank(qp, d) for d in range(4)] == [1, 2, 1, 0]


def test_symmetrizer_matches_iteration_on_cartan_type():
    # q_ii = zeta_3, off-diagonal q_ij q_ji = zeta_3^{-1}: A_2 Cartan datum.
    # The algebra is 27-dimensional with top degree 8; comparing the cutoff
    # window keeps the oracle in its cheap range.
    b = DiagonalBraiding.from_entries(
        [["zeta(3)", "zeta(3)^2"], ["1", "zeta(3)"]]
    )
    report = nichols_compute(b, 5)
    for d in range(6):
        assert symmetrizer_rank(b, d) == report.dims[d]


def test_symmetrizer_rank_degree_cap():
    b = DiagonalBraiding.from_entries([["-1"]])
    with pytest.raises(ValueError):
        symmetrizer_rank(b, ORACLE_MAX_DEGREE + 1)


def test_cutoff_validation():
    with pytest.raises(ValueError):
        nichols_compute(DiagonalBraiding.from_entries([["-1"]]), 1)


def test_symmetry_warning_only_on_asymmetric_dims():
    qp = DiagonalBraiding.from_entries([["-1", "1"], ["1", "-1"]])
    assert dims_symmetry_warning(nichols_compute(qp, 6)) is None

    free = nichols_compute(DiagonalBraiding.from_entries([["1"]]), 4)
    assert dims_symmetry_warning(free) is None  # not finite, nothing to check
