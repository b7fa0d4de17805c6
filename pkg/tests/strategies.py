"""Hypothesis strategies for random symplectic operations and Gaussian states."""

from __future__ import annotations

import math

import numpy as np
from hypothesis import strategies as st

from omentangle.gaussian import GaussianState, SymplecticOp, make_beamsplitter, make_rotation, make_squeezer
from omentangle.math import symmetrize

angles = st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False)
squeezings = st.floats(min_value=-0.5, max_value=0.5, allow_nan=False)
symplectic_eigenvalues = st.floats(min_value=0.5, max_value=5.0, allow_nan=False)


@st.composite
def local_symplectics(draw: st.DrawFn, n_modes: int = 2) -> SymplecticOp:
    """Independent rotation-squeeze-rotation on every mode."""
    op = SymplecticOp.identity(n_modes)
    for mode in range(n_modes):
        single = make_rotation(draw(angles)) @ make_squeezer(draw(squeezings)) @ make_rotation(draw(angles))
        op = single.embed([mode], n_modes) @ op
    return op


@st.composite
def symplectics(draw: st.DrawFn, n_modes: int = 2) -> SymplecticOp:
    op = draw(local_symplectics(n_modes))
    for first in range(n_modes - 1):
        mixing = make_beamsplitter(draw(st.floats(0.0, math.pi / 2)), draw(angles))
        op = draw(local_symplectics(n_modes)) @ mixing.embed([first, first + 1], n_modes) @ op
    return op


@st.composite
def gaussian_states(draw: st.DrawFn, n_modes: int = 2) -> GaussianState:
    """Physical states ``S diag(nu) S^T`` with random displacements."""
    nus = [draw(symplectic_eigenvalues) for _ in range(n_modes)]
    s = draw(symplectics(n_modes)).matrix
    cov = symmetrize(s @ np.diag(np.repeat(nus, 2)) @ s.T)
    mean = draw(st.lists(st.floats(-3.0, 3.0), min_size=2 * n_modes, max_size=2 * n_modes))
    return GaussianState(mean=np.array(mean), cov=cov)


def two_mode_squeezed(r: float) -> GaussianState:
    """Two-mode squeezed vacuum, correlated positions and anti-correlated momenta."""
    c, s = math.cosh(2 * r) / 2.0, math.sinh(2 * r) / 2.0
    z = np.diag([1.0, -1.0])
    return GaussianState(mean=np.zeros(4), cov=np.block([[c * np.eye(2), s * z], [s * z, c * np.eye(2)]]))
