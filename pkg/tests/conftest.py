"""Shared fixtures: the expensive Monte Carlo ensembles run once per session."""

import pytest

from kramers_gl.instanton import BoundaryCondition, SystemParams
from kramers_gl.simulator import SimConfig, estimate_mfpt

# The reference first-passage experiment: bistable Neumann interval below
# the critical length, noise strong enough to transition in reasonable
# time yet weak enough to sit in the activated regime (deltaW/eps ≈ 4.2).
MC_MAIN_CONFIG = SimConfig(
    params=SystemParams(L=2.0, eps=0.12, bc=BoundaryCondition.NEUMANN),
    K=16,
    dt=1e-3,
    t_max=4000.0,
    n_traj=500,
    seed=20260816,
)


@pytest.fixture(scope="session")
def mc_main_ensemble():
    """(config, MfptEstimate) for the reference ensemble; shared session-wide."""
    return MC_MAIN_CONFIG, estimate_mfpt(MC_MAIN_CONFIG)
