import sys
from pathlib import Path

import pytest

from zkconst.eta_sigma import eta_from_gamma, sigma_table
from zkconst.li_keiper import lambda_table
from zkconst.precision import PrecisionContext
from zkconst.stieltjes import stieltjes_table

sys.path.insert(0, str(Path(__file__).parent))

from oracles import em_gamma_table  # noqa: E402


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(digits=30)


@pytest.fixture(scope="session")
def em_gammas():
    """Oracle gamma_0..gamma_8 at 60 digits (independent Euler-Maclaurin)."""
    return em_gamma_table(8, 1, 60)


@pytest.fixture(scope="session")
def chain30(ctx30):
    """The table chain gamma -> eta -> sigma -> lambda at 30 digits."""
    gammas = stieltjes_table(13, ctx30)
    etas = eta_from_gamma(13, gammas, ctx30)
    sigmas = sigma_table(13, etas, ctx30)
    lambdas = lambda_table(13, sigmas, ctx30)
    return {"gammas": gammas, "etas": etas, "sigmas": sigmas, "lambdas": lambdas}
