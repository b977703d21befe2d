from pathlib import Path

import pytest

from analysis.complex_core import SimplicialComplex, VertexUniverse
from analysis.config import RunConfig
from analysis.evolution import SAIGATA_PARTICIPANTS, run_growth

DATA_DIR = Path(__file__).resolve().parent.parent / 'data'


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def ijk_universe() -> VertexUniverse:
    return VertexUniverse(['v_i', 'v_j', 'v_k'])


@pytest.fixture
def worked_complex(ijk_universe) -> SimplicialComplex:
    """⟨v_i, v_j, v_k⟩: one 2-simplex and its faces"""
    return SimplicialComplex(ijk_universe).insert_ids(['v_i', 'v_j', 'v_k']).freeze()


@pytest.fixture
def full_five() -> SimplicialComplex:
    universe = VertexUniverse(SAIGATA_PARTICIPANTS)
    return SimplicialComplex(universe).insert_ids(SAIGATA_PARTICIPANTS).freeze()


@pytest.fixture(scope='module')
def saigata_growth():
    return run_growth(SAIGATA_PARTICIPANTS)


@pytest.fixture
def run_config(tmp_path) -> RunConfig:
    return RunConfig(output_dir=tmp_path / 'out')
