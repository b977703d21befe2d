import json
from math import comb

import pandas as pd
import pytest

from analysis.complex_core import VertexUniverse, f_vector
from analysis.errors import StepRangeError
from analysis.evolution import (
    LEDGER_COLUMNS,
    SAIGATA_PARTICIPANTS,
    GroupGrowthAlgorithm,
    GrowthRun,
    default_participants,
    export_ledger,
    generate_step,
    run_growth,
    step_order_class,
)
from analysis.ses_model import OrderClass
from analysis.validators.closure import validate


class TestGenerateStep:

    @pytest.mark.parametrize('alpha, expected', [(1, 10), (2, 10), (3, 5), (4, 1)])
    def test_counts_for_five_participants(self, alpha, expected):
        emitted = generate_step(range(5), alpha)
        assert len(emitted) == expected == comb(5, alpha + 1)
        assert all(s.dimension == alpha for s in emitted)
        assert emitted == sorted(emitted)

    @pytest.mark.parametrize('n', range(2, 13))
    def test_binomial_counts(self, n):
        total = sum(len(generate_step(range(n), alpha)) for alpha in range(1, n))
        assert total + n == 2 ** n - 1

    @pytest.mark.parametrize('vertices, alpha', [
        (range(5), 0),
        (range(5), 5),
        (range(1), 1),
    ])
    def test_out_of_range(self, vertices, alpha):
        with pytest.raises(StepRangeError):
            generate_step(vertices, alpha)

    def test_accepts_universe(self):
        universe = VertexUniverse(['a', 'b', 'c'])
        assert generate_step(universe, 2) == [(0, 1, 2)]


class TestStepOrderClass:

    @pytest.mark.parametrize('step, expected', [
        (1, OrderClass.LOWER),
        (2, OrderClass.HIGHER),
        (4, OrderClass.HIGHER),
    ])
    def test_classes(self, step, expected):
        assert step_order_class(step) is expected

    def test_step_zero(self):
        with pytest.raises(StepRangeError):
            step_order_class(0)


class TestGroupGrowthAlgorithm:

    def test_emitted_and_cumulative_views(self):
        algorithm = GroupGrowthAlgorithm(VertexUniverse(default_participants(4)))
        assert len(algorithm.emitted(2)) == 4
        assert len(algorithm(2)) == 6 + 4


class TestGrowthRun:

    def test_final_complex(self, saigata_growth):
        final = saigata_growth.network.final()
        assert len(final) == 31
        assert final.dimension == 4
        assert f_vector(final) == (5, 10, 10, 5, 1)

    def test_cumulative_f_vectors(self, saigata_growth):
        for alpha in saigata_growth.network.time_index:
            vector = f_vector(saigata_growth.network.at(alpha))
            assert vector == tuple(comb(5, d + 1) for d in range(alpha + 1))

    def test_every_step_is_a_valid_complex(self, saigata_growth):
        for step in saigata_growth.steps:
            assert validate(step.cumulative).is_valid
            assert step.cumulative.is_frozen

    def test_ledger(self, saigata_growth):
        ledger = saigata_growth.ledger()
        assert list(ledger.columns) == LEDGER_COLUMNS
        assert ledger['output'].tolist() == [10, 10, 5, 1]
        assert ledger['simplex_dimension'].tolist() == [1, 2, 3, 4]
        assert ledger['order'].tolist() == ['lower', 'higher', 'higher', 'higher']
        assert ledger['input'].tolist() == [5, 10, 10, 5]
        assert (ledger['output'] == ledger['expected_output']).all()
        assert ledger['example_simplex'].iloc[0] == '{v_i, v_j}'

    def test_three_participants_give_worked_complex(self, worked_complex):
        growth = run_growth(['v_i', 'v_j', 'v_k'], 2)
        assert growth.network.final() == worked_complex

    def test_single_step_is_static(self):
        growth = run_growth(SAIGATA_PARTICIPANTS, 1)
        assert growth.network.is_static
        assert growth.network.manifest()['kind'] == 'static'

    def test_default_last_step(self):
        assert GrowthRun(default_participants(4)).last_step == 3

    @pytest.mark.parametrize('participants, last_step', [
        ([], 1),
        (['solo'], None),
        (default_participants(5), 5),
        (default_participants(5), 0),
    ])
    def test_range_errors(self, participants, last_step):
        with pytest.raises(StepRangeError):
            GrowthRun(participants, last_step)

    def test_analyze(self, saigata_growth):
        summary = saigata_growth.analyze()
        assert summary['final_members'] == 31
        assert summary['binomial_match']
        assert summary['time_index'] == [1, 2, 3, 4]


def test_export_ledger(tmp_path, saigata_growth):
    paths = export_ledger(saigata_growth.ledger(), tmp_path)

    frame = pd.read_csv(paths['csv'])
    assert frame['output'].tolist() == [10, 10, 5, 1]

    records = json.loads(paths['json'].read_text(encoding='utf-8'))
    assert [r['order'] for r in records] == ['lower', 'higher', 'higher', 'higher']
