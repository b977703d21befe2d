"""
Group-Growth Evolution
반복적 그룹 성장 알고리즘 A 및 단계별 원장(ledger)

핵심 기능:
1. 단계 α 마다 (α+1)-명 그룹 상호작용 전체 생성 (α-심플렉스)
2. 누적 복합체 구성 (α 이하 단계 출력의 닫힌 합집합)
3. 단계 원장 (입력 / 심플렉스 차원 / 차수 분류 / 출력 수)
4. 원장 내보내기 (CSV + JSON)
"""

import json
import logging
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import pandas as pd
from scipy.special import comb

from .complex_core import DEFAULT_SIMPLEX_CAP, Simplex, SimplicialComplex, VertexUniverse, f_vector
from .errors import StepRangeError
from .ses_model import OrderClass, SenNetwork, SesStructure, build_complex, participant_ses

logger = logging.getLogger(__name__)

SAIGATA_PARTICIPANTS = ('v_i', 'v_j', 'v_k', 'v_l', 'v_m')

LEDGER_COLUMNS = [
    'step', 'input', 'input_dimension', 'simplex_dimension', 'group_size',
    'example_simplex', 'order', 'output', 'expected_output', 'result',
]


def default_participants(n: int) -> List[str]:
    return [f"v{i}" for i in range(n)]


def _vertex_indices(vertex_set: Union[VertexUniverse, Sequence[int]]) -> List[int]:
    if isinstance(vertex_set, VertexUniverse):
        return list(range(len(vertex_set)))
    return sorted(set(int(v) for v in vertex_set))


def _check_range(n: int, step: int) -> None:
    if n < 2:
        raise StepRangeError(f"참여자는 2명 이상이어야 합니다 (현재: {n})")
    if not 1 <= step <= n - 1:
        raise StepRangeError(f"단계 α={step} 는 1 ≤ α ≤ {n - 1} 범위여야 합니다 (n={n})")


def generate_step(vertex_set: Union[VertexUniverse, Sequence[int]], step: int) -> List[Simplex]:
    """
    단계 α 의 출력: 정점 집합의 모든 (α+1)-부분집합 (사전식 순서)

    Parameters:
    -----------
    vertex_set : VertexUniverse 또는 정점 인덱스 목록
        참여자 집합 (n ≥ 2)
    step : int
        α (1 ≤ α ≤ n-1)

    Returns:
    --------
    list of Simplex
        C(n, α+1) 개의 α-심플렉스
    """
    indices = _vertex_indices(vertex_set)
    _check_range(len(indices), step)
    return [Simplex._trusted(group) for group in combinations(indices, step + 1)]


def step_order_class(step: int) -> OrderClass:
    """단계 1 (그룹 크기 2) 은 저차, 2 이상은 고차"""
    if step < 1:
        raise StepRangeError(f"단계는 1 이상이어야 합니다 (현재: {step})")
    return OrderClass.LOWER if step == 1 else OrderClass.HIGHER


@dataclass
class GrowthStep:
    """성장 단계 1개의 기록"""

    step: int
    group_size: int
    emitted: List[Simplex]
    cumulative: SimplicialComplex


class GroupGrowthAlgorithm:
    """SEN 단계 알고리즘 A: 출력(emitted) 과 누적(cumulative) 두 관점을 제공"""

    def __init__(self, universe: VertexUniverse):
        self.universe = universe
        self.n = len(universe)

    def emitted(self, alpha: int) -> List[Simplex]:
        return generate_step(self.universe, alpha)

    def __call__(self, alpha: int) -> List[Simplex]:
        """α 이하 모든 단계 출력의 합집합 (SEN 이 쓰는 누적 관점)"""
        _check_range(self.n, alpha)
        result: List[Simplex] = []
        for step in range(1, alpha + 1):
            result.extend(self.emitted(step))
        return result


class GrowthRun:
    """그룹 성장 실행기"""

    def __init__(
        self,
        participants: Sequence[str],
        last_step: Optional[int] = None,
        simplex_cap: int = DEFAULT_SIMPLEX_CAP
    ):
        """
        Parameters:
        -----------
        participants : list of str
            참여자 id (n ≥ 2)
        last_step : int, optional
            마지막 단계 (기본: n-1, 모든 참여자가 한 그룹)
        simplex_cap : int
            심플렉스 크기 상한
        """
        self.n = len(participants)
        self.last_step = self.n - 1 if last_step is None else last_step
        _check_range(self.n, self.last_step)
        self.ses: SesStructure = participant_ses(participants)
        self.simplex_cap = simplex_cap
        self.algorithm = GroupGrowthAlgorithm(self.ses.universe)
        self.steps: List[GrowthStep] = []
        self.network: Optional[SenNetwork] = None

    def run(self) -> SenNetwork:
        """단계 순서대로 누적 조립 (단일 작성자)"""
        current = build_complex(self.ses, [], self.simplex_cap)
        self.steps = []
        for alpha in range(1, self.last_step + 1):
            emitted = self.algorithm.emitted(alpha)
            current = current.copy()
            for simplex in emitted:
                current.insert_closed(simplex)
            current.freeze()
            self.steps.append(GrowthStep(alpha, alpha + 1, emitted, current))
            logger.debug(f"α={alpha}: 출력 {len(emitted)}개, 누적 {len(current)}개")

        self.network = SenNetwork(self.ses, {s.step: s.cumulative for s in self.steps})
        logger.info(
            f"🌱 그룹 성장 완료: n={self.n}, Λ=1..{self.last_step}, "
            f"최종 {len(self.network.final())}개 심플렉스"
        )
        return self.network

    def ledger(self) -> pd.DataFrame:
        """단계 원장 (단계별 입력/출력 수와 차수 분류)"""
        if not self.steps:
            self.run()

        rows = []
        for record in self.steps:
            alpha = record.step
            if alpha == 1:
                input_count = self.n
            else:
                input_count = len(self.steps[alpha - 2].emitted)
            output = len(record.emitted)
            rows.append({
                'step': alpha,
                'input': input_count,
                'input_dimension': alpha - 1,
                'simplex_dimension': alpha,
                'group_size': record.group_size,
                'example_simplex': self.ses.universe.label(record.emitted[0]),
                'order': step_order_class(alpha).value,
                'output': output,
                'expected_output': int(comb(self.n, alpha + 1, exact=True)),
                'result': (
                    f"{output} interactions of group size {record.group_size}, "
                    f"{output} rule sets"
                ),
            })
        return pd.DataFrame(rows, columns=LEDGER_COLUMNS)

    def analyze(self) -> Dict:
        """실행 + 원장 + 요약"""
        network = self.network or self.run()
        ledger = self.ledger()
        final = network.final()
        return {
            'n': self.n,
            'time_index': list(network.time_index),
            'static': network.is_static,
            'final_members': len(final),
            'final_dimension': final.dimension,
            'f_vector': list(f_vector(final)),
            'binomial_match': bool((ledger['output'] == ledger['expected_output']).all()),
            'ledger': ledger.to_dict(orient='records'),
        }


def run_growth(
    participants: Sequence[str],
    last_step: Optional[int] = None,
    simplex_cap: int = DEFAULT_SIMPLEX_CAP
) -> GrowthRun:
    """그룹 성장 실행 (network, steps, ledger 는 반환된 GrowthRun 에서 조회)"""
    growth = GrowthRun(participants, last_step, simplex_cap)
    growth.run()
    return growth


def export_ledger(ledger: pd.DataFrame, directory) -> Dict[str, Path]:
    """원장 CSV + JSON 저장"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    csv_path = directory / 'ledger.csv'
    ledger.to_csv(csv_path, index=False, lineterminator='\n')

    json_path = directory / 'ledger.json'
    json_path.write_text(
        json.dumps(ledger.to_dict(orient='records'), indent=2, ensure_ascii=False) + '\n',
        encoding='utf-8'
    )
    return {'csv': csv_path, 'json': json_path}


if __name__ == "__main__":
    growth = run_growth(SAIGATA_PARTICIPANTS)
    print(growth.ledger().to_string(index=False))
    print(json.dumps(growth.analyze()['f_vector']))
