"""
comprehensive.py - 종합 검증

SES + 복합체 검증을 통합하여:
1. 모든 검증 결과 수집 (복합체 조건, 부분집합 의존성, SES 제약)
2. 차단 조건 / 경고 분류
3. 종합 판정
"""

import logging
from typing import Any, Dict, List, Optional

from ..complex_core import SimplicialComplex, f_vector
from ..config import RunConfig
from ..ses_model import SesStructure, UnitKind, partition_interactions
from .closure import validate
from .subset_dependency import check_subset_dependency

logger = logging.getLogger(__name__)


class ComprehensiveEvaluator:
    """검증 모듈을 통합하는 평가자"""

    def __init__(
        self,
        ses: SesStructure,
        complex_: SimplicialComplex,
        config: Optional[RunConfig] = None,
        relation: Optional[str] = None
    ):
        """
        초기화

        Parameters:
        -----------
        ses : SesStructure
            원본 SES
        complex_ : SimplicialComplex
            SES 로부터 만든 복합체
        config : RunConfig, optional
            witness_limit / strict 설정
        relation : str, optional
            검사할 관계 이름 (None 이면 전체 E)
        """
        self.ses = ses
        self.complex = complex_
        self.config = config or RunConfig()
        self.relation = relation
        self.validator_results: Dict[str, Any] = {}
        self.blocking: List[str] = []
        self.warnings: List[str] = []

    # ========== 1단계: 검증 실행 ==========
    def run_all_validators(self) -> Dict[str, Any]:
        results = {}

        report = validate(
            self.complex,
            witness_limit=self.config.witness_limit,
            pairwise_check_limit=self.config.pairwise_check_limit,
        )
        results['closure'] = report.to_dict(self.complex.universe)

        dependency = check_subset_dependency(
            self.ses, self.relation, self.config.witness_limit, self.config.simplex_cap
        )
        results['subset_dependency'] = dependency.to_dict(self.ses)

        results['ses_constraints'] = self._check_ses_constraints()
        results['partition'] = partition_interactions(self.ses, self.relation).sizes()

        self.validator_results = results
        return results

    def _check_ses_constraints(self) -> Dict[str, Any]:
        social = set(self.ses.social_vertices)
        ecological = set(self.ses.ecological_vertices)
        return {
            'disjoint': not (social & ecological),
            'kind_partition_total': social | ecological == set(self.ses.vertex_ids),
            'social_count': len(social),
            'ecological_count': len(ecological),
            'single_kind': not social or not ecological,
            'kinds': sorted(k.value for k in set(self.ses.kinds.values()) if isinstance(k, UnitKind)),
        }

    # ========== 2단계: 차단 조건 ==========
    def check_blocking_criteria(self) -> Dict[str, Any]:
        if not self.validator_results:
            self.run_all_validators()

        self.blocking, self.warnings = [], []
        closure = self.validator_results['closure']
        dependency = self.validator_results['subset_dependency']
        constraints = self.validator_results['ses_constraints']

        if not closure['valid']:
            violated = [c for c, n in closure['counts'].items() if n]
            self.blocking.append(f"복합체 조건 위반: {', '.join(violated)}")
        if not constraints['disjoint']:
            self.blocking.append("V_S ∩ V_E ≠ ∅")

        if not dependency['holds']:
            message = (
                f"부분집합 의존성 없음 (누락 {dependency['missing_count']}개, "
                f"닫힘으로 보충)"
            )
            if self.config.require_subset_dependency:
                self.blocking.append(message)
            else:
                self.warnings.append(message)

        if constraints['single_kind']:
            self.warnings.append("단일 종류 정점만 존재 (토이 모델 완화)")
        if not closure['pairwise_checked']:
            self.warnings.append("교차 조건 전수 검사 생략 (닫힘 조건으로 함의)")

        return {'blocking': self.blocking, 'warnings': self.warnings}

    # ========== 3단계: 종합 판정 ==========
    def passed(self) -> bool:
        return not self.check_blocking_criteria()['blocking']

    def get_comprehensive_report(self) -> Dict[str, Any]:
        criteria = self.check_blocking_criteria()
        verdict = '✅ 통과' if not criteria['blocking'] else '❌ 검증 실패'
        return {
            'relation': self.relation or 'all',
            'dimension': self.complex.dimension,
            'members': len(self.complex),
            'f_vector': list(f_vector(self.complex)),
            'blocking': criteria['blocking'],
            'warnings': criteria['warnings'],
            'verdict': verdict,
            'passed': not criteria['blocking'],
            'details': self.validator_results,
        }
