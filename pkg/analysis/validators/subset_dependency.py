"""
subset_dependency.py - 부분집합 의존성 검사 모듈

검사 (2개 항목):
1. E 의 하향 닫힘 여부 (모든 상호작용의 비어있지 않은 부분집합이 E 에 속하는가)
2. 의존성이 없을 때: 닫힘이 추가하는 심플렉스 수와 facet 표현
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..complex_core import DEFAULT_SIMPLEX_CAP
from ..errors import SimplexSizeError
from ..ses_model import SesStructure, facet_representation
from .closure import ClosureValidator

logger = logging.getLogger(__name__)


@dataclass
class SubsetDependencyReport:
    """부분집합 의존성 보고서"""

    relation: Optional[str]
    holds: bool
    interaction_count: int
    missing_count: int = 0
    witnesses: List[Tuple[int, ...]] = field(default_factory=list)
    facets: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def closure_gain(self) -> int:
        """닫힘으로 새로 생기는 심플렉스 수 (= |closure(E)| - |E|)"""
        return self.missing_count

    def to_dict(self, ses: Optional[SesStructure] = None) -> Dict[str, Any]:
        def render(simplex):
            return list(ses.universe.ids_of(simplex)) if ses is not None else list(simplex)

        return {
            'relation': self.relation or 'all',
            'holds': self.holds,
            'interaction_count': self.interaction_count,
            'missing_count': self.missing_count,
            'closure_gain': self.closure_gain,
            'witnesses': [render(w) for w in self.witnesses],
            'facets': [render(f) for f in self.facets],
        }


class SubsetDependencyChecker:
    """SES 상호작용 족의 부분집합 의존성 검사 클래스"""

    def __init__(
        self,
        ses: SesStructure,
        relation: Optional[str] = None,
        witness_limit: int = 10,
        simplex_cap: int = DEFAULT_SIMPLEX_CAP
    ):
        """
        초기화

        Parameters:
        -----------
        ses : SesStructure
            대상 SES
        relation : str, optional
            검사할 관계 이름 (None 이면 전체 E)
        witness_limit : int
            보고할 최대 누락 부분집합 수
        simplex_cap : int
            면 탐색 전 허용하는 최대 상호작용 크기
        """
        self.ses = ses
        self.relation = relation
        self.witness_limit = witness_limit
        self.simplex_cap = simplex_cap
        self.family = ses.relation(relation)

    def check(self) -> SubsetDependencyReport:
        largest = max((len(e) for e in self.family), default=0)
        if largest > self.simplex_cap:
            raise SimplexSizeError(largest, self.simplex_cap)

        validator = ClosureValidator(self.family, self.ses.universe, witness_limit=self.witness_limit)
        missing = validator.check_closure()

        report = SubsetDependencyReport(
            relation=self.relation,
            holds=missing == 0,
            interaction_count=len(set(self.family)),
            missing_count=missing,
            witnesses=validator.report.witnesses('closure'),
        )
        if not report.holds:
            # 의존성이 없으면 facet 으로 표현된다 (하위 심플렉스 정보 일부 손실)
            report.facets = [tuple(f) for f in facet_representation(self.ses, self.relation)]
            logger.info(
                f"ℹ️ 부분집합 의존성 없음: 누락 {missing}개, facet {len(report.facets)}개"
            )
        return report

    def run_all(self) -> Dict[str, Any]:
        return self.check().to_dict(self.ses)


def check_subset_dependency(
    ses: SesStructure,
    relation: Optional[str] = None,
    witness_limit: int = 10,
    simplex_cap: int = DEFAULT_SIMPLEX_CAP
) -> SubsetDependencyReport:
    return SubsetDependencyChecker(ses, relation, witness_limit, simplex_cap).check()
