"""
closure.py - 단체 복합체 조건 검증 모듈

검증 (3개 항목):
1. 정점 조건: 구성원에 등장하는 모든 정점이 0-심플렉스로 존재
2. 닫힘 조건: 모든 구성원의 비어있지 않은 진부분집합이 구성원
3. 교차 조건: 두 구성원의 교집합은 공집합이거나 구성원

위반은 실패가 아니라 보고서 내용이다 (증인 포함).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set, Tuple

import numpy as np

from ..complex_core import Simplex, SimplicialComplex, VertexUniverse

logger = logging.getLogger(__name__)

CONDITIONS = ('nonempty', 'vertex', 'closure', 'intersection')

# int64 비트마스크로 표현 가능한 최대 정점 인덱스
_MASK_LIMIT = 63


@dataclass(frozen=True)
class Violation:
    """조건 위반 1건"""

    condition: str
    witness: Tuple[int, ...]
    context: Tuple[Tuple[int, ...], ...] = ()


@dataclass
class ValidationReport:
    """검증 보고서 (조건별 증인은 witness_limit 까지 보관)"""

    member_count: int = 0
    violations: List[Violation] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    pairwise_checked: bool = True
    witness_limit: int = 10

    @property
    def is_valid(self) -> bool:
        return not any(self.counts.values())

    def __bool__(self) -> bool:
        # 빈 보고서 = 유효
        return not self.is_valid

    def witnesses(self, condition: str) -> List[Tuple[int, ...]]:
        return [v.witness for v in self.violations if v.condition == condition]

    def violated_conditions(self) -> List[str]:
        return [c for c in CONDITIONS if self.counts.get(c, 0)]

    def to_dict(self, universe: Optional[VertexUniverse] = None) -> Dict[str, Any]:
        def render(simplex):
            if universe is None or not simplex:
                return list(simplex)
            return list(universe.ids_of(simplex))

        return {
            'valid': self.is_valid,
            'member_count': self.member_count,
            'pairwise_checked': self.pairwise_checked,
            'counts': {c: self.counts.get(c, 0) for c in CONDITIONS},
            'violations': [
                {
                    'condition': v.condition,
                    'witness': render(v.witness),
                    'context': [render(c) for c in v.context],
                }
                for v in self.violations
            ],
        }


class ClosureValidator:
    """후보 심플렉스 족 검증 클래스"""

    def __init__(
        self,
        family,
        universe: Optional[VertexUniverse] = None,
        witness_limit: int = 10,
        pairwise_check_limit: int = 4096
    ):
        """
        초기화

        Parameters:
        -----------
        family : SimplicialComplex 또는 iterable
            후보 족 (Simplex, 인덱스 시퀀스, 또는 universe 가 있으면 id 시퀀스)
        universe : VertexUniverse, optional
            id 해석 및 라벨 표시용
        witness_limit : int
            조건별 최대 증인 수
        pairwise_check_limit : int
            교차 조건 전수 검사를 수행할 최대 구성원 수
        """
        if isinstance(family, SimplicialComplex):
            universe = universe or family.universe
            items = family.members()
        else:
            items = list(family)

        self.universe = universe
        self.witness_limit = witness_limit
        self.pairwise_check_limit = pairwise_check_limit
        self.report = ValidationReport(witness_limit=witness_limit)
        self.members: Set[Simplex] = set()

        for item in items:
            simplex = self._coerce(item)
            if simplex is not None:
                self.members.add(simplex)
        self.report.member_count = len(self.members)

    def _coerce(self, item) -> Optional[Simplex]:
        values = list(item)
        if not values:
            self._record('nonempty', ())
            return None
        if self.universe is not None and all(isinstance(v, str) for v in values):
            return self.universe.canonicalize(values)
        return Simplex.from_indices(values)

    def _record(self, condition: str, witness, context=()) -> None:
        self.report.counts[condition] = self.report.counts.get(condition, 0) + 1
        if self.report.counts[condition] <= self.witness_limit:
            self.report.violations.append(
                Violation(condition, tuple(witness), tuple(tuple(c) for c in context))
            )

    # ========== 1. 정점 조건 ==========
    def check_vertices(self) -> int:
        appearing = sorted({v for simplex in self.members for v in simplex})
        missing = 0
        for vertex in appearing:
            if (vertex,) not in self.members:
                context = min(s for s in self.members if vertex in s)
                self._record('vertex', (vertex,), (context,))
                missing += 1
        return missing

    # ========== 2. 닫힘 조건 ==========
    def check_closure(self) -> int:
        """
        누락된 면 전체를 찾는다

        구성원의 코차원 1 면에서 출발해, 누락된 면의 면으로만 내려간다.
        존재하는 면의 하위 면은 그 면이 구성원으로서 따로 검사된다.
        """
        missing: Dict[Simplex, Simplex] = {}
        frontier = []
        for simplex in sorted(self.members):
            for facet in simplex.facets():
                if facet not in self.members and facet not in missing:
                    missing[facet] = simplex
                    frontier.append(facet)
        while frontier:
            face = frontier.pop()
            for facet in face.facets():
                if facet not in self.members and facet not in missing:
                    missing[facet] = missing[face]
                    frontier.append(facet)

        for face in sorted(missing, key=lambda s: (-len(s), s)):
            self._record('closure', face, (missing[face],))
        return len(missing)

    # ========== 3. 교차 조건 ==========
    def check_intersections(self) -> int:
        if len(self.members) > self.pairwise_check_limit:
            logger.info(
                f"ℹ️ 구성원 {len(self.members)}개 > {self.pairwise_check_limit}: 교차 조건 전수 검사 생략"
            )
            self.report.pairwise_checked = False
            return 0

        ordered = sorted(self.members)
        if not ordered:
            return 0
        if max(s[-1] for s in ordered) < _MASK_LIMIT:
            return self._check_intersections_masked(ordered)

        found = 0
        as_sets = [frozenset(s) for s in ordered]
        for i, left in enumerate(as_sets):
            for j in range(i + 1, len(as_sets)):
                common = left & as_sets[j]
                if common and Simplex.from_indices(common) not in self.members:
                    self._record('intersection', Simplex.from_indices(common), (ordered[i], ordered[j]))
                    found += 1
        return found

    def _check_intersections_masked(self, ordered: List[Simplex]) -> int:
        masks = np.array([sum(1 << v for v in s) for s in ordered], dtype=np.int64)
        present = np.sort(masks)
        found = 0
        for i in range(len(ordered) - 1):
            common = masks[i] & masks[i + 1:]
            candidates = np.nonzero(common)[0]
            if candidates.size == 0:
                continue
            values = common[candidates]
            absent = candidates[~np.isin(values, present, assume_unique=False)]
            for offset in absent:
                j = i + 1 + int(offset)
                witness = Simplex.from_indices(
                    b for b in range(_MASK_LIMIT) if int(common[offset]) >> b & 1
                )
                self._record('intersection', witness, (ordered[i], ordered[j]))
                found += 1
        return found

    def run_all(self) -> ValidationReport:
        """세 조건 모두 검사"""
        self.check_vertices()
        self.check_closure()
        self.check_intersections()
        return self.report


def validate(
    family,
    universe: Optional[VertexUniverse] = None,
    witness_limit: int = 10,
    pairwise_check_limit: int = 4096
) -> ValidationReport:
    return ClosureValidator(family, universe, witness_limit, pairwise_check_limit).run_all()
