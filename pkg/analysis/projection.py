"""
projection.py - 그래프 투영과 정보 손실 분석

핵심 기능:
1. 기저 그래프 (1-골격 = 쌍별 상호작용 모델)
2. 라벨 그래프 동일성 (같은 유니버스 위 정점/간선 집합 비교)
3. 손실 보고서 (차원 ≥ 2 심플렉스가 투영에서 사라지는 양)
4. 골격 충돌 (1-골격은 같지만 복합체는 다른 경우 + 증인)
5. GML 내보내기
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
import pandas as pd

from .complex_core import Simplex, SimplicialComplex, VertexUniverse, f_vector, p_skeleton
from .errors import UniverseMismatchError

logger = logging.getLogger(__name__)


def _require_same_universe(left: VertexUniverse, right: VertexUniverse) -> None:
    if left != right:
        raise UniverseMismatchError(
            f"정점 유니버스 불일치: {list(left.ids)} ≠ {list(right.ids)}"
        )


# ========== 기저 그래프 ==========
@dataclass(frozen=True)
class UnderlyingGraph:
    """G = (V, E): 정점 = 0-심플렉스, 간선 = 1-심플렉스"""

    universe: VertexUniverse
    vertices: FrozenSet[int]
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"자기 루프는 허용되지 않습니다: ({a}, {b})")
            if a > b:
                raise ValueError(f"간선은 정규형 (a < b) 이어야 합니다: ({a}, {b})")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"간선 끝점이 정점 집합에 없습니다: ({a}, {b})")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        """id 라벨 networkx 그래프 (정점/간선 사전식 삽입 순서)"""
        graph = nx.Graph()
        for index in sorted(self.vertices):
            graph.add_node(self.universe.id_of(index), index=index)
        for a, b in self.sorted_edges():
            graph.add_edge(self.universe.id_of(a), self.universe.id_of(b))
        return graph

    def to_gml(self) -> str:
        """GML 텍스트 (정점 목록 다음 간선 목록)"""
        return '\n'.join(nx.generate_gml(self.to_networkx())) + '\n'


def to_underlying_graph(complex_: SimplicialComplex) -> UnderlyingGraph:
    """1-골격을 그래프로 재해석"""
    skeleton = p_skeleton(complex_, 1)
    return UnderlyingGraph(
        universe=complex_.universe,
        vertices=frozenset(s[0] for s in skeleton.stratum(0)),
        edges=frozenset((s[0], s[1]) for s in skeleton.stratum(1)),
    )


def graphs_identical(left: UnderlyingGraph, right: UnderlyingGraph) -> bool:
    """같은 유니버스 위 라벨 그래프 동일성 (동형 판정 아님)"""
    _require_same_universe(left.universe, right.universe)
    return left.vertices == right.vertices and left.edges == right.edges


# ========== 손실 보고서 ==========
@dataclass
class SkeletonCollision:
    """1-골격은 같고 구성원 집합은 다른 두 복합체"""

    collides: bool
    skeletons_identical: bool
    witness: Optional[Simplex] = None
    witness_side: Optional[str] = None

    def to_dict(self, universe: Optional[VertexUniverse] = None) -> Dict[str, Any]:
        witness = None
        if self.witness is not None:
            witness = list(universe.ids_of(self.witness)) if universe else list(self.witness)
        return {
            'collision': self.collides,
            'skeletons_identical': self.skeletons_identical,
            'witness': witness,
            'witness_dimension': self.witness.dimension if self.witness is not None else None,
            'witness_side': self.witness_side,
        }


@dataclass
class LossReport:
    """그래프 투영 시 정보 손실"""

    simplices_total: int
    simplices_surviving: int
    dimension: int
    lost_by_dimension: Dict[int, int] = field(default_factory=dict)
    f_vector: Tuple[int, ...] = ()
    skeleton_collision: Optional[SkeletonCollision] = None

    @property
    def simplices_lost(self) -> int:
        return sum(self.lost_by_dimension.values())

    @property
    def dimension_drop(self) -> int:
        """dim(Δ) - min(dim(Δ), 1)"""
        return max(self.dimension, 0) - min(max(self.dimension, 0), 1)

    @property
    def loss_ratio(self) -> float:
        return self.simplices_lost / self.simplices_total if self.simplices_total else 0.0

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'simplices_total': self.simplices_total,
            'simplices_surviving': self.simplices_surviving,
            'simplices_lost': self.simplices_lost,
            'lost_by_dimension': {str(d): c for d, c in sorted(self.lost_by_dimension.items())},
            'dimension': self.dimension,
            'dimension_drop': self.dimension_drop,
            'loss_ratio': round(self.loss_ratio, 6),
        }
        if self.skeleton_collision is not None:
            result['skeleton_collision'] = self.skeleton_collision.to_dict()
        return result

    def to_frame(self) -> pd.DataFrame:
        """사람이 읽는 손실 테이블 (차원별 전체/유지/손실)"""
        rows = [
            {'dimension': d, 'count': count, 'status': 'lost' if d >= 2 else 'surviving'}
            for d, count in enumerate(self.f_vector)
        ]
        return pd.DataFrame(rows, columns=['dimension', 'count', 'status'])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + '\n'


def loss_report(complex_: SimplicialComplex) -> LossReport:
    """
    손실 보고서

    Parameters:
    -----------
    complex_ : SimplicialComplex
        원본 복합체

    Returns:
    --------
    LossReport
        surviving + Σ lost = total
    """
    vector = f_vector(complex_)
    surviving = sum(vector[:2])
    lost = {d: vector[d] for d in range(2, len(vector))}
    return LossReport(
        simplices_total=len(complex_),
        simplices_surviving=surviving,
        dimension=complex_.dimension,
        lost_by_dimension=lost,
        f_vector=vector,
    )


def skeleton_collision(left: SimplicialComplex, right: SimplicialComplex) -> SkeletonCollision:
    """
    골격 충돌 판정

    증인: 정확히 한쪽에만 있는 심플렉스 중 차원이 가장 크고 사전식으로 가장 앞선 것
    """
    _require_same_universe(left.universe, right.universe)
    same_skeleton = graphs_identical(to_underlying_graph(left), to_underlying_graph(right))

    left_members, right_members = left.member_set(), right.member_set()
    if not same_skeleton or left_members == right_members:
        return SkeletonCollision(False, same_skeleton)

    only_left = left_members - right_members
    only_right = right_members - left_members
    candidates = [(s, 'a') for s in only_left] + [(s, 'b') for s in only_right]
    witness, side = min(candidates, key=lambda item: (-len(item[0]), item[0]))
    return SkeletonCollision(True, True, witness, side)


@dataclass
class ComparisonReport:
    """두 복합체 비교 (비교는 정보성, 실패 아님)"""

    graphs_identical: bool
    collision: SkeletonCollision
    loss_a: LossReport
    loss_b: LossReport
    universe: VertexUniverse

    def to_dict(self) -> Dict[str, Any]:
        return {
            'graphs_identical': self.graphs_identical,
            'skeleton_collision': self.collision.to_dict(self.universe),
            'loss_a': self.loss_a.to_dict(),
            'loss_b': self.loss_b.to_dict(),
        }

    def to_frame(self) -> pd.DataFrame:
        """두 손실 보고서를 나란히 놓은 테이블"""
        rows = []
        for label, report in (('a', self.loss_a), ('b', self.loss_b)):
            rows.append({
                'complex': label,
                'dimension': report.dimension,
                'total': report.simplices_total,
                'surviving': report.simplices_surviving,
                'lost': report.simplices_lost,
                'dimension_drop': report.dimension_drop,
            })
        return pd.DataFrame(rows)


def compare_complexes(left: SimplicialComplex, right: SimplicialComplex) -> ComparisonReport:
    collision = skeleton_collision(left, right)
    loss_a, loss_b = loss_report(left), loss_report(right)
    loss_a.skeleton_collision = collision
    loss_b.skeleton_collision = collision
    return ComparisonReport(
        graphs_identical=collision.skeletons_identical,
        collision=collision,
        loss_a=loss_a,
        loss_b=loss_b,
        universe=left.universe,
    )
