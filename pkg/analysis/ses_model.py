"""
ses_model.py - SES / SEN 모델링 계층

핵심 기능:
1. SES 구조 θ_SES = (V, E, C), V = V_S ⊔ V_E
2. 상호작용 차수 (|e| - 1) 및 저차/고차 분류
3. 상호작용 분할 (사회 / 생태 / 교차)
4. 환경 임베딩 (포함 사상 f: V ↪ X, 여집합 V^c)
5. SEN N_SES = (Δ, Λ) 구성 (단계 알고리즘 A)
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import pandas as pd

from .complex_core import DEFAULT_SIMPLEX_CAP, Simplex, SimplicialComplex, VertexUniverse
from .errors import (
    DisjointnessError,
    DuplicateVertexError,
    EmptySimplexError,
    EmptyUniverseError,
    SenDimensionError,
    StepRangeError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)

DEFAULT_RELATION = 'default'


class UnitKind(str, Enum):
    """기본 단위 종류"""

    SOCIAL = 'social'
    ECOLOGICAL = 'ecological'

    @classmethod
    def parse(cls, tag: str) -> 'UnitKind':
        try:
            return cls(tag.strip().lower())
        except ValueError:
            raise ValueError(f"알 수 없는 단위 종류: '{tag}' (social / ecological)") from None


class OrderClass(str, Enum):
    """상호작용 차수 분류 (|e| ≥ 3 이면 고차)"""

    LOWER = 'lower'
    HIGHER = 'higher'


@dataclass(frozen=True)
class Constant:
    """상수 집합 C 의 불투명 라벨 (정점에 부착되거나 SES 전체에 부착)"""

    label: str
    attached_to: Tuple[str, ...] = ()


# ========== SES 구조 ==========
@dataclass(frozen=True, eq=False)
class SesStructure:
    """
    SES 구조 (V, E, C)

    E 는 하향 닫힘을 강제하지 않는 일반 족이다. 부분집합 의존성은
    validators.subset_dependency 로 확인한다.
    """

    universe: VertexUniverse
    kinds: Mapping[str, UnitKind]
    relations: Mapping[str, Tuple[Simplex, ...]]
    constants: Tuple[Constant, ...] = ()
    allow_single_kind: bool = False

    @property
    def social_vertices(self) -> Tuple[str, ...]:
        return tuple(v for v in self.universe.ids if self.kinds[v] is UnitKind.SOCIAL)

    @property
    def ecological_vertices(self) -> Tuple[str, ...]:
        return tuple(v for v in self.universe.ids if self.kinds[v] is UnitKind.ECOLOGICAL)

    @property
    def vertex_ids(self) -> Tuple[str, ...]:
        return self.universe.ids

    @property
    def relation_names(self) -> Tuple[str, ...]:
        return tuple(self.relations)

    @property
    def interactions(self) -> Tuple[Simplex, ...]:
        """모든 관계의 합집합 (사전식 정렬)"""
        merged = {s for family in self.relations.values() for s in family}
        return tuple(sorted(merged))

    def relation(self, name: Optional[str] = None) -> Tuple[Simplex, ...]:
        """이름으로 관계 R_i 조회 (None 이면 전체 E)"""
        if name is None:
            return self.interactions
        if name not in self.relations:
            raise ValueError(f"알 수 없는 관계: '{name}' (가능: {', '.join(self.relations) or '없음'})")
        return self.relations[name]

    def kind_of(self, vertex_id: str) -> UnitKind:
        try:
            return self.kinds[vertex_id]
        except KeyError:
            raise UnknownVertexError(vertex_id) from None

    def kind_of_index(self, index: int) -> UnitKind:
        return self.kinds[self.universe.id_of(index)]

    def summary(self) -> Dict[str, int]:
        return {
            'social_vertices': len(self.social_vertices),
            'ecological_vertices': len(self.ecological_vertices),
            'interactions': len(self.interactions),
            'relations': len(self.relations),
            'constants': len(self.constants),
        }


def build_ses(
    social_ids: Iterable[str],
    ecological_ids: Iterable[str],
    interaction_lists: Union[Iterable[Iterable[str]], Mapping[str, Iterable[Iterable[str]]]],
    constant_labels: Iterable[Union[str, Constant, Tuple[str, Sequence[str]]]] = (),
    allow_single_kind: bool = False
) -> SesStructure:
    """
    SES 구조 생성

    Parameters:
    -----------
    social_ids : iterable of str
        사회 단위 V_S
    ecological_ids : iterable of str
        생태 단위 V_E
    interaction_lists : iterable 또는 {관계 이름: iterable}
        상호작용 (id 목록의 목록). 매핑이면 이름 있는 관계 R_i 별로 보관
    constant_labels : iterable
        라벨 문자열, Constant, 또는 (라벨, 부착 id 목록)
    allow_single_kind : bool
        True 이면 V_S / V_E 중 한쪽이 비어도 허용 (토이 모델용)

    Returns:
    --------
    SesStructure
    """
    social = list(social_ids)
    ecological = list(ecological_ids)

    for side in (social, ecological):
        seen = set()
        for vertex_id in side:
            if vertex_id in seen:
                raise DuplicateVertexError(vertex_id)
            seen.add(vertex_id)

    ecological_set = set(ecological)
    for vertex_id in social:
        if vertex_id in ecological_set:
            raise DisjointnessError(vertex_id)

    if not social and not ecological:
        raise EmptyUniverseError("정점 집합 V 가 비어 있습니다 (V ≠ ∅)")
    if not allow_single_kind:
        if not social:
            raise EmptyUniverseError("사회 정점 집합 V_S 가 비어 있습니다 (strict 모드)")
        if not ecological:
            raise EmptyUniverseError("생태 정점 집합 V_E 가 비어 있습니다 (strict 모드)")

    universe = VertexUniverse()
    kinds: Dict[str, UnitKind] = {}
    for vertex_id in social:
        universe.register(vertex_id)
        kinds[vertex_id] = UnitKind.SOCIAL
    for vertex_id in ecological:
        universe.register(vertex_id)
        kinds[vertex_id] = UnitKind.ECOLOGICAL

    if isinstance(interaction_lists, Mapping):
        named = dict(interaction_lists)
    else:
        named = {DEFAULT_RELATION: interaction_lists}

    relations: Dict[str, Tuple[Simplex, ...]] = {}
    for name, family in named.items():
        canonical: Dict[Simplex, None] = {}
        for ids in family:
            ids = list(ids)
            if not ids:
                raise EmptySimplexError()
            canonical[universe.canonicalize(ids)] = None
        relations[name] = tuple(canonical)

    constants = []
    for item in constant_labels:
        if isinstance(item, Constant):
            constant = item
        elif isinstance(item, str):
            constant = Constant(item)
        else:
            label, attached = item
            constant = Constant(label, tuple(attached))
        for vertex_id in constant.attached_to:
            if vertex_id not in universe:
                raise UnknownVertexError(vertex_id)
        constants.append(constant)

    ses = SesStructure(universe, kinds, relations, tuple(constants), allow_single_kind)
    logger.debug(f"SES 생성: {ses.summary()}")
    return ses


def participant_ses(participant_ids: Iterable[str]) -> SesStructure:
    """참여자(사회 단위)만으로 이루어진 토이 모델 SES"""
    return build_ses(participant_ids, [], [], allow_single_kind=True)


# ========== 상호작용 차수 ==========
def interaction_order(interaction: Sequence[int]) -> int:
    """|e| = k 인 상호작용의 차수 k - 1"""
    if len(interaction) == 0:
        raise EmptySimplexError()
    return len(interaction) - 1


def classify_order(interaction: Sequence[int]) -> OrderClass:
    return OrderClass.HIGHER if len(interaction) >= 3 else OrderClass.LOWER


def interaction_table(ses: SesStructure, relation: Optional[str] = None) -> pd.DataFrame:
    """상호작용별 크기 / 차수 / 분류 테이블"""
    rows = []
    for interaction in ses.relation(relation):
        rows.append({
            'interaction': ses.universe.label(interaction),
            'cardinality': len(interaction),
            'order': interaction_order(interaction),
            'order_class': classify_order(interaction).value,
            'kind_class': _kind_class(ses, interaction),
        })
    return pd.DataFrame(rows, columns=['interaction', 'cardinality', 'order', 'order_class', 'kind_class'])


# ========== 상호작용 분할 ==========
@dataclass
class InteractionPartition:
    """종류 기준 분할 (교차 = 두 종류를 모두 포함하는 혼합 상호작용)"""

    social_pure: List[Simplex] = field(default_factory=list)
    ecological_pure: List[Simplex] = field(default_factory=list)
    cross: List[Simplex] = field(default_factory=list)
    criterion: str = 'mixed-kind'

    def sizes(self) -> Dict[str, int]:
        return {
            'social_pure': len(self.social_pure),
            'ecological_pure': len(self.ecological_pure),
            'cross': len(self.cross),
        }


def _kind_class(ses: SesStructure, interaction: Sequence[int]) -> str:
    kinds = {ses.kind_of_index(i) for i in interaction}
    if kinds == {UnitKind.SOCIAL}:
        return 'social_pure'
    if kinds == {UnitKind.ECOLOGICAL}:
        return 'ecological_pure'
    return 'cross'


def partition_interactions(ses: SesStructure, relation: Optional[str] = None) -> InteractionPartition:
    partition = InteractionPartition()
    for interaction in ses.relation(relation):
        getattr(partition, _kind_class(ses, interaction)).append(interaction)
    return partition


def facet_representation(ses: SesStructure, relation: Optional[str] = None) -> List[Simplex]:
    """E 안에서 다른 상호작용에 진부분집합으로 포함되지 않는 상호작용"""
    family = sorted(set(ses.relation(relation)))
    as_sets = [frozenset(s) for s in family]
    maximal = []
    for simplex, members in zip(family, as_sets):
        if not any(members < other for other in as_sets):
            maximal.append(simplex)
    return maximal


# ========== 환경 ==========
@dataclass(frozen=True, eq=False)
class Environment:
    """환경 θ_E = (X), X = V ⊔ V^c"""

    system: SesStructure
    extra_ids: Tuple[str, ...]
    extra_kinds: Mapping[str, Optional[UnitKind]]

    @property
    def universe_ids(self) -> Tuple[str, ...]:
        return self.system.vertex_ids + self.extra_ids

    def __len__(self) -> int:
        return len(self.system.vertex_ids) + len(self.extra_ids)

    def __contains__(self, vertex_id) -> bool:
        return vertex_id in self.system.universe or vertex_id in self.extra_kinds

    def kind_of(self, vertex_id: str) -> Optional[UnitKind]:
        if vertex_id in self.system.universe:
            return self.system.kind_of(vertex_id)
        if vertex_id in self.extra_kinds:
            return self.extra_kinds[vertex_id]
        raise UnknownVertexError(vertex_id)

    def include(self, vertex_id: str) -> str:
        """포함 사상 f: V ↪ X (V 위에서 항등)"""
        if vertex_id not in self.system.universe:
            raise UnknownVertexError(vertex_id)
        return vertex_id

    def complement(self) -> Tuple[str, ...]:
        """V^c = X \\ V"""
        return self.extra_ids


def embed_in_environment(
    ses: SesStructure,
    extra_ids: Union[Iterable[str], Mapping[str, Optional[Union[UnitKind, str]]]] = ()
) -> Environment:
    """
    SES 를 환경에 임베딩

    Parameters:
    -----------
    ses : SesStructure
        대상 시스템
    extra_ids : iterable 또는 {id: 종류}
        시스템 외부의 환경 요소. 종류 태그는 선택
    """
    if isinstance(extra_ids, Mapping):
        items = list(extra_ids.items())
    else:
        items = [(vertex_id, None) for vertex_id in extra_ids]

    extras: List[str] = []
    kinds: Dict[str, Optional[UnitKind]] = {}
    for vertex_id, kind in items:
        if vertex_id in ses.universe:
            raise DisjointnessError(vertex_id)
        if vertex_id in kinds:
            raise DuplicateVertexError(vertex_id)
        if isinstance(kind, str) and not isinstance(kind, UnitKind):
            kind = UnitKind.parse(kind)
        extras.append(vertex_id)
        kinds[vertex_id] = kind

    return Environment(ses, tuple(extras), kinds)


# ========== SEN ==========
StepAlgorithm = Callable[[int], Iterable]


def _coerce_simplex(universe: VertexUniverse, item) -> Simplex:
    if isinstance(item, Simplex):
        return item
    values = list(item)
    if not values:
        raise EmptySimplexError()
    if all(isinstance(v, str) for v in values):
        return universe.canonicalize(values)
    return Simplex.from_indices(values)


def build_complex(
    ses: SesStructure,
    simplices: Iterable,
    simplex_cap: int = DEFAULT_SIMPLEX_CAP
) -> SimplicialComplex:
    """모든 정점(조건 (1)) + 주어진 족의 닫힘"""
    complex_ = SimplicialComplex(ses.universe, simplex_cap)
    for index in range(len(ses.universe)):
        complex_.insert_closed(Simplex._trusted((index,)))
    for item in simplices:
        complex_.insert_closed(_coerce_simplex(ses.universe, item))
    return complex_


@dataclass
class SenNetwork:
    """SEN N_SES = (Δ, Λ)"""

    ses: SesStructure
    complexes: Dict[int, SimplicialComplex]

    def __post_init__(self):
        if not self.complexes:
            raise StepRangeError("시간 인덱스 Λ 는 비어 있을 수 없습니다")
        for alpha, complex_ in self.complexes.items():
            if complex_.dimension < 1:
                raise SenDimensionError(
                    f"α={alpha}: 복합체 차원 {complex_.dimension} < 1 (dim(Δ) ≥ 1 필요)"
                )
        self.complexes = dict(sorted(self.complexes.items()))

    @property
    def time_index(self) -> Tuple[int, ...]:
        return tuple(self.complexes)

    @property
    def universe(self) -> VertexUniverse:
        return self.ses.universe

    @property
    def is_static(self) -> bool:
        return len(self.complexes) == 1

    def at(self, alpha: int) -> SimplicialComplex:
        if alpha not in self.complexes:
            raise StepRangeError(f"α={alpha} 는 Λ={list(self.time_index)} 에 없습니다")
        return self.complexes[alpha]

    def final(self) -> SimplicialComplex:
        return self.complexes[self.time_index[-1]]

    def manifest(self) -> Dict:
        return {
            'time_index': list(self.time_index),
            'static': self.is_static,
            'kind': 'static' if self.is_static else 'dynamic',
            'vertices': list(self.universe.ids),
            'steps': [
                {'alpha': alpha, 'dimension': c.dimension, 'members': len(c)}
                for alpha, c in self.complexes.items()
            ],
        }


def ses_to_sen(
    ses: SesStructure,
    algorithm: StepAlgorithm,
    time_index: Iterable[int],
    simplex_cap: int = DEFAULT_SIMPLEX_CAP
) -> SenNetwork:
    """
    SES + 알고리즘 A → SEN

    각 α ∈ Λ 에 대해 Δ_α = A(α) 출력의 닫힘 (모든 정점 포함).

    Parameters:
    -----------
    ses : SesStructure
        대상 SES
    algorithm : callable
        α → 심플렉스 족 (Simplex, 인덱스 시퀀스, 또는 id 시퀀스)
    time_index : iterable of int
        Λ ⊂ ℕ (증가 순으로 처리)
    """
    steps = sorted(set(int(a) for a in time_index))
    if not steps:
        raise StepRangeError("시간 인덱스 Λ 는 비어 있을 수 없습니다")
    if steps[0] < 0:
        raise StepRangeError(f"시간 인덱스는 자연수여야 합니다: {steps[0]}")

    complexes = {}
    for alpha in steps:
        complex_ = build_complex(ses, algorithm(alpha), simplex_cap)
        if complex_.dimension < 1:
            raise SenDimensionError(
                f"α={alpha}: 복합체 차원 {complex_.dimension} < 1 (dim(Δ) ≥ 1 필요)"
            )
        complexes[alpha] = complex_.freeze()
        logger.debug(f"α={alpha}: dim={complex_.dimension}, {len(complex_)}개 심플렉스")

    return SenNetwork(ses, complexes)


def relation_algorithm(ses: SesStructure, relation: Optional[str] = None) -> StepAlgorithm:
    """모든 α 에 대해 같은 관계 족을 내는 정적 알고리즘"""
    family = ses.relation(relation)
    return lambda alpha: family
