"""
complex_core.py - 추상 단체 복합체 엔진

핵심 기능:
1. 정점 유니버스 (id → 조밀 인덱스 등록)
2. 정규 심플렉스 (순증가 인덱스 시퀀스, non-empty)
3. 닫힘 보존 삽입 (insert_closed, 크기 상한)
4. 면/경계/facet/극대 심플렉스/p-골격/f-벡터 질의

모든 열거 순서는 정규 시퀀스의 사전식 순서를 따른다.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import pandas as pd

from .errors import DuplicateVertexError, EmptySimplexError, SimplexSizeError, UnknownVertexError

logger = logging.getLogger(__name__)

DEFAULT_SIMPLEX_CAP = 25


# ========== 정점 / 유니버스 ==========
@dataclass(frozen=True)
class Vertex:
    """등록된 정점 (id + 조밀 인덱스)"""

    id: str
    index: int


class VertexUniverse:
    """정점 테이블 (등록 순서대로 0, 1, 2, ... 인덱스 부여)"""

    def __init__(self, vertex_ids: Iterable[str] = ()):
        self._vertices: List[Vertex] = []
        self._index: Dict[str, int] = {}
        for vertex_id in vertex_ids:
            self.register(vertex_id)

    def register(self, vertex_id: str) -> Vertex:
        """
        정점 등록

        Parameters:
        -----------
        vertex_id : str
            불투명 문자열 id (공백 불가)

        Returns:
        --------
        Vertex
            다음 조밀 인덱스를 가진 정점
        """
        if not isinstance(vertex_id, str) or not vertex_id or any(ch.isspace() for ch in vertex_id):
            raise ValueError(f"정점 id는 공백 없는 비어있지 않은 문자열이어야 합니다: {vertex_id!r}")
        if vertex_id in self._index:
            raise DuplicateVertexError(vertex_id)

        vertex = Vertex(vertex_id, len(self._vertices))
        self._vertices.append(vertex)
        self._index[vertex_id] = vertex.index
        return vertex

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vertex_id) -> bool:
        return vertex_id in self._index

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexUniverse):
            return NotImplemented
        return self.ids == other.ids

    def __hash__(self):
        return hash(self.ids)

    def __repr__(self):
        return f"VertexUniverse({list(self.ids)!r})"

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(v.id for v in self._vertices)

    def vertex(self, vertex_id: str) -> Vertex:
        try:
            return self._vertices[self._index[vertex_id]]
        except KeyError:
            raise UnknownVertexError(vertex_id) from None

    def index_of(self, vertex_id: str) -> int:
        return self.vertex(vertex_id).index

    def id_of(self, index: int) -> str:
        if not 0 <= index < len(self._vertices):
            raise UnknownVertexError(f"#{index}")
        return self._vertices[index].id

    def canonicalize(self, vertex_ids: Iterable[str]) -> 'Simplex':
        """id 목록 → 정규 심플렉스 (중복 제거 + 인덱스 정렬)"""
        indices = [self.index_of(vertex_id) for vertex_id in vertex_ids]
        return Simplex.from_indices(indices)

    def ids_of(self, simplex: Sequence[int]) -> Tuple[str, ...]:
        return tuple(self.id_of(i) for i in simplex)

    def label(self, simplex: Sequence[int]) -> str:
        """'{v0, v1}' 형식 라벨"""
        return '{' + ', '.join(self.ids_of(simplex)) + '}'

    def copy(self) -> 'VertexUniverse':
        return VertexUniverse(self.ids)


def register_vertex(universe: VertexUniverse, vertex_id: str) -> Vertex:
    return universe.register(vertex_id)


def canonicalize(universe: VertexUniverse, vertex_ids: Iterable[str]) -> 'Simplex':
    return universe.canonicalize(vertex_ids)


# ========== 심플렉스 ==========
class Simplex(tuple):
    """
    정규 심플렉스: 순증가 정점 인덱스 튜플

    tuple 비교가 곧 사전식 순서이고, 해시/동등성은 정점 집합과 일치한다.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]):
        values = tuple(int(v) for v in vertices)
        if not values:
            raise EmptySimplexError()
        if values[0] < 0:
            raise ValueError(f"정점 인덱스는 음수일 수 없습니다: {values}")
        for a, b in zip(values, values[1:]):
            if a >= b:
                raise ValueError(f"정규형이 아님 (순증가 아님): {values}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Tuple[int, ...]) -> 'Simplex':
        return tuple.__new__(cls, values)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> 'Simplex':
        """임의 순서/중복 인덱스 → 정규형"""
        return cls(sorted(set(indices)))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def dimension(self) -> int:
        return len(self) - 1

    def facets(self) -> List['Simplex']:
        """코차원 1 면 (꼭짓점 하나씩 제거)"""
        if len(self) == 1:
            return []
        return [Simplex._trusted(self[:i] + self[i + 1:]) for i in range(len(self))]

    def __repr__(self):
        return f"Simplex({tuple(self)!r})"


def faces(simplex: Simplex) -> List[Simplex]:
    """
    모든 면 (자기 자신 포함, 공집합 제외)

    k-심플렉스의 면 개수는 2^(k+1) - 1, 사전식 정렬
    """
    result = [
        Simplex._trusted(combo)
        for size in range(1, len(simplex) + 1)
        for combo in combinations(simplex, size)
    ]
    return sorted(result)


# ========== 단체 복합체 ==========
class SimplicialComplex:
    """차원별 층(stratum)으로 저장하는 닫힌 심플렉스 족"""

    def __init__(self, universe: VertexUniverse, simplex_cap: int = DEFAULT_SIMPLEX_CAP):
        """
        초기화

        Parameters:
        -----------
        universe : VertexUniverse
            정점 테이블
        simplex_cap : int
            삽입 가능한 최대 심플렉스 크기 (기본값: 25)
        """
        self.universe = universe
        self.simplex_cap = simplex_cap
        self._strata: Dict[int, Set[Simplex]] = {}
        self._frozen = False

    @classmethod
    def from_simplices(
        cls,
        universe: VertexUniverse,
        simplices: Iterable[Sequence[int]],
        simplex_cap: int = DEFAULT_SIMPLEX_CAP
    ) -> 'SimplicialComplex':
        complex_ = cls(universe, simplex_cap)
        for simplex in simplices:
            complex_.insert_closed(simplex)
        return complex_

    # ---------- 구성 ----------
    def insert_closed(self, simplex: Sequence[int]) -> 'SimplicialComplex':
        """
        심플렉스와 모든 면을 삽입 (닫힘 보존, 멱등)

        Parameters:
        -----------
        simplex : Simplex
            유니버스 위 정규 심플렉스 (일반 시퀀스는 정규화)

        Returns:
        --------
        SimplicialComplex
            self
        """
        if self._frozen:
            raise RuntimeError("동결된 복합체는 수정할 수 없습니다")
        if not isinstance(simplex, Simplex):
            simplex = Simplex.from_indices(simplex)
        if len(simplex) > self.simplex_cap:
            raise SimplexSizeError(len(simplex), self.simplex_cap)
        if simplex[-1] >= len(self.universe):
            raise UnknownVertexError(f"#{simplex[-1]}")

        if simplex in self._strata.get(simplex.dimension, ()):
            return self

        # 이미 있는 면의 하위 면은 닫힘에 의해 이미 존재
        stack = [simplex]
        while stack:
            current = stack.pop()
            stratum = self._strata.setdefault(len(current) - 1, set())
            if current in stratum:
                continue
            stratum.add(current)
            for facet in current.facets():
                if facet not in self._strata.get(len(facet) - 1, ()):
                    stack.append(facet)

        return self

    def insert_ids(self, vertex_ids: Iterable[str]) -> 'SimplicialComplex':
        return self.insert_closed(self.universe.canonicalize(vertex_ids))

    def freeze(self) -> 'SimplicialComplex':
        """구성 완료 (이후 읽기 전용)"""
        self._frozen = True
        return self

    @property
    def is_frozen(self) -> bool:
        return self._frozen

    def copy(self) -> 'SimplicialComplex':
        """수정 가능한 사본 (유니버스 공유)"""
        clone = SimplicialComplex(self.universe, self.simplex_cap)
        clone._strata = {d: set(s) for d, s in self._strata.items() if s}
        return clone

    # ---------- 조회 ----------
    def __contains__(self, simplex) -> bool:
        if not isinstance(simplex, tuple) or not simplex:
            return False
        return tuple(simplex) in self._strata.get(len(simplex) - 1, ())

    def __len__(self) -> int:
        return sum(len(s) for s in self._strata.values())

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.members())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.universe == other.universe and self.member_set() == other.member_set()

    __hash__ = None

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dimension}, members={len(self)}, vertices={len(self.universe)})"

    def members(self) -> List[Simplex]:
        """전체 구성원 (사전식 정렬)"""
        return sorted(self.member_set())

    def member_set(self) -> frozenset:
        return frozenset(s for stratum in self._strata.values() for s in stratum)

    def stratum(self, dimension: int) -> List[Simplex]:
        return sorted(self._strata.get(dimension, ()))

    def count(self, dimension: int) -> int:
        return len(self._strata.get(dimension, ()))

    @property
    def strata(self) -> Dict[int, frozenset]:
        return {d: frozenset(s) for d, s in sorted(self._strata.items()) if s}

    @property
    def dimension(self) -> int:
        """비어있지 않은 최대 차원 (빈 복합체는 -1)"""
        nonempty = [d for d, s in self._strata.items() if s]
        return max(nonempty) if nonempty else -1

    def vertices(self) -> List[Simplex]:
        return self.stratum(0)

    def labels(self, simplices: Optional[Iterable[Simplex]] = None) -> List[Tuple[str, ...]]:
        source = self.members() if simplices is None else simplices
        return [self.universe.ids_of(s) for s in source]


def insert_closed(complex_: SimplicialComplex, simplex: Sequence[int]) -> SimplicialComplex:
    return complex_.insert_closed(simplex)


def closure_of(
    universe: VertexUniverse,
    simplices: Iterable[Sequence[int]],
    simplex_cap: int = DEFAULT_SIMPLEX_CAP
) -> SimplicialComplex:
    """하향 닫힘 (모든 입력의 비어있지 않은 부분집합 합집합)"""
    return SimplicialComplex.from_simplices(universe, simplices, simplex_cap)


# ========== 경계 / facet / 극대 ==========
def maximal_simplices(complex_: SimplicialComplex) -> List[Simplex]:
    """다른 구성원에 진부분집합으로 포함되지 않는 구성원"""
    covered: Set[Simplex] = set()
    for dimension in range(1, complex_.dimension + 1):
        for simplex in complex_.stratum(dimension):
            covered.update(simplex.facets())
    return [s for s in complex_.members() if s not in covered]


def boundary(complex_: SimplicialComplex) -> List[Simplex]:
    """
    ∂Δ := {τ | τ ⊂ σ ∈ Δ}

    어떤 구성원의 진부분집합인 구성원 전체 (방향/사슬 구조 없음)
    """
    maximal = set(maximal_simplices(complex_))
    return [s for s in complex_.members() if s not in maximal]


@dataclass
class FacetSelection:
    """facet 질의 결과 (어떤 정의를 썼는지 표시)"""

    definition: str
    simplices: List[Simplex] = field(default_factory=list)
    warning: Optional[str] = None

    def __iter__(self):
        return iter(self.simplices)

    def __len__(self):
        return len(self.simplices)


def facets_paper(complex_: SimplicialComplex) -> FacetSelection:
    """
    dim(Δ) = d 일 때 차원 d-1 인 모든 면 (정의를 문자 그대로 적용)

    d < 1 이면 빈 결과 + 경고
    """
    d = complex_.dimension
    if d < 1:
        warning = f"차원 {d} 복합체에는 (d-1)차원 facet이 없습니다"
        logger.warning(f"⚠️ {warning}")
        return FacetSelection('codimension-1', [], warning)
    return FacetSelection('codimension-1', complex_.stratum(d - 1))


def maximal_facets(complex_: SimplicialComplex) -> FacetSelection:
    return FacetSelection('maximal', maximal_simplices(complex_))


# ========== 골격 / f-벡터 ==========
def p_skeleton(complex_: SimplicialComplex, p: int) -> SimplicialComplex:
    """Ω := {σ ∈ Δ | dim(σ) ≤ p}"""
    if p < 0:
        raise ValueError(f"p는 0 이상이어야 합니다 (현재: {p})")
    skeleton = SimplicialComplex(complex_.universe, complex_.simplex_cap)
    skeleton._strata = {d: set(s) for d, s in complex_.strata.items() if d <= p}
    return skeleton


def f_vector(complex_: SimplicialComplex) -> Tuple[int, ...]:
    """차원별 구성원 수 (빈 복합체는 ())"""
    return tuple(complex_.count(d) for d in range(complex_.dimension + 1))


def f_vector_frame(complex_: SimplicialComplex) -> pd.DataFrame:
    """f-벡터 테이블 (차원, 개수, 상호작용 차수 분류)"""
    vector = f_vector(complex_)
    return pd.DataFrame({
        'dimension': list(range(len(vector))),
        'count': list(vector),
        'order_class': ['higher' if d >= 2 else 'lower' for d in range(len(vector))],
    })


if __name__ == "__main__":
    universe = VertexUniverse(['v_i', 'v_j', 'v_k'])
    delta = SimplicialComplex(universe).insert_ids(['v_i', 'v_j', 'v_k'])
    print(delta)
    print(delta.labels())
    print(f_vector(delta))
