"""
complex_format.py - 정규 직렬화 형식

형식:
    dim=<d> vertices=<n>
    <심플렉스당 한 줄, 정규 순서의 정점 id를 공백으로 구분>

줄은 정규 인덱스 시퀀스의 사전식 순서로 정렬한다.
파싱은 단일 id 줄(0-심플렉스)의 등장 순서로 정점 인덱스를 다시 부여하므로
serialize → parse → serialize 결과가 바이트 단위로 같다.
"""

import logging
import re
from pathlib import Path
from typing import List, Optional, Set

from .complex_core import DEFAULT_SIMPLEX_CAP, Simplex, SimplicialComplex, VertexUniverse
from .errors import ComplexFormatError, UnknownVertexError

logger = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r'^dim=(-?\d+) vertices=(\d+)$')


def serialize_complex(complex_: SimplicialComplex) -> str:
    """복합체 → 정규 텍스트"""
    universe = complex_.universe
    lines = [f"dim={complex_.dimension} vertices={complex_.count(0)}"]
    lines.extend(' '.join(universe.ids_of(s)) for s in complex_.members())
    return '\n'.join(lines) + '\n'


def parse_complex(
    text: str,
    source: Optional[str] = None,
    simplex_cap: int = DEFAULT_SIMPLEX_CAP
) -> SimplicialComplex:
    """
    정규 텍스트 → 복합체

    Parameters:
    -----------
    text : str
        serialize_complex 형식 문서
    source : str, optional
        오류 메시지용 파일 이름
    simplex_cap : int
        심플렉스 크기 상한

    Returns:
    --------
    SimplicialComplex
        동결된 복합체
    """
    if not text.endswith('\n'):
        raise ComplexFormatError("문서는 개행으로 끝나야 합니다", line=None, source=source)

    lines = text[:-1].split('\n')
    match = HEADER_PATTERN.match(lines[0])
    if not match:
        raise ComplexFormatError(f"헤더 형식 오류: {lines[0]!r}", line=1, source=source)
    declared_dim, declared_vertices = int(match.group(1)), int(match.group(2))
    body = lines[1:]

    # 1단계: 0-심플렉스 줄로 정점 등록
    universe = VertexUniverse()
    for number, line in enumerate(body, start=2):
        tokens = line.split(' ')
        if line == '' or '' in tokens:
            raise ComplexFormatError("빈 줄 또는 연속 공백", line=number, source=source)
        if len(tokens) == 1:
            if tokens[0] in universe:
                raise ComplexFormatError(f"중복 정점 줄: {tokens[0]}", line=number, source=source)
            try:
                universe.register(tokens[0])
            except ValueError as e:
                raise ComplexFormatError(str(e), line=number, source=source)

    # 2단계: 정규성 / 정렬 확인
    simplices: List[Simplex] = []
    seen: Set[Simplex] = set()
    for number, line in enumerate(body, start=2):
        try:
            indices = [universe.index_of(token) for token in line.split(' ')]
        except UnknownVertexError as e:
            raise ComplexFormatError(
                f"0-심플렉스 줄이 없는 정점: {e.vertex_id}", line=number, source=source
            )
        try:
            simplex = Simplex(indices)
        except ValueError:
            raise ComplexFormatError(f"정규 순서가 아닌 심플렉스: {line}", line=number, source=source)
        if simplex in seen:
            raise ComplexFormatError(f"중복 심플렉스: {line}", line=number, source=source)
        if simplices and simplex < simplices[-1]:
            raise ComplexFormatError(f"사전식 순서 위반: {line}", line=number, source=source)
        seen.add(simplex)
        simplices.append(simplex)

    complex_ = SimplicialComplex.from_simplices(universe, simplices, simplex_cap)

    # 파일 내용 자체가 닫혀 있어야 함
    if len(complex_) != len(seen):
        missing = min(s for s in complex_.members() if s not in seen)
        raise ComplexFormatError(
            f"닫힘 위반: 면 {universe.label(missing)} 누락", line=None, source=source
        )
    if complex_.dimension != declared_dim:
        raise ComplexFormatError(
            f"헤더 dim={declared_dim} 이(가) 실제 차원 {complex_.dimension} 과 다름",
            line=1, source=source
        )
    if len(universe) != declared_vertices:
        raise ComplexFormatError(
            f"헤더 vertices={declared_vertices} 이(가) 실제 정점 수 {len(universe)} 과 다름",
            line=1, source=source
        )

    return complex_.freeze()


def write_complex(path, complex_: SimplicialComplex) -> Path:
    """파일 저장 (개행 변환 없이)"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(serialize_complex(complex_))
    logger.debug(f"복합체 저장: {path} ({len(complex_)}개 심플렉스)")
    return path


def read_complex(path, simplex_cap: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
    path = Path(path)
    with open(path, 'r', encoding='utf-8', newline='') as handle:
        text = handle.read()
    return parse_complex(text, source=str(path), simplex_cap=simplex_cap)
