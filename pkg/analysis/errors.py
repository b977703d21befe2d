"""
errors.py - 예외 계층 및 종료 코드

모든 도메인 예외는 SenError를 상속하고, CLI가 그대로 사용하는
고유한 exit_code를 가진다.

종료 코드:
0  성공
2  사용법 오류 (argparse)
3  파싱 오류 (SES 문서 / 정규 복합체 파일)
4  검증 실패 (strict 모드)
5  사회/생태 정점 중복 (V_S ∩ V_E ≠ ∅)
6  빈 정점 집합
7  진화 단계 범위 오류
8  심플렉스 크기 상한 초과
9  정점 유니버스 불일치
10 SEN 차원 위반 (dim < 1)
11 중복 정점 id
12 미등록 정점 id
13 빈 심플렉스
14 설정 오류
"""

from typing import Optional


EXIT_OK = 0
EXIT_USAGE = 2


class SenError(Exception):
    """도메인 예외 기본 클래스"""

    exit_code = 1


class ParseError(SenError):
    """문서/파일 파싱 오류 (줄 번호 포함)"""

    exit_code = 3

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        location = ''
        if source:
            location += f"{source}:"
        if line is not None:
            location += f"{line}:"
        super().__init__(f"{location} {message}" if location else message)


class DocumentParseError(ParseError):
    """SES 수집 문서 파싱 오류"""


class ComplexFormatError(ParseError):
    """정규 복합체 직렬화 형식 오류"""


class ValidationFailure(SenError):
    """strict 모드 검증 실패"""

    exit_code = 4


class DisjointnessError(SenError):
    """사회/생태 정점 집합이 서로소가 아님"""

    exit_code = 5

    def __init__(self, vertex_id: str, line: Optional[int] = None):
        self.vertex_id = vertex_id
        self.line = line
        where = f"{line}: " if line is not None else ''
        super().__init__(
            f"{where}정점 '{vertex_id}'이(가) 사회/생태 양쪽에 선언됨 (V_S ∩ V_E ≠ ∅)"
        )


class EmptyUniverseError(SenError):
    """정점 집합이 비어 있음"""

    exit_code = 6


class StepRangeError(SenError):
    """성장 단계 α 범위 오류"""

    exit_code = 7


class SimplexSizeError(SenError):
    """심플렉스 크기가 상한을 초과"""

    exit_code = 8

    def __init__(self, cardinality: int, cap: int):
        self.cardinality = cardinality
        self.cap = cap
        super().__init__(
            f"심플렉스 크기 {cardinality} > 상한 {cap} "
            f"(닫힘 시 {2 ** cardinality - 1}개 생성 예정)"
        )


class UniverseMismatchError(SenError):
    """두 객체의 정점 유니버스가 다름"""

    exit_code = 9


class SenDimensionError(SenError):
    """SEN 복합체 차원이 1 미만"""

    exit_code = 10


class DuplicateVertexError(SenError):
    """이미 등록된 정점 id"""

    exit_code = 11

    def __init__(self, vertex_id: str):
        self.vertex_id = vertex_id
        super().__init__(f"이미 등록된 정점 id: '{vertex_id}'")


class UnknownVertexError(SenError):
    """등록되지 않은 정점 id"""

    exit_code = 12

    def __init__(self, vertex_id: str):
        self.vertex_id = vertex_id
        super().__init__(f"등록되지 않은 정점 id: '{vertex_id}'")


class EmptySimplexError(SenError):
    """빈 심플렉스는 허용하지 않음"""

    exit_code = 13

    def __init__(self):
        super().__init__("빈 심플렉스는 허용되지 않습니다 (모든 심플렉스는 non-empty)")


class ConfigError(SenError):
    """RunConfig 불변식 위반"""

    exit_code = 14
