"""
SesDocumentConverter - SES 수집 문서 파싱
섹션형 텍스트 문서를 SesStructure 로 변환 (줄 번호 진단 포함)

문서 형식:
    # 주석
    [vertices]
    s1 social
    e1 ecological
    [interactions]            ← 관계 이름 생략 시 'default'
    s1 e1
    [interactions collab]     ← 이름 있는 관계 R_i
    s1 e1
    [constants]
    quota                     ← SES 전체에 부착
    no_felling e1             ← 정점에 부착
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .errors import DisjointnessError, DocumentParseError
from .ses_model import DEFAULT_RELATION, Constant, SesStructure, UnitKind, build_ses

logger = logging.getLogger(__name__)

SECTIONS = ('vertices', 'interactions', 'constants')


@dataclass
class ParsedDocument:
    """파싱 결과 (검증 전 원시 내용, 줄 번호 보존)"""

    vertices: List[Tuple[int, str, UnitKind]] = field(default_factory=list)
    relations: Dict[str, List[Tuple[int, List[str]]]] = field(default_factory=dict)
    constants: List[Tuple[int, str, List[str]]] = field(default_factory=list)


class SesDocumentConverter:
    """SES 문서 → SesStructure 변환"""

    def __init__(self, text: str, source: Optional[str] = None):
        """
        Args:
            text: 문서 내용
            source: 진단 메시지에 표시할 이름 (파일 경로 등)
        """
        if not isinstance(text, str):
            raise ValueError("text는 문자열이어야 합니다.")
        self.text = text
        self.source = source
        self.document = self._parse()

    @classmethod
    def from_file(cls, path) -> 'SesDocumentConverter':
        path = Path(path)
        return cls(path.read_text(encoding='utf-8-sig'), source=str(path))

    def _error(self, line: int, message: str) -> DocumentParseError:
        return DocumentParseError(message, line=line, source=self.source)

    def _parse(self) -> ParsedDocument:
        """섹션별 파싱 + 줄 단위 검증"""
        document = ParsedDocument()
        section = None
        relation = None
        declared: Dict[str, Tuple[int, UnitKind]] = {}

        for number, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue

            # ========== 섹션 헤더 ==========
            if line.startswith('['):
                if not line.endswith(']'):
                    raise self._error(number, f"섹션 헤더 형식 오류: {line}")
                parts = line[1:-1].split()
                if not parts or parts[0] not in SECTIONS:
                    raise self._error(number, f"알 수 없는 섹션: {line} (가능: {', '.join(SECTIONS)})")
                section = parts[0]
                if section == 'interactions':
                    if len(parts) > 2:
                        raise self._error(number, f"관계 이름에는 공백을 쓸 수 없습니다: {line}")
                    relation = parts[1] if len(parts) == 2 else DEFAULT_RELATION
                    document.relations.setdefault(relation, [])
                elif len(parts) > 1:
                    raise self._error(number, f"'{section}' 섹션은 이름을 받지 않습니다")
                continue

            if section is None:
                raise self._error(number, "섹션 헤더 이전의 내용")

            tokens = line.split()

            # ========== 정점 ==========
            if section == 'vertices':
                if len(tokens) != 2:
                    raise self._error(number, f"'id kind' 형식이어야 합니다: {line}")
                vertex_id, tag = tokens
                try:
                    kind = UnitKind.parse(tag)
                except ValueError as e:
                    raise self._error(number, str(e))
                if vertex_id in declared:
                    first_line, first_kind = declared[vertex_id]
                    if first_kind is not kind:
                        raise DisjointnessError(vertex_id, line=number)
                    raise self._error(number, f"중복 정점 id '{vertex_id}' ({first_line}행에서 선언)")
                declared[vertex_id] = (number, kind)
                document.vertices.append((number, vertex_id, kind))

            # ========== 상호작용 ==========
            elif section == 'interactions':
                document.relations[relation].append((number, tokens))

            # ========== 상수 ==========
            else:
                document.constants.append((number, tokens[0], tokens[1:]))

        # 상호작용/상수의 정점 참조 확인 (정점 섹션 위치와 무관)
        for name, entries in document.relations.items():
            for number, ids in entries:
                for vertex_id in ids:
                    if vertex_id not in declared:
                        raise self._error(number, f"상호작용의 미등록 정점 id: '{vertex_id}'")
        for number, label, ids in document.constants:
            for vertex_id in ids:
                if vertex_id not in declared:
                    raise self._error(number, f"상수 '{label}' 의 미등록 정점 id: '{vertex_id}'")

        return document

    def build(self, allow_single_kind: bool = False) -> SesStructure:
        """
        SesStructure 생성

        Parameters:
        -----------
        allow_single_kind : bool
            True 이면 한 종류의 정점만 있어도 허용

        Returns:
        --------
        SesStructure
        """
        social = [v for _, v, kind in self.document.vertices if kind is UnitKind.SOCIAL]
        ecological = [v for _, v, kind in self.document.vertices if kind is UnitKind.ECOLOGICAL]
        relations = {
            name: [ids for _, ids in entries]
            for name, entries in self.document.relations.items()
        }
        if not relations:
            relations = {DEFAULT_RELATION: []}
        constants = [Constant(label, tuple(ids)) for _, label, ids in self.document.constants]

        ses = build_ses(social, ecological, relations, constants, allow_single_kind)
        logger.info(
            f"📄 SES 문서 로드: 사회 {len(social)} / 생태 {len(ecological)} / "
            f"관계 {len(relations)}개"
        )
        return ses


def render_document(ses: SesStructure) -> str:
    """SesStructure → 문서 텍스트 (파서가 다시 읽을 수 있는 형식)"""
    lines = ['[vertices]']
    lines.extend(f"{v} {ses.kind_of(v).value}" for v in ses.vertex_ids)
    for name, family in ses.relations.items():
        lines.append('[interactions]' if name == DEFAULT_RELATION else f'[interactions {name}]')
        lines.extend(' '.join(ses.universe.ids_of(s)) for s in family)
    if ses.constants:
        lines.append('[constants]')
        lines.extend(' '.join((c.label,) + c.attached_to) for c in ses.constants)
    return '\n'.join(lines) + '\n'


if __name__ == "__main__":
    sample = "[vertices]\ns1 social\ne1 ecological\n[interactions]\ns1 e1\n"
    converter = SesDocumentConverter(sample, source='<sample>')
    ses = converter.build()
    print(ses.summary())
    print(render_document(ses))
