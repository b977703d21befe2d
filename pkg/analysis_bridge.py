"""
analysis_bridge.py - 명령과 분석 모듈 통합

역할:
1. SES 문서 → 복합체 구성 + 종합 검증 (build)
2. 정규 복합체 파일 질의 (query)
3. 그룹 성장 실행 및 산출물 저장 (evolve)
4. 두 복합체 비교 (compare)
5. Saigata 재현 시나리오 (demo-saigata)
6. 결과 캐싱 및 요약 리포트
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from analysis.complex_core import (
    SimplicialComplex,
    boundary,
    f_vector,
    facets_paper,
    maximal_facets,
    p_skeleton,
)
from analysis.complex_format import read_complex, serialize_complex, write_complex
from analysis.config import RunConfig
from analysis.errors import ValidationFailure
from analysis.evolution import SAIGATA_PARTICIPANTS, GrowthRun, default_participants, export_ledger
from analysis.projection import ComparisonReport, compare_complexes, to_underlying_graph
from analysis.ses_converter import SesDocumentConverter
from analysis.ses_model import build_complex
from analysis.validators.comprehensive import ComprehensiveEvaluator

logger = logging.getLogger(__name__)

QUERIES = ('dimension', 'fvector', 'facets', 'maximal', 'skeleton', 'boundary')


def _write_json(path: Path, payload: Any) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + '\n', encoding='utf-8')
    return path


def run_query(complex_: SimplicialComplex, query: str, p: Optional[int] = None) -> str:
    """
    복합체 질의 → 출력 텍스트 (사전식 정렬, 결정적)

    Parameters:
    -----------
    complex_ : SimplicialComplex
        대상 복합체
    query : str
        dimension / fvector / facets / maximal / skeleton / boundary
    p : int, optional
        skeleton 질의의 차원 상한
    """
    universe = complex_.universe

    def render(simplices) -> List[str]:
        return [' '.join(universe.ids_of(s)) for s in simplices]

    if query == 'dimension':
        lines = [str(complex_.dimension)]
    elif query == 'fvector':
        lines = [' '.join(str(c) for c in f_vector(complex_))]
    elif query == 'facets':
        selection = facets_paper(complex_)
        lines = ['# facets: codimension-1 (dimension d-1)']
        if selection.warning:
            lines.append(f"# warning: {selection.warning}")
        lines += render(selection)
    elif query == 'maximal':
        lines = ['# facets: maximal'] + render(maximal_facets(complex_))
    elif query == 'skeleton':
        if p is None:
            raise ValueError("skeleton 질의에는 p 가 필요합니다")
        return serialize_complex(p_skeleton(complex_, p))
    elif query == 'boundary':
        lines = render(boundary(complex_))
    else:
        raise ValueError(f"알 수 없는 질의: {query} (가능: {', '.join(QUERIES)})")

    return '\n'.join(lines) + '\n'


class AnalysisBridge:
    """명령 ↔ 분석 모듈 브릿지"""

    def __init__(self, config: Optional[RunConfig] = None):
        """
        초기화

        Parameters:
        -----------
        config : RunConfig, optional
            실행 설정 (기본값 사용 시 None)
        """
        self.config = config or RunConfig()
        self.results_cache: Dict[str, Any] = {}

    # ========== build ==========
    def build(self, document_path, relation: Optional[str] = None) -> Dict[str, Any]:
        """
        SES 문서 → 닫힌 복합체 + 검증 리포트

        Returns:
        --------
        dict
            ses, complex, report, complex_path, report_path
        """
        document_path = Path(document_path)
        converter = SesDocumentConverter.from_file(document_path)
        ses = converter.build(allow_single_kind=not self.config.strict_kinds)

        complex_ = build_complex(ses, ses.relation(relation), self.config.simplex_cap).freeze()

        evaluator = ComprehensiveEvaluator(ses, complex_, self.config, relation)
        report = evaluator.get_comprehensive_report()

        complex_path = write_complex(self.config.output_dir / f"{document_path.stem}.complex", complex_)
        report_path = _write_json(self.config.output_dir / f"{document_path.stem}.report.json", report)

        logger.info(f"🔨 build 완료: {complex_path} ({len(complex_)}개 심플렉스, dim={complex_.dimension})")

        result = {
            'ses': ses,
            'complex': complex_,
            'report': report,
            'complex_path': complex_path,
            'report_path': report_path,
        }
        self.results_cache['build'] = result

        if not report['passed']:
            raise ValidationFailure('; '.join(report['blocking']))
        return result

    # ========== query ==========
    def query(self, complex_path, query: str, p: Optional[int] = None) -> str:
        complex_ = read_complex(complex_path, self.config.simplex_cap)
        return run_query(complex_, query, p)

    # ========== evolve ==========
    def evolve(
        self,
        n: int,
        last_step: int,
        participants: Optional[Sequence[str]] = None,
        output_dir: Optional[Path] = None
    ) -> Dict[str, Any]:
        """
        그룹 성장 실행 → 원장 + 단계별 복합체 + SEN manifest

        Parameters:
        -----------
        n : int
            참여자 수
        last_step : int
            마지막 단계 (1 ≤ last_step ≤ n-1)
        participants : list of str, optional
            참여자 id (기본: v0..v{n-1})
        """
        output_dir = Path(output_dir or self.config.output_dir)
        if participants is None:
            participants = default_participants(n)
        elif len(participants) != n:
            raise ValueError(f"참여자 이름 {len(participants)}개 ≠ n={n}")

        growth = GrowthRun(participants, last_step, self.config.simplex_cap)
        network = growth.run()
        ledger = growth.ledger()
        ledger_paths = export_ledger(ledger, output_dir)

        step_files = {}
        for alpha in network.time_index:
            path = write_complex(output_dir / f"step_{alpha}.complex", network.at(alpha))
            step_files[alpha] = path

        manifest = network.manifest()
        manifest['files'] = {
            'ledger_csv': ledger_paths['csv'].name,
            'ledger_json': ledger_paths['json'].name,
            'steps': {str(a): p.name for a, p in step_files.items()},
        }
        manifest_path = _write_json(output_dir / 'manifest.json', manifest)

        logger.info(f"🌱 evolve 완료: {output_dir} (Λ={list(network.time_index)})")

        result = {
            'growth': growth,
            'network': network,
            'ledger': ledger,
            'step_files': step_files,
            'ledger_paths': ledger_paths,
            'manifest': manifest,
            'manifest_path': manifest_path,
        }
        self.results_cache['evolve'] = result
        return result

    # ========== compare ==========
    def compare(self, path_a, path_b) -> ComparisonReport:
        left = read_complex(path_a, self.config.simplex_cap)
        right = read_complex(path_b, self.config.simplex_cap)
        comparison = compare_complexes(left, right)
        self.results_cache['compare'] = comparison
        return comparison

    # ========== demo-saigata ==========
    def demo_saigata(self) -> Dict[str, Any]:
        """5명 참여자 그룹 성장 재현 (원장, 복합체, 비교, 그래프 내보내기)"""
        output_dir = self.config.output_dir / 'saigata'
        n = len(SAIGATA_PARTICIPANTS)
        evolved = self.evolve(n, n - 1, SAIGATA_PARTICIPANTS, output_dir)
        network = evolved['network']

        graph_files = {}
        for alpha in network.time_index:
            graph = to_underlying_graph(network.at(alpha))
            path = output_dir / 'graphs' / f"step_{alpha}.gml"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(graph.to_gml(), encoding='utf-8')
            graph_files[alpha] = path

        comparison = self.compare(evolved['step_files'][1], evolved['step_files'][n - 1])
        comparison_path = _write_json(output_dir / 'comparison_step1_vs_step4.json', comparison.to_dict())
        table_path = output_dir / 'comparison_step1_vs_step4.txt'
        table_path.write_text(comparison.to_frame().to_string(index=False) + '\n', encoding='utf-8')

        self.results_cache['demo'] = {
            'evolve': evolved,
            'graph_files': graph_files,
            'comparison': comparison,
            'comparison_path': comparison_path,
            'table_path': table_path,
        }
        summary = self.generate_summary_report()
        summary_path = _write_json(output_dir / 'summary.json', summary)
        self.results_cache['demo']['summary_path'] = summary_path

        logger.info(f"🐅 demo-saigata 완료: {output_dir}")
        return self.results_cache['demo']

    # ========== 요약 리포트 ==========
    def generate_summary_report(self) -> Dict[str, Any]:
        """
        캐시된 결과 요약

        Returns:
        --------
        dict
            실행 상태 + 핵심 발견사항
        """
        if not self.results_cache:
            return {'error': '실행된 명령이 없습니다.'}

        return {
            'analysis_status': {
                name: name in self.results_cache
                for name in ('build', 'evolve', 'compare', 'demo')
            },
            'key_findings': self._extract_key_findings(),
            'config': self.config.to_dict(),
        }

    def _extract_key_findings(self) -> Dict[str, Any]:
        findings: Dict[str, Any] = {}

        if 'build' in self.results_cache:
            report = self.results_cache['build']['report']
            findings['build'] = {
                'members': report['members'],
                'dimension': report['dimension'],
                'verdict': report['verdict'],
            }

        if 'evolve' in self.results_cache:
            evolved = self.results_cache['evolve']
            final = evolved['network'].final()
            findings['evolve'] = {
                'time_index': list(evolved['network'].time_index),
                'static': evolved['network'].is_static,
                'final_members': len(final),
                'final_dimension': final.dimension,
                'f_vector': list(f_vector(final)),
                'step_outputs': [int(c) for c in evolved['ledger']['output']],
                'order_classes': list(evolved['ledger']['order']),
            }

        if 'compare' in self.results_cache:
            comparison = self.results_cache['compare']
            findings['compare'] = {
                'graphs_identical': comparison.graphs_identical,
                'collision': comparison.collision.collides,
                'witness_dimension': (
                    comparison.collision.witness.dimension
                    if comparison.collision.witness is not None else None
                ),
                'simplices_lost_b': comparison.loss_b.simplices_lost,
            }

        return findings
