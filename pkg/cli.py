"""
cli.py - 단체 복합체 SEN 분석 명령줄 도구

하위 명령:
1. build         SES 문서 → 정규 복합체 파일 + 검증 리포트
2. query         복합체 파일 질의 (dimension / fvector / facets / maximal / skeleton P / boundary)
3. evolve        그룹 성장 (원장 + 단계별 복합체 + manifest)
4. compare       두 복합체의 그래프 투영 손실 / 골격 충돌 비교
5. demo-saigata  5명 참여자 성장 시나리오 전체 산출물

결과는 stdout, 진행 로그는 stderr 로 출력한다.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from analysis.config import RunConfig
from analysis.errors import EXIT_OK, EXIT_USAGE, SenError
from analysis_bridge import QUERIES, AnalysisBridge

logger = logging.getLogger(__name__)

EXIT_CODES_HELP = """\
exit codes:
  0   success
  1   I/O error (file not found, permission)
  2   usage error
  3   parse error (SES document or canonical complex file, with line number)
  4   validation failure (strict mode)
  5   social/ecological vertex sets overlap
  6   empty vertex universe
  7   evolution step out of range
  8   simplex exceeds the size cap
  9   vertex universe mismatch
  10  SEN complex of dimension < 1
  11  duplicate vertex id
  12  unknown vertex id
  13  empty simplex
  14  configuration error
"""


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps subcommand parsing from overwriting values given before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--simplex-cap",
        type=int,
        default=argparse.SUPPRESS,
        help="maximum simplex cardinality (default: 25)",
    )
    kinds = common.add_mutually_exclusive_group()
    kinds.add_argument(
        "--strict-kinds",
        dest="strict_kinds",
        action="store_true",
        default=argparse.SUPPRESS,
        help="require both social and ecological vertices (default)",
    )
    kinds.add_argument(
        "--allow-single-kind",
        dest="strict_kinds",
        action="store_false",
        default=argparse.SUPPRESS,
        help="accept a toy-model SES with a single vertex kind",
    )
    common.add_argument(
        "--witness-limit",
        type=int,
        default=argparse.SUPPRESS,
        help="maximum violation witnesses per report (default: 10)",
    )
    common.add_argument(
        "--out",
        type=Path,
        default=argparse.SUPPRESS,
        help="output directory (default: output)",
    )
    common.add_argument(
        "--config",
        type=Path,
        default=argparse.SUPPRESS,
        help="JSON config file; flags override its values",
    )
    common.add_argument(
        "-v", "--verbose",
        action="store_true",
        default=argparse.SUPPRESS,
        help="debug logging on stderr",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="sen-complex",
        description="Simplicial-complex modeling of social-ecological networks",
        epilog=EXIT_CODES_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", parents=[common], help="SES document -> canonical complex")
    build.add_argument("document", type=Path, help="SES ingestion document")
    build.add_argument("--relation", default=None, help="named interaction relation (default: all)")
    build.add_argument(
        "--require-subset-dependency",
        action="store_true",
        default=None,
        help="fail when the interaction family is not downward closed",
    )

    query = commands.add_parser("query", parents=[common], help="query a canonical complex file")
    query.add_argument("complex_file", type=Path)
    query.add_argument("query", choices=QUERIES)
    query.add_argument("p", nargs="?", type=int, default=None, help="skeleton dimension")

    evolve = commands.add_parser("evolve", parents=[common], help="run group growth")
    evolve.add_argument("n", type=int, help="number of participants")
    evolve.add_argument("last_step", type=int, help="last step (1 <= last_step <= n-1)")
    evolve.add_argument("--names", nargs="+", default=None, help="participant ids (exactly n)")

    compare = commands.add_parser("compare", parents=[common], help="compare two complexes")
    compare.add_argument("complex_a", type=Path)
    compare.add_argument("complex_b", type=Path)
    compare.add_argument("--table", action="store_true", help="print the loss table instead of JSON")

    commands.add_parser("demo-saigata", parents=[common], help="five-participant growth scenario")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """설정 파일 → CLI 플래그 순으로 병합 (플래그 우선)"""
    config_path = getattr(args, "config", None)
    base = RunConfig.from_file(config_path) if config_path else RunConfig()
    overrides: Dict[str, Any] = {
        "simplex_cap": getattr(args, "simplex_cap", None),
        "strict_kinds": getattr(args, "strict_kinds", None),
        "witness_limit": getattr(args, "witness_limit", None),
        "output_dir": getattr(args, "out", None),
        "require_subset_dependency": getattr(args, "require_subset_dependency", None),
    }
    return base.merged(overrides)


def _print_json(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")


# ========== 하위 명령 ==========
def cmd_build(bridge: AnalysisBridge, args: argparse.Namespace) -> int:
    result = bridge.build(args.document, args.relation)
    _print_json(result["report"])
    return EXIT_OK


def cmd_query(bridge: AnalysisBridge, args: argparse.Namespace) -> int:
    sys.stdout.write(bridge.query(args.complex_file, args.query, args.p))
    return EXIT_OK


def cmd_evolve(bridge: AnalysisBridge, args: argparse.Namespace) -> int:
    result = bridge.evolve(args.n, args.last_step, args.names)
    sys.stdout.write(result["ledger"].to_string(index=False) + "\n")
    return EXIT_OK


def cmd_compare(bridge: AnalysisBridge, args: argparse.Namespace) -> int:
    comparison = bridge.compare(args.complex_a, args.complex_b)
    if args.table:
        sys.stdout.write(comparison.to_frame().to_string(index=False) + "\n")
    else:
        _print_json(comparison.to_dict())
    return EXIT_OK


def cmd_demo_saigata(bridge: AnalysisBridge, args: argparse.Namespace) -> int:
    bridge.demo_saigata()
    _print_json(bridge.generate_summary_report())
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "query": cmd_query,
    "evolve": cmd_evolve,
    "compare": cmd_compare,
    "demo-saigata": cmd_demo_saigata,
}


def _check_usage(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "query":
        if args.query == "skeleton" and args.p is None:
            parser.error("query skeleton requires P")
        if args.query != "skeleton" and args.p is not None:
            parser.error(f"query {args.query} takes no argument")
        if args.p is not None and args.p < 0:
            parser.error("skeleton dimension P must be >= 0")
    if args.command == "evolve" and args.names is not None and len(args.names) != args.n:
        parser.error(f"--names expects {args.n} ids, got {len(args.names)}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_usage(parser, args)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        bridge = AnalysisBridge(load_config(args))
        return COMMANDS[args.command](bridge, args)
    except SenError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    except ValueError as e:
        # 알 수 없는 관계 이름 등 인자 값 오류
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
