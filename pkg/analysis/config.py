"""
config.py - 실행 설정

RunConfig:
1. 기본값 (simplex_cap=25, strict_kinds=True, witness_limit=10)
2. JSON 설정 파일 로드
3. CLI 플래그 병합 (플래그 우선)
"""

import json
import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from .errors import ConfigError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """실행 설정"""

    simplex_cap: int = 25
    strict_kinds: bool = True
    witness_limit: int = 10
    output_dir: Path = field(default_factory=lambda: Path('output'))
    pairwise_check_limit: int = 4096
    require_subset_dependency: bool = False

    def __post_init__(self):
        if self.simplex_cap < 2:
            raise ConfigError(f"simplex_cap은 2 이상이어야 합니다 (현재: {self.simplex_cap})")
        if self.witness_limit < 1:
            raise ConfigError(f"witness_limit은 1 이상이어야 합니다 (현재: {self.witness_limit})")
        if self.pairwise_check_limit < 0:
            raise ConfigError("pairwise_check_limit은 음수일 수 없습니다")
        if not isinstance(self.output_dir, Path):
            object.__setattr__(self, 'output_dir', Path(self.output_dir))

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> 'RunConfig':
        """
        딕셔너리에서 생성 (키는 '-'/'_' 모두 허용)

        Parameters:
        -----------
        values : dict
            설정 값. 알 수 없는 키는 ConfigError
        """
        known = {f.name for f in fields(cls)}
        normalized = {}
        for key, value in values.items():
            name = key.replace('-', '_')
            if name not in known:
                raise ConfigError(f"알 수 없는 설정 키: '{key}'")
            normalized[name] = value
        return cls(**normalized)

    @classmethod
    def from_file(cls, path) -> 'RunConfig':
        """JSON 설정 파일 로드"""
        path = Path(path)
        try:
            values = json.loads(path.read_text(encoding='utf-8'))
        except FileNotFoundError:
            raise ConfigError(f"설정 파일 없음: {path}")
        except json.JSONDecodeError as e:
            raise ConfigError(f"설정 파일 JSON 오류 ({path}): {e}")

        if not isinstance(values, dict):
            raise ConfigError(f"설정 파일 최상위는 객체여야 합니다: {path}")

        logger.debug(f"설정 파일 로드: {path}")
        return cls.from_dict(values)

    def merged(self, overrides: Optional[Dict[str, Any]] = None) -> 'RunConfig':
        """None이 아닌 값만 덮어쓴 새 설정 (CLI 플래그 우선)"""
        if not overrides:
            return self
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes) if changes else self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'simplex_cap': self.simplex_cap,
            'strict_kinds': self.strict_kinds,
            'witness_limit': self.witness_limit,
            'output_dir': str(self.output_dir),
            'pairwise_check_limit': self.pairwise_check_limit,
            'require_subset_dependency': self.require_subset_dependency,
        }
