"""
analysis/validators/__init__.py

검증 모듈 (복합체 조건 / 부분집합 의존성) + 종합 판정
"""

from .closure import ClosureValidator, ValidationReport, Violation, validate
from .subset_dependency import SubsetDependencyChecker, SubsetDependencyReport, check_subset_dependency
from .comprehensive import ComprehensiveEvaluator

__all__ = [
    'ClosureValidator',
    'ValidationReport',
    'Violation',
    'validate',
    'SubsetDependencyChecker',
    'SubsetDependencyReport',
    'check_subset_dependency',
    'ComprehensiveEvaluator'
]
