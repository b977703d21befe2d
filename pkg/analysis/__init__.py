"""
analysis - 단체 복합체 기반 사회-생태 네트워크(SEN) 분석

complex_core   추상 단체 복합체 엔진
ses_model      SES / SEN 모델링
evolution      반복적 그룹 성장 알고리즘
projection     그래프 투영과 정보 손실
validators     복합체 조건 / 부분집합 의존성 검증
"""

__version__ = '1.0.0'
