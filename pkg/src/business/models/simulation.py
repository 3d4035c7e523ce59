#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
模拟配置与结果模型
"""

from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Tuple

from business.validators.param_validator import ParamValidator, ValidationError

Vertex = Tuple[int, ...]
ROOT: Vertex = ()


@dataclass(frozen=True)
class SimConfig:
    """蒙特卡罗模拟配置"""

    d: int
    p: float
    variant: str = 'full'
    maxActivations: int = 10000
    maxSteps: int = 10000000
    replicas: int = 100
    seed: int = 0

    def __post_init__(self):
        ParamValidator.validateAndRaise(ParamValidator.validateSimConfig(
            self.d, self.p, self.variant, self.maxActivations,
            self.maxSteps, self.replicas, self.seed
        ))

    @property
    def oriented(self) -> bool:
        return self.variant == 'oriented'

    def withP(self, p: float) -> 'SimConfig':
        """替换寿命参数"""
        return replace(self, p=p)

    def withVariant(self, variant: str) -> 'SimConfig':
        """替换模型变体"""
        return replace(self, variant=variant)

    def toDict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class SimOutcome:
    """单次模拟结果；达到激活上限视为存活"""

    reachedCap: bool
    activations: int
    steps: int
    frontierDepth: int

    def __post_init__(self):
        if self.activations < 1:
            raise ValidationError("至少激活根上的青蛙", 'activations')

    def toRow(self, replica: int) -> Dict[str, Any]:
        """逐副本导出行"""
        return {
            'replica': replica,
            'reached_cap': int(self.reachedCap),
            'activations': self.activations,
            'steps': self.steps,
            'frontier_depth': self.frontierDepth
        }


@dataclass(frozen=True)
class SurvivalEstimate:
    """存活频率与 Wilson 区间"""

    freq: float
    ciLow: float
    ciHigh: float
    survived: int
    replicas: int

    @property
    def excludesZero(self) -> bool:
        return self.ciLow > 0.0

    def toDict(self) -> Dict[str, Any]:
        return {
            'freq': self.freq,
            'ci_low': self.ciLow,
            'ci_high': self.ciHigh,
            'survived': self.survived,
            'replicas': self.replicas
        }


@dataclass(frozen=True)
class PcBracket:
    """经验临界参数区间（启发式，不是严格包围）"""

    pLo: float
    pHi: float
    evaluations: int

    def __post_init__(self):
        if self.pLo > self.pHi:
            raise ValidationError(f"区间端点颠倒: [{self.pLo}, {self.pHi}]")

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.pLo + self.pHi)

    def overlaps(self, lo: float, hi: float) -> bool:
        return self.pLo <= hi and lo <= self.pHi
