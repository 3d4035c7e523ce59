#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
更新序列、级数区间与根区间模型
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from business.validators.param_validator import ParamValidator, ValidationError


@dataclass(frozen=True)
class RenewalSequence:
    """固定 (r,d) 下的更新间隔分布 f_k 与更新概率 u_k（下标从 1 开始）"""

    r: float
    d: int
    u: Tuple[float, ...]
    f: Tuple[float, ...]

    def __post_init__(self):
        ParamValidator.validateAndRaise(
            ParamValidator.validateReturnProb(self.r, self.d), 'r'
        )
        if not self.u or self.u[0] != self.r:
            raise ValidationError("u_1 必须等于 r", 'u')
        if any(not 0.0 <= value <= 1.0 for value in self.u):
            raise ValidationError("u_k 必须在 [0,1] 内", 'u')
        if any(not 0.0 <= value <= 1.0 for value in self.f):
            raise ValidationError("f_k 必须在 [0,1] 内", 'f')
        if sum(self.f) > 1.0 + 1e-12:
            raise ValidationError("f_k 之和不能超过 1", 'f')

    def __len__(self) -> int:
        return len(self.u)

    def uAt(self, k: int) -> float:
        """u_k"""
        return self.u[k - 1]

    def fAt(self, k: int) -> float:
        """f_k"""
        return self.f[k - 1]


@dataclass(frozen=True)
class SeriesBracket:
    """S(r,d) 的严格区间"""

    lower: float
    upper: float
    termsUsed: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValidationError(
                f"区间下端 {self.lower} 大于上端 {self.upper}", 'lower'
            )

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


@dataclass(frozen=True)
class RootBracket:
    """根的包围区间 [lo, hi]"""

    lo: float
    hi: float
    iterations: int = 0
    termsUsed: int = 0

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValidationError(f"区间端点颠倒: [{self.lo}, {self.hi}]", 'lo')

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def within(self, lo: float, hi: float) -> bool:
        """是否包含于 [lo, hi]"""
        return lo <= self.lo and self.hi <= hi

    def toDict(self) -> Dict[str, Any]:
        return {
            'lo': self.lo,
            'hi': self.hi,
            'midpoint': self.midpoint,
            'iterations': self.iterations,
            'terms_used': self.termsUsed
        }
