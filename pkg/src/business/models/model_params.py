#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
模型参数与界报告
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from business.validators.param_validator import ParamValidator, ValidationError


@dataclass(frozen=True)
class ModelParams:
    """树的度数 d 与寿命参数 p"""

    d: int
    p: float

    def __post_init__(self):
        ParamValidator.validateAndRaise(ParamValidator.validateDegree(self.d), 'd')
        ParamValidator.validateAndRaise(
            ParamValidator.validateLifetime(self.p), 'p'
        )

    def toDict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {'d': self.d, 'p': self.p}


@dataclass(frozen=True)
class ReturnProb:
    """返回概率 r = r(p,d)，取值于 [0, 1/d]"""

    r: float
    d: int

    def __post_init__(self):
        ParamValidator.validateAndRaise(
            ParamValidator.validateReturnProb(self.r, self.d), 'r'
        )

    def __float__(self) -> float:
        return float(self.r)


@dataclass(frozen=True)
class BoundsReport:
    """单个 d 的全部上下界

    文献界可能缺失（仅计算部分界时），超过 1 的上界被截断为 1 并记入 vacuous。
    """

    d: int
    lbPc: Optional[float] = None
    ubPc: Optional[float] = None
    lbPcHat: Optional[float] = None
    amp2002Lb: Optional[float] = None
    amp2002Ub: Optional[float] = None
    lmp2005Ub: Optional[float] = None
    gms2018Ub: Optional[float] = None
    l2019Ub: Optional[float] = None
    vacuous: Tuple[str, ...] = field(default_factory=tuple)

    valueFields = (
        'lbPc', 'lbPcHat', 'ubPc', 'amp2002Lb', 'amp2002Ub',
        'lmp2005Ub', 'gms2018Ub', 'l2019Ub'
    )

    def __post_init__(self):
        ParamValidator.validateAndRaise(ParamValidator.validateDegree(self.d), 'd')

        for name in self.valueFields:
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 1.0:
                raise ValidationError(f"{name} 不在 [0,1] 内: {value}", name)

        if self.ubPc is not None:
            if self.lbPc is not None and self.lbPc > self.ubPc:
                raise ValidationError(
                    f"下界 {self.lbPc} 大于上界 {self.ubPc}", 'lbPc'
                )
            if self.lbPcHat is not None and self.lbPcHat > self.ubPc:
                raise ValidationError(
                    f"定向模型下界 {self.lbPcHat} 大于上界 {self.ubPc}",
                    'lbPcHat'
                )

    def isVacuous(self, name: str) -> bool:
        """该界是否被截断"""
        return name in self.vacuous

    def toDict(self) -> Dict[str, Any]:
        """转换为字典（输出列名使用下划线风格）"""
        return {
            'd': self.d,
            'lb_pc': self.lbPc,
            'lb_pc_hat': self.lbPcHat,
            'ub_pc': self.ubPc,
            'amp2002_lb': self.amp2002Lb,
            'amp2002_ub': self.amp2002Ub,
            'lmp2005_ub': self.lmp2005Ub,
            'gms2018_ub': self.gms2018Ub,
            'l2019_ub': self.l2019Ub,
            'vacuous': ';'.join(self.vacuous)
        }
