#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
界服务 - p 与 r 的双射、定理闭式界、文献界与单调性比较
"""

import math
from typing import Iterable, List, Optional, Union

from business.models.model_params import BoundsReport, ModelParams, ReturnProb
from business.services.polynomial_service import PolynomialService
from business.validators.param_validator import ParamValidator, ValidationError
from infrastructure.config.app_config import AppConfig
from infrastructure.logging.logger import LoggerMixin

Degree = Union[int, float]

# 表格复现所用的度数
TABLE1_DEGREES = (2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100)


class BoundsService(LoggerMixin):
    """p_c 与 p̂_c 的闭式界"""

    table1Degrees = TABLE1_DEGREES

    def __init__(self, configManager: Optional[AppConfig] = None,
                 polynomialService: Optional[PolynomialService] = None):
        self.config = configManager or AppConfig()
        self.polynomialService = polynomialService or PolynomialService(self.config)

    @staticmethod
    def _checkDegree(d: Degree, allowReal: bool = False) -> None:
        ParamValidator.validateAndRaise(
            ParamValidator.validateDegree(d, allowReal=allowReal), 'd'
        )

    def rOfP(self, params: ModelParams) -> ReturnProb:
        """返回概率 r(p,d) = (d+1-sqrt((d+1)²-4dp²)) / (2dp)

        采用有理化形式 2p / (d+1+sqrt(...))，p=0 处连续地取 0。
        """
        d, p = params.d, params.p
        if p == 0.0:
            return ReturnProb(0.0, d)
        discriminant = (d + 1) ** 2 - 4.0 * d * p * p
        r = 2.0 * p / (d + 1 + math.sqrt(discriminant))
        return ReturnProb(min(r, 1.0 / d), d)

    @staticmethod
    def pOfR(r: ReturnProb) -> float:
        """r 的逆映射 p = (d+1) r / (1 + d r²)"""
        d, value = r.d, float(r.r)
        return (d + 1) * value / (1.0 + d * value * value)

    def theorem1Lower(self, d: Degree) -> float:
        """p_c 的下界 2(d+1) / (sqrt(4d²+4d-3) + 2d+1)"""
        self._checkDegree(d, allowReal=True)
        return 2.0 * (d + 1) / (math.sqrt(4.0 * d * d + 4.0 * d - 3.0) + 2.0 * d + 1.0)

    def theorem1Upper(self, d: Degree) -> float:
        """p̂_c（从而 p_c）的上界，等于 p_of_r(r_U(d))"""
        self._checkDegree(d, allowReal=True)
        numerator = 2.0 - 1.0 / (14.0 * d * d) - 4.0 * d
        denominator = 5.0 * d - 8.0 * d * d
        return ((d + 1) * numerator * denominator /
                (denominator * denominator + d * numerator * numerator))

    def gms2018Upper(self, d: int) -> float:
        """2018 年的上界，按有理化形式计算避免相消"""
        x = 7.0 * d - 1.0
        conjugate = x + math.sqrt(x * x - 14.0)
        s = 14.0 / conjugate
        return (d + 1) * s / (7.0 * d * s / conjugate + 2.0)

    def l2019Upper(self, d: int) -> float:
        """Ū 在 (0,1/d) 内的根经 p_of_r 映射得到的上界"""
        poly = self.polynomialService.polyUBar(d)
        root = self.polynomialService.findRoot(poly, 0.0, 1.0 / d)
        return self.pOfR(ReturnProb(min(root.midpoint, 1.0 / d), d))

    def literatureBounds(self, d: int) -> BoundsReport:
        """文献中的四组界（部分报告），超过 1 的上界截断并标记"""
        self._checkDegree(d)
        vacuous = []

        ampUpper = (d + 1) / (2.0 * d - 2.0)
        if ampUpper > 1.0:
            self.logger.warning(f"d={d}: 2002 年上界 {ampUpper} 超过 1，截断为 1")
            vacuous.append('amp2002Ub')
            ampUpper = 1.0

        return BoundsReport(
            d=d,
            amp2002Lb=(d + 1) / (2.0 * d + 1.0),
            amp2002Ub=ampUpper,
            lmp2005Ub=(d + 1) / (2.0 * d),
            gms2018Ub=self.gms2018Upper(d),
            l2019Ub=self.l2019Upper(d),
            vacuous=tuple(vacuous)
        )

    def buildReport(self, d: int) -> BoundsReport:
        """完整界报告"""
        partial = self.literatureBounds(d)
        lbPcHat = self.pOfR(ReturnProb(self.polynomialService.rL(d), d))
        return BoundsReport(
            d=d,
            lbPc=self.theorem1Lower(d),
            ubPc=self.theorem1Upper(d),
            lbPcHat=lbPcHat,
            amp2002Lb=partial.amp2002Lb,
            amp2002Ub=partial.amp2002Ub,
            lmp2005Ub=partial.lmp2005Ub,
            gms2018Ub=partial.gms2018Ub,
            l2019Ub=partial.l2019Ub,
            vacuous=partial.vacuous
        )

    def reportsFor(self, dList: Iterable[int]) -> List[BoundsReport]:
        """按 d 升序生成报告"""
        return [self.buildReport(d) for d in sorted(set(dList))]

    def monotonicityGap(self, d: int, a: float) -> bool:
        """l(d) > r(a·d)，a·d 作为实数度数代入闭式"""
        self._checkDegree(d)
        if a * d < 2:
            raise ValidationError(f"a·d 必须不小于 2: {a * d}", 'a')
        return self.theorem1Lower(d) > self.theorem1Upper(a * d)

    def monotonicityScan(self, dRange: Iterable[int], a: float) -> List[int]:
        """返回不满足 l(d) > r(a·d) 的度数"""
        failing = [d for d in dRange if not self.monotonicityGap(d, a)]
        if failing:
            self.logger.info(f"a={a}: {len(failing)} 个度数不满足单调性比较")
        return failing
