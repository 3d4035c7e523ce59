#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
多项式界服务 - 夹逼多项式 L、U，牛顿构造与闭式根界，附录证书

r 的升序系数：
    L(r) = 1 - 2d r + d² r³ + d³ r⁵ - d³ r⁶
    U(r) = 1 - 2d r + d² r³ + d³ r⁵
    Ū(r) = -1 + 2d r - d(d+1) r³ + d r⁴
"""

import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npPoly

from business.models.errors import (
    CertificationError,
    DerivativeVanishedError,
    NoSignChangeError,
    NumericFailureError,
)
from business.models.polynomial import Polynomial
from business.models.renewal import RootBracket
from business.validators.param_validator import ParamValidator
from infrastructure.config.app_config import AppConfig
from infrastructure.logging.logger import LoggerMixin

# Ū(d) 的 15 个整数系数（d 的升序），附录正性证书的对象
APPENDIX_COEFFICIENTS: Tuple[int, ...] = (
    -1, 0, 140, -280, -7840, 26460, 203840, -918064, -2579360,
    14993216, 72342816, -496642048, 988904672, -801511424, 211441664
)
APPENDIX_DEGREES = range(2, 7)


class PolynomialService(LoggerMixin):
    """多项式界服务"""

    def __init__(self, configManager: Optional[AppConfig] = None):
        self.config = configManager or AppConfig()

    @staticmethod
    def _checkDegree(d: Any) -> None:
        ParamValidator.validateAndRaise(ParamValidator.validateDegree(d), 'd')

    # 多项式
    def polyL(self, d: int) -> Polynomial:
        """下夹逼多项式 L"""
        self._checkDegree(d)
        return Polynomial((1, -2 * d, 0, d ** 2, 0, d ** 3, -d ** 3))

    def polyU(self, d: int) -> Polynomial:
        """上夹逼多项式 U"""
        self._checkDegree(d)
        return Polynomial((1, -2 * d, 0, d ** 2, 0, d ** 3))

    def polyUBar(self, d: int) -> Polynomial:
        """前人改进更新论证得到的多项式 Ū(r)"""
        self._checkDegree(d)
        return Polynomial((-1, 2 * d, 0, -d * (d + 1), d))

    @staticmethod
    def appendixPolynomial() -> Polynomial:
        """Ū(d)：14 次整数系数多项式"""
        return Polynomial(APPENDIX_COEFFICIENTS)

    # 夹逼函数
    @staticmethod
    def _tailGeometric(r: float, d: int) -> float:
        """Σ_{k≥3} (dr)^k = d³r³/(1-dr)"""
        if d * r >= 1.0:
            raise NumericFailureError(f"d·r = {d * r} ≥ 1，几何尾发散")
        return -(d ** 3) * r ** 3 / (d * r - 1.0)

    def fInf(self, r: float, d: int) -> float:
        """S(r,d) 的下夹逼函数"""
        head = d * r + d ** 2 * (1.0 - r) * r ** 2
        return head + (1.0 - r - r ** 2) * self._tailGeometric(r, d)

    def fSup(self, r: float, d: int) -> float:
        """S(r,d) 的上夹逼函数"""
        head = d * r + d ** 2 * (1.0 - r) * r ** 2
        return head + (1.0 - r) * (1.0 - r ** 2) * self._tailGeometric(r, d)

    # 求根
    def findRoot(self, poly: Polynomial, lo: float, hi: float,
                 tol: Optional[float] = None) -> RootBracket:
        """二分法求根

        Args:
            poly: 多项式
            lo: 区间左端
            hi: 区间右端
            tol: 区间宽度容差

        Returns:
            RootBracket: 宽度不超过 tol 的根区间

        Raises:
            NoSignChangeError: 端点不变号
            NumericFailureError: 双精度下无法达到容差
        """
        if tol is None:
            tol = self.config.get('numerics.rootTolerance', 1e-15)
        maxSteps = int(self.config.get('numerics.maxBisectionSteps', 200))

        lo, hi = float(lo), float(hi)
        fLo, fHi = float(poly(lo)), float(poly(hi))
        if fLo == 0.0:
            return RootBracket(lo, lo)
        if fHi == 0.0:
            return RootBracket(hi, hi)
        if (fLo < 0.0) == (fHi < 0.0):
            raise NoSignChangeError(
                f"区间 [{lo}, {hi}] 端点同号: {fLo}, {fHi}"
            )

        steps = 0
        while hi - lo > tol:
            if steps >= maxSteps:
                raise NumericFailureError(
                    f"二分 {maxSteps} 步后仍未达到容差 {tol}", (lo, hi)
                )
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                raise NumericFailureError(
                    f"容差 {tol} 低于双精度分辨率", (lo, hi)
                )
            fMid = float(poly(mid))
            steps += 1
            if fMid == 0.0:
                return RootBracket(mid, mid, steps)
            if (fMid < 0.0) == (fLo < 0.0):
                lo, fLo = mid, fMid
            else:
                hi = mid

        self.logger.debug(f"二分求根 {steps} 步: [{lo}, {hi}]")
        return RootBracket(lo, hi, steps)

    def newtonSteps(self, poly: Polynomial, t0: float, steps: int) -> List[float]:
        """牛顿迭代 t_n = t_{n-1} - P(t_{n-1}) / P'(t_{n-1})

        Returns:
            List[float]: 迭代值 t_1..t_steps

        Raises:
            DerivativeVanishedError: 导数为零
        """
        derivative = poly.derivative()
        iterates = []
        t = float(t0)
        for n in range(1, steps + 1):
            slope = float(derivative(t))
            if slope == 0.0:
                raise DerivativeVanishedError(f"第 {n} 步导数为零 (t={t})")
            t = t - float(poly(t)) / slope
            iterates.append(t)
        return iterates

    # 闭式界
    def rLExact(self, d: int) -> Fraction:
        """r_L(d) 的精确有理值"""
        self._checkDegree(d)
        numerator = 5 - 8 * d - 16 * d ** 2 + 64 * d ** 3
        denominator = 12 * d - 20 * d ** 2 - 48 * d ** 3 + 128 * d ** 4
        return Fraction(numerator, denominator)

    def rL(self, d: int) -> float:
        """L 两步牛顿迭代的闭式，r_c 的下界"""
        self._checkDegree(d)
        return ((5 - 8 * d - 16 * d ** 2 + 64 * d ** 3) /
                (12 * d - 20 * d ** 2 - 48 * d ** 3 + 128 * d ** 4))

    def rUExact(self, d: int) -> Fraction:
        """r_U(d) 的精确有理值"""
        self._checkDegree(d)
        return (2 - Fraction(1, 14 * d * d) - 4 * d) / (5 * d - 8 * d * d)

    def rU(self, d: Union[int, float]) -> float:
        """r_c 的上界闭式"""
        ParamValidator.validateAndRaise(
            ParamValidator.validateDegree(d, allowReal=True), 'd'
        )
        return (2.0 - 1.0 / (14.0 * d * d) - 4.0 * d) / (5.0 * d - 8.0 * d * d)

    def intermediateBound(self, d: int) -> float:
        """dr(2-r)=1 在 (0,1/d) 中的根 1-sqrt((d-1)/d)"""
        self._checkDegree(d)
        return 1.0 - math.sqrt((d - 1) / d)

    # 附录证书
    @staticmethod
    def cauchyBound(poly: Polynomial) -> float:
        """Cauchy 根界 1 + max_i |a_i / a_n|"""
        if poly.degree == 0:
            return 1.0
        leading = poly.leading
        if poly.isExact:
            ratios = [abs(Fraction(c) / Fraction(leading)) for c in poly.coefficients[:-1]]
            return float(1 + max(ratios))
        return 1.0 + max(abs(c / leading) for c in poly.coefficients[:-1])

    def appendixValues(self) -> Dict[int, int]:
        """Ū(d) 在 d=2..6 处的精确整数值"""
        poly = self.appendixPolynomial()
        return {d: poly(d) for d in APPENDIX_DEGREES}

    def appendixPositivityCheck(self) -> bool:
        """d=2..6 处 Ū(d) 是否全为正（精确整数运算）"""
        values = self.appendixValues()
        allPositive = all(value > 0 for value in values.values())
        if not allPositive:
            self.logger.warning(f"附录多项式出现非正值: {values}")
        return allPositive

    def appendixCertificate(self) -> Dict[str, Any]:
        """附录证书：正性检查与 Cauchy 界 < 6"""
        poly = self.appendixPolynomial()
        bound = self.cauchyBound(poly)
        positive = self.appendixPositivityCheck()
        return {
            'values': self.appendixValues(),
            'cauchy_bound': bound,
            'positive': positive,
            'certified': positive and bound < 6
        }

    def certifyUpperClosedForm(self, d: int) -> bool:
        """精确有理运算验证 U(r_U(d)) < 0，即 r_U 位于 U 的根右侧"""
        return self.polyU(d)(self.rUExact(d)) < 0

    def certifyRefinedComparison(self, d: int) -> bool:
        """精确有理运算验证 Ū(r_U(d)) < 0，即新上界优于 Ū 的根给出的上界"""
        return self.polyUBar(d)(self.rUExact(d)) < 0

    def uMonotoneWindow(self, d: int) -> float:
        """U 的单调递减窗口右端 sqrt(1/(5d))

        Raises:
            CertificationError: r_U(d) 或 1-sqrt((d-1)/d) 不在窗口内
        """
        window = math.sqrt(1.0 / (5.0 * d))
        upper = self.rU(d)
        intermediate = self.intermediateBound(d)
        if not upper < window:
            raise CertificationError(f"d={d}: r_U={upper} 不小于 {window}")
        if not intermediate < window:
            raise CertificationError(
                f"d={d}: 1-sqrt((d-1)/d)={intermediate} 不小于 {window}"
            )
        return window

    # 网格检查
    @staticmethod
    def derivativeRange(poly: Polynomial, lo: float, hi: float,
                        order: int = 1, points: int = 10000) -> Tuple[float, float]:
        """在 (lo, hi) 内部网格上求 order 阶导数的最小值与最大值"""
        coefficients = np.array([float(c) for c in poly.coefficients])
        derived = npPoly.polyder(coefficients, order) if order else coefficients
        grid = np.linspace(lo, hi, points + 2)[1:-1]
        values = npPoly.polyval(grid, derived)
        return float(values.min()), float(values.max())
