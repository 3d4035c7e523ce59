#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
更新服务 - 更新间隔分布 f_k、更新概率 u_k、幂级数 S(r,d) 的严格区间与 r_c 求解

    f_k    = r^k Π_{i<k} (1 - r^i)
    u_k    = Σ_{j=0}^{k-1} f_{k-j} u_j,  u_0 = 1
    S(r,d) = Σ_{k≥1} (dr)^k Π_{i<k} (1 - r^i)
"""

import math
from typing import List, Optional, Tuple

import numpy as np

from business.models.errors import NumericFailureError, SeriesDivergenceError
from business.models.model_params import ReturnProb
from business.models.renewal import RenewalSequence, RootBracket, SeriesBracket
from business.services.polynomial_service import PolynomialService
from business.validators.param_validator import ParamValidator, ValidationError
from infrastructure.config.app_config import AppConfig
from infrastructure.logging.logger import getLogger

# 超过该下标后乘积改在对数空间累积
LOG_SPACE_THRESHOLD = 500
# 二分中点处级数区间含 1 时的重算容差
REFINED_SERIES_TOLERANCE = 1e-17


class RenewalService:
    """更新序列与临界返回概率"""

    def __init__(self, configManager: Optional[AppConfig] = None,
                 polynomialService: Optional[PolynomialService] = None):
        self.config = configManager or AppConfig()
        self.polynomialService = polynomialService or PolynomialService(self.config)
        self.logger = getLogger('renewal_service')

    @staticmethod
    def _checkRate(r: float) -> None:
        if not 0.0 < r <= 0.5:
            raise ValidationError(f"r 必须在 (0, 1/2] 内: {r}", 'r')

    def productTable(self, r: float, kmax: int) -> np.ndarray:
        """P[k] = Π_{i=1}^{k-1} (1 - r^i)，k = 0..kmax（P[0] 不使用，置 1）"""
        table = np.ones(kmax + 1)
        product, logProduct, power = 1.0, 0.0, 1.0
        for k in range(2, kmax + 1):
            power *= r
            if k <= LOG_SPACE_THRESHOLD:
                product *= 1.0 - power
                table[k] = product
                logProduct = math.log(product) if product > 0 else -math.inf
            else:
                logProduct += math.log1p(-power)
                table[k] = math.exp(logProduct)
        return table

    def interRenewal(self, r: float, kmax: int) -> List[float]:
        """f_1..f_kmax，乘积按运行累积计算"""
        self._checkRate(r)
        if kmax < 1:
            raise ValidationError(f"kmax 必须不小于 1: {kmax}", 'kmax')

        f = []
        product, logProduct = 1.0, 0.0
        logR = math.log(r)
        power = 1.0
        for k in range(1, kmax + 1):
            if k > 1:
                if k <= LOG_SPACE_THRESHOLD:
                    product *= 1.0 - power
                    logProduct = math.log(product)
                else:
                    logProduct += math.log1p(-power)
            power *= r
            if k <= LOG_SPACE_THRESHOLD:
                f.append(power * product)
            else:
                f.append(math.exp(k * logR + logProduct))
        return f

    def uSequence(self, r: ReturnProb, n: int) -> RenewalSequence:
        """按递推式逐项计算 u_1..u_n

        u_k = r^k Π_{i<k}(1-r^i) + Σ_{j=1}^{k-1} r^{k-j} u_j Π_{l=1}^{k-j-1}(1-r^l)
        """
        value = float(r.r)
        self._checkRate(value)
        if n < 1:
            raise ValidationError(f"n 必须不小于 1: {n}", 'n')

        powers = value ** np.arange(n + 1)
        products = self.productTable(value, n)
        u = np.zeros(n + 1)
        for k in range(1, n + 1):
            head = powers[k] * products[k]
            if k > 1:
                weights = powers[k - 1:0:-1] * products[k - 1:0:-1]
                head += float(np.dot(weights, u[1:k]))
            u[k] = head
        u[1] = value

        f = self.interRenewal(value, n)
        return RenewalSequence(value, r.d, tuple(np.clip(u[1:], 0.0, 1.0)), tuple(f))

    def uSequenceByConvolution(self, r: float, n: int) -> List[float]:
        """更新卷积 u_n = Σ_{j=1}^{n} f_j u_{n-j}（独立校验）"""
        f = np.array([0.0] + self.interRenewal(r, n))
        u = np.zeros(n + 1)
        u[0] = 1.0
        for k in range(1, n + 1):
            u[k] = float(np.dot(f[1:k + 1], u[k - 1::-1]))
        return u[1:].tolist()

    def productSandwich(self, r: float, k: int) -> Tuple[float, float, float]:
        """(1-r-r²+r^k, Π_{i=1}^{k-1}(1-r^i), (1-r)(1-r²))，k ≥ 3"""
        product = 1.0
        for i in range(1, k):
            product *= 1.0 - r ** i
        return 1.0 - r - r * r + r ** k, product, (1.0 - r) * (1.0 - r * r)

    # 指数倾斜
    def characteristicRoot(self, r: float) -> float:
        """Σ_{k≥1} x^k Π_{i<k}(1-r^i) = 1 在 (0,1) 内的根 x*，u_∞ = r / x*"""
        self._checkRate(r)
        maxTerms = int(self.config.get('numerics.maxSeriesTerms', 2000000))

        def excess(x: float) -> float:
            total, term, product, power = 0.0, 1.0, 1.0, 1.0
            for k in range(1, maxTerms + 1):
                if k > 1:
                    product *= 1.0 - power
                power *= r
                term = x ** k * product
                total += term
                if term < 1e-18:
                    break
            return total - 1.0

        # r ≤ 1/2 时 x* ∈ [1/2, sqrt(3)-1]
        lo, hi = 0.5 - 1e-12, 0.75
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if excess(mid) < 0.0:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 4e-16:
                break
        return 0.5 * (lo + hi)

    def uInfinity(self, r: float) -> float:
        """u_∞(r) = lim u_n^{1/n}"""
        return r / self.characteristicRoot(r)

    def tiltedSequence(self, r: float, n: int) -> Tuple[List[float], float]:
        """w_k = u_k c^k（c = x*/r）是真正的更新序列，取值于 [0,1]

        Returns:
            Tuple[List[float], float]: w_1..w_n 与 log c
        """
        x = self.characteristicRoot(r)
        products = self.productTable(r, n)
        g = np.zeros(n + 1)
        g[1:] = x ** np.arange(1, n + 1) * products[1:]
        w = np.zeros(n + 1)
        w[0] = 1.0
        for k in range(1, n + 1):
            w[k] = float(np.dot(g[1:k + 1], w[k - 1::-1]))
        return np.clip(w[1:], 0.0, 1.0).tolist(), math.log(x / r)

    def scaledUSequence(self, r: float, d: int, n: int) -> List[float]:
        """d^n u_n，n = 1..n，经倾斜序列计算避免下溢"""
        w, logC = self.tiltedSequence(r, n)
        logD = math.log(d)
        return [
            math.exp(math.log(value) + k * (logD - logC)) if value > 0 else 0.0
            for k, value in enumerate(w, start=1)
        ]

    def uInftyEstimate(self, r: ReturnProb, d: int, n: int) -> float:
        """u_n^{1/n}，在对数空间计算

        仅作诊断：收敛较慢。
        """
        value = float(r.r)
        if n < 1:
            raise ValidationError(f"n 必须不小于 1: {n}", 'n')
        w, logC = self.tiltedSequence(value, n)
        if w[-1] <= 0.0:
            return 0.0
        return math.exp(math.log(w[-1]) / n - logC)

    # 幂级数
    def seriesBracket(self, r: float, d: int, tol: Optional[float] = None) -> SeriesBracket:
        """S(r,d) 的区间：部分和加上尾部夹逼

        尾部 ∈ [(1-r-r²) G, (1-r)(1-r²) G]，G = (dr)^{K+1} / (1-dr)，宽度 r³ G。

        Raises:
            SeriesDivergenceError: d·r ≥ 1 或项数超过上限
        """
        if tol is None:
            tol = self.config.get('numerics.seriesTolerance', 1e-13)
        if tol <= 0:
            raise ValidationError(f"容差必须为正: {tol}", 'tol')
        if r < 0:
            raise ValidationError(f"r 必须非负: {r}", 'r')
        rate = d * r
        if rate >= 1.0:
            raise SeriesDivergenceError(f"d·r = {rate} ≥ 1，级数发散")
        maxTerms = int(self.config.get('numerics.maxSeriesTerms', 2000000))

        partial = 0.0
        product = 1.0
        ratePower = 1.0
        rPower = 1.0
        cubed = r ** 3
        for k in range(1, maxTerms + 1):
            if k > 1:
                product *= 1.0 - rPower
            rPower *= r
            ratePower *= rate
            partial += ratePower * product
            if k >= 2:
                tail = ratePower * rate / (1.0 - rate)
                if cubed * tail <= tol:
                    lower = partial + max(0.0, 1.0 - r - r * r) * tail
                    upper = partial + (1.0 - r) * (1.0 - r * r) * tail
                    return SeriesBracket(lower, upper, k)

        raise SeriesDivergenceError(
            f"d={d}, r={r}: {maxTerms} 项后仍未达到容差 {tol}"
        )

    def solveRc(self, d: int, tol: Optional[float] = None) -> RootBracket:
        """二分求 S(r,d) = 1 的根 r_c 的严格包围区间

        保持 S(lo).upper < 1 < S(hi).lower，直到 hi - lo ≤ tol。

        Raises:
            NumericFailureError: 双精度下无法达到容差
        """
        ParamValidator.validateAndRaise(ParamValidator.validateDegree(d), 'd')
        if tol is None:
            tol = self.config.get('numerics.solveTolerance', 1e-10)
        maxSteps = int(self.config.get('numerics.maxBisectionSteps', 200))

        lo = 0.5 * self.polynomialService.rL(d)
        hi = min(1.5 * self.polynomialService.rU(d), 0.999 / d)
        if not self.seriesBracket(lo, d).upper < 1.0:
            raise NumericFailureError(f"d={d}: 左端点 {lo} 处 S 不小于 1", (lo, hi))
        upperBracket = self.seriesBracket(hi, d)
        termsUsed = upperBracket.termsUsed
        if not upperBracket.lower > 1.0:
            raise NumericFailureError(f"d={d}: 右端点 {hi} 处 S 不大于 1", (lo, hi))

        iterations = 0
        while hi - lo > tol:
            if iterations >= maxSteps:
                raise NumericFailureError(
                    f"d={d}: 二分 {maxSteps} 步后仍未达到容差 {tol}", (lo, hi)
                )
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                raise NumericFailureError(f"d={d}: 容差 {tol} 低于双精度分辨率", (lo, hi))
            bracket = self.seriesBracket(mid, d)
            if bracket.contains(1.0):
                # 区间含 1 时用更严的截断容差重算一次
                bracket = self.seriesBracket(mid, d, REFINED_SERIES_TOLERANCE)
            termsUsed = max(termsUsed, bracket.termsUsed)
            iterations += 1
            if bracket.upper < 1.0:
                lo = mid
            elif bracket.lower > 1.0:
                hi = mid
            else:
                raise NumericFailureError(
                    f"d={d}: S({mid}) 的区间 [{bracket.lower}, {bracket.upper}] 包含 1",
                    (lo, hi)
                )

        self.logger.info(f"d={d}: r_c ∈ [{lo}, {hi}]，{iterations} 次二分")
        return RootBracket(lo, hi, iterations, termsUsed)
