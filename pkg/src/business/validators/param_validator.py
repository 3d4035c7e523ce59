#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
参数验证器 - 业务逻辑层
提供模型参数、模拟配置与耦合参数的验证规则
"""

import math
from numbers import Integral, Real
from typing import Any, Dict, List, Optional


class ValidationError(ValueError):
    """验证错误异常"""

    def __init__(self, message: str, field: Optional[str] = None):
        self.message = message
        self.field = field
        super().__init__(message)


class ParamValidator:
    """参数验证器

    所有领域类型在构造时调用这里的规则
    """

    # 验证规则常量
    minDegree = 2
    variants = ('full', 'oriented')
    outcomeLabels = ((0, 0), (1, 0), (0, 1), (2, 0))

    @staticmethod
    def isInteger(value: Any) -> bool:
        """是否为整数（排除 bool）"""
        return isinstance(value, Integral) and not isinstance(value, bool)

    @staticmethod
    def isReal(value: Any) -> bool:
        """是否为有限实数"""
        if isinstance(value, bool) or not isinstance(value, Real):
            return False
        return math.isfinite(float(value))

    @classmethod
    def validateDegree(cls, d: Any, allowReal: bool = False) -> List[str]:
        """验证树的度数

        Args:
            d: 度数，每个顶点有 d+1 个邻居
            allowReal: 是否允许实数度数（单调性比较时使用）

        Returns:
            验证错误列表
        """
        if allowReal:
            if not cls.isReal(d):
                return [f"度数必须是有限实数: {d!r}"]
        elif not cls.isInteger(d):
            return [f"度数必须是整数: {d!r}"]

        if d < cls.minDegree:
            return [f"度数必须不小于 {cls.minDegree}: {d}"]
        return []

    @classmethod
    def validateLifetime(cls, p: Any) -> List[str]:
        """验证寿命参数 p ∈ [0,1]"""
        if not cls.isReal(p):
            return [f"寿命参数必须是有限实数: {p!r}"]
        if not 0.0 <= p <= 1.0:
            return [f"寿命参数必须在 [0,1] 内: {p}"]
        return []

    @classmethod
    def validateReturnProb(cls, r: Any, d: Any) -> List[str]:
        """验证返回概率 r ∈ [0, 1/d]"""
        errors = cls.validateDegree(d)
        if not cls.isReal(r):
            errors.append(f"返回概率必须是有限实数: {r!r}")
            return errors
        if not errors and not 0.0 <= r <= 1.0 / d:
            errors.append(f"返回概率必须在 [0, 1/{d}] 内: {r}")
        return errors

    @classmethod
    def validateAb(cls, a: Any, b: Any, d: int) -> List[str]:
        """验证二型青蛙的 (a,b) 参数

        Args:
            a: 已访问的非尖端邻居数
            b: 已访问的尖端邻居数
            d: 度数

        Returns:
            验证错误列表
        """
        if not (cls.isInteger(a) and cls.isInteger(b)):
            return [f"(a,b) 必须是整数: ({a!r}, {b!r})"]

        errors = []
        if a < 1:
            errors.append(f"a 必须不小于 1: {a}")
        if b < 0:
            errors.append(f"b 必须非负: {b}")
        if a + b < 2:
            errors.append(f"a+b 必须不小于 2: {a + b}")
        if a + b > d + 1:
            errors.append(f"a+b 不能超过 d+1={d + 1}: {a + b}")
        return errors

    @classmethod
    def validateProbabilities(cls, probabilities: Dict[Any, float]) -> List[str]:
        """验证后代分布的四个概率"""
        errors = []
        for label in cls.outcomeLabels:
            value = probabilities.get(label)
            if value is None or not cls.isReal(value):
                errors.append(f"缺少结果 {label} 的概率")
            elif not -1e-15 <= value <= 1.0 + 1e-15:
                errors.append(f"结果 {label} 的概率不在 [0,1] 内: {value}")

        if not errors:
            total = math.fsum(probabilities[label] for label in cls.outcomeLabels)
            if abs(total - 1.0) > 1e-12:
                errors.append(f"概率之和必须为 1: {total}")
        return errors

    @classmethod
    def validateSimConfig(cls, d: Any, p: Any, variant: Any,
                          maxActivations: Any, maxSteps: Any,
                          replicas: Any, seed: Any) -> List[str]:
        """验证模拟配置

        Returns:
            验证错误列表
        """
        errors = cls.validateDegree(d) + cls.validateLifetime(p)

        if variant not in cls.variants:
            errors.append(f"变体必须是 {'/'.join(cls.variants)}: {variant!r}")

        for name, value in (('maxActivations', maxActivations),
                            ('maxSteps', maxSteps),
                            ('replicas', replicas)):
            if not cls.isInteger(value) or value < 1:
                errors.append(f"{name} 必须是正整数: {value!r}")

        if not cls.isInteger(seed) or not 0 <= seed < 2 ** 64:
            errors.append(f"种子必须是 64 位无符号整数: {seed!r}")
        return errors

    @classmethod
    def validateAndRaise(cls, errors: List[str],
                         field: Optional[str] = None) -> None:
        """验证结果非空时抛出异常

        Args:
            errors: 某个 validate* 方法返回的错误列表
            field: 出错字段名

        Raises:
            ValidationError: 验证失败时抛出
        """
        if errors:
            raise ValidationError('; '.join(errors), field)
