#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
多项式模型（系数升序）
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Tuple, Union

from business.validators.param_validator import ValidationError

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class Polynomial:
    """系数 a_0..a_n 按升序存放

    整数或有理系数参与计算时保持精确，遇到浮点自变量时退化为浮点。
    """

    coefficients: Tuple[Number, ...]

    maxDegree = 14

    def __post_init__(self):
        if not self.coefficients:
            raise ValidationError("多项式系数不能为空", 'coefficients')
        if len(self.coefficients) > 1 and self.coefficients[-1] == 0:
            raise ValidationError("首项系数不能为 0", 'coefficients')
        if self.degree > self.maxDegree:
            raise ValidationError(
                f"次数不能超过 {self.maxDegree}: {self.degree}", 'coefficients'
            )

    @classmethod
    def of(cls, coefficients: Sequence[Number]) -> 'Polynomial':
        """由任意序列构造"""
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Number:
        return self.coefficients[-1]

    @property
    def isExact(self) -> bool:
        """系数是否全为整数或有理数"""
        return all(isinstance(c, Rational) for c in self.coefficients)

    def __call__(self, x: Number) -> Number:
        """霍纳法求值"""
        value = self.coefficients[-1]
        for coefficient in reversed(self.coefficients[:-1]):
            value = value * x + coefficient
        return value

    def derivative(self) -> 'Polynomial':
        """导数多项式"""
        if self.degree == 0:
            return Polynomial((0,))
        return Polynomial(tuple(
            k * self.coefficients[k] for k in range(1, len(self.coefficients))
        ))
