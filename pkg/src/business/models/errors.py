#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
业务异常定义
"""

from typing import Optional, Tuple


class FrogboundError(Exception):
    """所有业务异常的基类"""

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class NumericFailureError(FrogboundError):
    """双精度下无法达到要求的容差，携带目前最好的区间"""

    def __init__(self, message: str,
                 bestBracket: Optional[Tuple[float, float]] = None):
        self.bestBracket = bestBracket
        super().__init__(message)


class NoSignChangeError(FrogboundError):
    """二分区间端点同号"""


class DerivativeVanishedError(FrogboundError):
    """牛顿迭代中导数为零"""


class SeriesDivergenceError(NumericFailureError):
    """d·r ≥ 1 时级数发散"""


class SeedingExhaustedError(FrogboundError):
    """耦合初始化重试次数耗尽"""

    def __init__(self, message: str, retries: int = 0):
        self.retries = retries
        super().__init__(message)


class VertexStoreFullError(FrogboundError):
    """顶点存储超过上限"""


class NonMonotoneResponseError(FrogboundError):
    """经验存活频率对 p 不单调"""


class CertificationError(FrogboundError):
    """附录不等式检查失败（实现或转录错误）"""
