#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
工具类 - 提供常用的辅助函数
"""

import math
import re
from decimal import ROUND_DOWN, Decimal
from pathlib import Path
from typing import Any, List, Optional, Tuple

from scipy.stats import norm


class RangeHelper:
    """度数列表解析工具"""

    rangePattern = re.compile(r'^\s*(\d+)\s*\.\.\s*(\d+)\s*$')

    @classmethod
    def parseDegreeList(cls, text: str) -> List[int]:
        """解析 --d 参数

        支持单个整数 "5"、闭区间 "2..4" 与逗号列表 "2,3,10"，
        也可混用如 "2..4,10"。结果去重并升序。

        Args:
            text: 命令行文本

        Returns:
            List[int]: 度数列表

        Raises:
            ValueError: 文本格式错误
        """
        if text is None or not str(text).strip():
            raise ValueError("度数列表不能为空")

        degrees = set()
        for part in str(text).split(','):
            part = part.strip()
            match = cls.rangePattern.match(part)
            if match:
                start, stop = int(match.group(1)), int(match.group(2))
                if start > stop:
                    raise ValueError(f"区间起点大于终点: {part}")
                degrees.update(range(start, stop + 1))
            elif part.isdigit():
                degrees.add(int(part))
            else:
                raise ValueError(f"无法解析的度数: {part!r}")

        return sorted(degrees)


class FormatHelper:
    """数值格式化工具"""

    @staticmethod
    def formatFloat(value: Any, decimals: int = 7, truncate: bool = False) -> str:
        """按固定小数位格式化浮点数，其余类型原样转字符串

        Args:
            value: 待格式化的值
            decimals: 小数位数
            truncate: True 时向零截断而不是四舍五入，例如 0.62613645 → 0.6261364
        """
        if value is None:
            return ''
        if isinstance(value, bool):
            return str(int(value))
        if isinstance(value, float):
            if math.isinf(value):
                return 'inf' if value > 0 else '-inf'
            if truncate and not math.isnan(value):
                # 经 repr 取最短十进制表示，避免 0.6 被截成 0.5999999
                quantum = Decimal(1).scaleb(-decimals)
                return format(Decimal(repr(value)).quantize(quantum, rounding=ROUND_DOWN), 'f')
            return f"{value:.{decimals}f}"
        return str(value)

    @classmethod
    def formatRow(cls, row: dict, decimals: int = 7, truncate: bool = False) -> dict:
        """格式化一行记录的所有值"""
        return {key: cls.formatFloat(value, decimals, truncate) for key, value in row.items()}


class StatsHelper:
    """统计工具"""

    @staticmethod
    def zScore(confidenceLevel: float = 0.95) -> float:
        """双侧置信水平对应的正态分位数"""
        return float(norm.ppf(0.5 + confidenceLevel / 2.0))

    @classmethod
    def wilsonInterval(cls, successes: int, trials: int,
                       confidenceLevel: float = 0.95) -> Tuple[float, float]:
        """Wilson 得分区间

        Args:
            successes: 成功次数
            trials: 试验次数
            confidenceLevel: 置信水平

        Returns:
            Tuple[float, float]: 区间 (下界, 上界)
        """
        if trials == 0:
            return 0.0, 0.0

        z = cls.zScore(confidenceLevel)
        pHat = successes / trials
        denom = 1.0 + z * z / trials
        center = (pHat + z * z / (2 * trials)) / denom
        half = z * math.sqrt(
            pHat * (1.0 - pHat) / trials + z * z / (4.0 * trials * trials)
        ) / denom

        low = 0.0 if successes == 0 else max(0.0, center - half)
        high = 1.0 if successes == trials else min(1.0, center + half)
        return low, high

    @staticmethod
    def withinSigmas(observed: float, expected: float, variance: float,
                     samples: int, sigmas: float = 4.0) -> bool:
        """观测均值是否落在期望值的若干标准差之内"""
        if samples <= 0:
            return False
        return abs(observed - expected) <= sigmas * math.sqrt(variance / samples)


class FileHelper:
    """文件操作工具"""

    @staticmethod
    def ensureParent(path: Optional[str]) -> bool:
        """确保输出文件的父目录存在

        Args:
            path: 文件路径

        Returns:
            bool: 操作是否成功
        """
        if not path:
            return True
        try:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            return True
        except OSError:
            return False

