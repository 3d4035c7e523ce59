#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
测试辅助函数

提供测试中常用的辅助函数和工具
"""

import csv
import io
import json
from decimal import Decimal

import numpy as np


def runCli(argv, capsys):
    """运行命令行入口并捕获输出

    Args:
        argv: 参数列表
        capsys: pytest 的 capsys 夹具

    Returns:
        (退出码, 标准输出, 标准错误)
    """
    from main import main

    exitCode = main(list(argv))
    captured = capsys.readouterr()
    return exitCode, captured.out, captured.err


def parseCsv(text):
    """把 CSV 文本解析为字典列表（值为字符串）"""
    return list(csv.DictReader(io.StringIO(text)))


def parseJsonLines(text):
    """把 JSON lines 文本解析为字典列表"""
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def assertClose(actual, expected, tolerance, message=""):
    """断言绝对误差不超过容差

    Args:
        actual: 实际值
        expected: 期望值
        tolerance: 容差
        message: 附加说明
    """
    assert abs(actual - expected) <= tolerance, (
        f"{message} 期望 {expected}，实际 {actual}，误差 {abs(actual - expected)} > {tolerance}"
    )


def assertTruncatedTo(raw, printed, decimals=7, message=""):
    """断言 printed 是 raw 截断到 decimals 位的结果：printed <= raw < printed + 10^-decimals"""
    low = Decimal(repr(float(printed)))
    value = Decimal(repr(float(raw)))
    assert low <= value < low + Decimal(1).scaleb(-decimals), (
        f"{message} {printed} 不是 {raw} 截断到 {decimals} 位的结果"
    )


class SampleGenerator:
    """随机测试数据生成器"""

    @staticmethod
    def rateGrid(count=20, low=0.01, high=0.49):
        """r 的均匀网格"""
        return np.linspace(low, high, count).tolist()

    @staticmethod
    def ratePowerPairs(count=10000, seed=7, maxPower=60):
        """随机 (r, k) 对，r ∈ (0,1)，k ≥ 3"""
        rng = np.random.default_rng(seed)
        rates = rng.uniform(1e-6, 1.0 - 1e-6, count)
        powers = rng.integers(3, maxPower + 1, count)
        return list(zip(rates.tolist(), powers.tolist()))
