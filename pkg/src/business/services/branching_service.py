#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
分支过程服务 - 两型分支过程的后代分布、耦合区间划分、一阶矩矩阵与谱半径
"""

import math
from typing import Optional

from business.models.branching import (
    CANONICAL_ORDER,
    DEATH,
    FrogClass,
    IntervalPartition,
    MomentMatrix,
    OffspringLaw,
    Outcome,
    PartitionCell,
)
from business.models.model_params import ModelParams
from business.models.simulation import Vertex
from business.validators.param_validator import ParamValidator, ValidationError
from data.repositories.vertex_repository import VertexRepository
from infrastructure.config.app_config import AppConfig
from infrastructure.logging.logger import getLogger


class BranchingService:
    """两型分支过程与青蛙模型分支表示"""

    def __init__(self, configManager: Optional[AppConfig] = None):
        self.config = configManager or AppConfig()
        self.logger = getLogger('branching_service')

    def ttbpLaw(self, particleType: int, params: ModelParams) -> OffspringLaw:
        """支配过程中一型/二型粒子的后代分布

        Args:
            particleType: 1（尖端）或 2（内部）
            params: 模型参数

        Returns:
            OffspringLaw: 分割点为 p/(d+1)、k·p/(d+1)、p 的分布
        """
        if particleType not in (1, 2):
            raise ValidationError(f"粒子类型必须是 1 或 2: {particleType!r}",
                                  'particleType')
        d, p = params.d, params.p
        c1 = p / (d + 1)
        c2 = c1 if particleType == 1 else 2 * p / (d + 1)
        return OffspringLaw.fromCutpoints(c1, min(c2, p), p)

    def fmbpLaw(self, a: int, b: int, params: ModelParams) -> OffspringLaw:
        """二型青蛙的后代分布

        Args:
            a: 已访问的非尖端邻居数
            b: 已访问的尖端邻居数
            params: 模型参数
        """
        d = params.d
        ParamValidator.validateAndRaise(ParamValidator.validateAb(a, b, d), 'ab')
        return self.abLaw(a, b, params)

    @staticmethod
    def abLaw(a: int, b: int, params: ModelParams) -> OffspringLaw:
        """按 (a,b) 直接给出分割点，不做约束检查"""
        d, p = params.d, params.p
        c2 = min((a + b) * p / (d + 1), p)
        c1 = min(a * p / (d + 1), c2)
        return OffspringLaw.fromCutpoints(c1, c2, p)

    def buildPartition(self, law: OffspringLaw) -> IntervalPartition:
        """按规范顺序 (0,1)、(1,0)、(2,0)、(0,0) 铺设单元

        前三个单元中宽度为零的被省略，死亡单元 [c3, 1] 总是存在且闭合。
        """
        c1, c2, c3 = law.cutpoints
        bounds = ((0.0, c1), (c1, c2), (c2, c3))
        cells = [
            PartitionCell(label, lower, upper)
            for label, (lower, upper) in zip(CANONICAL_ORDER[:3], bounds)
            if upper > lower
        ]
        cells.append(PartitionCell(DEATH, c3, 1.0))
        return IntervalPartition(tuple(cells))

    @staticmethod
    def sampleOffspring(partition: IntervalPartition, u: float) -> Outcome:
        """u 所在单元的标签"""
        if not 0.0 <= u <= 1.0:
            raise ValidationError(f"u 必须在 [0,1] 内: {u}", 'u')
        return partition.cells[partition.locate(u)].label

    def momentMatrix(self, params: ModelParams) -> MomentMatrix:
        """一阶矩矩阵 ((2dp/(d+1), p/(d+1)), ((2d-1)p/(d+1), p/(d+1)))"""
        d, p = params.d, params.p
        return MomentMatrix((
            (2 * d * p / (d + 1), p / (d + 1)),
            ((2 * d - 1) * p / (d + 1), p / (d + 1))
        ))

    @staticmethod
    def spectralRadius(m: MomentMatrix) -> float:
        """2×2 非负矩阵的最大特征值（特征二次式）"""
        (m11, m12), (m21, m22) = m.entries
        discriminant = (m11 - m22) ** 2 + 4.0 * m12 * m21
        return 0.5 * (m11 + m22 + math.sqrt(max(discriminant, 0.0)))

    def classifyFrog(self, v: Vertex, visited: VertexRepository) -> FrogClass:
        """由已访问集合给出 v 处青蛙的类型与 (a,b)

        a 为 v 的非尖端已访问邻居数，b 为尖端已访问邻居数。

        Raises:
            ValidationError: v 未被访问
        """
        if v not in visited:
            raise ValidationError(f"顶点 {v} 不在已访问集合中", 'v')

        nonTip, tip, _ = visited.neighbourGroups(v)
        frogType = 1 if visited.isTip(v) else 2
        return FrogClass(frogType, len(nonTip), len(tip))
