#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
分支过程模型 - 后代分布、区间划分、矩矩阵与耦合状态
"""

import bisect
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from business.validators.param_validator import ParamValidator, ValidationError

Outcome = Tuple[int, int]

DEATH: Outcome = (0, 0)
# 划分中的规范顺序：(0,1)、(1,0)、(2,0)、(0,0)
CANONICAL_ORDER: Tuple[Outcome, ...] = ((0, 1), (1, 0), (2, 0), (0, 0))


@dataclass(frozen=True)
class OffspringLaw:
    """移动粒子四种后代结果上的概率分布

    结果 (i,j) 表示 i 个一型后代与 j 个二型后代。若由分割点构造，
    各概率与对应区间宽度由同一算式得出。
    """

    probabilities: Dict[Outcome, float]
    cutpoints: Optional[Tuple[float, float, float]] = None

    def __post_init__(self):
        ParamValidator.validateAndRaise(
            ParamValidator.validateProbabilities(self.probabilities),
            'probabilities'
        )
        if self.cutpoints is not None:
            c1, c2, c3 = self.cutpoints
            if not 0.0 <= c1 <= c2 <= c3 <= 1.0:
                raise ValidationError(f"分割点必须单调: {self.cutpoints}",
                                      'cutpoints')

    @classmethod
    def fromCutpoints(cls, c1: float, c2: float, c3: float) -> 'OffspringLaw':
        """由三个分割点 0 ≤ c1 ≤ c2 ≤ c3 ≤ 1 构造"""
        probabilities = {
            (0, 1): c1,
            (1, 0): c2 - c1,
            (2, 0): c3 - c2,
            (0, 0): 1.0 - c3
        }
        return cls(probabilities, (c1, c2, c3))

    @classmethod
    def fromProbabilities(cls, probabilities: Dict[Outcome, float]) -> 'OffspringLaw':
        """由任意四个概率构造，分割点按规范顺序累加"""
        c1 = probabilities.get((0, 1), 0.0)
        c2 = c1 + probabilities.get((1, 0), 0.0)
        c3 = c2 + probabilities.get((2, 0), 0.0)
        law = cls(dict(probabilities), (c1, c2, min(c3, 1.0)))
        return law

    def probability(self, outcome: Outcome) -> float:
        """某结果的概率"""
        return self.probabilities.get(outcome, 0.0)

    def meanOffspring(self) -> Tuple[float, float]:
        """期望后代数 (一型, 二型)"""
        meanType1 = math.fsum(i * q for (i, _), q in self.probabilities.items())
        meanType2 = math.fsum(j * q for (_, j), q in self.probabilities.items())
        return meanType1, meanType2


class PartitionCell(NamedTuple):
    """区间划分中的一个单元"""
    label: Outcome
    lower: float
    upper: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class IntervalPartition:
    """[0,1] 的有序划分，单元左闭右开，最后一个单元闭合"""

    cells: Tuple[PartitionCell, ...]
    _uppers: Tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.cells:
            raise ValidationError("划分不能为空", 'cells')
        if self.cells[0].lower != 0.0 or self.cells[-1].upper != 1.0:
            raise ValidationError("划分必须覆盖 [0,1]", 'cells')
        for left, right in zip(self.cells, self.cells[1:]):
            if left.upper != right.lower:
                raise ValidationError(
                    f"单元 {left.label} 与 {right.label} 不相接", 'cells'
                )
        for cell in self.cells:
            if cell.lower > cell.upper:
                raise ValidationError(f"单元 {cell.label} 宽度为负", 'cells')
        object.__setattr__(self, '_uppers', tuple(cell.upper for cell in self.cells[:-1]))

    @property
    def breakpoints(self) -> List[float]:
        """全部断点，含 0 与 1"""
        return [self.cells[0].lower] + [cell.upper for cell in self.cells]

    @property
    def labels(self) -> List[Outcome]:
        return [cell.label for cell in self.cells]

    def locate(self, u: float) -> int:
        """u 所在单元的下标"""
        last = len(self.cells) - 1
        if u >= self.cells[last].lower:
            return last
        return bisect.bisect_right(self._uppers, u)

    def cellFor(self, label: Outcome) -> Optional[PartitionCell]:
        """按标签查找单元"""
        for cell in self.cells:
            if cell.label == label:
                return cell
        return None


@dataclass(frozen=True)
class MomentMatrix:
    """一阶矩矩阵 m[父类型][子类型]"""

    entries: Tuple[Tuple[float, float], Tuple[float, float]]

    def __post_init__(self):
        if len(self.entries) != 2 or any(len(row) != 2 for row in self.entries):
            raise ValidationError("矩矩阵必须是 2×2", 'entries')
        if any(value < 0 for row in self.entries for value in row):
            raise ValidationError("矩矩阵元素必须非负", 'entries')

    def __getitem__(self, index: Tuple[int, int]) -> float:
        """按 1 起始的类型下标取值，如 m[1, 2]"""
        parentType, childType = index
        return self.entries[parentType - 1][childType - 1]

    def toList(self) -> List[List[float]]:
        return [list(row) for row in self.entries]


class FrogClass(NamedTuple):
    """青蛙分类结果"""
    frogType: int
    a: int
    b: int


@dataclass
class CoupledState:
    """耦合过程在时刻 t 的状态（一行轨迹）"""

    t: int
    ttType1: int
    ttType2: int
    fmType1: int
    fmType2: int
    visitedCount: int = 0
    chosenType: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    u: Optional[float] = None
    outcome: Optional[Outcome] = None

    def dominates(self) -> bool:
        """两个支配不等式是否同时成立"""
        return (
            self.ttType1 >= self.fmType1 and
            self.ttType1 + self.ttType2 >= self.fmType1 + self.fmType2
        )

    def toRow(self) -> Dict[str, Any]:
        """轨迹导出行"""
        return {
            't': self.t,
            'N_TT1': self.ttType1,
            'N_TT2': self.ttType2,
            'N_FM1': self.fmType1,
            'N_FM2': self.fmType2,
            'chosen_type': '' if self.chosenType is None else self.chosenType,
            'a': '' if self.a is None else self.a,
            'b': '' if self.b is None else self.b,
            'u': '' if self.u is None else self.u,
            'outcome': '' if self.outcome is None else
            f"{self.outcome[0]}{self.outcome[1]}"
        }


@dataclass
class CouplingTrace:
    """一次耦合运行的完整轨迹与计数器"""

    d: int
    p: float
    seed: int
    states: List[CoupledState] = field(default_factory=list)
    violations: int = 0
    seedingRetries: int = 0
    constraintBreaches: int = 0
    recountMismatches: int = 0
    abCounts: Counter = field(default_factory=Counter)
    fmExtinctAt: Optional[int] = None
    ttExtinctAt: Optional[int] = None
    seedingFailed: bool = False

    @property
    def steps(self) -> int:
        """执行的耦合步数"""
        return self.states[-1].t if self.states else 0

    def summary(self) -> Dict[str, Any]:
        """运行摘要"""
        last = self.states[-1] if self.states else None
        return {
            'd': self.d,
            'p': self.p,
            'seed': self.seed,
            'steps': self.steps,
            'violations': self.violations,
            'seeding_retries': self.seedingRetries,
            'seeding_failed': int(self.seedingFailed),
            'constraint_breaches': self.constraintBreaches,
            'recount_mismatches': self.recountMismatches,
            'fm_extinct_at': '' if self.fmExtinctAt is None else self.fmExtinctAt,
            'tt_extinct_at': '' if self.ttExtinctAt is None else self.ttExtinctAt,
            'final_N_TT1': last.ttType1 if last else 0,
            'final_N_TT2': last.ttType2 if last else 0,
            'final_N_FM1': last.fmType1 if last else 0,
            'final_N_FM2': last.fmType2 if last else 0
        }
