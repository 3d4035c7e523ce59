#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
耦合服务 - 用同一均匀变量同时推进青蛙模型分支表示（FMBP）与两型支配过程（TTBP），
逐步检查两个支配不等式
"""

from collections import Counter, deque
from multiprocessing import Pool
from dataclasses import dataclass, field
from typing import Deque, Dict, Iterator, List, Optional, Tuple

import numpy as np

from business.models.branching import (
    CoupledState,
    CouplingTrace,
    FrogClass,
    IntervalPartition,
    OffspringLaw,
    Outcome,
)
from business.models.errors import SeedingExhaustedError
from business.models.model_params import ModelParams
from business.models.simulation import ROOT, Vertex
from business.services.branching_service import BranchingService
from business.validators.param_validator import ParamValidator, ValidationError
from data.repositories.vertex_repository import VertexRepository
from infrastructure.config.app_config import AppConfig
from infrastructure.logging.logger import getLogger
from infrastructure.utils.random_streams import generatorFor

# 每次从生成器取出的均匀变量个数
UNIFORM_CHUNK = 4096


@dataclass
class FrogModelState:
    """FMBP 一侧的可变状态"""

    visited: VertexRepository
    queue: Deque[Vertex] = field(default_factory=deque)
    activeAt: Counter = field(default_factory=Counter)
    type1: int = 0
    type2: int = 0

    @property
    def alive(self) -> bool:
        return bool(self.queue)


class CouplingService:
    """耦合检查器"""

    recountInterval = 1000

    def __init__(self, configManager: Optional[AppConfig] = None,
                 branchingService: Optional[BranchingService] = None):
        self.config = configManager or AppConfig()
        self.branchingService = branchingService or BranchingService(self.config)
        self.logger = getLogger('coupling_service')

    # 初始化
    def seedFrogModel(self, params: ModelParams, rng: np.random.Generator,
                      retryCap: Optional[int] = None) -> Tuple[FrogModelState, int]:
        """运行原始青蛙模型直到 |𝒯| = d+3，灭绝则重来

        Returns:
            Tuple[FrogModelState, int]: 初始状态与重试次数

        Raises:
            SeedingExhaustedError: 重试次数耗尽
        """
        if retryCap is None:
            retryCap = int(self.config.get('coupling.seedingRetryCap', 100000))
        d, p = params.d, params.p
        target = d + 3

        for retries in range(retryCap + 1):
            if retries == 1001:
                self.logger.warning(f"d={d}, p={p}: 初始化已重试超过 1000 次")
            visited = VertexRepository(d)
            visited.plant()
            queue: Deque[Vertex] = deque([ROOT])

            while queue and visited.count < target:
                v = queue.popleft()
                u = rng.random()
                if u >= p:
                    continue
                k = min(int(u / p * (d + 1)), d)
                w = visited.neighbour(v, k)
                if visited.visit(w):
                    queue.append(w)
                queue.append(w)

            if visited.count >= target:
                state = FrogModelState(visited, queue, Counter(queue))
                state.type1, state.type2 = self.recount(state)
                return state, retries

        raise SeedingExhaustedError(
            f"d={d}, p={p}: 初始化重试 {retryCap} 次后仍未达到 |𝒯|={target}",
            retryCap
        )

    @staticmethod
    def recount(state: FrogModelState) -> Tuple[int, int]:
        """按位置重新统计活跃青蛙的类型"""
        type1 = type2 = 0
        for v, count in state.activeAt.items():
            if state.visited.isTip(v):
                type1 += count
            else:
                type2 += count
        return type1, type2

    # 单步
    def _frogModelLaw(self, frogClass: FrogClass,
                      params: ModelParams) -> Tuple[OffspringLaw, bool]:
        """选中青蛙的后代分布；第二个返回值表示 (a,b) 是否违反约束"""
        if frogClass.frogType == 1:
            if (frogClass.a, frogClass.b) != (1, 0):
                return self.branchingService.abLaw(frogClass.a, frogClass.b, params), True
            return self.branchingService.ttbpLaw(1, params), False

        errors = ParamValidator.validateAb(frogClass.a, frogClass.b, params.d)
        if errors:
            return self.branchingService.abLaw(frogClass.a, frogClass.b, params), True
        return self.branchingService.fmbpLaw(frogClass.a, frogClass.b, params), False

    @staticmethod
    def _stepFrogModel(state: FrogModelState, v: Vertex, frogType: int,
                       groups: Tuple[List[Vertex], List[Vertex], List[Vertex]],
                       partition: IntervalPartition, u: float) -> Outcome:
        """用 u 推进选中的青蛙，增量更新类型计数

        groups 为 v 的 (非尖端, 尖端, 未访问) 邻居，在选中时计算。
        """
        index = partition.locate(u)
        cell = partition.cells[index]
        outcome = cell.label

        state.activeAt[v] -= 1
        if state.activeAt[v] == 0:
            del state.activeAt[v]
        if frogType == 1:
            state.type1 -= 1
        else:
            state.type2 -= 1

        if outcome == (0, 0):
            return outcome

        nonTip, tip, unvisited = groups
        group = unvisited if outcome == (2, 0) else tip if outcome == (1, 0) else nonTip
        position = (u - cell.lower) / cell.width if cell.width > 0 else 0.0
        w = group[min(int(position * len(group)), len(group) - 1)]

        if outcome == (2, 0):
            state.visited.visit(w)
            # v 不再是尖端时，留在 v 上的一型青蛙变为二型
            if frogType == 1 and v in state.activeAt:
                moved = state.activeAt[v]
                state.type1 -= moved
                state.type2 += moved
            state.queue.append(w)
            state.queue.append(w)
            state.activeAt[w] += 2
            state.type1 += 2
        else:
            state.queue.append(w)
            state.activeAt[w] += 1
            if outcome == (1, 0):
                state.type1 += 1
            else:
                state.type2 += 1
        return outcome

    @staticmethod
    def _ttbpType(frogType: Optional[int], tt1: int, tt2: int) -> int:
        """TTBP 选择与 FMBP 同型的粒子，二型耗尽时退回一型"""
        if frogType == 2 and tt2 > 0:
            return 2
        return 1 if tt1 > 0 else 2

    @staticmethod
    def _uniforms(rng: np.random.Generator) -> Iterator[float]:
        """按块抽取的均匀变量流"""
        while True:
            yield from rng.random(UNIFORM_CHUNK).tolist()

    def runCoupled(self, params: ModelParams, maxSteps: Optional[int] = None,
                   seed: int = 0, retryCap: Optional[int] = None,
                   tolerateSeedingFailure: bool = False,
                   keepStates: bool = True) -> CouplingTrace:
        """运行耦合过程并记录轨迹

        Args:
            params: 模型参数，p ∈ (0,1)
            maxSteps: 最大步数
            seed: 随机种子
            retryCap: 初始化重试上限
            tolerateSeedingFailure: 初始化失败时返回两侧均已灭绝的空轨迹
            keepStates: False 时只保留初始与最终状态，违例仍逐步检查

        Returns:
            CouplingTrace: 轨迹与违例计数

        Raises:
            SeedingExhaustedError: 初始化重试耗尽且不容忍失败
        """
        if not 0.0 < params.p < 1.0:
            raise ValidationError(f"耦合要求 p ∈ (0,1): {params.p}", 'p')
        if maxSteps is None:
            maxSteps = int(self.config.get('coupling.maxSteps', 10000))

        rng = generatorFor(seed)
        try:
            state, retries = self.seedFrogModel(params, rng, retryCap)
        except SeedingExhaustedError as seedingError:
            if not tolerateSeedingFailure:
                raise
            self.logger.info(f"seed={seed}: {seedingError.message}")
            trace = CouplingTrace(d=params.d, p=params.p, seed=seed,
                                  seedingRetries=seedingError.retries,
                                  seedingFailed=True, fmExtinctAt=0, ttExtinctAt=0)
            trace.states.append(CoupledState(0, 0, 0, 0, 0))
            return trace
        tt1, tt2 = state.type1, state.type2

        trace = CouplingTrace(d=params.d, p=params.p, seed=seed,
                              seedingRetries=retries)
        initial = CoupledState(0, tt1, tt2, state.type1, state.type2,
                               state.visited.count)
        trace.states.append(initial)
        if not initial.dominates():
            trace.violations += 1

        branching = self.branchingService
        ttPartitions = {
            particleType: branching.buildPartition(branching.ttbpLaw(particleType, params))
            for particleType in (1, 2)
        }
        fmPartitions: Dict[FrogClass, Tuple[IntervalPartition, bool]] = {}

        uniforms = self._uniforms(rng)
        steps = 0
        frogClass = None
        u = None
        fmOutcome = None
        for t in range(1, maxSteps + 1):
            fmAlive = state.alive
            if not fmAlive and tt1 + tt2 == 0:
                break

            u = next(uniforms)
            frogClass = None
            fmOutcome = None
            if fmAlive:
                v = state.queue.popleft()
                groups = state.visited.neighbourGroups(v)
                frogType = 1 if len(groups[0]) + len(groups[1]) == 1 else 2
                frogClass = FrogClass(frogType, len(groups[0]), len(groups[1]))
                if frogClass not in fmPartitions:
                    law, breach = self._frogModelLaw(frogClass, params)
                    fmPartitions[frogClass] = (branching.buildPartition(law), breach)
                partition, breach = fmPartitions[frogClass]
                if breach:
                    trace.constraintBreaches += 1
                    self.logger.warning(
                        f"seed={seed}, t={t}: (a,b)=({frogClass.a},{frogClass.b}) 违反约束"
                    )
                if frogType == 2:
                    trace.abCounts[(frogClass.a, frogClass.b)] += 1
                fmOutcome = self._stepFrogModel(state, v, frogType, groups, partition, u)

            chosenType = frogClass.frogType if frogClass else None
            if tt1 + tt2 > 0:
                ttType = self._ttbpType(chosenType, tt1, tt2)
                i, j = branching.sampleOffspring(ttPartitions[ttType], u)
                if ttType == 1:
                    tt1 -= 1
                else:
                    tt2 -= 1
                tt1 += i
                tt2 += j

            fm1, fm2 = state.type1, state.type2
            if tt1 < fm1 or tt1 + tt2 < fm1 + fm2:
                trace.violations += 1
            if keepStates:
                trace.states.append(self._snapshot(t, tt1, tt2, state, frogClass, u, fmOutcome))

            if trace.fmExtinctAt is None and not state.alive:
                trace.fmExtinctAt = t
            if trace.ttExtinctAt is None and tt1 + tt2 == 0:
                trace.ttExtinctAt = t
            if t % self.recountInterval == 0 and self.recount(state) != (state.type1, state.type2):
                trace.recountMismatches += 1
            steps = t

        if not keepStates and steps > 0:
            trace.states.append(self._snapshot(steps, tt1, tt2, state, frogClass, u, fmOutcome))

        if self.recount(state) != (state.type1, state.type2):
            trace.recountMismatches += 1

        self.logger.info(
            f"耦合运行 d={params.d}, p={params.p}, seed={seed}: "
            f"{trace.steps} 步, 违例 {trace.violations}"
        )
        return trace

    @staticmethod
    def _snapshot(t: int, tt1: int, tt2: int, state: FrogModelState,
                  frogClass: Optional[FrogClass], u: Optional[float],
                  outcome: Optional[Outcome]) -> CoupledState:
        return CoupledState(
            t, tt1, tt2, state.type1, state.type2, state.visited.count,
            chosenType=frogClass.frogType if frogClass else None,
            a=frogClass.a if frogClass else None,
            b=frogClass.b if frogClass else None,
            u=u,
            outcome=outcome
        )

    def runMany(self, params: ModelParams, seeds: List[int],
                maxSteps: Optional[int] = None, threads: Optional[int] = None,
                keepStates: bool = True,
                tolerateSeedingFailure: bool = False) -> List[CouplingTrace]:
        """对多个种子运行耦合，结果按种子顺序返回；threads > 1 时使用进程池"""
        if threads is None:
            threads = self.config.threads
        if threads > 1 and len(seeds) > 1:
            tasks = [(params, maxSteps, seed, keepStates, tolerateSeedingFailure) for seed in seeds]
            with Pool(processes=min(threads, len(seeds))) as pool:
                return pool.map(_runCoupledTask, tasks)
        return [self.runCoupled(params, maxSteps, seed, keepStates=keepStates,
                                tolerateSeedingFailure=tolerateSeedingFailure)
                for seed in seeds]


def _runCoupledTask(task: Tuple[ModelParams, Optional[int], int, bool, bool]) -> CouplingTrace:
    """进程池工作函数"""
    params, maxSteps, seed, keepStates, tolerateSeedingFailure = task
    return CouplingService().runCoupled(params, maxSteps, seed, keepStates=keepStates,
                                        tolerateSeedingFailure=tolerateSeedingFailure)
