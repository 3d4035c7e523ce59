#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
模拟服务 - T_d 上几何寿命青蛙模型（完整/定向）的蒙特卡罗模拟、存活频率估计
与经验临界参数区间

每只青蛙的随机流只由 (seed, replica, 初始顶点) 决定：第一个均匀数经逆变换给出寿命，
其后的均匀数给出各步方向。因此同一副本在不同 p 与不同变体之间共享随机性。
"""

import math
from collections import deque
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from business.models.errors import NonMonotoneResponseError
from business.models.model_params import ModelParams
from business.models.simulation import ROOT, PcBracket, SimConfig, SimOutcome, SurvivalEstimate
from business.services.bounds_service import BoundsService
from business.validators.param_validator import ParamValidator, ValidationError
from data.repositories.vertex_repository import VertexRepository
from infrastructure.config.app_config import AppConfig
from infrastructure.logging.logger import getLogger
from infrastructure.utils.helpers import StatsHelper
from infrastructure.utils.random_streams import RandomStreams, generatorFor

WALK_CHUNK = 256
# 距离超过 n + ESCAPE_MARGIN 的样本视为逃逸，返回概率不超过 d^-ESCAPE_MARGIN
ESCAPE_MARGIN = 64


def _runReplica(task: Tuple[SimConfig, int]) -> SimOutcome:
    """进程池工作函数"""
    config, replicaIndex = task
    return SimulationService().runOnce(config, replicaIndex)


class SimulationService:
    """青蛙模型蒙特卡罗模拟"""

    def __init__(self, configManager: Optional[AppConfig] = None,
                 boundsService: Optional[BoundsService] = None):
        self.config = configManager or AppConfig()
        self.boundsService = boundsService or BoundsService(self.config)
        self.logger = getLogger('simulation_service')

    # 寿命
    @staticmethod
    def drawLifetime(u: float, p: float) -> float:
        """逆变换：n = floor(log(1-u) / log p)，P(n) = (1-p) p^n

        Args:
            u: [0,1) 上的均匀数
            p: 寿命参数

        Returns:
            float: 步数，p=1 时为 inf
        """
        if p <= 0.0:
            return 0
        if p >= 1.0:
            return math.inf
        return int(math.floor(math.log1p(-u) / math.log(p)))

    def meanLifetimeCheck(self, p: float, samples: int,
                          seed: int = 0) -> Tuple[float, float, bool]:
        """经验平均寿命与 p/(1-p) 的比较（4σ）

        Returns:
            Tuple[float, float, bool]: (经验均值, 理论均值, 是否在 4σ 内)
        """
        ParamValidator.validateAndRaise(ParamValidator.validateLifetime(p), 'p')
        if not 0.0 < p < 1.0:
            raise ValidationError(f"平均寿命检查要求 p ∈ (0,1): {p}", 'p')
        uniforms = generatorFor(seed).random(samples)
        lifetimes = np.floor(np.log1p(-uniforms) / math.log(p))
        mean = float(lifetimes.mean())
        expected = p / (1.0 - p)
        variance = p / (1.0 - p) ** 2
        return mean, expected, StatsHelper.withinSigmas(mean, expected, variance, samples)

    # 单次模拟
    @staticmethod
    def _neighbourIndices(rng: np.random.Generator, size: int, d: int) -> List[int]:
        indices = (rng.random(size) * (d + 1)).astype(np.int64)
        return np.minimum(indices, d).tolist()

    def _walkIndices(self, rng: np.random.Generator, lifetime: float,
                     d: int) -> Iterator[int]:
        """逐步产生邻居下标，按块抽样"""
        taken = 0
        while taken < lifetime:
            size = WALK_CHUNK if math.isinf(lifetime) else min(WALK_CHUNK, lifetime - taken)
            for k in self._neighbourIndices(rng, size, d):
                yield k
            taken += size

    def runOnce(self, config: SimConfig, replicaIndex: int = 0) -> SimOutcome:
        """事件驱动地模拟一个副本

        定向变体中青蛙照常游走，但只唤醒其初始顶点的严格后代上的青蛙。

        Args:
            config: 模拟配置
            replicaIndex: 副本下标

        Returns:
            SimOutcome: 模拟结果

        Raises:
            VertexStoreFullError: 顶点存储超过上限
        """
        maxVertices = int(self.config.get('simulation.maxVertices', 1000000))
        streams = RandomStreams(config.seed, replicaIndex)
        awake = VertexRepository(config.d, maxVertices)
        awake.plant()
        queue = deque([ROOT])
        activations, steps = 1, 0

        if activations >= config.maxActivations:
            return SimOutcome(True, activations, steps, 0)

        while queue:
            origin = queue.popleft()
            rng = streams.forVertex(origin)
            lifetime = self.drawLifetime(rng.random(), config.p)
            position = origin
            for k in self._walkIndices(rng, lifetime, config.d):
                position = awake.neighbour(position, k)
                steps += 1
                if position not in awake and (
                        not config.oriented or
                        awake.isStrictDescendant(position, origin)):
                    awake.visit(position)
                    queue.append(position)
                    activations += 1
                    if activations >= config.maxActivations:
                        return SimOutcome(True, activations, steps, awake.maxDepth)
                if steps >= config.maxSteps:
                    return SimOutcome(False, activations, steps, awake.maxDepth)

        return SimOutcome(False, activations, steps, awake.maxDepth)

    def runCoupledGrid(self, config: SimConfig, pGrid: Sequence[float],
                       replicaIndex: int = 0) -> List[SimOutcome]:
        """同一副本在一组 p 上的共享随机数运行"""
        return [self.runOnce(config.withP(p), replicaIndex) for p in pGrid]

    def runPair(self, config: SimConfig, replicaIndex: int = 0) -> Tuple[SimOutcome, SimOutcome]:
        """同一副本的 (完整, 定向) 结果"""
        return (self.runOnce(config.withVariant('full'), replicaIndex),
                self.runOnce(config.withVariant('oriented'), replicaIndex))

    # 多副本
    def runReplicas(self, config: SimConfig, threads: Optional[int] = None) -> List[SimOutcome]:
        """按副本下标顺序返回全部结果，threads > 1 时使用进程池"""
        if threads is None:
            threads = self.config.threads
        tasks = [(config, index) for index in range(config.replicas)]
        if threads > 1 and config.replicas > 1:
            with Pool(processes=min(threads, config.replicas)) as pool:
                return pool.map(_runReplica, tasks)
        return [self.runOnce(config, index) for config, index in tasks]

    def survivalFrequency(self, config: SimConfig,
                          outcomes: Optional[List[SimOutcome]] = None) -> SurvivalEstimate:
        """达到激活上限的副本比例及 Wilson 区间"""
        if outcomes is None:
            outcomes = self.runReplicas(config)
        if config.replicas < 30:
            self.logger.debug(f"副本数 {config.replicas} < 30，区间仅供参考")

        survived = sum(1 for outcome in outcomes if outcome.reachedCap)
        trials = len(outcomes)
        confidence = self.config.get('simulation.confidenceLevel', 0.95)
        low, high = StatsHelper.wilsonInterval(survived, trials, confidence)
        estimate = SurvivalEstimate(survived / trials, low, high, survived, trials)
        self.logger.info(
            f"d={config.d}, p={config.p}, {config.variant}: "
            f"存活频率 {estimate.freq} [{low}, {high}]"
        )
        return estimate

    def estimatePc(self, d: int, variant: str = 'oriented',
                   maxActivations: Optional[int] = None,
                   replicas: Optional[int] = None,
                   tol: float = 0.01, seed: int = 0,
                   maxSteps: Optional[int] = None) -> PcBracket:
        """对指示量 freq > 阈值 关于 p 二分，给出经验区间（启发式）

        Raises:
            NonMonotoneResponseError: 经验响应不单调
        """
        if tol < 0.005:
            raise ValidationError(f"容差必须不小于 0.005: {tol}", 'tol')
        threshold = self.config.get('simulation.survivalThreshold', 0.01)
        if maxActivations is None:
            maxActivations = int(self.config.get('simulation.maxActivations', 10000))
        if replicas is None:
            replicas = int(self.config.get('simulation.replicas', 100))
        if maxSteps is None:
            maxSteps = int(self.config.get('simulation.maxSteps', 10000000))

        base = SimConfig(d=d, p=1.0, variant=variant, maxActivations=maxActivations,
                         maxSteps=maxSteps, replicas=replicas, seed=seed)
        evaluated = []

        def frequency(p: float) -> float:
            freq = self.survivalFrequency(base.withP(p)).freq
            evaluated.append((p, freq))
            return freq

        lo = self.boundsService.literatureBounds(d).amp2002Lb
        hi = 1.0
        if frequency(lo) > threshold or not frequency(hi) > threshold:
            raise NonMonotoneResponseError(
                f"d={d}: 端点响应不满足 f({lo}) ≤ {threshold} < f({hi})，请增加副本或激活上限"
            )

        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if frequency(mid) > threshold:
                hi = mid
            else:
                lo = mid

        ordered = sorted(evaluated)
        for (pLeft, fLeft), (pRight, fRight) in zip(ordered, ordered[1:]):
            if fLeft > fRight:
                raise NonMonotoneResponseError(
                    f"d={d}: f({pLeft})={fLeft} > f({pRight})={fRight}"
                )

        self.logger.info(f"d={d}, {variant}: 经验 p_c ∈ [{lo}, {hi}]")
        return PcBracket(lo, hi, len(evaluated))

    # 命中概率
    def directHitProbabilityCheck(self, d: int, p: float, n: int,
                                  samples: int, seed: int = 0) -> float:
        """单只青蛙从 o 出发访问距离 n 处固定顶点的频率，对照 r(p,d)^n

        向量化地模拟到目标的距离：每步以 1/(d+1) 靠近，否则远离。
        """
        ParamValidator.validateAndRaise(ParamValidator.validateDegree(d), 'd')
        ParamValidator.validateAndRaise(ParamValidator.validateLifetime(p), 'p')
        if not 0 <= n <= 8:
            raise ValidationError(f"距离必须在 0..8 内: {n}", 'n')
        if n == 0:
            return 1.0

        maxWalkSteps = int(self.config.get('simulation.maxWalkSteps', 10000))
        rng = generatorFor(seed, n)
        if p >= 1.0:
            lifetimes = np.full(samples, np.inf)
        elif p <= 0.0:
            lifetimes = np.zeros(samples)
        else:
            lifetimes = np.floor(np.log1p(-rng.random(samples)) / math.log(p))

        distance = np.full(samples, n, dtype=np.int64)
        hit = np.zeros(samples, dtype=bool)
        active = lifetimes > 0
        for step in range(1, maxWalkSteps + 1):
            if not active.any():
                break
            toward = rng.random(samples) < 1.0 / (d + 1)
            distance = np.where(active, distance + np.where(toward, -1, 1), distance)
            newlyHit = active & (distance == 0)
            hit |= newlyHit
            active &= ~newlyHit
            active &= lifetimes > step
            active &= distance <= n + ESCAPE_MARGIN

        frequency = float(hit.mean())
        expected = self.boundsService.rOfP(ModelParams(d, p)).r ** n
        self.logger.debug(f"d={d}, p={p}, n={n}: 命中频率 {frequency}，理论 {expected}")
        return frequency
