#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
基于计数器的随机流

每个副本由 (seed, replica) 派生 Philox 密钥，每只青蛙的流由其初始顶点的哈希
决定计数器起点。流只依赖 (seed, replica, 顶点)，与调度顺序和并行度无关。
"""

import hashlib
from typing import Sequence

import numpy as np


class RandomStreams:
    """单个副本的随机流工厂"""

    def __init__(self, seed: int, replicaIndex: int = 0):
        self.seed = int(seed)
        self.replicaIndex = int(replicaIndex)
        sequence = np.random.SeedSequence([self.seed, self.replicaIndex])
        self._key = sequence.generate_state(2, np.uint64)

    @staticmethod
    def counterFor(path: Sequence[int]) -> int:
        """顶点路径对应的计数器起点（高 128 位为哈希，低 128 位留给抽样）"""
        encoded = ','.join(str(index) for index in path).encode('ascii')
        digest = hashlib.blake2b(encoded, digest_size=16).digest()
        return int.from_bytes(digest, 'big') << 128

    def forVertex(self, path: Sequence[int]) -> np.random.Generator:
        """从该顶点出发的青蛙使用的生成器"""
        bitGenerator = np.random.Philox(
            counter=self.counterFor(path), key=self._key
        )
        return np.random.Generator(bitGenerator)


def generatorFor(seed: int, *streamIds: int) -> np.random.Generator:
    """单条顺序随机流（耦合检查与命中概率检查使用）"""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *streamIds]))
