#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
顶点仓库 - 惰性展开的齐次树 T_d

顶点用从根出发的路径元组表示：根有 d+1 个孩子 (0..d)，其余顶点有一个父亲与
d 个孩子 (0..d-1)。只有被访问过的顶点才会进入存储。
"""

from typing import Dict, Iterator, List, Optional, Tuple

from business.models.errors import VertexStoreFullError
from business.models.simulation import ROOT, Vertex


class VertexRepository:
    """已访问顶点的哈希存储，记录每个顶点的已访问邻居数"""

    def __init__(self, d: int, maxVertices: Optional[int] = None):
        self.d = d
        self.maxVertices = maxVertices
        self._visitedDegree: Dict[Vertex, int] = {}
        self._maxDepth = 0

    # 树结构（不依赖存储）
    def neighbourCount(self) -> int:
        return self.d + 1

    def neighbour(self, v: Vertex, k: int) -> Vertex:
        """v 的第 k 个邻居，k ∈ 0..d

        根的邻居是全部孩子；其他顶点的 0 号邻居是父亲，k ≥ 1 是孩子 k-1。
        """
        if not v:
            return (k,)
        if k == 0:
            return v[:-1]
        return v + (k - 1,)

    def neighbours(self, v: Vertex) -> List[Vertex]:
        return [self.neighbour(v, k) for k in range(self.d + 1)]

    @staticmethod
    def parent(v: Vertex) -> Optional[Vertex]:
        return v[:-1] if v else None

    @staticmethod
    def depth(v: Vertex) -> int:
        return len(v)

    @staticmethod
    def isStrictDescendant(w: Vertex, v: Vertex) -> bool:
        """w > v：v 是 w 的真祖先"""
        return len(w) > len(v) and w[:len(v)] == v

    # 存储
    def plant(self) -> Vertex:
        """访问根"""
        self.visit(ROOT)
        return ROOT

    def visit(self, v: Vertex) -> bool:
        """标记顶点已访问

        Returns:
            bool: 是否为首次访问

        Raises:
            VertexStoreFullError: 存储已满
        """
        if v in self._visitedDegree:
            return False
        if self.maxVertices is not None and len(self._visitedDegree) >= self.maxVertices:
            raise VertexStoreFullError(
                f"顶点存储已达上限 {self.maxVertices}"
            )

        degree = 0
        for w in self.neighbours(v):
            if w in self._visitedDegree:
                self._visitedDegree[w] += 1
                degree += 1
        self._visitedDegree[v] = degree
        self._maxDepth = max(self._maxDepth, len(v))
        return True

    def isVisited(self, v: Vertex) -> bool:
        return v in self._visitedDegree

    def visitedDegree(self, v: Vertex) -> int:
        """已访问邻居数"""
        return self._visitedDegree[v]

    def unvisitedDegree(self, v: Vertex) -> int:
        """未访问邻居数"""
        return self.d + 1 - self._visitedDegree[v]

    def isTip(self, v: Vertex) -> bool:
        """尖端：恰有 d 个未访问邻居"""
        return self.unvisitedDegree(v) == self.d

    def visitedNeighbours(self, v: Vertex) -> List[Vertex]:
        return [w for w in self.neighbours(v) if w in self._visitedDegree]

    def unvisitedNeighbours(self, v: Vertex) -> List[Vertex]:
        return [w for w in self.neighbours(v) if w not in self._visitedDegree]

    def neighbourGroups(self, v: Vertex) -> Tuple[List[Vertex], List[Vertex], List[Vertex]]:
        """一次遍历把 v 的邻居分为 (已访问非尖端, 已访问尖端, 未访问)"""
        nonTip, tip, unvisited = [], [], []
        for w in self.neighbours(v):
            degree = self._visitedDegree.get(w)
            if degree is None:
                unvisited.append(w)
            elif degree == 1:
                tip.append(w)
            else:
                nonTip.append(w)
        return nonTip, tip, unvisited

    @property
    def count(self) -> int:
        return len(self._visitedDegree)

    @property
    def maxDepth(self) -> int:
        return self._maxDepth

    def __contains__(self, v: Vertex) -> bool:
        return v in self._visitedDegree

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._visitedDegree)

    def __len__(self) -> int:
        return len(self._visitedDegree)
