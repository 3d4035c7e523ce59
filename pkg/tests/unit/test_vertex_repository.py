#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
顶点仓库单元测试
"""

import pytest

from business.models.errors import VertexStoreFullError
from business.models.simulation import ROOT
from data.repositories.vertex_repository import VertexRepository


class TestVertexRepository:
    """VertexRepository 测试"""

    def setup_method(self):  # pylint: disable=invalid-name
        self.repository = VertexRepository(d=2)

    @pytest.mark.unit
    def testRootHasDPlusOneChildren(self):
        assert self.repository.neighbours(ROOT) == [(0,), (1,), (2,)]

    @pytest.mark.unit
    def testNonRootNeighbours(self):
        assert self.repository.neighbours((1,)) == [(), (1, 0), (1, 1)]
        assert self.repository.neighbour((1, 0), 0) == (1,)
        assert VertexRepository.parent((1, 0)) == (1,)
        assert VertexRepository.parent(ROOT) is None
        assert VertexRepository.depth((1, 0, 1)) == 3

    @pytest.mark.unit
    def testStrictDescendant(self):
        assert VertexRepository.isStrictDescendant((1, 0), (1,))
        assert VertexRepository.isStrictDescendant((0,), ROOT)
        assert not VertexRepository.isStrictDescendant((1,), (1,))
        assert not VertexRepository.isStrictDescendant((0, 1), (1,))
        assert not VertexRepository.isStrictDescendant(ROOT, (0,))

    @pytest.mark.unit
    def testVisitTracksDegrees(self):
        repository = self.repository
        repository.plant()
        assert repository.visitedDegree(ROOT) == 0
        assert not repository.isTip(ROOT)

        assert repository.visit((0,)) is True
        assert repository.visit((0,)) is False
        assert repository.visitedDegree(ROOT) == 1
        assert repository.visitedDegree((0,)) == 1
        # 两个顶点各有恰好 d 个未访问邻居
        assert repository.isTip((0,))
        assert repository.isTip(ROOT)

        repository.visit((1,))
        assert not repository.isTip(ROOT)
        assert repository.unvisitedNeighbours((0,)) == [(0, 0), (0, 1)]
        assert repository.visitedNeighbours(ROOT) == [(0,), (1,)]

    @pytest.mark.unit
    def testNeighbourGroups(self):
        repository = self.repository
        repository.plant()
        repository.visit((0,))
        repository.visit((1,))
        assert repository.neighbourGroups(ROOT) == ([], [(0,), (1,)], [(2,)])
        assert repository.neighbourGroups((0,)) == ([ROOT], [], [(0, 0), (0, 1)])

    @pytest.mark.unit
    def testCountAndDepth(self):
        repository = self.repository
        repository.plant()
        repository.visit((2,))
        repository.visit((2, 1))
        assert repository.count == 3
        assert len(repository) == 3
        assert repository.maxDepth == 2
        assert (2, 1) in repository
        assert set(repository) == {ROOT, (2,), (2, 1)}

    @pytest.mark.unit
    def testStoreCap(self):
        repository = VertexRepository(d=3, maxVertices=2)
        repository.plant()
        repository.visit((0,))
        with pytest.raises(VertexStoreFullError):
            repository.visit((1,))
