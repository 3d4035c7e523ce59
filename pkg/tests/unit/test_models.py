#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
领域模型单元测试
"""

from fractions import Fraction

import pytest

from business.models.branching import (
    CoupledState,
    CouplingTrace,
    IntervalPartition,
    MomentMatrix,
    OffspringLaw,
    PartitionCell,
)
from business.models.model_params import BoundsReport, ModelParams, ReturnProb
from business.models.polynomial import Polynomial
from business.models.renewal import RenewalSequence, RootBracket, SeriesBracket
from business.models.simulation import PcBracket, SimConfig, SimOutcome, SurvivalEstimate
from business.validators.param_validator import ValidationError


class TestModelParams:
    """模型参数测试"""

    @pytest.mark.unit
    def testValid(self):
        params = ModelParams(3, 0.6)
        assert params.toDict() == {'d': 3, 'p': 0.6}

    @pytest.mark.unit
    @pytest.mark.parametrize('d, p', [(1, 0.5), (2, 1.5), (2.0, 0.5), (2, -0.1)])
    def testInvalid(self, d, p):
        with pytest.raises(ValidationError):
            ModelParams(d, p)

    @pytest.mark.unit
    def testReturnProb(self):
        assert float(ReturnProb(0.25, 2)) == 0.25
        with pytest.raises(ValidationError):
            ReturnProb(0.6, 2)

    @pytest.mark.unit
    def testParamsAreFrozen(self):
        params = ModelParams(2, 0.5)
        with pytest.raises(AttributeError):
            params.p = 0.7  # type: ignore[misc]


class TestBoundsReport:
    """界报告测试"""

    @pytest.mark.unit
    def testToDict(self):
        report = BoundsReport(d=2, lbPc=0.62, ubPc=0.71, lbPcHat=0.70,
                              amp2002Ub=1.0, vacuous=('amp2002Ub',))
        row = report.toDict()
        assert list(row)[:4] == ['d', 'lb_pc', 'lb_pc_hat', 'ub_pc']
        assert row['vacuous'] == 'amp2002Ub'
        assert row['gms2018_ub'] is None
        assert report.isVacuous('amp2002Ub')
        assert not report.isVacuous('lmp2005Ub')

    @pytest.mark.unit
    def testOrdering(self):
        with pytest.raises(ValidationError):
            BoundsReport(d=2, lbPc=0.8, ubPc=0.7)
        with pytest.raises(ValidationError):
            BoundsReport(d=2, lbPcHat=0.8, ubPc=0.7)

    @pytest.mark.unit
    def testRange(self):
        with pytest.raises(ValidationError):
            BoundsReport(d=2, amp2002Ub=1.5)


class TestOffspringLaw:
    """后代分布测试"""

    @pytest.mark.unit
    def testFromCutpoints(self):
        law = OffspringLaw.fromCutpoints(0.2, 0.4, 1.0)
        assert law.probability((0, 1)) == 0.2
        assert law.probability((1, 0)) == pytest.approx(0.2)
        assert law.probability((2, 0)) == pytest.approx(0.6)
        assert law.probability((0, 0)) == 0.0
        assert law.meanOffspring() == pytest.approx((1.4, 0.2))

    @pytest.mark.unit
    def testFromProbabilities(self):
        law = OffspringLaw.fromProbabilities({(0, 1): 0.1, (1, 0): 0.2, (2, 0): 0.3, (0, 0): 0.4})
        assert law.cutpoints == pytest.approx((0.1, 0.3, 0.6))

    @pytest.mark.unit
    def testRejectsNonMonotoneCutpoints(self):
        with pytest.raises(ValidationError):
            OffspringLaw.fromCutpoints(0.5, 0.4, 1.0)


class TestIntervalPartition:
    """区间划分测试"""

    def setup_method(self):  # pylint: disable=invalid-name
        self.partition = IntervalPartition((
            PartitionCell((0, 1), 0.0, 0.2),
            PartitionCell((2, 0), 0.2, 0.9),
            PartitionCell((0, 0), 0.9, 1.0),
        ))

    @pytest.mark.unit
    def testLocateHalfOpenCells(self):
        assert self.partition.locate(0.0) == 0
        assert self.partition.locate(0.2) == 1
        assert self.partition.locate(0.8999) == 1
        assert self.partition.locate(0.9) == 2
        assert self.partition.locate(1.0) == 2

    @pytest.mark.unit
    def testBreakpointsAndLabels(self):
        assert self.partition.breakpoints == [0.0, 0.2, 0.9, 1.0]
        assert self.partition.labels == [(0, 1), (2, 0), (0, 0)]
        assert self.partition.cellFor((2, 0)).width == pytest.approx(0.7)
        assert self.partition.cellFor((1, 0)) is None

    @pytest.mark.unit
    def testRejectsGapsAndPartialCover(self):
        with pytest.raises(ValidationError):
            IntervalPartition((PartitionCell((0, 1), 0.0, 0.5), PartitionCell((0, 0), 0.6, 1.0)))
        with pytest.raises(ValidationError):
            IntervalPartition((PartitionCell((0, 0), 0.1, 1.0),))


class TestMomentMatrix:
    """矩矩阵测试"""

    @pytest.mark.unit
    def testOneBasedIndexing(self):
        matrix = MomentMatrix(((1.0, 2.0), (3.0, 4.0)))
        assert matrix[1, 2] == 2.0
        assert matrix[2, 1] == 3.0
        assert matrix.toList() == [[1.0, 2.0], [3.0, 4.0]]

    @pytest.mark.unit
    def testRejectsNegativeEntries(self):
        with pytest.raises(ValidationError):
            MomentMatrix(((1.0, -0.1), (0.0, 0.0)))


class TestCoupledState:
    """耦合状态测试"""

    @pytest.mark.unit
    def testDominates(self):
        assert CoupledState(1, 3, 2, 3, 2).dominates()
        assert CoupledState(1, 3, 0, 2, 1).dominates()
        assert not CoupledState(1, 2, 5, 3, 0).dominates()
        assert not CoupledState(1, 3, 0, 2, 2).dominates()

    @pytest.mark.unit
    def testToRow(self):
        state = CoupledState(4, 3, 2, 1, 1, 6, chosenType=2, a=1, b=1, u=0.25, outcome=(2, 0))
        row = state.toRow()
        assert list(row) == ['t', 'N_TT1', 'N_TT2', 'N_FM1', 'N_FM2',
                             'chosen_type', 'a', 'b', 'u', 'outcome']
        assert row['outcome'] == '20'
        assert CoupledState(0, 1, 1, 1, 1).toRow()['chosen_type'] == ''

    @pytest.mark.unit
    def testTraceSummary(self):
        trace = CouplingTrace(d=2, p=0.5, seed=9)
        assert trace.steps == 0
        trace.states.append(CoupledState(0, 2, 3, 2, 3))
        trace.states.append(CoupledState(1, 0, 0, 0, 0))
        summary = trace.summary()
        assert summary['steps'] == 1
        assert summary['violations'] == 0
        assert summary['fm_extinct_at'] == ''
        assert summary['final_N_TT1'] == 0


class TestPolynomial:
    """多项式测试"""

    @pytest.mark.unit
    def testHornerExact(self):
        poly = Polynomial((1, -4, 0, 4))
        assert poly(Fraction(1, 2)) == Fraction(-1, 2)
        assert poly.isExact
        assert poly.degree == 3
        assert poly.leading == 4

    @pytest.mark.unit
    def testDerivative(self):
        assert Polynomial((1, -4, 0, 4)).derivative().coefficients == (-4, 0, 12)
        assert Polynomial((5,)).derivative().coefficients == (0,)

    @pytest.mark.unit
    def testRejectsZeroLeadingAndHighDegree(self):
        with pytest.raises(ValidationError):
            Polynomial((1, 2, 0))
        with pytest.raises(ValidationError):
            Polynomial.of([1] * 16)


class TestRenewalModels:
    """更新模型测试"""

    @pytest.mark.unit
    def testRenewalSequence(self):
        sequence = RenewalSequence(0.25, 2, (0.25, 0.109375), (0.25, 0.046875))
        assert len(sequence) == 2
        assert sequence.uAt(1) == 0.25
        assert sequence.fAt(2) == 0.046875

    @pytest.mark.unit
    def testRenewalSequenceFirstTermMustBeR(self):
        with pytest.raises(ValidationError):
            RenewalSequence(0.25, 2, (0.3,), (0.25,))

    @pytest.mark.unit
    def testBrackets(self):
        bracket = SeriesBracket(0.9, 1.1, 12)
        assert bracket.width == pytest.approx(0.2)
        assert bracket.contains(1.0)
        with pytest.raises(ValidationError):
            SeriesBracket(1.1, 0.9, 1)

        root = RootBracket(0.27, 0.28, 5, 40)
        assert root.within(0.2, 0.3)
        assert not root.within(0.275, 0.3)
        assert root.toDict()['terms_used'] == 40


class TestSimulationModels:
    """模拟模型测试"""

    @pytest.mark.unit
    def testSimConfigReplace(self):
        config = SimConfig(d=2, p=0.5, replicas=3)
        assert config.withP(0.7).p == 0.7
        assert config.withVariant('oriented').oriented
        assert not config.oriented
        assert config.toDict()['replicas'] == 3

    @pytest.mark.unit
    def testSimConfigValidation(self):
        with pytest.raises(ValidationError):
            SimConfig(d=2, p=0.5, variant='diagonal')
        with pytest.raises(ValidationError):
            SimConfig(d=2, p=0.5, seed=2 ** 64)

    @pytest.mark.unit
    def testSimOutcomeRow(self):
        row = SimOutcome(True, 100, 350, 12).toRow(4)
        assert row == {'replica': 4, 'reached_cap': 1, 'activations': 100,
                       'steps': 350, 'frontier_depth': 12}
        with pytest.raises(ValidationError):
            SimOutcome(False, 0, 0, 0)

    @pytest.mark.unit
    def testSurvivalEstimateAndPcBracket(self):
        assert SurvivalEstimate(0.1, 0.05, 0.2, 10, 100).excludesZero
        assert not SurvivalEstimate(0.0, 0.0, 0.04, 0, 100).excludesZero
        bracket = PcBracket(0.70, 0.72, 9)
        assert bracket.overlaps(0.71, 0.75)
        assert not bracket.overlaps(0.73, 0.75)
        assert bracket.midpoint == pytest.approx(0.71)
