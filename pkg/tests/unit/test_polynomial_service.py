#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
多项式界服务单元测试
"""

import math
from fractions import Fraction

import pytest

from business.models.errors import DerivativeVanishedError, NoSignChangeError
from business.models.polynomial import Polynomial
from business.services.polynomial_service import APPENDIX_COEFFICIENTS


class TestPolynomials:
    """L、U、Ū 的系数"""

    @pytest.mark.unit
    def testCoefficientsAtDegreeTwo(self, polynomialService):
        assert polynomialService.polyL(2).coefficients == (1, -4, 0, 4, 0, 8, -8)
        assert polynomialService.polyU(2).coefficients == (1, -4, 0, 4, 0, 8)
        assert polynomialService.polyUBar(2).coefficients == (-1, 4, 0, -6, 2)

    @pytest.mark.unit
    def testLowerBelowUpper(self, polynomialService):
        lower, upper = polynomialService.polyL(3), polynomialService.polyU(3)
        for k in range(1, 100):
            r = k / 300
            assert lower(r) <= upper(r)

    @pytest.mark.unit
    def testAppendixPolynomial(self, polynomialService):
        poly = polynomialService.appendixPolynomial()
        assert poly.degree == 14
        assert poly.coefficients == APPENDIX_COEFFICIENTS


class TestSandwichFunctions:
    """f_inf、f_sup 与 S(r,d) 的关系"""

    @pytest.mark.unit
    @pytest.mark.parametrize('d', [2, 3, 7])
    def testSandwichContainsSeries(self, polynomialService, renewalService, d):
        for k in range(1, 20):
            r = k / (20.5 * d)
            bracket = renewalService.seriesBracket(r, d)
            assert polynomialService.fInf(r, d) <= bracket.upper + 1e-12
            assert polynomialService.fSup(r, d) >= bracket.lower - 1e-12

    @pytest.mark.unit
    @pytest.mark.parametrize('d', [2, 5, 40])
    def testSignEquivalence(self, polynomialService, d):
        # (f_inf - 1)(1 - dr) = -U(r)，(f_sup - 1)(1 - dr) = -L(r)
        lower, upper = polynomialService.polyL(d), polynomialService.polyU(d)
        for k in range(1, 50):
            r = k / (50.0 * d)
            scale = 1.0 - d * r
            assert (polynomialService.fInf(r, d) - 1.0) * scale == pytest.approx(-upper(r), abs=1e-11)
            assert (polynomialService.fSup(r, d) - 1.0) * scale == pytest.approx(-lower(r), abs=1e-11)


class TestFindRoot:
    """二分求根"""

    @pytest.mark.unit
    def testLinearRoot(self, polynomialService):
        bracket = polynomialService.findRoot(Polynomial((1, -4)), 0.0, 1.0)
        assert bracket.lo <= 0.25 <= bracket.hi

    @pytest.mark.unit
    def testRootsOrderedBetweenClosedForms(self, polynomialService):
        d = 2
        lowerRoot = polynomialService.findRoot(polynomialService.polyL(d), 0.0, 0.5)
        upperRoot = polynomialService.findRoot(polynomialService.polyU(d), 0.0, 0.5)
        assert lowerRoot.hi - lowerRoot.lo <= 1e-15
        assert lowerRoot.lo >= 437 / 1608
        assert lowerRoot.hi <= upperRoot.lo
        assert upperRoot.hi < polynomialService.rU(d)

    @pytest.mark.unit
    def testNoSignChange(self, polynomialService):
        with pytest.raises(NoSignChangeError):
            polynomialService.findRoot(polynomialService.polyU(2), 0.0, 0.1)


class TestNewton:
    """牛顿迭代"""

    @pytest.mark.unit
    @pytest.mark.parametrize('d', [2, 3, 10, 100])
    def testTwoStepsGiveClosedForm(self, polynomialService, d):
        first, second = polynomialService.newtonSteps(polynomialService.polyL(d), 0.0, 2)
        assert first == pytest.approx(1.0 / (2 * d), rel=1e-15)
        assert second == pytest.approx(polynomialService.rL(d), rel=1e-13)

    @pytest.mark.unit
    def testSecondIterateUndershootsRoot(self, polynomialService):
        for d in range(2, 60):
            assert polynomialService.polyL(d)(polynomialService.rLExact(d)) > 0

    @pytest.mark.unit
    def testDerivativeVanished(self, polynomialService):
        with pytest.raises(DerivativeVanishedError):
            polynomialService.newtonSteps(Polynomial((1, 0, 1)), 0.0, 1)


class TestClosedForms:
    """r_L、r_U 闭式"""

    @pytest.mark.unit
    def testDegreeTwo(self, polynomialService):
        assert polynomialService.rLExact(2) == Fraction(437, 1608)
        assert polynomialService.rL(2) == pytest.approx(0.2717662, abs=1e-7)
        assert polynomialService.rU(2) == pytest.approx(0.27353896, abs=1e-8)
        assert float(polynomialService.rUExact(2)) == pytest.approx(polynomialService.rU(2), rel=1e-15)

    @pytest.mark.unit
    def testIntermediateBound(self, polynomialService):
        assert polynomialService.intermediateBound(2) == pytest.approx(1.0 - math.sqrt(0.5))
        r = polynomialService.intermediateBound(7)
        assert 7 * r * (2 - r) == pytest.approx(1.0)

    @pytest.mark.unit
    @pytest.mark.parametrize('d', range(2, 51))
    def testExactCertificates(self, polynomialService, d):
        assert polynomialService.certifyUpperClosedForm(d)
        assert polynomialService.certifyRefinedComparison(d)

    @pytest.mark.unit
    def testMonotoneWindow(self, polynomialService):
        assert polynomialService.uMonotoneWindow(2) == pytest.approx(math.sqrt(0.1))
        for d in (3, 10, 1000):
            window = polynomialService.uMonotoneWindow(d)
            low, high = polynomialService.derivativeRange(polynomialService.polyU(d), 0.0, window)
            assert low <= high < 0

    @pytest.mark.unit
    def testLowerPolynomialConvex(self, polynomialService):
        for d in range(2, 101):
            low, _ = polynomialService.derivativeRange(polynomialService.polyL(d), 0.0, 1.0 / d, order=2)
            assert low > 0, f"d={d}"


class TestAppendixCertificate:
    """附录证书"""

    @pytest.mark.unit
    def testCauchyBound(self, polynomialService):
        bound = polynomialService.cauchyBound(polynomialService.appendixPolynomial())
        assert bound == pytest.approx(1 + 988904672 / 211441664)
        assert bound < 6
        assert polynomialService.cauchyBound(Polynomial((-3, 1))) == 4.0
        assert polynomialService.cauchyBound(Polynomial((2.0, 0.5))) == 5.0

    @pytest.mark.unit
    def testValuesPositive(self, polynomialService):
        values = polynomialService.appendixValues()
        assert sorted(values) == [2, 3, 4, 5, 6]
        assert all(isinstance(value, int) and value > 0 for value in values.values())

    @pytest.mark.unit
    def testCertificate(self, polynomialService):
        certificate = polynomialService.appendixCertificate()
        assert certificate['positive']
        assert certificate['certified']
