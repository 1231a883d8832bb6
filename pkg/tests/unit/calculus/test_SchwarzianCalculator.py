#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

import numpy as calcLib

from crschwarzian.common.DomainException import DomainException

from crschwarzian.data.JLParams import JLParams

from crschwarzian.engine.calculus.SchwarzianCalculator import SchwarzianCalculator
from crschwarzian.engine.expr.FieldExprParser import FieldExprParser
from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.solutions.JerisonLeeFamily import JerisonLeeFamily

class SchwarzianCalculatorTest(unittest.TestCase):
	"""
	Unit tests for the CR Schwarzian tensor.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing SchwarzianCalculator class...")

		self.h2 = ModelFactory.makeHeisenberg(2)

	def testLinearExponent(self):
		data = SchwarzianCalculator.schwarzianAt(self.h2, FieldExprParser.parse("re(z1)"), [0.1, 0.2, 0.3, 0.4, 0.5])

		self.assertAlmostEqual(data.getBHolo()[0][0], -1.0)
		self.assertAlmostEqual(data.getBHolo()[1][1], 0.0)
		self.assertTrue(calcLib.allclose(data.getBMixed(), 0.0, atol = 1.0e-12))
		self.assertTrue(calcLib.allclose(data.getBAntiholo(), data.getBHolo().conj()))

	def testSymmetry(self):
		phi  = FieldExprParser.parse("re(z1)*im(z2) + t*re(z2)/3 + abs2(z1)^2/5")
		data = SchwarzianCalculator.schwarzianAt(self.h2, phi, [0.3, -0.1, 0.2, 0.4, -0.6])

		self.assertLess(SchwarzianCalculator.symmetryResidual(data), 1.0e-10)

	def testAdditivity(self):
		phi   = FieldExprParser.parse("re(z1)*t/2 + im(z2)^2/4")
		sigma = FieldExprParser.parse("abs2(z1)/3 - im(z1)*re(z2)")

		self.assertLess(SchwarzianCalculator.additivityResidual(self.h2, phi, sigma, [0.2, -0.3, 0.1, 0.4, 0.5]), 1.0e-8)

	def testTorsionLink(self):
		phi = FieldExprParser.parse("re(z1)*t/2 + im(z2)^2/4")

		self.assertLess(SchwarzianCalculator.torsionLinkResidual(self.h2, phi, [0.2, -0.3, 0.1, 0.4, 0.5]), 1.0e-9)

	def testJerisonLeeIsMobius(self):
		params  = JLParams(kappa = 1.0, mu = [0.5, -0.25j], lambdaParam = 2.0j)
		phi     = JerisonLeeFamily.jlField(params, 2)
		samples = [[0.1, 0.2, -0.3, 0.1, 0.2], [-0.2, 0.1, 0.0, 0.3, -0.1]]

		residual = SchwarzianCalculator.mobiusResidual(self.h2, phi, samples)

		self.assertLess(residual['max_b'], 1.0e-9)
		self.assertLess(residual['max_P'], 1.0e-9)

	def testNonRealExponentRejected(self):
		with self.assertRaises(DomainException):
			SchwarzianCalculator.schwarzianAt(self.h2, FieldExprParser.parse("z1"), [0.3, 0.4, 0.0, 0.0, 0.0])

if __name__ == "__main__":
	unittest.main()
