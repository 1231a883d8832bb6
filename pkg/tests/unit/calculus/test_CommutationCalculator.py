#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

import numpy as calcLib

from crschwarzian.engine.calculus.CommutationCalculator import CommutationCalculator
from crschwarzian.engine.expr.FieldExprFactory import FieldExprFactory
from crschwarzian.engine.expr.FieldExprParser import FieldExprParser
from crschwarzian.engine.model.ModelFactory import ModelFactory

class CommutationCalculatorTest(unittest.TestCase):
	"""
	Unit tests for the commutation relations of covariant derivatives.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing CommutationCalculator class...")

	def testHeisenberg(self):
		model = ModelFactory.makeHeisenberg(2)
		field = FieldExprFactory.randomPolynomial(calcLib.random.default_rng(1), 2, realValued = False)

		residuals = CommutationCalculator.commutationResiduals(model, field, [0.1, 0.2, -0.3, 0.4, 0.5])

		self.assertEqual(residuals.getNames(), list(CommutationCalculator.NAMES))
		self.assertTrue(residuals.isPassing(), msg = str(residuals))

	def testConformalModel(self):
		model = ModelFactory.applyConformal(ModelFactory.makeHeisenberg(2), FieldExprParser.parse("re(z1)*t/3 + im(z2)^2/4"))
		field = FieldExprFactory.randomPolynomial(calcLib.random.default_rng(2), 2)

		residuals = CommutationCalculator.commutationResiduals(model, field, [0.2, -0.1, 0.3, 0.1, -0.2])

		self.assertTrue(residuals.isPassing(), msg = str(residuals))

	def testRigidModel(self):
		model = ModelFactory.makeRigid(1, "abs2(z1) + abs2(z1)^2/4")
		field = FieldExprParser.parse("re(z1)^3*t + im(z1)*t^2")

		residuals = CommutationCalculator.commutationResiduals(model, field, [0.5, -0.2, 0.3])

		self.assertTrue(residuals.isPassing(), msg = str(residuals))

if __name__ == "__main__":
	unittest.main()
