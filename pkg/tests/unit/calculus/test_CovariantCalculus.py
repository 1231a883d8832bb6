#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

import numpy as calcLib

from crschwarzian.common.JetException import JetException

from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus
from crschwarzian.engine.expr.FieldExprParser import FieldExprParser
from crschwarzian.engine.model.ModelFactory import ModelFactory

class CovariantCalculusTest(unittest.TestCase):
	"""
	Unit tests for Tanaka-Webster covariant derivatives of scalars and
	the operators built from them.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing CovariantCalculus class...")

		self.h1 = ModelFactory.makeHeisenberg(1)
		self.h2 = ModelFactory.makeHeisenberg(2)

	def testReebDerivativeOfT(self):
		cd = CovariantCalculus.covariantJet(self.h1, FieldExprParser.parse("t"), [0.3, -0.2, 0.1], 2)

		self.assertAlmostEqual(cd.get(cd.reeb()), 2.0)
		self.assertAlmostEqual(cd.get(0, 1) - cd.get(1, 0), 2.0j)

	def testRigidSecondDerivative(self):
		model = ModelFactory.makeRigid(1, "abs2(z1) + abs2(z1)^2/4")
		cd    = CovariantCalculus.covariantJet(model, FieldExprParser.parse("re(z1)"), [1.0, 0.0, 0.0], 2)

		self.assertAlmostEqual(cd.get(0), 0.5)
		self.assertAlmostEqual(cd.get(0, 0), -0.25)

	def testOrderRange(self):
		with self.assertRaises(JetException):
			CovariantCalculus.covariantJet(self.h1, FieldExprParser.parse("t"), [0.0, 0.0, 0.0], 4)

		cd = CovariantCalculus.covariantJet(self.h1, FieldExprParser.parse("t"), [0.0, 0.0, 0.0], 1)

		with self.assertRaises(JetException):
			cd.get(0, 0)

	def testFrameOrderFor(self):
		self.assertEqual(CovariantCalculus.frameOrderFor(1), 0)
		self.assertEqual(CovariantCalculus.frameOrderFor(2), 0)
		self.assertEqual(CovariantCalculus.frameOrderFor(3), 1)

	def testOperatorsOfPluriharmonic(self):
		ops = CovariantCalculus.operatorsAt(self.h2, FieldExprParser.parse("re(z1)"), [0.2, 0.1, -0.4, 0.3, 0.5])

		self.assertAlmostEqual(ops.getSublaplacian(), 0.0)
		self.assertAlmostEqual(ops.getKohn(), 0.0)
		self.assertTrue(calcLib.allclose(ops.getGrahamLee(), 0.0, atol = 1.0e-12))
		self.assertAlmostEqual(ops.getReeb(), 0.0)

	def testSublaplacianOfNormSquared(self):
		ops = CovariantCalculus.operatorsAt(self.h1, FieldExprParser.parse("abs2(z1)"), [0.3, 0.4, 0.0])

		self.assertAlmostEqual(ops.getSublaplacian(), 2.0)
		self.assertAlmostEqual(ops.getDbarNorm2(), 0.25)

if __name__ == "__main__":
	unittest.main()
