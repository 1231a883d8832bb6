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
from crschwarzian.common.FieldExprException import FieldExprException

from crschwarzian.engine.expr.FieldExpr import Literal, Neg
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.expr.FieldExprFactory import FieldExprFactory
from crschwarzian.engine.jet.JetPoint import JetPoint

class FieldExprFactoryTest(unittest.TestCase):
	"""
	Unit tests for the expression factory and evaluator.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing FieldExprFactory class...")

	def testMakeLiteral(self):
		self.assertEqual(FieldExprFactory.makeLiteral(2.0), Literal(2.0))
		self.assertEqual(FieldExprFactory.makeLiteral(-2.0), Neg(Literal(2.0)))

	def testLinear(self):
		expr = FieldExprFactory.linear([1.0, 0.0, 2.0j])
		p    = JetPoint([1.0, 0.0, 5.0, 5.0, 0.0, 1.0, 0.0], 1)

		self.assertEqual(expr.maxCoordIndex(), 3)
		self.assertAlmostEqual(expr.evaluate(p).value(), 1.0 + 2.0j * 1.0j)

	def testMobiusMap(self):
		expr = FieldExprFactory.mobiusMap(1.0, 2.0, 0.0, 1.0)
		p    = JetPoint([0.5, 0.0, 0.0], 2)

		self.assertTrue(expr.isHolomorphic())
		self.assertAlmostEqual(expr.evaluate(p).value(), 2.5)

	def testRandomPolynomialIsReal(self):
		rng  = calcLib.random.default_rng(5)
		expr = FieldExprFactory.randomPolynomial(rng, 2)
		p    = JetPoint([0.1, 0.2, -0.3, 0.4, 0.5], 3)

		self.assertTrue(FieldExprEvaluator.evalRealField(expr, p).isReal())

	def testRandomPolynomialIsSeeded(self):
		a = FieldExprFactory.randomPolynomial(calcLib.random.default_rng(9), 2)
		b = FieldExprFactory.randomPolynomial(calcLib.random.default_rng(9), 2)

		self.assertEqual(a, b)

	def testRandomAstDepth(self):
		rng = calcLib.random.default_rng(3)

		for _ in range(20):
			self.assertLessEqual(FieldExprFactory.randomAst(rng, 2, maxDepth = 4).depth(), 5)

	def testEvalFieldArity(self):
		p = JetPoint([0.0, 0.0, 0.0], 1)

		with self.assertRaises(FieldExprException):
			FieldExprEvaluator.evalField(FieldExprFactory.z(2), p)

	def testEvalRealFieldRejectsComplex(self):
		p = JetPoint([0.3, 0.4, 0.0], 1)

		with self.assertRaises(DomainException) as ctx:
			FieldExprEvaluator.evalRealField(FieldExprFactory.z(1), p, name = 'phi')

		self.assertEqual(ctx.exception.getInvariant(), 'real-valued-phi')

if __name__ == "__main__":
	unittest.main()
