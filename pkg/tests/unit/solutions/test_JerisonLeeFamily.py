#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

import numpy as calcLib

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.DomainException import DomainException

from crschwarzian.data.JLParams import JLParams

from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.solutions.JerisonLeeFamily import JerisonLeeFamily

class JerisonLeeFamilyTest(unittest.TestCase):
	"""
	Unit tests for the Jerison-Lee family of Möbius solutions.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing JerisonLeeFamily class...")

		self.h2 = ModelFactory.makeHeisenberg(2)

	def testGExprMatchesValue(self):
		params = JLParams(kappa = 1.0 - 0.5j, mu = [0.5, 2.0j], lambdaParam = 1.5, c = 0.2)
		point  = [0.3, -0.1, 0.2, 0.4, 0.7]

		gJet = JerisonLeeFamily.gExpr(params, 2).evaluate(JetPoint(point, 1))

		self.assertAlmostEqual(gJet.value(), params.gValue(point))

	def testFieldValue(self):
		params = JLParams(kappa = 1.0, mu = [0.0, 0.0], lambdaParam = 1.0j, c = 0.25)
		phi    = JerisonLeeFamily.jlField(params, 2).evaluate(JetPoint([0.0] * 5, 1))

		# G(0) = i
		self.assertAlmostEqual(phi.value(), 0.25)

	def testPluriharmonicField(self):
		params = JLParams(kappa = 0.5j, mu = [1.0, -1.0j], lambdaParam = 2.0)
		u      = JerisonLeeFamily.pluriharmonicField(params, 2)

		ops = CovariantCalculus.operatorsAt(self.h2, u, [0.2, 0.1, -0.3, 0.2, 0.4])

		self.assertTrue(calcLib.allclose(ops.getGrahamLee(), 0.0, atol = 1.0e-10))

	def testInvariants(self):
		sphere = JerisonLeeFamily.jlInvariants(JLParams(kappa = 1.0, mu = [0.0, 0.0], lambdaParam = 1.0j), 2)

		self.assertAlmostEqual(sphere.getScalar(), 24.0)
		self.assertAlmostEqual(sphere.getEta(), -4.0)
		self.assertAlmostEqual(sphere.getTemplateCoefficient(), 4.0)

		hyperbolic = JerisonLeeFamily.jlInvariants(JLParams(kappa = 0.0, mu = [2.0, 0.0], lambdaParam = 1.0), 2)

		self.assertAlmostEqual(hyperbolic.getScalar(), -24.0)

	def testInvariantsScaleWithConstant(self):
		invariants = JerisonLeeFamily.jlInvariants(JLParams(kappa = 1.0, mu = [0.0, 0.0], lambdaParam = 1.0j, c = 0.5), 2)

		self.assertAlmostEqual(invariants.getScalar(), 24.0 * calcLib.exp(-1.0))

	def testIntegrabilityWitness(self):
		params = JerisonLeeFamily.integrabilityWitness(2, [0.0] * 5, [1.0, 0.0])

		self.assertAlmostEqual(params.getKappa(), 0.0)
		self.assertTrue(calcLib.allclose(params.getMu(), [-2.0, 0.0]))
		self.assertAlmostEqual(params.getLambda(), 1.0)

	def testWitnessGradient(self):
		point  = [0.3, -0.2, 0.1, 0.5, 0.4]
		omega  = [0.5 - 1.0j, 2.0j]
		params = JerisonLeeFamily.integrabilityWitness(2, point, omega)

		self.assertAlmostEqual(params.gValue(point), 1.0)

		cd = CovariantCalculus.covariantJet(self.h2, JerisonLeeFamily.jlField(params, 2), point, 1)

		for a in range(2):
			self.assertAlmostEqual(cd.get(a), omega[a])

	def testWitnessArity(self):
		with self.assertRaises(ConfigException):
			JerisonLeeFamily.integrabilityWitness(2, [0.0] * 3, [1.0, 0.0])

		with self.assertRaises(ConfigException):
			JerisonLeeFamily.integrabilityWitness(2, [0.0] * 5, [1.0])

	def testSamplePoints(self):
		rng    = calcLib.random.default_rng(4)
		params = JerisonLeeFamily.randomParams(rng, 2)
		points = JerisonLeeFamily.samplePoints(rng, params, 2, 5)

		self.assertEqual(len(points), 5)

		for p in points:
			self.assertGreater(abs(params.gValue(p)), 0.1)
			self.assertTrue(calcLib.all(calcLib.abs(p) <= 0.5))

	def testSamplePointsGiveUp(self):
		params = JLParams(kappa = 0.0, mu = [0.0, 0.0], lambdaParam = 0.01)

		with self.assertRaises(DomainException):
			JerisonLeeFamily.samplePoints(calcLib.random.default_rng(1), params, 2, 3)

if __name__ == "__main__":
	unittest.main()
