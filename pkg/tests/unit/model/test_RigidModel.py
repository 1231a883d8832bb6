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

from crschwarzian.engine.model.ModelFactory import ModelFactory

class RigidModelTest(unittest.TestCase):
	"""
	Unit tests for rigid hypersurface models.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing RigidModel class...")

	def testSphereLikePotential(self):
		model = ModelFactory.makeRigid(1, "abs2(z1)")
		data  = model.frameDataAt([0.4, -0.3, 0.2])

		self.assertAlmostEqual(data.getLevi()[0][0], 1.0)
		self.assertTrue(calcLib.allclose(data.getChristoffels(), 0.0))
		self.assertTrue(calcLib.allclose(data.getTorsion(), 0.0))

	def testQuarticPotential(self):
		model = ModelFactory.makeRigid(1, "abs2(z1) + abs2(z1)^2/4")
		data  = model.frameDataAt([1.0, 0.0, 0.0])

		self.assertAlmostEqual(data.getLevi()[0][0], 2.0)
		self.assertAlmostEqual(data.getHoloChristoffels()[0][0][0], 0.5)
		self.assertTrue(calcLib.allclose(data.getTorsion(), 0.0))

	def testDuality(self):
		model = ModelFactory.makeRigid(2, "abs2(z1) + abs2(z1)^2/4")
		data  = model.frameDataAt([0.3, 0.1, -0.2, 0.5, 0.4])

		self.assertTrue(calcLib.allclose(data.pairing(), calcLib.eye(5), atol = 1.0e-12))
		self.assertAlmostEqual(data.getLevi()[1][1], 1.0)

	def testNotPseudoconvex(self):
		model = ModelFactory.makeRigid(1, "-abs2(z1)")

		with self.assertRaises(DomainException) as ctx:
			model.frameDataAt([0.0, 0.0, 0.0])

		self.assertEqual(ctx.exception.getInvariant(), 'strict-pseudoconvexity')

	def testPotentialCoordinates(self):
		with self.assertRaises(FieldExprException):
			ModelFactory.makeRigid(2, "abs2(z2)")

		with self.assertRaises(FieldExprException):
			ModelFactory.makeRigid(1, "abs2(z1) + t")

	def testMaxOrder(self):
		self.assertEqual(ModelFactory.makeRigid(1, "abs2(z1)").getMaxOrder(), 1)

if __name__ == "__main__":
	unittest.main()
