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

from crschwarzian.engine.expr.FieldExprParser import FieldExprParser
from crschwarzian.engine.model.ModelFactory import ModelFactory

class ConformalModelTest(unittest.TestCase):
	"""
	Unit tests for conformally rescaled models.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing ConformalModel class...")

		self.heisenberg = ModelFactory.makeHeisenberg(2)

	def testZeroFactorIsIdentity(self):
		point = [0.3, -0.2, 0.1, 0.4, 0.5]
		base  = self.heisenberg.frameDataAt(point)
		data  = ModelFactory.applyConformal(self.heisenberg, "0").frameDataAt(point)

		self.assertEqual(data.getFrameTag(), 'theta_hat')
		self.assertTrue(calcLib.allclose(data.getLevi(), base.getLevi()))
		self.assertTrue(calcLib.allclose(data.getChristoffels(), base.getChristoffels()))
		self.assertTrue(calcLib.allclose(data.getTorsion(), base.getTorsion()))
		self.assertTrue(calcLib.allclose(data.getFrame(), base.getFrame()))
		self.assertTrue(calcLib.allclose(data.getCoframe(), base.getCoframe()))

	def testTorsionOfLinearFactor(self):
		model = ModelFactory.applyConformal(self.heisenberg, "re(z1)")

		for point in ([0.0, 0.0, 0.0, 0.0, 0.0], [0.0, 0.7, -0.3, 0.2, 1.1]):
			data = model.frameDataAt(point)

			self.assertAlmostEqual(data.getTorsion()[0][0], -1.0j)
			self.assertAlmostEqual(data.getTorsion()[1][1], 0.0)

	def testTorsionScalesWithFactor(self):
		model = ModelFactory.applyConformal(self.heisenberg, "re(z1)")
		data  = model.frameDataAt([0.5, 0.0, 0.0, 0.0, 0.0])

		self.assertAlmostEqual(data.getTorsion()[0][0], -1.0j * calcLib.exp(-1.0))

	def testDuality(self):
		model = ModelFactory.applyConformal(self.heisenberg, "re(z1)*t + im(z2)^2/2")
		data  = model.frameDataAt([0.3, -0.2, 0.1, 0.4, 0.5])

		self.assertTrue(calcLib.allclose(data.pairing(), calcLib.eye(5), atol = 1.0e-10))
		self.assertTrue(data.hasConformalFactor())

	def testStackFlattens(self):
		once  = ModelFactory.applyConformal(self.heisenberg, "re(z1)")
		twice = ModelFactory.applyConformal(ModelFactory.applyConformal(self.heisenberg, "re(z1)/2"), "re(z1)/2")

		point = [0.2, 0.1, -0.3, 0.4, 0.6]

		self.assertIs(twice.getRoot(), self.heisenberg)
		self.assertEqual(len(twice.getFields()), 2)
		self.assertTrue(calcLib.allclose(once.frameDataAt(point).getTorsion(), twice.frameDataAt(point).getTorsion()))

	def testInvolutionOnRigidBase(self):
		base = ModelFactory.makeRigid(2, "abs2(z1) + abs2(z1)^2/4")

		self._assertInvolution(base, "re(z1)*im(z2)/3 + t^2/8", [0.4, -0.1, 0.2, 0.3, -0.2])

	def testInvolutionOnConformalBase(self):
		base = ModelFactory.applyConformal(self.heisenberg, "abs2(z2)/4 - re(z1)*t/5")

		self._assertInvolution(base, "im(z1)^2/2 + re(z2)/3", [0.1, 0.3, -0.4, 0.2, 0.5])

	def _assertInvolution(self, base, phi, point):
		field    = FieldExprParser.parse(phi)
		back     = ModelFactory.applyConformal(ModelFactory.applyConformal(base, field), -field)
		expected = base.frameDataAt(point)
		data     = back.frameDataAt(point)

		self.assertTrue(calcLib.allclose(data.getLevi(), expected.getLevi(), atol = 1.0e-9))
		self.assertTrue(calcLib.allclose(data.getChristoffels(), expected.getChristoffels(), atol = 1.0e-9))
		self.assertTrue(calcLib.allclose(data.getTorsion(), expected.getTorsion(), atol = 1.0e-9))
		self.assertTrue(calcLib.allclose(data.getFrame(), expected.getFrame(), atol = 1.0e-9))
		self.assertTrue(calcLib.allclose(data.getCoframe(), expected.getCoframe(), atol = 1.0e-9))

	def testRejectsComplexFactor(self):
		model = ModelFactory.applyConformal(self.heisenberg, "z1")

		with self.assertRaises(DomainException):
			model.frameDataAt([0.3, 0.4, 0.0, 0.0, 0.0])

	def testDescribe(self):
		model = ModelFactory.applyConformal(self.heisenberg, "re(z1)")
		spec  = model.describe()

		self.assertEqual(spec['kind'], 'conformal')
		self.assertEqual(spec['phi'], 're(z1)')
		self.assertEqual(spec['base'], {'kind': 'heisenberg', 'n': 2})

if __name__ == "__main__":
	unittest.main()
