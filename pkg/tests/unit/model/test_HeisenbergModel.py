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
from crschwarzian.common.JetException import JetException

from crschwarzian.engine.model.HeisenbergModel import HeisenbergModel

class HeisenbergModelTest(unittest.TestCase):
	"""
	Unit tests for the flat Heisenberg model.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing HeisenbergModel class...")

		self.model = HeisenbergModel(2)

	def testFrameAtPoint(self):
		data = self.model.frameDataAt([1.0, 0.0, 0.0, 0.0, 0.0])

		# Z_1 = d/dz1 + i zbar1 d/dt
		self.assertAlmostEqual(data.getFrame()[0][4], 1.0j)
		self.assertAlmostEqual(data.getFrame()[0][0], 0.5)
		self.assertAlmostEqual(data.getFrame()[0][1], -0.5j)
		self.assertAlmostEqual(data.getFrame()[2][4], -1.0j)

	def testFlatStructure(self):
		data = self.model.frameDataAt([0.3, -0.1, 0.7, 0.2, 1.5])

		self.assertTrue(calcLib.allclose(data.getLevi(), calcLib.eye(2)))
		self.assertTrue(calcLib.allclose(data.getChristoffels(), 0.0))
		self.assertTrue(calcLib.allclose(data.getTorsion(), 0.0))
		self.assertFalse(data.hasConformalFactor())

	def testDuality(self):
		data = self.model.frameDataAt([0.3, -0.1, 0.7, 0.2, 1.5])

		self.assertTrue(calcLib.allclose(data.pairing(), calcLib.eye(5), atol = 1.0e-12))

	def testReebNormalization(self):
		data = self.model.frameDataAt([0.5, 0.5, -0.5, 0.25, 0.0])

		# theta(T) = 1
		self.assertAlmostEqual(data.getCoframe()[4] @ data.getReebVector(), 1.0)

	def testPointArity(self):
		with self.assertRaises(ConfigException) as ctx:
			self.model.frameDataAt([0.0, 0.0, 0.0])

		self.assertEqual(ctx.exception.getInvariant(), 'point-arity')

	def testOrderRange(self):
		self.assertEqual(self.model.getMaxOrder(), 3)

		with self.assertRaises(JetException):
			self.model.frameJetsAt([0.0] * 5, 4)

	def testDimension(self):
		with self.assertRaises(ConfigException):
			HeisenbergModel(0)

		self.assertEqual(self.model.describe(), {'kind': 'heisenberg', 'n': 2})

if __name__ == "__main__":
	unittest.main()
