#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.solutions.ClassicalSchwarzian import ClassicalSchwarzian
from crschwarzian.verify.checks.ClassicalCheckTask import ClassicalCheckTask

class ClassicalCheckTaskTest(unittest.TestCase):
	"""
	Unit tests for the rigid reduction check on harmonic data with
	non-vanishing second derivative.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing ClassicalCheckTask class...")

		self.task = ClassicalCheckTask(name = ConfigConst.EXAMPLE2_CHECK)

	def testHarmonicExponentsAreCurved(self):
		z = complex(0.2, -0.1)

		for phi2d in ClassicalCheckTask.harmonicExponents(calcLib.random.default_rng(3)):
			_, dz, dzz = ClassicalSchwarzian.zDerivatives(phi2d, z, 2)

			self.assertAlmostEqual(ClassicalSchwarzian.laplacianAt(phi2d, [z.real, z.imag, 0.0]), 0.0)
			self.assertGreater(abs(dzz), 1.0e-6, msg = str(phi2d))

	def testExample2MatchesClassicalFormula(self):
		residuals = self.task.runCheck(ModelFactory.makeHeisenberg(1), calcLib.random.default_rng(5), 3)
		classical = residuals.getResidual(ConfigConst.EXAMPLE2_CHECK + ClassicalCheckTask.CLASSICAL_SUFFIX)

		self.assertIsNotNone(classical)
		self.assertTrue(classical.isAsserted())
		self.assertEqual(classical.getSampleCount(), 9)
		self.assertTrue(residuals.isPassing(), msg = str(residuals))

if __name__ == "__main__":
	unittest.main()
