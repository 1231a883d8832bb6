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
from crschwarzian.verify.checks.CurvatureCheckTask import CurvatureCheckTask

class CurvatureCheckTaskTest(unittest.TestCase):
	"""
	Unit tests for the Chern-Moser check: vanishing on spherical models
	and a non-zero floor on the quartic rigid model.

	"""

	RIGID_NAME = ConfigConst.CHERN_MOSER_CHECK + CurvatureCheckTask.NON_SPHERICAL_SUFFIX

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing CurvatureCheckTask class...")

		self.task = CurvatureCheckTask(name = ConfigConst.CHERN_MOSER_CHECK)

	def testSphericalModelPasses(self):
		model     = ModelFactory.applyConformal(ModelFactory.makeHeisenberg(2), "re(z1)*im(z2)/4 + t^2/10")
		residuals = self.task.runCheck(model, calcLib.random.default_rng(7), 2)

		self.assertTrue(residuals.isPassing(), msg = str(residuals))
		self.assertTrue(residuals.getResidual(ConfigConst.CHERN_MOSER_CHECK).isAsserted())

		floor = residuals.getResidual(self.RIGID_NAME)

		self.assertIsNotNone(floor)
		self.assertTrue(floor.isAsserted())
		self.assertEqual(floor.getValue(), 0.0)

	def testRigidModelReportsOnly(self):
		model     = ModelFactory.makeRigid(2, CurvatureCheckTask.QUARTIC_POTENTIAL)
		residuals = self.task.runCheck(model, calcLib.random.default_rng(7), 2)

		self.assertFalse(residuals.getResidual(ConfigConst.CHERN_MOSER_CHECK).isAsserted())
		self.assertTrue(residuals.getResidual(self.RIGID_NAME).isPassing())
		self.assertTrue(residuals.isPassing(), msg = str(residuals))

	def testNoFloorForN1(self):
		residuals = self.task.runCheck(ModelFactory.makeHeisenberg(1), calcLib.random.default_rng(7), 2)

		self.assertEqual(residuals.getNames(), [ConfigConst.CHERN_MOSER_CHECK])

if __name__ == "__main__":
	unittest.main()
