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
from crschwarzian.verify.checks.FrameCheckTask import FrameCheckTask

class FrameCheckTaskTest(unittest.TestCase):
	"""
	Unit tests for the conformal involution check on non-flat bases.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing FrameCheckTask class...")

		self.task = FrameCheckTask(name = ConfigConst.CONFORMAL_INVOLUTION_CHECK)

	def testInvolutionOnRigid(self):
		model     = ModelFactory.makeRigid(2, "abs2(z1) + abs2(z1)^2/4")
		residuals = self.task.runCheck(model, calcLib.random.default_rng(13), 3)

		self.assertTrue(residuals.isPassing(), msg = str(residuals))
		self.assertEqual(residuals.getResidual(ConfigConst.CONFORMAL_INVOLUTION_CHECK).getSampleCount(), 3)

	def testInvolutionOnConformal(self):
		model     = ModelFactory.applyConformal(ModelFactory.makeRigid(1, "exp(abs2(z1))"), "re(z1)*t/3")
		residuals = self.task.runCheck(model, calcLib.random.default_rng(13), 3)

		self.assertTrue(residuals.isPassing(), msg = str(residuals))

if __name__ == "__main__":
	unittest.main()
