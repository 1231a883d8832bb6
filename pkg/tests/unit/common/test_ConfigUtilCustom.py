#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import os
import unittest

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigUtil import ConfigUtil

class ConfigUtilCustomTest(unittest.TestCase):
	"""
	Unit tests for ConfigUtil loading a user supplied file.

	"""

	configFile = os.path.dirname(__file__) + "/ValidTestConfig.props"

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing ConfigUtil class (custom file load)...")

		self.configUtil = ConfigUtil()
		self.configUtil.reloadConfig(self.configFile)

	@classmethod
	def tearDownClass(self):
		self.configUtil.reloadConfig()

	def testIsConfigDataLoaded(self):
		self.assertTrue(self.configUtil.isConfigDataLoaded())
		self.assertEqual(self.configUtil.getConfigFileName(), self.configFile)

	def testHasSection(self):
		self.assertTrue(self.configUtil.hasSection(ConfigConst.VERIFICATION))
		self.assertFalse(self.configUtil.hasSection('NoSuchSection'))

	def testHasProperty(self):
		self.assertTrue(self.configUtil.hasProperty(ConfigConst.VERIFICATION, ConfigConst.SEED_KEY))
		self.assertFalse(self.configUtil.hasProperty(ConfigConst.VERIFICATION, ConfigConst.JL_MIN_ABS_G_KEY))

	def testGetIntegerProperty(self):
		self.assertEqual(self.configUtil.getInteger(ConfigConst.VERIFICATION, ConfigConst.SAMPLES_KEY), 5)
		self.assertEqual(self.configUtil.getInteger(ConfigConst.VERIFICATION, ConfigConst.SEED_KEY), 7)
		self.assertEqual(self.configUtil.getInteger(ConfigConst.ENGINE, ConfigConst.JET_ORDER_KEY), 3)

	def testGetFloatProperty(self):
		self.assertAlmostEqual(self.configUtil.getFloat(ConfigConst.ENGINE, ConfigConst.SAMPLE_RADIUS_KEY), 0.25)

	def testGetBooleanProperty(self):
		self.assertFalse(self.configUtil.getBoolean(ConfigConst.LOGGING, ConfigConst.LOG_RESOURCE_USAGE_KEY, True))

	def testGetTolerance(self):
		self.assertAlmostEqual(self.configUtil.getTolerance(ConfigConst.BOCHNER_CHECK), 1.0e-5)
		self.assertAlmostEqual(self.configUtil.getTolerance(ConfigConst.RANK_LEMMA_CHECK), 1.0e-11)

		# not in the file
		self.assertAlmostEqual(self.configUtil.getTolerance(ConfigConst.DUALITY_CHECK),
			ConfigConst.DEFAULT_TOLERANCES[ConfigConst.DUALITY_CHECK])

	def testMissingFileFallsBack(self):
		self.configUtil.reloadConfig('/no/such/dir/Missing.props')

		try:
			self.assertTrue(self.configUtil.getConfigFileName().endswith("CrSchwarzianConfig.props"))
			self.assertFalse(self.configUtil.hasProperty(ConfigConst.VERIFICATION, "noSuchKey"))
		finally:
			self.configUtil.reloadConfig(self.configFile)

if __name__ == "__main__":
	unittest.main()
