#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigUtil import ConfigUtil

class ConfigUtilDefaultTest(unittest.TestCase):
	"""
	Unit tests for ConfigUtil with the default file. Every assertion
	also holds when no file is found and built-in defaults apply.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing ConfigUtil class (default file load)...")

		self.configUtil = ConfigUtil()
		self.configUtil.reloadConfig()

	def setUp(self):
		pass

	def tearDown(self):
		pass

	def testGetIntegerProperty(self):
		jetOrder = self.configUtil.getInteger(ConfigConst.ENGINE, ConfigConst.JET_ORDER_KEY, ConfigConst.DEFAULT_JET_ORDER)
		self.assertEqual(jetOrder, ConfigConst.DEFAULT_JET_ORDER)

	def testGetFloatProperty(self):
		radius = self.configUtil.getFloat(ConfigConst.ENGINE, ConfigConst.SAMPLE_RADIUS_KEY, ConfigConst.DEFAULT_SAMPLE_RADIUS)
		self.assertAlmostEqual(radius, ConfigConst.DEFAULT_SAMPLE_RADIUS)

	def testGetBooleanProperty(self):
		self.assertTrue(self.configUtil.getBoolean(ConfigConst.LOGGING, ConfigConst.LOG_RESOURCE_USAGE_KEY, True))

	def testGetProperty(self):
		level = self.configUtil.getProperty(ConfigConst.LOGGING, ConfigConst.LOG_LEVEL_KEY, ConfigConst.DEFAULT_LOG_LEVEL)
		self.assertEqual(level, ConfigConst.DEFAULT_LOG_LEVEL)

	def testMissingPropertyFallsBack(self):
		self.assertEqual(self.configUtil.getInteger(ConfigConst.ENGINE, 'noSuchKey', 17), 17)
		self.assertIsNone(self.configUtil.getProperty('NoSuchSection', 'noSuchKey'))

	def testGetToleranceDefaults(self):
		for name, tolerance in ConfigConst.DEFAULT_TOLERANCES.items():
			self.assertAlmostEqual(self.configUtil.getTolerance(name), tolerance, msg = name)

	def testConfigFileName(self):
		self.assertTrue(self.configUtil.getConfigFileName().endswith(ConfigConst.DEFAULT_CONFIG_FILE_NAME.lstrip('./')))

if __name__ == "__main__":
	unittest.main()
