#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

from crschwarzian.common.ConfigException import ConfigException

from crschwarzian.data.SuiteConfig import SuiteConfig

class SuiteConfigTest(unittest.TestCase):
	"""
	Unit tests for SuiteConfig validation.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing SuiteConfig class...")

	def assertInvariant(self, config: SuiteConfig, invariant: str):
		with self.assertRaises(ConfigException) as ctx:
			config.validate()

		self.assertEqual(ctx.exception.getInvariant(), invariant)

	def testDefaultsAreValid(self):
		config = SuiteConfig()
		config.validate()

		self.assertEqual(config.getSuiteName(), 'all')
		self.assertEqual(config.getModelSpec(), {'kind': 'heisenberg', 'n': 1})

	def testSamplesPositive(self):
		self.assertInvariant(SuiteConfig(samples = 0), 'samples-positive')
		self.assertInvariant(SuiteConfig(samples = 2.5), 'samples-positive')
		self.assertInvariant(SuiteConfig(samples = True), 'samples-positive')

	def testSeedRange(self):
		self.assertInvariant(SuiteConfig(seed = -1), 'seed-range')
		self.assertInvariant(SuiteConfig(seed = 2 ** 64), 'seed-range')

		SuiteConfig(seed = 2 ** 64 - 1).validate()

	def testSuitePresent(self):
		self.assertInvariant(SuiteConfig(suite = ''), 'suite-present')
		self.assertInvariant(SuiteConfig(suite = []), 'suite-present')

	def testToleranceRange(self):
		self.assertInvariant(SuiteConfig(tolerances = {'duality': -1.0}), 'tolerance-range')
		self.assertInvariant(SuiteConfig(tolerances = {'duality': 'abc'}), 'tolerance-range')

	def testToleranceOverride(self):
		config = SuiteConfig()
		config.setTolerance('bochner', '1e-3')

		self.assertAlmostEqual(config.getTolerance('bochner', 1.0e-6), 1.0e-3)
		self.assertAlmostEqual(config.getTolerance('duality', 1.0e-10), 1.0e-10)

if __name__ == "__main__":
	unittest.main()
