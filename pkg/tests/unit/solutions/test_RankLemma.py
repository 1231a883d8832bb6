#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

import numpy as calcLib

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from crschwarzian.common.ConfigException import ConfigException

from crschwarzian.engine.solutions.RankLemma import RankLemma

components = st.builds(complex,
	st.floats(min_value = -1.0, max_value = 1.0, allow_nan = False),
	st.floats(min_value = -1.0, max_value = 1.0, allow_nan = False))

class RankLemmaTest(unittest.TestCase):
	"""
	Unit tests for the rank lemma on U V* - V U*.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing RankLemma class...")

	def testEqualVectors(self):
		result = RankLemma.rankLemmaLambda([1.0, 0.0], [1.0, 0.0])

		self.assertTrue(result['is_scalar'])
		self.assertAlmostEqual(result['lambda'], 0.0)

	def testIndependentVectors(self):
		result = RankLemma.rankLemmaLambda([1.0, 0.0], [0.0, 1.0])

		self.assertFalse(result['is_scalar'])
		self.assertIsNone(result['lambda'])

	def testDimension(self):
		with self.assertRaises(ConfigException):
			RankLemma.rankLemmaLambda([1.0], [1.0])

		with self.assertRaises(ConfigException):
			RankLemma.rankLemmaLambda([1.0, 0.0], [1.0, 0.0, 0.0])

	@settings(max_examples = 100, deadline = None)
	@given(st.lists(components, min_size = 2, max_size = 4), st.floats(min_value = -3.0, max_value = 3.0, allow_nan = False))
	def testRealMultipleIsScalar(self, u, c):
		v = [c * x for x in u]

		result = RankLemma.rankLemmaLambda(u, v)

		self.assertTrue(result['is_scalar'])
		self.assertAlmostEqual(result['lambda'], 0.0)

	@settings(max_examples = 100, deadline = None)
	@given(components, components, components, components)
	def testIndependentPairIsNotScalar(self, u1, u2, v1, v2):
		assume(abs(u1 * v2 - u2 * v1) > 1.0e-2)

		self.assertFalse(RankLemma.rankLemmaLambda([u1, u2], [v1, v2])['is_scalar'])

if __name__ == "__main__":
	unittest.main()
