#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import json
import logging
import unittest

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException

from crschwarzian.data.DataUtil import DataUtil
from crschwarzian.data.FrameData import FrameData
from crschwarzian.data.JLParams import JLParams
from crschwarzian.data.Report import Report
from crschwarzian.data.SuiteConfig import SuiteConfig

class DataUtilTest(unittest.TestCase):
	"""
	Unit tests for the JSON conversions in DataUtil.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing DataUtil class...")

		self.dataUtil = DataUtil()

	def setUp(self):
		logging.info("================================================")
		logging.info("DataUtil test execution...")
		logging.info("================================================")

	def tearDown(self):
		pass

	def testNullInputs(self):
		self.assertEqual(self.dataUtil.frameDataToJson(None), "")
		self.assertEqual(self.dataUtil.reportToJson(None), "")
		self.assertIsNone(self.dataUtil.jsonToSuiteConfig(None))
		self.assertIsNone(self.dataUtil.jsonToJlParams(""))

	def testParseComplex(self):
		self.assertEqual(DataUtil.parseComplex([1.0, -2.0]), complex(1.0, -2.0))
		self.assertEqual(DataUtil.parseComplex(3), complex(3.0, 0.0))
		self.assertEqual(DataUtil.parseComplex("1 - 2i"), complex(1.0, -2.0))

		for bad in ([1.0], "abc", None, True):
			with self.assertRaises(ConfigException):
				DataUtil.parseComplex(bad)

	def testFrameDataToJson(self):
		data = FrameData(name = "heisenberg(n=1)", n = 1, point = [0.1, 0.2, 0.3], frameTag = "heisenberg")
		data.setTorsion([[1.0j]])

		obj = json.loads(self.dataUtil.frameDataToJson(data))

		self.assertEqual(obj['name'], "heisenberg(n=1)")
		self.assertEqual(obj['n'], 1)
		self.assertEqual(obj['point'], [0.1, 0.2, 0.3])
		self.assertEqual(obj['levi'], [[[1.0, 0.0]]])
		self.assertEqual(obj['torsion'], [[[0.0, 1.0]]])
		self.assertIsNone(obj['conformal_jet'])

	def testJlParamsConversions(self):
		params = JLParams(kappa = 1.0, mu = [2.0, 1.0j], lambdaParam = 1.0j, c = 0.5)

		jsonData = self.dataUtil.jlParamsToJson(params)
		params2  = self.dataUtil.jsonToJlParams(jsonData)

		logging.info("Sample JSON: %s", jsonData)

		self.assertEqual(params, params2)
		self.assertEqual(json.loads(jsonData)[ConfigConst.JL_MU_KEY], [[2.0, 0.0], [0.0, 1.0]])

	def testDictToJlParamsRejectsMalformed(self):
		with self.assertRaises(ConfigException):
			self.dataUtil.dictToJlParams({ConfigConst.JL_MU_KEY: 3})

		with self.assertRaises(ConfigException):
			self.dataUtil.dictToJlParams({ConfigConst.JL_C_KEY: "x"})

		with self.assertRaises(ConfigException):
			self.dataUtil.dictToJlParams([1, 2])

	def testSuiteConfigConversions(self):
		config = SuiteConfig(modelSpec = {'kind': 'heisenberg', 'n': 2}, suite = ['duality', 'bochner'],
			samples = 3, seed = 11, tolerances = {'bochner': 1.0e-4})

		config2 = self.dataUtil.jsonToSuiteConfig(self.dataUtil.suiteConfigToJson(config))

		self.assertEqual(config2.getModelSpec(), {'kind': 'heisenberg', 'n': 2})
		self.assertEqual(config2.getSuite(), ['duality', 'bochner'])
		self.assertEqual(config2.getSuiteName(), 'duality,bochner')
		self.assertEqual(config2.getSamples(), 3)
		self.assertEqual(config2.getSeed(), 11)
		self.assertAlmostEqual(config2.getTolerance('bochner', 1.0), 1.0e-4)
		self.assertIsNone(config2.getOutputPath())

	def testSuiteConfigDefaults(self):
		config = self.dataUtil.jsonToSuiteConfig('{"suite": "frame"}')

		self.assertEqual(config.getSamples(), ConfigConst.DEFAULT_SAMPLES)
		self.assertEqual(config.getSeed(), ConfigConst.DEFAULT_SEED)
		self.assertEqual(config.getModelSpec()[ConfigConst.MODEL_KIND_KEY], ConfigConst.HEISENBERG_MODEL)

	def testMalformedJson(self):
		with self.assertRaises(ConfigException) as ctx:
			self.dataUtil.jsonToSuiteConfig('{"suite": ')

		self.assertEqual(ctx.exception.getInvariant(), 'json-format')

	def testReportToJson(self):
		report = Report(model = {'kind': 'heisenberg', 'n': 1}, suite = 'substrate', seed = 1, samples = 2)

		report.getResidualSet().addResidual('duality', 1.0e-14, 1.0e-10, point = [0.0, 0.0, 0.0])
		report.getResidualSet().addResidual('bochner', float('nan'), 1.0e-6)
		report.getResidualSet().addResidual('example2', 0.5, 1.0e-9, asserted = False)
		report.setWallMs(12.7)

		obj = json.loads(self.dataUtil.reportToJson(report))

		self.assertEqual(obj[ConfigConst.REPORT_VERSION_KEY], ConfigConst.ENGINE_VERSION)
		self.assertEqual(obj[ConfigConst.REPORT_WALL_MS_KEY], 12)
		self.assertEqual([c['name'] for c in obj['checks']], ['duality', 'bochner', 'example2'])

		checks = {c['name']: c for c in obj['checks']}

		self.assertTrue(checks['duality']['pass'])
		self.assertEqual(checks['duality']['worst_point'], [0.0, 0.0, 0.0])
		self.assertIsNone(checks['bochner']['max_residual'])
		self.assertFalse(checks['bochner']['pass'])
		self.assertFalse(checks['example2']['asserted'])

		self.assertFalse(report.isPassing())
		self.assertEqual(report.getFailedChecks(), ['bochner'])

	def testEncodeToUtf8(self):
		data = self.dataUtil.jlParamsToJson(JLParams())
		utf8 = DataUtil(encodeToUtf8 = True).jlParamsToJson(JLParams())

		self.assertIsInstance(utf8, bytes)
		self.assertEqual(json.loads(utf8), json.loads(data))

if __name__ == "__main__":
	unittest.main()
