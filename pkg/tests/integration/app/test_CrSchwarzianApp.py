#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import io
import json
import logging
import os
import tempfile
import unittest

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.app.CrSchwarzianApp import CrSchwarzianApp, buildArgParser

class CrSchwarzianAppTest(unittest.TestCase):
	"""
	Runs the command-line surface in-process and checks output and
	exit codes.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing CrSchwarzianApp class...")

		self.argParser = buildArgParser()
		self.app       = CrSchwarzianApp()
		self.app.startApp()

	@classmethod
	def tearDownClass(self):
		self.app.stopApp(0)

	def _run(self, *argv) -> tuple:
		out  = io.StringIO()
		code = self.app.runCommand(self.argParser.parse_args(list(argv)), out)

		return code, out.getvalue()

	def testEvaluateFrame(self):
		code, text = self._run('evaluate', 'frame', '--n', '2', '--point', '1,0,0,0,0', '--json')

		self.assertEqual(code, ConfigConst.EXIT_OK)

		data = json.loads(text)

		self.assertEqual(data['n'], 2)
		self.assertEqual(len(data['levi']), 2)
		self.assertEqual(data['frame_tag'], 'theta')

	def testEvaluateSchwarzianTable(self):
		code, text = self._run('schwarzian', '--phi', 're(z1)', '--point', '0.1,0.2,0.3')

		self.assertEqual(code, ConfigConst.EXIT_OK)
		self.assertIn('B11 = -1', text)

	def testEvaluateCurvatureOfSphere(self):
		code, text = self._run('evaluate', 'curvature', '--model', 'conformal', '--n', '2',
			'--jl', '{"kappa": 1, "mu": [0, 0], "lambda": "1i"}', '--point', '0.1,0,0,0.1,0.2', '--json')

		self.assertEqual(code, ConfigConst.EXIT_OK)
		self.assertAlmostEqual(json.loads(text)['scalar'], 24.0, places = 5)

	def testEvaluateOperators(self):
		code, text = self._run('evaluate', 'operators', '--field', 'abs2(z1)', '--point', '0,0,0', '--json')

		self.assertEqual(code, ConfigConst.EXIT_OK)
		self.assertIn('sublaplacian', json.loads(text))

	def testMissingField(self):
		code, _ = self._run('evaluate', 'schwarzian', '--point', '0,0,0')

		self.assertEqual(code, ConfigConst.EXIT_CONFIG_ERROR)

	def testMalformedField(self):
		code, _ = self._run('evaluate', 'schwarzian', '--field', 're(', '--point', '0,0,0')

		self.assertEqual(code, ConfigConst.EXIT_CONFIG_ERROR)

	def testPointArity(self):
		code, _ = self._run('evaluate', 'frame', '--n', '2', '--point', '0,0,0')

		self.assertEqual(code, ConfigConst.EXIT_CONFIG_ERROR)

	def testSingularExponent(self):
		code, _ = self._run('evaluate', 'frame', '--model', 'conformal', '--phi', 'log(abs2(z1))', '--point', '0,0,0')

		self.assertEqual(code, ConfigConst.EXIT_DOMAIN_ERROR)

	def testVerifyWritesReport(self):
		with tempfile.TemporaryDirectory() as tmpDir:
			path = os.path.join(tmpDir, 'report.json')

			code, _ = self._run('verify', '--suite', 'rank-lemma,classical-schwarzian', '--samples', '2', '--seed', '1',
				'--out', path)

			self.assertEqual(code, ConfigConst.EXIT_OK)

			with open(path, 'r') as reportFile:
				report = json.load(reportFile)

		self.assertEqual(report['version'], ConfigConst.ENGINE_VERSION)
		self.assertEqual(report['seed'], 1)
		self.assertEqual([c['name'] for c in report['checks']],
			[ConfigConst.RANK_LEMMA_CHECK, ConfigConst.CLASSICAL_SCHWARZIAN_CHECK])
		self.assertTrue(all(c['pass'] for c in report['checks']))
		self.assertIsInstance(report['wall_ms'], int)

	def testVerifyFailingCheck(self):
		code, text = self._run('verify', '--suite', 'classical-schwarzian', '--samples', '1', '--tol', 'classical-schwarzian=0')

		self.assertEqual(code, ConfigConst.EXIT_CHECK_FAILURE)
		self.assertIn('FAIL', text)

	def testVerifyUnknownSuite(self):
		code, _ = self._run('verify', '--suite', 'no-such-suite', '--samples', '1')

		self.assertEqual(code, ConfigConst.EXIT_CONFIG_ERROR)

	def testVerifyBadTolerance(self):
		code, _ = self._run('verify', '--suite', 'classical', '--tol', 'classical-schwarzian')

		self.assertEqual(code, ConfigConst.EXIT_CONFIG_ERROR)

	def testVerifySuiteFile(self):
		suite = {'model': {'kind': 'heisenberg', 'n': 1}, 'suite': ['witness'], 'samples': 2, 'seed': 8}

		with tempfile.TemporaryDirectory() as tmpDir:
			path = os.path.join(tmpDir, 'suite.json')

			with open(path, 'w') as suiteFile:
				json.dump(suite, suiteFile)

			code, text = self._run('verify', '--suite-file', path, '--json')

		self.assertEqual(code, ConfigConst.EXIT_OK)
		self.assertEqual(json.loads(text)['suite'], 'witness')

	def testWitness(self):
		code, text = self._run('witness', '--n', '2', '--point', '0,0,0,0,0', '--omega', '1,0', '--json')

		self.assertEqual(code, ConfigConst.EXIT_OK)

		params = json.loads(text)

		self.assertEqual(params['kappa'], [0.0, 0.0])
		self.assertEqual(params['mu'], [[-2.0, 0.0], [0.0, 0.0]])
		self.assertEqual(params['lambda'], [1.0, 0.0])

	def testWitnessTable(self):
		code, text = self._run('witness', '--n', '1', '--point', '0.1,0.2,0.3', '--omega', '0.5-1j')

		self.assertEqual(code, ConfigConst.EXIT_OK)
		self.assertIn('gradient residual', text)

	def testWitnessBadOmega(self):
		code, _ = self._run('witness', '--n', '2', '--omega', '1')

		self.assertEqual(code, ConfigConst.EXIT_CONFIG_ERROR)

if __name__ == "__main__":
	unittest.main()
