#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

from crschwarzian.common.DomainException import DomainException

from crschwarzian.engine.expr.FieldExprParser import FieldExprParser
from crschwarzian.engine.solutions.RigidReduction import RigidReduction

class RigidReductionTest(unittest.TestCase):
	"""
	Unit tests for the reduction of the CR Schwarzian on rigid
	hypersurfaces to the classical one.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing RigidReduction class...")

	def testLinearExponent(self):
		result = RigidReduction.example2Identity("abs2(z1)", FieldExprParser.parse("re(z1)"), [0.2, 0.1, 0.3])

		self.assertAlmostEqual(result['b11'], -1.0)
		self.assertAlmostEqual(result['s_classical'], -1.0)
		self.assertAlmostEqual(result['ratio'], 0.5)
		self.assertAlmostEqual(result['max_mixed'], 0.0)

	def testCurvedPotentialSameConstant(self):
		phi2d  = FieldExprParser.parse("re(z1)")
		flat   = RigidReduction.example2Identity("abs2(z1)", phi2d, [1.0, 0.0, 0.0])
		curved = RigidReduction.example2Identity("abs2(z1) + abs2(z1)^2/4", phi2d, [1.0, 0.0, 0.0])

		self.assertAlmostEqual(curved['b11'], flat['b11'])
		self.assertAlmostEqual(curved['ratio'], flat['ratio'])
		self.assertLess(curved['max_mixed'], 1.0e-9)

	def testMobiusDatumVanishes(self):
		phi2d  = FieldExprParser.parse("-log(abs2(2.0*z1 + 1.0))/2")
		result = RigidReduction.example2Identity("abs2(z1) + abs2(z1)^2/4", phi2d, [0.3, -0.2, 0.1])

		self.assertLess(abs(result['b11']), 1.0e-9)
		self.assertIsNone(result['ratio'])

	def testNonLinearExponentsFollowClassicalFormula(self):
		point = [0.3, -0.2, 0.1]

		for bigPhi in ("abs2(z1)", "abs2(z1) + abs2(z1)^2/4", "exp(abs2(z1))"):
			for phi in ("re((0.5+0.2i)*z1^2)", "re((-0.3+0.7i)*z1^3)", "re((0.4-0.6i)*exp(z1))"):
				result = RigidReduction.example2Identity(bigPhi, FieldExprParser.parse(phi), point)

				self.assertGreater(abs(result['s_classical']), 1.0e-3)
				self.assertLess(abs(result['b11'] - result['s_classical']), 1.0e-9, msg = "{} over {}".format(phi, bigPhi))
				self.assertAlmostEqual(result['ratio'].real, 0.5)
				self.assertLess(result['max_mixed'], 1.0e-9)

	def testQuadraticExponentClosedForm(self):
		# phi = re(z^2): phi_z = z, phi_zz = 1, so 2 (phi_zz - 2 phi_z^2) = 2 - 4 z^2
		z      = complex(0.3, -0.2)
		result = RigidReduction.example2Identity("abs2(z1)", FieldExprParser.parse("re(z1^2)"), [z.real, z.imag, 0.0])

		self.assertAlmostEqual(result['s_classical'], 2.0 - 4.0 * z * z)
		self.assertAlmostEqual(result['b11'], 2.0 - 4.0 * z * z)

	def testRejectsNonHarmonic(self):
		with self.assertRaises(DomainException) as ctx:
			RigidReduction.example2Identity("abs2(z1)", FieldExprParser.parse("abs2(z1)"), [0.2, 0.1, 0.3])

		self.assertEqual(ctx.exception.getInvariant(), 'harmonic-exponent')

	def testNormalizedModel(self):
		model = RigidReduction.normalizedModel("abs2(z1) + abs2(z1)^2/4")

		self.assertEqual(model.getKind().value, 'conformal')
		self.assertEqual(model.getRoot().getKind().value, 'rigid')

if __name__ == "__main__":
	unittest.main()
