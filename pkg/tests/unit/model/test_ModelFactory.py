#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import unittest

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.FieldExprException import FieldExprException
from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.data.JLParams import JLParams

from crschwarzian.engine.model.ConformalModel import ConformalModel
from crschwarzian.engine.model.HeisenbergModel import HeisenbergModel
from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.model.RigidModel import RigidModel

class ModelFactoryTest(unittest.TestCase):
	"""
	Unit tests for building models from JSON specifications.

	"""

	@classmethod
	def setUpClass(self):
		logging.basicConfig(format = '%(asctime)s:%(module)s:%(levelname)s:%(message)s', level = logging.DEBUG)
		logging.info("Testing ModelFactory class...")

	def assertSpecError(self, spec):
		with self.assertRaises(ConfigException) as ctx:
			ModelFactory.fromSpec(spec)

		self.assertEqual(ctx.exception.getInvariant(), 'model-spec')

	def testHeisenbergSpec(self):
		model = ModelFactory.fromSpec({'kind': 'Heisenberg', 'n': 3})

		self.assertIsInstance(model, HeisenbergModel)
		self.assertEqual(model.getN(), 3)
		self.assertEqual(model.getKind(), ModelKindEnum.HEISENBERG)

	def testRigidSpec(self):
		model = ModelFactory.fromSpec({'kind': 'rigid', 'n': 2, 'Phi': 'abs2(z1)'})

		self.assertIsInstance(model, RigidModel)
		self.assertEqual(model.describe(), {'kind': 'rigid', 'n': 2, 'Phi': 'abs2(z1)'})

	def testConformalPhiSpec(self):
		model = ModelFactory.fromSpec({'kind': 'conformal', 'n': 1, 'phi': 're(z1)'})

		self.assertIsInstance(model, ConformalModel)
		self.assertIsInstance(model.getRoot(), HeisenbergModel)

	def testConformalJlSpec(self):
		spec  = {'kind': 'conformal', 'n': 2, 'jl': {'kappa': [1, 0], 'mu': [[0, 0], [0, 0]], 'lambda': [0, 1]}}
		model = ModelFactory.fromSpec(spec)

		self.assertEqual(model.getJLParams(), JLParams(kappa = 1.0, mu = [0.0, 0.0], lambdaParam = 1.0j))
		self.assertIn('jl', model.describe())

	def testConformalOverRigidSpec(self):
		spec  = {'kind': 'conformal', 'phi': 're(z1)/2', 'base': {'kind': 'rigid', 'n': 1, 'Phi': 'abs2(z1)'}}
		model = ModelFactory.fromSpec(spec)

		self.assertIsInstance(model.getRoot(), RigidModel)
		self.assertEqual(model.getMaxOrder(), 1)

	def testSpecRoundTrip(self):
		spec  = {'kind': 'conformal', 'phi': 're(z1)', 'base': {'kind': 'rigid', 'n': 1, 'Phi': 'abs2(z1)'}}
		model = ModelFactory.fromSpec(spec)

		self.assertEqual(ModelFactory.fromSpec(model.describe()).describe(), model.describe())

	def testMalformedSpecs(self):
		self.assertSpecError([])
		self.assertSpecError({'kind': 'sphere', 'n': 1})
		self.assertSpecError({'kind': 'heisenberg'})
		self.assertSpecError({'kind': 'heisenberg', 'n': 0})
		self.assertSpecError({'kind': 'rigid', 'n': 1})
		self.assertSpecError({'kind': 'rigid', 'n': 1, 'Phi': 3})
		self.assertSpecError({'kind': 'conformal', 'n': 1})
		self.assertSpecError({'kind': 'conformal', 'n': 1, 'phi': 't', 'jl': {'lambda': 1}})
		self.assertSpecError({'kind': 'conformal', 'n': 2, 'phi': 't', 'base': {'kind': 'heisenberg', 'n': 1}})

	def testAllZeroJlParameters(self):
		with self.assertRaises(ConfigException) as ctx:
			ModelFactory.fromSpec({'kind': 'conformal', 'n': 1, 'jl': {'kappa': 0, 'mu': [0], 'lambda': 0}})

		self.assertEqual(ctx.exception.getInvariant(), 'non-zero-jl-parameters')

	def testBadExpression(self):
		with self.assertRaises(FieldExprException):
			ModelFactory.fromSpec({'kind': 'conformal', 'n': 1, 'phi': 're(z1'})

if __name__ == "__main__":
	unittest.main()
