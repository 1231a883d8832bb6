#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.expr.FieldExprFactory import FieldExprFactory
from crschwarzian.engine.jet.JetOps import JetOps

from crschwarzian.verify.checks.BaseCheckTask import BaseCheckTask

class SubstrateCheckTask(BaseCheckTask):
	"""
	Jets against central finite differences, for every real coordinate,
	on random smooth fields (polynomial plus exponential of a polynomial).

	"""

	def __init__(self, name: str = ConfigConst.JET_FD_CHECK):
		super(SubstrateCheckTask, self).__init__(name = name)

		self._registerHandler(ConfigConst.JET_FD_CHECK, self._firstOrder)
		self._registerHandler(ConfigConst.JET_FD_SECOND_CHECK, self._secondOrder)

	def _firstOrder(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		self._crosscheck(model, rng, samples, tolerance, residuals, 1)

	def _secondOrder(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		self._crosscheck(model, rng, samples, tolerance, residuals, 2)

	def _crosscheck(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet, order: int):
		n = model.getN()

		for _ in range(samples):
			field = self._randomField(rng, n) + FieldExprFactory.exp(self._randomExponent(rng, n))
			point = self._randomPoint(rng, model)
			worst = max(JetOps.fdCrosscheck(field, point, k, order) for k in range(model.getNumVars()))

			residuals.addResidual(self.name, worst, tolerance, point)
