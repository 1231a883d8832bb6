#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.calculus.CommutationCalculator import CommutationCalculator

from crschwarzian.verify.checks.BaseCheckTask import BaseCheckTask

class CommutationCheckTask(BaseCheckTask):
	"""
	The six commutation relations of third order covariant derivatives
	on random polynomial fields; the check reports the worst relation.

	"""

	def __init__(self, name: str = ConfigConst.COMMUTATION_CHECK):
		super(CommutationCheckTask, self).__init__(name = name)

		self._registerHandler(ConfigConst.COMMUTATION_CHECK, self._commutation)

	def _commutation(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			field = self._randomField(rng, model.getN())
			point = self._randomPoint(rng, model)
			parts = CommutationCalculator.commutationResiduals(model, field, point, tolerance)

			for data in parts.getResiduals():
				logging.debug("Commutation %s for %s: %e", data.getName(), str(field), data.getValue())

			residuals.addResidual(self.name, parts.maxValue(), tolerance, point)
