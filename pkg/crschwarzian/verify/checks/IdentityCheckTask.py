#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.verify.CompositeIdentities import CompositeIdentities
from crschwarzian.verify.checks.BaseCheckTask import BaseCheckTask

class IdentityCheckTask(BaseCheckTask):
	"""
	The Bochner formula and the trace identity of the Graham-Lee
	operator on random real polynomial fields.

	"""

	TORSION_FREE_TOL = 1.0e-12

	def __init__(self, name: str = ConfigConst.BOCHNER_CHECK):
		super(IdentityCheckTask, self).__init__(name = name)

		self._registerHandler(ConfigConst.BOCHNER_CHECK, self._bochner)
		self._registerHandler(ConfigConst.GRAHAM_LEE_TRACE_CHECK, self._grahamLeeTrace)

	def _bochner(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			field = self._randomField(rng, model.getN())
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, CompositeIdentities.bochnerResidual(model, field, point), tolerance, point)

	def _grahamLeeTrace(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		asserted = model.getN() >= 2

		for _ in range(samples):
			field = self._randomField(rng, model.getN())
			point = self._randomPoint(rng, model)
			value = CompositeIdentities.grahamLeeTraceResidual(model, field, point)

			if calcLib.max(calcLib.abs(model.frameDataAt(point).getTorsion())) >= self.TORSION_FREE_TOL:
				asserted = False

			residuals.addResidual(self.name, value, tolerance, point)

		residuals.getResidual(self.name).setAsserted(asserted)
