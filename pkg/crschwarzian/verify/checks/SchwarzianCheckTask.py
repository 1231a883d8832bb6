#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.calculus.CurvatureCalculator import CurvatureCalculator
from crschwarzian.engine.calculus.SchwarzianCalculator import SchwarzianCalculator

from crschwarzian.verify.checks.BaseCheckTask import BaseCheckTask

class SchwarzianCheckTask(BaseCheckTask):
	"""
	Algebraic and transformation properties of the CR Schwarzian on
	random exponents over the configured model.

	"""

	def __init__(self, name: str = ConfigConst.SCHWARZIAN_SYMMETRY_CHECK):
		super(SchwarzianCheckTask, self).__init__(name = name)

		self._registerHandler(ConfigConst.SCHWARZIAN_SYMMETRY_CHECK, self._symmetry)
		self._registerHandler(ConfigConst.ADDITIVITY_CHECK, self._additivity)
		self._registerHandler(ConfigConst.TORSION_LINK_CHECK, self._torsionLink)
		self._registerHandler(ConfigConst.SUBLAPLACIAN_LAW_CHECK, self._sublaplacianLaw)

	def _symmetry(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			phi   = self._randomExponent(rng, model.getN())
			point = self._randomPoint(rng, model)
			data  = SchwarzianCalculator.schwarzianAt(model, phi, point)

			residuals.addResidual(self.name, SchwarzianCalculator.symmetryResidual(data), tolerance, point)

	def _additivity(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			phi   = self._randomExponent(rng, model.getN())
			sigma = self._randomExponent(rng, model.getN())
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, SchwarzianCalculator.additivityResidual(model, phi, sigma, point), tolerance, point)

	def _torsionLink(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			phi   = self._randomExponent(rng, model.getN())
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, SchwarzianCalculator.torsionLinkResidual(model, phi, point), tolerance, point)

	def _sublaplacianLaw(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			phi   = self._randomExponent(rng, model.getN())
			sigma = self._randomField(rng, model.getN())
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, CurvatureCalculator.sublaplacianLawResidual(model, phi, sigma, point), tolerance, point)
