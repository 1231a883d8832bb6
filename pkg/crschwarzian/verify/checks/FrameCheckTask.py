#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.FrameData import FrameData
from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.calculus.CurvatureCalculator import CurvatureCalculator
from crschwarzian.engine.model.ModelFactory import ModelFactory

from crschwarzian.verify.checks.BaseCheckTask import BaseCheckTask

class FrameCheckTask(BaseCheckTask):
	"""
	Frame-level consistency of a model: coframe/frame duality, the
	contact structure equation, connection data against Lie brackets,
	and the round trip theta -> e^{2 phi} theta -> theta.

	"""

	def __init__(self, name: str = ConfigConst.DUALITY_CHECK):
		super(FrameCheckTask, self).__init__(name = name)

		self._registerHandler(ConfigConst.DUALITY_CHECK, self._duality)
		self._registerHandler(ConfigConst.STRUCTURE_EQUATION_CHECK, self._structureEquation)
		self._registerHandler(ConfigConst.BRACKET_CONNECTION_CHECK, self._bracketConnection)
		self._registerHandler(ConfigConst.CONFORMAL_INVOLUTION_CHECK, self._conformalInvolution)

	def _duality(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			point   = self._randomPoint(rng, model)
			pairing = model.frameDataAt(point).pairing()
			value   = float(calcLib.max(calcLib.abs(pairing - calcLib.eye(pairing.shape[0]))))

			residuals.addResidual(self.name, value, tolerance, point)

	def _structureEquation(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, CurvatureCalculator.contactResidual(model, point), tolerance, point)

	def _bracketConnection(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, CurvatureCalculator.bracketResidual(model, point), tolerance, point)

	def _conformalInvolution(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			phi   = self._randomExponent(rng, model.getN())
			point = self._randomPoint(rng, model)
			back  = ModelFactory.applyConformal(ModelFactory.applyConformal(model, phi), -phi)

			residuals.addResidual(self.name, FrameCheckTask._frameDistance(model.frameDataAt(point), back.frameDataAt(point)),
				tolerance, point)

	@staticmethod
	def _frameDistance(first: FrameData, second: FrameData) -> float:
		pairs = [
			(first.getLevi(), second.getLevi()),
			(first.getChristoffels(), second.getChristoffels()),
			(first.getTorsion(), second.getTorsion()),
			(first.getFrame(), second.getFrame()),
			(first.getCoframe(), second.getCoframe())]

		return float(max(calcLib.max(calcLib.abs(a - b)) for a, b in pairs))
