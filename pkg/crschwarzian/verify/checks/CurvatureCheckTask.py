#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.calculus.CurvatureCalculator import CurvatureCalculator
from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.solutions.JerisonLeeFamily import JerisonLeeFamily

from crschwarzian.verify.checks.BaseCheckTask import BaseCheckTask

class CurvatureCheckTask(BaseCheckTask):
	"""
	Webster curvature checks. Model-generic checks run on the configured
	model; the closed-form ones (scalar formula, constant curvature,
	pseudo-Einstein) run on conformally flat Heisenberg models of the
	same dimension. For n >= 2 the Chern-Moser check also requires the
	tensor to clear NON_SPHERICAL_FLOOR somewhere on the quartic rigid
	model, including z1 = 1.

	"""

	QUARTIC_POTENTIAL    = "abs2(z1) + abs2(z1)^2/4"
	NON_SPHERICAL_FLOOR  = 1.0e-3
	NON_SPHERICAL_SUFFIX = "-rigid"

	def __init__(self, name: str = ConfigConst.CURVATURE_SYMMETRY_CHECK):
		super(CurvatureCheckTask, self).__init__(name = name)

		self._registerHandler(ConfigConst.CURVATURE_SYMMETRY_CHECK, self._symmetry)
		self._registerHandler(ConfigConst.CURVATURE_CLOSURE_CHECK, self._closure)
		self._registerHandler(ConfigConst.CHERN_MOSER_CHECK, self._chernMoser)
		self._registerHandler(ConfigConst.SCALAR_FORMULA_CHECK, self._scalarFormula)
		self._registerHandler(ConfigConst.CONSTANT_CURVATURE_CHECK, self._constantCurvature)
		self._registerHandler(ConfigConst.PSEUDO_EINSTEIN_CHECK, self._pseudoEinstein)
		self._registerHandler(ConfigConst.TRANSFORMATION_LAWS_CHECK, self._transformationLaws)

	def _symmetry(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			point = self._randomPoint(rng, model)
			frame = model.frameDataAt(point)
			data  = CurvatureCalculator.curvatureAt(model, point)
			value = CurvatureCalculator.symmetryResidual(data, frame.getLevi(), frame.getLeviInverse())

			residuals.addResidual(self.name, value, tolerance, point)

	def _closure(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, CurvatureCalculator.closureResidual(model, point), tolerance, point)

	def _chernMoser(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		# spherical, hence asserted, only over the Heisenberg group
		spherical = model.getRoot().getKind() == ModelKindEnum.HEISENBERG
		n         = model.getN()

		for _ in range(samples):
			point = self._randomPoint(rng, model)

			residuals.addResidual(self.name, self._chernMoserPeak(model, point), tolerance, point, asserted = spherical)

		if n < 2:
			return

		# the quartic rigid model is not spherical: the peak must clear the floor
		quartic = ModelFactory.makeRigid(n, self.QUARTIC_POTENTIAL)
		points  = [calcLib.zeros(quartic.getNumVars())]
		points[0][0] = 1.0
		points.extend(self._randomPoint(rng, quartic) for _ in range(samples))

		peaks = [self._chernMoserPeak(quartic, point) for point in points]
		best  = int(calcLib.argmax(peaks))

		residuals.addResidual(self.name + self.NON_SPHERICAL_SUFFIX, max(0.0, self.NON_SPHERICAL_FLOOR - peaks[best]),
			tolerance, points[best])

	@staticmethod
	def _chernMoserPeak(model, point) -> float:
		return float(calcLib.max(calcLib.abs(CurvatureCalculator.curvatureAt(model, point).getChernMoser())))

	def _scalarFormula(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		useModel = model.getKind() == ModelKindEnum.CONFORMAL and model.getRoot().getKind() == ModelKindEnum.HEISENBERG

		for _ in range(samples):
			target = model

			if not useModel:
				target = ModelFactory.applyConformal(ModelFactory.makeHeisenberg(model.getN()), self._randomExponent(rng, model.getN()))

			point  = self._randomPoint(rng, target)
			values = CurvatureCalculator.scalarCurvatureFormula(target, point)

			residuals.addResidual(self.name, abs(values['direct'] - values['via_formula']), tolerance, point)

	def _constantCurvature(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		n = model.getN()

		for _ in range(samples):
			heisenberg, params, field, points = self._jlSetup(rng, n, 1)

			invariants = JerisonLeeFamily.jlInvariants(params, n)
			data       = CurvatureCalculator.curvatureAt(ModelFactory.applyJerisonLee(heisenberg, params), points[0])
			value      = max(
				abs(data.getEta() - invariants.getTemplateCoefficient()),
				abs(data.getScalar() - invariants.getScalar()),
				data.getFitResidual())

			residuals.addResidual(self.name, value, tolerance, points[0])

	def _pseudoEinstein(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		n = model.getN()

		for _ in range(samples):
			heisenberg, params, field, points = self._jlSetup(rng, n, 1)

			data  = CurvatureCalculator.curvatureAt(ModelFactory.applyJerisonLee(heisenberg, params), points[0])
			value = float(calcLib.max(calcLib.abs(data.getTraceFreeRicci())))

			residuals.addResidual(self.name, value, tolerance, points[0])

	def _transformationLaws(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			phi   = self._randomExponent(rng, model.getN())
			point = self._randomPoint(rng, model)
			laws  = CurvatureCalculator.conformalTransformResiduals(model, phi, point, tolerance)

			residuals.addResidual(self.name, laws.maxValue(), tolerance, point)
