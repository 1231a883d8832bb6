#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.expr.FieldExprFactory import FieldExprFactory
from crschwarzian.engine.solutions.ClassicalSchwarzian import ClassicalSchwarzian
from crschwarzian.engine.solutions.RankLemma import RankLemma
from crschwarzian.engine.solutions.RigidReduction import RigidReduction

from crschwarzian.verify.checks.BaseCheckTask import BaseCheckTask

class ClassicalCheckTask(BaseCheckTask):
	"""
	One-variable and linear-algebra facts: the rank lemma, the
	vanishing of the classical Schwarzian on Möbius maps and the
	reduction of the CR Schwarzian on rigid hypersurfaces.

	"""

	RANK_DRAWS       = 100
	MIN_DETERMINANT  = 0.1
	MIN_DENOMINATOR  = 0.2
	CLASSICAL_SUFFIX = "-classical"

	def __init__(self, name: str = ConfigConst.RANK_LEMMA_CHECK):
		super(ClassicalCheckTask, self).__init__(name = name)

		self._registerHandler(ConfigConst.RANK_LEMMA_CHECK, self._rankLemma)
		self._registerHandler(ConfigConst.CLASSICAL_SCHWARZIAN_CHECK, self._classicalSchwarzian)
		self._registerHandler(ConfigConst.EXAMPLE2_CHECK, self._example2)

	@staticmethod
	def rigidPotentials() -> list:
		z = FieldExprFactory.z(1)

		return [
			FieldExprFactory.abs2(z),
			FieldExprFactory.abs2(z) + FieldExprFactory.abs2(z) ** 2 / 4,
			FieldExprFactory.exp(FieldExprFactory.abs2(z))]

	@staticmethod
	def harmonicExponents(rng) -> list:
		"""
		Real harmonic exponents in z1 with phi_zz != 0: re(a z^2),
		re(b z^3) and re(c exp(z)) for seeded complex a, b, c.

		@param rng Generator for the coefficients.
		@return list of FieldExpr
		"""
		z = FieldExprFactory.z(1)

		return [
			FieldExprFactory.re(FieldExprFactory.makeLiteral(ClassicalCheckTask._complex(rng)) * z ** 2),
			FieldExprFactory.re(FieldExprFactory.makeLiteral(ClassicalCheckTask._complex(rng)) * z ** 3),
			FieldExprFactory.re(FieldExprFactory.makeLiteral(ClassicalCheckTask._complex(rng)) * FieldExprFactory.exp(z))]

	def _rankLemma(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		n = max(model.getN(), 2)

		for _ in range(samples):
			worst = 0.0

			for draw in range(self.RANK_DRAWS):
				u = ClassicalCheckTask._complexVector(rng, n)

				# every third pair is real-proportional, where M vanishes
				if draw % 3 == 0:
					v = rng.uniform(-2.0, 2.0) * u
				else:
					v = ClassicalCheckTask._complexVector(rng, n)

				result = RankLemma.rankLemmaLambda(u, v)

				if result['is_scalar']:
					worst = max(worst, abs(result['lambda']))

			residuals.addResidual(self.name, worst, tolerance)

	def _classicalSchwarzian(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		for _ in range(samples):
			a, b, c, d = self._mobiusCoefficients(rng)
			z          = self._pointAwayFrom(rng, c, d)
			value      = abs(ClassicalSchwarzian.classicalSchwarzian(FieldExprFactory.mobiusMap(a, b, c, d), z))

			residuals.addResidual(self.name, value, tolerance, [z.real, z.imag])

	def _example2(self, model, rng, samples: int, tolerance: float, residuals: ResidualSet):
		potentials = ClassicalCheckTask.rigidPotentials()
		ratios     = []

		for index in range(samples):
			bigPhi = potentials[index % len(potentials)]

			a, b, c, d = self._mobiusCoefficients(rng)
			z          = self._pointAwayFrom(rng, c, d)
			point      = [z.real, z.imag, rng.uniform(-self.sampleRadius, self.sampleRadius)]

			mobius  = -FieldExprFactory.log(FieldExprFactory.abs2(FieldExprFactory.linear([c]) + d)) / 2
			generic = FieldExprFactory.re(FieldExprFactory.linear([ClassicalCheckTask._complex(rng)]) * FieldExprFactory.z(1)
				+ FieldExprFactory.linear([ClassicalCheckTask._complex(rng)]))

			onMobius  = RigidReduction.example2Identity(bigPhi, mobius, point)
			onGeneric = RigidReduction.example2Identity(bigPhi, generic, point)

			if onGeneric['ratio'] is not None:
				ratios.append(onGeneric['ratio'])

			value = max(abs(onMobius['b11']), onMobius['max_mixed'], onGeneric['max_mixed'])

			residuals.addResidual(self.name, value, tolerance, point)

			# b11 follows the classical formula wherever phi_zz does not vanish
			for phi2d in ClassicalCheckTask.harmonicExponents(rng):
				result = RigidReduction.example2Identity(bigPhi, phi2d, point)
				value  = max(abs(result['b11'] - result['s_classical']), result['max_mixed'])

				residuals.addResidual(self.name + self.CLASSICAL_SUFFIX, value, tolerance, point)

		if ratios:
			spread = max(abs(r - ratios[0]) for r in ratios)

			logging.info("Rigid reduction constant b11 / S(f) = %s (spread %e over %d draws)", ratios[0], spread, len(ratios))

			residuals.addResidual(self.name, spread, tolerance)

	def _mobiusCoefficients(self, rng) -> tuple:
		while True:
			a, b, c, d = (ClassicalCheckTask._complex(rng) for _ in range(4))

			if abs(a * d - b * c) > self.MIN_DETERMINANT and abs(c) > self.MIN_DETERMINANT:
				return a, b, c, d

	def _pointAwayFrom(self, rng, c: complex, d: complex) -> complex:
		while True:
			z = complex(rng.uniform(-self.sampleRadius, self.sampleRadius), rng.uniform(-self.sampleRadius, self.sampleRadius))

			if abs(c * z + d) > self.MIN_DENOMINATOR:
				return z

	@staticmethod
	def _complex(rng) -> complex:
		return complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))

	@staticmethod
	def _complexVector(rng, n: int) -> calcLib.ndarray:
		return rng.uniform(-1.0, 1.0, n) + 1j * rng.uniform(-1.0, 1.0, n)
