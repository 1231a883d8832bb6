#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.ConfigUtil import ConfigUtil
from crschwarzian.common.DomainException import DomainException
from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.expr.FieldExpr import FieldExpr
from crschwarzian.engine.expr.FieldExprFactory import FieldExprFactory
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.solutions.JerisonLeeFamily import JerisonLeeFamily

class BaseCheckTask():
	"""
	Base class of the verification checks. A task serves one or more
	named checks of a common area; sub-classes register one handler
	per check name:

	  handler(model, rng, samples, tolerance, residuals)

	Handlers draw their random inputs from 'rng' only, so a check is a
	pure function of (model, seed, samples, tolerance).

	"""

	FIELD_DEGREE    = 3
	FIELD_TERMS     = 4
	FIELD_SCALE     = 0.5
	EXPONENT_DEGREE = 2
	EXPONENT_TERMS  = 3
	EXPONENT_SCALE  = 0.3
	MAX_POINT_TRIES = 1000

	def __init__(self, name: str = ConfigConst.NOT_SET):
		"""
		Constructor.

		@param name The check this task instance runs.
		"""
		self.name     = name
		self.handlers = {}

		configUtil = ConfigUtil()

		self.sampleRadius = configUtil.getFloat(
			section = ConfigConst.ENGINE, key = ConfigConst.SAMPLE_RADIUS_KEY, defaultVal = ConfigConst.DEFAULT_SAMPLE_RADIUS)
		self.minAbsG      = configUtil.getFloat(
			section = ConfigConst.VERIFICATION, key = ConfigConst.JL_MIN_ABS_G_KEY, defaultVal = ConfigConst.DEFAULT_JL_MIN_ABS_G)

		if self.sampleRadius <= 0.0:
			self.sampleRadius = ConfigConst.DEFAULT_SAMPLE_RADIUS

	def getName(self) -> str:
		return self.name

	def getCheckNames(self) -> list:
		return list(self.handlers.keys())

	def getDefaultTolerance(self) -> float:
		return ConfigConst.DEFAULT_TOLERANCES.get(self.name, 0.0)

	def runCheck(self, model: BaseModel, rng: calcLib.random.Generator, samples: int, tolerance: float = None) -> ResidualSet:
		"""
		Runs this task's check.

		@param model The model under test.
		@param rng Generator seeded for this check.
		@param samples Number of random draws, >= 1.
		@param tolerance Pass threshold; the check default if None.
		@return ResidualSet
		"""
		handler = self.handlers.get(self.name)

		if handler is None:
			raise ConfigException("Task {} does not run check '{}'".format(self.__class__.__name__, self.name),
				invariant = 'check-known')

		if tolerance is None:
			tolerance = self.getDefaultTolerance()

		residuals = ResidualSet()

		handler(model, rng, samples, tolerance, residuals)

		logging.debug("Check %s on %s: max residual %e", self.name, model.getDescription(), residuals.maxValue())

		return residuals

	#
	# helpers for sub-classes
	#

	def _registerHandler(self, checkName: str, handler):
		self.handlers[checkName] = handler

	def _randomField(self, rng: calcLib.random.Generator, n: int) -> FieldExpr:
		return FieldExprFactory.randomPolynomial(rng, n, degree = self.FIELD_DEGREE, terms = self.FIELD_TERMS, scale = self.FIELD_SCALE)

	def _randomExponent(self, rng: calcLib.random.Generator, n: int) -> FieldExpr:
		return FieldExprFactory.randomPolynomial(rng, n, degree = self.EXPONENT_DEGREE, terms = self.EXPONENT_TERMS,
			scale = self.EXPONENT_SCALE)

	def _randomPoint(self, rng: calcLib.random.Generator, model: BaseModel) -> calcLib.ndarray:
		"""
		Uniform point in the sample box, away from the zeros of any
		Jerison-Lee function in the model's conformal stack.

		"""
		params = BaseCheckTask._jlParamsOf(model)

		for _ in range(self.MAX_POINT_TRIES):
			point = rng.uniform(-self.sampleRadius, self.sampleRadius, model.getNumVars())

			if all(abs(p.gValue(point)) > self.minAbsG for p in params):
				return point

		raise DomainException("No sample point with |G| > {} on {}".format(self.minAbsG, model.getDescription()),
			invariant = 'jl-non-vanishing')

	def _jlSetup(self, rng: calcLib.random.Generator, n: int, count: int) -> tuple:
		"""
		A random Jerison-Lee draw on the Heisenberg group and 'count'
		admissible points for it.

		@return (heisenberg model, params, field, points)
		"""
		heisenberg = ModelFactory.makeHeisenberg(n)
		params     = JerisonLeeFamily.randomParams(rng, n)
		field      = JerisonLeeFamily.jlField(params, n)
		points     = JerisonLeeFamily.samplePoints(rng, params, n, count, self.sampleRadius, self.minAbsG)

		return heisenberg, params, field, points

	@staticmethod
	def _jlParamsOf(model: BaseModel) -> list:
		params = []

		while model.getKind() == ModelKindEnum.CONFORMAL:
			if model.getJLParams() is not None:
				params.append(model.getJLParams())

			model = model.getBase()

		return params
