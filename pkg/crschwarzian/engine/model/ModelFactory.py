#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

from importlib import import_module

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.data.DataUtil import DataUtil
from crschwarzian.data.JLParams import JLParams

from crschwarzian.engine.expr.FieldExpr import FieldExpr
from crschwarzian.engine.expr.FieldExprParser import FieldExprParser
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.solutions.JerisonLeeFamily import JerisonLeeFamily

class ModelFactory():
	"""
	Builds models from constructor arguments or from the JSON model
	specification block:

	  {"kind": "heisenberg" | "rigid" | "conformal", "n": int,
	   "phi": expr | "jl": {...}, "Phi": expr, "base": {...}}

	Model classes are looked up by kind and loaded on first use.

	"""

	MODEL_CLASSES = {
		ModelKindEnum.HEISENBERG: 'crschwarzian.engine.model.HeisenbergModel',
		ModelKindEnum.RIGID:      'crschwarzian.engine.model.RigidModel',
		ModelKindEnum.CONFORMAL:  'crschwarzian.engine.model.ConformalModel'
	}

	@staticmethod
	def makeHeisenberg(n: int) -> BaseModel:
		return ModelFactory._loadClass(ModelKindEnum.HEISENBERG)(n)

	@staticmethod
	def makeRigid(n: int, bigPhi) -> BaseModel:
		return ModelFactory._loadClass(ModelKindEnum.RIGID)(n, ModelFactory._asField(bigPhi, ConfigConst.MODEL_BIG_PHI_KEY))

	@staticmethod
	def applyConformal(model: BaseModel, phi, jlParams: JLParams = None) -> BaseModel:
		"""
		The model rescaled by e^{2 phi}.

		@param model Base model.
		@param phi Conformal exponent (FieldExpr, expression text or evaluable field).
		@param jlParams Parameters phi was built from, if any.
		@return ConformalModel
		"""
		if not isinstance(phi, str):
			field = phi
		else:
			field = ModelFactory._asField(phi, ConfigConst.MODEL_PHI_KEY)

		return ModelFactory._loadClass(ModelKindEnum.CONFORMAL)(model, field, jlParams)

	@staticmethod
	def applyJerisonLee(model: BaseModel, params: JLParams) -> BaseModel:
		return ModelFactory.applyConformal(model, JerisonLeeFamily.jlField(params, model.getN()), params)

	@staticmethod
	def fromSpec(spec: dict) -> BaseModel:
		"""
		Builds a model from its JSON specification (already decoded).

		@param spec The model specification dict.
		@return BaseModel
		"""
		if not isinstance(spec, dict):
			raise ConfigException("Model specification must be a JSON object", invariant = 'model-spec')

		kind = ModelKindEnum.fromName(str(spec.get(ConfigConst.MODEL_KIND_KEY, '')))

		if kind is None:
			raise ConfigException("Unknown model kind: {}".format(spec.get(ConfigConst.MODEL_KIND_KEY)), invariant = 'model-spec')

		if kind == ModelKindEnum.CONFORMAL:
			model = ModelFactory._conformalFromSpec(spec)
		else:
			n = ModelFactory._dimension(spec)

			if kind == ModelKindEnum.HEISENBERG:
				model = ModelFactory.makeHeisenberg(n)
			else:
				if ConfigConst.MODEL_BIG_PHI_KEY not in spec:
					raise ConfigException("Rigid model needs 'Phi'", invariant = 'model-spec')

				model = ModelFactory.makeRigid(n, spec[ConfigConst.MODEL_BIG_PHI_KEY])

		logging.info("Created model %s", model.getDescription())

		return model

	#
	# private methods
	#

	@staticmethod
	def _conformalFromSpec(spec: dict) -> BaseModel:
		baseSpec = spec.get(ConfigConst.MODEL_BASE_KEY)

		if baseSpec is None:
			base = ModelFactory.makeHeisenberg(ModelFactory._dimension(spec))
		else:
			base = ModelFactory.fromSpec(baseSpec)

		if ConfigConst.MODEL_N_KEY in spec and ModelFactory._dimension(spec) != base.getN():
			raise ConfigException("Conformal model n={} does not match its base n={}".format(
				spec[ConfigConst.MODEL_N_KEY], base.getN()), invariant = 'model-spec')

		hasPhi = ConfigConst.MODEL_PHI_KEY in spec
		hasJl  = ConfigConst.MODEL_JL_KEY in spec

		if hasPhi == hasJl:
			raise ConfigException("Conformal model needs exactly one of 'phi' and 'jl'", invariant = 'model-spec')

		if hasJl:
			params = DataUtil().dictToJlParams(spec[ConfigConst.MODEL_JL_KEY])
			params.validate(base.getN())

			return ModelFactory.applyJerisonLee(base, params)

		return ModelFactory.applyConformal(base, ModelFactory._asField(spec[ConfigConst.MODEL_PHI_KEY], ConfigConst.MODEL_PHI_KEY))

	@staticmethod
	def _dimension(spec: dict) -> int:
		n = spec.get(ConfigConst.MODEL_N_KEY)

		if not isinstance(n, int) or isinstance(n, bool) or n < 1:
			raise ConfigException("Model 'n' must be an integer >= 1, got {}".format(n), invariant = 'model-spec')

		return n

	@staticmethod
	def _asField(value, key: str) -> FieldExpr:
		if isinstance(value, FieldExpr):
			return value

		if not isinstance(value, str):
			raise ConfigException("Model '{}' must be an expression string".format(key), invariant = 'model-spec')

		return FieldExprParser.parse(value)

	@staticmethod
	def _loadClass(kind: ModelKindEnum):
		moduleName = ModelFactory.MODEL_CLASSES[kind]
		module     = import_module(moduleName)

		return getattr(module, moduleName.rsplit('.', 1)[1])
