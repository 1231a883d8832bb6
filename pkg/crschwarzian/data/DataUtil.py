#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import json
import logging
import math
import numbers

from json import JSONEncoder

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException

from crschwarzian.data.CurvatureData import CurvatureData
from crschwarzian.data.FrameData import FrameData
from crschwarzian.data.JLParams import JLParams
from crschwarzian.data.OperatorValues import OperatorValues
from crschwarzian.data.Report import Report
from crschwarzian.data.ResidualSet import ResidualSet
from crschwarzian.data.SchwarzianData import SchwarzianData
from crschwarzian.data.SuiteConfig import SuiteConfig

from crschwarzian.engine.jet.Jet import Jet

class DataUtil():
	"""
	Converts the engine's data containers to and from JSON. Complex
	numbers are written as [re, im] pairs and arrays as nested lists.

	"""

	def __init__(self, encodeToUtf8 = False):
		self.encodeToUtf8 = encodeToUtf8

		logging.debug("Created DataUtil instance.")

	#
	# value helpers
	#

	@staticmethod
	def parseComplex(value, what: str = 'value') -> complex:
		"""
		Accepts [re, im], a number, or a string Python's complex() takes
		(with 'i' allowed for 'j').

		"""
		try:
			if isinstance(value, (list, tuple)):
				if len(value) != 2:
					raise ValueError("expected [re, im]")

				return complex(float(value[0]), float(value[1]))

			if isinstance(value, numbers.Number) and not isinstance(value, bool):
				return complex(value)

			if isinstance(value, str):
				return complex(value.strip().replace(' ', '').replace('i', 'j'))
		except (TypeError, ValueError) as e:
			raise ConfigException("Malformed complex {}: {} ({})".format(what, value, e), invariant = 'complex-format') from None

		raise ConfigException("Malformed complex {}: {}".format(what, value), invariant = 'complex-format')

	@staticmethod
	def complexToPair(value: complex) -> list:
		value = complex(value)

		return [value.real, value.imag]

	#
	# geometry data
	#

	def frameDataToJson(self, data: FrameData = None) -> str:
		if not data:
			logging.debug("FrameData is null. Returning empty string.")
			return ""

		return self._generateJsonData(self._baseDict(data, {
			'levi': data.getLevi(),
			'christoffels': data.getChristoffels(),
			'torsion': data.getTorsion(),
			'frame': data.getFrame(),
			'coframe': data.getCoframe(),
			'conformal_jet': data.getConformalJet()}))

	def schwarzianDataToJson(self, data: SchwarzianData = None) -> str:
		if not data:
			logging.debug("SchwarzianData is null. Returning empty string.")
			return ""

		return self._generateJsonData(self._baseDict(data, {
			'b_holo': data.getBHolo(),
			'b_mixed': data.getBMixed(),
			'trace': data.getTrace()}))

	def curvatureDataToJson(self, data: CurvatureData = None) -> str:
		if not data:
			logging.debug("CurvatureData is null. Returning empty string.")
			return ""

		return self._generateJsonData(self._baseDict(data, {
			'riem': data.getRiem(),
			'ricci': data.getRicci(),
			'scalar': data.getScalar(),
			'schouten': data.getSchouten(),
			'trace_free_ricci': data.getTraceFreeRicci(),
			'chern_moser': data.getChernMoser(),
			'torsion': data.getTorsion(),
			'eta': data.getEta(),
			'fit_residual': data.getFitResidual()}))

	def operatorValuesToJson(self, data: OperatorValues = None) -> str:
		if not data:
			logging.debug("OperatorValues is null. Returning empty string.")
			return ""

		return self._generateJsonData(self._baseDict(data, {
			'sublaplacian': data.getSublaplacian(),
			'kohn': data.getKohn(),
			'graham_lee': data.getGrahamLee(),
			'reeb': data.getReeb(),
			'dbar_norm2': data.getDbarNorm2()}))

	#
	# Jerison-Lee parameters
	#

	def jlParamsToDict(self, params: JLParams) -> dict:
		return {
			ConfigConst.JL_KAPPA_KEY: DataUtil.complexToPair(params.getKappa()),
			ConfigConst.JL_MU_KEY: [DataUtil.complexToPair(m) for m in params.getMu()],
			ConfigConst.JL_LAMBDA_KEY: DataUtil.complexToPair(params.getLambda()),
			ConfigConst.JL_C_KEY: params.getC()}

	def jlParamsToJson(self, params: JLParams = None) -> str:
		if not params:
			logging.debug("JLParams is null. Returning empty string.")
			return ""

		return self._generateJsonData(self.jlParamsToDict(params))

	def dictToJlParams(self, jsonStruct: dict) -> JLParams:
		if not isinstance(jsonStruct, dict):
			raise ConfigException("Jerison-Lee block must be a JSON object", invariant = 'jl-format')

		mu = jsonStruct.get(ConfigConst.JL_MU_KEY, [])

		if not isinstance(mu, list):
			raise ConfigException("Jerison-Lee mu must be a list of [re, im] pairs", invariant = 'jl-format')

		try:
			c = float(jsonStruct.get(ConfigConst.JL_C_KEY, 0.0))
		except (TypeError, ValueError):
			raise ConfigException("Jerison-Lee C must be real", invariant = 'jl-format') from None

		return JLParams(
			kappa = DataUtil.parseComplex(jsonStruct.get(ConfigConst.JL_KAPPA_KEY, 0.0), 'kappa'),
			mu = [DataUtil.parseComplex(m, 'mu') for m in mu],
			lambdaParam = DataUtil.parseComplex(jsonStruct.get(ConfigConst.JL_LAMBDA_KEY, 0.0), 'lambda'),
			c = c)

	def jsonToJlParams(self, jsonData: str = None) -> JLParams:
		if not jsonData:
			logging.warning("JSON data is empty or null. Returning null.")
			return None

		return self.dictToJlParams(self._loadDictionary(jsonData))

	#
	# suite configuration and reports
	#

	def jsonToSuiteConfig(self, jsonData: str = None) -> SuiteConfig:
		if not jsonData:
			logging.warning("JSON data is empty or null. Returning null.")
			return None

		return self.dictToSuiteConfig(self._loadDictionary(jsonData))

	def dictToSuiteConfig(self, jsonStruct: dict) -> SuiteConfig:
		if not isinstance(jsonStruct, dict):
			raise ConfigException("Suite configuration must be a JSON object", invariant = 'suite-format')

		known = (ConfigConst.SUITE_MODEL_KEY, ConfigConst.SUITE_NAME_KEY, ConfigConst.SUITE_SAMPLES_KEY,
			ConfigConst.SUITE_SEED_KEY, ConfigConst.SUITE_TOLERANCE_KEY, ConfigConst.SUITE_OUTPUT_KEY)

		for key in jsonStruct:
			if key not in known:
				logging.warning("JSON data contains key not mappable to SuiteConfig: %s", key)

		tolerances = jsonStruct.get(ConfigConst.SUITE_TOLERANCE_KEY, {})

		if not isinstance(tolerances, dict):
			raise ConfigException("tolerances must be a JSON object", invariant = 'suite-format')

		config = SuiteConfig(
			modelSpec = jsonStruct.get(ConfigConst.SUITE_MODEL_KEY),
			suite = jsonStruct.get(ConfigConst.SUITE_NAME_KEY, ConfigConst.ALL_SUITE),
			samples = jsonStruct.get(ConfigConst.SUITE_SAMPLES_KEY, ConfigConst.DEFAULT_SAMPLES),
			seed = jsonStruct.get(ConfigConst.SUITE_SEED_KEY, ConfigConst.DEFAULT_SEED),
			tolerances = tolerances,
			outputPath = jsonStruct.get(ConfigConst.SUITE_OUTPUT_KEY))

		config.validate()

		return config

	def suiteConfigToJson(self, config: SuiteConfig = None) -> str:
		if not config:
			logging.debug("SuiteConfig is null. Returning empty string.")
			return ""

		return self._generateJsonData({
			ConfigConst.SUITE_MODEL_KEY: config.getModelSpec(),
			ConfigConst.SUITE_NAME_KEY: config.getSuite(),
			ConfigConst.SUITE_SAMPLES_KEY: config.getSamples(),
			ConfigConst.SUITE_SEED_KEY: config.getSeed(),
			ConfigConst.SUITE_TOLERANCE_KEY: config.getTolerances(),
			ConfigConst.SUITE_OUTPUT_KEY: config.getOutputPath()})

	def residualSetToList(self, residualSet: ResidualSet) -> list:
		checks = []

		for data in residualSet.getResiduals():
			value = data.getValue()

			checks.append({
				ConfigConst.CHECK_NAME_KEY: data.getName(),
				ConfigConst.CHECK_MAX_RESIDUAL_KEY: value if math.isfinite(value) else None,
				ConfigConst.CHECK_TOLERANCE_KEY: data.getTolerance(),
				ConfigConst.CHECK_PASS_KEY: data.isPassing(),
				ConfigConst.CHECK_WORST_POINT_KEY: data.getWorstPoint(),
				ConfigConst.CHECK_ASSERTED_KEY: data.isAsserted()})

		return checks

	def residualSetToJson(self, residualSet: ResidualSet = None) -> str:
		if residualSet is None:
			logging.debug("ResidualSet is null. Returning empty string.")
			return ""

		return self._generateJsonData(self.residualSetToList(residualSet))

	def reportToDict(self, report: Report) -> dict:
		return {
			ConfigConst.REPORT_VERSION_KEY: report.getVersion(),
			ConfigConst.SUITE_MODEL_KEY: report.getModel(),
			ConfigConst.SUITE_NAME_KEY: report.getSuite(),
			ConfigConst.SUITE_SEED_KEY: report.getSeed(),
			ConfigConst.SUITE_SAMPLES_KEY: report.getSamples(),
			ConfigConst.REPORT_CHECKS_KEY: self.residualSetToList(report.getResidualSet()),
			ConfigConst.REPORT_WALL_MS_KEY: report.getWallMs()}

	def reportToJson(self, report: Report = None) -> str:
		if not report:
			logging.debug("Report is null. Returning empty string.")
			return ""

		return self._generateJsonData(self.reportToDict(report))

	#
	# private methods
	#

	def _baseDict(self, data, fields: dict) -> dict:
		result = {
			'name': data.getName(),
			'n': data.getN(),
			'point': data.getPoint(),
			'frame_tag': data.getFrameTag()}

		result.update(fields)

		return result

	def _loadDictionary(self, jsonData: str) -> dict:
		try:
			return json.loads(jsonData)
		except json.JSONDecodeError as e:
			raise ConfigException("Malformed JSON at line {}, column {}: {}".format(e.lineno, e.colno, e.msg),
				invariant = 'json-format') from None

	def _generateJsonData(self, obj) -> str:
		if self.encodeToUtf8:
			return json.dumps(obj, cls = JsonDataEncoder).encode('utf8')

		return json.dumps(obj, cls = JsonDataEncoder, indent = 4)

class JsonDataEncoder(JSONEncoder):
	"""
	Encodes complex numbers as [re, im], numpy values as plain lists and
	numbers, jets as their order, arity and base-point value, and any
	other object through its attribute dictionary.

	"""

	def default(self, o):
		if isinstance(o, calcLib.ndarray):
			return o.tolist()

		if isinstance(o, bool):
			return o

		if isinstance(o, numbers.Integral):
			return int(o)

		if isinstance(o, numbers.Real):
			return float(o)

		if isinstance(o, numbers.Complex):
			return DataUtil.complexToPair(o)

		if isinstance(o, Jet):
			return {'order': o.getOrder(), 'num_vars': o.getNumVars(), 'value': DataUtil.complexToPair(o.value())}

		return o.__dict__
