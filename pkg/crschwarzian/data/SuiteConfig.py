#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException

class SuiteConfig(object):
	"""
	What a verification run executes: the model specification, a suite
	name or an explicit list of check names, sample count, seed,
	per-check tolerance overrides and an optional report path.

	"""

	def __init__(self, modelSpec: dict = None, suite = ConfigConst.ALL_SUITE, samples: int = ConfigConst.DEFAULT_SAMPLES,
		seed: int = ConfigConst.DEFAULT_SEED, tolerances: dict = None, outputPath: str = None):
		self.modelSpec  = dict(modelSpec) if modelSpec else {ConfigConst.MODEL_KIND_KEY: ConfigConst.HEISENBERG_MODEL, ConfigConst.MODEL_N_KEY: 1}
		self.suite      = suite
		self.samples    = samples
		self.seed       = seed
		self.tolerances = dict(tolerances) if tolerances else {}
		self.outputPath = outputPath

	def getModelSpec(self) -> dict:
		return self.modelSpec

	def getSuite(self):
		return self.suite

	def getSuiteName(self) -> str:
		"""
		The suite name, or the comma-joined check names of an explicit list.

		"""
		if isinstance(self.suite, (list, tuple)):
			return ','.join(self.suite)

		return self.suite

	def getSamples(self) -> int:
		return self.samples

	def getSeed(self) -> int:
		return self.seed

	def getTolerances(self) -> dict:
		return self.tolerances

	def getTolerance(self, checkName: str, defaultVal: float) -> float:
		return float(self.tolerances.get(checkName, defaultVal))

	def getOutputPath(self) -> str:
		return self.outputPath

	def setTolerance(self, checkName: str, tolerance: float):
		self.tolerances[checkName] = float(tolerance)

	def setOutputPath(self, outputPath: str):
		self.outputPath = outputPath

	def validate(self):
		"""
		Checks the invariants that do not need the check registry:
		samples >= 1, a 64-bit seed and a well-formed tolerance map.

		"""
		if not isinstance(self.samples, int) or isinstance(self.samples, bool) or self.samples < 1:
			raise ConfigException("samples must be an integer >= 1, got {}".format(self.samples), invariant = 'samples-positive')

		if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0 or self.seed >= 2 ** 64:
			raise ConfigException("seed must be a 64-bit non-negative integer, got {}".format(self.seed), invariant = 'seed-range')

		if not self.suite:
			raise ConfigException("No suite or check names given", invariant = 'suite-present')

		for name, tol in self.tolerances.items():
			try:
				if float(tol) < 0.0:
					raise ConfigException("Negative tolerance for {}".format(name), invariant = 'tolerance-range')
			except (TypeError, ValueError):
				raise ConfigException("Tolerance for {} is not a number: {}".format(name, tol), invariant = 'tolerance-range') from None

	def __str__(self):
		return 'model={},suite={},samples={},seed={},tolerances={},out={}'.format(
			self.modelSpec, self.getSuiteName(), self.samples, self.seed, self.tolerances, self.outputPath)
