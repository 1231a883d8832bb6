#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.ResidualSet import ResidualSet

class Report(object):
	"""
	Outcome of a suite run. Everything but wallMs is a function of the
	suite configuration and seed.

	"""

	def __init__(self, model: dict = None, suite: str = ConfigConst.NOT_SET, seed: int = ConfigConst.DEFAULT_SEED,
		samples: int = ConfigConst.DEFAULT_SAMPLES):
		self.version   = ConfigConst.ENGINE_VERSION
		self.model     = dict(model) if model else {}
		self.suite     = suite
		self.seed      = seed
		self.samples   = samples
		self.residuals = ResidualSet()
		self.wallMs    = 0

	def getVersion(self) -> str:
		return self.version

	def getModel(self) -> dict:
		return self.model

	def getSuite(self) -> str:
		return self.suite

	def getSeed(self) -> int:
		return self.seed

	def getSamples(self) -> int:
		return self.samples

	def getResidualSet(self) -> ResidualSet:
		return self.residuals

	def getChecks(self) -> list:
		return self.residuals.getResiduals()

	def getWallMs(self) -> int:
		return self.wallMs

	def isPassing(self) -> bool:
		return self.residuals.isPassing()

	def getFailedChecks(self) -> list:
		return [data.getName() for data in self.residuals.getResiduals() if data.isAsserted() and not data.isPassing()]

	def addResiduals(self, residualSet: ResidualSet):
		self.residuals.merge(residualSet)

	def setWallMs(self, wallMs: int):
		self.wallMs = int(wallMs)

	def __str__(self):
		return 'version={},suite={},seed={},samples={},wallMs={},pass={}\n{}'.format(
			self.version, self.suite, self.seed, self.samples, self.wallMs, self.isPassing(), str(self.residuals))
