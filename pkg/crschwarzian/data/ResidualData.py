#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import math

import crschwarzian.common.ConfigConst as ConfigConst

class ResidualData(object):
	"""
	A named residual: the worst value seen so far, its tolerance, the
	point where it occurred and whether the check is asserted (checks
	outside their proven hypotheses are reported only).

	A non-finite value never passes.

	"""

	def __init__(self, name: str = ConfigConst.NOT_SET, tolerance: float = 0.0, asserted: bool = True):
		self.name       = name
		self.value      = 0.0
		self.tolerance  = float(tolerance)
		self.asserted   = asserted
		self.worstPoint = []
		self.sampleCount = 0

	def getName(self) -> str:
		return self.name

	def getValue(self) -> float:
		return self.value

	def getTolerance(self) -> float:
		return self.tolerance

	def getWorstPoint(self) -> list:
		return list(self.worstPoint)

	def getSampleCount(self) -> int:
		return self.sampleCount

	def isAsserted(self) -> bool:
		return self.asserted

	def isFinite(self) -> bool:
		return math.isfinite(self.value)

	def isPassing(self) -> bool:
		return self.isFinite() and self.value < self.tolerance

	def setTolerance(self, tolerance: float):
		self.tolerance = float(tolerance)

	def setAsserted(self, asserted: bool):
		self.asserted = asserted

	def updateValue(self, value: float, point = None):
		"""
		Records a new sample; keeps the maximum (NaN counts as worst).

		@param value Residual magnitude.
		@param point Optional real coordinates of the sample.
		"""
		value = float(value)
		self.sampleCount += 1

		if self.sampleCount > 1:
			if not math.isfinite(self.value):
				return

			if math.isfinite(value) and value <= self.value:
				return

		self.value = value

		if point is not None:
			self.worstPoint = [float(x) for x in point]

	def __str__(self):
		return 'name={},value={},tolerance={},pass={},asserted={}'.format(
			self.name, self.value, self.tolerance, self.isPassing(), self.asserted)
