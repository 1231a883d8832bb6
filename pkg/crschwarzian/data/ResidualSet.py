#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from crschwarzian.data.ResidualData import ResidualData

class ResidualSet(object):
	"""
	Ordered collection of named residuals. Adding a residual under an
	existing name keeps the maximum, so a set can accumulate samples.

	"""

	def __init__(self):
		self.residuals = {}

	def addResidual(self, name: str, value: float, tolerance: float, point = None, asserted: bool = True) -> ResidualData:
		"""
		Records one sample of residual 'name'.

		@param name Residual name.
		@param value Residual magnitude at this sample.
		@param tolerance Pass threshold (value < tolerance).
		@param point Optional real coordinates of the sample.
		@param asserted False if the value is reported only.
		@return The updated ResidualData.
		"""
		data = self.residuals.get(name)

		if data is None:
			data = ResidualData(name = name, tolerance = tolerance, asserted = asserted)
			self.residuals[name] = data

		data.updateValue(value, point)

		return data

	def merge(self, other):
		"""
		Folds all residuals of 'other' into this set.

		"""
		for data in other.getResiduals():
			target = self.residuals.get(data.getName())

			if target is None:
				target = ResidualData(name = data.getName(), tolerance = data.getTolerance(), asserted = data.isAsserted())
				self.residuals[data.getName()] = target

			target.updateValue(data.getValue(), data.getWorstPoint() or None)

	def getResidual(self, name: str) -> ResidualData:
		return self.residuals.get(name)

	def getValue(self, name: str) -> float:
		return self.residuals[name].getValue()

	def getNames(self) -> list:
		return list(self.residuals.keys())

	def getResiduals(self) -> list:
		return list(self.residuals.values())

	def isPassing(self) -> bool:
		"""
		True if every asserted residual passes.

		"""
		return all(data.isPassing() for data in self.residuals.values() if data.isAsserted())

	def maxValue(self) -> float:
		values = [data.getValue() for data in self.residuals.values()]

		return max(values) if values else 0.0

	def __len__(self):
		return len(self.residuals)

	def __contains__(self, name):
		return name in self.residuals

	def __str__(self):
		return '\n'.join(str(data) for data in self.residuals.values())
