#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.JetException import JetException
from crschwarzian.data.BaseGeometryData import BaseGeometryData

class CovariantDerivatives(BaseGeometryData):
	"""
	Values at a point of all Tanaka-Webster covariant derivatives of a
	scalar up to a given order. Components are keyed by tuples of frame
	indices (0..n-1 holomorphic, n..2n-1 antiholomorphic, 2n Reeb);
	later indices differentiate, so get(a, b) is f_{;ab}.

	"""

	def __init__(self, name: str = ConfigConst.NOT_SET, n: int = 1, point = None, frameTag: str = ConfigConst.NOT_SET):
		super(CovariantDerivatives, self).__init__(name = name, n = n, point = point, frameTag = frameTag)

		self.order  = 0
		self.value  = 0j
		self.levels = []

	def getOrder(self) -> int:
		return self.order

	def getValue(self) -> complex:
		return self.value

	def get(self, *indices) -> complex:
		"""
		Returns the component f_{;indices}.

		@param indices Frame indices, one per differentiation.
		@return complex
		"""
		level = len(indices)

		if level == 0:
			return self.value

		if level > self.order:
			raise JetException("Covariant derivative of order {} not available (computed to {})".format(level, self.order))

		return self.levels[level - 1][tuple(indices)]

	def holo(self, alpha: int) -> int:
		return alpha

	def antiholo(self, alpha: int) -> int:
		return self.n + alpha

	def reeb(self) -> int:
		return 2 * self.n

	def getLevel(self, level: int) -> dict:
		return self.levels[level - 1]

	def setValue(self, value: complex):
		self.value = complex(value)

	def addLevel(self, components: dict):
		"""
		Appends the next order of components.

		@param components Map of index tuple to complex value.
		"""
		self.levels.append({key: complex(val) for key, val in components.items()})
		self.order = len(self.levels)

	def __str__(self):
		return '{},order={},value={}'.format(super().__str__(), self.order, self.value)

	def _handleUpdateData(self, data):
		if data and isinstance(data, CovariantDerivatives):
			self.order  = data.getOrder()
			self.value  = data.getValue()
			self.levels = [dict(level) for level in data.levels]
