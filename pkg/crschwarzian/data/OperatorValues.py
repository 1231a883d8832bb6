#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.BaseGeometryData import BaseGeometryData

class OperatorValues(BaseGeometryData):
	"""
	Sub-Laplacian, Kohn Laplacian, Graham-Lee operator, Reeb derivative
	and |dbar_b f|^2 of a scalar at a point.

	"""

	def __init__(self, name: str = ConfigConst.NOT_SET, n: int = 1, point = None, frameTag: str = ConfigConst.NOT_SET):
		super(OperatorValues, self).__init__(name = name, n = n, point = point, frameTag = frameTag)

		self.sublaplacian = 0j
		self.kohn         = 0j
		self.grahamLee    = calcLib.zeros(n, dtype = complex)
		self.reeb         = 0j
		self.dbarNorm2    = 0j

	def getSublaplacian(self) -> complex:
		return self.sublaplacian

	def getKohn(self) -> complex:
		return self.kohn

	def getGrahamLee(self) -> calcLib.ndarray:
		return self.grahamLee

	def getReeb(self) -> complex:
		return self.reeb

	def getDbarNorm2(self) -> complex:
		return self.dbarNorm2

	def setSublaplacian(self, val: complex):
		self.sublaplacian = complex(val)

	def setKohn(self, val: complex):
		self.kohn = complex(val)

	def setGrahamLee(self, vals):
		self.grahamLee = calcLib.asarray(vals, dtype = complex)

	def setReeb(self, val: complex):
		self.reeb = complex(val)

	def setDbarNorm2(self, val: complex):
		self.dbarNorm2 = complex(val)

	def __str__(self):
		return '{},sublaplacian={},kohn={},grahamLee={},reeb={},dbarNorm2={}'.format(
			super().__str__(), self.sublaplacian, self.kohn, self.grahamLee.tolist(), self.reeb, self.dbarNorm2)

	def _handleUpdateData(self, data):
		if data and isinstance(data, OperatorValues):
			self.sublaplacian = data.getSublaplacian()
			self.kohn         = data.getKohn()
			self.grahamLee    = data.getGrahamLee().copy()
			self.reeb         = data.getReeb()
			self.dbarNorm2    = data.getDbarNorm2()
