#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.BaseGeometryData import BaseGeometryData

class SchwarzianData(BaseGeometryData):
	"""
	Components of the CR Schwarzian tensor modulo theta:
	bHolo[a][b] = B_{ab} and bMixed[a][b] = B_{a bbar}. The conjugate
	blocks are B_{abar bbar} = conj(B_{ab}) and B_{abar b} = conj(B_{a bbar}).

	"""

	def __init__(self, name: str = ConfigConst.NOT_SET, n: int = 1, point = None, frameTag: str = ConfigConst.NOT_SET):
		super(SchwarzianData, self).__init__(name = name, n = n, point = point, frameTag = frameTag)

		self.bHolo  = calcLib.zeros((n, n), dtype = complex)
		self.bMixed = calcLib.zeros((n, n), dtype = complex)
		self.trace  = 0j

	def getBHolo(self) -> calcLib.ndarray:
		return self.bHolo

	def getBMixed(self) -> calcLib.ndarray:
		return self.bMixed

	def getBAntiholo(self) -> calcLib.ndarray:
		return self.bHolo.conj()

	def getTrace(self) -> complex:
		"""
		h^{bbar a} B_{a bbar}; zero up to round-off.

		"""
		return self.trace

	def maxAbs(self) -> float:
		return float(max(calcLib.max(calcLib.abs(self.bHolo)), calcLib.max(calcLib.abs(self.bMixed))))

	def setBHolo(self, vals):
		self.bHolo = calcLib.asarray(vals, dtype = complex)

	def setBMixed(self, vals):
		self.bMixed = calcLib.asarray(vals, dtype = complex)

	def setTrace(self, val: complex):
		self.trace = complex(val)

	def __str__(self):
		return '{},bHolo={},bMixed={}'.format(super().__str__(), self.bHolo.tolist(), self.bMixed.tolist())

	def _handleUpdateData(self, data):
		if data and isinstance(data, SchwarzianData):
			self.bHolo  = data.getBHolo().copy()
			self.bMixed = data.getBMixed().copy()
			self.trace  = data.getTrace()
