#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.BaseGeometryData import BaseGeometryData

class CurvatureData(BaseGeometryData):
	"""
	Webster curvature quantities at a point.

	riem[b][a][r][s] = R_b^a_{r sbar}, ricci[a][b] = R_{a bbar},
	chernMoser[b][a][g][s] = S_b^a_{g sbar}. 'eta' is the fitted
	constant-curvature coefficient c of c(h_{b abar} h_{r sbar} +
	h_{r abar} h_{b sbar}) and is None until a fit has been made.

	"""

	def __init__(self, name: str = ConfigConst.NOT_SET, n: int = 1, point = None, frameTag: str = ConfigConst.NOT_SET):
		super(CurvatureData, self).__init__(name = name, n = n, point = point, frameTag = frameTag)

		self.riem            = calcLib.zeros((n, n, n, n), dtype = complex)
		self.ricci           = calcLib.zeros((n, n), dtype = complex)
		self.scalar          = 0.0
		self.schouten        = calcLib.zeros((n, n), dtype = complex)
		self.traceFreeRicci  = calcLib.zeros((n, n), dtype = complex)
		self.chernMoser      = calcLib.zeros((n, n, n, n), dtype = complex)
		self.torsion         = calcLib.zeros((n, n), dtype = complex)
		self.eta             = None
		self.fitResidual     = None

	def getRiem(self) -> calcLib.ndarray:
		return self.riem

	def getRicci(self) -> calcLib.ndarray:
		return self.ricci

	def getScalar(self) -> float:
		return self.scalar

	def getSchouten(self) -> calcLib.ndarray:
		return self.schouten

	def getTraceFreeRicci(self) -> calcLib.ndarray:
		return self.traceFreeRicci

	def getChernMoser(self) -> calcLib.ndarray:
		return self.chernMoser

	def getTorsion(self) -> calcLib.ndarray:
		return self.torsion

	def getEta(self):
		return self.eta

	def getFitResidual(self):
		return self.fitResidual

	def setRiem(self, vals):
		self.riem = calcLib.asarray(vals, dtype = complex)

	def setRicci(self, vals):
		self.ricci = calcLib.asarray(vals, dtype = complex)

	def setScalar(self, val: float):
		self.scalar = float(val)

	def setSchouten(self, vals):
		self.schouten = calcLib.asarray(vals, dtype = complex)

	def setTraceFreeRicci(self, vals):
		self.traceFreeRicci = calcLib.asarray(vals, dtype = complex)

	def setChernMoser(self, vals):
		self.chernMoser = calcLib.asarray(vals, dtype = complex)

	def setTorsion(self, vals):
		self.torsion = calcLib.asarray(vals, dtype = complex)

	def setConstantCurvatureFit(self, eta: float, fitResidual: float):
		self.eta         = float(eta)
		self.fitResidual = float(fitResidual)

	def __str__(self):
		return '{},scalar={},eta={}'.format(super().__str__(), self.scalar, self.eta)

	def _handleUpdateData(self, data):
		if data and isinstance(data, CurvatureData):
			self.riem           = data.getRiem().copy()
			self.ricci          = data.getRicci().copy()
			self.scalar         = data.getScalar()
			self.schouten       = data.getSchouten().copy()
			self.traceFreeRicci = data.getTraceFreeRicci().copy()
			self.chernMoser     = data.getChernMoser().copy()
			self.torsion        = data.getTorsion().copy()
			self.eta            = data.getEta()
			self.fitResidual    = data.getFitResidual()
