#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.BaseGeometryData import BaseGeometryData

class FrameData(BaseGeometryData):
	"""
	Pointwise frame data of a pseudo-hermitian model.

	Frame index layout (shared with every tensor in the engine):
	0..n-1 are Z_1..Z_n, n..2n-1 are Z_1bar..Z_nbar and 2n is T. Row j
	of 'frame' holds the coordinate components of frame vector j; row j
	of 'coframe' holds the coordinate coefficients of the dual 1-form
	(theta^alpha, theta^alphabar, theta).

	christoffels[j][beta][alpha] = omega_beta^alpha(e_j), so the
	holomorphic, mixed and Reeb Christoffel symbols are the slices
	j < n, n <= j < 2n and j = 2n respectively.

	"""

	def __init__(self, name: str = ConfigConst.NOT_SET, n: int = 1, point = None, frameTag: str = ConfigConst.NOT_SET):
		super(FrameData, self).__init__(name = name, n = n, point = point, frameTag = frameTag)

		size = 2 * n + 1

		self.levi         = calcLib.eye(n, dtype = complex)
		self.christoffels = calcLib.zeros((size, n, n), dtype = complex)
		self.torsion      = calcLib.zeros((n, n), dtype = complex)
		self.frame        = calcLib.zeros((size, size), dtype = complex)
		self.coframe      = calcLib.zeros((size, size), dtype = complex)
		self.conformalJet = None

	def getLevi(self) -> calcLib.ndarray:
		return self.levi

	def getLeviInverse(self) -> calcLib.ndarray:
		"""
		G[a][b] = h^{a bbar}.

		"""
		return calcLib.linalg.inv(self.levi).T

	def getChristoffels(self) -> calcLib.ndarray:
		return self.christoffels

	def getHoloChristoffels(self) -> calcLib.ndarray:
		return self.christoffels[:self.n]

	def getMixedChristoffels(self) -> calcLib.ndarray:
		return self.christoffels[self.n:2 * self.n]

	def getReebChristoffels(self) -> calcLib.ndarray:
		return self.christoffels[2 * self.n]

	def getTorsion(self) -> calcLib.ndarray:
		return self.torsion

	def getFrame(self) -> calcLib.ndarray:
		return self.frame

	def getCoframe(self) -> calcLib.ndarray:
		return self.coframe

	def getReebVector(self) -> calcLib.ndarray:
		return self.frame[2 * self.n]

	def getConformalJet(self):
		"""
		Jet of the total conformal exponent, or None on base models.

		"""
		return self.conformalJet

	def hasConformalFactor(self) -> bool:
		return self.conformalJet is not None

	def pairing(self) -> calcLib.ndarray:
		"""
		Matrix of coframe[j](frame[k]); the identity on valid data.

		"""
		return self.coframe @ self.frame.T

	def setLevi(self, levi):
		self.levi = calcLib.asarray(levi, dtype = complex)

	def setChristoffels(self, christoffels):
		self.christoffels = calcLib.asarray(christoffels, dtype = complex)

	def setTorsion(self, torsion):
		self.torsion = calcLib.asarray(torsion, dtype = complex)

	def setFrame(self, frame):
		self.frame = calcLib.asarray(frame, dtype = complex)

	def setCoframe(self, coframe):
		self.coframe = calcLib.asarray(coframe, dtype = complex)

	def setConformalJet(self, jet):
		self.conformalJet = jet

	def __str__(self):
		return '{},levi={},torsion={}'.format(super().__str__(), self.levi.tolist(), self.torsion.tolist())

	def _handleUpdateData(self, data):
		if data and isinstance(data, FrameData):
			self.levi         = data.getLevi().copy()
			self.christoffels = data.getChristoffels().copy()
			self.torsion      = data.getTorsion().copy()
			self.frame        = data.getFrame().copy()
			self.coframe      = data.getCoframe().copy()
			self.conformalJet = data.getConformalJet()
