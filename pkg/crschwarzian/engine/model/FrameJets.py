#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

from crschwarzian.common.DomainException import DomainException
from crschwarzian.common.JetException import JetException
from crschwarzian.data.FrameData import FrameData

from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetOps import JetOps

class FrameJets():
	"""
	Jets at a point of everything a model knows about its frame.

	Frame index layout: 0..n-1 holomorphic (Z_alpha), n..2n-1
	antiholomorphic (Z_alphabar), 2n Reeb (T). At connection order K:

	  - vectors[j][k], coframe[j][k], levi, leviInv are jets of order K+1;
	  - gamma[j][beta][alpha] = omega_beta^alpha(e_j) and torsion[a][b]
	    are jets of order K.

	leviInv[a][b] = h^{a bbar}, i.e. the transpose of the inverse Levi
	matrix. 'conformal' is the jet of the total conformal exponent on
	conformal models (None otherwise).

	"""

	def __init__(self, n: int, order: int, vectors, coframe, levi, gamma, torsion, conformal: Jet = None,
		frameTag: str = 'theta'):
		"""
		Constructor.

		@param n CR dimension.
		@param order Connection order K.
		@param vectors 2n+1 rows of 2n+1 coordinate components.
		@param coframe 2n+1 rows of 2n+1 coordinate coefficients.
		@param levi n x n Levi matrix jets.
		@param gamma (2n+1) x n x n connection jets.
		@param torsion n x n torsion jets.
		@param conformal Optional jet of the conformal exponent.
		@param frameTag Name of the coframe.
		"""
		self.n        = n
		self.order    = order
		self.size     = 2 * n + 1
		self.frameTag = frameTag

		self.vectors   = [self._cast(row, order + 1) for row in vectors]
		self.coframe   = [self._cast(row, order + 1) for row in coframe]
		self.levi      = [self._cast(row, order + 1) for row in levi]

		self._checkLeviPositive()

		self.leviInv   = self._transpose(JetOps.invertJetMatrix(self.levi, invariant = 'levi-positive'))
		self.gamma     = [[self._cast(row, order) for row in block] for block in gamma]
		self.torsion   = [self._cast(row, order) for row in torsion]
		self.conformal = conformal

		self._connectionTable = None

	#
	# frame index helpers
	#

	def holo(self, alpha: int) -> int:
		return alpha

	def antiholo(self, alpha: int) -> int:
		return self.n + alpha

	def reeb(self) -> int:
		return 2 * self.n

	def conjIndex(self, j: int) -> int:
		"""
		Frame index of the conjugate direction.

		"""
		if j < self.n:
			return j + self.n

		if j < 2 * self.n:
			return j - self.n

		return j

	def isHolo(self, j: int) -> bool:
		return j < self.n

	def isAntiholo(self, j: int) -> bool:
		return self.n <= j < 2 * self.n

	#
	# accessors
	#

	def getN(self) -> int:
		return self.n

	def getOrder(self) -> int:
		return self.order

	def getNumVars(self) -> int:
		return self.size

	def getFrameTag(self) -> str:
		return self.frameTag

	def getVector(self, j: int) -> list:
		return self.vectors[j]

	def getCoframeRow(self, j: int) -> list:
		return self.coframe[j]

	def getLevi(self) -> list:
		return self.levi

	def getLeviInv(self) -> list:
		return self.leviInv

	def getGamma(self) -> list:
		return self.gamma

	def getTorsion(self) -> list:
		return self.torsion

	def getConformal(self) -> Jet:
		return self.conformal

	def leviValues(self) -> calcLib.ndarray:
		return JetOps.values(self.levi)

	def leviInvValues(self) -> calcLib.ndarray:
		return JetOps.values(self.leviInv)

	def torsionValues(self) -> calcLib.ndarray:
		return JetOps.values(self.torsion)

	def torsionUpper(self) -> list:
		"""
		A^alpha_{betabar} = h^{alpha gammabar} conj(A_{gamma beta}) as jets.

		"""
		n = self.n
		g = [[entry.truncate(self.order) for entry in row] for row in self.leviInv]

		return [[sum((g[a][c] * self.torsion[c][b].conj() for c in range(n)), Jet.zero(self.size, self.order))
			for b in range(n)] for a in range(n)]

	def connectionTable(self) -> list:
		"""
		C[j][c][d]: the coefficient with which component d enters the
		covariant derivative of a slot holding frame index c, in direction
		j. Holomorphic slots use gamma, antiholomorphic slots its
		conjugate in the conjugate direction, the Reeb slot is parallel.
		Entries that vanish identically are None.

		@return Nested lists of Jets or None.
		"""
		if self._connectionTable is not None:
			return self._connectionTable

		n     = self.n
		table = [[[None] * self.size for _ in range(self.size)] for _ in range(self.size)]

		for j in range(self.size):
			cj = self.conjIndex(j)

			for b in range(n):
				for a in range(n):
					holoEntry = self.gamma[j][b][a]

					if holoEntry.maxAbs() > 0.0:
						table[j][b][a] = holoEntry

					antiEntry = self.gamma[cj][b][a]

					if antiEntry.maxAbs() > 0.0:
						table[j][n + b][n + a] = antiEntry.conj()

		self._connectionTable = table

		return table

	def toFrameData(self, name: str, point) -> FrameData:
		"""
		Degree-0 projection.

		"""
		data = FrameData(name = name, n = self.n, point = point, frameTag = self.frameTag)

		data.setLevi(self.leviValues())
		data.setTorsion(self.torsionValues())
		data.setFrame(JetOps.values(self.vectors))
		data.setCoframe(JetOps.values(self.coframe))
		data.setChristoffels(calcLib.array([JetOps.values(block) for block in self.gamma], dtype = complex))
		data.setConformalJet(self.conformal)

		return data

	def withOrder(self, order: int):
		"""
		Returns these frame jets truncated to a lower connection order.

		"""
		if order == self.order:
			return self

		if order > self.order:
			raise JetException("Cannot raise frame jets from order {} to {}".format(self.order, order))

		return FrameJets(self.n, order, self.vectors, self.coframe, self.levi, self.gamma, self.torsion,
			conformal = self.conformal, frameTag = self.frameTag)

	#
	# private methods
	#

	def _cast(self, row, order: int) -> list:
		result = []

		for entry in row:
			if isinstance(entry, Jet):
				if entry.getOrder() < order:
					raise JetException("Frame jet of order {} below required order {}".format(entry.getOrder(), order))

				result.append(entry.truncate(order))
			else:
				result.append(Jet.constant(entry, self.size, order))

		return result

	def _checkLeviPositive(self):
		values = self.leviValues()
		hermitianPart = 0.5 * (values + values.conj().T)

		if not calcLib.all(calcLib.isfinite(values)) or calcLib.linalg.eigvalsh(hermitianPart).min() <= 0.0:
			raise DomainException("Levi form is not positive definite at the base point", invariant = 'levi-positive')

	def _transpose(self, matrix) -> list:
		return [list(row) for row in zip(*matrix)]
