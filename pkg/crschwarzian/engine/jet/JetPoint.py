#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.JetException import JetException

from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.MultiIndexTable import MultiIndexTable

class JetPoint():
	"""
	A base point (x_1, y_1, ..., x_n, y_n, t) together with the seeded
	coordinate jets at a fixed order. Coordinate k is exact: base value
	at degree 0, coefficient 1 on its own degree-1 index, zero elsewhere.

	Real coordinate layout: x_alpha = 2*alpha, y_alpha = 2*alpha + 1,
	t (or s on rigid models) = 2n, with alpha 0-based.

	"""

	def __init__(self, point, order: int):
		"""
		Constructor. Prefer JetOps.seedJet() from calling code.

		@param point Real coordinate vector of odd length 2n+1, n >= 1.
		@param order Seeding order in [1, 4].
		"""
		base = calcLib.asarray(point, dtype = float).reshape(-1)

		if order < 1 or order > ConfigConst.MAX_JET_ORDER:
			raise JetException("Seeding order must lie in [1, {}], got {}".format(ConfigConst.MAX_JET_ORDER, order))

		if base.size % 2 == 0 or base.size < 3:
			raise JetException("Base point must have odd length 2n+1 with n >= 1, got length {}".format(base.size))

		self.base    = base
		self.order   = order
		self.numVars = base.size
		self.n       = (base.size - 1) // 2

		table = MultiIndexTable.get(self.numVars, order)

		self.vars = []

		for k in range(self.numVars):
			coeffs = calcLib.zeros(table.size, dtype = complex)
			coeffs[0] = base[k]
			coeffs[table.unitIndex(k)] = 1.0

			self.vars.append(Jet(coeffs, self.numVars, order))

	def getBase(self) -> calcLib.ndarray:
		return self.base.copy()

	def getOrder(self) -> int:
		return self.order

	def getN(self) -> int:
		return self.n

	def getNumVars(self) -> int:
		return self.numVars

	def getVar(self, k: int) -> Jet:
		return self.vars[k]

	def x(self, alpha: int) -> Jet:
		return self.vars[2 * alpha]

	def y(self, alpha: int) -> Jet:
		return self.vars[2 * alpha + 1]

	def t(self) -> Jet:
		return self.vars[2 * self.n]

	def z(self, alpha: int) -> Jet:
		return self.vars[2 * alpha] + 1j * self.vars[2 * alpha + 1]

	def zbar(self, alpha: int) -> Jet:
		return self.vars[2 * alpha] - 1j * self.vars[2 * alpha + 1]

	def zValue(self, alpha: int) -> complex:
		return complex(self.base[2 * alpha], self.base[2 * alpha + 1])

	def constant(self, value: complex) -> Jet:
		return Jet.constant(value, self.numVars, self.order)

	def zero(self) -> Jet:
		return Jet.zero(self.numVars, self.order)

	def withOrder(self, order: int):
		"""
		Returns a JetPoint at the same base point with another order.

		"""
		if order == self.order:
			return self

		return JetPoint(self.base, order)

	def __str__(self):
		return 'JetPoint(order={},base={})'.format(self.order, self.base.tolist())
