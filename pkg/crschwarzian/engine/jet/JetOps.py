#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.DomainException import DomainException
from crschwarzian.common.JetException import JetException

from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetPoint import JetPoint

class JetOps():
	"""
	Stateless helpers on top of Jet / JetPoint: seeding, Wirtinger
	derivative extraction, the finite-difference oracle and inversion
	of small matrices of jets.

	"""

	MAX_CONDITION = 1.0e12

	@staticmethod
	def seedJet(point, order: int) -> JetPoint:
		"""
		Lifts the coordinate functions at 'point' to jets of 'order'.

		@param point Real vector (x_1, y_1, ..., x_n, y_n, t).
		@param order Integer in [1, 4].
		@return JetPoint
		"""
		return JetPoint(point, order)

	@staticmethod
	def wirtingerCoeff(jet: Jet, dz, dzbar, dt: int = 0) -> complex:
		"""
		Mixed Wirtinger / t derivative of 'jet' at its base point. This is
		a derivative, not a Taylor coefficient.

		@param jet The jet to differentiate.
		@param dz Per-coordinate derivative counts in z^alpha (length n).
		@param dzbar Per-coordinate derivative counts in zbar^alpha (length n).
		@param dt Derivative count in t.
		@return complex
		"""
		n = jet.getN()
		dz    = list(dz) if dz is not None else [0] * n
		dzbar = list(dzbar) if dzbar is not None else [0] * n

		if len(dz) != n or len(dzbar) != n:
			raise JetException("Wirtinger multi-indices must have length n={}".format(n))

		total = sum(dz) + sum(dzbar) + dt

		if min(dz + dzbar + [dt]) < 0:
			raise JetException("Negative derivative count requested")

		if total > jet.getOrder():
			raise JetException("Requested derivative of order {} exceeds jet order {}".format(total, jet.getOrder()))

		result = jet

		for alpha, count in enumerate(dz):
			for _ in range(count):
				result = result.wirtingerZ(alpha)

		for alpha, count in enumerate(dzbar):
			for _ in range(count):
				result = result.wirtingerZbar(alpha)

		for _ in range(dt):
			result = result.partialT()

		return result.value()

	@staticmethod
	def fdCrosscheck(expr, point, coordinate: int, order: int, step: float = None) -> float:
		"""
		|central finite difference - jet derivative| for one real
		coordinate and derivative order 1 or 2.

		@param expr Anything with evaluate(jetPoint) -> Jet.
		@param point Real base point.
		@param coordinate Real coordinate index.
		@param order 1 or 2.
		@param step Optional step; defaults to 1e-5 (order 1) or 1e-4 (order 2).
		@return float residual
		"""
		if order not in (1, 2):
			raise JetException("Finite-difference oracle supports orders 1 and 2, got {}".format(order))

		base = calcLib.asarray(point, dtype = float)

		if coordinate < 0 or coordinate >= base.size:
			raise JetException("Coordinate index {} out of range".format(coordinate))

		if step is None:
			step = ConfigConst.DEFAULT_FD_STEP_FIRST if order == 1 else ConfigConst.DEFAULT_FD_STEP_SECOND

		jet = expr.evaluate(JetPoint(base, order))

		exps = [0] * base.size
		exps[coordinate] = order
		exact = jet.derivative(exps)

		offset = calcLib.zeros(base.size)
		offset[coordinate] = step

		def valueAt(p):
			return expr.evaluate(JetPoint(p, 1)).value()

		if order == 1:
			approx = (valueAt(base + offset) - valueAt(base - offset)) / (2.0 * step)
		else:
			approx = (valueAt(base + offset) - 2.0 * valueAt(base) + valueAt(base - offset)) / (step * step)

		residual = abs(approx - exact)

		logging.debug("FD crosscheck: coord=%d, order=%d, jet=%s, fd=%s, residual=%e",
			coordinate, order, exact, approx, residual)

		return residual

	@staticmethod
	def invertJetMatrix(matrix, invariant: str = 'invertible-matrix'):
		"""
		Inverts a square matrix of jets by a terminating Neumann series
		around its value at the base point.

		@param matrix List of rows of Jets (all of one numVars).
		@param invariant Name reported when the value matrix is singular.
		@return List of rows of Jets at the common order.
		"""
		size  = len(matrix)
		flat  = Jet.align(*[entry for row in matrix for entry in row])
		rows  = [flat[i * size:(i + 1) * size] for i in range(size)]
		order   = rows[0][0].getOrder()
		numVars = rows[0][0].getNumVars()

		values = calcLib.array([[entry.value() for entry in row] for row in rows], dtype = complex)

		if not calcLib.all(calcLib.isfinite(values)) or not calcLib.linalg.cond(values) <= JetOps.MAX_CONDITION:
			raise DomainException("Matrix is singular at the base point", invariant = invariant)

		inv0 = calcLib.linalg.inv(values)

		# P = -inv0 * (M - M0)
		nilpotent = [[row[j] - values[i][j] for j in range(size)] for i, row in enumerate(rows)]
		stepMat = [[sum((nilpotent[k][j] * (-inv0[i][k]) for k in range(size)), Jet.zero(numVars, order))
			for j in range(size)] for i in range(size)]

		term   = [[Jet.constant(inv0[i][j], numVars, order) for j in range(size)] for i in range(size)]
		result = [list(row) for row in term]

		for _ in range(order):
			term = JetOps.matMul(stepMat, term)
			result = [[result[i][j] + term[i][j] for j in range(size)] for i in range(size)]

		return result

	@staticmethod
	def matMul(left, right):
		"""
		Product of two matrices whose entries are jets of one order
		(or plain numbers).

		"""
		rows  = len(left)
		inner = len(right)
		cols  = len(right[0])

		return [[sum(left[i][k] * right[k][j] for k in range(inner)) for j in range(cols)] for i in range(rows)]

	@staticmethod
	def values(matrix) -> calcLib.ndarray:
		"""
		Base-point values of a nested list of jets, as a complex array.

		"""
		return calcLib.array([[entry.value() if isinstance(entry, Jet) else complex(entry) for entry in row]
			for row in matrix], dtype = complex)
