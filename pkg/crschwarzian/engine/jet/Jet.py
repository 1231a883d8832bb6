#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import cmath
import numbers

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.DomainException import DomainException
from crschwarzian.common.JetException import JetException

from crschwarzian.engine.jet.MultiIndexTable import MultiIndexTable

class Jet():
	"""
	Truncated multivariate Taylor expansion of a complex scalar at a
	point, stored densely as Taylor (divided) coefficients over the
	multi-indices of a MultiIndexTable.

	Jets are immutable values. Arithmetic between two jets requires
	identical (order, numVars); use Jet.align() to truncate a group of
	jets to their common order first. Plain Python / numpy numbers are
	accepted on either side of every operator.

	"""

	# make numpy scalars defer to our reflected operators
	__array_ufunc__ = None

	def __init__(self, coeffs, numVars: int, order: int):
		"""
		Constructor.

		@param coeffs Dense Taylor coefficients, one per multi-index.
		@param numVars Number of real coordinates.
		@param order Truncation order in [0, 4].
		"""
		self.table   = MultiIndexTable.get(numVars, order)
		self.numVars = numVars
		self.order   = order
		self.coeffs  = calcLib.asarray(coeffs, dtype = complex)

		if self.coeffs.shape != (self.table.size,):
			raise JetException("Coefficient vector of length {} does not match {} multi-indices".format(
				self.coeffs.shape, self.table.size))

	#
	# factories
	#

	@classmethod
	def constant(cls, value: complex, numVars: int, order: int):
		coeffs = calcLib.zeros(MultiIndexTable.get(numVars, order).size, dtype = complex)
		coeffs[0] = value

		return cls(coeffs, numVars, order)

	@classmethod
	def zero(cls, numVars: int, order: int):
		return cls.constant(0.0, numVars, order)

	@staticmethod
	def align(*items):
		"""
		Truncates every Jet in 'items' to the smallest order found among
		them. Non-jet items (plain numbers) are passed through.

		@return list
		"""
		orders = [item.order for item in items if isinstance(item, Jet)]

		if not orders:
			return list(items)

		target = min(orders)

		return [item.truncate(target) if isinstance(item, Jet) else item for item in items]

	#
	# accessors
	#

	def getOrder(self) -> int:
		return self.order

	def getNumVars(self) -> int:
		return self.numVars

	def getN(self) -> int:
		return (self.numVars - 1) // 2

	def getCoeffs(self) -> calcLib.ndarray:
		return self.coeffs.copy()

	def value(self) -> complex:
		"""
		Degree-0 coefficient, i.e. the value of the field at the base point.

		"""
		return complex(self.coeffs[0])

	def taylorCoefficient(self, exponents) -> complex:
		return complex(self.coeffs[self.table.indexOf(exponents)])

	def derivative(self, exponents) -> complex:
		"""
		Returns the partial derivative for a multi-index (the Taylor
		coefficient multiplied by the multi-index factorial).

		"""
		pos = self.table.indexOf(exponents)

		return complex(self.coeffs[pos] * self.table.factorials[pos])

	def isReal(self, tol: float = ConfigConst.REAL_FIELD_THRESHOLD) -> bool:
		return float(calcLib.max(calcLib.abs(self.coeffs.imag))) <= tol

	def maxAbs(self) -> float:
		return float(calcLib.max(calcLib.abs(self.coeffs)))

	def distance(self, other) -> float:
		"""
		Largest coefficient difference after truncating both jets to a
		common order.

		"""
		a, b = Jet.align(self, other)

		return (a - b).maxAbs()

	#
	# structural operations
	#

	def truncate(self, order: int):
		if order > self.order:
			raise JetException("Cannot raise jet order from {} to {}".format(self.order, order))

		if order == self.order:
			return self

		count = self.table.countForOrder(order)

		return Jet(self.coeffs[:count], self.numVars, order)

	def partial(self, var: int):
		"""
		Partial derivative in real coordinate 'var'; one order is lost.

		"""
		if self.order < 1:
			raise JetException("Cannot differentiate an order-0 jet")

		if var < 0 or var >= self.numVars:
			raise JetException("Coordinate index {} out of range for {} variables".format(var, self.numVars))

		return Jet(self.table.differentiate(self.coeffs, var), self.numVars, self.order - 1)

	def wirtingerZ(self, alpha: int):
		"""
		d/dz^alpha = (d/dx_alpha - i d/dy_alpha) / 2, alpha 0-based.

		"""
		self._checkHoloIndex(alpha)

		return (self.partial(2 * alpha) - 1j * self.partial(2 * alpha + 1)) * 0.5

	def wirtingerZbar(self, alpha: int):
		"""
		d/dzbar^alpha = (d/dx_alpha + i d/dy_alpha) / 2, alpha 0-based.

		"""
		self._checkHoloIndex(alpha)

		return (self.partial(2 * alpha) + 1j * self.partial(2 * alpha + 1)) * 0.5

	def partialT(self):
		return self.partial(self.numVars - 1)

	def applyVector(self, components):
		"""
		Applies a coordinate vector field sum_k V^k d/dx_k to this jet.
		Components may be jets or numbers; the result has the smaller of
		(order - 1) and the component orders.

		@param components Sequence of numVars coefficients.
		@return Jet
		"""
		target = self.order - 1

		for vk in components:
			if isinstance(vk, Jet):
				target = min(target, vk.order)

		result = Jet.zero(self.numVars, target)

		for k, vk in enumerate(components):
			if isinstance(vk, Jet):
				result = result + self.partial(k).truncate(target) * vk.truncate(target)
			elif vk != 0:
				result = result + self.partial(k).truncate(target) * vk

		return result

	#
	# elementary functions
	#

	def conj(self):
		return Jet(self.coeffs.conj(), self.numVars, self.order)

	def real(self):
		return Jet(self.coeffs.real, self.numVars, self.order)

	def imag(self):
		return Jet(self.coeffs.imag, self.numVars, self.order)

	def abs2(self):
		return self * self.conj()

	def exp(self):
		c = self.value()
		u = self - c

		result = Jet.constant(1.0, self.numVars, self.order)
		term   = Jet.constant(1.0, self.numVars, self.order)

		for k in range(1, self.order + 1):
			term   = term * u * (1.0 / k)
			result = result + term

		return result * cmath.exp(c)

	def log(self, label: str = None):
		c = self._checkNonZero('log', label)
		u = (self - c) * (1.0 / c)

		result = Jet.constant(cmath.log(c), self.numVars, self.order)
		power  = Jet.constant(1.0, self.numVars, self.order)

		for k in range(1, self.order + 1):
			power  = power * u
			result = result + power * (((-1.0) ** (k + 1)) / k)

		return result

	def reciprocal(self, label: str = None):
		c = self._checkNonZero('division', label)
		u = (self - c) * (-1.0 / c)

		result = Jet.constant(1.0, self.numVars, self.order)
		power  = Jet.constant(1.0, self.numVars, self.order)

		for k in range(1, self.order + 1):
			power  = power * u
			result = result + power

		return result * (1.0 / c)

	#
	# operators
	#

	def __add__(self, other):
		if isinstance(other, Jet):
			self._checkCompatible(other)

			return Jet(self.coeffs + other.coeffs, self.numVars, self.order)

		if isinstance(other, numbers.Number):
			coeffs = self.coeffs.copy()
			coeffs[0] += other

			return Jet(coeffs, self.numVars, self.order)

		return NotImplemented

	def __radd__(self, other):
		return self.__add__(other)

	def __sub__(self, other):
		if isinstance(other, Jet):
			self._checkCompatible(other)

			return Jet(self.coeffs - other.coeffs, self.numVars, self.order)

		if isinstance(other, numbers.Number):
			return self.__add__(-other)

		return NotImplemented

	def __rsub__(self, other):
		if isinstance(other, numbers.Number):
			return (-self).__add__(other)

		return NotImplemented

	def __neg__(self):
		return Jet(-self.coeffs, self.numVars, self.order)

	def __mul__(self, other):
		if isinstance(other, Jet):
			self._checkCompatible(other)

			return Jet(self.table.multiply(self.coeffs, other.coeffs), self.numVars, self.order)

		if isinstance(other, numbers.Number):
			return Jet(self.coeffs * other, self.numVars, self.order)

		return NotImplemented

	def __rmul__(self, other):
		return self.__mul__(other)

	def __truediv__(self, other):
		if isinstance(other, Jet):
			return self * other.reciprocal()

		if isinstance(other, numbers.Number):
			if abs(other) < ConfigConst.SINGULAR_THRESHOLD:
				raise DomainException("Division by zero constant", invariant = 'non-zero-divisor')

			return Jet(self.coeffs / other, self.numVars, self.order)

		return NotImplemented

	def __rtruediv__(self, other):
		if isinstance(other, numbers.Number):
			return self.reciprocal() * other

		return NotImplemented

	def __pow__(self, exponent):
		if not isinstance(exponent, numbers.Integral):
			raise JetException("Only integer powers are supported, got {}".format(exponent))

		exponent = int(exponent)

		if exponent < 0:
			return self.reciprocal().__pow__(-exponent)

		result = Jet.constant(1.0, self.numVars, self.order)
		base   = self

		while exponent > 0:
			if exponent & 1:
				result = result * base

			exponent >>= 1

			if exponent:
				base = base * base

		return result

	def __str__(self):
		return 'Jet(order={},numVars={},value={})'.format(self.order, self.numVars, self.value())

	__repr__ = __str__

	#
	# private methods
	#

	def _checkCompatible(self, other):
		if self.order != other.order or self.numVars != other.numVars:
			raise JetException("Jet mismatch: (order={}, numVars={}) vs (order={}, numVars={})".format(
				self.order, self.numVars, other.order, other.numVars))

	def _checkHoloIndex(self, alpha: int):
		if alpha < 0 or 2 * alpha + 1 > self.numVars - 2:
			raise JetException("Complex coordinate index {} out of range for n={}".format(alpha + 1, self.getN()))

	def _checkNonZero(self, what: str, label: str = None) -> complex:
		c = self.value()

		if abs(c) < ConfigConst.SINGULAR_THRESHOLD:
			raise DomainException("Singular {} at the base point".format(what),
				invariant = 'non-singular-' + what, subexpression = label)

		return c
