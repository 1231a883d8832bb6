#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import itertools
import logging
import math
import threading

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.JetException import JetException

class MultiIndexTable():
	"""
	Dense layout of all multi-indices of total degree <= order over
	'numVars' real coordinates, plus the precomputed index maps used by
	Jet arithmetic.

	Multi-indices are sorted by degree, and within one degree in an
	order that does not depend on the table order. The table of a lower
	order is therefore a prefix of the table of a higher order, which
	makes truncation a slice.

	Tables are immutable and shared; use MultiIndexTable.get().

	"""

	_cache = {}
	_lock  = threading.Lock()

	@classmethod
	def get(cls, numVars: int, order: int):
		"""
		Returns the shared table for (numVars, order).

		@param numVars Number of real coordinates.
		@param order Maximal total degree.
		@return MultiIndexTable
		"""
		if order < ConfigConst.MIN_JET_ORDER or order > ConfigConst.MAX_JET_ORDER:
			raise JetException("Jet order must lie in [{}, {}], got {}".format(
				ConfigConst.MIN_JET_ORDER, ConfigConst.MAX_JET_ORDER, order))

		if numVars < 1:
			raise JetException("Jets need at least one variable, got {}".format(numVars))

		key = (numVars, order)

		with cls._lock:
			table = cls._cache.get(key)

			if table is None:
				table = MultiIndexTable(numVars, order)
				cls._cache[key] = table

		return table

	def __init__(self, numVars: int, order: int):
		self.numVars = numVars
		self.order   = order

		exponents = []
		self.degreeCounts = []

		for degree in range(order + 1):
			for combo in itertools.combinations_with_replacement(range(numVars), degree):
				exps = [0] * numVars

				for k in combo:
					exps[k] += 1

				exponents.append(tuple(exps))

			self.degreeCounts.append(len(exponents))

		self.exponents  = exponents
		self.size       = len(exponents)
		self.lookup     = {m: pos for pos, m in enumerate(exponents)}
		self.degrees    = calcLib.array([sum(m) for m in exponents], dtype = int)
		self.factorials = calcLib.array([math.prod(math.factorial(e) for e in m) for m in exponents], dtype = float)

		self._buildProductMap()
		self._buildDerivativeMaps()

		logging.debug("Built multi-index table: vars=%d, order=%d, size=%d, pairs=%d",
			numVars, order, self.size, len(self.leftIdx))

	def countForOrder(self, order: int) -> int:
		"""
		Number of multi-indices with degree <= order.

		@param order A degree not exceeding this table's order.
		@return int
		"""
		return self.degreeCounts[order]

	def indexOf(self, exponents) -> int:
		"""
		Returns the dense position of a multi-index.

		@param exponents Sequence of non-negative integers of length numVars.
		@return int
		"""
		key = tuple(int(e) for e in exponents)

		if key not in self.lookup:
			raise JetException("Multi-index {} exceeds order {}".format(key, self.order))

		return self.lookup[key]

	def unitIndex(self, var: int) -> int:
		exps = [0] * self.numVars
		exps[var] = 1

		return self.lookup[tuple(exps)]

	def multiply(self, a: calcLib.ndarray, b: calcLib.ndarray) -> calcLib.ndarray:
		"""
		Truncated Cauchy product of two dense coefficient vectors.

		"""
		if self.size == 1:
			return a * b

		return calcLib.add.reduceat(a[self.leftIdx] * b[self.rightIdx], self.segmentStarts)

	def differentiate(self, coeffs: calcLib.ndarray, var: int) -> calcLib.ndarray:
		"""
		Taylor coefficients of the partial derivative in 'var'. The
		result belongs to the table of order - 1.

		"""
		src, mult = self.derivativeMaps[var]

		return coeffs[src] * mult

	def _buildProductMap(self):
		left  = []
		right = []
		dest  = []

		for i, mi in enumerate(self.exponents):
			degI = self.degrees[i]

			for j in range(self.degreeCounts[self.order - degI]):
				mj  = self.exponents[j]
				key = tuple(a + b for a, b in zip(mi, mj))

				left.append(i)
				right.append(j)
				dest.append(self.lookup[key])

		dest  = calcLib.array(dest, dtype = int)
		perm  = calcLib.argsort(dest, kind = 'stable')

		self.leftIdx  = calcLib.array(left, dtype = int)[perm]
		self.rightIdx = calcLib.array(right, dtype = int)[perm]

		sortedDest = dest[perm]

		# every destination occurs at least once (pair with the zero index)
		self.segmentStarts = calcLib.searchsorted(sortedDest, calcLib.arange(self.size))

	def _buildDerivativeMaps(self):
		self.derivativeMaps = []

		if self.order == 0:
			return

		lowerCount = self.degreeCounts[self.order - 1]

		for var in range(self.numVars):
			src  = []
			mult = []

			for m in self.exponents[:lowerCount]:
				raised = list(m)
				raised[var] += 1

				src.append(self.lookup[tuple(raised)])
				mult.append(float(raised[var]))

			self.derivativeMaps.append((calcLib.array(src, dtype = int), calcLib.array(mult, dtype = float)))
