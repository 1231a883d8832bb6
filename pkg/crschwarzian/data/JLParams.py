#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

from crschwarzian.common.ConfigException import ConfigException

class JLParams(object):
	"""
	Parameters (kappa, mu, lambda, C) of the Jerison-Lee solution
	phi = -log|G| + C, G = kappa (t + i|z|^2) + z.mu + lambda.

	"""

	def __init__(self, kappa: complex = 0j, mu = None, lambdaParam: complex = 1 + 0j, c: float = 0.0):
		"""
		Constructor.

		@param kappa Coefficient of w = t + i|z|^2.
		@param mu Complex n-vector multiplying z.
		@param lambdaParam Constant term of G.
		@param c Additive constant C of phi.
		"""
		self.kappa       = complex(kappa)
		self.mu          = calcLib.zeros(1, dtype = complex) if mu is None else calcLib.asarray(mu, dtype = complex).reshape(-1)
		self.lambdaParam = complex(lambdaParam)
		self.c           = float(c)

	def getKappa(self) -> complex:
		return self.kappa

	def getMu(self) -> calcLib.ndarray:
		return self.mu.copy()

	def getLambda(self) -> complex:
		return self.lambdaParam

	def getC(self) -> float:
		return self.c

	def getN(self) -> int:
		return self.mu.size

	def gValue(self, point) -> complex:
		"""
		G at a real point (x_1, y_1, ..., t).

		"""
		p = calcLib.asarray(point, dtype = float)
		n = self.mu.size
		z = p[0:2 * n:2] + 1j * p[1:2 * n:2]

		return self.kappa * (p[2 * n] + 1j * float(calcLib.sum(calcLib.abs(z) ** 2))) + complex(z @ self.mu) + self.lambdaParam

	def validate(self, n: int = None):
		"""
		Raises ConfigException unless (kappa, mu, lambda) is non-zero and
		mu has length n (when n is given).

		"""
		if self.kappa == 0 and self.lambdaParam == 0 and not calcLib.any(self.mu):
			raise ConfigException("Jerison-Lee parameters are all zero", invariant = 'non-zero-jl-parameters')

		if n is not None and self.mu.size != n:
			raise ConfigException("Jerison-Lee mu has {} entries, expected n={}".format(self.mu.size, n),
				invariant = 'jl-arity')

	def __eq__(self, other):
		return isinstance(other, JLParams) and self.kappa == other.kappa and self.lambdaParam == other.lambdaParam \
			and self.c == other.c and calcLib.array_equal(self.mu, other.mu)

	def __str__(self):
		return 'kappa={},mu={},lambda={},C={}'.format(self.kappa, self.mu.tolist(), self.lambdaParam, self.c)
