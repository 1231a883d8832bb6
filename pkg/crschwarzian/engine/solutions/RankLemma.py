#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException

class RankLemma():
	"""
	For M = U (x) conj(V) - V (x) conj(U) with n >= 2, M can only be a
	multiple of the identity if that multiple is zero.

	"""

	@staticmethod
	def rankLemmaLambda(u, v) -> dict:
		"""
		@param u Complex n-vector.
		@param v Complex n-vector.
		@return {'is_scalar': bool, 'lambda': complex or None}
		"""
		u = calcLib.asarray(u, dtype = complex).reshape(-1)
		v = calcLib.asarray(v, dtype = complex).reshape(-1)
		n = u.size

		if n < 2 or v.size != n:
			raise ConfigException("Rank lemma needs two vectors of one length n >= 2, got {} and {}".format(n, v.size),
				invariant = 'rank-lemma-dimension')

		matrix = calcLib.outer(u, v.conj()) - calcLib.outer(v, u.conj())
		lam    = complex(calcLib.trace(matrix)) / n
		scalar = float(calcLib.linalg.norm(matrix - lam * calcLib.eye(n))) < ConfigConst.RANK_LEMMA_SCALAR_TOL

		return {'is_scalar': scalar, 'lambda': lam if scalar else None}
