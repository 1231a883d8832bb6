#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.DomainException import DomainException

from crschwarzian.data.JLInvariants import JLInvariants
from crschwarzian.data.JLParams import JLParams

from crschwarzian.engine.expr.FieldExpr import FieldExpr, asExpr
from crschwarzian.engine.expr.FieldExprFactory import FieldExprFactory

class JerisonLeeFamily():
	"""
	The explicit solutions phi = -log|G| + C of the Möbius equation on
	the Heisenberg group, G = kappa (t + i|z|^2) + z.mu + lambda, and the
	constructions built on them.

	"""

	MAX_SAMPLE_TRIES = 1000

	@staticmethod
	def gExpr(params: JLParams, n: int) -> FieldExpr:
		"""
		The CR function G as an expression.

		"""
		params.validate(n)

		expr  = asExpr(params.getLambda())
		kappa = params.getKappa()

		if kappa != 0:
			normSq = None

			for k in range(1, n + 1):
				term   = FieldExprFactory.abs2(FieldExprFactory.z(k))
				normSq = term if normSq is None else normSq + term

			expr = asExpr(kappa) * (FieldExprFactory.t() + asExpr(1j) * normSq) + expr

		if calcLib.any(params.getMu()):
			expr = FieldExprFactory.linear(params.getMu()) + expr

		return expr

	@staticmethod
	def jlField(params: JLParams, n: int) -> FieldExpr:
		"""
		phi = -1/2 log(abs2(G)) + C.

		@param params Family parameters.
		@param n CR dimension.
		@return FieldExpr
		"""
		expr = -FieldExprFactory.log(FieldExprFactory.abs2(JerisonLeeFamily.gExpr(params, n))) / 2

		if params.getC() != 0.0:
			expr = expr + params.getC()

		return expr

	@staticmethod
	def pluriharmonicField(params: JLParams, n: int) -> FieldExpr:
		"""
		u = Re G, a CR-pluriharmonic function.

		"""
		return FieldExprFactory.re(JerisonLeeFamily.gExpr(params, n))

	@staticmethod
	def jlInvariants(params: JLParams, n: int) -> JLInvariants:
		"""
		Closed-form scalar curvature e^{-2C} n(n+1)(4 Im(conj(kappa) lambda) - |mu|^2)
		of e^{2 phi} Theta, and eta = -R / (n(n+1)).

		"""
		params.validate(n)

		factor = n * (n + 1)
		core   = 4.0 * (params.getKappa().conjugate() * params.getLambda()).imag - float(calcLib.sum(calcLib.abs(params.getMu()) ** 2))
		scalar = calcLib.exp(-2.0 * params.getC()) * factor * core

		return JLInvariants(scalar = float(scalar), eta = float(-scalar / factor))

	@staticmethod
	def integrabilityWitness(n: int, point, omega) -> JLParams:
		"""
		Parameters of a solution whose horizontal gradient at 'point' is
		'omega': kappa = 0, mu = -2 omega, lambda = 1 - z(p).mu, so G(p) = 1.

		@param n CR dimension.
		@param point Real coordinates.
		@param omega Complex n-vector.
		@return JLParams
		"""
		p     = calcLib.asarray(point, dtype = float).reshape(-1)
		omega = calcLib.asarray(omega, dtype = complex).reshape(-1)

		if p.size != 2 * n + 1:
			raise ConfigException("Point has {} coordinates, expected {}".format(p.size, 2 * n + 1), invariant = 'point-arity')

		if omega.size != n:
			raise ConfigException("Covector has {} entries, expected n={}".format(omega.size, n), invariant = 'omega-arity')

		z  = p[0:2 * n:2] + 1j * p[1:2 * n:2]
		mu = -2.0 * omega

		params = JLParams(kappa = 0j, mu = mu, lambdaParam = 1.0 - complex(z @ mu), c = 0.0)

		logging.debug("Witness for omega=%s at %s: %s", omega.tolist(), p.tolist(), str(params))

		return params

	@staticmethod
	def randomParams(rng: calcLib.random.Generator, n: int, scale: float = 1.0) -> JLParams:
		"""
		Parameters with all components uniform in [-scale, scale].

		"""
		def draw(size = None):
			return rng.uniform(-scale, scale, size) + 1j * rng.uniform(-scale, scale, size)

		return JLParams(kappa = complex(draw()), mu = draw(n), lambdaParam = complex(draw()),
			c = float(rng.uniform(-0.5, 0.5)))

	@staticmethod
	def samplePoints(rng: calcLib.random.Generator, params: JLParams, n: int, count: int,
		radius: float = ConfigConst.DEFAULT_SAMPLE_RADIUS, minAbsG: float = ConfigConst.DEFAULT_JL_MIN_ABS_G) -> list:
		"""
		Uniform points in [-radius, radius]^(2n+1) with |G| > minAbsG.

		"""
		points = []
		tries  = 0

		while len(points) < count:
			tries += 1

			if tries > JerisonLeeFamily.MAX_SAMPLE_TRIES * count:
				raise DomainException("Could not find points with |G| > {} for {}".format(minAbsG, params),
					invariant = 'jl-non-vanishing')

			p = rng.uniform(-radius, radius, 2 * n + 1)

			if abs(params.gValue(p)) > minAbsG:
				points.append(p)

		return points
