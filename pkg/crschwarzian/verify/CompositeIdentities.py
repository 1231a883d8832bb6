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

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus
from crschwarzian.engine.calculus.CurvatureCalculator import CurvatureCalculator
from crschwarzian.engine.calculus.SchwarzianCalculator import SchwarzianCalculator
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel

class CompositeIdentities():
	"""
	Identities that combine covariant derivatives, curvature, torsion
	and the Graham-Lee operator: the Bochner formula for |dbar_b f|^2,
	the trace identity of P_alpha, the contact Hamiltonian of a Möbius
	solution and the torsion rank condition.

	All of them need connection jets of order 1.

	"""

	FRAME_ORDER = 1

	HAMILTONIAN_REEB_SUFFIX = '-reeb'
	HAMILTONIAN_FLOW_SUFFIX = '-flow'

	@staticmethod
	def bochnerResidual(model: BaseModel, f, point) -> float:
		"""
		|-Box_b |dbar_b f|^2 - RHS| for a real field f, with RHS

		  sum (|f_{abar bbar}|^2 + |f_{abar b}|^2)
		  - (n+1)/n (Box_b f)_{abar} fbar_a - 1/n f_abar (conj Box_b f)_a
		  + R_{a bbar} f^{;a} f^{;bbar}
		  - 1/n fbar_a conj(P_a fbar) + (n-1)/n f_abar P_a fbar

		and all indices contracted with the Levi form.

		@param model A BaseModel with connection jets of order 1.
		@param f Real field, evaluable to jet order 4.
		@param point Real coordinates.
		@return float
		"""
		frameJets = model.frameJetsAt(point, CompositeIdentities.FRAME_ORDER)
		fJet      = FieldExprEvaluator.evalRealField(f, JetPoint(point, ConfigConst.MAX_JET_ORDER), 'Bochner field')
		cd        = CovariantCalculus.covariantFromJet(frameJets, fJet, 3, str(f), point)

		n  = frameJets.getN()
		G  = frameJets.leviInvValues()
		A  = frameJets.torsionValues()

		first = CovariantCalculus.scalarLevels(frameJets, fJet, 1)[0]
		gJet  = CovariantCalculus.dbarNorm2Jet(frameJets, first)
		gCd   = CovariantCalculus.covariantFromJet(frameJets, gJet, 2, '|dbar f|^2', point)
		lhs   = -CovariantCalculus.kohn(gCd, G)

		ricci  = CurvatureCalculator.curvatureFromJets(frameJets).getRicci()
		P      = CovariantCalculus.grahamLee(cd, G, A)
		up     = CovariantCalculus.raisedHolo(cd, leviInv = G)
		upBar  = CovariantCalculus.raisedAntiholo(cd, leviInv = G)
		dKohn  = [-sum(G[g][b] * cd.get(n + b, g, j) for g in range(n) for b in range(n)) for j in range(2 * n)]
		fBar   = [cd.get(n + a) for a in range(n)]

		hessian = 0j
		for a in range(n):
			for b in range(n):
				for g in range(n):
					for d in range(n):
						hessian += G[g][a] * G[d][b] * cd.get(n + a, n + b) * cd.get(n + g, n + d).conjugate()
						hessian += G[g][a] * G[b][d] * cd.get(n + a, b) * cd.get(n + g, d).conjugate()

		kohnTerms = sum(
			-(n + 1) / n * G[b][a] * dKohn[n + a] * fBar[b].conjugate()
			- 1.0 / n * G[b][a] * fBar[a] * dKohn[n + b].conjugate()
			for a in range(n) for b in range(n))

		ricciTerm = sum(ricci[a][b] * up[a] * upBar[b] for a in range(n) for b in range(n))

		pTerms = sum(
			-1.0 / n * G[a][b] * fBar[a].conjugate() * P[b].conjugate()
			+ (n - 1) / n * G[b][a] * fBar[a] * P[b]
			for a in range(n) for b in range(n))

		rhs = hessian + kohnTerms + ricciTerm + pTerms

		logging.debug("Bochner at %s: lhs=%s, rhs=%s", list(point), lhs, rhs)

		return float(abs(lhs - rhs))

	@staticmethod
	def grahamLeeTraceResidual(model: BaseModel, f, point) -> float:
		"""
		max_a |((n-1)/n) P_a f - h^{nu bbar} (f_{a bbar nu} - (1/n) f_{g}^{g}_{nu} h_{a bbar})|.

		Holds where the torsion vanishes.

		"""
		cd = CovariantCalculus.covariantJet(model, f, point, 3)

		frameJets = model.frameJetsAt(point, CompositeIdentities.FRAME_ORDER)

		n    = cd.getN()
		G    = frameJets.leviInvValues()
		levi = frameJets.leviValues()
		P    = CovariantCalculus.grahamLee(cd, G, frameJets.torsionValues())

		trace = [sum(G[g][d] * cd.get(g, n + d, nu) for g in range(n) for d in range(n)) for nu in range(n)]
		worst = 0.0

		for a in range(n):
			divergence = sum(G[nu][b] * (cd.get(a, n + b, nu) - trace[nu] * levi[a][b] / n) for nu in range(n) for b in range(n))
			worst      = max(worst, abs((n - 1) / n * P[a] - divergence))

		return float(worst)

	@staticmethod
	def hamiltonianCheck(model: BaseModel, phi, point, tolerance: float = None) -> ResidualSet:
		"""
		For a Möbius solution phi, f = e^{-2 phi} |dbar_b phi|^2 generates the
		infinitesimal automorphism X = H_f - f T. Residuals:

		  hamiltonian       max |f_{;ab} + i f A_{ab}|
		  hamiltonian-reeb  |f_0|            (asserted for n >= 2)
		  hamiltonian-flow  |X f|            (asserted for n >= 2)

		@param model A BaseModel with connection jets of order 1.
		@param phi Real exponent.
		@param point Real coordinates.
		@param tolerance Pass threshold; the hamiltonian default if None.
		@return ResidualSet
		"""
		name = ConfigConst.HAMILTONIAN_CHECK

		if tolerance is None:
			tolerance = ConfigConst.DEFAULT_TOLERANCES[name]

		mobius = SchwarzianCalculator.schwarzianAt(model, phi, point).maxAbs()

		if mobius > ConfigConst.MOBIUS_WARN_TOL:
			logging.warning("Exponent %s is not a Möbius solution at %s (max |B| = %e)", str(phi), list(point), mobius)

		frameJets = model.frameJetsAt(point, CompositeIdentities.FRAME_ORDER)
		phiJet    = FieldExprEvaluator.evalRealField(phi, JetPoint(point, 3), 'conformal exponent')
		first     = CovariantCalculus.scalarLevels(frameJets, phiJet, 1)[0]
		normJet   = CovariantCalculus.dbarNorm2Jet(frameJets, first)
		fJet      = (phiJet.truncate(normJet.getOrder()) * -2.0).exp() * normJet
		cd        = CovariantCalculus.covariantFromJet(frameJets, fJet, 2, 'hamiltonian', point)

		n     = frameJets.getN()
		G     = frameJets.leviInvValues()
		A     = frameJets.torsionValues()
		R     = cd.reeb()
		value = cd.getValue()

		infinitesimal = max(abs(cd.get(a, b) + 1j * value * A[a][b]) for a in range(n) for b in range(n))

		up    = CovariantCalculus.raisedHolo(cd, G)
		upBar = CovariantCalculus.raisedAntiholo(cd, G)
		flow  = sum(1j * upBar[a] * cd.get(n + a) - 1j * up[a] * cd.get(a) for a in range(n)) - value * cd.get(R)

		residuals = ResidualSet()
		residuals.addResidual(name, float(infinitesimal), tolerance, point)
		residuals.addResidual(name + CompositeIdentities.HAMILTONIAN_REEB_SUFFIX, float(abs(cd.get(R))), tolerance, point, asserted = n >= 2)
		residuals.addResidual(name + CompositeIdentities.HAMILTONIAN_FLOW_SUFFIX, float(abs(flow)), tolerance, point, asserted = n >= 2)

		return residuals

	@staticmethod
	def torsionRankCheck(model: BaseModel, phi, samples: list, tolerance: float = None) -> ResidualSet:
		"""
		max over samples of |A_{ab} phi_g - A_{ag} phi_b|.

		@param model A BaseModel with n >= 2.
		@param phi Real exponent, a Möbius solution on the samples.
		@param samples Real coordinate vectors.
		@param tolerance Pass threshold; the torsion-rank default if None.
		@return ResidualSet
		"""
		if model.getN() < 2:
			raise ConfigException("Torsion rank condition needs n >= 2, got {}".format(model.getN()), invariant = 'torsion-rank-dimension')

		if not samples:
			raise ConfigException("Torsion rank check needs at least one sample point", invariant = 'samples-positive')

		if tolerance is None:
			tolerance = ConfigConst.DEFAULT_TOLERANCES[ConfigConst.TORSION_RANK_CHECK]

		n         = model.getN()
		residuals = ResidualSet()

		for point in samples:
			A    = model.frameDataAt(point).getTorsion()
			cd   = CovariantCalculus.covariantJet(model, phi, point, 1)
			grad = calcLib.array([cd.get(a) for a in range(n)])
			rank = calcLib.einsum('ab,g->abg', A, grad) - calcLib.einsum('ag,b->abg', A, grad)

			residuals.addResidual(ConfigConst.TORSION_RANK_CHECK, float(calcLib.max(calcLib.abs(rank))), tolerance, point)

		return residuals
