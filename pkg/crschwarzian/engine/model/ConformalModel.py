#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.data.DataUtil import DataUtil
from crschwarzian.data.JLParams import JLParams

from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.FrameJets import FrameJets

class ConformalModel(BaseModel):
	"""
	The rescaled structure theta_hat = e^{2 phi} theta of a base model.

	Stacks are flattened: the frame data are always computed from the
	root (non-conformal) model and the sum of all stacked exponents.
	With phi_a = e_a(phi) in the base frame and phi^a = h^{a bbar} phi_bbar:

	  Z_hat_a = e^{-phi} Z_a
	  T_hat   = e^{-2 phi} (T - 2i phi^g Z_g + 2i phi^gbar Z_gbar)
	  theta_hat^a = e^{phi} (theta^a + 2i phi^a theta)
	  A_hat_ab    = e^{-2 phi} (A_ab + 2i phi_{;ab} - 4i phi_a phi_b)

	and the Christoffel symbols follow the transformation of the
	connection form, evaluated on the hatted frame. All components refer
	to the hatted coframe (frame tag 'theta_hat').

	"""

	FRAME_TAG = 'theta_hat'

	def __init__(self, base: BaseModel, field, jlParams: JLParams = None):
		"""
		Constructor.

		@param base The model being rescaled (may itself be conformal).
		@param field Real conformal exponent phi (FieldExpr or evaluable).
		@param jlParams The Jerison-Lee parameters 'field' was built from, if any.
		"""
		if base is None or field is None:
			raise ConfigException("Conformal model needs a base model and a conformal exponent",
				invariant = 'conformal-spec')

		super(ConformalModel, self).__init__(base.getN(), ModelKindEnum.CONFORMAL)

		self.base     = base
		self.field    = field
		self.jlParams = jlParams

		if isinstance(base, ConformalModel):
			self.root   = base.getRoot()
			self.fields = base.getFields() + [field]
		else:
			self.root   = base
			self.fields = [field]

		if self.getMaxOrder() < 0:
			raise ConfigException("Conformal exponent {} cannot be differentiated far enough for a frame".format(field),
				invariant = 'conformal-order')

		logging.debug("Created %s with %d stacked exponent(s)", self.getDescription(), len(self.fields))

	def getBase(self) -> BaseModel:
		return self.base

	def getField(self):
		return self.field

	def getFields(self) -> list:
		return list(self.fields)

	def getJLParams(self) -> JLParams:
		return self.jlParams

	def getRoot(self) -> BaseModel:
		return self.root

	def getFrameTag(self) -> str:
		return ConformalModel.FRAME_TAG

	def getMaxOrder(self) -> int:
		# Gamma at order K needs phi at order K+2 and base vectors at K+1
		fieldCap = min(ConformalModel._fieldMaxOrder(f) for f in self.fields) - 2

		return min(self.root.getMaxOrder(), fieldCap)

	def describe(self) -> dict:
		spec = super().describe()

		if self.jlParams is not None:
			spec[ConfigConst.MODEL_JL_KEY] = DataUtil().jlParamsToDict(self.jlParams)
		else:
			spec[ConfigConst.MODEL_PHI_KEY] = str(self.field)

		spec[ConfigConst.MODEL_BASE_KEY] = self.base.describe()

		return spec

	def getDescription(self) -> str:
		return 'conformal({},phi={})'.format(self.base.getDescription(), self.field)

	def conformalJetAt(self, jetPoint: JetPoint) -> Jet:
		"""
		Jet of the total exponent (sum over the stack) at the jet point.

		"""
		total = None

		for field in self.fields:
			term = FieldExprEvaluator.evalRealField(field, jetPoint, 'conformal factor')

			if total is None:
				total = term
			else:
				left, right = Jet.align(total, term)
				total = left + right

		return total

	def _buildFrameJets(self, jetPoint: JetPoint, order: int) -> FrameJets:
		# local import: the covariant engine itself depends on FrameJets only
		from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus

		n    = self.n
		size = 2 * n + 1
		R    = 2 * n
		K    = order

		base = self.root.frameJetsAt(jetPoint.getBase(), K)
		phi  = self.conformalJetAt(jetPoint.withOrder(K + 2)).truncate(K + 2)

		V = base.vectors
		G = base.getLeviInv()
		h = base.getLevi()
		A = base.getTorsion()

		# first and second covariant derivatives of phi in the base frame
		levels = CovariantCalculus.scalarLevels(base, phi, 2)
		d1     = {j: levels[0][(j,)] for j in range(size)}
		d2     = levels[1]

		up    = [sum((G[a][b] * d1[n + b] for b in range(n)), Jet.zero(size, K + 1)) for a in range(n)]
		upBar = [entry.conj() for entry in up]

		def lo(x: Jet) -> Jet:
			return x.truncate(K)

		expMinus  = (-phi).exp()
		expPlus   = phi.exp()
		expMinus1 = expMinus.truncate(K + 1)
		expMinus2 = (expMinus * expMinus).truncate(K + 1)

		# frame
		vectors = [None] * size

		for a in range(n):
			vectors[a]     = [expMinus1 * comp for comp in V[a]]
			vectors[n + a] = [expMinus1 * comp for comp in V[n + a]]

		reeb = list(V[R])

		for g in range(n):
			reeb = [r - 2j * up[g] * zg + 2j * upBar[g] * zgb for r, zg, zgb in zip(reeb, V[g], V[n + g])]

		vectors[R] = [expMinus2 * comp for comp in reeb]

		# coframe
		theta      = base.coframe[R]
		expPlus1   = expPlus.truncate(K + 1)
		coframe    = [None] * size
		coframe[R] = [(expPlus1 * expPlus1) * comp for comp in theta]

		for a in range(n):
			row = [expPlus1 * (ca + 2j * up[a] * ct) for ca, ct in zip(base.coframe[a], theta)]
			coframe[a]     = row
			coframe[n + a] = [entry.conj() for entry in row]

		# connection, evaluated on the base frame first
		gamma = base.getGamma()
		hK    = [[lo(entry) for entry in row] for row in h]
		GK    = [[lo(entry) for entry in row] for row in G]
		p1    = {j: lo(d1[j]) for j in range(size)}
		pu    = [lo(entry) for entry in up]
		pub   = [entry.conj() for entry in pu]
		zero  = Jet.zero(size, K)

		def delta(a: int, b: int) -> float:
			return 1.0 if a == b else 0.0

		normSq = sum((p1[g] * pu[g] for g in range(n)), zero)

		holoL = [[[lo(gamma[r][b][a]) + 2.0 * p1[b] * delta(a, r) + delta(a, b) * p1[r]
			for a in range(n)] for b in range(n)] for r in range(n)]

		mixedL = [[[lo(gamma[n + r][b][a]) - 2.0 * pu[a] * hK[b][r] - delta(a, b) * p1[n + r]
			for a in range(n)] for b in range(n)] for r in range(n)]

		reebL = [[lo(gamma[R][b][a]) + 1j * (
			sum((GK[a][g] * (d2[(n + g, b)] + d2[(b, n + g)]) for g in range(n)), zero)
			+ 4.0 * p1[b] * pu[a] + 4.0 * delta(a, b) * normSq)
			for a in range(n)] for b in range(n)]

		eK1 = lo(expMinus)
		eK2 = lo(expMinus * expMinus)

		hatGamma = [None] * size

		for r in range(n):
			hatGamma[r]     = [[eK1 * holoL[r][b][a] for a in range(n)] for b in range(n)]
			hatGamma[n + r] = [[eK1 * mixedL[r][b][a] for a in range(n)] for b in range(n)]

		hatGamma[R] = [[eK2 * (reebL[b][a]
			- 2j * sum((pu[g] * holoL[g][b][a] for g in range(n)), zero)
			+ 2j * sum((pub[g] * mixedL[g][b][a] for g in range(n)), zero))
			for a in range(n)] for b in range(n)]

		# torsion
		torsion = [[eK2 * (lo(A[a][b]) + 2j * d2[(a, b)] - 4j * p1[a] * p1[b]) for b in range(n)] for a in range(n)]

		return FrameJets(n, K, vectors, coframe, h, hatGamma, torsion, conformal = phi, frameTag = self.getFrameTag())

	@staticmethod
	def _fieldMaxOrder(field) -> int:
		if hasattr(field, 'getMaxJetOrder'):
			return field.getMaxJetOrder()

		return ConfigConst.MAX_JET_ORDER
