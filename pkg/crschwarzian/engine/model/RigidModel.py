#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.DomainException import DomainException
from crschwarzian.common.FieldExprException import FieldExprException
from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.engine.expr.FieldExpr import FieldExpr, Coord, T_COORD
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetOps import JetOps
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.FrameJets import FrameJets

class RigidModel(BaseModel):
	"""
	Rigid hypersurface Im w = F(z), F = Phi(z_1) + |z_2|^2 + ... + |z_n|^2,
	in coordinates (z, s) with s = Re w.

	Frame Z_alpha = d/dz^alpha + i F_alpha d/ds, T = 2 d/ds,
	eta = ds/2 + (i/2) sum(F_betabar dzbar^beta - F_beta dz^beta),
	theta^alpha = dz^alpha. Levi matrix h = F_{alpha betabar}; the only
	connection forms are omega_beta^alpha = h^{alpha sigmabar} d' h_{beta sigmabar},
	so Gamma^1_11 = d_z log Phi_{z zbar}; the torsion vanishes.

	"""

	def __init__(self, n: int, bigPhi: FieldExpr):
		"""
		Constructor.

		@param n CR dimension.
		@param bigPhi Real potential in (z1, zbar1).
		"""
		super(RigidModel, self).__init__(n, ModelKindEnum.RIGID)

		if bigPhi is None:
			raise FieldExprException("Rigid model needs a potential Phi")

		if bigPhi.maxCoordIndex() > 1 or RigidModel._usesCoord(bigPhi, T_COORD):
			raise FieldExprException("Rigid potential Phi may depend on z1 and zbar1 only: {}".format(bigPhi))

		self.bigPhi = bigPhi

		logging.debug("Created rigid model with Phi = %s", str(bigPhi))

	def getBigPhi(self) -> FieldExpr:
		return self.bigPhi

	def getMaxOrder(self) -> int:
		# Gamma at order K needs Phi at order K+3
		return ConfigConst.MAX_JET_ORDER - 3

	def describe(self) -> dict:
		spec = super().describe()
		spec[ConfigConst.MODEL_BIG_PHI_KEY] = str(self.bigPhi)

		return spec

	def getDescription(self) -> str:
		return 'rigid(n={},Phi={})'.format(self.n, self.bigPhi)

	def _buildFrameJets(self, jetPoint: JetPoint, order: int) -> FrameJets:
		n    = self.n
		size = 2 * n + 1
		s    = 2 * n

		potentialPoint = jetPoint.withOrder(order + 3)
		potential      = FieldExprEvaluator.evalRealField(self.bigPhi, potentialPoint, 'rigid potential Phi')

		for beta in range(1, n):
			potential = potential + potentialPoint.z(beta).abs2().real()

		levi00 = potential.wirtingerZ(0).wirtingerZbar(0)

		if levi00.value().real <= 0.0:
			raise DomainException("Phi_{{z zbar}} = {} is not positive at {}".format(
				levi00.value().real, jetPoint.getBase().tolist()), invariant = 'strict-pseudoconvexity',
				subexpression = str(self.bigPhi))

		gradient = [potential.wirtingerZ(b).truncate(order + 1) for b in range(n)]
		levi     = [[potential.wirtingerZ(a).wirtingerZbar(b) for b in range(n)] for a in range(n)]

		zero    = jetPoint.zero()
		vectors = [[zero] * size for _ in range(size)]
		coframe = [[zero] * size for _ in range(size)]
		eta     = [zero] * size

		for a in range(n):
			holo = [zero] * size
			holo[2 * a]     = jetPoint.constant(0.5)
			holo[2 * a + 1] = jetPoint.constant(-0.5j)
			holo[s]         = gradient[a] * 1j
			vectors[a]      = holo
			vectors[n + a]  = [entry.conj() for entry in holo]

			form = [zero] * size
			form[2 * a]     = jetPoint.constant(1.0)
			form[2 * a + 1] = jetPoint.constant(1.0j)
			coframe[a]      = form
			coframe[n + a]  = [entry.conj() for entry in form]

			eta[2 * a]     = (gradient[a].conj() - gradient[a]) * 0.5j
			eta[2 * a + 1] = (gradient[a].conj() + gradient[a]) * 0.5

		reebVector    = [zero] * size
		reebVector[s] = jetPoint.constant(2.0)
		vectors[s]    = reebVector

		eta[s]     = jetPoint.constant(0.5)
		coframe[s] = eta

		leviInv = [list(row) for row in zip(*JetOps.invertJetMatrix(levi, invariant = 'levi-positive'))]
		leviInv = [[entry.truncate(order) for entry in row] for row in leviInv]
		dLevi   = [[[levi[b][c].wirtingerZ(r) for c in range(n)] for b in range(n)] for r in range(n)]

		gamma = [[[0.0] * n for _ in range(n)] for _ in range(size)]

		for r in range(n):
			for b in range(n):
				for a in range(n):
					gamma[r][b][a] = sum((leviInv[a][c] * dLevi[r][b][c] for c in range(n)), Jet.zero(size, order))

		torsion = [[0.0] * n for _ in range(n)]

		return FrameJets(n, order, vectors, coframe, levi, gamma, torsion, frameTag = self.getFrameTag())

	@staticmethod
	def _usesCoord(expr: FieldExpr, kind: str) -> bool:
		if isinstance(expr, Coord):
			return expr.kind == kind

		return any(RigidModel._usesCoord(child, kind) for child in expr.children())
