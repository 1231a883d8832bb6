#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus
from crschwarzian.engine.calculus.CurvatureCalculator import CurvatureCalculator
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.JetOps import JetOps
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel

class CommutationCalculator():
	"""
	Residuals of the commutation relations of Tanaka-Webster covariant
	derivatives of a scalar, each maximized over its free indices:

	  symmetric-holo     f_{;ab} - f_{;ba}
	  mixed-reeb         f_{;a bbar} - f_{;bbar a} - i f_0 h_{a bbar}
	  reeb-torsion       f_{;0a} - f_{;a0} - A_{ab} f^{;b}
	  curvature          f_{;ab gbar} - f_{;a gbar b} - i f_{;a0} h_{b gbar} - R_a^d_{b gbar} f_{;d}
	  torsion-derivative f_{;a0bbar} - f_{;abbar0} - f_{;ag} A^g_bbar - f_{;g} A^g_{bbar;a}
	  holo-torsion       f_{;abg} - f_{;agb} - i A_{ag} f_{;b} + i A_{ab} f_{;g}

	"""

	NAMES = ('symmetric-holo', 'mixed-reeb', 'reeb-torsion', 'curvature', 'torsion-derivative', 'holo-torsion')

	@staticmethod
	def commutationResiduals(model: BaseModel, field, point, tolerance: float = None) -> ResidualSet:
		"""
		@param model A BaseModel with connection jets of order 1.
		@param field Scalar field (FieldExpr or evaluable).
		@param point Real coordinates.
		@param tolerance Pass threshold; the commutation default if None.
		@return ResidualSet, one entry per relation.
		"""
		if tolerance is None:
			tolerance = ConfigConst.DEFAULT_TOLERANCES[ConfigConst.COMMUTATION_CHECK]

		frameJets = model.frameJetsAt(point, CovariantCalculus.frameOrderFor(3))
		fJet      = FieldExprEvaluator.evalField(field, JetPoint(point, 3))
		cd        = CovariantCalculus.covariantFromJet(frameJets, fJet, 3, str(field), point)

		n       = frameJets.getN()
		R       = frameJets.reeb()
		levi    = frameJets.leviValues()
		leviInv = frameJets.leviInvValues()
		A       = frameJets.torsionValues()
		AUp     = JetOps.values(frameJets.torsionUpper())
		riem    = CurvatureCalculator.curvatureFromJets(frameJets).getRiem()
		dA      = CovariantCalculus.torsionUpperDerivative(frameJets, CovariantCalculus.torsionDerivative(frameJets))
		up      = CovariantCalculus.raisedHolo(cd, leviInv)

		worst = dict.fromkeys(CommutationCalculator.NAMES, 0.0)

		def record(name: str, value: complex):
			worst[name] = max(worst[name], abs(value))

		for a in range(n):
			record('reeb-torsion', cd.get(R, a) - cd.get(a, R) - sum(A[a][b] * up[b] for b in range(n)))

			for b in range(n):
				record('symmetric-holo', cd.get(a, b) - cd.get(b, a))
				record('mixed-reeb', cd.get(a, n + b) - cd.get(n + b, a) - 1j * cd.get(R) * levi[a][b])
				record('torsion-derivative', cd.get(a, R, n + b) - cd.get(a, n + b, R)
					- sum(cd.get(a, g) * AUp[g][b] for g in range(n))
					- sum(cd.get(g) * dA[g][b][a] for g in range(n)))

				for g in range(n):
					record('curvature', cd.get(a, b, n + g) - cd.get(a, n + g, b) - 1j * cd.get(a, R) * levi[b][g]
						- sum(riem[a][d][b][g] * cd.get(d) for d in range(n)))
					record('holo-torsion', cd.get(a, b, g) - cd.get(a, g, b)
						- 1j * A[a][g] * cd.get(b) + 1j * A[a][b] * cd.get(g))

		residuals = ResidualSet()

		for name in CommutationCalculator.NAMES:
			residuals.addResidual(name, float(worst[name]), tolerance, point)

		return residuals
