#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.DomainException import DomainException

from crschwarzian.engine.expr.FieldExpr import FieldExpr
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetPoint import JetPoint

class LeviDensityField():
	"""
	The exponent sigma = -1/4 log Phi_{z zbar} of a rigid potential.

	Rescaling the rigid contact form by e^{2 sigma} makes the holomorphic
	Christoffel symbol vanish. The field needs two derivatives of Phi, so
	the jet it returns is at most of order 2.

	"""

	def __init__(self, bigPhi: FieldExpr):
		self.bigPhi = bigPhi

	def getBigPhi(self) -> FieldExpr:
		return self.bigPhi

	def getMaxJetOrder(self) -> int:
		return ConfigConst.MAX_JET_ORDER - 2

	def maxCoordIndex(self) -> int:
		return 1

	def evaluate(self, jetPoint: JetPoint) -> Jet:
		order   = min(jetPoint.getOrder() + 2, ConfigConst.MAX_JET_ORDER)
		density = FieldExprEvaluator.evalRealField(self.bigPhi, jetPoint.withOrder(order), 'rigid potential Phi') \
			.wirtingerZ(0).wirtingerZbar(0)

		if density.value().real <= 0.0:
			raise DomainException("Phi_{{z zbar}} = {} is not positive".format(density.value().real),
				invariant = 'strict-pseudoconvexity', subexpression = str(self.bigPhi))

		return (density.log(str(self)) * -0.25).real()

	def __str__(self):
		return '-log(levi({}))/4'.format(self.bigPhi)
