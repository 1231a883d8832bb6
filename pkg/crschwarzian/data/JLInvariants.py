#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

class JLInvariants(object):
	"""
	Closed-form curvature invariants of a Jerison-Lee metric:
	scalar curvature, eta = -R/(n(n+1)) and the coefficient of the
	constant-curvature template, which equals -eta.

	"""

	def __init__(self, scalar: float = 0.0, eta: float = 0.0):
		self.scalar = float(scalar)
		self.eta    = float(eta)

	def getScalar(self) -> float:
		return self.scalar

	def getEta(self) -> float:
		return self.eta

	def getTemplateCoefficient(self) -> float:
		return -self.eta

	def __str__(self):
		return 'scalar={},eta={},templateCoefficient={}'.format(self.scalar, self.eta, self.getTemplateCoefficient())
