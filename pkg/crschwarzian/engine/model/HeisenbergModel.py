#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.FrameJets import FrameJets

class HeisenbergModel(BaseModel):
	"""
	The Heisenberg group with left-invariant frame
	Z_alpha = d/dz^alpha + i zbar^alpha d/dt, contact form
	Theta = dt/2 + sum(x dy - y dx), theta^alpha = dz^alpha and Reeb
	field T = 2 d/dt (so that Theta(T) = 1). The Levi matrix is the
	identity; connection and torsion vanish.

	"""

	def __init__(self, n: int):
		super(HeisenbergModel, self).__init__(n, ModelKindEnum.HEISENBERG)

	def getDescription(self) -> str:
		return 'heisenberg(n={})'.format(self.n)

	def _buildFrameJets(self, jetPoint: JetPoint, order: int) -> FrameJets:
		n    = self.n
		size = 2 * n + 1
		t    = 2 * n

		zero    = jetPoint.zero()
		vectors = [[zero] * size for _ in range(size)]
		coframe = [[zero] * size for _ in range(size)]

		for a in range(n):
			x = jetPoint.x(a)
			y = jetPoint.y(a)

			# Z_a and its conjugate
			holo = [zero] * size
			holo[2 * a]     = jetPoint.constant(0.5)
			holo[2 * a + 1] = jetPoint.constant(-0.5j)
			holo[t]         = y + 1j * x
			vectors[a]      = holo
			vectors[n + a]  = [entry.conj() for entry in holo]

			# theta^a = dx + i dy
			form = [zero] * size
			form[2 * a]     = jetPoint.constant(1.0)
			form[2 * a + 1] = jetPoint.constant(1.0j)
			coframe[a]      = form
			coframe[n + a]  = [entry.conj() for entry in form]

		reebVector    = [zero] * size
		reebVector[t] = jetPoint.constant(2.0)
		vectors[t]    = reebVector

		theta    = [zero] * size
		theta[t] = jetPoint.constant(0.5)

		for a in range(n):
			theta[2 * a]     = -jetPoint.y(a)
			theta[2 * a + 1] = jetPoint.x(a)

		coframe[t] = theta

		levi    = [[jetPoint.constant(1.0 if a == b else 0.0) for b in range(n)] for a in range(n)]
		gamma   = [[[0.0] * n for _ in range(n)] for _ in range(size)]
		torsion = [[0.0] * n for _ in range(n)]

		return FrameJets(n, order, vectors, coframe, levi, gamma, torsion, frameTag = self.getFrameTag())
