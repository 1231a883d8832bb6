#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import numpy as calcLib

from crschwarzian.common.JetException import JetException

from crschwarzian.data.CovariantDerivatives import CovariantDerivatives
from crschwarzian.data.OperatorValues import OperatorValues

from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.FrameJets import FrameJets

class CovariantCalculus():
	"""
	Tanaka-Webster covariant derivatives of scalars and tensors in a
	model's moving frame, and the operators built from them.

	Tensors are dicts from tuples of frame indices to jets and must be
	complete (every index tuple present). Later indices differentiate:

	  u_{I;j} = e_j(u_I) - sum_s sum_d C[j][I_s][d] u_{I with slot s -> d}

	with C the connection table of FrameJets. Each differentiation costs
	one jet order; connection data are used at the resulting order.

	"""

	MAX_ORDER = 3

	@staticmethod
	def differentiate(frameJets: FrameJets, tensor: dict) -> dict:
		"""
		Covariant derivative of a complete tensor.

		@param frameJets Frame jets of the model at the point.
		@param tensor Map of index tuples to jets (one common order).
		@return Map of index tuples (one slot longer) to jets.
		"""
		size   = frameJets.getNumVars()
		table  = frameJets.connectionTable()
		result = {}

		if not tensor:
			return result

		inOrder = min(u.getOrder() for u in tensor.values())
		target  = min(inOrder - 1, frameJets.getOrder())

		if target < 0:
			raise JetException("Covariant derivative needs jets of order >= 1 and connection data, got order {}".format(inOrder))

		support = [CovariantCalculus._support(frameJets.getVector(j), target) for j in range(size)]

		for key, u in tensor.items():
			partials = {}

			for j in range(size):
				val = Jet.zero(size, target)

				for k, comp in support[j]:
					if k not in partials:
						partials[k] = u.partial(k).truncate(target)

					val = val + partials[k] * comp

				for slot, c in enumerate(key):
					for d, coeff in enumerate(table[j][c]):
						if coeff is None:
							continue

						other = tensor[key[:slot] + (d,) + key[slot + 1:]]
						val = val - coeff.truncate(target) * other.truncate(target)

				result[key + (j,)] = val

		return result

	@staticmethod
	def scalarLevels(frameJets: FrameJets, fJet: Jet, level: int) -> list:
		"""
		Tensors f_{;j}, f_{;jk}, ... up to 'level' as jets.

		@return List whose entry l-1 is the level-l tensor.
		"""
		if level < 1 or level > CovariantCalculus.MAX_ORDER + 1:
			raise JetException("Covariant order must lie in [1, {}], got {}".format(CovariantCalculus.MAX_ORDER + 1, level))

		size   = frameJets.getNumVars()
		target = min(fJet.getOrder() - 1, frameJets.getOrder() + 1)

		if target < 0:
			raise JetException("Scalar jet of order {} cannot be differentiated".format(fJet.getOrder()))

		first = {}

		for j in range(size):
			val = Jet.zero(size, target)

			for k, comp in CovariantCalculus._support(frameJets.getVector(j), target):
				val = val + fJet.partial(k).truncate(target) * comp

			first[(j,)] = val

		levels = [first]

		for _ in range(level - 1):
			levels.append(CovariantCalculus.differentiate(frameJets, levels[-1]))

		return levels

	@staticmethod
	def frameOrderFor(level: int) -> int:
		"""
		Connection order needed to reach covariant order 'level' at a point.

		"""
		return max(level - 2, 0)

	@staticmethod
	def covariantFromJet(frameJets: FrameJets, fJet: Jet, level: int, name: str = 'field', point = None) -> CovariantDerivatives:
		"""
		Values of all covariant derivatives of a scalar jet up to 'level'.

		"""
		levels = CovariantCalculus.scalarLevels(frameJets, fJet, level)
		data   = CovariantDerivatives(name = name, n = frameJets.getN(), point = point, frameTag = frameJets.getFrameTag())

		data.setValue(fJet.value())

		for tensor in levels:
			data.addLevel({key: val.value() for key, val in tensor.items()})

		return data

	@staticmethod
	def covariantJet(model, field, point, order: int) -> CovariantDerivatives:
		"""
		All covariant derivatives of 'field' at 'point' up to 'order'.

		@param model A BaseModel.
		@param field FieldExpr or another evaluable scalar.
		@param point Real coordinates.
		@param order 1, 2 or 3.
		@return CovariantDerivatives
		"""
		if order < 1 or order > CovariantCalculus.MAX_ORDER:
			raise JetException("Covariant order must lie in [1, {}], got {}".format(CovariantCalculus.MAX_ORDER, order))

		frameJets = model.frameJetsAt(point, CovariantCalculus.frameOrderFor(order))
		fJet      = FieldExprEvaluator.evalField(field, JetPoint(point, order))

		return CovariantCalculus.covariantFromJet(frameJets, fJet, order, str(field), point)

	#
	# operators on covariant derivative values
	#

	@staticmethod
	def sublaplacian(cd: CovariantDerivatives, leviInv: calcLib.ndarray) -> complex:
		"""
		Delta_b f = h^{a bbar} (f_{;a bbar} + f_{;bbar a}).

		"""
		n = cd.getN()

		return complex(sum(leviInv[a][b] * (cd.get(a, n + b) + cd.get(n + b, a)) for a in range(n) for b in range(n)))

	@staticmethod
	def kohn(cd: CovariantDerivatives, leviInv: calcLib.ndarray) -> complex:
		"""
		Box_b f = -f_{;bbar}^{bbar} = -h^{g bbar} f_{;bbar g}.

		"""
		n = cd.getN()

		return complex(-sum(leviInv[g][b] * cd.get(n + b, g) for g in range(n) for b in range(n)))

	@staticmethod
	def raisedHolo(cd: CovariantDerivatives, leviInv: calcLib.ndarray) -> calcLib.ndarray:
		"""
		f^{;a} = h^{a bbar} f_{;bbar}.

		"""
		n = cd.getN()

		return calcLib.array([sum(leviInv[a][b] * cd.get(n + b) for b in range(n)) for a in range(n)], dtype = complex)

	@staticmethod
	def raisedAntiholo(cd: CovariantDerivatives, leviInv: calcLib.ndarray) -> calcLib.ndarray:
		"""
		f^{;abar} = h^{b abar} f_{;b}.

		"""
		n = cd.getN()

		return calcLib.array([sum(leviInv[b][a] * cd.get(b) for b in range(n)) for a in range(n)], dtype = complex)

	@staticmethod
	def grahamLee(cd: CovariantDerivatives, leviInv: calcLib.ndarray, torsion: calcLib.ndarray) -> calcLib.ndarray:
		"""
		P_a f = h^{g bbar} f_{;bbar g a} + i n A_{a b} f^{;b}.

		"""
		n     = cd.getN()
		upper = CovariantCalculus.raisedHolo(cd, leviInv)

		return calcLib.array([
			sum(leviInv[g][b] * cd.get(n + b, g, a) for g in range(n) for b in range(n))
			+ 1j * n * sum(torsion[a][b] * upper[b] for b in range(n))
			for a in range(n)], dtype = complex)

	@staticmethod
	def dbarNorm2(cd: CovariantDerivatives, leviInv: calcLib.ndarray, conjugateCd: CovariantDerivatives = None) -> complex:
		"""
		|dbar_b f|^2 = h^{a bbar} conj(f_{;abar}) f_{;bbar}.

		"""
		n = cd.getN()

		return complex(sum(leviInv[a][b] * cd.get(n + a).conjugate() * cd.get(n + b) for a in range(n) for b in range(n)))

	@staticmethod
	def dbarNorm2Jet(frameJets: FrameJets, first: dict) -> Jet:
		"""
		|dbar_b f|^2 as a jet, from the level-1 tensor of f.

		"""
		n     = frameJets.getN()
		order = min(u.getOrder() for u in first.values())
		g     = frameJets.getLeviInv()

		return sum((g[a][b].truncate(order) * first[(n + a,)].truncate(order).conj() * first[(n + b,)].truncate(order)
			for a in range(n) for b in range(n)), Jet.zero(frameJets.getNumVars(), order))

	@staticmethod
	def operatorsFromDerivatives(cd: CovariantDerivatives, leviInv: calcLib.ndarray, torsion: calcLib.ndarray) -> OperatorValues:
		data = OperatorValues(name = cd.getName(), n = cd.getN(), point = cd.getPoint(), frameTag = cd.getFrameTag())

		data.setSublaplacian(CovariantCalculus.sublaplacian(cd, leviInv))
		data.setKohn(CovariantCalculus.kohn(cd, leviInv))
		data.setReeb(cd.get(cd.reeb()))
		data.setDbarNorm2(CovariantCalculus.dbarNorm2(cd, leviInv))

		if cd.getOrder() >= 3:
			data.setGrahamLee(CovariantCalculus.grahamLee(cd, leviInv, torsion))

		return data

	@staticmethod
	def operatorsAt(model, field, point) -> OperatorValues:
		"""
		Delta_b, Box_b, P_alpha, f_0 and |dbar_b f|^2 of 'field' at 'point'.

		@param model A BaseModel.
		@param field FieldExpr or another evaluable scalar.
		@param point Real coordinates.
		@return OperatorValues
		"""
		frameJets = model.frameJetsAt(point, CovariantCalculus.frameOrderFor(3))
		fJet      = FieldExprEvaluator.evalField(field, JetPoint(point, 3))
		cd        = CovariantCalculus.covariantFromJet(frameJets, fJet, 3, str(field), point)

		logging.debug("Operators of %s on %s at %s", str(field), model.getDescription(), str(list(point)))

		return CovariantCalculus.operatorsFromDerivatives(cd, frameJets.leviInvValues(), frameJets.torsionValues())

	#
	# torsion
	#

	@staticmethod
	def torsionTensor(frameJets: FrameJets) -> dict:
		"""
		The torsion as a complete 2-tensor: A on holomorphic slot pairs,
		conj(A) on antiholomorphic pairs, zero elsewhere.

		"""
		n     = frameJets.getN()
		size  = frameJets.getNumVars()
		order = frameJets.getOrder()
		zero  = Jet.zero(size, order)
		A     = frameJets.getTorsion()

		tensor = {}

		for c in range(size):
			for d in range(size):
				if c < n and d < n:
					tensor[(c, d)] = A[c][d]
				elif n <= c < 2 * n and n <= d < 2 * n:
					tensor[(c, d)] = A[c - n][d - n].conj()
				else:
					tensor[(c, d)] = zero

		return tensor

	@staticmethod
	def torsionDerivative(frameJets: FrameJets) -> dict:
		"""
		Covariant derivative of the torsion tensor, keyed (c, d, j).

		"""
		return CovariantCalculus.differentiate(frameJets, CovariantCalculus.torsionTensor(frameJets))

	@staticmethod
	def torsionUpperDerivative(frameJets: FrameJets, derivative: dict) -> calcLib.ndarray:
		"""
		Values D[g][b][a] = A^g_{bbar;a} = h^{g sbar} A_{sbar bbar;a}.

		"""
		n = frameJets.getN()
		G = frameJets.leviInvValues()

		result = calcLib.zeros((n, n, n), dtype = complex)

		for g in range(n):
			for b in range(n):
				for a in range(n):
					result[g][b][a] = sum(G[g][s] * derivative[(n + s, n + b, a)].value() for s in range(n))

		return result

	#
	# private methods
	#

	@staticmethod
	def _support(components, order: int) -> list:
		return [(k, comp.truncate(order)) for k, comp in enumerate(components) if comp.maxAbs() > 0.0]
