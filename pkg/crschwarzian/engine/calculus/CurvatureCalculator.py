#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import math

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.JetException import JetException
from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.data.CurvatureData import CurvatureData
from crschwarzian.data.ResidualSet import ResidualSet

from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus
from crschwarzian.engine.calculus.SchwarzianCalculator import SchwarzianCalculator
from crschwarzian.engine.jet.JetOps import JetOps
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.FrameJets import FrameJets
from crschwarzian.engine.model.ModelFactory import ModelFactory

class CurvatureCalculator():
	"""
	Webster curvature by exterior calculus.

	The connection forms omega_b^a are written in coordinates,
	w[k][b][a] = sum_j omega_b^a(e_j) theta^j_k, and the curvature form
	Pi = d omega - omega ^ omega is evaluated as the antisymmetric array

	  Pi[k][l] = d_k w[l] - d_l w[k] - (w[k] w[l] - w[l] w[k])

	so that Pi(X, Y) = sum X^k Y^l Pi[k][l]. R_b^a_{r sbar} = Pi(Z_r, Z_sbar)_b^a.
	Connection jets of order 1 are needed.

	"""

	CURVATURE_ORDER = 1

	@staticmethod
	def curvatureForm(frameJets: FrameJets) -> calcLib.ndarray:
		"""
		Values Pi[k][l][b][a] at the base point.

		"""
		if frameJets.getOrder() < 1:
			raise JetException("Curvature needs connection jets of order >= 1", invariant = 'curvature-order')

		n     = frameJets.getN()
		size  = frameJets.getNumVars()
		order = frameJets.getOrder()
		gamma = frameJets.getGamma()
		units = [[1 if i == k else 0 for i in range(size)] for k in range(size)]

		w0 = calcLib.zeros((size, n, n), dtype = complex)
		dw = calcLib.zeros((size, size, n, n), dtype = complex)

		for l in range(size):
			for b in range(n):
				for a in range(n):
					entry = sum(gamma[j][b][a] * frameJets.getCoframeRow(j)[l].truncate(order) for j in range(size))
					w0[l][b][a] = entry.value()

					for k in range(size):
						dw[k][l][b][a] = entry.derivative(units[k])

		pi = dw - dw.transpose(1, 0, 2, 3)

		for k in range(size):
			for l in range(size):
				pi[k][l] -= w0[k] @ w0[l] - w0[l] @ w0[k]

		return pi

	@staticmethod
	def evalForm(pi: calcLib.ndarray, x: calcLib.ndarray, y: calcLib.ndarray) -> calcLib.ndarray:
		return calcLib.einsum('k,l,klba->ba', x, y, pi)

	@staticmethod
	def riemannFromForm(pi: calcLib.ndarray, frame: calcLib.ndarray, n: int) -> calcLib.ndarray:
		riem = calcLib.zeros((n, n, n, n), dtype = complex)

		for r in range(n):
			for s in range(n):
				block = CurvatureCalculator.evalForm(pi, frame[r], frame[n + s])

				for b in range(n):
					for a in range(n):
						riem[b][a][r][s] = block[b][a]

		return riem

	@staticmethod
	def lowered(riem: calcLib.ndarray, levi: calcLib.ndarray) -> calcLib.ndarray:
		"""
		R_{b abar r sbar} = R_b^g_{r sbar} h_{g abar}.

		"""
		return calcLib.einsum('bgrs,ga->bars', riem, levi)

	@staticmethod
	def chernMoser(riem: calcLib.ndarray, ricci: calcLib.ndarray, scalar: float, levi: calcLib.ndarray,
		leviInv: calcLib.ndarray) -> calcLib.ndarray:
		"""
		S_b^a_{g sbar}: the trace-free part of the curvature tensor.

		"""
		n      = levi.shape[0]
		delta  = calcLib.eye(n)
		ricUp  = calcLib.einsum('ag,bg->ba', leviInv, ricci)
		result = riem.astype(complex).copy()

		for b in range(n):
			for a in range(n):
				for g in range(n):
					for s in range(n):
						result[b][a][g][s] -= (ricUp[b][a] * levi[g][s] + ricUp[g][a] * levi[b][s]
							+ delta[b][a] * ricci[g][s] + delta[g][a] * ricci[b][s]) / (n + 2)
						result[b][a][g][s] += scalar * (delta[b][a] * levi[g][s] + delta[g][a] * levi[b][s]) / ((n + 1) * (n + 2))

		return result

	@staticmethod
	def constantCurvatureFit(riem: calcLib.ndarray, levi: calcLib.ndarray) -> tuple:
		"""
		Least-squares c with R_{b abar r sbar} ~ c (h_{b abar} h_{r sbar} + h_{r abar} h_{b sbar}).

		@return (c, max residual)
		"""
		low      = CurvatureCalculator.lowered(riem, levi)
		template = calcLib.einsum('ba,rs->bars', levi, levi) + calcLib.einsum('ra,bs->bars', levi, levi)
		c        = (calcLib.vdot(template, low) / calcLib.vdot(template, template)).real

		return float(c), float(calcLib.max(calcLib.abs(low - c * template)))

	@staticmethod
	def curvatureFromJets(frameJets: FrameJets, name: str = ConfigConst.NOT_SET, point = None) -> CurvatureData:
		n       = frameJets.getN()
		levi    = frameJets.leviValues()
		leviInv = frameJets.leviInvValues()
		frame   = JetOps.values(frameJets.vectors)

		pi     = CurvatureCalculator.curvatureForm(frameJets)
		riem   = CurvatureCalculator.riemannFromForm(pi, frame, n)
		ricci  = calcLib.einsum('aars->rs', riem)
		scalar = complex(calcLib.sum(leviInv * ricci)).real

		data = CurvatureData(name = name, n = n, point = point, frameTag = frameJets.getFrameTag())

		data.setRiem(riem)
		data.setRicci(ricci)
		data.setScalar(scalar)
		data.setSchouten((ricci - scalar * levi / (2 * n + 2)) / (n + 2))
		data.setTraceFreeRicci(ricci - (scalar / n) * levi)
		data.setChernMoser(CurvatureCalculator.chernMoser(riem, ricci, scalar, levi, leviInv))
		data.setTorsion(frameJets.torsionValues())
		data.setConstantCurvatureFit(*CurvatureCalculator.constantCurvatureFit(riem, levi))

		return data

	@staticmethod
	def curvatureAt(model: BaseModel, point) -> CurvatureData:
		"""
		Curvature, Ricci, scalar curvature, Schouten and Chern-Moser
		tensors at 'point', in the model's coframe.

		@param model A BaseModel providing connection jets of order 1.
		@param point Real coordinates.
		@return CurvatureData
		"""
		frameJets = model.frameJetsAt(point, CurvatureCalculator.CURVATURE_ORDER)
		data      = CurvatureCalculator.curvatureFromJets(frameJets, model.getDescription(), point)

		logging.debug("Curvature of %s at %s: scalar=%f", model.getDescription(), str(list(point)), data.getScalar())

		return data

	#
	# consistency residuals
	#

	@staticmethod
	def symmetryResidual(data: CurvatureData, levi: calcLib.ndarray, leviInv: calcLib.ndarray) -> float:
		"""
		Largest violation of R_{b abar r sbar} = R_{r abar b sbar},
		conj(R_{b abar r sbar}) = R_{a bbar s rbar}, hermitian Ricci and
		the trace chain.

		"""
		low   = CurvatureCalculator.lowered(data.getRiem(), levi)
		ricci = data.getRicci()

		return float(max(
			calcLib.max(calcLib.abs(low - low.transpose(2, 1, 0, 3))),
			calcLib.max(calcLib.abs(low.conj() - low.transpose(1, 0, 3, 2))),
			calcLib.max(calcLib.abs(ricci - ricci.conj().T)),
			abs(complex(calcLib.sum(leviInv * ricci)) - data.getScalar()),
			abs(complex(calcLib.einsum('aars,rs->', data.getRiem(), leviInv)) - data.getScalar())))

	@staticmethod
	def closureResidual(model: BaseModel, point) -> float:
		"""
		Residual of the structure equation beyond the (1,1) part:

		  Pi(Z_r, Z_g)       = -i (A_{b r} delta^a_g - A_{b g} delta^a_r)
		  Pi(Z_rbar, Z_gbar) =  i (h_{b rbar} A^a_gbar - h_{b gbar} A^a_rbar)
		  Pi(Z_rbar, T)      = -A^a_{rbar;b}
		  Pi(Z_r, T)         =  A_{b r;}^a

		"""
		frameJets = model.frameJetsAt(point, CurvatureCalculator.CURVATURE_ORDER)

		n       = frameJets.getN()
		R       = frameJets.reeb()
		levi    = frameJets.leviValues()
		leviInv = frameJets.leviInvValues()
		A       = frameJets.torsionValues()
		AUp     = JetOps.values(frameJets.torsionUpper())
		frame   = JetOps.values(frameJets.vectors)
		delta   = calcLib.eye(n)

		pi         = CurvatureCalculator.curvatureForm(frameJets)
		derivative = CovariantCalculus.torsionDerivative(frameJets)
		upperD     = CovariantCalculus.torsionUpperDerivative(frameJets, derivative)

		worst = 0.0

		for r in range(n):
			for g in range(n):
				holo  = CurvatureCalculator.evalForm(pi, frame[r], frame[g])
				anti  = CurvatureCalculator.evalForm(pi, frame[n + r], frame[n + g])
				exp20 = -1j * (calcLib.outer(A[:, r], delta[g]) - calcLib.outer(A[:, g], delta[r]))
				exp02 = 1j * (calcLib.outer(levi[:, r], AUp[:, g]) - calcLib.outer(levi[:, g], AUp[:, r]))

				worst = max(worst, float(calcLib.max(calcLib.abs(holo - exp20))), float(calcLib.max(calcLib.abs(anti - exp02))))

			mixedT = CurvatureCalculator.evalForm(pi, frame[n + r], frame[R])
			holoT  = CurvatureCalculator.evalForm(pi, frame[r], frame[R])

			for b in range(n):
				for a in range(n):
					expMixed = -upperD[a][r][b]
					expHolo  = sum(leviInv[a][s] * derivative[(b, r, n + s)].value() for s in range(n))

					worst = max(worst, abs(mixedT[b][a] - expMixed), abs(holoT[b][a] - expHolo))

		return worst

	@staticmethod
	def contactResidual(model: BaseModel, point) -> float:
		"""
		d theta = i h_{a bbar} theta^a ^ theta^bbar on frame pairs, with
		d theta(X, Y) = -theta([X, Y]) since theta is constant on the frame:

		  -theta([Z_a, Z_bbar]) = i h_{a bbar}
		   theta([Z_a, Z_b]) = theta([T, Z_a]) = theta([T, Z_abar]) = 0

		"""
		frameJets = model.frameJetsAt(point, 0)

		n     = frameJets.getN()
		R     = frameJets.reeb()
		theta = calcLib.array([entry.value() for entry in frameJets.getCoframeRow(R)])
		levi  = frameJets.leviValues()

		def pairing(i: int, j: int) -> complex:
			return complex(theta @ CurvatureCalculator._lieBracket(frameJets.getVector(i), frameJets.getVector(j)))

		worst = 0.0

		for a in range(n):
			worst = max(worst, abs(pairing(R, a)), abs(pairing(R, n + a)))

			for b in range(n):
				worst = max(worst, abs(-pairing(a, n + b) - 1j * levi[a][b]), abs(pairing(a, b)))

		return float(worst)

	@staticmethod
	def bracketResidual(model: BaseModel, point) -> float:
		"""
		Compares the connection data with Lie brackets of the frame:

		  Gamma^a_{rbar b} = theta^a([Z_rbar, Z_b])
		  Gamma^a_{0 b}    = theta^a([T, Z_b])
		  A_{a b}          = -h_{b gbar} theta^gbar([T, Z_a])

		"""
		frameJets = model.frameJetsAt(point, 0)

		n       = frameJets.getN()
		R       = frameJets.reeb()
		coframe = JetOps.values(frameJets.coframe)
		levi    = frameJets.leviValues()
		gamma   = frameJets.getGamma()
		A       = frameJets.torsionValues()

		def bracket(i: int, j: int) -> calcLib.ndarray:
			return coframe @ CurvatureCalculator._lieBracket(frameJets.getVector(i), frameJets.getVector(j))

		worst = 0.0

		for b in range(n):
			fromT = bracket(R, b)

			for a in range(n):
				worst = max(worst, abs(fromT[a] - gamma[R][b][a].value()))

				expected = -sum(levi[a][g] * fromT[n + g] for g in range(n))
				worst    = max(worst, abs(expected - A[b][a]))

			for r in range(n):
				mixed = bracket(n + r, b)

				for a in range(n):
					worst = max(worst, abs(mixed[a] - gamma[n + r][b][a].value()))

		return float(worst)

	#
	# conformal laws
	#

	@staticmethod
	def conformalTransformResiduals(model: BaseModel, phi, point, tolerance: float = None) -> ResidualSet:
		"""
		Ricci, torsion and trace-free Schouten laws under theta -> e^{2 phi} theta.
		Hatted quantities are converted to the theta coframe (factor
		e^{2 phi(p)}) and compared with right sides built on 'model'.

		@return ResidualSet with 'ricci-law', 'torsion-law' and 'schouten-law'.
		"""
		if tolerance is None:
			tolerance = ConfigConst.DEFAULT_TOLERANCES[ConfigConst.TRANSFORMATION_LAWS_CHECK]

		n      = model.getN()
		scaled = ModelFactory.applyConformal(model, phi)
		base   = CurvatureCalculator.curvatureAt(model, point)
		hat    = CurvatureCalculator.curvatureAt(scaled, point)

		frameJets = model.frameJetsAt(point, 0)
		levi      = frameJets.leviValues()
		leviInv   = frameJets.leviInvValues()
		cd        = CovariantCalculus.covariantJet(model, phi, point, 2)
		factor    = math.exp(2.0 * cd.getValue().real)

		lap    = CovariantCalculus.sublaplacian(cd, leviInv)
		norm   = CovariantCalculus.dbarNorm2(cd, leviInv)
		hess   = calcLib.array([[cd.get(a, n + b) + cd.get(n + b, a) for b in range(n)] for a in range(n)])
		hessAB = calcLib.array([[cd.get(a, b) for b in range(n)] for a in range(n)])
		grad   = calcLib.array([cd.get(a) for a in range(n)])

		ricciRhs   = base.getRicci() - (n + 2) * hess - (lap + 4 * (n + 1) * norm) * levi
		torsionRhs = base.getTorsion() + 2j * hessAB - 4j * calcLib.outer(grad, grad)
		bMixed     = SchwarzianCalculator.fromDerivatives(cd, levi, leviInv).getBMixed()
		schoutenRhs = CurvatureCalculator._traceFree(base.getSchouten(), levi, leviInv) - bMixed

		residuals = ResidualSet()
		residuals.addResidual('ricci-law', float(calcLib.max(calcLib.abs(factor * hat.getRicci() - ricciRhs))), tolerance, point)
		residuals.addResidual('torsion-law', float(calcLib.max(calcLib.abs(factor * hat.getTorsion() - torsionRhs))), tolerance, point)
		residuals.addResidual('schouten-law', float(calcLib.max(calcLib.abs(
			factor * CurvatureCalculator._traceFree(hat.getSchouten(), levi, leviInv) - schoutenRhs))), tolerance, point)

		return residuals

	@staticmethod
	def sublaplacianLawResidual(model: BaseModel, phi, sigma, point) -> float:
		"""
		|e^{2 phi} Delta_hat sigma - (Delta_b sigma + 2n (phi^g sigma_g + phi^gbar sigma_gbar))|
		for real phi and sigma.

		"""
		n       = model.getN()
		leviInv = model.frameJetsAt(point, 0).leviInvValues()
		phiCd   = CovariantCalculus.covariantJet(model, phi, point, 1)
		sigCd   = CovariantCalculus.covariantJet(model, sigma, point, 2)
		hatCd   = CovariantCalculus.covariantJet(ModelFactory.applyConformal(model, phi), sigma, point, 2)

		up    = CovariantCalculus.raisedHolo(phiCd, leviInv)
		cross = sum(up[g] * sigCd.get(g) + up[g].conjugate() * sigCd.get(n + g) for g in range(n))
		rhs   = CovariantCalculus.sublaplacian(sigCd, leviInv) + 2 * n * cross
		lhs   = math.exp(2.0 * phiCd.getValue().real) * CovariantCalculus.sublaplacian(hatCd, leviInv)

		return abs(lhs - rhs)

	@staticmethod
	def scalarCurvatureFormula(model: BaseModel, point) -> dict:
		"""
		Scalar curvature of a conformally flat Heisenberg model, directly and
		via R = -2 e^{-2 phi} (n+1) (Delta_b phi + 2n |dbar_b phi|^2).

		@return {'direct': float, 'via_formula': float}
		"""
		if model.getKind() != ModelKindEnum.CONFORMAL or model.getRoot().getKind() != ModelKindEnum.HEISENBERG:
			raise ConfigException("Scalar curvature formula needs a conformal Heisenberg model, got {}".format(
				model.getDescription()), invariant = 'heisenberg-base')

		n       = model.getN()
		root    = model.getRoot().frameJetsAt(point, 0)
		phiJet  = model.conformalJetAt(JetPoint(point, 2))
		cd      = CovariantCalculus.covariantFromJet(root, phiJet, 2, 'phi', point)
		leviInv = root.leviInvValues()

		lap  = CovariantCalculus.sublaplacian(cd, leviInv).real
		norm = CovariantCalculus.dbarNorm2(cd, leviInv).real
		via  = -2.0 * math.exp(-2.0 * cd.getValue().real) * (n + 1) * (lap + 2 * n * norm)

		return {'direct': CurvatureCalculator.curvatureAt(model, point).getScalar(), 'via_formula': via}

	#
	# private methods
	#

	@staticmethod
	def _traceFree(tensor: calcLib.ndarray, levi: calcLib.ndarray, leviInv: calcLib.ndarray) -> calcLib.ndarray:
		n = levi.shape[0]

		return tensor - complex(calcLib.sum(leviInv * tensor)) / n * levi

	@staticmethod
	def _lieBracket(x: list, y: list) -> calcLib.ndarray:
		size   = len(x)
		units  = [[1 if i == k else 0 for i in range(size)] for k in range(size)]
		xv     = calcLib.array([entry.value() for entry in x])
		yv     = calcLib.array([entry.value() for entry in y])
		result = calcLib.zeros(size, dtype = complex)

		for k in range(size):
			result[k] = sum(xv[l] * y[k].derivative(units[l]) - yv[l] * x[k].derivative(units[l]) for l in range(size))

		return result
