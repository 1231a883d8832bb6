#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import math

import numpy as calcLib

from crschwarzian.common.ConfigException import ConfigException

from crschwarzian.data.CovariantDerivatives import CovariantDerivatives
from crschwarzian.data.SchwarzianData import SchwarzianData

from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus
from crschwarzian.engine.expr.FieldExpr import asExpr
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.ModelFactory import ModelFactory

class SchwarzianCalculator():
	"""
	The CR Schwarzian tensor of a real exponent phi, modulo theta:

	  B_{ab}     = 2 phi_{;ab} - 4 phi_a phi_b
	  B_{a bbar} = phi_{;a bbar} + phi_{;bbar a} - (1/n) (Delta_b phi) h_{a bbar}

	in the moving frame of the model it is evaluated on.

	"""

	@staticmethod
	def fromDerivatives(cd: CovariantDerivatives, levi: calcLib.ndarray, leviInv: calcLib.ndarray) -> SchwarzianData:
		"""
		Schwarzian from second covariant derivatives of phi.

		"""
		n    = cd.getN()
		data = SchwarzianData(name = cd.getName(), n = n, point = cd.getPoint(), frameTag = cd.getFrameTag())
		lap  = CovariantCalculus.sublaplacian(cd, leviInv)

		bHolo  = calcLib.array([[2.0 * cd.get(a, b) - 4.0 * cd.get(a) * cd.get(b) for b in range(n)] for a in range(n)])
		bMixed = calcLib.array([[cd.get(a, n + b) + cd.get(n + b, a) - lap * levi[a][b] / n for b in range(n)] for a in range(n)])

		data.setBHolo(bHolo)
		data.setBMixed(bMixed)
		data.setTrace(complex(calcLib.sum(leviInv * bMixed)))

		return data

	@staticmethod
	def schwarzianAt(model: BaseModel, phi, point) -> SchwarzianData:
		"""
		B_theta(phi) at 'point' in the model's coframe.

		@param model A BaseModel.
		@param phi Real exponent.
		@param point Real coordinates.
		@return SchwarzianData
		"""
		frameJets = model.frameJetsAt(point, CovariantCalculus.frameOrderFor(2))
		fJet      = FieldExprEvaluator.evalRealField(phi, JetPoint(point, 2), 'conformal exponent')
		cd        = CovariantCalculus.covariantFromJet(frameJets, fJet, 2, str(phi), point)

		return SchwarzianCalculator.fromDerivatives(cd, frameJets.leviValues(), frameJets.leviInvValues())

	@staticmethod
	def symmetryResidual(data: SchwarzianData) -> float:
		"""
		Largest deviation from symmetry of B_{ab}, hermiticity of
		B_{a bbar} and trace-freeness.

		"""
		bHolo  = data.getBHolo()
		bMixed = data.getBMixed()

		return float(max(
			calcLib.max(calcLib.abs(bHolo - bHolo.T)),
			calcLib.max(calcLib.abs(bMixed - bMixed.conj().T)),
			abs(data.getTrace())))

	@staticmethod
	def additivityResidual(model: BaseModel, phi, sigma, point) -> float:
		"""
		max |B_theta(phi + sigma) - B_theta(phi) - B_theta_hat(sigma)| with the
		theta_hat components converted to the theta coframe (a factor
		e^{2 phi(p)} modulo theta).

		"""
		total  = SchwarzianCalculator.schwarzianAt(model, asExpr(phi) + asExpr(sigma), point)
		first  = SchwarzianCalculator.schwarzianAt(model, phi, point)
		scaled = SchwarzianCalculator.schwarzianAt(ModelFactory.applyConformal(model, phi), sigma, point)
		factor = math.exp(2.0 * SchwarzianCalculator._valueAt(phi, point))

		return float(max(
			calcLib.max(calcLib.abs(total.getBHolo() - first.getBHolo() - factor * scaled.getBHolo())),
			calcLib.max(calcLib.abs(total.getBMixed() - first.getBMixed() - factor * scaled.getBMixed()))))

	@staticmethod
	def mobiusResidual(model: BaseModel, phi, samples: list) -> dict:
		"""
		Largest |B_theta(phi)| and |P_alpha phi| over the sample points.

		@return {'max_b': float, 'max_P': float}
		"""
		if not samples:
			raise ConfigException("Möbius residual needs at least one sample point", invariant = 'samples-positive')

		maxB = 0.0
		maxP = 0.0

		for point in samples:
			maxB = max(maxB, SchwarzianCalculator.schwarzianAt(model, phi, point).maxAbs())
			maxP = max(maxP, float(calcLib.max(calcLib.abs(CovariantCalculus.operatorsAt(model, phi, point).getGrahamLee()))))

		logging.debug("Möbius residual of %s: max_b=%e, max_P=%e", str(phi), maxB, maxP)

		return {'max_b': maxB, 'max_P': maxP}

	@staticmethod
	def torsionLinkResidual(model: BaseModel, phi, point) -> float:
		"""
		max |i e^{2 phi} A_hat - i A + B_theta(phi)_{ab}|.

		"""
		base   = model.frameDataAt(point).getTorsion()
		scaled = ModelFactory.applyConformal(model, phi).frameDataAt(point).getTorsion()
		bHolo  = SchwarzianCalculator.schwarzianAt(model, phi, point).getBHolo()
		factor = math.exp(2.0 * SchwarzianCalculator._valueAt(phi, point))

		return float(calcLib.max(calcLib.abs(1j * factor * scaled - 1j * base + bHolo)))

	@staticmethod
	def _valueAt(phi, point) -> float:
		return FieldExprEvaluator.evalRealField(phi, JetPoint(point, 1), 'conformal exponent').value().real
