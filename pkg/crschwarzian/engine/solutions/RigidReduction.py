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

from crschwarzian.common.DomainException import DomainException

from crschwarzian.engine.calculus.SchwarzianCalculator import SchwarzianCalculator
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.LeviDensityField import LeviDensityField
from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.solutions.ClassicalSchwarzian import ClassicalSchwarzian

class RigidReduction():
	"""
	Reduction of the CR Schwarzian on a rigid hypersurface
	Im w = Phi(z, zbar) to the classical Schwarzian of a planar harmonic
	exponent. With eta the rigid contact form and theta = e^{2 sigma} eta,
	sigma = -1/4 log Phi_{z zbar}, the lift of a harmonic phi(z) has

	  B_theta(phi) = 2 (phi_zz - 2 phi_z^2) theta^1 (x) theta^1  (eta coframe)

	and no mixed part.

	"""

	@staticmethod
	def normalizedModel(bigPhi, n: int = 1) -> BaseModel:
		"""
		The rigid model rescaled by its Levi density exponent sigma.

		"""
		rigid = ModelFactory.makeRigid(n, bigPhi)

		return ModelFactory.applyConformal(rigid, LeviDensityField(rigid.getBigPhi()))

	@staticmethod
	def example2Identity(bigPhi, phi2d, point, n: int = 1) -> dict:
		"""
		@param bigPhi Rigid potential (FieldExpr or expression text).
		@param phi2d Real harmonic exponent in (z1, zbar1).
		@param point Real coordinates of length 2n+1.
		@param n CR dimension of the rigid model.
		@return {'b11', 's_classical', 'ratio', 'max_mixed'}; ratio is None when S(f) vanishes.
		"""
		point = calcLib.asarray(point, dtype = float).reshape(-1)
		lap   = ClassicalSchwarzian.laplacianAt(phi2d, point)

		if abs(lap) >= ConfigConst.HARMONIC_TOL:
			raise DomainException("Planar exponent is not harmonic: phi_{{z zbar}} = {}".format(lap),
				invariant = 'harmonic-exponent', subexpression = str(phi2d))

		model = RigidReduction.normalizedModel(bigPhi, n)
		sigma = model.conformalJetAt(JetPoint(point, 1)).value().real
		data  = SchwarzianCalculator.schwarzianAt(model, phi2d, point)

		b11      = complex(math.exp(2.0 * sigma) * data.getBHolo()[0][0])
		z1       = complex(point[0], point[1])
		sValue   = complex(ClassicalSchwarzian.harmonicSchwarzian(phi2d, z1))
		bigS     = 2.0 * sValue
		ratio    = b11 / bigS if abs(bigS) > ConfigConst.SINGULAR_THRESHOLD else None
		maxMixed = float(calcLib.max(calcLib.abs(data.getBMixed())))

		logging.debug("Rigid reduction of %s over %s at %s: b11=%s, s=%s", str(phi2d), str(bigPhi), point.tolist(), b11, sValue)

		return {'b11': b11, 's_classical': sValue, 'ratio': ratio, 'max_mixed': maxMixed}
