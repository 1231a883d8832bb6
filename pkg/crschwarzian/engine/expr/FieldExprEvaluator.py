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

from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetPoint import JetPoint

class FieldExprEvaluator():
	"""
	Evaluates field expressions (or any object exposing
	evaluate(jetPoint)) to jets, enforcing coordinate arity and,
	on request, real-valuedness.

	"""

	@staticmethod
	def evalField(expr, jetPoint: JetPoint) -> Jet:
		"""
		Jet of 'expr' at the base point of 'jetPoint'.

		@param expr A FieldExpr or another evaluable field.
		@param jetPoint Seeded coordinates.
		@return Jet
		"""
		maxIndex = expr.maxCoordIndex() if hasattr(expr, 'maxCoordIndex') else 0

		if maxIndex > jetPoint.getN():
			raise FieldExprException("Field references z{} but the model has n={}".format(maxIndex, jetPoint.getN()))

		return expr.evaluate(jetPoint)

	@staticmethod
	def evalRealField(expr, jetPoint: JetPoint, name: str = 'field') -> Jet:
		"""
		As evalField(), but rejects fields whose value at the base point
		has a non-negligible imaginary part, and strips the (round-off)
		imaginary parts of the Taylor coefficients.

		"""
		jet = FieldExprEvaluator.evalField(expr, jetPoint)

		if abs(jet.value().imag) > ConfigConst.REAL_FIELD_THRESHOLD or not jet.isReal(1.0e-9):
			logging.warning("Rejecting non-real %s at %s", name, str(jetPoint.getBase().tolist()))

			raise DomainException("The {} must be real-valued".format(name), invariant = 'real-valued-' + name,
				subexpression = str(expr))

		return jet.real()
