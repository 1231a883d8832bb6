#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.DomainException import DomainException
from crschwarzian.common.FieldExprException import FieldExprException

from crschwarzian.engine.expr.FieldExpr import FieldExpr, T_COORD
from crschwarzian.engine.expr.FieldExprEvaluator import FieldExprEvaluator
from crschwarzian.engine.jet.Jet import Jet
from crschwarzian.engine.jet.JetPoint import JetPoint

class ClassicalSchwarzian():
	"""
	One-variable Schwarzian S(f) = f'''/f' - 3/2 (f''/f')^2 of a
	holomorphic expression in z1, and the harmonic-exponent form
	2 (phi_zz - 2 phi_z^2) used for rigid hypersurfaces.

	"""

	@staticmethod
	def zDerivatives(expr: FieldExpr, z: complex, count: int) -> list:
		"""
		[g, g_z, g_zz, ...] up to 'count' derivatives at z (t = 0, n = 1).

		"""
		jet    = FieldExprEvaluator.evalField(expr, JetPoint([z.real, z.imag, 0.0], count))
		values = [jet.value()]

		for _ in range(count):
			jet = jet.wirtingerZ(0)
			values.append(jet.value())

		return values

	@staticmethod
	def classicalSchwarzian(f: FieldExpr, z: complex) -> complex:
		"""
		S(f)(z) via jets of order 3.

		@param f Holomorphic expression in z1.
		@param z Complex evaluation point.
		@return complex
		"""
		if not f.isHolomorphic() or f.maxCoordIndex() > 1:
			raise FieldExprException("Classical Schwarzian needs a holomorphic expression in z1, got {}".format(f))

		_, d1, d2, d3 = ClassicalSchwarzian.zDerivatives(f, complex(z), 3)

		if abs(d1) < ConfigConst.SINGULAR_THRESHOLD:
			raise DomainException("f'(z) vanishes at z = {}".format(z), invariant = 'critical-point', subexpression = str(f))

		return d3 / d1 - 1.5 * (d2 / d1) ** 2

	@staticmethod
	def harmonicSchwarzian(phi2d: FieldExpr, z: complex) -> complex:
		"""
		2 (phi_zz - 2 phi_z^2) for a real exponent in (z1, zbar1).

		"""
		_, dz, dzz = ClassicalSchwarzian.zDerivatives(phi2d, complex(z), 2)

		return 2.0 * (dzz - 2.0 * dz * dz)

	@staticmethod
	def laplacianAt(phi2d: FieldExpr, point) -> complex:
		"""
		phi_{z zbar} at 'point'; zero for harmonic exponents.

		"""
		if phi2d.maxCoordIndex() > 1 or ClassicalSchwarzian._usesT(phi2d):
			raise FieldExprException("Planar exponent may depend on z1 and zbar1 only: {}".format(phi2d))

		jet: Jet = FieldExprEvaluator.evalField(phi2d, JetPoint(point, 2))

		return jet.wirtingerZ(0).wirtingerZbar(0).value()

	@staticmethod
	def _usesT(expr: FieldExpr) -> bool:
		if getattr(expr, 'kind', None) == T_COORD:
			return True

		return any(ClassicalSchwarzian._usesT(child) for child in expr.children())
