#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from crschwarzian.common.GeometryException import GeometryException

class DomainException(GeometryException):
	"""
	Raised when a point lies outside the domain of a computation:
	log or division at zero, Levi degeneracy, a non-real conformal
	factor, a critical point of a holomorphic map, and so on.

	"""

	def __init__(self, message: str = None, invariant: str = None, subexpression: str = None):
		"""
		Constructor.

		@param message Human readable description.
		@param invariant Name of the violated invariant.
		@param subexpression Printed form of the offending subexpression, if any.
		"""
		super().__init__(message, invariant)

		self.subexpression = subexpression

	def getSubexpression(self) -> str:
		return self.subexpression

	def __str__(self):
		baseStr = super().__str__()

		if self.subexpression:
			return '{} [subexpression={}]'.format(baseStr, self.subexpression)

		return baseStr
