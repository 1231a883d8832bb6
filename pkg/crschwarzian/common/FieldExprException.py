#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from crschwarzian.common.GeometryException import GeometryException

class FieldExprException(GeometryException):
	"""
	Raised by the field expression parser (with the byte offset of
	the error) and by evaluation-time arity checks.

	"""

	def __init__(self, message: str = None, offset: int = -1):
		"""
		Constructor.

		@param message Human readable description.
		@param offset Byte offset into the parsed text, or -1 when not applicable.
		"""
		super().__init__(message)

		self.offset = offset

	def getOffset(self) -> int:
		return self.offset

	def __str__(self):
		if self.offset >= 0:
			return '{} (at offset {})'.format(self.message, self.offset)

		return str(self.message)
