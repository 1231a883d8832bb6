#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

class GeometryException(Exception):
	"""
	Root of every error raised by the engine. The command-line
	application maps sub-classes onto exit codes.

	"""

	def __init__(self, message: str = None, invariant: str = None):
		"""
		Constructor.

		@param message Human readable description.
		@param invariant Optional name of the violated invariant.
		"""
		super().__init__(message)

		self.message   = message
		self.invariant = invariant

	def getInvariant(self) -> str:
		return self.invariant

	def __str__(self):
		if self.invariant:
			return '{} [invariant={}]'.format(self.message, self.invariant)

		return str(self.message)
