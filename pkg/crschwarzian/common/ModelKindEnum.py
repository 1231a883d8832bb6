#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from enum import Enum

import crschwarzian.common.ConfigConst as ConfigConst

class ModelKindEnum(Enum):
	"""
	Kinds of pseudo-hermitian model the engine can build. The enum
	value is the 'kind' string used in JSON model specifications.

	"""
	HEISENBERG = ConfigConst.HEISENBERG_MODEL
	RIGID      = ConfigConst.RIGID_MODEL
	CONFORMAL  = ConfigConst.CONFORMAL_MODEL

	@classmethod
	def fromName(cls, name: str):
		"""
		Looks up a kind by its specification string.

		@param name The kind name, case-insensitive.
		@return The ModelKindEnum member, or None if unknown.
		"""
		if name:
			for kind in cls:
				if kind.value == name.strip().lower():
					return kind

		return None
