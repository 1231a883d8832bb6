#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from enum import Enum

class EvaluationTargetEnum(Enum):
	"""
	Quantities the 'evaluate' command can report at a point.

	"""
	FRAME      = 'frame'
	SCHWARZIAN = 'schwarzian'
	CURVATURE  = 'curvature'
	OPERATORS  = 'operators'

	def needsField(self) -> bool:
		return self in (EvaluationTargetEnum.SCHWARZIAN, EvaluationTargetEnum.OPERATORS)
