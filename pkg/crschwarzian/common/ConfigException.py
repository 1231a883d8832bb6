#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from crschwarzian.common.GeometryException import GeometryException

class ConfigException(GeometryException):
	"""
	Raised for malformed model specifications, suite configurations
	and command-line arguments.

	"""
	pass
