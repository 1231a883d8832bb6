#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from crschwarzian.common.GeometryException import GeometryException

class JetException(GeometryException):
	"""
	Raised for jet bookkeeping errors: order out of range, even-length
	base points, mismatched (order, numVars) pairs, or derivative
	requests that exceed the available order.

	"""
	pass
