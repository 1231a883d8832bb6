#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

class BaseGeometryData(object):
	"""
	Base class for the pointwise data containers. It stores what every
	sub-class reports: a name, the CR dimension n, the evaluation point
	and a frame tag naming the coframe the components refer to.

	No time stamp is kept; reports must be reproducible bit for bit.

	"""

	def __init__(self, name: str = ConfigConst.NOT_SET, n: int = 1, point = None, frameTag: str = ConfigConst.NOT_SET):
		"""
		Constructor.

		@param name Name of the container (usually the model description).
		@param n CR dimension.
		@param point Real coordinates of the evaluation point.
		@param frameTag Name of the coframe the tensor components refer to.
		"""
		self.name     = name if name else ConfigConst.NOT_SET
		self.n        = n
		self.point    = calcLib.zeros(2 * n + 1) if point is None else calcLib.asarray(point, dtype = float)
		self.frameTag = frameTag if frameTag else ConfigConst.NOT_SET

	def getName(self) -> str:
		return self.name

	def getN(self) -> int:
		return self.n

	def getPoint(self) -> calcLib.ndarray:
		"""
		Returns a copy of the evaluation point.

		@return The point as a float array (x_1, y_1, ..., t).
		"""
		return self.point.copy()

	def getFrameTag(self) -> str:
		return self.frameTag

	def setName(self, name: str):
		if name:
			self.name = name

	def setPoint(self, point):
		self.point = calcLib.asarray(point, dtype = float)

	def setFrameTag(self, frameTag: str):
		if frameTag:
			self.frameTag = frameTag

	def updateData(self, data):
		"""
		Copies the values of 'data' (same class) into this instance.

		@param data The BaseGeometryData to apply to this instance.
		"""
		if data and isinstance(data, BaseGeometryData):
			self.setName(data.getName())
			self.setPoint(data.getPoint())
			self.setFrameTag(data.getFrameTag())
			self.n = data.getN()

			self._handleUpdateData(data)

	def __str__(self):
		"""
		Returns a string representation of this instance.

		@return The string representing this instance, in CSV 'key=value' format.
		"""
		return 'name={},n={},point={},frameTag={}'.format(
			self.name, self.n, self.point.tolist(), self.frameTag)

	def _handleUpdateData(self, data):
		"""
		Template method definition to update sub-class data.

		@param data The BaseGeometryData to apply to this instance.
		"""
		pass
