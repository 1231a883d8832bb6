#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.JetException import JetException
from crschwarzian.common.ModelKindEnum import ModelKindEnum

from crschwarzian.data.FrameData import FrameData

from crschwarzian.engine.jet.JetPoint import JetPoint
from crschwarzian.engine.model.FrameJets import FrameJets

class BaseModel():
	"""
	Base class of the pseudo-hermitian models. A model is immutable after
	construction; frameJetsAt() is a pure function of the point.

	Sub-classes implement _buildFrameJets(jetPoint, order) and
	getMaxOrder(), and override describe() to report their JSON spec.

	"""

	def __init__(self, n: int, kind: ModelKindEnum):
		"""
		Constructor.

		@param n CR dimension, n >= 1.
		@param kind The model kind.
		"""
		if not isinstance(n, int) or isinstance(n, bool) or n < 1:
			raise ConfigException("CR dimension must be an integer >= 1, got {}".format(n), invariant = 'dimension-positive')

		self.n    = n
		self.kind = kind

	def getN(self) -> int:
		return self.n

	def getNumVars(self) -> int:
		return 2 * self.n + 1

	def getKind(self) -> ModelKindEnum:
		return self.kind

	def getMaxOrder(self) -> int:
		"""
		Highest connection order K this model can provide (vectors at K+1).

		"""
		return ConfigConst.MAX_JET_ORDER - 1

	def getRoot(self):
		"""
		The non-conformal model at the bottom of a conformal stack.

		"""
		return self

	def getFrameTag(self) -> str:
		return 'theta'

	def describe(self) -> dict:
		return {ConfigConst.MODEL_KIND_KEY: self.kind.value, ConfigConst.MODEL_N_KEY: self.n}

	def getDescription(self) -> str:
		return '{}(n={})'.format(self.kind.value, self.n)

	def frameJetsAt(self, point, order: int = 1) -> FrameJets:
		"""
		Frame, coframe, Levi, connection and torsion jets at 'point'.

		@param point Real coordinates (x_1, y_1, ..., t).
		@param order Connection order K; vectors come at K+1.
		@return FrameJets
		"""
		base = self._checkPoint(point)

		if order < 0 or order > self.getMaxOrder():
			raise JetException("{} provides connection jets up to order {}, requested {}".format(
				self.getDescription(), self.getMaxOrder(), order))

		return self._buildFrameJets(JetPoint(base, order + 1), order)

	def frameDataAt(self, point) -> FrameData:
		"""
		Values of the frame data at 'point'.

		@param point Real coordinates.
		@return FrameData
		"""
		frameJets = self.frameJetsAt(point, min(1, self.getMaxOrder()))
		data      = frameJets.toFrameData(self.getDescription(), point)

		logging.debug("Frame data of %s at %s computed.", self.getDescription(), str(data.getPoint().tolist()))

		return data

	def __str__(self):
		return self.getDescription()

	#
	# private methods
	#

	def _checkPoint(self, point) -> calcLib.ndarray:
		base = calcLib.asarray(point, dtype = float).reshape(-1)

		if base.size != self.getNumVars():
			raise ConfigException("Point has {} coordinates, model {} needs {}".format(
				base.size, self.getDescription(), self.getNumVars()), invariant = 'point-arity')

		return base

	def _buildFrameJets(self, jetPoint: JetPoint, order: int) -> FrameJets:
		raise NotImplementedError("Sub-classes must provide frame jets")
