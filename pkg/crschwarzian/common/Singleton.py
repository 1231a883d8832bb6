#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import threading

class Singleton(type):
	"""
	Metaclass for classes that must have exactly one instance per
	process (ConfigUtil). Creation is guarded by a lock since the
	suite runner may touch the configuration from worker threads.

	"""
	_instances = {}
	_lock      = threading.Lock()

	def __call__(cls, *args, **kwargs):
		with Singleton._lock:
			if cls not in cls._instances:
				cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)

		return cls._instances[cls]
