#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import os
import time
import zlib

from concurrent.futures import ThreadPoolExecutor
from importlib import import_module

import numpy as calcLib
import psutil

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.ConfigUtil import ConfigUtil

from crschwarzian.data.Report import Report
from crschwarzian.data.ResidualSet import ResidualSet
from crschwarzian.data.SuiteConfig import SuiteConfig

from crschwarzian.engine.model.BaseModel import BaseModel
from crschwarzian.engine.model.ModelFactory import ModelFactory

class SuiteManager(object):
	"""
	Runs named verification checks against a model and assembles the
	Report.

	Each check gets its own generator, seeded from (seed, crc32(name)),
	so results do not depend on which other checks run or on the order
	in which worker threads finish. Task classes are loaded by name on
	first use.

	"""

	CHECK_TASKS = {
		ConfigConst.JET_FD_CHECK:               'SubstrateCheckTask',
		ConfigConst.JET_FD_SECOND_CHECK:        'SubstrateCheckTask',
		ConfigConst.DUALITY_CHECK:              'FrameCheckTask',
		ConfigConst.STRUCTURE_EQUATION_CHECK:   'FrameCheckTask',
		ConfigConst.BRACKET_CONNECTION_CHECK:   'FrameCheckTask',
		ConfigConst.CONFORMAL_INVOLUTION_CHECK: 'FrameCheckTask',
		ConfigConst.COMMUTATION_CHECK:          'CommutationCheckTask',
		ConfigConst.SCHWARZIAN_SYMMETRY_CHECK:  'SchwarzianCheckTask',
		ConfigConst.ADDITIVITY_CHECK:           'SchwarzianCheckTask',
		ConfigConst.TORSION_LINK_CHECK:         'SchwarzianCheckTask',
		ConfigConst.SUBLAPLACIAN_LAW_CHECK:     'SchwarzianCheckTask',
		ConfigConst.CURVATURE_SYMMETRY_CHECK:   'CurvatureCheckTask',
		ConfigConst.CURVATURE_CLOSURE_CHECK:    'CurvatureCheckTask',
		ConfigConst.CHERN_MOSER_CHECK:          'CurvatureCheckTask',
		ConfigConst.SCALAR_FORMULA_CHECK:       'CurvatureCheckTask',
		ConfigConst.CONSTANT_CURVATURE_CHECK:   'CurvatureCheckTask',
		ConfigConst.PSEUDO_EINSTEIN_CHECK:      'CurvatureCheckTask',
		ConfigConst.TRANSFORMATION_LAWS_CHECK:  'CurvatureCheckTask',
		ConfigConst.MOBIUS_JL_CHECK:            'JerisonLeeCheckTask',
		ConfigConst.PLURIHARMONIC_CHECK:        'JerisonLeeCheckTask',
		ConfigConst.WITNESS_CHECK:              'JerisonLeeCheckTask',
		ConfigConst.HAMILTONIAN_CHECK:          'JerisonLeeCheckTask',
		ConfigConst.TORSION_RANK_CHECK:         'JerisonLeeCheckTask',
		ConfigConst.BOCHNER_CHECK:              'IdentityCheckTask',
		ConfigConst.GRAHAM_LEE_TRACE_CHECK:     'IdentityCheckTask',
		ConfigConst.RANK_LEMMA_CHECK:           'ClassicalCheckTask',
		ConfigConst.CLASSICAL_SCHWARZIAN_CHECK: 'ClassicalCheckTask',
		ConfigConst.EXAMPLE2_CHECK:             'ClassicalCheckTask'
	}

	SUITE_CHECKS = {
		ConfigConst.SUBSTRATE_SUITE:   [ConfigConst.JET_FD_CHECK, ConfigConst.JET_FD_SECOND_CHECK],
		ConfigConst.FRAME_SUITE:       [ConfigConst.DUALITY_CHECK, ConfigConst.STRUCTURE_EQUATION_CHECK,
		                                ConfigConst.BRACKET_CONNECTION_CHECK, ConfigConst.CONFORMAL_INVOLUTION_CHECK],
		ConfigConst.COMMUTATION_SUITE: [ConfigConst.COMMUTATION_CHECK],
		ConfigConst.SCHWARZIAN_SUITE:  [ConfigConst.SCHWARZIAN_SYMMETRY_CHECK, ConfigConst.ADDITIVITY_CHECK,
		                                ConfigConst.TORSION_LINK_CHECK, ConfigConst.SUBLAPLACIAN_LAW_CHECK],
		ConfigConst.CURVATURE_SUITE:   [ConfigConst.CURVATURE_SYMMETRY_CHECK, ConfigConst.CURVATURE_CLOSURE_CHECK,
		                                ConfigConst.CHERN_MOSER_CHECK, ConfigConst.SCALAR_FORMULA_CHECK,
		                                ConfigConst.CONSTANT_CURVATURE_CHECK, ConfigConst.PSEUDO_EINSTEIN_CHECK,
		                                ConfigConst.TRANSFORMATION_LAWS_CHECK],
		ConfigConst.JERISON_LEE_SUITE: [ConfigConst.MOBIUS_JL_CHECK, ConfigConst.PLURIHARMONIC_CHECK,
		                                ConfigConst.WITNESS_CHECK, ConfigConst.HAMILTONIAN_CHECK,
		                                ConfigConst.TORSION_RANK_CHECK],
		ConfigConst.BOCHNER_SUITE:     [ConfigConst.BOCHNER_CHECK, ConfigConst.GRAHAM_LEE_TRACE_CHECK],
		ConfigConst.CLASSICAL_SUITE:   [ConfigConst.RANK_LEMMA_CHECK, ConfigConst.CLASSICAL_SCHWARZIAN_CHECK,
		                                ConfigConst.EXAMPLE2_CHECK]
	}

	TASK_PACKAGE = 'crschwarzian.verify.checks'

	def __init__(self):
		self.configUtil = ConfigUtil()

		self.workers = self.configUtil.getInteger(
			section = ConfigConst.VERIFICATION, key = ConfigConst.WORKERS_KEY, defaultVal = ConfigConst.DEFAULT_WORKERS)
		self.logResourceUsage = self.configUtil.getBoolean(
			section = ConfigConst.LOGGING, key = ConfigConst.LOG_RESOURCE_USAGE_KEY, defaultVal = True)

		if self.workers <= 0:
			self.workers = ConfigConst.DEFAULT_WORKERS

		self.executor = None

	def startManager(self) -> bool:
		logging.info("Starting SuiteManager with %d worker(s)...", self.workers)

		if self.executor is None:
			self.executor = ThreadPoolExecutor(max_workers = self.workers, thread_name_prefix = 'check')
			logging.info("Started SuiteManager.")

			return True

		logging.warning("SuiteManager already started. Ignoring.")

		return False

	def stopManager(self) -> bool:
		logging.info("Stopping SuiteManager...")

		if self.executor is not None:
			self.executor.shutdown(wait = True)
			self.executor = None
			logging.info("Stopped SuiteManager.")

			return True

		logging.warning("SuiteManager already stopped. Ignoring.")

		return False

	@staticmethod
	def getSuiteNames() -> list:
		return [ConfigConst.ALL_SUITE] + list(SuiteManager.SUITE_CHECKS.keys())

	@staticmethod
	def getCheckNames() -> list:
		return list(SuiteManager.CHECK_TASKS.keys())

	@staticmethod
	def resolveChecks(suite) -> list:
		"""
		Check names of a suite name or of an explicit list of check names,
		in registry order, without duplicates.

		@param suite A suite name, a check name, or a list of either.
		@return list of check names
		"""
		names    = [suite] if isinstance(suite, str) else list(suite or [])
		selected = set()

		for name in names:
			if name == ConfigConst.ALL_SUITE:
				selected.update(SuiteManager.CHECK_TASKS.keys())
			elif name in SuiteManager.SUITE_CHECKS:
				selected.update(SuiteManager.SUITE_CHECKS[name])
			elif name in SuiteManager.CHECK_TASKS:
				selected.add(name)
			else:
				raise ConfigException("Unknown suite or check name: '{}'".format(name), invariant = 'check-known')

		if not selected:
			raise ConfigException("No checks selected", invariant = 'suite-present')

		return [name for name in SuiteManager.CHECK_TASKS.keys() if name in selected]

	@staticmethod
	def checkRng(seed: int, checkName: str) -> calcLib.random.Generator:
		return calcLib.random.default_rng(calcLib.random.SeedSequence([seed, zlib.crc32(checkName.encode('utf-8'))]))

	def runCheck(self, checkName: str, model: BaseModel, seed: int, samples: int, tolerance: float) -> ResidualSet:
		"""
		Runs one named check with its own generator.

		"""
		task = self._createTask(checkName)

		return task.runCheck(model, SuiteManager.checkRng(seed, checkName), samples, tolerance)

	def runSuite(self, config: SuiteConfig) -> Report:
		"""
		Validates 'config', builds the model and runs the selected checks.

		@param config The suite configuration.
		@return Report
		"""
		config.validate()

		checks = SuiteManager.resolveChecks(config.getSuite())
		model  = ModelFactory.fromSpec(config.getModelSpec())
		report = Report(model = model.describe(), suite = config.getSuiteName(), seed = config.getSeed(), samples = config.getSamples())

		for name in config.getTolerances().keys():
			if name not in SuiteManager.CHECK_TASKS:
				raise ConfigException("Tolerance given for unknown check '{}'".format(name), invariant = 'check-known')

		logging.info("Starting suite %s on %s (%d checks, %d samples, seed %d)",
			config.getSuiteName(), model.getDescription(), len(checks), config.getSamples(), config.getSeed())

		self._logResources('start')

		started   = time.perf_counter()
		tolerance = {name: config.getTolerance(name, self.configUtil.getTolerance(name)) for name in checks}

		if self.executor is None:
			results = [self.runCheck(name, model, config.getSeed(), config.getSamples(), tolerance[name]) for name in checks]
		else:
			futures = [self.executor.submit(self.runCheck, name, model, config.getSeed(), config.getSamples(), tolerance[name])
				for name in checks]
			results = [future.result() for future in futures]

		for name, residuals in zip(checks, results):
			report.addResiduals(residuals)

			for data in residuals.getResiduals():
				if data.isAsserted() and not data.isPassing():
					logging.warning("Check %s failed: %s", name, str(data))

		report.setWallMs(int(round((time.perf_counter() - started) * 1000.0)))

		self._logResources('end')

		logging.info("Finished suite %s: %s in %d ms", config.getSuiteName(),
			'PASS' if report.isPassing() else 'FAIL', report.getWallMs())

		return report

	#
	# private methods
	#

	def _createTask(self, checkName: str):
		className = SuiteManager.CHECK_TASKS.get(checkName)

		if className is None:
			raise ConfigException("Unknown check name: '{}'".format(checkName), invariant = 'check-known')

		module = import_module('{}.{}'.format(SuiteManager.TASK_PACKAGE, className))

		return getattr(module, className)(name = checkName)

	def _logResources(self, stage: str):
		if not self.logResourceUsage:
			return

		process = psutil.Process(os.getpid())

		logging.info("Resources at %s of suite: cpu=%s%%, memory=%s%%, rss=%d bytes",
			stage, psutil.cpu_percent(), psutil.virtual_memory().percent, process.memory_info().rss)
