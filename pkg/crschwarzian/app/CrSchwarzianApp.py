#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import argparse
import json
import logging
import sys

import numpy as calcLib

import crschwarzian.common.ConfigConst as ConfigConst

from crschwarzian.common.ConfigException import ConfigException
from crschwarzian.common.ConfigUtil import ConfigUtil
from crschwarzian.common.DomainException import DomainException
from crschwarzian.common.EvaluationTargetEnum import EvaluationTargetEnum
from crschwarzian.common.FieldExprException import FieldExprException
from crschwarzian.common.JetException import JetException

from crschwarzian.data.DataUtil import DataUtil
from crschwarzian.data.SuiteConfig import SuiteConfig

from crschwarzian.engine.calculus.CovariantCalculus import CovariantCalculus
from crschwarzian.engine.calculus.CurvatureCalculator import CurvatureCalculator
from crschwarzian.engine.calculus.SchwarzianCalculator import SchwarzianCalculator
from crschwarzian.engine.expr.FieldExprParser import FieldExprParser
from crschwarzian.engine.model.ModelFactory import ModelFactory
from crschwarzian.engine.solutions.JerisonLeeFamily import JerisonLeeFamily

from crschwarzian.verify.SuiteManager import SuiteManager

LOG_FORMAT = '%(asctime)s:%(module)s:%(levelname)s:%(message)s'

logging.basicConfig(format = LOG_FORMAT, level = logging.INFO)

class CrSchwarzianApp():
	"""
	Command-line application: single-point evaluations of frame data,
	Schwarzian tensors, curvature and operators, verification suite
	runs with a JSON report, and the Jerison-Lee integrability witness.

	Each command returns a process exit code:
	0 success, 1 failing asserted check, 2 configuration or field
	expression error, 3 domain or jet error.

	"""

	def __init__(self):
		logging.info("Initializing %s %s...", ConfigConst.PRODUCT_NAME, ConfigConst.ENGINE_VERSION)

		self.configUtil = ConfigUtil()
		self.dataUtil   = DataUtil()
		self.suiteMgr   = SuiteManager()

		self.isStarted = False

	def isAppStarted(self) -> bool:
		return self.isStarted

	def startApp(self):
		logging.info("Starting %s...", ConfigConst.PRODUCT_NAME)

		self.suiteMgr.startManager()
		self.isStarted = True

		logging.info("%s started.", ConfigConst.PRODUCT_NAME)

	def stopApp(self, code: int):
		logging.info("%s stopping...", ConfigConst.PRODUCT_NAME)

		self.suiteMgr.stopManager()
		self.isStarted = False

		logging.info("%s stopped with exit code %s.", ConfigConst.PRODUCT_NAME, str(code))

	def runCommand(self, args: argparse.Namespace, out = None) -> int:
		"""
		Dispatches a parsed command line and maps errors onto exit codes.

		@param args Parsed arguments.
		@param out Text stream for results; defaults to stdout.
		@return int exit code
		"""
		out = out if out is not None else sys.stdout

		try:
			if args.command == 'verify':
				return self.verify(args, out)

			if args.command == 'witness':
				return self.witness(args, out)

			return self.evaluate(args, out)

		except (ConfigException, FieldExprException) as e:
			logging.error("Configuration error: %s", str(e))

			return ConfigConst.EXIT_CONFIG_ERROR

		except (DomainException, JetException) as e:
			logging.error("Domain error: %s", str(e))

			return ConfigConst.EXIT_DOMAIN_ERROR

	def evaluate(self, args: argparse.Namespace, out) -> int:
		"""
		Prints the requested quantity at one point.

		"""
		try:
			target = EvaluationTargetEnum(args.what)
		except ValueError:
			raise ConfigException("Unknown evaluation target: {}".format(args.what), invariant = 'evaluation-target') from None

		spec  = self._modelSpec(args)
		model = ModelFactory.fromSpec(spec)
		point = self._parsePoint(args.point, model.getN())

		if target == EvaluationTargetEnum.FRAME:
			data    = model.frameDataAt(point)
			payload = self.dataUtil.frameDataToJson(data)
			rows    = [('levi', data.getLevi()), ('torsion', data.getTorsion()), ('christoffels', data.getChristoffels())]

		elif target == EvaluationTargetEnum.CURVATURE:
			data    = CurvatureCalculator.curvatureAt(model, point)
			payload = self.dataUtil.curvatureDataToJson(data)
			rows    = [('scalar', data.getScalar()), ('ricci', data.getRicci()), ('torsion', data.getTorsion()),
				('max |chern_moser|', float(calcLib.max(calcLib.abs(data.getChernMoser())))),
				('eta', data.getEta()), ('fit_residual', data.getFitResidual())]

		elif target.needsField():
			field = self._evaluationField(args, spec)

			if target == EvaluationTargetEnum.SCHWARZIAN:
				data    = SchwarzianCalculator.schwarzianAt(model, field, point)
				payload = self.dataUtil.schwarzianDataToJson(data)
				rows    = self._indexedRows('B', data.getBHolo(), '') + self._indexedRows('B', data.getBMixed(), "'") \
					+ [('trace', data.getTrace())]
			else:
				data    = CovariantCalculus.operatorsAt(model, field, point)
				payload = self.dataUtil.operatorValuesToJson(data)
				rows    = [('sublaplacian', data.getSublaplacian()), ('kohn', data.getKohn()),
					('graham_lee', data.getGrahamLee()), ('reeb', data.getReeb()), ('dbar_norm2', data.getDbarNorm2())]

		self._emit(args, out, payload, '{} of {} at {}'.format(target.value, model.getDescription(), point.tolist()), rows)

		return ConfigConst.EXIT_OK

	def verify(self, args: argparse.Namespace, out) -> int:
		"""
		Runs a verification suite; writes the report when an output path
		is configured.

		"""
		config = self._suiteConfig(args)
		report = self.suiteMgr.runSuite(config)
		jsonData = self.dataUtil.reportToJson(report)

		if config.getOutputPath():
			with open(config.getOutputPath(), 'w') as reportFile:
				reportFile.write(jsonData)

			logging.info("Wrote report to %s", config.getOutputPath())

		if args.json:
			print(jsonData, file = out)
		else:
			print("suite {} on {} (seed {}, samples {})".format(
				report.getSuite(), report.getModel(), report.getSeed(), report.getSamples()), file = out)

			for data in report.getChecks():
				status = 'PASS' if data.isPassing() else 'FAIL'

				if not data.isAsserted():
					status = 'INFO'

				print("  {:<22} {:>12.3e}  tol {:.1e}  {}".format(
					data.getName(), data.getValue(), data.getTolerance(), status), file = out)

			print("{} in {} ms".format('PASS' if report.isPassing() else 'FAIL', report.getWallMs()), file = out)

		if not report.isPassing():
			logging.warning("Failing checks: %s", ', '.join(report.getFailedChecks()))

			return ConfigConst.EXIT_CHECK_FAILURE

		return ConfigConst.EXIT_OK

	def witness(self, args: argparse.Namespace, out) -> int:
		"""
		Prints Jerison-Lee parameters whose solution has horizontal
		gradient omega at the point, and the gradient match residual.

		"""
		n = args.n if args.n is not None else 1

		if n < 1:
			raise ConfigException("n must be >= 1, got {}".format(n), invariant = 'model-spec')

		point  = self._parsePoint(args.point, n)
		omega  = self._parseOmega(args.omega, n)
		params = JerisonLeeFamily.integrabilityWitness(n, point, omega)

		cd       = CovariantCalculus.covariantJet(ModelFactory.makeHeisenberg(n), JerisonLeeFamily.jlField(params, n), point, 1)
		residual = max(abs(cd.get(a) - omega[a]) for a in range(n))
		payload  = self.dataUtil.jlParamsToJson(params)

		self._emit(args, out, payload, 'witness at {} for omega {}'.format(point.tolist(), omega.tolist()),
			[('params', str(params)), ('gradient residual', float(residual))])

		return ConfigConst.EXIT_OK

	#
	# private methods
	#

	def _modelSpec(self, args: argparse.Namespace) -> dict:
		if args.model_file:
			return self._loadJsonFile(args.model_file)

		kind = args.model if args.model else ConfigConst.HEISENBERG_MODEL
		n    = args.n if args.n is not None else 1

		if kind == ConfigConst.HEISENBERG_MODEL:
			return {ConfigConst.MODEL_KIND_KEY: kind, ConfigConst.MODEL_N_KEY: n}

		if kind == ConfigConst.RIGID_MODEL:
			if not args.Phi:
				raise ConfigException("Rigid model needs --Phi", invariant = 'model-spec')

			return {ConfigConst.MODEL_KIND_KEY: kind, ConfigConst.MODEL_N_KEY: n, ConfigConst.MODEL_BIG_PHI_KEY: args.Phi}

		if kind == ConfigConst.CONFORMAL_MODEL:
			spec = {ConfigConst.MODEL_KIND_KEY: kind, ConfigConst.MODEL_N_KEY: n}

			if args.Phi:
				spec[ConfigConst.MODEL_BASE_KEY] = {
					ConfigConst.MODEL_KIND_KEY: ConfigConst.RIGID_MODEL, ConfigConst.MODEL_N_KEY: n, ConfigConst.MODEL_BIG_PHI_KEY: args.Phi}

			if args.jl:
				try:
					spec[ConfigConst.MODEL_JL_KEY] = json.loads(args.jl)
				except json.JSONDecodeError as e:
					raise ConfigException("Malformed --jl JSON: {}".format(e.msg), invariant = 'json-format') from None

			if args.phi:
				spec[ConfigConst.MODEL_PHI_KEY] = args.phi

			return spec

		raise ConfigException("Unknown model kind: {}".format(kind), invariant = 'model-spec')

	def _evaluationField(self, args: argparse.Namespace, spec: dict):
		# --phi names the evaluated field unless it already is the conformal factor
		text = args.field

		if not text and spec.get(ConfigConst.MODEL_KIND_KEY) != ConfigConst.CONFORMAL_MODEL:
			text = args.phi

		if not text:
			raise ConfigException("Evaluation of '{}' needs --field".format(args.what), invariant = 'field-present')

		return FieldExprParser.parse(text)

	def _suiteConfig(self, args: argparse.Namespace) -> SuiteConfig:
		if args.suite_file:
			with open(args.suite_file, 'r') as suiteFile:
				config = self.dataUtil.jsonToSuiteConfig(suiteFile.read())

			if config is None:
				raise ConfigException("Suite file {} is empty".format(args.suite_file), invariant = 'suite-format')
		else:
			suite = args.suite if args.suite else ConfigConst.ALL_SUITE

			if ',' in suite:
				suite = [name.strip() for name in suite.split(',') if name.strip()]

			config = SuiteConfig(
				modelSpec = self._modelSpec(args),
				suite = suite,
				samples = args.samples if args.samples is not None else self.configUtil.getInteger(
					ConfigConst.VERIFICATION, ConfigConst.SAMPLES_KEY, ConfigConst.DEFAULT_SAMPLES),
				seed = args.seed if args.seed is not None else self.configUtil.getInteger(
					ConfigConst.VERIFICATION, ConfigConst.SEED_KEY, ConfigConst.DEFAULT_SEED))

		for entry in args.tol or []:
			name, sep, value = entry.partition('=')

			if not sep:
				raise ConfigException("--tol expects name=value, got '{}'".format(entry), invariant = 'tolerance-format')

			try:
				config.setTolerance(name.strip(), float(value))
			except ValueError:
				raise ConfigException("--tol value for {} is not a number: {}".format(name, value), invariant = 'tolerance-format') from None

		if args.out:
			config.setOutputPath(args.out)

		config.validate()

		logging.info("Suite configuration: %s", str(config))

		return config

	def _loadJsonFile(self, path: str) -> dict:
		try:
			with open(path, 'r') as jsonFile:
				return json.load(jsonFile)
		except OSError as e:
			raise ConfigException("Cannot read {}: {}".format(path, e.strerror), invariant = 'file-readable') from None
		except json.JSONDecodeError as e:
			raise ConfigException("Malformed JSON in {} at line {}: {}".format(path, e.lineno, e.msg), invariant = 'json-format') from None

	def _emit(self, args: argparse.Namespace, out, payload: str, title: str, rows: list):
		if args.out:
			with open(args.out, 'w') as outFile:
				outFile.write(payload)

		if args.json:
			print(payload, file = out)
			return

		print(title, file = out)

		for label, value in rows:
			print("  {} = {}".format(label, CrSchwarzianApp._format(value)), file = out)

	@staticmethod
	def _indexedRows(symbol: str, matrix, mark: str) -> list:
		n = len(matrix)

		return [('{}{}{}{}'.format(symbol, a + 1, b + 1, mark), matrix[a][b]) for a in range(n) for b in range(n)]

	@staticmethod
	def _format(value) -> str:
		if isinstance(value, calcLib.ndarray):
			return calcLib.array2string(value, precision = 6, suppress_small = True)

		if isinstance(value, complex):
			if abs(value.imag) < 1.0e-12:
				return '{:.10g}'.format(value.real)

			return '{:.10g}'.format(value)

		if isinstance(value, float):
			return '{:.10g}'.format(value)

		return str(value)

	@staticmethod
	def _parsePoint(text: str, n: int) -> calcLib.ndarray:
		if not text:
			return calcLib.zeros(2 * n + 1)

		try:
			values = [float(v) for v in text.split(',')]
		except ValueError:
			raise ConfigException("Point must be comma separated reals: '{}'".format(text), invariant = 'point-format') from None

		if len(values) != 2 * n + 1:
			raise ConfigException("Point has {} coordinates, expected {}".format(len(values), 2 * n + 1), invariant = 'point-arity')

		return calcLib.array(values)

	@staticmethod
	def _parseOmega(text: str, n: int) -> calcLib.ndarray:
		if not text:
			return calcLib.zeros(n, dtype = complex)

		try:
			values = [complex(v.strip().replace(' ', '')) for v in text.split(',')]
		except ValueError:
			raise ConfigException("omega must be comma separated complex numbers: '{}'".format(text), invariant = 'omega-format') from None

		if len(values) != n:
			raise ConfigException("omega has {} entries, expected n={}".format(len(values), n), invariant = 'omega-arity')

		return calcLib.array(values, dtype = complex)

def buildArgParser() -> argparse.ArgumentParser:
	argParser = argparse.ArgumentParser(
		prog = 'crschwarzian', description = 'Pseudo-hermitian CR Schwarzian geometry engine and verification suite.')

	argParser.add_argument('-c', '--configFile', help = 'Optional custom configuration file.')

	common = argparse.ArgumentParser(add_help = False)

	common.add_argument('--model-file', help = 'JSON model specification.')
	common.add_argument('--model', choices = [ConfigConst.HEISENBERG_MODEL, ConfigConst.RIGID_MODEL, ConfigConst.CONFORMAL_MODEL])
	common.add_argument('--n', type = int, help = 'CR dimension.')
	common.add_argument('--phi', help = 'Conformal exponent, or the evaluated field on non-conformal models.')
	common.add_argument('--Phi', help = 'Rigid potential.')
	common.add_argument('--jl', help = 'Jerison-Lee parameters as JSON, for conformal models.')
	common.add_argument('--point', help = 'Point as "x1,y1,...,t".')
	common.add_argument('--seed', type = int)
	common.add_argument('--samples', type = int)
	common.add_argument('--tol', action = 'append', help = 'Tolerance override name=value; repeatable.')
	common.add_argument('--out', help = 'Write JSON output to this path.')
	common.add_argument('--json', action = 'store_true', help = 'Print JSON instead of a table.')

	targets  = [target.value for target in EvaluationTargetEnum]
	commands = argParser.add_subparsers(dest = 'command', required = True)

	evaluate = commands.add_parser('evaluate', parents = [common], help = 'Evaluate a quantity at a point.')
	evaluate.add_argument('what', choices = targets)
	evaluate.add_argument('--field', help = 'Field for schwarzian and operators.')

	schwarzian = commands.add_parser('schwarzian', parents = [common], help = 'Alias of evaluate; defaults to schwarzian.')
	schwarzian.add_argument('what', nargs = '?', choices = targets, default = EvaluationTargetEnum.SCHWARZIAN.value)
	schwarzian.add_argument('--field', help = 'Field for schwarzian and operators.')

	verify = commands.add_parser('verify', parents = [common], help = 'Run a verification suite.')
	verify.add_argument('--suite', help = 'Suite name or comma separated check names.')
	verify.add_argument('--suite-file', help = 'JSON suite configuration; inline flags are ignored except --tol and --out.')

	witness = commands.add_parser('witness', parents = [common], help = 'Jerison-Lee solution with a given gradient.')
	witness.add_argument('--omega', help = 'Complex covector as "w1,w2,..."; Python complex syntax.')

	return argParser

def main(argv: list = None) -> int:
	"""
	Main function definition for running the application.

	@param argv Optional argument list; defaults to sys.argv.
	@return int exit code
	"""
	argParser = buildArgParser()
	args      = argParser.parse_args(argv)

	configUtil = ConfigUtil(args.configFile)

	if args.configFile and configUtil.getConfigFileName() != args.configFile:
		configUtil.reloadConfig(args.configFile)

	logLevel = configUtil.getProperty(ConfigConst.LOGGING, ConfigConst.LOG_LEVEL_KEY, ConfigConst.DEFAULT_LOG_LEVEL)

	logging.basicConfig(format = LOG_FORMAT, level = getattr(logging, str(logLevel).upper(), logging.INFO), force = True)

	app  = None
	code = ConfigConst.EXIT_OK

	try:
		app = CrSchwarzianApp()
		app.startApp()

		code = app.runCommand(args)

	except KeyboardInterrupt:
		logging.warning('Keyboard interruption. Exiting.')

	finally:
		if app:
			app.stopApp(code)

	return code

if __name__ == '__main__':
	sys.exit(main())
