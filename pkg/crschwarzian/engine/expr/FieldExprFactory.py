#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import numpy as calcLib

from crschwarzian.engine.expr.FieldExpr import (
	FieldExpr, Coord, Neg, Add, Sub, Mul, Div, Pow, Func, asExpr,
	Z_COORD, ZBAR_COORD, T_COORD, FUNC_NAMES, RE_FUNC, IM_FUNC, ABS2_FUNC, LOG_FUNC, EXP_FUNC)

class FieldExprFactory():
	"""
	Convenience constructors for expressions: atoms, literals, Möbius
	maps, and the seeded random fields and ASTs used by the
	verification suite and the tests.

	"""

	@staticmethod
	def makeLiteral(value: complex) -> FieldExpr:
		return asExpr(value)

	@staticmethod
	def z(k: int) -> FieldExpr:
		return Coord(Z_COORD, k)

	@staticmethod
	def zbar(k: int) -> FieldExpr:
		return Coord(ZBAR_COORD, k)

	@staticmethod
	def t() -> FieldExpr:
		return Coord(T_COORD)

	@staticmethod
	def re(arg: FieldExpr) -> FieldExpr:
		return Func(RE_FUNC, arg)

	@staticmethod
	def im(arg: FieldExpr) -> FieldExpr:
		return Func(IM_FUNC, arg)

	@staticmethod
	def abs2(arg: FieldExpr) -> FieldExpr:
		return Func(ABS2_FUNC, arg)

	@staticmethod
	def log(arg: FieldExpr) -> FieldExpr:
		return Func(LOG_FUNC, arg)

	@staticmethod
	def exp(arg: FieldExpr) -> FieldExpr:
		return Func(EXP_FUNC, arg)

	@staticmethod
	def linear(coeffs, k0: int = 1) -> FieldExpr:
		"""
		sum_k coeffs[k] * z_(k0 + k), skipping zero coefficients.

		"""
		expr = None

		for k, c in enumerate(coeffs):
			if c == 0:
				continue

			term = asExpr(complex(c)) * Coord(Z_COORD, k0 + k)
			expr = term if expr is None else expr + term

		return expr if expr is not None else asExpr(0.0)

	@staticmethod
	def mobiusMap(a: complex, b: complex, c: complex, d: complex, k: int = 1) -> FieldExpr:
		"""
		(a z_k + b) / (c z_k + d) as a holomorphic expression.

		"""
		z = Coord(Z_COORD, k)

		return Div(asExpr(a) * z + asExpr(b), asExpr(c) * z + asExpr(d))

	@staticmethod
	def randomPolynomial(rng: calcLib.random.Generator, n: int, degree: int = 3, terms: int = 5,
		scale: float = 0.5, realValued: bool = True, useT: bool = True) -> FieldExpr:
		"""
		Random polynomial in re(z_k), im(z_k) and t with coefficients in
		[-scale, scale] (complex coefficients when realValued is False).

		@param rng Seeded numpy generator.
		@param n CR dimension (number of complex coordinates).
		@param degree Maximal monomial degree.
		@param terms Number of monomials.
		@param scale Coefficient magnitude bound.
		@param realValued Real coefficients if True.
		@param useT Whether t may appear.
		@return FieldExpr
		"""
		atoms = []

		for k in range(1, n + 1):
			atoms.append(Func(RE_FUNC, Coord(Z_COORD, k)))
			atoms.append(Func(IM_FUNC, Coord(Z_COORD, k)))

		if useT:
			atoms.append(Coord(T_COORD))

		expr = None

		for _ in range(terms):
			coeff = rng.uniform(-scale, scale)

			if not realValued:
				coeff = complex(coeff, rng.uniform(-scale, scale))

			monomial = asExpr(coeff)
			termDeg  = int(rng.integers(1, degree + 1))

			for atomIdx in rng.integers(0, len(atoms), size = termDeg):
				monomial = monomial * atoms[int(atomIdx)]

			expr = monomial if expr is None else expr + monomial

		return expr

	@staticmethod
	def randomAst(rng: calcLib.random.Generator, n: int, maxDepth: int = 6) -> FieldExpr:
		"""
		Random syntax tree of depth <= maxDepth over the full grammar.
		Evaluation is not guaranteed to be non-singular.

		"""
		if maxDepth <= 1 or rng.random() < 0.25:
			return FieldExprFactory._randomLeaf(rng, n)

		choice = int(rng.integers(0, 8))
		child  = lambda: FieldExprFactory.randomAst(rng, n, maxDepth - 1)

		if choice == 0:
			return Add(child(), child())
		if choice == 1:
			return Sub(child(), child())
		if choice == 2:
			return Mul(child(), child())
		if choice == 3:
			return Div(child(), child())
		if choice == 4:
			return Neg(child())
		if choice == 5:
			return Pow(child(), int(rng.integers(-3, 4)))

		return Func(FUNC_NAMES[int(rng.integers(0, len(FUNC_NAMES)))], child())

	@staticmethod
	def _randomLeaf(rng: calcLib.random.Generator, n: int) -> FieldExpr:
		choice = int(rng.integers(0, 6))
		k      = int(rng.integers(1, n + 1))

		if choice == 0:
			return Coord(Z_COORD, k)
		if choice == 1:
			return Coord(ZBAR_COORD, k)
		if choice == 2:
			return Coord(T_COORD)
		if choice == 3:
			return asExpr(round(float(rng.uniform(-5.0, 5.0)), 3))
		if choice == 4:
			return asExpr(complex(0.0, round(float(rng.uniform(-5.0, 5.0)), 3)))

		return asExpr(complex(round(float(rng.uniform(-5.0, 5.0)), 3), round(float(rng.uniform(-5.0, 5.0)), 3)))
