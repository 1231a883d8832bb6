#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

from crschwarzian.engine.expr.FieldExpr import (
	FieldExpr, Literal, Coord, Neg, Add, Sub, Mul, Div, Pow, Func, T_COORD)

class FieldExprPrinter():
	"""
	Prints an AST in the surface grammar with the minimum number of
	parentheses. The output parses back to a structurally equal AST.

	Precedence: + - (1) < * / (2) < unary - (3) < ^ (4) < atoms (5).
	Left operands need precedence >= their parent, right operands
	need strictly more; a power base must be an atom.

	"""

	ADD_PREC  = 1
	MUL_PREC  = 2
	NEG_PREC  = 3
	POW_PREC  = 4
	ATOM_PREC = 5

	@staticmethod
	def printExpr(expr: FieldExpr) -> str:
		return FieldExprPrinter._print(expr)

	@staticmethod
	def precedence(expr: FieldExpr) -> int:
		if isinstance(expr, (Add, Sub)):
			return FieldExprPrinter.ADD_PREC
		if isinstance(expr, (Mul, Div)):
			return FieldExprPrinter.MUL_PREC
		if isinstance(expr, Neg):
			return FieldExprPrinter.NEG_PREC
		if isinstance(expr, Pow):
			return FieldExprPrinter.POW_PREC

		return FieldExprPrinter.ATOM_PREC

	@staticmethod
	def formatLiteral(value: complex) -> str:
		re = value.real
		im = value.imag

		# negative values are parenthesized so they read back as one literal
		if im == 0.0:
			return repr(abs(re)) if re >= 0.0 else '({})'.format(repr(re))

		if re == 0.0:
			return repr(im) + 'i' if im > 0.0 else '({}i)'.format(repr(im))

		sign = '+' if im > 0.0 else '-'

		return '({}{}{}i)'.format(repr(re), sign, repr(abs(im)))

	@staticmethod
	def _print(expr: FieldExpr) -> str:
		if isinstance(expr, Literal):
			return FieldExprPrinter.formatLiteral(expr.value)

		if isinstance(expr, Coord):
			return T_COORD if expr.kind == T_COORD else '{}{}'.format(expr.kind, expr.index)

		if isinstance(expr, Func):
			return '{}({})'.format(expr.name, FieldExprPrinter._print(expr.arg))

		if isinstance(expr, Neg):
			return '-' + FieldExprPrinter._wrap(expr.operand, FieldExprPrinter.NEG_PREC)

		if isinstance(expr, Pow):
			base = FieldExprPrinter._wrap(expr.base, FieldExprPrinter.ATOM_PREC)

			return '{}^{}'.format(base, expr.exponent)

		prec  = FieldExprPrinter.precedence(expr)
		left  = FieldExprPrinter._wrap(expr.left, prec)
		right = FieldExprPrinter._wrap(expr.right, prec + 1)

		if prec == FieldExprPrinter.ADD_PREC:
			return '{} {} {}'.format(left, expr.symbol, right)

		return '{}{}{}'.format(left, expr.symbol, right)

	@staticmethod
	def _wrap(expr: FieldExpr, minPrec: int) -> str:
		text = FieldExprPrinter._print(expr)

		if FieldExprPrinter.precedence(expr) < minPrec:
			# "(-3.0)" would read back as a single signed literal
			if isinstance(expr, Neg) and isinstance(expr.operand, Literal):
				return '(- ' + text[1:] + ')'

			return '(' + text + ')'

		return text
