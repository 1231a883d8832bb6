#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

import logging
import re
import threading

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from crschwarzian.common.FieldExprException import FieldExprException

from crschwarzian.engine.expr.FieldExpr import (
	FieldExpr, Literal, Coord, Neg, Add, Sub, Mul, Div, Pow, Func,
	Z_COORD, ZBAR_COORD, T_COORD)

FIELD_GRAMMAR = r"""
	?expr: term
		| expr "+" term     -> add
		| expr "-" term     -> sub

	?term: factor
		| term "*" factor   -> mul
		| term "/" factor   -> div

	?factor: power
		| "-" factor        -> neg

	?power: atom
		| atom "^" EXPONENT -> pow

	?atom: COMPLEX          -> complex_lit
		| IMAG              -> imag_lit
		| DECIMAL           -> real_lit
		| ZBAR              -> zbar_coord
		| ZVAR              -> z_coord
		| "t"               -> t_coord
		| FUNC "(" expr ")" -> func
		| "(" expr ")"

	FUNC: "log" | "exp" | "re" | "im" | "abs2" | "conj"

	ZBAR: /zbar[0-9]+/
	ZVAR: /z[0-9]+/

	COMPLEX.3: /\(-?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?(?:[+-](?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?i|i)?\)/
	IMAG.2:    /(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?i/
	DECIMAL.1: /(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?/
	EXPONENT:  /-?[0-9]+/

	%import common.WS
	%ignore WS
"""

_DECIMAL_RE    = r'(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?'
_COMPLEX_PARTS = re.compile(r'^\((?P<re>-?' + _DECIMAL_RE + r')(?:(?P<sign>[+-])(?P<im>' + _DECIMAL_RE + r')i|(?P<imonly>i))?\)$')

@v_args(inline = True)
class FieldExprTransformer(Transformer):
	"""
	Builds FieldExpr nodes bottom-up while the LALR parser reduces.

	"""

	def add(self, left, right):
		return Add(left, right)

	def sub(self, left, right):
		return Sub(left, right)

	def mul(self, left, right):
		return Mul(left, right)

	def div(self, left, right):
		return Div(left, right)

	def neg(self, operand):
		return Neg(operand)

	def pow(self, base, exponent):
		return Pow(base, int(exponent))

	def real_lit(self, token):
		return Literal(complex(float(token), 0.0))

	def imag_lit(self, token):
		return Literal(complex(0.0, float(str(token)[:-1])))

	def complex_lit(self, token):
		match = _COMPLEX_PARTS.match(str(token))

		if match.group('imonly'):
			return Literal(complex(0.0, float(match.group('re'))))

		if match.group('sign') is None:
			return Literal(complex(float(match.group('re')), 0.0))

		imag = float(match.group('im'))

		if match.group('sign') == '-':
			imag = -imag

		return Literal(complex(float(match.group('re')), imag))

	def z_coord(self, token):
		return Coord(Z_COORD, int(str(token)[1:]))

	def zbar_coord(self, token):
		return Coord(ZBAR_COORD, int(str(token)[4:]))

	def t_coord(self):
		return Coord(T_COORD)

	def func(self, name, arg):
		return Func(str(name), arg)

class FieldExprParser():
	"""
	Parses the field expression surface syntax into a FieldExpr AST.

	Grammar:
	  expr   := term (("+"|"-") term)*
	  term   := factor (("*"|"/") factor)*
	  factor := atom ("^" int)? | "-" factor
	  atom   := number | ident | func "(" expr ")" | "(" expr ")"
	  ident  := "z" int | "zbar" int | "t"
	  func   := log | exp | re | im | abs2 | conj
	  number := decimal | decimal "i" | "(" ["-"] decimal [("+"|"-") decimal] ["i"] ")"

	Syntax errors raise FieldExprException carrying the byte offset.

	"""

	_parser = None
	_lock   = threading.Lock()

	@classmethod
	def _getParser(cls) -> Lark:
		with cls._lock:
			if cls._parser is None:
				cls._parser = Lark(FIELD_GRAMMAR, start = 'expr', parser = 'lalr',
					transformer = FieldExprTransformer())

		return cls._parser

	@staticmethod
	def parse(text: str) -> FieldExpr:
		"""
		Parses 'text' into an AST.

		@param text The field expression, e.g. "-log(abs2(z1 + 1.0))/2".
		@return FieldExpr
		"""
		if text is None:
			raise FieldExprException("No field expression given", offset = 0)

		try:
			expr = FieldExprParser._getParser().parse(text)

			logging.debug("Parsed field expression: %s", text)

			return expr
		except UnexpectedCharacters as e:
			offset = e.pos_in_stream
			word   = re.match(r'[A-Za-z_][A-Za-z_0-9]*', text[offset:])

			if word:
				raise FieldExprException("Unknown identifier '{}'".format(word.group(0)), offset = offset) from None

			raise FieldExprException("Unexpected character '{}'".format(text[offset]), offset = offset) from None
		except UnexpectedEOF:
			raise FieldExprException("Unexpected end of input", offset = len(text)) from None
		except UnexpectedToken as e:
			if e.token.type == '$END':
				raise FieldExprException("Unexpected end of input", offset = len(text)) from None

			offset = e.token.start_pos if e.token.start_pos is not None else len(text)

			raise FieldExprException("Unexpected token '{}'".format(e.token), offset = offset) from None
		except UnexpectedInput as e:
			offset = getattr(e, 'pos_in_stream', None)

			raise FieldExprException("Syntax error", offset = offset if offset is not None else 0) from None
		except VisitError as e:
			raise FieldExprException(str(e.orig_exc), offset = 0) from None
