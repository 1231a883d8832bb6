#####
#
# This class is part of the CR Schwarzian Toolkit
# project, and is available via the MIT License, which can be
# found in the LICENSE file at the top level of this repository.
#

"""
Immutable AST for scalar fields over the real coordinates of a model.

Every node evaluates to a Jet at a JetPoint. Structural equality is
defined through a key tuple, so parse(print(ast)) == ast can be tested
directly. Python operators build new nodes; plain numbers are wrapped
with asExpr().

"""

import numbers

from crschwarzian.common.FieldExprException import FieldExprException

from crschwarzian.engine.jet.Jet import Jet

Z_COORD    = 'z'
ZBAR_COORD = 'zbar'
T_COORD    = 't'

LOG_FUNC  = 'log'
EXP_FUNC  = 'exp'
RE_FUNC   = 're'
IM_FUNC   = 'im'
ABS2_FUNC = 'abs2'
CONJ_FUNC = 'conj'

FUNC_NAMES = (LOG_FUNC, EXP_FUNC, RE_FUNC, IM_FUNC, ABS2_FUNC, CONJ_FUNC)

# functions allowed inside a holomorphic expression
HOLOMORPHIC_FUNCS = (LOG_FUNC, EXP_FUNC)

def asExpr(value):
	"""
	Wraps a number as a literal node. Literals never carry a negative
	real part (nor a negative imaginary part when purely imaginary);
	such values are expressed as Neg(Literal(-value)) so that they
	survive a print / parse round trip.

	"""
	if isinstance(value, FieldExpr):
		return value

	if not isinstance(value, numbers.Number):
		raise FieldExprException("Cannot use {} as a field expression".format(type(value).__name__))

	c = complex(value)

	if c.real < 0.0 or (c.real == 0.0 and c.imag < 0.0):
		return Neg(Literal(-c))

	return Literal(c)

class FieldExpr():
	"""
	Base class of all expression nodes.

	"""

	def evaluate(self, jetPoint) -> Jet:
		raise NotImplementedError()

	def children(self) -> tuple:
		return ()

	def isHolomorphic(self) -> bool:
		return all(child.isHolomorphic() for child in self.children())

	def maxCoordIndex(self) -> int:
		"""
		Largest complex coordinate index referenced (1-based), 0 if none.

		"""
		return max((child.maxCoordIndex() for child in self.children()), default = 0)

	def depth(self) -> int:
		return 1 + max((child.depth() for child in self.children()), default = 0)

	def _key(self) -> tuple:
		raise NotImplementedError()

	def __eq__(self, other):
		return isinstance(other, FieldExpr) and self._key() == other._key()

	def __hash__(self):
		return hash(self._key())

	def __str__(self):
		from crschwarzian.engine.expr.FieldExprPrinter import FieldExprPrinter

		return FieldExprPrinter.printExpr(self)

	def __repr__(self):
		return 'FieldExpr({})'.format(str(self))

	def __add__(self, other):
		return Add(self, asExpr(other))

	def __radd__(self, other):
		return Add(asExpr(other), self)

	def __sub__(self, other):
		return Sub(self, asExpr(other))

	def __rsub__(self, other):
		return Sub(asExpr(other), self)

	def __mul__(self, other):
		return Mul(self, asExpr(other))

	def __rmul__(self, other):
		return Mul(asExpr(other), self)

	def __truediv__(self, other):
		return Div(self, asExpr(other))

	def __rtruediv__(self, other):
		return Div(asExpr(other), self)

	def __neg__(self):
		return Neg(self)

	def __pow__(self, exponent):
		return Pow(self, exponent)

class Literal(FieldExpr):

	def __init__(self, value: complex):
		self.value = complex(value)

	def evaluate(self, jetPoint) -> Jet:
		return jetPoint.constant(self.value)

	def _key(self) -> tuple:
		return ('lit', self.value.real, self.value.imag)

class Coord(FieldExpr):
	"""
	Coordinate atom: z_k, zbar_k (k is 1-based) or t.

	"""

	def __init__(self, kind: str, index: int = 0):
		if kind not in (Z_COORD, ZBAR_COORD, T_COORD):
			raise FieldExprException("Unknown coordinate kind '{}'".format(kind))

		self.kind  = kind
		self.index = index if kind != T_COORD else 0

	def evaluate(self, jetPoint) -> Jet:
		if self.kind == T_COORD:
			return jetPoint.t()

		if self.index < 1 or self.index > jetPoint.getN():
			raise FieldExprException("Coordinate {}{} out of range for n={}".format(
				self.kind, self.index, jetPoint.getN()))

		if self.kind == Z_COORD:
			return jetPoint.z(self.index - 1)

		return jetPoint.zbar(self.index - 1)

	def isHolomorphic(self) -> bool:
		return self.kind == Z_COORD

	def maxCoordIndex(self) -> int:
		return self.index

	def _key(self) -> tuple:
		return ('coord', self.kind, self.index)

class Neg(FieldExpr):

	def __init__(self, operand: FieldExpr):
		self.operand = operand

	def evaluate(self, jetPoint) -> Jet:
		return -self.operand.evaluate(jetPoint)

	def children(self) -> tuple:
		return (self.operand,)

	def _key(self) -> tuple:
		return ('neg', self.operand._key())

class BinaryOp(FieldExpr):

	symbol = '?'

	def __init__(self, left: FieldExpr, right: FieldExpr):
		self.left  = left
		self.right = right

	def evaluate(self, jetPoint) -> Jet:
		a, b = Jet.align(self.left.evaluate(jetPoint), self.right.evaluate(jetPoint))

		return self._combine(a, b)

	def children(self) -> tuple:
		return (self.left, self.right)

	def _combine(self, a: Jet, b: Jet) -> Jet:
		raise NotImplementedError()

	def _key(self) -> tuple:
		return (self.symbol, self.left._key(), self.right._key())

class Add(BinaryOp):
	symbol = '+'

	def _combine(self, a, b):
		return a + b

class Sub(BinaryOp):
	symbol = '-'

	def _combine(self, a, b):
		return a - b

class Mul(BinaryOp):
	symbol = '*'

	def _combine(self, a, b):
		return a * b

class Div(BinaryOp):
	symbol = '/'

	def _combine(self, a, b):
		return a * b.reciprocal(label = str(self.right))

class Pow(FieldExpr):

	def __init__(self, base: FieldExpr, exponent: int):
		if not isinstance(exponent, numbers.Integral):
			raise FieldExprException("Only integer exponents are supported, got {}".format(exponent))

		self.base     = base
		self.exponent = int(exponent)

	def evaluate(self, jetPoint) -> Jet:
		value = self.base.evaluate(jetPoint)

		if self.exponent < 0:
			return value.reciprocal(label = str(self.base)) ** (-self.exponent)

		return value ** self.exponent

	def children(self) -> tuple:
		return (self.base,)

	def _key(self) -> tuple:
		return ('^', self.base._key(), self.exponent)

class Func(FieldExpr):

	def __init__(self, name: str, arg: FieldExpr):
		if name not in FUNC_NAMES:
			raise FieldExprException("Unknown function '{}'".format(name))

		self.name = name
		self.arg  = arg

	def evaluate(self, jetPoint) -> Jet:
		value = self.arg.evaluate(jetPoint)

		if self.name == LOG_FUNC:
			return value.log(label = str(self.arg))
		if self.name == EXP_FUNC:
			return value.exp()
		if self.name == RE_FUNC:
			return value.real()
		if self.name == IM_FUNC:
			return value.imag()
		if self.name == ABS2_FUNC:
			return value.abs2()

		return value.conj()

	def children(self) -> tuple:
		return (self.arg,)

	def isHolomorphic(self) -> bool:
		return self.name in HOLOMORPHIC_FUNCS and self.arg.isHolomorphic()

	def _key(self) -> tuple:
		return ('fn', self.name, self.arg._key())
