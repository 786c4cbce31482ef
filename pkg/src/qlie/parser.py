"""Expression parser for scalars, U_q(sl2) elements and (sl2)_h vectors.

Grammar (precedence from tightest): ``^`` with an integer exponent, unary
minus, multiplication (``*``, ``/`` or juxtaposition), then ``+``/``-``::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/")? unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] INT | "^" "(" ["-"] INT ")")?
    atom   := INT | SYMBOL | "(" expr ")"

Symbols: ``q`` and ``s`` everywhere; ``E F K Kinv`` (aliases ``X+ X-``)
in algebra mode; ``Xp_h Xm_h H_h`` in qlie mode.  Word mode is algebra
mode plus the letter ``H`` and is only used to build ad-words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import HH, XM, XP, QLieVector
from .errors import ParseError
from .pbw import E, F, K, KINV, AdWord, AlgElement
from .qcoeff import ONE, Q, S, ExtScalar

__all__ = ["parse", "eval_ast", "evaluate", "to_adword", "Num", "Sym", "Neg", "Pow", "BinOp"]

MODES = ("algebra", "qlie", "scalar", "word")

_SCALAR_SYMS = {"q", "s"}
_ALGEBRA_SYMS = {"E", "F", "K", "Kinv", "X+", "X-"}
_QLIE_SYMS = {"Xp_h", "Xm_h", "H_h"}
_ALLOWED = {
    "scalar": _SCALAR_SYMS,
    "algebra": _SCALAR_SYMS | _ALGEBRA_SYMS,
    "word": _SCALAR_SYMS | _ALGEBRA_SYMS | {"H"},
    "qlie": _SCALAR_SYMS | _QLIE_SYMS,
}
_KNOWN = _SCALAR_SYMS | _ALGEBRA_SYMS | _QLIE_SYMS | {"H"}


@dataclass(frozen=True)
class Num:
    value: int
    offset: int = 0


@dataclass(frozen=True)
class Sym:
    name: str
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    operand: object
    offset: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    offset: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    offset: int = 0


def is_scalar(node):
    if isinstance(node, Num):
        return True
    if isinstance(node, Sym):
        return node.name in _SCALAR_SYMS
    if isinstance(node, (Neg, Pow)):
        return is_scalar(node.operand if isinstance(node, Neg) else node.base)
    return is_scalar(node.left) and is_scalar(node.right)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<sym>X[+\-]|[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class _Parser:
    def __init__(self, text, mode):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
        self.text = text
        self.mode = mode
        self.tokens = self._tokenize(text)
        self.i = 0

    def _offset(self, pos):
        return len(self.text[:pos].encode("utf-8"))

    def _tokenize(self, text):
        toks = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", self._offset(pos))
            kind = m.lastgroup
            start = m.start(kind)
            toks.append((kind, m.group(kind), self._offset(start)))
            pos = m.end()
        toks.append(("end", "", self._offset(len(text))))
        return toks

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, off = self.next()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", off)

    def error(self, msg, off=None):
        raise ParseError(msg, self.peek()[2] if off is None else off)

    def parse(self):
        node = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            self.error(f"unexpected token {val!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, off = self.next()
            node = BinOp(op, node, self.term(), off)
        return node

    def _starts_atom(self):
        kind, val, _ = self.peek()
        return kind in ("num", "sym") or (kind == "op" and val == "(")

    def term(self):
        node = self.unary()
        while True:
            kind, val, off = self.peek()
            if kind == "op" and val in ("*", "/"):
                self.next()
                right = self.unary()
                op = val
            elif self._starts_atom():
                right = self.unary()
                op = "*"
            else:
                return node
            if op == "/":
                if not (is_scalar(node) and is_scalar(right)):
                    raise ParseError("division is only defined between scalars", off)
            elif self.mode == "qlie" and not is_scalar(node) and not is_scalar(right):
                raise ParseError("product of two quantum Lie algebra elements is not defined", off)
            node = BinOp(op, node, right, off)

    def unary(self):
        kind, val, off = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return Neg(self.unary(), off)
        return self.power()

    def _int_exponent(self):
        kind, val, off = self.peek()
        sign = 1
        if kind == "op" and val == "-":
            self.next()
            sign = -1
            kind, val, off = self.peek()
        if kind != "num":
            self.error("exponent must be an integer")
        self.next()
        return sign * int(val)

    def power(self):
        base = self.atom()
        kind, val, off = self.peek()
        if not (kind == "op" and val == "^"):
            return base
        self.next()
        if self.peek()[1] == "(":
            self.next()
            exp = self._int_exponent()
            self.expect(")")
        else:
            exp = self._int_exponent()
        if not is_scalar(base):
            if self.mode == "qlie":
                raise ParseError("powers of quantum Lie algebra elements are not defined", off)
            if exp < 0 and not (isinstance(base, Sym) and base.name in ("K", "Kinv")):
                raise ParseError("negative powers are only allowed on K and scalars", off)
        return Pow(base, exp, off)

    def atom(self):
        kind, val, off = self.next()
        if kind == "num":
            return Num(int(val), off)
        if kind == "sym":
            if val not in _KNOWN:
                raise ParseError(f"unknown symbol {val!r}", off)
            if val not in _ALLOWED[self.mode]:
                raise ParseError(f"symbol {val!r} is not allowed in {self.mode} mode", off)
            return Sym(val, off)
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {val or 'end of input'!r}", off)


def parse(text, mode="algebra"):
    """Parse ``text`` into an AST, checking symbols against ``mode``."""
    return _Parser(text, mode).parse()


# --- evaluation -------------------------------------------------------------

_SYMBOL_VALUES = {
    "q": Q,
    "s": S,
    "E": E,
    "X+": E,
    "F": F,
    "X-": F,
    "K": K,
    "Kinv": KINV,
    "Xp_h": XP,
    "Xm_h": XM,
    "H_h": HH,
}


def _mul(x, y, off):
    if isinstance(x, ExtScalar) and isinstance(y, ExtScalar):
        return x * y
    if isinstance(x, QLieVector) and isinstance(y, ExtScalar):
        return x.scale(y)
    if isinstance(y, QLieVector) and isinstance(x, ExtScalar):
        return y.scale(x)
    if isinstance(x, QLieVector) or isinstance(y, QLieVector):
        raise ParseError("product of two quantum Lie algebra elements is not defined", off)
    return _as_alg(x) * _as_alg(y)


def _as_alg(x):
    return x if isinstance(x, AlgElement) else AlgElement.from_scalar(x)


def _add(x, y, off):
    if isinstance(x, ExtScalar) and isinstance(y, ExtScalar):
        return x + y
    if isinstance(x, QLieVector) and isinstance(y, QLieVector):
        return x + y
    if isinstance(x, QLieVector) or isinstance(y, QLieVector):
        zero_x = isinstance(x, ExtScalar) and x.is_zero()
        zero_y = isinstance(y, ExtScalar) and y.is_zero()
        if zero_x:
            return y
        if zero_y:
            return x
        raise ParseError("cannot add a scalar to a quantum Lie algebra element", off)
    return _as_alg(x) + _as_alg(y)


def _neg(x):
    return x.scale(-ONE) if isinstance(x, (AlgElement, QLieVector)) else -x


def _eval(node):
    if isinstance(node, Num):
        return ExtScalar.q_power(0, node.value)
    if isinstance(node, Sym):
        return _SYMBOL_VALUES[node.name]
    if isinstance(node, Neg):
        return _neg(_eval(node.operand))
    if isinstance(node, Pow):
        if isinstance(node.base, Sym) and node.base.name in ("K", "Kinv"):
            sign = 1 if node.base.name == "K" else -1
            return AlgElement.monomial(0, sign * node.exponent, 0)
        base = _eval(node.base)
        return base ** node.exponent
    x, y = _eval(node.left), _eval(node.right)
    if node.op == "+":
        return _add(x, y, node.offset)
    if node.op == "-":
        return _add(x, _neg(y), node.offset)
    if node.op == "*":
        return _mul(x, y, node.offset)
    if y.is_zero():
        raise ParseError("division by zero", node.offset)
    return x / y


def eval_ast(ast, mode="algebra"):
    """Evaluate an AST to an ExtScalar, AlgElement or QLieVector by mode."""
    value = _eval(ast)
    if mode == "scalar":
        return value
    if mode == "qlie":
        if isinstance(value, ExtScalar):
            if value.is_zero():
                return QLieVector()
            raise ParseError("a nonzero scalar is not an element of the quantum Lie algebra", 0)
        return value
    return _as_alg(value)


def evaluate(text, mode="algebra"):
    return eval_ast(parse(text, mode), mode)


# --- ad-words ---------------------------------------------------------------

_LETTER = {"E": "E", "X+": "E", "F": "F", "X-": "F", "K": "K", "Kinv": "Kinv", "H": "H"}
_INVERSE = {"K": "Kinv", "Kinv": "K"}


def _word(node):
    if is_scalar(node):
        return AdWord({(): _eval(node)})
    if isinstance(node, Sym):
        return AdWord.letter(_LETTER[node.name])
    if isinstance(node, Neg):
        return -_word(node.operand)
    if isinstance(node, Pow):
        letter = node.base.name if isinstance(node.base, Sym) else None
        if node.exponent < 0:
            return AdWord.word((_INVERSE[letter],) * -node.exponent)
        return _word(node.base) ** node.exponent
    x, y = _word(node.left), _word(node.right)
    if node.op == "+":
        return x + y
    if node.op == "-":
        return x - y
    return x * y


def to_adword(text_or_ast):
    """Formal (un-normalised) ad-word of an expression in word mode."""
    ast = parse(text_or_ast, "word") if isinstance(text_or_ast, str) else text_or_ast
    return _word(ast)
