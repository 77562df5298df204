"""Expression parsing for potentials given as text.

Grammar (explicit multiplication only):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | power
    power   := atom ('^' ['-'] INTEGER)?
    atom    := INTEGER ('/' INTEGER)? | NAME | '(' expr ')'

Rational literals are written p/q; '/' exists only inside literals, so it
binds tighter than '^'.  Variables are x, y, z, w or x1..x8.  Exponents are
integer literals and may be negative; a negative power is only evaluated for
single-monomial bases (units of the Laurent ring).  Parse errors carry the
character offset of the offending token.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, ParseError
from .laurent import MAX_RANK, SHORT_NAMES, LaurentPoly, poly_string
from .rings import QQ

# -- tokens -------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, NAME, OP, END
    text: str
    offset: int


_OPERATORS = set("+-*^()/")


def tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("NUMBER", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], i))
            i = j
            continue
        if ch in _OPERATORS:
            tokens.append(Token("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("END", "", n))
    return tokens


def variable_index(name):
    """Index of a variable name, or None if the name is not a variable."""
    if name in SHORT_NAMES:
        return SHORT_NAMES.index(name)
    if len(name) >= 2 and name[0] == "x" and name[1:].isdigit():
        index = int(name[1:])
        if 1 <= index <= MAX_RANK:
            return index - 1
    return None


# -- syntax tree -------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction
    offset: int


@dataclass(frozen=True)
class Var:
    index: int
    name: str
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: object
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    offset: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    offset: int


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, op):
        token = self.peek()
        if token.kind == "OP" and token.text == op:
            return self.advance()
        raise ParseError(f"expected {op!r}", token.offset)

    def at_op(self, *ops):
        token = self.peek()
        return token.kind == "OP" and token.text in ops

    def parse(self):
        expr = self.expr()
        token = self.peek()
        if token.kind != "END":
            raise ParseError(f"unexpected {token.text!r}", token.offset)
        return expr

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            token = self.advance()
            right = self.term()
            node = BinOp(token.text, node, right, token.offset)
        return node

    def term(self):
        node = self.factor()
        while self.at_op("*"):
            token = self.advance()
            right = self.factor()
            node = BinOp("*", node, right, token.offset)
        return node

    def factor(self):
        if self.at_op("-"):
            token = self.advance()
            return Neg(self.factor(), token.offset)
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            token = self.advance()
            sign = 1
            if self.at_op("-"):
                self.advance()
                sign = -1
            digits = self.peek()
            if digits.kind != "NUMBER":
                raise ParseError("exponent must be an integer literal", digits.offset)
            self.advance()
            return Pow(base, sign * int(digits.text), token.offset)
        return base

    def atom(self):
        token = self.peek()
        if token.kind == "NUMBER":
            self.advance()
            numerator = int(token.text)
            if self.at_op("/"):
                self.advance()
                denom_token = self.peek()
                if denom_token.kind != "NUMBER":
                    raise ParseError("expected a denominator", denom_token.offset)
                self.advance()
                denominator = int(denom_token.text)
                if denominator == 0:
                    raise ParseError("zero denominator", denom_token.offset)
                return Num(Fraction(numerator, denominator), token.offset)
            return Num(Fraction(numerator), token.offset)
        if token.kind == "NAME":
            index = variable_index(token.text)
            if index is None:
                raise ParseError(f"unknown identifier {token.text!r}", token.offset)
            self.advance()
            return Var(index, token.text, token.offset)
        if token.kind == "OP" and token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a number, variable or parenthesis", token.offset)


def parse_expression(text):
    """Parse text into a syntax tree; raises ParseError with an offset."""
    return _Parser(tokenize(text)).parse()


# -- evaluation -------------------------------------------------


def infer_rank(expr):
    """Smallest rank containing every variable of the expression (at least 1)."""
    highest = 0

    def walk(node):
        nonlocal highest
        if isinstance(node, Var):
            highest = max(highest, node.index + 1)
        elif isinstance(node, Neg):
            walk(node.operand)
        elif isinstance(node, BinOp):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Pow):
            walk(node.base)

    walk(expr)
    return max(highest, 1)


def to_poly(expr, rank):
    """Evaluate a syntax tree to a canonical Laurent polynomial over QQ."""
    if isinstance(expr, Num):
        return LaurentPoly.constant(rank, expr.value, QQ)
    if isinstance(expr, Var):
        if expr.index >= rank:
            raise DimensionMismatch(
                f"variable {expr.name!r} needs rank {expr.index + 1}, have {rank}"
            )
        return LaurentPoly.variable(rank, expr.index, QQ)
    if isinstance(expr, Neg):
        return -to_poly(expr.operand, rank)
    if isinstance(expr, BinOp):
        left = to_poly(expr.left, rank)
        right = to_poly(expr.right, rank)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        return left * right
    if isinstance(expr, Pow):
        base = to_poly(expr.base, rank)
        if expr.exponent >= 0:
            return base**expr.exponent
        terms = base.terms()
        if len(terms) != 1:
            raise ParseError(
                "negative powers need a single-monomial base", expr.offset
            )
        (exponents, coefficient), = terms
        inverse = Fraction(1) / Fraction(coefficient)
        return LaurentPoly.monomial(
            tuple(expr.exponent * e for e in exponents),
            inverse ** (-expr.exponent),
            QQ,
        )
    raise TypeError(f"not an expression node: {expr!r}")


def parse_polynomial(text, rank=None):
    """Parse and evaluate in one step, inferring the rank when not given."""
    expr = parse_expression(text)
    if rank is None:
        rank = infer_rank(expr)
    return to_poly(expr, rank)


def split_top_level_summands(text):
    """Split an expression at top-level infix '+'/'-' into component slices.

    Returns (label, slice) pairs where the label is the slice with all
    whitespace removed; a '-' belongs to the summand it precedes.  Parsing
    the slices and summing them reproduces the whole expression.
    """
    tokens = tokenize(text)
    depth = 0
    expect_operand = True
    cuts = []
    for token in tokens:
        if token.kind == "END":
            break
        if token.kind == "OP":
            if token.text == "(":
                depth += 1
                expect_operand = True
            elif token.text == ")":
                depth -= 1
                expect_operand = False
            elif token.text in "+-" and depth == 0 and not expect_operand:
                cuts.append((token.offset, token.text))
                expect_operand = True
            else:
                expect_operand = True
        else:
            expect_operand = False
    pieces = []
    start = 0
    for offset, op in cuts:
        pieces.append((start, text[start:offset]))
        start = offset + 1 if op == "+" else offset
    pieces.append((start, text[start:]))
    out = []
    for offset, piece in pieces:
        label = "".join(piece.split())
        if label.startswith("+"):
            label = label[1:]
        out.append((label, piece))
    return out


def poly_to_text(poly, names=None):
    """Canonical text form; parse_polynomial(poly_to_text(p)) == p."""
    return poly_string(poly, names)
