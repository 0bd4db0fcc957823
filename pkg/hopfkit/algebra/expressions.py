"""
The expression grammar shared by presentation files and the command line::

    expr    := tensor (('+' | '-') tensor)*
    tensor  := product ('@' product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' exponent)?
    atom    := INTEGER | NAME | '(' expr ')'

Products are explicit (``E*K``, never ``EK``), ``@`` separates tensor slots and binds
looser than ``*``, and a negative exponent is only allowed on a monomial whose symbols all
have formal inverses (``K^-1``). A name is a generator if the alphabet has it, otherwise
the field variable (``q``, ``zeta``). Expressions are evaluated in the free algebra;
callers normalize the result against their rule set.
"""
import logging
import re
from typing import List, NamedTuple, Optional, Union

from hopfkit.algebra.alphabet import Alphabet, Word
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.algebra.tensor import TensorPoly
from hopfkit.common.checks import ConfigurationError, ExpressionSyntaxError, UnknownSymbol
from hopfkit.scalars.field import FieldDescriptor, FieldKind
from hopfkit.scalars.scalar import Scalar

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

Value = Union[Scalar, NcPoly, TensorPoly]

_TOKEN_PATTERNS = [
        ("number", r"\d+"),
        ("name", r"[A-Za-z_][A-Za-z0-9_']*"),
        ("lpar", r"\("),
        ("rpar", r"\)"),
        ("plus", r"\+"),
        ("minus", r"-"),
        ("mul", r"\*"),
        ("div", r"/"),
        ("pow", r"\^"),
        ("tensor", r"@"),
        ("skip", r"[ \t]+"),
        ("error", r"."),
]
_TOKEN_REGEX = re.compile("|".join("(?P<{}>{})".format(name, text) for name, text in _TOKEN_PATTERNS))


class Token(NamedTuple):
    type: str
    value: str
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    for match in _TOKEN_REGEX.finditer(text):
        kind = match.lastgroup
        if kind == "skip":
            continue
        if kind == "error":
            raise ExpressionSyntaxError("unexpected character {!r}".format(match.group()),
                                        text, (1, match.start() + 1))
        tokens.append(Token(kind, match.group(), match.start() + 1))
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet, field: FieldDescriptor) -> None:
        self.text = text
        self.alphabet = alphabet
        self.field = field
        self.tokens = tokenize(text)
        self.position = 0

    # Token plumbing.

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def expect(self, kind: str, description: str) -> Token:
        if self.current.type != kind:
            self.error("unexpected {}".format(self._describe(self.current)), [description])
        return self.advance()

    def error(self, message: str, expected: List[str] = (), token: Optional[Token] = None):
        token = token or self.current
        raise ExpressionSyntaxError(message, self.text, (1, token.column), expected)

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.type == "end" else "{!r}".format(token.value)

    # Grammar.

    def parse(self) -> Value:
        if self.current.type == "end":
            self.error("empty expression", ["a number", "a name", "'('"])
        value = self.expr()
        if self.current.type != "end":
            self.error("unexpected {}".format(self._describe(self.current)),
                       ["'+'", "'-'", "'*'", "'/'", "'@'", "end of input"])
        return value

    def expr(self) -> Value:
        value = self.tensor()
        while self.current.type in ("plus", "minus"):
            operator = self.advance()
            right = self.tensor()
            value = self.combine_sum(value, right, operator)
        return value

    def tensor(self) -> Value:
        value = self.product()
        while self.current.type == "tensor":
            operator = self.advance()
            right = self.product()
            value = self.combine_tensor(value, right, operator)
        return value

    def product(self) -> Value:
        value = self.unary()
        while self.current.type in ("mul", "div"):
            operator = self.advance()
            right = self.unary()
            if operator.type == "mul":
                value = self.combine_product(value, right, operator)
            else:
                value = self.combine_quotient(value, right, operator)
        return value

    def unary(self) -> Value:
        if self.current.type == "minus":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Value:
        base_token = self.current
        base = self.atom()
        if self.current.type != "pow":
            return base
        operator = self.advance()
        exponent = self.exponent()
        return self.raise_power(base, exponent, base_token, operator)

    def exponent(self) -> int:
        parenthesized = self.current.type == "lpar"
        if parenthesized:
            self.advance()
        sign = 1
        if self.current.type == "minus":
            self.advance()
            sign = -1
        number = self.expect("number", "an integer exponent")
        if parenthesized:
            self.expect("rpar", "')'")
        return sign * int(number.value)

    def atom(self) -> Value:
        token = self.current
        if token.type == "number":
            self.advance()
            return self.field.from_int(int(token.value))
        if token.type == "name":
            self.advance()
            return self.resolve(token)
        if token.type == "lpar":
            self.advance()
            value = self.expr()
            self.expect("rpar", "')'")
            return value
        self.error("unexpected {}".format(self._describe(token)), ["a number", "a name", "'('"])

    # Semantics.

    def resolve(self, token: Token) -> Value:
        if token.value in self.alphabet:
            return NcPoly.from_word(self.alphabet, self.field, (token.value,))
        if self.field.variable is not None and token.value == self.field.variable:
            return self.field.generator()
        known = list(self.alphabet.symbols)
        if self.field.kind in (FieldKind.CYCLOTOMIC, FieldKind.RATIONAL_FUNCTIONS):
            known.append(self.field.variable)
        raise UnknownSymbol("unknown symbol {!r}".format(token.value), self.text, (1, token.column), known)

    def as_poly(self, value: Value) -> Union[NcPoly, TensorPoly]:
        if isinstance(value, Scalar):
            return NcPoly.from_scalar(self.alphabet, self.field, value)
        return value

    def combine_sum(self, left: Value, right: Value, operator: Token) -> Value:
        if isinstance(left, Scalar) and isinstance(right, Scalar):
            return left + right if operator.type == "plus" else left - right
        left, right = self.as_poly(left), self.as_poly(right)
        if type(left) is not type(right) or (isinstance(left, TensorPoly) and left.arity != right.arity):
            self.error("cannot add terms with different numbers of tensor slots", token=operator)
        return left + right if operator.type == "plus" else left - right

    def combine_product(self, left: Value, right: Value, operator: Token) -> Value:
        if isinstance(left, Scalar) or isinstance(right, Scalar):
            return left * right
        if type(left) is not type(right):
            self.error("cannot multiply a tensor by a polynomial", token=operator)
        if isinstance(left, TensorPoly):
            if left.arity != right.arity:
                self.error("cannot multiply tensors with different numbers of slots", token=operator)
            return left.componentwise_mul(right)
        return left * right

    def combine_quotient(self, left: Value, right: Value, operator: Token) -> Value:
        if isinstance(right, NcPoly) and right.is_scalar():
            right = right.scalar_value()
        if not isinstance(right, Scalar):
            self.error("division is only defined by scalars", token=operator)
        if right.is_zero():
            self.error("division by zero", token=operator)
        if isinstance(left, Scalar):
            return left / right
        return left.scale(right.inverse())

    def combine_tensor(self, left: Value, right: Value, operator: Token) -> TensorPoly:
        left, right = self.as_poly(left), self.as_poly(right)
        arity = sum(value.arity if isinstance(value, TensorPoly) else 1 for value in (left, right))
        terms = [(k1 + k2, c1 * c2) for k1, c1 in self._pure_terms(left) for k2, c2 in self._pure_terms(right)]
        return TensorPoly(self.alphabet, self.field, arity, terms)

    @staticmethod
    def _pure_terms(value: Union[NcPoly, TensorPoly]):
        if isinstance(value, TensorPoly):
            return list(value.items())
        return [((word,), c) for word, c in value.items()]

    def raise_power(self, base: Value, exponent: int, base_token: Token, operator: Token) -> Value:
        if isinstance(base, Scalar):
            if exponent < 0 and base.is_zero():
                self.error("zero has no inverse", token=operator)
            return base ** exponent
        if isinstance(base, TensorPoly):
            if exponent < 0:
                self.error("negative powers of tensors are not defined", token=operator)
            result = TensorPoly.unit(self.alphabet, self.field, base.arity)
            for _ in range(exponent):
                result = result.componentwise_mul(base)
            return result
        if exponent < 0:
            base = self.formal_inverse(base, base_token)
            exponent = -exponent
        result = NcPoly.one(self.alphabet, self.field)
        for _ in range(exponent):
            result = result * base
        return result

    def formal_inverse(self, base: NcPoly, token: Token) -> NcPoly:
        if not base.is_monomial():
            self.error("negative exponents need a single monomial", token=token)
        (word, coefficient), = base.items()
        inverted = self.alphabet.invert_word(word)
        if inverted is None:
            self.error("{} has no formal inverse in the alphabet".format(self.alphabet.display_word(word)),
                       token=token)
        return NcPoly(self.alphabet, self.field, [(inverted, coefficient.inverse())])


def parse_expression(text: str, alphabet: Alphabet, field: FieldDescriptor) -> Value:
    """
    Parses ``text`` into a scalar, a polynomial or a tensor, whichever it denotes.
    """
    value = _Parser(text, alphabet, field).parse()
    logger.debug("parsed %r as %s", text, type(value).__name__)
    return value


def parse_scalar(text: str, field: FieldDescriptor) -> Scalar:
    value = parse_expression(text, Alphabet([]), field)
    if not isinstance(value, Scalar):
        raise ExpressionSyntaxError("expected a scalar", text)
    return value


def parse_polynomial(text: str, alphabet: Alphabet, field: FieldDescriptor) -> NcPoly:
    value = parse_expression(text, alphabet, field)
    if isinstance(value, Scalar):
        return NcPoly.from_scalar(alphabet, field, value)
    if isinstance(value, TensorPoly):
        raise ExpressionSyntaxError("expected a polynomial, found a tensor", text)
    return value


def parse_tensor(text: str, alphabet: Alphabet, field: FieldDescriptor, arity: int = 2) -> TensorPoly:
    value = parse_expression(text, alphabet, field)
    if isinstance(value, (Scalar, NcPoly)) and arity == 1:
        value = parse_polynomial(text, alphabet, field)
        return TensorPoly(alphabet, field, 1, [((word,), c) for word, c in value.items()])
    if not isinstance(value, TensorPoly):
        raise ExpressionSyntaxError("expected a tensor with {} slots, e.g. 'E@1 + K@E'".format(arity), text)
    if value.arity != arity:
        raise ExpressionSyntaxError("expected {} tensor slots, found {}".format(arity, value.arity), text)
    return value


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """
    Parses a monomial with coefficient one, such as ``K^-1`` or ``1``, into a word.
    """
    value = parse_polynomial(text, alphabet, FieldDescriptor.rationals())
    if not value.is_monomial() or not value.coefficient(value.leading_word()).is_one():
        raise ConfigurationError("{!r} is not a single word".format(text))
    return value.leading_word()
