from hopfkit.algebra.alphabet import EMPTY_WORD, Alphabet, Generator, WeightScheme, Word
from hopfkit.algebra.ncpoly import NcPoly, poly_arith, weighted_degree
from hopfkit.algebra.tensor import TensorPoly, tensor_arith
from hopfkit.algebra.expressions import (parse_expression, parse_polynomial, parse_scalar,
                                         parse_tensor, parse_word)
