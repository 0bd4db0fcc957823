"""
Sparse Gaussian elimination over exact scalars.

Vectors are dictionaries from hashable coordinates (words, tensor keys, indices) to
non-zero :class:`~hopfkit.scalars.scalar.Scalar` values. Every row of an
:class:`EchelonBasis` has a distinct leading coordinate, the largest of its support under
``key``, normalized to one.
"""
from typing import Any, Callable, Dict, Generic, Hashable, List, Optional, Sequence, Tuple, TypeVar

from hopfkit.scalars.field import FieldDescriptor
from hopfkit.scalars.scalar import Scalar

Coordinate = TypeVar("Coordinate", bound=Hashable)  # pylint: disable=invalid-name
Vector = Dict[Any, Scalar]
Matrix = List[List[Scalar]]


def axpy(target: Vector, factor: Scalar, source: Vector) -> None:
    """
    ``target += factor * source`` in place, dropping cancelled coordinates.
    """
    for coordinate, value in source.items():
        updated = target[coordinate] + factor * value if coordinate in target else factor * value
        if updated.is_zero():
            target.pop(coordinate, None)
        else:
            target[coordinate] = updated


class EchelonBasis(Generic[Coordinate]):
    """
    An incrementally built echelon basis that remembers, for each row, which combination
    of the added vectors produced it, so membership tests can also express a vector in
    terms of the inputs.

    Parameters
    ----------
    field : ``FieldDescriptor``
    key : ``Callable``, optional
        Sort key on coordinates; the leading coordinate of a row is its maximum.
    """
    def __init__(self, field: FieldDescriptor, key: Callable[[Any], Any] = None) -> None:
        self.field = field
        self.key = key or (lambda coordinate: coordinate)
        self._rows: Dict[Any, Tuple[Vector, Vector]] = {}
        self.labels: List[Any] = []

    def _leading(self, vector: Vector) -> Any:
        return max(vector, key=self.key)

    def _reduce(self, vector: Vector) -> Tuple[Vector, Vector]:
        remainder = dict(vector)
        combination: Vector = {}
        while remainder:
            leading = self._leading(remainder)
            row = self._rows.get(leading)
            if row is None:
                break
            factor = remainder[leading]
            axpy(remainder, -factor, row[0])
            axpy(combination, factor, row[1])
        return remainder, combination

    def add(self, vector: Vector, label: Any = None) -> bool:
        """
        Adds ``vector``; returns ``False`` (and changes nothing) when it is already in the span.
        """
        label = len(self.labels) if label is None else label
        remainder, combination = self._reduce(vector)
        if not remainder:
            return False
        # remainder = vector - sum(combination) in terms of the inputs
        history: Vector = {label: self.field.one()}
        axpy(history, -self.field.one(), combination)
        leading = self._leading(remainder)
        scale = remainder[leading].inverse()
        self._rows[leading] = ({c: v * scale for c, v in remainder.items()},
                               {c: v * scale for c, v in history.items()})
        self.labels.append(label)
        return True

    def contains(self, vector: Vector) -> bool:
        return not self._reduce(vector)[0]

    def express(self, vector: Vector) -> Optional[Vector]:
        """
        Coefficients over the added labels summing to ``vector``, or ``None`` if it is not in
        the span.
        """
        remainder, combination = self._reduce(vector)
        return None if remainder else combination

    @property
    def rank(self) -> int:
        return len(self._rows)

    def rows(self) -> List[Vector]:
        return [self._rows[leading][0] for leading in sorted(self._rows, key=self.key)]


def kernel(images: Sequence[Vector], field: FieldDescriptor, key: Callable[[Any], Any] = None) -> List[Vector]:
    """
    A basis of ``{c : sum_i c_i images[i] = 0}`` as vectors indexed by position, in reduced
    echelon form with pivots at the largest index.
    """
    basis = EchelonBasis(field, key)
    relations = []
    for index, image in enumerate(images):
        expressed = basis.express(image)
        if expressed is None:
            basis.add(image, index)
            continue
        relation: Vector = {index: field.one()}
        axpy(relation, -field.one(), expressed)
        relations.append(relation)
    return reduced_echelon(relations, field)


def reduced_echelon(vectors: Sequence[Vector], field: FieldDescriptor,
                    key: Callable[[Any], Any] = None) -> List[Vector]:
    """
    Fully reduced echelon form: pivots are leading coordinates with coefficient one, and no
    other row has a non-zero entry in a pivot column. Rows are ordered by pivot.
    """
    key = key or (lambda coordinate: coordinate)
    basis = EchelonBasis(field, key)
    for vector in vectors:
        basis.add(vector)
    rows = [dict(row) for row in basis.rows()]
    for i, row in enumerate(rows):
        pivot = max(row, key=key)
        for j, other in enumerate(rows):
            if j != i and pivot in other:
                axpy(other, -other[pivot], row)
    return sorted(rows, key=lambda row: key(max(row, key=key)))


def rank(vectors: Sequence[Vector], field: FieldDescriptor) -> int:
    basis = EchelonBasis(field)
    for vector in vectors:
        basis.add(vector)
    return basis.rank


# Dense square matrices.

def identity_matrix(field: FieldDescriptor, size: int) -> Matrix:
    return [[field.one() if i == j else field.zero() for j in range(size)] for i in range(size)]


def matrix_mul(left: Matrix, right: Matrix, field: FieldDescriptor) -> Matrix:
    size = len(right[0]) if right else 0
    product = []
    for row in left:
        entries = []
        for j in range(size):
            total = field.zero()
            for k, value in enumerate(row):
                if not value.is_zero():
                    total = total + value * right[k][j]
            entries.append(total)
        product.append(entries)
    return product


def is_identity(matrix: Matrix) -> bool:
    return all((value.is_one() if i == j else value.is_zero())
               for i, row in enumerate(matrix) for j, value in enumerate(row))


def is_diagonal(matrix: Matrix) -> bool:
    return all(value.is_zero() for i, row in enumerate(matrix) for j, value in enumerate(row) if i != j)


def format_matrix(matrix: Matrix) -> List[List[str]]:
    return [[str(value) for value in row] for row in matrix]
