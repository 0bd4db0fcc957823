from hopfkit.scalars.field import FieldDescriptor, FieldKind, characteristic
from hopfkit.scalars.mult_order import MultOrder, mult_order
from hopfkit.scalars.scalar import Scalar, field_arith
