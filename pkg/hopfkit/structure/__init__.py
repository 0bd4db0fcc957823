from hopfkit.structure.window import BasisWindow
from hopfkit.structure.skew_primitives import SkewPrimitiveSpace, is_skew_primitive, shift_to_x1, skew_primitives
from hopfkit.structure.conjugation import a_x, conjugation_matrix, m_H, matrix_order
from hopfkit.structure.decomposition import filtration_step_check, h1_decomposition_check
