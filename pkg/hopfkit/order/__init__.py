from hopfkit.common.verdicts import ArithmeticDrift, GeometricDrift, OrderResult
from hopfkit.order.orbits import OrbitClassification, antipode_power, classify_orbit, s_squared_orbit
from hopfkit.order.antipode_order import antipode_order, generator_periods, is_identity_antipode
from hopfkit.order.theorems import (admissible_exponents, central_group_likes, check_central_group_likes,
                                    check_char_p_binomial, check_char_p_bound, check_conjugation_formula,
                                    check_drift_progression, check_graded_order_law, check_grading,
                                    check_group_exponent_bound, check_nilpotence, check_order_parity,
                                    check_s_squared_identity_on_group_likes, check_taft_wilson_step,
                                    group_like_order, reverify_certificate)
