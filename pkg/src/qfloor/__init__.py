"""Exact floor-of-square-root sums, quadratic remainder sums and class numbers."""
from .arith import (
    ExactRational,
    divisors,
    factorize,
    is_prime,
    is_squarefree,
    isqrt,
    moebius,
    rem,
    squarefree_decomp,
)
from .classnum import (
    class_number,
    class_number_dirichlet,
    discriminant_of,
    h_neg_p_1mod4,
    h_neg_p_3mod4,
    h_star,
)
from .floorsum import (
    F_closed,
    F_direct,
    count_A_closed,
    count_A_direct,
    f_mod4_closed,
    f_of_n,
    nu_decomp,
    rem_sq_sum,
    s_of_n,
)
from .symbols import jacobi, kronecker, legendre

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "F_closed",
    "F_direct",
    "class_number",
    "class_number_dirichlet",
    "count_A_closed",
    "count_A_direct",
    "discriminant_of",
    "divisors",
    "f_mod4_closed",
    "f_of_n",
    "factorize",
    "h_neg_p_1mod4",
    "h_neg_p_3mod4",
    "h_star",
    "is_prime",
    "is_squarefree",
    "isqrt",
    "jacobi",
    "kronecker",
    "legendre",
    "moebius",
    "nu_decomp",
    "rem",
    "rem_sq_sum",
    "s_of_n",
    "squarefree_decomp",
]
