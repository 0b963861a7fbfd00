"""
逆系（Inverse System）サブパッケージ
"""

from .functional import Functional, random_functional, random_functional_in
from .inverse_system import (
    GradedIdeal,
    pairing_matrix,
    build_inverse_system,
    check_g_invariance,
    ideal_from_generators,
)

__all__ = [
    'Functional',
    'random_functional',
    'random_functional_in',
    'GradedIdeal',
    'pairing_matrix',
    'build_inverse_system',
    'check_g_invariance',
    'ideal_from_generators'
]
