"""
多項式環（Polynomial Ring）サブパッケージ
"""

from .poly_ring import (
    MAX_DEGREE,
    MAX_VARIABLES,
    Monomial,
    PolyRing,
    HPoly,
    hmul,
    monomial_basis,
    monomial_index,
    basis_size,
    variable_shift,
    monomial_key,
    parse_monomial_key,
    monomial_graded_lex_key,
)

__all__ = [
    'MAX_DEGREE',
    'MAX_VARIABLES',
    'Monomial',
    'PolyRing',
    'HPoly',
    'hmul',
    'monomial_basis',
    'monomial_index',
    'basis_size',
    'variable_shift',
    'monomial_key',
    'parse_monomial_key',
    'monomial_graded_lex_key'
]
