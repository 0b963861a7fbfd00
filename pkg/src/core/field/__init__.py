"""
係数体（Exact Field）サブパッケージ
ℚ と 𝔽_p の厳密な算術を提供します
"""

from .exact_field import (
    FieldKind,
    FieldSpec,
    Scalar,
    parse_literal,
    format_literal,
    has_primitive_pth_root,
)

__all__ = [
    'FieldKind',
    'FieldSpec',
    'Scalar',
    'parse_literal',
    'format_literal',
    'has_primitive_pth_root'
]
