"""
次数付き代数（Graded Algebra）サブパッケージ
アルティン商環とその不変部分環の Gorenstein 判定を提供します
"""

from .artin_quotient import ArtinQuotient, GorensteinVerdict, hilbert_series_string, quotient
from .invariant_quotient import (
    InvariantQuotient,
    invariant_quotient,
    gorenstein_verdict_invariant,
    socle_character,
)

__all__ = [
    'ArtinQuotient',
    'GorensteinVerdict',
    'hilbert_series_string',
    'quotient',
    'InvariantQuotient',
    'invariant_quotient',
    'gorenstein_verdict_invariant',
    'socle_character'
]
