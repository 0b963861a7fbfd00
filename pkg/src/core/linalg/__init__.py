"""
線形代数（Exact Linear Algebra）サブパッケージ
体 k 上の行列・部分空間・RREF・零空間・共通部分を提供します
"""

from .matrix import MatrixK, Vector, echelonize
from .subspace import Subspace, rref, kernel, intersect

__all__ = [
    'MatrixK',
    'Vector',
    'echelonize',
    'Subspace',
    'rref',
    'kernel',
    'intersect'
]
