"""
k^n の部分空間を正準形（RREF 基底）で扱う

二つの Subspace が等しいのは基底行列が一致するときに限る。
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from src.core.field import FieldSpec
from src.core.field.exact_field import Raw
from src.utils.error_handler import DimensionMismatchError

from .matrix import MatrixK, Vector, echelonize


@dataclass(frozen=True)
class Subspace:
    """
    ambient_dim 次元の座標空間の部分空間

    Attributes:
        field: 係数体
        ambient_dim: 全体空間の次元
        basis: RREF の基底（行）
        pivots: 各基底行のピボット列（狭義単調増加）
    """
    field: FieldSpec
    ambient_dim: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    # --- 構築 ---

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[Raw]]) -> 'Subspace':
        """ベクトル族が張る部分空間"""
        rows = [tuple(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in a {ambient_dim}-dimensional space")
        reduced, pivots = echelonize(field, rows, ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(r) for r in reduced), tuple(pivots))

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> 'Subspace':
        return cls.span(field, ambient_dim, MatrixK.identity(field, ambient_dim).data)

    # --- 問い合わせ ---

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def basis_matrix(self) -> MatrixK:
        return MatrixK(self.field, self.dim, self.ambient_dim, self.basis)

    def _check_vector(self, v: Sequence[Raw]) -> None:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in a {self.ambient_dim}-dimensional space")

    def reduce(self, v: Sequence[Raw]) -> Vector:
        """
        基底で簡約した剰余を返す（ピボット列の成分は 0 になる）

        Args:
            v: 簡約するベクトル

        Returns:
            剰余ベクトル
        """
        self._check_vector(v)
        f = self.field
        w = list(v)
        for row, c in zip(self.basis, self.pivots):
            coeff = w[c]
            if coeff != 0:
                w = [f.sub(x, f.mul(coeff, y)) for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence[Raw]) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def coordinates(self, v: Sequence[Raw]) -> Vector:
        """
        v（この空間の元）の基底に関する座標。RREF なのでピボット列の成分そのもの

        Raises:
            DimensionMismatchError: v がこの空間に属さない場合
        """
        if not self.contains(v):
            raise DimensionMismatchError("vector does not lie in the subspace")
        return tuple(v[c] for c in self.pivots)

    def complement_coords(self) -> Tuple[int, ...]:
        """非ピボット列（商空間の正準な座標）"""
        pivot_set = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in pivot_set)

    def is_subspace_of(self, other: 'Subspace') -> bool:
        self._check_compatible(other)
        return all(other.contains(row) for row in self.basis)

    # --- 演算 ---

    def _check_compatible(self, other: 'Subspace') -> None:
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatchError(
                f"subspaces of k^{self.ambient_dim} over {self.field} and "
                f"k^{other.ambient_dim} over {other.field}"
            )

    def sum(self, other: 'Subspace') -> 'Subspace':
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: 'Subspace') -> 'Subspace':
        return intersect(self, other)


def rref(matrix: MatrixK) -> Subspace:
    """行列の行空間を正準形で返す"""
    return Subspace.span(matrix.field, matrix.cols, matrix.data)


def kernel(matrix: MatrixK) -> Subspace:
    """
    列ベクトルに作用する行列の零空間 {x : M x = 0}

    Args:
        matrix: 行列

    Returns:
        Subspace: 正準形の零空間
    """
    f = matrix.field
    reduced, pivots = echelonize(f, matrix.data, matrix.cols)
    pivot_set = set(pivots)
    vectors: List[List[Raw]] = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        v = [f.zero()] * matrix.cols
        v[free] = f.one()
        for row, c in zip(reduced, pivots):
            v[c] = f.neg(row[free])
        vectors.append(v)
    return Subspace.span(f, matrix.cols, vectors)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """
    部分空間の共通部分

    基底を積んだ係数系 c_U B_U - c_V B_V = 0 の解から c_U B_U を復元する。
    """
    u._check_compatible(v)
    if u.is_zero() or v.is_zero():
        return Subspace.zero(u.field, u.ambient_dim)
    f = u.field
    stacked = [list(row) for row in u.basis] + [[f.neg(x) for x in row] for row in v.basis]
    system = MatrixK(f, len(stacked), u.ambient_dim, tuple(tuple(r) for r in stacked)).transpose()
    solutions = kernel(system)
    vectors = []
    for sol in solutions.basis:
        coeffs = sol[:u.dim]
        vec = [f.zero()] * u.ambient_dim
        for c, row in zip(coeffs, u.basis):
            if c != 0:
                vec = [f.add(x, f.mul(c, y)) for x, y in zip(vec, row)]
        vectors.append(vec)
    return Subspace.span(f, u.ambient_dim, vectors)
