"""
体 k 上の密行列 MatrixK と行簡約の基本処理

消去・逆行列・行列式・積は sympy の DomainMatrix（QQ / GF(p)）で計算し、
結果を正規形の値に戻す。
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from src.core.field import FieldSpec
from src.core.field.exact_field import Raw
from src.utils.error_handler import DimensionMismatchError, FieldMismatchError, SingularMatrixError

Vector = Tuple[Raw, ...]


def to_domain_matrix(field: FieldSpec, rows: Sequence[Sequence[Raw]], cols: int) -> DomainMatrix:
    """正規形の値の行から DomainMatrix を作る"""
    data = [[field.to_domain(x) for x in r] for r in rows]
    return DomainMatrix(data, (len(data), cols), field.domain)


def from_domain_rows(field: FieldSpec, matrix: DomainMatrix) -> List[List[Raw]]:
    return [[field.from_domain(x) for x in r] for r in matrix.to_list()]


def echelonize(field: FieldSpec, rows: Iterable[Sequence[Raw]], cols: int) -> Tuple[List[List[Raw]], List[int]]:
    """
    行を簡約行階段形（RREF）にする

    ピボットは 1、ピボット列の他の成分は 0。零行は落とす。

    Args:
        field: 係数体
        rows: 行の列
        cols: 列数

    Returns:
        (簡約後の行リスト, ピボット列のリスト)
    """
    data = [list(r) for r in rows]
    if not data or cols == 0:
        return [], []
    reduced, pivots = to_domain_matrix(field, data, cols).rref()
    return from_domain_rows(field, reduced)[:len(pivots)], list(pivots)


@dataclass(frozen=True)
class MatrixK:
    """
    体 k 上の rows × cols 行列（行優先）

    成分はすべて field の正規形の値。
    """
    field: FieldSpec
    rows: int
    cols: int
    data: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionMismatchError(
                f"matrix data does not match declared shape {self.rows}x{self.cols}"
            )

    # --- 構築 ---

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> 'MatrixK':
        """
        リテラルまたは値の二重リストから行列を作る

        Args:
            field: 係数体
            rows: 行のリスト
            cols: 列数（行が 0 本のときに必要）
        """
        data = tuple(tuple(field.normalize(x) for x in r) for r in rows)
        width = cols if cols is not None else (len(data[0]) if data else 0)
        return cls(field, len(data), width, data)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> 'MatrixK':
        z = field.zero()
        return cls(field, rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> 'MatrixK':
        one, z = field.one(), field.zero()
        return cls(field, n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[Raw]], rows: int) -> 'MatrixK':
        """列ベクトルの並びから行列を作る"""
        data = tuple(tuple(col[i] for col in columns) for i in range(rows))
        return cls(field, rows, len(columns), data)

    @classmethod
    def vstack(cls, field: FieldSpec, blocks: Sequence['MatrixK'], cols: int) -> 'MatrixK':
        """行列を縦に積む"""
        data: List[Vector] = []
        for b in blocks:
            if b.cols != cols:
                raise DimensionMismatchError(f"cannot stack a {b.cols}-column block onto {cols} columns")
            data.extend(b.data)
        return cls(field, len(data), cols, tuple(data))

    # --- 演算 ---

    def _check_field(self, other: 'MatrixK') -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"matrices over {self.field} and {other.field}")

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> 'MatrixK':
        return MatrixK(self.field, self.cols, self.rows, tuple(zip(*self.data)) if self.rows else
                       tuple(() for _ in range(self.cols)))

    def to_domain_matrix(self) -> DomainMatrix:
        return to_domain_matrix(self.field, self.data, self.cols)

    @classmethod
    def from_domain_matrix(cls, field: FieldSpec, matrix: DomainMatrix) -> 'MatrixK':
        rows, cols = matrix.shape
        return cls(field, rows, cols, tuple(tuple(r) for r in from_domain_rows(field, matrix)))

    def __matmul__(self, other: 'MatrixK') -> 'MatrixK':
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if 0 in (self.rows, self.cols, other.cols):
            return MatrixK.zeros(self.field, self.rows, other.cols)
        product = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return MatrixK.from_domain_matrix(self.field, product)

    def _dot(self, a: Sequence[Raw], b: Sequence[Raw]) -> Raw:
        f = self.field
        acc = f.zero()
        for x, y in zip(a, b):
            if x != 0 and y != 0:
                acc = f.add(acc, f.mul(x, y))
        return acc

    def apply(self, vector: Sequence[Raw]) -> Vector:
        """列ベクトルに作用させる（M v）"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} for {self.cols} columns")
        return tuple(self._dot(row, vector) for row in self.data)

    def apply_left(self, covector: Sequence[Raw]) -> Vector:
        """行ベクトルを左から掛ける（v^T M）"""
        if len(covector) != self.rows:
            raise DimensionMismatchError(f"covector of length {len(covector)} for {self.rows} rows")
        return tuple(self._dot(covector, col) for col in self.transpose().data)

    def __add__(self, other: 'MatrixK') -> 'MatrixK':
        return self._combine(other, self.field.add)

    def __sub__(self, other: 'MatrixK') -> 'MatrixK':
        return self._combine(other, self.field.sub)

    def _combine(self, other: 'MatrixK', op: Any) -> 'MatrixK':
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("matrix shapes differ")
        data = tuple(tuple(op(x, y) for x, y in zip(r, s)) for r, s in zip(self.data, other.data))
        return MatrixK(self.field, self.rows, self.cols, data)

    def scale(self, c: Raw) -> 'MatrixK':
        return MatrixK(self.field, self.rows, self.cols,
                       tuple(tuple(self.field.mul(c, x) for x in r) for r in self.data))

    def is_identity(self) -> bool:
        return self == MatrixK.identity(self.field, self.rows) if self.rows == self.cols else False

    def inverse(self) -> 'MatrixK':
        """
        逆行列

        Raises:
            SingularMatrixError: 正則でない場合
        """
        if self.rows != self.cols:
            raise SingularMatrixError(f"non-square {self.rows}x{self.cols} matrix has no inverse")
        try:
            inv = self.to_domain_matrix().inv()
        except (DMNonInvertibleMatrixError, ZeroDivisionError):
            raise SingularMatrixError("matrix is singular") from None
        return MatrixK.from_domain_matrix(self.field, inv)

    def determinant(self) -> Raw:
        if self.rows != self.cols:
            raise DimensionMismatchError("determinant of a non-square matrix")
        if self.rows == 0:
            return self.field.one()
        return self.field.from_domain(self.to_domain_matrix().det())

    def sort_key(self) -> Tuple[Raw, ...]:
        """成分の辞書式順序のキー"""
        return tuple(x for r in self.data for x in r)

    def to_literals(self) -> List[List[Any]]:
        return [[self.field.format(x) for x in r] for r in self.data]
