"""
GL_n(k) の有限部分群

群は元の明示的なリストと乗積表（Cayley 表）で保持する。
元の並びは正準: 単位元が先頭、残りは成分の辞書式順序。
"""

import logging
from collections import deque
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.field import FieldSpec
from src.core.field.exact_field import Raw
from src.core.linalg import MatrixK
from src.utils.error_handler import (
    CharacteristicDividesOrderError,
    DimensionMismatchError,
    ElementNotInGroupError,
    GroupClosureError,
    SpecError,
    TrivialGroupError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GMatrix:
    """
    可逆な n × n 行列（群の元）

    Attributes:
        matrix: 成分
        inverse: 逆行列（等価性の比較には使わない）
    """
    matrix: MatrixK
    inverse: MatrixK = dc_field(compare=False, repr=False)

    @classmethod
    def of(cls, matrix: MatrixK) -> 'GMatrix':
        """
        行列から群の元を作る

        Raises:
            SingularMatrixError: 正則でない場合
        """
        return cls(matrix, matrix.inverse())

    @classmethod
    def from_literals(cls, field: FieldSpec, rows: Sequence[Sequence[Any]]) -> 'GMatrix':
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatchError("group element must be a non-empty square matrix")
        return cls.of(MatrixK.from_rows(field, rows))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> 'GMatrix':
        eye = MatrixK.identity(field, n)
        return cls(eye, eye)

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field

    def __matmul__(self, other: 'GMatrix') -> 'GMatrix':
        return GMatrix(self.matrix @ other.matrix, other.inverse @ self.inverse)

    def inv(self) -> 'GMatrix':
        return GMatrix(self.inverse, self.matrix)

    def entry(self, i: int, j: int) -> Raw:
        return self.matrix.data[i][j]

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def determinant(self) -> Raw:
        return self.matrix.determinant()

    def sort_key(self) -> Tuple[Raw, ...]:
        return self.matrix.sort_key()

    def to_literals(self) -> List[List[Any]]:
        return self.matrix.to_literals()


@dataclass(frozen=True)
class MatrixGroup:
    """
    有限行列群 G ⊂ GL_n(k)

    Attributes:
        n: 行列のサイズ
        field: 係数体
        generators: 生成元
        elements: 正準順序の全元（elements[0] は単位元）
        cayley: cayley[i][j] は elements[i] @ elements[j] の位置
    """
    n: int
    field: FieldSpec
    generators: Tuple[GMatrix, ...]
    elements: Tuple[GMatrix, ...]
    cayley: Tuple[Tuple[int, ...], ...]
    _index: Dict[GMatrix, int] = dc_field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self._index:
            self._index.update({g: i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    def index_of(self, g: GMatrix) -> int:
        """
        元の位置を返す

        Raises:
            ElementNotInGroupError: g が群に属さない場合
        """
        try:
            return self._index[g]
        except KeyError:
            raise ElementNotInGroupError("matrix is not an element of the group") from None

    def contains(self, g: GMatrix) -> bool:
        return g in self._index

    def element(self, i: int) -> GMatrix:
        return self.elements[i]

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def inverse_index(self, i: int) -> int:
        return self.cayley[i].index(0)

    def generator_indices(self) -> Tuple[int, ...]:
        return tuple(self.index_of(g) for g in self.generators)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        return all(self.cayley[i][j] == self.cayley[j][i]
                   for i in range(self.order) for j in range(i + 1, self.order))

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.cayley[x][i]
            k += 1
        return k

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "field": self.field.to_json(),
            "generators": [g.to_literals() for g in self.generators],
        }


def _default_cap() -> int:
    from src.config import get_settings
    return get_settings().closure_cap


def close(
    generators: Iterable[GMatrix],
    cap: Optional[int] = None,
    allow_trivial: bool = False,
    check_characteristic: bool = True,
) -> MatrixGroup:
    """
    生成元から幅優先探索で群を閉包する

    Args:
        generators: 生成元（同じ n、同じ体）
        cap: 元の個数の上限（None なら設定値 group.closure_cap）
        allow_trivial: 自明群を許すか（部分群の計算用）
        check_characteristic: char k ∤ |G| を検査するか

    Returns:
        MatrixGroup: 正準順序の群

    Raises:
        SpecError: 生成元が空の場合
        DimensionMismatchError: サイズや体が揃っていない場合
        GroupClosureError: 元の個数が cap を超えた場合
        TrivialGroupError: 自明群で allow_trivial が偽の場合
        CharacteristicDividesOrderError: 体の標数が |G| を割る場合
    """
    gens = tuple(generators)
    if not gens:
        raise SpecError("a group needs at least one generator")
    n, k = gens[0].n, gens[0].field
    for g in gens:
        if g.n != n or g.field != k:
            raise DimensionMismatchError("generators must share size and field")
    if cap is None:
        cap = _default_cap()

    identity = GMatrix.identity(k, n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x @ g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupClosureError(f"group closure exceeded the cap of {cap} elements")
                queue.append(y)

    others = sorted((g for g in seen if g != identity), key=lambda g: g.sort_key())
    elements = (identity,) + tuple(others)
    index = {g: i for i, g in enumerate(elements)}
    cayley = tuple(tuple(index[a @ b] for b in elements) for a in elements)
    group = MatrixGroup(n, k, gens, elements, cayley, index)
    logger.debug(f"群を閉包しました: n={n}, 体={k}, 位数={group.order}")

    if group.is_trivial() and not allow_trivial:
        raise TrivialGroupError()
    if check_characteristic and k.characteristic and group.order % k.characteristic == 0:
        raise CharacteristicDividesOrderError(
            f"characteristic {k.characteristic} divides the group order {group.order}"
        )
    return group


def group_from_literals(
    field: FieldSpec,
    generators: Sequence[Sequence[Sequence[Any]]],
    cap: Optional[int] = None,
) -> MatrixGroup:
    """リテラル行列の生成元から群を作る"""
    return close([GMatrix.from_literals(field, rows) for rows in generators], cap)


def commutator_subgroup(group: MatrixGroup) -> MatrixGroup:
    """
    交換子部分群 [G, G]

    全ての交換子 g h g^-1 h^-1 で生成される部分群を閉包して返す。
    可換群なら自明群（位数 1）になる。

    Args:
        group: 群 G

    Returns:
        MatrixGroup: [G, G]
    """
    inverse = [group.inverse_index(i) for i in range(group.order)]
    commutators = set()
    for g in range(group.order):
        for h in range(group.order):
            c = group.mul(group.mul(g, h), group.mul(inverse[g], inverse[h]))
            commutators.add(c)
    generators = [group.element(i) for i in sorted(commutators)]
    return close(generators, cap=group.order, allow_trivial=True, check_characteristic=False)


def is_special_linear(group: MatrixGroup) -> bool:
    """全ての元の行列式が 1 かどうか（G ⊂ SL_n(k)）"""
    one = group.field.one()
    return all(g.determinant() == one for g in group.elements)
