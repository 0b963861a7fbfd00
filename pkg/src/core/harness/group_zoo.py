"""
組み込みの群の一覧

どの群も整数行列の生成元で与え、ℚ や 𝔽_q 上に実現する。
体の標数が位数を割る場合は実現できない。
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.core.field import FieldSpec
from src.core.group import MatrixGroup, group_from_literals
from src.utils.error_handler import CharacteristicDividesOrderError, SpecError

Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ZooEntry:
    """
    組み込み群

    Attributes:
        name: 名前
        n: 行列のサイズ
        generators: 整数成分の生成元
        order: 位数
        description: 説明
    """
    name: str
    n: int
    generators: Tuple[Rows, ...]
    order: int
    description: str


_ZOO: Dict[str, ZooEntry] = {
    entry.name: entry
    for entry in (
        ZooEntry(
            "pm_identity", 2,
            (((-1, 0), (0, -1)),),
            2, "{±I_2}",
        ),
        ZooEntry(
            "cyclic3", 2,
            (((0, -1), (1, -1)),),
            3, "companion matrix of x^2+x+1",
        ),
        ZooEntry(
            "s3_perm", 3,
            (((0, 1, 0), (1, 0, 0), (0, 0, 1)), ((0, 0, 1), (1, 0, 0), (0, 1, 0))),
            6, "S_3 as 3x3 permutation matrices",
        ),
        ZooEntry(
            "a3_perm", 3,
            (((0, 0, 1), (1, 0, 0), (0, 1, 0)),),
            3, "[S_3, S_3] as 3-cycle permutation matrices",
        ),
        ZooEntry(
            "cyclic5", 4,
            (((0, 0, 0, -1), (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1)),),
            5, "companion matrix of x^4+x^3+x^2+x+1",
        ),
    )
}


def zoo_names() -> List[str]:
    return list(_ZOO)


def zoo_entry(name: str) -> ZooEntry:
    """
    名前から組み込み群を引く

    Raises:
        SpecError: 未知の名前の場合
    """
    try:
        return _ZOO[name]
    except KeyError:
        raise SpecError(f"unknown group {name!r}; known groups: {', '.join(_ZOO)}") from None


def is_realizable(name: str, field: FieldSpec) -> bool:
    """体の標数が位数を割らないか"""
    p = field.characteristic
    return p == 0 or zoo_entry(name).order % p != 0


def zoo_group(name: str, field: FieldSpec, cap: Optional[int] = None) -> MatrixGroup:
    """
    組み込み群を体 field 上に実現する

    Args:
        name: 群の名前
        field: 係数体
        cap: 閉包の上限

    Returns:
        MatrixGroup: 閉包済みの群

    Raises:
        SpecError: 未知の名前の場合
        CharacteristicDividesOrderError: 標数が位数を割る場合
    """
    entry = zoo_entry(name)
    if not is_realizable(name, field):
        raise CharacteristicDividesOrderError(
            f"group {name} of order {entry.order} is not realizable over {field}"
        )
    return group_from_literals(field, entry.generators, cap)
