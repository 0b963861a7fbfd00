"""
線形汎関数 φ: A_m → k
"""

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Sequence

import numpy as np

from src.core.field import FieldSpec
from src.core.group import Character, MatrixGroup
from src.core.linalg import Subspace, Vector
from src.core.polyring import HPoly, PolyRing, monomial_key, parse_monomial_key
from src.utils.error_handler import (
    DimensionMismatchError,
    InvalidDegreeError,
    SpecError,
    ZeroFunctionalError,
)


@dataclass(frozen=True)
class Functional:
    """
    非自明な線形写像 φ: A_m → k

    Attributes:
        ring: 多項式環
        degree: 次数 m（1 以上）
        coeffs: 単項式基底での値 φ(μ)
        character: φ の指標（None は自明指標）
    """
    ring: PolyRing
    degree: int
    coeffs: Vector
    character: Optional[Character] = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InvalidDegreeError(f"functional degree must be at least 1, got {self.degree}")
        if len(self.coeffs) != self.ring.dim(self.degree):
            raise DimensionMismatchError(
                f"{len(self.coeffs)} values for A_{self.degree} of dimension {self.ring.dim(self.degree)}"
            )
        if all(c == 0 for c in self.coeffs):
            raise ZeroFunctionalError("functional must be non-trivial")

    @classmethod
    def from_values(
        cls,
        ring: PolyRing,
        degree: int,
        values: Mapping[str, Any],
        character: Optional[Character] = None,
    ) -> 'Functional':
        """
        JSON の値表 {"[3,0]": "1", ...} から作る（省略した単項式は 0）

        Raises:
            SpecError: 単項式の次数や変数の個数が合わない場合
        """
        if degree < 1:
            raise InvalidDegreeError(f"functional degree must be at least 1, got {degree}")
        k = ring.field
        coeffs = [k.zero()] * ring.dim(degree)
        for key, value in values.items():
            m = parse_monomial_key(key)
            if len(m) != ring.n or sum(m) != degree:
                raise SpecError(f"monomial {key} is not a degree-{degree} monomial in {ring.n} variables")
            coeffs[ring.index(m)] = k.normalize(value)
        return cls(ring, degree, tuple(coeffs), character)

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    def evaluate(self, f: HPoly) -> Any:
        """
        φ(f) を返す

        Raises:
            InvalidDegreeError: f の次数が m でない場合
        """
        if f.degree != self.degree:
            raise InvalidDegreeError(f"cannot evaluate a degree-{self.degree} functional on degree {f.degree}")
        k = self.field
        acc = k.zero()
        for a, b in zip(self.coeffs, f.coeffs):
            if a != 0 and b != 0:
                acc = k.add(acc, k.mul(a, b))
        return acc

    def character_on(self, group: MatrixGroup) -> Character:
        """群 G 上の指標（未指定なら自明指標）"""
        return self.character if self.character is not None else Character.trivial(group)

    def with_character(self, character: Optional[Character]) -> 'Functional':
        return Functional(self.ring, self.degree, self.coeffs, character)

    def to_json(self) -> Dict[str, Any]:
        k = self.field
        data: Dict[str, Any] = {
            "n": self.ring.n,
            "field": k.to_json(),
            "degree": self.degree,
            "values": {monomial_key(m): k.format(c) for m, c in zip(self.ring.basis(self.degree), self.coeffs)},
        }
        if self.character is not None:
            data["character"] = self.character.to_json()
        return data


def _draw_nonzero(values: Sequence[Any], size: int, rng: np.random.Generator) -> list:
    while True:
        picks = rng.integers(0, len(values), size=size)
        drawn = [values[int(i)] for i in picks]
        if any(v != 0 for v in drawn):
            return drawn


def random_functional(
    ring: PolyRing,
    degree: int,
    rng: np.random.Generator,
    bound: int = 2,
    character: Optional[Character] = None,
) -> Functional:
    """
    係数を有限集合から一様に選んだランダムな汎関数（零汎関数は棄却）

    Args:
        ring: 多項式環
        degree: 次数 m
        rng: numpy の乱数生成器
        bound: ℚ の場合の係数の絶対値上限
        character: 付与する指標

    Returns:
        Functional: 非自明な汎関数
    """
    values = ring.field.sample_values(bound)
    coeffs = _draw_nonzero(values, ring.dim(degree), rng)
    return Functional(ring, degree, tuple(coeffs), character)


def random_functional_in(
    space: Subspace,
    ring: PolyRing,
    degree: int,
    rng: np.random.Generator,
    bound: int = 2,
    character: Optional[Character] = None,
) -> Functional:
    """
    部分空間（A_m^* の座標）の基底のランダムな一次結合として汎関数を作る

    Raises:
        ZeroFunctionalError: 部分空間が零の場合
    """
    if space.is_zero():
        raise ZeroFunctionalError("no non-trivial functional in the zero subspace")
    k = ring.field
    weights = _draw_nonzero(k.sample_values(bound), space.dim, rng)
    coeffs = [k.zero()] * space.ambient_dim
    for w, row in zip(weights, space.basis):
        if w != 0:
            coeffs = [k.add(x, k.mul(w, y)) for x, y in zip(coeffs, row)]
    return Functional(ring, degree, tuple(coeffs), character)
