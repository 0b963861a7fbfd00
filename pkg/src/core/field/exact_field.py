"""
厳密な係数体 k（有理数体 ℚ と素体 𝔽_p）

行列やベクトルの内部では Scalar ではなく「正規形の生の値」を使う:
ℚ は既約分数 ``Fraction``、𝔽_p は ``0 <= v < p`` の ``int``。
Scalar はその値と体を束ねた公開用の値型。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, List, Optional, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ, Domain

from src.utils.error_handler import (
    FieldMismatchError,
    InversionOfZeroError,
    InvalidFieldError,
    NonFiniteFieldError,
    SpecError,
)


PRIME_MODULUS_BOUND = 2 ** 31

Raw = Union[Fraction, int]
Literal = Union[str, int]


class FieldKind(Enum):
    """係数体の種類"""
    RATIONALS = "Q"
    PRIME = "Fp"


@dataclass(frozen=True)
class FieldSpec:
    """
    係数体 k の仕様

    Attributes:
        kind: RATIONALS または PRIME
        p: 素体の位数（RATIONALS のときは None）
    """
    kind: FieldKind
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.p is not None:
                raise InvalidFieldError("the rational field takes no modulus")
            return
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise InvalidFieldError(f"prime modulus must be an integer, got {self.p!r}")
        if not 2 <= self.p < PRIME_MODULUS_BOUND:
            raise InvalidFieldError(f"prime modulus must lie in [2, 2^31), got {self.p}")
        if not isprime(self.p):
            raise InvalidFieldError(f"modulus {self.p} is not prime")

    # --- 構築 ---

    @classmethod
    def rationals(cls) -> 'FieldSpec':
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> 'FieldSpec':
        return cls(FieldKind.PRIME, p)

    @classmethod
    def from_json(cls, data: Any) -> 'FieldSpec':
        """
        JSON 表現 ``"Q"`` / ``{"Fp": 7}`` から体を作る

        Raises:
            SpecError: 形式が不正な場合
        """
        if data == "Q":
            return cls.rationals()
        if isinstance(data, dict) and set(data) == {"Fp"}:
            return cls.prime(data["Fp"])
        raise SpecError(f"field must be \"Q\" or {{\"Fp\": p}}, got {data!r}")

    def to_json(self) -> Any:
        return "Q" if self.is_rational else {"Fp": self.p}

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F_{self.p}"

    # --- 性質 ---

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.p  # type: ignore[return-value]

    @property
    def order(self) -> Optional[int]:
        """体の元の個数（ℚ は None）"""
        return None if self.is_rational else self.p

    # --- sympy のドメインとの変換 ---

    @property
    def domain(self) -> Domain:
        """sympy の係数ドメイン（QQ または GF(p)）"""
        return _sympy_domain(self)

    def to_domain(self, a: Raw) -> Any:
        """正規形の値を sympy のドメインの元にする"""
        if self.is_rational:
            return QQ(a.numerator, a.denominator)  # type: ignore[union-attr]
        return self.domain(a)

    def from_domain(self, e: Any) -> Raw:
        """sympy のドメインの元を正規形の値に戻す"""
        K = self.domain
        if self.is_rational:
            return Fraction(int(K.numer(e)), int(K.denom(e)))
        return int(K.to_int(e)) % self.p  # type: ignore[operator]

    # --- 生の値の演算 ---

    def normalize(self, value: Any) -> Raw:
        """
        値を正規形にする

        Args:
            value: int / Fraction / Scalar / 文字列リテラル

        Returns:
            正規形の生の値

        Raises:
            InversionOfZeroError: 𝔽_p で分母が p の倍数の場合
        """
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            value = parse_literal(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise SpecError(f"not an exact scalar: {value!r}")
        if self.is_rational:
            return Fraction(value)
        frac = Fraction(value)
        den = frac.denominator % self.p
        if den == 0:
            raise InversionOfZeroError(f"denominator {frac.denominator} vanishes in {self}")
        return (frac.numerator * pow(den, -1, self.p)) % self.p

    def zero(self) -> Raw:
        return Fraction(0) if self.is_rational else 0

    def one(self) -> Raw:
        return Fraction(1) if self.is_rational else 1

    def add(self, a: Raw, b: Raw) -> Raw:
        return a + b if self.is_rational else (a + b) % self.p

    def sub(self, a: Raw, b: Raw) -> Raw:
        return a - b if self.is_rational else (a - b) % self.p

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b if self.is_rational else (a * b) % self.p

    def neg(self, a: Raw) -> Raw:
        return -a if self.is_rational else (-a) % self.p

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise InversionOfZeroError(f"zero has no inverse in {self}")
        return 1 / a if self.is_rational else pow(a, self.p - 2, self.p)  # type: ignore[operator]

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def power(self, a: Raw, e: int) -> Raw:
        if e < 0:
            return self.power(self.inv(a), -e)
        return a ** e if self.is_rational else pow(a, e, self.p)

    # --- 列挙・サンプリング ---

    def elements(self) -> Iterator[Raw]:
        """
        𝔽_p の元を 0, 1, ..., p-1 の順に列挙する

        Raises:
            NonFiniteFieldError: ℚ の場合
        """
        if self.is_rational:
            raise NonFiniteFieldError("the rational field cannot be enumerated")
        return iter(range(self.p))  # type: ignore[arg-type]

    def sample_values(self, bound: int = 2) -> List[Raw]:
        """
        ランダム汎関数の係数候補（ℚ は {-bound..bound}、𝔽_p は全元）

        Args:
            bound: ℚ の場合の絶対値の上限
        """
        if self.is_rational:
            return [Fraction(v) for v in range(-bound, bound + 1)]
        return list(self.elements())

    def scalar(self, value: Any) -> 'Scalar':
        return Scalar(self, self.normalize(value))

    def format(self, a: Raw) -> Literal:
        """生の値を JSON リテラルにする（整数または "a/b" 文字列）"""
        if self.is_rational:
            return format_literal(a)  # type: ignore[arg-type]
        return int(a)


@dataclass(frozen=True)
class Scalar:
    """
    体 k の元（正規形）

    等価性は正規形の比較で決まる。
    """
    field: FieldSpec
    value: Raw

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.field.normalize(self.value))

    def _check(self, other: 'Scalar') -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"cannot combine Scalar with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine scalars over {self.field} and {other.field}")

    def __add__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> 'Scalar':
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> 'Scalar':
        return Scalar(self.field, self.field.power(self.value, e))

    def inv(self) -> 'Scalar':
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def to_literal(self) -> Literal:
        return self.field.format(self.value)

    def __str__(self) -> str:
        return str(self.to_literal())


def parse_literal(text: Union[str, int]) -> Fraction:
    """
    スカラーリテラル（整数または "a/b" 文字列）を Fraction にする

    浮動小数点は受け付けない。

    Raises:
        SpecError: リテラルが不正な場合
    """
    if isinstance(text, bool):
        raise SpecError(f"not a scalar literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise SpecError(f"not a scalar literal: {text!r}")
    body = text.strip()
    parts = body.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            den = int(parts[1])
            if den == 0:
                raise SpecError(f"zero denominator in literal {text!r}")
            return Fraction(int(parts[0]), den)
    except ValueError:
        pass
    raise SpecError(f"not a scalar literal: {text!r}")


def format_literal(value: Fraction) -> Literal:
    """Fraction を整数または "a/b" 文字列にする"""
    if value.denominator == 1:
        return int(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def has_primitive_pth_root(field: FieldSpec, p: int) -> bool:
    """
    k が 1 の原始 p 乗根を含むかどうか

    ℚ の 1 の冪根は ±1 のみなので p = 2 のときだけ真。
    𝔽_q では乗法群が位数 q-1 の巡回群なので p | q-1 と同値（p = q なら偽）。

    Args:
        field: 係数体
        p: 素数（素数でなければ偽）

    Returns:
        bool: 原始 p 乗根が存在するかどうか
    """
    if not isinstance(p, int) or not isprime(p):
        return False
    if field.is_rational:
        return p == 2
    q = field.p
    return p != q and (q - 1) % p == 0  # type: ignore[operator]


@lru_cache(maxsize=None)
def _sympy_domain(field: FieldSpec) -> Domain:
    return QQ if field.is_rational else GF(field.p)
