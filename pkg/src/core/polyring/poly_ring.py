"""
標準次数付き多項式環 A = k[X_1, ..., X_n]

斉次成分 A_d は次数 d の単項式基底（次数付き辞書式順序、降順）上の
係数ベクトルとして扱う。n = 2, d = 3 なら [X^3, X^2Y, XY^2, Y^3]。
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from sympy.polys.rings import PolyRing as SparsePolyRing
from sympy.polys.rings import ring as sparse_ring

from src.core.field import FieldSpec
from src.core.field.exact_field import Raw
from src.core.linalg import MatrixK, Vector
from src.utils.error_handler import DegreeBoundError, DimensionMismatchError, SpecError

MAX_VARIABLES = 6
MAX_DEGREE = 20

Monomial = Tuple[int, ...]

_SHORT_NAMES = ("X", "Y", "Z", "W")


def _check_bounds(n: int, d: int) -> None:
    if not 1 <= n <= MAX_VARIABLES:
        raise DegreeBoundError(f"number of variables must lie in [1, {MAX_VARIABLES}], got {n}")
    if not 0 <= d <= MAX_DEGREE:
        raise DegreeBoundError(f"degree must lie in [0, {MAX_DEGREE}], got {d}")


def _compositions(n: int, d: int) -> List[Monomial]:
    if n == 1:
        return [(d,)]
    out: List[Monomial] = []
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


def monomial_graded_lex_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """全順序のキー（大きいほど前）: 次数、次に指数の辞書式"""
    return (sum(m), m)


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> Tuple[Monomial, ...]:
    """
    次数 d の単項式を次数付き辞書式順序で列挙する

    Args:
        n: 変数の個数
        d: 次数

    Returns:
        長さ C(n+d-1, d) の単項式の列

    Raises:
        DegreeBoundError: n, d が実用範囲外の場合
    """
    _check_bounds(n, d)
    return tuple(sorted(_compositions(n, d), key=monomial_graded_lex_key, reverse=True))


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> Dict[Monomial, int]:
    """単項式から基底位置への辞書"""
    return {m: i for i, m in enumerate(monomial_basis(n, d))}


def basis_size(n: int, d: int) -> int:
    return comb(n + d - 1, d)


@lru_cache(maxsize=None)
def variable_shift(n: int, i: int, d: int) -> Tuple[int, ...]:
    """A_d の基底位置 → X_i 倍した単項式の A_{d+1} での位置"""
    index = monomial_index(n, d + 1)
    return tuple(
        index[tuple(e + 1 if j == i else e for j, e in enumerate(m))]
        for m in monomial_basis(n, d)
    )


def monomial_key(m: Monomial) -> str:
    """JSON のキー表現 "[2,1]" """
    return json.dumps(list(m), separators=(",", ":"))


def parse_monomial_key(key: str) -> Monomial:
    try:
        exps = json.loads(key)
    except json.JSONDecodeError as e:
        raise SpecError(f"monomial key must be an exponent array, got {key!r}") from e
    if not isinstance(exps, list) or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0
                                             for e in exps):
        raise SpecError(f"monomial key must be an array of nonnegative integers, got {key!r}")
    return tuple(exps)


@dataclass(frozen=True)
class PolyRing:
    """
    多項式環 k[X_1, ..., X_n]

    Attributes:
        field: 係数体
        n: 変数の個数
    """
    field: FieldSpec
    n: int

    def __post_init__(self) -> None:
        _check_bounds(self.n, 0)

    @property
    def variable_names(self) -> Tuple[str, ...]:
        if self.n <= len(_SHORT_NAMES):
            return _SHORT_NAMES[:self.n]
        return tuple(f"X{i + 1}" for i in range(self.n))

    def basis(self, d: int) -> Tuple[Monomial, ...]:
        return monomial_basis(self.n, d)

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def index(self, m: Monomial) -> int:
        if len(m) != self.n:
            raise DimensionMismatchError(f"monomial {m} has {len(m)} exponents, ring has {self.n} variables")
        return monomial_index(self.n, sum(m))[m]

    # --- 元の構築 ---

    def zero(self, d: int) -> 'HPoly':
        z = self.field.zero()
        return HPoly(self, d, tuple(z for _ in range(self.dim(d))))

    def monomial(self, exponents: Sequence[int], coeff: Any = 1) -> 'HPoly':
        m = tuple(exponents)
        d = sum(m)
        coeffs = list(self.zero(d).coeffs)
        coeffs[self.index(m)] = self.field.normalize(coeff)
        return HPoly(self, d, tuple(coeffs))

    def variable(self, i: int) -> 'HPoly':
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.n)))

    def from_coords(self, d: int, coords: Sequence[Raw]) -> 'HPoly':
        """
        座標ベクトルから斉次多項式を作る

        Raises:
            DimensionMismatchError: 長さが基底と合わない場合
        """
        if len(coords) != self.dim(d):
            raise DimensionMismatchError(f"{len(coords)} coordinates for A_{d} of dimension {self.dim(d)}")
        return HPoly(self, d, tuple(self.field.normalize(c) for c in coords))

    def from_terms(self, terms: Mapping[Monomial, Any]) -> 'HPoly':
        """{指数タプル: 係数} から斉次多項式を作る（次数はすべて等しいこと）"""
        if not terms:
            raise SpecError("a homogeneous polynomial needs at least one term")
        degrees = {sum(m) for m in terms}
        if len(degrees) != 1:
            raise SpecError(f"terms of mixed degrees {sorted(degrees)}")
        d = degrees.pop()
        coeffs = list(self.zero(d).coeffs)
        for m, c in terms.items():
            i = self.index(tuple(m))
            coeffs[i] = self.field.add(coeffs[i], self.field.normalize(c))
        return HPoly(self, d, tuple(coeffs))

    def from_json(self, mapping: Mapping[str, Any]) -> 'HPoly':
        """JSON 表現 {"[2,1]": "1/2", ...} から作る"""
        return self.from_terms({parse_monomial_key(k): v for k, v in mapping.items()})

    # --- 線形写像 ---

    def multiplication_matrix(self, f: 'HPoly', d: int) -> MatrixK:
        """
        f 倍写像 A_d → A_{d + deg f} の行列（列は A_d の基底の像）
        """
        columns = [(f * self.monomial(m)).coeffs for m in self.basis(d)]
        return MatrixK.from_columns(self.field, columns, self.dim(d + f.degree))

    def multiply_by_variable(self, i: int, d: int, coords: Sequence[Raw]) -> Vector:
        """A_d の座標ベクトルに X_i を掛けた A_{d+1} の座標"""
        out = [self.field.zero()] * self.dim(d + 1)
        for pos, c in zip(variable_shift(self.n, i, d), coords):
            out[pos] = c
        return tuple(out)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.variable_names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class HPoly:
    """
    斉次多項式（A_d の元）

    Attributes:
        ring: 多項式環
        degree: 次数 d
        coeffs: 基底 monomial_basis(n, d) 上の係数
    """
    ring: PolyRing
    degree: int
    coeffs: Vector

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.ring.dim(self.degree):
            raise DimensionMismatchError(
                f"{len(self.coeffs)} coefficients for A_{self.degree} of dimension {self.ring.dim(self.degree)}"
            )

    def coords(self) -> Vector:
        return self.coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def terms(self) -> List[Tuple[Monomial, Raw]]:
        return [(m, c) for m, c in zip(self.ring.basis(self.degree), self.coeffs) if c != 0]

    def _check_same(self, other: 'HPoly', need_degree: bool) -> None:
        if not isinstance(other, HPoly) or other.ring != self.ring:
            raise DimensionMismatchError("polynomials from different rings")
        if need_degree and other.degree != self.degree:
            raise DimensionMismatchError(f"cannot add degrees {self.degree} and {other.degree}")

    def __add__(self, other: 'HPoly') -> 'HPoly':
        self._check_same(other, True)
        f = self.ring.field
        return HPoly(self.ring, self.degree, tuple(f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'HPoly') -> 'HPoly':
        self._check_same(other, True)
        f = self.ring.field
        return HPoly(self.ring, self.degree, tuple(f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'HPoly':
        f = self.ring.field
        return HPoly(self.ring, self.degree, tuple(f.neg(a) for a in self.coeffs))

    def scale(self, c: Any) -> 'HPoly':
        f = self.ring.field
        c = f.normalize(c)
        return HPoly(self.ring, self.degree, tuple(f.mul(c, a) for a in self.coeffs))

    def __mul__(self, other: 'HPoly') -> 'HPoly':
        return hmul(self, other)

    def to_json(self) -> Dict[str, Any]:
        f = self.ring.field
        return {monomial_key(m): f.format(c) for m, c in self.terms()}

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        f = self.ring.field
        out = []
        for m, c in terms:
            mono = self.ring.format_monomial(m)
            lit = str(f.format(c))
            if mono == "1":
                out.append(lit)
            elif lit == "1":
                out.append(mono)
            elif lit == "-1":
                out.append(f"-{mono}")
            else:
                out.append(f"{lit}*{mono}")
        return " + ".join(out).replace("+ -", "- ")


@lru_cache(maxsize=None)
def _sparse_ring(field: FieldSpec, n: int) -> SparsePolyRing:
    return sparse_ring([f"x{i}" for i in range(n)], field.domain)[0]


def _to_sparse(ring: SparsePolyRing, f: 'HPoly') -> Any:
    k = f.ring.field
    return ring.from_dict({m: k.to_domain(c) for m, c in f.terms()})


def hmul(f: HPoly, g: HPoly) -> HPoly:
    """
    斉次多項式の積（次数は deg f + deg g）

    積は sympy の疎多項式環で計算し、A_{deg f + deg g} の座標に戻す。

    Raises:
        DimensionMismatchError: 環が異なる場合
    """
    if f.ring != g.ring:
        raise DimensionMismatchError("polynomials from different rings")
    ring = f.ring
    k = ring.field
    d = f.degree + g.degree
    index = monomial_index(ring.n, d)
    R = _sparse_ring(k, ring.n)
    out = [k.zero()] * ring.dim(d)
    for m, c in (_to_sparse(R, f) * _to_sparse(R, g)).items():
        out[index[tuple(m)]] = k.from_domain(c)
    return HPoly(ring, d, tuple(out))
