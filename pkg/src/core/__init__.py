"""
gorinv のコア機能モジュール
厳密な体と線形代数、多項式環、有限行列群とその作用、逆系、次数付き商環、検証ハーネスを提供します
"""

# 各モジュールはサブディレクトリからインポートされます
# - field: 係数体 ℚ / 𝔽_p
# - linalg: 行列と部分空間
# - polyring: 次数付き多項式環
# - group: 有限行列群と指標
# - action: 群作用と Reynolds 作用素
# - invsys: 汎関数と逆系イデアル
# - algebra: アルティン商環と不変部分環の商
# - harness: 既知の例の再現とスイープ

# サブパッケージのインポート
from .field import FieldSpec, Scalar
from .polyring import PolyRing, HPoly
from .group import MatrixGroup, Character, has_nontrivial_onedim_rep
from .action import GAction
from .invsys import Functional, GradedIdeal, build_inverse_system
from .algebra import ArtinQuotient, InvariantQuotient, GorensteinVerdict

# 公開するクラスやモジュールのリスト
__all__ = [
    'FieldSpec',          # 係数体
    'Scalar',             # 体の元
    'PolyRing',           # 多項式環
    'HPoly',              # 斉次多項式
    'MatrixGroup',        # 有限行列群
    'Character',          # 一次元表現
    'has_nontrivial_onedim_rep',
    'GAction',            # 群作用
    'Functional',         # 汎関数
    'GradedIdeal',        # 次数付きイデアル
    'build_inverse_system',
    'ArtinQuotient',      # A/Q
    'InvariantQuotient',  # A^G/Q^G
    'GorensteinVerdict'
]
