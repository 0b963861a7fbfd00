"""
テスト共通のフィクスチャ
"""

import pytest

from src.config import SettingsManager
from src.core.action import GAction
from src.core.field import FieldSpec
from src.core.group import Character
from src.core.harness import zoo_group
from src.core.invsys import Functional
from src.core.polyring import PolyRing
from src.utils.error_handler import ErrorHandler


@pytest.fixture(autouse=True)
def fresh_singletons():
    """設定とエラーハンドラのシングルトンをテストごとに作り直す"""
    SettingsManager.reset_instance()
    ErrorHandler._instance = None
    yield
    SettingsManager.reset_instance()
    ErrorHandler._instance = None


@pytest.fixture
def Q():
    return FieldSpec.rationals()


@pytest.fixture
def F5():
    return FieldSpec.prime(5)


@pytest.fixture
def F7():
    return FieldSpec.prime(7)


@pytest.fixture
def ring2(Q):
    return PolyRing(Q, 2)


@pytest.fixture
def pm_identity(Q):
    return zoo_group("pm_identity", Q)


@pytest.fixture
def cyclic3(Q):
    return zoo_group("cyclic3", Q)


@pytest.fixture
def pm_action(pm_identity):
    return GAction(pm_identity)


@pytest.fixture
def cyclic3_action(cyclic3):
    return GAction(cyclic3)


@pytest.fixture
def eta(pm_identity):
    """σ = -I に -1 を割り当てる指標"""
    return Character.from_generator_values(pm_identity, ["-1"])


@pytest.fixture
def alpha(ring2, eta):
    """α(X^3) = α(X^2Y) = 1、他は 0 の三次汎関数"""
    return Functional.from_values(ring2, 3, {"[3,0]": 1, "[2,1]": 1, "[1,2]": 0, "[0,3]": 0}, eta)


@pytest.fixture
def phi35(ring2, eta):
    """φ(X^3) = 1、他は 0 の三次汎関数"""
    return Functional.from_values(ring2, 3, {"[3,0]": 1}, eta)
