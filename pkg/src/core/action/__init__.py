"""
群作用（Group Action）サブパッケージ
"""

from src.core.group import Character

from .group_action import GAction

__all__ = [
    'GAction',
    'Character'
]
