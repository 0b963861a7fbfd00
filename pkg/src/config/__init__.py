"""
gorinv 設定パッケージ
アプリケーションの設定管理機能を提供します
"""

from .settings_manager import SettingsManager, GROUP_CAP_ENV


def get_settings() -> SettingsManager:
    """
    設定マネージャーのシングルトンインスタンスを取得する

    Returns:
        SettingsManagerインスタンス
    """
    return SettingsManager.get_instance()


__all__ = [
    'SettingsManager',
    'GROUP_CAP_ENV',
    'get_settings'
]
