"""
gorinv ユーティリティパッケージ
アプリケーション全体で使用される共通ユーティリティ機能を提供します
"""

# ロガー
from .logger import LoggerManager, LogConfig, LogLevel, setup_logging

# ファイル操作
from .file_manager import FileManager

# エラー処理
from .error_handler import ErrorHandler, GorinvError, InstanceSkipped


def get_version():
    """アプリケーションのバージョンを取得する"""
    return "1.0.0"


__all__ = [
    'LoggerManager', 'LogConfig', 'LogLevel', 'setup_logging',
    'FileManager',
    'ErrorHandler', 'GorinvError', 'InstanceSkipped',
    'get_version'
]
