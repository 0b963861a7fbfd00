"""
gorinv コマンドラインパッケージ
JSON を入出力とするサブコマンドを提供します
"""

from .command_handler import CommandHandler, build_parser, run

__all__ = [
    'CommandHandler',
    'build_parser',
    'run'
]
