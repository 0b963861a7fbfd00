import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from src.utils.error_handler import ConfigError


GROUP_CAP_ENV = "GORINV_GROUP_CAP"


class SettingsManager:
    """
    設定管理システム

    config.yml の設定・環境変数・実行時設定を一元管理するクラス
    シングルトンパターンを使用してアプリケーション全体で同じ設定インスタンスを使用する
    """

    # シングルトンインスタンス
    _instance = None

    @classmethod
    def get_instance(cls, config_path: Optional[Union[str, Path]] = None) -> 'SettingsManager':
        """
        シングルトンインスタンスを取得する

        Args:
            config_path: 設定ファイルのパス（指定時はインスタンスを作り直す）
        """
        if cls._instance is None or config_path is not None:
            cls._instance = SettingsManager(config_path)
        return cls._instance

    @classmethod
    def reset_instance(cls) -> None:
        """シングルトンを破棄する（テスト用）"""
        cls._instance = None

    def __init__(self, config_path: Optional[Union[str, Path]] = None):
        """コンストラクタ - このクラスは get_instance() メソッドを使用して取得することを推奨"""
        self.logger = logging.getLogger(__name__)

        # プロジェクトのルートディレクトリを取得
        self.root_dir = Path(__file__).parent.parent.parent
        self.app_config_path = Path(config_path) if config_path else self.root_dir / "config.yml"

        # 内部キャッシュ設定（メモリ内のみ）
        self.runtime_settings: Dict[str, Any] = {}

        self.default_app_config = self._get_default_app_config()
        self.app_config: Dict[str, Any] = {}

        self._load_app_config()
        self._apply_environment()

        self.logger.debug("設定マネージャーを初期化しました")

    def _get_default_app_config(self) -> Dict[str, Any]:
        """デフォルトのアプリケーション設定を取得する"""
        return {
            "group": {
                "closure_cap": 5000
            },
            "oracle": {
                "max_field_order": 101
            },
            "sweep": {
                "workers": 4,
                "progress": False,
                "rational_sample_bound": 2
            },
            "output": {
                "format": "json",
                "indent": 2
            },
            "logging": {
                "level": 30,
                "format": '%(asctime)s [%(levelname)s] [%(name)s] %(message)s',
                "date_format": '%Y-%m-%d %H:%M:%S',
                "log_to_file": False,
                "log_dir": str(self.root_dir / "logs"),
                "max_files": 10,
                "max_size_mb": 5
            }
        }

    def _load_app_config(self) -> None:
        """アプリケーション設定を読み込む"""
        self.app_config = copy.deepcopy(self.default_app_config)
        if not self.app_config_path.exists():
            self.logger.debug(f"設定ファイルがないためデフォルト設定を使用します: {self.app_config_path}")
            return
        try:
            with open(self.app_config_path, 'r', encoding='utf-8') as f:
                loaded_config = yaml.safe_load(f) or {}
            if not isinstance(loaded_config, dict):
                raise ConfigError(
                    f"{self.app_config_path} must contain a mapping, got {type(loaded_config).__name__}"
                )
            # デフォルト設定と結合
            self._deep_merge(self.app_config, loaded_config)
            self.logger.debug(f"アプリケーション設定を読み込みました: {self.app_config_path}")
        except (OSError, yaml.YAMLError) as e:
            self.logger.error(f"アプリケーション設定の読み込みに失敗しました: {e}")

    def _apply_environment(self) -> None:
        """環境変数による上書きを反映する"""
        raw = os.environ.get(GROUP_CAP_ENV)
        if raw is None:
            return
        try:
            cap = int(raw)
            if cap < 1:
                raise ValueError(raw)
        except ValueError:
            self.logger.warning(f"{GROUP_CAP_ENV} の値が不正なため無視します: {raw!r}")
            return
        self.app_config["group"]["closure_cap"] = cap
        self.logger.debug(f"{GROUP_CAP_ENV} により閉包上限を {cap} に設定しました")

    def _deep_merge(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """
        2つの辞書を再帰的に結合する

        Args:
            base: ベースとなる辞書
            override: 上書きする辞書

        Returns:
            結合された辞書

        Raises:
            ConfigError: 既定でセクションの項目に辞書以外が書かれている場合
        """
        for key, value in override.items():
            if value is None and isinstance(base.get(key), dict):
                continue
            if key in base and isinstance(base[key], dict):
                if not isinstance(value, dict):
                    raise ConfigError(f"config section '{key}' must be a mapping, got {value!r}")
                self._deep_merge(base[key], value)
            else:
                base[key] = value
        return base

    def get_app_config(self, section: Optional[str] = None, key: Optional[str] = None, default: Any = None) -> Any:
        """
        アプリケーション設定を取得する

        Args:
            section: 設定セクション名（Noneの場合は全体を返す）
            key: 設定キー名（Noneの場合はセクション全体を返す）
            default: デフォルト値

        Returns:
            設定値またはデフォルト値
        """
        if section is None:
            return self.app_config

        if section not in self.app_config:
            return default

        if key is None:
            return self.app_config.get(section, default)

        return self.app_config.get(section, {}).get(key, default)

    def get_runtime_setting(self, key: str, default: Any = None) -> Any:
        """実行時設定を取得する（メモリ内のみ、保存されない）"""
        return self.runtime_settings.get(key, default)

    def set_runtime_setting(self, key: str, value: Any) -> None:
        """実行時設定を設定する（メモリ内のみ、保存されない）"""
        self.runtime_settings[key] = value

    def get_dot_path(self, key_path: str, default: Any = None) -> Any:
        """
        ドット区切りのパスで設定値を取得する（簡易アクセス用）
        例: settings.get_dot_path("group.closure_cap")

        実行時設定が優先され、次に config.yml の値を返す。

        Args:
            key_path: ドット区切りの設定パス（"セクション.キー"形式）
            default: デフォルト値

        Returns:
            設定値またはデフォルト値
        """
        if key_path in self.runtime_settings:
            return self.runtime_settings[key_path]

        parts = key_path.split('.')
        if len(parts) == 1:
            return self.get_app_config(parts[0], None, default)
        return self.get_app_config(parts[0], parts[1], default)

    def get(self, section: str, key: Optional[str] = None, default: Any = None) -> Any:
        """get_app_config() の短縮形"""
        return self.get_app_config(section, key, default)

    @property
    def closure_cap(self) -> int:
        """群の閉包計算の上限"""
        return int(self.get_dot_path("group.closure_cap", 5000))
