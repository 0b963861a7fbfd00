import os
import shutil
import json
import logging
import tempfile
from pathlib import Path
from typing import Any, Optional, TextIO, Union

import yaml

from .error_handler import SpecError


class FileManager:
    """
    ファイル操作を管理するユーティリティクラス

    レポートは決定的なバイト列で書き出す（キー順保持・固定インデント）。
    """

    def __init__(self, indent: int = 2):
        """
        コンストラクタ

        Args:
            indent: JSON のインデント幅
        """
        self.logger = logging.getLogger(__name__)
        self.indent = indent

    def ensure_dir(self, directory: Union[str, Path]) -> None:
        """ディレクトリが存在しない場合は作成する"""
        if directory:
            os.makedirs(directory, exist_ok=True)

    def dumps_json(self, data: Any) -> str:
        """データを決定的な JSON 文字列にする"""
        return json.dumps(data, indent=self.indent, ensure_ascii=False) + "\n"

    def save_json(self, data: Any, file_path: Union[str, Path]) -> None:
        """
        データをJSONファイルに保存する

        Args:
            data: 保存するデータ
            file_path: 保存先のファイルパス
        """
        self.save_text(self.dumps_json(data), file_path)

    def write_json(self, data: Any, file_path: Optional[Union[str, Path]], stream: TextIO) -> None:
        """
        出力先が指定されていればファイルへ、なければストリームへ JSON を書く

        Args:
            data: 出力するデータ
            file_path: 出力ファイル（Noneの場合はストリーム）
            stream: 既定の出力ストリーム
        """
        if file_path:
            self.save_json(data, file_path)
        else:
            stream.write(self.dumps_json(data))

    def load_json(self, source: Union[str, Path]) -> Any:
        """
        JSON を読み込む。引数が '{' または '[' で始まる場合はインライン JSON とみなす

        Args:
            source: ファイルパスまたはインライン JSON

        Returns:
            読み込んだデータ

        Raises:
            SpecError: ファイルが存在しない場合
            json.JSONDecodeError: JSON が不正な場合
        """
        text = str(source)
        if text.lstrip().startswith(("{", "[")):
            return json.loads(text)

        if not os.path.exists(text):
            raise SpecError(f"input file not found: {text}")

        with open(text, 'r', encoding='utf-8') as f:
            data = json.load(f)
        self.logger.debug(f"JSONファイルを読み込みました: {text}")
        return data

    def load_yaml(self, file_path: Union[str, Path], default: Any = None) -> Any:
        """
        YAMLファイルからデータを読み込む

        Args:
            file_path: 読み込むファイルパス
            default: ファイルが存在しない場合や読み込みに失敗した場合のデフォルト値

        Returns:
            データまたはデフォルト値
        """
        if not os.path.exists(file_path):
            return default

        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
            self.logger.debug(f"YAMLファイルを読み込みました: {file_path}")
            return data
        except (OSError, yaml.YAMLError) as e:
            self.logger.error(f"YAMLファイルの読み込みに失敗しました: {e}")
            return default

    def save_text(self, text: str, file_path: Union[str, Path]) -> None:
        """
        テキストをファイルに保存する

        Args:
            text: 保存するテキスト
            file_path: 保存先のファイルパス
        """
        self.ensure_dir(os.path.dirname(str(file_path)))

        # 一時ファイルに書き込んでから移動する（書き込み中の読み込みを防ぐため）
        with tempfile.NamedTemporaryFile('w', delete=False, encoding='utf-8') as temp_file:
            temp_file.write(text)
            temp_path = temp_file.name

        shutil.move(temp_path, file_path)
        self.logger.debug(f"ファイルを保存しました: {file_path}")

    def write_text(self, text: str, file_path: Optional[Union[str, Path]], stream: TextIO) -> None:
        """
        出力先が指定されていればファイルへ（一時ファイル経由）、なければストリームへ書く

        Args:
            text: 出力するテキスト
            file_path: 出力ファイル（Noneの場合はストリーム）
            stream: 既定の出力ストリーム
        """
        if file_path:
            self.save_text(text, file_path)
        else:
            stream.write(text)
