"""
utils/file_handler.py
---------------------
Reads run-configuration files and writes CSV artifacts.

Config files are line-oriented `key = value`; keys before any section header
are run keys, the `[potential]` section holds the potential block. Every CSV
starts with a `#` provenance block and uses LF line endings.
"""

import configparser
import os
from contextlib import contextmanager
from typing import Dict, Iterable, Iterator, Optional, TextIO, Tuple

import pandas as pd

from app_config import CSV_ENCODING, CSV_FLOAT_FORMAT
from src.errors import ConfigError

_RUN_SECTION = "run"
_POTENTIAL_SECTION = "potential"


def parse_config_text(text: str) -> Tuple[Dict[str, str], Dict[str, str]]:
    """
    Splits config text into (run keys, potential keys).

    Raises:
        ConfigError: On malformed lines or unknown sections.
    """
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"),
                                       inline_comment_prefixes=("#",))
    try:
        parser.read_string(f"[{_RUN_SECTION}]\n{text}")
    except configparser.Error as e:
        raise ConfigError(f"could not parse config: {e}", key="config") from e

    unknown = set(parser.sections()) - {_RUN_SECTION, _POTENTIAL_SECTION}
    if unknown:
        raise ConfigError(f"unknown section(s) {sorted(unknown)}", key=sorted(unknown)[0])

    run = dict(parser.items(_RUN_SECTION))
    potential = dict(parser.items(_POTENTIAL_SECTION)) if parser.has_section(_POTENTIAL_SECTION) else {}
    return run, potential


def read_config_file(path: str) -> Tuple[Dict[str, str], Dict[str, str]]:
    """Reads and splits a config file (see `parse_config_text`)."""
    if not os.path.exists(path):
        raise ConfigError(f"The file {path} was not found.", key="config")
    with open(path, "r", encoding=CSV_ENCODING) as f:
        return parse_config_text(f.read())


@contextmanager
def open_output(path: str) -> Iterator[TextIO]:
    """Opens `path` for writing UTF-8 text with LF line endings."""
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding=CSV_ENCODING, newline="") as f:
        yield f


def write_preamble(stream: TextIO, lines: Iterable[str]) -> None:
    for line in lines:
        stream.write(f"# {line}\n")


def write_csv(path: str, frame: pd.DataFrame, preamble: Optional[Iterable[str]] = None) -> str:
    """
    Writes a DataFrame as CSV behind a `#` provenance block.

    Returns:
        The path written.
    """
    with open_output(path) as f:
        write_preamble(f, preamble or ())
        frame.to_csv(f, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    return path
