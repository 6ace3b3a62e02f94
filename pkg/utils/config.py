"""Configuration loading (config.yaml plus .env overrides)"""
import copy
import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

load_dotenv()

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / 'config.yaml'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """Load configuration from YAML file

    Args:
        config_path: Explicit path. Falls back to $COINED_WALKS_CONFIG,
            then to the config.yaml next to the package.

    Returns:
        Parsed mapping, or {} when the file is missing or unreadable
    """
    path = Path(config_path or os.getenv('COINED_WALKS_CONFIG') or DEFAULT_CONFIG_PATH)
    return copy.deepcopy(_read_config(path.resolve()))


@lru_cache(maxsize=None)
def _read_config(path: Path) -> Dict[str, Any]:
    """Parse one config file; each path is read and warned about once per process"""
    try:
        if path.exists():
            with open(path, 'r', encoding='utf-8') as f:
                return yaml.safe_load(f) or {}
        logger.warning(f"Config file not found at {path}, using defaults")
        return {}
    except Exception as e:
        logger.warning(f"Could not load config: {e}")
        return {}


def section(name: str, config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Return one top-level section of the config, {} if absent"""
    config = load_config() if config is None else config
    value = config.get(name, {})
    return value if isinstance(value, dict) else {}


def setup_logging(config: Optional[Dict[str, Any]] = None) -> None:
    """Configure root logging from the `logging` section"""
    log_config = section('logging', config)
    level_name = os.getenv('COINED_WALKS_LOG_LEVEL') or log_config.get('level', 'INFO')
    level = getattr(logging, str(level_name).upper(), logging.INFO)
    logging.basicConfig(level=level, format=log_config.get('format', LOG_FORMAT))
