"""Service configuration: JSON file, overridden by environment variables.

Precedence (lowest to highest): built-in defaults, config file keys,
MOCKBOARD_* environment variables, explicit CLI flags.

Defaults: listen 0.0.0.0:8080, data dir ./mockboard-data, overall
passing threshold 75, grace 30 seconds.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from decimal import Decimal
from pathlib import Path

from ..errors import ValidationFailed

ENV_PREFIX = "MOCKBOARD_"


@dataclass(frozen=True)
class ServerConfig:
    host: str = "0.0.0.0"
    port: int = 8080
    data_dir: str = "mockboard-data"
    passing_threshold: Decimal = Decimal("75")
    grace_seconds: int = 30
    ui_dir: str | None = None

    @property
    def listen(self) -> str:
        return f"{self.host}:{self.port}"


def parse_listen(listen: str) -> tuple[str, int]:
    host, sep, port = listen.rpartition(":")
    if not sep or not port.isdigit():
        raise ValidationFailed(f"listen address {listen!r} must be host:port")
    return host or "0.0.0.0", int(port)


def load_config(path: str | Path | None = None) -> tuple[ServerConfig, list[str]]:
    """Build the config; returns (config, warnings)."""
    warnings: list[str] = []
    config = ServerConfig()
    if path is not None:
        file_path = Path(path)
        if file_path.exists():
            raw = json.loads(file_path.read_text())
            known = {}
            for key in ("host", "port", "data_dir", "grace_seconds", "ui_dir"):
                if key in raw:
                    known[key] = raw[key]
            if "passing_threshold" in raw:
                known["passing_threshold"] = Decimal(str(raw["passing_threshold"]))
            if "listen" in raw:
                known["host"], known["port"] = parse_listen(raw["listen"])
            unknown = set(raw) - set(known) - {"listen"}
            if unknown:
                warnings.append(f"ignoring unknown config keys: {sorted(unknown)}")
            config = replace(config, **known)
        else:
            warnings.append(f"config file {file_path} not found; using defaults")

    if os.environ.get(ENV_PREFIX + "LISTEN"):
        host, port = parse_listen(os.environ[ENV_PREFIX + "LISTEN"])
        config = replace(config, host=host, port=port)
    if os.environ.get(ENV_PREFIX + "DATA_DIR"):
        config = replace(config, data_dir=os.environ[ENV_PREFIX + "DATA_DIR"])
    if os.environ.get(ENV_PREFIX + "PASSING_THRESHOLD"):
        config = replace(
            config,
            passing_threshold=Decimal(os.environ[ENV_PREFIX + "PASSING_THRESHOLD"]),
        )
    if os.environ.get(ENV_PREFIX + "GRACE_SECONDS"):
        config = replace(config, grace_seconds=int(os.environ[ENV_PREFIX + "GRACE_SECONDS"]))
    if os.environ.get(ENV_PREFIX + "UI_DIR"):
        config = replace(config, ui_dir=os.environ[ENV_PREFIX + "UI_DIR"])
    return config, warnings
