"""HTTP service: app factory, session tokens, configuration."""
from .app import API, create_app, utc_now
from .auth import TOKEN_TTL, Session, SessionRegistry
from .config import ServerConfig, load_config, parse_listen

__all__ = [
    "API",
    "Session",
    "SessionRegistry",
    "ServerConfig",
    "TOKEN_TTL",
    "create_app",
    "load_config",
    "parse_listen",
    "utc_now",
]
