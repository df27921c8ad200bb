"""User, team, and admin configuration with JSON-file persistence.

The store keeps everything in memory and mirrors each write to a JSON state
file via atomic replace, so a crashed write never leaves a torn file behind.
Reads after a write in the same process always see the new state.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field, replace
from pathlib import Path

__all__ = ["UserConfig", "TeamConfig", "AdminConfig", "ConfigStore"]

ProviderKey = tuple[str, str]


@dataclass(frozen=True)
class UserConfig:
    user_id: str
    team: str | None = None
    hidden_providers: frozenset[ProviderKey] = frozenset()
    provider_order: tuple[ProviderKey, ...] = ()


@dataclass(frozen=True)
class TeamConfig:
    team: str
    home_providers: tuple[ProviderKey, ...] = ()


@dataclass(frozen=True)
class AdminConfig:
    disabled_providers: frozenset[ProviderKey] = frozenset()


def _keys_to_json(keys) -> list[list[str]]:
    return [[t, n] for t, n in keys]


def _keys_from_json(raw, where: str) -> list[ProviderKey]:
    if not isinstance(raw, list):
        raise ValueError(f"{where}: expected a list of [type, name] pairs")
    out = []
    for pair in raw:
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(p, str) for p in pair)
        ):
            raise ValueError(f"{where}: expected [type, name] pairs")
        out.append((pair[0], pair[1]))
    return out


@dataclass
class _State:
    admin: AdminConfig = field(default_factory=AdminConfig)
    teams: dict[str, TeamConfig] = field(default_factory=dict)
    users: dict[str, UserConfig] = field(default_factory=dict)


class ConfigStore:
    """Thread-safe config state, optionally persisted to ``path``."""

    def __init__(self, path: str | os.PathLike | None = None):
        self._path = Path(path) if path is not None else None
        self._lock = threading.Lock()
        self._state = _State()
        if self._path is not None and self._path.exists():
            self._state = self._load(self._path)

    @staticmethod
    def _load(path: Path) -> _State:
        data = json.loads(path.read_text("utf-8"))
        state = _State()
        admin = data.get("admin", {})
        state.admin = AdminConfig(
            disabled_providers=frozenset(
                _keys_from_json(admin.get("disabled_providers", []), "admin")
            )
        )
        for team, raw in data.get("teams", {}).items():
            state.teams[team] = TeamConfig(
                team=team,
                home_providers=tuple(
                    _keys_from_json(raw.get("home_providers", []), f"teams.{team}")
                ),
            )
        for user_id, raw in data.get("users", {}).items():
            state.users[user_id] = UserConfig(
                user_id=user_id,
                team=raw.get("team"),
                hidden_providers=frozenset(
                    _keys_from_json(raw.get("hidden_providers", []), f"users.{user_id}")
                ),
                provider_order=tuple(
                    _keys_from_json(raw.get("provider_order", []), f"users.{user_id}")
                ),
            )
        return state

    def _dump(self) -> None:
        if self._path is None:
            return
        data = {
            "admin": {
                "disabled_providers": _keys_to_json(
                    sorted(self._state.admin.disabled_providers)
                )
            },
            "teams": {
                team: {"home_providers": _keys_to_json(cfg.home_providers)}
                for team, cfg in sorted(self._state.teams.items())
            },
            "users": {
                user_id: {
                    "team": cfg.team,
                    "hidden_providers": _keys_to_json(sorted(cfg.hidden_providers)),
                    "provider_order": _keys_to_json(cfg.provider_order),
                }
                for user_id, cfg in sorted(self._state.users.items())
            },
        }
        self._path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(
            dir=self._path.parent, prefix=self._path.name, suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(data, handle, indent=2)
                handle.write("\n")
            os.replace(tmp_name, self._path)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise

    def admin(self) -> AdminConfig:
        return self._state.admin

    def team(self, name: str) -> TeamConfig:
        return self._state.teams.get(name, TeamConfig(team=name))

    def user(self, user_id: str) -> UserConfig:
        return self._state.users.get(user_id, UserConfig(user_id=user_id))

    def set_admin(self, config: AdminConfig) -> AdminConfig:
        with self._lock:
            self._state.admin = config
            self._dump()
        return config

    def set_team(self, config: TeamConfig) -> TeamConfig:
        with self._lock:
            self._state.teams[config.team] = config
            self._dump()
        return config

    def set_user(self, config: UserConfig) -> UserConfig:
        with self._lock:
            self._state.users[config.user_id] = config
            self._dump()
        return config

    def update_user(self, user_id: str, **changes) -> UserConfig:
        with self._lock:
            current = self._state.users.get(user_id, UserConfig(user_id=user_id))
            updated = replace(current, **changes)
            self._state.users[user_id] = updated
            self._dump()
        return updated
