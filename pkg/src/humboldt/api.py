"""REST surface over the discovery service.

Identity is a stub: ``X-User`` names the caller (default ``anonymous``) and
``X-Role`` is one of user, team-admin, admin (default ``user``). Responses
are plain JSON; artifact summaries ride along with every view so a client
can render names without extra round trips.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .catalog import DataArtifact, Timestamp
from .config import AdminConfig, TeamConfig, UserConfig
from .errors import (
    DanglingArtifactError,
    DiscoveryError,
    LexError,
    MalformedPayloadError,
    MissingInputError,
    ParseError,
    ProviderUnavailableError,
    RepresentationMismatchError,
    SchemaError,
    UnauthorizedScopeError,
    UnknownArtifactError,
    UnknownProviderError,
    UnknownProviderReferenceError,
)
from .payload import serialize_payload
from .query import ast_json, parse_query
from .service import DiscoveryService, ViewResult
from .spec import provider_json

__all__ = ["create_app"]

_STATUS = {
    LexError: 400,
    ParseError: 400,
    SchemaError: 400,
    MissingInputError: 400,
    UnknownProviderReferenceError: 400,
    UnauthorizedScopeError: 403,
    UnknownProviderError: 404,
    UnknownArtifactError: 404,
    ProviderUnavailableError: 502,
    RepresentationMismatchError: 502,
    DanglingArtifactError: 502,
    MalformedPayloadError: 502,
}


def _error_body(exc: DiscoveryError) -> dict[str, Any]:
    body: dict[str, Any] = {"kind": exc.kind, "message": str(exc)}
    for attr in ("position", "path", "expected"):
        value = getattr(exc, attr, None)
        if value is not None:
            body[attr] = sorted(value) if isinstance(value, frozenset) else value
    return body


def _artifact_json(artifact: DataArtifact) -> dict[str, Any]:
    fields = {}
    for key, value in artifact.fields.items():
        if isinstance(value, Timestamp):
            fields[key] = {"ts": value.seconds}
        elif isinstance(value, tuple):
            fields[key] = list(value)
        else:
            fields[key] = value
    out: dict[str, Any] = {
        "id": artifact.id,
        "kind": artifact.kind,
        "name": artifact.name,
        "fields": fields,
    }
    if artifact.columns is not None:
        out["columns"] = list(artifact.columns)
    if artifact.position is not None:
        out["position"] = {"x": artifact.position[0], "y": artifact.position[1]}
    return out


def _config_json(config: AdminConfig | TeamConfig | UserConfig) -> dict[str, Any]:
    if isinstance(config, AdminConfig):
        return {"disabled_providers": sorted(map(list, config.disabled_providers))}
    if isinstance(config, TeamConfig):
        return {"team": config.team, "home_providers": list(map(list, config.home_providers))}
    return {
        "user_id": config.user_id,
        "team": config.team,
        "hidden_providers": sorted(map(list, config.hidden_providers)),
        "provider_order": list(map(list, config.provider_order)),
    }


def create_app(service: DiscoveryService) -> FastAPI:
    app = FastAPI(title="humboldt", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(DiscoveryError)
    async def discovery_error(request: Request, exc: DiscoveryError):
        status = _STATUS.get(type(exc), 500)
        return JSONResponse(status_code=status, content={"error": _error_body(exc)})

    def _identity(request: Request) -> tuple[str, str]:
        return (
            request.headers.get("X-User", "anonymous"),
            request.headers.get("X-Role", "user"),
        )

    def _view_json(view: ViewResult) -> dict[str, Any]:
        out: dict[str, Any] = {"provider": provider_json(view.spec)}
        if view.payload is not None:
            out["payload"] = serialize_payload(view.payload)
            out["artifacts"] = {
                aid: _artifact_json(service.snapshot.get(aid))
                for aid in view.payload.item_ids()
                if service.snapshot.get(aid) is not None
            }
        if view.error is not None:
            out["error"] = _error_body(view.error)
        return out

    @app.get("/api/providers")
    def providers(request: Request, surface: str = ""):
        user_id, _ = _identity(request)
        return {
            "providers": [
                provider_json(s) for s in service.providers_for(surface, user_id)
            ]
        }

    @app.get("/api/overviews")
    def overviews(request: Request):
        user_id, _ = _identity(request)
        return {"views": [_view_json(v) for v in service.overviews(user_id)]}

    @app.get("/api/views/{type_}/{name}")
    def view(request: Request, type_: str, name: str, q: str = ""):
        user_id, _ = _identity(request)
        inputs = {
            key[len("input.") :]: value
            for key, value in request.query_params.items()
            if key.startswith("input.")
        }
        result = service.filter_view(type_, name, q, inputs, user_id)
        return _view_json(result)

    @app.get("/api/search")
    def search(request: Request, q: str = ""):
        user_id, _ = _identity(request)
        ids = service.search(q, user_id)
        return {
            "ids": ids,
            "artifacts": [_artifact_json(service.artifact(aid)) for aid in ids],
        }

    @app.get("/api/artifacts/{artifact_id}")
    def artifact(artifact_id: str):
        return {"artifact": _artifact_json(service.artifact(artifact_id))}

    @app.get("/api/artifacts/{artifact_id}/related")
    def related(request: Request, artifact_id: str):
        user_id, _ = _identity(request)
        views = service.explore(artifact_id, user_id)
        return {
            "artifact": _artifact_json(service.artifact(artifact_id)),
            "views": [_view_json(v) for v in views],
        }

    @app.get("/api/suggest")
    def suggest(request: Request, q: str = "", cursor: int | None = Query(None)):
        user_id, _ = _identity(request)
        suggestions = service.suggest_query(q, cursor, user_id)
        return {"suggestions": [{"kind": s.kind, "text": s.text} for s in suggestions]}

    @app.get("/api/parse")
    def parse(q: str = ""):
        return {"ast": ast_json(parse_query(q))}

    @app.get("/api/config/admin")
    def get_admin_config():
        return _config_json(service.get_config("admin"))

    @app.put("/api/config/admin")
    async def put_admin_config(request: Request):
        user_id, role = _identity(request)
        change = await request.json()
        updated = service.update_config("admin", change, role=role, user_id=user_id)
        return _config_json(updated)

    @app.get("/api/config/team/{team}")
    def get_team_config(team: str):
        return _config_json(service.get_config("team", team=team))

    @app.put("/api/config/team/{team}")
    async def put_team_config(request: Request, team: str):
        user_id, role = _identity(request)
        change = await request.json()
        updated = service.update_config(
            "team", change, role=role, user_id=user_id, team=team
        )
        return _config_json(updated)

    @app.get("/api/config/user")
    def get_user_config(request: Request):
        user_id, _ = _identity(request)
        return _config_json(service.get_config("user", user_id=user_id))

    @app.put("/api/config/user")
    async def put_user_config(request: Request):
        user_id, role = _identity(request)
        change = await request.json()
        updated = service.update_config("user", change, role=role, user_id=user_id)
        return _config_json(updated)

    return app
