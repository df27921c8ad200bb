"""Command line entry points: validate, serve, query."""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click

from .catalog import load_catalog
from .errors import DiscoveryError, LexError, ParseError
from .service import DiscoveryService
from .spec import parse_spec, validate_spec

PORT_ENV = "HUMBOLDT_PORT"


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _build_service(
    spec_path: str,
    catalog_path: str,
    state_path: str | None = None,
    provider_base: str | None = None,
) -> DiscoveryService:
    doc = parse_spec(_read(spec_path))
    snapshot = load_catalog(_read(catalog_path))
    return DiscoveryService(
        doc, snapshot, state_path=state_path, provider_base=provider_base
    )


@click.group()
def main():
    """Metadata-driven data discovery."""


@main.command()
@click.argument("spec_path", type=click.Path(exists=True, dir_okay=False))
def validate(spec_path: str):
    """Parse and validate a provider spec document."""
    try:
        doc = parse_spec(_read(spec_path))
    except DiscoveryError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    violations = validate_spec(doc)
    for violation in violations:
        click.echo(f"{violation.code} at {violation.path}: {violation.message}")
    if violations:
        sys.exit(1)
    click.echo(f"ok: {len(doc.providers)} provider(s)")


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--catalog", "catalog_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--state", "state_path", default=None, type=click.Path(dir_okay=False))
@click.option("--port", default=None, type=int, help=f"Defaults to ${PORT_ENV} or 8000.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--provider-base", default=None, help="Base URL for HTTP providers.")
def serve(spec_path, catalog_path, state_path, port, host, provider_base):
    """Run the REST service."""
    import uvicorn

    from .api import create_app

    try:
        service = _build_service(spec_path, catalog_path, state_path, provider_base)
    except (DiscoveryError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if port is None:
        port = int(os.environ.get(PORT_ENV, "8000"))
    uvicorn.run(create_app(service), host=host, port=port, log_level="warning")


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--catalog", "catalog_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--provider-base", default=None)
@click.argument("query_text")
def query(spec_path, catalog_path, provider_base, query_text):
    """Evaluate a search query and print ranked artifact ids.

    Exits 0 on success and 2 on a parse error (the position is reported).
    """
    try:
        service = _build_service(spec_path, catalog_path, provider_base=provider_base)
    except (DiscoveryError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    try:
        ids = service.search(query_text, user_id="cli")
    except (LexError, ParseError) as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(2)
    except DiscoveryError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    for artifact_id in ids:
        click.echo(artifact_id)


if __name__ == "__main__":
    main()
