"""Shared random generators: hypothesis strategies for property tests and
seeded ``random.Random`` generators for the counted acceptance runs."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from humboldt.catalog import CatalogSnapshot, DataArtifact, Timestamp
from humboldt.query.syntax import (
    And,
    FieldPill,
    Group,
    Keyword,
    Not,
    Or,
    ProviderCall,
)

KINDS = ("table", "workbook", "dashboard", "visualization")
OWNERS = ("alice", "bob", "carol", "John Doe", "Maya Flores")
BADGES = ("endorsed", "draft", "gold")
TAGS = ("sales", "ops", "geo", "bit", "air")
NAME_STEMS = ("AIRLINES", "PAYROLL", "Fleet", "Delay Drilldown", "Route Map", "zeta")
COLUMNS = ("carrier_id", "flight_no", "origin", "salary", "employee_id", "region")

PILL_FIELDS = ("type", "kind", "name", "owner", "owned_by", "badge", "badged_by",
               "views", "favorite", "tags")
KEYWORDS = ("air", "bit", "sales", "ops", "bob", "zeta", "fleet", "nothing_here")


def _artifact(i: int, kind, name, owner, badge, tags, views, favorite, created,
              columns, position) -> DataArtifact:
    fields = {"views": views, "favorite": favorite}
    if owner is not None:
        fields["owner"] = owner
    if badge is not None:
        fields["badge"] = (badge,)
    if tags:
        fields["tags"] = tuple(tags)
    if created is not None:
        fields["created_at"] = Timestamp(created)
    return DataArtifact(
        id=f"a{i:03d}",
        kind=kind,
        name=name,
        fields=fields,
        columns=tuple(columns) if columns is not None else None,
        position=position,
    )


# -- hypothesis strategies -----------------------------------------------------

def artifact_strategy(index: int):
    return st.builds(
        _artifact,
        st.just(index),
        st.sampled_from(KINDS),
        st.sampled_from(NAME_STEMS),
        st.one_of(st.none(), st.sampled_from(OWNERS)),
        st.one_of(st.none(), st.sampled_from(BADGES)),
        st.lists(st.sampled_from(TAGS), max_size=2, unique=True),
        st.integers(min_value=0, max_value=50),
        st.booleans(),
        st.one_of(st.none(), st.integers(min_value=0, max_value=10**9)),
        st.one_of(st.none(), st.lists(st.sampled_from(COLUMNS), max_size=4, unique=True)),
        st.one_of(st.none(), st.tuples(st.floats(-1, 1), st.floats(-1, 1))),
    )


@st.composite
def catalog_strategy(draw, min_size: int = 0, max_size: int = 12) -> CatalogSnapshot:
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    artifacts = [draw(artifact_strategy(i)) for i in range(size)]
    return CatalogSnapshot(artifacts={a.id: a for a in artifacts})


def _leaf_strategy(call_names):
    leaves = [
        st.builds(Keyword, st.sampled_from(KEYWORDS)),
        st.builds(
            FieldPill,
            st.sampled_from(PILL_FIELDS),
            st.sampled_from(OWNERS + BADGES + KINDS + ("true", "false", "10", "sales")),
        ),
    ]
    if call_names:
        leaves.append(
            st.builds(
                ProviderCall,
                st.sampled_from(call_names),
                st.just(()),
            )
        )
    return st.one_of(*leaves)


def ast_strategy(negation: bool = True, call_names: tuple[str, ...] = ()):
    def extend(children):
        branches = [
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Group, children),
        ]
        if negation:
            branches.append(st.builds(Not, children))
        return st.one_of(*branches)

    return st.recursive(_leaf_strategy(call_names), extend, max_leaves=8)


# -- seeded generators (deterministic, for counted acceptance runs) ------------

def gen_artifact(rng: random.Random, i: int) -> DataArtifact:
    return _artifact(
        i,
        rng.choice(KINDS),
        rng.choice(NAME_STEMS) + (f" {rng.randrange(100)}" if rng.random() < 0.5 else ""),
        rng.choice(OWNERS) if rng.random() < 0.8 else None,
        rng.choice(BADGES) if rng.random() < 0.5 else None,
        rng.sample(TAGS, k=rng.randrange(0, 3)),
        rng.randrange(0, 50),
        rng.random() < 0.3,
        rng.randrange(10**9) if rng.random() < 0.8 else None,
        rng.sample(COLUMNS, k=rng.randrange(1, 4)) if rng.random() < 0.6 else None,
        (rng.uniform(-1, 1), rng.uniform(-1, 1)) if rng.random() < 0.5 else None,
    )


def gen_catalog(rng: random.Random, size: int) -> CatalogSnapshot:
    artifacts = [gen_artifact(rng, i) for i in range(size)]
    return CatalogSnapshot(artifacts={a.id: a for a in artifacts})


def gen_ast(rng: random.Random, depth: int = 3, negation: bool = False):
    if depth <= 0 or rng.random() < 0.35:
        if rng.random() < 0.5:
            return Keyword(rng.choice(KEYWORDS))
        return FieldPill(
            rng.choice(PILL_FIELDS),
            rng.choice(OWNERS + BADGES + KINDS + ("true", "false", "10", "sales")),
        )
    roll = rng.random()
    if negation and roll < 0.2:
        return Not(gen_ast(rng, depth - 1, negation))
    if roll < 0.5:
        return And(gen_ast(rng, depth - 1, negation), gen_ast(rng, depth - 1, negation))
    if roll < 0.8:
        return Or(gen_ast(rng, depth - 1, negation), gen_ast(rng, depth - 1, negation))
    return Group(gen_ast(rng, depth - 1, negation))
