"""Exact character tables and rationality checks for finite permutation groups."""

import json

from . import _core
from ._core import Group, GalctError, family, family_specs, from_generators, load_group, parse_group

__all__ = [
    "Group",
    "GalctError",
    "analyze",
    "character_table",
    "family",
    "family_specs",
    "from_generators",
    "load_group",
    "parse_group",
    "scan",
    "verify",
    "verify_standalone",
]


def _group(g):
    return family(g) if isinstance(g, str) else g


def analyze(group):
    """Counts, rationality report and Galois image of a group or family spec."""
    return json.loads(_core.analyze_text(_group(group)))


def character_table(group):
    """Character table in the exchange format (exact values as strings)."""
    return json.loads(_core.table_text(_group(group)))


def verify(group, theorem):
    """Outcomes of one per-group check, as a list of dicts."""
    return json.loads(_core.verify_text(_group(group), theorem))


def verify_standalone(theorem):
    """Outcomes of a check that runs once ("sn", "2groups", "s4s5")."""
    return json.loads(_core.verify_standalone_text(theorem))


def scan(corpus=None, builtin=True, max_order=0, jobs=1):
    return json.loads(_core.scan_text(corpus, builtin, max_order, jobs))
