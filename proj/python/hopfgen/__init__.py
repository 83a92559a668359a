"""Exact verification of Hopf algebra two-cocycles and their generic base algebras."""

import json
import os

from . import _hopfgen
from ._hopfgen import InputError, StructureError, catalog_names, check_ids, cyclic_determinant

__all__ = [
    "InputError",
    "StructureError",
    "catalog_names",
    "check_ids",
    "cyclic_determinant",
    "export",
    "validate",
    "verify",
]


def validate(path):
    """Check the Hopf algebra axioms of a JSON file. Returns {"ok", "dim", "axioms"}."""
    return json.loads(_hopfgen.validate_json(os.fspath(path)))


def verify(algebra, checks=("all",), *, cocycle=None, lam=None, budget=None, timeout=None, strict=False,
           cache_dir=None):
    """Run checks on an algebra file and return the report as a dict.

    The report has the same layout as the CLI's JSON report, plus a "seconds"
    map with per-check wall times and "setup_seconds" for the shared ring.
    """
    if isinstance(checks, str):
        checks = [checks]
    opt = lambda p: None if p is None else os.fspath(p)
    return json.loads(
        _hopfgen.verify_json(os.fspath(algebra), list(checks), opt(cocycle), opt(lam), budget, timeout, strict,
                             opt(cache_dir)))


def export(name):
    """A builtin algebra ("z2", "s3", "sweedler", ...) as a JSON-ready dict."""
    return json.loads(_hopfgen.export_json(name))
