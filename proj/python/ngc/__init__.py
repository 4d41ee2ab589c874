"""Braided near-group categories over elementary abelian 2-groups."""

import json

from . import _ngc
from ._ngc import NgcError

__all__ = [
    "NgcError",
    "classify",
    "enumerate_forms",
    "export_monoidal",
    "obstruct",
    "oracle_compare",
    "run_cli",
    "verify",
]


def _form(form):
    return str(form)


def classify(rank, form=0, tau_sign=1):
    """Classification document with every braiding and its twists."""
    return json.loads(_ngc.classify(rank, _form(form), tau_sign))


def verify(document):
    """Pentagon, hexagon and twist verdicts for a document (dict or JSON text)."""
    text = document if isinstance(document, str) else json.dumps(document)
    return json.loads(_ngc.verify(text))


def export_monoidal(rank, form=0, tau_sign=1):
    return json.loads(_ngc.export_monoidal(rank, _form(form), tau_sign))


def obstruct(factors):
    return json.loads(_ngc.obstruct(list(factors)))


def oracle_compare(rank, form=0, tau_sign=1):
    return json.loads(_ngc.oracle_compare(rank, _form(form), tau_sign))


def enumerate_forms(rank):
    return _ngc.enumerate_forms(rank)


def run_cli(args):
    """Runs the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _ngc.run_cli(list(args))
