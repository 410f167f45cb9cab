"""Exact checks for 3-Lie algebras, their extensions and derivations.

Algebras, specs and derivation pairs are the same JSON documents the
filippov_lab command line reads, passed here as dicts.
"""

import json

from . import _core
from ._core import InputError

__all__ = [
    "InputError",
    "assemble",
    "check_extension_conditions",
    "check_fundamental_identity",
    "cube",
    "derivation_basis",
    "fixture",
    "run",
    "solve_extendability",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def run(command, inputs, report="json", seed=0, trials=200, witness_cap=16, jobs=1):
    """Run a command on input files. Returns (exit_code, report); JSON reports are parsed."""
    code, text = _core.run(command, [str(p) for p in inputs], report, seed, trials, witness_cap, jobs)
    if report == "json" and code != 2:
        return code, json.loads(text)
    return code, text


def fixture(name, dim=0):
    return json.loads(_core.fixture(name, dim))


def check_fundamental_identity(algebra, witness_cap=16, jobs=1):
    return json.loads(_core.check_fundamental_identity(_text(algebra), witness_cap, jobs))


def derivation_basis(algebra):
    """Basis of Der(A) as matrices of rational strings."""
    return json.loads(_core.derivation_basis(_text(algebra)))


def assemble(spec):
    return json.loads(_core.assemble(_text(spec)))


def check_extension_conditions(spec):
    return json.loads(_core.check_extension_conditions(_text(spec)))


def solve_extendability(spec, pair):
    return json.loads(_core.solve_extendability(_text(spec), _text(pair)))


def cube(algebra):
    return json.loads(_core.cube(_text(algebra)))
