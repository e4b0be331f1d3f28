"""Stratification and acyclicity of set-theory formulas, and permutation invariance on finite digraphs."""

import json
from importlib import resources

from .acyclic import acyclic_index, acyclic_verdict, graph_acyclic, to_dot
from .canonical import (
    OccurrenceIndexing,
    RngSummary,
    canonical_index,
    canonical_verdict,
    minimal_rng_bruteforce,
    phf_transform,
    rng_summary,
)
from .errors import EmptyFormula, SizeLimit
from .formula import (
    FormulaSyntaxError,
    ReservedWordError,
    atomic_sequence,
    build_var_graph,
    occurrence_count,
    parse,
    render,
)
from .kernels import BACKEND
from .stratify import CycleWitness, TypeAssignment, is_stratified, stratify

__version__ = "0.1.0"


def load_schema(name: str) -> dict:
    """Shipped JSON schema by stem, e.g. ``load_schema("report")``."""
    text = resources.files(__package__).joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
