"""Permutation semantics on finite membership digraphs."""

from .demos import DEMOS, Demo, DemoSpec, demo, demo_spec, digraph_from_extensions
from .evaluate import compile_formula, evaluate
from .invariance import (
    CLASS_KEY,
    InvarianceReport,
    Violation,
    comprehension_invariant,
    defined_class,
    enumerate_permutations,
    invariance_survey,
    resolve_constraints,
    sample_permutations,
)
from .structures import (
    ClassSubset,
    Digraph,
    NonExtensional,
    Permutation,
    UndefinedWitness,
    all_permutations,
    automorphisms,
    extension,
    image_class,
    is_automorphism,
    j_lift,
    permute_level,
    permutes,
)
