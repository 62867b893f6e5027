"""JSON file formats for semigroups, value ideals, module sums and algebras."""

from __future__ import annotations

import json
from pathlib import Path

from .artinian import ArtinianAlgebra, PresentedModule, monomial_quotient
from .errors import ParseError
from .ideals import ModuleSum, ValueIdeal
from .polyparse import parse_matrix, parse_poly
from .semigroup import NumericalSemigroup


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", exc.pos) from exc


def _require(obj: dict, key: str, what: str):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{what}: missing field {key!r}")
    return obj[key]


def load_semigroup(obj) -> NumericalSemigroup:
    gens = _require(obj, "generators", "semigroup")
    if not isinstance(gens, list) or not all(isinstance(g, int) for g in gens):
        raise ParseError("semigroup: generators must be a list of integers")
    return NumericalSemigroup.from_generators(gens)


def dump_semigroup(sg: NumericalSemigroup) -> dict:
    return {"generators": list(sg.generators)}


def load_ideal(obj, sg: NumericalSemigroup | None = None) -> ValueIdeal:
    if sg is None:
        sg = load_semigroup(_require(obj, "semigroup", "ideal"))
    values = _require(obj, "values", "ideal")
    if not isinstance(values, list) or not values or not all(isinstance(v, int) for v in values):
        raise ParseError("ideal: values must be a non-empty list of integers")
    return ValueIdeal.generated(sg, values)


def load_module_sum(obj) -> ModuleSum:
    summands = _require(obj, "summands", "module")
    if not isinstance(summands, list) or not summands:
        raise ParseError("module: summands must be a non-empty list")
    shared = load_semigroup(obj["semigroup"]) if "semigroup" in obj else None
    return ModuleSum(tuple(load_ideal(s, shared if "semigroup" not in s else None) for s in summands))


def load_semigroup_input(obj):
    """Dispatch on the shape of a semigroup-side input file."""
    if "summands" in obj:
        return load_module_sum(obj)
    if "values" in obj:
        return load_ideal(obj)
    if "generators" in obj:
        return load_semigroup(obj)
    raise ParseError("expected a semigroup, ideal or module file")


def load_algebra(obj) -> ArtinianAlgebra:
    p = _require(obj, "p", "algebra")
    variables = _require(obj, "vars", "algebra")
    rels = _require(obj, "monomial_relations", "algebra")
    if not isinstance(p, int) or not isinstance(variables, list) or not isinstance(rels, list):
        raise ParseError("algebra: bad field types")
    return monomial_quotient(p, variables, rels)


def dump_algebra(alg: ArtinianAlgebra) -> dict:
    return {
        "p": alg.p,
        "vars": list(alg.variables),
        "monomial_relations": [alg.format_monomial(r) for r in alg.relations],
    }


def load_art_module(obj, alg: ArtinianAlgebra) -> PresentedModule:
    kind = _require(obj, "kind", "module")
    if kind == "residue_field":
        return PresentedModule.residue_field(alg)
    if kind == "regular":
        return PresentedModule.regular(alg)
    if kind == "free":
        return PresentedModule.free(alg, int(_require(obj, "rank", "module")))
    if kind == "ideal":
        gens = _require(obj, "generators", "module")
        ideal = alg.ideal([parse_poly(str(g), alg) for g in gens])
        return PresentedModule.from_ideal(ideal)
    if kind == "presentation":
        return PresentedModule.cokernel(alg, parse_matrix(_require(obj, "matrix", "module"), alg))
    raise ParseError(f"module: unknown kind {kind!r}")
