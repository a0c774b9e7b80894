"""JSON formats for automata, presentations, certificates, reports; DOT output.

Scalars travel as decimal strings ("3", "-7/2") so nothing is ever
rounded; fields are "0" for the rationals or "p:<prime>".  Parsers
reject malformed data with a FormatError naming the offending path.
Emitters build every dict in a fixed key order, so serializing the same
object twice gives byte-identical text.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .decompose import DecompositionReport, SummandBlock
from .endo import Certificate, SearchConfig
from .fields import FieldSpec, QQ, gf
from .linalg import DenseMatrix
from .modules import ActionGraph, CyclicModule, render_vector
from .perms import PermutationPresentation
from .wfa import WeightedAutomaton


class FormatError(ValueError):
    """Malformed serialized data, with the JSON path that failed."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# ---------------------------------------------------------------------------
# scalars and fields


def field_to_str(field: FieldSpec) -> str:
    if field.characteristic == 0:
        return "0"
    return f"p:{field.characteristic}"


def field_from_str(text, path: str = "field") -> FieldSpec:
    if not isinstance(text, str):
        raise FormatError(path, f"expected a string, got {type(text).__name__}")
    if text == "0":
        return QQ
    if text.startswith("p:"):
        digits = text[2:]
        if not digits.isdigit():
            raise FormatError(path, f"bad prime in {text!r}")
        try:
            return gf(int(digits))
        except ValueError as err:
            raise FormatError(path, str(err)) from None
    raise FormatError(path, f"expected \"0\" or \"p:<prime>\", got {text!r}")


def scalar_to_str(x) -> str:
    return str(x.value)


def scalar_from_json(field: FieldSpec, value, path: str):
    if isinstance(value, bool):
        raise FormatError(path, "booleans are not scalars")
    if isinstance(value, int):
        return field.scalar(value)
    if isinstance(value, str):
        try:
            return field.parse(value)
        except ValueError as err:
            raise FormatError(path, str(err)) from None
    raise FormatError(path, f"expected a scalar string, got {type(value).__name__}")


def vector_to_json(v) -> list:
    return [scalar_to_str(x) for x in v]


def vector_from_json(field: FieldSpec, data, length: Optional[int], path: str) -> tuple:
    if not isinstance(data, list):
        raise FormatError(path, f"expected a list, got {type(data).__name__}")
    if length is not None and len(data) != length:
        raise FormatError(path, f"expected length {length}, got {len(data)}")
    return tuple(scalar_from_json(field, x, f"{path}[{i}]") for i, x in enumerate(data))


def matrix_to_json(m: DenseMatrix) -> list:
    return [[scalar_to_str(x) for x in row] for row in m.entries]


def matrix_from_json(field: FieldSpec, data, rows: int, cols: int, path: str) -> DenseMatrix:
    if not isinstance(data, list):
        raise FormatError(path, f"expected a list of rows, got {type(data).__name__}")
    if len(data) != rows:
        raise FormatError(path, f"expected {rows} rows, got {len(data)}")
    entries = [
        vector_from_json(field, row, cols, f"{path}[{i}]") for i, row in enumerate(data)
    ]
    return DenseMatrix(field, entries, cols=cols)


# ---------------------------------------------------------------------------
# weighted automata


def automaton_to_json(a: WeightedAutomaton) -> dict:
    return {
        "field": field_to_str(a.field),
        "alphabet": list(a.alphabet),
        "dim": a.dim,
        "lambda": vector_to_json(a.lam),
        "mu": {s: matrix_to_json(a.mu[s]) for s in a.alphabet},
        "gamma": vector_to_json(a.gamma),
    }


def automaton_from_json(obj) -> WeightedAutomaton:
    if not isinstance(obj, dict):
        raise FormatError("$", "expected a JSON object")
    for key in ("field", "alphabet", "dim", "lambda", "mu", "gamma"):
        if key not in obj:
            raise FormatError(key, "missing")
    field = field_from_str(obj["field"])
    alphabet = obj["alphabet"]
    if not isinstance(alphabet, list) or not all(isinstance(s, str) for s in alphabet):
        raise FormatError("alphabet", "expected a list of strings")
    if len(set(alphabet)) != len(alphabet):
        raise FormatError("alphabet", "labels must be distinct")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise FormatError("dim", "expected a nonnegative integer")
    lam = vector_from_json(field, obj["lambda"], dim, "lambda")
    gamma = vector_from_json(field, obj["gamma"], dim, "gamma")
    mu_obj = obj["mu"]
    if not isinstance(mu_obj, dict):
        raise FormatError("mu", "expected an object keyed by letters")
    if set(mu_obj) != set(alphabet):
        raise FormatError("mu", "keys must match the alphabet exactly")
    mu = {
        s: matrix_from_json(field, mu_obj[s], dim, dim, f"mu.{s}") for s in alphabet
    }
    return WeightedAutomaton(field, alphabet, lam, mu, gamma)


# ---------------------------------------------------------------------------
# permutation presentations


def presentation_to_json(p: PermutationPresentation) -> dict:
    return {
        "degree": p.degree,
        "generators": {label: list(p.generators[label]) for label in p.labels},
    }


def presentation_from_json(obj) -> PermutationPresentation:
    if not isinstance(obj, dict):
        raise FormatError("$", "expected a JSON object")
    for key in ("degree", "generators"):
        if key not in obj:
            raise FormatError(key, "missing")
    degree = obj["degree"]
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise FormatError("degree", "expected a positive integer")
    gens = obj["generators"]
    if not isinstance(gens, dict):
        raise FormatError("generators", "expected an object of label -> index array")
    pairs = []
    for label, arr in gens.items():
        path = f"generators.{label}"
        if not isinstance(arr, list) or not all(
            isinstance(i, int) and not isinstance(i, bool) for i in arr
        ):
            raise FormatError(path, "expected a list of integers")
        pairs.append((label, arr))
    try:
        return PermutationPresentation(degree, pairs)
    except ValueError as err:
        raise FormatError("generators", str(err)) from None


# ---------------------------------------------------------------------------
# certificates and reports


def config_to_json(config: SearchConfig) -> dict:
    return {
        "exhaustive_cap": config.exhaustive_cap,
        "box_height": config.box_height,
        "random_trials": config.random_trials,
        "seed": config.seed,
    }


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "verdict": cert.verdict,
        "mode": cert.mode,
        "element": None if cert.element is None else matrix_to_json(cert.element),
        "summands": None
        if cert.summands is None
        else [[vector_to_json(v) for v in side] for side in cert.summands],
        "budgets": dict(cert.budgets),
        "diagnostics": {k: cert.diagnostics[k] for k in sorted(cert.diagnostics)},
    }


def module_to_json(m: CyclicModule, names: Optional[Sequence[str]] = None) -> dict:
    out = {
        "dim": m.dim,
        "generator": vector_to_json(m.generator),
        "basis_words": [list(w) for w in m.basis_words],
        "basis": [vector_to_json(v) for v in m.basis_vectors],
    }
    if names is not None:
        out["generator_display"] = render_vector(m.generator, names)
        out["basis_display"] = [render_vector(v, names) for v in m.basis_vectors]
    return out


def summand_to_json(block: SummandBlock, cert: Certificate, names=None) -> dict:
    out = {
        "dim": block.dim,
        "cyclic": block.is_cyclic,
        "generator": None if block.generator is None else vector_to_json(block.generator),
        "basis": [vector_to_json(v) for v in block.ambient_basis],
        "basis_words": None
        if block.module is None
        else [list(w) for w in block.module.basis_words],
        "certificate": certificate_to_json(cert),
    }
    if names is not None:
        out["generator_display"] = (
            None if block.generator is None else render_vector(block.generator, names)
        )
        out["basis_display"] = [render_vector(v, names) for v in block.ambient_basis]
    return out


def report_to_json(report: DecompositionReport, names: Optional[Sequence[str]] = None) -> dict:
    m = report.module
    return {
        "field": field_to_str(m.field),
        "ambient_dim": m.action.dim,
        "generators": list(m.action.labels),
        "module": module_to_json(m, names),
        "signature": list(report.signature),
        "fully_decomposed": report.fully_decomposed,
        "undecided_count": report.undecided_count,
        "config": config_to_json(report.config),
        "summands": [
            summand_to_json(block, cert, names)
            for block, cert in zip(report.summands, report.certificates)
        ],
        "split_certificates": [certificate_to_json(c) for c in report.split_certificates],
    }


def to_text(obj) -> str:
    """Canonical JSON text: two-space indent, preserved key order, one newline."""
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# DOT


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def graph_to_dot(graph: ActionGraph, name: str = "module", gf2: bool = False) -> str:
    """Deterministic DOT digraph; edge labels carry the generator name and,
    away from GF(2), a ",<coeff>" suffix for coefficients other than 1."""
    lines = [f"digraph {name} {{"]
    for i, label in enumerate(graph.node_labels):
        lines.append(f'  n{i} [label="{_dot_escape(label)}"];')
    for j, i, gen, coeff in graph.edges:
        if gf2 or coeff == 1:
            text = gen
        else:
            text = f"{gen},{coeff}"
        lines.append(f'  n{j} -> n{i} [label="{_dot_escape(text)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
