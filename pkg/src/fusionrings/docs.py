"""Work documents: the canonical JSON forms every pipeline reads and writes.

Documents are UTF-8 JSON with sorted keys and fixed separators, so identical
payloads serialize to identical bytes.  Rationals travel as "p/q" strings,
permutations as 1-based cycle strings.  Provenance never takes part in
document comparison.
"""

from __future__ import annotations

import json

from . import cyclo, rings
from .doubles import DoubleLabel, ModularData, _certify_modular
from .perms import PermGroup, Permutation

SCHEMA_VERSION = "1"
KINDS = {"group", "chartab", "fusionring", "matchedpair", "modulardata", "verdict", "witness"}


def document(kind, payload, command=None, extra_provenance=None):
    if kind not in KINDS:
        raise ValueError(f"unknown document kind {kind!r}")
    provenance = {"library_version": _version()}
    if command:
        provenance["command"] = command
    if extra_provenance:
        provenance.update(extra_provenance)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "payload": payload,
        "provenance": provenance,
    }


def _version():
    from . import __version__

    return __version__


def dumps(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def loads(text):
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported document schema: {doc.get('schema_version')!r}")
    if doc.get("kind") not in KINDS:
        raise ValueError(f"unknown document kind {doc.get('kind')!r}")
    return doc


def same_payload(a, b):
    """Document equality with provenance ignored."""
    return (a["kind"], a["payload"]) == (b["kind"], b["payload"])


# -- groups


def group_payload(group):
    return {
        "degree": group.degree,
        "order": group.order,
        "generators": [g.cycle_string() for g in group.generators],
    }


def group_from_payload(payload):
    degree = int(payload["degree"])
    gens = [Permutation.parse(s, degree) for s in payload["generators"]]
    group = PermGroup.from_generators(degree, gens)
    if group.order != int(payload["order"]):
        raise ValueError("group payload order mismatch")
    return group


# -- character tables


def chartab_payload(table):
    return {
        "group": group_payload(table.group),
        "classes": [[rep.cycle_string(), size] for rep, size in table.classes],
        "exponent": table.exponent,
        "degrees": list(table.degrees),
        "values": [[cyclo.to_document(v) for v in row] for row in table.chars],
    }


# -- fusion rings


def ring_payload(ring):
    dims = rings.fp_dims(ring)
    payload = {
        "labels": list(ring.labels),
        "dual": list(ring.dual),
        "tensor": [int(x) for x in ring.N.flatten()],
    }
    if dims.exact:
        payload["dims"] = list(dims.dims)
    return payload


def ring_from_payload(payload):
    labels = tuple(payload["labels"])
    n = len(labels)
    tensor = payload["tensor"]
    if len(tensor) != n**3:
        raise ValueError("tensor length mismatch")
    ring = rings.FusionRing(labels, tensor, tuple(payload["dual"]))
    rings.validate(ring)
    return ring


# -- matched pairs


def pair_payload(mp):
    return {
        "ambient": group_payload(mp.ambient),
        "f_generators": [g.cycle_string() for g in mp.f.generators],
        "gamma_generators": [g.cycle_string() for g in mp.gamma.generators],
    }


def pair_from_payload(payload):
    from .bicross import matched_pair_from_factorization

    ambient = group_from_payload(payload["ambient"])
    degree = ambient.degree
    f = ambient.subgroup([Permutation.parse(s, degree) for s in payload["f_generators"]])
    gamma = ambient.subgroup(
        [Permutation.parse(s, degree) for s in payload["gamma_generators"]]
    )
    return matched_pair_from_factorization(ambient, f, gamma)


# -- modular data


def modular_payload(md):
    return {
        "group": group_payload(md.group) if md.group is not None else None,
        "labels": [[l.class_rep.cycle_string(), l.char_row] for l in md.labels],
        "dims": list(md.dims),
        "global_dim": md.global_dim,
        "s": [[cyclo.to_document(v) for v in row] for row in md.S],
        "t": [cyclo.to_document(v) for v in md.T],
    }


def _degree_of_cycle_strings(strings):
    import re

    points = [int(tok) for s in strings for tok in re.findall(r"\d+", s)]
    return max(points) if points else 1


def modular_from_payload(payload):
    group = None
    if payload.get("group") is not None:
        group = group_from_payload(payload["group"])
        degree = group.degree
    else:
        degree = _degree_of_cycle_strings(rep for rep, _ in payload["labels"])
    labels = tuple(
        DoubleLabel(
            class_index=-1,
            class_rep=Permutation.parse(rep, degree),
            char_row=int(row),
            dim=int(d),
        )
        for (rep, row), d in zip(payload["labels"], payload["dims"])
    )
    md = ModularData(
        group=group,
        labels=labels,
        S=tuple(tuple(cyclo.from_document(v) for v in row) for row in payload["s"]),
        T=tuple(cyclo.from_document(v) for v in payload["t"]),
        dims=tuple(int(d) for d in payload["dims"]),
        global_dim=int(payload["global_dim"]),
        charge_conjugation=(),
    )
    md.charge_conjugation = _certify_modular(md)
    return md


# -- verdicts and witnesses


def verdict_payload(verdict, analysis=None):
    payload = {
        "verdict": verdict.verdict,
        "trace": [list(entry) for entry in verdict.trace],
    }
    if analysis:
        payload["analysis"] = analysis
    return payload


def witness_payload(found, pairs=None):
    payload = {"found": bool(found)}
    if found:
        payload["map"] = [list(p) for p in pairs]
    return payload
