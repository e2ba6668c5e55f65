"""JSON documents: ring and module inputs, analysis reports and their text rendering."""

import json
import os
import re

from .decide import is_projective
from .errors import InputError, NoIdempotentGenerator
from .exterior import invariant_factor
from .ideals import idempotent_generator, is_idempotent_ideal
from .modules import PresentedModule, annihilator, flatness_obstruction
from .rings import Ring, construct_ring, decode_element, encode_element, ring_descriptor
from .spectrum import rank_map

SCHEMA = "flatcheck/1"

_ZMOD = re.compile(r"^z(?:mod)?\(?(\d+)\)?$", re.IGNORECASE)


def load_document(spec, field):
    """A JSON value from a file path or an inline JSON string."""
    if isinstance(spec, (dict, list)):
        return spec
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
    else:
        text = spec
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not a readable file or valid JSON ({exc.msg})", field) from None


def parse_ring(spec):
    """Ring from a descriptor, a JSON file/string, or a shorthand such as ``zmod6``."""
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, str):
        m = _ZMOD.match(spec.strip())
        if m and not os.path.exists(spec):
            n = int(m.group(1))
            return construct_ring({"kind": "zmod", "n": n})
    return construct_ring(load_document(spec, "ring"))


def module_from_json(doc, ring=None):
    if not isinstance(doc, dict):
        raise InputError("module document must be an object", "module")
    if ring is None:
        if "ring" not in doc:
            raise InputError("module document has no ring and none was given", "ring")
        ring = construct_ring(doc["ring"])
    elif "ring" in doc and construct_ring(doc["ring"]) != ring:
        raise InputError("module ring differs from the given ring", "ring")
    k = doc.get("generators")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise InputError(f"expected a natural number, got {k!r}", "generators")
    rels = doc.get("relations", [])
    if not isinstance(rels, list) or not all(isinstance(r, list) for r in rels):
        raise InputError("relations must be a list of vectors", "relations")
    decoded = []
    for j, rel in enumerate(rels):
        if len(rel) != k:
            raise InputError(f"relation {j} has length {len(rel)}, expected {k}", "relations")
        decoded.append([decode_element(ring, x, "relations") for x in rel])
    return PresentedModule(ring, k, decoded)


def module_to_json(m):
    return {"ring": ring_descriptor(m.ring), "generators": m.k,
            "relations": [[encode_element(m.ring, x) for x in rel] for rel in m.relations]}


def ideal_to_json(ideal):
    return [encode_element(ideal.ring, g) for g in ideal.generators]


def site_to_json(site):
    return {"factor_index": site.factor_index, "prime_generators": ideal_to_json(site.prime)}


def rank_map_to_json(rm):
    return [dict(site_to_json(s), rank=r) for s, r in rm.items()]


def _ideal_entry(ring, ideal):
    idem = is_idempotent_ideal(ring, ideal)
    try:
        gen = encode_element(ring, idempotent_generator(ring, ideal))
    except NoIdempotentGenerator:
        gen = None
    return {"generators": ideal_to_json(ideal), "idempotent": idem, "idempotent_generator": gen}


def analysis_report(m, max_exterior=None):
    r = m.ring
    top = m.k if max_exterior is None else min(m.k, max_exterior)
    obstruction = flatness_obstruction(m)
    verdict = is_projective(m)
    flat = obstruction is None
    return {
        "schema": SCHEMA,
        "ring": ring_descriptor(r),
        "module": module_to_json(m),
        "cardinality": m.cardinality,
        "annihilator": _ideal_entry(r, annihilator(m)),
        "invariant_factors": [dict(n=n, **_ideal_entry(r, invariant_factor(m, n)))
                              for n in range(1, top + 1)],
        "flatness": {"flat": flat, "oracle": "J (x) M -> M injective for every ideal J",
                     "witness_ideal": None if flat else ideal_to_json(obstruction)},
        "rank_map": rank_map_to_json(rank_map(m)) if flat else None,
        "projectivity": {
            "projective": verdict.projective,
            "reason": verdict.reason,
            "evidence": {
                "flat": verdict.evidence["flat"],
                "invariant_factors_idempotent": verdict.evidence["invariant_factors_idempotent"],
                "rank_map_locally_constant": verdict.evidence["rank_map_locally_constant"],
                "locally_free": verdict.evidence["locally_free"],
            },
        },
    }


def _gens(gens):
    return "(" + ", ".join(json.dumps(g) for g in gens) + ")" if gens else "(0)"


def render_analysis(report):
    """Human summary of an analysis report; every line is read off the JSON value."""
    mod = report["module"]
    ann = report["annihilator"]
    lines = [
        f"ring: {json.dumps(report['ring'])}",
        f"module: {mod['generators']} generators, {len(mod['relations'])} relations, "
        f"{report['cardinality']} elements",
        f"annihilator: {_gens(ann['generators'])}"
        + (f" idempotent, generator {json.dumps(ann['idempotent_generator'])}"
           if ann["idempotent_generator"] is not None else
           " idempotent" if ann["idempotent"] else " not idempotent"),
    ]
    for entry in report["invariant_factors"]:
        gen = entry["idempotent_generator"]
        lines.append(f"I_{entry['n']}: {_gens(entry['generators'])}"
                     + (f" idempotent, generator {json.dumps(gen)}" if gen is not None else
                        " idempotent" if entry["idempotent"] else " not idempotent"))
    flat = report["flatness"]
    lines.append("flat: yes" if flat["flat"] else
                 f"flat: no (J = {_gens(flat['witness_ideal'])} gives a non-injective J (x) M -> M)")
    if report["rank_map"] is not None:
        ranks = ", ".join(f"{_gens(e['prime_generators'])}: {e['rank']}" for e in report["rank_map"])
        lines.append(f"rank map: {{{ranks}}}")
    proj = report["projectivity"]
    lines.append("projective: yes" if proj["projective"] else f"projective: no ({proj['reason']})")
    if "elapsed_seconds" in report:
        lines.append(f"elapsed: {report['elapsed_seconds']:.3f}s")
    return "\n".join(lines)


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2)

