"""JSON encodings of groups, spaces, constructible functions, maps and series.

Rationals are written as strings ``"p/q"`` in lowest terms (``"n"`` for
integers); JSON numbers are accepted on input.  Every ``*_from_json``
raises :class:`InputError` naming the offending field.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .charclass import GradedRing, GradedSeries, GradedVariable
from .constructible import CellMap, ConstructibleFunction
from .errors import EquichernError
from .groups import FiniteGroup, Permutation, Subgroup, group_from_generators, subgroup_from
from .gspace import AnySpace, Atom, Cell, GSpace, Space


class InputError(EquichernError, ValueError):
    """Malformed input document."""


def rational_str(x) -> str:
    return str(Fraction(x))


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got {value!r}")
    try:
        return Fraction(value) if isinstance(value, (int, str)) else Fraction(str(value))
    except (ValueError, ZeroDivisionError, TypeError):
        raise InputError(f"{where}: {value!r} is not a rational number") from None


def _get(doc: dict, key: str, where: str):
    if not isinstance(doc, dict):
        raise InputError(f"{where}: expected an object")
    if key not in doc:
        raise InputError(f"{where}: missing field {key!r}")
    return doc[key]


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


# -- groups ---------------------------------------------------------------

def group_to_json(G: FiniteGroup) -> dict:
    return {"degree": G.degree, "generators": [list(g.images) for g in G.generators]}


def group_from_json(doc, where: str = "group", base: Path | None = None) -> FiniteGroup:
    if isinstance(doc, str):
        path = Path(doc) if base is None or Path(doc).is_absolute() else base / doc
        return group_from_json(load_json(path), str(path), path.parent)
    degree = _get(doc, "degree", where)
    gens = _get(doc, "generators", where)
    if not isinstance(degree, int) or degree < 1:
        raise InputError(f"{where}.degree: expected a positive integer")
    if not isinstance(gens, list):
        raise InputError(f"{where}.generators: expected a list")
    perms = []
    for k, g in enumerate(gens):
        try:
            p = Permutation(tuple(g))
        except (EquichernError, TypeError, ValueError) as exc:
            raise InputError(f"{where}.generators[{k}]: {exc}") from None
        if p.degree != degree:
            raise InputError(f"{where}.generators[{k}]: length {p.degree}, expected {degree}")
        perms.append(p)
    try:
        return group_from_generators(degree, perms)
    except EquichernError as exc:
        raise InputError(f"{where}: {exc}") from None


def small_generating_set(H: Subgroup) -> list[int]:
    gens: list[int] = []
    mask = 1
    for g in H:
        if not mask >> g & 1:
            gens.append(g)
            mask = subgroup_from(H.parent, gens).mask
    return gens


# -- spaces ---------------------------------------------------------------

def gspace_to_json(X: GSpace) -> dict:
    return {
        "name": X.name,
        "group": group_to_json(X.group),
        "atoms": [{"id": a.id, "chi": a.chi, "isotropy_gens": small_generating_set(a.isotropy)} for a in X.atoms],
        "action": {str(gi): list(perm) for gi, perm in X.action.items()},
    }


def gspace_from_json(doc, where: str = "space", base: Path | None = None) -> GSpace:
    G = group_from_json(_get(doc, "group", where), f"{where}.group", base)
    atoms_doc = _get(doc, "atoms", where)
    if not isinstance(atoms_doc, list):
        raise InputError(f"{where}.atoms: expected a list")
    atoms = []
    for k, a in enumerate(atoms_doc):
        w = f"{where}.atoms[{k}]"
        aid = _get(a, "id", w)
        chi = _get(a, "chi", w)
        if not isinstance(chi, int) or isinstance(chi, bool):
            raise InputError(f"{w}.chi: expected an integer")
        gens = a.get("isotropy_gens", [])
        if not isinstance(gens, list) or not all(isinstance(g, int) and 0 <= g < G.order for g in gens):
            raise InputError(f"{w}.isotropy_gens: expected element ids in 0..{G.order - 1}")
        atoms.append(Atom(str(aid), chi, subgroup_from(G, gens)))
    action_doc = doc.get("action", {})
    if not isinstance(action_doc, dict):
        raise InputError(f"{where}.action: expected an object")
    action = {}
    for key, perm in action_doc.items():
        try:
            gi = int(key)
        except ValueError:
            raise InputError(f"{where}.action: key {key!r} is not a generator index") from None
        if not 0 <= gi < len(G.generators):
            raise InputError(f"{where}.action.{key}: no generator with that index")
        if not isinstance(perm, list) or len(perm) != len(atoms) or sorted(perm) != list(range(len(atoms))):
            raise InputError(f"{where}.action.{key}: expected a permutation of the {len(atoms)} atom indices")
        action[gi] = perm
    return GSpace(G, atoms, action, name=str(doc.get("name", "space")))


def load_gspace(path: str | Path) -> GSpace:
    path = Path(path)
    doc = load_json(path)
    if isinstance(doc, dict) and "name" not in doc:
        doc = dict(doc, name=path.stem)
    return gspace_from_json(doc, str(path), path.parent)


def space_to_json(S: Space) -> dict:
    return {"name": S.name, "atoms": [{"id": a.id, "chi": a.chi} for a in S.atoms]}


def space_from_json(doc, where: str = "space") -> Space:
    atoms_doc = _get(doc, "atoms", where)
    cells = []
    for k, a in enumerate(atoms_doc):
        w = f"{where}.atoms[{k}]"
        chi = _get(a, "chi", w)
        if not isinstance(chi, int):
            raise InputError(f"{w}.chi: expected an integer")
        cells.append(Cell(str(_get(a, "id", w)), chi))
    try:
        return Space(tuple(cells), name=str(doc.get("name", "space")))
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


# -- functions and maps ---------------------------------------------------

def function_to_json(alpha: ConstructibleFunction) -> dict:
    return {"space": alpha.space.name,
            "values": {a.id: rational_str(v) for a, v in zip(alpha.space.atoms, alpha.values)}}


def function_from_json(doc, space: AnySpace, where: str = "function") -> ConstructibleFunction:
    values = _get(doc, "values", where)
    if not isinstance(values, dict):
        raise InputError(f"{where}.values: expected an object")
    ids = [a.id for a in space.atoms]
    extra = set(values) - set(ids)
    if extra:
        raise InputError(f"{where}.values: unknown atom ids {sorted(extra)}")
    return ConstructibleFunction(space, [parse_rational(values.get(i, 0), f"{where}.values.{i}") for i in ids])


def cellmap_to_json(f: CellMap) -> dict:
    return {
        "source": f.source.name,
        "target": f.target.name,
        "image": {a.id: f.target.atoms[b].id for a, b in zip(f.source.atoms, f.image)},
        "fiber_chi": {a.id: rational_str(c) for a, c in zip(f.source.atoms, f.fiber_chi)},
    }


def cellmap_from_json(doc, source: AnySpace, target: AnySpace, where: str = "map") -> CellMap:
    image = _get(doc, "image", where)
    fiber = _get(doc, "fiber_chi", where)
    tindex = {a.id: i for i, a in enumerate(target.atoms)}
    imgs, fibs = [], []
    for a in source.atoms:
        if a.id not in image:
            raise InputError(f"{where}.image: no image for atom {a.id!r}")
        if image[a.id] not in tindex:
            raise InputError(f"{where}.image.{a.id}: unknown target atom {image[a.id]!r}")
        if a.id not in fiber:
            raise InputError(f"{where}.fiber_chi: no value for atom {a.id!r}")
        imgs.append(tindex[image[a.id]])
        fibs.append(parse_rational(fiber[a.id], f"{where}.fiber_chi.{a.id}"))
    return CellMap(source, target, tuple(imgs), tuple(fibs))


# -- series ---------------------------------------------------------------

def series_to_json(s: GradedSeries) -> dict:
    ring = s.ring
    return {
        "vars": [{"name": v.name, "degree": v.degree} for v in ring.variables],
        "trunc": ring.trunc,
        "terms": {",".join(map(str, e)): rational_str(c) for e, c in s._sorted_terms()},
    }


def series_from_json(doc, where: str = "series") -> GradedSeries:
    vars_doc = _get(doc, "vars", where)
    trunc = _get(doc, "trunc", where)
    terms_doc = _get(doc, "terms", where)
    try:
        ring = GradedRing(tuple(GradedVariable(str(_get(v, "name", f"{where}.vars[{k}]")),
                                               int(_get(v, "degree", f"{where}.vars[{k}]")))
                                for k, v in enumerate(vars_doc)), int(trunc))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{where}.vars: {exc}") from None
    terms = {}
    nv = len(ring.variables)
    for key, c in terms_doc.items():
        try:
            exp = tuple(int(x) for x in key.split(",")) if key else ()
        except ValueError:
            raise InputError(f"{where}.terms: bad exponent key {key!r}") from None
        if len(exp) != nv:
            raise InputError(f"{where}.terms: key {key!r} needs {nv} exponents")
        terms[exp] = parse_rational(c, f"{where}.terms.{key}")
    return GradedSeries(ring, terms)
