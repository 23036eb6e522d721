"""Structured input documents (YAML) and JSON reports.

Rationals are written as integers or strings such as "5086347841/3415104".
A document is a mapping; the recognised keys are

    curve:   {a: .., b: ..} | {ainvs: [a1, a2, a3, a4, a6]} | {roots: [e1, e2, e3]}
    point:   [x, y] | "O"
    m:       positive integer
    group:   {cyclic: n} | {abelian: [n1, ..]} | {dihedral: n} | {quaternion: true}
             | {symmetric: d} | {table: [[..], ..]} | {permutations: ["(1 2)", ..], degree: d}
    module:  {factors: [d1, ..], action: {element: matrix, ..}}   (trivial when omitted)
    degree:  0, 1 or 2
    class:   {degree: n, values: [[[g1, ..], [a1, ..]], ..]}  (missing entries are zero)
    ses:     {A: module, B: module, C: module, inj: matrix, surj: matrix}
    tau0:    {values: [[[g], [c1, ..]], ..]}
    sigma0, sigma1: cycle notation strings

Errors are raised as InputError naming the offending field (and the line for
YAML syntax errors).
"""

import json
from fractions import Fraction

import yaml

from .errors import BadInput


class InputError(BadInput):
    pass


def load_document(path=None, text=None):
    if text is None:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
    try:
        doc = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "unknown position"
        raise InputError(f"YAML syntax error at {where}: {exc.problem}") from None
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise InputError("document must be a mapping")
    return doc


def field(doc, key, where="document", required=True, default=None):
    if key not in doc:
        if required:
            raise InputError(f"missing field '{where}.{key}'" if where != "document"
                             else f"missing field '{key}'")
        return default
    return doc[key]


def parse_rational(value, name):
    if isinstance(value, bool):
        raise InputError(f"field '{name}': expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(f"field '{name}': floats are not exact; write {value!r} as a fraction string")
    if isinstance(value, str):
        try:
            return Fraction(value.strip().replace(" ", ""))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"field '{name}': cannot parse {value!r} as a rational") from None
    raise InputError(f"field '{name}': expected a rational, got {type(value).__name__}")


def parse_int(value, name, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        if isinstance(value, str) and value.strip().lstrip("-").isdigit():
            value = int(value)
        else:
            raise InputError(f"field '{name}': expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InputError(f"field '{name}': must be at least {minimum}")
    return value


def parse_curve(spec, name="curve"):
    from .curves import RationalCurve
    from .errors import SingularCurve
    if not isinstance(spec, dict):
        raise InputError(f"field '{name}': expected a mapping")
    try:
        if "ainvs" in spec:
            ai = spec["ainvs"]
            if not isinstance(ai, list) or len(ai) != 5:
                raise InputError(f"field '{name}.ainvs': expected five coefficients")
            return RationalCurve(*[parse_rational(a, f"{name}.ainvs[{i}]") for i, a in enumerate(ai)])
        if "roots" in spec:
            rs = spec["roots"]
            if not isinstance(rs, list) or len(rs) != 3:
                raise InputError(f"field '{name}.roots': expected three roots")
            return RationalCurve.from_cubic_roots(*[parse_rational(r, f"{name}.roots[{i}]")
                                                    for i, r in enumerate(rs)])
        a = parse_rational(field(spec, "a", name), f"{name}.a")
        b = parse_rational(field(spec, "b", name), f"{name}.b")
        return RationalCurve.short(a, b)
    except SingularCurve as exc:
        raise InputError(f"field '{name}': {exc}") from None


def parse_point(E, spec, name="point"):
    from .errors import NotOnCurve
    if spec in ("O", "infinity", None):
        return E.infinity()
    if not isinstance(spec, (list, tuple)) or len(spec) != 2:
        raise InputError(f"field '{name}': expected [x, y] or \"O\"")
    x = parse_rational(spec[0], f"{name}[0]")
    y = parse_rational(spec[1], f"{name}[1]")
    try:
        return E.point(x, y)
    except NotOnCurve:
        raise InputError(f"field '{name}': point ({x}, {y}) is not on the curve") from None


def parse_group(spec, name="group"):
    from .dessins import parse_cycles
    from .errors import NotAGroup
    from .groups import FiniteGroup
    if isinstance(spec, str):
        spec = _group_shorthand(spec, name)
    if not isinstance(spec, dict):
        raise InputError(f"field '{name}': expected a mapping")
    try:
        if "cyclic" in spec:
            return FiniteGroup.cyclic(parse_int(spec["cyclic"], f"{name}.cyclic", 1))
        if "abelian" in spec:
            ns = spec["abelian"]
            if not isinstance(ns, list) or not ns:
                raise InputError(f"field '{name}.abelian': expected a list of orders")
            return FiniteGroup.abelian(*[parse_int(n, f"{name}.abelian", 1) for n in ns])
        if "dihedral" in spec:
            return FiniteGroup.dihedral(parse_int(spec["dihedral"], f"{name}.dihedral", 1))
        if "quaternion" in spec:
            return FiniteGroup.quaternion()
        if "symmetric" in spec:
            return FiniteGroup.symmetric(parse_int(spec["symmetric"], f"{name}.symmetric", 1))
        if "table" in spec:
            return FiniteGroup(spec["table"])
        if "permutations" in spec:
            d = parse_int(field(spec, "degree", name), f"{name}.degree", 1)
            gens = [parse_cycles(str(s), d) for s in spec["permutations"]]
            return FiniteGroup.from_permutations(gens)
    except NotAGroup as exc:
        raise InputError(f"field '{name}': {exc}") from None
    except (TypeError, ValueError) as exc:
        raise InputError(f"field '{name}': {exc}") from None
    raise InputError(f"field '{name}': unknown group description {spec!r}")


def _group_shorthand(text, name):
    t = text.strip().upper()
    try:
        if t == "Q8":
            return {"quaternion": True}
        if "X" in t:
            return {"abelian": [int(p.lstrip("C")) for p in t.split("X")]}
        if t.startswith("C"):
            return {"cyclic": int(t[1:])}
        if t.startswith("D"):
            return {"dihedral": int(t[1:])}
        if t.startswith("S"):
            return {"symmetric": int(t[1:])}
    except ValueError:
        pass
    raise InputError(f"field '{name}': unknown group name {text!r}")


def parse_module(G, spec, name="module"):
    from .errors import InvalidModule, SizeCapExceeded
    from .groups import GModule
    if not isinstance(spec, dict):
        raise InputError(f"field '{name}': expected a mapping")
    factors = field(spec, "factors", name)
    if not isinstance(factors, list) or not factors:
        raise InputError(f"field '{name}.factors': expected a list of positive integers")
    factors = [parse_int(d, f"{name}.factors", 1) for d in factors]
    action = spec.get("action")
    try:
        if action is None:
            return GModule(G, factors)
        if not isinstance(action, dict):
            raise InputError(f"field '{name}.action': expected a mapping element -> matrix")
        gens = {parse_int(g, f"{name}.action", 0): M for g, M in action.items()}
        return GModule(G, factors, generator_action=gens)
    except InvalidModule as exc:
        raise InputError(f"field '{name}': {exc}") from None
    except SizeCapExceeded:
        raise


def parse_cochain(G, A, spec, name="class", degree=None):
    from .cohomology import CocycleClass
    if not isinstance(spec, dict):
        raise InputError(f"field '{name}': expected a mapping")
    n = parse_int(spec.get("degree", degree), f"{name}.degree", 0) if spec.get("degree", degree) \
        is not None else None
    rows = field(spec, "values", name)
    if not isinstance(rows, list):
        raise InputError(f"field '{name}.values': expected a list of [arguments, value] pairs")
    vals = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 2:
            raise InputError(f"field '{name}.values[{i}]': expected [arguments, value]")
        args, v = row
        args = tuple(parse_int(g, f"{name}.values[{i}]", 0) for g in args)
        if any(g >= G.order for g in args):
            raise InputError(f"field '{name}.values[{i}]': group element out of range")
        if n is None:
            n = len(args)
        if len(args) != n:
            raise InputError(f"field '{name}.values[{i}]': expected {n} arguments")
        if not isinstance(v, list) or len(v) != A.rank:
            raise InputError(f"field '{name}.values[{i}]': expected {A.rank} module coordinates")
        vals[args] = tuple(parse_int(x, f"{name}.values[{i}]") for x in v)
    if n is None:
        n = 2
    return CocycleClass(G, A, n, vals)


def parse_ses(G, spec, name="ses"):
    from .cohomology import ShortExactSeq
    from .errors import InvalidModule
    if not isinstance(spec, dict):
        raise InputError(f"field '{name}': expected a mapping")
    A = parse_module(G, field(spec, "A", name), f"{name}.A")
    B = parse_module(G, field(spec, "B", name), f"{name}.B")
    C = parse_module(G, field(spec, "C", name), f"{name}.C")
    try:
        return ShortExactSeq(A, B, C, field(spec, "inj", name), field(spec, "surj", name))
    except InvalidModule as exc:
        raise InputError(f"field '{name}': {exc}") from None


# ---------------------------------------------------------------- output


def to_jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "item"):
        return obj.item()
    return str(obj)


def dump_json(obj):
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)
