"""JSON interchange: matroid sources, matrices, set systems, construction expressions."""

from . import constructions as C
from .core import Matroid
from .exceptions import MatroidError
from .linearalg import FpMatrix, column_matroid
from .transversal import SetSystem, transversal_matroid


class ParseError(MatroidError):
    """Malformed JSON input; ``path`` locates the offending node (``$.M.A[0]``)."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


def matroid_to_json(M):
    return {"ground": list(M.labels), "kind": "rank_table", "data": M.table.tolist()}


def matrix_to_json(D):
    return {
        "kind": "matrix",
        "p": D.p,
        "rows": D.rows,
        "cols": list(D.labels),
        "entries": [[int(v) for v in row] for row in D.entries],
    }


def set_system_to_json(system):
    return {
        "kind": "set_system",
        "ground": list(system.ground.labels),
        "sets": system.label_sets(),
    }


def _require(obj, key, path, kind=None):
    if not isinstance(obj, dict):
        raise ParseError(path, f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise ParseError(f"{path}.{key}", "missing")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"{path}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return value


def _labels(value, path):
    if not isinstance(value, list):
        raise ParseError(path, "expected a list of labels")
    for k, lab in enumerate(value):
        if not isinstance(lab, str):
            raise ParseError(f"{path}[{k}]", f"label must be a string, got {lab!r}")
    return value


def _int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(path, f"expected an integer, got {value!r}")
    return value


def matrix_from_json(obj, path="$"):
    p = _int(_require(obj, "p", path), f"{path}.p")
    cols = _labels(_require(obj, "cols", path), f"{path}.cols")
    entries = _require(obj, "entries", path, list)
    rows = obj.get("rows", len(entries))
    if rows != len(entries):
        raise ParseError(f"{path}.rows", f"says {rows} but entries has {len(entries)} rows")
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != len(cols):
            raise ParseError(f"{path}.entries[{i}]", f"expected {len(cols)} integers")
        for j, v in enumerate(row):
            _int(v, f"{path}.entries[{i}][{j}]")
    try:
        return FpMatrix(p, entries, cols)
    except MatroidError as exc:
        raise ParseError(path, str(exc)) from exc


def set_system_from_json(obj, path="$"):
    ground = _labels(_require(obj, "ground", path), f"{path}.ground")
    sets = _require(obj, "sets", path, list)
    for k, D in enumerate(sets):
        _labels(D, f"{path}.sets[{k}]")
        for j, lab in enumerate(D):
            if lab not in ground:
                raise ParseError(f"{path}.sets[{k}][{j}]", f"unknown label {lab!r}")
    return SetSystem.from_labels(ground, sets)


def matroid_from_json(obj, path="$"):
    """Parse a matroid source object (any supported ``kind``)."""
    kind = _require(obj, "kind", path, str)
    try:
        if kind == "matrix":
            return column_matroid(matrix_from_json(obj, path))
        if kind == "set_system":
            return transversal_matroid(set_system_from_json(obj, path))
        ground = _labels(_require(obj, "ground", path), f"{path}.ground")
        data = _require(obj, "data", path)
        if kind == "rank_table":
            if not isinstance(data, list):
                raise ParseError(f"{path}.data", "expected a list of integers")
            for k, v in enumerate(data):
                _int(v, f"{path}.data[{k}]")
            if len(data) != 1 << len(ground):
                raise ParseError(
                    f"{path}.data", f"has {len(data)} entries, expected {1 << len(ground)}"
                )
            return Matroid(ground, data)
        if kind == "bases":
            if not isinstance(data, list):
                raise ParseError(f"{path}.data", "expected a list of label lists")
            for k, b in enumerate(data):
                _labels(b, f"{path}.data[{k}]")
                for j, lab in enumerate(b):
                    if lab not in ground:
                        raise ParseError(f"{path}.data[{k}][{j}]", f"unknown label {lab!r}")
            return Matroid.from_bases(ground, data)
        if kind == "uniform":
            r = _int(_require(data, "r", f"{path}.data"), f"{path}.data.r")
            return C.uniform(r, ground)
    except ParseError:
        raise
    except MatroidError as exc:
        raise ParseError(path, str(exc)) from exc
    raise ParseError(f"{path}.kind", f"unknown kind {kind!r}")


# argument name -> how to read it
_OPS = {
    "uniform": (("r", "int"), ("ground", "labels")),
    "direct_sum": (("M", "matroid"), ("N", "matroid")),
    "union": (("G", "matroid"), ("H", "matroid")),
    "intersection": (("G", "matroid"), ("H", "matroid")),
    "add_loops": (("N", "matroid"), ("labels", "labels")),
    "principal_extension": (("K", "matroid"), ("A", "labels"), ("b", "label")),
    "extension_on_flat": (("M", "matroid"), ("A", "labels"), ("B", "labels"), ("T", "labels")),
    "principal_sum": (("M", "matroid"), ("N", "matroid"), ("A", "labels"), ("B", "labels")),
    "free_product": (("M", "matroid"), ("N", "matroid")),
    "truncation": (("M", "matroid"), ("k", "int")),
    "free_extension": (("M", "matroid"), ("e", "label")),
    "free_coextension": (("M", "matroid"), ("e", "label")),
    "higgs_lift": (("Q", "matroid"), ("L", "matroid"), ("i", "int")),
    "higgs_semidirect": (("M", "matroid"), ("M_q", "matroid"), ("N", "matroid"), ("N_l", "matroid")),
    "dual": (("M", "matroid"),),
    "minor": (("M", "matroid"), ("delete", "labels?"), ("contract", "labels?")),
}

_FUNCS = {
    "uniform": C.uniform,
    "direct_sum": C.direct_sum,
    "union": C.union,
    "intersection": C.intersection,
    "add_loops": C.add_loops,
    "principal_extension": C.principal_extension,
    "extension_on_flat": C.extension_on_flat,
    "principal_sum": C.principal_sum,
    "free_product": C.free_product,
    "truncation": C.truncation,
    "free_extension": C.free_extension,
    "free_coextension": C.free_coextension,
    "higgs_lift": C.higgs_lift,
    "higgs_semidirect": C.higgs_semidirect,
    "dual": lambda M: M.dual(),
    "minor": lambda M, delete, contract: M.minor(delete, contract),
}

OPS = tuple(_OPS)


def evaluate(expr, path="$"):
    """Evaluate a construction expression or matroid source to a :class:`Matroid`."""
    if not isinstance(expr, dict):
        raise ParseError(path, f"expected an object, got {type(expr).__name__}")
    if "op" not in expr:
        return matroid_from_json(expr, path)
    op = expr["op"]
    if op not in _OPS:
        raise ParseError(f"{path}.op", f"unknown op {op!r}")
    args = []
    for name, how in _OPS[op]:
        sub = f"{path}.{name}"
        if how == "labels?":
            args.append(_labels(expr.get(name, []), sub))
            continue
        value = _require(expr, name, path)
        if how == "matroid":
            args.append(evaluate(value, sub))
        elif how == "int":
            args.append(_int(value, sub))
        elif how == "labels":
            args.append(_labels(value, sub))
        elif how == "label":
            if not isinstance(value, str):
                raise ParseError(sub, "expected a string label")
            args.append(value)
    try:
        return _FUNCS[op](*args)
    except MatroidError as exc:
        raise ParseError(path, str(exc)) from exc
