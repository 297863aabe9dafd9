"""Script execution: binds names to structures and drives the checkers,
finders, auditors, and exporters.

``execute`` runs statements in order.  Structure definitions are cached in an
immutable-between-commands name table; each command appends one JSON-ready
record to the result stream.  Errors raised by a statement stop the run and
are reported as diagnostics carrying the originating line; the exit status is
0 iff no statement errored.

Determinism: records are sanitized to plain JSON values and serialized with
sorted keys, so identical scripts produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field

from .audit import audit as run_audit
from .audit import jsonable
from .constructors import (
    matrix_structure,
    new_loop,
    product,
    sym_structure,
    units_group,
    zn_group,
    zn_groupoid,
    zn_semigroup,
)
from .errors import (
    BudgetExceeded,
    CarrierMismatch,
    IalgError,
    IoError,
    UndefinedName,
)
from .dsl import (
    Command,
    GroupExpr,
    GroupoidExpr,
    Let,
    LoopExpr,
    MatrixExpr,
    Script,
    SemigroupExpr,
    SymExpr,
    UnionExpr,
)
from .identities import lookup as lookup_identity
from .identities import s_check_identity
from .special import find_quasi_special, find_special
from .structures import Structure
from .substructures import (
    enumerate_ideals,
    enumerate_substructures,
    loop_centers,
    loop_subloop_family,
    normalizers,
    principal_isotope,
    smarandache_witness,
    substructure_to_dict,
)

DEFAULT_MAX_ORDER = 10**6


def max_order_cap() -> int:
    """The structure-order cap: IALG_MAX_ORDER, defaulting to 10**6."""
    raw = os.environ.get("IALG_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise BudgetExceeded(
            f"IALG_MAX_ORDER must be an integer, got {raw!r}"
        ) from None
    if cap < 1:
        raise BudgetExceeded(f"IALG_MAX_ORDER must be positive, got {cap}")
    return cap


@dataclass
class RunResult:
    records: list[dict] = field(default_factory=list)
    diagnostics: list[dict] = field(default_factory=list)
    status: int = 0

    def to_ndjson(self) -> str:
        """One JSON object per line (the default output stream)."""
        return "".join(
            json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n"
            for r in self.records
        )

    def to_json_array(self) -> str:
        """The --pretty form: a single indented JSON array document."""
        return json.dumps(self.records, sort_keys=True, indent=2) + "\n"


# -- structure building ---------------------------------------------------------------


def _lookup(env: dict, name: str) -> Structure:
    try:
        return env[name]
    except KeyError:
        raise UndefinedName(f"name {name!r} is not defined") from None


def _build(expr, name: str, env: dict) -> Structure:
    if isinstance(expr, SemigroupExpr):
        return zn_semigroup(expr.n, expr.op, expr.flavor, name=name)
    if isinstance(expr, GroupoidExpr):
        return zn_groupoid(expr.n, expr.t, expr.u, expr.flavor, name=name)
    if isinstance(expr, LoopExpr):
        return new_loop(expr.n, expr.m, expr.flavor, name=name)
    if isinstance(expr, GroupExpr):
        if expr.base == "zmod":
            return zn_group(expr.n, expr.flavor, name=name)
        return units_group(expr.n, expr.flavor, name=name)
    if isinstance(expr, SymExpr):
        return sym_structure(
            expr.k, bijective=expr.kind == "group", flavor=expr.flavor, name=name
        )
    if isinstance(expr, MatrixExpr):
        return matrix_structure(
            expr.r, expr.c, _lookup(env, expr.base), expr.mode, name=name
        )
    if isinstance(expr, UnionExpr):
        parts = [_lookup(env, n) for n in expr.names]
        if len(parts) == 1:
            return parts[0]
        return product(*parts, name=name)
    raise TypeError(f"unknown expression {expr!r}")


def _enforce_cap(structure: Structure, cap: int):
    if structure.is_finite and structure.order_of() > cap:
        raise BudgetExceeded(
            f"structure {structure.name} has order {structure.order_of()}, "
            f"above the cap of {cap} (set IALG_MAX_ORDER to raise it)"
        )


# -- labels -----------------------------------------------------------------------------


def _component_label_lists(structure: Structure, per_component) -> list | None:
    """Per-component value collections -> per-component sorted label lists."""
    if per_component is None:
        return None
    mags = structure.component_magmas()
    out = []
    for mag, vals in zip(mags, per_component):
        if vals is None:
            out.append(None)
        else:
            order = {v: i for i, v in enumerate(mag.elements())}
            out.append([mag.label(v) for v in sorted(vals, key=order.__getitem__)])
    return out


def _value_labels(mag, vals) -> list[str]:
    order = {v: i for i, v in enumerate(mag.elements())}
    return [mag.label(v) for v in sorted(vals, key=order.__getitem__)]


def _loop_value(structure: Structure, token: str) -> int:
    """Parse a loop element label: 'e', a bare residue, or '[0,k]'."""
    tok = token.strip()
    if tok == "e":
        v = 0
    elif tok.startswith("[0,") and tok.endswith("]"):
        v = int(tok[3:-1])
    else:
        try:
            v = int(tok)
        except ValueError:
            raise CarrierMismatch(
                f"{tok!r} is not a loop element label (use e, k, or [0,k])"
            ) from None
    if not structure.magma.carrier.contains(v):
        raise CarrierMismatch(
            f"{tok!r} is outside the carrier of {structure.name}"
        )
    return v


def _table_csv(labels: list[str], table) -> str:
    """Header row = element labels; cell = element label."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(labels)
    for row in table:
        w.writerow([labels[j] for j in row])
    return buf.getvalue()


# -- table export -------------------------------------------------------------------------


def export_table(structure: Structure, fmt: str, path: str) -> int:
    """Write the Cayley table atomically (temp file + rename); returns the
    byte count.  CSV: header row of labels, rows of product labels.  JSON:
    {"elements": [labels], "table": [[indices]]}."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    mag = structure.magma
    labels = mag.labels()
    table = mag.table()
    if fmt == "csv":
        payload = _table_csv(labels, table)
    else:
        payload = (
            json.dumps(
                {"elements": labels, "table": table.tolist()},
                sort_keys=True,
                separators=(",", ":"),
            )
            + "\n"
        )
    data = payload.encode("utf-8")
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ialg-export-")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as e:
        raise IoError(f"cannot write {path}: {e}") from None
    return len(data)


# -- command execution ----------------------------------------------------------------------


def _cmd_table(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    fmt = cmd.opt("format", "json")
    mag = st.magma
    labels = mag.labels()
    rec = {"cmd": "table", "name": st.name, "format": fmt}
    if fmt == "csv":
        rec["csv"] = _table_csv(labels, mag.table())
    else:
        rec["elements"] = labels
        rec["table"] = mag.table().tolist()
    return rec


def _cmd_classify(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    return {
        "cmd": "classify",
        "name": st.name,
        "order": st.order_of(),
        "label": st.classify_label(),
        "family": st.family_label(),
        "properties": st.classify().to_dict(),
    }


def _cmd_check(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    ident = lookup_identity(cmd.args[1])
    v = s_check_identity(st, ident)
    witness = v.witness
    if witness is not None and not isinstance(witness, tuple):
        witness = (witness,)
    cx = None
    if v.counterexample is not None:
        cx = {var: st.label_element(val) for var, val in v.counterexample.items()}
    return {
        "cmd": "check",
        "name": st.name,
        "identity": ident.name,
        "grade": v.grade,
        "checked": v.checked,
        "witness": _component_label_lists(st, witness),
        "counterexample": cx,
        "active_mask": list(v.active_mask) if v.active_mask else None,
    }


def _cmd_find(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    kind = cmd.args[1]
    mask_raw = cmd.opt("quasi")
    if mask_raw is not None:
        mask = tuple(c == "1" for c in mask_raw.split(","))
        rep = find_quasi_special(st, kind, mask)
    else:
        rep = find_special(st, kind)
    body = rep.to_dict(labeler=st.label_element)
    return {
        "cmd": "find",
        "name": st.name,
        "kind": body["kind"],
        "quasi": mask_raw is not None,
        "elements": body["elements"],
    }


def _cmd_subs(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    max_raw = cmd.opt("max")
    subs = enumerate_substructures(
        st,
        class_filter=cmd.opt("class"),
        max_size=int(max_raw) if max_raw is not None else None,
    )
    return {
        "cmd": "subs",
        "name": st.name,
        "count": len(subs),
        "substructures": [substructure_to_dict(s) for s in subs],
    }


def _cmd_ideals(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    side = cmd.opt("side", "two")
    ideals = enumerate_ideals(st, side=side)
    return {
        "cmd": "ideals",
        "name": st.name,
        "side": side,
        "count": len(ideals),
        "ideals": [substructure_to_dict(s) for s in ideals],
    }


def _cmd_smarandache(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    w = smarandache_witness(st)
    return {
        "cmd": "smarandache",
        "name": st.name,
        "grade": w.grade if w is not None else "none",
        "witnesses": _component_label_lists(
            st, w.components if w is not None else None
        ),
        "witness_classes": list(w.witness_classes) if w is not None else None,
    }


def _cmd_loopinfo(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    mode = cmd.args[1]
    mag = st.magma
    rec = {"cmd": "loopinfo", "name": st.name, "mode": mode}
    if mode == "centers":
        rec["centers"] = {
            key: _value_labels(mag, vals)
            for key, vals in loop_centers(st).items()
        }
    elif mode == "subloops":
        rec["subloops"] = [
            {
                "t": f.t,
                "base": f.base,
                "elements": _value_labels(mag, f.elements),
                "closed": f.closed,
                "subloop": f.is_subloop,
                "class": f.sclass,
            }
            for f in loop_subloop_family(st)
        ]
    elif mode == "normalizers":
        H = [_loop_value(st, tok) for tok in cmd.args[2].split(",")]
        norm = normalizers(st, H)
        rec["H"] = _value_labels(mag, H)
        rec["first"] = _value_labels(mag, norm["first"])
        rec["second"] = _value_labels(mag, norm["second"])
        rec["equal"] = norm["equal"]
    else:  # isotope
        a = _loop_value(st, cmd.args[2])
        b = _loop_value(st, cmd.args[3])
        iso = principal_isotope(st, a, b)
        rec["a"] = mag.label(a)
        rec["b"] = mag.label(b)
        rec["elements"] = iso.labels()
        rec["table"] = iso.table().tolist()
    return rec


def _parse_ranges(spec: str | None) -> dict | None:
    if spec is None:
        return None
    out = {}
    for pair in spec.split(","):
        key, _, bounds = pair.partition("=")
        lo, _, hi = bounds.partition("..")
        out[key] = (int(lo), int(hi))
    return out


def _cmd_audit(cmd: Command, env: dict) -> dict:
    rep = run_audit(cmd.args[0], _parse_ranges(cmd.opt("range")))
    return {"cmd": "audit", **rep.to_dict()}


def _cmd_export(cmd: Command, env: dict) -> dict:
    st = _lookup(env, cmd.args[0])
    path = cmd.args[1]
    fmt = "json" if path.endswith(".json") else "csv"
    size = export_table(st, fmt, path)
    return {
        "cmd": "export",
        "name": st.name,
        "path": path,
        "format": fmt,
        "bytes": size,
    }


_DISPATCH = {
    "table": _cmd_table,
    "classify": _cmd_classify,
    "check": _cmd_check,
    "find": _cmd_find,
    "subs": _cmd_subs,
    "ideals": _cmd_ideals,
    "smarandache": _cmd_smarandache,
    "loopinfo": _cmd_loopinfo,
    "audit": _cmd_audit,
    "export": _cmd_export,
}


def execute(script: Script, max_order: int | None = None) -> RunResult:
    """Run statements in order; stop at the first error with its line."""
    cap = max_order if max_order is not None else max_order_cap()
    env: dict[str, Structure] = {}
    result = RunResult()
    for st in script.statements:
        try:
            if isinstance(st, Let):
                structure = _build(st.expr, st.name, env)
                _enforce_cap(structure, cap)
                env[st.name] = structure
            else:
                result.records.append(jsonable(_DISPATCH[st.verb](st, env)))
        except (IalgError, ValueError) as e:
            result.diagnostics.append(
                {
                    "line": st.line,
                    "error": type(e).__name__,
                    "message": str(e),
                }
            )
            result.status = 1
            break
    return result
