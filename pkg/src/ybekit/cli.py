"""Command-line interface: JSON in, JSON (or text) out, deterministic bytes.

Exit codes: 0 all checks passed, 1 at least one check failed (including a
violated construction hypothesis), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io_json
from .algebras import Augmentation, adjoint_bimodule, check_algebra
from .catalog import catalog_algebra, catalog_names, catalog_solutions, verify_catalog
from .constructions import (
    extract_rb_pair,
    extracted_weight_branch,
    lift_o_operator,
    semidirect_solutions,
    solutions_from_rb,
)
from .dendriform import check_dendriform, dendriform_solutions, unital_extension
from .errors import PreconditionViolated, YbeError
from .frobenius import frobenius_from_form, induced_operators, rb_bridge_suite
from .linalg import scalar_str
from .operators import (
    WeightOp,
    invariant_operator_suite,
    o_operator_residual,
    operator_form_suite,
    residual_is_zero,
    residual_witness,
    rota_baxter_residual,
)
from .report import CheckReport
from .tensors import Tensor2
from .ybe import (
    YbeInstance,
    extended_symmetrizer,
    grid_enumerate,
    invariant_symmetric_basis,
    is_invariant,
    nhacybe_residual,
    opposite_residual,
)


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _scalar(s):
    return io_json.parse_scalar(s)


def _emit(obj, fmt):
    if fmt == "json":
        print(io_json.dumps(obj))
    else:
        _emit_text(obj)


def _emit_text(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict) and "check" in obj and "passed" in obj:
        print(f"{pad}{'PASS' if obj['passed'] else 'FAIL'} {obj['check']}")
        if not obj["passed"] and obj.get("witness") is not None:
            print(f"{pad}  witness: {json.dumps(obj['witness'], sort_keys=True)}")
        for sub in obj.get("details", {}).get("subchecks", []):
            _emit_text(sub, indent + 1)
    else:
        print(f"{pad}{io_json.dumps(obj)}")


def _report_exit(rep: CheckReport, fmt) -> int:
    _emit(rep.to_json(), fmt)
    return 0 if rep.passed else 1


def _tensor3_witness(t3):
    w = t3.first_nonzero()
    if w is None:
        return None
    p, q, s, a = w
    return {"slot": [p, q, s], "value": scalar_str(a)}


def _add_common(p):
    p.add_argument("--report", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ybekit")
    groups = top.add_subparsers(dest="group", required=True)

    alg = groups.add_parser("algebra").add_subparsers(dest="cmd", required=True)
    p = alg.add_parser("check")
    p.add_argument("--algebra", required=True)
    _add_common(p)

    ybe = groups.add_parser("ybe").add_subparsers(dest="cmd", required=True)
    p = ybe.add_parser("check")
    p.add_argument("--algebra", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--mu", default="0")
    p.add_argument("--opposite", action="store_true")
    _add_common(p)
    p = ybe.add_parser("symmetrizer")
    p.add_argument("--algebra", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--mu", default="0")
    _add_common(p)
    p = ybe.add_parser("invariant-basis")
    p.add_argument("--algebra", required=True)
    _add_common(p)
    p = ybe.add_parser("enumerate")
    p.add_argument("--algebra", required=True)
    p.add_argument("--mu", default="1")
    p.add_argument("--grid", default=None, help="comma-separated values; default 0,mu")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=1 << 25)
    _add_common(p)

    op = groups.add_parser("op").add_subparsers(dest="cmd", required=True)
    p = op.add_parser("rb-check")
    p.add_argument("--algebra", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--lambda", dest="lam", default="0")
    _add_common(p)
    p = op.add_parser("o-check")
    p.add_argument("--algebra", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--module", default=None, help="bimodule JSON; adjoint if omitted")
    _add_common(p)
    p = op.add_parser("suite")
    p.add_argument("--algebra", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--mu", action="append", default=None)
    _add_common(p)

    fro = groups.add_parser("frobenius").add_subparsers(dest="cmd", required=True)
    for name in ("build", "pr", "bridge"):
        p = fro.add_parser(name)
        p.add_argument("--algebra", required=True)
        p.add_argument("--gram", required=True)
        if name in ("pr", "bridge"):
            p.add_argument("--r", required=True)
        if name == "bridge":
            p.add_argument("--mu", required=True)
            p.add_argument("--lambda", dest="lam", required=True)
        _add_common(p)

    con = groups.add_parser("construct").add_subparsers(dest="cmd", required=True)
    p = con.add_parser("from-rb")
    p.add_argument("--algebra", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    _add_common(p)
    p = con.add_parser("lift")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    _add_common(p)
    p = con.add_parser("semidirect")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    _add_common(p)
    p = con.add_parser("unitize-extract")
    p.add_argument("--algebra", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--mu", required=True)
    _add_common(p)

    den = groups.add_parser("dendriform").add_subparsers(dest="cmd", required=True)
    p = den.add_parser("check")
    p.add_argument("--dendriform", required=True)
    _add_common(p)
    p = den.add_parser("build")
    p.add_argument("--dendriform", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    _add_common(p)

    cat = groups.add_parser("catalog").add_subparsers(dest="cmd", required=True)
    p = cat.add_parser("list")
    _add_common(p)
    p = cat.add_parser("export")
    p.add_argument("--name", required=True)
    p.add_argument("--mu", default="1")
    _add_common(p)
    p = cat.add_parser("verify")
    p.add_argument("--name", required=True)
    p.add_argument("--mu", action="append", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-grid", action="store_true")
    _add_common(p)

    return top


def _cmd_algebra_check(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    return _report_exit(check_algebra(a), ns.report)


def _cmd_ybe_check(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    r = io_json.decode_tensor2(_load(ns.r))
    inst = YbeInstance(a, _scalar(ns.mu))
    res = opposite_residual(inst, r) if ns.opposite else nhacybe_residual(inst, r)
    rep = CheckReport("opposite-equation" if ns.opposite else "tensor-equation",
                      res.is_zero(), witness=_tensor3_witness(res),
                      details={"mu": scalar_str(inst.mu)})
    return _report_exit(rep, ns.report)


def _cmd_ybe_symmetrizer(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    r = io_json.decode_tensor2(_load(ns.r))
    inst = YbeInstance(a, _scalar(ns.mu))
    sbar = extended_symmetrizer(inst, r)
    inv = is_invariant(a, sbar)
    _emit({"symmetrizer": io_json.encode_tensor2(sbar),
           "invariant": inv.passed}, ns.report)
    return 0


def _cmd_ybe_invariant_basis(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    basis = invariant_symmetric_basis(a)
    _emit({"dimension": len(basis),
           "basis": [io_json.encode_tensor2(t) for t in basis]}, ns.report)
    return 0


def _cmd_ybe_enumerate(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    mu = _scalar(ns.mu)
    inst = YbeInstance(a, mu)
    values = ((0, mu) if ns.grid is None
              else tuple(_scalar(v) for v in ns.grid.split(",")))
    for sol in grid_enumerate(inst, values, budget=ns.budget, jobs=ns.jobs):
        print(io_json.dumps(io_json.encode_tensor2(sol)))
    return 0


def _cmd_op_rb_check(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    p = io_json.decode_linear_map(_load(ns.p))
    table = rota_baxter_residual(a, p, _scalar(ns.lam))
    rep = CheckReport("rota-baxter", residual_is_zero(table),
                      witness=residual_witness(table),
                      details={"weight": ns.lam})
    return _report_exit(rep, ns.report)


def _cmd_op_o_check(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    alpha = io_json.decode_linear_map(_load(ns.alpha))
    module = (adjoint_bimodule(a) if ns.module is None
              else io_json.decode_bimodule(_load(ns.module), a))
    table = o_operator_residual(a, module, alpha, WeightOp.zero())
    rep = CheckReport("weight-zero-operator", residual_is_zero(table),
                      witness=residual_witness(table))
    return _report_exit(rep, ns.report)


def _cmd_op_suite(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    r = io_json.decode_tensor2(_load(ns.r))
    reports = []
    for mu in (ns.mu or ["1"]):
        inst = YbeInstance(a, _scalar(mu))
        reports.append(operator_form_suite(inst, r))
        if is_invariant(a, extended_symmetrizer(inst, r)).passed:
            reports.append(invariant_operator_suite(inst, r))
    ok = all(rep.passed for rep in reports)
    _emit({"check": "operator-suites", "passed": ok,
           "details": {"subchecks": [rep.to_json() for rep in reports]}},
          ns.report)
    return 0 if ok else 1


def _cmd_frobenius(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    frob = frobenius_from_form(a, io_json.decode_form(_load(ns.gram), a))
    if ns.cmd == "build":
        _emit({"phi": io_json.encode_tensor2(frob.phi),
               "phi_sharp": io_json.encode_linear_map(frob.phi_sharp)},
              ns.report)
        return 0
    r = io_json.decode_tensor2(_load(ns.r))
    if ns.cmd == "pr":
        p, pt = induced_operators(frob, r)
        _emit({"p": io_json.encode_linear_map(p),
               "pt": io_json.encode_linear_map(pt)}, ns.report)
        return 0
    rep = rb_bridge_suite(frob, _scalar(ns.mu), _scalar(ns.lam), r)
    return _report_exit(rep, ns.report)


def _provenance(kind, ns, fields):
    return {"construction": kind,
            "inputs": {k: getattr(ns, k) for k in fields}}


def _cmd_construct(ns) -> int:
    a = io_json.decode_algebra(_load(ns.algebra))
    if ns.cmd == "from-rb":
        s = io_json.decode_tensor2(_load(ns.s))
        p = io_json.decode_linear_map(_load(ns.p))
        r1, r2 = solutions_from_rb(a, s, p, _scalar(ns.lam), _scalar(ns.mu))
        _emit({"r1": io_json.encode_tensor2(r1),
               "r2": io_json.encode_tensor2(r2),
               "provenance": _provenance("from-rb", ns, ("lam", "mu"))},
              ns.report)
        return 0
    if ns.cmd == "lift":
        module = io_json.decode_bimodule(_load(ns.module), a)
        alpha = io_json.decode_linear_map(_load(ns.alpha))
        lam = _scalar(ns.lam)
        lifted = lift_o_operator(a, module, alpha, lam)
        table = rota_baxter_residual(lifted.algebra, lifted.hat, lam)
        _emit({"algebra": io_json.encode_algebra(lifted.algebra),
               "hat": io_json.encode_linear_map(lifted.hat),
               "rota_baxter": residual_is_zero(table),
               "provenance": _provenance("lift", ns, ("lam",))}, ns.report)
        return 0
    if ns.cmd == "semidirect":
        module = io_json.decode_bimodule(_load(ns.module), a)
        alpha = io_json.decode_linear_map(_load(ns.alpha))
        beta = io_json.decode_linear_map(_load(ns.beta))
        out = semidirect_solutions(a, module, alpha, beta,
                                   _scalar(ns.lam), _scalar(ns.mu))
        inst = YbeInstance(out.algebra, out.mu)
        _emit({"algebra": io_json.encode_algebra(out.algebra),
               "r1": io_json.encode_tensor2(out.r1),
               "r2": io_json.encode_tensor2(out.r2),
               "s": io_json.encode_tensor2(out.s),
               "verified": nhacybe_residual(inst, out.r1).is_zero()
               and nhacybe_residual(inst, out.r2).is_zero(),
               "provenance": _provenance("semidirect", ns, ("lam", "mu"))},
              ns.report)
        return 0
    if ns.cmd == "unitize-extract":
        aug = io_json.decode_augmentation(_load(ns.eps), a)
        r = io_json.decode_tensor2(_load(ns.r))
        mu = _scalar(ns.mu)
        p, pp = extract_rb_pair(a, aug, r)
        inst = YbeInstance(a, mu)
        branch = extracted_weight_branch(inst, aug, r)
        out = {"p": io_json.encode_linear_map(p),
               "p_prime": io_json.encode_linear_map(pp),
               "weight_branch": None if branch is None else scalar_str(branch),
               "provenance": _provenance("unitize-extract", ns, ("mu",))}
        if branch is not None:
            out["rota_baxter"] = (
                residual_is_zero(rota_baxter_residual(a, p, branch))
                and residual_is_zero(rota_baxter_residual(a, pp, branch)))
        _emit(out, ns.report)
        return 0
    raise YbeError(f"unknown construct command {ns.cmd}")


def _cmd_dendriform(ns) -> int:
    d = io_json.decode_dendriform(_load(ns.dendriform))
    if ns.cmd == "check":
        return _report_exit(check_dendriform(d), ns.report)
    _, ud = unital_extension(d)
    beta = io_json.decode_linear_map(_load(ns.beta))
    out = dendriform_solutions(ud, beta, _scalar(ns.lam), _scalar(ns.mu))
    inst = YbeInstance(out.algebra, out.mu)
    _emit({"algebra": io_json.encode_algebra(out.algebra),
           "r1": io_json.encode_tensor2(out.r1),
           "r2": io_json.encode_tensor2(out.r2),
           "verified": nhacybe_residual(inst, out.r1).is_zero()
           and nhacybe_residual(inst, out.r2).is_zero(),
           "provenance": _provenance("dendriform", ns, ("lam", "mu"))},
          ns.report)
    return 0


def _cmd_catalog(ns) -> int:
    if ns.cmd == "list":
        _emit({"names": list(catalog_names())}, ns.report)
        return 0
    if ns.cmd == "export":
        entry = catalog_algebra(ns.name)
        mu = _scalar(ns.mu)
        out = {
            "name": entry.name,
            "algebra": io_json.encode_algebra(entry.algebra),
            "augmentations": [io_json.encode_augmentation(a)
                              for a in entry.augmentations],
            "forms": {k: io_json.encode_form(f.form)
                      for k, f in sorted(entry.forms.items())},
            "invariant_dimension": entry.inv_dim,
            "solutions": [
                {"name": f.name,
                 "tensor": io_json.encode_tensor2(f.tensor(mu)),
                 "symmetrizer": io_json.encode_tensor2(f.sbar_tensor(mu)),
                 "weight": scalar_str(f.weight_sign * mu),
                 "form": f.form,
                 "operator": io_json.encode_linear_map(f.q_map(mu))}
                for f in entry.families],
            "notes": list(entry.notes),
        }
        if entry.families:
            out["solution_count"] = len(catalog_solutions(ns.name, mu))
        _emit(out, ns.report)
        return 0
    if ns.cmd == "verify":
        mus = [(_scalar(m)) for m in (ns.mu or ["1"])]
        rep = verify_catalog(ns.name, mus, grid=not ns.no_grid, jobs=ns.jobs)
        return _report_exit(rep, ns.report)
    raise YbeError(f"unknown catalog command {ns.cmd}")


_DISPATCH = {
    ("algebra", "check"): _cmd_algebra_check,
    ("ybe", "check"): _cmd_ybe_check,
    ("ybe", "symmetrizer"): _cmd_ybe_symmetrizer,
    ("ybe", "invariant-basis"): _cmd_ybe_invariant_basis,
    ("ybe", "enumerate"): _cmd_ybe_enumerate,
    ("op", "rb-check"): _cmd_op_rb_check,
    ("op", "o-check"): _cmd_op_o_check,
    ("op", "suite"): _cmd_op_suite,
}


_VALUE_FLAGS = ("--mu", "--lambda", "--grid")


def _join_negative_values(argv):
    """Fold `--mu -3/5` into `--mu=-3/5` so argparse does not read the value
    as an option string."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(_join_negative_values(list(argv)))
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        handler = _DISPATCH.get((ns.group, ns.cmd))
        if handler is not None:
            return handler(ns)
        if ns.group == "frobenius":
            return _cmd_frobenius(ns)
        if ns.group == "construct":
            return _cmd_construct(ns)
        if ns.group == "dendriform":
            return _cmd_dendriform(ns)
        if ns.group == "catalog":
            return _cmd_catalog(ns)
        parser.error(f"unknown group {ns.group}")
        return 2
    except PreconditionViolated as exc:
        print(io_json.dumps({"error": "precondition-violated",
                             "equation": exc.equation,
                             "witness": exc.witness}), file=sys.stderr)
        return 1
    except (YbeError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
