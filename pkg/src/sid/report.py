"""Solver orchestration and report assembly used by the CLI."""
from __future__ import annotations

from . import blocks, oracle
from .atoms import AtomSet, atoms_from_redundancy, audit_symmetry, residuals
from .direct import try_direct
from .errors import NotApplicable, NotThreeVariables
from .formats import fmt_float as fmt
from .shannon import co_information
from .table import TOL, JointTable

METHODS = ("auto", "direct", "oracle", "formula")


def solve(table: JointTable, method: str = "auto", tol: float = TOL) -> AtomSet:
    if len(table) != 3:
        raise NotThreeVariables(f"expected 3 variables, got {len(table)}; use --group to combine")
    if method == "direct":
        atoms = try_direct(table, tol)
        if atoms is None:
            raise NotApplicable("no vanishing mutual information or conditional entropy")
        return atoms
    if method == "oracle":
        return oracle.solve_atoms_oracle(table, tol)
    if method == "formula":
        syn = blocks.synergy_formula(table, table.names[0])
        # CoI = Red - Syn
        red = syn + co_information(table, *table.names)
        return atoms_from_redundancy(table, red, method="blocks", tol=tol)
    if method == "auto":
        return try_direct(table, tol) or oracle.solve_atoms_oracle(table, tol)
    raise ValueError(f"unknown method {method!r}")


def clamp(x: float, tol: float = TOL) -> float:
    return 0.0 if -tol <= x < 0 else x


def pair_key(names, p) -> str:
    return "|".join(sorted(p, key=names.index))


def atoms_json(table: JointTable, atoms: AtomSet, tol: float = TOL) -> dict:
    names = table.names
    return {
        "variables": list(names),
        "red": clamp(atoms.red, tol),
        "un": {pair_key(names, p): clamp(v, tol) for p, v in atoms.un.items()},
        "syn": clamp(atoms.syn, tol),
        "ext": {n: clamp(atoms.ext[n], tol) for n in names},
        "method": atoms.method,
        "violations": list(atoms.violations),
        "residuals": residuals(table, atoms),
    }


def decompose(table: JointTable, method: str = "auto", tol: float = TOL) -> dict:
    """Atoms plus every cross-check: residuals, symmetry audit, block verdicts, formula."""
    atoms = solve(table, method, tol)
    out = atoms_json(table, atoms, tol)
    names = table.names

    audit = audit_symmetry(table, oracle.redundancy)
    out["audit"] = {
        "redundancy": dict(audit.redundancy),
        "discrepancy": audit.discrepancy,
    }

    verdicts = blocks.positivity_all(table)
    agree = {"syn": verdicts["syn"] == (atoms.syn > tol)}
    for p, flag in verdicts["un"].items():
        agree[f"un[{pair_key(names, p)}]"] = flag == (atoms.un[p] > tol)
    out["blocks"] = {
        "syn_positive": verdicts["syn"],
        "un_positive": {pair_key(names, p): v for p, v in verdicts["un"].items()},
        "anchor_disagreements": verdicts["disagreements"],
        "matches_atoms": agree,
    }

    formula = blocks.synergy_formula(table, names[0])
    out["formula"] = {
        "anchor": names[0],
        "syn": formula,
        "delta": formula - atoms.syn,
    }
    return out


def report_exit_code(report: dict) -> int:
    return 1 if report["violations"] else 0


def render_text(report: dict) -> str:
    names = report["variables"]
    rows = [("Red", report["red"]), ("Syn", report["syn"])]
    rows += [(f"Un({k.replace('|', ',')})", v) for k, v in sorted(report["un"].items())]
    rows += [(f"Ext({n})", report["ext"][n]) for n in names]
    lines = [f"variables: {', '.join(names)}   method: {report['method']}"]
    lines += [f"  {label:<16} {fmt(v)}" for label, v in rows]
    lines.append("residuals: " + "  ".join(f"{k}={v:.2e}" for k, v in sorted(report["residuals"].items())))
    if "audit" in report:
        reds = "  ".join(f"{t}:{fmt(v)}" for t, v in report["audit"]["redundancy"].items())
        lines.append(f"per-target redundancy: {reds}  (discrepancy {report['audit']['discrepancy']:.2e})")
    if "blocks" in report:
        b = report["blocks"]
        un = "  ".join(f"{k}:{'+' if v else '0'}" for k, v in sorted(b["un_positive"].items()))
        lines.append(f"block verdicts: syn:{'+' if b['syn_positive'] else '0'}  {un}")
        mismatch = [k for k, ok in b["matches_atoms"].items() if not ok]
        if mismatch:
            lines.append(f"  block verdicts disagree with atoms on: {', '.join(mismatch)}")
    if "formula" in report:
        lines.append(f"formula synergy (anchor {report['formula']['anchor']}): {fmt(report['formula']['syn'])}")
    if report["violations"]:
        lines.append("VIOLATIONS: " + ", ".join(report["violations"]))
    return "\n".join(lines) + "\n"
