"""Command-line front end.

Subcommands:

  basis        amplitudes of the four basis states for one (z, phi, theta)
  verify       run every numeric proof obligation for one parameter triple
  sweep        aggregate the verify checks over a parameter grid
  table1       unit vectors and reduced states for z in {1/sqrt3, 1/sqrt2, 1}
  concurrence  CSV grid of the closed-form concurrence plus the a=sqrt(3) slice
  circuit      preparation fidelities and detection outcome matrix

All angles are radians.  Output is deterministic: fixed field order and
17-significant-digit floats.  Exit codes: 0 success, 1 invariant failure,
2 parameter error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import circuits, ejm, states
from .ejm import EjmParams
from .states import ParameterRangeError

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

DEFAULT_Z = 1.0 / SQRT3
DEFAULT_PHI = math.pi / 4
DEFAULT_THETA = math.pi / 3

# pass/fail tolerances; fixed contract, not affected by EJM_TOLERANCE
TOL_ALG = 1e-12
TOL_PATH = 1e-11
TOL_TRIG = 1e-10

# Reference blocks: (z, phi) with, per state index, the unit vector m_i and
# the sign pattern of the side-first reduced vector (1/2) cos(theta) * signs.
TABLE1_BLOCKS = [
    (
        1.0 / SQRT3,
        math.pi / 4,
        [
            ((1, 1, 1), 1.0 / SQRT3),
            ((-1, 1, -1), 1.0 / SQRT3),
            ((-1, -1, 1), 1.0 / SQRT3),
            ((1, -1, -1), 1.0 / SQRT3),
        ],
    ),
    (
        1.0 / SQRT2,
        math.pi / 2,
        [
            ((0, 1, 1), 1.0 / SQRT2),
            ((-1, 0, -1), 1.0 / SQRT2),
            ((0, -1, 1), 1.0 / SQRT2),
            ((1, 0, -1), 1.0 / SQRT2),
        ],
    ),
    (
        1.0,
        3 * math.pi / 4,
        [
            ((0, 0, 1), 1.0),
            ((0, 0, -1), 1.0),
            ((0, 0, 1), 1.0),
            ((0, 0, -1), 1.0),
        ],
    ),
]
REDUCED_SIGNS = [(1, 1, 1), (-1, 1, -1), (-1, -1, 1), (1, -1, -1)]


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _emit(rows, header, args):
    """Write a table as CSV or JSON (list of objects) per the format flag."""
    if args.format == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row))
        text = "\n".join(lines) + "\n"
    else:
        objs = [
            {k: (float(fmt(v)) if isinstance(v, float) else v) for k, v in zip(header, row)}
            for row in rows
        ]
        text = json.dumps(objs, indent=2) + "\n"
    _write(text, args)


def _emit_report(report: dict, args):
    if args.format == "csv":
        lines = ["key,value"]
        for k, v in report.items():
            lines.append(f"{k},{fmt(v) if isinstance(v, float) else v}")
        text = "\n".join(lines) + "\n"
    else:
        clean = {k: (float(fmt(v)) if isinstance(v, float) else v) for k, v in report.items()}
        text = json.dumps(clean, indent=2) + "\n"
    _write(text, args)


def _write(text: str, args):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> EjmParams:
    return EjmParams(z=args.z, phi=args.phi, theta=args.theta)


def cmd_basis(args) -> int:
    p = _params(args)
    b = ejm.build_basis(p)
    rows = []
    labels = ("00", "01", "10", "11")
    for i, s in enumerate(b.states):
        for k, lab in enumerate(labels):
            rows.append([i, lab, float(s[k].real), float(s[k].imag), p.phi_z, p.theta0])
    _emit(rows, ["state", "basis", "re", "im", "phi_z", "theta0"], args)
    return 0


def _verify_one(p: EjmParams) -> dict:
    b = ejm.build_basis(p)
    kets = ejm.basis_from_kets(p)
    pzf = ejm.basis_phi_z_form(p)

    gram_dev = float(np.abs(ejm.gram_matrix(b) - np.eye(4)).max())
    gram_closed_dev = float(np.abs(ejm.gram_matrix(b) - ejm.gram_closed(b)).max())
    completeness = ejm.completeness_residual(b)
    path_dev = max(
        float(np.abs(np.array(b.states) - np.array(kets.states)).max()),
        float(np.abs(np.array(b.states) - np.array(pzf.states)).max()),
    )

    tet = ejm.reduced_tetrahedron(b)
    antisym_dev = float(np.abs(tet[:, 0] + tet[:, 1]).max())
    reduced_closed_dev = float(np.abs(tet[:, 0] - ejm.reduced_tetrahedron_closed(b)).max())
    conc_dev = max(
        abs(states.concurrence_numeric(s) - states.concurrence_closed(SQRT3, p.theta))
        for s in b.states
    )

    report = {
        "z": p.z,
        "phi": p.phi,
        "theta": p.theta,
        "gram_dev": gram_dev,
        "gram_closed_dev": gram_closed_dev,
        "completeness_residual": completeness,
        "path_agreement_dev": path_dev,
        "antisymmetry_dev": antisym_dev,
        "reduced_closed_dev": reduced_closed_dev,
        "concurrence_dev": float(conc_dev),
    }
    try:
        geo = ejm.tetrahedron_geometry_check(tet[:, 0], p.theta)
        report["geometry"] = "ok"
        report["modulus_dev"] = geo.modulus_dev
        report["pairwise_dev"] = geo.pairwise_dev
    except ejm.DegenerateGeometryError:
        report["geometry"] = "degenerate"
    return report


def _verify_pass(report: dict) -> bool:
    ok = (
        report["gram_dev"] < TOL_ALG
        and report["gram_closed_dev"] < TOL_ALG
        and report["completeness_residual"] < TOL_ALG
        and report["path_agreement_dev"] < TOL_PATH
        and report["antisymmetry_dev"] < TOL_ALG
        and report["reduced_closed_dev"] < TOL_TRIG
        and report["concurrence_dev"] < TOL_TRIG
    )
    if report.get("geometry") == "ok" and report["theta"] <= math.pi / 2 - 0.05:
        ok = ok and report["modulus_dev"] < TOL_TRIG and report["pairwise_dev"] < TOL_TRIG
    return ok


def cmd_verify(args) -> int:
    p = _params(args)
    report = _verify_one(p)
    report["report_tolerance"] = float(os.environ.get("EJM_TOLERANCE", TOL_TRIG))
    ok = _verify_pass(report)
    report["pass"] = bool(ok)
    _emit_report(report, args)
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    n = args.grid
    zs = np.linspace(1.0 / SQRT3, 1.0, n)
    phis = np.linspace(-math.pi, math.pi, n)
    thetas = np.linspace(0.0, math.pi / 2, n)
    agg: dict = {}
    ok = True
    for z in zs:
        for phi in phis:
            for theta in thetas:
                rep = _verify_one(EjmParams(z=float(z), phi=float(phi), theta=float(theta)))
                ok = ok and _verify_pass(rep)
                for k, v in rep.items():
                    if isinstance(v, float) and k.endswith(("_dev", "residual")):
                        agg[k] = max(agg.get(k, 0.0), v)
    agg["grid"] = n
    agg["points"] = int(n**3)
    agg["pass"] = bool(ok)
    _emit_report(agg, args)
    return 0 if ok else 1


def cmd_table1(args) -> int:
    theta = args.theta
    rows = []
    worst = 0.0
    for z, phi, entries in TABLE1_BLOCKS:
        p = EjmParams(z=z, phi=phi, theta=theta)
        b = ejm.build_basis(p)
        assign = ejm.ParamAssignment.from_params(p)
        tet = ejm.reduced_tetrahedron(b)
        for i in range(4):
            m = states.unit_vector_m(assign.zs[i], assign.phis[i])
            expected_m = np.array(entries[i][0], dtype=float) * entries[i][1]
            expected_r = 0.5 * math.cos(theta) * np.array(REDUCED_SIGNS[i], dtype=float)
            worst = max(
                worst,
                float(np.abs(m - expected_m).max()),
                float(np.abs(tet[i, 0] - expected_r).max()),
            )
            rows.append(
                [
                    float(z),
                    float(phi),
                    p.phi_z,
                    i,
                    float(assign.zs[i]),
                    float(assign.phis[i]),
                    float(m[0]),
                    float(m[1]),
                    float(m[2]),
                    float(tet[i, 0, 0]),
                    float(tet[i, 0, 1]),
                    float(tet[i, 0, 2]),
                ]
            )
    header = ["z", "phi", "phi_z", "i", "z_i", "phi_i", "m_x", "m_y", "m_z", "r_x", "r_y", "r_z"]
    _emit(rows, header, args)
    return 0 if worst < TOL_TRIG else 1


def cmd_concurrence(args) -> int:
    n = args.grid
    rows = []
    for a in np.linspace(0.0, 2.0, n):
        for theta in np.linspace(0.0, math.pi / 2, n):
            rows.append(["grid", float(a), float(theta), states.concurrence_closed(a, theta)])
    slice_vals = []
    for theta in np.linspace(0.0, math.pi / 2, n):
        c = states.concurrence_closed(SQRT3, theta)
        slice_vals.append(c)
        rows.append(["slice", SQRT3, float(theta), c])
    _emit(rows, ["kind", "a", "theta", "concurrence"], args)
    ok = abs(min(slice_vals) - 0.5) < TOL_ALG and abs(max(slice_vals) - 1.0) < TOL_ALG
    return 0 if ok else 1


def cmd_circuit(args) -> int:
    p = _params(args)
    prep = circuits.prep_circuit(p)
    detect = circuits.detect_circuit(p)
    if args.dump:
        _write(prep.dumps() + "\n" + detect.dumps(), args)
        return 0

    b = ejm.build_basis(p)
    ket00 = np.array([1, 0, 0, 0], dtype=complex)
    psi0 = circuits.apply(prep, ket00)
    u1 = circuits.local_unitary_u1(p.phi_prime)
    u2 = circuits.local_unitary_u2()
    prepared = [psi0, u1 @ psi0, u2 @ psi0, u2 @ u1 @ psi0]
    fidelities = [abs(np.vdot(b.states[i], prepared[i])) for i in range(4)]

    perm = np.zeros((4, 4))
    for i, t in enumerate(circuits.DETECTION_OUTCOMES):
        perm[i, t] = 1.0
    outcome = np.array([circuits.outcome_probabilities(circuits.apply(detect, s)) for s in b.states])
    perm_dev = float(np.abs(outcome - perm).max())

    report = {"z": p.z, "phi": p.phi, "theta": p.theta, "phi_prime": p.phi_prime}
    for i in range(4):
        report[f"prep_fidelity_{i}"] = float(fidelities[i])
    for i in range(4):
        for k, lab in enumerate(("00", "01", "10", "11")):
            report[f"p_{i}_{lab}"] = float(outcome[i, k])
    report["permutation_dev"] = perm_dev

    if abs(circuits._base_params(p) - math.pi / 4) < 1e-12:
        dev = circuits.global_phase_deviation(
            detect.unitary(), circuits.detect_circuit(p, include_controlled_ry=False).unitary()
        )
        report["bsm_equivalence_dev"] = dev
        report["bsm_equivalence"] = "pass" if dev < TOL_TRIG else "fail"

    ok = perm_dev < TOL_TRIG and all(f >= 1.0 - TOL_TRIG for f in fidelities)
    report["pass"] = bool(ok)
    _emit_report(report, args)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ejm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--z", type=float, default=DEFAULT_Z)
        sp.add_argument("--phi", type=float, default=DEFAULT_PHI)
        sp.add_argument("--theta", type=float, default=DEFAULT_THETA)
        sp.add_argument("--grid", type=int, default=6)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", default=None)
        sp.add_argument("--dump", action="store_true")
        sp.set_defaults(func=func)
        return sp

    add("basis", cmd_basis, "amplitudes of the four basis states")
    add("verify", cmd_verify, "numeric proof obligations for one triple")
    add("sweep", cmd_sweep, "verify checks aggregated over a grid")
    add("table1", cmd_table1, "unit vectors and reduced states for reference z values")
    add("concurrence", cmd_concurrence, "closed-form concurrence grid and sqrt(3) slice")
    add("circuit", cmd_circuit, "preparation fidelities and detection outcomes")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("sweep", "concurrence") and args.grid < 2:
        print("error: --grid must be >= 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ParameterRangeError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
