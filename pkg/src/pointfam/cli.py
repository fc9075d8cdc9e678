"""Command-line front end.

Every subcommand reads the same parameter JSON object
{"alpha": r, "beta": r, "gamma": r, "delta": r, "theta": r, "mass": r}
and writes either a JSON object or a CSV table to standard output.
Floats are always rendered with 17 significant digits and field order is
fixed, so repeated runs are byte-identical. Exit codes: 0 on success,
1 on usage or validation errors, 2 when a verification suite fails.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__, diffraction, many_body, one_body, scattering, suites
from .core import params_from_dict
from .errors import InputError, PointFamError, UsageError


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _json_scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _json_dumps(obj, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f"{inner}{json.dumps(k)}: {_json_dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [f"{inner}{_json_dumps(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    return _json_scalar(obj)


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def _emit_object(data: dict, output: str) -> None:
    if output == "json":
        print(_json_dumps(data))
    else:
        flat = _flatten(data)
        print(",".join(flat.keys()))
        print(",".join(_csv_cell(v) for v in flat.values()))


def _flatten(data: dict, prefix: str = "") -> dict:
    flat: dict = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, (list, tuple)):
            raise InputError("this result contains a table; request --output json")
        else:
            flat[name] = value
    return flat


def _emit_table(columns: list[str], rows: list[list], output: str) -> None:
    if output == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join(_csv_cell(v) for v in row))
    else:
        print(_json_dumps({"columns": columns, "rows": [list(r) for r in rows]}))


def _parse_range(text: str) -> list[float]:
    """lo:hi:step, inclusive of lo; the upper end uses a step/2 rounding guard."""
    parts = text.split(":")
    if len(parts) != 3:
        raise InputError(f"range must be lo:hi:step, got {text!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"range must be numeric, got {text!r}") from exc
    if step <= 0.0 or hi < lo:
        raise InputError(f"range needs hi >= lo and step > 0, got {text!r}")
    count = int(math.floor((hi - lo) / step + 0.5)) + 1
    return [lo + i * step for i in range(count)]


def _load_params(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path!r} is not valid JSON: {exc}") from exc
    return params_from_dict(data)


def _load_points(path: str, n: int) -> list[list[float]]:
    rows = []
    try:
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                text = line.strip()
                if not text or text.startswith("#"):
                    continue
                cells = text.split(",")
                if line_no == 1 and any(
                    not _is_number(c) for c in cells
                ):
                    continue  # header row
                if len(cells) != n:
                    raise InputError(
                        f"{path!r} line {line_no}: expected {n} coordinates, got {len(cells)}"
                    )
                try:
                    rows.append([float(c) for c in cells])
                except ValueError as exc:
                    raise InputError(f"{path!r} line {line_no}: bad number") from exc
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc}") from exc
    if not rows:
        raise InputError(f"{path!r} contains no points")
    return rows


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pointfam",
        description=(
            "Exact bound states, scattering amplitudes, and diffraction tests "
            "for the four-parameter family of point interactions in one dimension."
        ),
    )
    parser.add_argument("--version", action="version", version=f"pointfam {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    def add(name: str, help_text: str, params: bool = True, output: str | None = None):
        p = sub.add_parser(name, help=help_text)
        if params:
            p.add_argument("--params", required=True, metavar="FILE", help="parameter JSON file")
        if output is not None:
            p.add_argument(
                "--output", choices=("json", "csv"), default=output, help="output format"
            )
        return p

    add("params-check", "validate a parameter file and echo it back", output="json")

    add("bound", "bound-state spectrum", output="json")

    p = add("scatter", "transmission/reflection sweep over wavenumbers", output="csv")
    p.add_argument("--k-range", required=True, metavar="K0:K1:STEP")

    p = sub.add_parser("phase-diagram", help="bound-state count over an (alpha, gamma) grid")
    p.add_argument("--delta", required=True, type=float)
    p.add_argument("--alpha", required=True, metavar="A0:A1:STEP")
    p.add_argument("--gamma", required=True, metavar="G0:G1:STEP")
    p.add_argument("--beta", type=float, default=None, help="required when delta = 0")
    p.add_argument("--output", choices=("json", "csv"), default="csv")

    p = add("nbody", "N-body bound states", output="json")
    p.add_argument("--n", required=True, type=int)

    p = add("nbody-eval", "evaluate an N-body state on points from a CSV file", output="csv")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--state-index", required=True, type=int, help="0 = ground state")
    p.add_argument("--points", required=True, metavar="FILE")

    p = add("diffraction", "outgoing ray amplitudes at one (k, phi)", output="json")
    p.add_argument("--k", required=True, type=float)
    p.add_argument("--phi", required=True, type=float)
    p.add_argument(
        "--middle-reflection",
        choices=("minus", "plus"),
        default="minus",
        help="incidence suffix of the middle reflection on the transmitted two-segment path",
    )

    p = add("diffraction-scan", "max diffraction residual over a quasi-random sweep", output="json")
    p.add_argument("--samples", required=True, type=int)
    p.add_argument("--middle-reflection", choices=("minus", "plus"), default="minus")

    p = sub.add_parser(
        "verify", help="run first-principles verification suites (exit 2 on failure)"
    )
    p.add_argument(
        "--suite",
        required=True,
        choices=suites.SUITE_NAMES + ("all",),
    )

    p = sub.add_parser(
        "mcguire",
        help=(
            "reference decay constant and energy for the attractive contact "
            "potential with bare pair strength g0; for the canonical families, "
            "'delta' takes beta = -g and 'anti_delta' takes beta = +g"
        ),
    )
    p.add_argument("--g0", required=True, type=float)
    p.add_argument("--mass", required=True, type=float)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--output", choices=("json", "csv"), default="json")

    return parser


def _cmd_params_check(args) -> int:
    params = _load_params(args.params)
    _emit_object(params.to_dict(), args.output)
    return 0


def _cmd_bound(args) -> int:
    params = _load_params(args.params)
    states = one_body.bound_spectrum(params)
    rows = [
        {
            "kappa": st.kappa,
            "energy": st.energy,
            "eta_re": st.eta.real,
            "eta_im": st.eta.imag,
        }
        for st in states
    ]
    if args.output == "json":
        print(_json_dumps({"states": rows}))
    else:
        columns = ["kappa", "energy", "eta_re", "eta_im"]
        _emit_table(columns, [[r[c] for c in columns] for r in rows], "csv")
    return 0


def _cmd_scatter(args) -> int:
    params = _load_params(args.params)
    columns = [
        "k", "|T|^2", "|R|^2",
        "re(T+)", "im(T+)", "re(R+)", "im(R+)", "re(R-)", "im(R-)",
    ]
    rows = []
    for k in _parse_range(args.k_range):
        if k <= 0.0:
            raise InputError("k-range must stay strictly positive")
        amps = scattering.amplitudes(params, k)
        rows.append(
            [
                k,
                abs(amps.t_plus) ** 2,
                abs(amps.r_plus) ** 2,
                amps.t_plus.real,
                amps.t_plus.imag,
                amps.r_plus.real,
                amps.r_plus.imag,
                amps.r_minus.real,
                amps.r_minus.imag,
            ]
        )
    _emit_table(columns, rows, args.output)
    return 0


def _cmd_phase_diagram(args) -> int:
    alphas = _parse_range(args.alpha)
    gammas = _parse_range(args.gamma)
    rows = []
    for alpha in alphas:
        for gamma in gammas:
            count = one_body.phase_diagram_count(alpha, gamma, args.delta, args.beta)
            rows.append([alpha, gamma, count])
    _emit_table(["alpha", "gamma", "count"], rows, args.output)
    return 0


def _cmd_nbody(args) -> int:
    params = _load_params(args.params)
    states = many_body.nbody_bound_states(params, args.n)
    rows = [
        {
            "kappa": st.kappa,
            "energy": st.energy,
            "eta_re": st.eta.real,
            "eta_im": st.eta.imag,
            "c_even_re": st.c_even.real,
            "c_even_im": st.c_even.imag,
            "c_odd_re": st.c_odd.real,
            "c_odd_im": st.c_odd.imag,
            "symmetry": many_body.symmetry_class(st),
        }
        for st in states
    ]
    if args.output == "json":
        print(_json_dumps({"states": rows}))
    else:
        columns = list(rows[0].keys()) if rows else [
            "kappa", "energy", "eta_re", "eta_im",
            "c_even_re", "c_even_im", "c_odd_re", "c_odd_im", "symmetry",
        ]
        _emit_table(columns, [[r[c] for c in columns] for r in rows], "csv")
    return 0


def _cmd_nbody_eval(args) -> int:
    params = _load_params(args.params)
    states = many_body.nbody_bound_states(params, args.n)
    if not 0 <= args.state_index < len(states):
        raise InputError(
            f"state index {args.state_index} out of range; {len(states)} state(s) available"
        )
    state = states[args.state_index]
    points = _load_points(args.points, args.n)
    columns = [f"x{i}" for i in range(1, args.n + 1)] + ["re(psi)", "im(psi)"]
    rows = []
    for pt in points:
        value = many_body.eval_nbody_wavefunction(state, pt)
        rows.append(list(pt) + [value.real, value.imag])
    _emit_table(columns, rows, args.output)
    return 0


def _cmd_diffraction(args) -> int:
    params = _load_params(args.params)
    kin = diffraction.ray_kinematics(args.k, args.phi)
    report = diffraction.outgoing_amplitudes(params, kin, args.middle_reflection)
    _emit_object(
        {
            "k": kin.k,
            "phi": kin.phi,
            "k1": kin.k1,
            "k2": kin.k2,
            "k3": kin.k3,
            "amp_two_path_re": report.amp_two_path.real,
            "amp_two_path_im": report.amp_two_path.imag,
            "amp_one_path_re": report.amp_one_path.real,
            "amp_one_path_im": report.amp_one_path.imag,
            "residual_re": report.residual.real,
            "residual_im": report.residual.imag,
            "residual_norm": report.residual_norm,
            "middle_reflection": args.middle_reflection,
        },
        args.output,
    )
    return 0


def _cmd_diffraction_scan(args) -> int:
    params = _load_params(args.params)
    max_residual, verdict = diffraction.no_diffraction_scan(
        params, args.samples, args.middle_reflection
    )
    _emit_object(
        {
            "samples": args.samples,
            "max_residual": max_residual,
            "verdict": verdict,
            "middle_reflection": args.middle_reflection,
        },
        args.output,
    )
    return 0


def _cmd_verify(args) -> int:
    reports, notes = suites.run_suite(args.suite)
    name_width = max(len(r.check_name) for r in reports)
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        print(
            f"{rep.check_name:<{name_width}}  max={rep.max_residual:.3e}  "
            f"tol={rep.tolerance:.1e}  n={rep.samples:<6d} {status}"
        )
    all_passed = all(r.passed for r in reports)
    payload = {
        "suite": args.suite,
        "checks": [
            {
                "check_name": r.check_name,
                "max_residual": r.max_residual,
                "samples": r.samples,
                "passed": r.passed,
                "tolerance": r.tolerance,
            }
            for r in reports
        ],
        "notes": list(notes),
        "all_passed": all_passed,
    }
    print(_json_dumps(payload))
    return 0 if all_passed else 2


def _cmd_mcguire(args) -> int:
    kappa, energy = many_body.mcguire_reference(args.g0, args.mass, args.n)
    _emit_object(
        {
            "g0": args.g0,
            "mass": args.mass,
            "n": args.n,
            "kappa": kappa,
            "energy": energy,
            "g": many_body.coupling_from_pair_strength(args.g0),
            "g_mcguire": -args.g0 * math.sqrt(2.0),
            "g_cd": -args.g0,
        },
        args.output,
    )
    return 0


_HANDLERS = {
    "params-check": _cmd_params_check,
    "bound": _cmd_bound,
    "scatter": _cmd_scatter,
    "phase-diagram": _cmd_phase_diagram,
    "nbody": _cmd_nbody,
    "nbody-eval": _cmd_nbody_eval,
    "diffraction": _cmd_diffraction,
    "diffraction-scan": _cmd_diffraction_scan,
    "verify": _cmd_verify,
    "mcguire": _cmd_mcguire,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"pointfam: usage error: {exc}", file=sys.stderr)
        return 1
    if args.command is None:
        parser.print_help()
        return 1
    try:
        return _HANDLERS[args.command](args)
    except PointFamError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
