"""Command-line front end.

Subcommands: sweep (gap grid -> CSV + JSON metadata sidecar), energy (single
value, JSON to stdout), validate (geometry and thin-plate report), materials
(list/show the material table, optionally merged with a JSON config file).

Exit codes: 0 ok, 2 usage, 3 physics precondition or non-convergence,
4 config-file problem. Flag values carrying a length must be unit-suffixed
(0.1um, 100nm); bare numbers are rejected. CSV bodies are byte-deterministic
for identical flags; timestamps only ever appear in JSON metadata.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import shlex
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from .analysis import SweepConfig, SweepTable, run_sweep
from .casimir import (
    CODATA,
    NTLO,
    PFA,
    EnergyModel,
    arc_energy,
    parallel_plate_energy_density,
    parallel_plate_pressure,
    scaled_ntlo,
    sphere_plate_energy,
    sphere_plate_force,
)
from .elasticity import Material, builtin_materials, material_by_name, thin_plate_check
from .errors import (
    ArcPlateError,
    MaterialConfigError,
    MaterialNotFoundError,
)
from .geometry import ArcGeometry
from .quadrature import QuadratureSpec

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PHYSICS = 3
EXIT_CONFIG = 4

_UNITS = {
    "pm": 1e-12,
    "nm": 1e-9,
    "um": 1e-6,
    "µm": 1e-6,
    "mm": 1e-3,
    "cm": 1e-2,
    "m": 1.0,
}
_LENGTH_RE = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([a-zA-Zµ]+)$")

# CSV column tokens for the builtin materials; anything else gets its
# lowercased name with non-alphanumerics collapsed to underscores.
_MATERIAL_KEYS = {"gold": "au", "silver": "ag"}


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def parse_length(text: str) -> float:
    """'0.1um' -> 1e-7. Bare numbers are an error: units must be explicit."""
    match = _LENGTH_RE.match(text.strip())
    if match is None:
        raise argparse.ArgumentTypeError(
            f"length {text!r} must be a number with a unit suffix "
            f"({', '.join(sorted(set(_UNITS), key=len))}), e.g. 0.1um"
        )
    number, unit = match.groups()
    if unit not in _UNITS:
        raise argparse.ArgumentTypeError(
            f"unknown length unit {unit!r} in {text!r}; "
            f"use one of {', '.join(sorted(set(_UNITS), key=len))}"
        )
    return float(number) * _UNITS[unit]


def parse_model(token: str) -> EnergyModel:
    t = token.strip().lower()
    if t == "pfa":
        return PFA
    if t == "ntlo":
        return NTLO
    if t.startswith("scaled-ntlo:"):
        raw = t.split(":", 1)[1]
        try:
            eps = float(raw)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"bad epsilon {raw!r} in model {token!r}"
            ) from None
        try:
            return scaled_ntlo(eps)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    raise argparse.ArgumentTypeError(
        f"unknown model {token!r}; use pfa, ntlo, or scaled-ntlo:<eps>"
    )


def parse_models(text: str) -> tuple[EnergyModel, ...]:
    return tuple(parse_model(tok) for tok in text.split(","))


_REQUIRED_FIELDS = ("name", "youngs_modulus_pa", "poisson_ratio")
_OPTIONAL_FIELDS = ("sigma_e_pa", "sigma_nu")


def load_materials(path: str) -> list[Material]:
    """Parse a materials JSON file: an array of objects with the fields
    name, youngs_modulus_pa, poisson_ratio and optional sigma_e_pa, sigma_nu.
    Unknown fields are rejected so typos cannot silently fall back to
    builtin values."""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MaterialConfigError(f"cannot read materials file {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MaterialConfigError(f"materials file {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise MaterialConfigError(f"materials file {path} must be a JSON array of objects")
    return [_material_from_entry(entry, i, path) for i, entry in enumerate(doc)]


def _material_from_entry(entry: object, index: int, path: str) -> Material:
    where = f"{path}, entry {index}"
    if not isinstance(entry, dict):
        raise MaterialConfigError(f"{where}: expected an object")
    unknown = sorted(set(entry) - set(_REQUIRED_FIELDS) - set(_OPTIONAL_FIELDS))
    if unknown:
        raise MaterialConfigError(f"{where}: unknown field(s) {unknown}")
    missing = sorted(set(_REQUIRED_FIELDS) - set(entry))
    if missing:
        raise MaterialConfigError(f"{where}: missing field(s) {missing}")
    name = entry["name"]
    if not isinstance(name, str) or not name.strip():
        raise MaterialConfigError(f'{where}: "name" must be a non-empty string')

    def number(key: str) -> float | None:
        if key not in entry:
            return None
        value = entry[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MaterialConfigError(f'{where} ({name}): "{key}" must be a number')
        if not math.isfinite(float(value)):
            raise MaterialConfigError(f'{where} ({name}): "{key}" must be finite')
        return float(value)

    e_pa = number("youngs_modulus_pa")
    nu = number("poisson_ratio")
    if e_pa is None or e_pa <= 0.0:
        raise MaterialConfigError(
            f'{where} ({name}): "youngs_modulus_pa" must be > 0, got {e_pa}'
        )
    if nu is None or not (-1.0 < nu < 1.0):
        raise MaterialConfigError(
            f'{where} ({name}): "poisson_ratio" must lie in (-1, 1), got {nu}'
        )
    sigma_e = number("sigma_e_pa")
    sigma_nu = number("sigma_nu")
    for key, value in (("sigma_e_pa", sigma_e), ("sigma_nu", sigma_nu)):
        if value is not None and value < 0.0:
            raise MaterialConfigError(f'{where} ({name}): "{key}" must be >= 0')
    return Material(
        name=name.strip(),
        youngs_modulus=e_pa,
        poisson_ratio=nu,
        sigma_e=sigma_e,
        sigma_nu=sigma_nu,
    )


def merged_materials(file_path: str | None) -> list[Material]:
    """Builtins overlaid with the config file; file wins on name collision."""
    pool = {m.name.lower(): m for m in builtin_materials()}
    if file_path:
        for mat in load_materials(file_path):
            pool[mat.name.lower()] = mat
    return list(pool.values())


def resolve_materials(names_csv: str, file_path: str | None) -> tuple[Material, ...]:
    pool = merged_materials(file_path)
    return tuple(material_by_name(name, pool) for name in names_csv.split(","))


def material_key(name: str) -> str:
    builtin = _MATERIAL_KEYS.get(name.lower())
    if builtin:
        return builtin
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_") or "material"


def _fnum(x: float) -> str:
    # repr round-trips bit-exactly and always carries >= 6 significant digits
    return repr(float(x))


def sweep_csv(table: SweepTable) -> str:
    cfg = table.config
    ref = cfg.reference_model()
    pair = cfg.resolved_comparison()
    header = ["gap_m"]
    header += [f"u_{model.key}_J_per_m" for model in cfg.models]
    header += [f"t_max_{material_key(mat.name)}_m" for mat in cfg.materials]
    if pair is not None:
        header.append("delta")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in table.rows:
        cells = [_fnum(row.gap)]
        cells += [_fnum(row.energies[model.key]) for model in cfg.models]
        cells += [_fnum(row.thickness[(mat.name, ref.key)]) for mat in cfg.materials]
        if pair is not None:
            cells.append(_fnum(row.delta))
        writer.writerow(cells)
    return buf.getvalue()


def _quadrature_meta(spec: QuadratureSpec) -> dict:
    return {
        "method": spec.method,
        "rtol": spec.rtol,
        "atol": spec.atol,
        "max_subdivisions": spec.max_subdivisions,
        "gauss_order": spec.gauss_order,
    }


def make_record(
    argv: Sequence[str],
    rows: list[dict],
    geometry: dict | None,
    spec: QuadratureSpec | None,
    extra_metadata: dict | None = None,
) -> dict:
    metadata: dict = {
        "constants": {"hbar_J_s": CODATA.hbar, "c_m_per_s": CODATA.c},
    }
    if spec is not None:
        metadata["quadrature"] = _quadrature_meta(spec)
    if geometry is not None:
        metadata["geometry"] = geometry
    if extra_metadata:
        metadata.update(extra_metadata)
    metadata["timestamp_utc"] = datetime.now(timezone.utc).isoformat()
    return {
        "schema_version": SCHEMA_VERSION,
        "command": shlex.join(["arcplate", *argv]),
        "rows": rows,
        "metadata": metadata,
    }


def _material_dict(mat: Material) -> dict:
    d = {
        "name": mat.name,
        "youngs_modulus_pa": mat.youngs_modulus,
        "poisson_ratio": mat.poisson_ratio,
    }
    if mat.sigma_e is not None:
        d["sigma_e_pa"] = mat.sigma_e
    if mat.sigma_nu is not None:
        d["sigma_nu"] = mat.sigma_nu
    return d


def _sidecar_rows(table: SweepTable) -> list[dict]:
    cfg = table.config
    rows = []
    for row in table.rows:
        d: dict = {"gap_m": row.gap}
        for model in cfg.models:
            d[f"u_{model.key}_J_per_m"] = row.energies[model.key]
        for mat in cfg.materials:
            for model in cfg.models:
                d[f"t_max_{material_key(mat.name)}_{model.key}_m"] = row.thickness[
                    (mat.name, model.key)
                ]
        if row.delta is not None:
            d["delta"] = row.delta
        rows.append(d)
    return rows


def _quadrature_from(args: argparse.Namespace) -> QuadratureSpec:
    return QuadratureSpec(
        method=args.quad_method,
        rtol=args.quad_rtol,
        atol=args.quad_atol,
        max_subdivisions=args.quad_max_subdivisions,
        gauss_order=args.quad_order,
    )


def cmd_sweep(args: argparse.Namespace, argv: list[str]) -> int:
    if args.gap_min > args.gap_max:
        raise _CliFailure(EXIT_USAGE, "gap-min exceeds gap-max")
    materials = resolve_materials(args.materials, args.materials_file)
    config = SweepConfig(
        gap_min=args.gap_min,
        gap_max=args.gap_max,
        points=args.points,
        radius=args.r,
        half_span=args.span / 2.0,
        materials=materials,
        models=args.models,
        quadrature=_quadrature_from(args),
    )
    table = run_sweep(config)
    text = sweep_csv(table)
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.out)
    out.write_text(text, encoding="utf-8")
    sidecar = out.with_name(out.stem + ".meta.json")
    record = make_record(
        argv,
        _sidecar_rows(table),
        geometry={
            "radius_m": config.radius,
            "half_span_m": config.half_span,
            "gap_min_m": config.gap_min,
            "gap_max_m": config.gap_max,
            "points": config.points,
            "arc_length_m": table.arc_length,
        },
        spec=config.quadrature,
        extra_metadata={
            "materials": [_material_dict(m) for m in config.materials],
            "models": [m.label for m in config.models],
            "csv_file": out.name,
        },
    )
    sidecar.write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")

    ref = config.reference_model()

    def show(row) -> str:
        cells = [f"gap {row.gap:.4g} m"]
        cells += [
            f"t_max[{mat.name}, {ref.label}] = {row.thickness[(mat.name, ref.key)]:.4g} m"
            for mat in config.materials
        ]
        return "; ".join(cells)

    print(f"wrote {len(table.rows)} rows to {out} (metadata: {sidecar})")
    print("first: " + show(table.rows[0]))
    print("last:  " + show(table.rows[-1]))
    return EXIT_OK


_QUANTITIES = {
    "arc": ("energy",),
    "parallel": ("pressure", "energy-density"),
    "sphere": ("energy", "force"),
}


def cmd_energy(args: argparse.Namespace, argv: list[str]) -> int:
    quantity = args.quantity or _QUANTITIES[args.geometry][0]
    if quantity not in _QUANTITIES[args.geometry]:
        raise _CliFailure(
            EXIT_USAGE,
            f"--quantity {quantity} not available for geometry {args.geometry}; "
            f"choose from {', '.join(_QUANTITIES[args.geometry])}",
        )
    spec = _quadrature_from(args)
    if args.geometry == "arc":
        geom = ArcGeometry(radius=args.r, half_span=args.span / 2.0, gap=args.gap)
        line = arc_energy(geom, args.model, spec)
        rows = [
            {
                "kind": "arc",
                "model": line.model.label,
                "value_J_per_m": line.value,
                "quadrature_error_J_per_m": line.quadrature_error,
            }
        ]
        geometry = {
            "radius_m": geom.radius,
            "half_span_m": geom.half_span,
            "gap_m": geom.gap,
        }
    elif args.geometry == "parallel":
        if quantity == "pressure":
            rows = [{"kind": "parallel", "value_Pa": parallel_plate_pressure(args.gap)}]
        else:
            rows = [
                {
                    "kind": "parallel",
                    "value_J_per_m2": parallel_plate_energy_density(args.gap),
                }
            ]
        geometry = {"gap_m": args.gap}
    else:
        if quantity == "energy":
            rows = [{"kind": "sphere", "value_J": sphere_plate_energy(args.r, args.gap)}]
        else:
            rows = [{"kind": "sphere", "value_N": sphere_plate_force(args.r, args.gap)}]
        geometry = {"radius_m": args.r, "gap_m": args.gap}
    rows[0]["quantity"] = quantity
    record = make_record(argv, rows, geometry, spec)
    print(json.dumps(record, indent=2))
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    # geometry construction itself raises on contact or gap/radius >= 1;
    # main() maps those to exit 3 with the violated condition in the message
    geom = ArcGeometry(radius=args.r, half_span=args.span / 2.0, gap=args.gap)
    report = geom.validate_pfa()
    span_b = args.span_b if args.span_b is not None else args.span
    thin = thin_plate_check(args.thickness, args.span, span_b)
    print(
        f"geometry: radius {geom.radius:.4g} m, half-span {geom.half_span:.4g} m, "
        f"gap {geom.gap:.4g} m"
    )
    print(f"pfa: gap/radius = {report.ratio:.4g}, status = {report.status}")
    print(
        f"contact: margin = {report.contact_margin:.4g} m "
        f"(gap minus sagitta {geom.sagitta:.4g} m)"
    )
    print(
        f"thin-plate: t/a = {thin.ratio_a:.4g} ({'ok' if thin.ok_a else 'VIOLATED'}), "
        f"t/b = {thin.ratio_b:.4g} ({'ok' if thin.ok_b else 'VIOLATED'}), "
        f"overall {'pass' if thin.passed else 'fail'}"
    )
    if report.hard_failure:
        print("result: FAIL (gap/radius beyond the 0.5 hard threshold)", file=sys.stderr)
        return EXIT_PHYSICS
    if not thin.passed:
        print("result: FAIL (thin-plate tenth rule violated)", file=sys.stderr)
        return EXIT_PHYSICS
    print("result: pass" + (" (with warnings)" if report.status == "warn" else ""))
    return EXIT_OK


def cmd_materials(args: argparse.Namespace, argv: list[str]) -> int:
    pool = merged_materials(args.materials_file)
    if args.materials_command == "list":
        print(f"{'name':<14} {'E_Pa':>12} {'nu':>8} {'sigma_E_Pa':>12} {'sigma_nu':>9}")
        for mat in pool:
            sig_e = f"{mat.sigma_e:.4g}" if mat.sigma_e is not None else "-"
            sig_nu = f"{mat.sigma_nu:.4g}" if mat.sigma_nu is not None else "-"
            print(
                f"{mat.name:<14} {mat.youngs_modulus:>12.4g} "
                f"{mat.poisson_ratio:>8.4g} {sig_e:>12} {sig_nu:>9}"
            )
        return EXIT_OK
    mat = material_by_name(args.name, pool)
    record = make_record(argv, [_material_dict(mat)], geometry=None, spec=None)
    print(json.dumps(record, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcplate",
        description=(
            "Arc-plate interaction energy, thin-membrane bending, and the "
            "critical thickness for curvature reversal."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_geometry(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--r",
            type=parse_length,
            default=parse_length("100um"),
            metavar="LEN",
            help="arc radius, unit-suffixed (default 100um)",
        )
        sp.add_argument(
            "--span",
            type=parse_length,
            default=parse_length("6um"),
            metavar="LEN",
            help="full transverse span, i.e. 2*half-span (default 6um)",
        )

    def add_quadrature(sp: argparse.ArgumentParser) -> None:
        group = sp.add_argument_group("quadrature")
        group.add_argument(
            "--quad-method",
            choices=["adaptive-simpson", "gauss-legendre"],
            default="adaptive-simpson",
        )
        group.add_argument("--quad-rtol", type=float, default=1e-10)
        group.add_argument("--quad-atol", type=float, default=0.0)
        group.add_argument("--quad-max-subdivisions", type=int, default=60)
        group.add_argument(
            "--quad-order", type=int, default=32, help="gauss-legendre order"
        )

    sweep = sub.add_parser(
        "sweep", help="critical-thickness sweep over a uniform gap grid (CSV)"
    )
    add_geometry(sweep)
    sweep.add_argument("--gap-min", type=parse_length, default=parse_length("0.1um"), metavar="LEN")
    sweep.add_argument("--gap-max", type=parse_length, default=parse_length("1um"), metavar="LEN")
    sweep.add_argument("--points", type=int, default=1000)
    sweep.add_argument("--materials", default="gold,silver", help="comma-separated names")
    sweep.add_argument(
        "--models",
        type=parse_models,
        default=(PFA, NTLO),
        help="comma-separated: pfa, ntlo, scaled-ntlo:<eps> (default pfa,ntlo)",
    )
    sweep.add_argument("--materials-file", default=None, help="JSON file merged over builtins")
    sweep.add_argument(
        "--out",
        default=None,
        help="CSV output path (stdout when omitted); a .meta.json sidecar "
        "with constants, quadrature spec and full rows is written next to it",
    )
    add_quadrature(sweep)

    energy = sub.add_parser("energy", help="single energy evaluation, JSON to stdout")
    energy.add_argument(
        "--geometry", choices=["arc", "parallel", "sphere"], required=True
    )
    add_geometry(energy)
    energy.add_argument("--gap", type=parse_length, required=True, metavar="LEN")
    energy.add_argument("--model", type=parse_model, default=NTLO)
    energy.add_argument(
        "--quantity",
        choices=["energy", "pressure", "energy-density", "force"],
        default=None,
        help="arc: energy; parallel: pressure|energy-density; sphere: energy|force",
    )
    add_quadrature(energy)

    validate = sub.add_parser(
        "validate", help="report proximity-validity, contact margin, thin-plate ratios"
    )
    add_geometry(validate)
    validate.add_argument("--gap", type=parse_length, default=parse_length("0.1um"), metavar="LEN")
    validate.add_argument(
        "--thickness", type=parse_length, default=parse_length("10nm"), metavar="LEN"
    )
    validate.add_argument(
        "--span-b",
        type=parse_length,
        default=None,
        metavar="LEN",
        help="second lateral span for the thin-plate check (default: --span)",
    )

    materials = sub.add_parser("materials", help="list or show materials")
    msub = materials.add_subparsers(dest="materials_command", required=True)
    mlist = msub.add_parser("list", help="table of available materials")
    mlist.add_argument("--materials-file", default=None)
    mshow = msub.add_parser("show", help="one material as JSON")
    mshow.add_argument("name")
    mshow.add_argument("--materials-file", default=None)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "sweep":
            return cmd_sweep(args, argv)
        if args.command == "energy":
            return cmd_energy(args, argv)
        if args.command == "validate":
            return cmd_validate(args)
        if args.command == "materials":
            return cmd_materials(args, argv)
        raise AssertionError(f"unhandled command {args.command}")
    except _CliFailure as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code
    except MaterialConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except MaterialNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArcPlateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
