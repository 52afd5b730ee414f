"""Command-line front end.

    vertexlab <z|efp|check|restricted|hratio|suite> [options]

Every record echoes the effective configuration, which can be fed back with
``--config`` to reproduce the value.  Exit codes: 0 ok, 2 configuration
error, 3 assertion failure.
"""

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import acceptance, correlations as corr, determinants as dets, sixv, twentyv, yba
from .errors import ConfigInvalid, UnknownRelation, VertexLabError
from .numeric import dumps, fmt_number, relerr, to_number

EXIT_OK, EXIT_CONFIG, EXIT_ASSERT = 0, 2, 3

METHODS = {
    "6v": ("brute", "isotropic", "ik", "homogeneous"),
    "20v": ("brute", "difrancesco", "contour"),
}
RELATIONS = (
    "ab-exchange", "bb-commute", "cc-commute", "transfer-commute", "fundamental",
    "bridge", "omega", "geom-sum", "3d:GEC", "3d:IHG", "3d:ADG", "3d:AEI",
)
PASS_THRESHOLD = 1e-10


@dataclasses.dataclass
class RunConfig:
    command: str
    model: str = "6v"
    n: int = 2
    weights: dict = dataclasses.field(default_factory=dict)
    method: list = dataclasses.field(default_factory=lambda: ["brute"])
    seed: int = 0
    spectral: str = None
    r: int = None
    s: int = None
    rp: int = None
    sp: int = None
    rs: list = None
    rps: list = None
    kind: str = None
    relation: str = None
    suite: str = None
    sites: int = 3
    trunc: int = 2

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - names)
        if unknown:
            raise ConfigInvalid(f"unknown config keys: {', '.join(unknown)}")
        if "command" not in data:
            raise ConfigInvalid("config needs a command")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def validate(self):
        if self.model not in METHODS:
            raise ConfigInvalid(f"model must be one of {sorted(METHODS)}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigInvalid("n must be a positive integer")
        if isinstance(self.method, str):
            self.method = self.method.split(",")
        if not isinstance(self.weights, dict):
            raise ConfigInvalid("weights must be a mapping")
        self.weights = {str(k): str(v) for k, v in self.weights.items()}
        if self.command == "z":
            bad = [m for m in self.method if m not in METHODS[self.model]]
            if bad:
                raise ConfigInvalid(f"unknown method(s) {bad} for model {self.model}")
        return self

    def to_json(self):
        return {k: v for k, v in dataclasses.asdict(self).items() if v is not None}


# ---- parsing helpers -------------------------------------------------------


def parse_kv(text):
    out = {}
    for part in filter(None, (text or "").split(",")):
        if "=" not in part:
            raise ConfigInvalid(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def parse_list(text):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError as exc:
        raise ConfigInvalid(f"expected a comma-separated integer list, got {text!r}") from exc


def weights_6v(cfg):
    w = {k: to_number(v) for k, v in cfg.weights.items()}
    try:
        if set(w) <= {"a", "b", "c"}:
            return sixv.Weights6V.isotropic_weights(w.get("a", 1), w.get("b", 1), w.get("c", 1))
        if set(w) <= set(sixv.SIX_VERTEX_KINDS):
            return sixv.Weights6V(*(w.get(k, 1) for k in sixv.SIX_VERTEX_KINDS))
        if set(w) <= {"a", "c", "H", "V", "lambda_c", "b"}:
            b = w.pop("b", None)
            return sixv.field_weights(sixv.FieldParams(**w), b)
    except (TypeError, ValueError) as exc:
        raise ConfigInvalid(str(exc)) from exc
    raise ConfigInvalid(f"unrecognized six-vertex weight keys {sorted(w)}")


def weights_20v(cfg):
    w = {k: to_number(v) for k, v in cfg.weights.items() if k not in ("a", "b", "c")}
    try:
        if not w:
            return twentyv.UNIT_COMPOSITE
        if set(w) <= {f"w{k}" for k in range(7)}:
            return twentyv.CompositeWeights20V(*(w.get(f"w{k}", 1) for k in range(7)))
        names = ("a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3")
        if set(w) <= set(names):
            return twentyv.Weights20V(*(w.get(k, 1) for k in names))
    except (TypeError, ValueError) as exc:
        raise ConfigInvalid(str(exc)) from exc
    raise ConfigInvalid(f"unrecognized twenty-vertex weight keys {sorted(w)}")


def spectral_params(cfg):
    """Parse ``random:seed=7`` or ``homogeneous:lam=..,nu=..,eta=..``."""
    spec = cfg.spectral
    if spec is None:
        return None
    kind, _, rest = spec.partition(":")
    opts = parse_kv(rest)
    try:
        if kind == "random":
            rng = np.random.default_rng(int(opts.get("seed", cfg.seed)))
            return "inhomogeneous", acceptance._spectral_draw(rng, cfg.n)
        if kind == "homogeneous":
            lam, nu, eta = (float(opts[k]) for k in ("lam", "nu", "eta"))
            return "homogeneous", (lam, nu, eta)
    except (KeyError, ValueError) as exc:
        raise ConfigInvalid(f"bad spectral block {spec!r}") from exc
    raise ConfigInvalid(f"unknown spectral kind {kind!r}")


# ---- commands --------------------------------------------------------------


def _z_value(cfg, method, spectral):
    if cfg.model == "20v":
        if method == "brute":
            return twentyv.partition_brute_20v(cfg.n, weights_20v(cfg))
        if method == "difrancesco":
            return dets.difrancesco_partition(cfg.n)
        raise ConfigInvalid("the contour method applies to efp, not z")
    if method == "brute" and spectral is None:
        return sixv.partition_brute(cfg.n, weights_6v(cfg))
    if method == "isotropic":
        w = weights_6v(cfg)
        return sixv.partition_isotropic(cfg.n, w.a, w.b, w.c)
    if spectral is None:
        raise ConfigInvalid(f"method {method} needs a --spectral block")
    kind, p = spectral
    if kind == "homogeneous":
        lam, nu, eta = p
        if method == "homogeneous":
            return dets.homogeneous_partition(lam, nu, eta, cfg.n)
        if method == "brute":
            a, b, c = math.sin(lam - nu + eta), math.sin(lam - nu - eta), math.sin(2 * eta)
            return sixv.partition_brute(cfg.n, sixv.Weights6V.signed(a, a, b, b, c, c))
        raise ConfigInvalid("the ik determinant is singular at coincident parameters; use homogeneous")
    if method == "brute":
        return sixv.partition_brute(cfg.n, dets.inhomogeneous_weights(p))
    if method == "ik":
        return dets.ik_partition(p)
    raise ConfigInvalid("homogeneous needs a homogeneous spectral block")


def _values_record(cfg, values):
    rec = {"command": cfg.command, "config": cfg.to_json(), "conventions": corr.CONVENTIONS, "values": values}
    keys = list(values)
    if len(keys) == 2:
        a, b = values[keys[0]], values[keys[1]]
        rec["delta"] = abs(complex(a) - complex(b)) if not isinstance(a, Fraction) or not isinstance(b, Fraction) else abs(a - b)
        rec["relerr"] = relerr(a, b)
    return rec


def cmd_z(cfg):
    spectral = spectral_params(cfg)
    values = {m: _plain(_z_value(cfg, m, spectral)) for m in cfg.method}
    return _values_record(cfg, values), EXIT_OK


def _plain(v):
    if isinstance(v, complex) and abs(v.imag) <= 1e-13 * max(1.0, abs(v)):
        return v.real
    if hasattr(v, "imag") and not isinstance(v, (int, float, Fraction, complex)):
        return _plain(complex(v))
    return v


def cmd_efp(cfg):
    r, s = cfg.r, cfg.s
    values = {}
    for m in cfg.method:
        if cfg.model == "6v":
            if m != "brute":
                raise ConfigInvalid("six-vertex EFP is computed by enumeration only")
            if r is None or s is None:
                raise ConfigInvalid("efp needs --r and --s")
            values[m] = corr.efp_6v_brute(cfg.n, weights_6v(cfg), r, s)
        elif m == "brute":
            values[m] = corr.efp_20v_brute(cfg.n, weights_20v(cfg), (r, s if cfg.rp is None else cfg.rp))
        elif m == "contour":
            w6 = weights_6v(RunConfig(cfg.command, weights={k: v for k, v in cfg.weights.items() if k in ("a", "b", "c")}))
            val, provenance = corr.efp20v_contour(
                cfg.n, cfg.s or 1, cfg.sp or 0, w6, cfg.r or 1, cfg.rp or 0
            )
            values[m] = val
        else:
            raise ConfigInvalid(f"unknown EFP method {m!r}")
    rec = _values_record(cfg, values)
    if "contour" in values:
        rec["provenance"] = provenance
    return rec, EXIT_OK


def _draw_2d(cfg):
    rng = np.random.default_rng(cfg.seed)
    p = acceptance._spectral_draw(rng, 2)
    vs = [float(x) for x in rng.uniform(-0.5, 0.5, cfg.sites)]
    return rng, p.lambdas, p.eta, vs


def cmd_check(cfg):
    name = cfg.relation
    if name not in RELATIONS:
        raise UnknownRelation(f"unknown relation {name!r}; known: {', '.join(RELATIONS)}")
    rec = {"command": "check", "config": cfg.to_json(), "relation": name}
    threshold = PASS_THRESHOLD
    if name.startswith("3d:"):
        rng = np.random.default_rng(cfg.seed)
        th = sorted(float(x) for x in rng.uniform(0.1, 1.5, 3))
        out = yba.check_3d_relation(
            name[3:], thetas=tuple(th), d_trunc=cfg.trunc, sites=tuple(0.1 * k for k in range(cfg.sites))
        )
        rec.update({"residual": out["residual"], "report_only": True, "detail": out})
        return rec, EXIT_OK
    rng, (lam, lamp), eta, vs = _draw_2d(cfg)
    if name == "ab-exchange":
        res = yba.check_exchange_ab(lam, lamp, eta, vs=vs)
    elif name in ("bb-commute", "cc-commute"):
        res = yba.check_commuting_family(name[0].upper(), lam, lamp, eta, vs=vs)
    elif name == "transfer-commute":
        res = yba.check_transfer_commute(lam, lamp, eta, vs=vs)
    elif name == "fundamental":
        lams = acceptance._spectral_draw(rng, cfg.sites).lambdas
        res = max(yba.check_fundamental_identity(r, lams, eta, vs, "standard") for r in range(1, cfg.sites + 1))
        rec["printed_variant_residuals"] = [
            yba.check_fundamental_identity(r, lams, eta, vs, "printed") for r in range(1, cfg.sites + 1)
        ]
    elif name == "bridge":
        p = acceptance._spectral_draw(rng, cfg.sites)
        res = relerr(yba.dwbc_amplitude(p.lambdas, p.nus, p.eta), dets.ik_partition(p))
    elif name == "omega":
        threshold = 1e-12
        res = 0.0
        for _ in range(20):
            l, e, x = (float(v) for v in rng.uniform(0.05, 1.5, 3))
            try:
                res = max(res, corr.omega_identity_check(l, e, x))
            except VertexLabError:
                continue
    else:  # geom-sum
        threshold = 1e-12
        X, pref = [], 1.0
        for _ in range(min(cfg.sites, 3)):
            x = float(rng.uniform(0.2, min(1.5, 0.5 / pref)))
            X.append(x)
            pref *= x
        rec["X"] = X
        res = corr.geom_multi_sum_check(X, len(X), 60)
    passed = res <= threshold
    rec.update({"residual": res, "threshold": threshold, "passed": passed})
    return rec, EXIT_OK if passed else EXIT_ASSERT


def _region(cfg):
    if cfg.rs is None:
        raise ConfigInvalid("--rs is required")
    return corr.RegionSpec(cfg.rs, cfg.rps)


def cmd_restricted(cfg):
    kind = cfg.kind or "Top"
    w = weights_6v(cfg)
    region = None if kind == "Full" else _region(cfg)
    values = {}
    for m in cfg.method:
        if m == "brute":
            values[m] = corr.restricted_partition_brute(cfg.n, w, kind, region)
        elif m == "contour" and kind == "Bottom":
            values[m] = corr.bottom_contour_6v(cfg.n, len(region.rs), w, region.rs)
        elif m == "contour" and kind == "Top":
            values[m] = corr.top6v_contour(cfg.n, len(region.rs), w, region.rs)
        else:
            raise ConfigInvalid(f"method {m!r} not available for {kind}")
    return _values_record(cfg, values), EXIT_OK


def cmd_hratio(cfg):
    region = _region(cfg)
    if region.rps is None:
        raise ConfigInvalid("--rps is required")
    return _values_record(cfg, {"brute": corr.h_ratio(cfg.n, weights_6v(cfg), region)}), EXIT_OK


def golden_checks():
    g = acceptance._golden()
    rows = []
    counts = [sixv.count_dwbc(n, cap=6) for n in range(1, 7)]
    rows.append(("asm_counts", counts == g["asm_counts"]))
    rows.append(
        ("difrancesco", all(dets.difrancesco_partition(int(n)) == Fraction(v) for n, v in g["difrancesco"].items()))
    )
    rows.append(
        ("twentyv_unit_counts", [twentyv.count_dwbc_20v(n) for n in (1, 2, 3)] == g["twentyv_unit_counts"])
    )
    pin = g["prefactor_P"]["inputs"]
    val = corr.prefactor_P(
        Fraction(pin["a"]), Fraction(pin["b"]), Fraction(pin["c"]), pin["N"], pin["s"], pin["sp"],
        pin["rs"], pin["rps"], Fraction(pin["Z20"]),
    )
    rows.append(("prefactor_P", val == Fraction(g["prefactor_P"]["value"])))
    return rows


def cmd_suite(cfg):
    if cfg.suite == "golden":
        rows = golden_checks()
        ok = all(p for _, p in rows)
        return {"command": "suite", "suite": "golden", "passed": ok, "rows": [{"name": n, "passed": p} for n, p in rows]}, (
            EXIT_OK if ok else EXIT_ASSERT
        )
    if cfg.suite == "acceptance":
        report_dir = Path("reports") if Path("reports").is_dir() else None
        results = acceptance.run_all(report_dir)
        for r in results:
            print(r.line(), file=sys.stderr)
        ok = all(r.passed for r in results)
        return {"command": "suite", "suite": "acceptance", "passed": ok, "criteria": [r.to_json() for r in results]}, (
            EXIT_OK if ok else EXIT_ASSERT
        )
    raise ConfigInvalid(f"unknown suite {cfg.suite!r}; choose acceptance or golden")


COMMANDS = {
    "z": cmd_z, "efp": cmd_efp, "check": cmd_check,
    "restricted": cmd_restricted, "hratio": cmd_hratio, "suite": cmd_suite,
}


# ---- output ----------------------------------------------------------------


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, (list, tuple)) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, obj


def render(record, fmt):
    if fmt == "json":
        return dumps(record)
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["key", "value"])
    for k, v in _flatten(record):
        if isinstance(v, (list, tuple)):
            v = ";".join(str(fmt_number(x)) for x in v)
        elif isinstance(v, float):
            v = format(v, ".17g")
        else:
            v = fmt_number(v)
            v = json.dumps(v) if isinstance(v, dict) else v
        wr.writerow([k, v])
    return buf.getvalue()


def build_parser():
    ap = argparse.ArgumentParser(prog="vertexlab", description="Six- and twenty-vertex exact computations.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("target", nargs="?", help="relation name for check, suite name for suite")
    ap.add_argument("--model", choices=sorted(METHODS))
    ap.add_argument("--n", type=int)
    ap.add_argument("--weights", help="k=v,... (a,b,c | a1..c2 | a,c,H,V,lambda_c | w0..w6 | a1..c3)")
    ap.add_argument("--method", help="m[,m2]")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--spectral", help="random:seed=K or homogeneous:lam=..,nu=..,eta=..")
    ap.add_argument("--r", type=int)
    ap.add_argument("--s", type=int)
    ap.add_argument("--rp", type=int)
    ap.add_argument("--sp", type=int)
    ap.add_argument("--rs")
    ap.add_argument("--rps")
    ap.add_argument("--kind", choices=["Top", "Bottom", "Side", "Full"])
    ap.add_argument("--sites", type=int)
    ap.add_argument("--trunc", type=int)
    ap.add_argument("--out", choices=["json", "csv"], default="json")
    ap.add_argument("--config", help="JSON file mirroring the config block of a record")
    return ap


def config_from_args(args):
    data = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigInvalid(f"cannot read config: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigInvalid("config must be a JSON object")
        data = dict(data.get("config", data))
    data["command"] = args.command
    if args.target is not None:
        data["relation" if args.command == "check" else "suite"] = args.target
    simple = ("model", "n", "seed", "spectral", "r", "s", "rp", "sp", "kind", "sites", "trunc")
    for key in simple:
        val = getattr(args, key)
        if val is not None:
            data[key] = val
    if args.weights is not None:
        data["weights"] = parse_kv(args.weights)
    if args.method is not None:
        data["method"] = args.method.split(",")
    if args.rs is not None:
        data["rs"] = parse_list(args.rs)
    if args.rps is not None:
        data["rps"] = parse_list(args.rps)
    if args.command == "efp" and "method" not in data:
        data["method"] = ["brute"]
    return RunConfig.from_dict(data)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        record, code = COMMANDS[cfg.command](cfg)
    except UnknownRelation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigInvalid, VertexLabError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    sys.stdout.write(render(record, args.out))
    return code


if __name__ == "__main__":
    sys.exit(main())
