"""Command-line surface: computation pipelines and verification suites.

Subcommands:

* ``quintic-report``  end-to-end reproduction of the P^4 / O(5) twist data
* ``verify``          run selected invariant suites for a configured n
* ``mirror-maps``     mirror-map and invariant tables (golden-checked at n=4)
* ``operators``       quintic operator identities
* ``hodge``           filtration data and checks
* ``matrices``        connection/metric/difference matrices (pretty or JSON)

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
Output is deterministic byte-for-byte for a fixed configuration; rationals
are serialized as "p/q" strings.  The only environment toggle is NO_COLOR.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import charclass, connection, hodge, laplace, mirror, weyl
from .polymat import format_ratmat, ratmat_to_dict
from .scalars import as_fraction

ALL_SUITES = ("flatness", "laplace", "weyl", "hrr", "hodge", "mirror", "pairing")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    n: int = 4
    order: int = 10
    worder: int = 8
    tol: float = 1e-10
    suites: tuple = ALL_SUITES
    fmt: str = "markdown"
    out: str | None = None
    seed: int = 20240 + 1  # fixed seed: "random" sigmas are deterministic per run

    def validate(self):
        if self.n < 1:
            raise ConfigError("--n must be >= 1")
        if self.order < 1:
            raise ConfigError("--order must be >= 1")
        if self.worder < 1:
            raise ConfigError("--worder must be >= 1")
        if self.tol <= 0:
            raise ConfigError("--tol must be > 0")
        if self.fmt not in ("json", "csv", "markdown"):
            raise ConfigError("--format must be json, csv or markdown")
        for s in self.suites:
            if s not in ALL_SUITES:
                raise ConfigError(f"unknown suite {s!r}")
        if not self.suites:
            raise ConfigError("--suites must be non-empty")


def fr(x) -> str:
    x = as_fraction(x)
    return str(x)


# -- suites ------------------------------------------------------------------


def _random_sigmas(cfg: RunConfig, count: int = 3):
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < count:
        s = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
        if s not in out:
            out.append(s)
    return out


def suite_flatness(cfg: RunConfig) -> dict:
    n = cfg.n
    sigmas = []
    k = Fraction(n + 1, 2)
    while k > 0:
        sigmas.extend([k, -k])
        k -= 1
    sigmas += _random_sigmas(cfg)
    checks = {}
    for s in sigmas:
        checks[f"commutator sigma={s}"] = connection.flatness_commutator(s, n).is_zero()
    if n == 4:
        for s in (Fraction(5, 2), Fraction(-5, 2)):
            gen = connection.ssc_connection(s, 4)
            ref = connection.quintic_reference_connection(s)
            checks[f"published matrices sigma={s}"] = (
                gen["A_t"] == ref["A_t"] and gen["A_x"] == ref["A_x"]
            )
    metric = connection.metric_flatness_residual(Fraction(n + 1, 2), n)
    checks["second metric flat (t)"] = metric["t"].is_zero()
    checks["second metric flat (x)"] = metric["x"].is_zero()
    sigma = Fraction(n - 1, 2)
    inter_ok = True
    while sigma >= Fraction(-(n + 1), 2):
        res = connection.delta_intertwining_residual(sigma, n)
        inter_ok = inter_ok and res["t"].is_zero() and res["x"].is_zero()
        sigma -= 1
    checks["difference-morphism intertwining"] = inter_ok
    checks["total difference rank"] = (
        connection.delta_total_rank(n) == connection.rho_mult_rank(n) == n
    )
    return _suite_result("flatness", checks)


def suite_laplace(cfg: RunConfig) -> dict:
    n, w = cfg.n, cfg.worder
    checks = {}
    eu_pair = (Fraction(n + 1, 2), 1)
    loc_pair = (Fraction(-(n + 1), 2), 0)
    for (sigma, ell), tag in ((eu_pair, "eu"), (loc_pair, "loc")):
        cols = laplace.kcheck_family(sigma, ell, n, w)
        rep = laplace.verify_ssc_solution(cols, sigma, n, w)
        checks[f"solution family ({tag}) to W={w}"] = rep["passed"]
    sec = laplace.ksection_z(Fraction(n - 1, 2), min(2, n), n, min(w, 5))
    rules = laplace.fl_rule_residuals(sec, 1)
    checks["transform rules"] = (
        rules["z_inverse_rule"].is_zero() and rules["derivative_rule"].is_zero()
    )
    consistency = laplace.kcheck_delta_consistency(n, min(w, 6))
    checks[f"difference/Euler consistency to W={min(w, 6)}"] = consistency["passed"]
    return _suite_result("laplace", checks)


def suite_weyl(cfg: RunConfig) -> dict:
    checks = {}
    fact = weyl.factorization_report()
    checks["D_eu = dt*P_eu"] = fact["eu_factorization"]
    checks["D_loc = P_loc*dt"] = fact["loc_factorization"]
    checks["intertwiner identity"] = weyl.intertwiner_check()["passed"]
    spec = weyl.sigma_specialization_report()
    checks["sigma family specializes"] = spec["eu"] and spec["loc"]
    w = max(cfg.worder, 10)
    ops = weyl.build_quintic_ops()
    phi_eu = laplace.quintic_solution("eu", w)
    phi_loc = laplace.quintic_solution("loc", w)
    checks[f"D_eu annihilates phi_eu to W={w}"] = weyl.annihilate_check(
        ops["D_eu"], phi_eu, w
    )["passed"]
    checks[f"D_loc annihilates phi_loc to W={w}"] = weyl.annihilate_check(
        ops["D_loc"], phi_loc, w
    )["passed"]
    cross = weyl.annihilate_check(ops["D_eu"], phi_loc, 2)
    first_bad = min((k[0][0] for k in cross["offending"]), default=None)
    checks["negative control fails at w^1"] = (not cross["passed"]) and first_bad == 1
    return _suite_result("weyl", checks)


def suite_hrr(cfg: RunConfig) -> dict:
    checks = {}
    for n in range(1, 9):
        checks[f"Gamma-Todd identity n={n}"] = charclass.identity_53(n, cfg.tol)["passed"]
    n = cfg.n
    ok = True
    for m in range(-n, 11):
        ok = ok and charclass.euler_pairing(m, 0, n) == charclass.euler_pairing_binomial(m, 0, n)
    checks[f"Euler pairing = binomial, -{n} <= a-b <= 10"] = ok
    for k in (0, 1, 5):
        checks[f"self-intersection identity k={k}"] = charclass.selfintersection_check(
            k, min(n, 4) if n >= 1 else 4
        )["passed"]
    return _suite_result("hrr", checks)


def suite_hodge(cfg: RunConfig) -> dict:
    n = cfg.n
    checks = {}
    g = hodge.griffiths_report(n)
    checks["Griffiths transversality (loc)"] = g["loc"]
    checks["Griffiths transversality (eu)"] = g["eu"]
    inv = hodge.orthogonality_involution_report(n)
    checks["orthogonality involution"] = inv["involution"]
    checks["filtration dimensions"] = inv["dimensions"]
    if n == 4:
        checks["published generator data at q^0"] = _ttilde_matches_published()
        w = min(cfg.worder, 6)
        rep = hodge.kcheck_ttilde(w)
        checks[f"solution image of generator (constant 24) to W={w}"] = rep["passed"]
    return _suite_result("hodge", checks)


QUINTIC_TTILDE_TABLE = [
    [(Fraction(1), 0), (Fraction(-125, 3), 1), (Fraction(2125, 3), 2), (Fraction(-5625), 3), (Fraction(15000), 4)],
    [(Fraction(-5), 1), (Fraction(565, 3), 2), (Fraction(-8975, 3), 3), (Fraction(22875), 4), (Fraction(-60000), 5)],
    [(Fraction(30), 2), (Fraction(-1030), 3), (Fraction(15500), 4), (Fraction(-115500), 5), (Fraction(300000), 6)],
    [(Fraction(-210), 3), (Fraction(6610), 4), (Fraction(-95300), 5), (Fraction(697500), 6), (Fraction(-1800000), 7)],
    [(Fraction(1680), 4), (Fraction(-48680), 5), (Fraction(679000), 6), (Fraction(-4905000), 7), (Fraction(12600000), 8)],
]


def _ttilde_matches_published() -> bool:
    chain = hodge.ttilde_iterates(4)
    for k, (vec, den) in enumerate(chain):
        for beta, (coeff, xpow) in enumerate(QUINTIC_TTILDE_TABLE[k]):
            if not hodge.entry_q0_matches(vec[beta], den, coeff, xpow):
                return False
    return True


QUINTIC_N_TABLE = {
    1: Fraction(-650),
    2: Fraction(-160625),
    3: Fraction(-337216250, 3),
    4: Fraction(-217998840625, 2),
    5: Fraction(-125251505498880),
    6: Fraction(-479299410776921825, 3),
    7: Fraction(-1531227197616745455000, 7),
    8: Fraction(-1260949629604284268280625, 4),
}

QUINTIC_M_EU = [0, 1, 770, 1014275, 1703916750, 3286569025625]
QUINTIC_M_LOC = [0, 1, -120, 63900, -63148000, 85136103750]
# q^4 coefficient corrected from the published running text (-5377000),
# which disagrees with the invariant table there; the exponential of the
# table values forces -53770000.
QUINTIC_F_BAR = [0, 1, -650, 50625, -53770000, -49529975000]


def suite_mirror(cfg: RunConfig) -> dict:
    n, order = cfg.n, cfg.order
    checks = {}
    pair = mirror.mirror_maps(n, order)
    integ = pair.integrality()
    checks[f"integrality of exponentiated maps through q^{order}"] = all(integ.values())
    checks["map compatibility round trip"] = mirror.mirror_compatibility_residual(pair).is_zero()
    lu_eu, lu_loc = mirror._lu_matrices(n, min(order, 6))
    for tag, lu in (("eu", lu_eu), ("loc", lu_loc)):
        rep = mirror.lu_triangularity_report(lu, n)
        checks[f"factorization round trip ({tag})"] = mirror.lu_roundtrip_ok(lu)
        checks[f"triangularity/homogeneity ({tag})"] = all(rep.values())
    if n == 4:
        upto = min(order, 5)
        checks["published exponentiated-map coefficients"] = all(
            pair.m_eu[d] == QUINTIC_M_EU[d]
            and pair.m_loc[d] == QUINTIC_M_LOC[d]
            and pair.f_bar[d] == QUINTIC_F_BAR[d]
            for d in range(1, upto + 1)
        )
        dmax = min(order - 1, 8)
        checks[f"published invariants N_d, d <= {dmax}"] = all(
            pair.n_table[d] == QUINTIC_N_TABLE[d] for d in range(1, dmax + 1)
        )
    return _suite_result("mirror", checks)


def suite_pairing(cfg: RunConfig) -> dict:
    order = min(cfg.order, 6)
    rep = mirror.pairing_identity_check(cfg.n, order)
    checks = {
        f"duality pairing identity to q^{order}": rep["passed"],
        "left side q-independent": rep["left_q_independent"],
    }
    return _suite_result("pairing", checks)


SUITE_RUNNERS = {
    "flatness": suite_flatness,
    "laplace": suite_laplace,
    "weyl": suite_weyl,
    "hrr": suite_hrr,
    "hodge": suite_hodge,
    "mirror": suite_mirror,
    "pairing": suite_pairing,
}


def _suite_result(name: str, checks: dict) -> dict:
    return {
        "suite": name,
        "passed": all(checks.values()),
        "checks": {k: bool(v) for k, v in checks.items()},
    }


# -- reports -------------------------------------------------------------------


def quintic_report(cfg: RunConfig) -> dict:
    if cfg.n != 4:
        raise ConfigError("quintic-report requires --n 4")
    ops = weyl.build_quintic_ops()
    fact = weyl.factorization_report()
    inter = weyl.intertwiner_check()
    pair = mirror.mirror_maps(4, cfg.order)
    w = min(cfg.worder, 6)
    ttilde_rows = []
    chain = hodge.ttilde_iterates(4)
    for k, (vec, den) in enumerate(chain):
        entries = []
        for beta in range(5):
            nq, dq = hodge.q0_entry(vec[beta], den)
            # constant * x^{-xpow} at q = 0 by construction; recover both
            coeff, xpow = _as_xpower(nq, dq)
            entries.append({"coeff": fr(coeff), "x_power": -xpow})
        ttilde_rows.append(entries)
    krep = hodge.kcheck_ttilde(w)
    n_max = cfg.order - 1
    report = {
        "operators": {
            name: {"display": ops["display"][name], "normal_form": ops[name].pretty()}
            for name in ("D_eu", "D_loc", "P_eu", "P_loc")
        },
        "factorizations": {
            "D_eu = dt*P_eu": fact["eu_factorization"],
            "D_loc = P_loc*dt": fact["loc_factorization"],
        },
        "intertwiner": {"passed": inter["passed"], "degree": inter["lhs_degree"]},
        "mirror_maps": {
            "order": cfg.order,
            "M_eu": [fr(c) for c in pair.m_eu.coeffs],
            "M_loc": [fr(c) for c in pair.m_loc.coeffs],
            "F_bar": [fr(c) for c in pair.f_bar.coeffs],
            "integrality": pair.integrality(),
        },
        "invariants": {
            "N": {str(d): fr(pair.n_table[d]) for d in range(1, n_max + 1)},
            "truncation_notice": (
                f"N_d computed for d <= {n_max}: one order is lost to the "
                f"logarithm/composition pipeline at --order {cfg.order}"
            ),
        },
        "ttilde": {
            "iterates_at_q0": ttilde_rows,
            "matches_published": _ttilde_matches_published(),
        },
        "solution_image": {
            "constant": fr(krep["constant"]) if krep["constant"] is not None else None,
            "passed": krep["passed"],
            "worder": w,
        },
    }
    golden = {
        "mirror maps match published lists": all(
            pair.m_eu[d] == QUINTIC_M_EU[d] and pair.m_loc[d] == QUINTIC_M_LOC[d]
            for d in range(1, min(cfg.order, 5) + 1)
        ),
        "invariant table matches": all(
            pair.n_table[d] == QUINTIC_N_TABLE[d]
            for d in range(1, min(n_max, 8) + 1)
        ),
        "factorizations": fact["eu_factorization"] and fact["loc_factorization"],
        "intertwiner": inter["passed"],
        "ttilde data": report["ttilde"]["matches_published"],
        "solution image constant 24": krep["passed"],
    }
    report["verdicts"] = {k: bool(v) for k, v in golden.items()}
    report["passed"] = all(golden.values())
    return report


def _as_xpower(num, den):
    """Recover (coeff, xpow) from a monomial ratio num/den = coeff * x^{-xpow}."""
    if num.is_zero():
        return Fraction(0), 0
    if len(num.terms) != 1 or len(den.terms) != 1:
        raise ValueError("entry is not a monomial ratio at q = 0")
    (na, nb, _), nv = next(iter(num.terms.items()))
    (da, db, _), dv = next(iter(den.terms.items()))
    return nv / dv, db - nb


def mirror_report(cfg: RunConfig) -> dict:
    pair = mirror.mirror_maps(cfg.n, cfg.order)
    report = {
        "n": cfg.n,
        "order": cfg.order,
        "Mir_eu_minus_t": [fr(c) for c in pair.mir_eu.coeffs],
        "Mir_loc_minus_t": [fr(c) for c in pair.mir_loc.coeffs],
        "M_eu": [fr(c) for c in pair.m_eu.coeffs],
        "M_loc": [fr(c) for c in pair.m_loc.coeffs],
        "F_bar": [fr(c) for c in pair.f_bar.coeffs],
        "N": {str(d): fr(pair.n_table[d]) for d in range(1, cfg.order)},
        "integrality": pair.integrality(),
        "mode": "golden" if cfg.n == 4 else "report-only",
    }
    if cfg.n == 4:
        report["passed"] = all(
            pair.n_table[d] == QUINTIC_N_TABLE[d]
            for d in range(1, min(cfg.order - 1, 8) + 1)
        )
    else:
        report["passed"] = True
    return report


def operators_report(cfg: RunConfig) -> dict:
    ops = weyl.build_quintic_ops()
    fact = weyl.factorization_report()
    inter = weyl.intertwiner_check()
    spec = weyl.sigma_specialization_report()
    return {
        "operators": {
            name: {"display": ops["display"][name], "normal_form": ops[name].pretty()}
            for name in ("D_eu", "D_loc", "P_eu", "P_loc")
        },
        "sigma_family": weyl.sigma_family_operator(4).pretty(),
        "checks": {
            "D_eu = dt*P_eu": fact["eu_factorization"],
            "D_loc = P_loc*dt": fact["loc_factorization"],
            "intertwiner": inter["passed"],
            "sigma specializations": spec["eu"] and spec["loc"],
        },
        "passed": fact["eu_factorization"]
        and fact["loc_factorization"]
        and inter["passed"]
        and spec["eu"]
        and spec["loc"],
    }


def hodge_report(cfg: RunConfig) -> dict:
    suite = suite_hodge(cfg)
    report = {"n": cfg.n, "checks": suite["checks"], "passed": suite["passed"]}
    if cfg.n == 4:
        chain = hodge.ttilde_iterates(4)
        rows = []
        for vec, den in chain:
            entries = []
            for beta in range(5):
                nq, dq = hodge.q0_entry(vec[beta], den)
                coeff, xpow = _as_xpower(nq, dq)
                entries.append(f"{fr(coeff)}*x^{-xpow}")
            rows.append(entries)
        report["ttilde_iterates_q0"] = rows
    return report


def matrices_report(cfg: RunConfig) -> dict:
    n = cfg.n
    sig_eu = Fraction(n + 1, 2)
    sig_loc = Fraction(-(n + 1), 2)
    out = {"n": cfg.n, "passed": True}
    for tag, sig in (("eu", sig_eu), ("loc", sig_loc)):
        conn = connection.ssc_connection(sig, n)
        out[f"A_t_{tag}"] = ratmat_to_dict(conn["A_t"])
        out[f"A_x_{tag}"] = ratmat_to_dict(conn["A_x"])
    out["second_metric"] = ratmat_to_dict(connection.second_metric(n))
    out["delta_total"] = ratmat_to_dict(connection.delta_total(n))
    return out


# -- rendering -------------------------------------------------------------------


def _colored(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\x1b[32m{text}\x1b[0m" if ok else f"\x1b[31m{text}\x1b[0m"


def render_markdown(report: dict, title: str) -> str:
    lines = [f"# {title}", ""]

    def emit(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                if isinstance(v, (dict, list)):
                    lines.append(f"{prefix}- **{k}**:")
                    emit(prefix + "  ", v)
                else:
                    shown = _verdict(v) if isinstance(v, bool) else v
                    lines.append(f"{prefix}- **{k}**: {shown}")
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, (dict, list)):
                    emit(prefix + "  ", item)
                else:
                    lines.append(f"{prefix}- {item}")

    emit("", report)
    return "\n".join(lines) + "\n"


def _verdict(flag: bool) -> str:
    return _colored("PASS", True) if flag else _colored("FAIL", False)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def render_csv(report: dict) -> str:
    rows = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, list):
            for i, v in enumerate(value):
                walk(f"{prefix}[{i}]", v)
        else:
            rows.append((prefix, value))

    walk("", report)
    lines = ["key,value"]
    for key, value in rows:
        text = str(value)
        if "," in text or '"' in text:
            text = '"' + text.replace('"', '""') + '"'
        lines.append(f"{key},{text}")
    return "\n".join(lines) + "\n"


def emit(report: dict, cfg: RunConfig, title: str) -> None:
    if cfg.fmt == "json":
        text = render_json(report)
    elif cfg.fmt == "csv":
        text = render_csv(report)
    else:
        text = render_markdown(report, title)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument parsing --------------------------------------------------------------


def _add_common(parser):
    parser.add_argument("--n", type=int, default=4, help="complex dimension n of P^n")
    parser.add_argument("--order", type=int, default=10, help="q-truncation order")
    parser.add_argument("--worder", type=int, default=8, help="weighted truncation order")
    parser.add_argument("--tol", type=float, default=1e-10, help="numeric tolerance")
    parser.add_argument(
        "--format", dest="fmt", default="markdown", help="json | csv | markdown"
    )
    parser.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdmod",
        description="Exact series engine for twisted quantum D-modules of P^n",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("quintic-report", "mirror-maps", "operators", "hodge", "matrices"):
        p = sub.add_parser(name)
        _add_common(p)
    p = sub.add_parser("verify")
    _add_common(p)
    p.add_argument(
        "--suites",
        default=",".join(ALL_SUITES),
        help="comma-separated subset of: " + ", ".join(ALL_SUITES),
    )
    return parser


def config_from_args(args) -> RunConfig:
    suites = ALL_SUITES
    if getattr(args, "suites", None):
        suites = tuple(s.strip() for s in args.suites.split(",") if s.strip())
    cfg = RunConfig(
        n=args.n,
        order=args.order,
        worder=args.worder,
        tol=args.tol,
        suites=suites,
        fmt=args.fmt,
        out=args.out,
    )
    cfg.validate()
    return cfg


def cmd_verify(cfg: RunConfig) -> int:
    results = []
    for name in cfg.suites:
        results.append(SUITE_RUNNERS[name](cfg))
    report = {
        "n": cfg.n,
        "suites": {r["suite"]: r["checks"] for r in results},
        "passed": all(r["passed"] for r in results),
    }
    emit(report, cfg, f"Verification suites (n={cfg.n})")
    return 0 if report["passed"] else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        cfg = config_from_args(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "quintic-report":
            report = quintic_report(cfg)
            emit(report, cfg, "Quintic twist report")
        elif args.command == "mirror-maps":
            report = mirror_report(cfg)
            emit(report, cfg, f"Mirror maps (n={cfg.n})")
        elif args.command == "operators":
            report = operators_report(cfg)
            emit(report, cfg, "Operator identities")
        elif args.command == "hodge":
            report = hodge_report(cfg)
            emit(report, cfg, f"Hodge filtrations (n={cfg.n})")
        elif args.command == "matrices":
            report = matrices_report(cfg)
            if cfg.fmt == "markdown":
                text = _matrices_pretty(cfg)
                if cfg.out:
                    with open(cfg.out, "w") as fh:
                        fh.write(text)
                else:
                    sys.stdout.write(text)
                return 0
            emit(report, cfg, f"Connection matrices (n={cfg.n})")
        else:  # pragma: no cover
            return 2
        return 0 if report.get("passed", True) else 1
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _matrices_pretty(cfg: RunConfig) -> str:
    n = cfg.n
    blocks = []
    for tag, sig in (("eu", Fraction(n + 1, 2)), ("loc", Fraction(-(n + 1), 2))):
        conn = connection.ssc_connection(sig, n)
        blocks.append(format_ratmat(conn["A_t"], f"A_t (sigma={sig})"))
        blocks.append(format_ratmat(conn["A_x"], f"A_x (sigma={sig})"))
    blocks.append(format_ratmat(connection.second_metric(n), "second metric"))
    blocks.append(format_ratmat(connection.delta_total(n), "total difference morphism"))
    return "\n\n".join(blocks) + "\n"


if __name__ == "__main__":
    sys.exit(main())
