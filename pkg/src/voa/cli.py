"""The ``voa`` command.

Every subcommand builds a report: a list of checks ``{job, status,
expected, got, weight, charge}`` plus suite-specific notes. ``--json``
prints it as JSON (sorted keys, no timing unless ``--timing``), otherwise a
plain-text rendering of the same content. Exit status: 0 when every check
passes, 1 on a mismatch, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .algebra import Expr, PresentationError
from .scalar import Scalar, ScalarError, parse_scalar

SUITES = ("n2-axioms", "wsl4sub-axioms", "ks-forward", "ks-inverse", "zhu", "curves",
          "classify-demo", "flow", "singular")


class InputError(Exception):
    pass


def _rec(job, ok, expected="", got="", weight="", charge="", anchor=""):
    return {"job": job, "status": "pass" if ok else "fail", "expected": str(expected),
            "got": str(got), "weight": str(weight), "charge": str(charge), "anchor": anchor}


def _w(weight):
    return "" if weight is None else weight


def _from_record(r, anchor=""):
    d = r.as_dict()
    d["anchor"] = anchor
    return d


def _default_cutoff(value, fallback):
    if value is not None:
        return value
    env = os.environ.get("VOA_CUTOFF")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"VOA_CUTOFF must be an integer, got {env!r}") from None
    return fallback


def parse_specialize(text: str | None) -> dict:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        name, eq, val = item.partition("=")
        if not eq or not name.strip():
            raise InputError(f"bad --specialize item {item!r}; expected name=value")
        try:
            out[name.strip()] = parse_scalar(val.strip()).to_fraction()
        except (ValueError, ScalarError) as e:
            raise InputError(f"bad value in --specialize {item!r}: {e}") from None
    return out


def _param(args, name):
    v = getattr(args, name, None)
    if v is not None and v != "generic":
        try:
            return parse_scalar(v).to_fraction()
        except (ValueError, ScalarError) as e:
            raise InputError(f"bad --{name} value {v!r}: {e}") from None
    return args.bindings.get(name)


# -- suites ---------------------------------------------------------------------


def suite_n2_axioms(args):
    from .checks import check_jacobi, check_skew
    from .presets import n2

    c = _param(args, "c")
    P = n2(c)
    cutoff = _default_cutoff(args.cutoff, 6)
    recs = [_rec(i.label, i.ok, "0", i.residual, _w(i.weight), "") for i in check_skew(P)]
    recs += [_rec(i.label, i.ok, "0", i.residual, i.weight, "") for i in check_jacobi(P, cutoff)]
    return recs, {"c": str(c if c is not None else "generic"), "cutoff": cutoff}


def suite_wsl4sub_axioms(args):
    from .checks import check_jacobi, check_skew
    from .presets import wsl4sub

    k = _param(args, "k")
    cutoff = _default_cutoff(args.cutoff, 9)
    outcome = {}
    recs = []
    for variant in ("gpgm", "altB"):
        P = wsl4sub(k, variant=variant)
        ids = check_skew(P) + check_jacobi(P, cutoff)
        bad = [i for i in ids if not i.ok]
        outcome[P.name] = {"identities": len(ids), "failures": len(bad),
                           "first_failure": bad[0].label if bad else None}
        if variant == "gpgm":
            recs += [_rec(i.label, i.ok, "0", i.residual, _w(i.weight), "") for i in ids]
    passing = sorted(n for n, o in outcome.items() if o["failures"] == 0)
    recs.append(_rec("exactly one variant passes", len(passing) == 1, "1", len(passing),
                     anchor="variant adjudication"))
    recs += _gpgm_display_check()
    return recs, {"k": str(k if k is not None else "generic"), "cutoff": cutoff,
                  "adjudication": outcome, "passing_variants": passing}


def gpgm_display_form():
    """The displayed ``G+_(0) G-`` at ``k = -1`` in terms of ``Lperp``."""
    from .presets import nop, wsl4sub

    P = wsl4sub(-1)
    J, L, W = P.gens("J L W")
    Lp = P.fields["Lperp"]
    F = Fraction
    return P, (W + F(32, 25) * nop(J, J, J) - F(12, 5) * (J @ Lp) + F(24, 5) * (J.d() @ J)
               - F(3, 2) * Lp.d() + 2 * J.d(2))


def _gpgm_display_check():
    P, form = gpgm_display_form()
    got = P.gen("G+").nth(P.gen("G-"), 0)
    return [_rec("G+_(0)G- at k=-1 matches the displayed form", (got - form).is_zero(),
                 form, got, 3, "0")]


def suite_ks_forward(args):
    from .ks import forward_embedding

    emb = forward_embedding()
    recs = [_from_record(r) for r in emb.verify()]
    return recs, {"target": emb.target.name, "quotient": "<(G+)^2, (G-)^2>"}


def inverse_display_checks(emb):
    """``G+(n) G-`` for ``n = 3, 2, 1, 0`` against the displayed values."""
    from .presets import nop

    P = emb.source
    J, L, W = P.gens("J L W")
    Lp = P.fields["Lperp"]
    F = Fraction
    shown = {
        3: 15 * P.one,
        2: 12 * J,
        1: -3 * Lp + F(24, 5) * (J @ J) + 6 * J.d(),
        0: gpgm_display_form()[1],
    }
    gp, gm = emb.images["G+"], emb.images["G-"]
    out = []
    for n, form in shown.items():
        form = Expr(P, form.terms)
        got = gp.nth(gm, n)
        want = emb(form)
        out.append(_rec(f"Phi_inv: G+({n})G- equals the displayed form", (got - want).is_zero(),
                        want, got, 3 - n, "0"))
    return out


def suite_ks_inverse(args):
    from .ks import inverse_embedding

    emb = inverse_embedding()
    recs = [_from_record(r) for r in emb.verify()]
    recs += inverse_display_checks(emb)
    return recs, {"target": emb.target.name}


def zhu_checks():
    from .flowzhu import ZhuAlgebra
    from .presets import n2, nop, parafermion_generator, wsl4sub

    F = Fraction
    recs = []
    P = wsl4sub(-1)
    Z = ZhuAlgebra(P)
    j, l, w = Z.gen("J"), Z.gen("L"), Z.gen("W")
    gp, gm = Z.gen("G+"), Z.gen("G-")
    got = gp * gm - gm * gp
    want = -6 * j ** 2 + F(56, 25) * j ** 3 + 4 * j - F(12, 5) * j * l + 3 * l + w
    recs.append(_rec("[[G+],[G-]] at k=-1", got == want, want, got, 3))
    J, L = P.gens("J L")
    items = [("[:J^3:]", nop(J, J, J), j ** 3), ("[:dJ J:]", J.d() @ J, -j ** 2),
             ("[d^2 J]", J.d(2), 2 * j), ("[dL]", L.d(), -2 * l), ("[:L J:]", L @ J, j * l + j)]
    for name, e, v in items:
        g = Z.project(e)
        recs.append(_rec(f"W: {name}", g == v, v, g))
    N = n2(-15)
    Y = ZhuAlgebra(N)
    h, t = Y.gen("H"), Y.gen("T")
    H, T, E, Fg = N.gens("H T E F")
    Lp = T + F(1, 10) * (H @ H)
    items = [("[:H^3:]", nop(H, H, H), h ** 3), ("[:dH H:]", H.d() @ H, -h ** 2),
             ("[d^2 H]", H.d(2), 2 * h), ("[dLperp]", Lp.d(), -2 * t - F(1, 5) * h ** 2),
             ("[:H Lperp:]", H @ Lp, h * t + F(1, 10) * h ** 3), ("[E_(-1)F]", E @ Fg, Y.coerce(0))]
    for name, e, v in items:
        g = Y.project(e)
        recs.append(_rec(f"N2: {name}", g == v, v, g))
    Wn = parafermion_generator(N, F(-3, 2))
    g = Y.project(Wn)
    v = -F(1, 25) * (h + 5) * (h ** 2 - 5 * h + 15 * t)
    recs.append(_rec("[W] at c=-15", g == v, v, g, 3))
    return recs


def suite_zhu(args):
    return zhu_checks(), {}


def suite_curves(args):
    from .ks import intersect_truncation_curves

    r = intersect_truncation_curves()
    pts = [f"({k},{s})" for k, s in r["points"]]
    F = Fraction
    want = sorted([(F(-13, 4), F(-7, 4)), (F(-8, 3), 0), (F(-5, 2), 1), (F(-3, 2), F(-7, 5)),
                   (F(-1), F(-5, 3))])
    recs = [_rec("rational intersection points", r["points"] == want,
                 [f"({k},{s})" for k, s in want], pts),
            _rec("elimination order stable", r["stable"], True, r["stable"])]
    sp = {0: sorted([(F(-5, 2), 1), (F(-7, 3), 1)]), -2: sorted([(F(-2), F(-1, 2)), (F(-11, 4), F(-1, 2))])}
    for c0 in (0, -2):
        recs.append(_rec(f"special points at c={c0}", r["special"][c0] == sp[c0],
                         [f"({k},{s})" for k, s in sp[c0]],
                         [f"({k},{s})" for k, s in r["special"][c0]]))
    return recs, {"points": pts}


def classify_checks():
    from .ks import (g1, g2, hw_eigenvalues, s1_point, s2_point, w0_eigenvalue,
                     w0_eigenvalue_module)

    F = Fraction
    h, q = Scalar.param("h"), Scalar.param("q")
    recs = [_rec("g1(S1(h,q)) = 0", g1(*s1_point(h, q)).is_zero(), 0, g1(*s1_point(h, q))),
            _rec("g2(S2(h,q)) = 0", g2(*s2_point(h, q)).is_zero(), 0, g2(*s2_point(h, q)))]
    w = w0_eigenvalue(h, q, -15, F(-3, 2))
    want = -F(1, 25) * (h + 5) * (h * h - 5 * h + 15 * q)
    unit, facs = w.factor()
    recs.append(_rec("w0 eigenvalue at c=-15", w == want and unit == F(-1, 25) and len(facs) == 2,
                     want, w))
    m = w0_eigenvalue_module(h, q, -15, F(-3, 2))
    recs.append(_rec("w0 eigenvalue, module engine", m == w, w, m))
    for sector, pt in ((0, s1_point(h, q)), (1, s2_point(h, q))):
        ev = hw_eigenvalues(h, q, sector)
        for name, v in zip("JLW", pt):
            recs.append(_rec(f"{name}(0) on v x e^({sector} phi+)", ev[name] == v, v, ev[name]))
        recs.append(_rec(f"G+(0) kills v x e^({sector} phi+)", ev["G+(0) kills"], True,
                         ev["G+(0) kills"]))
    return recs


def suite_classify_demo(args):
    from .ks import classify

    recs = classify_checks()
    demo = {}
    for pt in [(0, 0, 0), (0, Fraction(5, 2), 0)]:
        r = classify(*pt)
        demo["(" + ", ".join(map(str, pt)) + ")"] = {k: (str(v) if not isinstance(v, tuple) else [str(x) for x in v])
                         for k, v in r.items()}
    return recs, {"examples": demo}


def flow_checks(amounts=range(-2, 3)):
    from .flowzhu import PrintedSigma, automorphism_defects, composition_defects, spectral_flow
    from .hwmod import HighestWeightModule, n2_twisted_hw, wsl4sub_hw
    from .presets import n2, wsl4sub

    recs = []
    Q = n2()
    M = HighestWeightModule(n2_twisted_hw(Q, Scalar.param("h"), Scalar.param("q")), cutoff=6)
    qstates = [M.hw.terms, M.apply([("F", 1)]).terms, M.apply([("H", -1)]).terms]
    qmodes = [("H", 0), ("H", 1), ("H", -1), ("T", 1), ("T", 0), ("T", 2), ("E", 0), ("E", 1),
              ("E", -1), ("F", 1), ("F", 2), ("F", 0)]
    P = wsl4sub()
    x, y, z = (Scalar.param(s) for s in "xyz")
    N = HighestWeightModule(wsl4sub_hw(P, x, y, z), cutoff=5)
    pstates = [N.hw.terms, N.apply([("G-", 2)]).terms, N.apply([("J", -1)]).terms]
    pmodes = [("J", 0), ("J", 1), ("L", 1), ("L", 2), ("G+", 0), ("G+", -1), ("G-", 2),
              ("G-", 3), ("W", 2), ("W", 3)]
    for a in amounts:
        bad = automorphism_defects(spectral_flow(Q, a), M, qmodes, qstates)
        recs.append(_rec(f"sigma^{a} preserves brackets", not bad, [], bad))
        bad = automorphism_defects(spectral_flow(P, a), N, pmodes, pstates)
        recs.append(_rec(f"psi^{a} preserves brackets", not bad, [], bad))
    for a in amounts:
        for b in amounts:
            bad = composition_defects(Q, a, b, qmodes) + composition_defects(P, a, b, pmodes)
            recs.append(_rec(f"flow^{a} o flow^{b} = flow^{a + b}", not bad, [], bad))
    printed = automorphism_defects(PrintedSigma(Q, 1), M, qmodes, qstates)
    notes = {"printed_sigma_H_sign": "fails on " + ", ".join(f"[{a}({r}), {b}({s})]"
                                                            for (a, r), (b, s) in printed)}
    return recs, notes


def suite_flow(args):
    return flow_checks()


def singular_checks():
    from .hwmod import gplus_power_kernel, gplus_power_singular
    from .presets import wsl4sub

    P = wsl4sub(-1)
    recs = [_rec("(G+)^2 singular at k=-1", gplus_power_kernel(P, 2), True,
                 gplus_power_kernel(P, 2), 2, 2),
            _rec("G+ not singular at k=-1", not gplus_power_kernel(P, 1), False,
                 gplus_power_kernel(P, 1), 1, 1)]
    for kname, k in (("-1", -1), ("0", 0), ("generic", None)):
        P = wsl4sub(k)
        kval = Scalar.param("k") if k is None else k
        for s in (1, 2, 3):
            crit = gplus_power_singular(4, s, kval)
            ker = gplus_power_kernel(P, s)
            recs.append(_rec(f"(G+)^{s} at k={kname}: criterion = kernel", crit == ker, crit, ker,
                             s, s))
    return recs


def suite_singular(args):
    return singular_checks(), {}


SUITE_FUNCS = {
    "n2-axioms": suite_n2_axioms,
    "wsl4sub-axioms": suite_wsl4sub_axioms,
    "ks-forward": suite_ks_forward,
    "ks-inverse": suite_ks_inverse,
    "zhu": suite_zhu,
    "curves": suite_curves,
    "classify-demo": suite_classify_demo,
    "flow": suite_flow,
    "singular": suite_singular,
}


# -- reports --------------------------------------------------------------------


def make_report(name, recs, notes, elapsed=None):
    recs = sorted(recs, key=lambda r: r["job"]) if notes.pop("_sort", False) else recs
    rep = {"suite": name, "version": __version__, "status":
           "pass" if all(r["status"] == "pass" for r in recs) else "fail",
           "checks": recs, "notes": notes}
    if elapsed is not None:
        rep["timing_seconds"] = round(elapsed, 3)
    return rep


def render(rep, as_json) -> str:
    if as_json:
        return json.dumps(rep, sort_keys=True, indent=2, default=str)
    lines = [f"suite {rep['suite']} (voa {rep['version']}): {rep['status']}"]
    for r in rep["checks"]:
        lines.append(f"  [{r['status']}] {r['job']}")
        if r["status"] != "pass":
            lines.append(f"      expected: {r['expected']}")
            lines.append(f"      got:      {r['got']}")
    for k in sorted(rep["notes"]):
        lines.append(f"  {k}: {json.dumps(rep['notes'][k], sort_keys=True, default=str)}")
    if "timing_seconds" in rep:
        lines.append(f"  time: {rep['timing_seconds']} s")
    return "\n".join(lines)


def _emit(args, name, recs, notes, t0):
    rep = make_report(name, recs, notes, time.perf_counter() - t0 if args.timing else None)
    print(render(rep, args.json))
    return 0 if rep["status"] == "pass" else 1


# -- subcommands ----------------------------------------------------------------


def cmd_run(args):
    t0 = time.perf_counter()
    recs, notes = SUITE_FUNCS[args.suite](args)
    return _emit(args, args.suite, recs, notes, t0)


def _load_algebra(args):
    from .presets import load_preset, PRESETS

    spec = dict(args.bindings)
    for name in ("k", "c"):
        v = getattr(args, name, None)
        if v is not None and v != "generic":
            spec[name] = _param(args, name)
    if args.algebra in PRESETS:
        params = {k: v for k, v in spec.items() if k in ("k", "c")}
        if args.algebra.startswith("wsl4sub"):
            params.pop("c", None)
        else:
            params.pop("k", None)
        return load_preset(args.algebra, **params)
    if os.path.exists(args.algebra):
        from .textfmt import parse_presentation

        with open(args.algebra, encoding="utf-8") as fh:
            P = parse_presentation(fh.read())
        b = {k: v for k, v in spec.items() if k in P.parameters}
        return P.specialize(b) if b else P
    raise InputError(f"unknown algebra {args.algebra!r}: not a preset or a file")


def cmd_singular(args):
    from .hwmod import WSL4_PATTERN, HighestWeightModule, vacuum_spec

    t0 = time.perf_counter()
    P = _load_algebra(args)
    try:
        charge = tuple(int(c) for c in args.charge.split(",")) if args.charge else None
    except ValueError:
        raise InputError(f"bad --charge {args.charge!r}; expected integers") from None
    M = HighestWeightModule(vacuum_spec(P), cutoff=args.weight)
    pattern = WSL4_PATTERN if "G+" in P.index else None
    vecs = M.singular_vectors(args.weight, charge, pattern=pattern)
    recs = [_rec(f"singular vector {i}", True, "", M.format(v.terms), args.weight,
                 args.charge or "") for i, v in enumerate(vecs)]
    return _emit(args, "singular", recs, {"dimension": len(vecs)}, t0)


def _parse_zhu_expr(P, text):
    from .textfmt import parse_expr

    t = text.strip()
    if t.startswith("[") and t.endswith("]"):
        inner = t[1:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            elif ch == "," and depth == 0:
                return "commutator", (parse_expr(P, inner[:i]), parse_expr(P, inner[i + 1:]))
        raise InputError("a bracket expression needs two comma-separated arguments")
    return "project", parse_expr(P, t)


def cmd_zhu(args):
    from .flowzhu import ZhuAlgebra

    t0 = time.perf_counter()
    P = _load_algebra(args)
    Z = ZhuAlgebra(P)
    kind, val = _parse_zhu_expr(P, args.expr)
    trace = []
    if kind == "commutator":
        A, B = val
        state = Z.commutator_state(A, B)
        trace.append({"step": "commutator state", "value": str(state)})
        res = Z.project(A) * Z.project(B) - Z.project(B) * Z.project(A)
    else:
        state = val
        res = Z.project(val)
    for mono in sorted(state.terms, key=lambda m: (len(m), repr(m))):
        from .flowzhu import ZhuPolynomial

        trace.append({"step": "project", "term": str(Expr(P, {mono: state.terms[mono]})),
                      "value": str(ZhuPolynomial(Z, Z.project_terms({mono: state.terms[mono]})))})
    recs = [_rec(args.expr, True, "", res)]
    notes = {"result": str(res)}
    if args.json:
        notes["trace"] = trace
    return _emit(args, "zhu", recs, notes, t0)


def cmd_ks(args):
    t0 = time.perf_counter()
    if args.action != "verify":
        raise InputError(f"unknown ks action {args.action!r}")
    from .ks import commutant_check, forward_embedding, inverse_embedding

    if args.direction == "forward":
        emb = forward_embedding()
        recs = [_from_record(r) for r in emb.verify()]
        heis = emb.target.gen("J") + emb.target.embed_right(emb.target.right.phi())
    else:
        emb = inverse_embedding()
        recs = [_from_record(r) for r in emb.verify()] + inverse_display_checks(emb)
        heis = emb.target.gen("H") - emb.target.embed_right(emb.target.right.phi())
    cutoff = _default_cutoff(args.cutoff, 2)
    recs += [_from_record(r) for r in commutant_check(heis, emb, cutoff=cutoff)]
    return _emit(args, f"ks-{args.direction}", recs, {"commutant_cutoff": cutoff}, t0)


def cmd_curves(args):
    t0 = time.perf_counter()
    recs, notes = suite_curves(args)
    return _emit(args, "curves", recs, notes, t0)


def cmd_classify(args):
    from .ks import classify

    t0 = time.perf_counter()
    try:
        x, y, z = (parse_scalar(v) for v in (args.x, args.y, args.z))
    except (ValueError, ScalarError) as e:
        raise InputError(str(e)) from None
    r = classify(x, y, z)
    member = r["S1"] is not None or r["S2"] is not None
    notes = {"g1": str(r["g1"]), "g2": str(r["g2"]),
             "S1": None if r["S1"] is None else {"h": str(r["S1"][0]), "q": str(r["S1"][1])},
             "S2": None if r["S2"] is None else {"h": str(r["S2"][0]), "q": str(r["S2"][1])},
             "top_dim": r["top_dim"]}
    recs = [_rec(f"({args.x}, {args.y}, {args.z}) in S1 or S2", member, "member",
                 "member" if member else "no highest-weight module over the simple quotient")]
    return _emit(args, "classify", recs, notes, t0)


def cmd_check(args):
    """Parse a presentation (file or preset), validate, optionally run Jacobi."""
    from .checks import check_jacobi, check_skew, check_weights

    t0 = time.perf_counter()
    P = _load_algebra(args)
    ids = check_weights(P) + check_skew(P)
    if args.jacobi is not None:
        ids += check_jacobi(P, args.jacobi)
    recs = [_rec(i.label, i.ok, "0", i.residual, _w(i.weight)) for i in ids]
    bad = [i for i in ids if not i.ok]
    notes = {"algebra": P.name}
    if bad:
        worst = min(bad, key=lambda i: (i.weight if i.weight is not None else 0, len(i.residual)))
        notes["minimal_failure"] = worst.label
    return _emit(args, "check", recs, notes, t0)


def cmd_print(args):
    from .textfmt import print_presentation

    P = _load_algebra(args)
    sys.stdout.write(print_presentation(P))
    return 0


# -- entry point ----------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timing", action="store_true", help="include wall-clock time")
    common.add_argument("--specialize", default=None, metavar="k=-1,c=-15",
                        help="bind parameters")
    common.add_argument("--cutoff", type=int, default=None,
                        help="weight cutoff (default: VOA_CUTOFF or the suite default)")
    common.add_argument("--k", default=None)
    common.add_argument("--c", default=None)

    p = argparse.ArgumentParser(prog="voa", description="OPE calculus for vertex superalgebras")
    p.add_argument("--version", action="version", version=f"voa {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", parents=[common], help="run a verification suite")
    r.add_argument("suite", choices=SUITES)
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("singular", parents=[common], help="singular vectors of a vacuum module")
    s.add_argument("--algebra", required=True)
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--charge", default=None)
    s.set_defaults(func=cmd_singular)

    z = sub.add_parser("zhu", parents=[common], help="Zhu-algebra projection")
    z.add_argument("--algebra", required=True)
    z.add_argument("--expr", required=True, help="an expression, or [A, B] for a commutator")
    z.set_defaults(func=cmd_zhu)

    k = sub.add_parser("ks", parents=[common], help="Kazama-Suzuki embedding checks")
    k.add_argument("action", choices=["verify"])
    k.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    k.set_defaults(func=cmd_ks)

    c = sub.add_parser("curves", parents=[common], help="truncation-curve intersections")
    c.add_argument("action", choices=["intersect"])
    c.set_defaults(func=cmd_curves)

    cl = sub.add_parser("classify", parents=[common], help="S1/S2 membership of (x, y, z)")
    cl.add_argument("--x", required=True)
    cl.add_argument("--y", required=True)
    cl.add_argument("--z", required=True)
    cl.set_defaults(func=cmd_classify)

    ch = sub.add_parser("check", parents=[common], help="validate a presentation file or preset")
    ch.add_argument("algebra")
    ch.add_argument("--jacobi", type=int, default=None, metavar="CUTOFF")
    ch.set_defaults(func=cmd_check)

    pr = sub.add_parser("print", parents=[common], help="print a presentation in text format")
    pr.add_argument("algebra")
    pr.set_defaults(func=cmd_print)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.bindings = parse_specialize(args.specialize)
        return args.func(args)
    except (InputError, PresentationError, ScalarError) as e:
        print(f"voa: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
