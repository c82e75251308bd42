"""Command-line front end.

Every library operation is exposed as a verb.  Output is deterministic:
the same invocation with the same --seed produces byte-identical output.

Exit codes: 0 success, 1 domain error (the input is well formed but the
operation does not apply), 2 syntax or usage error.
"""

import json
import random
import re
import shlex
import sys
from fractions import Fraction

from .basefield import BaseField, Poly, RatFunc
from .diffpoly import DerivVar, DiffPoly, ritt_reduce, in_general_ideal
from .errors import DiffAlgError, NotApplicable, ParseError
from .galois import (classify_antiderivative_extension,
                     classify_exponential_extension, descriptor_dimension,
                     GroupKind)
from .matgroup import (catalog_group, ConstMatrix, gl_invariance_witness,
                       group_contains, GroupLabel)
from .odeseries import fundamental_system_series
from .parsing import (parse_diffpoly, parse_fraction, parse_matrix,
                      parse_ratfunc)
from .wronskian import (dependence_certificate, FundamentalSystem,
                        LinearODE, ode_from_fundamental_system, wronskian)

_USAGE = """\
usage: diffalg VERB [ARGS] [--format text|json] [--seed N]
               [--precision N] [--base-point Q] [--mod POLY] [--matrix M]

verbs:
  derive EXPR               derivative of a differential polynomial
  order EXPR                largest derivative order present (-1 if none)
  separant EXPR             partial derivative with respect to the leader
  reduce EXPR --mod P       Ritt reduction with certificate
  member EXPR --mod P       membership in the general-solution ideal of P
  wronskian F1 [F2 ...]     Wronskian determinant of rational functions
  depend F1 [F2 ...]        linear dependence over the constants
  ode-from F1 [F2 ...]      monic linear ODE with the given solution basis
  solve-series A1 [A2 ...]  series fundamental system of y^(n)+a1*y^(n-1)+...
  classify-int A            Galois group of an antiderivative of A
  classify-exp A            Galois group of an exponential of A
  group-check GROUP MATRIX  membership in a catalog matrix group
  gl-witness N              invariance of Wronskian coefficient ratios

GROUP is one of gl<n>, sl<n>, unipotent, gm, mu<k>.  MATRIX literals use
commas between entries and semicolons between rows, e.g. "1,0;0,1".
With no arguments, commands are read one per line from standard input.
"""


class UsageError(Exception):
    pass


_FLAGS = ("--format", "--seed", "--precision", "--base-point", "--mod",
          "--matrix")


def _split_argv(argv):
    positionals = []
    flags = {}
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg.startswith("--"):
            if "=" in arg:
                name, value = arg.split("=", 1)
            else:
                name = arg
                if name not in _FLAGS:
                    raise UsageError("unknown option %s" % name)
                if i + 1 >= len(argv):
                    raise UsageError("option %s needs a value" % name)
                i += 1
                value = argv[i]
            if name not in _FLAGS:
                raise UsageError("unknown option %s" % name)
            flags[name] = value
        else:
            positionals.append(arg)
        i += 1
    return positionals, flags


class _Options:
    def __init__(self, flags: dict):
        self.format = flags.get("--format", "text")
        if self.format not in ("text", "json"):
            raise UsageError("--format must be text or json")
        try:
            self.seed = int(flags.get("--seed", "0"))
            self.precision = int(flags.get("--precision", "16"))
        except ValueError:
            raise UsageError("--seed and --precision take integers") from None
        self.base_point = parse_fraction(flags.get("--base-point", "0"))
        self.mod = flags.get("--mod")
        self.matrix = flags.get("--matrix")


def _need(positionals, count, usage):
    if len(positionals) != count:
        raise UsageError("usage: diffalg %s" % usage)


def _need_some(positionals, usage):
    if not positionals:
        raise UsageError("usage: diffalg %s" % usage)


def _single_indeterminate(p: DiffPoly, verb: str) -> DiffPoly:
    if p.num_indeterminates > 1:
        raise NotApplicable("%s needs a single-indeterminate polynomial"
                            % verb)
    return p


def _modulus(opts) -> DiffPoly:
    if opts.mod is None:
        raise UsageError("this verb needs --mod POLY")
    return _single_indeterminate(parse_diffpoly(opts.mod), "--mod")


def _cmd_derive(pos, opts):
    _need(pos, 1, "derive EXPR")
    d = parse_diffpoly(pos[0]).derive()
    return str(d), {"kind": "diffpoly", "result": str(d)}


def _cmd_order(pos, opts):
    _need(pos, 1, "order EXPR")
    p = parse_diffpoly(pos[0])
    if p.is_zero():
        raise NotApplicable("the zero polynomial has no order")
    vs = p.variables()
    n = max(v.order for v in vs) if vs else -1
    return str(n), {"kind": "int", "result": n}


def _cmd_separant(pos, opts):
    _need(pos, 1, "separant EXPR")
    s = _single_indeterminate(parse_diffpoly(pos[0]), "separant").separant()
    return str(s), {"kind": "diffpoly", "result": str(s)}


def _cmd_reduce(pos, opts):
    _need(pos, 1, "reduce EXPR --mod P")
    q = _single_indeterminate(parse_diffpoly(pos[0]), "reduce")
    res = ritt_reduce(q, _modulus(opts))
    lines = ["remainder: %s" % res.remainder,
             "separant_power: %d" % res.sep_power,
             "initial_power: %d" % res.init_power]
    cert = []
    for idx, (k, cof) in enumerate(res.certificate):
        lines.append("certificate[%d]: derivative %d, cofactor %s"
                     % (idx, k, cof))
        cert.append({"derivative": k, "cofactor": str(cof)})
    payload = {"kind": "reduction", "result": str(res.remainder),
               "separant_power": res.sep_power,
               "initial_power": res.init_power, "certificate": cert}
    return "\n".join(lines), payload


def _cmd_member(pos, opts):
    _need(pos, 1, "member EXPR --mod P")
    q = _single_indeterminate(parse_diffpoly(pos[0]), "member")
    ok = in_general_ideal(q, _modulus(opts))
    return ("true" if ok else "false"), {"kind": "bool", "result": ok}


def _cmd_wronskian(pos, opts):
    _need_some(pos, "wronskian F1 [F2 ...]")
    w = wronskian([parse_ratfunc(f) for f in pos])
    return str(w), {"kind": "ratfunc", "result": str(w)}


def _cmd_depend(pos, opts):
    _need_some(pos, "depend F1 [F2 ...]")
    cert = dependence_certificate([parse_ratfunc(f) for f in pos])
    if cert is None:
        return "false", {"kind": "bool", "result": False}
    text = "true\ncertificate: %s" % " ".join(str(c) for c in cert)
    return text, {"kind": "bool", "result": True,
                  "certificate": [str(c) for c in cert]}


def _cmd_ode_from(pos, opts):
    _need_some(pos, "ode-from F1 [F2 ...]")
    fs = FundamentalSystem([parse_ratfunc(f) for f in pos])
    ode = ode_from_fundamental_system(fs)
    return str(ode), {"kind": "ode", "result": str(ode),
                      "coefficients": [str(a) for a in ode.coeffs]}


def _cmd_solve_series(pos, opts):
    _need_some(pos, "solve-series A1 [A2 ...] [--precision N] "
               "[--base-point Q]")
    ode = LinearODE(len(pos), [parse_ratfunc(a) for a in pos])
    sols = fundamental_system_series(ode, opts.base_point, opts.precision)
    return ("\n".join(str(s) for s in sols),
            {"kind": "series", "result": [str(s) for s in sols]})


def _descriptor_output(d):
    payload = {"group": d.kind.value}
    if d.kind is GroupKind.CYCLIC:
        payload["n"] = d.n
        payload["beta"] = str(d.witness)
        payload["minimal_polynomial"] = d.minimal_polynomial()
    elif d.witness is not None:
        payload["witness"] = str(d.witness)
    payload["dimension"] = descriptor_dimension(d)

    parts = [d.kind.value]
    if d.kind is GroupKind.CYCLIC:
        parts.append("n=%d" % d.n)
        parts.append("beta=%s" % d.witness)
    parts.append("dimension=%d" % payload["dimension"])
    if d.kind is GroupKind.CYCLIC:
        parts.append("minimal_polynomial=%s" % d.minimal_polynomial())
    elif d.witness is not None:
        parts.append("witness=%s" % d.witness)
    return " ".join(parts), payload


def _cmd_classify_int(pos, opts):
    _need(pos, 1, "classify-int A")
    return _descriptor_output(
        classify_antiderivative_extension(parse_ratfunc(pos[0])))


def _cmd_classify_exp(pos, opts):
    _need(pos, 1, "classify-exp A")
    return _descriptor_output(
        classify_exponential_extension(parse_ratfunc(pos[0])))


_GROUP_PATTERN = re.compile(r"^(gl|sl|mu)([0-9]+)$")


def _named_group(label: str):
    if label == "unipotent":
        return catalog_group(GroupLabel.UNIPOTENT_ADDITIVE, 2)
    if label == "gm":
        return catalog_group(GroupLabel.DIAGONAL_MULTIPLICATIVE, 1)
    m = _GROUP_PATTERN.match(label)
    if m is None:
        raise UsageError("unknown group %r; use gl<n>, sl<n>, unipotent, "
                         "gm, or mu<k>" % label)
    family, number = m.group(1), int(m.group(2))
    if family == "gl":
        return catalog_group(GroupLabel.GENERAL_LINEAR, number)
    if family == "sl":
        return catalog_group(GroupLabel.SPECIAL_LINEAR, number)
    return catalog_group(GroupLabel.ROOTS_OF_UNITY, 1, unity_order=number)


def _cmd_group_check(pos, opts):
    _need(pos, 2, "group-check GROUP MATRIX")
    group = _named_group(pos[0])
    ok = group_contains(group, parse_matrix(pos[1]))
    return ("true" if ok else "false"), {"kind": "bool", "result": ok}


def _random_invertible(rng: random.Random, n: int) -> ConstMatrix:
    while True:
        m = ConstMatrix.from_rows(
            [[Fraction(rng.randint(-5, 5)) for _ in range(n)]
             for _ in range(n)])
        if m.det() != 0:
            return m


def _generic_point(rng: random.Random, n: int) -> dict:
    # degree-i polynomial for slot i: distinct degrees keep the point
    # off the Wronskian hypersurface
    point = {}
    for i in range(n):
        coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(i)]
        coeffs.append(Fraction(rng.randint(1, 5)))
        f = RatFunc(Poly(coeffs), 1, BaseField.RATIONAL)
        for order in range(n + 1):
            point[DerivVar(order, i)] = f
            f = f.derive()
    return point


def _cmd_gl_witness(pos, opts):
    _need(pos, 1, "gl-witness N [--seed S] [--matrix M]")
    try:
        n = int(pos[0])
    except ValueError:
        raise UsageError("gl-witness needs an integer size") from None
    if n < 1:
        raise NotApplicable("matrix size must be at least 1")
    rng = random.Random(opts.seed)
    if opts.matrix is not None:
        transform = parse_matrix(opts.matrix)
    else:
        transform = _random_invertible(rng, n)
    ok = gl_invariance_witness(n, transform, _generic_point(rng, n))
    return ("true" if ok else "false"), {"kind": "bool", "result": ok}


_HANDLERS = {
    "derive": _cmd_derive,
    "order": _cmd_order,
    "separant": _cmd_separant,
    "reduce": _cmd_reduce,
    "member": _cmd_member,
    "wronskian": _cmd_wronskian,
    "depend": _cmd_depend,
    "ode-from": _cmd_ode_from,
    "solve-series": _cmd_solve_series,
    "classify-int": _cmd_classify_int,
    "classify-exp": _cmd_classify_exp,
    "group-check": _cmd_group_check,
    "gl-witness": _cmd_gl_witness,
}


def _emit_error(category: str, message: str, fmt: str, stdout, stderr,
                column: int | None = None):
    if fmt == "json":
        payload = {"error": category, "message": message}
        if column is not None:
            payload["column"] = column
        print(json.dumps(payload, separators=(",", ":")), file=stdout)
    else:
        suffix = "" if column is None else " (column %d)" % column
        print("error: %s%s" % (message, suffix), file=stderr)


def run(argv, stdout=sys.stdout, stderr=sys.stderr) -> int:
    """Execute one command line (without the program name)."""
    fmt = "text"
    try:
        positionals, flags = _split_argv(argv)
        opts = _Options(flags)
        fmt = opts.format
        if not positionals:
            raise UsageError("missing verb")
        verb = positionals[0]
        handler = _HANDLERS.get(verb)
        if handler is None:
            raise UsageError("unknown verb %r" % verb)
        text, payload = handler(positionals[1:], opts)
    except UsageError as exc:
        _emit_error("usage", str(exc), fmt, stdout, stderr)
        return 2
    except ParseError as exc:
        _emit_error("syntax", exc.message, fmt, stdout, stderr,
                    column=exc.column)
        return 2
    except ZeroDivisionError as exc:
        _emit_error("domain", str(exc) or "division by zero", fmt, stdout,
                    stderr)
        return 1
    except DiffAlgError as exc:
        _emit_error("domain", str(exc), fmt, stdout, stderr)
        return 1
    if fmt == "json":
        print(json.dumps(payload, separators=(",", ":")), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def _batch(stdin, stdout, stderr) -> int:
    for line in stdin:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            parts = shlex.split(line)
        except ValueError as exc:
            print("error: %s" % exc, file=stderr)
            return 2
        code = run(parts, stdout, stderr)
        if code != 0:
            return code
    return 0


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if argv and argv[0] in ("-h", "--help"):
        print(_USAGE, end="")
        return 0
    if not argv:
        return _batch(sys.stdin, sys.stdout, sys.stderr)
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
