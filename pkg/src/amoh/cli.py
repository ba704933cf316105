"""Command-line front end: exact expression parsing, subcommands wrapping
the library operations, and stable text/JSON output.

Polynomials are written in z (curves) or x, y (planar maps), with integer
and rational literals, + - *, ^ with a nonnegative integer exponent, and
parentheses.  Multiplication is always explicit: 2*z^2, never 2z^2.  All
scalars serialize as exact rational strings.

Exit status: 0 when a result was computed, even a negative verdict;
1 on usage, parse, or domain errors; 2 when an internal cross-check
failed, which is a bug worth reporting.
"""

from __future__ import annotations

import argparse
import json
import string
import sys
from fractions import Fraction

from .decompose import common_parameter
from .errors import (
    AmohError,
    InternalInconsistency,
    InternalLimitExceeded,
    NotInSemigroup,
    ParseError,
)
from .field_poly import BivarExpr, Poly
from .jacobian import BiPoly, prop21_probe
from .line import is_line, random_line_curve
from .subalgebra import delta_sequence, is_member, sagbi_basis, semigroup_represent
from .theorems import check_prop22, check_strong_am

__all__ = ["parse_poly", "render_poly", "main", "run"]

MAX_EXPONENT = 4096
MAX_DEGREE = 10_000
MAX_PAREN_DEPTH = 200


# ---------------------------------------------------------------------------
# expression parsing

_DIGITS = frozenset("0123456789")
_LETTERS = frozenset(string.ascii_letters + "_")


def _tokenize(text: str):
    # Only ASCII digits and letters: str.isdigit accepts characters like
    # superscript two that int() then rejects.
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _DIGITS:
            j = i
            while j < len(text) and text[j] in _DIGITS:
                j += 1
            out.append(("num", int(text[i:j]), i))
            i = j
            continue
        if ch in _LETTERS:
            j = i
            while j < len(text) and (text[j] in _LETTERS or text[j] in _DIGITS):
                j += 1
            out.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            out.append(("sym", ch, i))
            i += 1
            continue
        raise ParseError(
            f"unexpected character {ch!r}", i, expected=("digit", "variable", "operator")
        )
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent over the token list.  `atoms` maps variable names
    to their values; `const` lifts a Fraction into the target algebra.  The
    same grammar therefore serves Poly and BiPoly inputs."""

    def __init__(self, tokens, atoms, const):
        self.tokens = tokens
        self.pos = 0
        self.atoms = atoms
        self.const = const
        self.depth = 0

    def _peek(self):
        return self.tokens[self.pos]

    def _take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect_sym(self, ch):
        kind, value, pos = self._peek()
        if kind != "sym" or value != ch:
            raise ParseError("unexpected token", pos, expected=(ch,))
        return self._take()

    def _guard(self, value, pos):
        deg = value.degree if isinstance(value, Poly) else value.y_degree
        if isinstance(deg, int) and deg > MAX_DEGREE:
            raise ParseError("expression degree is too large", pos)
        return value

    def parse(self):
        value = self.expr()
        kind, _, pos = self._peek()
        if kind != "end":
            raise ParseError("trailing input", pos, expected=("+", "-", "*", "^", "end"))
        return value

    def expr(self):
        kind, value, pos = self._peek()
        if kind == "sym" and value == "-":
            self._take()
            acc = -self.term()
        else:
            acc = self.term()
        while True:
            kind, value, pos = self._peek()
            if kind != "sym" or value not in "+-":
                return acc
            self._take()
            rhs = self.term()
            acc = self._guard(acc + rhs if value == "+" else acc - rhs, pos)

    def term(self):
        acc = self.factor()
        while True:
            kind, value, pos = self._peek()
            if kind != "sym" or value != "*":
                return acc
            self._take()
            acc = self._guard(acc * self.factor(), pos)

    def factor(self):
        base = self.atom()
        kind, value, pos = self._peek()
        if kind != "sym" or value != "^":
            return base
        self._take()
        kind, value, pos = self._peek()
        if kind != "num":
            raise ParseError(
                "exponent must be a nonnegative integer", pos, expected=("integer",)
            )
        self._take()
        if value > MAX_EXPONENT:
            raise ParseError("exponent is too large", pos)
        return self._guard(base**value, pos)

    def atom(self):
        kind, value, pos = self._take()
        if kind == "num":
            nk, nv, npos = self._peek()
            if nk == "sym" and nv == "/":
                self._take()
                dk, dv, dpos = self._peek()
                if dk != "num":
                    raise ParseError("denominator must be an integer", dpos, expected=("integer",))
                self._take()
                if dv == 0:
                    raise ParseError("zero denominator", dpos)
                return self.const(Fraction(value, dv))
            return self.const(Fraction(value))
        if kind == "name":
            got = self.atoms.get(value)
            if got is None:
                raise ParseError(
                    f"unknown variable {value!r}", pos, expected=tuple(sorted(self.atoms))
                )
            return got
        if kind == "sym" and value == "(":
            self.depth += 1
            if self.depth > MAX_PAREN_DEPTH:
                raise ParseError("parentheses nested too deeply", pos)
            inner = self.expr()
            self._expect_sym(")")
            self.depth -= 1
            return inner
        raise ParseError(
            "unexpected token", pos, expected=("number", "variable", "(", "-")
        )


def parse_poly(text: str, variable: str = "z") -> Poly:
    """Parse a univariate polynomial over Q in the named variable."""
    parser = _Parser(
        _tokenize(text),
        {variable: Poly.variable(Fraction)},
        lambda c: Poly.constant(c, Fraction),
    )
    return parser.parse()


def _parse_plane(text: str) -> BiPoly:
    parser = _Parser(
        _tokenize(text),
        {"x": BiPoly.x(), "y": BiPoly.y()},
        BiPoly.constant,
    )
    return parser.parse()


# ---------------------------------------------------------------------------
# rendering

def render_poly(p: Poly, variable: str = "z") -> str:
    """High-to-low rendering that parse_poly inverts exactly."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = head + (variable if i == 1 else f"{variable}^{i}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _scalar_str(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    # a rational function over x
    num = render_poly(c.num, "x")
    if c.den == Poly.one(Fraction):
        return num
    return f"({num})/({render_poly(c.den, 'x')})"


def _monomial_str(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("X" if i == 1 else f"X^{i}")
    if j:
        parts.append("Y" if j == 1 else f"Y^{j}")
    return "*".join(parts)


def render_expr(expr: BivarExpr) -> str:
    """Certificates and inverses as expressions in X, Y (placeholders for
    f and g), lowest weight first: 'Y - X^2', 'X*Y - X^3'."""
    terms = expr.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for i, j, c in terms:
        mono = _monomial_str(i, j)
        if isinstance(c, Fraction):
            neg, mag = c < 0, abs(c)
            body = str(mag) if not mono else mono if mag == 1 else f"{mag}*{mono}"
        else:
            neg, body = False, f"({_scalar_str(c)})" + (f"*{mono}" if mono else "")
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _cert_terms(expr: BivarExpr):
    return [
        {"i": i, "j": j, "coeff": _scalar_str(c)} for i, j, c in expr.sorted_terms()
    ]


def _tuple_str(xs) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


def _emit(obj, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(obj))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands

def _reason_obj(reason):
    out = {"kind": reason.kind}
    for key in ("which", "m", "n", "deg_h"):
        value = getattr(reason, key)
        if value is not None:
            out[key] = value
    return out


def _reason_text(reason) -> str:
    detail = ", ".join(
        f"{key}={getattr(reason, key)}"
        for key in ("which", "m", "n", "deg_h")
        if getattr(reason, key) is not None
    )
    return reason.kind + (f" ({detail})" if detail else "")


def _cmd_is_line(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    verdict = is_line(f, g)
    obj = {
        "is_line": verdict.is_line,
        "reason": _reason_obj(verdict.reason),
        "inverse": _cert_terms(verdict.inverse) if verdict.inverse is not None else None,
    }
    lines = [f"line: {'yes' if verdict.is_line else 'no'}"]
    if verdict.inverse is not None:
        lines.append(f"inverse: {render_expr(verdict.inverse)}")
    if not verdict.is_line:
        lines.append(f"reason: {_reason_text(verdict.reason)}")
    _emit(obj, args.json, lines)
    return 0


def _member_obj(res):
    if res.member:
        return {"member": True, "certificate": _cert_terms(res.certificate)}
    return {"member": False, "obstruction_degree": res.obstruction_degree}


def _member_text(res):
    if res.member:
        return [f"member: yes", f"certificate: {render_expr(res.certificate)}"]
    return [f"member: no (obstruction at degree {res.obstruction_degree})"]


def _cmd_member(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    if args.u != "-":
        res = is_member(parse_poly(args.u), f, g)
        _emit(_member_obj(res), args.json, _member_text(res))
        return 0
    # batch: one query polynomial per line, blank lines skipped
    status = 0
    for raw in sys.stdin:
        text = raw.strip()
        if not text:
            continue
        try:
            res = is_member(parse_poly(text), f, g)
        except ParseError as exc:
            status = 1
            if args.json:
                print(json.dumps({"u": text, "error": str(exc)}))
            else:
                print(f"{text}: error: {exc}")
            continue
        if args.json:
            print(json.dumps({"u": text, **_member_obj(res)}))
        else:
            verdict = "member" if res.member else "not a member"
            print(f"{text}: {verdict}")
    return status


def _cmd_sagbi(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    basis = sagbi_basis(f, g)
    obj = {
        "degrees": list(basis.degrees),
        "elements": [
            {
                "degree": el.degree,
                "poly": render_poly(el.poly),
                "provenance": _cert_terms(el.provenance),
            }
            for el in basis.elements
        ],
    }
    lines = [
        f"degree {el.degree}: {render_poly(el.poly)} (from {render_expr(el.provenance)})"
        for el in basis.elements
    ]
    _emit(obj, args.json, lines)
    return 0


def _cmd_delta(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    seq = delta_sequence(f, g)
    obj = {"deltas": list(seq.deltas), "ds": list(seq.ds), "h": seq.h}
    lines = [
        f"delta = {_tuple_str(seq.deltas)}",
        f"d = {_tuple_str(seq.ds)}",
        f"h = {seq.h}",
    ]
    _emit(obj, args.json, lines)
    return 0


def _cmd_represent(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    seq = delta_sequence(f, g)
    deltas = _tuple_str(seq.deltas)
    try:
        rep = semigroup_represent(args.degree, seq)
    except NotInSemigroup:
        obj = {"representable": False, "degree": args.degree, "deltas": list(seq.deltas)}
        _emit(obj, args.json, [f"degree {args.degree} is not representable over δ = {deltas}"])
        return 0
    obj = {
        "representable": True,
        "degree": args.degree,
        "alphas": list(rep.alphas),
        "deltas": list(seq.deltas),
    }
    _emit(obj, args.json, [f"α = {_tuple_str(rep.alphas)} over δ = {deltas}"])
    return 0


def _cmd_decompose(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    dec = common_parameter(f, g)
    obj = {
        "h": render_poly(dec.h),
        "f_tilde": render_poly(dec.f_tilde, "w"),
        "g_tilde": render_poly(dec.g_tilde, "w"),
        "faithful": dec.h.degree == 1,
    }
    lines = [
        f"h = {render_poly(dec.h)}",
        f"f = f~(h) with f~ = {render_poly(dec.f_tilde, 'w')}",
        f"g = g~(h) with g~ = {render_poly(dec.g_tilde, 'w')}",
    ]
    _emit(obj, args.json, lines)
    return 0


def _strong_am_obj(rep):
    return {
        "a": rep.a,
        "applicable": rep.applicable,
        "u_degree": rep.u_degree,
        "v_degree": rep.v_degree,
        "u_witness": _cert_terms(rep.u_witness) if rep.u_witness is not None else None,
        "v_witness": _cert_terms(rep.v_witness) if rep.v_witness is not None else None,
        "divisibility_holds": rep.divisibility_holds,
    }


def _strong_am_text(rep) -> str:
    if not rep.applicable:
        return f"a={rep.a}: not applicable"
    return (
        f"a={rep.a}: applicable, deg u = {rep.u_degree}, deg v = {rep.v_degree}, "
        f"divisibility {'holds' if rep.divisibility_holds else 'FAILS'}"
    )


def _cmd_strong_am(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    if args.a is not None:
        rep = check_strong_am(f, g, args.a)
        _emit(_strong_am_obj(rep), args.json, [_strong_am_text(rep)])
        return 0
    top = min(f.degree, g.degree) if not f.is_constant and not g.is_constant else 0
    reports = [check_strong_am(f, g, a) for a in range(1, top + 1)]
    _emit(
        {"reports": [_strong_am_obj(r) for r in reports]},
        args.json,
        [_strong_am_text(r) for r in reports] or ["no admissible a"],
    )
    return 0


def _cmd_prop22(args) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    rep = check_prop22(f, g)
    obj = {
        "condition_221_holds": rep.condition_221_holds,
        "a": _scalar_str(rep.a) if rep.a is not None else None,
        "condition_222_holds": rep.condition_222_holds,
        "b": _scalar_str(rep.b) if rep.b is not None else None,
        "is_line": rep.is_line,
        "canonical_c": _scalar_str(rep.canonical_c) if rep.canonical_c is not None else None,
        "canonical_b": _scalar_str(rep.canonical_b) if rep.canonical_b is not None else None,
        "derived_derivatives_verified": rep.derived_derivatives_verified,
    }
    lines = [
        "derivative combination n*f'*g - m*f*g' constant: "
        + (f"yes (a = {_scalar_str(rep.a)})" if rep.condition_221_holds else "no"),
        "power difference f^(n/d) - g^(m/d) constant: "
        + (f"yes (b = {_scalar_str(rep.b)})" if rep.condition_222_holds else "no"),
        f"line: {'yes' if rep.is_line else 'no'}",
    ]
    if rep.canonical_c is not None:
        lines.append(
            f"canonical form: f = z + c, g = (z+c)^n - b with "
            f"c = {_scalar_str(rep.canonical_c)}, b = {_scalar_str(rep.canonical_b)}"
        )
    _emit(obj, args.json, lines)
    return 0


def _cmd_jacobian_probe(args) -> int:
    f, g = _parse_plane(args.f), _parse_plane(args.g)
    rep = prop21_probe(f, g)
    obj = {
        "jacobian_constant": rep.jacobian_constant,
        "fy_member": rep.fy_member.member,
        "gy_member": rep.gy_member.member,
        "fy_certificate": _cert_terms(rep.fy_member.certificate)
        if rep.fy_member.certificate is not None
        else None,
        "gy_certificate": _cert_terms(rep.gy_member.certificate)
        if rep.gy_member.certificate is not None
        else None,
    }
    lines = [
        f"jacobian determinant constant: {'yes' if rep.jacobian_constant else 'no'}",
        f"f_y in k(x)[f, g]: {'yes' if rep.fy_member.member else 'no'}",
        f"g_y in k(x)[f, g]: {'yes' if rep.gy_member.member else 'no'}",
    ]
    _emit(obj, args.json, lines)
    return 0


def corpus_pairs(count: int, seed: int):
    """Deterministic test corpus: automorphism lines, the small lines
    composed with z^2 and z^3 (unfaithful non-lines), and degree-(3, 2)
    obstruction curves f = z^3 + a*z, g = f^2 + z^2 + c.  Yields
    (kind, f, g) with kind in line | composed_square | composed_cube |
    pattern."""
    n_lines = max(1, (count * 11 + 19) // 20)
    n_comp = count // 8
    n_pattern = max(0, count - n_lines - 2 * n_comp)
    lines = [
        random_line_curve(seed * 1009 + i, 3 + i % 6, 2) for i in range(n_lines)
    ]
    for f, g in lines:
        yield "line", f, g
    small = [
        (f, g)
        for f, g in lines
        if not f.is_constant and not g.is_constant and max(f.degree, g.degree) <= 10
    ] or [(Poly.variable(Fraction), Poly.variable(Fraction) ** 2)]
    for power, kind in ((2, "composed_square"), (3, "composed_cube")):
        inner = Poly.variable(Fraction) ** power
        for k in range(n_comp):
            f, g = small[k % len(small)]
            yield kind, f.compose(inner), g.compose(inner)
    z = Poly.variable(Fraction)
    for k in range(n_pattern):
        a, c = Fraction(k % 5 - 2), Fraction(k % 7 - 3)
        f = z**3 + z.scale(a)
        g = f * f + z * z + Poly.constant(c, Fraction)
        yield "pattern", f, g


def _cmd_gen_corpus(args) -> int:
    sink = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
    try:
        for kind, f, g in corpus_pairs(args.count, args.seed):
            record = {"kind": kind, "f": render_poly(f), "g": render_poly(g)}
            sink.write(json.dumps(record) + "\n")
    finally:
        if sink is not sys.stdout:
            sink.close()
    return 0


# ---------------------------------------------------------------------------
# wiring

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="amoh",
        description="Exact checks for embedded plane lines k[f(z), g(z)] = k[z].",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def curve_command(name, help_text, handler):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--f", required=True, help="first generator, a polynomial in z")
        p.add_argument("--g", required=True, help="second generator, a polynomial in z")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    curve_command("is-line", "decide whether (f, g) is an embedded line", _cmd_is_line)
    p = curve_command("member", "test u for membership in k[f, g]", _cmd_member)
    p.add_argument(
        "--u", required=True, help="query polynomial in z, or - to read one per stdin line"
    )
    curve_command("sagbi", "completed basis of k[f, g] with provenances", _cmd_sagbi)
    curve_command("delta", "degree semigroup delta and gcd sequences", _cmd_delta)
    p = curve_command("represent", "write a degree over the delta sequence", _cmd_represent)
    p.add_argument("--degree", required=True, type=int, help="degree to represent")
    curve_command("decompose", "maximal common inner composition factor", _cmd_decompose)
    p = curve_command("strong-am", "degree divisibility from two low-drop members", _cmd_strong_am)
    p.add_argument("--a", type=int, default=None, help="degree drop; omitted sweeps all")
    curve_command("prop22", "constant-combination line test for monic pairs", _cmd_prop22)

    p = sub.add_parser("jacobian-probe", help="Jacobian and y-derivative memberships over k(x)")
    p.add_argument("--f", required=True, help="first map component, a polynomial in x, y")
    p.add_argument("--g", required=True, help="second map component, a polynomial in x, y")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=_cmd_jacobian_probe)

    p = sub.add_parser("gen-corpus", help="write a line-delimited JSON curve corpus")
    p.add_argument("--count", type=int, default=200, help="number of curves")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.set_defaults(handler=_cmd_gen_corpus)
    return top


_VALUE_FLAGS = frozenset(
    ("--f", "--g", "--u", "--a", "--e", "--degree", "--count", "--seed", "--out")
)


def _fuse_leading_minus(argv):
    """Rewrite `--f -2*z` as `--f=-2*z` so argparse does not mistake a
    polynomial with a negative leading coefficient for an option.  A bare
    `-` (stdin marker) is left alone.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and nxt != "-" and nxt.startswith("-"):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fuse_leading_minus(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    as_json = getattr(args, "json", False)

    def fail(status, message):
        if as_json:
            print(json.dumps({"error": message}))
        else:
            print(f"error: {message}", file=sys.stderr)
        return status

    try:
        return args.handler(args)
    except ParseError as exc:
        return fail(1, str(exc))
    except (InternalInconsistency, InternalLimitExceeded) as exc:
        return fail(2, str(exc))
    except AmohError as exc:
        return fail(1, str(exc))


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
