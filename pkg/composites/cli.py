"""Command-line front end.

A run is described by whitespace separated statements, given inline or in a
--config file:

    ring=composite(gf(2),gf(4,2)) cmd=verify
    ring=composite(Z,Q) cmd=chain f=[0,1] d=2 steps=5
    cover z r=2

Fields: gf(q), gf(q,n), gf(p,n) and gf(p,n,[m0,...,mn]) with an explicit
monic irreducible modulus, Q, numberfield([c0,...,cn]) (minimal polynomial),
funcfield(p) for F_p(t) and funcsub(p,e) for F_p(t^(p^e)). Coefficient lists
are constant term first. Rings: composite(K,L), composite(Z,Q),
composite(Z_loc[p1,...],Q) and pair(K,L). Polynomials are coefficient lists
whose entries are expressions in the integers and the generators w, t and u.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import pyparsing as pp
import sympy

from composites import config
from composites.claims import (
    ClaimOptions,
    as_ring,
    render_property,
    render_record,
    run_claim,
    run_suite,
    tested_property_report,
)
from composites.composite import (
    CompositeElement,
    accp_failure_chain,
    almost_bezout_witness,
    divisor_chain_height,
    factor_atoms,
    field_composite,
    irreducible_divisors,
    is_irreducible_in_composite,
    length_set,
    nonassociate_divisors,
    z_in_q,
    z_localized,
)
from composites.covers import composite_cover, finite_subring_cover, int_valued_membership, residue_cover
from composites.errors import CompositesError, FieldMismatch, ParseError
from composites.fieldtower import (
    FiniteField,
    NumberField,
    RationalFunctionField,
    funcfield,
    funcsub,
    gf,
    make_extension,
    numberfield,
    q,
)
from composites.ideals import (
    colon_ideal,
    factor_ideal,
    fractional_ideal,
    is_invertible,
    quotient_pir_check,
)
from composites.polyring import Polynomial
from composites.verdicts import ClaimId

logger = logging.getLogger(__name__)

COMMANDS = ("props", "factor", "lengths", "divisors", "chain", "bezout", "ideal", "cover", "verify")
COVER_VARIANTS = ("z", "gf")
FORMATS = ("records", "table")
ASSUMPTIONS = ("isomorphism-extension", "quasilocal")
INT_KEYS = ("d", "steps", "r", "search_bound", "pole", "window", "seed", "degree_bound")
POLY_KEYS = ("elem", "f", "g")
FIELD_KEYS = ("ring", "pair", "small", "big")


# parsed nodes


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    loc: int


@dataclass(frozen=True)
class Expr:
    node: tuple
    loc: int


@dataclass(frozen=True)
class PolyLiteral:
    coeffs: tuple
    loc: int


@dataclass(frozen=True)
class Assignment:
    key: str
    value: object
    loc: int


@dataclass
class InstanceConfig:
    command: str = None
    ring: object = None
    variant: str = None
    values: dict = field(default_factory=dict)
    fmt: str = "records"
    seed: int = config.DEFAULT_SEED
    degree_bound: int = config.DEFAULT_DEGREE_BOUND
    window: int = config.DEFAULT_WINDOW
    out: str = None
    assume: frozenset = frozenset()
    text: str = ""

    def options(self) -> ClaimOptions:
        return ClaimOptions(
            seed=self.seed,
            degree_bound=self.degree_bound,
            window=self.window,
            assume_isomorphism_extension="isomorphism-extension" in self.assume,
            assume_quasilocal="quasilocal" in self.assume,
        )


def _fold_binary(tokens):
    items = tokens[0]
    node = items[0]
    for op, rhs in zip(items[1::2], items[2::2]):
        node = ({"+": "add", "-": "sub", "*": "mul", "/": "div"}[op], node, rhs)
    return node


def _fold_power(tokens):
    items = tokens[0]
    node = items[-1]
    for base in reversed(items[:-1:2]):
        node = ("pow", base, node)
    return node


def _fail(message):
    def action(s, loc, tokens):
        raise pp.ParseFatalException(s, loc, message.format(token=tokens[0]))

    return action


KNOWN_KEYS = FIELD_KEYS + POLY_KEYS + INT_KEYS + ("cmd", "format", "claim", "assume", "gens", "b", "out")


def _bad_key(s, loc, tokens):
    key = tokens[0]
    if key in KNOWN_KEYS:
        raise pp.ParseFatalException(s, loc, f"cannot parse the value of '{key}'")
    raise pp.ParseFatalException(s, loc, f"unknown key '{key}'")


def _grammar():
    LPAR, RPAR, LBRACK, RBRACK, COMMA, EQ = map(pp.Suppress, "()[],=")
    ident = pp.Word(pp.alphas, pp.alphanums + "_")
    rational = pp.Regex(r"[+-]?\d+(/\d+)?")

    operand = pp.Regex(r"\d+").set_parse_action(lambda t: ("num", int(t[0]))) | pp.Regex(
        r"[wtu](?![\w])"
    ).set_parse_action(lambda t: ("var", t[0]))
    arith = pp.infix_notation(
        operand,
        [
            ("^", 2, pp.OpAssoc.RIGHT, _fold_power),
            ("-", 1, pp.OpAssoc.RIGHT, lambda t: ("neg", t[0][1])),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_binary),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold_binary),
        ],
    )
    expr = arith.copy().set_parse_action(lambda s, loc, t: Expr(t[0], loc))

    poly = (LBRACK + pp.Optional(expr + pp.ZeroOrMore(COMMA + expr)) + RBRACK).set_parse_action(
        lambda s, loc, t: PolyLiteral(tuple(t), loc)
    )
    gens = (LBRACK + poly + pp.ZeroOrMore(COMMA + poly) + RBRACK).set_parse_action(lambda t: [tuple(t)])

    field_value = pp.Forward()
    number_list = (LBRACK + rational + pp.ZeroOrMore(COMMA + rational) + RBRACK).set_parse_action(
        lambda t: [tuple(t)]
    )
    arg = field_value | number_list | rational
    call = (ident + LPAR + pp.Optional(arg + pp.ZeroOrMore(COMMA + arg)) + RPAR).set_parse_action(
        lambda s, loc, t: Call(t[0], tuple(t[1:]), loc)
    )
    indexed = (ident + number_list).set_parse_action(lambda s, loc, t: Call(t[0], t[1], loc))
    field_value <<= call | indexed | ident.copy().set_parse_action(lambda s, loc, t: Call(t[0], (), loc))

    def assign(keys, value):
        rule = pp.MatchFirst([pp.Keyword(k) for k in keys]) + EQ + value
        return rule.set_parse_action(lambda s, loc, t: Assignment(t[0], t[1], loc))

    words = pp.Word(pp.alphas + "-") + pp.ZeroOrMore(COMMA + pp.Word(pp.alphas + "-"))
    assignment = pp.MatchFirst(
        [
            assign(FIELD_KEYS, field_value),
            assign(("cmd",), pp.MatchFirst([pp.Keyword(c) for c in COMMANDS])),
            assign(("format",), pp.MatchFirst([pp.Keyword(f) for f in FORMATS])),
            assign(("claim",), pp.Regex("|".join(sorted((c.value for c in ClaimId), key=len, reverse=True)))),
            assign(("assume",), words.copy().set_parse_action(lambda t: [tuple(t)])),
            assign(("gens",), gens),
            assign(POLY_KEYS, poly),
            assign(INT_KEYS, pp.Regex(r"[+-]?\d+").set_parse_action(lambda t: int(t[0]))),
            assign(("b",), expr),
            assign(("out",), pp.Regex(r"\S+")),
        ]
    )
    unknown_key = pp.Regex(r"[A-Za-z_][\w-]*(?==)").set_parse_action(_bad_key)
    bare = pp.MatchFirst([pp.Keyword(w) for w in COMMANDS + COVER_VARIANTS])
    bad_value = pp.Regex(r"\S+").set_parse_action(_fail("cannot parse '{token}'"))
    statement = assignment | unknown_key | bare | bad_value
    grammar = pp.ZeroOrMore(statement) + pp.StringEnd()
    grammar.ignore(pp.python_style_comment)
    return grammar


GRAMMAR = _grammar()


def _error_at(text, loc, message):
    return ParseError(message, pp.lineno(loc, text), pp.col(loc, text))


def _ints(call, text, count):
    args = call.args
    if not 1 <= len(args) <= count or not all(isinstance(a, str) and "/" not in a for a in args):
        raise _error_at(text, call.loc, f"{call.name}() takes 1 to {count} integer arguments")
    return [int(a) for a in args]


def _gf(call: Call, text: str) -> FiniteField:
    args = call.args
    modulus = None
    if len(args) == 3 and isinstance(args[2], tuple):
        modulus = _ints(Call(call.name, args[2], call.loc), text, len(args[2]))
        args = args[:2]
    values = _ints(Call(call.name, args, call.loc), text, 2)
    order = values[0]
    if sympy.isprime(order) and len(values) == 2:
        p, n = order, values[1]
    else:
        factors = sympy.factorint(order)
        if len(factors) != 1:
            raise _error_at(text, call.loc, f"{order} is not a prime power")
        (p, n), = factors.items()
        if len(values) == 2 and values[1] != n:
            raise _error_at(text, call.loc, f"{order} is not {p}^{values[1]}")
    if modulus is not None and len(modulus) != n + 1:
        raise _error_at(text, call.loc, f"modulus needs {n + 1} coefficients, got {len(modulus)}")
    return gf(p, n, modulus)


def build_field(call: Call, text: str):
    """Field named by a call node: gf, Q, numberfield, funcfield, funcsub."""
    name = call.name
    try:
        if name == "gf":
            return _gf(call, text)
        if name in ("Q", "q") and not call.args:
            return q()
        if name == "numberfield":
            if len(call.args) != 1 or not isinstance(call.args[0], tuple):
                raise _error_at(text, call.loc, "numberfield() takes one coefficient list")
            return numberfield([Fraction(c) for c in call.args[0]])
        if name == "funcfield":
            (p,) = _ints(call, text, 1)
            return funcfield(p)
        if name == "funcsub":
            values = _ints(call, text, 2)
            if len(values) != 2:
                raise _error_at(text, call.loc, "funcsub() takes p and e")
            return funcsub(*values)
    except ParseError:
        raise
    except CompositesError as exc:
        raise _error_at(text, call.loc, exc.message) from exc
    raise _error_at(text, call.loc, f"unknown field '{name}'")


def build_ring(call: Call, text: str):
    """Composite ring or extension pair named by a call node."""
    if call.name not in ("composite", "pair") or len(call.args) != 2:
        raise _error_at(text, call.loc, "expected composite(A,B) or pair(K,L)")
    small, big = call.args
    if not isinstance(small, Call) or not isinstance(big, Call):
        raise _error_at(text, call.loc, f"{call.name}() takes two field arguments")
    if small.name in ("Z", "Z_loc") and call.name == "composite":
        if big.name not in ("Q", "q") or big.args:
            raise _error_at(text, big.loc, f"{small.name} pairs with Q")
        if small.name == "Z":
            if small.args:
                raise _error_at(text, small.loc, "Z takes no primes; use Z_loc[p,...]")
            return z_in_q()
        if not small.args:
            raise _error_at(text, small.loc, "Z_loc needs at least one prime")
        primes = _ints(small, text, len(small.args))
        try:
            return z_localized(primes)
        except CompositesError as exc:
            raise _error_at(text, small.loc, exc.message) from exc
    try:
        if call.name == "pair":
            return make_extension(build_field(small, text), build_field(big, text))
        return field_composite(build_field(small, text), build_field(big, text))
    except ParseError:
        raise
    except CompositesError as exc:
        raise _error_at(text, call.loc, exc.message) from exc


def parse_config(text: str) -> InstanceConfig:
    try:
        statements = GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ParseError(exc.msg, exc.lineno, exc.col) from exc
    cfg = InstanceConfig(text=text)
    seen = set()
    words = []
    for st in statements:
        if isinstance(st, str):
            words.append(st)
            continue
        if st.key in seen:
            raise _error_at(text, st.loc, f"duplicate key '{st.key}'")
        seen.add(st.key)
        if st.key in ("ring", "pair"):
            cfg.ring = build_ring(st.value, text) if st.value.args else None
            if cfg.ring is None:
                raise _error_at(text, st.loc, "expected composite(A,B) or pair(K,L)")
        elif st.key in ("small", "big"):
            cfg.values[st.key] = build_field(st.value, text)
        elif st.key == "cmd":
            words.insert(0, st.value)
        elif st.key == "format":
            cfg.fmt = st.value
        elif st.key in ("seed", "degree_bound", "window"):
            setattr(cfg, st.key, st.value)
        elif st.key == "out":
            cfg.out = st.value
        elif st.key == "assume":
            unknown = [a for a in st.value if a not in ASSUMPTIONS]
            if unknown:
                raise _error_at(text, st.loc, f"unknown assumption '{unknown[0]}'")
            cfg.assume = frozenset(st.value)
        elif st.key == "claim":
            cfg.values["claim"] = ClaimId(st.value)
        else:
            cfg.values[st.key] = st.value
    for w in words:
        if w in COMMANDS and cfg.command is None:
            cfg.command = w
        elif w in COVER_VARIANTS and cfg.command == "cover" and cfg.variant is None:
            cfg.variant = w
        else:
            raise ParseError(f"unexpected word '{w}'", 1, 1)
    if cfg.command is None:
        raise ParseError("no command given", 1, 1)
    return cfg


# evaluation of coefficient expressions


def _variable(name, f):
    if name == "w" and isinstance(f, (FiniteField, NumberField)):
        return f.generator()
    if isinstance(f, RationalFunctionField) and (name == "t") == (f.e == 0) and name in ("t", "u"):
        return f.generator()
    raise FieldMismatch(f"'{name}' is not a generator of {f}", operation="parse_config")


def evaluate_expr(node, f):
    kind = node[0]
    if kind == "num":
        return f(node[1])
    if kind == "var":
        return _variable(node[1], f)
    if kind == "neg":
        return -evaluate_expr(node[1], f)
    if kind == "pow":
        exponent = node[2]
        sign = 1
        if exponent[0] == "neg":
            sign, exponent = -1, exponent[1]
        if exponent[0] != "num":
            raise FieldMismatch("exponents must be integers", operation="parse_config")
        return evaluate_expr(node[1], f) ** (sign * exponent[1])
    a, b = evaluate_expr(node[1], f), evaluate_expr(node[2], f)
    return {"add": lambda: a + b, "sub": lambda: a - b, "mul": lambda: a * b, "div": lambda: a / b}[kind]()


def evaluate_coefficient(expr: Expr, f, text: str = ""):
    """Value of one parsed coefficient in f; failures carry the coefficient's position."""
    try:
        return evaluate_expr(expr.node, f)
    except (ArithmeticError, ValueError, CompositesError) as exc:
        message = exc.message if isinstance(exc, CompositesError) else str(exc)
        raise _error_at(text, expr.loc, f"cannot evaluate coefficient in {f}: {message}") from exc


def evaluate_poly(literal: PolyLiteral, f, text: str = "") -> Polynomial:
    return Polynomial(f, tuple(evaluate_coefficient(c, f, text) for c in literal.coeffs))


# commands


def _require(cfg, *keys):
    missing = [k for k in keys if k not in cfg.values]
    if cfg.ring is None and cfg.command not in ("cover",):
        missing.insert(0, "ring")
    if missing:
        raise ParseError(f"command '{cfg.command}' needs {', '.join(missing)}", 1, 1)


def _element(cfg, key):
    ring = as_ring(cfg.ring)
    return CompositeElement(ring, evaluate_poly(cfg.values[key], ring.big, cfg.text))


def _cmd_props(cfg):
    _require(cfg)
    report = tested_property_report(cfg.ring, cfg.options())
    if cfg.fmt == "table":
        return 0, [report.to_frame().to_string(index=False)]
    return 0, [render_property(name, entry) for name, entry in report.entries.items()]


def _cmd_factor(cfg):
    _require(cfg, "elem")
    ring = as_ring(cfg.ring)
    e = _element(cfg, "elem")
    verdict = is_irreducible_in_composite(ring, e)
    lines = [f"ELEMENT {e}", f"IRREDUCIBLE {str(verdict.irreducible).lower()} tag={verdict.tag}"]
    if ring.small_is_field:
        fact = factor_atoms(ring, e, seed=cfg.seed)
        lines += [f"FACTORIZATION {fact}", f"LENGTH {fact.length}"]
    return 0, lines


def _cmd_lengths(cfg):
    _require(cfg, "elem")
    lengths = length_set(as_ring(cfg.ring), _element(cfg, "elem"), cfg.values.get("search_bound"))
    return 0, [f"LENGTHS {','.join(str(n) for n in sorted(lengths))}"]


def _cmd_divisors(cfg):
    _require(cfg, "elem")
    ring = as_ring(cfg.ring)
    e = _element(cfg, "elem")
    irreducible = irreducible_divisors(ring, e)
    lines = [f"IRREDUCIBLE_DIVISORS {len(irreducible)}"] + [f"  {d}" for d in irreducible]
    lines.append(f"NONASSOCIATE_DIVISORS {len(nonassociate_divisors(ring, e))}")
    lines.append(f"CHAIN_HEIGHT {divisor_chain_height(ring, e)}")
    return 0, lines


def _cmd_chain(cfg):
    _require(cfg, "f", "d")
    ring = as_ring(cfg.ring)
    chain = accp_failure_chain(ring, _element(cfg, "f"), cfg.values["d"], cfg.values.get("steps", 5))
    lines = [f"IDEAL ({g})" for g in chain.generators]
    lines.append(f"CERTIFIED {str(chain.certified).lower()}")
    return 0, lines


def _cmd_bezout(cfg):
    _require(cfg, "f", "g")
    ring = as_ring(cfg.ring)
    f, g = (evaluate_poly(cfg.values[k], ring.big, cfg.text) for k in ("f", "g"))
    w = almost_bezout_witness(ring, f, g)
    return 0, [
        f"N {w.n}",
        f"F_POWER {w.f_power}",
        f"G_POWER {w.g_power}",
        f"GENERATOR {w.h}",
        f"COFACTORS {w.s} ; {w.t}",
        f"CERTIFIED {str(w.certified).lower()}",
    ]


def _cmd_ideal(cfg):
    _require(cfg, "gens")
    ring = as_ring(cfg.ring)
    gens = [evaluate_poly(literal, ring.big, cfg.text) for literal in cfg.values["gens"]]
    ideal = fractional_ideal(ring, gens, cfg.values.get("pole", 0), cfg.values.get("window", cfg.window))
    colon = colon_ideal(ideal)
    verdict = is_invertible(ideal)
    lines = [
        f"IDEAL {ideal}",
        f"COLON {colon}",
        f"INVERTIBLE {str(verdict.invertible).lower()}",
        f"PRODUCT {verdict.product}",
    ]
    if ring.pair.is_identity:
        factors = factor_ideal(ideal)
        lines.append("FACTORS " + " * ".join(f"{p}^{e}" for p, e in factors))
    if ideal.pole_order == 0:
        try:
            pir = quotient_pir_check(ideal)
            lines.append(f"QUOTIENT size={pir.size} ideals={pir.ideal_count} principal={str(pir.principal).lower()}")
        except CompositesError as exc:
            logger.warning("quotient check skipped: %s", exc.render())
    return 0, lines


def _cmd_cover(cfg):
    if cfg.variant == "z":
        if "r" not in cfg.values:
            raise ParseError("cover z needs r", 1, 1)
        instance = residue_cover(cfg.values["r"])
        member = int_valued_membership(instance.variant, instance.witness)
    elif cfg.variant == "gf":
        if not {"small", "big", "b"} <= cfg.values.keys():
            raise ParseError("cover gf needs small, big and b", 1, 1)
        big = cfg.values["big"]
        b = evaluate_coefficient(cfg.values["b"], big, cfg.text)
        instance = finite_subring_cover(cfg.values["small"], big, b)
        member = int_valued_membership(instance.variant, instance.witness, instance.pair)
    else:
        raise ParseError("cover needs a variant: z or gf", 1, 1)
    cert = composite_cover(instance)
    lines = [f"WITNESS {cert.witness}", f"COVER {cert.cover}", f"MEMBER {str(member).lower()}"]
    if cert.minimal:
        lines.append(f"ESCAPE degree={cert.escape_degree} coefficient={cert.escape_coefficient}")
    return 0, lines


def _cmd_verify(cfg):
    _require(cfg)
    options = cfg.options()
    if "claim" in cfg.values:
        verdicts = [run_claim(cfg.ring, cfg.values["claim"], options)]
        lines = [render_record(v) for v in verdicts]
        contradictions = [v for v in verdicts if v.outcome.value == "contradict"]
        return (1 if contradictions else 0), lines
    report = run_suite(cfg.ring, options)
    if cfg.fmt == "table":
        s = report.summary
        lines = [report.to_frame().to_string(index=False),
                 f"agree={s['agree']} contradict={s['contradict']} untested={s['untested']}"]
    else:
        lines = report.records()
    return (1 if report.contradictions else 0), lines


DISPATCH = {
    "props": _cmd_props,
    "factor": _cmd_factor,
    "lengths": _cmd_lengths,
    "divisors": _cmd_divisors,
    "chain": _cmd_chain,
    "bezout": _cmd_bezout,
    "ideal": _cmd_ideal,
    "cover": _cmd_cover,
    "verify": _cmd_verify,
}


def execute(cfg: InstanceConfig):
    """Run the configured command; returns (exit status, report lines)."""
    logger.info("running %s on %s", cfg.command, cfg.ring)
    return DISPATCH[cfg.command](cfg)


def build_parser():
    parser = argparse.ArgumentParser(prog="composites", description="Polynomial composite rings A + X*B[X]")
    parser.add_argument("statements", nargs="*", help="inline key=value statements and command words")
    parser.add_argument("--config", type=Path, help="file with statements")
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--degree-bound", type=int)
    parser.add_argument("--window", type=int)
    parser.add_argument("--out", type=Path)
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config.configure_logging(logging.DEBUG if args.verbose else logging.INFO)
    try:
        text = args.config.read_text() if args.config else ""
        text = "\n".join(part for part in (text, " ".join(args.statements)) if part)
        cfg = parse_config(text)
        if args.format:
            cfg.fmt = args.format
        if args.seed is not None:
            cfg.seed = args.seed
        if args.degree_bound is not None:
            cfg.degree_bound = args.degree_bound
        if args.window is not None:
            cfg.window = args.window
        if args.out:
            cfg.out = str(args.out)
        status, lines = execute(cfg)
    except CompositesError as exc:
        print(f"error: {exc.render()}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot read the configuration: {exc}", file=sys.stderr)
        return 2
    output = "\n".join(lines) + "\n"
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(output)
        logger.info("report written to %s", cfg.out)
    else:
        sys.stdout.write(output)
    return status
