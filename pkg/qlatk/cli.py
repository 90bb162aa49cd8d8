import argparse
import sys
import typing
from pathlib import Path

from qlatk.core import (
    Decision,
    LassoWord,
    QlaSpec,
    Value,
    configure,
    exit_code,
    make_spec,
    parse_rational,
)
from qlatk.core.outcome import EXIT_INPUT_ERROR, EvalOutcome
from qlatk.core.value import ExtValue
from qlatk.exception_factory import ParseError, QLATKError, swear
from qlatk.loader import dump_buchi, dump_qwa, load_buchi, load_markov, load_qwa
from qlatk.modules import json, logger
from qlatk.oracle import brute_eval_lasso
from qlatk.prob import eval_markov, measure_buchi
from qlatk.qla import (
    ProblemVariant,
    Restriction,
    decide_nonemptiness,
    decide_universality,
    eval_regular,
    qla_bot,
    qla_inclusion,
    qla_top,
    routing_table,
)
from qlatk.qwa import lift_word_agg_to_limit, lower_limit_word_agg, to_limit_run_aggregator

RUN_AGGREGATORS = ["inf", "sup", "liminf", "limsup", "liminfavg", "limsupavg", "dsum"]
WORD_AGGREGATORS = ["inf", "sup", "liminf", "limsup", "exp"]
CONVERSIONS = {
    "tolimitf": to_limit_run_aggregator,
    "liftg": lift_word_agg_to_limit,
    "lowerg": lower_limit_word_agg,
}

Output = typing.Union[EvalOutcome, str]


def rational(text: str):
    try:
        return parse_rational(text)
    except QLATKError as e:
        raise argparse.ArgumentTypeError(str(e))


def _automaton_flags(parser: argparse.ArgumentParser, prefix: str = "", h: bool = True):
    dest = prefix.replace("-", "_")
    name = prefix.rstrip("-") or "aut"
    parser.add_argument(f"--{name}", dest=f"{dest}aut", required=True, metavar="F.qwa")
    if h:
        parser.add_argument(
            f"--{prefix}h", dest=f"{dest}h", choices=WORD_AGGREGATORS, required=True
        )
    parser.add_argument(f"--{prefix}g", dest=f"{dest}g", choices=WORD_AGGREGATORS, required=True)
    parser.add_argument(f"--{prefix}f", dest=f"{dest}f", choices=RUN_AGGREGATORS, required=True)
    parser.add_argument(
        f"--{prefix}lambda", dest=f"{dest}discount", type=rational, metavar="p/q"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlatk", description="Quantitative word and language automata"
    )
    parser.add_argument("--json", action="store_true", help="print results as json")
    parser.add_argument("--jobs", type=int, help="worker threads of the per-weight sweeps")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="value of an omega-regular language")
    _automaton_flags(evaluate)
    evaluate.add_argument("--lang", required=True, metavar="B.ba")

    markov = commands.add_parser("eval-mc", help="expected value under a Markov chain")
    _automaton_flags(markov)
    markov.add_argument("--mc", required=True, metavar="M.mc")

    for name in ("nonempty", "universal"):
        decide = commands.add_parser(name, help=f"decide {name}ness against a threshold")
        _automaton_flags(decide)
        decide.add_argument("--k", required=True, type=rational, metavar="p/q")
        decide.add_argument("--strict", action="store_true")
        decide.add_argument(
            "--restriction", choices=[r.value for r in Restriction], default="any"
        )

    for name in ("top", "bot"):
        _automaton_flags(commands.add_parser(name, help=f"{name} value over all languages"))

    include = commands.add_parser("include", help="lhs(S) >= rhs(S) for every language S")
    _automaton_flags(include, "lhs-")
    _automaton_flags(include, "rhs-")
    include.add_argument("--strict", action="store_true")
    include.add_argument("--out", metavar="B.ba", help="write a violating language")

    measure = commands.add_parser("measure", help="probability of a Buchi language")
    measure.add_argument("--ba", required=True, metavar="B.ba")
    measure.add_argument("--mc", required=True, metavar="M.mc")

    convert = commands.add_parser("convert", help="aggregator conversions")
    _automaton_flags(convert, h=False)
    convert.add_argument("--op", choices=sorted(CONVERSIONS), required=True)
    convert.add_argument("--out", metavar="G.qwa")

    oracle = commands.add_parser("oracle", help="brute-force reference implementations")
    oracle_commands = oracle.add_subparsers(dest="oracle_command", required=True)
    lasso = oracle_commands.add_parser("eval-lasso", help="value of a lasso word")
    lasso.add_argument("--aut", required=True, metavar="F.qwa")
    lasso.add_argument("--g", choices=WORD_AGGREGATORS, default="sup")
    lasso.add_argument("--f", choices=RUN_AGGREGATORS, default="sup")
    lasso.add_argument("--lambda", dest="discount", type=rational, metavar="p/q")
    lasso.add_argument("--word", required=True, metavar='"u ; v"')

    commands.add_parser("routes", help="print the routing table")
    return parser


def _spec(args: argparse.Namespace, prefix: str = "", h: str = "sup") -> QlaSpec:
    def value(name: str) -> typing.Any:
        return getattr(args, f"{prefix}{name}", None)

    return make_spec(
        load_qwa(value("aut")), value("h") or h, value("g"), value("f"), value("discount")
    )


def _variant(args: argparse.Namespace) -> ProblemVariant:
    return ProblemVariant(args.strict, Restriction(args.restriction))


def _convert(args: argparse.Namespace) -> str:
    qwa = CONVERSIONS[args.op](_spec(args).qwa)
    text = f"# g={qwa.g.value} f={qwa.f.value}\n" + dump_qwa(qwa.system)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        return f"WROTE {args.out}"
    return text.rstrip("\n")


def _include(args: argparse.Namespace) -> Decision:
    lhs = _spec(args, "lhs_", h="")
    rhs = _spec(args, "rhs_", h="")
    decision = qla_inclusion(lhs, rhs, args.strict)
    if not decision.holds and args.out:
        Path(args.out).write_text(dump_buchi(decision.witness), encoding="utf-8")
    return decision


def _routes() -> str:
    return "\n".join(
        f"{problem.value} h={h.value} g={g.value} f={f.value} "
        f"{'strict' if variant.strict else 'nonstrict'} {variant.restriction.value}: {route}"
        for problem, h, g, f, variant, route in routing_table()
    )


def execute(args: argparse.Namespace) -> Output:
    command = args.command
    if command == "eval":
        return eval_regular(_spec(args), load_buchi(args.lang))
    elif command == "eval-mc":
        return eval_markov(_spec(args), load_markov(args.mc))
    elif command == "nonempty":
        return decide_nonemptiness(_spec(args), args.k, _variant(args))
    elif command == "universal":
        return decide_universality(_spec(args), args.k, _variant(args))
    elif command == "top":
        return qla_top(_spec(args))
    elif command == "bot":
        return qla_bot(_spec(args))
    elif command == "include":
        return _include(args)
    elif command == "measure":
        measure = measure_buchi(load_buchi(args.ba), load_markov(args.mc))
        return Value(ExtValue.of(measure))
    elif command == "convert":
        return _convert(args)
    elif command == "oracle":
        qwa = _spec(args).qwa
        return Value(brute_eval_lasso(qwa, LassoWord.parse(args.word)))
    return _routes()


def render(output: Output, as_json: bool) -> str:
    if isinstance(output, str):
        return output
    elif not as_json:
        return output.render()
    text = json.dumps(output.to_dict())
    return text.decode() if isinstance(text, bytes) else text


def _report(error: Exception, args: argparse.Namespace, out: typing.TextIO, err: typing.TextIO):
    print(f"error: {error}", file=err)
    return EXIT_INPUT_ERROR


@swear((QLATKError, ParseError(), OSError), exception_handler=_report)
def _run(args: argparse.Namespace, out: typing.TextIO, err: typing.TextIO) -> int:
    output = execute(args)
    print(render(output, args.json), file=out)
    return 0 if isinstance(output, str) else exit_code(output)


def run(
    argv: typing.Optional[typing.Sequence[str]] = None,
    out: typing.Optional[typing.TextIO] = None,
    err: typing.Optional[typing.TextIO] = None,
) -> int:
    """ Runs one command line, results go to out and errors to err """
    out, err = out or sys.stdout, err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else 0
    if args.jobs is not None:
        configure(jobs=args.jobs)
    logger.debug(f"Running {args.command}")
    return _run(args, out, err)


def main() -> None:
    sys.exit(run())
