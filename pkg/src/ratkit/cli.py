"""Command-line interface.

Exit codes: 0 success or equivalent, 1 not equivalent, 2 usage or input
error, 3 equivalence only checked on sampled words.
"""

import argparse
import sys

from . import automaton as am
from . import delta, gamma
from . import expr as ex
from .equiv import equivalent_automata, equivalent_exprs
from .errors import ParseError, RatkitError
from .natural import simplify_natural
from .semiring import SemiringTag
from .series import truncated_series
from .syntax import parse
from .textformat import automaton_from_text, automaton_to_dot, automaton_to_text

EXIT_OK, EXIT_DIFFERENT, EXIT_USAGE, EXIT_SAMPLED = 0, 1, 2, 3

GAMMA_METHODS = ("se", "system", "mny", "rec")
DELTA_METHODS = ("standard", "derived", "thompson", "eggan")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _expr(args, text=None):
    text = args.expr if text is None else text
    if text == "-":
        text = sys.stdin.read().strip()
    return parse(text, args.semiring)


def _automaton(path):
    return automaton_from_text(_read(path))


def _show_expr(e, args):
    if getattr(args, "simplify", "trivial") == "natural":
        e = simplify_natural(e)
    return str(e)


def _parse_order(a, text):
    if text is None:
        return None
    return [a.state_index(tok.strip()) for tok in text.split(",") if tok.strip()]


def parse_division(text, a=None):
    """Read a division such as ``((0 1) 2)`` or ``((p,q),r)``."""
    toks = text.replace(",", " ").replace("(", " ( ").replace(")", " ) ").split()
    pos = [0]

    def node():
        if pos[0] >= len(toks):
            raise ParseError("unexpected end of division")
        tok = toks[pos[0]]
        pos[0] += 1
        if tok == "(":
            items = []
            while pos[0] < len(toks) and toks[pos[0]] != ")":
                items.append(node())
            if pos[0] >= len(toks):
                raise ParseError("unbalanced parentheses in division")
            pos[0] += 1
            if len(items) == 1:
                return items[0]
            if len(items) != 2:
                raise ParseError("each block of a division splits in two")
            return tuple(items)
        if tok == ")":
            raise ParseError("unexpected ')' in division")
        return a.state_index(tok) if a is not None else int(tok)

    tree = node()
    if pos[0] != len(toks):
        raise ParseError("trailing input in division")
    return tree


def _build(e, method):
    if method == "standard":
        return delta.standard_automaton(e), None
    if method == "derived":
        aut, terms = delta.derived_term_automaton(e)
        return aut, [str(k) for k in terms]
    if method == "thompson":
        return delta.thompson(e), None
    return delta.eggan_automaton(e), None


def _print_automaton(a, args, labels=None):
    if getattr(args, "dot", False):
        sys.stdout.write(automaton_to_dot(a, labels))
        return
    if labels:
        for i, lab in enumerate(labels):
            print(f"# state {i}: {lab}")
    sys.stdout.write(automaton_to_text(a))


def _source_automaton(args):
    """Automaton from FILE, or built from ``-E`` with ``--method``."""
    if args.expr is not None:
        return _build(_expr(args), getattr(args, "method", None) or "standard")[0]
    if args.file is None:
        raise ParseError("give an automaton file or -E EXPR")
    return _automaton(args.file)


def cmd_parse(args):
    print(_show_expr(_expr(args), args))
    return EXIT_OK


def cmd_exp2aut(args):
    a, labels = _build(_expr(args), args.method)
    _print_automaton(a, args, labels)
    return EXIT_OK


def cmd_aut2exp(args):
    a = _automaton(args.file)
    if args.method == "rec":
        tree = parse_division(args.division, a) if args.division else None
        e = gamma.recursive_behaviour(a, tree)
    else:
        order = _parse_order(a, args.order)
        if args.method == "se":
            e = gamma.state_elimination(a, order)
        elif args.method == "system":
            e = gamma.system_solution(a, order)
        else:
            e = gamma.mcnaughton_yamada(a, order)[1]
    print(_show_expr(e, args))
    return EXIT_OK


def _word(text):
    return "" if text in ("\\e", "") else text


def cmd_eval(args):
    a = _source_automaton(args)
    print(am.eval_word(a, _word(args.word)))
    return EXIT_OK


def cmd_series(args):
    if args.expr is not None:
        s = truncated_series(_expr(args), args.length)
    else:
        s = am.truncated_behaviour(_automaton(args.file), args.length)
    for w, k in s.items():
        print(f"{w or chr(92) + 'e'} {k}")
    return EXIT_OK


def cmd_equiv(args):
    if args.expr is not None or args.other is not None:
        if args.expr is None or args.other is None:
            raise ParseError("give both -E and -F")
        verdict = equivalent_exprs(_expr(args), _expr(args, args.other))
    else:
        if len(args.files) != 2:
            raise ParseError("give two automaton files or -E and -F")
        verdict = equivalent_automata(_automaton(args.files[0]), _automaton(args.files[1]))
    if verdict.equivalent:
        if verdict.method == "sampled":
            print("equivalent on sampled words (method: sampled)")
            return EXIT_SAMPLED
        print("equivalent")
        return EXIT_OK
    word, x, y = verdict.witness
    print(f"not equivalent: witness {word or chr(92) + 'e'} ({x} vs {y})")
    return EXIT_DIFFERENT


def cmd_snf(args):
    print(delta.star_normal_form(_expr(args)))
    return EXIT_OK


def cmd_derive(args):
    print(delta.derive_word(_expr(args), args.word))
    return EXIT_OK


def cmd_terms(args):
    for k in delta.derived_terms(_expr(args)):
        print(k)
    return EXIT_OK


def cmd_lc(args):
    print(am.loop_complexity(_source_automaton(args), bound=args.bound))
    return EXIT_OK


def cmd_index(args):
    a = _automaton(args.file)
    order = _parse_order(a, args.order)
    print(am.loop_index(a, order if order is not None else range(a.n)))
    return EXIT_OK


def cmd_height(args):
    print(ex.star_height(_expr(args)))
    return EXIT_OK


def cmd_quotient(args):
    q, _ = am.minimal_quotient(_source_automaton(args))
    _print_automaton(q, args)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="ratkit", description="Rational expressions and automata.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text, expr=True, file=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-W", dest="semiring", default="B",
                        choices=[t.value for t in SemiringTag], help="semiring (default B)")
        if expr:
            sp.add_argument("-E", dest="expr", help="expression ('-' reads stdin)")
        if file:
            sp.add_argument("file", nargs="?", help="automaton file ('-' reads stdin)")
        sp.set_defaults(func=func)
        return sp

    sp = verb("parse", cmd_parse, "parse and print an expression")
    sp.add_argument("--simplify", choices=("trivial", "natural"), default="trivial")

    sp = verb("exp2aut", cmd_exp2aut, "build an automaton from an expression")
    sp.add_argument("--method", choices=DELTA_METHODS, default="standard")
    sp.add_argument("--dot", action="store_true")

    sp = verb("aut2exp", cmd_aut2exp, "build an expression from an automaton", expr=False, file=True)
    sp.add_argument("--method", choices=GAMMA_METHODS, default="se")
    sp.add_argument("--order", help="comma-separated states, first eliminated first")
    sp.add_argument("--division", help="nested pairs of states, e.g. '((0 1) 2)'")
    sp.add_argument("--simplify", choices=("trivial", "natural"), default="trivial")

    sp = verb("eval", cmd_eval, "weight of a word", file=True)
    sp.add_argument("word", help="the word ('\\e' for the empty word)")
    sp.add_argument("--method", choices=DELTA_METHODS, default="standard")

    sp = verb("series", cmd_series, "coefficients of all short words", file=True)
    sp.add_argument("-n", dest="length", type=int, default=3)

    sp = verb("equiv", cmd_equiv, "decide equivalence")
    sp.add_argument("-F", dest="other", help="second expression")
    sp.add_argument("files", nargs="*", help="two automaton files")

    verb("snf", cmd_snf, "star normal form of a Boolean expression")

    sp = verb("derive", cmd_derive, "derivative by a nonempty word")
    sp.add_argument("-w", dest="word", required=True)

    verb("terms", cmd_terms, "derived terms")

    sp = verb("lc", cmd_lc, "loop complexity", file=True)
    sp.add_argument("--method", choices=DELTA_METHODS, default="standard")
    sp.add_argument("--bound", type=int, default=14, help="largest number of states accepted")

    sp = verb("index", cmd_index, "loop index for an order", expr=False, file=True)
    sp.add_argument("--order")

    verb("height", cmd_height, "star height of an expression")

    sp = verb("quotient", cmd_quotient, "minimal quotient", file=True)
    sp.add_argument("--method", choices=DELTA_METHODS, default="standard")
    sp.add_argument("--dot", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    needs_expr = args.verb in ("parse", "exp2aut", "snf", "derive", "terms", "height")
    if needs_expr and args.expr is None:
        print(f"ratkit {args.verb}: -E EXPR is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (RatkitError, ValueError, OSError) as err:
        print(f"ratkit {args.verb}: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
