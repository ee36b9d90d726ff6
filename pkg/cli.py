# Copyright (C) 2026
#
# This file is part of Wpstack.
#
# Wpstack is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Wpstack is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Command line front end: every command loads the session, runs one operation, saves the session and prints a
result document on stdout and a human summary on stderr.

Example:
    python -m wpstack ring new 1,1
    python -m wpstack tangent --as T
    python -m wpstack mod hilbert T --from -3 --to 5
"""

import argparse
import os
import re
import sys

try:
    from . import documents
except ImportError:
    # the user is executing this script directly
    # we must append the package parent directory to sys.path so the package can be correctly loaded
    import importlib
    dir_path = os.path.dirname(os.path.abspath(__file__))
    parent_path = os.path.abspath(os.path.join(dir_path, os.pardir))
    sys.path.append(parent_path)
    __package__ = os.path.basename(os.path.normpath(dir_path))
    importlib.import_module(__package__)
    from . import documents
from . import scenarios
from .bundles import ample_probe, euler_tangent, graded_ext, graded_hom, is_vector_bundle
from .evaluator import ScenarioEvaluator
from .exceptions import BudgetExceededError, MalformedInputError, PreconditionError, SchemaError, UnknownBindingError
from .gmodule import (FreeModule, GradedMap, direct_sum, hilbert_window, present, sym_presentation,
                      tensor_presentation, twist)
from .logger import Log
from .options import KernelOptions, SessionOptions
from .parser import PolynomialParser
from .quotient import (DegreeWindow, SheafRep, is_epi_sheaf, is_iso_sheaf, is_mono_sheaf, is_torsion, saturate,
                       sheaf_of, torsion_submodule)
from .ring import FieldSpec, WeightedRing
from .session import Session, load_session, save_session
from .sheafops import (lemma_epi, sheaf_sym, sheaf_tensor, structure_twist, twist_epi, wgg_check,
                       wgg_check_presentation)


EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 4

TWIST_LITERAL = re.compile(r"^O(?:\((-?\d+)\))?$")


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors raise MalformedInputError instead of exiting"""

    def error(self, message):
        raise MalformedInputError("%s: %s" % (self.prog, message))


def int_list(text):
    """Parses "1,2,3" as [1, 2, 3]"""
    try:
        return [int(token) for token in split_entries(text)]
    except ValueError:
        raise argparse.ArgumentTypeError('"%s" is not a comma separated list of integers' % text)


def split_entries(text):
    """Splits a comma separated list, the empty string being the empty list"""
    text = text.strip()
    return [token.strip() for token in text.split(",")] if text else []


def read_document(path, what):
    """Reads a standalone JSON document from 'path', "-" for stdin"""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as f:
            text = f.read()
    return documents.unversioned(documents.loads(text, what), what)


class CommandContext:
    """Session and options of a single command"""

    def __init__(self, session, session_options):
        """
        :param session.Session session:
        :param options.SessionOptions session_options:
        """
        self.session = session
        self.session_options = session_options
        self.options = session_options.kernel_options
        self.logger = self.options.logger
        self.changed = False
        self.exit_code = EXIT_OK

    @property
    def ring(self):
        return self.session.require_ring()

    def is_sheaf(self, name):
        return self.session.kind(name) == "sheaf"

    def module(self, name):
        """The module bound to 'name', the saturated module for sheaves"""
        kind = self.session.kind(name)
        if kind == "module":
            return self.session.get(name)
        if kind == "sheaf":
            return self.session.get(name).module
        raise UnknownBindingError('binding "%s" is a %s, not a module or a sheaf' % (name, kind))

    def sheaf(self, name):
        """The sheaf bound to 'name', or the sheaf of the module bound to it"""
        if self.is_sheaf(name):
            return self.session.get(name)
        return sheaf_of(self.module(name), options=self.options)

    def graded_map(self, name):
        return self.session.get(name, "map")

    def bind(self, name, kind, value):
        self.session.bind(name, kind, value)
        self.changed = True

    def summary(self, text):
        self.logger.log([Log("summary", text)])


def module_result(name, module):
    return {"name": name, "module": documents.encode_module(module)}


def sheaf_result(name, sheaf):
    return {"name": name, "sheaf": documents.encode_sheaf(sheaf)}


def check_result(check):
    return {"verdict": check.verdict, "failure_degree": check.failure_degree}


def bind_value(context, name, value):
    """Binds a module or a sheaf under 'name' and returns its result document"""
    if isinstance(value, SheafRep):
        context.bind(name, "sheaf", value)
        return sheaf_result(name, value)
    context.bind(name, "module", value)
    return module_result(name, value)


# RING AND MODULES

def ring_new(args, context):
    field = FieldSpec.parse(args.ring_field) if args.ring_field else context.options.field_spec()
    ring = WeightedRing(args.weights, field)
    context.session = Session(ring, context.options.describe())
    context.changed = True
    context.summary("new ring %s, lcm of the weights %d" % (ring, ring.lcm_weights))
    return {"ring": documents.encode_ring(ring), "lcm_weights": ring.lcm_weights}


def mod_new(args, context):
    ring = context.ring
    if args.file:
        module = documents.decode_module(read_document(args.file, "module"), ring)
    elif args.degrees is not None:
        parser = PolynomialParser(ring)
        relations = [[parser.parse(text) for text in split_entries(column)] for column in args.relation]
        module = present(FreeModule(ring, args.degrees), relations)
    else:
        raise MalformedInputError("mod new needs --degrees or --file")
    context.summary("module %s: %r" % (args.name, module))
    return bind_value(context, args.name, module)


def mod_hilbert(args, context):
    lo, hi = args.lo, args.hi
    if lo > hi:
        raise MalformedInputError("empty degree range [%d, %d]" % (lo, hi))
    if context.is_sheaf(args.module):
        dims = context.session.get(args.module).dims(lo, hi)
    else:
        dims = hilbert_window(context.module(args.module), lo, hi).tolist()
    context.summary("dims of %s on [%d, %d]: %s" % (args.module, lo, hi, " ".join(map(str, dims))))
    return {"name": args.module, "window": [lo, hi], "dims": dims}


def mod_twist(args, context):
    module = twist(context.module(args.module), args.k)
    if context.is_sheaf(args.module):
        window = context.session.get(args.module).window
        module = SheafRep(module, DegreeWindow(window.lo - args.k, window.hi - args.k))
    return bind_value(context, args.name, module)


def mod_sum(args, context):
    module = direct_sum(context.module(args.first), context.module(args.second)).module
    if context.is_sheaf(args.first) and context.is_sheaf(args.second):
        window = context.session.get(args.first).window.join(context.session.get(args.second).window)
        module = SheafRep(module, window)
    return bind_value(context, args.name, module)


def mod_tensor(args, context):
    if context.is_sheaf(args.first) or context.is_sheaf(args.second):
        value = sheaf_tensor(context.sheaf(args.first), context.sheaf(args.second), context.options)
    else:
        value = tensor_presentation(context.module(args.first), context.module(args.second))
    return bind_value(context, args.name, value)


def mod_sym(args, context):
    if args.n < 0:
        raise MalformedInputError("symmetric power should be non-negative, got %d" % args.n)
    if context.is_sheaf(args.module):
        value = sheaf_sym(context.session.get(args.module), args.n, context.options)
    else:
        value = sym_presentation(context.module(args.module), args.n)
    return bind_value(context, args.name, value)


# SATURATION AND TORSION

def sat(args, context):
    window = DegreeWindow(*args.window) if args.window else None
    sheaf = saturate(context.module(args.module), window, context.options)
    context.summary("saturated %s in %d stages, dims on %r: %s"
                    % (args.module, sheaf.stages, sheaf.window, " ".join(map(str, sheaf.dims()))))
    return bind_value(context, args.name, sheaf)


def torsion(args, context):
    decomposition = torsion_submodule(context.module(args.module), context.logger)
    submodule = decomposition.submodule
    result = bind_value(context, args.name, submodule)
    result["dimension"] = submodule.gb().standard_term_count()
    context.summary("torsion of %s has dimension %d" % (args.module, result["dimension"]))
    return result


def is_torsion_command(args, context):
    verdict = is_torsion(context.module(args.module))
    context.summary("%s is %storsion" % (args.module, "" if verdict else "not "))
    return {"name": args.module, "verdict": verdict}


# MAPS

def map_new(args, context):
    ring = context.ring
    if args.file:
        graded_map = documents.decode_map(read_document(args.file, "map"), ring)
    elif args.source and args.target:
        parser = PolynomialParser(ring)
        columns = [[parser.parse(text) for text in split_entries(column)] for column in args.column]
        graded_map = GradedMap(context.module(args.source), context.module(args.target), columns)
    else:
        raise MalformedInputError("map new needs --source and --target, or --file")
    context.bind(args.name, "map", graded_map)
    return {"name": args.name, "map": documents.encode_map(graded_map)}


def map_check(predicate):
    def command(args, context):
        check = predicate(context.graded_map(args.map))
        context.summary("%s: %s" % (args.map, check))
        return dict(check_result(check), name=args.map)
    return command


def mono_check(graded_map):
    return is_mono_sheaf(graded_map)


def iso_check(graded_map):
    return is_iso_sheaf(graded_map)


def bind_epi(context, name, graded_map):
    context.bind(name, "map", graded_map)
    check = is_epi_sheaf(graded_map)
    context.summary("%s is %sa sheaf epimorphism" % (name, "" if check else "not "))
    return {"name": name, "map": documents.encode_map(graded_map), "epi": check_result(check)}


def twist_epi_command(args, context):
    return bind_epi(context, args.name, twist_epi(context.ring, args.k))


def lemma_epi_command(args, context):
    return bind_epi(context, args.name, lemma_epi(context.module(args.module), args.n))


# GENERATION, HOM AND BUNDLES

def wgg(args, context):
    if context.is_sheaf(args.module):
        certificate = wgg_check(context.session.get(args.module), context.options)
    else:
        certificate = wgg_check_presentation(context.module(args.module), context.options)
    context.summary("%s: %r" % (args.module, certificate))
    return {
        "name": args.module,
        "verdict": certificate.verdict,
        "multiplicities": certificate.multiplicities(context.ring.lcm_weights),
        "failure_degree": certificate.failure_degree,
        "saturated": certificate.saturated,
    }


def hom(args, context):
    module = graded_hom(context.module(args.first), context.module(args.second), context.logger)
    return bind_value(context, args.name, module)


def ext(args, context):
    if args.i < 0:
        raise MalformedInputError("Ext index should be non-negative, got %d" % args.i)
    result = graded_ext(context.module(args.first), context.module(args.second), args.i, logger=context.logger)
    document = bind_value(context, args.name, result.module)
    document["is_torsion"] = result.is_torsion
    context.summary("Ext^%d(%s, %s) is %storsion" % (args.i, args.first, args.second,
                                                     "" if result.is_torsion else "not "))
    return document


def vb_check(args, context):
    check = is_vector_bundle(context.module(args.module), context.logger)
    context.summary("%s: %r" % (args.module, check))
    return {
        "name": args.module,
        "verdict": check.verdict,
        "failing_index": check.failing_index,
        "ext_torsion": [e.is_torsion for e in check.exts],
    }


def tangent(args, context):
    window = DegreeWindow(*args.window) if args.window else None
    sequence = euler_tangent(context.ring, window, context.options)
    checks = sequence.checks(logger=context.logger)
    result = bind_value(context, args.name, sequence.tangent)
    result["checks"] = checks
    context.summary("tangent sheaf %s, euler sequence checks %s" % (args.name, checks))
    return result


def test_sheaf(context, token):
    """A test sheaf given as a twist literal O, O(k) or a binding name"""
    match = TWIST_LITERAL.match(token)
    if match:
        k = int(match.group(1) or 0)
        return ("O" if k == 0 else "O(%d)" % k), structure_twist(context.ring, k, options=context.options)
    return token, context.sheaf(token)


def ample_probe_command(args, context):
    if args.nmax < 1:
        raise MalformedInputError("--nmax should be positive, got %d" % args.nmax)
    bundle = context.sheaf(args.module)
    records = []
    for token in split_entries(args.against):
        sheaf_id, sheaf = test_sheaf(context, token)
        record = ample_probe(bundle, sheaf, args.nmax, sheaf_id, context.options,
                             progress=lambda n, verdict: context.summary("  n=%d: %s" % (n, verdict)))
        context.summary("%s against %s: n0 = %s" % (args.module, sheaf_id, record.n0))
        records.append({
            "sheaf": sheaf_id,
            "n0": record.n0,
            "verdicts": [[n, record.verdicts[n]] for n in sorted(record.verdicts)],
            "failure_degrees": [[n, record.failure_degrees[n]] for n in sorted(record.failure_degrees)],
        })
    report = {"bundle": args.module, "n_max": args.nmax, "records": records,
              "success": all(r["n0"] is not None for r in records)}
    if args.name:
        context.bind(args.name, "report", report)
    return report


# VERIFICATION

def verify_suite(args, context):
    entries = scenarios.load_entries(context.session_options.scenario_path)
    entries = scenarios.select_entries(entries, args.scenario_weights)
    evaluator = ScenarioEvaluator()
    field = context.options.field_spec()
    for entry in entries:
        scenario_class = getattr(scenarios, entry["scenario"], None)
        if not (isinstance(scenario_class, type) and issubclass(scenario_class, scenarios.Scenario)) \
                or scenario_class is scenarios.Scenario:
            raise SchemaError('unknown scenario "%s"' % entry["scenario"])
        scenario = scenario_class(WeightedRing(entry["weights"], field), entry["params"], context.options)
        passed = scenario.run(evaluator)
        context.summary("%s on weights %s: %s" % (entry["scenario"], entry["weights"],
                                                  "passed" if passed else "FAILED"))
    statistics = evaluator.statistics()
    context.summary("%d runs, %d failed checks, %.1f s per run on average"
                    % (statistics["runs"], statistics["failed_checks"], statistics["elapsed_avg"]))
    records = evaluator.records()
    passed = all(record["passed"] for record in records)
    if not passed:
        context.exit_code = EXIT_VERIFICATION_FAILED
    return {"passed": passed, "runs": records, "failed_checks": statistics["failed_checks"]}


# PARSER

def add_output(parser, default=None):
    if default is None:
        parser.add_argument("--as", dest="name", required=True, help="name of the new binding")
    else:
        parser.add_argument("--as", dest="name", default=default, help="name of the new binding (%(default)s)")


def add_command(subparsers, name, handler, command_name, help_text):
    parser = subparsers.add_parser(name, help=help_text)
    parser.set_defaults(handler=handler, command_name=command_name)
    return parser


def build_parser(environ=None):
    """
    :param dict[str, str] environ:
        environment for the defaults of the global flags, os.environ if None
    :rtype: CommandParser
    """
    environ = os.environ if environ is None else environ
    parser = CommandParser(prog="wpstack", description="Sheaves on weighted projective stacks")
    parser.add_argument("--session", default=environ.get("WPSTACK_SESSION", "wpstack-session.json"),
                        help="session document (default: $WPSTACK_SESSION or %(default)s)")
    parser.add_argument("--weights", type=int_list, default=None,
                        help="weights the session ring must have, e.g. 1,1,2")
    parser.add_argument("--field", default=None, help='default field for new rings: "Q" or "Fp:<p>"')
    parser.add_argument("--cap", type=int, default=None, help="saturation stabilization cap")
    parser.add_argument("--margin", type=int, default=None, help="degree window margin")
    parser.add_argument("--log-depth", type=int, default=None, help="depth of the kernel logs")
    commands = parser.add_subparsers(dest="command", required=True)

    ring = commands.add_parser("ring", help="ring commands").add_subparsers(dest="action", required=True)
    p = add_command(ring, "new", ring_new, "ring new", "start a session on a new weighted ring")
    p.add_argument("weights", type=int_list)
    p.add_argument("--field", dest="ring_field", default=None)

    mod = commands.add_parser("mod", help="module commands").add_subparsers(dest="action", required=True)
    p = add_command(mod, "new", mod_new, "mod new", "bind a finitely presented module")
    p.add_argument("--degrees", type=int_list, default=None, help="generator degrees, e.g. 0,1")
    p.add_argument("--relation", action="append", default=[], help="relation column, e.g. \"x1,-x0\"")
    p.add_argument("--file", default=None, help="module document, - for stdin")
    add_output(p)
    p = add_command(mod, "hilbert", mod_hilbert, "mod hilbert", "dimensions on a range of degrees")
    p.add_argument("module")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p = add_command(mod, "twist", mod_twist, "mod twist", "M[k]")
    p.add_argument("module")
    p.add_argument("k", type=int)
    add_output(p)
    for action, handler, help_text in (("sum", mod_sum, "direct sum"), ("tensor", mod_tensor, "tensor product")):
        p = add_command(mod, action, handler, "mod %s" % action, help_text)
        p.add_argument("first")
        p.add_argument("second")
        add_output(p)
    p = add_command(mod, "sym", mod_sym, "mod sym", "symmetric power")
    p.add_argument("module")
    p.add_argument("n", type=int)
    add_output(p)

    p = add_command(commands, "sat", sat, "sat", "saturate a module")
    p.add_argument("module")
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), default=None)
    add_output(p)
    p = add_command(commands, "torsion", torsion, "torsion", "torsion submodule")
    p.add_argument("module")
    add_output(p)
    p = add_command(commands, "is-torsion", is_torsion_command, "is-torsion", "whether a module is torsion")
    p.add_argument("module")

    maps = commands.add_parser("map", help="map commands").add_subparsers(dest="action", required=True)
    p = add_command(maps, "new", map_new, "map new", "bind a graded map")
    p.add_argument("--source", default=None)
    p.add_argument("--target", default=None)
    p.add_argument("--column", action="append", default=[], help="image of a source generator, e.g. \"x0,x1\"")
    p.add_argument("--file", default=None, help="map document, - for stdin")
    add_output(p)
    for action, predicate in (("epi-check", is_epi_sheaf), ("mono-check", mono_check), ("iso-check", iso_check)):
        p = add_command(maps, action, map_check(predicate), "map %s" % action, "sheaf-level %s" % action)
        p.add_argument("map")

    p = add_command(commands, "twist-epi", twist_epi_command, "twist-epi", "epimorphism onto O(k)")
    p.add_argument("k", type=int)
    add_output(p)
    p = add_command(commands, "lemma-epi", lemma_epi_command, "lemma-epi", "epimorphism onto F(n)")
    p.add_argument("module")
    p.add_argument("n", type=int)
    add_output(p)

    p = add_command(commands, "wgg-check", wgg, "wgg-check", "weighted global generation")
    p.add_argument("module")
    for action, handler, help_text in (("hom", hom, "graded Hom(M, N)"), ("ext", ext, "graded Ext^i(M, N)")):
        p = add_command(commands, action, handler, action, help_text)
        p.add_argument("first")
        p.add_argument("second")
        if action == "ext":
            p.add_argument("i", type=int)
        add_output(p)
    p = add_command(commands, "vb-check", vb_check, "vb-check", "vector bundle test")
    p.add_argument("module")
    p = add_command(commands, "tangent", tangent, "tangent", "tangent sheaf from the Euler sequence")
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), default=None)
    add_output(p, default="T")
    p = add_command(commands, "ample-probe", ample_probe_command, "ample-probe", "ampleness probe")
    p.add_argument("module")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--against", default="O", help="test sheaves, twist literals or names, e.g. O,O(-5)")
    p.add_argument("--as", dest="name", default=None, help="name of the report binding")

    p = add_command(commands, "verify-paper", verify_suite, "verify-paper", "run the verification scenarios")
    p.add_argument("--weights", dest="scenario_weights", type=int_list, default=None,
                   help="run every scenario without fixed weights on these weights")
    p.add_argument("--scenarios", default=None, help="scenario file (default: the bundled one)")
    return parser


# ENTRY POINTS

def result_document(command, config, result=None, error=None):
    document = {"command": command, "config": config}
    if error is None:
        document["result"] = result
    else:
        document["error"] = {"type": type(error).__name__, "message": str(error)}
    return documents.versioned(document)


def run_command(argv, environ=None, log_targets=()):
    """Runs one command

    :param list[str] argv:
        command line arguments, without the program name
    :param dict[str, str] environ:
        environment, os.environ if None
    :param tuple[str] log_targets:
        where summaries and kernel logs go, see logger.Logger
    :return: the exit code and the result document
    :rtype: (int, dict)
    """
    environ = os.environ if environ is None else environ
    command, config = " ".join(argv[:2]), {}
    try:
        args = build_parser(environ).parse_args(argv)
        command = args.command_name
        options = KernelOptions.from_environment(environ, field=args.field, stabilization_cap=args.cap,
                                                 window_margin=args.margin, log_depth=args.log_depth,
                                                 log_targets=log_targets)
        config = options.describe()
        session_options = SessionOptions(args.session, options, getattr(args, "scenarios", None))
        session = load_session(session_options.session_path)
        if args.weights is not None and session.ring is not None and args.command != "ring":
            session.ring.check_same(WeightedRing(args.weights, session.ring.field))
        context = CommandContext(session, session_options)
        try:
            result = args.handler(args, context)
        finally:
            options.logger.log([Log("timings", "timings: %s" % options.logger.timing_report(), depth=1)])
            options.logger.close()
        if context.changed:
            save_session(context.session, session_options.session_path)
        ring = context.session.ring
        config["weights"] = list(ring.weights) if ring is not None else None
        if context.session.ring is not None:
            config["field"] = str(ring.field)
        return context.exit_code, result_document(command, config, result=result)
    except (MalformedInputError, PreconditionError, BudgetExceededError) as e:
        return e.exit_code, result_document(command, config, error=e)
    except (OSError, UnicodeDecodeError) as e:
        # unreadable session, module or scenario files
        return MalformedInputError.exit_code, result_document(command, config, error=e)


def main(argv=None):
    exit_code, document = run_command(sys.argv[1:] if argv is None else argv, log_targets=("stderr",))
    print(documents.dumps(document))
    if "error" in document:
        sys.stderr.write("%s: %s\n" % (document["error"]["type"], document["error"]["message"]))
    return exit_code


if __name__ == '__main__':
    sys.exit(main())
