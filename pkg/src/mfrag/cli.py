"""The ``mfrag`` command line.

Every command builds a :py:class:`~mfrag.report.Report` and prints it as JSON
or as text. Exit codes: 0 on success, 1 when a verification finds a
counterexample or no theorem outcome holds, 2 on input errors.
"""

import argparse
import logging
import sys

from mfrag import Error, __version__, read
from mfrag.catalog import NEAR_REGULAR_EXCLUDED, catalog, catalog_names
from mfrag.connectivity import is_3connected
from mfrag.corpus import fragile_scan, load_corpus, load_matroid
from mfrag.exminor import SetupContext
from mfrag.lemmas import get_verifier, lemma_ids, verify
from mfrag.matroid import set_key
from mfrag.minors import classify_elements, is_fragile
from mfrag.operations import delta_y, wye_delta
from mfrag.outcomes import classify_mainthm1, classify_mainthm2
from mfrag.pmatrix import PMatrix
from mfrag.report import Report

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2


class CommandError(Error):
    def __init__(self, message):
        self.message = message

    def __str__(self):
        return self.message


def _labels(text, count=None, option="labels"):
    labels = [label.strip() for label in text.split(",") if label.strip()]
    if count is not None and len(labels) != count:
        raise CommandError("%s expects %d comma-separated labels" % (option, count))
    return labels


def _sets(matroid, masks):
    return [list(matroid.ordered(mask)) for mask in sorted(masks, key=set_key)]


#  Commands
def cmd_catalog(args):
    if args.action == "list":
        names = catalog_names()
        payload = {
            "names": names,
            "near_regular_excluded": list(NEAR_REGULAR_EXCLUDED),
        }
        return Report(args.command, [], payload), EXIT_OK
    if not args.name:
        raise CommandError("catalog show needs a name")
    matroid = catalog(args.name)
    payload = {
        "circuits": _sets(matroid, matroid.circuit_masks()),
        "cocircuits": _sets(matroid, matroid.cocircuit_masks()),
        "three_connected": is_3connected(matroid),
        "mtd": matroid.serialize(),
    }
    return Report(args.command, [matroid.describe()], payload), EXIT_OK


def cmd_analyze(args):
    matroid = load_matroid(args.matroid, args.validate)
    minor = load_matroid(args.minor, args.validate)
    basis = _labels(args.basis) if args.basis else None
    table = classify_elements(matroid, minor, basis)
    fragile = not any(entry.flexible for entry in table)
    payload = {
        "elements": [entry.to_dict() for entry in table],
        "summary": {
            "fragile": fragile,
            # classify_elements raises NoNMinor, so N is a minor here
            "strictly_fragile": fragile,
            "flexible": [e.label for e in table if e.flexible],
            "essential": [e.label for e in table if e.essential],
        },
    }
    if basis is not None:
        payload["basis"] = matroid.ordered(matroid.mask(basis))
    instances = [matroid.describe(), minor.describe()]
    return Report(args.command, instances, payload), EXIT_OK


def cmd_classify(args):
    ctx = read(args.ctx, format="ctx", validate=args.validate)
    if not isinstance(ctx, SetupContext):
        raise CommandError("%s is not a setup" % args.ctx)
    theorems = [args.theorem] if args.theorem else [1, 2]
    payload = {}
    code = EXIT_OK
    for theorem in theorems:
        classify = classify_mainthm1 if theorem == 1 else classify_mainthm2
        verdict = classify(ctx)
        payload["mainthm%d" % theorem] = verdict.to_dict()
        if not verdict.holds:
            code = EXIT_FAILURE
    return Report(args.command, [ctx.to_dict()], payload), code


def cmd_verify(args):
    v = get_verifier(args.lemma)
    matroids = load_corpus(
        args.corpus,
        cache=args.cache_dir,
        use_cache=not args.no_cache,
        validate=args.validate,
    )
    minors = None
    if args.minor:
        minors = [load_matroid(text, args.validate) for text in args.minor]
    results = verify(args.lemma, matroids, minors=minors, jobs=args.jobs)
    failed = [r for r in results if not r.passed]
    payload = {
        "lemma": args.lemma,
        "description": v.description,
        "corpus": args.corpus,
        "instances": len(results),
        "checked": sum(r.checked for r in results),
        "skipped": sum(1 for r in results if r.skipped),
        "passed": not failed,
        "results": [
            {
                "instance": r.instance["name"] or r.instance["digest"],
                "minor": r.minor,
                "checked": r.checked,
                "skipped": r.skipped,
                "passed": r.passed,
            }
            for r in results
        ],
        "failures": [r.to_dict() for r in failed],
    }
    code = EXIT_FAILURE if failed else EXIT_OK
    return Report(args.command, [], payload), code


def cmd_pivot(args):
    matrix = read(args.matrix, format="pmx", validate=args.validate)
    if not isinstance(matrix, PMatrix):
        raise CommandError("%s is not a matrix" % args.matrix)
    x, y = _labels(args.on, 2, "--on")
    if x not in matrix.rows and y in matrix.rows:
        x, y = y, x
    pivoted = matrix.pivot(x, y)
    payload = {
        "on": [x, y],
        "rows": list(pivoted.rows),
        "cols": list(pivoted.cols),
        "pmx": pivoted.serialize(),
    }
    if args.validate:
        payload["same_matroid"] = pivoted.matroid() == matrix.matroid()
    instances = [matrix.matroid(check=False).describe()]
    return Report(args.command, instances, payload), EXIT_OK


def cmd_deltay(args):
    matroid = load_matroid(args.matroid, args.validate)
    if args.triangle:
        labels = _labels(args.triangle, 3, "--triangle")
        result = delta_y(matroid, labels)
        kind = "delta_y"
    else:
        labels = _labels(args.triad, 3, "--triad")
        result = wye_delta(matroid, labels)
        kind = "wye_delta"
    result.name = "%s(%s,%s)" % (kind, matroid.name or "M", ",".join(labels))
    payload = {
        "exchange": kind,
        "labels": labels,
        "matroid": result.describe(),
        "three_connected": is_3connected(result),
        "mtd": result.serialize(),
    }
    return Report(args.command, [matroid.describe()], payload), EXIT_OK


def cmd_fragile_scan(args):
    minor = load_matroid(args.minor, args.validate)
    found = fragile_scan(
        minor,
        args.field,
        args.max_n,
        cache=args.cache_dir,
        use_cache=not args.no_cache,
    )
    matroids = []
    for matroid, profile in found:
        table = classify_elements(matroid, minor, profile=profile)
        matroids.append(
            {
                "matroid": matroid.describe(),
                "fragile": is_fragile(matroid, minor, profile),
                "essential": [e.label for e in table if e.essential],
                "elements": [e.to_dict() for e in table],
            }
        )
    payload = {
        "field": args.field,
        "max_n": args.max_n,
        "count": len(matroids),
        "matroids": matroids,
    }
    return Report(args.command, [minor.describe()], payload), EXIT_OK


#  Argument parsing
def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        prog="mfrag",
        description="Exact structure analysis of small matroids and "
        "excluded-minor setups.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="output format (default: json)",
    )
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="directory for generated corpora (default: $MFRAG_CACHE_DIR or "
        "~/.cache/mfrag)",
    )
    parser.add_argument(
        "--no-cache", action="store_true", help="do not read or write the cache"
    )
    parser.add_argument(
        "--no-validate",
        dest="validate",
        action="store_false",
        help="skip the exchange-axiom, P-matrix and setup checks on input files",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress (-v) or debugging output (-vv)",
    )
    parser.add_argument(
        "-o", "--output", default=None, help="write the report to a file"
    )
    commands = parser.add_subparsers(dest="name", metavar="command")
    commands.required = True

    p = commands.add_parser("catalog", help="list or show named matroids")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?", help="catalog name for show")
    p.set_defaults(handler=cmd_catalog)

    p = commands.add_parser("analyze", help="classify elements relative to N")
    p.add_argument("--matroid", required=True, help="catalog name or file")
    p.add_argument("--minor", required=True, help="catalog name or file")
    p.add_argument("--basis", help="comma-separated basis for robust/strong flags")
    p.set_defaults(handler=cmd_analyze)

    p = commands.add_parser("classify", help="evaluate theorem outcomes on a setup")
    p.add_argument("--ctx", required=True, help="a .ctx file")
    p.add_argument("--theorem", type=int, choices=(1, 2), default=None)
    p.set_defaults(handler=cmd_classify)

    p = commands.add_parser("verify", help="check a lemma over a corpus")
    p.add_argument("--lemma", required=True, help=", ".join(lemma_ids()))
    p.add_argument(
        "--corpus",
        required=True,
        help="catalog, all-gf2-upto(n), all-gf3-upto(n) or a comma-separated "
        "list of files and catalog names",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument(
        "--minor",
        action="append",
        help="minor N for the N-minor lemmas (repeatable; default U(2,4), MK4)",
    )
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("pivot", help="pivot a matrix on an entry")
    p.add_argument("--matrix", required=True, help="a .pmx file")
    p.add_argument("--on", required=True, help="row and column label, x,y")
    p.set_defaults(handler=cmd_pivot)

    p = commands.add_parser("deltay", help="Delta-Y or Y-Delta exchange")
    p.add_argument("--matroid", required=True, help="catalog name or file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--triangle", help="three labels p,q,r")
    group.add_argument("--triad", help="three labels p,q,r (Y-Delta)")
    p.set_defaults(handler=cmd_deltay)

    p = commands.add_parser(
        "fragile-scan", help="find strictly N-fragile matroids over a field"
    )
    p.add_argument("--minor", required=True, help="catalog name or file")
    p.add_argument("--field", required=True, help="GF(2), GF(3), GF(4), ...")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.set_defaults(handler=cmd_fragile_scan)

    args = parser.parse_args(argv)
    args.command = ["mfrag"] + list(sys.argv[1:] if argv is None else argv)
    return args


def _render(report, args):
    if args.format == "text":
        return report.to_text()
    return report.serialize()


def main(argv=None):
    args = parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        report, code = args.handler(args)
        text = _render(report, args)
        if args.output:
            with open(args.output, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    except Error as exc:
        logger.debug("Command failed", exc_info=True)
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
