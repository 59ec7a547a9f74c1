"""Command-line front end.

    nilsplit validate    FILE-OR-NAME
    nilsplit cohomology  FILE-OR-NAME [--max-degree K]
    nilsplit symplectic  FILE-OR-NAME [--seed N] [--omega-from-file]
    nilsplit csplit      FILE-OR-NAME [--base s2|formal:M]
                         [--alpha solve|SPEC] [--max-degree K] [--seed N]
    nilsplit catalog     --list | --emit NAME

Positional inputs are file paths first, then built-in catalog names.
Every subcommand accepts --format human|machine. The seed comes from
--seed, else the NILSPLIT_SEED environment variable, else 0. Exit codes:
0 success, 2 input or validation error, 3 no symplectic structure found
or provable, 4 twisting matrix incompatible with the fiber differential.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bundles, catalog, lie_algebras, reports, symplectic
from .cohomology import Cohomology, poincare_check
from .documents import (
    AlgebraDocument,
    DocumentError,
    digest,
    emit_document,
    parse_document,
    parse_rational,
)
from .errors import NilsplitError, TwistIncompatibleError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_SYMPLECTIC = 3
EXIT_BAD_TWIST = 4


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NILSPLIT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DocumentError(f"NILSPLIT_SEED is not an integer: {env!r}") from None
    return 0


def _load(target: str):
    """A file path if one exists, else a catalog name."""
    if os.path.exists(target):
        with open(target, "r", encoding="utf-8") as fh:
            text = fh.read()
        doc = parse_document(text)
        return doc, digest(text), "file"
    doc = catalog.get(target)
    return doc, digest(emit_document(doc)), "catalog"


def _emit(report: dict, args) -> None:
    sys.stdout.write(reports.render(report, args.format))


def _validation_section(report: lie_algebras.ValidationReport) -> dict:
    return {
        "ok": report.ok,
        "jacobi_ok": report.jacobi_ok,
        "jacobi_failures": [
            {"i": i, "j": j, "k": k, "defect": [str(x) for x in defect]}
            for i, j, k, defect in report.jacobi_failures
        ],
        "nilpotent": report.nilpotent,
        "nilpotency_class": report.nilpotency_class,
        "lower_central_dims": list(report.lower_central_dims),
        "derived_subalgebra_dim": report.derived_dim,
        "summary": report.summary(),
    }


def _validated_model(doc: AlgebraDocument, report: dict, args):
    """ce model or None; on failure fills the report and prints it."""
    vreport = lie_algebras.validate(doc.to_spec())
    report["validation"] = _validation_section(vreport)
    if not vreport.ok:
        _emit(report, args)
        return None
    return lie_algebras.ce_model(doc.to_spec())


def _certificate_section(cert: symplectic.SymplecticCertificate) -> dict:
    return {
        "closed": cert.closed,
        "d_omega": str(cert.d_omega),
        "even_dimensional": cert.even_dimensional,
        "rank": cert.rank,
        "nondegenerate": cert.nondegenerate,
        "kernel_witness": None
        if cert.kernel_witness is None
        else [str(x) for x in cert.kernel_witness],
        "symplectic": cert.symplectic,
    }


def _omega_for(doc: AlgebraDocument, ce, args, report: dict):
    """A certified form from the document or from the seeded search.

    Returns (form, exit_code); on failure the report explains which of the
    two negative outcomes occurred and the code is EXIT_NO_SYMPLECTIC.
    """
    if getattr(args, "omega_from_file", False) or doc.omega is not None:
        coeffs = doc.omega_coeffs()
        if coeffs is None:
            raise DocumentError("document carries no omega field")
        form = symplectic.SymplecticForm.from_coeffs(ce, coeffs)
        cert = symplectic.is_symplectic(ce, form.omega)
        report["omega"] = {"source": "document", "value": str(form)}
        report["certificate"] = _certificate_section(cert)
        if not cert.symplectic:
            report["status"] = "omega-not-symplectic"
            return None, EXIT_NO_SYMPLECTIC
        return form, EXIT_OK

    seed = _resolve_seed(args)
    result = symplectic.find_symplectic(ce, seed=seed)
    report["seed"] = seed
    report["search"] = {
        "status": result.status,
        "trials": result.trials,
        "closed_two_form_dim": result.closed_dim if result.closed_dim >= 0 else None,
        "reason": result.reason,
    }
    if not result.found:
        report["status"] = result.status
        return None, EXIT_NO_SYMPLECTIC
    report["omega"] = {"source": "search", "value": str(result.form)}
    report["certificate"] = _certificate_section(result.certificate)
    return result.form, EXIT_OK


def cmd_validate(args) -> int:
    doc, dig, source = _load(args.algebra)
    report = reports.base_report(doc.name, dig, source)
    vreport = lie_algebras.validate(doc.to_spec())
    report["validation"] = _validation_section(vreport)
    _emit(report, args)
    return EXIT_OK if vreport.ok else EXIT_INPUT


def cmd_cohomology(args) -> int:
    doc, dig, source = _load(args.algebra)
    report = reports.base_report(doc.name, dig, source)
    ce = _validated_model(doc, report, args)
    if ce is None:
        return EXIT_INPUT
    cap = args.max_degree if args.max_degree is not None else ce.n
    # duality and the Euler characteristic always refer to the full range
    full = Cohomology(ce.dga, max_degree=max(cap, ce.n))
    bettis = full.betti_vector(cap)
    report["cohomology"] = {
        "max_degree": cap,
        "betti": bettis,
        "poincare_duality": poincare_check(full, ce.n),
        "euler_characteristic": full.euler_characteristic(ce.n),
        "b1_equals_dim_minus_derived": bettis[1] == ce.n - ce.report.derived_dim
        if cap >= 1
        else None,
    }
    _emit(report, args)
    return EXIT_OK


def cmd_symplectic(args) -> int:
    doc, dig, source = _load(args.algebra)
    report = reports.base_report(doc.name, dig, source, seed=None)
    ce = _validated_model(doc, report, args)
    if ce is None:
        return EXIT_INPUT
    form, code = _omega_for(doc, ce, args, report)
    if form is None:
        _emit(report, args)
        return code
    entries = symplectic.hard_lefschetz(ce, form)
    report["hard_lefschetz"] = {
        "table": [
            {
                "k": e.k,
                "map": f"H^{e.source_degree} -> H^{e.target_degree}",
                "rank": e.rank,
                "betti": e.source_betti,
                "isomorphism": e.isomorphism,
            }
            for e in entries
        ],
        "holds": all(e.isomorphism for e in entries),
    }
    report["status"] = "symplectic"
    _emit(report, args)
    return EXIT_OK


def _parse_base(text: str) -> bundles.BaseModel:
    if text == "s2":
        return bundles.sphere_base()
    if text.startswith("formal:"):
        try:
            m = int(text.split(":", 1)[1])
        except ValueError:
            raise DocumentError(f"bad base spec {text!r}") from None
        if m < 1:
            raise DocumentError("formal base needs at least one generator")
        return bundles.formal_even_base(m)
    raise DocumentError(f"bad base spec {text!r}; expected 's2' or 'formal:M'")


def _parse_alpha(text: str, n: int, m: int):
    rows = text.split(";")
    if len(rows) == 1 and m == 1:
        flat = [p.strip() for p in rows[0].split(",")]
        if len(flat) != n:
            raise DocumentError(f"alpha needs {n} entries, got {len(flat)}")
        return [[parse_rational(p, "alpha")] for p in flat]
    if len(rows) != n:
        raise DocumentError(f"alpha needs {n} rows of {m} entries, got {len(rows)}")
    out = []
    for r, row in enumerate(rows):
        parts = [p.strip() for p in row.split(",")]
        if len(parts) != m:
            raise DocumentError(f"alpha row {r + 1} needs {m} entries")
        out.append([parse_rational(p, f"alpha[{r + 1}]") for p in parts])
    return out


def _csplit_sections(report: dict, tm: bundles.TwistedModel, cap: int) -> None:
    verdict = bundles.csplit_compare(tm, cap)
    report["total_betti"] = list(verdict.total)
    report["csplit"] = {
        "c_splits": verdict.c_splits,
        "cap": verdict.cap,
        "total": list(verdict.total),
        "expected_convolution": list(verdict.expected),
        "alpha_zero": verdict.alpha_zero,
        "ring_level": verdict.ring_level,
    }


def cmd_csplit(args) -> int:
    doc, dig, source = _load(args.algebra)
    report = reports.base_report(doc.name, dig, source)
    ce = _validated_model(doc, report, args)
    if ce is None:
        return EXIT_INPUT
    if ce.n % 2:
        report["status"] = "definitively-none"
        report["reason"] = f"odd dimension {ce.n}: no symplectic structure"
        _emit(report, args)
        return EXIT_NO_SYMPLECTIC
    base = _parse_base(args.base)
    form, code = _omega_for(doc, ce, args, report)
    if form is None:
        _emit(report, args)
        return code
    cap = args.max_degree if args.max_degree is not None else ce.n + 2
    report["base"] = args.base

    if args.alpha == "solve":
        forcing = bundles.forcing_check(ce, form, base)
        report["forcing"] = {
            "solution_dimension": forcing.solution_dimension,
            "forced_zero": forcing.forced_zero,
            "basis_alphas": [
                [[str(c) for c in row] for row in alpha]
                for alpha in forcing.basis_alphas
            ],
            "witnesses_verified": forcing.witnesses_verified,
        }
        zero = [[0] * base.m for _ in range(ce.n)]
        tm = bundles.build_twisted(ce, base, zero)
        _csplit_sections(report, tm, cap)
        report["status"] = "forced-zero" if forcing.forced_zero else "twists-remain"
        _emit(report, args)
        return EXIT_OK

    alpha = _parse_alpha(args.alpha, ce.n, base.m)
    try:
        tm = bundles.build_twisted(ce, base, alpha)
    except TwistIncompatibleError as exc:
        report["status"] = "invalid-twist"
        report["twist_error"] = {
            "generator": exc.generator_name,
            "d_squared": str(exc.witness),
        }
        _emit(report, args)
        return EXIT_BAD_TWIST
    obstruction = bundles.hamiltonian_obstruction(tm, form)
    report["obstruction"] = {
        "d_omega_total": str(obstruction.full),
        "per_base_generator": {
            name: str(el) for name, el in obstruction.per_generator.items()
        },
        "hamiltonian": obstruction.hamiltonian,
    }
    _csplit_sections(report, tm, cap)
    report["status"] = "analyzed"
    _emit(report, args)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.list:
        if args.format == "machine":
            _emit({"catalog": catalog.names()}, args)
        else:
            for name in catalog.names():
                sys.stdout.write(name + "\n")
        return EXIT_OK
    if args.emit:
        doc = catalog.get(args.emit)
        sys.stdout.write(emit_document(doc))
        return EXIT_OK
    raise DocumentError("catalog: pass --list or --emit NAME")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilsplit",
        description="Exact CE models, symplectic certificates, and c-splitting checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.add_argument("--seed", type=int, default=None, help="u64 search seed")

    p = sub.add_parser("validate", help="check Jacobi and nilpotency")
    p.add_argument("algebra", help="document path or catalog name")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="Betti table of the CE model")
    p.add_argument("algebra")
    p.add_argument("--max-degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("symplectic", help="certify or search for a symplectic form")
    p.add_argument("algebra")
    p.add_argument(
        "--omega-from-file",
        action="store_true",
        help="require and certify the document's omega field",
    )
    common(p)
    p.set_defaults(func=cmd_symplectic)

    p = sub.add_parser("csplit", help="twisted model analysis over a base")
    p.add_argument("algebra")
    p.add_argument("--base", default="s2", help="'s2' or 'formal:M'")
    p.add_argument(
        "--alpha",
        default="solve",
        help="'solve' or rational entries: 'c1,..,cN' (m=1) / rows 'r1;..;rN'",
    )
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--omega-from-file", action="store_true")
    common(p)
    p.set_defaults(func=cmd_csplit)

    p = sub.add_parser("catalog", help="list or emit built-in algebras")
    p.add_argument("--list", action="store_true")
    p.add_argument("--emit", metavar="NAME")
    common(p)
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except NilsplitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
