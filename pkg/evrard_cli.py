# -*- coding: utf-8 -*-
"""
Command-line front end
======================

    python evrard_cli.py validate corpus/interval.json corpus/broken_interval.json
    python evrard_cli.py homology corpus/square_boundary.json --max-dim 2
    python evrard_cli.py replace corpus/id_interval.json --max-stage 2 --output out/
    python evrard_cli.py check-b corpus/disc2_to_interval.json --raw
    python evrard_cli.py adjoint corpus/point_zero.json --right
    python evrard_cli.py corpus --seed 7 --count 20

Exit codes: 0 pass, 1 check failure, 2 input error, 3 budget exceeded.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple, Type

import pandas as pd

from config_loader import DocumentLoader, load_run_config, save_category, save_functor
from evrard.budget import as_budget
from evrard.categories.category import (
    FiniteCategory,
    Functor,
    identity_functor,
    require_valid,
    validate_category,
    validate_functor,
    validate_nat_trans,
)
from evrard.categories.corpus import poset_corpus
from evrard.checks import check_theorem_b_hypothesis, find_left_adjoint, find_right_adjoint, verify_evrard_replacement
from evrard.errors import (
    BudgetExceeded,
    CategoryError,
    EvrardError,
    InputError,
    PreconditionError,
    TruncationError,
    ValidationError,
)
from evrard.homology.chains import ComplexCache, format_homology, homology_of_category, is_quasi_iso
from evrard.paths.lambda_n import build_lambda_n
from evrard.paths.replacement import build_replacement, check_replacement_identities
from evrard.settings import COMMANDS, RunConfig
from evrard_verifier import EvrardVerifier

logger = logging.getLogger("evrard")

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

# Most specific class first: ValidationError is a CategoryError.
EXIT_CODES: Tuple[Tuple[Type[Exception], int], ...] = (
    (BudgetExceeded, EXIT_BUDGET),
    (ValidationError, EXIT_FAIL),
    (InputError, EXIT_INPUT),
    (CategoryError, EXIT_INPUT),
    (TruncationError, EXIT_FAIL),
    (PreconditionError, EXIT_FAIL),
    (EvrardError, EXIT_FAIL),
)


def exit_code_for(exc: Exception) -> int:
    for kind, code in EXIT_CODES:
        if isinstance(exc, kind):
            return code
    raise exc


def _parse_args(argv: Optional[Sequence[str]]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Fibrant replacement of functors between finite categories and Theorem B checks.",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to run.")
    parser.add_argument("inputs", nargs="*", help="Category, functor or nat_trans documents.")
    parser.add_argument("--config", default=None, help="Run configuration file (evrard_config.json).")
    parser.add_argument("--max-stage", type=int, default=None, help="Stage N of the truncated replacement.")
    parser.add_argument("--max-dim", type=int, default=None, help="Homology degree bound k.")
    parser.add_argument("--variant", choices=("str", "le"), default=None, help="Index category Δ_str or Δ_≤.")
    parser.add_argument("--budget", type=int, default=None, help="Enumeration budget.")
    parser.add_argument("--json", action="store_true", help="Emit machine-readable JSON output.")
    parser.add_argument("--raw", action="store_true", default=None, help="check-b: test f itself, not f_h.")
    parser.add_argument("--dual", action="store_true", default=None, help="check-b --raw: use [v_*].")
    parser.add_argument("--allow-loops", action="store_true", default=None, help="Accept a loopy target.")
    parser.add_argument("--seed", type=int, default=None, help="corpus: random seed.")
    parser.add_argument("--count", type=int, default=20, help="corpus: number of random posets.")
    side = parser.add_mutually_exclusive_group()
    side.add_argument("--left", dest="side", action="store_const", const="left", help="adjoint: left adjoint.")
    side.add_argument("--right", dest="side", action="store_const", const="right", help="adjoint: right adjoint.")
    parser.add_argument("--excel", default=None, help="check-b: export the report tables to this .xlsx file.")
    parser.add_argument("--output", default=None, help="replace: directory for the serialized stage.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging.")
    return parser.parse_args(argv)


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


class Command:
    """One invocation: configuration, loaded documents and output."""

    def __init__(self, config: RunConfig, count: int = 20, output_dir: Optional[str] = None):
        self.config = config
        self.count = count
        self.output_dir = output_dir
        self.loader = DocumentLoader()
        self.budget = as_budget(config.budget)

    @property
    def as_json(self) -> bool:
        return self.config.output == "json"

    def say(self, line: str = "") -> None:
        if not self.as_json:
            print(line)

    def emit(self, payload: Dict[str, Any]) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True))

    def functor(self) -> Functor:
        if len(self.config.inputs) != 1:
            raise InputError(f"{self.config.command} takes exactly one functor document")
        F = self.loader.load(self.config.inputs[0])
        if not isinstance(F, Functor):
            raise InputError("expected a functor document", path=self.config.inputs[0], field='type')
        require_valid(validate_functor(F), f"functor {F.name}")
        return F

    def run(self) -> int:
        handler = getattr(self, "cmd_" + self.config.command.replace("-", "_"))
        return handler()

    # ------------------------------------------------------------------

    def cmd_validate(self) -> int:
        if not self.config.inputs:
            raise InputError("validate needs at least one document")
        results = []
        for path in self.config.inputs:
            doc = self.loader.load(path)
            if isinstance(doc, FiniteCategory):
                reports = [validate_category(doc)]
            elif isinstance(doc, Functor):
                reports = [validate_category(doc.source), validate_category(doc.target), validate_functor(doc)]
            else:
                reports = [validate_functor(doc.F), validate_functor(doc.G), validate_nat_trans(doc)]
            passed = all(r.passed for r in reports)
            results.append({'path': path, 'passed': passed, 'reports': [r.to_dict() for r in reports]})
            self.say(f"{'✅' if passed else '❌'} {path}")
            for report in reports:
                if not report.passed:
                    self.say(report.summary())
        overall = all(r['passed'] for r in results)
        self.emit({'check': 'validate', 'verdict': "pass" if overall else "fail", 'documents': results})
        return EXIT_PASS if overall else EXIT_FAIL

    def cmd_homology(self) -> int:
        if not self.config.inputs:
            raise InputError("homology needs a category document")
        payload = []
        for path in self.config.inputs:
            C = self.loader.load(path)
            if not isinstance(C, FiniteCategory):
                raise InputError("expected a category document", path=path, field='type')
            require_valid(validate_category(C), f"category {C.name}")
            groups = homology_of_category(C, self.config.max_dim, budget=self.budget)
            self.say(f"{C.name}: {format_homology(groups)}")
            payload.append({'path': path, 'category': C.name, 'degree_bound': self.config.max_dim,
                            'homology': [g.to_dict() for g in groups], 'text': format_homology(groups)})
        self.emit({'check': 'homology', 'verdict': "pass", 'results': payload})
        return EXIT_PASS

    def cmd_replace(self) -> int:
        f = self.functor()
        stage = build_replacement(f, self.config.max_stage, self.config.variant, budget=self.budget)
        H = stage.category
        identities = check_replacement_identities(stage)
        self.say(f"🔄 {H.name}: {H.num_objects} objects, {H.num_morphisms} morphisms")
        for n, layer in sorted(stage.path.layers.items()):
            self.say(f"   • Λ{n}: {layer.category.num_objects} objects, {layer.category.num_morphisms} morphisms")
        self.say(f"{'✅' if identities.passed else '❌'} q∘i = id, f_h∘i = f, pullback square")
        if self.output_dir:
            os.makedirs(self.output_dir, exist_ok=True)
            quiet = self.as_json
            source_ref, target_ref = "source.json", "target.json"
            save_category(os.path.join(self.output_dir, "replacement.json"), H, quiet=quiet)
            save_category(os.path.join(self.output_dir, source_ref), f.source, quiet=quiet)
            save_category(os.path.join(self.output_dir, target_ref), f.target, quiet=quiet)
            save_functor(os.path.join(self.output_dir, "f_h.json"), stage.f_h, "replacement.json", target_ref, quiet)
            save_functor(os.path.join(self.output_dir, "q.json"), stage.q, "replacement.json", source_ref, quiet)
            save_functor(os.path.join(self.output_dir, "i.json"), stage.i, source_ref, "replacement.json", quiet)
        self.emit({
            'check': 'replace',
            'target': f.name,
            'stage': self.config.max_stage,
            'variant': self.config.variant,
            'verdict': "pass" if identities.passed else "fail",
            'counts': {
                'objects': H.num_objects,
                'morphisms': H.num_morphisms,
                'layers': {str(n): [layer.category.num_objects, layer.category.num_morphisms]
                           for n, layer in sorted(stage.path.layers.items())},
            },
            'witnesses': [failure.to_dict() for failure in identities.failures],
        })
        return EXIT_PASS if identities.passed else EXIT_FAIL

    def cmd_check_b(self) -> int:
        f = self.functor()
        c = self.config
        if c.raw:
            report = check_theorem_b_hypothesis(f, c.max_dim, dual=c.dual, allow_loops=c.allow_loops, budget=self.budget)
            name = 'raw'
        else:
            report = verify_evrard_replacement(f, c.max_stage, c.max_dim, c.variant, budget=self.budget,
                                               allow_loops=c.allow_loops)
            name = 'replacement'
        verdict = report.to_dict()['verdict']
        self.say(f"{'✅' if report.passed else '❌'} {name} check for {f.name}: {verdict}")
        self.say(report.to_frame().to_string(index=False))
        if c.excel:
            verifier = EvrardVerifier(f, c.max_stage, c.max_dim, c.variant, budget=self.budget, verbose=not self.as_json)
            verifier.export_results({name: report}, c.excel)
        self.emit(report.to_dict())
        return EXIT_PASS if report.passed else EXIT_FAIL

    def cmd_adjoint(self) -> int:
        f = self.functor()
        search = find_left_adjoint if self.config.side == "left" else find_right_adjoint
        result = search(f, budget=self.budget)
        if result.found:
            self.say(f"✅ {self.config.side} adjoint {result.adjoint.name}")
            table = pd.DataFrame(
                [{'Object': d, 'Image': result.adjoint.ob(d), 'Universal arrow': arrow}
                 for d, (_, arrow) in result.universal.items()],
                columns=['Object', 'Image', 'Universal arrow'])
            self.say(table.to_string(index=False))
            self.say(f"   • Triangle identities: {'pass' if result.triangles.passed else 'FAIL'}")
        else:
            self.say(f"❌ no {self.config.side} adjoint: no universal arrow at {result.witness}")
        payload = result.to_dict()
        payload['check'] = 'adjoint'
        payload['verdict'] = "pass" if result.found else "fail"
        self.emit(payload)
        return EXIT_PASS if result.found and result.triangles.passed else EXIT_FAIL

    def cmd_corpus(self) -> int:
        """Theorem B for id_P and H(Λ₁P) ≅ H(P) over a seeded random poset corpus."""
        rows: List[Dict[str, Any]] = []
        k = self.config.max_dim
        for P in poset_corpus(seed=self.config.seed, count=self.count):
            identity = identity_functor(P)
            theorem_b = check_theorem_b_hypothesis(identity, k, budget=self.budget)
            layer = build_lambda_n(P, 1, budget=self.budget)
            p1 = is_quasi_iso(layer.p1, k, cache=ComplexCache(self.budget))
            rows.append({
                'Poset': P.name,
                'Objects': P.num_objects,
                'Morphisms': P.num_morphisms,
                'Homology': format_homology(homology_of_category(P, k, budget=self.budget)),
                'Theorem_B_id': "pass" if theorem_b.passed else "FAIL",
                'Lambda1': "pass" if p1.passed else "FAIL",
            })
        df = pd.DataFrame(rows)
        passed = all(r['Theorem_B_id'] == "pass" and r['Lambda1'] == "pass" for r in rows)
        self.say(f"📋 Corpus (seed {self.config.seed}, {len(rows)} posets):")
        self.say(df.to_string(index=False))
        self.emit({'check': 'corpus', 'seed': self.config.seed, 'degree_bound': k,
                   'verdict': "pass" if passed else "fail", 'rows': rows})
        return EXIT_PASS if passed else EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parse_args(argv)
    _configure_logging(args.verbose)
    as_json = args.json
    try:
        config, corpus = load_run_config(
            args.config,
            command=args.command,
            inputs=args.inputs or None,
            max_stage=args.max_stage,
            max_dim=args.max_dim,
            variant=args.variant,
            budget=args.budget,
            output="json" if args.json else None,
            seed=args.seed,
            raw=args.raw,
            dual=args.dual,
            allow_loops=args.allow_loops,
            side=args.side,
            excel=args.excel,
        )
        as_json = config.output == "json"
        if not config.inputs:
            config.inputs = corpus
        logger.debug("Run configuration: %s", config)
        return Command(config, count=args.count, output_dir=args.output).run()
    except ValueError as exc:
        if isinstance(exc, EvrardError):
            code = exit_code_for(exc)
        else:
            code = EXIT_INPUT
        error = exc
    except EvrardError as exc:
        code = exit_code_for(exc)
        error = exc
    if as_json:
        print(json.dumps({'error': str(error), 'kind': type(error).__name__, 'exit_code': code},
                         indent=2, ensure_ascii=False, sort_keys=True))
    else:
        print(f"❌ {type(error).__name__}: {error}", file=sys.stderr)
        report = getattr(error, 'report', None)
        if report is not None and code == EXIT_FAIL:
            print(report.summary(), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
