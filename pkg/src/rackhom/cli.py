"""Command-line front end: ``python -m rackhom <command> ...``.

Exit codes: 0 success, 1 mathematical failure (axiom witness, failed suite,
unsupported precondition), 2 usage or parse error.
"""

import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

import click

from . import __version__
from .chain_complex import homology_table
from .config import DEFAULT_MAX_DEGREE, LOG_FORMAT, MAX_DEGREE, OUTPUT_FORMATS, SUITES
from .data import (
    decomposition_frame,
    dumps,
    homology_frame,
    load_cochain,
    load_shelf,
    load_xset,
    render_table,
    suite_frame,
)
from .errors import AxiomFailure, ContractViolation, InputError, ResourceLimitExceeded, UnsupportedOperation
from .exactlin import check_prime
from .products import cup, half_cup, witness
from .shelf import CoefficientSystem, FiniteShelf, builtin
from .splitting import PARTS, split_homology
from .verify import run_suite

LOGGER = logging.getLogger(__name__)


class MathematicalFailure(Exception):
    """A computation finished and its answer is negative; ``payload`` is printed."""

    def __init__(self, payload: Any):
        super().__init__("mathematical failure")
        self.payload = payload


@dataclass(frozen=True)
class RunConfig:
    """Options shared by every command."""

    command: str
    shelf_file: Optional[str] = None
    dihedral: Optional[int] = None
    trivial: Optional[int] = None
    permutation: Optional[str] = None
    max_degree: int = DEFAULT_MAX_DEGREE
    coeff: str = "trivial"
    xset_file: Optional[str] = None
    modulus: Optional[int] = None
    output_format: str = "json"
    suite: str = "all"

    def validate(self) -> None:
        sources = [s for s in (self.shelf_file, self.dihedral, self.trivial, self.permutation) if s is not None]
        if len(sources) != 1:
            raise click.UsageError("give exactly one of --shelf, --dihedral, --trivial, --permutation")
        if not 0 <= self.max_degree <= MAX_DEGREE:
            raise click.UsageError(f"--max-degree must lie in 0..{MAX_DEGREE}")
        if self.coeff == "xset" and self.xset_file is None:
            raise click.UsageError("--coeff xset needs --xset FILE")
        check_prime(self.modulus)

    def load_shelf(self) -> FiniteShelf:
        if self.shelf_file is not None:
            return load_shelf(self.shelf_file)
        if self.dihedral is not None:
            return builtin("dihedral", self.dihedral)
        if self.trivial is not None:
            return builtin("trivial", self.trivial)
        try:
            perm = [int(v) for v in self.permutation.split(",")]
        except ValueError as e:
            raise InputError(f"--permutation expects comma-separated integers, got {self.permutation!r}") from e
        return builtin("permutation", perm)

    def coefficients(self, shelf: FiniteShelf) -> CoefficientSystem:
        if self.coeff == "self":
            return CoefficientSystem.self_action(shelf, self.modulus)
        if self.coeff == "xset":
            return CoefficientSystem.from_xset(load_xset(self.xset_file, shelf), self.modulus)
        return CoefficientSystem.trivial(shelf, self.modulus)


def _emit(config: RunConfig, payload: Dict[str, Any], tables: List[str]) -> None:
    if config.output_format == "json":
        click.echo(dumps(payload))
    else:
        click.echo("\n\n".join(tables))


def run(config: RunConfig, body: Callable[[RunConfig], None]) -> None:
    """Validate, run ``body`` and translate exceptions into exit codes."""
    try:
        config.validate()
        body(config)
    except click.UsageError:
        raise
    except MathematicalFailure as e:
        _emit(config, e.payload, [dumps(e.payload)])
        sys.exit(1)
    except AxiomFailure as e:
        click.echo(f"Error: {e}", err=True)
        click.echo(dumps({"witness": e.witness}), err=True)
        sys.exit(1)
    except (UnsupportedOperation, ContractViolation) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)
    except (InputError, ResourceLimitExceeded) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(2)


COMMON_OPTIONS = [
    click.option("--shelf", "shelf_file", type=click.Path(), help="Shelf table JSON file."),
    click.option("--dihedral", type=int, help="Use the dihedral quandle of order N."),
    click.option("--trivial", type=int, help="Use the trivial quandle of order N."),
    click.option("--permutation", type=str, help='Use the permutation rack, e.g. "0,2,1".'),
    click.option("--coeff", type=click.Choice(["trivial", "self", "xset"]), default="trivial", show_default=True),
    click.option("--xset", "xset_file", type=click.Path(), help="X-set action JSON file for --coeff xset."),
    click.option("--mod", "modulus", type=int, default=None, help="Work over F_p."),
    click.option("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, show_default=True),
    click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="json", show_default=True),
]


def common_options(fn: Callable) -> Callable:
    """Shelf source, coefficients, modulus, degree and format flags."""
    for option in reversed(COMMON_OPTIONS):
        fn = option(fn)
    return fn


@click.group()
@click.version_option(__version__, prog_name="rackhom")
@click.option("--verbose", is_flag=True, help="Log debug output to stderr.")
def main(verbose: bool):
    """Rack and quandle (co)homology toolkit."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, format=LOG_FORMAT, stream=sys.stderr)


@main.command()
@common_options
def validate(**kwargs):
    """Classify a table (shelf, rack, spindle, quandle)."""
    config = RunConfig("validate", **kwargs)

    def body(cfg: RunConfig) -> None:
        shelf = cfg.load_shelf()
        payload = {
            **shelf.to_json(),
            "is_shelf": shelf.is_shelf,
            "is_rack": shelf.is_rack,
            "is_spindle": shelf.is_spindle,
            "is_quandle": shelf.is_quandle,
            "witness": list(shelf.witness) if shelf.witness else None,
        }
        if cfg.coeff == "xset":
            payload["xset"] = cfg.coefficients(shelf).action.to_json()
        if not shelf.is_shelf:
            raise MathematicalFailure(payload)
        flags = " ".join(f"{k}={payload[k]}" for k in ("is_shelf", "is_rack", "is_spindle", "is_quandle"))
        _emit(cfg, payload, [f"size={shelf.size} {flags}"])

    run(config, body)


def _table_command(dual: bool, **kwargs) -> None:
    config = RunConfig("cohomology" if dual else "homology", **kwargs)

    def body(cfg: RunConfig) -> None:
        shelf = cfg.load_shelf()
        shelf.require_shelf()
        groups = homology_table(shelf, cfg.coefficients(shelf), cfg.max_degree, dual=dual, modulus=cfg.modulus)
        payload = {
            "shelf": shelf.to_json(),
            "coefficients": cfg.coeff,
            "modulus": cfg.modulus,
            "dual": dual,
            "groups": [g.to_json() for g in groups],
        }
        _emit(cfg, payload, [render_table(homology_frame(groups), title=cfg.command)])

    run(config, body)


@main.command()
@common_options
def homology(**kwargs):
    """Rack homology H_n for 0 ≤ n ≤ max degree."""
    _table_command(False, **kwargs)


@main.command()
@common_options
def cohomology(**kwargs):
    """Rack cohomology H^n for 0 ≤ n ≤ max degree."""
    _table_command(True, **kwargs)


@main.command(name="cup")
@common_options
@click.option("--left", "left_file", type=click.Path(), required=True, help="Cochain JSON file f.")
@click.option("--right", "right_file", type=click.Path(), required=True, help="Cochain JSON file g.")
@click.option(
    "--product",
    type=click.Choice(["cup", "left", "right", "commutativity", "zinbielity"]),
    default="cup",
    show_default=True,
    help="f⌣g, f↼g, f⇀g, or one of the two homotopy witnesses.",
)
def cup_command(left_file: str, right_file: str, product: str, **kwargs):
    """Evaluate a product of two cochains."""
    config = RunConfig("cup", **kwargs)

    def body(cfg: RunConfig) -> None:
        shelf = cfg.load_shelf()
        shelf.require_shelf()
        coeff = cfg.coefficients(shelf)
        f = load_cochain(left_file, shelf, coeff)
        g = load_cochain(right_file, shelf, coeff)
        if product == "cup":
            result = cup(shelf, coeff, f, g)
        elif product in ("left", "right"):
            result = half_cup(shelf, f, g, product)
        else:
            result = witness(shelf, f, g, product)
        payload = {"product": product, "result": result.to_json()}
        _emit(cfg, payload, [dumps(result.to_json())])

    run(config, body)


@main.command()
@common_options
def decompose(**kwargs):
    """Rack, quandle, degenerate and late homology side by side."""
    config = RunConfig("decompose", **kwargs)

    def body(cfg: RunConfig) -> None:
        shelf = cfg.load_shelf()
        shelf.require_shelf()
        shelf.require_spindle("decompose")
        tables = {
            part: split_homology(shelf, part, cfg.max_degree, modulus=cfg.modulus) for part in PARTS
        }
        rows = []
        for n in range(cfg.max_degree + 1):
            rack_split = tables["rack"][n] == tables["quandle"][n].direct_sum(tables["degenerate"][n])
            late_split = n < 2 or tables["degenerate"][n] == tables["late"][n].direct_sum(tables["quandle"][n - 1])
            rows.append(
                {
                    "degree": n,
                    **{part: str(tables[part][n]) for part in PARTS},
                    "rack_split": rack_split,
                    "late_split": late_split,
                }
            )
        payload = {
            "shelf": shelf.to_json(),
            "modulus": cfg.modulus,
            "parts": {part: [g.to_json() for g in groups] for part, groups in tables.items()},
            "rows": rows,
        }
        if not all(r["rack_split"] and r["late_split"] for r in rows):
            raise MathematicalFailure(payload)
        _emit(cfg, payload, [render_table(decomposition_frame(rows), title="decompose")])

    run(config, body)


@main.command()
@common_options
@click.option("--suite", type=click.Choice(SUITES + ["all"]), default="all", show_default=True)
def verify(suite: str, **kwargs):
    """Run identity suites up to max degree; exit 1 on the first failure."""
    config = RunConfig("verify", suite=suite, **kwargs)

    def body(cfg: RunConfig) -> None:
        shelf = cfg.load_shelf()
        shelf.require_shelf()
        coeff = cfg.coefficients(shelf)
        reports = run_suite(cfg.suite, shelf, cfg.max_degree, coeff)
        payload = {
            "shelf": shelf.to_json(),
            "coefficients": cfg.coeff,
            "modulus": cfg.modulus,
            "reports": [r.to_json() for r in reports],
        }
        failed = [r for r in reports if not r.passed]
        if failed:
            raise MathematicalFailure({**payload, "first_failure": failed[0].failure})
        _emit(cfg, payload, [render_table(suite_frame(reports), title="verify")])

    run(config, body)


if __name__ == "__main__":
    main()
