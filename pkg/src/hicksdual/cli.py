# Description: Command-line interface for demand, structure checks and equilibrium solvers.
"""CLI entry point for hicksdual.

Notes:
- One command surface (`hicksdual ...` or `python -m hicksdual ...`) over economy documents.
- Commands stay thin: parse, call the library, render a report; no logic lives here.
- Exit codes: 0 computed (property holds, equilibrium found), 1 property fails or no
  equilibrium, 2 input error, 3 search exhausted without a verdict.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from typing import Callable, Sequence

from hicksdual import __version__
from hicksdual.core.config import SolverConfig, default_config, load_config
from hicksdual.core.errors import (
    HicksDualError,
    IsActuallySubstitutes,
    NotParetoEfficient,
    SubsetUnimodular,
)
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Quasilinear,
    Quasilog,
    UtilityLevel,
    Valuation,
)
from hicksdual.core.numbers import (
    format_bundle,
    format_rational,
    parse_bundle,
    parse_bundle_list,
    parse_price,
    parse_rational,
    zeros,
)
from hicksdual.demand.oracles import (
    expenditure,
    hicksian_demand,
    indirect_utility,
    marshallian_demand,
    quasilinear_demand,
)
from hicksdual.documents.codec import EconomyDocument, load_document, write_document
from hicksdual.documents.fixtures import write_fixtures
from hicksdual.equilibrium.counterexamples import (
    Counterexample,
    counterexample_substitutes,
    counterexample_unimodular,
)
from hicksdual.equilibrium.income import solve_income_ce, verify_ce
from hicksdual.equilibrium.outcomes import Found, NotFound
from hicksdual.equilibrium.pareto import is_pareto_efficient, support_pareto
from hicksdual.equilibrium.probe import duality_probe
from hicksdual.equilibrium.tu import solve_tu_ce
from hicksdual.hicksian.economy import build_hicksian_economy, tu_economy_from
from hicksdual.hicksian.valuations import hicksian_valuation
from hicksdual.reports.render import (
    Report,
    format_allocation,
    format_price,
    outcome_report,
    render,
)
from hicksdual.structure.concavity import is_concave, is_quasiconcave
from hicksdual.structure.demand_types import (
    demand_type_vector_set,
    is_of_demand_type,
    minimal_demand_type,
    uniquely_demanded,
)
from hicksdual.structure.substitutes import (
    gross_substitutes_violation,
    is_net_substitutes,
    is_strong_net_substitutes,
    money_grid,
    price_grid,
    substitutes_violation,
)
from hicksdual.structure.unimodular import (
    is_unimodular_by_lattice_points,
    lattice_point_witness,
    unimodularity_witness,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_INPUT = 2
EXIT_EXHAUSTED = 3

CHECKS = (
    "concave",
    "quasiconcave",
    "substitutes",
    "net-substitutes",
    "gross-substitutes",
    "strong-substitutes",
    "demand-type",
    "unimodular",
)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--config",
        default=None,
        help="Solver YAML config (default: built-in values, same as config/solver.yaml).",
    )
    common.add_argument("--max-iter", type=int, default=None, help="Income search iterations.")
    common.add_argument(
        "--epsilon", default=None, help='Bracket tolerance as a rational, e.g. "1/1024".'
    )
    common.add_argument("--seed", type=int, default=None, help="Seed for sampled endowments.")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Logging level for diagnostics on stderr (default: WARNING).",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="hicksdual",
        description=(
            "Demand, preference structure and competitive equilibrium for exchange economies "
            "with indivisible goods and income effects, in exact rational arithmetic."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=False)

    sub.add_parser("info", parents=[common], help="Show version and configured defaults.")

    demand = sub.add_parser("demand", parents=[common], help="Demand set of one agent.")
    demand.add_argument("kind", choices=("quasilinear", "marshallian", "hicksian"))
    demand.add_argument("document")
    demand.add_argument("--agent", required=True)
    demand.add_argument("--price", required=True, help='Prices, e.g. "3,2" or "1/2,1".')
    demand.add_argument("--money", default=None, help="Money endowment (marshallian).")
    demand.add_argument("--goods", default=None, help='Goods endowment, e.g. "0,1".')
    demand.add_argument("--level", default=None, help="Utility level (hicksian).")

    hv = sub.add_parser(
        "hicksian-valuation", parents=[common], help="Hicksian valuation at a level."
    )
    hv.add_argument("document")
    hv.add_argument("--agent", required=True)
    hv.add_argument("--level", required=True)

    check = sub.add_parser("check", parents=[common], help="Structural property checks.")
    check.add_argument("property", choices=CHECKS)
    check.add_argument("document", nargs="?", default=None)
    check.add_argument("--agent", default=None, help="Agent to check (default: all).")
    check.add_argument("--level", default=None, help="Level of the Hicksian valuation.")
    check.add_argument("--vectors", default=None, help='Vectors, e.g. "1,-1;1,1".')
    check.add_argument("--goods", default=None, help="Goods endowment (gross-substitutes).")

    solve = sub.add_parser("solve", parents=[common], help="Solve for competitive equilibrium.")
    solve.add_argument("mode", choices=("tu", "income"))
    solve.add_argument("document")
    solve.add_argument(
        "--levels", default=None, help='TU mode: Hicksian economy at levels "u1;u2;...".'
    )

    verify = sub.add_parser("verify-ce", parents=[common], help="Verify a candidate equilibrium.")
    verify.add_argument("document")
    verify.add_argument("--price", required=True)
    verify.add_argument("--alloc", required=True, help='Allocation, e.g. "1,0;0,1".')

    pareto = sub.add_parser(
        "pareto", parents=[common], help="Efficiency and support of the document's profile."
    )
    pareto.add_argument("action", choices=("check", "support"))
    pareto.add_argument("document")

    probe = sub.add_parser(
        "duality-probe", parents=[common], help="Hicksian vs Marshallian existence probe."
    )
    probe.add_argument("document")
    probe.add_argument("--levels-per-agent", type=int, default=None)
    probe.add_argument("--samples", type=int, default=None)

    cx = sub.add_parser(
        "counterexample", parents=[common], help="Build an economy without equilibrium."
    )
    cx.add_argument("kind", choices=("substitutes", "unimodular"))
    cx.add_argument("document", nargs="?", default=None)
    cx.add_argument("--agent", default=None)
    cx.add_argument("--level", default=None)
    cx.add_argument("--vectors", default=None)
    cx.add_argument("--out", default=None, help="Write the constructed economy here.")

    fixtures = sub.add_parser("fixtures", parents=[common], help="Write the example documents.")
    fixtures.add_argument("--outdir", default="fixtures")
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _config(args: argparse.Namespace) -> SolverConfig:
    cfg = load_config(args.config) if args.config else default_config()
    epsilon = parse_rational(args.epsilon) if args.epsilon else None
    return cfg.with_overrides(max_iter=args.max_iter, epsilon=epsilon, seed=args.seed)


def _emit(report: Report, args: argparse.Namespace) -> None:
    sys.stdout.write(render(report, args.format))


def _agents(doc: EconomyDocument, name: str | None) -> list[tuple[int, Agent]]:
    e = doc.economy
    if name is None:
        return list(enumerate(e.agents))
    j = e.agent_index(name)
    return [(j, e.agents[j])]


def _default_level(agent: Agent) -> UtilityLevel:
    return parse_rational("1") if isinstance(agent.utility, Quasilog) else parse_rational("0")


def _valuation(agent: Agent, level: str | None) -> Valuation:
    """The valuation structural checks look at: the agent's own valuation (quasilinear),
    its quasivaluation (quasilog) or its first grid valuation, unless a level is given."""
    if level is not None:
        return hicksian_valuation(agent, parse_rational(level))
    model = agent.utility
    if isinstance(model, Quasilinear):
        return model.valuation
    if isinstance(model, Quasilog):
        return model.quasivaluation
    return model.valuations[0]


def _endowment_of(doc: EconomyDocument, j: int) -> ConsumptionBundle | None:
    return None if doc.endowment is None else doc.endowment[j]


def cmd_info(args: argparse.Namespace) -> int:
    cfg = _config(args)
    report = Report("hicksdual")
    report.fields.update(
        {
            "version": __version__,
            "python": sys.version.split()[0],
            "income_search.max_iter": cfg.income_search.max_iter,
            "income_search.epsilon": cfg.income_search.epsilon,
            "income_search.exhaustive_fallback": cfg.income_search.exhaustive_fallback,
            "enumeration.max_allocations": cfg.enumeration.max_allocations,
            "probe.levels_per_agent": cfg.probe.levels_per_agent,
            "probe.endowment_samples": cfg.probe.endowment_samples,
            "probe.seed": cfg.probe.seed,
            "gross.money_levels": cfg.gross.money_levels,
            "gross.price_step": cfg.gross.price_step,
            "gross.deltas": list(cfg.gross.deltas),
        }
    )
    _emit(report, args)
    return EXIT_OK


def cmd_demand(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    [(j, agent)] = _agents(doc, args.agent)
    p = parse_price(args.price)
    report = Report(f"{args.kind} demand of {agent.name}")
    report.fields["price"] = format_price(p)
    if args.kind == "quasilinear":
        demand = quasilinear_demand(_valuation(agent, args.level), p)
    elif args.kind == "hicksian":
        u = parse_rational(args.level) if args.level else _default_level(agent)
        demand = hicksian_demand(agent, p, u)
        report.fields["level"] = u
        report.fields["expenditure"] = expenditure(agent, p, u)
    else:
        endow = _endowment_of(doc, j)
        money = parse_rational(args.money) if args.money else (endow.money if endow else None)
        goods = parse_bundle(args.goods) if args.goods else (endow.goods if endow else None)
        if money is None or goods is None:
            raise HicksDualError("marshallian demand needs --money and --goods or an endowment")
        c = ConsumptionBundle(money, goods)
        demand = marshallian_demand(agent, p, c)
        report.fields["endowment"] = f"{format_rational(c.money)}|{format_bundle(c.goods)}"
        report.fields["indirect_utility"] = indirect_utility(agent, p, c)
    report.fields["demand"] = sorted(format_bundle(x) for x in demand)
    _emit(report, args)
    return EXIT_OK


def cmd_hicksian_valuation(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    [(_, agent)] = _agents(doc, args.agent)
    u = parse_rational(args.level)
    v = hicksian_valuation(agent, u)
    report = Report(f"Hicksian valuation of {agent.name}")
    report.fields["level"] = u
    report.records["values"] = [
        {"bundle": format_bundle(x), "value": format_rational(q)} for x, q in v.values.items()
    ]
    _emit(report, args)
    return EXIT_OK


def _vectors(args: argparse.Namespace, doc: EconomyDocument | None) -> list[tuple[int, ...]]:
    if args.vectors:
        return parse_bundle_list(args.vectors)
    if doc is not None and doc.demand_type is not None:
        return list(doc.demand_type)
    raise HicksDualError("give --vectors or a document with a demand_type")


def _check_unimodular(args: argparse.Namespace, doc: EconomyDocument | None) -> int:
    D = demand_type_vector_set(_vectors(args, doc))
    witness = unimodularity_witness(D)
    report = Report("unimodularity")
    report.fields["vectors"] = [format_bundle(d) for d in D.representatives()]
    report.fields["unimodular"] = witness is None
    report.fields["lattice_oracle_agrees"] = is_unimodular_by_lattice_points(D) == (
        witness is None
    )
    if witness is not None:
        report.fields["subset"] = [format_bundle(d) for d in witness.subset]
        report.fields["minor_gcd"] = witness.minor_gcd
    _emit(report, args)
    return EXIT_OK if witness is None else EXIT_FAILS


def _check_agent(
    prop: str, agent: Agent, j: int, doc: EconomyDocument, args: argparse.Namespace
) -> dict[str, object]:
    row: dict[str, object] = {"agent": agent.name}
    if prop == "concave":
        row["holds"] = is_concave(_valuation(agent, args.level))
    elif prop == "quasiconcave":
        row["holds"] = is_quasiconcave(agent)
    elif prop == "substitutes":
        region = substitutes_violation(_valuation(agent, args.level))
        row["holds"] = region is None
        if region is not None:
            row["witness"] = (
                f"{format_bundle(region.lower)} vs {format_bundle(region.upper)} "
                f"at {format_price(region.price)}"
            )
    elif prop == "net-substitutes":
        row["holds"] = is_net_substitutes(agent)
    elif prop == "strong-substitutes":
        row["holds"] = is_strong_net_substitutes(agent)
    elif prop == "gross-substitutes":
        cfg = _config(args).gross
        endow = _endowment_of(doc, j)
        if args.goods:
            goods = parse_bundle(args.goods)
        else:
            goods = endow.goods if endow else zeros(agent.dimension)
        violation = gross_substitutes_violation(
            agent,
            goods,
            money_grid(agent, cfg.money_levels),
            price_grid(agent.dimension, cfg.price_step),
            cfg.deltas,
        )
        row["holds"] = violation is None
        if violation is not None:
            case = violation.case
            row["witness"] = (
                f"money {format_rational(case.money)}, price {format_price(case.price)}, "
                f"good {case.good + 1} up by {format_rational(case.delta)}: "
                f"{format_bundle(violation.before)} -> {format_bundle(violation.after)}"
            )
    elif prop == "demand-type":
        v = _valuation(agent, args.level)
        D = minimal_demand_type(v)
        row["vectors"] = [format_bundle(d) for d in D.representatives()]
        row["uniquely_demanded"] = sorted(format_bundle(x) for x in uniquely_demanded(v))
        if args.vectors or doc.demand_type is not None:
            row["holds"] = is_of_demand_type(v, demand_type_vector_set(_vectors(args, doc)))
        else:
            row["holds"] = True
    return row


def cmd_check(args: argparse.Namespace) -> int:
    doc = load_document(args.document) if args.document else None
    if args.property == "unimodular":
        return _check_unimodular(args, doc)
    if doc is None:
        raise HicksDualError(f"check {args.property} needs an economy document")
    rows = [_check_agent(args.property, a, j, doc, args) for j, a in _agents(doc, args.agent)]
    holds = all(bool(r["holds"]) for r in rows)
    report = Report(f"check {args.property}")
    report.fields["holds"] = holds
    report.records["agents"] = rows
    _emit(report, args)
    return EXIT_OK if holds else EXIT_FAILS


def _outcome_exit(outcome: Found | NotFound) -> int:
    if isinstance(outcome, Found):
        return EXIT_OK
    return EXIT_FAILS if outcome.is_proof else EXIT_EXHAUSTED


def cmd_solve(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    cfg = _config(args)
    cap = cfg.enumeration.max_allocations
    if args.mode == "tu":
        if args.levels:
            levels = [parse_rational(u) for u in args.levels.split(";")]
            h = build_hicksian_economy(doc.economy, levels)
        else:
            h = tu_economy_from(doc.economy)
        outcome = solve_tu_ce(h, cap)
        title = "TU equilibrium"
    else:
        if doc.endowment is None:
            raise HicksDualError("solve income needs endowments in the document")
        outcome = solve_income_ce(doc.economy, doc.endowment, cfg.income_search, cap)
        title = "equilibrium with income effects"
    report = outcome_report(title, outcome)
    if isinstance(outcome, Found) and args.mode == "income" and doc.endowment is not None:
        report.fields["verified"] = verify_ce(
            doc.economy, doc.endowment, outcome.price, outcome.allocation
        )
    _emit(report, args)
    return _outcome_exit(outcome)


def cmd_verify_ce(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    if doc.endowment is None:
        raise HicksDualError("verify-ce needs endowments in the document")
    p = parse_price(args.price)
    alloc = tuple(parse_bundle_list(args.alloc))
    ok = verify_ce(doc.economy, doc.endowment, p, alloc)
    report = Report("equilibrium check")
    report.fields.update(
        {"price": format_price(p), "allocation": format_allocation(alloc), "equilibrium": ok}
    )
    _emit(report, args)
    return EXIT_OK if ok else EXIT_FAILS


def cmd_pareto(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    if doc.endowment is None:
        raise HicksDualError("pareto needs a consumption profile (agent endowments)")
    cap = _config(args).enumeration.max_allocations
    report = Report(f"pareto {args.action}")
    if args.action == "check":
        ok = is_pareto_efficient(doc.economy, doc.endowment, cap)
        report.fields["efficient"] = ok
        _emit(report, args)
        return EXIT_OK if ok else EXIT_FAILS
    try:
        p = support_pareto(doc.economy, doc.endowment, cap)
    except NotParetoEfficient as exc:
        report.fields.update({"efficient": False, "details": str(exc)})
        _emit(report, args)
        return EXIT_FAILS
    report.fields["efficient"] = True
    report.fields["supported"] = p is not None
    if p is not None:
        report.fields["price"] = format_price(p)
    _emit(report, args)
    return EXIT_OK if p is not None else EXIT_FAILS


def cmd_duality_probe(args: argparse.Namespace) -> int:
    doc = load_document(args.document)
    cfg = _config(args)
    probe_cfg = cfg.probe
    if args.levels_per_agent is not None or args.samples is not None:
        probe_cfg = replace(
            probe_cfg,
            levels_per_agent=args.levels_per_agent or probe_cfg.levels_per_agent,
            endowment_samples=(
                probe_cfg.endowment_samples if args.samples is None else args.samples
            ),
        )
    result = duality_probe(
        doc.economy,
        probe_cfg,
        cfg.income_search,
        max_allocations=cfg.enumeration.max_allocations,
    )
    report = Report("duality probe")
    report.fields.update(result.summary())
    report.tables["hicksian"] = result.hicksian
    report.tables["marshallian"] = result.marshallian
    _emit(report, args)
    return EXIT_OK if result.consistent else EXIT_FAILS


def _counterexample_report(cx: Counterexample) -> Report:
    report = outcome_report("counterexample", cx.outcome)
    report.fields["construction_price"] = format_price(cx.price)
    report.fields["total_endowment"] = format_bundle(cx.economy.total_endowment)
    report.records["agents"] = [
        {
            "agent": a.name,
            "bundles": [format_bundle(x) for x in a.feasible_set],
            "endowment": format_bundle(c.goods),
        }
        for a, c in zip(cx.economy.agents, cx.endowment.endowments)
    ]
    return report


def cmd_counterexample(args: argparse.Namespace) -> int:
    try:
        if args.kind == "substitutes":
            if not args.document:
                raise HicksDualError("counterexample substitutes needs an economy document")
            doc = load_document(args.document)
            if args.agent is None:
                raise HicksDualError("counterexample substitutes needs --agent")
            [(_, agent)] = _agents(doc, args.agent)
            cx = counterexample_substitutes(_valuation(agent, args.level))
        else:
            doc = load_document(args.document) if args.document else None
            D = demand_type_vector_set(_vectors(args, doc))
            found = lattice_point_witness(D)
            if found is None:
                raise SubsetUnimodular("the vector set is unimodular")
            subset, z = found
            cx = counterexample_unimodular(subset, z)
    except (IsActuallySubstitutes, SubsetUnimodular) as exc:
        report = Report(f"counterexample {args.kind}")
        report.fields.update({"constructed": False, "details": str(exc)})
        _emit(report, args)
        return EXIT_FAILS
    report = _counterexample_report(cx)
    report.fields["constructed"] = True
    if args.out:
        path = write_document(EconomyDocument(cx.economy, cx.endowment), args.out)
        report.fields["written"] = str(path)
    _emit(report, args)
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    paths = write_fixtures(args.outdir)
    report = Report("fixtures")
    report.fields["written"] = [str(p) for p in paths]
    _emit(report, args)
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "info": cmd_info,
    "demand": cmd_demand,
    "hicksian-valuation": cmd_hicksian_valuation,
    "check": cmd_check,
    "solve": cmd_solve,
    "verify-ce": cmd_verify_ce,
    "pareto": cmd_pareto,
    "duality-probe": cmd_duality_probe,
    "counterexample": cmd_counterexample,
    "fixtures": cmd_fixtures,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_OK
    _configure_logging(args.log_level)
    logger.debug("running %s", args.command)
    try:
        return COMMANDS[args.command](args)
    except (
        HicksDualError,
        KeyError,
        TypeError,
        ValueError,
        FileNotFoundError,
    ) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
