"""Scenario runner: validate a JSON scenario file, dispatch, emit a report.

Scenarios are single JSON objects with a `kind` selecting the analysis, a
kind-specific `payload`, and optional `seed` and `budget` fields.  Reports
go to standard output in canonical form, so identical input and seed yield
byte-identical output.  Exit codes: 0 for any completed analysis (negative
verdicts included), 2 for input or schema errors, 3 for budget errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .comparative import (
    find_comparative_sequence,
    is_equivalence,
    load_matcher_table,
    make_matcher,
)
from .errors import BudgetError, InputError, NoChainError, SoriticError
from .fuzzy import mismatch_report, negation
from .pretopology import (
    FrechetSpace,
    MinimalCover,
    VicinityChain,
    line_space,
    v_connected,
    validate_space,
)
from .probabilistic import (
    ZoraGrid,
    Distribution,
    Mixture,
    assess_supervenience,
    bernoulli_oracle,
    check_probabilistic_tolerance,
    discretize,
    estimate_p,
    load_observation_log,
    reduce_mixture,
    validate_zora,
    verify_reduction_by_simulation,
)
from .report import render_json, render_text
from .system import (
    ResponseSystem,
    ToleranceReport,
    assert_no_sorites,
    assert_tolerant_cover,
    check_tolerance,
    derive_soritical_contradiction,
)
from .threshold import (
    FiniteRuleDistribution,
    ReplayOracle,
    RuleOracle,
    ThresholdRule,
    UniformRuleDistribution,
    estimate_boundary,
    sample_rule,
)

DEFAULT_BUDGET = 2**20

KINDS = (
    "space-analysis",
    "boundary",
    "zora",
    "mixture",
    "fuzzy",
    "comparative",
    "rulemaking",
)


@lru_cache(maxsize=None)
def _schema(name: str) -> dict:
    path = resources.files("soritic") / "schemas" / f"{name}.json"
    return json.loads(path.read_text(encoding="utf-8"))


def load_scenario(path: Path) -> dict:
    """Read, parse, and schema-validate a scenario file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read scenario file: {e}") from None
    try:
        scenario = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"scenario is not valid JSON: {e}") from None
    try:
        jsonschema.validate(scenario, _schema("envelope"))
        jsonschema.validate(scenario["payload"], _schema(scenario["kind"]))
    except jsonschema.ValidationError as e:
        raise InputError(f"scenario fails schema validation: {e.message}") from None
    return scenario


def _is_stochastic(kind: str, payload: dict) -> bool:
    if kind == "rulemaking":
        return True
    if kind in ("zora", "mixture"):
        return "trials" in payload
    return False


def _cover_json(cover: MinimalCover) -> dict:
    return {str(p): i for p, i in cover.as_mapping().items()}


def _chain_json(chain: VicinityChain, space: FrechetSpace) -> dict:
    return {
        "x": chain.x,
        "y": chain.y,
        "owners": list(chain.owners),
        "vicinities": [list(space.sort_points(v)) for v in chain.vicinities],
        "links": list(chain.links),
    }


def _tolerance_json(report: ToleranceReport) -> dict:
    return {
        "holds": report.holds,
        "asserted": report.asserted,
        "constant_vicinities": {
            str(p): list(idx) for p, idx in report.constant_indices.items()
        },
        "failing_points": list(report.failing_points()),
        "tolerant_cover": (
            _cover_json(report.tolerant_cover) if report.tolerant_cover else None
        ),
    }


def _run_space_analysis(payload: dict, budget: int) -> dict:
    space = FrechetSpace(
        payload["points"],
        {p: sets for p, sets in payload["vicinities"].items()},
    )
    violations = validate_space(space)
    if violations:
        return {"space_violations": [str(v) for v in violations]}
    responses = payload.get("responses") or sorted(set(payload["pi"].values()))
    system = ResponseSystem(space, responses, payload["pi"])
    results: dict = {"space_violations": []}
    results["tolerance"] = _tolerance_json(check_tolerance(system))
    verdict = assert_no_sorites(system, budget)
    results["verdict"] = {
        "kind": verdict.kind,
        "tolerance_failures": list(verdict.tolerance_failures),
        "con_witness": list(verdict.con_witness) if verdict.con_witness else None,
    }
    if "connectivity" in payload:
        checks = []
        for x, y in payload["connectivity"]:
            v = v_connected(space, x, y, budget)
            checks.append(
                {
                    "pair": [x, y],
                    "connected": v.connected,
                    "witness_cover": _cover_json(v.witness_cover) if v.witness_cover else None,
                    "sample_chain": (
                        _chain_json(v.sample_chain, space) if v.sample_chain else None
                    ),
                }
            )
        results["connectivity"] = checks
    if ("force_cover" in payload) != ("contradiction_pair" in payload):
        raise InputError("force_cover and contradiction_pair must be given together")
    if "force_cover" in payload:
        force = payload["force_cover"]
        missing = [p for p in space.points if p not in force]
        if missing:
            raise InputError(f"force_cover omits point {missing[0]!r}")
        cover = MinimalCover(space, tuple(force[p] for p in space.points))
        claimed = assert_tolerant_cover(system, cover)
        x, y = payload["contradiction_pair"]
        try:
            chain = derive_soritical_contradiction(system, claimed, x, y, cap=budget)
            results["contradiction"] = {
                "points": list(chain.points),
                "responses": list(chain.responses),
                "violating_link": chain.violating_link,
                "violated_vicinity": {
                    "owner": chain.violated_vicinity_owner,
                    "members": list(space.sort_points(chain.violated_vicinity)),
                },
            }
        except NoChainError as e:
            results["contradiction"] = {
                "no_chain": True,
                "pair": [x, y],
                "globally_connected": e.globally_connected,
            }
    return results


def _run_boundary(payload: dict) -> dict:
    n = payload["n"]
    if "rule" in payload:
        rule = ThresholdRule(payload["rule"]["v"], payload["rule"]["boundary_response"])
        oracle = RuleOracle(rule)
    else:
        oracle = ReplayOracle([(x, r) for x, r in payload["probes"]])
    trace = estimate_boundary(oracle, n)
    results = {
        "q": list(trace.q),
        "estimate": trace.estimate,
        "oracle_calls": trace.oracle_calls,
        "bound": 2.0**-n,
    }
    if "rule" in payload:
        v = float(payload["rule"]["v"])
        error = abs(trace.estimate - v)
        results["true_boundary"] = v
        results["error"] = error
        results["within_bound"] = error <= results["bound"]
    return results


def _run_zora(payload: dict, seed: int | None, base_dir: Path) -> dict:
    zg = ZoraGrid(payload["grid"], payload["p"])
    results: dict = {
        "violations": [str(v) for v in validate_zora(zg)],
        "discretized": [[x, label] for x, label in discretize(zg)],
    }
    if len(zg.grid) > 1:
        tol = check_probabilistic_tolerance(zg, line_space(zg.grid))
        results["p_tolerance"] = {
            "holds": tol.holds,
            "failing_points": list(tol.failing_points()),
        }
    if "trials" in payload:
        source = bernoulli_oracle(zg, seed)
        est = estimate_p(source, float(payload["stimulus"]), payload["trials"])
        results["estimate"] = {
            "stimulus": float(payload["stimulus"]),
            "p_hat": est.p_hat,
            "interval": list(est.interval),
            "trials": est.trials,
        }
    if "observations" in payload:
        log = load_observation_log(base_dir / payload["observations"])
        verdicts = assess_supervenience(
            log, payload.get("determinism_threshold", 20)
        )
        results["supervenience"] = {
            stimulus: {
                "kind": v.kind,
                "count": v.count,
                "response": v.response,
                "estimates": (
                    None
                    if v.estimates is None
                    else {
                        label: {
                            "p_hat": e.p_hat,
                            "interval": list(e.interval),
                        }
                        for label, e in v.estimates.items()
                    }
                ),
            }
            for stimulus, v in verdicts.items()
        }
    return results


def _run_mixture(payload: dict, seed: int | None) -> dict:
    components = tuple(
        Distribution({k: float(w) for k, w in c.items()}) for c in payload["components"]
    )
    m = Mixture(components, tuple(float(w) for w in payload["mix_weights"]))
    reduced = reduce_mixture(m)
    results: dict = {"reduced": dict(reduced.weights)}
    if "trials" in payload:
        results["simulation"] = {
            "trials": payload["trials"],
            "max_deviation": verify_reduction_by_simulation(m, seed, payload["trials"]),
        }
    return results


def _run_fuzzy(payload: dict) -> dict:
    rows = []
    for p, q in payload["pairs"]:
        r = mismatch_report(float(p), float(q))
        rows.append(
            {
                "p": r.p,
                "q": r.q,
                "weak": r.weak,
                "strong": r.strong,
                "implication": r.implication_value,
                "negation_p": negation(r.p),
                "conjunction_diverges": r.conjunction_diverges,
                "implication_diverges": r.implication_diverges,
                "diverges": r.diverges,
            }
        )
    return {"pairs": rows}


def _run_comparative(payload: dict, base_dir: Path) -> dict:
    spec = payload["matcher"]
    if spec.get("kind") == "table" and "path" in spec:
        matcher = load_matcher_table(base_dir / spec["path"])
    else:
        matcher = make_matcher(spec)
    points = list(payload["points"])
    eq = is_equivalence(points, matcher)
    seq = find_comparative_sequence(points, matcher)
    return {
        "equivalence": {
            "holds": eq.holds,
            "violation": (
                None
                if eq.violation is None
                else {"kind": eq.violation.kind, "points": list(eq.violation.points)}
            ),
        },
        "sequence": None if seq is None else {"points": list(seq.points)},
    }


def _run_rulemaking(payload: dict, seed: int) -> dict:
    spec = payload["distribution"]
    if spec["kind"] == "uniform":
        dist = UniformRuleDistribution(spec.get("p_boundary_r1", 0.5))
    else:
        dist = FiniteRuleDistribution(
            tuple((a["v"], a["r"], a["weight"]) for a in spec["atoms"])
        )
    master = random.Random(seed)
    rules = [
        sample_rule(dist, master.randrange(2**63)) for _ in range(payload["count"])
    ]
    return {
        "rules": [
            {"v": r.v, "boundary_response": r.boundary_response} for r in rules
        ],
        "mean_v": sum(r.v for r in rules) / len(rules),
    }


def run_scenario(scenario: dict, base_dir: Path, budget: int, seed: int | None) -> dict:
    kind = scenario["kind"]
    payload = scenario["payload"]
    if _is_stochastic(kind, payload) and seed is None:
        raise InputError(f"scenario kind {kind!r} is stochastic and needs a seed")
    if kind == "space-analysis":
        results = _run_space_analysis(payload, budget)
    elif kind == "boundary":
        results = _run_boundary(payload)
    elif kind == "zora":
        results = _run_zora(payload, seed, base_dir)
    elif kind == "mixture":
        results = _run_mixture(payload, seed)
    elif kind == "fuzzy":
        results = _run_fuzzy(payload)
    elif kind == "comparative":
        results = _run_comparative(payload, base_dir)
    elif kind == "rulemaking":
        results = _run_rulemaking(payload, seed)
    else:
        raise InputError(f"unknown scenario kind {kind!r}")
    return {
        "schema_version": 1,
        "kind": kind,
        "seed": seed,
        "budget": budget,
        "input": payload,
        "results": results,
    }


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="soritic",
        description="Run a soritic analysis scenario and print a deterministic report.",
    )
    parser.add_argument("--scenario", required=True, help="path to a scenario JSON file")
    parser.add_argument("--seed", type=int, default=None, help="overrides the file's seed")
    parser.add_argument(
        "--budget", type=int, default=None, help="cover enumeration cap (default 2^20)"
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument(
        "--quiet", action="store_true", help="suppress the report, keep the exit code"
    )
    args = parser.parse_args(argv)

    path = Path(args.scenario)
    try:
        if args.seed is not None and not 0 <= args.seed < 2**64:
            raise InputError("seed must fit in an unsigned 64-bit integer")
        scenario = load_scenario(path)
        seed = args.seed if args.seed is not None else scenario.get("seed")
        budget = (
            args.budget
            if args.budget is not None
            else scenario.get("budget", DEFAULT_BUDGET)
        )
        if budget < 1:
            raise InputError("budget must be positive")
        report = run_scenario(scenario, path.parent, budget, seed)
    except BudgetError as e:
        print(f"soritic: budget error: {e}", file=sys.stderr)
        return 3
    except (InputError, SoriticError) as e:
        print(f"soritic: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"soritic: error: {e}", file=sys.stderr)
        return 2
    if not args.quiet:
        rendered = render_json(report) if args.format == "json" else render_text(report)
        sys.stdout.write(rendered)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
