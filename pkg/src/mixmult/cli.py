"""Scenario-driven command line front end.

Scenario files are single JSON documents:

    {
      "dim": 2,
      "horizon": 6,                      // optional; filtration validation depth
      "ideals":      {name: {"gens": [[2,0],[0,1]]}, ...},
      "filtrations": {name: {"kind": "powers", "base": "I"}
                          | {"kind": "scaled_powers", "base": "I",
                             "num": 1, "den": 2}
                          | {"kind": "weighted", "weights": ["1","2"]}
                          | {"kind": "subpolynomial_sqrt", "base": "I"}
                          | {"kind": "truncation", "parent": "F", "a": 2}, ...},
      "tasks": [{"op": "colength", "ideal": "I"},
                {"op": "mult", "ideal": "I"},
                {"op": "mixed", "ideals": ["I","J"], "verify": true,
                 "paranoid": false, "grid": [[1,2,3],[1,2,3]]},   // grid optional
                {"op": "verify", "ideals": ["I","J"]},
                {"op": "filtration-mixed", "filtrations": ["F"], "level": 2},
                {"op": "sweep", "filtrations": ["F"], "schedule": [1,2,4]},
                {"op": "zero-check", "filtrations": ["F","G"], "j": "F",
                 "schedule": [1,4,9,16], "tol": "1/3"},
                {"op": "suite", "dim": 2, "r": 2, "count": 25,
                 "max_exponent": 4, "seed": 7}]
    }

Reports are single JSON documents too: version, scenario hash, the echoed
scenario, and one result per task.  Every rational is serialized in
lowest terms as "p/q" (or "n" when the denominator is 1); tables are
keyed by composition strings like "2,0".  Reports are byte-identical
across runs and across --jobs settings; per-task wall times are included
only with --timings since they would break that.

Exit codes: 0 success; 1 verification failure; 2 input error;
3 stabilization or rescale-search failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from . import filtrations as flt
from .errors import (
    MixmultError,
    MonotonicityError,
    NotMPrimaryError,
    RescaleSearchError,
    ScenarioError,
    StabilizationError,
    ToleranceNotMetError,
)
from .ideals import MonomialIdeal, colength, minimalize
from .multiplicity import MixedTable, mixed_table, mixed_table_oracle, multiplicity
from .verify import (
    SuiteConfig,
    minkowski_report,
    suite,
    zero_propagation_check,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_STABILIZATION = 3

DEFAULT_HORIZON = 6

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

TASK_OPS = (
    "colength",
    "mult",
    "mixed",
    "filtration-mixed",
    "sweep",
    "verify",
    "zero-check",
    "suite",
)


@dataclass
class Task:
    op: str
    args: dict


@dataclass
class Scenario:
    dim: int
    ideals: dict
    filtrations: dict
    tasks: list
    horizon: int

    def echo(self) -> dict:
        """Canonical JSON form; re-parsing it yields an equal scenario."""
        out = {"dim": self.dim, "horizon": self.horizon}
        out["ideals"] = {
            name: {"gens": [list(g) for g in ideal.gens]}
            for name, ideal in self.ideals.items()
        }
        out["filtrations"] = {
            name: _filtration_echo(f) for name, f in self.filtrations.items()
        }
        out["tasks"] = [dict({"op": task.op}, **task.args) for task in self.tasks]
        return out


def _filtration_echo(f):
    if isinstance(f, flt.PowersFiltration):
        return {"kind": "powers", "base": f._base_name}
    if isinstance(f, flt.ScaledPowersFiltration):
        return {
            "kind": "scaled_powers",
            "base": f._base_name,
            "num": f.num,
            "den": f.den,
        }
    if isinstance(f, flt.WeightedFiltration):
        return {"kind": "weighted", "weights": [str(w) for w in f.weights]}
    if isinstance(f, flt.SqrtPowersFiltration):
        return {"kind": "subpolynomial_sqrt", "base": f._base_name}
    if isinstance(f, flt.TruncatedFiltration):
        return {"kind": "truncation", "parent": f._parent_name, "a": f.level}
    raise ScenarioError(f"unknown filtration class {type(f).__name__}")


def _fraction(value, where: str) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise ScenarioError(f'{where}: expected a rational like "p/q", got {value!r}')


def _rat_str(value) -> str:
    return str(Fraction(value))


def _no_dupes_hook(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ScenarioError(f"duplicate key {key!r} in scenario")
        seen.add(key)
    return dict(pairs)


def _expect(cond, message):
    if not cond:
        raise ScenarioError(message)


def parse_scenario_data(data) -> Scenario:
    _expect(isinstance(data, dict), "scenario must be a JSON object")
    unknown = set(data) - {"dim", "horizon", "ideals", "filtrations", "tasks"}
    _expect(not unknown, f"unknown scenario keys: {sorted(unknown)}")
    dim = data.get("dim")
    _expect(isinstance(dim, int) and dim >= 1, "dim must be a natural number >= 1")
    horizon = data.get("horizon", DEFAULT_HORIZON)
    _expect(
        isinstance(horizon, int) and horizon >= 2, "horizon must be an integer >= 2"
    )

    ideals = {}
    for name, spec in (data.get("ideals") or {}).items():
        _expect(isinstance(spec, dict) and set(spec) == {"gens"},
                f'ideal {name!r} must be an object with a single "gens" key')
        gens = spec["gens"]
        _expect(isinstance(gens, list) and gens, f"ideal {name!r}: gens must be a nonempty list")
        for g in gens:
            _expect(
                isinstance(g, list)
                and len(g) == dim
                and all(isinstance(c, int) and c >= 0 for c in g),
                f"ideal {name!r}: generator {g} is not a length-{dim} natural vector",
            )
        try:
            ideals[name] = minimalize([tuple(g) for g in gens], dim)
        except ValueError as exc:
            raise ScenarioError(f"ideal {name!r}: {exc}") from exc

    filtrations = {}
    pending = dict(data.get("filtrations") or {})
    for name, spec in pending.items():
        _expect(isinstance(spec, dict) and "kind" in spec,
                f'filtration {name!r} must be an object with a "kind"')

    def build(name, stack=()):
        if name in filtrations:
            return filtrations[name]
        _expect(name in pending, f"unknown filtration {name!r}")
        _expect(name not in stack, f"filtration {name!r} references itself")
        spec = pending[name]
        kind = spec["kind"]

        def base_of(key="base"):
            base_name = spec.get(key)
            _expect(isinstance(base_name, str) and base_name in ideals,
                    f"filtration {name!r}: {key} must name a declared ideal")
            base = ideals[base_name]
            if not base.is_m_primary:
                raise ScenarioError(
                    f"filtration {name!r}: base ideal {base_name!r} is not m-primary"
                )
            return base, base_name

        if kind == "powers":
            _expect(set(spec) == {"kind", "base"}, f"filtration {name!r}: bad keys")
            base, base_name = base_of()
            built = flt.powers(base)
        elif kind == "scaled_powers":
            _expect(set(spec) == {"kind", "base", "num", "den"},
                    f"filtration {name!r}: bad keys")
            base, base_name = base_of()
            num, den = spec["num"], spec["den"]
            _expect(isinstance(num, int) and isinstance(den, int) and num >= 1 and den >= 1,
                    f"filtration {name!r}: num/den must be naturals >= 1")
            built = flt.scaled_powers(base, num, den)
        elif kind == "weighted":
            _expect(set(spec) == {"kind", "weights"}, f"filtration {name!r}: bad keys")
            weights = spec["weights"]
            _expect(isinstance(weights, list) and len(weights) == dim,
                    f"filtration {name!r}: weights must be a length-{dim} list")
            ws = [_fraction(w, f"filtration {name!r} weight") for w in weights]
            _expect(all(w > 0 for w in ws), f"filtration {name!r}: weights must be positive")
            built = flt.weighted(ws)
            base_name = None
        elif kind == "subpolynomial_sqrt":
            _expect(set(spec) == {"kind", "base"}, f"filtration {name!r}: bad keys")
            base, base_name = base_of()
            built = flt.subpolynomial_sqrt(base)
        elif kind == "truncation":
            _expect(set(spec) == {"kind", "parent", "a"},
                    f"filtration {name!r}: bad keys")
            a = spec["a"]
            _expect(isinstance(a, int) and a >= 1,
                    f"filtration {name!r}: truncation level must be >= 1")
            parent_name = spec.get("parent")
            _expect(isinstance(parent_name, str),
                    f"filtration {name!r}: parent must be a filtration name")
            parent = build(parent_name, stack + (name,))
            built = flt.truncate(parent, a)
            built._parent_name = parent_name
            filtrations[name] = built
            return built
        else:
            raise ScenarioError(f"filtration {name!r}: unknown kind {kind!r}")
        built._base_name = base_name
        filtrations[name] = built
        return built

    for name in pending:
        build(name)

    tasks = []
    raw_tasks = data.get("tasks", [])
    _expect(isinstance(raw_tasks, list), "tasks must be a list")
    for pos, raw in enumerate(raw_tasks):
        _expect(isinstance(raw, dict) and "op" in raw, f"task {pos}: missing op")
        op = raw["op"]
        _expect(op in TASK_OPS, f"task {pos}: unknown op {op!r}")
        args = {k: v for k, v in raw.items() if k != "op"}
        tasks.append(_validate_task(pos, op, args, dim, ideals, filtrations))

    scenario = Scenario(dim, ideals, filtrations, tasks, horizon)
    _validate_filtration_laws(scenario)
    return scenario


def _validate_task(pos, op, args, dim, ideals, filtrations) -> Task:
    where = f"task {pos} ({op})"

    def ideal_named(name):
        _expect(isinstance(name, str) and name in ideals,
                f"{where}: {name!r} is not a declared ideal")
        return ideals[name]

    def filtration_named(name):
        _expect(isinstance(name, str) and name in filtrations,
                f"{where}: {name!r} is not a declared filtration")
        return filtrations[name]

    def expect_keys(required, optional=()):
        _expect(set(required) <= set(args) <= set(required) | set(optional),
                f"{where}: needs keys {sorted(required)} (optional {sorted(optional)})")

    if op in ("colength", "mult"):
        expect_keys({"ideal"})
        ideal = ideal_named(args["ideal"])
        if not ideal.is_m_primary:
            raise ScenarioError(f"{where}: ideal {args['ideal']!r} is not m-primary")
    elif op in ("mixed", "verify"):
        expect_keys({"ideals"}, {"verify", "paranoid", "grid"} if op == "mixed" else ())
        names = args["ideals"]
        _expect(isinstance(names, list) and names, f"{where}: ideals must be a nonempty list")
        for name in names:
            ideal = ideal_named(name)
            if ideal.is_unit or not ideal.is_m_primary:
                raise ScenarioError(
                    f"{where}: ideal {name!r} must be m-primary and not the unit ideal"
                )
        if "grid" in args:
            grid = args["grid"]
            _expect(
                isinstance(grid, list)
                and len(grid) == len(names)
                and all(
                    isinstance(axis, list)
                    and len(axis) == dim + 1
                    and len(set(axis)) == dim + 1
                    and all(isinstance(x, int) and x >= 1 for x in axis)
                    for axis in grid
                ),
                f"{where}: grid needs {len(names)} axes of {dim + 1} distinct integers >= 1",
            )
        for flag in ("verify", "paranoid"):
            if flag in args:
                _expect(isinstance(args[flag], bool), f"{where}: {flag} must be a boolean")
    elif op == "filtration-mixed":
        expect_keys({"filtrations", "level"}, {"paranoid"})
        _expect(isinstance(args["level"], int) and args["level"] >= 1,
                f"{where}: level must be >= 1")
        names = args["filtrations"]
        _expect(isinstance(names, list) and names,
                f"{where}: filtrations must be a nonempty list")
        for name in names:
            filtration_named(name)
    elif op == "sweep":
        expect_keys({"filtrations", "schedule"}, {"paranoid"})
        names = args["filtrations"]
        _expect(isinstance(names, list) and names,
                f"{where}: filtrations must be a nonempty list")
        for name in names:
            filtration_named(name)
        _expect(_is_schedule(args["schedule"]), f"{where}: schedule must be strictly increasing naturals")
    elif op == "zero-check":
        expect_keys({"filtrations", "j", "schedule", "tol"})
        names = args["filtrations"]
        _expect(isinstance(names, list) and names,
                f"{where}: filtrations must be a nonempty list")
        for name in names:
            filtration_named(name)
        j = args["j"]
        if isinstance(j, str):
            _expect(j in names, f"{where}: j must be one of the task filtrations")
        else:
            _expect(isinstance(j, int) and 0 <= j < len(names),
                    f"{where}: j must be a name or an index below {len(names)}")
        _expect(_is_schedule(args["schedule"]), f"{where}: schedule must be strictly increasing naturals")
        tol = _fraction(args["tol"], where)
        _expect(tol > 0, f"{where}: tol must be positive")
    elif op == "suite":
        expect_keys({"dim", "r", "count", "max_exponent", "seed"}, {"paranoid"})
        try:
            SuiteConfig(
                dim=args["dim"],
                r=args["r"],
                count=args["count"],
                max_exponent=args["max_exponent"],
                seed=args["seed"],
            )
        except (ValueError, TypeError) as exc:
            raise ScenarioError(f"{where}: {exc}") from exc
    return Task(op, args)


def _is_schedule(value) -> bool:
    return (
        isinstance(value, list)
        and value
        and all(isinstance(a, int) and a >= 1 for a in value)
        and all(b > a for a, b in zip(value, value[1:]))
    )


def _validate_filtration_laws(scenario: Scenario):
    for name, f in scenario.filtrations.items():
        try:
            flt.check_graded_family(f, scenario.horizon)
        except (ValueError, NotMPrimaryError) as exc:
            raise ScenarioError(f"filtration {name!r}: {exc}") from exc


def parse_scenario(path: str) -> Scenario:
    """Load and fully validate a scenario file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle, object_pairs_hook=_no_dupes_hook)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario {path!r} is not valid JSON: {exc}") from exc
    return parse_scenario_data(data)


# ---------------------------------------------------------------------------
# task execution


def _table_json(table: MixedTable) -> dict:
    return {
        ",".join(str(c) for c in key): _rat_str(value)
        for key, value in sorted(table.entries.items(), reverse=True)
    }


def _verify_json(table: MixedTable) -> list:
    return [
        {
            "composition": ",".join(str(c) for c in rep.composition),
            "lhs": _rat_str(rep.lhs),
            "rhs": _rat_str(rep.rhs),
            "holds": rep.holds,
            "equality": rep.equality,
        }
        for rep in minkowski_report(table)
    ]


def _run_task(scenario: Scenario, task: Task, paranoid: bool, jobs: int):
    """Returns (values, verify_blocks, verification_ok)."""
    args = task.args
    op = task.op
    force_paranoid = paranoid or args.get("paranoid", False)

    if op == "colength":
        return {"colength": colength(scenario.ideals[args["ideal"]])}, None, True

    if op == "mult":
        return {"multiplicity": multiplicity(scenario.ideals[args["ideal"]])}, None, True

    if op in ("mixed", "verify"):
        ideals = [scenario.ideals[name] for name in args["ideals"]]
        grid = args.get("grid")
        table = mixed_table(ideals, grid_axes=grid)
        if force_paranoid:
            oracle = mixed_table_oracle(ideals)
            if table != oracle:
                raise StabilizationError(
                    "grid and difference paths disagree; stabilization bug"
                )
        values = {"table": _table_json(table)}
        verify_blocks = None
        ok = True
        if op == "verify" or args.get("verify", False):
            verify_blocks = _verify_json(table)
            ok = all(block["holds"] for block in verify_blocks)
        return values, verify_blocks, ok

    if op == "filtration-mixed":
        fs = [scenario.filtrations[name] for name in args["filtrations"]]
        table = flt.filtration_mixed(fs, args["level"], paranoid=force_paranoid)
        verify_blocks = _verify_json(table)
        ok = all(block["holds"] for block in verify_blocks)
        return {"level": args["level"], "table": _table_json(table)}, verify_blocks, ok

    if op == "sweep":
        fs = [scenario.filtrations[name] for name in args["filtrations"]]
        schedule = args["schedule"]
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                tables = list(
                    pool.map(
                        lambda a: flt.filtration_mixed(fs, a, paranoid=force_paranoid),
                        schedule,
                    )
                )
            levels = list(zip(schedule, tables))
            deltas = [
                {k: cur.entries[k] - prev.entries[k] for k in prev.entries}
                for (_, prev), (_, cur) in zip(levels, levels[1:])
            ]
        else:
            result = flt.convergence_sweep(fs, schedule, paranoid=force_paranoid)
            levels = list(result.levels)
            deltas = list(result.deltas)
        values = {
            "levels": [
                {"a": a, "table": _table_json(table)} for a, table in levels
            ],
            "deltas": [
                {
                    ",".join(str(c) for c in key): _rat_str(value)
                    for key, value in sorted(delta.items(), reverse=True)
                }
                for delta in deltas
            ],
        }
        verify_blocks = [block for _, table in levels for block in _verify_json(table)]
        ok = all(block["holds"] for block in verify_blocks)
        return values, verify_blocks, ok

    if op == "zero-check":
        names = args["filtrations"]
        fs = [scenario.filtrations[name] for name in names]
        j = args["j"]
        if isinstance(j, str):
            j = names.index(j)
        report = zero_propagation_check(fs, j, args["schedule"], Fraction(args["tol"]))
        values = {
            "j": j,
            "tol": _rat_str(report.tol),
            "schedule": list(report.schedule),
            "tracked": {
                ",".join(str(c) for c in key): [_rat_str(v) for v in vals]
                for key, vals in sorted(report.values.items(), reverse=True)
            },
            "minkowski_holds": report.minkowski_holds,
            "note": report.note,
        }
        return values, None, True

    if op == "suite":
        cfg = SuiteConfig(
            dim=args["dim"],
            r=args["r"],
            count=args["count"],
            max_exponent=args["max_exponent"],
            seed=args["seed"],
        )
        report = suite(cfg, paranoid=force_paranoid, jobs=jobs)
        values = {
            "config": {
                "dim": cfg.dim,
                "r": cfg.r,
                "count": cfg.count,
                "max_exponent": cfg.max_exponent,
                "seed": cfg.seed,
            },
            "passed": report.passed,
            "equality_count": report.equality_count,
            "instances": [
                {
                    "index": inst.index,
                    "ideals": [[list(g) for g in ideal.gens] for ideal in inst.ideals],
                    "table": _table_json(inst.table),
                    "holds": inst.holds,
                    "equality": inst.equality,
                }
                for inst in report.instances
            ],
        }
        return values, None, report.passed

    raise ScenarioError(f"unknown op {op!r}")  # pragma: no cover


def _classify(exc: Exception) -> int:
    if isinstance(exc, (StabilizationError, RescaleSearchError)):
        return EXIT_STABILIZATION
    if isinstance(exc, (MonotonicityError, ToleranceNotMetError)):
        return EXIT_VERIFICATION
    if isinstance(exc, ScenarioError):
        return EXIT_INPUT
    if isinstance(exc, (NotMPrimaryError, ValueError)):
        return EXIT_INPUT
    return EXIT_VERIFICATION


def canonical_json_bytes(document) -> bytes:
    return (
        json.dumps(document, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
    ).encode("ascii")


def scenario_hash(scenario: Scenario) -> str:
    return hashlib.sha256(canonical_json_bytes(scenario.echo())).hexdigest()


def run(scenario: Scenario, paranoid: bool = False, jobs: int = 1,
        timings: bool = False):
    """Execute all tasks in order; returns (report_document, exit_code).

    The first failing task fixes the exit code, but independent later
    tasks still run and report.
    """
    results = []
    exit_code = EXIT_OK
    for pos, task in enumerate(scenario.tasks):
        entry = {"op": task.op, "inputs": task.args}
        started = time.perf_counter()
        try:
            values, verify_blocks, ok = _run_task(scenario, task, paranoid, jobs)
            entry["status"] = "ok" if ok else "verification-failed"
            entry["values"] = values
            if verify_blocks is not None:
                entry["verify"] = verify_blocks
            if not ok and exit_code == EXIT_OK:
                exit_code = EXIT_VERIFICATION
        except MixmultError as exc:
            entry["status"] = "error"
            entry["error"] = {"type": type(exc).__name__, "message": str(exc)}
            if exit_code == EXIT_OK:
                exit_code = _classify(exc)
        if timings:
            entry["wall_time_ms"] = round((time.perf_counter() - started) * 1000, 3)
        results.append(entry)
    document = {
        "version": __version__,
        "scenario_hash": scenario_hash(scenario),
        "scenario": scenario.echo(),
        "results": results,
    }
    return document, exit_code


# ---------------------------------------------------------------------------
# entry points


def _emit(document, out_path):
    payload = canonical_json_bytes(document)
    if out_path:
        with open(out_path, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.buffer.write(payload)


def _cmd_run(ns) -> int:
    try:
        scenario = parse_scenario(ns.scenario)
    except ScenarioError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    document, code = run(scenario, paranoid=ns.paranoid, jobs=ns.jobs,
                         timings=ns.timings)
    _emit(document, ns.out)
    return code


def _cmd_suite(ns) -> int:
    scenario = Scenario(
        dim=ns.dim,
        ideals={},
        filtrations={},
        tasks=[
            Task(
                "suite",
                {
                    "dim": ns.dim,
                    "r": ns.r,
                    "count": ns.count,
                    "max_exponent": ns.max_exp,
                    "seed": ns.seed,
                },
            )
        ],
        horizon=DEFAULT_HORIZON,
    )
    document, code = run(scenario, paranoid=ns.paranoid, jobs=ns.jobs,
                         timings=ns.timings)
    _emit(document, ns.out)
    return code


def golden_dir():
    from importlib.resources import files

    return files("mixmult") / "golden"


def _cmd_selftest(ns) -> int:
    base = golden_dir()
    names = sorted(
        entry.name[: -len(".json")]
        for entry in base.iterdir()
        if entry.name.endswith(".json") and not entry.name.endswith(".report.json")
    )
    failures = 0
    for name in names:
        scenario_text = (base / f"{name}.json").read_text(encoding="utf-8")
        expected = (base / f"{name}.report.json").read_bytes()
        scenario = parse_scenario_data(
            json.loads(scenario_text, object_pairs_hook=_no_dupes_hook)
        )
        document, code = run(scenario, jobs=ns.jobs)
        got = canonical_json_bytes(document)
        ok = got == expected and code == EXIT_OK
        print(f"selftest {name}: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
        if not ok:
            failures += 1
        if ns.out_dir:
            import os

            with open(os.path.join(ns.out_dir, f"{name}.report.json"), "wb") as fh:
                fh.write(got)
    return EXIT_OK if failures == 0 else EXIT_VERIFICATION


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="mixmult",
        description="exact mixed multiplicities of monomial ideals and filtrations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a scenario file")
    p_run.add_argument("scenario")
    p_run.add_argument("--paranoid", action="store_true",
                       help="cross-check every mixed table against the difference oracle")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--out", default=None, help="write the report here instead of stdout")
    p_run.add_argument("--timings", action="store_true",
                       help="include per-task wall times (breaks byte-reproducibility)")
    p_run.set_defaults(func=_cmd_run)

    p_suite = sub.add_parser("suite", help="randomized Minkowski-inequality suite")
    p_suite.add_argument("--dim", type=int, required=True)
    p_suite.add_argument("--r", type=int, required=True)
    p_suite.add_argument("--count", type=int, required=True)
    p_suite.add_argument("--max-exp", type=int, required=True)
    p_suite.add_argument("--seed", type=int, required=True)
    p_suite.add_argument("--paranoid", action="store_true")
    p_suite.add_argument("--jobs", type=int, default=1)
    p_suite.add_argument("--out", default=None)
    p_suite.add_argument("--timings", action="store_true")
    p_suite.set_defaults(func=_cmd_suite)

    p_self = sub.add_parser("selftest", help="run the shipped golden scenarios")
    p_self.add_argument("--jobs", type=int, default=1)
    p_self.add_argument("--out-dir", default=None,
                        help="also write the produced reports to this directory")
    p_self.set_defaults(func=_cmd_selftest)

    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except ScenarioError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
