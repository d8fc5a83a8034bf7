#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import argparse
import logging
import sys
from pathlib import Path
from typing import NoReturn

from .errors.input_error import InputError
from .errors.qaoadla_error import QaoadlaError
from .graphs.graph import Graph
from .graphs.graph_io import GraphFormat
from .graphs.graph_io import GraphIO
from .lie.ansatz_kind import AnsatzKind
from .reporting.command_result import CommandResult
from .reporting.free_family_sweep import FreeFamilySweep
from .reporting.gradvar import Gradvar
from .reporting.graph_report import GraphReport
from .reporting.json_report import JsonReport
from .reporting.survey import Survey
from .simulator.ensemble import Ensemble
from .simulator.ensembles import Ensembles
from .simulator.parameter_domain import ParameterDomain
from .utils.log import Log
from .utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Qaoadla:
    commands: list[str] = ["classify", "report", "survey", "gradvar", "saturate", "characters", "verify-free-families"]

    def __init__(self) -> None:
        self.args: argparse.Namespace = argparse.Namespace()
        self.config: RunConfig = RunConfig()

    def _argument_parser(self, argv: list[str] | None = None) -> None:
        # options shared by every subcommand
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
        common.add_argument("-q", "--quiet", action="store_true", help="only log warnings and errors")
        common.add_argument("--seed", type=int, default=0, help="seed of every random stream")
        common.add_argument("--threads", type=int, default=None, help="worker threads, defaults to QAOADLA_THREADS")
        common.add_argument("--allow-n8", action="store_true", help="allow exact computations on 8 qubits")
        common.add_argument("--mode", choices=["exact", "float"], default=None, help="force the coefficient mode")
        common.add_argument("--out", type=Path, default=None, help="write the report to a file instead of stdout")

        # options of the commands reading a single graph
        graph = argparse.ArgumentParser(add_help=False)
        graph.add_argument("graph", nargs="?", help="graph6 text or edge-list json")
        graph.add_argument("--input", type=Path, default=None, help="read the graph from a file")
        graph.add_argument("--format", choices=[f.value for f in GraphFormat], default=None, help="input format")

        parser = argparse.ArgumentParser(prog="qaoadla", description="lie algebras of qaoa ansätze on graphs")
        subparsers = parser.add_subparsers(dest="command", required=True)

        classify = subparsers.add_parser("classify", parents=[common, graph], help="free-ansatz family of a graph")
        classify.add_argument("--verify", action="store_true", help="confirm the closed form by a lie closure")

        report = subparsers.add_parser("report", parents=[common, graph], help="algebras and symmetries of ansätze")
        kinds: list[str] = [k.value for k in AnsatzKind]
        report.add_argument("--ansatz", choices=kinds + ["all"], default="all", help="the ansatz to analyse")
        report.add_argument("--extra-z", default="", help="comma separated 1-based vertices with an extra iZ")

        survey = subparsers.add_parser("survey", parents=[common], help="hidden symmetries of asymmetric graphs")
        survey.add_argument("--n", type=int, required=True, help="vertex count of the surveyed graphs")

        gradvar = subparsers.add_parser("gradvar", parents=[common, graph], help="gradient variance of the cost")
        gradvar.add_argument("--ansatz", choices=kinds, default=AnsatzKind.FREE.value, help="the ansatz to sample")
        gradvar.add_argument("--layers", type=int, default=1, help="number of layers")
        gradvar.add_argument("--samples", type=int, default=100, help="number of random parameter vectors")
        gradvar.add_argument("--normalize", action="store_true", help="divide the cost by the number of edges")
        gradvar.add_argument("--ensemble", choices=[e.value for e in Ensemble], default=None, help="graph ensemble")
        gradvar.add_argument("--min-n", type=int, default=4, help="smallest vertex count of the ensemble")
        gradvar.add_argument("--max-n", type=int, default=12, help="largest vertex count of the ensemble")
        gradvar.add_argument("--domain", choices=[d.value for d in ParameterDomain], default=ParameterDomain.PI.value)
        gradvar.add_argument("--csv", action="store_true", help="emit csv instead of json")

        subparsers.add_parser("saturate", parents=[common, graph], help="edge saturation of a graph")
        subparsers.add_parser("characters", parents=[common, graph], help="character multiplicities of a graph")

        verify = subparsers.add_parser("verify-free-families", parents=[common], help="closed forms up to max-n")
        verify.add_argument("--max-n", type=int, default=5, help="largest vertex count to sweep")

        self.args = parser.parse_args(argv)

    def _read_graph(self) -> Graph:
        if self.args.input is not None:
            try:
                text: str = self.args.input.read_text()
            except OSError as e:
                raise InputError(f"cannot read '{self.args.input}': {e.strerror}")
        elif self.args.graph is not None:
            text = self.args.graph
        else:
            raise InputError("no graph given, pass graph6 or json text or --input FILE")
        graph_format: GraphFormat | None = GraphFormat(self.args.format) if self.args.format else None
        return GraphIO.parse(text, graph_format)

    def _extra_z(self) -> tuple[int, ...]:
        if not self.args.extra_z:
            return ()
        try:
            return tuple(int(v) - 1 for v in self.args.extra_z.split(","))
        except ValueError:
            raise InputError(f"--extra-z expects comma separated vertices, got '{self.args.extra_z}'")

    def _kinds(self) -> list[AnsatzKind]:
        if self.args.ansatz == "all":
            return list(AnsatzKind)
        return [AnsatzKind(self.args.ansatz)]

    def _gradvar(self) -> CommandResult:
        if self.args.ensemble is not None:
            n_values: range = range(self.args.min_n, self.args.max_n + 1)
            graphs: list[Graph] = Ensembles.of(Ensemble(self.args.ensemble), n_values, self.config.seed)
        else:
            graphs = [self._read_graph()]
        return Gradvar.run(
            graphs,
            AnsatzKind(self.args.ansatz),
            self.args.layers,
            self.args.samples,
            self.config,
            self.args.normalize,
            ParameterDomain(self.args.domain),
        )

    def _execute(self) -> CommandResult:
        match self.args.command:
            case "classify":
                return GraphReport.classify(self._read_graph(), self.args.verify, self.config)
            case "report":
                return GraphReport.report(self._read_graph(), self._kinds(), self._extra_z(), self.config)
            case "survey":
                return Survey.run(self.args.n, self.config)
            case "gradvar":
                return self._gradvar()
            case "saturate":
                return GraphReport.saturate(self._read_graph())
            case "characters":
                return GraphReport.characters(self._read_graph(), self.config)
            case "verify-free-families":
                return FreeFamilySweep.run(self.args.max_n, self.config)
            case _:
                self.handle_error(f"unknown command '{self.args.command}'")

    def _emit(self, result: CommandResult) -> None:
        csv: bool = result.command == "gradvar" and self.args.csv
        text: str = Gradvar.to_csv(result) if csv else JsonReport.render(result)
        if self.args.out is None:
            sys.stdout.write(text)
            return
        try:
            self.args.out.write_text(text)
        except OSError as e:
            raise InputError(f"cannot write '{self.args.out}': {e.strerror}")
        logger.info(f"report written to {self.args.out}")

    def handle_error(self, error_msg: str) -> NoReturn:
        # lazy import the inspect and colors modules for error handling
        import inspect
        from inspect import FrameInfo

        from .utils.colors import Colors

        # try to get the line number of the function calling this function
        stack: list[FrameInfo] = inspect.stack()
        line: str = f"{stack[1].lineno}:" if len(stack) >= 2 else ""

        # construct the filename and error message with colors
        filename: str = f"\n{Colors.BOLD}{__file__}:{line} {Colors.RESET}"
        error: str = f"{Colors.BOLD}{Colors.RED}internal error: {Colors.RESET}"

        print(f"{filename}{error}{error_msg}!", file=sys.stderr)
        print(f"{Colors.BOLD}{Colors.MAGENTA}terminating...{Colors.RESET}", file=sys.stderr)
        exit(1)

    def run(self, argv: list[str] | None = None) -> int:
        """parse the arguments, run the command and return the exit code"""
        self._argument_parser(argv)
        Log.setup(Log.level_from_flags(self.args.verbose, self.args.quiet))

        try:
            self.config = RunConfig.from_args(self.args)
            result: CommandResult = self._execute()
            self._emit(result)
        except QaoadlaError as e:
            print(e, file=sys.stderr)
            return e.exit_code

        # falsified checks still produce a report, but fail the run
        if not result.holds:
            logger.error(f"{result.command}: at least one check was falsified")
            return 1
        return 0


if __name__ == "__main__":
    qaoadla: Qaoadla = Qaoadla()
    try:
        exit(qaoadla.run())
    except (KeyboardInterrupt, SystemExit):
        raise
    except Exception as e:
        qaoadla.handle_error(f"{type(e).__name__}: {e}")
