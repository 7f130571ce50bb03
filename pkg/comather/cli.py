"""
Command-line front end.

Every command is a registry entry {"name", "description", "model", "func"}; a
handler takes a validated pydantic request and returns a result dictionary with
at least "success" and "message". run_command does the dispatch and turns
library exceptions into failed results.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError

from . import COMMAND_CONFIG, GOLDEN_TABLES, __version__
from .chow import FlagSpace, SchubertClass
from .config import configure_logging, get_settings
from .csm import check_euler_nonneg, csm_cell_gp, euler_obstructions
from .emit import FORMATS, render_class, render_frame, render_mapping
from .errors import ComatherError, InvalidInputError, ResourceLimitError
from .golden import TABLE_KINDS, build_table, golden_diff, table_like
from .kl import cc_multiplicities, compare_ordinary, kl_class
from .loc import conormal_localize
from .mather import (
    check_log_concave,
    check_positivity,
    check_unimodal,
    dual_mather,
    mather_class,
    mather_polynomial,
    pullback_mather,
    segre_conormal,
    segre_mather,
)

logger = logging.getLogger(__name__)

Format = Literal["text", "json", "latex", "csv"]
SCAN_CHECKS = ("pos", "euler-nonneg", "unimodal", "logconcave-A")


# Pydantic models for request validation
class ClassRequest(BaseModel):
    space: str
    w: str
    equivariant: bool = False
    format: Format = "text"


class MatherRequest(ClassRequest):
    dual: bool = False


class SegreRequest(ClassRequest):
    conormal: bool = False


class KLRequest(ClassRequest):
    assume_ordinary: bool = False


class CCRequest(BaseModel):
    space: str
    w: str
    pullback_to: Optional[str] = None
    assume_ordinary: bool = False
    format: Format = "text"


class PullbackRequest(ClassRequest):
    to: str = "B"


class ConormalRequest(BaseModel):
    space: str
    w: str
    u: str
    format: Format = "text"


class TableRequest(BaseModel):
    space: Optional[str] = None
    kind: Literal["mather", "euler", "csm"] = "mather"
    w: Optional[List[str]] = None
    like: Optional[str] = None
    jobs: int = Field(default=1, gt=0)
    format: Format = "csv"


class GoldenRequest(BaseModel):
    id: str
    fixture_dir: Optional[Path] = None
    jobs: int = Field(default=1, gt=0)


class ScanRequest(BaseModel):
    spaces: List[str]
    which: List[Literal["pos", "euler-nonneg", "unimodal", "logconcave-A", "logconcave"]] = list(SCAN_CHECKS)
    format: Format = "text"


class PolyRequest(BaseModel):
    space: str
    w: str


def _space_and_element(space_text: str, w_text: str):
    space = FlagSpace.parse(space_text)
    return space, space.parse_element(w_text)


def _class_result(c: SchubertClass, fmt: str, message: str, **extra) -> Dict[str, Any]:
    return {"success": True, "message": message, "output": render_class(c, fmt), **extra}


# -- handlers ------------------------------------------------------------------


def cmd_mather(req: MatherRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    m = mather_class(space, w, req.equivariant)
    c = dual_mather(m) if req.dual else m.downstairs
    kind = "dual Mather" if req.dual else "Mather"
    return _class_result(c, req.format, f"{kind} class of X_{space.label(w)} in {space}")


def cmd_csm(req: ClassRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    return _class_result(csm_cell_gp(space, w, req.equivariant), req.format, f"CSM class of the cell {space.label(w)}")


def cmd_euler(req: ClassRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    table = euler_obstructions(space, w, verify_equivariant=req.equivariant)
    values = table.by_label()
    return {
        "success": True,
        "message": f"Euler obstructions of X_{space.label(w)} in {space}",
        "output": render_mapping(values, req.format),
        "values": values,
    }


def cmd_klclass(req: KLRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    c = kl_class(space, w, req.equivariant, req.assume_ordinary)
    extra = {}
    if req.assume_ordinary and not space.is_gb:
        extra["discrepancies"] = compare_ordinary(space, w).discrepancies
    return _class_result(c, req.format, f"KL class of X_{space.label(w)} in {space}", **extra)


def cmd_cc(req: CCRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    if req.pullback_to not in (None, "B"):
        raise InvalidInputError("--pullback-to only supports B")
    cc = cc_multiplicities(space, w, pullback_to_b=req.pullback_to == "B", assume_ordinary=req.assume_ordinary)
    values = cc.by_label()
    verdict = "irreducible" if cc.irreducible else "reducible"
    return {
        "success": True,
        "message": f"characteristic cycle of X_{space.label(w)} is {verdict}",
        "output": render_mapping(values, req.format),
        "multiplicities": values,
        "irreducible": cc.irreducible,
    }


def cmd_segre_mather(req: SegreRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    if req.conormal:
        return _class_result(segre_conormal(space, w, req.equivariant), req.format,
                             f"Segre class of the conormal space of X_{space.label(w)}")
    return _class_result(segre_mather(space, w, req.equivariant), req.format,
                         f"Segre-Mather class of X_{space.label(w)}")


def cmd_pullback_mather(req: PullbackRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    target = FlagSpace.parse(f"{space.rs.name}/{req.to}")
    c = pullback_mather(space, w, target, req.equivariant)
    return _class_result(c, req.format, f"Mather class of the preimage of X_{space.label(w)} in {target}")


def cmd_conormal_loc(req: ConormalRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    u = space.parse_element(req.u)
    value = conormal_localize(space, w, u)
    output = render_mapping({"value": value.to_str(), "terms": value.to_json()}, "json") if req.format == "json" else value.to_str()
    return {
        "success": True,
        "message": f"conormal localization of X_{space.label(w)} at {space.label(u)}",
        "output": output,
    }


def cmd_table(req: TableRequest) -> Dict[str, Any]:
    if req.like:
        frame = table_like(req.like, req.jobs)
        message = f"table recomputed in the layout of {req.like}"
    else:
        if not req.space:
            raise InvalidInputError("table needs --space or --like")
        space = FlagSpace.parse(req.space)
        columns = None
        if req.w:
            columns = [space.label(space.parse_element(text)) for text in req.w]
        frame = build_table(space, req.kind, columns, req.jobs)
        message = f"{req.kind} table of {space}: {frame.shape[0]} rows, {frame.shape[1]} columns"
    return {"success": True, "message": message, "output": render_frame(frame, req.format)}


def cmd_golden_diff(req: GoldenRequest) -> Dict[str, Any]:
    report = golden_diff(req.id, req.fixture_dir, req.jobs)
    lines = [f"{row},{col},{expected},{got}" for row, col, expected, got in report.mismatches]
    return {
        "success": report.ok,
        "message": f"{req.id}: {report.checked} cells checked, {len(report.mismatches)} mismatches",
        "output": "\n".join(["row,column,expected,got"] + lines) if lines else "",
        "mismatches": report.mismatches,
        "exit_code": 0 if report.ok else 1,
    }


def _scan_space(space: FlagSpace, which: List[str]) -> Dict[str, List[str]]:
    found: Dict[str, List[str]] = {check: [] for check in which}
    for w in space.min_reps():
        label = space.label(w)
        if "pos" in which and not check_positivity(space, w).ok:
            found["pos"].append(label)
        if "unimodal" in which or "logconcave-A" in which or "logconcave" in which:
            poly = mather_polynomial(space, w)
            if "unimodal" in which and not check_unimodal(poly):
                found["unimodal"].append(label)
            for check in ("logconcave-A", "logconcave"):
                if check in which and not check_log_concave(poly):
                    found[check].append(label)
    if "euler-nonneg" in which:
        found["euler-nonneg"] = [f"{w}@{v}" for w, v, _ in check_euler_nonneg(space).violations]
    return found


def cmd_scan(req: ScanRequest) -> Dict[str, Any]:
    report: Dict[str, Dict[str, List[str]]] = {}
    conjecture_violations = 0
    for text in req.spaces:
        space = FlagSpace.parse(text)
        space.require_cominuscule()
        found = _scan_space(space, list(req.which))
        report[str(space)] = found
        for check, labels in found.items():
            # log-concavity is only expected in type A
            if check == "logconcave-A" and space.rs.lie_type != "A":
                continue
            if check == "logconcave":
                continue
            conjecture_violations += len(labels)
    lines = []
    for space_name, found in report.items():
        for check, labels in found.items():
            status = "✅" if not labels else "❌"
            lines.append(f"{status} {space_name} {check}: {len(labels)} violation(s) {' '.join(labels)}".rstrip())
    output = render_mapping(report, "json") if req.format == "json" else "\n".join(lines)
    return {
        "success": conjecture_violations == 0,
        "message": f"scanned {len(report)} space(s), {conjecture_violations} conjecture violation(s)",
        "output": output,
        "report": report,
        "exit_code": 0 if conjecture_violations == 0 else 1,
    }


def cmd_mather_poly(req: PolyRequest) -> Dict[str, Any]:
    space, w = _space_and_element(req.space, req.w)
    poly = mather_polynomial(space, w)
    unimodal = check_unimodal(poly)
    log_concave = check_log_concave(poly)
    return {
        "success": True,
        "message": f"Mather polynomial of X_{space.label(w)} in {space}",
        "output": f"{poly}\nunimodal: {'yes' if unimodal else 'no'}\nlog-concave: {'yes' if log_concave else 'no'}",
        "polynomial": str(poly),
        "unimodal": unimodal,
        "log_concave": log_concave,
    }


COMMANDS = [
    {"name": "mather", "model": MatherRequest, "func": cmd_mather},
    {"name": "csm", "model": ClassRequest, "func": cmd_csm},
    {"name": "euler", "model": ClassRequest, "func": cmd_euler},
    {"name": "klclass", "model": KLRequest, "func": cmd_klclass},
    {"name": "cc", "model": CCRequest, "func": cmd_cc},
    {"name": "segre-mather", "model": SegreRequest, "func": cmd_segre_mather},
    {"name": "pullback-mather", "model": PullbackRequest, "func": cmd_pullback_mather},
    {"name": "conormal-loc", "model": ConormalRequest, "func": cmd_conormal_loc},
    {"name": "table", "model": TableRequest, "func": cmd_table},
    {"name": "golden-diff", "model": GoldenRequest, "func": cmd_golden_diff},
    {"name": "scan", "model": ScanRequest, "func": cmd_scan},
    {"name": "mather-poly", "model": PolyRequest, "func": cmd_mather_poly},
]
for _command in COMMANDS:
    _command["description"] = COMMAND_CONFIG[_command["name"]]["description"]


def run_command(command_name: str, **kwargs) -> Dict[str, Any]:
    for command in COMMANDS:
        if command["name"] == command_name:
            try:
                request = command["model"](**kwargs)
                result = command["func"](request)
            except (ValidationError, InvalidInputError) as exc:
                return {"success": False, "message": str(exc), "output": "", "exit_code": 2}
            except ResourceLimitError as exc:
                return {"success": False, "message": f"resource limit: {exc}", "output": "", "exit_code": 2}
            except ComatherError as exc:
                logger.exception("command %s failed", command_name)
                return {"success": False, "message": f"internal error: {exc}", "output": "", "exit_code": 1}
            result.setdefault("exit_code", 0 if result["success"] else 1)
            return result
    return {"success": False, "message": f"Command {command_name} not found", "output": "", "exit_code": 2}


# -- argparse ------------------------------------------------------------------


def _common(parser: argparse.ArgumentParser, element: bool = True) -> None:
    parser.add_argument("--space", required=True, help="e.g. A3/P2, C4/P4, E6/P6, C2/B")
    if element:
        parser.add_argument("--w", required=True, help="diagram label ('2,1', '431') or reduced word ('1 3 2')")
    parser.add_argument("--format", choices=FORMATS, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="comather", description="Mather, CSM and KL classes of Schubert varieties")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--max-interval", type=int, default=None, help="cap on Bruhat interval sizes")
    sub = parser.add_subparsers(dest="command", required=True)
    help_for = {name: cfg["description"] for name, cfg in COMMAND_CONFIG.items()}

    p = sub.add_parser("mather", help=help_for["mather"])
    _common(p)
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--dual", action="store_true")

    for name in ("csm", "euler"):
        p = sub.add_parser(name, help=help_for[name])
        _common(p)
        p.add_argument("--equivariant", action="store_true")

    p = sub.add_parser("klclass", help=help_for["klclass"])
    _common(p)
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--assume-ordinary", action="store_true")

    p = sub.add_parser("cc", help=help_for["cc"])
    _common(p)
    p.add_argument("--pullback-to", default=None)
    p.add_argument("--assume-ordinary", action="store_true")

    p = sub.add_parser("segre-mather", help=help_for["segre-mather"])
    _common(p)
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--conormal", action="store_true")

    p = sub.add_parser("pullback-mather", help=help_for["pullback-mather"])
    _common(p)
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--to", default="B", help="B or P<nodes> of the smaller parabolic")

    p = sub.add_parser("conormal-loc", help=help_for["conormal-loc"])
    _common(p)
    p.add_argument("--u", required=True)

    p = sub.add_parser("table", help=help_for["table"])
    p.add_argument("--space")
    p.add_argument("--kind", choices=TABLE_KINDS, default="mather")
    p.add_argument("--w", action="append", help="restrict to these columns (repeatable)")
    p.add_argument("--like", choices=GOLDEN_TABLES, help="use the row/column layout of a golden table")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="csv")

    p = sub.add_parser("golden-diff", help=help_for["golden-diff"])
    p.add_argument("id", choices=GOLDEN_TABLES)
    p.add_argument("--fixture-dir", type=Path, default=None)
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("scan", help=help_for["scan"])
    p.add_argument("--space", action="append", required=True, dest="spaces")
    p.add_argument("--which", action="append", choices=SCAN_CHECKS + ("logconcave",))
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("mather-poly", help=help_for["mather-poly"])
    p.add_argument("--space", required=True)
    p.add_argument("--w", required=True)
    return parser


def _request_kwargs(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"command", "verbose", "max_interval"}
    kwargs = {k: v for k, v in vars(args).items() if k not in skip and v is not None}
    if "jobs" in vars(args) and args.jobs is None:
        kwargs["jobs"] = get_settings().jobs
    return kwargs


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)
    if args.max_interval is not None:
        settings = get_settings()
        settings.max_interval = args.max_interval
    result = run_command(args.command, **_request_kwargs(args))
    if result.get("output"):
        print(result["output"])
    if result["success"]:
        logger.info("✅ %s", result["message"])
    else:
        print(f"❌ {result['message']}", file=sys.stderr)
    return result["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
