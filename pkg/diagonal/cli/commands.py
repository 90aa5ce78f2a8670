"""Subcommand handlers. Each returns the process exit code."""

import logging

from services.generation_service import GenerationService
from services.report_service import ReportService
from services.search_service import SearchService
from services.surface_service import SurfaceService

from ..reporting import ReportBuilder
from ..search import SearchTask
from .output import emit, emit_lines, use_json

logger = logging.getLogger(__name__)


def run_generate(args) -> int:
    service = GenerationService(args.output_dir)
    summary = service.generate(args.family, args.a, args.b, args.m, args.out)
    emit([summary], use_json(args.json))
    return 0


def run_verify(args) -> int:
    summary = GenerationService().verify(args.file)
    emit([summary], use_json(args.json))
    return 0 if summary["identity"] and not summary["trivial"] else 1


def run_cone(args) -> int:
    result = SurfaceService().cone(args.input, args.form)
    emit([result], use_json(args.json))
    return 0


def run_forms_pair(args) -> int:
    result = SurfaceService().form_pair(args.a, args.b, args.f1, args.f2, args.u, args.s, args.k)
    emit([result], use_json(args.json))
    return 0


def run_forms_del_pezzo(args) -> int:
    result = SurfaceService().del_pezzo(args.a, args.b, args.u, args.v, args.f1, args.f2, args.w)
    emit([result], use_json(args.json))
    return 0


def run_pencil(args) -> int:
    service = SearchService(args.workers)
    split = service.split(args.abcd, args.seed, args.published_split)
    if args.survey:
        points = service.pencil_survey(split, args.exponents, args.survey, args.height)
        emit(points, use_json(args.json))
        return 0
    result = service.pencil(split, args.exponents, args.t, args.height)
    points = result.pop("points")
    emit([result, *points], use_json(args.json))
    return 0


def run_search(args) -> int:
    service = SearchService(args.workers)
    as_json = use_json(args.json)
    if args.kind == "mod3":
        emit([service.mod3(args.abcd)], as_json)
        return 0
    if args.kind == "survey":
        emit(service.survey(args.max_coeff, args.height), as_json)
        return 0
    if args.kind == "sextic":
        task = SearchTask("sextic", args.max_sum)
    elif args.kind == "surface":
        task = SearchTask("surface", args.height, tuple(args.abcd))
    elif args.kind == "selmer":
        task = SearchTask("selmer", args.height)
    else:
        task = SearchTask("cubic", args.height, tuple(args.coefficients), args.rhs)
    hits = service.search(task)
    logger.info(f"{task.kind} search up to {task.bound}: {len(hits)} hits")
    emit(hits, as_json)
    return 0


def run_report(args) -> int:
    report = ReportService(args.config).run(fast=args.fast, output_dir=args.out)
    if use_json(args.json):
        emit([*report["checks"], {"summary": report["summary"], "fast": report["fast"]}], True)
    else:
        emit_lines(ReportBuilder().build_table(report))
    return 0 if report["summary"]["failed"] == 0 else 1
