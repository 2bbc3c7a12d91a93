"""CLI entry point for planar-lambda-maps.

`plam` 또는 `planar-lambda` 명령어로 실행된다.
데이터는 stdout, 진단은 stderr 로 보낸다.

종료 코드:
    0  성공
    1  도메인 오류 (error[<code>]: <message>)
    2  사용법 오류
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import TYPE_CHECKING, TextIO

from src.core.exceptions import AppError
from src.infra.config import get_settings
from src.infra.logger import set_level, setup_logger

if TYPE_CHECKING:
    from src.lambda_core.terms import LinearTerm
    from src.maps.rooted_map import RootedMap

logger = setup_logger(__name__)

PROG = "plam"


# ----------------------------------------------------------------------
# 입력 도우미
# ----------------------------------------------------------------------


def _read_map(source: str) -> RootedMap:
    """지도 파일을 읽는다. '-' 이면 stdin."""
    from src.io_formats.map_file import parse_map

    if source == "-":
        return parse_map(sys.stdin.read())
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise AppError(f"지도 파일을 읽을 수 없습니다: {source} ({exc.strerror})", "IO_ERROR") from exc
    return parse_map(text)


def _write_file(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise AppError(f"파일을 쓸 수 없습니다: {path} ({exc.strerror})", "IO_ERROR") from exc


# ----------------------------------------------------------------------
# 서브커맨드
# ----------------------------------------------------------------------


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    """중립/정규 개수 표를 탭 구분으로 출력한다.

    중립 표는 차수 1.., 크기 0..N-1 / 정규 표는 차수 0.., 크기 1..N.
    """
    from src.counting.tables import count_tables

    settings = get_settings().counting
    max_size = settings.max_size if args.max_size is None else args.max_size
    max_vars = settings.max_vars if args.max_vars is None else args.max_vars
    table = count_tables(max_size, max_vars)
    if args.kind == "neutral":
        sizes = range(0, max_size)
        degrees = range(1, max_vars + 1)
        cell = table.neutral_count
    else:
        sizes = range(1, max_size + 1)
        degrees = range(0, max_vars + 1)
        cell = table.normal_count
    out.write("\t".join(["i\\n", *(str(n) for n in sizes)]) + "\n")
    for i in degrees:
        out.write("\t".join([str(i), *(str(cell(n, i)) for n in sizes)]) + "\n")
    return 0


def cmd_series(args: argparse.Namespace, out: TextIO) -> int:
    """점화식, 닫힌 형식, Tutte 공식을 나란히 비교한다."""
    from src.counting.series import series_rows

    terms = get_settings().counting.series_terms if args.terms is None else args.terms
    rows = series_rows(terms)
    out.write("n\trecurrence\tclosed_form\ttutte\tstatus\n")
    for row in rows:
        status = "MATCH" if row.matches else "MISMATCH"
        out.write(f"{row.n}\t{row.recurrence}\t{row.closed_form}\t{row.tutte}\t{status}\n")
    if all(row.matches for row in rows):
        return 0
    logger.error("급수 계수가 일치하지 않는 행이 있습니다")
    return 1


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    """크기와 자유 변수 수가 주어진 정규 평면 항을 정해진 순서로 나열한다."""
    from src.counting.enumeration import enumerate_npt
    from src.io_formats.term_syntax import print_term

    terms = enumerate_npt(args.size, args.vars)
    width = len(str(len(terms)))
    for position, (term, _) in enumerate(terms, start=1):
        if args.format == "text":
            out.write(f"{position:>{width}}  {print_term(term)}\n")
        else:
            out.write(print_term(term) + "\n")
    return 0


def cmd_to_map(args: argparse.Namespace, out: TextIO) -> int:
    from src.bijection.correspondence import term_to_map
    from src.io_formats.map_file import print_map
    from src.io_formats.term_syntax import parse_term

    out.write(print_map(term_to_map(parse_term(args.term))))
    return 0


def cmd_to_term(args: argparse.Namespace, out: TextIO) -> int:
    from src.bijection.correspondence import map_to_term
    from src.io_formats.term_syntax import print_term

    term, _ = map_to_term(_read_map(args.mapfile))
    out.write(print_term(term) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    """전단사를 전수 검증하고 생성함수 항등식을 확인한다."""
    from src.bijection.correspondence import verify_bijection
    from src.bijection.trace import render_trace
    from src.counting.tables import check_identities

    max_size = get_settings().verify.max_size if args.max_size is None else args.max_size
    identities = check_identities(max_size)
    report = verify_bijection(max_size)
    out.write("size\tterms\tmaps\n")
    for size in sorted(report.term_counts):
        out.write(f"{size}\t{report.term_counts[size]}\t{report.map_counts[size]}\n")
    out.write(f"identities\t{identities.checked}\n")
    if report.ok:
        out.write("OK\n")
        return 0
    for failure in report.failures:
        sys.stderr.write(f"FAIL {failure.kind} {failure.subject}: {failure.detail}\n")
        if failure.trace is not None:
            sys.stderr.write(render_trace(failure.trace) + "\n")
    out.write(f"FAILED ({len(report.failures)})\n")
    return 1


def _load_object(args: argparse.Namespace) -> LinearTerm | RootedMap:
    from src.io_formats.term_syntax import parse_term

    if args.term is not None:
        return parse_term(args.term)
    return _read_map(args.map)


def cmd_render(args: argparse.Namespace, out: TextIO) -> int:
    """항은 색칠된 문자열 다이어그램, 지도는 다중 그래프로 DOT 파일을 쓴다."""
    from src.io_formats.dot import emit_dot_diagram, emit_dot_map
    from src.maps.rooted_map import RootedMap

    obj = _load_object(args)
    text = emit_dot_map(obj) if isinstance(obj, RootedMap) else emit_dot_diagram(obj)
    _write_file(args.out, text)
    logger.info(f"DOT 파일 저장: {args.out}")
    return 0


def cmd_trace(args: argparse.Namespace, out: TextIO) -> int:
    from src.bijection.correspondence import decomposition_trace
    from src.bijection.trace import render_trace

    out.write(render_trace(decomposition_trace(_load_object(args))) + "\n")
    return 0


# ----------------------------------------------------------------------
# 파서
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="루트 평면 지도와 정규 평면 람다 항 사이의 전단사 도구",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="INFO 로그를 stderr 로 출력")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    count = sub.add_parser("count", help="중립/정규 항 개수 표")
    count.add_argument("--kind", choices=["normal", "neutral"], default="normal")
    count.add_argument("--max-size", type=int, default=None)
    count.add_argument("--max-vars", type=int, default=None)
    count.set_defaults(handler=cmd_count)

    series = sub.add_parser("series", help="닫힌 형식과 Tutte 공식 비교")
    series.add_argument("--terms", type=int, default=None)
    series.set_defaults(handler=cmd_series)

    enum = sub.add_parser("enumerate", help="정규 평면 항 나열")
    enum.add_argument("--size", type=int, required=True)
    enum.add_argument("--vars", type=int, default=1)
    enum.add_argument("--format", choices=["text", "lines"], default="lines")
    enum.set_defaults(handler=cmd_enumerate)

    to_map = sub.add_parser("to-map", help="항 → 지도 파일")
    to_map.add_argument("term")
    to_map.set_defaults(handler=cmd_to_map)

    to_term = sub.add_parser("to-term", help="지도 파일 → 항")
    to_term.add_argument("mapfile", help="지도 파일 경로 ('-' 는 stdin)")
    to_term.set_defaults(handler=cmd_to_term)

    verify = sub.add_parser("verify", help="전단사 전수 검증")
    verify.add_argument("--max-size", type=int, default=None)
    verify.set_defaults(handler=cmd_verify)

    for name, handler, help_text in (
        ("render", cmd_render, "DOT 파일 출력"),
        ("trace", cmd_trace, "분해 트레이스 출력"),
    ):
        command = sub.add_parser(name, help=help_text)
        source = command.add_mutually_exclusive_group(required=True)
        source.add_argument("--term")
        source.add_argument("--map", help="지도 파일 경로 ('-' 는 stdin)")
        if name == "render":
            command.add_argument("--out", required=True)
        command.set_defaults(handler=handler)

    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """명령을 실행하고 종료 코드를 반환한다.

    Args:
        argv: 인자 목록 (None 이면 sys.argv[1:])
        out: 데이터 출력 스트림 (None 이면 sys.stdout)
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.verbose:
        set_level("INFO")
    try:
        return int(args.handler(args, out))
    except AppError as exc:
        logger.debug(repr(exc))
        sys.stderr.write(f"error[{exc.code}]: {exc.message}\n")
        return 1


def main() -> None:
    """pyproject.toml의 [project.scripts]에서 호출된다.

    - plam = "src.cli:main"
    - planar-lambda = "src.cli:main"
    """
    sys.exit(run())


if __name__ == "__main__":
    main()
