"""Command line front end.

Exit codes: 0 when no entry FAILs, 1 when at least one does, 2 on usage
errors.  DISPUTED and SKIPPED entries do not affect the exit code.
"""
from __future__ import annotations

import argparse
import sys

from .verifier import (
    RunConfig,
    render_csv,
    render_json,
    render_markdown,
    run_catalog,
)

_RENDERERS = {
    "markdown": render_markdown,
    "json": render_json,
    "csv": render_csv,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lerchlab",
                     description="Numerical checks of the integral catalog")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify catalog entries")
    v.add_argument("--entry", default="*", metavar="GLOB",
                   help="fnmatch pattern on entry ids (default: all)")
    v.add_argument("--rel-tol", type=float, default=1e-6, metavar="R",
                   help="relative tolerance for PASS (default 1e-6)")
    v.add_argument("--format", choices=sorted(_RENDERERS), default="markdown",
                   help="report format (default markdown)")
    v.add_argument("--seed", type=int, default=0, metavar="N",
                   help="seed for the work-order shuffle (default 0)")
    v.add_argument("--workers", type=int, default=1, metavar="K",
                   help="verification threads (default 1)")
    v.add_argument("--perturb-closed-forms", action="store_true",
                   help=argparse.SUPPRESS)  # self-test hook
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        if args.rel_tol <= 0:
            parser.error("--rel-tol must be positive")
        if args.workers < 1:
            parser.error("--workers must be at least 1")
        cfg = RunConfig(
            rel_tol=args.rel_tol,
            entry_filter=args.entry,
            output_format=args.format,
            seed=args.seed,
            workers=args.workers,
            perturb_closed_forms=args.perturb_closed_forms,
        )
        records = run_catalog(cfg)
        if not records:
            parser.error(f"no catalog entry matches {args.entry!r}")
        sys.stdout.write(_RENDERERS[args.format](records, cfg))
        return 1 if any(r.status == "FAIL" for r in records) else 0
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
