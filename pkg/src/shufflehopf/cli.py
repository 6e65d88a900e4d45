"""Command-line front end: a thin client over the HTTP service.

By default every command talks to an in-process instance of the service (no
server or network involved), so invocations are pure functions of their
arguments; pass --url to aim the same requests at a running server instead.

Exit codes: 0 success, 1 verification failure, 2 unusable input, 3
truncation/order error.
"""

from __future__ import annotations

import argparse
import sys

PARSE_EXIT = 2
TRUNCATION_EXIT = 3


def _make_client(url: str | None):
    if url:
        import httpx
        return httpx.Client(base_url=url, timeout=None)
    import warnings
    with warnings.catch_warnings():
        # Some starlette builds warn about their test-client transport on
        # import; it is irrelevant to callers of the CLI.
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app
    return TestClient(app)


def _request(args, path: str, payload: dict) -> dict:
    try:
        with _make_client(args.url) as client:
            resp = client.post(path, json=payload)
    except Exception as exc:  # connection problems against a remote server
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        raise SystemExit(1)
    body = resp.json()
    if resp.status_code != 200:
        err = body.get("error", {}) if isinstance(body, dict) else {}
        message = err.get("message", resp.text)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(TRUNCATION_EXIT if err.get("code") == "truncation"
                         else PARSE_EXIT)
    if args.json:
        print(resp.text)
    return body


def _cmd_product(args) -> int:
    if args.kind == "twist" and not args.series:
        print("error: twisted products need --series", file=sys.stderr)
        return PARSE_EXIT
    payload = {"kind": args.kind, "left": args.left, "right": args.right,
               "series": args.series}
    body = _request(args, "/product", payload)
    if not args.json:
        print(body["text"])
    return 0


def _cmd_phi(args) -> int:
    payload = {"series": args.series, "word": args.word, "inverse": args.inverse}
    body = _request(args, "/phi", payload)
    if not args.json:
        print(body["text"])
    return 0


def _cmd_coder(args) -> int:
    payload = {"series": args.series, "word": args.word}
    body = _request(args, "/coder", payload)
    if not args.json:
        print(body["text"])
    return 0


def _cmd_goldberg(args) -> int:
    moments = args.moments.split(",") if args.moments else None
    body = _request(args, "/goldberg", {"word": args.word, "moments": moments})
    if not args.json:
        print(body["coeff"])
    return 0


def _cmd_hausdorff(args) -> int:
    letters = args.letters if args.letters is not None else args.letters_pos
    degree = args.degree if args.degree is not None else args.degree_pos
    if letters is None or degree is None:
        print("error: hausdorff needs an alphabet size and a degree",
              file=sys.stderr)
        return PARSE_EXIT
    payload = {"letters": letters, "degree": degree}
    if args.check:
        check = _request(args, "/hausdorff/check", payload)
        if not args.json:
            if check["passed"]:
                print(f"PASS ({check['coefficients']} coefficients)")
            else:
                print(f"FAIL ({check['coefficients']} coefficients): "
                      f"{check['first_mismatch']}")
        return 0 if check["passed"] else 1
    body = _request(args, "/hausdorff", payload)
    if not args.json:
        print(body["text"])
    return 0


def _cmd_verify(args) -> int:
    body = _request(args, "/verify", {"suite": args.suite, "max_n": args.max_n})
    if not args.json:
        for suite in body["suites"]:
            status = "PASS" if suite["passed"] else "FAIL"
            print(f"{suite['suite']}: {status} ({suite['cases']} cases, "
                  f"max-n {suite['max_n']})")
            for failure in suite["failures"]:
                print(f"  {failure}")
    return 0 if body["passed"] else 1


def _cmd_serve(args) -> int:
    import uvicorn
    uvicorn.run("shufflehopf.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shufflehopf",
        description="Exact shuffle-algebra deformations, word quasi-symmetric "
                    "functions, and Hausdorff-series coefficients.")
    parser.add_argument("--url", help="base URL of a running service "
                                      "(default: run in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="shuffle, quasi-shuffle, or twisted product")
    p.add_argument("kind", choices=["shuffle", "qshuffle", "twist"])
    p.add_argument("left", help="tensor word, e.g. '1 2.3'")
    p.add_argument("right")
    p.add_argument("--series", help="series literal for twisted products")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("phi", help="apply the coalgebra endomorphism of a series")
    p.add_argument("word")
    p.add_argument("--series", required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("coder", help="apply the coderivation of a series")
    p.add_argument("word")
    p.add_argument("--series", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_coder)

    p = sub.add_parser("goldberg", help="exact Hausdorff-series coefficient "
                                        "of a packed word")
    p.add_argument("word", help="packed word, e.g. '1122' or '1 1 2 2'")
    p.add_argument("--moments", help="comma-separated rationals f1,f2,...; "
                                     "replaces the log functional")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_goldberg)

    p = sub.add_parser("hausdorff", help="expand log(e^x1 ... e^xk) or check "
                                         "it against the integral formula")
    p.add_argument("letters_pos", nargs="?", type=int, metavar="letters")
    p.add_argument("degree_pos", nargs="?", type=int, metavar="degree")
    p.add_argument("--letters", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--check", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hausdorff)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("suite")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
