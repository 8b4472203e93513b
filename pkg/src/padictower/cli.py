"""Command-line front end.

Every subcommand is a thin client of the HTTP service: by default requests
are served in-process (no sockets); pass --url to talk to a remote server
started with `padictower serve`.

Exit codes: 0 all checks pass, 1 a verified statement failed, 2 usage
error, 3 the only problems were insufficient working precision.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

CONFIG_KEYS = {"url", "seed", "output_dir", "bound_samples",
               "uniformizer_samples", "trace_one_trials", "tame_tries",
               "precision"}


def _load_config(path: str | None) -> dict[str, str]:
    """key=value lines; '#' comments and blanks ignored."""
    out: dict[str, str] = {}
    if not path:
        return out
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise click.UsageError(
                f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise click.UsageError(
                f"{path}:{lineno}: unknown key {key!r} "
                f"(known: {', '.join(sorted(CONFIG_KEYS))})")
        out[key] = value.strip()
    return out


class Client:
    """In-process by default; HTTP when a base URL is given."""

    def __init__(self, url: str | None):
        if url:
            import httpx
            self._client = httpx.Client(base_url=url, timeout=600.0)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import create_app
            self._client = TestClient(create_app())

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        if resp.status_code == 409:
            _die(resp.json().get("detail", "precision exhausted"), code=3)
        if resp.status_code >= 400:
            detail = resp.json().get("detail", resp.text)
            _die(detail, code=2)
        return resp.json()


def _die(message, code: int) -> None:
    click.echo(json.dumps({"error": message}), err=True)
    sys.exit(code)


def _emit(payload: dict, out: str | None, ctx_obj: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        _write_text(out, text, ctx_obj)
    else:
        click.echo(text, nl=False)


def _write_text(out: str, text: str, ctx_obj: dict) -> None:
    path = _resolve_out(out, ctx_obj)
    try:
        path.write_text(text)
    except OSError as exc:
        _die(f"cannot write {path}: {exc}", code=2)
    click.echo(f"wrote {path}", err=True)


def _resolve_out(out: str, ctx_obj: dict) -> Path:
    path = Path(out)
    base = os.environ.get("PADICTOWER_OUTPUT_DIR") \
        or ctx_obj.get("output_dir")
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True),
              default=None, help="key=value config file; flags win")
@click.option("--url", default=None,
              help="base URL of a running server (default: in-process)")
@click.pass_context
def main(ctx: click.Context, config_path: str | None, url: str | None):
    """Exact p-adic tower arithmetic: verification suites and tables."""
    cfg = _load_config(config_path)
    ctx.obj = cfg
    ctx.obj["url"] = url or cfg.get("url")


@main.group()
def resolvent() -> None:
    """Character sums of ring elements."""


@resolvent.command("compute")
@click.option("--p", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--f", default=1, type=int, show_default=True)
@click.option("--precision", "precision", default=None, type=int,
              help="coefficient precision (digits of p); default n+6")
@click.option("--alpha", default=None,
              help="element JSON, or @FILE; default: the layer-n uniformizer")
@click.option("--char", "char_spec", required=True,
              help="character as 'tame,wild'")
@click.option("--group", type=click.Choice(["full", "gamma"]),
              default="full", show_default=True)
@click.option("--out", default=None, help="write response JSON here")
@click.pass_context
def resolvent_compute(ctx, p, n, f, precision, alpha, char_spec, group, out):
    """Compute v_p of the character sum and compare with (n+1)/2."""
    try:
        tame_s, _, wild_s = char_spec.partition(",")
        char = {"tame": int(tame_s), "wild": int(wild_s or 0)}
    except ValueError:
        raise click.UsageError("--char must be 'tame,wild' integers")
    payload = {"p": p, "n": n, "f": f, "char": char, "group": group}
    if precision is None and ctx.obj.get("precision"):
        precision = int(ctx.obj["precision"])
    if precision is not None:
        payload["N"] = precision
    if alpha:
        text = Path(alpha[1:]).read_text() if alpha.startswith("@") else alpha
        try:
            payload["alpha"] = json.loads(text)
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"--alpha is not valid JSON: {exc}")
    body = Client(ctx.obj.get("url")).post("/resolvent/compute", payload)
    _emit(body, out, ctx.obj)
    if not body["meets_bound"]:
        sys.exit(1)


@main.group()
def formula() -> None:
    """Closed-form valuation formulas."""


@formula.command("eval")
@click.option("--which", required=True,
              type=click.Choice(["delta", "lvalue", "bound", "parity"]))
@click.option("--p", required=True, type=int)
@click.option("--n", default=1, type=int, show_default=True)
@click.option("--lambda", "lambda_inv", default=0, type=int,
              show_default=True)
@click.option("--mu", "mu_inv", default=0, type=int, show_default=True)
@click.option("--w", "--W", "W", default=1, type=int, show_default=True,
              help="root number, +1 or -1")
@click.option("--out", default=None)
@click.pass_context
def formula_eval(ctx, which, p, n, lambda_inv, mu_inv, W, out):
    """Evaluate a closed-form valuation, with its identity checks."""
    payload = {"which": which, "p": p, "n": n, "lambda": lambda_inv,
               "mu": mu_inv, "W": W}
    body = Client(ctx.obj.get("url")).post("/formula/eval", payload)
    _emit(body, out, ctx.obj)
    if not all(body["identity_checks"].values()):
        sys.exit(1)


@main.group()
def suite() -> None:
    """Theorem-verification suites."""


def _suite_options(fn):
    for deco in reversed([
        click.option("--seed", default=None, type=int,
                     help="RNG seed (default 0 or config)"),
        click.option("--p", "ps", multiple=True, type=int,
                     help="primes (repeatable); default 3 5 7"),
        click.option("--f", "fs", multiple=True, type=int,
                     help="residue degrees (repeatable); default 1 2"),
        click.option("--n-max", default=3, type=int, show_default=True),
        click.option("--degree-cap", default=1500, type=int,
                     show_default=True),
        click.option("--bound-samples", default=None, type=int),
        click.option("--uniformizer-samples", default=None, type=int),
        click.option("--trace-one-trials", default=None, type=int),
        click.option("--tame-tries", default=None, type=int),
        click.option("--out", default=None,
                     help="file (single suite) or directory (--all)"),
    ]):
        fn = deco(fn)
    return fn


def _suite_payload(ctx, name, seed, ps, fs, n_max, degree_cap,
                   bound_samples, uniformizer_samples, trace_one_trials,
                   tame_tries) -> dict:
    cfg = ctx.obj
    payload = {"suite": name, "n_max": n_max, "degree_cap": degree_cap}
    payload["seed"] = seed if seed is not None else int(cfg.get("seed", 0))
    if ps:
        payload["ps"] = sorted(set(ps))
    if fs:
        payload["fs"] = sorted(set(fs))
    for key, val in (("bound_samples", bound_samples),
                     ("uniformizer_samples", uniformizer_samples),
                     ("trace_one_trials", trace_one_trials),
                     ("tame_tries", tame_tries)):
        if val is not None:
            payload[key] = val
        elif cfg.get(key):
            payload[key] = int(cfg[key])
    return payload


@suite.command("list")
def suite_list() -> None:
    """Print the available suite names."""
    from .suites import SUITES
    for name in sorted(SUITES):
        click.echo(name)


@suite.command("run")
@click.argument("names", nargs=-1)
@click.option("--all", "run_all_flag", is_flag=True,
              help="run every suite")
@_suite_options
@click.pass_context
def suite_run(ctx, names, run_all_flag, seed, ps, fs, n_max, degree_cap,
              bound_samples, uniformizer_samples, trace_one_trials,
              tame_tries, out):
    """Run one or more named suites (see `suite list`)."""
    from .suites import SUITES
    if run_all_flag:
        names = tuple(sorted(SUITES))
    if not names:
        raise click.UsageError("give suite names or --all")
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise click.UsageError(
            f"unknown suite(s): {', '.join(unknown)}; "
            f"available: {', '.join(sorted(SUITES))}")
    client = Client(ctx.obj.get("url"))
    worst = 0
    multi = len(names) > 1
    for name in names:
        payload = _suite_payload(ctx, name, seed, ps, fs, n_max, degree_cap,
                                 bound_samples, uniformizer_samples,
                                 trace_one_trials, tame_tries)
        body = client.post("/suite/run", payload)
        report = body["report"]
        summary = report["summary"]
        click.echo(
            f"{name}: pass={summary['pass']} fail={summary['fail']} "
            f"precision-insufficient={summary['precision-insufficient']} "
            f"sha256={body['canonical_sha256'][:16]}", err=True)
        if out:
            dest = f"{out}/{name}.json" if multi else out
            _emit(body, dest, ctx.obj)
        elif not multi:
            _emit(body, None, ctx.obj)
        code = body["exit_code"]
        if code == 1 or (code == 3 and worst != 1):
            worst = code
    sys.exit(worst)


@main.group()
def table() -> None:
    """Bit-stable summary tables."""


@table.command("emit")
@click.option("--kind", required=True,
              type=click.Choice(["valuation-growth", "ramification",
                                 "omega"]))
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--p", default=None, type=int)
@click.option("--n", default=None, type=int)
@click.option("--n-max", default=None, type=int)
@click.option("--lambda", "lambda_inv", default=None, type=int)
@click.option("--mu", "mu_inv", default=None, type=int)
@click.option("--out", default=None, help="write table here")
@click.pass_context
def table_emit(ctx, kind, fmt, p, n, n_max, lambda_inv, mu_inv, out):
    """Emit a table (CSV or JSON) with canonical 'a/b' rationals."""
    params = {}
    for key, val in (("p", p), ("n", n), ("n_max", n_max),
                     ("lambda", lambda_inv), ("mu", mu_inv)):
        if val is not None:
            params[key] = val
    payload = {"kind": kind, "format": fmt, "params": params}
    body = Client(ctx.obj.get("url")).post("/table/emit", payload)
    if out:
        _write_text(out, body["content"], ctx.obj)
    else:
        click.echo(body["content"], nl=False)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, type=int, show_default=True)
def serve(host: str, port: int) -> None:
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
