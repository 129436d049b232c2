"""Command-line client for the evaluation service.

Runs the service core in-process by default; with --server it talks to a
running HTTP instance instead.  Exit codes: 0 success, 2 unusable input,
3 enumeration cap exceeded, 4 internal consistency violation.
"""

from __future__ import annotations

import json
import sys

import click
from pydantic import BaseModel, ValidationError

from . import schemas, service
from .exactlin import NotCoveredError
from .weyl import EnumerationCapError

EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _run(call, *args):
    try:
        return call(*args)
    except (service.SpecError, ValidationError) as exc:
        _fail(EXIT_PARSE, str(exc))
    except EnumerationCapError as exc:
        _fail(EXIT_CAP, str(exc))
    except (AssertionError, NotCoveredError) as exc:
        _fail(EXIT_INTERNAL, f"internal consistency: {exc}")


def _fetch(server: str, method: str, path: str, body: BaseModel | None = None):
    import httpx

    url = server.rstrip("/") + path
    if method == "POST":
        resp = httpx.post(url, json=json.loads(body.model_dump_json()), timeout=600)
    else:
        resp = httpx.get(url, timeout=600)
    if resp.status_code == 422:
        _fail(EXIT_PARSE, resp.text)
    if resp.status_code == 409:
        _fail(EXIT_CAP, resp.text)
    if resp.status_code >= 400:
        _fail(EXIT_INTERNAL, resp.text)
    return resp.json()


def _emit(document: BaseModel | dict, fmt: str, text_renderer):
    if isinstance(document, BaseModel):
        payload = json.loads(document.model_dump_json())
    else:
        payload = document
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        text_renderer(payload)


@click.group()
def main():
    """Proper-action criteria for homogeneous spaces of reductive type."""


@main.command()
@click.argument("spec_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--cap", type=int, default=None, help="enumeration cap override")
@click.option("--bruteforce", is_flag=True, help="force the brute-force C2 path")
@click.option("--server", default=None, help="base URL of a running service")
def report(spec_path, fmt, cap, bruteforce, server):
    """Evaluate C1/C2/C3 for the space described in SPEC_PATH (JSON)."""
    try:
        raw = json.loads(open(spec_path, encoding="utf-8").read())
        model = schemas.SpaceSpecModel.model_validate(raw)
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        _fail(EXIT_PARSE, f"cannot read spec file: {exc}")
    if cap is not None:
        model.options.enumeration_cap = cap
    if bruteforce:
        model.options.force_bruteforce = True
    if server:
        document = _fetch(server, "POST", "/report", model)
    else:
        document = _run(service.evaluate_space, model)
    _emit(document, fmt, _render_report)


def _render_report(doc: dict):
    r = doc["ranks"]
    click.echo(
        f"ranks: real(g)={r['real_g']} real(h)={r['real_h']} "
        f"ahyp(g)={r['ahyp_g']} ahyp(h)={r['ahyp_h']}"
    )
    hyp = doc["hypotheses"]
    click.echo(
        f"hypotheses: strongly_regular={hyp['strongly_regular']} "
        f"h_inner={hyp['h_inner']}"
    )
    click.echo(f"C1 (infinite discontinuous group): {doc['c1']}")
    c2 = doc["c2"]
    line = f"C2 (non-virtually-abelian group): {c2['holds']} [{c2['method']}]"
    click.echo(line)
    if c2["witness_matrix"]:
        click.echo(f"  witness matrix: {c2['witness_matrix']}")
    c3 = doc["c3"]
    click.echo(f"C3 (proper SL(2,R) action): {c3['status']}")
    if c3.get("witness_vector"):
        click.echo(f"  witness semisimple element: {c3['witness_vector']}")
    click.echo(f"timing: {doc['timing_ms']} ms")


@main.command()
@click.argument("name")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--server", default=None)
def ranks(name, fmt, server):
    """Rank profile (real and a-hyperbolic rank) of a named real form."""
    if server:
        document = _fetch(server, "GET", f"/ranks/{name}")
    else:
        document = _run(service.rank_profile_response, name)
    _emit(
        document,
        fmt,
        lambda d: click.echo(
            f"{d['name']}: restricted {d['restricted_type']}, "
            f"real rank {d['real_rank']}, a-hyperbolic rank {d['ahyp_rank']}, "
            f"inner={d['inner']}"
        ),
    )


@main.command()
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--server", default=None)
def table1(fmt, server):
    """Reproduce the rank table of simple algebras with differing ranks."""
    if server:
        document = _fetch(server, "GET", "/table1")
    else:
        document = _run(service.table1_response)
    def render(d):
        for row in d["rows"]:
            click.echo(
                f"{row['name']}: ahyp {row['ahyp_rank']} real {row['real_rank']} "
                f"{'ok' if row['ok'] else 'MISMATCH'}"
            )
        click.echo(
            f"checked {d['checked']} catalog entries; "
            + ("all consistent" if d["ok"] else f"failures: {d['failures']}")
        )
    _emit(document, fmt, render)
    _exit_unless(document, "ok")


@main.command(name="appendix-so44")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--server", default=None)
def appendix_so44(fmt, server):
    """Run the full SO(4,4)/U verification suite."""
    if server:
        document = _fetch(server, "GET", "/appendix-so44")
    else:
        document = _run(service.appendix_response)
    def render(d):
        r = d["ranks"]
        click.echo(
            f"so(4,4): real {r['real_g']} ahyp {r['ahyp_g']}; "
            f"u: real {r['real_h']} ahyp {r['ahyp_h']}"
        )
        click.echo(f"strong regularity: {d['strongly_regular']}")
        click.echo(f"semisimple-element table verified: {d['table_ok']}")
        click.echo(f"C2: {d['c2']}  C3: {d['c3']} (every sl(2,R) refuted: {d['sl2_refuted']})")
    _emit(document, fmt, render)
    ok = (lambda d: d["table_ok"] and d["sl2_refuted"])(
        document if isinstance(document, dict) else json.loads(document.model_dump_json())
    )
    if not ok:
        sys.exit(EXIT_INTERNAL)


@main.command(name="catalog-verify")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--server", default=None)
def catalog_verify(fmt, server):
    """Check strong regularity of the built-in classified space families."""
    if server:
        document = _fetch(server, "GET", "/catalog-verify")
    else:
        document = _run(service.catalog_verify_response)
    def render(d):
        for row in d["rows"]:
            status = "ok" if row["ok"] else "FAIL"
            click.echo(f"{row['label']}: {status} ({', '.join(row['components']) or 'trivial'})")
        click.echo("all verified" if d["ok"] else "failures present")
    _emit(document, fmt, render)
    _exit_unless(document, "ok")


def _exit_unless(document, key):
    payload = (
        document
        if isinstance(document, dict)
        else json.loads(document.model_dump_json())
    )
    if not payload[key]:
        sys.exit(EXIT_INTERNAL)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run(service.app, host=host, port=port)


if __name__ == "__main__":
    main()
