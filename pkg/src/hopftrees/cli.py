"""Batch command surface: a thin client over the FastAPI service.

By default requests run against an in-process app instance; ``--server``
points the same commands at a remote deployment.  Exit codes: 0 success,
1 usage or parse error, 2 degree cap exceeded, 3 verification failure.
"""

from __future__ import annotations

import json
import sys

import click

EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


class Client:
    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        resp = self._client.post(path, json=payload)
        try:
            body = resp.json()
        except ValueError:
            body = {"detail": resp.text}
        return resp.status_code, body


def _fail(body: dict, status: int) -> None:
    detail = body.get("detail", body)
    click.echo(f"error: {detail}", err=True)
    sys.exit(EXIT_CAP if status == 422 else EXIT_USAGE)


@click.group()
@click.option("--server", default=None, help="Base URL of a running service (default: in-process).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def main(ctx: click.Context, server: str | None, fmt: str) -> None:
    """Exact engine for the Hopf algebras of planar trees, Stirling
    permutations and parking functions."""
    ctx.obj = {"client": Client(server), "format": fmt}


@main.command()
@click.argument("kind")
@click.argument("degree", type=int)
@click.option("--count-only", is_flag=True)
@click.pass_obj
def enumerate(obj: dict, kind: str, degree: int, count_only: bool) -> None:
    """List (or count) all objects of one family and degree."""
    status, body = obj["client"].post(
        "/enumerate", {"kind": kind, "degree": degree, "count_only": count_only}
    )
    if status != 200:
        _fail(body, status)
    if obj["format"] == "json":
        click.echo(json.dumps(body, sort_keys=True))
    elif count_only:
        click.echo(str(body["count"]))
    else:
        for item in body["items"]:
            click.echo(item["text"])


@main.command()
@click.argument("kind")
@click.argument("text")
@click.pass_obj
def parse(obj: dict, kind: str, text: str) -> None:
    """Validate an object and echo its canonical form."""
    status, body = obj["client"].post("/parse", {"kind": kind, "text": text})
    if status != 200:
        _fail(body, status)
    if obj["format"] == "json":
        click.echo(json.dumps(body, sort_keys=True))
    else:
        click.echo(body["text"])


def _echo_element(fmt: str, body: dict) -> None:
    if fmt == "json":
        click.echo(json.dumps(body, sort_keys=True))
        return
    terms = body["terms"]
    if not terms:
        click.echo("0")
        return
    parts = []
    for t in terms:
        key = t["key"]
        key_text = " (x) ".join(key) if isinstance(key, list) else key
        coef = t["coef"]
        parts.append(f"{coef}*[{key_text}]")
    click.echo(" + ".join(parts))


@main.command()
@click.argument("algebra")
@click.argument("basis")
@click.argument("operation")
@click.argument("operands", nargs=-1)
@click.option("--to", "target_basis", default=None, help="Target basis for tobasis.")
@click.option("--which", default=None, help="Dendriform piece: <<, >>, dll or dgg.")
@click.pass_obj
def op(obj, algebra, basis, operation, operands, target_basis, which) -> None:
    """Apply an algebra operation to operand texts.

    Operations: product, coproduct, antipode, tobasis, dualproduct,
    dendriform.  Use -- before operands that start with '('.
    """
    payload = {
        "algebra": algebra,
        "basis": basis,
        "operation": operation,
        "operands": list(operands),
        "target_basis": target_basis,
        "which": which,
    }
    status, body = obj["client"].post("/op", payload)
    if status != 200:
        _fail(body, status)
    _echo_element(obj["format"], body)


@main.command()
@click.argument("order")
@click.argument("query")
@click.argument("args", nargs=-1)
@click.pass_obj
def order(obj, order, query, args) -> None:
    """Query a partial order.

    Queries: leq X Y, covers X, join X Y, meet X Y, mobius X Y,
    interval X Y, components N, hasse N, covers-list N.
    """
    payload: dict = {"order": order, "query": query}
    if query in ("components", "hasse", "covers-list"):
        if len(args) != 1:
            click.echo("error: this query takes a degree", err=True)
            sys.exit(EXIT_USAGE)
        payload["degree"] = int(args[0])
    elif query == "covers":
        if len(args) != 1:
            click.echo("error: covers takes one object", err=True)
            sys.exit(EXIT_USAGE)
        payload["x"] = args[0]
    else:
        if len(args) != 2:
            click.echo(f"error: {query} takes two objects", err=True)
            sys.exit(EXIT_USAGE)
        payload["x"], payload["y"] = args
    status, body = obj["client"].post("/order", payload)
    if status != 200:
        _fail(body, status)
    if obj["format"] == "json":
        click.echo(json.dumps(body, sort_keys=True))
        return
    if query == "leq":
        click.echo("true" if body["result"] else "false")
    elif query == "covers":
        for c in body["covers"]:
            click.echo(c)
    elif query in ("join", "meet"):
        click.echo(body["result"] if body["result"] is not None else "none")
    elif query == "mobius":
        click.echo(str(body["value"]))
    elif query == "interval":
        for c in body["items"]:
            click.echo(c)
    elif query == "components":
        for comp in body["components"]:
            click.echo(" ".join(comp))
    elif query == "hasse":
        click.echo(body["dot"], nl=False)
    elif query == "covers-list":
        for a, b in body["covers"]:
            click.echo(f"{a} -> {b}")


@main.command()
@click.argument("suite")
@click.option("--max-degree", type=int, default=4)
@click.option("--jobs", type=int, default=1)
@click.pass_obj
def verify(obj, suite, max_degree, jobs) -> None:
    """Run a verification suite and report pass/fail per check."""
    status, body = obj["client"].post(
        "/verify", {"suite": suite, "max_degree": max_degree, "jobs": jobs}
    )
    if status != 200:
        _fail(body, status)
    if obj["format"] == "json":
        click.echo(json.dumps(body, sort_keys=True))
    else:
        for entry in body["report"]:
            line = f"{entry['status']:4s}  {entry['check']} (degree {entry['degree']})"
            if entry.get("witness"):
                line += f"  witness: {entry['witness']}"
            click.echo(line)
        click.echo(f"{'PASS' if body['passed'] else 'FAIL'}: {suite} at max degree {max_degree}")
    if not body["passed"]:
        sys.exit(EXIT_VERIFY)


if __name__ == "__main__":
    main()
