"""Command-line front end.

Exit codes: 0 success, 1 verification/benchmark failure, 2 usage or
validation error.
"""

from __future__ import annotations

import json
import os
import statistics
import sys
import tempfile
import time

import click

from cycgap import blockgap, cyclotomic, numtheory
from cycgap.errors import CycgapError
from cycgap.intpoly import format_poly

QUERY_CAP = 200_000
SWEEP_CAP = 5_000


def _validated(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except CycgapError as exc:
        raise click.UsageError(f"{type(exc).__name__}: {exc}")


@click.group()
def main():
    """Cyclotomic polynomials, block structure, and maximum exponent gaps."""


def _n_argument(fn):
    return click.argument("n", type=click.IntRange(1, QUERY_CAP))(fn)


@main.command()
@_n_argument
def phi(n):
    """Print the n-th cyclotomic polynomial."""
    click.echo(format_poly(_validated(cyclotomic.phi_poly_oracle, n)))


@main.command()
@_n_argument
def psi(n):
    """Print the n-th inverse cyclotomic polynomial."""
    click.echo(format_poly(_validated(cyclotomic.psi_poly, n)))


@main.command()
@_n_argument
def gap(n):
    """Print the maximum gap of the n-th cyclotomic polynomial."""
    click.echo(f"g(Phi_{n}) = {_validated(cyclotomic.gap_phi, n)}")


@main.command()
@click.argument("m", type=int)
@click.argument("p", type=int)
@click.option(
    "--show",
    nargs=2,
    type=int,
    default=None,
    help="Print only the block at position (i, j); j = q addresses the r-block.",
)
def blocks(m, p, show):
    """Show the block decomposition and gap tables of Phi_{m*p}."""
    params = _validated(blockgap.make_params, m, p)
    if show is not None:
        i, j = show
        if not 0 <= i < params.phi_m or not 0 <= j <= params.q:
            raise click.UsageError(
                f"block position ({i}, {j}) outside the "
                f"{params.phi_m} x {params.q + 1} grid"
            )
        rep = blockgap.representative_block(params, i)
        block = rep.truncate(params.r) if j == params.q else rep
        click.echo(f"f[{i},{j}] = {format_poly(block)}")
        return
    click.echo(
        f"m={params.m} p={params.p} phi(m)={params.phi_m} psi(m)={params.psi_m} "
        f"q={params.q} r={params.r}"
    )
    for i in range(params.phi_m):
        rep = blockgap.representative_block(params, i)
        click.echo(f"f[{i},0] = {format_poly(rep)}")
        click.echo(f"f[{i},{params.q}] = {format_poly(rep.truncate(params.r))}")
    report = blockgap.block_gap_report(params)
    for name, table in (
        ("gw_m", report.gw_m),
        ("gw_r", report.gw_r),
        ("gb_m", report.gb_m),
        ("gb_r", report.gb_r),
        ("gb_p", report.gb_p),
    ):
        click.echo(f"{name} = {list(table)}")
    click.echo(
        f"g(Phi_{params.m * params.p}) = {report.gap} "
        f"(witness exponents {report.witness[0]}, {report.witness[1]})"
    )


def _parse_m_list(m, m_list):
    if (m is None) == (m_list is None):
        raise click.UsageError("exactly one of --m and --m-list is required")
    if m is not None:
        return [m]
    try:
        return [int(part) for part in m_list.split(",") if part]
    except ValueError:
        raise click.UsageError(f"--m-list must be comma-separated integers, got {m_list!r}")


@main.command()
@click.option("--m", "m", type=int, default=None, help="Single m to verify.")
@click.option("--m-list", "m_list", default=None, help="Comma-separated list of m values.")
@click.option("--p-max", "p_max", type=int, required=True, help="Check every prime m < p <= p-max.")
@click.option("--report", "report_format", type=click.Choice(["text", "json"]), default="text")
def verify(m, m_list, p_max, report_format):
    """Run the full per-instance check suite over a range of (m, p) pairs."""
    ms = _parse_m_list(m, m_list)
    results = []
    failures = 0
    for m_val in ms:
        for p in range(m_val + 1, p_max + 1):
            if not numtheory.is_prime(p):
                continue
            params = _validated(blockgap.make_params, m_val, p)
            report = blockgap.verify_instance(params)
            gap_val = blockgap.max_gap_via_blocks(params)
            results.append((params, report, gap_val))
            if not report.all_passed:
                failures += 1
    if report_format == "json":
        payload = {
            "all_passed": failures == 0,
            "results": [
                {
                    "m": params.m,
                    "p": params.p,
                    "gap": gap_val,
                    "phi_m": params.phi_m,
                    "checks": {c.name: c.passed for c in report.checks},
                    "counterexamples": {
                        c.name: c.detail for c in report.failed()
                    },
                }
                for params, report, gap_val in results
            ],
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for params, report, gap_val in results:
            passed = sum(c.passed for c in report.checks)
            status = "PASS" if report.all_passed else "FAIL"
            line = (
                f"m={params.m} p={params.p} gap={gap_val} phi(m)={params.phi_m} "
                f"checks={passed}/{len(report.checks)} {status}"
            )
            click.echo(line)
            for c in report.failed():
                click.echo(f"  {c.name}: {c.detail}")
        click.echo(
            f"{len(results)} instances, {len(results) - failures} passed, {failures} failed"
        )
    if failures:
        sys.exit(1)


def _write_rows(out_path, header, rows):
    # Whole file goes to a temp sibling first so failures leave nothing behind.
    out_dir = os.path.dirname(os.path.abspath(out_path))
    fd, tmp_path = tempfile.mkstemp(dir=out_dir, prefix=".sweep-")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(str(v) for v in row) + "\n")
        os.replace(tmp_path, out_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


@main.command()
@click.option("--max", "max_n", type=int, default=None, help="Sweep n = 1 .. max.")
@click.option(
    "--filter",
    "filter_name",
    type=click.Choice(["all", "odd-squarefree"]),
    default="all",
)
@click.option("--fixed-m", "fixed_m", type=int, default=None, help="Sweep n = m*p for this m.")
@click.option("--p-max", "p_max", type=int, default=None, help="Prime bound for --fixed-m.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--unsafe-cap", is_flag=True, help="Lift the default sweep bound.")
def sweep(max_n, filter_name, fixed_m, p_max, out_path, unsafe_cap):
    """Write gap data as CSV: all n, odd square-free n, or n = m*p for fixed m."""
    if (max_n is None) == (fixed_m is None):
        raise click.UsageError("exactly one of --max and --fixed-m is required")
    try:
        if fixed_m is not None:
            if p_max is None:
                raise click.UsageError("--fixed-m requires --p-max")
            if not unsafe_cap and fixed_m * p_max > QUERY_CAP:
                raise click.UsageError(
                    f"m * p-max = {fixed_m * p_max} exceeds {QUERY_CAP}; pass --unsafe-cap"
                )
            _validated(blockgap.make_params, fixed_m, _next_prime_above(fixed_m))
            rows = []
            for p in range(fixed_m + 1, p_max + 1):
                if not numtheory.is_prime(p):
                    continue
                params = blockgap.make_params(fixed_m, p)
                rows.append(
                    (
                        fixed_m,
                        p,
                        fixed_m * p,
                        blockgap.max_gap_via_blocks(params),
                        params.phi_m,
                    )
                )
            _write_rows(out_path, ("m", "p", "n", "gap", "phi_m"), rows)
        else:
            if max_n < 1:
                raise click.UsageError("--max must be >= 1")
            if max_n > SWEEP_CAP and not unsafe_cap:
                raise click.UsageError(
                    f"--max {max_n} exceeds the sweep cap {SWEEP_CAP}; pass --unsafe-cap"
                )
            rows = []
            for n in range(1, max_n + 1):
                odd = n % 2 == 1
                squarefree = numtheory.is_squarefree(n)
                if filter_name == "odd-squarefree" and not (odd and squarefree):
                    continue
                rows.append(
                    (
                        n,
                        cyclotomic.gap_phi(n),
                        int(squarefree),
                        int(odd),
                        numtheory.radical(n),
                    )
                )
            _write_rows(out_path, ("n", "gap", "is_squarefree", "is_odd", "radical"), rows)
    except OSError as exc:
        raise click.UsageError(f"cannot write {out_path}: {exc}")


def _next_prime_above(m):
    p = m + 1
    while not numtheory.is_prime(p):
        p += 1
    return p


@main.command()
@click.argument("m", type=int)
@click.argument("p", type=int)
@click.option("--reps", type=click.IntRange(min=1), default=5, show_default=True)
def bench(m, p, reps):
    """Time the oracle against the block construction of Phi_{m*p}.

    Output equality is asserted; the speedup ratio is informational.
    """
    params = _validated(blockgap.make_params, m, p)
    n = m * p
    oracle_times, block_times = [], []
    oracle_poly = block_poly = None
    for _ in range(reps):
        cyclotomic.clear_cache()
        start = time.perf_counter()
        oracle_poly = cyclotomic.phi_poly_oracle(n)
        oracle_times.append(time.perf_counter() - start)
        cyclotomic.clear_cache()
        start = time.perf_counter()
        block_poly = blockgap.assemble_phi_mp(params)
        block_times.append(time.perf_counter() - start)
    if oracle_poly != block_poly:
        click.echo("FAIL: oracle and block construction disagree", err=True)
        sys.exit(1)
    oracle_med = statistics.median(oracle_times)
    block_med = statistics.median(block_times)
    click.echo(f"n = {n}  (m = {m}, p = {p}, reps = {reps})")
    click.echo(f"oracle median: {oracle_med:.6f} s")
    click.echo(f"blocks median: {block_med:.6f} s")
    ratio = oracle_med / block_med if block_med > 0 else float("inf")
    click.echo(f"speedup: {ratio:.2f}x")
    click.echo("outputs equal: yes")


if __name__ == "__main__":
    main()
