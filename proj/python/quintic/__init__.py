"""Python access to the quintic library and command line."""

import json

from ._quintic import QuinticError
from . import _quintic

__all__ = [
    "QuinticError",
    "CliError",
    "run",
    "classify",
    "rank",
    "matrix",
    "predict",
    "audit",
    "symbol",
    "table",
    "primes",
    "lambda_ramified",
    "power_residue_symbol",
    "norm_residue_symbol",
    "signed_mod25",
]


class CliError(RuntimeError):
    def __init__(self, code, kind, message):
        super().__init__(f"{kind}: {message}")
        self.code = code
        self.kind = kind


def _element(x):
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return x
    return ",".join(str(int(c)) for c in x)


def run(*args, parse=True):
    """Run a quintic subcommand; returns parsed JSON (or raw text)."""
    code, out, _ = _quintic.run_cli([str(a) for a in args])
    if code != 0:
        try:
            err = json.loads(out)["error"]
        except (ValueError, KeyError):
            err = {"kind": "CliError", "message": out.strip()}
        raise CliError(code, err["kind"], err["message"])
    if not parse:
        return out
    return json.loads(out)


def classify(n):
    return json.loads(_quintic.classify_json(str(n)))


def rank(n):
    return run("rank", n)


def matrix(n):
    return run("matrix", n)


def predict(n, mode="theorem"):
    return run("predict", n, "--mode", mode)


def audit(n):
    return run("audit", n)


def symbol(beta, alpha, prime):
    return run("symbol", "--beta", _element(beta), "--alpha", _element(alpha), "--prime", prime)


def table(which, fmt="json"):
    out = run("tables", "--which", which, "--format", fmt, parse=fmt == "json")
    return out


def primes(cls, count):
    return run("primes", "--class", cls, "--count", count)["primes"]


def lambda_ramified(n):
    return _quintic.lambda_ramified(str(n))


def power_residue_symbol(alpha, p, index=0):
    return _quintic.power_residue_symbol(_element(alpha), str(p), index)


def norm_residue_symbol(beta, alpha, p, index=0, seed=1):
    return _quintic.norm_residue_symbol(_element(beta), _element(alpha), str(p), index, seed)


def signed_mod25(r):
    return _quintic.signed_mod25(str(r))
