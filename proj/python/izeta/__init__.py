"""Exact zeta functions of polynomials from embedded-resolution data.

The compiled core exposes one batch entry point, ``run``, accepting the
same job description as the command-line tool; this package wraps it in
typed conveniences that parse the machine-readable report.  Exact
integer results from the arc-counting oracle are returned as Python
integers of arbitrary size.
"""

import json as _json

from ._izeta import (  # noqa: F401
    BudgetError,
    Error,
    InputError,
    __version__,
    count_jets,
    gf_generators,
    run,
    twisted_tally,
)

__all__ = [
    "BudgetError",
    "Error",
    "InputError",
    "__version__",
    "count_jets",
    "gf_generators",
    "run",
    "twisted_tally",
    "report",
    "motivic_zeta",
    "topological_zeta",
    "padic_zeta",
    "spectrum",
    "functional_equation",
    "oracle_counts",
]


def report(**job):
    """Run a job and return the parsed machine-readable report.

    Keyword arguments mirror the command-line flags: ``poly``,
    ``resolution``, ``region``, ``characters``, ``motivic``,
    ``topological``, ``padic``, ``spectrum``, ``functional_equation``,
    ``oracle``, ``q``, ``d``, ``depth``, ``jet_budget``,
    ``blowup_budget``.  Raises ``ValueError`` on invalid input and
    ``RuntimeError`` on budget exhaustion; a failed mathematical check
    is reported in the returned document, not raised.
    """
    job["format"] = "json"
    code, out, err = run(job)
    if code == 2:
        raise ValueError(err.strip() or "invalid job")
    if code == 3:
        raise BudgetError(err.strip() or "budget exhausted")
    return _json.loads(out)


def _rows(doc, kind):
    return [row for row in doc["results"] if row["kind"] == kind]


def motivic_zeta(poly, region="whole-space", character="0/1"):
    """The exact zeta function of ``poly``, rendered canonically."""
    doc = report(poly=poly, region=region, characters=[character], motivic=True)
    return _rows(doc, "motivic")[0]["zeta"]


def topological_zeta(poly, region="whole-space", character="0/1"):
    """The topological specialization, as a rational function of s."""
    doc = report(poly=poly, region=region, characters=[character],
                 topological=True)
    return _rows(doc, "topological")[0]["zeta"]


def padic_zeta(poly, q, region="whole-space", character="0/1"):
    """The point-count specialization at the prime power q."""
    doc = report(poly=poly, region=region, characters=[character], padic=q)
    return _rows(doc, "padic")[0]["zeta"]


def spectrum(poly):
    """The spectrum at the origin: a dict {exponent: multiplicity}."""
    doc = report(poly=poly, region="origin", spectrum=True)
    terms = _rows(doc, "spectrum")[0]["spectrum"]
    return {expo: int(mult) for expo, mult in terms.items()}


def functional_equation(poly, r, character="0/1"):
    """Whether the degree-r homogeneous duality identity holds."""
    doc = report(poly=poly, characters=[character], functional_equation=r)
    return bool(_rows(doc, "functional-equation")[0]["ok"])


def oracle_counts(poly, q, depth, d=1, region="whole-space"):
    """Jet counts (and tallies) for contact orders n = 0..depth."""
    doc = report(oracle=poly, q=q, d=d, depth=depth, region=region)
    rows = _rows(doc, "oracle")[0]["reports"]
    return [
        {
            "n": row["n"],
            "count": int(row["count"]),
            "tallies": [int(t) for t in row["tallies"]],
            "generator": row["generator"],
        }
        for row in rows
    ]
