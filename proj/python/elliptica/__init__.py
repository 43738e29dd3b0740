"""Numerical checks for elliptic R-matrices, exchange functions and structure functions."""

import json as _json

from ._elliptica import (  # noqa: F401
    EllipticParams,
    Error,
    F,
    belavin_w,
    big_F,
    case_study_params,
    f_exchange,
    h_poisson,
    phi,
    qpoch,
    r_matrix,
    run_cli,
    solve_exponent,
    surface_residual,
    tableau_value,
    theta_p,
    w_matrix,
    xi,
)
from . import _elliptica


def verify_gl2(q=0.6, p=0.25, samples=20, seed=7, tol=1e-8):
    """YBE, unitarity, crossing and antisymmetry reports for the eight-vertex matrix."""
    return _json.loads(_elliptica._verify_gl2(complex(q), complex(p), samples, seed, tol))


def verify_glN(xi=0.13 + 0.07j, mu=0.15 + 0.08j, tau=0.05 + 0.35j, n=3, samples=10, seed=7, tol=1e-7):
    return _json.loads(_elliptica._verify_glN(complex(xi), complex(mu), complex(tau), n, samples, seed, tol))


def cli(*args):
    """Run a CLI subcommand; returns (exit_code, parsed_report_or_None, stderr)."""
    code, out, err = run_cli([str(a) for a in args])
    return code, (_json.loads(out) if out.strip().startswith("{") else None), err
