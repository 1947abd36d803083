"""CSV/JSON serialization for wavefunctions, spectra, and reports.

Files are written atomically (temp file in the target directory, then
rename), so a crashed run never leaves a half-written artifact behind.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .grids import SampledFunction

__all__ = [
    "atomic_write_text",
    "wavefunction_record",
    "wavefunction_csv_text",
    "write_json",
    "read_json",
    "format_energies",
]


def atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def wavefunction_record(
    model_id: str,
    params: dict,
    n: int,
    energy: float,
    psi: SampledFunction,
    **metadata,
) -> dict:
    """JSON-ready record {model, params, n, energy, grid, values, ...}."""
    return {
        "model": model_id,
        "params": params,
        "n": n,
        "energy": energy,
        "grid": {
            "x_min": psi.grid.x_min,
            "x_max": psi.grid.x_max,
            "n_points": psi.grid.n_points,
        },
        "values": psi.values.tolist(),
        **metadata,
    }


def wavefunction_csv_text(psi: SampledFunction, metadata: dict | None = None) -> str:
    """Two-column CSV (x, psi) with '#'-prefixed metadata header lines."""
    lines = []
    for key, value in (metadata or {}).items():
        lines.append(f"# {key}: {value}")
    lines.append("x,psi")
    x = psi.grid.x
    for xi, vi in zip(x, psi.values):
        lines.append(f"{xi:.12g},{vi:.12g}")
    return "\n".join(lines) + "\n"


def write_json(path: str, payload: dict) -> None:
    atomic_write_text(path, json.dumps(payload, indent=2) + "\n")


def read_json(path: str) -> dict:
    with open(path) as handle:
        return json.load(handle)


def format_energies(energies) -> str:
    return "  ".join(f"{e:.12g}" for e in np.asarray(energies, dtype=float))
