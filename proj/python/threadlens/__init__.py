"""Metrics and restructuring for threaded discussions."""

import json
import os

from . import _core
from ._core import (
    ParseError,
    Thread,
    ThreadlensError,
    chronological_coherence,
    hierarchical_reference,
    jaccard,
    population_stddev,
    redundancy_factor,
    shingles,
)

__version__ = _core.__version__

__all__ = [
    "ParseError",
    "Thread",
    "ThreadlensError",
    "analyze",
    "chronological_coherence",
    "detect_duplicates",
    "hierarchical_reference",
    "jaccard",
    "load",
    "population_stddev",
    "redundancy_factor",
    "restructure",
    "shingles",
    "validate",
]


def _text(thread):
    """Accept JSON text, a dict, a path, or a Thread."""
    if isinstance(thread, Thread):
        return thread.to_json()
    if isinstance(thread, dict):
        return json.dumps(thread)
    if isinstance(thread, os.PathLike):
        with open(thread, encoding="utf-8") as f:
            return f.read()
    return thread


def load(path):
    """Read a canonical thread file."""
    with open(path, encoding="utf-8") as f:
        return Thread.from_json(f.read())


def analyze(thread, tau=0.8, k=3, projection="dfs", ideal_order=None):
    """Metrics report as a dict."""
    return json.loads(_core.analyze(_text(thread), tau, k, projection, ideal_order))


def restructure(thread, tau=0.8, k=3, cluster=False, cluster_threshold=0.3, projection="dfs"):
    """Dict with the restructured thread, the plan, and before/after reports."""
    return json.loads(
        _core.restructure(_text(thread), tau, k, cluster, cluster_threshold, projection)
    )


def detect_duplicates(thread, tau=0.8, k=3):
    """List of {"post", "of", "score"} entries."""
    return json.loads(_core.detect_duplicates(_text(thread), tau, k))["duplicates"]


def validate(thread):
    """Warning messages; raises ThreadlensError on structural errors."""
    return _core.validate(_text(thread))
