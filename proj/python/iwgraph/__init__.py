"""Exact computations on voltage covers of graphs and their Iwasawa theory.

The compiled core lives in ``iwgraph._core``; ``run`` gives the same reports
as the command-line tool, parsed into dictionaries.
"""

import json
import os

from ._core import *  # noqa: F401,F403
from ._core import ConfigError, PreconditionError, ResourceError, __version__, random_suite_json, run_json


def _config_text(config):
    if isinstance(config, dict):
        return json.dumps(config)
    if isinstance(config, (str, os.PathLike)) and os.path.exists(config):
        with open(config, encoding="utf-8") as fh:
            return fh.read()
    if isinstance(config, str):
        return config
    raise TypeError("config must be a dict, a JSON string or a path")


def run(command, config, *, level=None, max_level=None, probe_level=None):
    """Run a subcommand (``"tower"``, ``"mhg-check"``, ...) and return the report."""
    return json.loads(run_json(command, _config_text(config), level, max_level, probe_level))


def random_suite(command, seed, count=None):
    """Randomized ``check-interpolation`` or ``check-factorization`` run."""
    return json.loads(random_suite_json(command, seed, count))


__all__ = [
    "ConfigError",
    "PreconditionError",
    "ResourceError",
    "__version__",
    "random_suite",
    "run",
]
