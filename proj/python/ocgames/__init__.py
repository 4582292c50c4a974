# Copyright 2026 The ocgames Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Two-player games on succinct one-counter graphs.

Games, verdicts and reports are plain dicts in the JSON interchange format
used by the ``ocg`` command-line tool; big integers are decimal strings.
"""

import json

from . import _core
from ._core import FormatError, PreconditionError, default_seed

__all__ = [
    "FormatError",
    "PreconditionError",
    "analyze_gn",
    "certify",
    "check_equiv",
    "default_seed",
    "experiment_gn",
    "gen_gn",
    "gen_random",
    "gn_manifest",
    "solve",
    "transform",
    "validate",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _opt_int(v):
    return None if v is None else str(v)


def validate(game):
    """List of violations; empty when the game and objective are well formed."""
    return json.loads(_core.validate(_text(game)))


def solve(game, initial_half_width=None, max_half_width=4096, growth=2, time_limit_ms=None, concurrent=True):
    """Verdict dict: {"verdict": "eve"|"adam"|"unknown", "window", "strategy"}."""
    return json.loads(
        _core.solve(_text(game), _opt_int(initial_half_width), str(max_half_width), growth, time_limit_ms, concurrent)
    )


def certify(game, verdict):
    """(ok, detail) for a decided verdict."""
    return _core.certify(_text(game), _text(verdict))


def transform(game, passes):
    """(instance, reports) after applying the named passes left to right."""
    if isinstance(passes, str):
        passes = [p for p in passes.split(",") if p]
    instance, reports = _core.transform(_text(game), list(passes))
    return json.loads(instance), json.loads(reports)


def gen_gn(n):
    return json.loads(_core.gen_gn(n))


def gn_manifest(n):
    return json.loads(_core.gn_manifest(n))


def gen_random(seed=default_seed, states=4, max_weight=4, zero_density=0.3, objective="reach", target=0):
    return json.loads(_core.gen_random(seed, states, max_weight, zero_density, objective, target))


def analyze_gn(n, peak=False, peak_limit=4096):
    return json.loads(_core.analyze_gn(n, peak, str(peak_limit)))


def check_equiv(pass_name="dezero", count=200, seed=default_seed, states=4, max_weight=4, zero_density=0.3,
                half_width=64, jobs=0):
    return json.loads(
        _core.check_equiv(pass_name, count, seed, states, max_weight, zero_density, str(half_width), jobs)
    )


def experiment_gn(start=1, stop=16, peak_max_n=3, peak_limit=4096):
    return json.loads(_core.experiment_gn(start, stop, peak_max_n, str(peak_limit)))
