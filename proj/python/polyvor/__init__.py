"""Polyhedral-norm Voronoi geometry of hypersurfaces.

Every function takes a problem as a dict, a JSON string, or a path to a
JSON file, and returns the same JSON document the command-line tool prints.
"""

from __future__ import annotations

import json
import os
from typing import Any, Iterable, Optional, Union

from ._core import (
    BallError,
    NoVarietyPointsError,
    OffVarietyError,
    OracleFailure,
    ProblemError,
    SingularPointError,
)
from ._core import run as _run

__all__ = [
    "BallError",
    "NoVarietyPointsError",
    "OffVarietyError",
    "OracleFailure",
    "ProblemError",
    "SingularPointError",
    "ball_info",
    "distance",
    "medial",
    "render",
    "run",
    "stratify",
    "type_of",
    "voronoi_cone",
]

Problem = Union[dict, str, os.PathLike]


def _problem_text(problem: Problem) -> str:
    if isinstance(problem, dict):
        return json.dumps(problem)
    if isinstance(problem, os.PathLike) or (isinstance(problem, str) and not problem.lstrip().startswith("{")):
        with open(problem, encoding="utf-8") as f:
            return f.read()
    return problem


def _point_text(point: Union[str, Iterable[Any]]) -> str:
    if isinstance(point, str):
        return point
    return ",".join(str(c) for c in point)


def run(command: str, problem: Problem, *, seed: Optional[int] = None,
        points: Optional[Iterable[Any]] = None, svg: bool = False) -> dict:
    """Runs a command by name. With svg=True the drawing is returned under the "svg" key."""
    text, drawing = _run(command, _problem_text(problem), seed,
                         [_point_text(p) for p in points or []], svg)
    out = json.loads(text)
    if svg:
        out["svg"] = drawing
    return out


def ball_info(problem: Problem) -> dict:
    return run("ball-info", problem)


def type_of(problem: Problem, points=None) -> dict:
    return run("type", problem, points=points)


def voronoi_cone(problem: Problem, points=None) -> dict:
    return run("voronoi-cone", problem, points=points)


def stratify(problem: Problem, seed: Optional[int] = None, svg: bool = False) -> dict:
    return run("stratify", problem, seed=seed, svg=svg)


def medial(problem: Problem, seed: Optional[int] = None, svg: bool = False) -> dict:
    return run("medial", problem, seed=seed, svg=svg)


def distance(problem: Problem, points=None, seed: Optional[int] = None) -> dict:
    return run("distance", problem, seed=seed, points=points)


def render(problem: Problem, seed: Optional[int] = None) -> str:
    return run("render", problem, seed=seed, svg=True)["svg"]
