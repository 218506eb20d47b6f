#!/usr/bin/env python3
"""Regenerate tests/data/eval_golden.json.

Each golden case pairs an expression with the value obtained from direct
library calls (never from the expression evaluator), so the file pins
evaluator/library coherence. The recipes live next to the acceptance
suite in tests/golden_recipes.py; rerun this after changing the
library's numerics.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import golden_recipes as recipes  # noqa: E402
from braket.serialize import environment_to_json  # noqa: E402


def main():
    envs = recipes.environments()
    cases = [
        {
            "env": env_name,
            "expr": expr,
            "expect": recipes.payload_of(recipes.library_value(expr, envs[env_name])),
        }
        for env_name, expr in recipes.CASES
    ]
    doc = {
        "environments": {name: environment_to_json(env) for name, env in envs.items()},
        "cases": cases,
    }
    recipes.GOLDEN_PATH.parent.mkdir(parents=True, exist_ok=True)
    recipes.GOLDEN_PATH.write_text(json.dumps(doc, indent=1))
    print(f"wrote {recipes.GOLDEN_PATH} with {len(cases)} cases")


if __name__ == "__main__":
    main()
