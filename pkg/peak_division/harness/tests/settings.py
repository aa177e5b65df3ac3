import json
import os
import tempfile

THREE_AGENT_ALLOCATE = {
    "command": "allocate",
    "economy": {"l": 2, "omega": [12, 15], "n": 3},
    "rule": {"rule": "uniform"},
    "peaks": [[2, 2], [4, 7], [8, 4]],
}
THREE_AGENT_ALLOCATION_JSON = [["2/1", "4/1"], ["4/1", "7/1"], ["6/1", "4/1"]]

PROPORTIONAL_CHECK = {
    "command": "check",
    "economy": {"l": 1, "omega": [10], "n": 2},
    "rule": {"rule": "proportional"},
    "axioms": ["strategy-proofness", "same-sidedness", "equal-treatment"],
    "grid": {"step": 1},
}

UNIFORM_CHECK = {
    "command": "check",
    "economy": {"l": 2, "omega": [4, 4], "n": 2},
    "rule": {"rule": "uniform"},
    "grid": {"points": 3},
}

SERIAL_OPTION_BOX = {
    "command": "option-box",
    "economy": {"l": 1, "omega": [10], "n": 2},
    "rule": {"rule": "serial", "orders": [[1, 2]]},
    "agent": 2,
    "others": [[4]],
    "grid": {"step": 1},
}

PROPORTIONAL_DOMINATE = {
    "command": "dominate",
    "economy": {"l": 1, "omega": [10], "n": 2},
    "rules": [{"rule": "proportional"}, {"rule": "uniform"}],
    "grid": {"points": 5},
}

CONSTANT_PUSP = {
    "command": "pusp",
    "economy": {"l": 1, "omega": [10], "n": 2},
    "rule": {"rule": "constant", "allocation": [[5], [5]]},
    "grid": {"points": 5},
}

# peaks written as json decimals
DECIMAL_PEAKS = '{"command": "allocate", "economy": {"l": 2, "omega": [18, 12], "n": 2}, ' \
    '"rule": {"rule": "uniform"}, "peaks": [[13.5, 9], [12, 10.5]]}'


def scenario_file(data, directory):
    fd, path = tempfile.mkstemp(suffix=".json", dir=directory)
    with os.fdopen(fd, "w") as f:
        f.write(data if isinstance(data, str) else json.dumps(data))
    return path
