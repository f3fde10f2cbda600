"""
Scenarios

Config documents for the bundled preset experiments. Networks only known from drawings are replaced by stand-ins that satisfy the same stated assumptions:

- the 5-agent network is the complete graph K5,
- the 10-agent network is the circulant where agent i reads i+1..i+5 (mod 10),
- the two dynamic networks are circulants with offsets (1, 2, 3, 4) and (2, 3, 5, 7), switching after round 10,
- the stubborn-attacker comparison uses a 5-agent wheel with the attacker at the hub.

Agent ids are zero-based. All preset documents go through the same `parse_config` path as user files.
"""

### --- INITIAL STATES --- ###
X5 = [1.0, 0.0, 3.0, 1.2, 2.5]
X10 = [1.0, 0.0, 3.0, 1.2, 2.5, 0.5, 2.2, 1.7, 0.8, 2.9]

### --- NETWORKS --- ###
K5 = {"generator": "complete", "n": 5}
K4 = {"generator": "complete", "n": 4}
WHEEL5 = {"generator": "wheel", "n": 5}
CIRCULANT10 = {"generator": "circulant", "n": 10, "offsets": [1, 2, 3, 4, 5]}
DYNAMIC10 = {
    "pieces": [
        {"from": 0, "graph": {"generator": "circulant", "n": 10, "offsets": [1, 2, 3, 4]}},
        {"from": 11, "graph": {"generator": "circulant", "n": 10, "offsets": [2, 3, 5, 7]}},
    ]
}

### --- PRESETS --- ###
SCENARIOS: dict[str, dict] = {
    "no_attack": {
        "name": "no_attack",
        "graph": K5,
        "x0": X5,
    },
    "near_consensus_attacker": {
        "name": "near_consensus_attacker",
        "graph": K5,
        "x0": X5,
        "attack": {"units": "raw", "strategies": [{"agent": 0, "kind": "constant", "value": 1.65}]},
    },
    "two_attackers_same_side": {
        "name": "two_attackers_same_side",
        "graph": CIRCULANT10,
        "x0": X10,
        "f": 2,
        "attack": {
            "strategies": [
                {"agent": 0, "kind": "constant", "value": 0.1},
                {"agent": 7, "kind": "constant", "value": 0.25},
            ]
        },
    },
    "two_attackers_opposite": {
        "name": "two_attackers_opposite",
        "graph": CIRCULANT10,
        "x0": X10,
        "f": 2,
        "attack": {
            "strategies": [
                {"agent": 0, "kind": "constant", "value": 0.1},
                {"agent": 7, "kind": "constant", "value": 0.9},
            ]
        },
    },
    "async": {
        "name": "async",
        "graph": K5,
        "x0": X5,
        "attack": {"strategies": [{"agent": 0, "kind": "constant", "value": 0.9}]},
        "scheduler": {"kind": "async_random_subset", "min_active": 3},
        "round_cap": 3000,
    },
    "dynamic": {
        "name": "dynamic",
        "schedule": DYNAMIC10,
        "x0": X10,
        "attack": {"strategies": [{"agent": 0, "kind": "constant", "value": 0.9}]},
    },
    "dynamic_noisy": {
        "name": "dynamic_noisy",
        "schedule": DYNAMIC10,
        "x0": X10,
        "f": 2,
        "attack": {
            "strategies": [
                {"agent": 0, "kind": "uniform", "mean": 0.3, "half_width": 0.1},
                {"agent": 7, "kind": "constant", "value": 0.2},
            ]
        },
    },
    "stochastic": {
        "name": "stochastic",
        "graph": K5,
        "x0": X5,
        "attack": {"strategies": [{"agent": 0, "kind": "constant", "value": 0.9}]},
        "scheduler": {"kind": "stochastic_edges", "edge_prob": 0.9},
        "round_cap": 3000,
    },
    "vs_baseline_k4": {
        "name": "vs_baseline_k4",
        "graph": K4,
        "x0": [0.5, 0.0, 1.0, 0.2],
        "attack": {"strategies": [{"agent": 0, "kind": "constant", "value": 0.9}]},
    },
    "vs_baseline_stubborn": {
        "name": "vs_baseline_stubborn",
        "graph": WHEEL5,
        "x0": [0.5, 0.0, 1.0, 0.2, 0.9],
        "attack": {"strategies": [{"agent": 0, "kind": "constant", "value": 0.7}]},
    },
    "error_sweep": {
        "name": "error_sweep",
        "graph": K5,
        "x0": X5,
        "attack": {"units": "raw", "strategies": [{"agent": 0, "kind": "gaussian", "mu": 0.5, "sigma": 0.5}]},
    },
}

BASELINE_PRESETS = frozenset({"vs_baseline_k4", "vs_baseline_stubborn"})
SWEEP_PRESETS = frozenset({"error_sweep"})
