"""
Defaults

Numeric defaults shared by the protocol, the simulation harness and the configuration layer. All tolerances are in normalized units (states in [0, 1]).
"""

### --- PROTOCOL --- ###
EPSILON = 0.1
F = 1
INCLUDE_SELF_IN_DISCREPANCY = True
FRESH_REPUTATION_IN_UPDATE = True
INCLUDE_SELF_IN_UPDATE = True

### --- HARNESS --- ###
DELTA = 1e-9
STATE_TOL = 1e-6
REP_TOL = 1e-6
DETECTION_HORIZON = 10
ROUND_CAP = 5000
ROUND_CAP_MULTIPLIER = 10
SYNC_STOP_PATIENCE = 1
RANDOM_STOP_PATIENCE = 25
SEED = 0

### --- SWEEP --- ###
SWEEP_REPEATS = 20
DESK_SCALE_MU = (0.0, 0.25, 0.5, 0.75, 1.0)
DESK_SCALE_SIGMA = (0.1, 0.5, 1.0)
FULL_GRID_STEP = 0.005
