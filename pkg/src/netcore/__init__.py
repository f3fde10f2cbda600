"""
Network Core Package

This package contains the directed-graph model of the agent network: static topologies and their generators, time-varying schedules, and the structural assumption checks.
"""

from .assumptions import AssumptionReport, check_topology, validate_assumptions
from .schedule import SchedulePiece, TopologySchedule, load_schedule, schedule_to_dict
from .topology import (
    Topology,
    load_topology,
    make_circulant,
    make_complete,
    make_random_strongly_connected,
    make_wheel,
    neighbors,
    proper_neighbors,
    topology_to_dict,
)

__all__ = [
    "AssumptionReport",
    "SchedulePiece",
    "Topology",
    "TopologySchedule",
    "check_topology",
    "load_schedule",
    "load_topology",
    "make_circulant",
    "make_complete",
    "make_random_strongly_connected",
    "make_wheel",
    "neighbors",
    "proper_neighbors",
    "schedule_to_dict",
    "topology_to_dict",
    "validate_assumptions",
]
