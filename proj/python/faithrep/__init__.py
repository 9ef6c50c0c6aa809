"""Minimal faithful representations of groups over finite chain rings."""

from ._faithrep import (
    FaithrepError,
    affine_formula,
    catalog_summary,
    character_table,
    construct_affine,
    construct_heisenberg,
    construct_two_step,
    describe_ring,
    heisenberg_formula,
    oracle_minfaith,
    run_cli,
    solve_heisenberg,
    two_step_formula,
    unitriangular_formula,
    verify,
)

__all__ = [
    "FaithrepError",
    "affine_formula",
    "catalog_summary",
    "character_table",
    "construct_affine",
    "construct_heisenberg",
    "construct_two_step",
    "describe_ring",
    "heisenberg_formula",
    "oracle_minfaith",
    "run_cli",
    "solve_heisenberg",
    "two_step_formula",
    "unitriangular_formula",
    "verify",
]
