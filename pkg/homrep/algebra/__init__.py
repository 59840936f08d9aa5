from homrep.algebra.algebra_rep import AlgebraRep, build_algebra
from homrep.algebra.claims import claim_names, run_claims
from homrep.algebra.idempotents import IdempotentBasis, idempotent_basis, resolves
from homrep.algebra.quantum import QuantumGraph, evaluate, inner, project
from homrep.algebra.tower import AlgebraTower, Resolution, degree

__all__ = [
    "AlgebraRep", "AlgebraTower", "IdempotentBasis", "QuantumGraph", "Resolution", "build_algebra", "degree",
    "claim_names", "evaluate", "idempotent_basis", "inner", "project", "resolves", "run_claims",
]
