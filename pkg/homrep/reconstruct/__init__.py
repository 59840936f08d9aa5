from homrep.reconstruct.pipeline import (
    build_target,
    degree_bound,
    find_max_degree_site,
    heldout_graphs,
    normalize,
    reconstruct,
    snap,
    verify,
)

__all__ = [
    "build_target", "degree_bound", "find_max_degree_site", "heldout_graphs", "normalize", "reconstruct", "snap",
    "verify",
]
