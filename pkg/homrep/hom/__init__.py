from homrep.hom.elimination import hom_fast
from homrep.hom.hom_engine import (
    connection_decomposition,
    hom,
    hom_pinned,
    load_target,
    pinned_vector,
    random_target,
    read_target,
    write_target,
)
from homrep.models.models import WeightedTarget

__all__ = [
    "WeightedTarget", "connection_decomposition", "hom", "hom_fast", "hom_pinned", "load_target",
    "pinned_vector", "random_target", "read_target", "write_target",
]
