from vknot.core.config_manager import Config
from vknot.gauss.diagram import Diagram
from vknot.helpers.lcg import Lcg
from vknot.helpers.logger import LOGGER
from vknot.moves.reidemeister import MoveFamily, RMoveSpec, apply_move, enumerate_sites

logger = LOGGER(__name__)


def random_walk(
    d: Diagram,
    steps: int,
    seed: int,
    families: list[MoveFamily] | None = None,
) -> tuple[Diagram, list[RMoveSpec]]:
    """Apply `steps` seeded moves: a family uniformly among those with sites, then a site."""
    rng = Lcg(seed)
    pool = [MoveFamily(f) for f in (families if families is not None else Config.WALK_FAMILIES)]
    log: list[RMoveSpec] = []
    for _ in range(steps):
        sites = {f: enumerate_sites(d, f) for f in pool}
        available = [f for f in pool if sites[f]]
        if not available:
            logger.debug("random walk stopped early: no applicable move")
            break
        mv = rng.choice(sites[rng.choice(available)])
        d = apply_move(d, mv)
        log.append(mv)
    return d, log
