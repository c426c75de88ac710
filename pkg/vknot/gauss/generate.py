from dataclasses import dataclass

from vknot.gauss.diagram import Diagram, Passage, Role
from vknot.helpers.lcg import Lcg


@dataclass(frozen=True)
class Torus2q:
    q: int
    sign: int = 1


@dataclass(frozen=True)
class VirtualTrefoil:
    pass


@dataclass(frozen=True)
class Hopf:
    sign: int = 1


@dataclass(frozen=True)
class RandomDiagram:
    n: int
    components: int = 1
    seed: int = 0


GeneratorKind = Torus2q | VirtualTrefoil | Hopf | RandomDiagram


def torus_2q(q: int, sign: int = 1) -> Diagram:
    """Closure of the 2-braid sigma_1^q: O1 U2 O3 ... along each strand."""
    if q < 1:
        raise ValueError("torus2q needs q >= 1")
    signs = {c: sign for c in range(1, q + 1)}
    if q % 2:
        strand = [Passage(j % q + 1, Role.OVER if j % 2 == 0 else Role.UNDER) for j in range(2 * q)]
        return Diagram.from_parts([strand], signs)
    first = [Passage(j + 1, Role.OVER if j % 2 == 0 else Role.UNDER) for j in range(q)]
    second = [Passage(j + 1, Role.UNDER if j % 2 == 0 else Role.OVER) for j in range(q)]
    return Diagram.from_parts([first, second], signs)


def virtual_trefoil() -> Diagram:
    return Diagram.of([[("O", 1), ("O", 2), ("U", 1), ("U", 2)]], {1: 1, 2: 1})


def random_diagram(n: int, components: int = 1, seed: int = 0) -> Diagram:
    """Uniform pairing of 2n slots into O/U pairs split into `components` lines, uniform signs."""
    if n < 0:
        raise ValueError("random diagram needs n >= 0")
    components = max(1, int(components))
    rng = Lcg(seed)
    slots = [Passage(c, role) for c in range(1, n + 1) for role in (Role.OVER, Role.UNDER)]
    rng.shuffle(slots)
    cuts = sorted(rng.below(2 * n + 1) for _ in range(components - 1))
    bounds = [0, *cuts, 2 * n]
    comps = [slots[bounds[k]:bounds[k + 1]] for k in range(components)]
    signs = {c: rng.sign() for c in range(1, n + 1)}
    return Diagram.from_parts(comps, signs)


def generate(kind: GeneratorKind) -> Diagram:
    match kind:
        case Torus2q(q=q, sign=sign):
            return torus_2q(q, sign)
        case VirtualTrefoil():
            return virtual_trefoil()
        case Hopf(sign=sign):
            return torus_2q(2, sign)
        case RandomDiagram(n=n, components=comps, seed=seed):
            return random_diagram(n, comps, seed)
    raise TypeError(f"unknown generator {kind!r}")
