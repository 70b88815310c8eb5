"""
Possibly non-connected, non-simple branched coverings as labeled collections
of single coverings.
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from monodromy.constellation import Constellation, ValidationReport, validate


@dataclass(frozen=True)
class CoveringComponent:
    """One single covering Y -> Z; target names which target component Z it covers"""

    label: str
    target: str
    constellation: Constellation


@dataclass(frozen=True)
class CoveringCollection:
    components: Tuple[CoveringComponent, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if not components:
            raise ValueError('A covering collection needs at least one component')
        labels = [c.label for c in components]
        if len(set(labels)) != len(labels):
            raise ValueError(f'Component labels must be unique, got {labels}')
        object.__setattr__(self, 'components', components)

    @classmethod
    def from_constellations(cls, constellations, labels=None) -> 'CoveringCollection':
        """Each constellation over its own target (a simple covering)"""
        constellations = list(constellations)
        labels = list(labels) if labels is not None else [f'c{i}' for i in range(1, len(constellations) + 1)]
        return cls(tuple(
            CoveringComponent(label, f'{label}.target', c)
            for label, c in zip(labels, constellations)
        ))

    @property
    def degree(self) -> int:
        """Largest component degree; some component always realizes it"""
        return max(c.constellation.degree for c in self.components)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(c.label for c in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def is_simple(self) -> bool:
        """As many target components as source components"""
        return len({c.target for c in self.components}) == len(self.components)

    def is_single(self) -> bool:
        return len(self.components) == 1

    def simplify(self) -> 'CoveringCollection':
        """
        Give every component a private copy of its target, turning the
        collection into a simple covering with the same single components.
        """
        taken = {c.target for c in self.components}
        claimed = set()
        components = []
        for component in self.components:
            target = component.target
            count = 0
            while target in claimed or (count and target in taken):
                count += 1
                target = f'{component.target}#{count}'
            claimed.add(target)
            components.append(CoveringComponent(component.label, target, component.constellation))
        return CoveringCollection(tuple(components))

    def validate(self) -> Dict[str, ValidationReport]:
        return {c.label: validate(c.constellation) for c in self.components}

    def partner_degree(self) -> int:
        """
        Degree of the only non-univalent component Q0 of a cobordant partner:
        sum of component degrees minus n, for n + 1 components.
        """
        degrees = [c.constellation.degree for c in self.components]
        if max(degrees) <= 1:
            raise ValueError('Partner degree needs a component of degree > 1')
        return sum(degrees) - (len(degrees) - 1)
