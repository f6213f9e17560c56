"""Desk-scale resource caps.

All potentially explosive operations take a :class:`Caps` and raise
:class:`~semiprim.errors.CapExceeded` instead of silently truncating.
The defaults suit the shipped fixture corpus; individual calls may pass a
widened copy, and the ``SEMIPRIM_CAPS`` environment variable (a JSON
object of field overrides) adjusts the process-wide defaults.
"""

from __future__ import annotations

import dataclasses
import json
import os

from .errors import CapExceeded


@dataclasses.dataclass(frozen=True)
class Caps:
    #: hard limit on elements yielded by streamed enumeration
    max_stream: int = 10**7
    #: limit on |G| for operations that walk every element
    max_enumerate: int = 10**6
    #: limit on the index |G : H| in coset actions
    max_coset_index: int = 10**5
    #: limit on conjugacy classes walked by the normal-subgroup lattice
    max_classes: int = 40
    #: limit on members accumulated by the lattice join fixpoint
    max_lattice: int = 10**4
    #: limit on |S| for Thompson-subgroup enumeration
    max_thompson: int = 2**12

    def scaled(self, **overrides: int) -> "Caps":
        """Copy with the given fields replaced."""
        return dataclasses.replace(self, **overrides)

    def check_stream(self, n: int) -> None:
        if n > self.max_stream:
            raise CapExceeded(f"streaming {n} elements exceeds cap {self.max_stream}")

    def check_enumerate(self, n: int) -> None:
        if n > self.max_enumerate:
            raise CapExceeded(f"enumerating order {n} exceeds cap {self.max_enumerate}")

    def check_coset_index(self, n: int) -> None:
        if n > self.max_coset_index:
            raise CapExceeded(f"coset index {n} exceeds cap {self.max_coset_index}")


def default_caps() -> Caps:
    """Process-wide defaults, honouring ``SEMIPRIM_CAPS``."""
    raw = os.environ.get("SEMIPRIM_CAPS")
    if not raw:
        return Caps()
    data = json.loads(raw)
    legal = {f.name for f in dataclasses.fields(Caps)}
    bad = set(data) - legal
    if bad:
        raise ValueError(f"unknown cap names in SEMIPRIM_CAPS: {sorted(bad)}")
    return Caps(**{k: int(v) for k, v in data.items()})
