"""Finite descriptive proximity spaces.

A space is a finite carrier whose elements carry integer feature vectors.
Two subsets are descriptively near when their feature sets intersect, and
the upper approximation of ``A`` collects every element whose feature
vector already occurs in ``A``.

Elements of derived spaces (quotients) may carry a *set* of feature
vectors; nearness is then intersection of the unions.  Ordinary spaces are
the special case of singleton descriptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateInputError, DomainMismatchError, MembershipError
from .reports import AxiomResult, CheckReport

FeatureVector = tuple[int, ...]


@dataclass(frozen=True)
class Element:
    index: int
    label: str
    coords: tuple[int, int] | None = None


def _as_vector(raw) -> FeatureVector:
    vec = tuple(raw)
    for c in vec:
        # bool is an int subclass; exact integers only
        if type(c) is not int:
            raise ValueError(f"feature components must be integers, got {c!r}")
    return vec


class DescriptiveSpace:
    """Immutable finite carrier with a probe map.

    >>> X = DescriptiveSpace(["a", "b", "c"], [(1,), (1,), (2,)])
    >>> X.subset(["a"]).upper().labels
    ('a', 'b')
    """

    def __init__(
        self,
        labels: Sequence[str],
        probe: Sequence[Sequence[int]] | None = None,
        coords: Sequence[tuple[int, int] | None] | None = None,
        *,
        feature_sets: Sequence[Iterable[Sequence[int]]] | None = None,
    ):
        if (probe is None) == (feature_sets is None):
            raise ValueError("give exactly one of probe or feature_sets")
        labels = tuple(str(s) for s in labels)
        if not labels:
            raise DegenerateInputError("a descriptive space must be non-empty")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be unique")
        n = len(labels)
        if coords is None:
            coords = (None,) * n
        coords = tuple(None if c is None else (int(c[0]), int(c[1])) for c in coords)
        if len(coords) != n:
            raise ValueError("coords length differs from labels")

        if probe is not None:
            descr = tuple(frozenset([_as_vector(v)]) for v in probe)
        else:
            descr = tuple(frozenset(_as_vector(v) for v in fs) for fs in feature_sets)
        if len(descr) != n:
            raise ValueError("probe must be defined for every element")
        arities = {len(v) for d in descr for v in d}
        if any(not d for d in descr):
            raise ValueError("every element needs at least one feature vector")
        if len(arities) != 1 or 0 in arities:
            raise ValueError(f"feature arity must be uniform and >= 1, got {sorted(arities)}")

        self.elements = tuple(Element(i, lab, c) for i, (lab, c) in enumerate(zip(labels, coords)))
        self.labels = labels
        self.coords = coords
        self.arity = arities.pop()
        self.lifted = probe is None
        self._descr = descr
        self._index = {lab: i for i, lab in enumerate(labels)}
        classes: dict[FeatureVector, set[int]] = {}
        for i, d in enumerate(descr):
            for v in d:
                classes.setdefault(v, set()).add(i)
        # feature vector -> elements carrying it; upper approximations are unions of these
        self._classes = {v: frozenset(s) for v, s in classes.items()}
        self._key = (labels, coords, descr)
        self._hash = hash(self._key)

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, DescriptiveSpace):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        kind = "lifted " if self.lifted else ""
        return f"<{kind}DescriptiveSpace |X|={len(self)} arity={self.arity} classes={len(self._classes)}>"

    # -- element access ---------------------------------------------------
    def index_of(self, item) -> int:
        if isinstance(item, Element):
            item = item.index
        if isinstance(item, int) and not isinstance(item, bool):
            if 0 <= item < len(self.labels):
                return item
            raise MembershipError(f"index {item} outside carrier of size {len(self)}")
        try:
            return self._index[item]
        except KeyError:
            raise MembershipError(f"unknown element {item!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def probe(self, item) -> FeatureVector:
        """Feature vector of an element of an ordinary (non-lifted) space."""
        d = self._descr[self.index_of(item)]
        if len(d) != 1:
            raise ValueError("element carries a feature set; use description()")
        return next(iter(d))

    def description(self, item) -> frozenset[FeatureVector]:
        return self._descr[self.index_of(item)]

    @property
    def feature_classes(self) -> dict[FeatureVector, frozenset[int]]:
        return dict(self._classes)

    def is_injective(self) -> bool:
        return all(len(s) == 1 for s in self._classes.values()) and all(
            len(d) == 1 for d in self._descr
        )

    def subset(self, items: Iterable = ()) -> Subset:
        return Subset(self, frozenset(self.index_of(x) for x in items))

    def full(self) -> Subset:
        return Subset(self, frozenset(range(len(self))))

    # -- index-level primitives (used by checkers in inner loops) ---------
    def features_of(self, members: Iterable[int]) -> frozenset[FeatureVector]:
        out: set[FeatureVector] = set()
        for i in members:
            out |= self._descr[i]
        return frozenset(out)

    def upper_idx(self, members: frozenset[int]) -> frozenset[int]:
        out: set[int] = set()
        for v in self.features_of(members):
            out |= self._classes[v]
        return frozenset(out)

    def near_idx(self, a: Iterable[int], b: Iterable[int]) -> bool:
        return not self.features_of(a).isdisjoint(self.features_of(b))

    def intersection_idx(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        common = self.features_of(a) & self.features_of(b)
        return frozenset(x for x in a | b if not self._descr[x].isdisjoint(common))

    def phi_equal(self, x: int, y: int) -> bool:
        return self._descr[x] == self._descr[y]


@dataclass(frozen=True)
class Subset:
    """A subset of one descriptive space, stored as a set of indices."""

    space: DescriptiveSpace = field(repr=False)
    members: frozenset[int]

    def __post_init__(self):
        n = len(self.space)
        if any(not 0 <= i < n for i in self.members):
            raise MembershipError("subset members must lie in the carrier")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.space.labels[i] for i in sorted(self.members))

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        try:
            return self.space.index_of(item) in self.members
        except MembershipError:
            return False

    def _same(self, other: Subset) -> None:
        if self.space is not other.space and self.space != other.space:
            raise DomainMismatchError("subsets belong to different spaces")

    def __or__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.space, self.members | other.members)

    def __and__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.space, self.members & other.members)

    def __sub__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.space, self.members - other.members)

    def __le__(self, other: Subset) -> bool:
        self._same(other)
        return self.members <= other.members

    def upper(self) -> Subset:
        return upper_approx(self)

    def __repr__(self):
        return "{" + ", ".join(self.labels) + "}"


def _check_same(a: Subset, b: Subset) -> DescriptiveSpace:
    a._same(b)
    return a.space


def descriptively_near(a: Subset, b: Subset) -> bool:
    """True iff the feature sets of ``a`` and ``b`` intersect; never near the empty set."""
    space = _check_same(a, b)
    return space.near_idx(a.members, b.members)


def descriptive_intersection(a: Subset, b: Subset) -> Subset:
    space = _check_same(a, b)
    return Subset(space, space.intersection_idx(a.members, b.members))


def upper_approx(a: Subset) -> Subset:
    return Subset(a.space, a.space.upper_idx(a.members))


def check_dp_axioms(space: DescriptiveSpace, sample: Sequence[Subset]) -> CheckReport:
    """Scan DP.0-DP.3 over all pairs and triples drawn from ``sample``.

    Cases involving the empty set are still evaluated but counted as
    vacuous, since the axioms are stated for non-empty subsets.
    """
    for s in sample:
        if s.space is not space and s.space != space:
            raise DomainMismatchError("sample subset from a different space")
    empty = frozenset()
    sets = [s.members for s in sample]
    rows = []
    vacuous = {"DP.0": 0, "DP.1": 0, "DP.2": 0, "DP.3": 0}

    w0 = [(tuple(space.labels[i] for i in sorted(a)),) for a in sets
          if space.near_idx(a, empty) or space.near_idx(empty, a)]
    vacuous["DP.0"] = sum(1 for a in sets if not a)
    rows.append(AxiomResult.of("DP.0", w0))

    w1, w2 = [], []
    for a, b in product(sets, repeat=2):
        if not a or not b:
            vacuous["DP.1"] += 1
            vacuous["DP.2"] += 1
        if space.near_idx(a, b) != space.near_idx(b, a):
            w1.append((_lab(space, a), _lab(space, b)))
        if bool(space.intersection_idx(a, b)) != space.near_idx(a, b):
            w2.append((_lab(space, a), _lab(space, b)))
    rows.append(AxiomResult.of("DP.1", w1))
    rows.append(AxiomResult.of("DP.2", w2))

    w3 = []
    for a, b, c in product(sets, repeat=3):
        if not (a and b and c):
            vacuous["DP.3"] += 1
        lhs = space.near_idx(a, b | c)
        rhs = space.near_idx(a, b) or space.near_idx(a, c)
        if lhs != rhs:
            w3.append((_lab(space, a), _lab(space, b), _lab(space, c)))
    rows.append(AxiomResult.of("DP.3", w3))
    return CheckReport("dp-axioms", rows, info={"vacuous": vacuous, "sample_size": len(sets)})


def _lab(space: DescriptiveSpace, members: frozenset[int]) -> str:
    return "{" + ",".join(space.labels[i] for i in sorted(members)) + "}"


def all_subsets(members: Iterable[int], nonempty: bool = True) -> Iterator[frozenset[int]]:
    items = sorted(members)
    start = 1 if nonempty else 0
    for k in range(start, len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)
