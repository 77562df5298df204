"""Compositions of a degree across boundary components, and the assembly
identities that turn per-composition curve counts into period coefficients.

An s-partition of d records how many of the d boundary intersections land on
each of the s components; its multinomial coefficient counts the orderings.
Summing multinomial(d, P) * count(P) over all s-partitions of d produces the
degree-d period coefficient, and regrouping the same sum by curve class is
the bookkeeping identity exercised by the tests.
"""

from math import factorial

from .errors import MonoidMismatch, PartitionMismatch, ProfileDegreeMismatch
from .mori import MoriElement


class SPartition:
    """A composition of d into s ordered non-negative parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise PartitionMismatch("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or p < 0:
                raise PartitionMismatch(f"parts must be non-negative integers, got {p!r}")
        self.parts = parts

    @property
    def total(self):
        return sum(self.parts)

    @property
    def size(self):
        return len(self.parts)

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.parts == other
        if not isinstance(other, SPartition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __repr__(self):
        return f"SPartition{self.parts}"


def _as_partition(value):
    return value if isinstance(value, SPartition) else SPartition(value)


def enumerate_s_partitions(total, size):
    """All compositions of ``total`` into ``size`` parts, lexicographic order.

    There are C(total+size-1, size-1) of them (stars and bars).
    """
    if total < 0 or size < 1:
        raise PartitionMismatch(f"need total >= 0 and size >= 1, got {total}, {size}")
    out = []

    def fill(prefix, left):
        if len(prefix) == size - 1:
            out.append(SPartition(prefix + (left,)))
            return
        for value in range(left + 1):
            fill(prefix + (value,), left - value)

    fill((), total)
    return out


def multinomial(total, partition):
    """d! / (P(1)! ... P(s)!) as an exact integer."""
    partition = _as_partition(partition)
    if partition.total != total:
        raise PartitionMismatch(
            f"parts sum to {partition.total}, expected {total}"
        )
    result = factorial(total)
    for p in partition.parts:
        result //= factorial(p)
    return result


def p_from_naive(partition, count):
    """Quantum coefficient from a per-partition naive count: multinomial * count."""
    partition = _as_partition(partition)
    if count < 0:
        raise ValueError(f"naive counts are non-negative, got {count}")
    return multinomial(partition.total, partition) * count


class PartitionCountTable:
    """Per-partition curve-count totals for one degree.

    Keys are s-partitions of a single total d; values are monoid-algebra
    elements (sums z^beta * count over the classes grouped under each
    partition).  Synthetic tables may carry arbitrary exact coefficients.
    """

    __slots__ = ("total", "size", "entries")

    def __init__(self, total, size, entries):
        self.total = total
        self.size = size
        table = {}
        for key, value in (entries.items() if isinstance(entries, dict) else entries):
            key = _as_partition(key)
            if key.total != total or key.size != size:
                raise PartitionMismatch(
                    f"{key!r} is not an {size}-partition of {total}"
                )
            if not isinstance(value, MoriElement):
                raise TypeError("table values are MoriElements")
            if key in table:
                value = table[key] + value
            table[key] = value
        self.entries = table

    def __getitem__(self, key):
        return self.entries[_as_partition(key)]

    def __contains__(self, key):
        return _as_partition(key) in self.entries

    def __len__(self):
        return len(self.entries)

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: kv[0].parts)


def assemble_period_coefficient(table, total):
    """Sum multinomial(d, P) * table(P) over the table's partitions.

    This is the degree-d period coefficient of a potential with s boundary
    components whose per-partition counts are tabulated.
    """
    if table.total != total:
        raise PartitionMismatch(f"table holds partitions of {table.total}, not {total}")
    result = None
    for partition, value in table.items():
        scaled = value * multinomial(total, partition)
        result = scaled if result is None else result + scaled
    if result is None:
        return 0
    return result


def group_classes_by_partition(profiled_classes):
    """Group curve classes by their boundary intersection profile.

    Input pairs (class, profile) where the profile lists the s intersection
    numbers of the class with the boundary components; these must sum to the
    class degree (the boundary is anticanonical).  Each class lands in
    exactly one group, keyed by its profile as an s-partition.
    """
    groups = {}
    monoid = None
    for cls, profile in profiled_classes:
        if monoid is None:
            monoid = cls.monoid
        elif cls.monoid != monoid:
            raise MonoidMismatch("profiled classes belong to different monoids")
        partition = _as_partition(profile)
        if partition.total != cls.degree:
            raise ProfileDegreeMismatch(
                f"profile {partition.parts} sums to {partition.total}, "
                f"but {cls!r} has degree {cls.degree}"
            )
        groups.setdefault(partition, []).append(cls)
    return groups


def table_from_groups(groups, counts, total, size):
    """Build a PartitionCountTable from grouped classes and per-class counts."""
    entries = []
    for partition, classes in groups.items():
        monoid = classes[0].monoid
        value = MoriElement(monoid, [(cls, counts[cls]) for cls in classes])
        entries.append((partition, value))
    return PartitionCountTable(total, size, entries)
