"""Core domain model: serotypes, reports, regions, year windows, and the
selection context shared by every query panel.

All values here are immutable after construction and safe to share across
concurrent readers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

# Default dataset span; actual bounds live in snapshot metadata so other
# serotype datasets can load.
DATASET_YEAR_MIN = 1943
DATASET_YEAR_MAX = 2020

#: Fixed 4-step black-to-white ramp indexed by Region.shade.
REGION_SHADE_RAMP = ("#000000", "#555555", "#aaaaaa", "#ffffff")


class Serotype(enum.IntEnum):
    """The four dengue virus serotypes, totally ordered DENV1 < ... < DENV4."""

    DENV1 = 1
    DENV2 = 2
    DENV3 = 3
    DENV4 = 4

    @property
    def bit(self) -> int:
        """Bit position in a serotype-set mask (DENV1 -> 1, DENV4 -> 8)."""
        return 1 << (self.value - 1)

    @classmethod
    def parse(cls, token: str) -> "Serotype":
        """Parse user input like 'DENV2', 'denv2', 'd2', or '2'."""
        t = token.strip().upper()
        if t.startswith("DENV"):
            t = t[4:]
        elif t.startswith("D"):
            t = t[1:]
        if t in ("1", "2", "3", "4"):
            return cls(int(t))
        raise ValueError(f"unknown serotype: {token!r}")


#: Canonical serotype order.
SEROTYPES: tuple[Serotype, ...] = tuple(Serotype)

ALL_SEROTYPES: frozenset[Serotype] = frozenset(Serotype)

#: Mask of all four serotypes.
FULL_MASK = 0b1111


def encode_serotype_set(serotypes: Iterable[Serotype]) -> int:
    """Encode a serotype set as a 4-bit mask (bit i set iff DENV(i+1) present)."""
    mask = 0
    for s in serotypes:
        mask |= Serotype(s).bit
    return mask


def decode_serotype_set(mask: int) -> frozenset[Serotype]:
    """Inverse of :func:`encode_serotype_set`; accepts masks 0-15."""
    if not 0 <= mask <= FULL_MASK:
        raise ValueError(f"serotype mask out of range: {mask}")
    return frozenset(s for s in SEROTYPES if mask & s.bit)


def enumerate_combinations() -> tuple[frozenset[Serotype], ...]:
    """All 15 non-empty serotype subsets, ordered by (cardinality, mask).

    The ordering is fixed so API responses and golden tests stay stable.
    """
    masks = sorted(range(1, FULL_MASK + 1), key=lambda m: (bin(m).count("1"), m))
    return tuple(decode_serotype_set(m) for m in masks)


def format_serotype_set(serotypes: Iterable[Serotype]) -> str:
    """Render a serotype set canonically, e.g. 'DENV1+DENV3'."""
    return "+".join(s.name for s in sorted(serotypes))


class Source(str, enum.Enum):
    """Provenance of a report row."""

    CORE = "core"
    SUPPLEMENT = "supplement"


@dataclass(frozen=True)
class Report:
    """One geocoded, dated observation of at least one dengue serotype."""

    id: int
    latitude: float
    longitude: float
    country: str
    year: int
    serotypes: frozenset[Serotype]
    source: Source
    mask: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not -90.0 <= self.latitude <= 90.0:
            raise ValueError(f"latitude out of range: {self.latitude}")
        if not -180.0 <= self.longitude <= 180.0:
            raise ValueError(f"longitude out of range: {self.longitude}")
        if not self.serotypes:
            raise ValueError("a report must carry at least one serotype")
        object.__setattr__(self, "mask", encode_serotype_set(self.serotypes))

    @property
    def serotype_count(self) -> int:
        return len(self.serotypes)


@dataclass(frozen=True)
class Region:
    """A named set of countries with display attributes for the map layer."""

    name: str
    countries: frozenset[str]
    visible: bool = True
    shade: int = 0

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("region name must be non-empty")
        if not self.countries:
            raise ValueError(f"region {self.name!r} has no countries")
        if not 0 <= self.shade < len(REGION_SHADE_RAMP):
            raise ValueError(f"region shade out of range: {self.shade}")


@dataclass(frozen=True)
class Country:
    code: str
    name: str


@dataclass(frozen=True)
class Subcontinent:
    name: str
    countries: tuple[Country, ...]


@dataclass(frozen=True)
class Continent:
    name: str
    subcontinents: tuple[Subcontinent, ...]

    def country_codes(self) -> tuple[str, ...]:
        return tuple(c.code for s in self.subcontinents for c in s.countries)


@dataclass(frozen=True)
class RegionTree:
    """Three-level country hierarchy: continent -> subcontinent -> country.

    Every country code appears under exactly one subcontinent and one
    continent; the leaf set is the universe of selectable countries.
    """

    continents: tuple[Continent, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for cont in self.continents:
            for sub in cont.subcontinents:
                for country in sub.countries:
                    if country.code in seen:
                        raise ValueError(
                            f"country {country.code} appears more than once in the region tree"
                        )
                    seen.add(country.code)

    def all_countries(self) -> frozenset[str]:
        return frozenset(
            c.code
            for cont in self.continents
            for sub in cont.subcontinents
            for c in sub.countries
        )

    def country_name(self, code: str) -> str | None:
        for cont in self.continents:
            for sub in cont.subcontinents:
                for c in sub.countries:
                    if c.code == code:
                        return c.name
        return None

    def resolve(self, name: str) -> frozenset[str] | None:
        """Country codes for a continent name, subcontinent name, country
        name, or country code; None when nothing matches."""
        wanted = name.strip().casefold()
        for cont in self.continents:
            if cont.name.casefold() == wanted:
                return frozenset(cont.country_codes())
        for cont in self.continents:
            for sub in cont.subcontinents:
                if sub.name.casefold() == wanted:
                    return frozenset(c.code for c in sub.countries)
        upper = name.strip().upper()
        for cont in self.continents:
            for sub in cont.subcontinents:
                for c in sub.countries:
                    if c.code == upper or c.name.casefold() == wanted:
                        return frozenset((c.code,))
        return None

    def default_regions(self) -> tuple[Region, ...]:
        """One visible region per continent, shades cycling over the ramp."""
        regions = []
        for i, cont in enumerate(self.continents):
            codes = cont.country_codes()
            if not codes:
                continue
            regions.append(
                Region(
                    name=cont.name,
                    countries=frozenset(codes),
                    visible=True,
                    shade=i % len(REGION_SHADE_RAMP),
                )
            )
        return tuple(regions)


@dataclass(frozen=True)
class YearWindow:
    """An end-anchored span of consecutive years: the window ends at
    current_year and reaches back interval_length years (clamped to the
    dataset span)."""

    current_year: int
    interval_length: int
    start_year: int

    @property
    def end_year(self) -> int:
        return self.current_year

    def years(self) -> range:
        return range(self.start_year, self.current_year + 1)

    def contains(self, year: int) -> bool:
        return self.start_year <= year <= self.current_year

    def __len__(self) -> int:
        return self.current_year - self.start_year + 1


def resolve_window(
    current_year: int,
    interval_length: int,
    year_min: int = DATASET_YEAR_MIN,
    year_max: int = DATASET_YEAR_MAX,
) -> YearWindow:
    """Build the year window ending at current_year.

    interval_length is clamped to the dataset span; the resulting span never
    reaches before year_min.
    """
    if not year_min <= current_year <= year_max:
        raise ValueError(
            f"current_year {current_year} outside dataset span [{year_min}, {year_max}]"
        )
    if interval_length < 1:
        raise ValueError(f"interval_length must be >= 1, got {interval_length}")
    interval_length = min(interval_length, year_max - year_min + 1)
    start = max(year_min, current_year - interval_length + 1)
    return YearWindow(current_year=current_year, interval_length=interval_length, start_year=start)


@dataclass(frozen=True)
class SelectionContext:
    """The active regions + year window + serotype filter every panel shares.

    Deterministic: the same context over the same snapshot always yields
    identical query results.
    """

    regions: tuple[Region, ...]
    window: YearWindow
    serotypes: frozenset[Serotype]

    @property
    def mask(self) -> int:
        return encode_serotype_set(self.serotypes)

    def visible_countries(self) -> frozenset[str]:
        """Union of country codes over visible regions."""
        codes: set[str] = set()
        for region in self.regions:
            if region.visible:
                codes.update(region.countries)
        return frozenset(codes)

    def visible_regions(self) -> Iterator[Region]:
        return (r for r in self.regions if r.visible)
