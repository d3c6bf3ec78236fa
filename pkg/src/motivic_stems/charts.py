"""Classical Adams-Novikov chart data and its motivic consequences.

Chart files are line oriented: ``s f name order [eta:target]``, with ``#``
comments. The order token is ``Z`` for an order-zero class (a 2-adic summand)
or a power of 2; ``eta:target`` names the class at (s+1, f+1) hit by
multiplication by alpha1. Two magic comments carry metadata and survive a
round trip: ``# provenance: ...`` and ``# smax: N``.

Stems files are line oriented too: ``s order[,order...]`` where each order is
``Z`` or a power of 2, and a single ``0`` denotes the trivial group. The same
``# provenance:`` comment applies.

Everything downstream of a chart is mechanical: the motivic lift places a
classical class at (s, f) in all weights w <= (s+f)/2, the homotopy of the
cofiber of tau at (s, w) is the classical entry at (s, 2w-s), and
eta-localization follows eta-edge chains to a stable value where the data
suffices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .groups import GroupDescriptor
from .resources import SAMPLE_CHART_FILE, SAMPLE_STEMS_FILE, read_data_text


class ChartError(ValueError):
    pass


class ChartParseError(ChartError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ChartValidationError(ChartError):
    def __init__(self, violations: list[str]):
        super().__init__("chart violates structural invariants:\n" + "\n".join(violations))
        self.violations = violations


class StemRangeError(ChartError):
    """Stem outside the ingested range; distinct from a zero group."""


class LiftError(ChartError):
    """Classes with odd s+f admit no motivic lift of this shape."""


@dataclass(frozen=True)
class ClassicalChartClass:
    name: str
    s: int
    f: int
    order: int  # 0 for a 2-adic summand, else a power of 2
    eta_edge: str | None = None


@dataclass
class ClassicalChart:
    """Classes of a classical Adams-Novikov E2 chart through stem s_max."""

    classes: list[ClassicalChartClass]
    s_max: int
    provenance: str = ""
    _by_name: dict = field(default=None, repr=False, compare=False)
    _by_bidegree: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._by_name = {c.name: c for c in self.classes}
        self._by_bidegree = {}
        for c in self.classes:
            self._by_bidegree.setdefault((c.s, c.f), []).append(c)

    def by_name(self, name: str) -> ClassicalChartClass | None:
        return self._by_name.get(name)

    def at(self, s: int, f: int) -> list[ClassicalChartClass]:
        return self._by_bidegree.get((s, f), [])

    def group_at(self, s: int, f: int) -> GroupDescriptor:
        return GroupDescriptor.from_orders(c.order for c in self.at(s, f))


def _parse_order_token(token: str, lineno: int) -> int:
    if token == "Z":
        return 0
    try:
        n = int(token)
    except ValueError:
        raise ChartParseError(lineno, f"order token {token!r} is neither Z nor an integer") from None
    if n < 2 or n & (n - 1):
        raise ChartParseError(lineno, f"order {n} is not a power of 2 >= 2")
    return n


def parse_chart(text: str, *, validate: bool = True) -> ClassicalChart:
    """Parse a chart file; with validate=True (default) structural violations raise."""
    classes: list[ClassicalChartClass] = []
    provenance = ""
    declared_smax: int | None = None
    seen_names: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("provenance:"):
                provenance = body[len("provenance:") :].strip()
            elif body.startswith("smax:"):
                try:
                    declared_smax = int(body[len("smax:") :].strip())
                except ValueError:
                    raise ChartParseError(lineno, f"bad smax directive {stripped!r}") from None
            continue
        line = stripped.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) not in (4, 5):
            raise ChartParseError(lineno, f"expected `s f name order [eta:target]`, got {raw!r}")
        try:
            s, f = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ChartParseError(lineno, f"non-integer bidegree in {raw!r}") from None
        name = tokens[2]
        order = _parse_order_token(tokens[3], lineno)
        eta_edge = None
        if len(tokens) == 5:
            if not tokens[4].startswith("eta:"):
                raise ChartParseError(lineno, f"trailing token {tokens[4]!r} is not an eta: edge")
            eta_edge = tokens[4][len("eta:") :]
            if not eta_edge:
                raise ChartParseError(lineno, "empty eta: target name")
        if name in seen_names:
            raise ChartParseError(lineno, f"class name {name!r} already used on line {seen_names[name]}")
        seen_names[name] = lineno
        classes.append(ClassicalChartClass(name=name, s=s, f=f, order=order, eta_edge=eta_edge))
    s_max = declared_smax if declared_smax is not None else max((c.s for c in classes), default=0)
    chart = ClassicalChart(classes=classes, s_max=s_max, provenance=provenance)
    if validate:
        violations = validate_chart(chart)
        if violations:
            raise ChartValidationError(violations)
    return chart


def serialize_chart(chart: ClassicalChart) -> str:
    """Canonical form: metadata comments, then classes sorted by (s, f, name)."""
    lines = []
    if chart.provenance:
        lines.append(f"# provenance: {chart.provenance}")
    lines.append(f"# smax: {chart.s_max}")
    for c in sorted(chart.classes, key=lambda c: (c.s, c.f, c.name)):
        order = "Z" if c.order == 0 else str(c.order)
        tail = f" eta:{c.eta_edge}" if c.eta_edge else ""
        lines.append(f"{c.s} {c.f} {c.name} {order}{tail}")
    return "\n".join(lines) + "\n"


def validate_chart(chart: ClassicalChart) -> list[str]:
    """Structural invariants; returns human-readable violations, empty if clean."""
    violations = []
    unit_classes = [c for c in chart.at(0, 0) if c.order == 0]
    if len(unit_classes) != 1 or len(chart.at(0, 0)) != 1:
        violations.append("bidegree (0,0) must hold exactly one class of order 0 (the unit)")
    for c in chart.classes:
        where = f"class {c.name!r} at ({c.s},{c.f})"
        if c.s < 0:
            violations.append(f"{where}: negative stem")
        if c.f < 0:
            violations.append(f"{where}: negative filtration")
        if c.f == 0 and (c.s, c.f) != (0, 0):
            violations.append(f"{where}: filtration 0 is only allowed at (0,0)")
        if c.s > chart.s_max:
            violations.append(f"{where}: stem exceeds declared range s <= {chart.s_max}")
        if c.eta_edge is not None:
            target = chart.by_name(c.eta_edge)
            if target is None:
                violations.append(f"{where}: eta-edge target {c.eta_edge!r} does not exist")
            elif (target.s, target.f) != (c.s + 1, c.f + 1):
                violations.append(
                    f"{where}: eta-edge target {c.eta_edge!r} sits at ({target.s},{target.f}), "
                    f"expected ({c.s + 1},{c.f + 1})"
                )
    return violations


@dataclass(frozen=True)
class MotivicChartClass:
    """A classical class placed in one motivic weight of its tau tower."""

    classical: ClassicalChartClass
    w: int
    w_top: int  # = (s + f) / 2; presence requires w <= w_top

    @property
    def tau_power(self) -> int:
        return self.w_top - self.w

    @property
    def is_tower_top(self) -> bool:
        return self.w == self.w_top


@dataclass
class MotivicLift:
    """Motivic lift of a chart: each class spans the weights w <= (s+f)/2."""

    chart: ClassicalChart
    w_top: dict[str, int]

    def at(self, s: int, f: int, w: int) -> list[MotivicChartClass]:
        out = []
        for c in self.chart.at(s, f):
            top = self.w_top[c.name]
            if w <= top:
                out.append(MotivicChartClass(classical=c, w=w, w_top=top))
        return out

    def table(self, w_min: int) -> dict[tuple[int, int, int], list[MotivicChartClass]]:
        """Materialize all entries with w >= w_min, keyed by (s, f, w)."""
        out: dict[tuple[int, int, int], list[MotivicChartClass]] = {}
        for c in self.chart.classes:
            top = self.w_top[c.name]
            for w in range(w_min, top + 1):
                out.setdefault((c.s, c.f, w), []).append(MotivicChartClass(c, w, top))
        return dict(sorted(out.items()))


def lift_to_motivic(chart: ClassicalChart) -> MotivicLift:
    """Lift every classical class to its tau tower of motivic weights.

    A class at (s, f) appears at every weight w <= (s+f)/2. Classes with
    s + f odd have no weight to live in and are rejected.
    """
    odd = [c for c in chart.classes if (c.s + c.f) % 2]
    if odd:
        listing = ", ".join(f"{c.name!r} at ({c.s},{c.f})" for c in odd)
        raise LiftError(f"classes with odd s+f cannot be lifted: {listing}")
    return MotivicLift(chart=chart, w_top={c.name: (c.s + c.f) // 2 for c in chart.classes})


def ctau_homotopy(chart: ClassicalChart, s: int, w: int) -> GroupDescriptor:
    """Homotopy of the cofiber of tau at (s, w): the classical entry at (s, 2w-s).

    Zero when 2w-s < 0 or the entry is empty. Raises StemRangeError when the
    stem falls outside the ingested chart range; that is lack of data, not a
    zero group.
    """
    if s < 0 or s > chart.s_max:
        raise StemRangeError(f"stem {s} outside ingested range 0..{chart.s_max}")
    f = 2 * w - s
    if f < 0:
        return GroupDescriptor.trivial()
    return chart.group_at(s, f)


LOCALIZATION_STABLE = "STABLE"
LOCALIZATION_UNRESOLVED = "UNRESOLVED"


def localization_guaranteed(s: int, f: int) -> bool:
    """Range where eta-localization changes nothing: s < 5f - 10."""
    return s < 5 * f - 10


@dataclass(frozen=True)
class LocalizationResult:
    cls: ClassicalChartClass
    status: str  # STABLE or UNRESOLVED
    value: ClassicalChartClass | None  # stabilized class; None means localizes to zero
    steps: int


def eta_localize_chart(
    chart: ClassicalChart, max_steps: int | None = None
) -> dict[tuple[int, int], list[LocalizationResult]]:
    """Follow eta-edge chains to compute the eta-localization of each entry.

    A chain is STABLE once it enters the guaranteed range s < 5f - 10 (the
    entry there is the localized value) or once it hits a class with no
    outgoing edge whose successor bidegree is still inside the chart range
    (the localization is zero). A chain that leaves the ingested range or
    exceeds max_steps first is UNRESOLVED.
    """
    if max_steps is None:
        max_steps = chart.s_max + 1
    results: dict[tuple[int, int], list[LocalizationResult]] = {}
    for cls in chart.classes:
        cur = cls
        steps = 0
        while True:
            if localization_guaranteed(cur.s, cur.f):
                res = LocalizationResult(cls, LOCALIZATION_STABLE, cur, steps)
                break
            if cur.eta_edge is None:
                if cur.s + 1 > chart.s_max:
                    res = LocalizationResult(cls, LOCALIZATION_UNRESOLVED, None, steps)
                else:
                    res = LocalizationResult(cls, LOCALIZATION_STABLE, None, steps)
                break
            if steps >= max_steps:
                res = LocalizationResult(cls, LOCALIZATION_UNRESOLVED, None, steps)
                break
            nxt = chart.by_name(cur.eta_edge)
            if nxt is None:
                raise ChartValidationError([f"eta-edge target {cur.eta_edge!r} of {cur.name!r} does not exist"])
            cur = nxt
            steps += 1
        results.setdefault((cls.s, cls.f), []).append(res)
    return results


@dataclass
class StemsTable:
    """2-primary classical stable stems: stem -> group, with provenance."""

    groups: dict[int, GroupDescriptor]
    provenance: str = ""

    @property
    def s_max(self) -> int:
        return max(self.groups, default=-1)

    def get(self, s: int) -> GroupDescriptor | None:
        return self.groups.get(s)


def parse_stems(text: str) -> StemsTable:
    groups: dict[int, GroupDescriptor] = {}
    provenance = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("provenance:"):
                provenance = body[len("provenance:") :].strip()
            continue
        line = stripped.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ChartParseError(lineno, f"expected `s order[,order...]`, got {raw!r}")
        try:
            s = int(tokens[0])
        except ValueError:
            raise ChartParseError(lineno, f"non-integer stem in {raw!r}") from None
        if s < 0:
            raise ChartParseError(lineno, f"negative stem {s}")
        if s in groups:
            raise ChartParseError(lineno, f"stem {s} listed twice")
        order_tokens = tokens[1].split(",")
        if order_tokens == ["0"]:
            groups[s] = GroupDescriptor.trivial()  # `0` is the trivial group
        else:
            groups[s] = GroupDescriptor.from_orders(_parse_order_token(t, lineno) for t in order_tokens)
    return StemsTable(groups=groups, provenance=provenance)


def serialize_stems(table: StemsTable) -> str:
    lines = []
    if table.provenance:
        lines.append(f"# provenance: {table.provenance}")
    for s in sorted(table.groups):
        g = table.groups[s]
        if g.is_trivial:
            lines.append(f"{s} 0")
        else:
            lines.append(f"{s} " + ",".join("Z" if n == 0 else str(n) for n in g.summands))
    return "\n".join(lines) + "\n"


def load_sample_chart() -> ClassicalChart:
    return parse_chart(read_data_text(SAMPLE_CHART_FILE))


def load_sample_stems() -> StemsTable:
    return parse_stems(read_data_text(SAMPLE_STEMS_FILE))
