"""
Line-based text formats.

Posets:

    poset 4
    # comment
    0 < 1 < 2
    3 < 2

Groups (nested specs follow their header; window lines may appear anywhere):

    group zn 2
    weights: 0 1; 1 0
    threshold: (0,1) closed
    window: -5..5 x -5..5

    group lexprod 2             # ℤ/2 (unordered) × the group that follows
    group lexsum 1 [weights=1]  # the group that follows × ℤ, ℤ decides first
    group odot F=(1) closed alpha=(1) [A=1]   # ℤ ⊙ the ℤⁿ group that follows
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import ValidationError

from error_handler import CycleError, ParsingError
from group_specs import (
    FinalSegmentSpec,
    GroupOrderSpec,
    LexProductGroup,
    LexSumGroup,
    OdotGroup,
    WeightOrderSpec,
    Window,
    ZnGroup,
)
from poset_core import FinitePoset, build_poset

logger = logging.getLogger(__name__)

_RANGE = re.compile(r"(-?\d+)\s*\.\.\s*(-?\d+)")
_TUPLE = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)")


def _clean_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def read_text(path_or_text: Union[str, Path]) -> str:
    path = Path(path_or_text)
    try:
        if path.exists():
            return path.read_text(encoding="utf-8")
    except OSError:
        pass
    if isinstance(path_or_text, str) and "\n" not in path_or_text and not path_or_text.lstrip().startswith(("poset", "group")):
        raise ParsingError(f"no such file: {path_or_text}")
    return str(path_or_text)


# ============================================
# Posets
# ============================================


def parse_poset(text: str) -> FinitePoset:
    lines = _clean_lines(text)
    if not lines:
        raise ParsingError("empty poset text")

    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "poset" or not parts[1].isdigit():
        raise ParsingError(f"line {number}: expected 'poset <n>', got {header!r}")
    n = int(parts[1])

    edges = []
    for number, line in lines[1:]:
        items = [item.strip() for item in line.split("<")]
        if len(items) < 2 or not all(re.fullmatch(r"\d+", item) for item in items):
            raise ParsingError(f"line {number}: expected 'i < j', got {line!r}")
        chain_items = [int(item) for item in items]
        edges.extend(zip(chain_items, chain_items[1:]))

    try:
        return build_poset(n, edges)
    except IndexError as e:
        raise ParsingError(str(e)) from e
    except CycleError as e:
        raise ParsingError(f"not a partial order: {e}") from e


# ============================================
# Groups
# ============================================


@dataclass
class ParsedGroup:
    spec: GroupOrderSpec
    window: Optional[Window] = None


def parse_tuple(text: str) -> Tuple[int, ...]:
    match = _TUPLE.fullmatch(text.strip())
    if not match:
        raise ParsingError(f"expected a tuple like (1,0), got {text!r}")
    return tuple(int(v) for v in match.group(1).split(","))


def parse_rows(text: str) -> Tuple[Tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(v) for v in row.split()) for row in text.split(";") if row.strip())
    except ValueError as e:
        raise ParsingError(f"bad weight rows {text!r}") from e


def parse_window(text: str, spec: Optional[GroupOrderSpec] = None) -> Window:
    """`a1..b1 x a2..b2`, or a single radius when the group is known."""
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        if spec is None:
            raise ParsingError(f"window radius {text} needs a group to size against")
        return Window.for_group(spec, int(text))
    ranges = _RANGE.findall(text)
    leftover = _RANGE.sub("", text)
    if not ranges or leftover.replace("x", "").replace(",", "").strip():
        raise ParsingError(f"expected a window like -3..3 x -3..3, got {text!r}")
    try:
        return Window(bounds=tuple((int(lo), int(hi)) for lo, hi in ranges))
    except ValidationError as e:
        raise ParsingError(f"bad window {text!r}: {e.errors()[0]['msg']}") from e


def _options(tokens: List[str]) -> dict:
    options = {}
    for token in tokens:
        if "=" in token:
            key, value = token.split("=", 1)
            options[key] = value
        else:
            options[token] = None
    return options


class _GroupReader:
    def __init__(self, lines: List[Tuple[int, str]]):
        self.lines = lines
        self.pos = 0
        self.window_text: Optional[str] = None

    def _next(self) -> Tuple[int, str]:
        while self.pos < len(self.lines):
            number, line = self.lines[self.pos]
            self.pos += 1
            if line.startswith("window:"):
                self.window_text = line.split(":", 1)[1]
                continue
            return number, line
        raise ParsingError("group text ended before the group was complete")

    def _peek_field(self, name: str) -> Optional[str]:
        while self.pos < len(self.lines):
            _, line = self.lines[self.pos]
            if line.startswith("window:"):
                self.window_text = line.split(":", 1)[1]
                self.pos += 1
                continue
            if line.startswith(name + ":"):
                self.pos += 1
                return line.split(":", 1)[1].strip()
            return None
        return None

    def read(self) -> GroupOrderSpec:
        number, line = self._next()
        tokens = line.split()
        if len(tokens) < 2 or tokens[0] != "group":
            raise ParsingError(f"line {number}: expected a 'group' header, got {line!r}")
        kind, args = tokens[1], tokens[2:]
        try:
            if kind == "zn":
                return self._zn(number, args)
            if kind == "lexprod":
                if len(args) != 1 or not args[0].isdigit():
                    raise ParsingError(f"line {number}: expected 'group lexprod <k>'")
                return LexProductGroup(factor=int(args[0]), base=self.read())
            if kind == "lexsum":
                return self._lexsum(number, args)
            if kind == "odot":
                return self._odot(number, args)
        except ValidationError as e:
            raise ParsingError(f"line {number}: {e.errors()[0]['msg']}") from e
        raise ParsingError(f"line {number}: unknown group kind {kind!r}")

    def _zn(self, number: int, args: List[str]) -> ZnGroup:
        if len(args) != 1 or not args[0].isdigit():
            raise ParsingError(f"line {number}: expected 'group zn <n>'")
        n = int(args[0])
        rows_text = self._peek_field("weights")
        weights = WeightOrderSpec(rows=parse_rows(rows_text)) if rows_text else WeightOrderSpec.identity(n)
        if weights.n != n:
            raise ParsingError(f"line {number}: {weights.n} weight rows for dimension {n}")
        threshold_text = self._peek_field("threshold")
        if threshold_text is None:
            raise ParsingError(f"line {number}: zn group needs a 'threshold:' line")
        return ZnGroup(weights=weights, threshold=_segment(threshold_text))

    def _lexsum(self, number: int, args: List[str]) -> LexSumGroup:
        if not args or not args[0].isdigit():
            raise ParsingError(f"line {number}: expected 'group lexsum <m>'")
        m = int(args[0])
        options = _options(args[1:])
        outer = (
            WeightOrderSpec(rows=parse_rows(options["weights"]))
            if options.get("weights")
            else WeightOrderSpec.identity(m)
        )
        return LexSumGroup(outer=outer, inner=self.read())

    def _odot(self, number: int, args: List[str]) -> OdotGroup:
        text = " ".join(args)
        segment_match = re.search(r"F=(\([^)]*\))\s*(closed|open)?", text)
        alpha_match = re.search(r"alpha=(\([^)]*\))", text)
        if not segment_match or not alpha_match:
            raise ParsingError(f"line {number}: expected 'group odot F=(..) alpha=(..)'")
        theta = parse_tuple(segment_match.group(1))
        closed = segment_match.group(2) != "open"
        a_match = re.search(r"A=([-\d ;]+?)(?=\s+\w+=|$)", text)
        a_order = (
            WeightOrderSpec(rows=parse_rows(a_match.group(1)))
            if a_match
            else WeightOrderSpec.identity(len(theta))
        )
        return OdotGroup(
            a_order=a_order,
            segment=FinalSegmentSpec(theta=theta, closed=closed),
            base=self.read(),
            alpha=parse_tuple(alpha_match.group(1)),
        )


def _segment(text: str) -> FinalSegmentSpec:
    parts = text.rsplit(None, 1)
    closed = True
    if len(parts) == 2 and parts[1] in ("closed", "open"):
        text, closed = parts[0], parts[1] == "closed"
    return FinalSegmentSpec(theta=parse_tuple(text), closed=closed)


def parse_group(text: str) -> ParsedGroup:
    lines = _clean_lines(text)
    if not lines:
        raise ParsingError("empty group text")
    reader = _GroupReader(lines)
    spec = reader.read()
    reader._peek_field("window")
    if reader.pos < len(lines):
        number, line = lines[reader.pos]
        raise ParsingError(f"line {number}: unexpected {line!r} after the group spec")
    window = parse_window(reader.window_text, spec) if reader.window_text else None
    if window is not None and window.dim != spec.dim:
        raise ParsingError(f"window has {window.dim} coordinates, group has {spec.dim}")
    return ParsedGroup(spec, window)
