"""
ABCS Workbench
Copyright (C) 2026 ABCS Workbench contributors

This program is free software: you can redistribute it and/or modify it under the terms of the GNU General Public License
as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License for more details.

You should have received a copy of the GNU General Public License along with this program.  If not, see https://www.gnu.org/licenses/.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from ._base import WBFile
from .model import ApprovalVote, Committee, Profile, ReductionInstance
from .model.helpers import data_lines, join_names, parse_int
from .solvers.erm import LabeledSample
from .util import DomainError, ParseError, handle_exception


class PRF(WBFile):
    """Reads and writes approval profiles '.prf' (also '.txt', and '.smp' for labeled samples)

    The first data line is ``m <int> k <int>`` (k may be left out for a bare profile). An
    optional ``alts <name> ...`` line names the alternatives, otherwise they are a0..a(m-1).
    Every vote is a line ``<multiplicity> <name> ...``. Reduction instances add a
    ``committee <name> ...`` line and ``part <label> <start> <stop>`` lines, and labeled
    samples end with a ``winners`` line followed by one committee per line. Lines starting
    with '#' are comments.

    Args:
        prf_filepath (str, optional): Full filepath to profile file. If not specified, a new blank PRF class will be created.

    Output:
        Initiates 'PRF' class object

    Raises:
        TypeError: Raised if prf_filepath does not point to a .prf, .txt or .smp file
        FileNotFoundError: Raised if prf_filepath points to a file which does not exist
        WorkbenchError: Raised if the file content is malformed, chained from a ParseError that
            carries the line number
    """

    _filetype: str = "PRF"
    _suffixes: tuple[str, ...] = (".prf", ".txt", ".smp")

    @handle_exception(when="read")
    def __init__(self, prf_filepath: str | Path | None = None, from_json: bool = False):
        if from_json:
            return
        self.profile: Profile | None = None
        self.k: int | None = None
        self.committee: Committee | None = None
        self.parts: dict[str, tuple[int, int]] = {}
        self.winners: list[Committee] = []
        if prf_filepath is not None:
            WBFile.__init__(self, prf_filepath)
            self._read()

    def _read(self):
        with open(self._filepath) as prf_file:
            self._raw_data = prf_file.read()
        self._load(self._raw_data)

    def _load(self, text: str) -> None:  # noqa: C901, PLR0912
        m: int | None = None
        names: list[str] | None = None
        lookup: dict[str, int] = {}
        votes: list[ApprovalVote] = []
        in_winners = False

        def resolve(tokens: list[str], line_no: int) -> list[int]:
            indices = []
            for name in tokens:
                if name not in lookup:
                    raise ParseError(f"unknown alternative '{name}'", line_no)
                indices.append(lookup[name])
            if len(set(indices)) != len(indices):
                raise ParseError("repeated alternative", line_no)
            return indices

        for line_no, tokens in data_lines(text):
            keyword = tokens[0]
            if m is None:
                m = self._header(tokens, line_no)
                lookup = {f"a{i}": i for i in range(m)}
            elif in_winners:
                self.winners.append(Committee.of(resolve(tokens, line_no)))
            elif keyword == "alts":
                if votes or names is not None:
                    raise ParseError("'alts' must come once, before the votes", line_no)
                names = tokens[1:]
                if len(names) != m or len(set(names)) != m:
                    raise ParseError(f"expected {m} distinct alternative names", line_no)
                lookup = {name: idx for idx, name in enumerate(names)}
            elif keyword == "committee":
                self.committee = Committee.of(resolve(tokens[1:], line_no))
            elif keyword == "k" and len(tokens) == 2:  # noqa: PLR2004
                k = parse_int(tokens[1], "k", line_no)
                if self.k is not None and k != self.k:
                    raise ParseError(f"k={k} contradicts the header k={self.k}", line_no)
                self.k = k
            elif keyword == "part" and len(tokens) == 4:  # noqa: PLR2004
                start, stop = (parse_int(token, "Part bound", line_no) for token in tokens[2:])
                self.parts[tokens[1]] = (start, stop)
            elif keyword == "winners" and len(tokens) == 1:
                in_winners = True
            else:
                multiplicity = parse_int(keyword, "Vote multiplicity", line_no)
                if multiplicity < 1:
                    raise ParseError("vote multiplicity must be positive", line_no)
                members = resolve(tokens[1:], line_no)
                if not members:
                    raise ParseError("empty vote", line_no)
                if len(members) == m:
                    raise ParseError(f"vote approves all {m} alternatives", line_no)
                votes.append(ApprovalVote(frozenset(members), multiplicity))

        if m is None:
            raise ParseError("missing 'm <int> k <int>' header")
        if not votes:
            raise ParseError("profile holds no votes")
        self.profile = Profile(m, tuple(votes), None if names is None else tuple(names))
        for label, (start, stop) in self.parts.items():
            if not 0 <= start <= stop <= len(votes):
                raise ParseError(f"part '{label}' range {start}..{stop} lies outside the votes")
        sizes = {committee.k for committee in self.winners}
        if self.committee is not None:
            sizes.add(self.committee.k)
        if self.k is not None and sizes - {self.k}:
            raise ParseError(f"committees must have k={self.k} members")

    def _header(self, tokens: list[str], line_no: int) -> int:
        if tokens[0] != "m" or len(tokens) not in (2, 4) or (len(tokens) == 4 and tokens[2] != "k"):  # noqa: PLR2004
            raise ParseError(f"expected 'm <int> k <int>', got '{' '.join(tokens)}'", line_no)
        m = parse_int(tokens[1], "m", line_no)
        if m < 2:  # noqa: PLR2004
            raise ParseError(f"need at least 2 alternatives, got m={m}", line_no)
        if len(tokens) == 4:  # noqa: PLR2004
            self.k = parse_int(tokens[3], "k", line_no)
            if not 1 <= self.k < m:
                raise ParseError(f"k must satisfy 1 <= k < m, got k={self.k}", line_no)
        return m

    @classmethod
    def from_text(cls, text: str) -> PRF:
        """Parses profile text directly, raising ParseError rather than WorkbenchError."""
        prf = cls()
        prf._load(text)
        return prf

    @classmethod
    def from_profile(
        cls,
        profile: Profile,
        k: int | None = None,
        committee: Committee | None = None,
        winners: Iterable[Committee] = (),
        parts: dict[str, tuple[int, int]] | None = None,
    ) -> PRF:
        prf = cls()
        prf.profile = profile
        prf.k = k
        prf.committee = committee
        prf.winners = sorted(winners)
        prf.parts = dict(parts or {})
        return prf

    @classmethod
    def from_sample(cls, sample: LabeledSample) -> PRF:
        return cls.from_profile(sample.profile, sample.k, winners=sample.winners)

    @classmethod
    def from_instance(cls, instance: ReductionInstance) -> PRF:
        return cls.from_profile(
            instance.profile,
            instance.k,
            instance.committee,
            parts=instance.parts,
        )

    @property
    def sample(self) -> LabeledSample:
        """The labeled sample held by a '.smp' style file."""
        if not self.winners:
            raise DomainError(f"{self} holds no 'winners' section")
        return LabeledSample(self.profile, tuple(self.winners))

    @property
    def instance(self) -> ReductionInstance:
        """The profile, committee and k held by a reduction instance file."""
        if self.committee is None or self.k is None:
            raise DomainError(f"{self} needs a 'committee' line and a k to form an instance")
        return ReductionInstance(self.profile, self.committee, self.k, dict(self.parts))

    @handle_exception(when="write")
    def _write(self) -> str:
        """Returns string representation of the current profile data"""
        if self.profile is None:
            raise ValueError("A PRF needs a profile before it can be written")
        profile = self.profile
        lines = [f"m {profile.m}" if self.k is None else f"m {profile.m} k {self.k}"]
        if profile.names is not None:
            lines.append(f"alts {join_names(profile.names)}")
        for vote in profile.votes:
            names = [profile.name_of(a) for a in sorted(vote.alternatives)]
            lines.append(f"{vote.multiplicity} {join_names(names)}")
        if self.committee is not None:
            lines.append(f"committee {join_names(self.committee.names(profile))}")
        for label, (start, stop) in self.parts.items():
            lines.append(f"part {label} {start} {stop}")
        if self.winners:
            lines.append("winners")
            lines.extend(join_names(committee.names(profile)) for committee in self.winners)
        return "\n".join(lines) + "\n"

    def update(self) -> None:
        """Updates the existing PRF based on any altered attributes"""
        self._update()

    def save(self, filepath: str | Path) -> None:
        """Saves the PRF to the given location, if pointing to an existing file it will be overwritten.
        Once saved, the PRF() class will continue working from the saved location, therefore any further calls to PRF.update() will update in the latest saved location
        rather than the original source PRF used to construct the class"""
        self._save(filepath)
