"""Builtin group catalog, corpus file I/O, and prime-set partitions.

The catalog is curated rather than exhaustive by order; the line-oriented
file format is the extension point for importing further groups:

    # comment
    group S3 deg 3
    gen (1 2 3)
    gen (1 2)
    order 6
    tags soluble

Entries are blank-line separated; ``order`` is mandatory and is checked
against the group actually generated, so a typo'd generator fails loudly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, GroupInputError
from .numbers import is_prime
from .permcore import Perm, PermGroup, interned, parse_cycles
from .sigma import SigmaPartition


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    degree: int
    generators: tuple[Perm, ...]
    expected_order: int
    tags: tuple[str, ...] = ()

    def build(self) -> PermGroup:
        G = interned(PermGroup(self.degree, self.generators))
        if G.order != self.expected_order:
            raise GroupInputError(
                f"corpus entry {self.name!r}: generated order {G.order}, "
                f"declared {self.expected_order}")
        return G


def _entry(name: str, degree: int, gens: list[str], order: int, tags: str) -> CorpusEntry:
    perms = tuple(Perm(parse_cycles(g, degree)) for g in gens)
    return CorpusEntry(name, degree, perms, order, tuple(tags.split()))


def _cycle_text(n: int) -> str:
    return "(" + " ".join(str(i) for i in range(1, n + 1)) + ")"


# Generator words for the non-cyclic entries were derived once (matrix actions
# for SL(2,5) and GL(3,2), semidirect actions for the Frobenius groups) and
# are frozen here; expected_order re-checks them on every build.
_BUILTIN: list[CorpusEntry] = []

_BUILTIN.append(_entry("C1", 1, [], 1, "cyclic abelian nilpotent trivial"))
for _n in range(2, 17):
    _tags = "cyclic abelian nilpotent"
    if len({p for p in (2, 3, 5, 7, 11, 13) if _n % p == 0}) == 1:
        _tags += " p-group"
    _BUILTIN.append(_entry(f"C{_n}", _n, [_cycle_text(_n)], _n, _tags))

_BUILTIN += [
    _entry("E4", 4, ["(1 2)", "(3 4)"], 4, "elementary-abelian abelian nilpotent p-group"),
    _entry("E8", 6, ["(1 2)", "(3 4)", "(5 6)"], 8, "elementary-abelian abelian nilpotent p-group"),
    _entry("E9", 6, ["(1 2 3)", "(4 5 6)"], 9, "elementary-abelian abelian nilpotent p-group"),
    _entry("S3", 3, ["(1 2 3)", "(1 2)"], 6, "symmetric soluble"),
    _entry("S4", 4, ["(1 2 3 4)", "(1 2)"], 24, "symmetric soluble"),
    _entry("S5", 5, ["(1 2 3 4 5)", "(1 2)"], 120, "symmetric insoluble"),
    _entry("A4", 4, ["(1 2 3)", "(1 2)(3 4)"], 12, "alternating soluble"),
    _entry("A5", 5, ["(1 2 3 4 5)", "(1 2 3)"], 60, "alternating simple insoluble perfect"),
    _entry("D8", 4, ["(1 2 3 4)", "(1 3)"], 8, "dihedral nilpotent p-group"),
    _entry("D10", 5, ["(1 2 3 4 5)", "(2 5)(3 4)"], 10, "dihedral soluble"),
    _entry("D12", 6, ["(1 2 3 4 5 6)", "(2 6)(3 5)"], 12, "dihedral soluble"),
    _entry("Q8", 8, ["(1 2 3 4)(5 8 7 6)", "(1 5 3 7)(2 6 4 8)"], 8,
           "quaternion nilpotent p-group"),
    _entry("Q16", 16, ["(1 2 3 4 5 6 7 8)(9 16 15 14 13 12 11 10)",
                       "(1 9 5 13)(2 10 6 14)(3 11 7 15)(4 12 8 16)"], 16,
           "quaternion nilpotent p-group"),
    _entry("F20", 5, ["(1 2 3 4 5)", "(2 3 5 4)"], 20, "frobenius soluble"),
    _entry("F21", 7, ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 21, "frobenius soluble"),
    _entry("SL(2,3)", 8, ["(1 4 7)(2 8 5)", "(1 6 2 3)(4 7 8 5)"], 24, "linear soluble"),
    _entry("C3xS3", 6, ["(1 2 3)", "(4 5 6)", "(4 5)"], 18, "direct-product soluble"),
    _entry("C2xA4", 6, ["(1 2)", "(3 4 5)", "(3 4)(5 6)"], 24, "direct-product soluble"),
    # beyond the required minimum: more PsigmaT positives/negatives and two
    # more insoluble groups so the campaign sees each class fail often enough
    _entry("Dic3", 7, ["(1 2 3)", "(2 3)(4 5 6 7)"], 12, "dicyclic soluble"),
    _entry("C7:C6", 7, ["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"], 42, "frobenius soluble"),
    _entry("C13:C3", 13, ["(1 2 3 4 5 6 7 8 9 10 11 12 13)",
                          "(2 4 10)(3 7 6)(5 13 11)(8 9 12)"], 39, "frobenius soluble"),
    _entry("C4xS3", 7, ["(1 2 3 4)", "(5 6 7)", "(5 6)"], 24, "direct-product soluble"),
    _entry("C2xS4", 6, ["(1 2)", "(3 4 5 6)", "(3 4)"], 48, "direct-product soluble"),
    _entry("C3xA4", 7, ["(1 2 3)", "(4 5 6)", "(4 5)(6 7)"], 36, "direct-product soluble"),
    _entry("C5xA4", 9, ["(1 2 3 4 5)", "(6 7 8)", "(6 7)(8 9)"], 60, "direct-product soluble"),
    _entry("C3xS4", 7, ["(1 2 3)", "(4 5 6 7)", "(4 5)"], 72, "direct-product soluble"),
    _entry("C2xSL(2,3)", 10, ["(1 2)", "(3 6 9)(4 10 7)", "(3 8 4 5)(6 9 10 7)"], 48,
           "direct-product soluble"),
    _entry("SL(2,5)", 24, ["(1 6 11 16 21)(2 12 22 7 17)(3 18 8 23 13)(4 24 19 14 9)",
                           "(1 20 4 5)(2 15 3 10)(6 21 24 9)(7 16 23 14)"
                           "(8 11 22 19)(12 17 18 13)"], 120, "linear insoluble perfect"),
    _entry("PSL(2,7)", 7, ["(2 6)(3 7)", "(1 4 2)(3 5 6)"], 168,
           "linear simple insoluble perfect"),
]


def builtin_corpus() -> list[CorpusEntry]:
    return list(_BUILTIN)


def builtin_entry(name: str) -> CorpusEntry:
    for e in _BUILTIN:
        if e.name == name:
            return e
    raise GroupInputError(f"no builtin group named {name!r}")


# ---------------------------------------------------------------------------
# corpus files

def parse_corpus_file(text: str) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    names: set[str] = set()
    cur: dict | None = None

    def flush(lineno):
        nonlocal cur
        if cur is None:
            return
        if cur["order"] is None:
            raise GroupInputError(
                f"line {lineno}: entry {cur['name']!r} has no order line")
        e = CorpusEntry(cur["name"], cur["degree"], tuple(cur["gens"]),
                        cur["order"], tuple(cur["tags"]))
        e.build()  # raises with the entry named on order mismatch
        entries.append(e)
        cur = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush(lineno)
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "group":
            flush(lineno)
            if len(fields) != 4 or fields[2] != "deg":
                raise GroupInputError(
                    f"line {lineno}: expected 'group <name> deg <n>', got {raw!r}")
            name = fields[1]
            if name in names:
                raise GroupInputError(f"line {lineno}: duplicate group name {name!r}")
            names.add(name)
            try:
                degree = int(fields[3])
            except ValueError:
                raise GroupInputError(f"line {lineno}: bad degree {fields[3]!r}") from None
            if degree < 1:
                raise GroupInputError(f"line {lineno}: degree must be positive")
            cur = {"name": name, "degree": degree, "gens": [], "order": None, "tags": []}
            continue
        if cur is None:
            raise GroupInputError(f"line {lineno}: {kind!r} before any group header")
        if kind == "gen":
            body = line[len("gen"):].strip()
            try:
                cur["gens"].append(Perm(parse_cycles(body, cur["degree"])))
            except GroupInputError as exc:
                raise GroupInputError(f"line {lineno}: {exc}") from None
        elif kind == "order":
            if cur["order"] is not None:
                raise GroupInputError(f"line {lineno}: second order line for {cur['name']!r}")
            if len(fields) != 2 or not fields[1].isdigit():
                raise GroupInputError(f"line {lineno}: bad order line {raw!r}")
            cur["order"] = int(fields[1])
        elif kind == "tags":
            cur["tags"].extend(fields[1:])
        else:
            raise GroupInputError(f"line {lineno}: unknown directive {kind!r}")
    flush(len(text.splitlines()) + 1)
    return entries


def serialize_corpus(entries: list[CorpusEntry]) -> str:
    chunks = []
    for e in entries:
        lines = [f"group {e.name} deg {e.degree}"]
        lines += [f"gen {g}" for g in e.generators]
        lines.append(f"order {e.expected_order}")
        if e.tags:
            lines.append("tags " + " ".join(e.tags))
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + ("\n" if chunks else "")


# ---------------------------------------------------------------------------
# partitions of a prime set

def partitions_of_primes(pi) -> list[SigmaPartition]:
    """All set partitions of pi (Bell(|pi|) many) as listed partitions.

    The discrete partition already agrees with sigma1 on pi, so the classical
    spelling is never added separately; the empty prime set yields the single
    empty partition.
    """
    primes = sorted(set(pi))
    for p in primes:
        if not is_prime(p):
            raise GroupInputError(f"{p} is not a prime")
    if len(primes) > 6:
        raise CapacityError(f"partitions of {len(primes)} primes exceed the size bound 6")
    out: list[SigmaPartition] = []
    for blocks in _set_partitions(primes):
        out.append(SigmaPartition.of_blocks(*blocks))
    out.sort(key=lambda s: (len(s.blocks), s.text()))
    return out


def _set_partitions(items: list) -> list[list[set]]:
    if not items:
        return [[]]
    head, rest = items[0], items[1:]
    out = []
    for part in _set_partitions(rest):
        for i in range(len(part)):
            out.append(part[:i] + [part[i] | {head}] + part[i + 1:])
        out.append(part + [{head}])
    return out
