# utils/definition_parser.py
import re
from dataclasses import dataclass, field

from quasi_core.Errors import DefinitionSyntaxError, DuplicateSection, UnknownReference

SECTION_KINDS = ("group", "cochain", "cocycle", "algebra", "system", "module")

# key -> section kinds it may name
REFERENCE_KEYS = {
    "group": ("group",),
    "cochain": ("cochain",),
    "cocycle": ("cocycle",),
    "base": ("algebra",),
    "algebra": ("algebra",),
    "from": ("algebra",),
}

_HEADER = re.compile(r"^\[\s*([A-Za-z]+)(?:\s+([A-Za-z_][A-Za-z0-9_\-]*))?\s*\]$")
_COBOUNDARY = re.compile(r"^coboundary\(\s*([A-Za-z_][A-Za-z0-9_\-]*)\s*\)$")


@dataclass
class Entry:
    key: str
    value: str
    line: int = field(default=0, compare=False)


@dataclass
class Section:
    kind: str
    name: str
    entries: list = field(default_factory=list)
    line: int = field(default=0, compare=False)

    def get(self, key, default=None):
        for entry in self.entries:
            if entry.key == key:
                return entry.value
        return default

    def entry(self, key):
        for entry in self.entries:
            if entry.key == key:
                return entry
        return None


@dataclass
class Document:
    conductor: int
    sections: list = field(default_factory=list)

    def section(self, name):
        for s in self.sections:
            if s.name == name:
                return s
        return None

    def of_kind(self, *kinds):
        return [s for s in self.sections if s.kind in kinds]


def normalize_key(key):
    """Collapse whitespace; product keys lose spaces around '*'."""
    key = " ".join(key.split())
    return re.sub(r"\s*\*\s*", "*", key)


def _strip_comment(raw):
    return raw.split("#", 1)[0].rstrip()


def parse(text):
    """Parse a definition file into a Document; errors carry the line (and column when known)."""
    doc = None
    current = None
    seen = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        column = len(line) - len(line.lstrip()) + 1
        if doc is None:
            key, sep, value = stripped.partition("=")
            if not sep or normalize_key(key) != "conductor":
                raise DefinitionSyntaxError("file must start with 'conductor = m'", number, column)
            try:
                conductor = int(value.strip())
            except ValueError:
                raise DefinitionSyntaxError(f"conductor must be an integer, got {value.strip()!r}",
                                            number, column + stripped.index("=") + 1) from None
            if conductor < 1:
                raise DefinitionSyntaxError("conductor must be positive", number, column)
            doc = Document(conductor)
            continue
        if stripped.startswith("["):
            match = _HEADER.match(stripped)
            if not match:
                raise DefinitionSyntaxError(f"malformed section header {stripped!r}", number, column)
            kind, name = match.group(1).lower(), match.group(2)
            if kind not in SECTION_KINDS:
                raise DefinitionSyntaxError(f"unknown section kind {kind!r}", number, column + 1)
            if name is None:
                if kind != "group":
                    raise DefinitionSyntaxError(f"[{kind}] sections need a name", number, column)
                name = "G"
            if name in seen:
                raise DuplicateSection(name, number)
            seen[name] = kind
            current = Section(kind, name, line=number)
            doc.sections.append(current)
            continue
        if stripped.startswith("conductor") and "=" in stripped and current is None:
            raise DefinitionSyntaxError("only one conductor per file", number, column)
        if current is None:
            raise DefinitionSyntaxError("entry outside of a section", number, column)
        key, sep, value = stripped.partition("=")
        if not sep:
            raise DefinitionSyntaxError("expected 'key = value'", number, column + len(stripped))
        key, value = normalize_key(key), value.strip()
        if not key:
            raise DefinitionSyntaxError("missing key before '='", number, column)
        if not value:
            raise DefinitionSyntaxError(f"missing value for {key!r}", number,
                                        column + stripped.index("=") + 1)
        current.entries.append(Entry(key, value, number))
    if doc is None:
        raise DefinitionSyntaxError("empty definition file", 1, 1)
    _check_references(doc, seen)
    return doc


def _check_references(doc, seen):
    for section in doc.sections:
        for entry in section.entries:
            kinds = REFERENCE_KEYS.get(entry.key)
            if kinds is not None:
                _require(seen, entry.value, kinds, entry.line)
        builtin = section.entry("builtin")
        if builtin is not None:
            match = _COBOUNDARY.match(builtin.value)
            if match:
                _require(seen, match.group(1), ("cochain",), builtin.line, allow_builtin=True)


_BUILTIN_COCHAINS = ("complex", "quaternion", "octonion")


def _require(seen, name, kinds, line, allow_builtin=False):
    if allow_builtin and (name in _BUILTIN_COCHAINS or name.startswith("clifford")):
        return
    if seen.get(name) not in kinds:
        raise UnknownReference(name, line)


def print_document(doc):
    """Canonical text form; parse(print_document(doc)) == doc."""
    out = [f"conductor = {doc.conductor}"]
    for section in doc.sections:
        out.append("")
        header = section.kind if section.kind == "group" and section.name == "G" else \
            f"{section.kind} {section.name}"
        out.append(f"[{header}]")
        for entry in section.entries:
            out.append(f"{entry.key} = {entry.value}")
    return "\n".join(out) + "\n"


def split_top(text, sep=","):
    """Split on sep outside of brackets and parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    parts.append(text[start:].strip())
    return [p for p in parts if p]


def unwrap(text, open_ch="(", close_ch=")"):
    text = text.strip()
    if not (text.startswith(open_ch) and text.endswith(close_ch)):
        raise DefinitionSyntaxError(f"expected {open_ch}...{close_ch}, got {text!r}")
    return text[1:-1]


def parse_key_tuple(text):
    """'(g,h)' or '((1,0),(0,1))' -> list of label strings."""
    return split_top(unwrap(text))


def parse_matrix(text):
    """'[[a, b], [c, d]]' -> rows of scalar strings."""
    rows = split_top(unwrap(text, "[", "]"))
    return [split_top(unwrap(row, "[", "]")) for row in rows]
