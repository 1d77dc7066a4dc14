# utils/workspace.py
import json
import logging

from quasi_core.Cochains import (Cochain2, Cocycle3, antiassociative_cocycle, clifford_cochain,
                                 coboundary_of, complex_cochain, octonion_cochain, quaternion_cochain,
                                 trivial_cochain, trivial_cocycle, z3_cocycle)
from quasi_core.DeformedGroupAlgebra import (DeformedGroupAlgebra, clifford, complex_algebra,
                                             group_algebra, kfz3, octonions, quaternions)
from quasi_core.Errors import DefinitionSyntaxError, InvalidParameter, UnknownReference
from quasi_core.FiniteGroup import FiniteGroup, cyclic, parse_product
from quasi_core.GradedModule import GradedModule, doubled_z3_module, mixed_action_module
from quasi_core.GradedQuasialgebra import Element, GradedQuasialgebra, infer_cocycle
from quasi_core.MatrixConstructions import (antiassoc_division, chessboard_matrices,
                                            deformed_matrices, mat_over_delta, triangular_deformed)
from quasi_core.QuasicrossedSystem import AssociativeAlgebra, QuasicrossedSystem, extract_system
from quasi_core.Scalar import parse_combination, parse_scalar, root_of_unity
from utils.definition_parser import parse, parse_key_tuple, parse_matrix, split_top

logger = logging.getLogger(__name__)

BUILTIN_NAMES = (
    "complex", "quaternions", "octonions", "clifford:n", "group:Z2xZ2",
    "deformed-matrices:n[:z3]", "triangular:n[:z3]", "chessboard:n,m",
    "delta:k,a[,m]", "mat-delta:n[:k,a,m]", "kfz3", "mixed-action", "doubled-z3",
)


# --------------------------
# BUILTINS
# --------------------------
def _int_arg(text, what):
    try:
        return int(text)
    except ValueError:
        raise InvalidParameter(f"{what} must be an integer, got {text!r}") from None


def _z3_or_trivial(n, tail):
    if not tail:
        return trivial_cocycle(cyclic(n))
    if tail != "z3":
        raise InvalidParameter(f"unknown cocycle option {tail!r}")
    if n != 3:
        raise InvalidParameter("the z3 cocycle needs n = 3")
    return z3_cocycle(1, 1, root_of_unity(3, 1), 3)


def _delta(args):
    parts = [p.strip() for p in args.split(",")] if args else []
    if len(parts) not in (2, 3):
        raise InvalidParameter(f"delta needs k,a[,m], got {args!r}")
    m = _int_arg(parts[2], "conductor") if len(parts) == 3 else 4
    return antiassoc_division(_int_arg(parts[0], "sigma power"), parse_scalar(parts[1], m), m)


def builtin(text, conductor=1):
    """Builtin algebra or module by name, e.g. 'clifford:3' or 'deformed-matrices:3:z3'."""
    head, _, args = text.strip().partition(":")
    if head == "complex":
        return complex_algebra(conductor)
    if head == "quaternions":
        return quaternions(conductor)
    if head == "octonions":
        return octonions(conductor)
    if head == "clifford":
        return clifford(_int_arg(args, "clifford n"), conductor)
    if head == "group":
        return group_algebra(parse_product(args), conductor)
    if head in ("deformed-matrices", "triangular"):
        n_text, _, tail = args.partition(":")
        n = _int_arg(n_text, "matrix size")
        phi = _z3_or_trivial(n, tail)
        return deformed_matrices(n, phi) if head == "deformed-matrices" else triangular_deformed(n, phi)
    if head == "chessboard":
        parts = args.split(",")
        if len(parts) != 2:
            raise InvalidParameter(f"chessboard needs n,m, got {args!r}")
        return chessboard_matrices(_int_arg(parts[0], "n"), _int_arg(parts[1], "m"), conductor)
    if head == "delta":
        return _delta(args)
    if head == "mat-delta":
        n_text, _, tail = args.partition(":")
        delta = _delta(tail) if tail else antiassoc_division(1, 1, 1)
        return mat_over_delta(_int_arg(n_text, "matrix size"), delta)
    if head == "kfz3":
        return kfz3(conductor)
    if head == "mixed-action":
        return mixed_action_module()
    if head == "doubled-z3":
        return doubled_z3_module(args or "displayed")
    raise InvalidParameter(f"unknown builtin {text!r}; known: {', '.join(BUILTIN_NAMES)}")


_COCHAIN_BUILTINS = {
    "complex": complex_cochain,
    "quaternion": quaternion_cochain,
    "octonion": octonion_cochain,
}


# --------------------------
# DOCUMENT RESOLUTION
# --------------------------
# fixed keys and key prefixes each section kind accepts
_SECTION_KEYS = {
    "group": ({"product", "table", "identity", "labels"}, ()),
    "cochain": ({"builtin", "group", "table"}, ("(",)),
    "cocycle": ({"builtin", "group", "table"}, ("(",)),
    "algebra": ({"builtin", "group", "cochain", "cocycle", "names", "basis", "one"}, ()),
    "system": ({"from", "group", "base", "cocycle"}, ("sigma ", "alpha ")),
    "module": ({"algebra", "basis"}, ("left:", "right:")),
}


def _check_keys(section):
    keys, prefixes = _SECTION_KEYS[section.kind]
    for entry in section.entries:
        if entry.key in keys or entry.key.startswith(prefixes):
            continue
        # algebra structure constants: a*b = ...
        if section.kind == "algebra" and "*" in entry.key and ":" not in entry.key:
            continue
        raise DefinitionSyntaxError(f"unknown key {entry.key!r} in [{section.kind} {section.name}]",
                                    entry.line)


def _table_items(entry):
    """'{ (g,h): value, ... }' -> [(key, value text), ...]."""
    text = entry.value.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise DefinitionSyntaxError("table must be written as { (g,h): value, ... }", entry.line)
    items = []
    for item in split_top(text[1:-1]):
        parts = split_top(item, ":")
        if len(parts) != 2:
            raise DefinitionSyntaxError(f"cannot read table item {item!r}", entry.line)
        items.append((parts[0], parts[1]))
    return items


def _matrix_rows(entry, conductor):
    """'[[a, b], [c, d]]', optionally written 'matrix [[a, b], [c, d]]'."""
    text = entry.value.strip()
    if text.startswith("matrix"):
        text = text[len("matrix"):].strip()
    try:
        return [[parse_scalar(x, conductor) for x in row] for row in parse_matrix(text)]
    except DefinitionSyntaxError as exc:
        raise DefinitionSyntaxError(str(exc), entry.line) from None


class Workspace:
    """Resolves the sections of a parsed Document into library objects, on demand."""

    def __init__(self, document):
        self.document = document
        self.conductor = document.conductor
        self._objects = {}

    @classmethod
    def from_text(cls, text):
        return cls(parse(text))

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def names(self, *kinds):
        return [s.name for s in self.document.of_kind(*kinds)]

    def main_name(self):
        """Last algebra, system or module section: the file's subject."""
        candidates = self.names("algebra", "system", "module")
        if not candidates:
            raise InvalidParameter("definition file declares no algebra, system or module")
        return candidates[-1]

    def get(self, name, line=None):
        if name in self._objects:
            return self._objects[name]
        section = self.document.section(name)
        if section is None:
            raise UnknownReference(name, line)
        resolver = getattr(self, f"_resolve_{section.kind}")
        _check_keys(section)
        try:
            obj = resolver(section)
        except DefinitionSyntaxError as exc:
            if exc.line is None:
                raise DefinitionSyntaxError(str(exc), section.line) from None
            raise
        if hasattr(obj, "name") and not isinstance(obj, FiniteGroup):
            obj.name = name
        self._objects[name] = obj
        logger.debug("resolved %s %s", section.kind, name)
        return obj

    def _ref(self, section, key):
        entry = section.entry(key)
        if entry is None:
            raise DefinitionSyntaxError(f"[{section.kind} {section.name}] needs '{key}'", section.line)
        return self.get(entry.value, entry.line)

    def _label(self, group, label, entry):
        try:
            return group.index_of(label)
        except InvalidParameter as exc:
            raise DefinitionSyntaxError(str(exc), entry.line) from None

    # --------------------------
    # SECTION KINDS
    # --------------------------
    def _resolve_group(self, section):
        product = section.get("product")
        if product is not None:
            return parse_product(product)
        table = section.entry("table")
        if table is None:
            raise DefinitionSyntaxError("[group] needs 'product' or 'table'", section.line)
        try:
            rows = json.loads(table.value)
        except ValueError:
            raise DefinitionSyntaxError("table must be a list of integer rows", table.line) from None
        identity = int(section.get("identity", "0"))
        labels = section.get("labels")
        labels = [x.strip() for x in labels.split(",")] if labels else None
        return FiniteGroup(rows, identity=identity, labels=labels)

    def _group_values(self, section, arity):
        """Entries from '(g,h) = value' lines and from 'table = { (g,h): value, ... }'."""
        group = self._ref(section, "group")
        items = [(e.key, e.value, e) for e in section.entries if e.key.startswith("(")]
        table = section.entry("table")
        if table is not None:
            items.extend((key, text, table) for key, text in _table_items(table))
        values = {}
        for key, text, entry in items:
            try:
                labels = tuple(label.replace(" ", "") for label in parse_key_tuple(key))
            except DefinitionSyntaxError as exc:
                raise DefinitionSyntaxError(str(exc), entry.line) from None
            if len(labels) != arity:
                raise DefinitionSyntaxError(f"expected {arity} group elements in {key}", entry.line)
            if labels in values:
                raise DefinitionSyntaxError(f"entry {key} given twice", entry.line)
            values[labels] = self._scalar(entry, text)
        return group, values

    def _scalar(self, entry, text=None):
        try:
            return parse_scalar(entry.value if text is None else text, self.conductor)
        except DefinitionSyntaxError as exc:
            raise DefinitionSyntaxError(str(exc), entry.line, exc.column) from None

    def _resolve_cochain(self, section):
        name = section.get("builtin")
        if name is not None:
            return self._builtin_cochain(section, name)
        group, values = self._group_values(section, 2)
        return Cochain2(group, values, self.conductor)

    def _builtin_cochain(self, section, name):
        if name in _COCHAIN_BUILTINS:
            return _COCHAIN_BUILTINS[name](self.conductor)
        if name.startswith("clifford:"):
            return clifford_cochain(_int_arg(name.split(":", 1)[1], "clifford n"), self.conductor)
        if name == "trivial":
            return trivial_cochain(self._ref(section, "group"), self.conductor)
        if self.document.section(name) is not None:
            return self.get(name)
        raise DefinitionSyntaxError(f"unknown cochain builtin {name!r}", section.entry("builtin").line)

    def _resolve_cocycle(self, section):
        entry = section.entry("builtin")
        if entry is None:
            group, values = self._group_values(section, 3)
            return Cocycle3(group, values, self.conductor)
        name = entry.value
        if name == "trivial":
            return trivial_cocycle(self._ref(section, "group"), self.conductor)
        if name == "antiassociative":
            return antiassociative_cocycle(self.conductor)
        if name.startswith("z3(") and name.endswith(")"):
            params = [parse_scalar(p, self.conductor) for p in split_top(name[3:-1])]
            if len(params) != 3:
                raise DefinitionSyntaxError("z3 needs (alpha, beta, omega)", entry.line)
            return z3_cocycle(*params, conductor=self.conductor)
        if name.startswith("coboundary(") and name.endswith(")"):
            return coboundary_of(self._builtin_cochain(section, name[len("coboundary("):-1].strip()))
        raise DefinitionSyntaxError(f"unknown cocycle builtin {name!r}", entry.line)

    def _resolve_algebra(self, section):
        name = section.get("builtin")
        if name is not None:
            return builtin(name, self.conductor)
        if section.get("cochain") is not None:
            group = self._ref(section, "group")
            F = self._ref(section, "cochain")
            names = section.get("names")
            names = [x.strip() for x in names.split(",")] if names else None
            return DeformedGroupAlgebra(group, F, names=names, name=section.name)
        if section.get("basis") is None:
            raise DefinitionSyntaxError(
                f"[algebra {section.name}] needs 'builtin', 'cochain' or 'basis'", section.line)
        group = self._ref(section, "group") if section.get("group") else None
        basis, degrees = self._basis(section.entry("basis"), group)
        structure = self._products(section, basis, basis, basis)
        one = section.entry("one")
        one = None if one is None else self._combination(one, basis)
        if group is None:
            return AssociativeAlgebra(basis, structure, one=one, name=section.name,
                                      conductor=self.conductor)
        cocycle = section.get("cocycle")
        if cocycle is None:
            phi = infer_cocycle(group, len(basis), degrees, structure, self.conductor)
        else:
            phi = self._ref(section, "cocycle")
        return GradedQuasialgebra(group, basis, degrees, structure, cocycle=phi, one=one,
                                  name=section.name, conductor=self.conductor)

    def _basis(self, entry, group):
        basis, degrees = [], []
        for item in split_top(entry.value):
            name, sep, label = item.partition(":")
            name = name.strip()
            if not name:
                raise DefinitionSyntaxError(f"empty basis name in {item!r}", entry.line)
            basis.append(name)
            if group is not None:
                if not sep:
                    raise DefinitionSyntaxError(f"basis element {name} needs a degree", entry.line)
                try:
                    degrees.append(group.index_of(label.strip()))
                except InvalidParameter:
                    raise DefinitionSyntaxError(f"unknown degree {label.strip()!r}", entry.line) from None
        return basis, degrees

    def _combination(self, entry, names):
        try:
            parsed = parse_combination(entry.value, self.conductor, names)
        except DefinitionSyntaxError as exc:
            raise DefinitionSyntaxError(str(exc), entry.line, exc.column) from None
        if parsed.get(None):
            raise DefinitionSyntaxError("bare scalar terms are not allowed here", entry.line)
        return {names.index(k): c for k, c in parsed.items() if k is not None}

    def _products(self, section, left_names, right_names, out_names, prefix=""):
        table = {}
        for entry in section.entries:
            key = entry.key
            if prefix:
                if not key.startswith(prefix):
                    continue
                key = key[len(prefix):].strip()
            elif ":" in key or "*" not in key:
                continue
            a, sep, b = key.partition("*")
            if not sep or a not in left_names or b not in right_names:
                raise DefinitionSyntaxError(f"cannot read product {entry.key!r}", entry.line)
            table[(left_names.index(a), right_names.index(b))] = self._combination(entry, out_names)
        return table

    def _resolve_system(self, section):
        source = section.entry("from")
        if source is not None:
            s = extract_system(self.get(source.value, source.line), seed=0)
            s.name = section.name
            return s
        group = self._ref(section, "group")
        base = self._ref(section, "base")
        cocycle = self._ref(section, "cocycle") if section.get("cocycle") else \
            trivial_cocycle(group, self.conductor)
        sigma, alpha = {}, {}
        for entry in section.entries:
            if entry.key.startswith("sigma "):
                label = entry.key[len("sigma "):].strip()
                sigma[self._label(group, label, entry)] = _matrix_rows(entry, self.conductor)
            elif entry.key.startswith("alpha "):
                labels = parse_key_tuple(entry.key[len("alpha "):])
                coeffs = self._combination_with_scalars(entry, base)
                alpha[tuple(labels)] = coeffs
        return QuasicrossedSystem(group, base, cocycle, sigma, alpha, name=section.name)

    def _combination_with_scalars(self, entry, algebra):
        try:
            parsed = parse_combination(entry.value, self.conductor, algebra.basis)
        except DefinitionSyntaxError as exc:
            raise DefinitionSyntaxError(str(exc), entry.line, exc.column) from None
        x = Element(algebra, {algebra.index(k): c for k, c in parsed.items() if k is not None})
        if parsed.get(None):
            x = x + algebra.scalar(parsed[None])
        return x

    def _resolve_module(self, section):
        A = self._ref(section, "algebra")
        basis, degrees = self._basis(section.entry("basis"), A.group)
        left = self._products(section, A.basis, basis, basis, prefix="left:")
        right = self._products(section, basis, A.basis, basis, prefix="right:")
        return GradedModule(A, basis, degrees, left=left or None, right=right or None,
                            name=section.name)


def parse_element(algebra, text):
    """Element of an algebra (or vector of a module) from its textual form."""
    parsed = parse_combination(text, algebra.conductor, algebra.basis)
    coeffs = {algebra.basis.index(k): c for k, c in parsed.items() if k is not None}
    x = Element(algebra, coeffs)
    if parsed.get(None):
        if not hasattr(algebra, "scalar"):
            raise InvalidParameter(f"module vectors have no scalar part: {text!r}")
        x = x + algebra.scalar(parsed[None])
    return x
