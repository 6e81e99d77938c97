"""Reading and writing the JSON wire formats: spaces, maps, measures, measures of measures, groups."""
import json
import logging
import math
from pathlib import Path
from typing import Any, Mapping

from ultramonad.core.budgets import Budgets, DEFAULT_BUDGETS
from ultramonad.core.errors import MalformedInput, MismatchedSpaces
from ultramonad.core.extended_reals import ExtReal, format_rational
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.scalar_functions import TestFunction
from ultramonad.core.monad_ops.kleisli import KleisliMap
from ultramonad.core.monad_ops.measure_of_measures import MeasureOfMeasures, measure_of_measures
from ultramonad.core.tensor_sym.permutation_group import PermutationGroup, group_closure, to_one_based
from ultramonad.core.ultra_core.hyperspace import FiniteSubset
from ultramonad.core.ultra_core.point_map import PointMap
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace, validate_ultrametric

logger = logging.getLogger(__name__)


def read_json(source: str | Path) -> Any:
    """Load a JSON file, or a JSON literal when `source` starts with "[" or "{"."""
    text_source = str(source)
    if text_source.lstrip().startswith(("[", "{")):
        return _loads(text_source, "<argument>")
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedInput(f"Cannot read {path}: {e.strerror}", path=str(path))
    return _loads(text, str(path))


def _loads(text: str, origin: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{origin}: {e.msg} at line {e.lineno}, column {e.colno}",
                             source=origin, line=e.lineno, column=e.colno, position=e.pos)


def dump_json(payload: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(payload, indent=2, ensure_ascii=False)
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def _require(obj: Any, key: str, what: str) -> Any:
    if not isinstance(obj, Mapping) or key not in obj:
        raise MalformedInput(f"{what} must be an object with a {key!r} field", field=key)
    return obj[key]


def _require_list(value: Any, what: str) -> list:
    if not isinstance(value, list):
        raise MalformedInput(f"{what} must be a JSON array")
    return value


def _require_label(value: Any, what: str) -> str:
    if not isinstance(value, str):
        raise MalformedInput(f"{what} must be a point label string, got {value!r}", value=repr(value))
    return value


def parse_ext_real(value: Any) -> ExtReal:
    if isinstance(value, float):
        raise MalformedInput(f"Floating point number {value!r}; write rationals as \"p/q\" strings", value=value)
    return ExtReal.coerce(value)


def display_float(value: float) -> float | str:
    """Floats for display output; infinities become the strings "inf" / "-inf"."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


# ---- spaces ----
def space_from_json(obj: Any) -> FinUltrametricSpace:
    points = _require_list(_require(obj, "points", "A space"), "Space points")
    for point in points:
        _require_label(point, "A space point")
    matrix = _require_list(_require(obj, "dist", "A space"), "Space dist")
    rows = [[parse_ext_real(entry) for entry in _require_list(row, "Distance row")] for row in matrix]
    return validate_ultrametric(points, rows)


def space_to_json(space: FinUltrametricSpace) -> dict[str, Any]:
    return {"points": list(space.points),
            "dist": [[format_rational(entry) for entry in row] for row in space.dist]}


def resolve_space(obj: Mapping[str, Any],
                  explicit_space: FinUltrametricSpace | None,
                  base_dir: Path | None = None) -> FinUltrametricSpace:
    """
    The space of a measure-like object: inline, a path reference (relative to the referencing file),
    or the explicitly passed space. An inline or referenced space must equal an explicit one.
    """
    reference = obj.get("space") if isinstance(obj, Mapping) else None
    if reference is None:
        if explicit_space is None:
            raise MalformedInput("No space given: inline one, reference a space file, or pass a space explicitly")
        return explicit_space
    if isinstance(reference, str):
        path = Path(reference)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        space = space_from_json(read_json(path))
    else:
        space = space_from_json(reference)
    if explicit_space is not None and space != explicit_space:
        raise MismatchedSpaces("The object's own space disagrees with the space passed on the command line")
    return space


# ---- maps, functions, subsets ----
def point_map_from_json(obj: Any, base_dir: Path | None = None) -> PointMap:
    source = resolve_space({"space": _require(obj, "source", "A point map")}, None, base_dir)
    target = resolve_space({"space": _require(obj, "target", "A point map")}, None, base_dir)
    assignment = _require(obj, "map", "A point map")
    if not isinstance(assignment, Mapping):
        raise MalformedInput("Point map \"map\" must be an object")
    images = {point: _require_label(image, f"The image of {point!r}") for point, image in assignment.items()}
    return PointMap(source=source, target=target, assignment=images)


def scalar_function_from_json(obj: Any, space: FinUltrametricSpace) -> TestFunction:
    values = _require(obj, "values", "A test function")
    if not isinstance(values, Mapping):
        raise MalformedInput("Test function \"values\" must be an object")
    parsed = {}
    for point, value in values.items():
        extended = parse_ext_real(value)
        if not extended.is_finite:
            raise MalformedInput(f"Test function values are finite, got {extended} at {point!r}", point=point)
        parsed[point] = extended.fraction
    return TestFunction(space=space, values=parsed)


def subset_from_json(obj: Any, space: FinUltrametricSpace) -> FiniteSubset:
    members = obj.get("members") if isinstance(obj, Mapping) else obj
    labels = [_require_label(member, "A subset member") for member in _require_list(members, "Subset members")]
    return FiniteSubset.of(space, labels)


def labels_from_json(obj: Any) -> tuple[str, ...]:
    return tuple(_require_label(label, "A point tuple entry") for label in _require_list(obj, "A point tuple"))


# ---- measures ----
def kind_from_json(value: Any) -> MeasureKind:
    try:
        return MeasureKind(value)
    except ValueError:
        raise MalformedInput(f"Unknown measure kind {value!r}, expected \"maxmin\" or \"maxplus\"", kind=value)


def _atoms_from_json(atoms: Any) -> list[tuple[str, ExtReal]]:
    raw = []
    for atom in _require_list(atoms, "Measure atoms"):
        point = _require_label(_require(atom, "point", "An atom"), "An atom point")
        raw.append((point, parse_ext_real(_require(atom, "weight", "An atom"))))
    return raw


def measure_from_json(obj: Any,
                      explicit_space: FinUltrametricSpace | None = None,
                      base_dir: Path | None = None,
                      kind: MeasureKind | None = None) -> Measure:
    """Raw atoms are canonicalized: duplicate points merge by max and -inf atoms are dropped."""
    measure_kind = kind_from_json(obj["kind"]) if isinstance(obj, Mapping) and "kind" in obj else kind
    if measure_kind is None:
        raise MalformedInput("A measure needs a \"kind\"")
    space = resolve_space(obj, explicit_space, base_dir)
    return canonicalize(measure_kind, space, _atoms_from_json(_require(obj, "atoms", "A measure")))


def measure_to_json(mu: Measure, include_space: bool = False) -> dict[str, Any]:
    payload: dict[str, Any] = {"kind": mu.kind.value}
    if include_space:
        payload["space"] = space_to_json(mu.space)
    payload["atoms"] = [{"point": point, "weight": str(weight)} for point, weight in mu.atoms]
    return payload


def weights_to_json(mu: Measure) -> dict[str, str]:
    return {point: str(weight) for point, weight in mu.atoms}


def measure_of_measures_from_json(obj: Any,
                                  explicit_space: FinUltrametricSpace | None = None,
                                  base_dir: Path | None = None) -> MeasureOfMeasures:
    """Inner measures may omit "kind" and "space"; they inherit the outer ones."""
    kind = kind_from_json(_require(obj, "kind", "A measure of measures"))
    space = resolve_space(obj, explicit_space, base_dir)
    raw = []
    for outer_atom in _require_list(_require(obj, "outer", "A measure of measures"), "Outer atoms"):
        inner = measure_from_json(_require(outer_atom, "measure", "An outer atom"), space, base_dir, kind)
        raw.append((inner, parse_ext_real(_require(outer_atom, "weight", "An outer atom"))))
    return measure_of_measures(kind, space, raw)


# ---- Kleisli maps ----
def kleisli_map_from_json(obj: Any, base_dir: Path | None = None) -> KleisliMap:
    """{"kind", "source", "target", "images": {point: {"atoms": [...]}}}."""
    kind = kind_from_json(_require(obj, "kind", "A Kleisli map"))
    source = resolve_space({"space": _require(obj, "source", "A Kleisli map")}, None, base_dir)
    target = resolve_space({"space": _require(obj, "target", "A Kleisli map")}, None, base_dir)
    images = _require(obj, "images", "A Kleisli map")
    if not isinstance(images, Mapping):
        raise MalformedInput("Kleisli map \"images\" must be an object")
    return KleisliMap(kind=kind, source=source, target=target,
                      images={point: measure_from_json(image, target, base_dir, kind)
                              for point, image in images.items()})


def kleisli_map_to_json(kleisli_map: KleisliMap) -> dict[str, Any]:
    return {"kind": kleisli_map.kind.value,
            "source": space_to_json(kleisli_map.source),
            "target": space_to_json(kleisli_map.target),
            "images": {point: {"atoms": measure_to_json(kleisli_map.images[point])["atoms"]}
                       for point in kleisli_map.source.points}}


# ---- groups ----
def group_from_json(obj: Any, budgets: Budgets = DEFAULT_BUDGETS) -> PermutationGroup:
    n = _require(obj, "n", "A group")
    if not isinstance(n, int) or isinstance(n, bool):
        raise MalformedInput("Group arity \"n\" must be an integer")
    generators = [_require_list(generator, "A generator")
                  for generator in _require_list(obj.get("generators", []), "Group generators")]
    for generator in generators:
        if not all(isinstance(image, int) and not isinstance(image, bool) for image in generator):
            raise MalformedInput(f"Generator images must be integers 1..{n}, got {generator!r}",
                                 generator=repr(generator))
    return group_closure(n, generators, budgets)


def group_to_json(group: PermutationGroup) -> dict[str, Any]:
    return {"n": group.n, "order": group.order,
            "elements": [to_one_based(sigma) for sigma in group.elements]}

