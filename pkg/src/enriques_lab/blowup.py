"""Triple-intersection calculus on towers of blow-ups of P^3.

A model is built by pushing point and curve centers onto P^3; each
center contributes one generator (its exceptional divisor, always the
total transform).  Divisor classes are integer vectors over the
generator list; strict transforms must be entered explicitly as
pullback minus multiples of later exceptionals.

Monomials reduce stage by stage.  At the top stage with exceptional E
over a center in the previous variety:

    point:  f*A . f*B . E = 0,  f*A . E^2 = 0,  E^3 = 1;
    curve C, genus g:  f*A . f*B . E = 0,  f*A . E^2 = -(A . C),
                       E^3 = 2 - 2g + K . C,

with A . C and K . C read off the stored incidence numbers at the stage
of that blow-up.  Everything below the top stage is a pullback and
recurses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactla import IntRowLattice


class SchemaError(ValueError):
    """Malformed center or class data."""


@dataclass(frozen=True)
class Center:
    name: str
    kind: str  # "point" | "curve"
    genus: int = 0
    incidence: dict = field(default_factory=dict)  # generator name -> G . C
    note: str = ""

    def __post_init__(self):
        if self.kind not in ("point", "curve"):
            raise SchemaError(f"unknown center kind {self.kind!r}")
        if self.kind == "point" and self.incidence:
            raise SchemaError("point centers carry no incidence data")
        if self.genus < 0:
            raise SchemaError("genus must be nonnegative")


@dataclass(frozen=True)
class BlowupModel:
    label: str
    generators: tuple  # ("H", exceptional names...)
    centers: tuple
    canonical: tuple  # canonical class over the generators
    _incidence_rows: tuple = ()  # per center: tuple of G . C over earlier generators

    @classmethod
    def p3(cls, label="P3"):
        return cls(label, ("H",), (), (-4,), ())

    def generator_index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise SchemaError(f"unknown generator {name!r}") from None

    def div(self, coeffs) -> tuple:
        """Class vector from a mapping {generator name: coefficient}."""
        v = [0] * len(self.generators)
        for name, c in coeffs.items():
            v[self.generator_index(name)] = int(c)
        return tuple(v)

    def generator_class(self, name: str) -> tuple:
        v = [0] * len(self.generators)
        v[self.generator_index(name)] = 1
        return tuple(v)


def push_blowup(model: BlowupModel, center: Center) -> BlowupModel:
    """Blow up one more center; returns a new model."""
    if center.name in model.generators:
        raise SchemaError(f"duplicate generator name {center.name!r}")
    if center.kind == "curve":
        current = set(model.generators)
        given = set(center.incidence)
        if given != current:
            missing = current - given
            extra = given - current
            raise SchemaError(
                f"curve center {center.name!r}: incidence must cover the current "
                f"generators exactly (missing {sorted(missing)}, extra {sorted(extra)})"
            )
        row = tuple(int(center.incidence[g]) for g in model.generators)
        canonical_gain = 1
    else:
        row = ()
        canonical_gain = 2
    return BlowupModel(
        model.label,
        model.generators + (center.name,),
        model.centers + (center,),
        model.canonical + (canonical_gain,),
        model._incidence_rows + (row,),
    )


def _as_vector(model: BlowupModel, d) -> list:
    if isinstance(d, dict):
        return list(model.div(d))
    if isinstance(d, str):
        return list(model.generator_class(d))
    v = list(d)
    if len(v) != len(model.generators):
        raise SchemaError("class vector length does not match the generator count")
    return [int(x) for x in v]


def triple_product(model: BlowupModel, d1, d2, d3) -> int:
    """Trilinear intersection number D1 . D2 . D3 on the top of the tower."""
    a, b, c = (_as_vector(model, d) for d in (d1, d2, d3))
    total = 0
    for k in range(len(model.centers), 0, -1):
        center = model.centers[k - 1]
        ca, cb, cc = a[k], b[k], c[k]
        if ca or cb or cc:
            if center.kind == "point":
                total += ca * cb * cc
            else:
                row = model._incidence_rows[k - 1]
                ia = sum(x * y for x, y in zip(a[:k], row))
                ib = sum(x * y for x, y in zip(b[:k], row))
                ic = sum(x * y for x, y in zip(c[:k], row))
                kc = sum(x * y for x, y in zip(model.canonical[:k], row))
                e3 = 2 - 2 * center.genus + kc
                total += ca * cb * cc * e3 - (cb * cc * ia + ca * cc * ib + ca * cb * ic)
        del a[k], b[k], c[k]
    return total + a[0] * b[0] * c[0]


def check_zero_restriction(model: BlowupModel, surface, exceptional) -> bool:
    """True iff S . E . G = 0 for every generator G (S . E vanishes)."""
    s = _as_vector(model, surface)
    e = _as_vector(model, exceptional)
    return all(
        triple_product(model, s, e, model.generator_class(g)) == 0
        for g in model.generators
    )


def divisible_mod_trivial(model: BlowupModel, d, trivial, n: int = 2) -> bool:
    """Is D in span_Z(trivial) + n * (generator lattice)?"""
    if n < 2:
        raise ValueError("n must be >= 2")
    dim = len(model.generators)
    lattice = IntRowLattice(dim)
    for t in trivial:
        lattice.add(_as_vector(model, t))
    for i in range(dim):
        lattice.add([n if j == i else 0 for j in range(dim)])
    return _as_vector(model, d) in lattice


def load_model(data) -> tuple:
    """Build (model, classes) from a fixture dict.

    Sparse incidence maps are completed with zeros over the generators
    present at the center's stage; push_blowup still sees full maps.
    """
    model = BlowupModel.p3(data.get("label", "model"))
    for entry in data["centers"]:
        kind = entry["kind"]
        if kind == "curve":
            incidence = {g: 0 for g in model.generators}
            for key, val in entry.get("incidence", {}).items():
                if key not in incidence:
                    raise SchemaError(f"incidence names unknown generator {key!r}")
                incidence[key] = int(val)
        else:
            incidence = {}
        model = push_blowup(
            model,
            Center(entry["name"], kind, int(entry.get("genus", 0)), incidence,
                   entry.get("note", "")),
        )
    classes = {name: model.div(coeffs) for name, coeffs in data.get("classes", {}).items()}
    return model, classes


def run_model_checks(data):
    """Evaluate a fixture's declared checks; list of plain result dicts."""
    model, classes = load_model(data)
    results = []
    for chk in data.get("checks", {}).get("triples", []):
        a, b, c = (classes[x] for x in chk["classes"])
        got = triple_product(model, a, b, c)
        results.append({
            "id": f"triple/{chk['name']}",
            "computed": got,
            "expected": chk["expected"],
            "status": "pass" if got == chk["expected"] else "fail",
        })
    for chk in data.get("checks", {}).get("zero_restrictions", []):
        got = check_zero_restriction(model, classes[chk["surface"]], classes[chk["exceptional"]])
        results.append({
            "id": f"zero-restriction/{chk['surface']}.{chk['exceptional']}",
            "computed": got,
            "expected": chk["expected"],
            "status": "pass" if got == chk["expected"] else "fail",
        })
    for chk in data.get("checks", {}).get("divisibility", []):
        got = divisible_mod_trivial(
            model, classes[chk["class"]], [classes[t] for t in chk["trivial"]], chk.get("n", 2)
        )
        results.append({
            "id": f"div{chk.get('n', 2)}/{chk['class']}",
            "computed": got,
            "expected": chk["expected"],
            "status": "pass" if got == chk["expected"] else "fail",
        })
    return results
