"""
Sullivan Models Module

Pure Sullivan algebras over Q: the model of a homotopy fiber built from a
map of free polynomial rings, minimization by eliminating contractible pairs,
and the quadratic-differential witness that obstructs homotopy commutativity
of the loop space.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from algebra import (
    QQ,
    DegreeMismatchError,
    GenSymbol,
    GradedAlgebra,
    GradedPoly,
    Presentation,
    substitute,
    transfer,
)

LOGGER = logging.getLogger(__name__)


class NotPureModelError(ValueError):
    """Raised when minimize receives a model that is not pure two-stage."""


class NonMinimalModelError(ValueError):
    """Raised when a witness is requested from a model with linear differentials."""


# ---------------------------------------------------------------------- #
#  Data types                                                              #
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class SullivanModel:
    """
    A free graded-commutative algebra over Q with a differential.

    Attributes:
        algebra: Free algebra on the model's generators.
        differentials: (generator name, d(generator)) for every generator with nonzero d.
        name: Display name of the modelled space.
        eliminated: (even, odd) generator pairs removed by minimization, in order.
    """
    algebra: GradedAlgebra
    differentials: Tuple[Tuple[str, GradedPoly], ...]
    name: str = ""
    eliminated: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.algebra.field != QQ:
            raise ValueError(f"Sullivan models are rational; got field {self.algebra.field}")
        kept = []
        seen = set()
        for gen_name, value in self.differentials:
            gen = self.algebra.generator(gen_name)
            if gen_name in seen:
                raise ValueError(f"Differential of {gen_name} given twice")
            seen.add(gen_name)
            if value.algebra != self.algebra:
                raise ValueError(f"d({gen_name}) does not live in the model's algebra")
            if value.is_zero():
                continue
            if value.degree != gen.degree + 1:
                raise DegreeMismatchError(
                    f"d({gen_name}) has degree {value.degree}, expected {gen.degree + 1}"
                )
            if value.word_length_component(0):
                raise ValueError(f"d({gen_name}) has a constant term")
            kept.append((gen_name, value))
        order = {g.name: i for i, g in enumerate(self.algebra.generators)}
        kept.sort(key=lambda item: order[item[0]])
        object.__setattr__(self, "differentials", tuple(kept))

    @classmethod
    def build(
        cls,
        algebra: GradedAlgebra,
        differential: Mapping[str, GradedPoly],
        name: str = "",
        eliminated: Tuple[Tuple[str, str], ...] = (),
    ) -> "SullivanModel":
        return cls(algebra, tuple(differential.items()), name, eliminated)

    @property
    def generators(self) -> Tuple[GenSymbol, ...]:
        return self.algebra.generators

    @property
    def differential(self) -> Dict[str, GradedPoly]:
        return dict(self.differentials)

    def d(self, name: str) -> GradedPoly:
        self.algebra.generator(name)
        return self.differential.get(name, self.algebra.zero())

    def apply(self, poly: GradedPoly) -> GradedPoly:
        """Extend d to poly as a degree +1 derivation with Koszul signs."""
        algebra = self.algebra
        unit = algebra.field.normalize(1)
        diff = self.differential
        result = algebra.zero()
        for mono, coeff in poly.raw_terms().items():
            prefix_degree = 0
            for pos, (i, e) in enumerate(mono):
                gen = algebra.generators[i]
                dg = diff.get(gen.name)
                if dg is not None:
                    head = mono[:pos] + (((i, e - 1),) if e > 1 else ())
                    tail = mono[pos + 1:]
                    factor = coeff * e if prefix_degree % 2 == 0 else -coeff * e
                    term = GradedPoly._raw(algebra, {head: unit}) * dg
                    term = term * GradedPoly._raw(algebra, {tail: unit})
                    result = result + term.scale(factor)
                prefix_degree += gen.degree * e
        return result

    def is_pure(self) -> bool:
        diff = self.differential
        for gen in self.generators:
            dg = diff.get(gen.name)
            if dg is None:
                continue
            if not gen.is_odd:
                return False
            if any(g.is_odd for g in dg.generators_used()):
                return False
        return True

    def is_minimal(self) -> bool:
        return all(not value.linear_part() for _, value in self.differentials)

    def quadratic_part(self, name: str) -> GradedPoly:
        return self.d(name).word_length_component(2)

    def matches(self, other: "SullivanModel", renaming: Optional[Mapping[str, str]] = None) -> bool:
        """
        True when other equals this model after renaming generators and
        rescaling each differential by a nonzero rational.
        """
        renaming = dict(renaming or {})
        if len(self.generators) != len(other.generators):
            return False
        images = {}
        for gen in self.generators:
            target_name = renaming.get(gen.name, gen.name)
            if target_name not in other.algebra:
                return False
            if other.algebra.generator(target_name).degree != gen.degree:
                return False
            images[gen.name] = other.algebra.gen(target_name)
        for gen in self.generators:
            mine = substitute(self.d(gen.name), images, other.algebra)
            theirs = other.d(renaming.get(gen.name, gen.name))
            if mine.is_zero() or theirs.is_zero():
                if mine.is_zero() != theirs.is_zero():
                    return False
                continue
            mono = mine.monomials()[0]
            ratio = theirs.coefficient(mono) / mine.coefficient(mono)
            if not ratio or mine.scale(ratio) != theirs:
                return False
        return True

    # ---------------------------------------------------------------- #
    #  Dumps                                                             #
    # ---------------------------------------------------------------- #

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "generators": [{"name": g.name, "degree": g.degree} for g in self.generators],
            "differential": [
                {"generator": g.name, "value": str(self.d(g.name))} for g in self.generators
            ],
            "eliminated": [list(pair) for pair in self.eliminated],
        }

    def dump_text(self, stage: str = "") -> str:
        header = f"model: {self.name}" + (f" [{stage}]" if stage else "")
        lines = [header, "generators:"]
        lines += [f"  {g.name} (degree {g.degree})" for g in self.generators]
        lines.append("differential:")
        lines += [f"  d {g.name} = {self.d(g.name)}" for g in self.generators]
        if self.eliminated:
            lines.append("eliminated pairs:")
            lines += [f"  ({x}, {z})" for x, z in self.eliminated]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class D2Witness:
    """
    A generator whose differential has a nonzero quadratic part.

    Attributes:
        generator: The odd generator.
        quadratic_part: Word-length-2 component of its differential.
        differential: The full differential, for reporting.
    """
    generator: GenSymbol
    quadratic_part: GradedPoly
    differential: GradedPoly

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": "d2",
            "generator": self.generator.name,
            "degree": self.generator.degree,
            "quadratic_part": str(self.quadratic_part),
            "differential": str(self.differential),
        }


# ---------------------------------------------------------------------- #
#  Operations                                                              #
# ---------------------------------------------------------------------- #

def fiber_model(
    base: Presentation,
    target: Presentation,
    pullback: Mapping[str, GradedPoly],
    fiber_names: Optional[Mapping[str, str]] = None,
    name: str = "",
) -> SullivanModel:
    """
    Model of the homotopy fiber of a map whose cohomology map is pullback.

    Base generators get d = 0; every target generator y contributes an odd
    generator of degree |y| - 1 whose differential is pullback(y).
    """
    for pres in (base, target):
        if not pres.is_free:
            raise ValueError(f"{pres.name or 'presentation'} must be a free polynomial ring")
        if pres.field != QQ:
            raise ValueError(f"{pres.name or 'presentation'} must be over Q")
    fiber_names = dict(fiber_names or {})
    fiber_gens: List[GenSymbol] = []
    images: List[GradedPoly] = []
    for y in target.generators:
        if y.is_odd:
            raise DegreeMismatchError(f"Target generator {y.name} has odd degree {y.degree}")
        if y.name not in pullback:
            raise ValueError(f"Pullback has no image for target generator {y.name}")
        image = pullback[y.name]
        if image.algebra != base.algebra:
            raise ValueError(f"Image of {y.name} does not live in the base ring")
        if image and image.degree != y.degree:
            raise DegreeMismatchError(
                f"Image of {y.name} has degree {image.degree}, expected {y.degree}"
            )
        fiber_gens.append(GenSymbol(fiber_names.get(y.name, f"z_{y.name}"), y.degree - 1))
        images.append(image)

    algebra = GradedAlgebra(base.generators + tuple(fiber_gens), QQ)
    differential = {z.name: transfer(img, algebra) for z, img in zip(fiber_gens, images)}
    model = SullivanModel.build(algebra, differential, name)
    LOGGER.debug("fiber model %s: %d generators", name, len(algebra.generators))
    return model


def minimize(model: SullivanModel, reverse_ties: bool = False) -> SullivanModel:
    """
    Eliminate contractible pairs (x, z) with a linear term of x in dz until no
    differential has a linear part. The pair with the lowest-degree x goes
    first; ties follow generator order (or its reverse).
    """
    if not model.is_pure():
        raise NotPureModelError(f"Model {model.name} is not a pure two-stage model")
    algebra = model.algebra
    diffs = model.differential
    eliminated = list(model.eliminated)

    while True:
        best = None
        for zi, z in enumerate(algebra.generators):
            dz = diffs.get(z.name)
            if dz is None:
                continue
            for mono, coeff in dz.linear_part().raw_terms().items():
                xi = mono[0][0]
                x = algebra.generators[xi]
                key = (x.degree, -zi, -xi) if reverse_ties else (x.degree, zi, xi)
                if best is None or key < best[0]:
                    best = (key, z, x, mono, coeff)
        if best is None:
            break
        _, z, x, x_mono, coeff = best
        rest = diffs[z.name] - GradedPoly._raw(algebra, {x_mono: coeff})
        solution = rest.scale(-(QQ(coeff).inverse()))

        remaining = tuple(g for g in algebra.generators if g.name not in (x.name, z.name))
        reduced = GradedAlgebra(remaining, QQ)
        assignment = {x.name: transfer(solution, reduced)}
        diffs = {
            gen_name: substitute(value, assignment, reduced)
            for gen_name, value in diffs.items()
            if gen_name != z.name
        }
        algebra = reduced
        eliminated.append((x.name, z.name))
        LOGGER.debug("%s: eliminated (%s, %s), %s = %s", model.name, x.name, z.name, x.name, solution)

    result = SullivanModel.build(algebra, diffs, model.name, tuple(eliminated))
    LOGGER.info(
        "minimized %s: %d pairs eliminated, %d generators left",
        model.name, len(eliminated) - len(model.eliminated), len(algebra.generators),
    )
    return result


def d2_witnesses(model: SullivanModel) -> List[D2Witness]:
    """Every generator with a nonzero quadratic differential, in canonical order."""
    if not model.is_minimal():
        raise NonMinimalModelError(
            f"Model {model.name} has linear differentials; minimize it first"
        )
    found = []
    for gen in model.generators:
        dg = model.d(gen.name)
        quadratic = dg.word_length_component(2)
        if quadratic:
            found.append(D2Witness(gen, quadratic, dg))
    return found


def d2_witness(model: SullivanModel) -> Optional[D2Witness]:
    """The first generator whose differential is nonzero modulo word length three."""
    witnesses = d2_witnesses(model)
    return witnesses[0] if witnesses else None


def check_d_squared(model: SullivanModel) -> bool:
    """True iff d(d(g)) = 0 for every generator g."""
    return all(model.apply(model.d(g.name)).is_zero() for g in model.generators)
