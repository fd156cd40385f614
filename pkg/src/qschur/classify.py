"""Closed-form classification predicates and the brute-force verification
harness that checks them exhaustively up to a degree bound."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Union

from .compositions import (
    Composition,
    Partition,
    conjugate,
    enumerate_compositions,
    enumerate_partitions,
    rearrangements,
)
from .ctableaux import CompositionTableau
from .qsym import (
    f_component_count,
    is_fmf,
    multiplicity_witnesses,
    qs_f,
    schur_f,
    skew_schur_f,
)
from .shapes import SkewShape, disjoint_union, enumerate_skew_shapes
from .young import SkewTableau

THEOREMS = ("schur", "skew", "qs-components", "two-part", "families")
DEFAULT_MAX_TABLEAUX = 10_000_000

Instance = Union[Composition, Partition, SkewShape]


def in_c2(alpha: Composition) -> bool:
    """Interleaved runs of 1s separated by single 2s: all parts in {1, 2},
    no leading 2, no two adjacent 2s.  Contains the empty composition."""
    alpha = tuple(alpha)
    if any(p not in (1, 2) for p in alpha):
        return False
    if alpha and alpha[0] == 2:
        return False
    return all(
        not (alpha[i] == 2 and alpha[i + 1] == 2) for i in range(len(alpha) - 1)
    )


def in_c2_prime(alpha: Composition) -> bool:
    """The members of :func:`in_c2` that start with a 1 and end with a 2."""
    alpha = tuple(alpha)
    return bool(alpha) and alpha[-1] == 2 and alpha[0] == 1 and in_c2(alpha)


def _schur_listed(lam: Partition) -> bool:
    n = sum(lam)
    if lam in ((3, 3), (4, 4)):
        return True
    if len(lam) == 2 and lam[1] == 2 and n >= 4:
        return True
    if all(p == 1 for p in lam[1:]):  # hooks, rows, and columns
        return True
    return False


def predict_schur(lam: Partition) -> bool:
    """Multiplicity-freeness of the Schur function of ``lam``: the partition
    or its conjugate is (3,3), (4,4), a two-row shape (n-2,2), or a hook."""
    lam = tuple(lam)
    return _schur_listed(lam) or _schur_listed(conjugate(lam))


def _hook_unions(n: int) -> set[SkewShape]:
    return {
        disjoint_union(SkewShape((n - k,)), SkewShape((1,) * k))
        for k in range(1, n)
    }


def predict_skew(shape: SkewShape) -> bool:
    """Multiplicity-freeness of the skew Schur function of ``shape``: some
    variant under transpose and rotation is a listed straight shape or a
    row placed disjointly below-left of a column."""
    n = shape.size
    transposed = shape.transpose()
    variants = {shape, transposed, shape.rotate180(), transposed.rotate180()}
    unions = _hook_unions(n)
    for v in variants:
        if not v.inner:
            if _schur_listed(v.outer):
                return True
        elif v in unions:
            return True
    return False


def _tails_after_optional_part(alpha: Composition) -> Iterator[Composition]:
    yield alpha
    if alpha:
        yield alpha[1:]


def _two_component(alpha: Composition) -> bool:
    # One defect pair of rows, everything else forced: the defect is either
    # (1,3) or (2,2)/(2,3) at the very front, or (2,2)/(2,3) reached through
    # a 1-led run ending in 2, optionally preceded by one part of any size.
    if alpha[:2] == (1, 3) and in_c2(alpha[2:]):
        return True
    if alpha[:2] in ((2, 2), (2, 3)) and in_c2(alpha[2:]):
        return True
    for tail in _tails_after_optional_part(alpha):
        for i, part in enumerate(tail):
            if part in (2, 3) and in_c2_prime(tail[:i]) and in_c2(tail[i + 1 :]):
                return True
    return False


def predict_qs_components(alpha: Composition) -> str:
    """Number of F-terms of the quasisymmetric Schur function of ``alpha``,
    classified as "one", "two", or "more"."""
    alpha = tuple(alpha)
    if any(in_c2(tail) for tail in _tails_after_optional_part(alpha)):
        return "one"
    if _two_component(alpha):
        return "two"
    return "more"


def predict_two_part(alpha: Composition) -> bool:
    """Multiplicity-freeness for two-part composition shapes."""
    alpha = tuple(alpha)
    if len(alpha) != 2:
        raise ValueError(f"expected a two-part composition: {alpha}")
    a, b = alpha
    n = a + b
    if b == 1 or a == 1:
        return True
    if b == 2 and n >= 4:
        return True
    if a == 2 and n >= 4:
        return True
    if b == 3 and n >= 6:
        return True
    return alpha in ((3, 4), (4, 4), (4, 5))


def predict_family(lam: Partition) -> bool:
    """True iff every rearrangement of ``lam`` indexes a multiplicity-free
    quasisymmetric Schur function."""
    lam = tuple(lam)
    if lam in ((3, 3), (4, 3), (4, 4)):
        return True
    if all(p == 1 for p in lam[1:]):  # hooks
        return True
    if (
        len(lam) >= 2
        and lam[0] >= 3
        and lam[1] == 2
        and all(p == 1 for p in lam[2:])
    ):
        return True
    if lam and lam[0] == 2:
        twos = sum(1 for p in lam if p == 2)
        if all(p == 1 for p in lam[twos:]) and 2 <= twos <= 4:
            return True
    if lam[:3] == (3, 2, 2) and all(p == 1 for p in lam[3:]):
        return True
    return False


def brute_family_fmf(lam: Partition, max_tableaux: int | None = None) -> bool:
    """Ground truth for :func:`predict_family` by direct enumeration."""
    return all(
        is_fmf(qs_f(alpha, max_tableaux)) for alpha in rearrangements(tuple(lam))
    )


@dataclass(frozen=True)
class Disagreement:
    instance: dict
    predicted: object
    truth: object
    witnesses: tuple

    def to_json_obj(self) -> dict:
        return {
            "instance": self.instance,
            "predicted": self.predicted,
            "truth": self.truth,
            "witnesses": list(self.witnesses),
        }


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    max_n: int
    checked: int
    disagreements: tuple[Disagreement, ...]

    @property
    def verified(self) -> bool:
        return not self.disagreements

    def to_json_obj(self) -> dict:
        return {
            "theorem": self.theorem,
            "max_n": self.max_n,
            "checked": self.checked,
            "disagreements": [d.to_json_obj() for d in self.disagreements],
        }

    def to_text(self) -> str:
        lines = [
            f"theorem: {self.theorem}",
            f"max-n: {self.max_n}",
            f"checked: {self.checked}",
            f"disagreements: {len(self.disagreements)}",
        ]
        for d in self.disagreements:
            lines.append(
                f"  {d.instance} predicted={d.predicted} truth={d.truth} "
                f"witnesses={len(d.witnesses)}"
            )
        lines.append(f"verdict: {'verified' if self.verified else 'refuted'}")
        return "\n".join(lines)


def _tableau_json(t: object) -> list:
    if isinstance(t, (SkewTableau, CompositionTableau)):
        return t.to_json_obj()
    raise TypeError(f"not a tableau: {t!r}")


def _witnesses_json(source, max_tableaux: int | None) -> tuple:
    out = []
    for d, a, b in multiplicity_witnesses(source, max_tableaux):
        out.append(
            {
                "degree": d.degree,
                "descents": sorted(d.members),
                "first": _tableau_json(a),
                "second": _tableau_json(b),
            }
        )
    return tuple(out)


def _instances(theorem: str, max_n: int) -> Iterator[Instance]:
    if theorem in ("schur", "families"):
        for n in range(1, max_n + 1):
            yield from enumerate_partitions(n)
    elif theorem == "skew":
        for n in range(1, max_n + 1):
            yield from enumerate_skew_shapes(n)
    elif theorem == "two-part":
        for n in range(2, max_n + 1):
            for a in range(1, n):
                yield (a, n - a)
    elif theorem == "qs-components":
        for n in range(1, max_n + 1):
            yield from enumerate_compositions(n)
    else:
        raise ValueError(f"unknown theorem {theorem!r}")


def _instance_label(theorem: str, inst: Instance) -> dict:
    if theorem in ("schur", "families"):
        return {"partition": list(inst)}
    if theorem == "skew":
        return {"outer": list(inst.outer), "inner": list(inst.inner)}
    return {"composition": list(inst)}


def _check_instance(
    theorem: str, inst: Instance, budget: int | None
) -> Disagreement | None:
    if theorem == "schur":
        predicted = predict_schur(inst)
        truth = is_fmf(schur_f(inst, budget))
        if predicted == truth:
            return None
        witnesses = _witnesses_json(SkewShape(inst), budget)
    elif theorem == "skew":
        predicted = predict_skew(inst)
        truth = is_fmf(skew_schur_f(inst, budget))
        if predicted == truth:
            return None
        witnesses = _witnesses_json(inst, budget)
    elif theorem == "two-part":
        predicted = predict_two_part(inst)
        truth = is_fmf(qs_f(inst, budget))
        if predicted == truth:
            return None
        witnesses = _witnesses_json(inst, budget)
    elif theorem == "qs-components":
        predicted = predict_qs_components(inst)
        expansion = qs_f(inst, budget)
        count = f_component_count(expansion)
        truth = "one" if count == 1 else "two" if count == 2 else "more"
        # The one- and two-term statements also pin the terms themselves.
        structurally_ok = True
        if truth == "one":
            structurally_ok = expansion.terms == {inst: 1}
        elif truth == "two":
            structurally_ok = expansion.coefficient(inst) == 1
        if predicted == truth and structurally_ok:
            return None
        if not structurally_ok:
            truth = f"{truth} (terms: {sorted(expansion.terms)})"
        witnesses = _witnesses_json(inst, budget)
        if not witnesses:
            witnesses = (
                {"terms": [list(k) for k in expansion.terms]},
            )
    elif theorem == "families":
        predicted = predict_family(inst)
        truth = brute_family_fmf(inst, budget)
        if predicted == truth:
            return None
        witnesses = ()
        for alpha in rearrangements(inst):
            witnesses = _witnesses_json(alpha, budget)
            if witnesses:
                break
    else:
        raise ValueError(f"unknown theorem {theorem!r}")
    return Disagreement(_instance_label(theorem, inst), predicted, truth, witnesses)


def verify(
    theorem: str,
    max_n: int,
    max_tableaux: int | None = DEFAULT_MAX_TABLEAUX,
    threads: int = 1,
) -> VerificationReport:
    """Compare a classification predicate against brute-force truth on every
    instance of degree at most ``max_n``.

    Instances are checked independently (optionally on a thread pool) but
    the report is assembled in canonical instance order, so the result is
    identical for any thread count.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    instances = list(_instances(theorem, max_n))

    def check(inst: Instance) -> Disagreement | None:
        return _check_instance(theorem, inst, max_tableaux)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, instances))
    else:
        results = [check(inst) for inst in instances]
    disagreements = tuple(d for d in results if d is not None)
    return VerificationReport(theorem, max_n, len(instances), disagreements)
