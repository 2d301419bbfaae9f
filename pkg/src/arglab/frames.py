"""Probabilistic frames over theories, graphs and labellings.

All frames carry sparse distributions with exact rational probabilities:
only outcomes with positive probability are stored, and every distribution
must sum to exactly 1.

* PTF: distribution over subsets of rule ids of a theory.
* PGF: distribution over subsets of argument ids of a graph.
* PLF: distribution over labellings admitted by a labelling spec.
* PEF: distribution over believed argument sets (epistemic).
* PAG: independent per-argument probabilities on an abstract graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .core import ArgLabel, ArgumentationGraph, DefeasibleTheory, Labelling, LabelSet
from .construct import (
    MAX_ARGUMENTS,
    PreferencePolicy,
    build_arguments,
    build_graph,
    induced_subgraph,
    is_legal,
    is_subargument_complete,
)
from .errors import DistributionError
from .semantics import (
    MAX_ENUM_ARGUMENTS,
    LabellingSpec,
    Semantics,
    combine_with_off,
    labellings as enumerate_labellings,
)

ONE = Fraction(1)
ZERO = Fraction(0)


def _normalise(entries: Iterable[Tuple[object, Fraction]]) -> Dict[object, Fraction]:
    """Merge duplicate outcomes, drop zeros, and check the distribution axioms."""
    probs: Dict[object, Fraction] = {}
    for key, p in entries:
        if p < 0:
            raise DistributionError(f"negative probability {p} for {key}")
        if p == 0:
            continue
        probs[key] = probs.get(key, ZERO) + p
    total = sum(probs.values(), ZERO)
    if total != 1:
        raise DistributionError(f"probabilities sum to {total}, expected 1")
    return probs


@dataclass(frozen=True)
class PTF:
    """Probabilistic theory frame: distribution over rule subsets."""

    theory: DefeasibleTheory
    probs: Mapping[FrozenSet[str], Fraction]

    def __post_init__(self):
        rules = set(self.theory.rules)
        for subset in self.probs:
            if not subset <= rules:
                raise DistributionError(f"subset {sorted(subset)} mentions unknown rules")


def ptf_explicit(
    theory: DefeasibleTheory, entries: Iterable[Tuple[FrozenSet[str], Fraction]]
) -> PTF:
    return PTF(theory, _normalise(entries))


def ptf_independent(theory: DefeasibleTheory) -> PTF:
    """Product distribution from per-rule probabilities.

    Rules without a declared probability are treated as certain (p = 1).
    """
    for rid, p in theory.rule_probs.items():
        if not 0 <= p <= 1:
            raise DistributionError(f"p({rid}) = {p} outside [0, 1]")
    certain = frozenset(
        rid for rid in theory.rules if theory.rule_probs.get(rid, ONE) == 1
    )
    variable = sorted(
        rid for rid in theory.rules if 0 < theory.rule_probs.get(rid, ONE) < 1
    )
    entries = []
    for bits in itertools.product((False, True), repeat=len(variable)):
        subset = set(certain)
        p = ONE
        for rid, present in zip(variable, bits):
            q = theory.rule_probs[rid]
            if present:
                subset.add(rid)
                p *= q
            else:
                p *= 1 - q
        entries.append((frozenset(subset), p))
    return PTF(theory, _normalise(entries))


@dataclass(frozen=True)
class PGF:
    """Probabilistic graph frame: distribution over argument-id subsets."""

    graph: ArgumentationGraph
    probs: Mapping[FrozenSet[str], Fraction]

    def __post_init__(self):
        ids = set(self.graph.arguments)
        for subset in self.probs:
            if not subset <= ids:
                raise DistributionError(
                    f"subset {sorted(subset)} mentions unknown arguments"
                )


@dataclass(frozen=True)
class PLF:
    """Probabilistic labelling frame: distribution over labellings."""

    graph: ArgumentationGraph
    spec: LabellingSpec
    probs: Mapping[Labelling, Fraction]

    def __post_init__(self):
        ids = set(self.graph.arguments)
        for labelling in self.probs:
            if labelling.label_set is not self.spec.label_set:
                raise DistributionError("labelling outcome has the wrong label set")
            if set(labelling.mapping) != ids:
                raise DistributionError("labelling outcome is not total over the graph")

    def support(self) -> List[Labelling]:
        return sorted(self.probs, key=Labelling.sort_key)


@dataclass(frozen=True)
class PEF:
    """Probabilistic epistemic frame: distribution over believed argument sets."""

    graph: ArgumentationGraph
    probs: Mapping[FrozenSet[str], Fraction]

    def __post_init__(self):
        ids = set(self.graph.arguments)
        for subset in self.probs:
            if not subset <= ids:
                raise DistributionError(
                    f"believed set {sorted(subset)} mentions unknown arguments"
                )


@dataclass(frozen=True)
class PAG:
    """Independent per-argument probabilities on an abstract graph.

    Subargument structure is ignored; only attacks matter here.
    """

    graph: ArgumentationGraph
    arg_probs: Mapping[str, Fraction]

    def __post_init__(self):
        ids = set(self.graph.arguments)
        if set(self.arg_probs) != ids:
            missing = sorted(ids - set(self.arg_probs))
            extra = sorted(set(self.arg_probs) - ids)
            raise DistributionError(
                f"argument probabilities must cover the graph exactly "
                f"(missing {missing}, unknown {extra})"
            )
        for arg_id, p in self.arg_probs.items():
            if not 0 <= p <= 1:
                raise DistributionError(f"p({arg_id}) = {p} outside [0, 1]")


# --- conversions -------------------------------------------------------------


def pgf_from_ptf(
    ptf: PTF,
    policy: PreferencePolicy = PreferencePolicy.LAST_LINK,
    max_args: int = MAX_ARGUMENTS,
) -> PGF:
    """Push a theory distribution forward to the generated argument sets.

    Each rule subset maps to the set of arguments its subtheory generates; the
    mapping is neither injective nor surjective in general, so probabilities
    accumulate.  The carrier graph is built from the full theory.
    """
    graph = build_graph(ptf.theory, policy=policy, max_args=max_args)
    entries = []
    for subset, p in ptf.probs.items():
        sub_args = build_arguments(ptf.theory.restricted_to(subset), max_args=max_args)
        entries.append((frozenset(sub_args), p))
    return PGF(graph, _normalise(entries))


def plf_from_pgf(pgf: PGF) -> PLF:
    """The {ON, OFF} labelling frame marking membership of each subgraph."""
    spec = LabellingSpec(LabelSet.ON_OFF)
    entries = []
    for subset, p in pgf.probs.items():
        mapping = {
            a: (ArgLabel.ON if a in subset else ArgLabel.OFF) for a in pgf.graph.arguments
        }
        entries.append((Labelling.from_mapping(LabelSet.ON_OFF, mapping), p))
    return PLF(pgf.graph, spec, _normalise(entries))


def pgf_from_plf(plf: PLF) -> PGF:
    """Inverse of :func:`plf_from_pgf`; requires an {ON, OFF} frame."""
    if plf.spec.label_set is not LabelSet.ON_OFF:
        raise DistributionError("pgf_from_plf needs an {ON, OFF} labelling frame")
    entries = [(l.with_label(ArgLabel.ON), p) for l, p in plf.probs.items()]
    return PGF(plf.graph, _normalise(entries))


@dataclass(frozen=True)
class SublabellingWeights:
    """Conditional weights for choosing among a subgraph's labellings.

    Each entry pairs a partial label assignment with a weight.  A labelling's
    weight is the sum over entries whose assignment it extends.  When a
    subgraph has a single labelling the weight is 1 regardless; when no entry
    matches any of a subgraph's labellings, the uniform distribution is used.
    Otherwise the matched weights must sum to exactly 1 across the subgraph's
    labellings.
    """

    entries: Tuple[Tuple[Tuple[Tuple[str, ArgLabel], ...], Fraction], ...] = ()

    @staticmethod
    def from_entries(
        entries: Iterable[Tuple[Mapping[str, ArgLabel], Fraction]]
    ) -> "SublabellingWeights":
        packed = []
        for assignment, w in entries:
            if w < 0:
                raise DistributionError(f"negative weight {w}")
            packed.append((tuple(sorted(assignment.items())), w))
        return SublabellingWeights(tuple(packed))

    def weights_for(self, inner_labellings: List[Labelling]) -> List[Fraction]:
        k = len(inner_labellings)
        if k == 1:
            return [ONE]
        weights = []
        for labelling in inner_labellings:
            mapping = labelling.mapping
            w = sum(
                (
                    value
                    for assignment, value in self.entries
                    if all(mapping.get(a) is l for a, l in assignment)
                ),
                ZERO,
            )
            weights.append(w)
        if all(w == 0 for w in weights):
            return [Fraction(1, k)] * k
        if sum(weights, ZERO) != 1:
            raise DistributionError(
                f"weights {weights} do not sum to 1 over {k} labellings"
            )
        return weights


def plf_with_semantics(
    pgf: PGF,
    semantics: Semantics,
    weights: Optional[SublabellingWeights] = None,
    legal_only: bool = False,
    max_args: int = MAX_ENUM_ARGUMENTS,
) -> PLF:
    """Combined {IN, OUT, UN, OFF} frame from a subgraph distribution.

    Every subgraph in the support contributes its semantics labellings,
    extended with OFF outside, split by the sublabelling weights (uniform by
    default).
    """
    weights = weights or SublabellingWeights()
    admit = is_legal if legal_only else is_subargument_complete
    spec = LabellingSpec(
        LabelSet.IN_OUT_UN_OFF, semantics=semantics, legal_only=legal_only
    )
    inner_spec = LabellingSpec(LabelSet.IN_OUT_UN, semantics=semantics)
    entries = []
    for subset, p in pgf.probs.items():
        if not admit(pgf.graph, subset):
            kind = "legal" if legal_only else "subargument-complete"
            raise DistributionError(f"subgraph {sorted(subset)} is not {kind}")
        sub = induced_subgraph(pgf.graph, subset)
        inner = enumerate_labellings(sub, inner_spec, max_args=max_args)
        for labelling, w in zip(inner, weights.weights_for(inner)):
            entries.append((combine_with_off(pgf.graph, labelling), p * w))
    return PLF(pgf.graph, spec, _normalise(entries))


def pef_from_plf(plf: PLF) -> PEF:
    """Believed sets are the IN sets of an {IN, OUT, UN} frame."""
    if plf.spec.label_set is not LabelSet.IN_OUT_UN:
        raise DistributionError("pef_from_plf needs an {IN, OUT, UN} labelling frame")
    entries = [(l.with_label(ArgLabel.IN), p) for l, p in plf.probs.items()]
    return PEF(plf.graph, _normalise(entries))


def plf_from_pef(pef: PEF) -> PLF:
    """Believed arguments become IN, everything else OUT."""
    spec = LabellingSpec(LabelSet.IN_OUT_UN)
    entries = []
    for subset, p in pef.probs.items():
        mapping = {
            a: (ArgLabel.IN if a in subset else ArgLabel.OUT) for a in pef.graph.arguments
        }
        entries.append((Labelling.from_mapping(LabelSet.IN_OUT_UN, mapping), p))
    return PLF(pef.graph, spec, _normalise(entries))


def pef_argument_probability(pef: PEF, arg_id: str) -> Fraction:
    if arg_id not in pef.graph.arguments:
        raise KeyError(arg_id)
    return sum((p for subset, p in pef.probs.items() if arg_id in subset), ZERO)


def pag_subgraph_probability(pag: PAG, subset: FrozenSet[str]) -> Fraction:
    p = ONE
    for arg_id in pag.graph.arguments:
        q = pag.arg_probs[arg_id]
        p *= q if arg_id in subset else 1 - q
    return p


def pag_to_pgf(pag: PAG, max_args: int = MAX_ENUM_ARGUMENTS) -> PGF:
    ids = sorted(pag.graph.arguments)
    if len(ids) > max_args:
        from .errors import CapExceededError

        raise CapExceededError(
            f"{len(ids)} arguments exceeds the subset enumeration cap of {max_args}"
        )
    entries = []
    for bits in itertools.product((False, True), repeat=len(ids)):
        subset = frozenset(a for a, b in zip(ids, bits) if b)
        entries.append((subset, pag_subgraph_probability(pag, subset)))
    return PGF(pag.graph, _normalise(entries))


def extension_probability(
    pag: PAG,
    semantics: Semantics,
    ids: Iterable[str],
    max_args: int = MAX_ENUM_ARGUMENTS,
) -> Fraction:
    """Probability that the given set is the IN set of some labelling of the
    surviving subgraph, under independent argument presence."""
    target = frozenset(ids)
    unknown = target - set(pag.graph.arguments)
    if unknown:
        raise KeyError(f"unknown argument ids: {sorted(unknown)}")
    abstract = pag.graph.without_sub_edges()
    inner_spec = LabellingSpec(LabelSet.IN_OUT_UN, semantics=semantics)
    total = ZERO
    pgf = pag_to_pgf(pag, max_args=max_args)
    for subset, p in pgf.probs.items():
        if not target <= subset:
            continue
        sub = induced_subgraph(abstract, subset)
        for labelling in enumerate_labellings(sub, inner_spec, max_args=max_args):
            if labelling.with_label(ArgLabel.IN) == target:
                total += p
                break
    return total
