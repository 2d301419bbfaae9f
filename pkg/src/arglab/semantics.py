"""Labelling enumeration over argumentation graphs.

Three labelling families are supported:

* {ON, OFF} labellings of subgraph membership, filtered by a structural
  criterion (all subsets, subargument-complete, rule-complete, or legal);
* {IN, OUT, UN} labellings under the conflict-free, complete, grounded,
  preferred or stable semantics;
* combined {IN, OUT, UN, OFF} labellings: a semantics labelling of some
  subargument-complete subgraph, OFF everywhere else.

Enumeration is exhaustive and deterministic: results are sorted by the label
sequence in canonical-id order with IN < OUT < UN < ON < OFF.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Set

from .core import ArgLabel, ArgumentationGraph, Labelling, LabelSet
from .construct import induced_subgraph, is_legal, is_rule_complete, is_subargument_complete
from .errors import CapExceededError

MAX_ENUM_ARGUMENTS = 16


class Semantics(Enum):
    CF = "cf"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"


class OnOffCriterion(Enum):
    ALL = "all"
    SUBARG_COMPLETE = "subarg_complete"
    RULE_COMPLETE = "rule_complete"
    LEGAL = "legal"


@dataclass(frozen=True)
class LabellingSpec:
    """What counts as a labelling.

    For {ON, OFF} the ``criterion`` applies and ``semantics`` must be unset.
    For {IN, OUT, UN} and {IN, OUT, UN, OFF} the ``semantics`` applies; a
    missing semantics means every total assignment is admitted (useful for
    epistemic distributions).  ``legal_only`` restricts the subgraphs visited
    by combined {IN, OUT, UN, OFF} labellings from subargument-complete to
    legal ones.
    """

    label_set: LabelSet
    semantics: Optional[Semantics] = None
    criterion: OnOffCriterion = OnOffCriterion.ALL
    legal_only: bool = False

    def __post_init__(self):
        if self.label_set is LabelSet.ON_OFF and self.semantics is not None:
            raise ValueError("{ON,OFF} specs take a criterion, not a semantics")
        if self.label_set is not LabelSet.ON_OFF and self.criterion is not OnOffCriterion.ALL:
            raise ValueError("structural criteria only apply to {ON,OFF} specs")


def _attackers(graph: ArgumentationGraph) -> Dict[str, Set[str]]:
    att: Dict[str, Set[str]] = {i: set() for i in graph.arguments}
    for b, a in graph.attacks:
        att[a].add(b)
    return att


def grounded_labelling(graph: ArgumentationGraph) -> Labelling:
    """Least fixpoint computation of the unique grounded labelling."""
    att = _attackers(graph)
    in_set: Set[str] = set()
    out_set: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for a in graph.arguments:
            if a in in_set or a in out_set:
                continue
            if att[a] <= out_set:
                in_set.add(a)
                changed = True
            elif att[a] & in_set:
                out_set.add(a)
                changed = True
    mapping = {}
    for a in graph.arguments:
        if a in in_set:
            mapping[a] = ArgLabel.IN
        elif a in out_set:
            mapping[a] = ArgLabel.OUT
        else:
            mapping[a] = ArgLabel.UN
    return Labelling.from_mapping(LabelSet.IN_OUT_UN, mapping)


def _complete_in_sets(graph: ArgumentationGraph) -> List[FrozenSet[str]]:
    """IN-sets of complete labellings.

    A complete labelling is determined by its IN-set S: the OUT-set is exactly
    the set of arguments with an attacker in S, and S must equal the set of
    arguments whose attackers are all OUT.
    """
    ids = sorted(graph.arguments)
    att = _attackers(graph)
    out: List[FrozenSet[str]] = []
    for bits in itertools.product((False, True), repeat=len(ids)):
        s = {a for a, b in zip(ids, bits) if b}
        out_set = {a for a in ids if att[a] & s}
        if s & out_set:
            continue
        if {a for a in ids if att[a] <= out_set} == s:
            out.append(frozenset(s))
    return out


def _labelling_from_in_set(graph: ArgumentationGraph, s: FrozenSet[str]) -> Labelling:
    att = _attackers(graph)
    mapping = {}
    for a in graph.arguments:
        if a in s:
            mapping[a] = ArgLabel.IN
        elif att[a] & s:
            mapping[a] = ArgLabel.OUT
        else:
            mapping[a] = ArgLabel.UN
    return Labelling.from_mapping(LabelSet.IN_OUT_UN, mapping)


def _cf_labellings(graph: ArgumentationGraph) -> List[Labelling]:
    """Conflict-free labellings: no IN argument has an IN attacker, and every
    OUT argument has at least one IN attacker."""
    ids = sorted(graph.arguments)
    att = _attackers(graph)
    out: List[Labelling] = []
    for bits in itertools.product((False, True), repeat=len(ids)):
        s = {a for a, b in zip(ids, bits) if b}
        if any(att[a] & s for a in s):
            continue
        rest = [a for a in ids if a not in s]
        choices = [
            (ArgLabel.OUT, ArgLabel.UN) if att[a] & s else (ArgLabel.UN,) for a in rest
        ]
        for combo in itertools.product(*choices):
            mapping = {a: ArgLabel.IN for a in s}
            mapping.update(zip(rest, combo))
            out.append(Labelling.from_mapping(LabelSet.IN_OUT_UN, mapping))
    return out


def _semantics_labellings(graph: ArgumentationGraph, semantics: Semantics) -> List[Labelling]:
    if semantics is Semantics.CF:
        return _cf_labellings(graph)
    if semantics is Semantics.GROUNDED:
        return [grounded_labelling(graph)]
    in_sets = _complete_in_sets(graph)
    if semantics is Semantics.PREFERRED:
        in_sets = [s for s in in_sets if not any(s < t for t in in_sets)]
    result = [_labelling_from_in_set(graph, s) for s in in_sets]
    if semantics is Semantics.STABLE:
        result = [l for l in result if not l.with_label(ArgLabel.UN)]
    return result


def _subsets(ids: List[str]):
    for bits in itertools.product((False, True), repeat=len(ids)):
        yield frozenset(a for a, b in zip(ids, bits) if b)


def _check_cap(graph: ArgumentationGraph, max_args: int):
    if len(graph.arguments) > max_args:
        raise CapExceededError(
            f"{len(graph.arguments)} arguments exceeds the enumeration cap of {max_args}"
        )


_CRITERION_TESTS = {
    OnOffCriterion.ALL: lambda g, s: True,
    OnOffCriterion.SUBARG_COMPLETE: is_subargument_complete,
    OnOffCriterion.RULE_COMPLETE: is_rule_complete,
    OnOffCriterion.LEGAL: is_legal,
}


def labellings(
    graph: ArgumentationGraph,
    spec: LabellingSpec,
    max_args: int = MAX_ENUM_ARGUMENTS,
) -> List[Labelling]:
    """All labellings the given LabellingSpec admits, in deterministic order."""
    _check_cap(graph, max_args)
    ids = sorted(graph.arguments)
    result: List[Labelling] = []

    if spec.label_set is LabelSet.ON_OFF:
        admit = _CRITERION_TESTS[spec.criterion]
        for s in _subsets(ids):
            if admit(graph, s):
                mapping = {a: (ArgLabel.ON if a in s else ArgLabel.OFF) for a in ids}
                result.append(Labelling.from_mapping(LabelSet.ON_OFF, mapping))

    elif spec.label_set is LabelSet.IN_OUT_UN:
        if spec.semantics is None:
            labels = (ArgLabel.IN, ArgLabel.OUT, ArgLabel.UN)
            for combo in itertools.product(labels, repeat=len(ids)):
                result.append(
                    Labelling.from_mapping(LabelSet.IN_OUT_UN, dict(zip(ids, combo)))
                )
        else:
            result = _semantics_labellings(graph, spec.semantics)

    else:  # IN_OUT_UN_OFF: combined labellings over admissible subgraphs
        if spec.semantics is None:
            raise ValueError("combined {IN,OUT,UN,OFF} labellings need a semantics")
        admit = is_legal if spec.legal_only else is_subargument_complete
        for s in _subsets(ids):
            if not admit(graph, s):
                continue
            sub = induced_subgraph(graph, s)
            for inner in _semantics_labellings(sub, spec.semantics):
                result.append(combine_with_off(graph, inner))

    return sorted(result, key=Labelling.sort_key)


def combine_with_off(graph: ArgumentationGraph, inner: Labelling) -> Labelling:
    """Extend a subgraph labelling to the whole graph with OFF outside."""
    mapping = {a: ArgLabel.OFF for a in graph.arguments}
    mapping.update(inner.mapping)
    return Labelling.from_mapping(LabelSet.IN_OUT_UN_OFF, mapping)
