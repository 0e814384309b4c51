"""Decision-tree identification of catalogued p-groups.

A decision tree is built over a complete catalog of one order from a fixed
pipeline of isomorphism-invariant computations (rank, derived-series abelian
invariants, element orders, class data, quotients, power-map cluster
refinement, central and maximal subgroup types).  Each tree node stores the
step that splits its candidate set; leaves hold one catalog index, or a small
candidate list resolved by explicit isomorphism testing at identification
time.  Identifying a group walks the tree evaluating only the steps on its
path.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .presentation import PcPresentation
from .structure import (table_of, rank, derived_series_abelian_invariants,
                        element_order_multiset, series, quotient,
                        central_cyclic_subgroups, maximal_subgroups)
from .fingerprint import group_id
from .pcbuild import pc_presentation_of, random_presentation
from .isomorphism import is_isomorphic, random_iso_test
from .catalog import Catalog, CatalogEntry

TREE_VERSION = 1

# Coprime exponents tried in the cluster-refinement step, beyond powers of p.
_EXTRA_POWERS = (2, 3, 5)


class TreeIntegrityError(RuntimeError):
    """Raised when a tree file, its catalog link, or a lookup is corrupt."""


@dataclass(frozen=True)
class InvariantValue:
    """A deterministic, isomorphism-invariant payload for one pipeline step.

    The payload is a JSON-serializable canonical value; two groups agree on
    the step exactly when the serialized payloads are equal.
    """
    step: str
    payload: object

    def key(self) -> str:
        return json.dumps(self.payload, separators=(",", ":"))


def _id_text(G: PcPresentation, catalog=None) -> str:
    return group_id(G, catalog).to_text()


def invariant_step(G: PcPresentation, step: int, catalog=None) -> InvariantValue:
    """Invariant payload for pipeline steps 1-5, 8, 9.

    1: rank;  2: abelian invariants along the derived series;  3: element
    order multiset;  4: sorted (class size, element order) pairs;  5: type of
    the quotient by the last nontrivial term of the exponent-p central
    series;  8: sorted types of quotients by nontrivial central cyclic
    subgroups;  9: sorted types of the maximal subgroups.
    """
    tg = table_of(G)
    if step == 1:
        payload = rank(G)
    elif step == 2:
        payload = derived_series_abelian_invariants(G)
    elif step == 3:
        payload = element_order_multiset(G)
    elif step == 4:
        payload = sorted((c["size"], c["order"]) for c in tg.classes)
    elif step == 5:
        terms = series(G, "lower_exponent_p").terms
        nontrivial = [t for t in terms if t.order > 1]
        if not nontrivial:
            payload = "trivial"
        else:
            payload = _id_text(quotient(G, nontrivial[-1]), catalog)
    elif step == 8:
        payload = sorted(_id_text(quotient(G, N), catalog)
                         for N in central_cyclic_subgroups(G))
    elif step == 9:
        payload = sorted(
            _id_text(pc_presentation_of(table_of(G).subgroup(M.elements)),
                     catalog)
            for M in maximal_subgroups(G))
    else:
        raise ValueError(f"invariant_step: unknown step {step}")
    return InvariantValue(step=f"step{step}", payload=payload)


def cube_map_cycle_type(G: PcPresentation) -> list[int]:
    """Cycle type of the permutation of conjugacy classes induced by cubing.

    Defined for 2-groups only, where g -> g^3 is a bijection.
    """
    if G.p != 2:
        raise ValueError("cube_map_cycle_type is defined for 2-groups")
    tg = table_of(G)
    perm = [int(tg.class_ids[tg.power(c["representative"], 3)])
            for c in tg.classes]
    seen = [False] * len(perm)
    lens = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        ln, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        lens.append(ln)
    lens.sort(reverse=True)
    return lens


@dataclass
class ClusterPartition:
    """A partition of the conjugacy classes refined from (length, order) tags.

    ``labels[i]`` is the canonical cluster index of class i; ``tags[k]`` is
    the common (class length, element order) of cluster k; ``cluster_map``
    maps cluster k to the cluster containing its r-th powers once the
    partition is stable under the power map (``r`` is then set).
    """
    group: PcPresentation
    labels: list[int]
    tags: list[tuple[int, int]]
    r: int | None = None
    cluster_map: list[int] | None = None

    def payload(self) -> list:
        """Sorted, isomorphism-invariant description of the clusters."""
        counts: dict[int, int] = {}
        tg = table_of(self.group)
        for i, k in enumerate(self.labels):
            counts[k] = counts.get(k, 0) + tg.classes[i]["size"]
        rows = []
        for k, (l, o) in enumerate(self.tags):
            img = -1 if self.cluster_map is None else self.cluster_map[k]
            rows.append([counts[k], l, o, img])
        return rows


def _canonical_relabel(keys: list[tuple]) -> tuple[list[int], list[tuple]]:
    order = sorted(set(keys))
    index = {k: i for i, k in enumerate(order)}
    return [index[k] for k in keys], order


def cluster_partition(G: PcPresentation) -> ClusterPartition:
    """Initial partition: classes clustered by (class length, element order)."""
    tg = table_of(G)
    keys = [(c["size"], c["order"]) for c in tg.classes]
    labels, order = _canonical_relabel(keys)
    return ClusterPartition(group=G, labels=labels, tags=list(order))


def refine_by_power(part: ClusterPartition, r: int) -> ClusterPartition:
    """Refine clusters by where the r-th power map sends them, to a fixed
    point, then record the induced cluster map."""
    G = part.group
    tg = table_of(G)
    pmap = [int(tg.class_ids[tg.power(c["representative"], r)])
            for c in tg.classes]
    labels = list(part.labels)
    tagof = {k: part.tags[k] for k in range(len(part.tags))}
    tags = [tagof[k] for k in sorted(tagof)]
    while True:
        keys = [(part.tags[part.labels[i]], labels[i], labels[pmap[i]])
                for i in range(len(labels))]
        new_labels, order = _canonical_relabel(keys)
        if len(order) == len(set(labels)):
            tags = [k[0] for k in order]
            labels = new_labels
            break
        labels = new_labels
    nclusters = len(set(labels))
    cmap = [0] * nclusters
    for i in range(len(labels)):
        cmap[labels[i]] = labels[pmap[i]]
    return ClusterPartition(group=G, labels=labels, tags=tags, r=r,
                            cluster_map=cmap)


def _power_schedule(p: int, n: int) -> list[int]:
    sched = [p ** k for k in range(1, max(n, 1))]
    sched.extend(q for q in _EXTRA_POWERS if q % p != 0)
    return sched


def evaluate_step(G: PcPresentation, label: str, catalog=None) -> InvariantValue:
    """Evaluate a pipeline step identified by its tree label."""
    if label.startswith("step"):
        return invariant_step(G, int(label[4:]), catalog)
    if label == "cube":
        return InvariantValue(step=label, payload=cube_map_cycle_type(G))
    if label.startswith("power:"):
        r = int(label.split(":", 1)[1])
        part = refine_by_power(cluster_partition(G), r)
        return InvariantValue(step=label, payload=part.payload())
    raise ValueError(f"unknown step label {label!r}")


def pipeline_labels(p: int, n: int) -> list[str]:
    labels = ["step1", "step2", "step3", "step4", "step5"]
    if p == 2:
        labels.append("cube")
    labels.extend(f"power:{r}" for r in _power_schedule(p, n))
    labels.extend(["step8", "step9"])
    return labels


@dataclass
class TreeNode:
    step: str | None          # None for leaves
    children: dict            # payload key text -> TreeNode
    candidates: list[int]     # catalog indices (1-based) at or below the node

    @property
    def is_leaf(self) -> bool:
        return self.step is None


@dataclass
class DecisionTree:
    p: int
    n: int
    root: TreeNode
    checksum: str
    catalog: Catalog | None = None

    @property
    def order(self) -> int:
        return self.p ** self.n


def catalog_checksum(entries: list[CatalogEntry]) -> str:
    h = hashlib.sha256()
    for e in entries:
        h.update(e.code.to_text().encode())
        h.update(b"\n")
    return h.hexdigest()


def build_tree(entries: list[CatalogEntry]) -> DecisionTree:
    """Build the identification tree for a complete single-order catalog.

    Each pipeline step is applied to every unresolved candidate set and kept
    only where it properly splits the set; leaves that remain ambiguous are
    resolved by isomorphism testing at identification time.
    """
    if not entries:
        raise ValueError("cannot build a tree over an empty catalog")
    p, n = entries[0].presentation.p, entries[0].presentation.n
    labels = pipeline_labels(p, n)
    by_index = {e.index: e for e in entries}
    cache: dict[tuple[int, str], str] = {}

    def key_of(idx: int, label: str) -> str:
        hit = cache.get((idx, label))
        if hit is None:
            hit = evaluate_step(by_index[idx].presentation, label).key()
            cache[(idx, label)] = hit
        return hit

    def grow(cands: list[int], depth: int) -> TreeNode:
        if len(cands) == 1 or depth == len(labels):
            return TreeNode(step=None, children={}, candidates=cands)
        label = labels[depth]
        parts: dict[str, list[int]] = {}
        for idx in cands:
            parts.setdefault(key_of(idx, label), []).append(idx)
        if len(parts) == 1:
            return grow(cands, depth + 1)
        children = {k: grow(v, depth + 1) for k, v in sorted(parts.items())}
        return TreeNode(step=label, children=children, candidates=cands)

    root = grow([e.index for e in entries], 0)
    return DecisionTree(p=p, n=n, root=root,
                        checksum=catalog_checksum(entries),
                        catalog=Catalog(entries))


def _resolve_leaf(tree: DecisionTree, node: TreeNode, G: PcPresentation,
                  seed: int) -> int:
    if len(node.candidates) == 1:
        return node.candidates[0]
    if tree.catalog is None:
        raise TreeIntegrityError(
            "ambiguous leaf but no catalog attached for isomorphism resolution")
    for idx in node.candidates:
        cand = tree.catalog.entry(tree.order, idx).presentation
        verdict = random_iso_test(G, cand, budget=30, seed=seed + idx)
        if verdict.isomorphic:
            return idx
    for idx in node.candidates:
        cand = tree.catalog.entry(tree.order, idx).presentation
        if is_isomorphic(G, cand) is not None:
            return idx
    raise TreeIntegrityError("group matches no candidate at its leaf; "
                             "group not of this catalog")


def identify(tree: DecisionTree, G: PcPresentation, seed: int = 0) -> int:
    """Catalog index of G (1-based), walking the decision tree."""
    if G.order != tree.order:
        raise ValueError(
            f"identify: group order {G.order} does not match tree order "
            f"{tree.order}")
    node = tree.root
    while not node.is_leaf:
        key = evaluate_step(G, node.step).key()
        child = node.children.get(key)
        if child is None:
            raise TreeIntegrityError(
                f"payload not found among children at {node.step}; "
                "group not of this catalog")
        node = child
    return _resolve_leaf(tree, node, G, seed)


# -- serialization ------------------------------------------------------------
#
# Line-oriented text format:
#
#     pgf-idtree v1 <p> <n> <checksum>
#     node <step-label> <child-count>
#     key <payload-json>
#     ... child subtree ...
#     leaf <idx1,idx2,...>

def serialize_tree(tree: DecisionTree, path: str) -> None:
    lines = [f"pgf-idtree v{TREE_VERSION} {tree.p} {tree.n} {tree.checksum}"]

    def emit(node: TreeNode) -> None:
        if node.is_leaf:
            lines.append("leaf " + ",".join(map(str, node.candidates)))
            return
        lines.append(f"node {node.step} {len(node.children)}")
        for key, child in node.children.items():
            lines.append("key " + key)
            emit(child)

    emit(tree.root)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_tree(path: str, catalog_entries: list[CatalogEntry] | None = None
              ) -> DecisionTree:
    """Load a tree; if catalog entries are supplied, verify the checksum and
    attach them for leaf resolution."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise TreeIntegrityError(f"{path}: empty tree file")
    head = lines[0].split()
    if len(head) != 5 or head[0] != "pgf-idtree" or head[1] != f"v{TREE_VERSION}":
        raise TreeIntegrityError(f"{path}: bad header {lines[0]!r}")
    try:
        p, n = int(head[2]), int(head[3])
    except ValueError as exc:
        raise TreeIntegrityError(f"{path}: bad header {lines[0]!r}") from exc
    checksum = head[4]
    pos = 1

    def parse() -> TreeNode:
        nonlocal pos
        if pos >= len(lines):
            raise TreeIntegrityError(f"{path}: truncated at line {pos + 1}")
        line = lines[pos]
        pos += 1
        if line.startswith("leaf "):
            try:
                cands = [int(x) for x in line[5:].split(",")]
            except ValueError as exc:
                raise TreeIntegrityError(
                    f"{path}: bad leaf record at line {pos}") from exc
            return TreeNode(step=None, children={}, candidates=cands)
        if line.startswith("node "):
            parts = line.split()
            if len(parts) != 3:
                raise TreeIntegrityError(
                    f"{path}: bad node record at line {pos}")
            step, count = parts[1], int(parts[2])
            children = {}
            for _ in range(count):
                if pos >= len(lines) or not lines[pos].startswith("key "):
                    raise TreeIntegrityError(
                        f"{path}: expected key record at line {pos + 1}")
                key = lines[pos][4:]
                pos += 1
                children[key] = parse()
            cands = [i for c in children.values() for i in c.candidates]
            return TreeNode(step=step, children=children, candidates=cands)
        raise TreeIntegrityError(f"{path}: unrecognized record at line {pos}")

    root = parse()
    if pos != len(lines):
        raise TreeIntegrityError(f"{path}: trailing data at line {pos + 1}")
    catalog = None
    if catalog_entries is not None:
        if catalog_checksum(catalog_entries) != checksum:
            raise TreeIntegrityError(
                f"{path}: catalog checksum mismatch with supplied entries")
        catalog = Catalog(catalog_entries)
        if sorted(root.candidates) != [e.index for e in catalog_entries]:
            raise TreeIntegrityError(
                f"{path}: leaf candidates do not partition the catalog")
    return DecisionTree(p=p, n=n, root=root, checksum=checksum,
                        catalog=catalog)
