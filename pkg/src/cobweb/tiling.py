"""Partitioning the saturated chains of a layer into product blocks.

The universe of an instance (F, k, n) is the set of saturated chains
spanning levels k..n of the cobweb poset, one vertex per level.  A
candidate block is a product set: a root vertex at level k together
with one subset per level k+1..n whose sizes are a permutation of
<F_1, ..., F_m>, m = n - k.  Every block therefore contains exactly
m_F! chains, and a partition of the universe into blocks is an exact
cover.  The search is a deterministic DFS over block bitmasks with a
min-branching pivot; budgets turn oversized work into an explicit
"inconclusive" outcome instead of an open-ended run.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .sequences import is_cobweb_admissible

if TYPE_CHECKING:  # pragma: no cover - import cycle is type-only
    from .sequences import AdmissibleSequence

DEFAULT_UNIVERSE_BUDGET = 100_000
DEFAULT_BLOCK_BUDGET = 1_000_000
DEFAULT_NODE_BUDGET = 1_000_000

SIGMA_POLICIES = ("identity", "all")


class TilingBudgetError(RuntimeError):
    """A build that would exceed a budget; carries the exact predicted size."""

    def __init__(self, kind: str, predicted: int, budget: int):
        self.kind = kind
        self.predicted = predicted
        self.budget = budget
        super().__init__(f"{kind} size {predicted} exceeds the budget of {budget}")


@dataclass(frozen=True)
class Block:
    """One candidate block: a root vertex and one subset per higher level."""

    root: int  # j index within level k
    sizes: tuple[int, ...]  # subset sizes, a permutation of <F_1..F_m>
    level_subsets: tuple[tuple[int, ...], ...]  # j indices per level k+1..n
    chains: tuple[int, ...]  # indices into the instance universe, ascending


@dataclass(frozen=True)
class TilingInstance:
    sequence_spec: str
    k: int
    n: int
    sigma_policy: str
    level_sizes: tuple[int, ...]  # sizes of levels k..n
    block_size: int  # m_F!: chains per block
    chains: tuple[tuple[int, ...], ...]  # per-level j indices, levels k..n
    blocks: tuple[Block, ...]

    @property
    def universe_size(self) -> int:
        return len(self.chains)


@dataclass(frozen=True)
class TilingSearchResult:
    status: str  # "yes" | "no" | "inconclusive"
    witness: tuple[int, ...] | None  # block indices
    nodes: int


@dataclass(frozen=True)
class TilingCountResult:
    status: str  # "exact" | "capped" | "inconclusive"
    count: int
    nodes: int


def build_instance(
    seq: "AdmissibleSequence",
    k: int,
    n: int,
    sigma_policy: str = "all",
    universe_budget: int | None = None,
    block_budget: int | None = None,
) -> TilingInstance:
    """Enumerate the chain universe and every candidate block.

    Budgets are checked against exact predicted sizes before anything is
    enumerated, so an oversized request fails fast with the true number.
    Equal chain sets arising from different size permutations are
    deduplicated; blocks are sorted by their chain tuples, which fixes
    the search order once and for all.
    """
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    if sigma_policy not in SIGMA_POLICIES:
        raise ValueError(f"sigma_policy must be one of {SIGMA_POLICIES}, got {sigma_policy!r}")
    if universe_budget is None:
        universe_budget = DEFAULT_UNIVERSE_BUDGET
    if block_budget is None:
        block_budget = DEFAULT_BLOCK_BUDGET

    verdict = is_cobweb_admissible(seq, n)
    if not verdict.admissible:
        fn, fk = verdict.first_failure  # type: ignore[misc]
        raise ValueError(
            f"sequence {seq.name!r} is not cobweb-admissible up to {n}: "
            f"({fn} {fk})_F = {verdict.failure_quotient}"
        )

    m = n - k
    sizes = tuple(1 if p == 0 else seq.value(p) for p in range(k, n + 1))

    predicted_universe = math.prod(sizes)
    if predicted_universe > universe_budget:
        raise TilingBudgetError("universe", predicted_universe, universe_budget)

    base = [seq.value(i) for i in range(1, m + 1)]
    if sigma_policy == "identity":
        size_tuples = [tuple(base)]
    else:
        size_tuples = sorted(set(itertools.permutations(base)))

    predicted_blocks = sizes[0] * sum(
        math.prod(math.comb(sizes[1 + i], t) for i, t in enumerate(st))
        for st in size_tuples
    )
    if predicted_blocks > block_budget:
        raise TilingBudgetError("candidate blocks", predicted_blocks, block_budget)

    chains = tuple(itertools.product(*(range(1, s + 1) for s in sizes)))
    chain_index = {c: i for i, c in enumerate(chains)}

    block_size = math.prod(base)
    seen: dict[tuple[int, ...], Block] = {}
    for root in range(1, sizes[0] + 1):
        for st in size_tuples:
            subset_pools = [
                tuple(itertools.combinations(range(1, sizes[1 + i] + 1), t))
                for i, t in enumerate(st)
            ]
            if any(not pool for pool in subset_pools):
                continue  # a requested size exceeds the level, no such block
            for subsets in itertools.product(*subset_pools):
                members = tuple(
                    sorted(
                        chain_index[(root,) + js]
                        for js in itertools.product(*subsets)
                    )
                )
                if members not in seen:
                    seen[members] = Block(root, st, subsets, members)
    blocks = tuple(seen[key] for key in sorted(seen))

    return TilingInstance(
        sequence_spec=seq.name,
        k=k,
        n=n,
        sigma_policy=sigma_policy,
        level_sizes=sizes,
        block_size=block_size,
        chains=chains,
        blocks=blocks,
    )


# --- exact cover search ------------------------------------------------------

def _chain_blocks(instance: TilingInstance) -> list[tuple[int, ...]]:
    per_chain: list[list[int]] = [[] for _ in instance.chains]
    for b, block in enumerate(instance.blocks):
        for c in block.chains:
            per_chain[c].append(b)
    return [tuple(bs) for bs in per_chain]


def _pivot(covered: int, n_chains: int, masks: list[int], chain_blocks) -> tuple[int, list[int]]:
    """The uncovered chain with the fewest compatible blocks (min branching)."""
    best_c = -1
    best: list[int] | None = None
    for c in range(n_chains):
        if covered >> c & 1:
            continue
        opts = [b for b in chain_blocks[c] if not masks[b] & covered]
        if best is None or len(opts) < len(best):
            best_c, best = c, opts
            if not opts:
                break
    assert best is not None
    return best_c, best


class _Search:
    """One DFS run; a node is one visit to a partial cover."""

    def __init__(self, masks, chain_blocks, n_chains, full, budget, cap, want_witness):
        self.masks = masks
        self.chain_blocks = chain_blocks
        self.n_chains = n_chains
        self.full = full
        self.budget = budget
        self.cap = cap  # None: count everything; 1 with want_witness: existence
        self.want_witness = want_witness
        self.count = 0
        self.witness: tuple[int, ...] | None = None
        self.exhausted = False
        self.nodes = 0

    def run(self, covered: int, chosen: list[int]) -> None:
        if self.exhausted or (self.cap is not None and self.count >= self.cap):
            return
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = True
            return
        if covered == self.full:
            self.count += 1
            if self.want_witness and self.witness is None:
                self.witness = tuple(chosen)
            return
        _, opts = _pivot(covered, self.n_chains, self.masks, self.chain_blocks)
        for b in opts:
            chosen.append(b)
            self.run(covered | self.masks[b], chosen)
            chosen.pop()
            if self.exhausted or (self.cap is not None and self.count >= self.cap):
                return


def _branch_task(args) -> tuple[int, tuple[int, ...] | None, bool, int]:
    masks, chain_blocks, n_chains, full, first_block, budget, cap, want_witness = args
    search = _Search(masks, chain_blocks, n_chains, full, budget, cap, want_witness)
    search.run(masks[first_block], [first_block])
    return search.count, search.witness, search.exhausted, search.nodes


def _solve(
    instance: TilingInstance,
    cap: int | None,
    jobs: int,
    node_budget: int | None,
    want_witness: bool,
) -> tuple[int, tuple[int, ...] | None, bool, int, bool]:
    """Shared driver: returns (count, witness, any_exhausted, nodes, definitive_no).

    The search always branches once at the root pivot and solves each
    branch with an equal share of the node budget, so serial and
    parallel runs visit identical trees and agree on every outcome.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if node_budget is None:
        node_budget = DEFAULT_NODE_BUDGET
    if node_budget < 1:
        raise ValueError(f"node_budget must be >= 1, got {node_budget}")

    n_chains = instance.universe_size
    if n_chains % instance.block_size:
        raise AssertionError(
            "universe size must be a multiple of the block size for an admissible sequence"
        )
    masks = [0] * len(instance.blocks)
    for b, block in enumerate(instance.blocks):
        mask = 0
        for c in block.chains:
            mask |= 1 << c
        masks[b] = mask
    chain_blocks = _chain_blocks(instance)
    full = (1 << n_chains) - 1

    _, branches = _pivot(0, n_chains, masks, chain_blocks)
    if not branches:
        return 0, None, False, 1, True

    per_branch = max(1, node_budget // len(branches))
    tasks = [
        (masks, chain_blocks, n_chains, full, b, per_branch, cap, want_witness)
        for b in branches
    ]

    results: list[tuple[int, tuple[int, ...] | None, bool, int]] = []
    if jobs == 1:
        total = 0
        for task in tasks:
            results.append(_branch_task(task))
            total += results[-1][0]
            if want_witness and results[-1][1] is not None:
                break
            if cap is not None and total >= cap:
                break
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            results = list(pool.map(_branch_task, tasks))

    count = sum(r[0] for r in results)
    witness = next((r[1] for r in results if r[1] is not None), None)
    exhausted = any(r[2] for r in results)
    nodes = 1 + sum(r[3] for r in results)
    return count, witness, exhausted, nodes, False


def exists_partition(
    instance: TilingInstance,
    jobs: int = 1,
    node_budget: int | None = None,
) -> TilingSearchResult:
    """Decide whether the universe splits into disjoint candidate blocks.

    "yes" carries a witness (block indices); "no" is only returned when
    the whole tree fit inside the node budget, otherwise the verdict is
    "inconclusive".
    """
    count, witness, exhausted, nodes, _ = _solve(
        instance, cap=1, jobs=jobs, node_budget=node_budget, want_witness=True
    )
    if count >= 1:
        return TilingSearchResult("yes", witness, nodes)
    if exhausted:
        return TilingSearchResult("inconclusive", None, nodes)
    return TilingSearchResult("no", None, nodes)


def count_partitions(
    instance: TilingInstance,
    cap: int | None = None,
    jobs: int = 1,
    node_budget: int | None = None,
) -> TilingCountResult:
    """Count the distinct partitions, up to an optional cap.

    "exact" means the full tree was searched; "capped" means at least
    cap partitions exist; "inconclusive" means the node budget ran out
    first and the count is only a lower bound.
    """
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    count, _, exhausted, nodes, _ = _solve(
        instance, cap=cap, jobs=jobs, node_budget=node_budget, want_witness=False
    )
    if cap is not None and count >= cap:
        return TilingCountResult("capped", cap, nodes)
    if exhausted:
        return TilingCountResult("inconclusive", count, nodes)
    return TilingCountResult("exact", count, nodes)


def verify_partition(instance: TilingInstance, block_indices) -> bool:
    """True iff the given candidate blocks tile the universe exactly.

    Indices outside the instance's candidate list are rejected: a
    partition may only use blocks the instance itself proposed.
    """
    chosen = list(block_indices)
    for b in chosen:
        if not isinstance(b, int) or not 0 <= b < len(instance.blocks):
            raise ValueError(f"foreign block {b!r}: not a candidate of this instance")
    covered = 0
    total = 0
    for b in chosen:
        mask = 0
        for c in instance.blocks[b].chains:
            mask |= 1 << c
        covered |= mask
        total += len(instance.blocks[b].chains)
    full = (1 << instance.universe_size) - 1
    return covered == full and total == instance.universe_size


# --- serialization -----------------------------------------------------------

def instance_to_json(instance: TilingInstance) -> dict:
    """A plain-dict form: chains as per-level index arrays, blocks by chain indices."""
    return {
        "sequence": instance.sequence_spec,
        "k": instance.k,
        "n": instance.n,
        "sigma_policy": instance.sigma_policy,
        "level_sizes": list(instance.level_sizes),
        "block_size": instance.block_size,
        "chains": [list(c) for c in instance.chains],
        "blocks": [
            {
                "root": b.root,
                "sizes": list(b.sizes),
                "subsets": [list(s) for s in b.level_subsets],
                "chains": list(b.chains),
            }
            for b in instance.blocks
        ],
    }


def instance_from_json(doc: dict) -> TilingInstance:
    """Rebuild an instance, revalidating each block against its chain list."""
    chains = tuple(tuple(c) for c in doc["chains"])
    chain_index = {c: i for i, c in enumerate(chains)}
    blocks = []
    for entry in doc["blocks"]:
        subsets = tuple(tuple(s) for s in entry["subsets"])
        members = tuple(
            sorted(
                chain_index[(entry["root"],) + js]
                for js in itertools.product(*subsets)
            )
        )
        if members != tuple(entry["chains"]):
            raise ValueError(f"block {entry} disagrees with its chain list")
        blocks.append(Block(entry["root"], tuple(entry["sizes"]), subsets, members))
    return TilingInstance(
        sequence_spec=doc["sequence"],
        k=doc["k"],
        n=doc["n"],
        sigma_policy=doc["sigma_policy"],
        level_sizes=tuple(doc["level_sizes"]),
        block_size=doc["block_size"],
        chains=chains,
        blocks=tuple(blocks),
    )


def witness_to_json(instance: TilingInstance, block_indices) -> dict:
    """A witness as block indices plus their chain-index arrays."""
    chosen = list(block_indices)
    return {
        "block_indices": chosen,
        "blocks": [list(instance.blocks[b].chains) for b in chosen],
    }
