"""Coset search for [48,24,10] codes built from the base code and a
right transversal of its automorphism group in S16.

Two iteration modes share one driver.  Full mode streams the exact
lexicographically-minimal representative of every right coset (about
2.8e8 per X matrix, a long-running job, shardable).  Sample mode draws
seeded uniform permutations and canonicalizes each to its coset
representative, so a fixed (seed, index) pair always names the same
coset regardless of sharding or interruption.

Each candidate tau is kept iff the code generated by (pi^-1(tau B);
phi^-1(X_i)) has minimum distance 10, decided by the precomputed
distance tables of the decomposed engine.  Survivors are deduplicated
by code equivalence, against each other and against the published
table codes.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field

import numpy as np

from . import construct, dataset, equiv
from .perm import Permutation

CHECKPOINT_EVERY = 2000


@dataclass(frozen=True)
class Survivor:
    """One distance-10 hit: which X matrix, which coset representative."""

    xi_index: int
    perm_text: str
    digest: str


@dataclass
class SearchState:
    """Progress of one (xi, shard) search, serializable to JSON."""

    xi_index: int
    mode: str  # "sample" or "full"
    seed: int
    sample: int | None
    shard: tuple
    position: int = 0
    survivors: list = field(default_factory=list)

    def to_json(self):
        return json.dumps(
            {
                "xi_index": self.xi_index,
                "mode": self.mode,
                "seed": self.seed,
                "sample": self.sample,
                "shard": list(self.shard),
                "position": self.position,
                "survivors": [
                    [s.xi_index, s.perm_text, s.digest] for s in self.survivors
                ],
            },
            indent=1,
        )

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(
            xi_index=obj["xi_index"],
            mode=obj["mode"],
            seed=obj["seed"],
            sample=obj["sample"],
            shard=tuple(obj["shard"]),
            position=obj["position"],
            survivors=[Survivor(*row) for row in obj["survivors"]],
        )


def _write_checkpoint(path, state):
    fd, tmp = tempfile.mkstemp(
        dir=os.path.dirname(os.path.abspath(path)) or ".", suffix=".tmp"
    )
    with os.fdopen(fd, "w") as fh:
        fh.write(state.to_json())
    os.replace(tmp, path)


def load_checkpoint(path):
    with open(path) as fh:
        return SearchState.from_json(fh.read())


def sampled_tau(seed, index):
    """The canonical coset representative for sample (seed, index).

    The draw is uniform over S16, then reduced to the lex-minimal
    element of its right coset, so repeats of one coset collapse to
    one representative.
    """
    rng = np.random.default_rng([seed, index])
    tau = Permutation(tuple(int(x) for x in rng.permutation(16)))
    return dataset.autb_group().min_coset_rep(tau)


def code_digest(code):
    """A short stable fingerprint of the equivalence invariant."""
    key = repr(equiv.invariant(code))
    return hashlib.sha256(key.encode()).hexdigest()[:16]


def register_engine_data(engine, tau, code=None):
    """Compute refinement data for a tau through the decomposed engine
    (768 + 8592 low-weight words) and attach it to the code."""
    if code is None:
        code = construct.build_code(tau, engine.xi_index, engine.embed)
    if code not in equiv._cache:
        we = engine.weight_enumerator(tau)
        words = engine.words_of_weights(tau, (10, 12))
        equiv.register_code_data(code, we, words[10], words[12])
    return code


def _candidate_stream(state):
    """Yield (position, tau) pairs starting at state.position."""
    if state.mode == "sample":
        shard_idx, shard_cnt = state.shard
        for i in range(state.position, state.sample):
            if i % shard_cnt != shard_idx:
                continue
            yield i, sampled_tau(state.seed, i)
    else:
        stream = dataset.autb_group().right_transversal(shard=state.shard)
        for pos, tau in enumerate(stream):
            if pos < state.position:
                continue
            yield pos, tau


_WORKER_ENGINES = {}


def _worker_engine(xi_index):
    eng = _WORKER_ENGINES.get(xi_index)
    if eng is None:
        eng = construct.DecomposedEngine(xi_index)
        eng.m_table()
        _WORKER_ENGINES[xi_index] = eng
    return eng


def _filter_block(args):
    """Pool worker: filter one block of sample indices, return the hits."""
    xi_index, seed, indices = args
    eng = _worker_engine(xi_index)
    hits = []
    for i in indices:
        tau = sampled_tau(seed, i)
        if eng.min_weight_at_least(tau, 10):
            hits.append(i)
    return hits


def run_search(
    xi_index,
    sample=None,
    seed=0,
    shard=(0, 1),
    checkpoint_path=None,
    state=None,
    progress=None,
    extra_taus=(),
    threads=1,
):
    """Run (or resume) one search; returns the final SearchState.

    ``extra_taus`` are injected ahead of the stream (not counted in the
    position), useful for spot checks with known permutations.  With
    ``threads`` > 1 the sample mode filters blocks in a process pool;
    survivors and checkpoints are still handled by this process only.
    """
    if state is None:
        if checkpoint_path is not None and os.path.exists(checkpoint_path):
            state = load_checkpoint(checkpoint_path)
            if (state.xi_index, state.sample, state.seed) != (
                xi_index,
                sample,
                seed,
            ) or tuple(state.shard) != tuple(shard):
                raise ValueError(
                    "checkpoint does not match the requested search"
                )
        else:
            state = SearchState(
                xi_index=xi_index,
                mode="sample" if sample is not None else "full",
                seed=seed,
                sample=sample,
                shard=tuple(shard),
            )
    engine = _worker_engine(xi_index)
    seen = {s.perm_text for s in state.survivors}

    def consider(tau):
        text = tau.to_cycle_text() or "()"
        if text in seen:
            return
        if engine.min_weight_at_least(tau, 10):
            code = register_engine_data(engine, tau)
            state.survivors.append(
                Survivor(xi_index, text, code_digest(code))
            )
            seen.add(text)

    for tau in extra_taus:
        consider(dataset.autb_group().min_coset_rep(tau))
    if threads > 1 and state.mode == "sample":
        _run_pooled(state, consider, checkpoint_path, progress, threads)
    else:
        done = 0
        for pos, tau in _candidate_stream(state):
            consider(tau)
            state.position = pos + 1
            done += 1
            if progress is not None and done % 10000 == 0:
                progress(state)
            if checkpoint_path is not None and done % CHECKPOINT_EVERY == 0:
                _write_checkpoint(checkpoint_path, state)
    if state.mode == "sample":
        state.position = state.sample
    if checkpoint_path is not None:
        _write_checkpoint(checkpoint_path, state)
    return state


def _run_pooled(state, consider, checkpoint_path, progress, threads):
    """Filter sample blocks in a process pool, merging results in order."""
    from multiprocessing import get_context

    shard_idx, shard_cnt = state.shard
    indices = [
        i
        for i in range(state.position, state.sample)
        if i % shard_cnt == shard_idx
    ]
    block_size = 10000
    blocks = [
        indices[j : j + block_size]
        for j in range(0, len(indices), block_size)
    ]
    jobs = [(state.xi_index, state.seed, block) for block in blocks]
    with get_context("fork").Pool(threads) as pool:
        for block, hits in zip(blocks, pool.imap(_filter_block, jobs)):
            for i in hits:
                consider(sampled_tau(state.seed, i))
            state.position = block[-1] + 1
            if progress is not None:
                progress(state)
            if checkpoint_path is not None:
                _write_checkpoint(checkpoint_path, state)


def _survivor_code(survivor, engines):
    eng = engines.setdefault(
        survivor.xi_index, construct.DecomposedEngine(survivor.xi_index)
    )
    tau = dataset.autb_group().min_coset_rep(
        _parse(survivor.perm_text)
    )
    return register_engine_data(eng, tau)


def _parse(text):
    from . import perm

    return perm.parse_cycles(text, 16)


def dedup_survivors(survivors, against_tables=True):
    """Partition survivor codes into equivalence classes.

    Returns a dict with the class structure and, when checked against
    the published tables, which table entry each class matches (or None
    for a genuinely new code, which for this search space should never
    happen).
    """
    engines = {}
    codes = [_survivor_code(s, engines) for s in survivors]
    labels = [("survivor", i) for i in range(len(survivors))]
    if against_tables:
        for idx, entry in enumerate(dataset.table_entries()):
            eng = engines.setdefault(
                entry.table_id, construct.DecomposedEngine(entry.table_id)
            )
            codes.append(register_engine_data(eng, entry.tau()))
            labels.append(("table", idx))
    classes = equiv.partition_classes(codes)
    out = {"num_survivors": len(survivors), "classes": []}
    for members in classes:
        tagged = [labels[m] for m in members]
        if not any(kind == "survivor" for kind, _ in tagged):
            continue
        table_matches = [i for kind, i in tagged if kind == "table"]
        out["classes"].append(
            {
                "survivors": [
                    survivors[i].perm_text
                    for kind, i in tagged
                    if kind == "survivor"
                ],
                "table_match": table_matches[0] if table_matches else None,
            }
        )
    out["all_matched"] = all(
        c["table_match"] is not None for c in out["classes"]
    )
    return out
