"""Isomorph-free generation of spherical bitrades by canonical augmentation.

Every genus-0 class is reachable from the two-cycle-direction (bicyclic)
roots by slide expansions, interleaved with passing to the inverse
bitrade when that inverse has no contraction of its own.  The walk
accepts an expanded child only when the expansion undoes the child's
canonical contraction, so each class is visited exactly once; roots are
seeded once per even size and are never produced as children.

Work splitting: the tree is walked sequentially to a fixed depth and one
replayable task is emitted per frontier node.  Task results are merged
by summation, so the census is identical for any worker count, split
depth or completion order.
"""

import hashlib
import json
import logging
import multiprocessing
import os
from dataclasses import dataclass, field

from .canon import _accepts, _canonical_data, automorphisms, triple_from_code
from .errors import InvalidSize
from .model import TauTriple, inverse
from .moves import SlideSite, expansion_sites, has_contraction_site, slide_expand

log = logging.getLogger(__name__)

_AUTO_SPLIT_DEPTH = 4


@dataclass
class RunConfig:
    """Settings for an enumeration run."""

    max_size: int
    workers: int = 1
    split_depth: "int | None" = None
    emit: str = "counts"
    checkpoint_dir: "str | None" = None
    oracle_bound: int = 13

    def check(self):
        if self.max_size < 4:
            raise InvalidSize("max size must be at least 4")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.split_depth is not None and self.split_depth < 0:
            raise ValueError("split depth must be non-negative")
        if self.emit not in ("counts", "forms"):
            raise ValueError("emit must be 'counts' or 'forms'")


class CensusTable:
    """Counts per size, with an optional list of canonical codes per size."""

    __slots__ = ("counts", "codes")

    def __init__(self, counts=None, codes=None):
        self.counts = dict(counts) if counts else {}
        self.codes = (
            None if codes is None else {s: list(c) for s, c in codes.items()}
        )

    def add(self, size, code=None):
        self.counts[size] = self.counts.get(size, 0) + 1
        if self.codes is not None and code is not None:
            self.codes.setdefault(size, []).append(tuple(code))

    def merge(self, other):
        for s, c in other.counts.items():
            self.counts[s] = self.counts.get(s, 0) + c
        if self.codes is not None and other.codes:
            for s, lst in other.codes.items():
                self.codes.setdefault(s, []).extend(tuple(c) for c in lst)

    def sort_codes(self):
        if self.codes is not None:
            for lst in self.codes.values():
                lst.sort()

    def to_text(self):
        return "".join(
            "%d\t%d\n" % (s, self.counts[s]) for s in sorted(self.counts)
        )

    @classmethod
    def from_text(cls, text):
        counts = {}
        for ln in text.splitlines():
            if not ln.strip():
                continue
            size, count = ln.split("\t")
            counts[int(size)] = int(count)
        return cls(counts)

    def forms_text(self):
        self.sort_codes()
        lines = []
        for s in sorted(self.codes or ()):
            for code in self.codes[s]:
                lines.append("%d %s\n" % (s, " ".join(str(v) for v in code)))
        return "".join(lines)

    def __eq__(self, other):
        return isinstance(other, CensusTable) and self.counts == other.counts

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "CensusTable(%r)" % (self.counts,)


def bicyclic_roots(size):
    """The classes of the given even size in which some direction has
    exactly two cycles, one triple per class.

    The two cycles are (x0..x_{m-1}) and its reversed partner; the other
    two directions pair the cycles off point by point, with the pairing
    offset chosen so the product condition holds (both offsets are tried,
    matching the two possible orientations of the second cycle).
    """
    if size < 4 or size % 2:
        raise InvalidSize("bicyclic triples exist for even sizes >= 4 only")
    from .model import validate

    m = size // 2
    out = []
    seen = set()
    for j in (1, 2, 3):
        big = [0] * size
        for i in range(m):
            big[i] = (i + 1) % m  # x_i -> x_{i+1}
            big[m + i] = m + (i - 1) % m  # x'_i -> x'_{i-1}
        near = [0] * size
        for i in range(m):
            near[i] = m + i  # (x_i, x'_i)
            near[m + i] = i
        candidates = []
        for offset in (1, m - 1):  # pair x_{i+offset} with x'_i
            far = [0] * size
            for i in range(m):
                far[(i + offset) % m] = m + i
                far[m + i] = (i + offset) % m
            candidates.append(far)
        ji = j - 1
        for far in candidates:
            arrs = [None, None, None]
            arrs[ji] = big
            arrs[(ji + 1) % 3] = near
            arrs[(ji + 2) % 3] = far
            t = TauTriple(*arrs, check=False)
            if validate(t).ok:
                code = _canonical_data(t)[0]
                if code not in seen:
                    seen.add(code)
                    out.append(t)
                break
    return out


def _is_bicyclic(t):
    return any(len(c) == 2 for c in t.cycles)


def _child_edges(t):
    """One expansion per automorphism orbit of sites, with its undo site.

    Yields (site on t, child, undo site on child); the representative is
    the least site of each orbit.
    """
    sites = expansion_sites(t)
    if not sites:
        return []
    _, wits = _canonical_data(t)
    if len(wits) > 1:
        perms = automorphisms(t).elements
        covered = set()
        reps = []
        for s in sites:
            if s in covered:
                continue
            reps.append(s)
            for perm in perms:
                covered.add(SlideSite(s.direction, perm[s.point]))
        sites = reps
    u = t.n
    return [(s, slide_expand(t, s), SlideSite(s.direction, u)) for s in sites]


def children(t):
    """Expanded children of t, one per site orbit, with undo sites."""
    return [(child, undo) for _, child, undo in _child_edges(t)]


def _orphan_inverse(t):
    """The inverse of t when it must be walked as a separate subtree.

    That is the case when the inverse has no contraction of its own (so
    no expansion ever produces it) and is not isomorphic to t.  Bicyclic
    inverses are skipped: they are isomorphic to t and seeded as roots.
    """
    inv = inverse(t)
    if _is_bicyclic(inv):
        return None
    if has_contraction_site(inv):
        return None
    if _canonical_data(inv)[0] == _canonical_data(t)[0]:
        return None
    return inv


def _subtree(t, max_size, visit):
    visit(t)
    if t.n < max_size:
        for _site, child, undo in _child_edges(t):
            if _accepts(child, undo.direction, undo.point):
                _subtree(child, max_size, visit)
    inv = _orphan_inverse(t)
    if inv is not None:
        _subtree(inv, max_size, visit)


def canaug_spherical(root, max_size, visitor):
    """Visit every class in the generation subtree of one root."""
    if root.n > max_size:
        return
    _subtree(root, max_size, visitor)


@dataclass(frozen=True)
class SearchTask:
    """A replayable subtree: a root code plus the move path to its entry node."""

    root_code: tuple
    path: tuple
    max_size: int

    def to_json(self):
        return json.dumps(
            {
                "root": list(self.root_code),
                "path": [list(step) for step in self.path],
                "max_size": self.max_size,
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(
            tuple(obj["root"]),
            tuple(tuple(step) for step in obj["path"]),
            obj["max_size"],
        )

    def replay(self):
        """Rebuild the entry node by applying the path to the root."""
        t = triple_from_code(self.root_code)
        for step in self.path:
            if step[0] == "e":
                t = slide_expand(t, SlideSite(step[1], step[2]))
            elif step[0] == "i":
                t = inverse(t)
            else:
                raise ValueError("unknown path step %r" % (step,))
        return t

    def run(self, collect_codes=False):
        """Walk the subtree; returns a CensusTable for it."""
        census = CensusTable(codes={} if collect_codes else None)

        def visit(t):
            census.add(t.n, _canonical_data(t)[0] if collect_codes else None)

        _subtree(self.replay(), self.max_size, visit)
        return census


def _root_codes(max_size):
    codes = []
    for size in range(4, max_size + 1, 2):
        codes.extend(sorted(_canonical_data(r)[0] for r in bicyclic_roots(size)))
    return codes


def _split_walk(t, depth, split_depth, max_size, visit, root_code, path, tasks):
    if depth == split_depth:
        tasks.append(SearchTask(root_code, tuple(path), max_size))
        return
    visit(t)
    if t.n < max_size:
        for site, child, undo in _child_edges(t):
            if _accepts(child, undo.direction, undo.point):
                path.append(("e", site.direction, site.point))
                _split_walk(
                    child, depth + 1, split_depth, max_size, visit, root_code,
                    path, tasks,
                )
                path.pop()
    inv = _orphan_inverse(t)
    if inv is not None:
        path.append(("i",))
        _split_walk(
            inv, depth + 1, split_depth, max_size, visit, root_code, path, tasks
        )
        path.pop()


def _split(max_size, split_depth, collect_codes=False):
    """Sequential prefix walk: census of shallow nodes plus frontier tasks."""
    prefix = CensusTable(codes={} if collect_codes else None)

    def visit(t):
        prefix.add(t.n, _canonical_data(t)[0] if collect_codes else None)

    tasks = []
    for code in _root_codes(max_size):
        _split_walk(
            triple_from_code(code), 0, split_depth, max_size, visit, code, [],
            tasks,
        )
    return prefix, tasks


def split_tasks(max_size, split_depth):
    """Frontier tasks of the sequential prefix walk at the given depth."""
    if max_size < 4:
        raise InvalidSize("max size must be at least 4")
    if split_depth < 0:
        raise ValueError("split depth must be non-negative")
    return _split(max_size, split_depth)[1]


def _run_task_payload(payload):
    index, text, collect_codes = payload
    census = SearchTask.from_json(text).run(collect_codes)
    return index, census.counts, census.codes


def _task_key(text):
    return hashlib.sha1(text.encode("ascii")).hexdigest()


def _load_checkpoint(path):
    done = {}
    if path and os.path.exists(path):
        with open(path, "r", encoding="ascii") as fh:
            for ln in fh:
                if not ln.strip():
                    continue
                obj = json.loads(ln)
                codes = obj.get("codes")
                if codes is not None:
                    codes = {int(s): c for s, c in codes.items()}
                done[obj["key"]] = (
                    {int(s): c for s, c in obj["counts"].items()},
                    codes,
                )
    return done


def enumerate_all(max_size, workers=1, split_depth=None, emit="counts",
                  checkpoint_dir=None):
    """Census of all classes of size at most max_size.

    With emit='forms' the table also carries the sorted canonical codes
    per size.  The result is byte-identical for any worker count and
    split depth.
    """
    cfg = RunConfig(max_size, workers, split_depth, emit, checkpoint_dir)
    cfg.check()
    collect = emit == "forms"
    if split_depth is None:
        split_depth = 0 if workers == 1 else _AUTO_SPLIT_DEPTH
    census, tasks = _split(max_size, split_depth, collect)
    log.info("prefix walked, %d tasks at depth %d", len(tasks), split_depth)
    done = {}
    done_path = None
    if checkpoint_dir:
        os.makedirs(checkpoint_dir, exist_ok=True)
        done_path = os.path.join(checkpoint_dir, "done.jsonl")
        done = _load_checkpoint(done_path)
    payloads = []
    for idx, task in enumerate(tasks):
        text = task.to_json()
        key = _task_key(text)
        hit = done.get(key)
        # a counts-only checkpoint entry cannot serve a forms run
        if hit is not None and (not collect or hit[1] is not None):
            census.merge(CensusTable(hit[0], hit[1] if collect else None))
        else:
            payloads.append((idx, text, collect, key))
    log.info("%d tasks to run (%d from checkpoint)",
             len(payloads), len(tasks) - len(payloads))

    def record(key, counts, codes):
        census.merge(CensusTable(counts, codes if collect else None))
        if done_path:
            with open(done_path, "a", encoding="ascii") as fh:
                entry = {"key": key, "counts": counts}
                if collect:
                    entry["codes"] = {
                        s: [list(c) for c in lst] for s, lst in (codes or {}).items()
                    }
                fh.write(json.dumps(entry, separators=(",", ":")) + "\n")

    if workers == 1 or len(payloads) <= 1:
        for idx, text, coll, key in payloads:
            _, counts, codes = _run_task_payload((idx, text, coll))
            record(key, counts, codes)
    else:
        keys = {idx: key for idx, text, coll, key in payloads}
        with multiprocessing.Pool(workers) as pool:
            results = pool.imap_unordered(
                _run_task_payload, [(i, t, c) for i, t, c, _ in payloads]
            )
            finished = 0
            for idx, counts, codes in results:
                record(keys[idx], counts, codes)
                finished += 1
                if finished % 50 == 0:
                    log.info("%d/%d tasks done", finished, len(payloads))
    for size in range(4, max_size + 1):
        census.counts.setdefault(size, 0)
    census.sort_codes()
    return census
