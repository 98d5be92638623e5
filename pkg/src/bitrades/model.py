"""Permutation-triple representation of separated latin bitrades.

A separated latin bitrade is stored as a triple of fixed-point-free
permutations tau1, tau2, tau3 acting on the points 0..n-1.  Permutations
compose left to right: the product tau1*tau2*tau3 sends x to
tau3(tau2(tau1(x))) and must be the identity.  Rows, columns and symbols
of the underlying pair of partial latin squares correspond to the cycles
of tau1, tau2 and tau3 respectively, and two cycles taken from different
permutations meet in at most one point.

The module also holds the conversions between the permutation form and
the explicit pair of entry sets, plus the two plain-text file formats.
"""

from dataclasses import dataclass

from .errors import NonIntegralGenus, NotABitrade, NotSeparated

_AXIS_NAMES = ("row", "column", "symbol")


class TauTriple:
    """Three permutations of 0..n-1, stored as successor tuples.

    Instances are immutable.  Cycle structure (cycle lists in normal
    form, per-point cycle ids and lengths, predecessor maps) is computed
    once at construction; everything downstream indexes into it.

    Normal form for a cycle list: every cycle is rotated so its minimal
    point comes first and cycles are sorted by that minimum.
    """

    __slots__ = ("n", "tau", "prev", "cycles", "cycle_id", "cycle_len", "_canon")

    def __init__(self, tau1, tau2, tau3, check=True):
        tau = (tuple(tau1), tuple(tau2), tuple(tau3))
        n = len(tau[0])
        if check:
            if n == 0:
                raise ValueError("empty point set")
            for t in tau:
                if len(t) != n:
                    raise ValueError("permutation lengths differ")
                seen = bytearray(n)
                for v in t:
                    if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                        raise ValueError("not a permutation of 0..n-1: %r" % (t,))
                    seen[v] = 1
        self.n = n
        self.tau = tau
        prevs = []
        all_cycles = []
        all_ids = []
        all_lens = []
        for t in tau:
            prev = [0] * n
            for i, v in enumerate(t):
                prev[v] = i
            prevs.append(tuple(prev))
            seen = bytearray(n)
            cycs = []
            cid = [0] * n
            clen = [0] * n
            for s in range(n):
                if seen[s]:
                    continue
                # s is the minimum of its cycle: smaller points are done.
                cyc = [s]
                seen[s] = 1
                w = t[s]
                while w != s:
                    cyc.append(w)
                    seen[w] = 1
                    w = t[w]
                k = len(cycs)
                m = len(cyc)
                for p in cyc:
                    cid[p] = k
                    clen[p] = m
                cycs.append(tuple(cyc))
            all_cycles.append(tuple(cycs))
            all_ids.append(tuple(cid))
            all_lens.append(tuple(clen))
        self.prev = tuple(prevs)
        self.cycles = tuple(all_cycles)
        self.cycle_id = tuple(all_ids)
        self.cycle_len = tuple(all_lens)
        self._canon = None

    @property
    def size(self):
        """Number of points (equals the number of entries of each set)."""
        return self.n

    @classmethod
    def from_cycles(cls, n, cycles1, cycles2, cycles3):
        """Build a triple from three cycle lists covering 0..n-1 exactly."""
        taus = []
        for cycs in (cycles1, cycles2, cycles3):
            succ = [-1] * n
            for cyc in cycs:
                for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                    if not 0 <= a < n:
                        raise ValueError("cycle point %r out of range" % (a,))
                    if succ[a] != -1:
                        raise ValueError("point %d appears twice" % a)
                    succ[a] = b
            if -1 in succ:
                raise ValueError("point %d missing from cycle list" % succ.index(-1))
            taus.append(succ)
        return cls(*taus)

    def relabelled(self, theta):
        """Conjugate all three permutations by the point map theta."""
        theta = tuple(theta)
        n = self.n
        out = []
        for t in self.tau:
            img = [0] * n
            for p in range(n):
                img[theta[p]] = theta[t[p]]
            out.append(img)
        return TauTriple(*out, check=False)

    def cycles_str(self, i):
        """Render direction i (0-based) as a cycle string like (0 1 2)(3 5 4)."""
        return "".join(
            "(" + " ".join(str(p) for p in cyc) + ")" for cyc in self.cycles[i]
        )

    def __eq__(self, other):
        return isinstance(other, TauTriple) and self.tau == other.tau

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.tau)

    def __repr__(self):
        return "TauTriple(%s, %s, %s)" % tuple(self.cycles_str(i) for i in range(3))


class TradePair:
    """A bitrade as two sorted tuples of (row, column, symbol) entries."""

    __slots__ = ("entries_a", "entries_b")

    def __init__(self, entries_a, entries_b):
        self.entries_a = tuple(sorted(tuple(e) for e in entries_a))
        self.entries_b = tuple(sorted(tuple(e) for e in entries_b))
        for e in self.entries_a + self.entries_b:
            if len(e) != 3 or not all(isinstance(v, int) for v in e):
                raise ValueError("entry %r is not a triple of integers" % (e,))

    @property
    def size(self):
        return len(self.entries_a)

    def __eq__(self, other):
        return (
            isinstance(other, TradePair)
            and self.entries_a == other.entries_a
            and self.entries_b == other.entries_b
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.entries_a, self.entries_b))

    def __repr__(self):
        return "TradePair(%r, %r)" % (self.entries_a, self.entries_b)


@dataclass
class ValidationReport:
    """Outcome of checking the three bitrade conditions on a triple.

    genus is None when the cycle counts give an odd or negative value,
    which can only happen on inputs that are not bitrades.
    """

    t1_ok: bool
    t2_ok: bool
    t3_ok: bool
    t1_witness: "int | None"
    t2_witness: "int | None"
    t3_witness: "int | None"
    transitive: bool
    genus: "int | None"

    @property
    def ok(self):
        return self.t1_ok and self.t2_ok and self.t3_ok


def validate(t):
    """Check product-identity, cycle-intersection and fixed-point conditions.

    Also reports whether the three permutations generate a transitive
    group on the points, and the genus value derived from cycle counts.
    Never raises; every defect is reported with a witness point.
    """
    n = t.n
    t1, t2, t3 = t.tau
    t1_ok = True
    t1_witness = None
    t3_ok = True
    t3_witness = None
    for v in range(n):
        if t3_ok and (t1[v] == v or t2[v] == v or t3[v] == v):
            t3_ok = False
            t3_witness = v
        if t1_ok and t3[t2[t1[v]]] != v:
            t1_ok = False
            t1_witness = v
    t2_ok = True
    t2_witness = None
    ids = t.cycle_id
    for a, b in ((0, 1), (0, 2), (1, 2)):
        ca = ids[a]
        cb = ids[b]
        seen = set()
        for v in range(n):
            key = ca[v] * n + cb[v]
            if key in seen:
                t2_ok = False
                if t2_witness is None:
                    t2_witness = v
                break
            seen.add(key)
        if not t2_ok:
            break
    # transitivity: one sweep of union-find over the three edge sets
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm in (t1, t2, t3):
        for v in range(n):
            ra, rb = find(v), find(perm[v])
            if ra != rb:
                parent[ra] = rb
    transitive = all(find(v) == find(0) for v in range(n))
    order = sum(len(c) for c in t.cycles)
    twice = n - order + 2
    g = twice // 2 if (twice >= 0 and twice % 2 == 0) else None
    return ValidationReport(
        t1_ok, t2_ok, t3_ok, t1_witness, t2_witness, t3_witness, transitive, g
    )


def genus(t):
    """Genus of the triple from its cycle counts.

    The total number of cycles equals size + 2 - 2g; solving for g must
    give a non-negative integer, otherwise the input is not a bitrade.
    """
    order = sum(len(c) for c in t.cycles)
    twice = t.n - order + 2
    if twice < 0 or twice % 2 != 0:
        raise NonIntegralGenus(
            "size %d with %d cycles gives no valid genus" % (t.n, order)
        )
    return twice // 2


def inverse(t):
    """The inverse bitrade [tau1^-1, tau2^-1, tau2*tau1].

    Swapping the roles of the two entry sets inverts the first two
    permutations; the third becomes tau2 followed by tau1.  Applying the
    operation twice gives back the identical triple.
    """
    t1, t2 = t.tau[0], t.tau[1]
    nu3 = tuple(t1[t2[p]] for p in range(t.n))
    return TauTriple(t.prev[0], t.prev[1], nu3, check=False)


def to_pair(t):
    """Entry sets of the bitrade, with rows/columns/symbols numbered by cycle.

    The first set collects, for every point, the ids of its three cycles.
    The second set follows each point one step around each permutation in
    turn: the entry combines the first cycle at x, the second cycle at
    x*tau1 and the third cycle at x*tau1*tau2.
    """
    c1, c2, c3 = t.cycle_id
    t1, t2 = t.tau[0], t.tau[1]
    ea = [(c1[x], c2[x], c3[x]) for x in range(t.n)]
    eb = [(c1[x], c2[t1[x]], c3[t2[t1[x]]]) for x in range(t.n)]
    return TradePair(ea, eb)


def _index_by_pair(entries, r, label):
    """Map (coords other than r) -> entry, rejecting duplicate keys."""
    out = {}
    for e in entries:
        key = e[:r] + e[r + 1 :]
        if key in out:
            raise NotABitrade(
                "entries %r and %r of %s agree outside the %s coordinate"
                % (out[key], e, label, _AXIS_NAMES[r])
            )
        out[key] = e
    return out


def from_pair(p):
    """Convert a pair of entry sets to its permutation triple.

    For each coordinate r there must be a bijection between the two sets
    matching entries that agree everywhere except coordinate r.  The
    three permutations are composites of those bijections; points are the
    entries of the first set in sorted order.  Raises NotABitrade when a
    matching entry is missing or duplicated, NotSeparated when some row,
    column or symbol spans more than one cycle.
    """
    ea = p.entries_a
    eb = p.entries_b
    if not ea:
        raise NotABitrade("empty entry sets")
    if len(ea) != len(eb):
        raise NotABitrade(
            "entry sets have different sizes (%d vs %d)" % (len(ea), len(eb))
        )
    common = set(ea) & set(eb)
    if common:
        raise NotABitrade("entry %r appears in both sets" % (sorted(common)[0],))
    a_by = [_index_by_pair(ea, r, "the first set") for r in range(3)]
    b_by = [_index_by_pair(eb, r, "the second set") for r in range(3)]

    def step(entry, r, table, label):
        key = entry[:r] + entry[r + 1 :]
        try:
            return table[r][key]
        except KeyError:
            raise NotABitrade(
                "no entry of %s matches %r outside the %s coordinate"
                % (label, entry, _AXIS_NAMES[r])
            ) from None

    idx = {e: i for i, e in enumerate(ea)}
    n = len(ea)
    taus = []
    # tau1 changes column then symbol, tau2 symbol then row, tau3 row then column
    for first, second in ((1, 2), (2, 0), (0, 1)):
        succ = [0] * n
        for e in ea:
            b = step(e, first, b_by, "the second set")
            a = step(b, second, a_by, "the first set")
            succ[idx[e]] = idx[a]
        taus.append(succ)
    for b in eb:
        for r in range(3):
            step(b, r, a_by, "the first set")
    t = TauTriple(*taus, check=False)
    for axis in range(3):
        labels = {e[axis] for e in ea}
        if len(labels) != len(t.cycles[axis]):
            by_label = {}
            for e in ea:
                by_label.setdefault(e[axis], set()).add(t.cycle_id[axis][idx[e]])
            bad = sorted(k for k, v in by_label.items() if len(v) > 1)[0]
            raise NotSeparated(
                "%s %r splits into %d cycles"
                % (_AXIS_NAMES[axis], bad, len(by_label[bad]))
            )
    return t


# ---------------------------------------------------------------------------
# file formats


def _parse_cycle_list(text, line_no):
    cycles = []
    i = 0
    m = len(text)
    while i < m:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ValueError("line %d, column %d: expected '('" % (line_no, i + 1))
        close = text.find(")", i)
        if close < 0:
            raise ValueError("line %d, column %d: unclosed cycle" % (line_no, i + 1))
        body = text[i + 1 : close].split()
        if len(body) < 2:
            raise ValueError(
                "line %d, column %d: a cycle needs at least two points"
                % (line_no, i + 1)
            )
        try:
            cycles.append(tuple(int(b) for b in body))
        except ValueError:
            raise ValueError(
                "line %d, column %d: cycle holds a non-integer" % (line_no, i + 1)
            ) from None
        i = close + 1
    if not cycles:
        raise ValueError("line %d, column 1: empty cycle list" % line_no)
    return cycles


def parse_tau(text):
    """Parse the permutation-triple format (size header plus t1/t2/t3 lines)."""
    lines = [
        (i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()
    ]
    if not lines:
        raise ValueError("line 1, column 1: empty input")
    ln, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "size":
        raise ValueError("line %d, column 1: expected 'size N'" % ln)
    try:
        n = int(parts[1])
    except ValueError:
        raise ValueError("line %d, column 6: size is not an integer" % ln) from None
    if len(lines) != 4:
        raise ValueError("expected exactly three permutation lines after the header")
    cycle_lists = []
    for want, (ln, body) in zip(("t1", "t2", "t3"), lines[1:]):
        parts = body.split(None, 1)
        if len(parts) != 2 or parts[0] != want:
            raise ValueError("line %d, column 1: expected '%s ...'" % (ln, want))
        cycle_lists.append(_parse_cycle_list(parts[1], ln))
    return TauTriple.from_cycles(n, *cycle_lists)


def format_tau(t):
    """Render a triple in the permutation format, cycle lists in normal form."""
    lines = ["size %d" % t.n]
    for i in range(3):
        lines.append("t%d %s" % (i + 1, t.cycles_str(i)))
    return "\n".join(lines) + "\n"


def parse_trade(text):
    """Parse the entry-set format (lines 'A r c s' and 'B r c s')."""
    ea = []
    eb = []
    for i, raw in enumerate(text.splitlines()):
        ln = raw.strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 4 or parts[0] not in ("A", "B"):
            raise ValueError(
                "line %d, column 1: expected 'A r c s' or 'B r c s'" % (i + 1)
            )
        try:
            entry = tuple(int(v) for v in parts[1:])
        except ValueError:
            raise ValueError(
                "line %d, column %d: non-integer coordinate"
                % (i + 1, len(parts[0]) + 2)
            ) from None
        (ea if parts[0] == "A" else eb).append(entry)
    if not ea and not eb:
        raise ValueError("line 1, column 1: empty input")
    return TradePair(ea, eb)


def format_trade(p):
    """Render a pair in the entry-set format, entries in ascending order."""
    lines = ["A %d %d %d" % e for e in p.entries_a]
    lines += ["B %d %d %d" % e for e in p.entries_b]
    return "\n".join(lines) + "\n"


def loads(text):
    """Parse either format, telling them apart by the first token."""
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln:
            continue
        token = ln.split()[0]
        if token == "size":
            return parse_tau(text)
        if token in ("A", "B"):
            return parse_trade(text)
        raise ValueError("unrecognised leading token %r" % token)
    raise ValueError("empty input")


def as_triple(obj):
    """Coerce a parsed object to a TauTriple, converting pairs as needed."""
    if isinstance(obj, TauTriple):
        return obj
    return from_pair(obj)
