"""Machine verification sweeps.

Each named check exercises one family of invariants: algebra and coalgebra
axioms, the three antipode routes against each other and against the defining
convolution identities, the primitive-generator theorem, the vanishing signed
restriction sums, the quasi-shuffle counting and pairing laws, unitriangular
change of basis, the Hall-primitive span, and the combinatorial cardinalities
against recurrence oracles.

Partition sweeps are exhaustive through weight 5 and fall back to seeded
random samples above that, so reports are reproducible byte for byte for a
fixed seed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from . import hopf, setparts, words
from .hopf import NCSymElement
from .setparts import EMPTY_PARTITION, SetComposition, SetPartition
from .words import Word

__all__ = [
    "CheckResult",
    "CHECK_NAMES",
    "run_checks",
    "bell_numbers",
    "fubini_numbers",
    "quasi_shuffle_count",
    "growth_string_count",
]

EXHAUSTIVE_CAP = 5
SAMPLE_PARTITIONS = 12
SAMPLE_PAIRS = 20


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def tally(self, condition, detail):
        self.cases += 1
        if not condition:
            self.failures.append(detail)


def bell_numbers(n_max):
    """Bell numbers 0..n_max by the Bell-triangle recurrence."""
    out = [1]
    row = [1]
    for _ in range(n_max):
        grown = [row[-1]]
        for v in row:
            grown.append(grown[-1] + v)
        row = grown
        out.append(row[0])
    return out


def fubini_numbers(r_max):
    """Ordered Bell numbers 0..r_max by the first-part recurrence."""
    out = [1]
    for r in range(1, r_max + 1):
        out.append(sum(math.comb(r, k) * out[r - k] for k in range(1, r + 1)))
    return out


def quasi_shuffle_count(k, l):
    """Interleave-or-merge count D with D(k,0)=D(0,l)=1 and
    D(k,l)=D(k-1,l)+D(k-1,l-1)+D(k,l-1)."""
    table = [[1] * (l + 1) for _ in range(k + 1)]
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            table[i][j] = table[i - 1][j] + table[i - 1][j - 1] + table[i][j - 1]
    return table[k][l]


def growth_string_count(n):
    """Count restricted-growth strings of length n without building them."""

    def count(i, top):
        if i == n:
            return 1
        return sum(count(i + 1, max(top, v)) for v in range(top + 2))

    return count(0, -1)


def _partition_pool(max_weight, rng):
    pool = []
    for n in range(0, min(max_weight, EXHAUSTIVE_CAP) + 1):
        pool.extend(setparts.set_partitions(n))
    for n in range(EXHAUSTIVE_CAP + 1, max_weight + 1):
        everything = list(setparts.set_partitions(n))
        pool.extend(rng.sample(everything, min(SAMPLE_PARTITIONS, len(everything))))
    return pool


def _pair_pool(max_weight, rng):
    by_weight = {n: list(setparts.set_partitions(n)) for n in range(0, max_weight + 1)}
    pairs = []
    cap = min(max_weight, EXHAUSTIVE_CAP)
    for total in range(0, cap + 1):
        for a in range(0, total + 1):
            for left in by_weight[a]:
                for right in by_weight[total - a]:
                    pairs.append((left, right))
    for total in range(cap + 1, max_weight + 1):
        candidates = [
            (left, right)
            for a in range(total + 1)
            for left in by_weight[a]
            for right in by_weight[total - a]
        ]
        pairs.extend(rng.sample(candidates, min(SAMPLE_PAIRS, len(candidates))))
    return pairs


def _memo_antipode():
    cache = {}

    def value(part):
        if part not in cache:
            cache[part] = hopf.antipode(NCSymElement.from_partition(part))
        return cache[part]

    return value


def check_cardinalities(max_weight, rng):
    res = CheckResult("cardinalities")
    bells = bell_numbers(8)
    for n in range(0, 9):
        res.tally(
            sum(1 for _ in setparts.set_partitions(n)) == bells[n],
            f"partition count n={n}",
        )
        res.tally(growth_string_count(n) == bells[n], f"growth-string count n={n}")
    fubini = fubini_numbers(7)
    for r in range(0, 8):
        res.tally(
            sum(1 for _ in setparts.set_compositions(r)) == fubini[r],
            f"composition count r={r}",
        )
    for n in range(1, 7):
        direct = list(setparts.atomic_set_partitions(n))
        filtered = [p for p in setparts.set_partitions(n) if p.is_atomic()]
        res.tally(direct == filtered, f"atomic enumeration n={n}")
    return res


def check_combinatorics(max_weight, rng):
    res = CheckResult("combinatorics")
    for part in _partition_pool(max_weight, rng):
        res.tally(SetPartition.parse(part.format()) == part, f"roundtrip {part!r}")
        res.tally(
            SetPartition.parse(part.format("extended")) == part,
            f"extended roundtrip {part!r}",
        )
        std = part.standardize()
        for k in (0, 1, 4):
            res.tally(
                part.shift(k).standardize() == std, f"shift/standardize {part!r} k={k}"
            )
        atoms = part.atoms()
        refolded = EMPTY_PARTITION
        for atom in atoms:
            res.tally(atom.is_atomic(), f"non-atomic factor of {part!r}")
            refolded = refolded.concat(atom)
        res.tally(refolded == part, f"atom refold {part!r}")
        res.tally(
            part.is_atomic() == (len(atoms) == 1), f"atomicity consistency {part!r}"
        )
        if part.length:
            whole = SetComposition((tuple(range(1, part.length + 1)),))
            res.tally(whole.evaluate(part) == part, f"identity evaluation {part!r}")
    for r in range(0, min(max_weight, 4) + 1):
        comps = list(setparts.set_compositions(r))
        for gamma in comps:
            res.tally(SetComposition.parse(gamma.format()) == gamma, f"roundtrip {gamma!r}")
            res.tally(gamma.refines(gamma), f"reflexivity {gamma!r}")
            if gamma.length:
                res.tally(
                    gamma.restrict(gamma.ground()) == gamma, f"full restrict {gamma!r}"
                )
                res.tally(
                    gamma.subsequence(range(1, gamma.length + 1)) == gamma,
                    f"full subsequence {gamma!r}",
                )
        relation = {
            (i, j)
            for i, a in enumerate(comps)
            for j, b in enumerate(comps)
            if a.refines(b)
        }
        antisym = all(i == j for (i, j) in relation if (j, i) in relation)
        res.tally(antisym, f"antisymmetry r={r}")
        closed = all(
            (i, k) in relation
            for (i, j) in relation
            for (j2, k) in relation
            if j2 == j
        )
        res.tally(closed, f"transitivity r={r}")
    return res


def check_coassociativity(max_weight, rng):
    res = CheckResult("coassociativity")
    for part in _partition_pool(max_weight, rng):
        delta = hopf.coproduct(NCSymElement.from_partition(part))
        first = {}
        second = {}
        for (p, q), c in delta.items():
            for (p1, p2), c2 in hopf.coproduct(NCSymElement.from_partition(p)).items():
                key = (p1, p2, q)
                first[key] = first.get(key, 0) + c * c2
            for (q1, q2), c2 in hopf.coproduct(NCSymElement.from_partition(q)).items():
                key = (p, q1, q2)
                second[key] = second.get(key, 0) + c * c2
        first = {k: v for k, v in first.items() if v}
        second = {k: v for k, v in second.items() if v}
        res.tally(first == second, f"coassociativity {part!r}")
    return res


def check_counit_laws(max_weight, rng):
    res = CheckResult("counit-laws")
    for part in _partition_pool(max_weight, rng):
        x = NCSymElement.from_partition(part)
        delta = hopf.coproduct(x)
        left = NCSymElement((q, c) for (p, q), c in delta.items() if p.weight == 0)
        right = NCSymElement((p, c) for (p, q), c in delta.items() if q.weight == 0)
        res.tally(left == x, f"left counit law {part!r}")
        res.tally(right == x, f"right counit law {part!r}")
    return res


def check_cocommutativity(max_weight, rng):
    res = CheckResult("cocommutativity")
    for part in _partition_pool(max_weight, rng):
        delta = hopf.coproduct(NCSymElement.from_partition(part))
        res.tally(delta.twist() == delta, f"cocommutativity {part!r}")
    return res


def check_bialgebra(max_weight, rng):
    res = CheckResult("bialgebra")
    for left, right in _pair_pool(max_weight, rng):
        x = NCSymElement.from_partition(left)
        y = NCSymElement.from_partition(right)
        res.tally(
            hopf.coproduct(x * y) == hopf.coproduct(x) * hopf.coproduct(y),
            f"compatibility {left!r} {right!r}",
        )
    return res


def check_antipode_convolution(max_weight, rng):
    res = CheckResult("antipode-convolution")
    S = _memo_antipode()
    identity = NCSymElement.from_partition
    for part in _partition_pool(max_weight, rng):
        expected = NCSymElement.unit() if part.weight == 0 else NCSymElement.zero()
        res.tally(
            hopf.convolve(S, identity, part) == expected, f"left inverse {part!r}"
        )
        res.tally(
            hopf.convolve(identity, S, part) == expected, f"right inverse {part!r}"
        )
    return res


def check_antipode_methods(max_weight, rng):
    res = CheckResult("antipode-methods")
    for part in _partition_pool(max_weight, rng):
        x = NCSymElement.from_partition(part)
        direct = hopf.antipode(x, "direct")
        factored = hopf.antipode(x, "factored")
        oracle = hopf.antipode(x, "oracle")
        res.tally(direct == factored == oracle, f"method agreement {part!r}")
    return res


def check_antipode_antimorphism(max_weight, rng):
    res = CheckResult("antipode-antimorphism")
    S = _memo_antipode()
    for left, right in _pair_pool(max_weight, rng):
        x = NCSymElement.from_partition(left)
        y = NCSymElement.from_partition(right)
        res.tally(
            hopf.antipode(x * y) == S(right) * S(left),
            f"antimorphism {left!r} {right!r}",
        )
    return res


def check_antipode_involution(max_weight, rng):
    res = CheckResult("antipode-involution")
    for part in _partition_pool(max_weight, rng):
        x = NCSymElement.from_partition(part)
        res.tally(hopf.antipode(hopf.antipode(x)) == x, f"involution {part!r}")
    return res


def check_grading(max_weight, rng):
    res = CheckResult("grading")
    for part in _partition_pool(max_weight, rng):
        x = NCSymElement.from_partition(part)
        delta = hopf.coproduct(x)
        res.tally(
            all(p.weight + q.weight == part.weight for (p, q), _ in delta.items()),
            f"coproduct grading {part!r}",
        )
        s = hopf.antipode(x)
        res.tally(
            s.is_homogeneous() and s.weights() == [part.weight],
            f"antipode grading {part!r}",
        )
        if part.weight:
            p = hopf.primitive(part)
            res.tally(
                p.is_zero() or (p.is_homogeneous() and p.weights() == [part.weight]),
                f"primitive grading {part!r}",
            )
    for left, right in _pair_pool(max_weight, rng):
        x = NCSymElement.from_partition(left) * NCSymElement.from_partition(right)
        res.tally(
            x.weights() == [left.weight + right.weight],
            f"product grading {left!r} {right!r}",
        )
    return res


def check_primitives(max_weight, rng):
    res = CheckResult("primitives")
    for part in _partition_pool(max_weight, rng):
        if part.weight == 0:
            continue
        p = hopf.primitive(part)
        if part.is_atomic():
            res.tally(
                hopf.reduced_coproduct(p).is_zero(), f"reduced coproduct {part!r}"
            )
            res.tally(hopf.leading_term(p) == (part, 1), f"leading term {part!r}")
        else:
            res.tally(p.is_zero(), f"vanishing {part!r}")
    return res


def check_restriction_sum(max_weight, rng):
    res = CheckResult("restriction-sum")
    for r in range(2, min(max_weight, EXHAUSTIVE_CAP) + 1):
        base = frozenset(range(1, r + 1))
        for size in range(1, r):
            for extra in itertools.combinations(range(2, r + 1), size - 1):
                left = frozenset((1,) + extra)
                right = base - left
                res.tally(
                    words.restriction_tensor_sum(r, left, right) == {},
                    f"vanishing sum r={r} K={sorted(left)}",
                )
    return res


def check_quasi_shuffle(max_weight, rng):
    res = CheckResult("quasi-shuffle")
    for k in range(0, 5):
        for l in range(0, 5):
            u = Word((i,) for i in range(1, k + 1))
            v = Word((k + j,) for j in range(1, l + 1))
            full = words.quasi_shuffle(u, v)
            res.tally(
                len(full) == quasi_shuffle_count(k, l), f"cardinality k={k} l={l}"
            )
            if k <= 3 and l <= 3 and k and l:
                res.tally(
                    all(
                        words.word_restrict(w, u.ground()) == u
                        and words.word_restrict(w, v.ground()) == v
                        for w in full
                    ),
                    f"projection k={k} l={l}",
                )
            if not (k and l):
                continue
            left = words.left_quasi_shuffle(u, v)
            res.tally(left <= full, f"left subset k={k} l={l}")
            expected = quasi_shuffle_count(k - 1, l) + quasi_shuffle_count(k - 1, l - 1)
            res.tally(len(left) == expected, f"left cardinality k={k} l={l}")
            head = set(u.letters[0])
            res.tally(
                all(head <= set(w.letters[0]) for w in left),
                f"first letter k={k} l={l}",
            )
            involution_ok = True
            parity = 0
            for w in left:
                mate = words.pairing(w, u, v)
                if (
                    mate == w
                    or mate not in left
                    or words.pairing(mate, u, v) != w
                    or abs(mate.length - w.length) != 1
                ):
                    involution_ok = False
                parity += (-1) ** w.length
            res.tally(involution_ok, f"pairing involution k={k} l={l}")
            res.tally(parity == 0, f"signed sum k={k} l={l}")
    return res


def check_unitriangular(max_weight, rng):
    res = CheckResult("unitriangular")
    for n in range(1, min(max_weight, 6) + 1):
        basis = sorted(setparts.set_partitions(n), key=hopf.partition_key)
        index = {part: i for i, part in enumerate(basis)}
        for i, part in enumerate(basis):
            combo = NCSymElement.unit()
            for atom in part.atoms():
                combo = combo * hopf.primitive(atom)
            res.tally(combo.coefficient(part) == 1, f"unit diagonal {part!r}")
            res.tally(
                all(index[q] >= i for q, c in combo.items() if c),
                f"triangularity {part!r}",
            )
    return res


def check_hall_span(max_weight, rng):
    res = CheckResult("hall-span")
    for n in range(1, min(max_weight, 6) + 1):
        dim = hopf.primitive_space_dimension(n)
        lyndon = hopf.lyndon_atom_words(n)
        res.tally(dim == len(lyndon), f"dimension vs Lyndon count n={n}")
        res.tally(hopf.hall_span_check(n), f"hall span n={n}")
    return res


_CHECKS = (
    ("cardinalities", check_cardinalities),
    ("combinatorics", check_combinatorics),
    ("coassociativity", check_coassociativity),
    ("counit-laws", check_counit_laws),
    ("cocommutativity", check_cocommutativity),
    ("bialgebra", check_bialgebra),
    ("antipode-convolution", check_antipode_convolution),
    ("antipode-methods", check_antipode_methods),
    ("antipode-antimorphism", check_antipode_antimorphism),
    ("antipode-involution", check_antipode_involution),
    ("grading", check_grading),
    ("primitives", check_primitives),
    ("restriction-sum", check_restriction_sum),
    ("quasi-shuffle", check_quasi_shuffle),
    ("unitriangular", check_unitriangular),
    ("hall-span", check_hall_span),
)

CHECK_NAMES = tuple(name for name, _ in _CHECKS)


def run_checks(max_weight=4, names=None, seed=0):
    """Run the named checks (all by default) and return their results."""
    if not isinstance(max_weight, int) or max_weight < 0:
        raise ValueError(f"max weight must be a nonnegative integer, got {max_weight!r}")
    table = dict(_CHECKS)
    if names is None:
        selected = CHECK_NAMES
    else:
        selected = tuple(names)
        for name in selected:
            if name not in table:
                raise ValueError(f"unknown check {name!r}")
    results = []
    for name in selected:
        rng = random.Random(seed)
        results.append(table[name](max_weight, rng))
    return results
