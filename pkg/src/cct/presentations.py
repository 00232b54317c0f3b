"""Finitely presented groups: parsing, free products, coset enumeration.

Enumeration is plain HLT over the trivial subgroup: live cosets are
scanned in ascending order, relators in declared order, and a stalled scan
defines a coset at its leftmost missing slot, so the whole run is
deterministic.  Coincidences are processed eagerly through a union-find
that always keeps the lower-numbered coset alive.  The main loop repeats
until a full pass produces no definition, deduction or coincidence, which
makes a returned table closed by construction; running out of cosets
raises BudgetExceeded and never misreports a finite result.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass

from . import config
from .errors import BudgetExceeded, ParseError
from .groups import FiniteGroup, from_permutations
from .homs import WordTable

__all__ = [
    "Word",
    "Presentation",
    "CosetTable",
    "parse_presentation",
    "presentation_of",
    "free_product",
    "todd_coxeter",
    "realize",
]


@dataclass(frozen=True)
class Word:
    """A word in presentation generators: (symbol index, +1 or -1) letters."""

    letters: tuple[tuple[int, int], ...]

    def inverse(self) -> "Word":
        return Word(tuple((s, -e) for s, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def text(self, names: tuple[str, ...]) -> str:
        if not self.letters:
            return "1"
        parts = []
        for sym, run in itertools.groupby(self.letters):
            count = sum(1 for _ in run)
            name = names[sym[0]]
            exp = count * sym[1]
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return " ".join(parts)


def _reduce(letters) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for sym, e in letters:
        if out and out[-1][0] == sym and out[-1][1] == -e:
            out.pop()
        else:
            out.append((sym, e))
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    """Generator names plus freely reduced, nonempty relator words."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for rel in self.relators:
            if not rel.letters:
                raise ValueError("empty relator (drop it before constructing)")
            for sym, e in rel.letters:
                if not 0 <= sym < len(self.generators):
                    raise ValueError(f"relator references unknown symbol {sym}")
                if e not in (1, -1):
                    raise ValueError(f"letter exponent must be +-1, got {e}")

    def text(self) -> str:
        rels = ", ".join(r.text(self.generators) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


@dataclass(frozen=True)
class CosetTable:
    """Closed coset table: coset 0 is the subgroup coset, actions transitive."""

    num_cosets: int
    action: tuple[tuple[int, ...], ...]
    status: str = "closed"


# ---------------------------------------------------------------------------
# parsing


_NAME_START = set(string.ascii_letters + "_")
_NAME_CHARS = set(string.ascii_letters + string.digits + "_")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._run()

    def _run(self):
        text = self.text
        i, n = 0, len(text)
        while i < n:
            c = text[i]
            if c.isspace():
                i += 1
                continue
            if c in "<>|,()^=-*":
                # '*' is tolerated as an explicit product separator
                if c != "*":
                    self.tokens.append((c, c, i))
                i += 1
            elif c.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("INT", text[i:j], i))
                i = j
            elif c in _NAME_START:
                j = i
                while j < n and text[j] in _NAME_CHARS:
                    j += 1
                self.tokens.append(("NAME", text[i:j], i))
                i = j
            else:
                raise _err(text, i, f"unexpected character {c!r}", "a token")
        self.tokens.append(("EOF", "", n))


def _err(text: str, pos: int, message: str, expected: str) -> ParseError:
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1)
    return ParseError(message, line=line, column=column, expected=expected)


class _PresentationParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _Lexer(text).tokens
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind: str, expected: str):
        tok = self.tokens[self.k]
        if tok[0] != kind:
            raise _err(self.text, tok[2], f"got {tok[1] or 'end of input'!r}", expected)
        self.k += 1
        return tok

    def parse(self) -> Presentation:
        self.take("<", "'<'")
        names = [self.take("NAME", "generator name")[1]]
        while self.peek()[0] == ",":
            self.k += 1
            names.append(self.take("NAME", "generator name")[1])
        if len(set(names)) != len(names):
            tok = self.peek()
            raise _err(self.text, tok[2], "duplicate generator name", "distinct names")
        self.names = {name: i for i, name in enumerate(names)}
        self.take("|", "'|'")
        relators: list[Word] = []
        if self.peek()[0] not in (">",):
            relators.extend(self.relation())
            while self.peek()[0] == ",":
                self.k += 1
                relators.extend(self.relation())
        self.take(">", "'>'")
        tok = self.peek()
        if tok[0] != "EOF":
            raise _err(self.text, tok[2], f"trailing input {tok[1]!r}", "end of input")
        reduced = [Word(w) for w in (_reduce(r) for r in relators) if w]
        return Presentation(tuple(names), tuple(reduced))

    def relation(self) -> list[tuple[tuple[int, int], ...]]:
        # w1 = w2 = ... = wk contributes the relators w_i * w_{i+1}^-1
        sides = [self.word()]
        while self.peek()[0] == "=":
            self.k += 1
            sides.append(self.word())
        if len(sides) == 1:
            return [sides[0]]
        out = []
        for left, right in zip(sides, sides[1:]):
            inv = tuple((s, -e) for s, e in reversed(right))
            out.append(left + inv)
        return out

    def word(self) -> tuple[tuple[int, int], ...]:
        letters: list[tuple[int, int]] = []
        letters.extend(self.factor())
        while self.peek()[0] in ("NAME", "(") or (self.peek()[0] == "INT" and self.peek()[1] == "1"):
            letters.extend(self.factor())
        return tuple(letters)

    def factor(self) -> tuple[tuple[int, int], ...]:
        tok = self.peek()
        if tok[0] == "NAME":
            name = tok[1]
            if name in self.names:
                self.k += 1
                return self._exponent(((self.names[name], 1),))
            if all(ch in self.names for ch in name):
                # juxtaposed single-letter generators, e.g. "abab";
                # a trailing exponent binds to the last letter only
                self.k += 1
                head = tuple((self.names[ch], 1) for ch in name[:-1])
                return head + self._exponent(((self.names[name[-1]], 1),))
            raise _err(self.text, tok[2], f"unknown generator {name!r}", "a declared generator")
        if tok[0] == "INT" and tok[1] == "1":
            self.k += 1
            return self._exponent(())
        if tok[0] == "(":
            self.k += 1
            base = self.word()
            self.take(")", "')'")
            return self._exponent(base)
        raise _err(self.text, tok[2], f"got {tok[1] or 'end of input'!r}",
                   "a generator, '1' or '('")

    def _exponent(self, base: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
        if self.peek()[0] != "^":
            return base
        self.k += 1
        sign = 1
        if self.peek()[0] == "-":
            sign = -1
            self.k += 1
        exp_tok = self.take("INT", "an integer exponent")
        exp = sign * int(exp_tok[1])
        if exp < 0:
            base = tuple((s, -e) for s, e in reversed(base))
            exp = -exp
        return base * exp


def parse_presentation(text: str) -> Presentation:
    """Parse `< g1, g2, ... | w1, w2, ... >` into a Presentation.

    Words are products of generators, inverses `g^-1`, powers `g^k` and
    parenthesized subwords with exponents; `w1 = w2 = 1` equation chains
    are accepted and converted to relators.
    """
    return _PresentationParser(text).parse()


# ---------------------------------------------------------------------------
# free products


def _fresh_names():
    for c in string.ascii_lowercase:
        yield c
    for i in itertools.count(1):
        for c in string.ascii_lowercase:
            yield f"{c}{i}"


def presentation_of(group: FiniteGroup) -> Presentation:
    """Presentation on the stored generators with every Cayley relation.

    Each element's BFS word w(x) yields, per generator g, the relator
    w(x) g w(x*g)^-1; tree relations reduce away and the rest pin the whole
    multiplication table.  Deliberately non-minimal: correctness over
    elegance.
    """
    gens = group.generators
    table = WordTable(group, gens)
    words = [table.word(x) for x in range(group.order)]
    relators: list[tuple[tuple[int, int], ...]] = []
    seen = set()
    for x in range(group.order):
        prefix = tuple((p, 1) for p in words[x])
        for gi, g in enumerate(gens):
            target = words[group.mul(x, g)]
            raw = prefix + ((gi, 1),) + tuple((p, -1) for p in reversed(target))
            red = _reduce(raw)
            if red and red not in seen:
                seen.add(red)
                relators.append(red)
    names = tuple(f"g{i}" for i in range(len(gens)))
    return Presentation(names, tuple(Word(r) for r in relators))


def free_product(parts) -> Presentation:
    """Free product of presentations and finite groups.

    Generators are renamed apart: finite-group factors get fresh letters
    a, b, c, ...; presentation factors keep their names unless they clash,
    in which case a numeric suffix is appended.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("free product needs at least one part")
    if len(parts) == 1 and isinstance(parts[0], Presentation):
        return parts[0]
    used: set[str] = set()
    fresh = _fresh_names()
    all_names: list[str] = []
    all_relators: list[Word] = []
    for part in parts:
        pres = presentation_of(part) if isinstance(part, FiniteGroup) else part
        offset = len(all_names)
        for name in pres.generators:
            if isinstance(part, FiniteGroup):
                name = next(n for n in fresh if n not in used)
            elif name in used:
                name = next(f"{name}_{i}" for i in itertools.count(2)
                            if f"{name}_{i}" not in used)
            used.add(name)
            all_names.append(name)
        for rel in pres.relators:
            all_relators.append(Word(tuple((s + offset, e) for s, e in rel.letters)))
    return Presentation(tuple(all_names), tuple(all_relators))


# ---------------------------------------------------------------------------
# coset enumeration


def todd_coxeter(pres: Presentation, max_cosets: int | None = None) -> CosetTable:
    """Enumerate cosets of the trivial subgroup (HLT, eager coincidences)."""
    budget = max_cosets if max_cosets is not None else config.DEFAULT_MAX_COSETS
    if budget < 1:
        raise ValueError("max_cosets must be at least 1")
    k = len(pres.generators)
    width = 2 * k
    # letter code: 2*sym for the generator, 2*sym+1 for its inverse
    relator_codes = [
        tuple(2 * s if e > 0 else 2 * s + 1 for s, e in rel.letters)
        for rel in pres.relators
    ]

    table: list[list[int | None]] = [[None] * width]
    parent = [0]

    def rep(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    events = 0

    def define(alpha: int, x: int) -> int:
        nonlocal events
        if len(table) >= budget:
            raise BudgetExceeded(budget)
        beta = len(table)
        table.append([None] * width)
        parent.append(beta)
        table[alpha][x] = beta
        table[beta][x ^ 1] = alpha
        events += 1
        return beta

    def merge(a: int, b: int, queue: list[int]):
        nonlocal events
        a, b = rep(a), rep(b)
        if a != b:
            lo, hi = (a, b) if a < b else (b, a)
            parent[hi] = lo
            queue.append(hi)
            events += 1

    def coincidence(a: int, b: int):
        queue: list[int] = []
        merge(a, b, queue)
        qi = 0
        while qi < len(queue):
            gamma = queue[qi]
            qi += 1
            for x in range(width):
                delta = table[gamma][x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] is not None:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(alpha: int, word: tuple[int, ...]):
        nonlocal events
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                events += 1
                return
            define(f, word[i])

    while True:
        before = events
        alpha = 0
        while alpha < len(table):
            if parent[alpha] != alpha:
                alpha += 1
                continue
            for word in relator_codes:
                scan_and_fill(alpha, word)
                if parent[alpha] != alpha:
                    break
            if parent[alpha] == alpha:
                for x in range(width):
                    if table[alpha][x] is None:
                        define(alpha, x)
            alpha += 1
        if events == before:
            break

    live = [c for c in range(len(table)) if parent[c] == c]
    index = {c: i for i, c in enumerate(live)}
    action = tuple(
        tuple(index[rep(table[c][2 * s])] for c in live) for s in range(k)
    )
    result = CosetTable(len(live), action)
    _check_table(result, relator_codes)
    return result


def _check_table(ct: CosetTable, relator_codes) -> None:
    m = ct.num_cosets
    for perm in ct.action:
        if sorted(perm) != list(range(m)):
            raise AssertionError("coset action is not a permutation")
    inverse_action = [None] * len(ct.action)
    for word in relator_codes:
        for c in range(m):
            x = c
            for code in word:
                s, is_inv = divmod(code, 2)
                if is_inv:
                    if inverse_action[s] is None:
                        inv = [0] * m
                        for i, j in enumerate(ct.action[s]):
                            inv[j] = i
                        inverse_action[s] = inv
                    x = inverse_action[s][x]
                else:
                    x = ct.action[s][x]
            if x != c:
                raise AssertionError("relator does not act trivially on closed table")


def realize(pres: Presentation, max_cosets: int | None = None) -> FiniteGroup:
    """Realize a finite presented group via its regular action on cosets.

    The stored generators correspond to the presentation's symbols in
    order, and elements are labelled by their BFS word.
    """
    ct = todd_coxeter(pres, max_cosets)
    group = from_permutations(ct.action, ct.num_cosets)
    if group.order != ct.num_cosets:
        raise AssertionError("regular action closure disagrees with coset count")
    names = pres.generators
    table = WordTable(group, group.generators)
    single = all(len(n) == 1 for n in names)
    labels = []
    for x in range(group.order):
        word = table.word(x)
        if not word:
            labels.append("1")
        elif single:
            labels.append("".join(names[p] for p in word))
        else:
            labels.append("*".join(names[p] for p in word))
    return FiniteGroup(group.order, group._table, group._inv, group.generators,
                       labels, backing=group.backing, perms=group._perms,
                       perm_index=group._perm_index)
