"""Bounded enumeration of monoid presentations.

Words are space-separated generator labels; the empty word (also written
"1" when no generator carries that label) is the identity. Enumeration is a
breadth-first closure of normal forms under right concatenation, rewriting
with the relations oriented longer-to-shorter (ties lexicographically).
The rewriting is deliberately naive: no completion is attempted, and
correctness comes from a final congruence-closure pass over the discovered
set, driven by the relation instances at every state. Infinite monoids are
detected by exceeding the element cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteMonoid, equivalence_closure
from .errors import CapExceeded, ParseError, UnknownLabel

Word = tuple[str, ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]
    max_elements: int

    def __post_init__(self):
        if self.max_elements < 1:
            raise CapExceeded(self.max_elements)
        if len(set(self.generators)) != len(self.generators):
            dup = next(g for g in self.generators if self.generators.count(g) > 1)
            raise UnknownLabel(dup, "duplicate generator")
        for lhs, rhs in self.relations:
            for w in (lhs, rhs):
                for tok in w:
                    if tok not in self.generators:
                        raise UnknownLabel(tok, "relation word")


def parse_word(text: str, generators: tuple[str, ...]) -> Word:
    """A word is generator labels separated by spaces; '' (or '1', when not a
    generator) is the empty word."""
    text = text.strip()
    if text == "" or (text == "1" and "1" not in generators):
        return ()
    toks = text.split()
    for i, tok in enumerate(toks):
        if tok not in generators:
            raise ParseError(i, f"a generator among {list(generators)}")
    return tuple(toks)


def presentation(generators: list[str], relations: list[tuple[str, str]], max_elements: int) -> Presentation:
    gens = tuple(generators)
    rels = tuple((parse_word(l, gens), parse_word(r, gens)) for l, r in relations)
    return Presentation(gens, rels, max_elements)


def _orient(relations: tuple[tuple[Word, Word], ...]) -> list[tuple[Word, Word]]:
    rules = []
    for lhs, rhs in relations:
        if (len(lhs), lhs) > (len(rhs), rhs):
            rules.append((lhs, rhs))
        elif (len(lhs), lhs) < (len(rhs), rhs):
            rules.append((rhs, lhs))
    return rules


def _normal_form(word: Word, rules: list[tuple[Word, Word]]) -> Word:
    # leftmost-earliest rewriting; terminates because every rule strictly
    # decreases (length, lex)
    changed = True
    while changed:
        changed = False
        for i in range(len(word)):
            for lhs, rhs in rules:
                if word[i : i + len(lhs)] == lhs:
                    word = word[:i] + rhs + word[i + len(lhs) :]
                    changed = True
                    break
            if changed:
                break
    return word


def enumerate_presentation(p: Presentation) -> FiniteMonoid:
    """Breadth-first closure of normal forms under concatenation by
    generators, then a congruence-closure pass identifying discovered words
    that the relations force equal. Raises CapExceeded when the closure does
    not complete within ``max_elements`` states."""
    rules = _orient(p.relations)
    gens = p.generators
    words: list[Word] = [()]
    index: dict[Word, int] = {(): 0}
    step: list[list[int]] = []  # step[w][g] = index of nf(w . g)
    qi = 0
    while qi < len(words):
        w = words[qi]
        row = []
        for g in gens:
            v = _normal_form(w + (g,), rules)
            if v not in index:
                index[v] = len(words)
                words.append(v)
                if len(words) > p.max_elements:
                    raise CapExceeded(p.max_elements)
            row.append(index[v])
        step.append(row)
        qi += 1

    def run(state: int, word: Word) -> int:
        for tok in word:
            state = step[state][gens.index(tok)]
        return state

    pairs = [(run(s, lhs), run(s, rhs)) for s in range(len(words)) for lhs, rhs in p.relations]
    maps = [tuple(step[s][gi] for s in range(len(words))) for gi in range(len(gens))]
    part = equivalence_closure(len(words), pairs, maps)

    reps = part.representatives()
    rep_words = []
    for c, block_rep in enumerate(reps):
        block = [words[w] for w in range(len(words)) if part.class_of[w] == c]
        rep_words.append(min(block, key=lambda w: (len(w), w)))
    empty_label = "1" if "1" not in gens else "()"
    labels = tuple(" ".join(w) if w else empty_label for w in rep_words)
    cls = part.class_of
    table = tuple(tuple(cls[run(reps[u], rep_words[v])] for v in range(len(reps))) for u in range(len(reps)))
    name = "<" + ",".join(gens) + ">"
    return FiniteMonoid(name, labels, cls[0], table)
