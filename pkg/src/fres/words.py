"""Words over a finite alphabet, monomial orders, and noncommutative rewriting.

Words are tuples of generator indices.  Generators are listed in decreasing
precedence: index 0 is the largest letter.  Polynomials are LinComb instances
keyed by words.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParameterNotInvertible
from .lincomb import LinComb
from .scalars import is_unit


@dataclass(frozen=True)
class WordOrder:
    """Monomial order on words: weight first, then a lexicographic tiebreak.

    kind: 'deglex' (= pure lex within equal weight), or 'degrevlex'.
    """
    kind: str = "deglex"

    def key(self, weights, word):
        w = sum(weights[i] for i in word)
        if self.kind == "degrevlex":
            return (w, tuple(-i for i in reversed(word)))
        return (w, tuple(-i for i in word))


@dataclass(frozen=True)
class AlgebraPresentation:
    """Generators (name, weight) in decreasing precedence, plus relations."""
    generators: tuple          # tuple of (name, weight)
    relations: tuple = ()      # tuple of LinComb over words
    order: WordOrder = field(default_factory=WordOrder)
    parameter: str = None      # name of the formal coefficient parameter

    @property
    def names(self):
        return tuple(g[0] for g in self.generators)

    @property
    def weights(self):
        return tuple(g[1] for g in self.generators)

    def weight(self, word):
        return sum(self.weights[i] for i in word)

    def sort_key(self, word):
        return self.order.key(self.weights, word)

    def compare(self, u, v):
        """-1, 0, or 1 according to the monomial order."""
        ku, kv = self.sort_key(u), self.sort_key(v)
        return (ku > kv) - (ku < kv)

    def word_str(self, word):
        if not word:
            return "1"
        return "*".join(self.names[i] for i in word)

    def poly_str(self, poly):
        if not poly:
            return "0"
        parts = []
        for w, c in sorted(poly, key=lambda kv: self.sort_key(kv[0]), reverse=True):
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coeff}{self.word_str(w)}")
        return " + ".join(parts).replace("+ -", "- ")


def occurrences(word, pattern):
    """All (start, length) positions of pattern as a contiguous factor."""
    if not pattern:
        raise ValueError("pattern must be nonempty")
    n, m = len(word), len(pattern)
    return [(i, m) for i in range(n - m + 1) if word[i:i + m] == pattern]


def is_normal(word, leading_terms):
    """True when no factor of word is a leading term."""
    for lt in leading_terms:
        m = len(lt)
        for i in range(len(word) - m + 1):
            if word[i:i + m] == lt:
                return False
    return True


def all_occurrences(word, leading_terms):
    """Occurrences of every leading term, sorted by (start, length)."""
    occs = []
    for lt in leading_terms:
        occs.extend(occurrences(word, lt))
    occs.sort()
    return occs


def leading_term(poly, presentation):
    """(word, coeff) of the order-greatest monomial of a nonzero polynomial."""
    word = max(poly.terms, key=presentation.sort_key)
    return word, poly.terms[word]


def multiply(p, q):
    """Concatenation product of two word polynomials."""
    out = LinComb()
    for w1, c1 in p:
        for w2, c2 in q:
            out.add_term(w1 + w2, c1 * c2)
    return out


def word_poly(word, coeff=Fraction(1)):
    return LinComb.single(tuple(word), coeff)


def reduce_poly(p, rules, presentation, want_trace=False):
    """Normal form of p modulo the rules.

    Strategy (fixed for determinism): rewrite the order-greatest reducible
    monomial at its leftmost reducible occurrence using the rule with the
    smallest index.  Each rule's leading coefficient must be a unit.

    With want_trace=True also returns the list of rewrite steps
    (rule_index, left_word, right_word, coeff) witnessing
    p - result = sum coeff * left * rule * right.
    """
    lts = []
    for g in rules:
        w, c = leading_term(g, presentation)
        if not is_unit(c):
            raise ParameterNotInvertible(
                f"leading coefficient {c} of rule {presentation.poly_str(g)} is not a unit")
        lts.append((w, c))

    result = LinComb()
    work = LinComb() + p
    trace = []
    while work:
        word = max(work.terms, key=presentation.sort_key)
        coeff = work.terms[word]
        step = None
        for start in range(len(word)):
            for ri, (lt, lc) in enumerate(lts):
                if word[start:start + len(lt)] == lt:
                    step = (start, ri)
                    break
            if step:
                break
        if step is None:
            result.add_term(word, coeff)
            del work.terms[word]
            continue
        start, ri = step
        lt, lc = lts[ri]
        left, right = word[:start], word[start + len(lt):]
        factor = coeff / lc
        shifted = LinComb(((left + w + right, c * factor) for w, c in rules[ri]))
        work = work - shifted
        if want_trace:
            trace.append((ri, left, right, factor))
    return (result, trace) if want_trace else result


def normal_form_product(u, v, rules, presentation):
    """Normal form of the concatenation u*v, as a polynomial."""
    return reduce_poly(word_poly(u + v), rules, presentation)
