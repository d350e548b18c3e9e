"""Buchberger completion for two-sided ideals of the free associative algebra."""

from dataclasses import dataclass, replace
from fractions import Fraction

from .lincomb import LinComb
from .words import (leading_term, occurrences, is_normal, reduce_poly,
                    word_poly)


@dataclass(frozen=True)
class OverlapWitness:
    """A minimal ambiguity word on which two leading terms overlap."""
    ambiguity: tuple
    left_occurrence: tuple     # (start, length) of lt1 in the ambiguity
    right_occurrence: tuple    # (start, length) of lt2


def find_overlaps(lt1, lt2):
    """Minimal proper suffix/prefix overlaps of lt1 and lt2, both orientations.

    Inclusion ambiguities are excluded; inter-reduction removes them upstream.
    """
    out = []
    n1, n2 = len(lt1), len(lt2)
    # suffix of lt1 equals prefix of lt2
    for k in range(1, min(n1, n2)):
        if lt1[n1 - k:] == lt2[:k]:
            amb = lt1 + lt2[k:]
            out.append(OverlapWitness(amb, (0, n1), (n1 - k, n2)))
    if lt1 != lt2:
        for k in range(1, min(n1, n2)):
            if lt2[n2 - k:] == lt1[:k]:
                amb = lt2 + lt1[k:]
                out.append(OverlapWitness(amb, (n2 - k, n1), (0, n2)))
    return out


@dataclass(frozen=True)
class GroebnerResult:
    basis: tuple               # monic, inter-reduced polynomials
    presentation: object
    complete_up_to: int
    saturated: bool

    @property
    def leading_terms(self):
        return tuple(leading_term(g, self.presentation)[0] for g in self.basis)


def _make_monic(g, presentation):
    _, c = leading_term(g, presentation)
    return g.scale(1 / c)


def _interreduce(basis, presentation):
    """Fully self-reduce a list of polynomials; result monic, no lt divides another."""
    basis = [g for g in basis if g]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda g: presentation.sort_key(leading_term(g, presentation)[0]))
        for i in range(len(basis)):
            rest = basis[:i] + basis[i + 1:]
            reduced = reduce_poly(basis[i], rest, presentation) if rest else basis[i]
            if reduced != basis[i]:
                changed = True
                if reduced:
                    basis[i] = _make_monic(reduced, presentation)
                else:
                    del basis[i]
                break
    return [_make_monic(g, presentation) for g in basis]


def buchberger(presentation, weight_cap, order=None):
    """Complete the relations to a Groebner basis up to the ambiguity weight cap.

    Ambiguities whose word weight exceeds the cap are skipped and recorded in
    the saturation flag rather than raising.
    """
    if order is not None:
        presentation = replace(presentation, order=order)
    basis = _interreduce([LinComb() + g for g in presentation.relations], presentation)
    while True:
        pairs = []
        for i, gi in enumerate(basis):
            for j in range(i, len(basis)):
                lti = leading_term(gi, presentation)[0]
                ltj = leading_term(basis[j], presentation)[0]
                for w in find_overlaps(lti, ltj):
                    pairs.append((presentation.weight(w.ambiguity), i, j, w))
        pairs.sort(key=lambda p: (p[0], p[1], p[2], p[3].ambiguity))
        new_element = None
        skipped = False
        for weight, i, j, w in pairs:
            if weight > weight_cap:
                skipped = True
                continue
            s = _s_polynomial(basis[i], basis[j], w, presentation)
            s = reduce_poly(s, basis, presentation)
            if s:
                new_element = _make_monic(s, presentation)
                break
        if new_element is None:
            # final pass: every in-cap pair reduced to zero
            return GroebnerResult(tuple(basis), presentation, weight_cap,
                                  not skipped)
        basis = _interreduce(basis + [new_element], presentation)


def _s_polynomial(g1, g2, witness, presentation):
    """Difference of the two reductions of the ambiguity word."""
    amb = witness.ambiguity
    s1, l1 = witness.left_occurrence
    s2, l2 = witness.right_occurrence
    a1, b1 = amb[:s1], amb[s1 + l1:]
    a2, b2 = amb[:s2], amb[s2 + l2:]
    lc1 = leading_term(g1, presentation)[1]
    lc2 = leading_term(g2, presentation)[1]
    t1 = LinComb(((a1 + w + b1, c / lc1) for w, c in g1))
    t2 = LinComb(((a2 + w + b2, c / lc2) for w, c in g2))
    return t1 - t2


def pbw_certificate(result):
    """'koszul_certified' iff the saturated basis is quadratic over weight-1 generators."""
    if not result.saturated:
        return "inconclusive"
    pres = result.presentation
    if any(w != 1 for w in pres.weights):
        return "inconclusive"
    for g in result.basis:
        if any(len(w) != 2 for w, _ in g):
            return "inconclusive"
    return "koszul_certified"


def normal_words(leading_terms, n_generators, weight, weights=None):
    """All weight-w words over the alphabet with no factor among leading_terms."""
    if weights is None:
        weights = (1,) * n_generators
    out = []

    def extend(word, w):
        if w == weight:
            out.append(word)
            return
        for i in range(n_generators):
            nw = w + weights[i]
            if nw > weight:
                continue
            cand = word + (i,)
            # only the new suffix endings can create a fresh reducible factor
            if any(cand[-len(lt):] == lt for lt in leading_terms if len(lt) <= len(cand)):
                continue
            extend(cand, nw)

    extend((), 0)
    return out


def quotient_dimension(presentation, relations, weight):
    """dim of the weight-w slice of the quotient, by exact linear algebra.

    Independent of normal-word counting: spans all words of weight w and all
    one-sided multiples a*g*b of the relations, then subtracts the rank.
    """
    from .linalg import SparseMatrix, rank as mat_rank
    words_w = normal_words((), len(presentation.generators), weight,
                           presentation.weights)
    index = {w: i for i, w in enumerate(words_w)}
    rows = []
    for g in relations:
        gw = presentation.weight(next(iter(g.terms)))
        pad = weight - gw
        for la in range(pad + 1):
            for left in normal_words((), len(presentation.generators), la,
                                     presentation.weights):
                for right in normal_words((), len(presentation.generators), pad - la,
                                          presentation.weights):
                    row = {}
                    for w, c in g:
                        row[index[left + w + right]] = row.get(index[left + w + right],
                                                               Fraction(0)) + c
                    rows.append(row)
    m = SparseMatrix(range(len(words_w)), range(len(rows)))
    for j, row in enumerate(rows):
        for i, c in row.items():
            m.set(i, j, c)
    return len(words_w) - mat_rank(m)
