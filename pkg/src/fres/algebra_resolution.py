"""Free resolutions of algebras from coverings of words by relation occurrences.

A module basis element of homological degree q is written as a *state*
``(word, occs)``: the total word together with q occurrences of leading terms
that indecomposably cover a prefix, the remaining suffix being a normal word.
The prefix part is the free-module generator, the suffix the module
coordinate.  Keys:

    ("V", word, occs)   state in V_q (x) R,  q = len(occs)
    ("R", word)         element of the algebra itself (normal word)

The monomial boundary omits occurrences with alternating signs; omissions
whose remainder is not a valid state vanish.  The deformation rebuilds the
differential of the non-monomial algebra by the inductive scheme
D = d - H D d with the contracting homotopy below.
"""

from fractions import Fraction
from itertools import combinations

from .errors import CapExceeded, NotInKernel
from .lincomb import LinComb
from .words import all_occurrences, is_normal, leading_term, reduce_poly, word_poly


def covered_pairs(occs):
    pairs = set()
    for start, length in occs:
        pairs.update(range(start, start + length - 1))
    return pairs


def prefix_length(occs):
    """Length of the prefix a valid occurrence set covers (1 for the empty set)."""
    return max((s + l for s, l in occs), default=1)


def state_valid(word, occs, lts):
    """Occurrences cover an initial segment with no gaps; the rest is normal."""
    occs = tuple(occs)
    t = prefix_length(occs)
    if occs and covered_pairs(occs) != set(range(t - 1)):
        return False
    return is_normal(word[t:], lts)


def is_generator(word, occs):
    """True when the occurrences cover the whole word (single letters at q=0)."""
    if not occs:
        return len(word) == 1
    return covered_pairs(occs) == set(range(len(word) - 1))


def state_key(word, occs):
    return ("V", tuple(word), tuple(sorted(occs)))


def enumerate_words(n_generators, weights, weight):
    out = [()]
    for _ in range(weight):          # weight bounds the length
        out = [w + (i,) for w in out for i in range(n_generators)]
        out = [w for w in out if sum(weights[i] for i in w) <= weight]
    return [w for w in out if sum(weights[i] for i in w) == weight]


def enumerate_generators(lts, n_generators, weight_cap, weights=None):
    """All resolution generators grouped by (q, weight)."""
    if weights is None:
        weights = (1,) * n_generators
    grouped = {}
    for i in range(n_generators):
        grouped.setdefault((0, weights[i]), []).append(((i,), ()))
    for weight in range(2, weight_cap + 1):
        for word in enumerate_words(n_generators, weights, weight):
            if len(word) < 2:
                continue
            occs = all_occurrences(word, lts)
            needed = set(range(len(word) - 1))
            if covered_pairs(occs) != needed:
                continue
            for q in range(1, len(occs) + 1):
                for subset in combinations(occs, q):
                    if covered_pairs(subset) == needed:
                        grouped.setdefault((q, weight), []).append((word, subset))
    for key in grouped:
        grouped[key].sort()
    return grouped


def anick_chains(lts, n_generators, weight_cap, weights=None):
    """Generators of the minimal resolution: homology classes of the monomial
    complex of generators, for the left-to-right occurrence order.

    Condition (i): removing any one member occurrence makes the covering
    decomposable.  Condition (ii): every non-member occurrence can be swapped
    in for some earlier member occurrence, keeping indecomposability.
    """
    grouped = enumerate_generators(lts, n_generators, weight_cap, weights)
    chains = {}
    for (q, weight), gens in grouped.items():
        for word, occs in gens:
            if q == 0:
                chains.setdefault((q, weight), []).append((word, occs))
                continue
            allocc = all_occurrences(word, lts)
            needed = set(range(len(word) - 1))
            member = set(occs)
            ok = all(covered_pairs(member - {o}) != needed for o in member)
            if ok:
                for idx, o in enumerate(allocc):
                    if o in member:
                        continue
                    earlier = [p for p in allocc[:idx] if p in member]
                    if not any(covered_pairs((member - {p}) | {o}) == needed
                               for p in earlier):
                        ok = False
                        break
            if ok:
                chains.setdefault((q, weight), []).append((word, occs))
    return chains


def boundary_d(word, occs, lts):
    """Monomial module boundary of a state, as a LinComb of keys."""
    out = LinComb()
    occs = tuple(sorted(occs))
    if not occs:
        if is_normal(word, lts):
            out.add_term(("R", tuple(word)), Fraction(1))
        return out
    for j, omitted in enumerate(occs):
        rest = occs[:j] + occs[j + 1:]
        if state_valid(word, rest, lts):
            out.add_term(state_key(word, rest), Fraction(-1) ** j)
    return out


def homotopy_h(word, occs, lts):
    """Contracting homotopy on a state: adjoin the last relation occurrence
    of the full word (the (start, length)-greatest), or vanish if present.

    Satisfies d h + h d = id - pi on every word slice.
    """
    allocc = all_occurrences(word, lts)
    if not allocc:
        return LinComb()
    top = allocc[-1]
    occs = tuple(sorted(occs))
    if top in occs:
        return LinComb()
    return LinComb.single(state_key(word, occs + (top,)), Fraction(-1) ** len(occs))


def homotopy_r(word):
    """Homotopy at the algebra spot: split off the first letter."""
    if not word:
        return LinComb()
    return LinComb.single(state_key(word, ()), Fraction(1))


def apply_homotopy(element, lts):
    """Public homotopy with the kernel precondition checked per word slice."""
    image = LinComb()
    for key, coeff in element:
        if key[0] != "V":
            raise ValueError("homotopy acts on module states")
    check = apply_boundary(element, lts)
    if check:
        raise NotInKernel("element is not in the kernel of the monomial boundary")
    for (_, word, occs), coeff in element:
        image = image + homotopy_h(word, occs, lts).scale(coeff)
    return image


def apply_boundary(element, lts):
    out = LinComb()
    for key, coeff in element:
        if key[0] == "R":
            continue
        _, word, occs = key
        out = out + boundary_d(word, occs, lts).scale(coeff)
    return out


class AlgebraResolution:
    """Deformed right-module resolution of an algebra with a Groebner basis."""

    def __init__(self, gb_result, weight_cap):
        self.presentation = gb_result.presentation
        self.rules = list(gb_result.basis)
        self.lts = [leading_term(g, self.presentation)[0] for g in self.rules]
        self.weight_cap = weight_cap
        pres = self.presentation
        self.generators = enumerate_generators(
            self.lts, len(pres.generators), weight_cap, pres.weights)
        self._D_gen = {}

    # ----- deformed differential ------------------------------------------
    def normal_form(self, word):
        """Element of R-tilde (LinComb of R-keys) for a word."""
        reduced = reduce_poly(word_poly(word), self.rules, self.presentation)
        return LinComb((( ("R", w), c) for w, c in reduced))

    def D_generator(self, gen):
        """Deformed differential on a generator, memoized."""
        word, occs = gen
        key = (tuple(word), tuple(sorted(occs)))
        if key in self._D_gen:
            return self._D_gen[key]
        q = len(occs)
        base = boundary_d(word, occs, self.lts)
        if q == 0:
            value = self.normal_form(word)
        else:
            correction = self.H(q - 2, self.D_module(q - 1, base))
            value = base - correction
        self._D_gen[key] = value
        return value

    def D_module(self, q, element):
        """Extend D over the free module: act on the generator, multiply the
        module coordinate back in, reducing to normal form."""
        out = LinComb()
        for key, coeff in element:
            if key[0] == "R":
                out.add_term(key, coeff)   # already in R-tilde
                continue
            _, word, occs = key
            t = prefix_length(occs)
            gen, suffix = (word[:t], occs), word[t:]
            value = self.D_generator(gen)
            if not suffix:
                out = out + value.scale(coeff)
                continue
            for vkey, vc in value:
                if vkey[0] == "R":
                    for rkey, rc in self.normal_form(vkey[1] + suffix):
                        out.add_term(rkey, rc * vc * coeff)
                else:
                    _, w2, occs2 = vkey
                    t2 = prefix_length(occs2)
                    tail = reduce_poly(word_poly(w2[t2:] + suffix), self.rules,
                                       self.presentation)
                    for nw, nc in tail:
                        out.add_term(state_key(w2[:t2] + nw, occs2), nc * vc * coeff)
        return out

    def H(self, q, element):
        """Deformed homotopy H_q, defined on kernels of D_q by the descent
        H(u) = h(u-hat) + H(u - D h(u-hat))."""
        if not element:
            return LinComb()
        lead_word = max((key[1] for key, _ in element),
                        key=self.presentation.sort_key)
        lead = LinComb(((key, c) for key, c in element if key[1] == lead_word))
        if q == -1:
            v = LinComb()
            for (_, w), c in lead:
                v = v + homotopy_r(w).scale(c)
        else:
            v = LinComb()
            for (_, w, occs), c in lead:
                v = v + homotopy_h(w, occs, self.lts).scale(c)
        rest = element - self.D_module(q + 1, v)
        if rest:
            new_lead = max((key[1] for key, _ in rest), key=self.presentation.sort_key)
            if self.presentation.sort_key(new_lead) >= self.presentation.sort_key(lead_word):
                raise CapExceeded("homotopy descent did not decrease the leading word")
        return v + self.H(q, rest)

    # ----- homology ---------------------------------------------------------
    def induced_differential(self, gen):
        """Image of D on a generator after the augmentation: only generator
        states (empty module coordinate) survive."""
        out = LinComb()
        for key, coeff in self.D_generator(gen):
            if key[0] != "V":
                continue
            _, word, occs = key
            if prefix_length(occs) == len(word) and is_generator(word, occs):
                out.add_term((word, tuple(sorted(occs))), coeff)
        return out

    def tor_table(self):
        """Tor_{q+1} dimensions per weight, from the augmentation-reduced
        deformed complex on generators."""
        from .linalg import matrix_from_map, rank
        gens = self.generators
        table = {}
        slices = {}
        for (q, w), lst in gens.items():
            slices[(q, w)] = [(word, tuple(sorted(occs))) for word, occs in lst]
        ranks = {}
        for (q, w), basis in slices.items():
            if q == 0:
                continue
            codomain = slices.get((q - 1, w), [])
            images = {g: self.induced_differential(g) for g in basis}
            m = matrix_from_map(images, basis, codomain)
            ranks[(q, w)] = rank(m)
        for (q, w), basis in slices.items():
            dim = len(basis) - ranks.get((q, w), 0) - ranks.get((q + 1, w), 0)
            if dim:
                table[(q + 1, w)] = dim
        return table


def tor_dimensions(gb_result, weight_cap):
    if not gb_result.saturated:
        from .errors import SaturationError
        raise SaturationError("Groebner basis did not saturate within the cap")
    return AlgebraResolution(gb_result, weight_cap).tor_table()


def bar_homology_oracle(gb_result, weight_cap):
    """Tor table from the reduced bar complex: tuples of nonzero normal words
    with the adjacent-multiplication differential.

    Independent of the resolution machinery; shares only the normal-form
    routine of the quotient algebra.
    """
    from .algebra_gb import normal_words
    from .linalg import matrix_from_map, rank
    pres = gb_result.presentation
    rules = list(gb_result.basis)
    lts = [leading_term(g, pres)[0] for g in rules]
    nwords = {}
    for w in range(1, weight_cap + 1):
        nwords[w] = normal_words(lts, len(pres.generators), w, pres.weights)

    def tuples(q, weight):
        if q == 0:
            return [()] if weight == 0 else []
        out = []
        for w1 in range(1, weight - q + 2):
            for head in nwords.get(w1, []):
                for rest in tuples(q - 1, weight - w1):
                    out.append((head,) + rest)
        return out

    bases = {}
    for weight in range(1, weight_cap + 1):
        for q in range(1, weight + 1):
            bases[(q, weight)] = tuples(q, weight)

    def differential(tup):
        out = LinComb()
        for i in range(len(tup) - 1):
            product = reduce_poly(word_poly(tup[i] + tup[i + 1]), rules, pres)
            for w, c in product:
                out.add_term(tup[:i] + (w,) + tup[i + 2:], c * Fraction(-1) ** i)
        return out

    ranks = {}
    for (q, weight), basis in bases.items():
        if q < 2:
            continue
        images = {t: differential(t) for t in basis}
        m = matrix_from_map(images, basis, bases.get((q - 1, weight), []))
        ranks[(q, weight)] = rank(m)
    table = {}
    for (q, weight), basis in bases.items():
        dim = len(basis) - ranks.get((q, weight), 0) - ranks.get((q + 1, weight), 0)
        if dim:
            table[(q, weight)] = dim
    return table
