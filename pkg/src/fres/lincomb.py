"""Formal linear combinations over opaque, totally ordered basis keys."""

from fractions import Fraction


class LinComb:
    """Finite map key -> nonzero coefficient.

    Keys are opaque hashable tokens (tuples in practice); coefficients are
    Fractions or ParamPoly.  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                self.add_term(k, c)

    @staticmethod
    def single(key, coeff=Fraction(1)):
        lc = LinComb()
        lc.add_term(key, coeff)
        return lc

    def add_term(self, key, coeff):
        cur = self.terms.get(key)
        if cur is None:
            if coeff != 0:
                self.terms[key] = coeff
        else:
            new = cur + coeff
            if new == 0:
                del self.terms[key]
            else:
                self.terms[key] = new

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(self.terms.items())

    def __getitem__(self, key):
        return self.terms.get(key, Fraction(0))

    def __add__(self, other):
        out = LinComb()
        out.terms = dict(self.terms)
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other):
        out = LinComb()
        out.terms = dict(self.terms)
        for k, c in other.terms.items():
            out.add_term(k, -c)
        return out

    def __neg__(self):
        out = LinComb()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def scale(self, c):
        out = LinComb()
        if c != 0:
            for k, v in self.terms.items():
                cv = v * c
                if cv != 0:
                    out.terms[k] = cv
        return out

    def map_keys(self, fn):
        """Apply key -> (new_key, sign_or_coeff) | None; None drops the term."""
        out = LinComb()
        for k, c in self.terms.items():
            mapped = fn(k)
            if mapped is None:
                continue
            nk, factor = mapped
            out.add_term(nk, c * factor)
        return out

    def sorted_terms(self, key=None):
        return sorted(self.terms.items(), key=(lambda kv: key(kv[0])) if key else None)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{k}" for k, c in self.sorted_terms())
