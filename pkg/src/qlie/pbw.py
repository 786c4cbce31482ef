"""The quantized enveloping algebra U_q(sl2) in the PBW basis F^a K^b E^c.

Generators are ``E`` (= X+), ``F`` (= X-) and ``K`` (= q^(H/2)) with its
inverse.  Products are brought to normal order with the rewrite rules

    E F = F E + (K^2 - K^-2) / (q - q^-1)
    K E = q E K
    K F = q^-1 F K

``H`` never appears as a stored generator; it acts through the weight
grading ``ad_H(F^a K^b E^c) = 2(c - a) F^a K^b E^c``.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .qcoeff import ONE, ZERO, ExtScalar, scalar

__all__ = [
    "AlgElement",
    "AdWord",
    "E",
    "F",
    "K",
    "KINV",
    "UNIT",
    "LETTERS",
    "mul",
    "commutator",
    "ad_letter",
    "ad_apply",
    "casimir",
    "casimir_word",
    "normalize_word",
]

LETTERS = ("E", "F", "K", "Kinv", "H")


def _qp(e):
    return ExtScalar.q_power(e)


_C_EF = (_qp(1) - _qp(-1)).inverse()  # 1/(q - q^-1)


def _accumulate(out, mono, coeff):
    c = out.get(mono)
    c = coeff if c is None else c + coeff
    if c.is_zero():
        out.pop(mono, None)
    else:
        out[mono] = c


class AlgElement:
    """Finite linear combination of PBW monomials ``(a, b, c) -> coefficient``.

    Zero coefficients are never stored, so two elements are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = scalar(coeff)
                if not coeff.is_zero():
                    a, b, c = mono
                    if a < 0 or c < 0:
                        raise ValueError(f"negative E/F power in monomial {mono}")
                    clean[(a, b, c)] = coeff
        self._terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, a, b, c, coeff=ONE):
        return cls({(a, b, c): coeff})

    @classmethod
    def from_scalar(cls, x):
        return cls({(0, 0, 0): x})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, mono):
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self._terms == other._terms
        if isinstance(other, (ExtScalar, int)):
            return self == AlgElement.from_scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        from .render import render

        return f"AlgElement({render(self)!r})"

    def __str__(self):
        from .render import render

        return render(self)

    def __add__(self, other):
        other = _as_alg(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            _accumulate(out, mono, coeff)
        return AlgElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_alg(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_alg(other) - self

    def scale(self, x):
        x = scalar(x)
        if x.is_zero():
            return AlgElement._raw({})
        return AlgElement._raw({m: c * x for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return mul(self, other)
        if isinstance(other, (ExtScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (ExtScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = UNIT
        for _ in range(n):
            out = out * self
        return out


def _as_alg(x):
    if isinstance(x, AlgElement):
        return x
    if isinstance(x, (ExtScalar, int)):
        return AlgElement.from_scalar(x)
    return None


E = AlgElement.monomial(0, 0, 1)
F = AlgElement.monomial(1, 0, 0)
K = AlgElement.monomial(0, 1, 0)
KINV = AlgElement.monomial(0, -1, 0)
UNIT = AlgElement.monomial(0, 0, 0)


# --- normal ordering --------------------------------------------------------

@lru_cache(maxsize=None)
def _e_times(mono):
    """Normal form of E * F^a K^b E^c as a tuple of (monomial, coeff)."""
    a, b, c = mono
    if a == 0:
        # E K^b = q^-b K^b E
        return (((0, b, c + 1), _qp(-b)),)
    # E F^a... = F (E F^(a-1)...) + [E, F] F^(a-1)...
    rest = (a - 1, b, c)
    out = {}
    for (a2, b2, c2), coeff in _e_times(rest):
        _accumulate(out, (a2 + 1, b2, c2), coeff)
    # K^(+-2) F^(a-1) = q^(-+2(a-1)) F^(a-1) K^(+-2)
    _accumulate(out, (a - 1, b + 2, c), _C_EF * _qp(-2 * (a - 1)))
    _accumulate(out, (a - 1, b - 2, c), -_C_EF * _qp(2 * (a - 1)))
    return tuple(out.items())


@lru_cache(maxsize=None)
def _mono_mul(left, right):
    a1, b1, c1 = left
    terms = {right: ONE}
    for _ in range(c1):
        nxt = {}
        for mono, coeff in terms.items():
            for m2, c2 in _e_times(mono):
                _accumulate(nxt, m2, coeff * c2)
        terms = nxt
    out = {}
    for (a, b, c), coeff in terms.items():
        # K^b1 F^a = q^(-b1 a) F^a K^b1
        k = coeff * _qp(-b1 * a) if b1 and a else coeff
        _accumulate(out, (a + a1, b + b1, c), k)
    return tuple(out.items())


def mul(x, y):
    """Product of two algebra elements in PBW normal order."""
    out = {}
    for m1, c1 in x._terms.items():
        for m2, c2 in y._terms.items():
            c12 = c1 * c2
            for m, c in _mono_mul(m1, m2):
                _accumulate(out, m, c12 * c)
    return AlgElement._raw(out)


def commutator(x, y):
    return mul(x, y) - mul(y, x)


# --- adjoint action ---------------------------------------------------------

def _weight(mono):
    a, _, c = mono
    return 2 * (c - a)


@lru_cache(maxsize=None)
def _ad_mono(letter, mono):
    x = AlgElement._raw({mono: ONE})
    if letter == "E":
        out = E * x * K - (K * x * E).scale(_qp(-1))
    elif letter == "F":
        out = F * x * K - (K * x * F).scale(_qp(1))
    elif letter == "H":
        w = _weight(mono)
        out = x.scale(w) if w else AlgElement._raw({})
    elif letter == "K":
        out = x.scale(_qp(_weight(mono) // 2))
    elif letter == "Kinv":
        out = x.scale(_qp(-_weight(mono) // 2))
    else:
        raise ValueError(f"unknown letter {letter!r}; expected one of {LETTERS}")
    return out


def ad_letter(g, x):
    """Adjoint action of a single generator letter on ``x``.

    ``ad_E(x) = E x K - q^-1 K x E`` and ``ad_F(x) = F x K - q K x F``;
    ``ad_K`` and ``ad_Kinv`` are conjugation by ``K`` and ``K^-1``.
    """
    out = {}
    for mono, coeff in x._terms.items():
        for m, c in _ad_mono(g, mono)._terms.items():
            _accumulate(out, m, coeff * c)
    return AlgElement._raw(out)


class AdWord:
    """Formal linear combination of words in the letters E, F, K, Kinv, H.

    Words are not normal ordered; ``ad_apply`` composes the letters as
    operators, so the leftmost letter acts last.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            for letter in word:
                if letter not in LETTERS:
                    raise ValueError(f"unknown letter {letter!r}")
            coeff = scalar(coeff)
            if not coeff.is_zero():
                clean[word] = clean.get(word, ZERO) + coeff
        self._terms = {w: c for w, c in clean.items() if not c.is_zero()}

    @classmethod
    def letter(cls, g, coeff=ONE):
        return cls({(g,): coeff})

    @classmethod
    def word(cls, letters, coeff=ONE):
        return cls({tuple(letters): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AdWord):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        parts = [f"{c}*{'.'.join(w) or '1'}" for w, c in sorted(self._terms.items())]
        return f"AdWord({' + '.join(parts) or '0'})"

    def __add__(self, other):
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, ZERO) + c
        return AdWord(out)

    def __neg__(self):
        return AdWord({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, x):
        x = scalar(x)
        return AdWord({w: c * x for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AdWord):
            out = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, ZERO) + c1 * c2
            return AdWord(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = AdWord({(): ONE})
        for _ in range(n):
            out = out * self
        return out


def ad_apply(w, x):
    """Apply a linear combination of ad-words to ``x``."""
    # words sharing a right-hand suffix share the partial results
    trie = {}
    for word, coeff in w._terms.items():
        node = trie
        for letter in reversed(word):
            node = node.setdefault(letter, {})
        node[None] = coeff

    out = {}

    def walk(node, y):
        coeff = node.get(None)
        if coeff is not None:
            for m, c in y._terms.items():
                _accumulate(out, m, coeff * c)
        for letter, child in node.items():
            if letter is not None:
                z = ad_letter(letter, y)
                if not z.is_zero():
                    walk(child, z)

    walk(trie, x)
    return AlgElement._raw(out)


# --- Casimir ----------------------------------------------------------------

def _casimir_parts():
    pref = (_qp(3) + _qp(-3)).inverse()
    qm = _qp(1) - _qp(-1)
    return pref * qm * qm, pref * _qp(-1), pref * _qp(1)


def casimir():
    """Central element C = ((q-q^-1)^2 E F + q^-1 K^2 + q K^-2) / (q^3 + q^-3)."""
    c_ef, c_k2, c_km2 = _casimir_parts()
    return (E * F).scale(c_ef) + (K * K).scale(c_k2) + (KINV * KINV).scale(c_km2)


def casimir_word():
    """The Casimir element as an ad-word, letter by letter."""
    c_ef, c_k2, c_km2 = _casimir_parts()
    return AdWord({("E", "F"): c_ef, ("K", "K"): c_k2, ("Kinv", "Kinv"): c_km2})


# --- word rewriting (independent normalizer) ---------------------------------

_ORDER = {"F": 0, "K": 1, "Kinv": 1, "E": 2}


def _rewrite_pair(x, y):
    """Rewrite an out-of-order adjacent pair, or return None if it is in order."""
    if (x, y) == ("E", "F"):
        return [(("F", "E"), ONE), (("K", "K"), _C_EF), (("Kinv", "Kinv"), -_C_EF)]
    if (x, y) == ("K", "F"):
        return [(("F", "K"), _qp(-1))]
    if (x, y) == ("Kinv", "F"):
        return [(("F", "Kinv"), _qp(1))]
    if (x, y) == ("E", "K"):
        return [(("K", "E"), _qp(-1))]
    if (x, y) == ("E", "Kinv"):
        return [(("Kinv", "E"), _qp(1))]
    if {x, y} == {"K", "Kinv"}:
        return [((), ONE)]
    return None


def _redexes(word):
    return [i for i in range(len(word) - 1) if _rewrite_pair(word[i], word[i + 1]) is not None]


def normalize_word(word, strategy="leftmost", rng=None):
    """Normal form of a word in E, F, K, Kinv by rewriting to a fixpoint.

    This does not share code with :func:`mul`; it rewrites one adjacent
    pair at a time, chosen by ``strategy`` ("leftmost", "rightmost" or
    "random"), until no word in the combination has a redex left.
    """
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    pending = {tuple(word): ONE}
    done = {}
    while pending:
        nxt = {}
        for w, coeff in pending.items():
            spots = _redexes(w)
            if not spots:
                done[w] = done.get(w, ZERO) + coeff
                continue
            if strategy == "leftmost":
                i = spots[0]
            elif strategy == "rightmost":
                i = spots[-1]
            elif strategy == "random":
                i = rng.choice(spots)
            else:
                raise ValueError(f"unknown strategy {strategy!r}")
            for repl, c in _rewrite_pair(w[i], w[i + 1]):
                nw = w[:i] + repl + w[i + 2:]
                nxt[nw] = nxt.get(nw, ZERO) + coeff * c
        pending = {w: c for w, c in nxt.items() if not c.is_zero()}
    out = {}
    for w, coeff in done.items():
        if coeff.is_zero():
            continue
        assert [_ORDER[l] for l in w] == sorted(_ORDER[l] for l in w)
        mono = (w.count("F"), w.count("K") - w.count("Kinv"), w.count("E"))
        _accumulate(out, mono, coeff)
    return AlgElement._raw(out)
