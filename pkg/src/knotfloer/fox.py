"""Free-group Fox calculus over the meridian abelianization.

Wirtinger presentations read off a diagram, free derivatives, abelianized
Fox matrices, the Alexander polynomial as a sparse determinant, and the
signed generator spectrum obtained by expanding that determinant without
ever combining terms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPolynomial, NormalizationError


class SpectrumResourceError(RuntimeError):
    """Raised when the uncombined expansion exceeds the term cap."""


# -- free words ---------------------------------------------------------------


def free_reduce(word):
    """Cancel adjacent x x^-1 pairs; word is a tuple of (gen, +-1)."""
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def word_mul(u, v):
    return free_reduce(tuple(u) + tuple(v))


def word_inv(u):
    return tuple((g, -e) for g, e in reversed(u))


def exponent_sum(word):
    return sum(e for _, e in word)


class FormalSum(dict):
    """Finitely supported integer combination of free words."""

    def add(self, word, coeff=1):
        w = free_reduce(tuple(word))
        c = self.get(w, 0) + coeff
        if c:
            self[w] = c
        else:
            self.pop(w, None)
        return self

    def __add__(self, other):
        out = FormalSum(self)
        for w, c in other.items():
            out.add(w, c)
        return out

    def left_mul(self, word):
        out = FormalSum()
        for w, c in self.items():
            out.add(word_mul(word, w), c)
        return out


def fox_derivative(word, gen):
    """d/dx_gen of a free word: one term per appearance of x_gen^+-1.

    Satisfies d(x) = 1, d(x^-1) = -x^-1, and d(uv) = d(u) + u d(v).
    """
    out = FormalSum()
    prefix = ()
    for g, e in word:
        if g == gen:
            if e == 1:
                out.add(prefix, 1)
            else:
                out.add(word_mul(prefix, ((g, -1),)), -1)
        prefix = word_mul(prefix, ((g, e),))
    return out


def abelianize(term):
    """Send each word to t^(exponent sum); extend linearly.

    Accepts a FormalSum or a bare word tuple.
    """
    if isinstance(term, dict):
        out = LaurentPolynomial()
        for w, c in term.items():
            out = out + LaurentPolynomial({exponent_sum(w): c})
        return out
    return LaurentPolynomial({exponent_sum(tuple(term)): 1})


# -- presentations -------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    g: int
    relators: tuple  # tuples of (gen, +-1); generators numbered 0..g-1

    def validate_wirtinger_shape(self):
        """Every relator must be a cyclic rotation of x_i w x_j^-1 w^-1."""
        for r in self.relators:
            if not _is_conjugation_shape(r):
                raise ValueError("relator %s is not of conjugation shape" % (r,))


def _is_conjugation_shape(rel):
    n = len(rel)
    if n < 2 or n % 2 != 0:
        return False
    half = (n - 2) // 2
    for shift in range(n):
        w = rel[shift:] + rel[:shift]
        if w[0][1] != 1:
            continue
        mid = w[1 : 1 + half]
        if w[1 + half][1] != -1:
            continue
        if w[2 + half :] == word_inv(mid):
            return True
    return False


def wirtinger(d):
    """Wirtinger presentation of the knot group from a diagram.

    One generator per arc (over-strand), one relator per crossing; the last
    relator is dropped.  At a positive crossing with over-arc o, incoming
    under-arc a, outgoing under-arc b the relator is x_o x_a x_o^-1 x_b^-1;
    at a negative crossing x_o^-1 x_a x_o x_b^-1.
    """
    arc_of = d.arc_of_edge()
    relators = []
    for i, x in enumerate(d.crossings):
        oi, _ = d.over_in_out(i)
        o = arc_of[oi]
        a = arc_of[x.a]
        b = arc_of[x.c]
        if d.sign(i) > 0:
            rel = ((o, 1), (a, 1), (o, -1), (b, -1))
        else:
            rel = ((o, -1), (a, 1), (o, 1), (b, -1))
        relators.append(free_reduce(rel))
    p = Presentation(d.n, tuple(relators[:-1]))
    return p


def fox_matrix(p):
    """Abelianized Fox matrix, dropping the last generator column.

    Entry [j][i] is the Laurent polynomial of d_{x_i} w_j for i < g-1.
    """
    rows = []
    for rel in p.relators:
        row = [abelianize(fox_derivative(rel, i)) for i in range(p.g - 1)]
        rows.append(row)
    return rows


def _sparse_determinant(rows):
    """Permutation expansion with pruning of zero entries.

    Rows of Fox matrices carry at most three nonzero entries, so the
    lexicographic depth-first expansion stays small.
    """
    n = len(rows)
    if n == 0:
        return LaurentPolynomial.one()
    cols_nonzero = [
        sorted(i for i, entry in enumerate(row) if not entry.is_zero()) for row in rows
    ]
    total = LaurentPolynomial.zero()
    used = [False] * n
    cols = []

    def rec(j, acc, parity):
        nonlocal total
        if j == n:
            total = total + (acc if parity > 0 else -acc)
            return
        for i in cols_nonzero[j]:
            if used[i]:
                continue
            inv = sum(1 for c in cols if c > i)
            used[i] = True
            cols.append(i)
            rec(j + 1, acc * rows[j][i], parity * (-1) ** inv)
            cols.pop()
            used[i] = False

    rec(0, LaurentPolynomial.one(), 1)
    return total


def alexander_from_presentation(p):
    """Normalized Alexander polynomial from the Fox determinant."""
    rows = fox_matrix(p)
    if len(rows) != p.g - 1:
        raise ValueError("presentation must have g-1 relators")
    det = _sparse_determinant(rows)
    q, _, _ = normalize_or_raise(det)
    return q


def normalize_or_raise(poly):
    try:
        return poly.normalize_alexander()
    except NormalizationError as e:
        raise NormalizationError(
            "Fox determinant does not normalize (%s); upstream bug" % e
        ) from e


def alexander(d):
    """Normalized Alexander polynomial of a diagram via Fox calculus."""
    return alexander_from_presentation(wirtinger(d))


# -- generator spectrum ---------------------------------------------------------


def generator_spectrum(p, term_cap=10**8):
    """Monomials of the uncombined Fox determinant, shifted to match Delta.

    Returns (spectrum, delta): spectrum is a list of (exponent, sign) pairs,
    one per surviving monomial choice, whose signed sum is exactly the
    normalized Alexander polynomial delta.
    """
    rows = fox_matrix(p)
    n = len(rows)
    if n != p.g - 1:
        raise ValueError("presentation must have g-1 relators")
    # per row: list of (column, exponent, sign) letter-monomials
    letters = []
    for rel in p.relators:
        row = []
        prefix_exp = 0
        for g, e in rel:
            if g < p.g - 1:
                if e == 1:
                    row.append((g, prefix_exp, 1))
                else:
                    row.append((g, prefix_exp + e, -1))
            prefix_exp += e
        letters.append(row)
    spectrum = []
    used = [False] * (p.g - 1)
    cols = []

    def rec(j, exp, sign):
        if len(spectrum) > term_cap:
            raise SpectrumResourceError("expansion exceeds %d terms" % term_cap)
        if j == n:
            inv_parity = _inversions(cols) % 2
            spectrum.append((exp, sign if inv_parity == 0 else -sign))
            return
        for col, de, ds in letters[j]:
            if used[col]:
                continue
            used[col] = True
            cols.append(col)
            rec(j + 1, exp + de, sign * ds)
            cols.pop()
            used[col] = False

    rec(0, 0, 1)
    raw = LaurentPolynomial()
    for e, s in spectrum:
        raw = raw + LaurentPolynomial({e: s})
    delta, shift, flip = normalize_or_raise(raw)
    spectrum = [(e + shift, s * flip) for e, s in spectrum]
    return spectrum, delta


def _inversions(seq):
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return inv
