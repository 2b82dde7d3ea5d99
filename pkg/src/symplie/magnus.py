"""First-principles Dehn twist images via the Magnus expansion.

Surface-group words live in the free group on 2g generators; generator
k (0-based) abelianizes to letter k of H, so the odd-index generators
carry the a-classes and the even-index ones the b-classes of the fixed
symplectic basis.  A separating twist acts by conjugating the far-side
generators by a product of commutators; pushing the comparison words
through the truncated Magnus embedding, taking the logarithm and
projecting to the quotient rebuilds the twist derivation with no input
from the closed form, which is exactly what makes the agreement check
in the acceptance suite worth running.
"""

from __future__ import annotations

from fractions import Fraction

from .freelie import LieElement, dynkin_tensor, lie_from_tensor, lie_to_tensor
from .johnson import Derivation
from .surface import PElement, reduce_lie


class NotInLCS(ValueError):
    """The word is not as deep in the lower central series as requested."""


# ---------------------------------------------------------------------------
# free group words
# ---------------------------------------------------------------------------

class FreeWord:
    """Freely reduced word in the free group on 2g generators.

    letters is a tuple of (generator index, +1 or -1).
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _free_reduce(letters)

    @classmethod
    def generator(cls, k: int, exp: int = 1) -> "FreeWord":
        if exp not in (1, -1):
            raise ValueError("exponent must be +-1")
        return cls(((k, exp),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((k, -e) for k, e in reversed(self.letters)))

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sums(self, n_gens: int) -> list:
        out = [0] * n_gens
        for k, e in self.letters:
            out[k] += e
        return out

    def __repr__(self):
        if not self.letters:
            return "1"
        bits = []
        for k, e in self.letters:
            bits.append(f"g{k + 1}" + ("" if e == 1 else "^-1"))
        return "*".join(bits)


def _free_reduce(letters) -> tuple:
    out: list = []
    for k, e in letters:
        if out and out[-1][0] == k and out[-1][1] == -e:
            out.pop()
        else:
            out.append((k, e))
    return tuple(out)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v * u.inverse() * v.inverse()


# ---------------------------------------------------------------------------
# Magnus embedding
# ---------------------------------------------------------------------------

class MagnusSeries:
    """Noncommutative series truncated in degree, word tuple -> coefficient."""

    __slots__ = ("truncation", "coeffs")

    def __init__(self, truncation: int, coeffs: dict | None = None):
        self.truncation = truncation
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if c and len(w) <= truncation}

    @classmethod
    def one(cls, truncation: int) -> "MagnusSeries":
        return cls(truncation, {(): Fraction(1)})

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        n = min(self.truncation, other.truncation)
        out: dict = {}
        for wu, cu in self.coeffs.items():
            for wv, cv in other.coeffs.items():
                if len(wu) + len(wv) > n:
                    continue
                k = wu + wv
                val = out.get(k, 0) + cu * cv
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
        return MagnusSeries(n, out)

    def homogeneous_part(self, d: int) -> dict:
        return {w: c for w, c in self.coeffs.items() if len(w) == d}

    def __eq__(self, other):
        return (
            isinstance(other, MagnusSeries)
            and self.truncation == other.truncation
            and self.coeffs == other.coeffs
        )


def _generator_series(k: int, exp: int, n: int) -> MagnusSeries:
    if exp == 1:
        return MagnusSeries(n, {(): Fraction(1), (k,): Fraction(1)})
    # geometric series for the inverse, truncated
    coeffs = {(k,) * d: Fraction((-1) ** d) for d in range(n + 1)}
    return MagnusSeries(n, coeffs)


def magnus(w: FreeWord, n: int) -> MagnusSeries:
    """Image of a word under gamma_k -> 1 + X_k, truncated in degree n."""
    if n < 1:
        raise ValueError("need truncation degree >= 1")
    out = MagnusSeries.one(n)
    for k, e in w.letters:
        out = out * _generator_series(k, e, n)
    return out


def series_log(s: MagnusSeries) -> dict:
    """log of a series with constant term 1, truncated; degree -> tensor dict."""
    n = s.truncation
    if s.coeffs.get((), 0) != 1:
        raise ValueError("log needs constant term 1")
    u = MagnusSeries(n, {w: c for w, c in s.coeffs.items() if w})
    out: dict = {d: {} for d in range(1, n + 1)}
    power = MagnusSeries.one(n)
    for d in range(1, n + 1):
        power = power * u
        if not power.coeffs:
            break
        sign = Fraction((-1) ** (d + 1), d)
        for w, c in power.coeffs.items():
            deg = len(w)
            if deg:
                blk = out[deg]
                val = blk.get(w, 0) + sign * c
                if val:
                    blk[w] = val
                else:
                    blk.pop(w, None)
    return out


def lcs_class(w: FreeWord, k: int, g: int) -> LieElement:
    """Degree-k part of log(magnus(w)) as a Lie element.

    Requires all lower-degree parts to vanish (w in the k-th lower central
    subgroup); raises NotInLCS otherwise.  The tensor is bracketed with
    the left-normed Dynkin map and divided by k, and the result is checked
    against the original tensor.
    """
    parts = series_log(magnus(w, k))
    for d in range(1, k):
        if parts[d]:
            raise NotInLCS(f"degree-{d} part of the logarithm is nonzero")
    top = parts[k]
    coords = lie_from_tensor(
        {w_: Fraction(c, k) for w_, c in dynkin_tensor(top).items()}
    )
    out = LieElement(g, k, coords)
    if lie_to_tensor(out.coords) != top:
        raise NotInLCS(f"degree-{k} logarithm part is not a Lie element")
    return out


# ---------------------------------------------------------------------------
# twist automorphisms
# ---------------------------------------------------------------------------

class TwistAutomorphism:
    """Automorphism of the surface free group given by generator images."""

    __slots__ = ("g", "j", "images")

    def __init__(self, g: int, j: int, images):
        self.g = g
        self.j = j
        self.images = tuple(images)
        if len(self.images) != 2 * g:
            raise ValueError("need an image for each generator")
        mat = [im.exponent_sums(2 * g) for im in self.images]
        if _int_det(mat) not in (1, -1):
            raise ValueError("images do not generate: abelianization not invertible")

    def apply(self, w: FreeWord) -> FreeWord:
        out = FreeWord()
        for k, e in w.letters:
            im = self.images[k]
            out = out * (im if e == 1 else im.inverse())
        return out

    def abelianization(self) -> list:
        return [im.exponent_sums(2 * self.g) for im in self.images]


def _int_det(mat) -> Fraction:
    m = [[Fraction(v) for v in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def dehn_twist(g: int, j: int, inverse: bool = False) -> TwistAutomorphism:
    """Twist about the separating curve that cuts off the first j handles.

    Fixes the first 2j generators and conjugates the rest by the product
    of their commutators; inverse=True flips the curve orientation.
    """
    if not 1 <= j <= g - 1:
        raise ValueError(f"need 1 <= j <= {g - 1}")
    c = FreeWord()
    for k in range(1, j + 1):
        c = c * commutator(FreeWord.generator(2 * k - 2), FreeWord.generator(2 * k - 1))
    if inverse:
        c = c.inverse()
    images = []
    for i in range(2 * g):
        gamma = FreeWord.generator(i)
        images.append(gamma if i < 2 * j else c * gamma * c.inverse())
    return TwistAutomorphism(g, j, images)


def tau_hyp_from_twist(g: int, j: int, inverse: bool = False) -> Derivation:
    """Rebuild the twist derivation from the automorphism alone.

    For each generator, compares the image against the generator, checks
    the comparison word is trivial through degree 2 (the classical degree-2
    class must at least die in the quotient), extracts the degree-3 class
    and assembles the columns on homology.
    """
    auto = dehn_twist(g, j, inverse=inverse)
    cols = []
    for i in range(2 * g):
        gamma = FreeWord.generator(i)
        w = auto.apply(gamma) * gamma.inverse()
        if w.is_identity():
            cols.append(PElement(g, 3))
            continue
        parts = series_log(magnus(w, 3))
        if parts[1]:
            raise NotInLCS(f"generator {i}: twist moved the homology class")
        deg2 = parts[2]
        if deg2:
            deg2_lie = LieElement(g, 2, lie_from_tensor(deg2))
            if not reduce_lie(deg2_lie).is_zero():
                raise NotInLCS(
                    f"generator {i}: degree-2 class is not a multiple of the symplectic class"
                )
            raise NotInLCS(f"generator {i}: nonzero degree-2 class blocks extraction")
        cols.append(reduce_lie(lcs_class(w, 3, g)))
    return Derivation(g, 3, cols)
