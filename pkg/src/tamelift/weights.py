"""Weight combinatorics for rank-two groups over an unramified base.

Weights live in f copies of the character lattice of the diagonal torus.
A graph point is an integer vector of length f recording, per embedding,
the image of a character in the quotient by twists of the determinant.
The central map here is t_mu: it converts a graph point near a base weight
mu into an honest irreducible-restriction weight, by applying the unique
alcove-stabilizer element lying over the shifted translation class.

Index convention: the embedding shift acts by pi(mu)_j = mu_{j-1}, so its
inverse reads coordinates one step up. The stabilizer element over a graph
point flips the Weyl component at j exactly when coordinate j+1 is odd;
the enumeration oracle in the test suite pins this down independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class NotInLambdaMu(ValueError):
    """Graph point leaves the p-restricted window around the base weight."""


@dataclass(frozen=True)
class Params:
    p: int
    f: int

    def __post_init__(self):
        if self.p <= 3:
            raise ValueError("p must exceed 3")
        if any(self.p % q == 0 for q in range(2, min(self.p, 1000)) if q * q <= self.p):
            raise ValueError("p must be prime")
        if self.f < 1:
            raise ValueError("f must be positive")


# WeightVector: tuple of f pairs (a_j, b_j).
# GraphPoint: tuple of f ints.
# WeylElt: tuple of f bools, True meaning the nontrivial reflection.


def _diffs(mu):
    return tuple(a - b for a, b in mu)


@dataclass(frozen=True)
class SerreWeight:
    """Canonical representative of an irreducible weight.

    pairs is p-restricted (0 <= a_j - b_j <= p-1). The twist lattice is
    spanned by p*e_j - e_{j+1} (cyclic), and (t_j) |-> sum t_j p^j mod
    p^f - 1 identifies its quotient with Z/(p^f - 1); the canonical rep
    puts the whole class number in slot 0 and zeroes the other twists.
    At f = 1 that is the familiar {0..p-2} determinant-twist window.
    """

    p: int
    f: int
    pairs: tuple

    @classmethod
    def make(cls, params: Params, pairs) -> "SerreWeight":
        pairs = tuple((int(a), int(b)) for a, b in pairs)
        if len(pairs) != params.f:
            raise ValueError("expected %d pairs" % params.f)
        p = params.p
        d = _diffs(pairs)
        if any(not (0 <= dj <= p - 1) for dj in d):
            raise ValueError("weight not p-restricted: diffs %r" % (d,))
        n = sum(b * p ** j for j, (_, b) in enumerate(pairs)) % (p ** params.f - 1)
        t = (n,) + (0,) * (params.f - 1)
        return cls(p, params.f, tuple((d[j] + t[j], t[j]) for j in range(params.f)))

    @property
    def diffs(self):
        return _diffs(self.pairs)

    def is_regular(self) -> bool:
        return all(dj <= self.p - 2 for dj in self.diffs)

    def dim(self) -> int:
        out = 1
        for dj in self.diffs:
            out *= dj + 1
        return out

    def central_character(self) -> int:
        chi = sum((a + b) * self.p ** j for j, (a, b) in enumerate(self.pairs))
        return chi % (self.p ** self.f - 1)

    def label(self) -> str:
        return ";".join("%d,%d" % ab for ab in self.pairs)


def in_lambda_mu(params: Params, mu, omega) -> bool:
    """Window membership: 0 <= <mubar + omega, coroot> <= p - 2 per coordinate."""
    d = _diffs(mu)
    return all(0 <= d[j] + omega[j] <= params.p - 2 for j in range(params.f))


def stabilizer_element(omega):
    """The unique base-alcove stabilizer element over the shifted class of omega.

    Returns (flips, nu): flips[j] is True when the Weyl part at j is the
    reflection, nu[j] the translation pair. Uses the lift (omega_j, 0).
    """
    f = len(omega)
    flips = []
    nu = []
    for j in range(f):
        q = omega[(j + 1) % f]
        if q % 2 == 0:
            c = -q // 2
            flips.append(False)
            nu.append((c, c))
        else:
            c = (1 - q) // 2
            flips.append(True)
            nu.append((c - 1, c))
    return tuple(flips), tuple(nu)


def t_mu(params: Params, mu, omega) -> SerreWeight:
    """Weight of the twisted translate of mu by a graph point.

    Computes w(mu + lift(omega) + eta + p*nu) - eta for the stabilizer
    element (w, nu) over omega, then canonicalizes. t_mu(mu, 0) is the
    weight of mu itself.
    """
    f = params.f
    if len(omega) != f or len(mu) != f:
        raise ValueError("arity mismatch")
    if not in_lambda_mu(params, mu, omega):
        raise NotInLambdaMu("graph point %r outside window of %r" % (omega, mu))
    flips, nu = stabilizer_element(omega)
    p = params.p
    pairs = []
    for j in range(f):
        a = mu[j][0] + omega[j] + 1 + p * nu[j][0]
        b = mu[j][1] + p * nu[j][1]
        if flips[j]:
            a, b = b, a
        pairs.append((a - 1, b))
    return SerreWeight.make(params, pairs)


def change_origin(params: Params, mu, omega, beta):
    """Re-express beta (a graph point at the origin t_mu(mu, omega)) at mu.

    Returns w^{-1}(beta) + omega for the Weyl part w of the stabilizer
    element over omega, so that t_mu at the new origin agrees with t_mu
    at mu on the returned point.
    """
    flips, _ = stabilizer_element(omega)
    return tuple(
        (-beta[j] if flips[j] else beta[j]) + omega[j] for j in range(params.f)
    )


def graph_coordinate(params: Params, mu, target: SerreWeight):
    """Inverse of t_mu at the base mu: the graph point mapping to target.

    Returns None when target is not hit. The diff of the image determines
    each coordinate up to a two-way branch; parities couple the branches
    around the embedding cycle, leaving at most two candidates to check.
    """
    f, p = params.f, params.p
    d_mu = _diffs(mu)
    d = target.diffs
    cand0 = [d[j] - d_mu[j] for j in range(f)]
    cand1 = [p - 2 - d[j] - d_mu[j] for j in range(f)]
    par0 = [c % 2 for c in cand0]
    for b0 in (0, 1):
        bits = [None] * f
        bits[0] = b0
        ok = True
        for j in range(f - 1, 0, -1):
            nxt = (j + 1) % f
            if bits[nxt] is None:
                ok = False
                break
            bits[j] = par0[nxt] ^ bits[nxt]
        if not ok or bits[0] != (par0[(0 + 1) % f] ^ bits[(0 + 1) % f]):
            continue
        omega = tuple(cand1[j] if bits[j] else cand0[j] for j in range(f))
        if in_lambda_mu(params, mu, omega) and t_mu(params, mu, omega) == target:
            return omega
    return None


# -- plain graph-point operations -----------------------------------------


def leq(a, b) -> bool:
    """a <= b in the product order anchored at zero: each a_j between 0 and b_j."""
    return all((0 <= x <= y) or (0 >= x >= y) for x, y in zip(a, b))


def tilde(omega):
    """Round each coordinate toward zero to the nearest even integer."""
    return tuple((abs(w) // 2 * 2) * (1 if w > 0 else -1) for w in omega)


def plus(nu, omega):
    """Step each coordinate of nu one unit toward the matching coordinate of omega."""
    out = []
    for n, w in zip(nu, omega):
        step = 0 if w == n else (1 if w > n else -1)
        out.append(n + step)
    return tuple(out)


def delta_set(k: int, f: int):
    """All even graph points with half-norm k, sorted."""
    if k < 0:
        raise ValueError("negative level")
    out = []
    for comp in _compositions(k, f):
        signs = [(1,) if c == 0 else (1, -1) for c in comp]
        for sgn in itertools.product(*signs):
            out.append(tuple(2 * c * s for c, s in zip(comp, sgn)))
    return sorted(set(out))


def _compositions(k, f):
    if f == 1:
        yield (k,)
        return
    for head in range(k + 1):
        for rest in _compositions(k - head, f - 1):
            yield (head,) + rest


def graph_distance(a, b) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


def adjacent(a, b) -> bool:
    return graph_distance(a, b) == 1


def is_n_deep(params: Params, mu, n: int) -> bool:
    """Strict depth: n < <mu + eta, coroot> < p - n at every embedding."""
    return all(n < dj + 1 < params.p - n for dj in _diffs(mu))


def weyl_apply(w, mu):
    """Apply a Weyl element (tuple of flip flags) to a weight vector."""
    return tuple((b, a) if flip else (a, b) for flip, (a, b) in zip(w, mu))


def weyl_sign(flip: bool) -> int:
    return -1 if flip else 1
