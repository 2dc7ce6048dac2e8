"""Tame inertial types, admissible sets, and modular Serre weights.

Index conventions (used consistently here and in `defring`):
  * embedding index j runs 0..f-1 and labels r_j, lambda_j, b_j, s_j;
  * slot index k = f-1-j labels the Frobenius-matrix slots: wtilde_k,
    gamma_k, and the Kisin matrices.
An ``AdmElt`` stores its entries by slot, so ``w.slots[f-1-j]`` is the
entry paired with embedding j.
"""

from dataclasses import dataclass
from itertools import product
import json

from .exactalg import MPoly
from .weights import (
    NotInLambdaMu,
    Params,
    SerreWeight,
    is_n_deep,
    t_mu,
)


class NotGeneric(ValueError):
    """Genericity hypothesis fails for the requested construction."""


class MalformedDecomposition(ValueError):
    """A group element does not admit the required t_nu * w decomposition."""


class NotInX(ValueError):
    """wtilde is excluded from X(rhobar, lambda) by a gamma != 0 condition."""


def sgn(flip) -> int:
    return -1 if flip else 1


# ---------------------------------------------------------------------------
# rhobar data


@dataclass(frozen=True)
class RhoBarData:
    """Frobenius data of a generic rhobar in the fixed normal form.

    r is embedding-indexed; gamma_nonzero (and the optional exact gamma)
    are slot-indexed.  alpha and beta are embedding-indexed unit scalars,
    only used for matrix emission.
    """

    p: int
    f: int
    irreducible: bool
    r: tuple
    gamma_nonzero: tuple
    alpha: tuple = None
    beta: tuple = None
    gamma: tuple = None

    def __post_init__(self):
        Params(self.p, self.f)
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        object.__setattr__(
            self, "gamma_nonzero", tuple(bool(x) for x in self.gamma_nonzero)
        )
        if len(self.r) != self.f or len(self.gamma_nonzero) != self.f:
            raise ValueError("r and gamma_nonzero must have length f")
        if self.irreducible and any(self.gamma_nonzero):
            raise ValueError("irreducible rhobar has all gamma_j = 0")
        for name in ("alpha", "beta", "gamma"):
            val = getattr(self, name)
            if val is not None and len(val) != self.f:
                raise ValueError("%s must have length f" % name)
        if self.gamma is not None:
            for k in range(self.f):
                if bool(self.gamma[k]) != self.gamma_nonzero[k]:
                    raise ValueError("gamma values contradict gamma_nonzero flags")

    @property
    def params(self) -> Params:
        return Params(self.p, self.f)

    def s_flip(self, j: int) -> bool:
        # the Weyl part of rhobar sits in slot 0 exactly when irreducible
        return self.irreducible and j == 0

    def sgn_s(self, j: int) -> int:
        return sgn(self.s_flip(j))

    def mu_base(self):
        """mu - eta, the extension-graph origin attached to rhobar."""
        return tuple((rj, 0) for rj in self.r)

    def depth(self) -> int:
        """Largest N with N < r_j + 1 < p - N for every j."""
        return min(min(rj, self.p - rj - 2) for rj in self.r)

    @classmethod
    def from_json(cls, source) -> "RhoBarData":
        if isinstance(source, (str, bytes)):
            data = json.loads(source)
        else:
            data = dict(source)
        return cls(
            p=int(data["p"]),
            f=int(data["f"]),
            irreducible=bool(data["irreducible"]),
            r=tuple(int(x) for x in data["r"]),
            gamma_nonzero=tuple(bool(x) for x in data["gamma_nonzero"]),
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "f": self.f,
                "irreducible": self.irreducible,
                "r": list(self.r),
                "gamma_nonzero": list(self.gamma_nonzero),
            },
            sort_keys=True,
        )


# ---------------------------------------------------------------------------
# Hodge-Tate weights


@dataclass(frozen=True)
class HTWeight:
    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for a, b in pairs:
            if a < b:
                raise ValueError("Hodge-Tate pairs must be dominant")

    @property
    def f(self) -> int:
        return len(self.pairs)

    def is_regular(self) -> bool:
        return all(a > b for a, b in self.pairs)

    def leq(self, other: "HTWeight") -> bool:
        """Coordinate sums agree and the first entries do not exceed other's."""
        if self.f != other.f:
            return False
        return all(
            a + b == c + d and a <= c
            for (a, b), (c, d) in zip(self.pairs, other.pairs)
        )

    @classmethod
    def eta(cls, f: int) -> "HTWeight":
        return cls(tuple((1, 0) for _ in range(f)))


def ht_weights_below(lam: HTWeight, regular_only=True):
    """All (regular) Hodge-Tate weights <= lam in the dominance order."""
    per_slot = []
    for a, b in lam.pairs:
        s = a + b
        lo = s // 2 + 1 if regular_only else (s + 1) // 2
        per_slot.append([(x, s - x) for x in range(lo, a + 1)])
    return [HTWeight(combo) for combo in product(*per_slot)]


# ---------------------------------------------------------------------------
# admissible elements


@dataclass(frozen=True)
class AdmElt:
    """f-tuple of affine-Weyl slot entries (flip, (m, n)).

    slots[k] represents t_(m,n) when flip is False and w * t_(m,n) when
    flip is True; slot k belongs with embedding j = f - 1 - k.
    """

    slots: tuple

    def __post_init__(self):
        slots = tuple(
            (bool(flip), (int(m), int(n))) for flip, (m, n) in self.slots
        )
        object.__setattr__(self, "slots", slots)

    @property
    def f(self) -> int:
        return len(self.slots)

    def at_embedding(self, j: int):
        return self.slots[self.f - 1 - j]

    def tnu_form(self, k: int):
        """Slot k written as t_nu * w: returns (nu, wflip)."""
        flip, (m, n) = self.slots[k]
        return ((n, m), True) if flip else ((m, n), False)

    def label(self) -> str:
        parts = []
        for flip, (m, n) in self.slots:
            parts.append("%st(%d,%d)" % ("w*" if flip else "", m, n))
        return "|".join(parts)

    @classmethod
    def parse(cls, text: str) -> "AdmElt":
        """Inverse of label(): e.g. "t(2,1)|w*t(1,0)"."""
        slots = []
        for part in text.split("|"):
            part = part.strip()
            flip = part.startswith("w*")
            if flip:
                part = part[2:]
            if not (part.startswith("t(") and part.endswith(")")):
                raise MalformedDecomposition("cannot parse slot %r" % part)
            try:
                m, n = (int(x) for x in part[2:-1].split(","))
            except ValueError:
                raise MalformedDecomposition("cannot parse slot %r" % part)
            slots.append((flip, (m, n)))
        return cls(tuple(slots))


def adm_slot(pair):
    """Single-slot admissible entries for the slot weight (m, n), m >= n."""
    m, n = pair
    if m < n:
        raise ValueError("slot weight must be dominant")
    out = []
    for a in range(n, m + 1):
        b = m + n - a
        out.append((False, (a, b)))
        if (a, b) != (n, m):
            out.append((True, (a, b)))
    return out


def adm_set(lam: HTWeight):
    """Adm^v(t_lam): product over slots of the single-slot sets."""
    f = lam.f
    per_slot = [adm_slot(lam.pairs[f - 1 - k]) for k in range(f)]
    return frozenset(AdmElt(combo) for combo in product(*per_slot))


def x_rho_lambda(rho: RhoBarData, lam: HTWeight):
    """Subset of adm_set(lam) allowed for rhobar (gamma exclusions)."""
    f = lam.f
    out = []
    for w in adm_set(lam):
        ok = True
        for k in range(f):
            l1, l2 = lam.pairs[f - 1 - k]
            if rho.gamma_nonzero[k] and w.slots[k] == (False, (l2, l1)):
                ok = False
                break
        if ok:
            out.append(w)
    return frozenset(out)


# ---------------------------------------------------------------------------
# tame types


@dataclass(frozen=True)
class TameTypeSpec:
    """Lowest-alcove presentation (s, mu) of a tame inertial type.

    s and mu are embedding-indexed; a_residues (slot-indexed, entries in
    [0, p)) are the mod-p classes of the monodromy parameter, present when
    the type was produced by tau_of_wtilde.
    """

    p: int
    f: int
    s: tuple
    mu: tuple
    a_residues: tuple = None
    wtilde: AdmElt = None

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(bool(x) for x in self.s))
        object.__setattr__(
            self, "mu", tuple((int(a), int(b)) for a, b in self.mu)
        )
        if len(self.s) != self.f or len(self.mu) != self.f:
            raise ValueError("s and mu must have length f")
        if self.a_residues is not None:
            object.__setattr__(
                self, "a_residues", tuple(x % self.p for x in self.a_residues)
            )

    @property
    def params(self) -> Params:
        return Params(self.p, self.f)

    def depth(self) -> int:
        """Largest N such that mu is N-deep (negative if not even 0-deep)."""
        return min(min(a - b, self.p - 2 - (a - b)) for a, b in self.mu)

    def a_invertible_up_to(self, ell: int) -> bool:
        """Whether a +- k stays a p-adic unit for all 0 <= k <= ell."""
        if self.a_residues is None:
            raise ValueError("type carries no a-parameter data")
        for a in self.a_residues:
            for k in range(ell + 1):
                if (a + k) % self.p == 0 or (a - k) % self.p == 0:
                    return False
        return True


def tau_of_wtilde(rho: RhoBarData, w: AdmElt) -> TameTypeSpec:
    """The tame type tau_wtilde attached to rhobar and an admissible w."""
    f = rho.f
    if w.f != f:
        raise MalformedDecomposition("wtilde length does not match f")
    s_out = []
    mu_out = []
    a_res = []
    for j in range(f):
        k = f - 1 - j
        nu, wflip = w.tnu_form(k)
        m1, n1 = nu
        sflip = rho.s_flip(j)
        # s(tau)_j = s_j * w_j^{-1}; flips compose by xor
        s_out.append(sflip != wflip)
        if wflip == sflip:
            mu_out.append((rho.r[j] - m1, -n1))
        else:
            mu_out.append((rho.r[j] - n1, -m1))
        flip, (m, n) = w.slots[k]
        if flip:
            a = rho.sgn_s(j) * (rho.r[j] + 1) + (m - n)
        else:
            a = -rho.sgn_s(j) * (rho.r[j] + 1) + (m - n)
        a_res.append(a % rho.p)
    return TameTypeSpec(
        p=rho.p,
        f=f,
        s=tuple(s_out),
        mu=tuple(mu_out),
        a_residues=tuple(a_res),
        wtilde=w,
    )


# ---------------------------------------------------------------------------
# Jordan-Hoelder sets


def jh_sigma_tau(tau: TameTypeSpec):
    """JH factors of the reduced type, as a dict J -> SerreWeight.

    J runs over subsets of embeddings; relative to the origin mu + s(eta)
    the factor for J has graph coordinate 0 at j in J and -sgn(s_j) at
    j outside J.
    """
    params = tau.params
    if not is_n_deep(params, tau.mu, 1):
        raise NotGeneric("type is not 1-generic")
    base = tuple(
        (a, b + 1) if tau.s[j] else (a + 1, b)
        for j, (a, b) in enumerate(tau.mu)
    )
    out = {}
    for bits in product((0, 1), repeat=tau.f):
        J = frozenset(j for j in range(tau.f) if bits[j])
        omega = tuple(
            0 if j in J else -sgn(tau.s[j]) for j in range(tau.f)
        )
        try:
            out[J] = t_mu(params, base, omega)
        except NotInLambdaMu:
            raise NotGeneric("type too shallow for its JH set")
    if len(set(out.values())) != 2 ** tau.f:
        raise NotGeneric("JH factors collide; type too shallow")
    return out


def jh_sigma_lambda_tau(lam: HTWeight, tau: TameTypeSpec):
    """JH factors after tensoring with the algebraic rep of weight lam - eta.

    Expands, embedding by embedding, the tensor of each type factor with
    L(lam_1 - 1, lam_2): the summands step by (-1, +1) from
    (lam_1 - 1, lam_2) down to (lam_2, lam_1 - 1).  Returns a frozenset;
    generically a hypercuboid of size prod_j 2(lam_{j,1} - lam_{j,2}).
    """
    if lam.f != tau.f:
        raise ValueError("lambda and tau have different f")
    params = tau.params
    base_jh = jh_sigma_tau(tau)
    spreads = [range(l1 - l2) for l1, l2 in lam.pairs]
    out = set()
    count = 0
    for w0 in base_jh.values():
        for kvec in product(*spreads):
            pairs = []
            for j, (A, B) in enumerate(w0.pairs):
                l1, l2 = lam.pairs[j]
                pairs.append((A + l1 - 1 - kvec[j], B + l2 + kvec[j]))
            try:
                wt = SerreWeight.make(params, tuple(pairs))
            except ValueError:
                raise NotGeneric("tensor constituent leaves the window")
            if not wt.is_regular():
                raise NotGeneric("tensor constituent is not regular")
            out.add(wt)
            count += 1
    if len(out) != count:
        raise NotGeneric("tensor constituents collide; parameters too shallow")
    return frozenset(out)


def w_of_rhobar(rho: RhoBarData):
    """W(rhobar) as a dict b-vector -> SerreWeight.

    b_j ranges over {0, sgn(s_j)} at slots with gamma_{f-1-j} = 0 and is
    pinned to 0 otherwise.
    """
    params = rho.params
    base = rho.mu_base()
    choices = []
    for j in range(rho.f):
        if rho.gamma_nonzero[rho.f - 1 - j]:
            choices.append((0,))
        else:
            choices.append((0, rho.sgn_s(j)))
    out = {}
    for b in product(*choices):
        out[b] = t_mu(params, base, b)
    return out


def j_sigma(b) -> frozenset:
    """The support label J_sigma of a b-vector."""
    return frozenset(j for j, bj in enumerate(b) if bj)


def membership_b_sets(rho: RhoBarData, lam: HTWeight, w: AdmElt):
    """Per-embedding sets of b_j with F(t_{mu-eta}(b)) in JH(sigmabar(lam, tau_w)).

    The values are sgn(s_j) sgn(w_j) (r - 1) + lam_1 + lam_2 + 1 - 2k for
    lam_2 < k <= lam_1 and r in {0, 1}.
    """
    f = rho.f
    sets = []
    for j in range(f):
        _, wflip = w.tnu_form(f - 1 - j)
        l1, l2 = lam.pairs[j]
        vals = set()
        for k in range(l2 + 1, l1 + 1):
            for r in (0, 1):
                vals.add(rho.sgn_s(j) * sgn(wflip) * (r - 1) + l1 + l2 + 1 - 2 * k)
        sets.append(vals)
    return sets

def w_rho_lambda_tau(rho: RhoBarData, lam: HTWeight, w: AdmElt):
    """W(rhobar) intersected with JH(sigmabar(lam, tau_w)): b-vector -> weight."""
    allowed = membership_b_sets(rho, lam, w)
    out = {}
    for b, wt in w_of_rhobar(rho).items():
        if all(b[j] in allowed[j] for j in range(rho.f)):
            out[b] = wt
    return out


# ---------------------------------------------------------------------------
# component counting


def s_count(slot, gamma_flag: bool) -> int:
    """Number of components contributed by one slot of wtilde."""
    flip, (m, n) = slot
    if flip:
        return min(m, n + 1)
    if m > n:
        return min(m, n) + 1
    if m == n:
        return m
    return min(m, n) if gamma_flag else min(m, n) + 1


def s_total(w: AdmElt, lam: HTWeight, rho: RhoBarData) -> int:
    """S(wtilde, lam) = prod_j max(0, S(wtilde_{f-1-j}) - lam_{j,2})."""
    f = rho.f
    total = 1
    for j in range(f):
        k = f - 1 - j
        contrib = s_count(w.slots[k], rho.gamma_nonzero[k]) - lam.pairs[j][1]
        total *= max(0, contrib)
    return total


def x_wtilde_lambda(rho: RhoBarData, w: AdmElt, lam: HTWeight):
    """X(wtilde, lam): regular lam' <= lam with wtilde in X(rhobar, lam')."""
    out = []
    for lam2 in ht_weights_below(lam, regular_only=True):
        if w in x_rho_lambda(rho, lam2):
            out.append(lam2)
    return out


# ---------------------------------------------------------------------------
# matrix shapes


def shape_of(case: str, m: int, n: int, a_flag: bool):
    """Shape slot from the four-row gauge table.

    case "t": matrix (alpha v^m, 0; a v^m, beta v^n);
    case "wt": matrix (0, beta v^n; alpha v^m, a v^n).
    a_flag records whether the lower-left (resp. corner) entry a is nonzero.
    """
    if case == "t":
        if m > n:
            return (False, (m, n))
        return (True, (m, n)) if a_flag else (False, (m, n))
    if case == "wt":
        if m > n:
            return (False, (m, n)) if a_flag else (True, (m, n))
        return (True, (m, n))
    raise ValueError("case must be 't' or 'wt'")


def kisin_matrix(rho: RhoBarData, w: AdmElt):
    """Symbolic mod-p Kisin matrices, one 2x2 tuple of MPoly per slot.

    Slot k uses the scalars alpha_j, beta_j (j = f-1-k) and gamma_k; when
    rho carries exact values they are substituted, otherwise symbols
    al{j}, be{j}, ga{k} are used.
    """
    f = rho.f
    if w.f != f:
        raise MalformedDecomposition("wtilde length does not match f")
    for k in range(f):
        flip, (m, n) = w.slots[k]
        if rho.gamma_nonzero[k] and not flip and m == 0:
            raise NotInX("slot %d is excluded by gamma != 0" % k)
    v = MPoly.var("v")
    zero = MPoly.constant(0)
    out = []
    for k in range(f):
        j = f - 1 - k
        flip, (m, n) = w.slots[k]
        al = (
            MPoly.constant(rho.alpha[j])
            if rho.alpha is not None
            else MPoly.var("al%d" % j)
        )
        be = (
            MPoly.constant(rho.beta[j])
            if rho.beta is not None
            else MPoly.var("be%d" % j)
        )
        if rho.gamma_nonzero[k]:
            ga = (
                MPoly.constant(rho.gamma[k])
                if rho.gamma is not None
                else MPoly.var("ga%d" % k)
            )
            corner_scale = al * ga
        else:
            corner_scale = zero
        if not flip:
            mat = (
                (al * v**m, zero),
                (corner_scale * v**m, be * v**n),
            )
        else:
            mat = (
                (zero, al * v**n),
                (be * v**m, corner_scale * v**n),
            )
        out.append(mat)
    return out
