"""S_d action on T and the invariant subring."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .coefficients import CoeffContext
from .partitions import act_on_side
from .poly import Poly


def transpositions(d: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            s = list(range(1, d + 1))
            s[i - 1], s[j - 1] = j, i
            out.append(tuple(s))
    return out


def all_permutations(d: int) -> list[tuple[int, ...]]:
    return list(permutations(range(1, d + 1)))


def variable_images(ctx: CoeffContext, sigma) -> dict[int, Poly]:
    ring = ctx.ring
    images = {}
    for P in ctx.partitions:
        side = act_on_side(sigma, P.side)
        images[ring.index("D" + _name(ctx, P.side))] = ctx.D(side)
        images[ring.index("F" + _name(ctx, P.side))] = ctx.F(side)
    return images


def act_on_poly(ctx: CoeffContext, sigma, p: Poly) -> Poly:
    """sigma . p; F of a side mapped to a non-canonical side is re-eliminated."""
    if ctx.d == 1:
        return p
    return p.substitute(variable_images(ctx, sigma))


def reynolds(ctx: CoeffContext, p: Poly, group=None) -> Poly:
    group = group or all_permutations(ctx.d)
    out = Poly()
    for sigma in group:
        out = out + act_on_poly(ctx, sigma, p)
    return out * Fraction(1, len(group))


def _name(ctx, side):
    from .coefficients import side_name

    return side_name(side, ctx.d)


# -- invariant data of a quotient -------------------------------------------
def invariant_hilbert(q, max_degree: int | None = None) -> list[int]:
    """Per-degree rank of the Reynolds projector on the quotient slices."""
    return q.invariant_hilbert(max_degree)


def invariant_basis(q, k: int) -> list[Poly]:
    return [q.ideal.basis_poly(k, row) for row in q.invariant_echelon(k).rows.values()]


# -- the d = 3 model ----------------------------------------------------------
MODEL_VARS = (("k2", 1), ("s1", 1), ("rho", 2), ("s2", 2), ("tau", 2), ("s3", 3))


def model_ring():
    from .poly import GradedVar, Ring

    ring = Ring()
    for name, deg in MODEL_VARS:
        ring.add(GradedVar(name, "model", deg))
    return ring


def model_images(ctx: CoeffContext, tau_sides: str = "pairs") -> dict[str, Poly]:
    """Images in T of the d = 3 generators.

    s2 runs over unordered pairs of boundary divisors; tau is half the sum
    of F over the 2-element sides (the complements hbar of h = 1, 2, 3).
    """
    if ctx.d != 3:
        raise ValueError("the model is specific to d = 3")
    Ds = [ctx.D(P) for P in ctx.partitions]
    s1 = sum(Ds, Poly())
    s2 = Poly()
    for i, a in enumerate(Ds):
        for b in Ds[i + 1 :]:
            s2 = s2 + a * b
    sigma2 = s1 * s1 - s2 * 4
    s3 = Ds[0] * Ds[1] * Ds[2]
    want = 1 if tau_sides == "singletons" else 2
    tau = Poly()
    for P in ctx.partitions:
        for s in P.sides:
            if len(s) == want:
                tau = tau + ctx.F(s)
    tau = tau * Fraction(1, 2)
    k2, k3 = ctx.k2, ctx.k3
    rho = (tau * 7 + s1 * s1 * Fraction(1, 4) + sigma2 * Fraction(1, 2) + k2 * k2 * Fraction(1, 4) - k3) * Fraction(-1, 27)
    return {"k2": k2, "s1": s1, "rho": rho, "s2": sigma2, "tau": tau, "s3": s3}


def model_map(ring, images: dict[str, Poly]):
    subs = {ring.index(name): img for name, img in images.items()}
    return lambda p: p.substitute(subs)


def u_vector(kc, level: int) -> list[tuple[str, Poly]]:
    """Symmetrized kappa slots at the given level, as T polynomials."""
    from .kappa import k0_from, v_vector

    v = v_vector(kc, level)
    ctx = kc.ctx
    pushed = v.pushed(kc)
    u_D, u_psi, u_k = Poly(), Poly(), Poly()
    for P, s in kc.sides():
        if len(s) != 2:
            continue
        S = kc.strata[P]
        u_D = u_D + ctx.D(P) * pushed[s]
        u_psi = u_psi + S.pushforward(v.psik[s])
        u_k = u_k + pushed[s]
    return [
        ("U-Dk", u_D),
        ("U-psik", u_psi),
        ("U-k", u_k),
        ("U-k0", k0_from(kc, v.open_top, v.open, pushed)),
        ("U-open", v.open),
    ]


def lift_to_model(target: Poly, ring, phi, ideal) -> Poly:
    """A model polynomial whose image equals target modulo the given T ideal."""
    tring = ideal.ring
    deg = tring.is_homogeneous(target)
    if deg == "zero":
        return Poly()
    from .linalg import Echelon

    mons = ring.monomials(deg)
    # columns: slice coordinates; track combinations in extra columns
    ech = Echelon()
    off = ideal.slice(deg).quotient_dim
    for j, m in enumerate(mons):
        v = ideal.coords(phi(Poly.monomial(m)))
        v[off + j] = Fraction(1)
        ech.add(v)
    t = ech.reduce(ideal.coords(target))
    if any(c < off for c in t):
        raise ArithmeticError("target is not in the image of the model generators")
    # t = target - sum x_j phi(m_j) in the extra coordinates: the residual
    # carries -coefficients of the combination
    return Poly({mons[c - off]: -x for c, x in t.items()})


def corollary35_presentation(n: int, tau_sides: str = "pairs", kc=None):
    """The d = 3 invariant model Q[k2, s1, rho, s2, tau, s3] / (fixed relations, U_{n+1})."""
    from .ideal import GradedIdeal
    from .kappa import KappaContext
    from .presentation import Flags, Presentation, lemma_relations

    if n < 1:
        raise ValueError("n must be positive")
    kc = kc or KappaContext(3)
    ctx = kc.ctx
    ring = model_ring()
    images = model_images(ctx, tau_sides)
    phi = model_map(ring, images)
    g = {name: ring.gen(name) for name, _ in MODEL_VARS}
    fixed = [
        ("model-tau.s3", g["tau"] * g["s3"]),
        ("model-rho.s3", g["rho"] * g["s3"]),
        ("model-tau2-rho.s2", g["tau"] * g["tau"] - g["rho"] * g["s2"]),
    ]
    lemma = GradedIdeal(ctx.ring, [p for _, p in lemma_relations(kc, Flags())])
    rels = list(fixed)
    for lab, u in u_vector(kc, n + 1):
        rels.append((lab, lift_to_model(u, ring, phi, lemma)))
    pres = Presentation(n, 3, ring, relations=[(lab, p) for lab, p in rels if p], kc=None)
    pres.images = images
    pres.phi = phi
    return pres


# -- ideal comparison for classes supported on a boundary stratum -------------
def _stratum_alpha(kc, side, choice: str) -> Poly:
    S = kc.stratum_of(side)
    if choice == "unit":
        return Poly.const(1)
    if choice == "kh_H2":
        return S.kh_H2(side)
    if choice == "psi":
        return S.psi_side(side)
    if choice == "zero":
        return Poly()
    raise ValueError(f"unknown alpha {choice!r}")


def lemma34_ideal_check(alpha_choice: str, degree_cap: int, n: int, d: int = 3, side=(1, 2), q=None):
    """Graded dimensions of the invariant part of (orbit of alpha_h) and of the
    invariant ideal generated by s(alpha), s(psi alpha), s(alpha D), s(alpha D^2)."""
    from .kappa import KappaContext
    from .linalg import Echelon
    from .presentation import build
    from .quotient import GradedQuotient

    if q is None:
        q = GradedQuotient(build(n, d))
    kc = q.pres.kc
    ctx = kc.ctx
    ring = ctx.ring
    group = all_permutations(d)
    # orbit generators of the T ideal: push(alpha), push(psi alpha) on each image stratum
    gens = []
    for sigma in group:
        s = act_on_side(sigma, side)
        S = kc.stratum_of(s)
        a = _image_alpha(kc, sigma, side, alpha_choice)
        gens.append(S.push(a))
        gens.append(S.push(S.psi_side(s) * a))
    S = kc.stratum_of(side)
    a = _stratum_alpha(kc, side, alpha_choice)
    DP = ctx.D(S.P)
    inv_gens = [reynolds(ctx, S.push(a * x), group) for x in (Poly.const(1), S.psi_side(side), DP, DP * DP)]

    left, right = [], []
    for k in range(degree_cap + 1):
        # left: reynolds of (J_k + I_k) / I_k
        ech = Echelon()
        for gpoly in gens:
            gd = ring.is_homogeneous(gpoly)
            if gd == "zero" or gd > k:
                continue
            for m in ring.monomials(k - gd):
                v = q.ideal.coords(reynolds(ctx, gpoly * Poly.monomial(m), group))
                ech.add(v)
        left.append(ech.rank)
        ech = Echelon()
        for gpoly in inv_gens:
            gd = ring.is_homogeneous(gpoly)
            if gd == "zero" or gd > k:
                continue
            for b in invariant_basis(q, k - gd):
                ech.add(q.ideal.coords(gpoly * b))
        right.append(ech.rank)
    return {"alpha": alpha_choice, "left": left, "right": right, "equal": left == right}


def _image_alpha(kc, sigma, side, choice):
    """sigma applied to alpha_h, as a stratum class on sigma(h)."""
    s = act_on_side(sigma, side)
    return _stratum_alpha(kc, s, choice)
