"""Duality data, the squared relative antipode, and loop operators.

Duality is realized concretely: the dual basis of a one-vertex simple module
is identified with vectors of another one-vertex sector,

    U^a_s = (-1)^{a+s} q^{(s+1)(s+a-2)} V^{a-2+2p}_{p-1-s},

so evaluation and coevaluation stay inside the implemented sectors:

    <V^a_s, V^b_t>  = (-1)^s q^{-s^2+s(a-1)}  if s+t = p-1 and a+b = 2p-2 (mod 4p)
    coev(X^a)       = sum_s V^a_s (x) (-1)^{a+s} q^{(s+1)(s-a-2)} V^{2p-a-2}_{p-1-s}

and similarly for two-vertex modules.  The loop operator chi_Z runs Z along a
loop around Y:  coevaluate Z, double-braid Y past Z, apply the ribbon map and
the squared relative antipode sigma_2 to Z, braid Z past its dual with the
plain diagonal braiding, and evaluate.  On a simple Y the result is a scalar
lambda; on a P module it is lambda plus a nilpotent mu part mapping the top
floor onto the bottom one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycField, CycNum, cyclotomic_field
from . import ydspace as yds
from . import nichols
from .classify import ModuleDescriptor, p_module_basis
from .linalg import Echelon


# ---------------------------------------------------------------------------
# evaluation / coevaluation


def ev_one_vertex(K: CycField, u: yds.BasisVector, v: yds.BasisVector) -> CycNum:
    """<V^a_s, V^b_t>, the pairing of a dual-side vector with a module vector."""
    (a,), (s,) = u
    (b,), (t,) = v
    if s + t != K.p - 1 or (a + b - (2 * K.p - 2)) % (4 * K.p) != 0:
        return K.zero
    coef = K.q_pow(-s * s + s * (a - 1))
    return -coef if s % 2 else coef


def coev_one_vertex(K: CycField, a: int):
    """coev of X^a as a list of (V^a_s, dual vector realized on V-basis)."""
    p = K.p
    r = a % p + 1
    out = []
    for s in range(r):
        coef = K.q_pow((s + 1) * (s - a - 2))
        if (a + s) % 2:
            coef = -coef
        out.append((yds.one_vertex(a, s), {yds.one_vertex(2 * p - a - 2, p - 1 - s): coef}))
    return out


def dual_identification_one_vertex(K: CycField, a: int, s: int):
    """U^a_s as (scalar, V-basis vector)."""
    coef = K.q_pow((s + 1) * (s + a - 2))
    if (a + s) % 2:
        coef = -coef
    return coef, yds.one_vertex(a - 2 + 2 * K.p, K.p - 1 - s)


def dual_act_U(K: CycField, a: int, r: int, s: int) -> CycNum:
    """Coefficient of U^a_{s-r} in F(r) U^a_s (the induced action on the dual)."""
    coef = K.q_pow(r * (r - 1) - r * a - 2 * r * s) * K.q_binom(s, r) * (-K.xi()) ** r
    for t in range(s - r, s):
        coef = coef * K.q_int(t + a)
    return coef


def dual_coact_U(K: CycField, a: int, s: int):
    """delta U^a_s = sum_r (coef) F(r) (x) U^a_{s+r}, as a list of (r, coef)."""
    out = []
    for r in range(K.p - s):
        coef = K.q_pow(-r * a - 2 * s * r - r * (r - 1))
        out.append((r, -coef if r % 2 else coef))
    return out


def ev_two_vertex(K: CycField, u: yds.BasisVector, v: yds.BasisVector) -> CycNum:
    """<V^{a,b}_{s,t}, V^{c,d}_{u,v}> in the identified two-vertex realization."""
    (a, b), (s, t) = u
    (c, d), (su, tv) = v
    n4 = 4 * K.p
    if s + su != K.p - 1 or t + tv != K.p - 1:
        return K.zero
    if (a + c + 2) % n4 != 0 or (b + d + 2) % n4 != 0:
        return K.zero
    coef = K.q_pow((s + t) * (2 * a + b + 1 - s - t))
    return -coef if (s + t) % 2 else coef


def dual_identification_two_vertex(K: CycField, a: int, b: int, s: int, t: int):
    """U^{a,b}_{s,t} as (scalar, V-basis vector)."""
    coef = K.q_pow((t + s + 2) * (2 * a + b + t + s - 3))
    if (t + s) % 2:
        coef = -coef
    return coef, yds.two_vertex(a - 2, b - 2, K.p - 1 - s, K.p - 1 - t)


def dual_act_U2(K: CycField, a: int, b: int, s: int, t: int, r: int):
    """F(r) U^{a,b}_{s,t} = sum_u coef(u) U^{a,b}_{s-r+u, t-u}; list of (u, coef)."""
    from .ydspace import _c2

    out = []
    for u in range(r + 1):
        coef = K.q_pow(r * (r - 1) - r * (b + 2 * s + 2 * t)) * _c2(
            K, -a, -b, s - r + u, t - u, r, u
        )
        if s - r + u < 0 or t - u < 0:
            continue
        out.append((u, -coef if r % 2 else coef))
    return out


def dual_descriptor(p: int, desc: ModuleDescriptor) -> ModuleDescriptor:
    """Left dual: X(r)_nu -> X(r)_{-nu}; V[r]_nu -> V[p-r]_{-nu-1};
    P[r]_nu -> P[r]_{-2-nu} with relabeled coinvariant data."""
    if desc.kind in ("X", "S"):
        return ModuleDescriptor(desc.kind, desc.r, -desc.nu)
    if desc.kind == "V":
        return ModuleDescriptor("V", p - desc.r, -desc.nu - 1)
    if desc.kind == "P":
        labels = ()
        if len(desc.labels) == 3:
            a, t, b = desc.labels
            labels = (-a - 2, p - desc.r - t - 1, -b - 2)
        return ModuleDescriptor("P", desc.r, -2 - desc.nu, labels)
    raise ValueError(f"no duality data for {desc}")


# ---------------------------------------------------------------------------
# squared relative antipode


def sigma2(K: CycField, v: dict) -> dict:
    """sigma_2(z) = A(z_{(-1)}) |> z_{(0)}; identity on coinvariants."""
    out = {}
    for r, comp in yds.coact(K, v):
        coef = nichols.antipode_coeff(K, r)
        for bv, c in yds.act_Fr(K, r, comp).items():
            yds.add_term(out, bv, coef * c)
    return out


def sigma2_scalar_one_vertex(K: CycField, a: int, t: int) -> CycNum:
    """sigma_2 is diagonal on one-vertex vectors; the V^a_t eigenvalue."""
    total = K.zero
    for r in range(t + 1):
        coef = nichols.antipode_coeff(K, r) * K.q_binom(t, r) * K.xi() ** r
        for i in range(t - r, t):
            coef = coef * K.q_int(i - a)
        total = total + coef
    return total


# ---------------------------------------------------------------------------
# loop operators


def ribbon_scalar_one_vertex(K: CycField, a: int) -> CycNum:
    return K.zeta_pow(a * (a + 2))


def chi_apply(K: CycField, y: dict, b: int) -> dict:
    """chi of the loop module Z = X^b applied to an ambient vector y.

    Second form of the loop diagram: coev, B^2, ribbon, sigma_2, diagonal
    braiding against the dual, evaluate.  Works for y in any implemented
    sector (one- or two-vertex), so P modules can be run through it directly.
    """
    p = K.p
    theta = ribbon_scalar_one_vertex(K, b)
    sig = {t: sigma2_scalar_one_vertex(K, b, t) for t in range(p)}
    out = {}
    for zbv, uvec in coev_one_vertex(K, b):
        (ubv, ucoef) = next(iter(uvec.items()))
        uch = ubv.charge
        for (by, bz), c in yds.braid_B2(K, {(key, zbv): cy for key, cy in y.items()}).items():
            tz = bz.crosses[0]
            coef = c * theta * sig[tz] * K.zeta_pow(bz.charge * uch)
            coef = coef * ucoef * ev_one_vertex(K, ubv, bz)
            if not coef.is_zero():
                yds.add_term(out, by, coef)
    return out


def chi_apply_first_form(K: CycField, y: dict, b: int) -> dict:
    """The same loop evaluated from the first diagram (category braiding B
    between Z and its dual instead of sigma_2); cross-check only."""
    theta = ribbon_scalar_one_vertex(K, b)
    out = {}
    for zbv, uvec in coev_one_vertex(K, b):
        for (by, bz), c in yds.braid_B2(K, {(key, zbv): cy for key, cy in y.items()}).items():
            for ubv2, cu in uvec.items():
                braided = yds.braid_B(K, {(bz, ubv2): c * theta * cu})
                for (bu3, bz3), c3 in braided.items():
                    coef = c3 * ev_one_vertex(K, bu3, bz3)
                    if not coef.is_zero():
                        yds.add_term(out, by, coef)
    return out


def lambda_closed(K: CycField, rp: int, nup: int, r: int, nu: int) -> CycNum:
    """The loop eigenvalue lambda(r',nu'; r,nu), division-free sum form
    (valid for all 1 <= r' <= p, including the Steinberg r' = p)."""
    if not (1 <= rp <= K.p and 1 <= r <= K.p):
        raise ValueError("need 1 <= r', r <= p")
    total = K.zero
    for i in range(1, r + 1):
        total = total + K.q_pow(rp * (r + 1 - 2 * i))
    sign = nup * (r + 1) + nu * rp + K.p * nu * nup
    return -total if sign % 2 else total


def lambda_ratio(K: CycField, rp: int, nup: int, r: int, nu: int) -> CycNum:
    """Ratio form of lambda; needs q^{r'} - q^{-r'} invertible (r' < p)."""
    if rp % K.p == 0:
        raise ZeroDivisionError("ratio form degenerates at r' = p")
    num = K.q_pow(rp * r) - K.q_pow(-rp * r)
    den = K.q_pow(rp) - K.q_pow(-rp)
    val = num * den.inv()
    sign = nup * (r + 1) + nu * rp + K.p * nu * nup
    return -val if sign % 2 else val


def lambda_ab(K: CycField, a: int, b: int) -> CycNum:
    """Eigenvalue in coinvariant-charge labels, for (a)_p != p-1."""
    if (a + 1) % K.p == 0:
        raise ZeroDivisionError("denominator vanishes at (a)_p = p-1")
    num = K.q_pow((a + 1) * (b + 1)) - K.q_pow(-(a + 1) * (b + 1))
    den = K.q_pow(a + 1) - K.q_pow(-(a + 1))
    return num * den.inv()


def lambda_steinberg(K: CycField, nup: int, r: int, nu: int) -> CycNum:
    """lambda(p, nu'; r, nu) = (-1)^{(nu'+1)(r-1-nu p)} r."""
    val = K.from_int(r)
    return -val if ((nup + 1) * (r - 1 - nu * K.p)) % 2 else val


def mu_closed(K: CycField, rp: int, nup: int, r: int, nu: int) -> CycNum:
    """Nilpotent coefficient of the loop on a P[r'] module, 1 <= r' <= p-1."""
    if not 1 <= rp <= K.p - 1:
        raise ValueError("mu is defined for 1 <= r' <= p-1")
    qp = K.q_pow(rp)
    qm = K.q_pow(-rp)
    qr = K.q_pow(rp * r)
    qrm = K.q_pow(-rp * r)
    body = (qr - qrm) * (qp + qm) - K.from_int(r) * (qr + qrm) * (qp - qm)
    val = (K.q_pow(1) - K.q_pow(-1)) * ((qp - qm) ** 3).inv() * body
    sign = 1 + nup * r + nu * rp + K.p * nup * nu
    return -val if sign % 2 else val


def _assert_commutes(K: CycField, y_basis, b: int):
    # chi must commute with the action and coaction on the span
    for w in y_basis:
        lhs = chi_apply(K, yds.act_F(K, w), b)
        rhs = yds.act_F(K, chi_apply(K, w, b))
        assert yds.vec_eq(lhs, rhs), "chi does not commute with the action"
        lc = {r: comp for r, comp in yds.coact(K, chi_apply(K, w, b))}
        rc = {r: chi_apply(K, comp, b) for r, comp in yds.coact(K, w)}
        assert set(lc) == {r for r, c in rc.items() if c} and all(
            yds.vec_eq(lc[r], rc[r]) for r in lc
        ), "chi does not commute with the coaction"


def chi_on_simple(K: CycField, rp: int, nup: int, r: int, nu: int, check_commute=False) -> CycNum:
    """Run X(r)_nu around the loop on Y = X(r')_{nu'}; asserts the matrix is a
    scalar and returns it."""
    p = K.p
    a = rp - 1 - nup * p
    b = r - 1 - nu * p
    basis = [{yds.one_vertex(a, s): K.one} for s in range(rp)]
    lam = None
    for s, w in enumerate(basis):
        img = chi_apply(K, w, b)
        keys = set(img)
        assert keys <= {yds.one_vertex(a, s)}, "chi not diagonal on a simple module"
        val = img.get(yds.one_vertex(a, s), K.zero)
        if lam is None:
            lam = val
        else:
            assert lam == val, "chi not scalar on a simple module"
    if check_commute:
        _assert_commutes(K, basis, b)
    return lam


def chi_on_p_module(K: CycField, a: int, t: int, b_label: int, r: int, nu: int):
    """chi of Z = X(r)_nu on the P module with leftmost coinvariant (a, t, b).

    Returns (lambda, mu) extracted from the full matrix, asserting the matrix
    equals lambda * id + mu * N where N maps u(i) to v(r'+i) and kills the
    v chain (r' the left wing length).
    """
    p = K.p
    vs, us, pdesc = p_module_basis(K, a, t, b_label)
    rp = pdesc.r
    zb = r - 1 - nu * p
    ech = Echelon(K)
    tags = [("v", i + 1) for i in range(p)] + [("u", i + 1) for i in range(p)]
    for tag, w in zip(tags, vs + us):
        ech.add(w, tag)
    lam = None
    mu = None
    for idx, w in enumerate(vs + us):
        tag = tags[idx]
        coords = ech.coordinates(chi_apply(K, w, zb))
        assert coords is not None, "chi left the P module"
        diag = coords.pop(tag, K.zero)
        if lam is None:
            lam = diag
        else:
            assert lam == diag, "diagonal part of chi not scalar on P"
        if tag[0] == "v":
            assert not coords, f"chi(v) has off-diagonal part: {coords}"
        else:
            i = tag[1]
            if rp + i <= p:
                assert set(coords) <= {("v", rp + i)}, coords
                val = coords.get(("v", rp + i), K.zero)
                if mu is None:
                    mu = val
                else:
                    assert mu == val, "nilpotent part of chi not uniform"
            else:
                assert not coords, coords
    return lam, mu, pdesc


def verify_chi_on_P(K: CycField, a: int, t: int, b_label: int, r: int, nu: int) -> bool:
    """Full-matrix check of chi on a P module against the closed lambda, mu."""
    lam, mu, pdesc = chi_on_p_module(K, a, t, b_label, r, nu)
    want_lam = lambda_closed(K, pdesc.r, pdesc.nu, r, nu)
    want_mu = mu_closed(K, pdesc.r, pdesc.nu, r, nu)
    return lam == want_lam and mu == want_mu


@dataclass(frozen=True)
class LoopAction:
    """How a loop module acts on a target: a diagonal eigenvalue and, on a
    P-type target only, the nilpotent top-to-bottom coefficient."""

    lam: CycNum
    mu: CycNum | None = None


def chi(K: CycField, y_desc, z_desc) -> LoopAction:
    """Run the simple module z_desc around the loop on y_desc.

    y_desc may be simple (X/S) or a P/L descriptor carrying (a, t, b) labels;
    the result is checked against the full matrix (scalar on simples,
    lambda * id + mu * N on a P), which also verifies that the endomorphism
    commutes with the action and coaction through its very shape.
    """
    if z_desc.kind not in ("X", "S"):
        raise ValueError(f"the loop module must be simple, got {z_desc}")
    r, nu = z_desc.r, z_desc.nu
    if y_desc.kind in ("X", "S"):
        return LoopAction(chi_on_simple(K, y_desc.r, y_desc.nu, r, nu))
    if y_desc.kind in ("L", "P") and len(y_desc.labels) == 3:
        a, t, b = y_desc.labels
        lam, mu, _ = chi_on_p_module(K, a, t, b, r, nu)
        return LoopAction(lam, mu)
    raise ValueError(f"unsupported target {y_desc}")


def chi_matrix(K: CycField, y_desc, z_desc):
    """The matrix of the loop endomorphism in the standard basis of y_desc.

    Returns (tags, entries) with entries[(i, j)] the coefficient of basis
    vector i in the image of basis vector j.
    """
    if z_desc.kind not in ("X", "S"):
        raise ValueError(f"the loop module must be simple, got {z_desc}")
    p = K.p
    zb = z_desc.r - 1 - z_desc.nu * p
    if y_desc.kind in ("X", "S"):
        ay = y_desc.r - 1 - y_desc.nu * p
        basis = [{yds.one_vertex(ay, s): K.one} for s in range(y_desc.r)]
        tags = list(range(y_desc.r))
    elif y_desc.kind in ("L", "P") and len(y_desc.labels) == 3:
        a, t, b = y_desc.labels
        vs, us, _ = p_module_basis(K, a, t, b)
        basis = vs + us
        tags = [("v", i + 1) for i in range(p)] + [("u", i + 1) for i in range(p)]
    else:
        raise ValueError(f"unsupported target {y_desc}")
    ech = Echelon(K)
    for tag, w in zip(tags, basis):
        ech.add(w, tag)
    entries = {}
    for j, w in zip(tags, basis):
        coords = ech.coordinates(chi_apply(K, w, zb))
        assert coords is not None, "chi left the module"
        for i, c in coords.items():
            entries[(i, j)] = c
    return tags, entries


def verify_multiplicativity(p: int, w, z, y) -> bool:
    """Eigenvalue-level chi_W o chi_Z = chi_{W (x) Z} on a simple Y.

    w, z, y are (r, nu) pairs; the right side expands W (x) Z through the
    abstract ring (nu mod 2, matching the mod-2 dependence of lambda).
    """
    from .fusionring import ring_multiply, x_gen

    K = cyclotomic_field(p)
    (rw, nuw), (rz, nuz), (ry, nuy) = w, z, y
    lhs = lambda_closed(K, ry, nuy, rw, nuw) * lambda_closed(K, ry, nuy, rz, nuz)
    rhs = K.zero
    prod = ring_multiply(p, x_gen(p, rw, nuw), x_gen(p, rz, nuz))
    for (s, nu), mult in prod.items():
        rhs = rhs + K.from_int(mult) * lambda_closed(K, ry, nuy, s, nu)
    return lhs == rhs
