//! Recovery of the squared medial axis transform M² from a coherent map:
//! square-root parametrization of the section, spine from intersecting
//! normals, squared radius, verification and implicitization.

use std::sync::Arc;

use crate::curvetools::Map2P1;
use crate::qpoly::{
    mgcd, msquarefree_part, rat_sqrt, resultant, rint, AlgElem, AlgExt, Field, MPoly, QpolyError,
    Rat, Ring, UPoly,
};
use crate::rng::{small_rat, Rng};
use crate::sqrtfield::{is_square, normalize_radicand, solve_quadratic, RatFunc, SqrtElem};
use crate::surface::{PlaneFrame, Surface};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MatrecError {
    #[error("not a canal surface: {0}")]
    NotCanal(String),
    #[error("map does not cut the section in two points per fiber")]
    DegenerateFiber,
    #[error("spine is constant")]
    ConstantSpine,
    #[error(transparent)]
    Algebra(#[from] QpolyError),
}

/// The two branches h±(t) of the section in ambient coordinates.
#[derive(Clone, Debug)]
pub struct SqrtParam {
    pub plus: [SqrtElem; 3],
    pub minus: [SqrtElem; 3],
    pub radicand: UPoly<Rat>,
}

/// M²: spine (s1, s2, s3) and squared radius R.
#[derive(Clone, Debug, PartialEq)]
pub struct SquaredMAT {
    pub s: [RatFunc; 3],
    pub r: RatFunc,
}

impl SquaredMAT {
    pub fn coords(&self) -> [&RatFunc; 4] {
        [&self.s[0], &self.s[1], &self.s[2], &self.r]
    }

    /// A small rational parameter where no coordinate has a pole.
    pub fn sample_point(&self) -> Rat {
        (0i64..)
            .map(|k| if k % 2 == 0 { rint(k / 2) } else { rint(-(k + 1) / 2) })
            .find(|t0| self.coords().iter().all(|c| !c.den().eval(t0).is_zero()))
            .unwrap()
    }

    /// The same curve after t → (a·t + b)/(c·t + d).
    pub fn reparametrize(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Self {
        SquaredMAT {
            s: std::array::from_fn(|i| self.s[i].mobius(a, b, c, d)),
            r: self.r.mobius(a, b, c, d),
        }
    }
}

fn sq(c: &Rat) -> SqrtElem {
    SqrtElem::from_rat(c)
}

fn eval_sqrt(p: &MPoly<Rat>, pt: &[SqrtElem]) -> SqrtElem {
    p.eval_in(pt, sq)
}

/// Content of p with respect to variable `var` (a polynomial in the rest).
fn content_in(p: &MPoly<Rat>, var: usize) -> MPoly<Rat> {
    let mut g = MPoly::zero();
    for c in p.as_univariate(var).coeffs() {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.clone() } else { mgcd(&g, c) };
        if g.is_constant() {
            break;
        }
    }
    g
}

/// Quadratic in variable `keep` describing the fiber over t (index 2),
/// after eliminating `elim`; `None` if the degree is not 2.
fn fiber_quadratic(
    g: &MPoly<Rat>,
    nt: &MPoly<Rat>,
    elim: usize,
    keep: usize,
) -> Result<Option<[RatFunc; 3]>, MatrecError> {
    let res = resultant(g, nt, elim)?;
    if res.is_zero() {
        return Ok(None);
    }
    let cont = content_in(&res, 2);
    let q = if cont.is_constant() { res } else { res.div_exact(&cont).unwrap() };
    if q.degree_in(keep) != 2 {
        return Ok(None);
    }
    let uq = q.as_univariate(keep);
    let coef = |k: usize| {
        let c = uq.coeff(k);
        RatFunc::from_poly(c.to_upoly(2).unwrap_or_else(|| UPoly::constant(c.constant_term())))
    };
    Ok(Some([coef(2), coef(1), coef(0)]))
}

fn roots(q: &[RatFunc; 3]) -> Result<(SqrtElem, SqrtElem, UPoly<Rat>), MatrecError> {
    Ok(solve_quadratic(&q[0], &q[1], &q[2])?)
}

/// Re-expresses a root over the shared radicand `target`, when the
/// root's radicand differs from it by a rational square.
fn rebase(e: &SqrtElem, own: &UPoly<Rat>, target: &Arc<UPoly<Rat>>) -> Option<SqrtElem> {
    if e.is_rational() {
        return Some(e.clone());
    }
    if own == &**target {
        return Some(SqrtElem::new(e.r0().clone(), e.r1().clone(), target));
    }
    // own = k²·target
    let k2 = own.lead() / target.lead();
    if target.scale(&k2) != *own {
        return None;
    }
    let k = rat_sqrt(&k2)?;
    Some(SqrtElem::new(e.r0().clone(), e.r1().scale_rat(&k), target))
}

trait ScaleRat {
    fn scale_rat(&self, k: &Rat) -> RatFunc;
}

impl ScaleRat for RatFunc {
    fn scale_rat(&self, k: &Rat) -> RatFunc {
        self.times(&RatFunc::constant(k.clone()))
    }
}

/// Solves the fiber system {g = 0, num − t·den = 0} and lifts both
/// branches to space through the section's frame.
pub fn fiber_sqrt_param(m: &Map2P1, frame: &PlaneFrame) -> Result<SqrtParam, MatrecError> {
    let g = &m.source.g;
    for c in [0i64, 1, -1, 2, -2, 3, 5, -7] {
        // sheared coordinates (w, v) with u = w − c·v
        let shear = [MPoly::var(0).sub_ref(&MPoly::var(1).scale(&rint(c))), MPoly::var(1)];
        let gs = g.compose(&shear);
        let nt = m
            .num
            .compose(&shear)
            .sub_ref(&m.den.compose(&shear).mul_ref(&MPoly::var(2)));
        let (Some(qw), Some(qv)) = (fiber_quadratic(&gs, &nt, 1, 0)?, fiber_quadratic(&gs, &nt, 0, 1)?)
        else {
            continue;
        };
        let (w1, _, pw) = roots(&qw)?;
        let (v1, v2, pv) = roots(&qv)?;
        let target = if !pw.is_one() { pw.clone() } else { pv.clone() };
        if target.is_one() {
            // both fibers rational: the map is not a genuine double cover
            return Err(MatrecError::DegenerateFiber);
        }
        let target = Arc::new(target);
        let rb = |e: &SqrtElem, own: &UPoly<Rat>| rebase(e, own, &target);
        let (Some(w1), Some(v1), Some(v2)) = (rb(&w1, &pw), rb(&v1, &pv), rb(&v2, &pv))
        else {
            return Err(MatrecError::DegenerateFiber);
        };
        let on = |w: &SqrtElem, v: &SqrtElem| {
            let pt = [w.clone(), v.clone(), SqrtElem::rational(RatFunc::t())];
            eval_sqrt(&gs, &pt).is_zero() && eval_sqrt(&nt, &pt).is_zero()
        };
        let (wp, vp) = if on(&w1, &v1) {
            (w1, v1)
        } else if on(&w1, &v2) {
            (w1, v2)
        } else {
            continue;
        };
        let (wm, vm) = (wp.conjugate(), vp.conjugate());
        if !on(&wm, &vm) {
            continue;
        }
        let lift = |w: &SqrtElem, v: &SqrtElem| {
            let u = w.minus(&v.times(&SqrtElem::from_rat(&rint(c))));
            frame.point_in(&u, v)
        };
        return Ok(SqrtParam { plus: lift(&wp, &vp), minus: lift(&wm, &vm), radicand: (*target).clone() });
    }
    Err(MatrecError::DegenerateFiber)
}

fn grad_at(s: &Surface, x: &[SqrtElem; 3]) -> [SqrtElem; 3] {
    std::array::from_fn(|i| eval_sqrt(&s.gradient()[i], x))
}

/// Intersection of the surface normals at the two branches.
pub fn spine_from_normals(s: &Surface, param: &SqrtParam) -> Result<[RatFunc; 3], MatrecError> {
    let (xp, xm) = (&param.plus, &param.minus);
    let (np, nm) = (grad_at(s, xp), grad_at(s, xm));
    let rhs: [SqrtElem; 3] = std::array::from_fn(|i| xm[i].minus(&xp[i]));
    // λ·n⁺ − μ·n⁻ = x⁻ − x⁺, by two rows with the largest determinant degree
    let det = |i: usize, j: usize| nm[i].times(&np[j]).minus(&np[i].times(&nm[j]));
    let size = |e: &SqrtElem| e.norm().num().deg();
    let (i, j, d) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|(i, j)| (i, j, det(i, j)))
        .filter(|(_, _, d)| !d.is_zero())
        .max_by_key(|(_, _, d)| size(d))
        .ok_or_else(|| MatrecError::NotCanal("normals are parallel along the section".into()))?;
    let lambda = nm[i].times(&rhs[j]).minus(&rhs[i].times(&nm[j])).divide(&d).unwrap();
    let mu = np[i].times(&rhs[j]).minus(&rhs[i].times(&np[j])).divide(&d).unwrap();
    let k = 3 - i - j;
    if !lambda.times(&np[k]).minus(&mu.times(&nm[k])).minus(&rhs[k]).is_zero() {
        return Err(MatrecError::NotCanal("normals at corresponding points do not meet".into()));
    }
    let spine: [SqrtElem; 3] = std::array::from_fn(|c| xp[c].plus(&lambda.times(&np[c])));
    let parts: Option<Vec<RatFunc>> = spine.iter().map(|e| e.rational_part()).collect();
    let parts = parts.ok_or_else(|| MatrecError::NotCanal("spine is not rational".into()))?;
    Ok([parts[0].clone(), parts[1].clone(), parts[2].clone()])
}

/// R = |x⁺ − s|², checked against the other branch.
pub fn squared_radius(param: &SqrtParam, spine: &[RatFunc; 3]) -> Result<RatFunc, MatrecError> {
    let dist = |x: &[SqrtElem; 3]| {
        (0..3).fold(SqrtElem::zero(), |acc, i| {
            let d = x[i].minus(&SqrtElem::rational(spine[i].clone()));
            acc.plus(&d.times(&d))
        })
    };
    let (rp, rm) = (dist(&param.plus), dist(&param.minus));
    if rp != rm {
        return Err(MatrecError::NotCanal("branches are at different distances from the spine".into()));
    }
    let r = rp.rational_part().ok_or_else(|| MatrecError::NotCanal("squared radius is not rational".into()))?;
    if r.is_zero() {
        return Err(MatrecError::NotCanal("squared radius vanishes".into()));
    }
    Ok(r)
}

/// True iff R is the square of a rational function.
pub fn mat_is_rational(r: &RatFunc) -> bool {
    !r.is_zero() && is_square(r)
}

/// Σ(t)·L(t)² as a polynomial in x, y, z (indices 0..2) and t (index 3).
fn sphere_family(m: &SquaredMAT) -> MPoly<Rat> {
    let dens = [m.s[0].den(), m.s[1].den(), m.s[2].den(), m.r.den()];
    let l = dens.iter().fold(UPoly::<Rat>::one(), |acc, d| {
        let g = acc.gcd(d);
        acc.mul_ref(&d.div_exact(&g).unwrap())
    });
    let t = |p: &UPoly<Rat>| MPoly::from_upoly(3, p);
    let lt = t(&l);
    let mut out = MPoly::zero();
    for i in 0..3 {
        let si = t(&m.s[i].num().mul_ref(&l.div_exact(m.s[i].den()).unwrap()));
        let d = MPoly::var(i).mul_ref(&lt).sub_ref(&si);
        out = out.add_ref(&d.mul_ref(&d));
    }
    let rl = m.r.num().mul_ref(&l.mul_ref(&l).div_exact(m.r.den()).unwrap());
    let n = out.sub_ref(&t(&rl));
    // a factor in t alone comes from a parameter where the clearing degenerates
    let c = content_in(&content_in(&content_in(&n, 0), 1), 2);
    if c.is_constant() {
        n
    } else {
        n.div_exact(&c).unwrap()
    }
}

/// Implicit equation of the envelope of the sphere family of M².
pub fn implicitize_canal(m: &SquaredMAT) -> Result<MPoly<Rat>, MatrecError> {
    if m.s.iter().all(|c| c.as_constant().is_some()) {
        return Err(MatrecError::ConstantSpine);
    }
    let n = sphere_family(m);
    let res = resultant(&n, &n.partial(3), 3)?;
    let lc = n.as_univariate(3).lead();
    let res = res.div_exact(&lc).unwrap_or(res);
    if res.is_zero() {
        return Err(MatrecError::ConstantSpine);
    }
    // keep the factors of multiplicity one
    let sqf = msquarefree_part(&res);
    let repeated = res.div_exact(&sqf).unwrap();
    let simple = if repeated.is_constant() {
        sqf
    } else {
        sqf.div_exact(&msquarefree_part(&repeated)).unwrap()
    };
    Ok(simple.primitive())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Sampling,
    Full,
}

/// Outcome of verify_canal.
#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub passed: bool,
    pub samples: Vec<Rat>,
    pub failure: Option<String>,
}

const SAMPLES: usize = 8;

fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot3(a: &[Rat; 3], b: &[Rat; 3]) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Exact points on the characteristic circle Σ(t0) ∩ Σ'(t0); `None` if
/// t0 is a pole or s'(t0) = 0.
fn circle_points(m: &SquaredMAT, t0: &Rat, count: usize) -> Option<Vec<[AlgElem; 3]>> {
    let c: Vec<Rat> = m.s.iter().map(|f| f.eval(t0)).collect::<Option<_>>()?;
    let n: Vec<Rat> = m.s.iter().map(|f| f.derivative().eval(t0)).collect::<Option<_>>()?;
    let r0 = m.r.eval(t0)?;
    let r1 = m.r.derivative().eval(t0)?;
    let c = [c[0].clone(), c[1].clone(), c[2].clone()];
    let n = [n[0].clone(), n[1].clone(), n[2].clone()];
    let nn = dot3(&n, &n);
    if nn.is_zero() {
        return None;
    }
    // plane (X − c)·n = −R'/2; centre x0 and squared radius ρ²
    let k = -(r1 / rint(2));
    let x0: [Rat; 3] = std::array::from_fn(|i| &c[i] + &k / &nn * &n[i]);
    let rho2 = r0 - &k * &k / &nn;
    let axis = (0..3).min_by_key(|&i| if n[i].is_zero() { 0 } else { 1 }).unwrap();
    let mut e = [rint(0), rint(0), rint(0)];
    e[axis] = rint(1);
    let d1 = cross(&n, &e);
    let d2 = cross(&n, &d1);
    let (l1, l2) = (dot3(&d1, &d1), dot3(&d2, &d2));
    let mut out = Vec::new();
    for j in 0..count as i64 {
        // τ chosen so τ²|d1|² stays a small multiple of ρ²
        let tau = &rho2 / &l1 * rint(j) / rint(count as i64 + 1);
        let s2 = (&rho2 - &tau * &tau * &l1) / &l2;
        let sigma = match rat_sqrt(&s2) {
            Some(r) => AlgElem::rational(r),
            None => AlgElem::generator(&AlgExt::sqrt(&s2).ok()?),
        };
        let tau = AlgElem::rational(tau);
        out.push(std::array::from_fn(|i| {
            AlgElem::rational(x0[i].clone())
                .plus(&tau.times(&AlgElem::rational(d1[i].clone())))
                .plus(&sigma.times(&AlgElem::rational(d2[i].clone())))
        }));
    }
    Some(out)
}

/// Checks that the surface contains the envelope of the spheres of M².
pub fn verify_canal(s: &Surface, m: &SquaredMAT, mode: VerifyMode, rng: &mut Rng) -> Verification {
    let per_circle = 2 * s.degree() as usize + 1;
    let mut samples = Vec::new();
    let mut tries = 0;
    while samples.len() < SAMPLES {
        tries += 1;
        if tries > 200 {
            return Verification { passed: false, samples, failure: Some("no admissible sample parameter".into()) };
        }
        let t0 = if samples.is_empty() && tries == 1 { rint(0) } else { small_rat(rng, 12) };
        if samples.contains(&t0) {
            continue;
        }
        let Some(points) = circle_points(m, &t0, per_circle) else { continue };
        for x in &points {
            if !s.f().eval_in(x, |c| AlgElem::rational(c.clone())).is_zero() {
                return Verification {
                    passed: false,
                    failure: Some(format!("f does not vanish on the characteristic circle at t = {t0}")),
                    samples: { samples.push(t0); samples },
                };
            }
        }
        samples.push(t0);
    }
    if mode == VerifyMode::Full {
        let fail = |msg: String| Verification { passed: false, samples: samples.clone(), failure: Some(msg) };
        let imp = match implicitize_canal(m) {
            Ok(p) => p,
            Err(e) => return fail(format!("implicitization failed: {e}")),
        };
        if imp.div_exact(s.f()).is_none() {
            return fail("f does not divide the implicit equation of M²".into());
        }
    }
    Verification { passed: true, samples, failure: None }
}

/// Pairwise t-eliminants of the coordinates of M², as polynomials in
/// (X1, X2, X3, X4).
fn eliminants(m: &SquaredMAT) -> Result<Vec<MPoly<Rat>>, MatrecError> {
    let coords = m.coords();
    let lin = |i: usize| {
        let c = coords[i];
        MPoly::var(i)
            .mul_ref(&MPoly::from_upoly(4, c.den()))
            .sub_ref(&MPoly::from_upoly(4, c.num()))
    };
    let mut out = Vec::new();
    for i in 0..4 {
        if coords[i].as_constant().is_some() {
            out.push(lin(i));
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if coords[i].as_constant().is_some() || coords[j].as_constant().is_some() {
                continue;
            }
            out.push(resultant(&lin(i), &lin(j), 4)?);
        }
    }
    Ok(out)
}

fn lies_on(a: &SquaredMAT, gens: &[MPoly<Rat>]) -> bool {
    let pt: Vec<RatFunc> = a.coords().iter().map(|c| (*c).clone()).chain([RatFunc::t()]).collect();
    gens.iter().all(|g| g.eval_in(&pt, |c| RatFunc::constant(c.clone())).is_zero())
}

/// True iff A and B parametrize the same curve in 4-space.
pub fn mat2_curve_equal(a: &SquaredMAT, b: &SquaredMAT) -> Result<bool, MatrecError> {
    Ok(lies_on(a, &eliminants(b)?) && lies_on(b, &eliminants(a)?))
}

/// Squarefree part P of a radicand, exposed for reporting.
pub fn radicand_of(r: &RatFunc) -> UPoly<Rat> {
    normalize_radicand(r).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{qconst, qvar, rat};
    use crate::rng::seeded;
    use crate::surface::PlaneCurve;

    fn rf(c: &[Rat]) -> RatFunc {
        RatFunc::from_poly(UPoly::new(c.to_vec()))
    }

    pub(crate) fn example1_mat() -> SquaredMAT {
        let r = rf(&[rat(5, 2), rint(0), rat(9, 5776)]);
        SquaredMAT {
            s: [rf(&[rat(-1, 2), rint(0), rat(9, 5776)]), rf(&[rint(0), rat(-3, 38)]), RatFunc::zero()],
            r: r.times(&r),
        }
    }

    fn example1() -> MPoly<Rat> {
        let (x, y, z) = (qvar(0), qvar(1), qvar(2));
        [
            x.pow(3),
            &x * &y.pow(2),
            &x * &z.pow(2),
            x.pow(2).scale(&rint(2)),
            y.pow(2).scale(&rint(3)),
            z.pow(2),
            x.scale(&rint(-5)),
            qconst(-6),
        ]
        .iter()
        .fold(MPoly::zero(), |a, t| a.add_ref(t))
    }

    #[test]
    fn circle_fiber() {
        let (u, v) = (qvar(0), qvar(1));
        let g = &(&(&u * &u) + &(&v * &v)) - &qconst(1);
        let c = PlaneCurve::from_uv(g);
        let m = Map2P1 { num: u.clone(), den: qconst(1), source: c.clone() };
        let p = fiber_sqrt_param(&m, &c.frame).unwrap();
        assert_eq!(p.radicand, UPoly::from_ints(&[1, 0, -1]));
        assert_eq!(p.plus[0], SqrtElem::rational(RatFunc::t()));
        assert!(p.plus[1].r0().is_zero());
        assert!(p.plus[1].r1() == &RatFunc::one() || p.plus[1].r1() == &RatFunc::one().negate());
        assert!(p.plus[2].is_zero());
        assert_eq!(p.minus[1], p.plus[1].conjugate());
    }

    #[test]
    fn cylinder_implicitization() {
        let m = SquaredMAT { s: [RatFunc::t(), RatFunc::zero(), RatFunc::zero()], r: RatFunc::one() };
        let f = implicitize_canal(&m).unwrap();
        let (y, z) = (qvar(1), qvar(2));
        assert!(f.proportional(&(&(&(&y * &y) + &(&z * &z)) - &qconst(1))));
    }

    #[test]
    fn example1_implicitization_and_verification() {
        let m = example1_mat();
        let f = implicitize_canal(&m).unwrap();
        assert!(f.proportional(&example1()));
        let s = Surface::new(&example1()).unwrap();
        let mut rng = seeded(3);
        assert!(verify_canal(&s, &m, VerifyMode::Full, &mut rng).passed);
        let mut wrong = m.clone();
        wrong.r = wrong.r.plus(&RatFunc::one());
        assert!(!verify_canal(&s, &wrong, VerifyMode::Sampling, &mut rng).passed);
        assert!(mat_is_rational(&m.r));
    }

    #[test]
    fn example1_end_to_end() {
        use crate::coherent::{coherent_map_elliptic, corresponding_point};
        use crate::surface::plane_section_at;
        let s = Surface::new(&example1()).unwrap();
        let p = [rat(3, 2), rint(0), rat(3, 2)];
        let h = &(&qvar(0) + &qvar(2)) - &qconst(3);
        let q = corresponding_point(&s, &p, &h).unwrap().unwrap();
        let hc = plane_section_at(&s, &h, Some(&p)).unwrap();
        let map = coherent_map_elliptic(&hc, &[rint(0), rint(0)], &q.uv_rational().unwrap()).unwrap();
        let param = fiber_sqrt_param(&map, &hc.frame).unwrap();
        for x in [&param.plus, &param.minus] {
            assert!(eval_sqrt(s.f(), x).is_zero());
        }
        let spine = spine_from_normals(&s, &param).unwrap();
        let r = squared_radius(&param, &spine).unwrap();
        let m = SquaredMAT { s: spine, r };
        assert!(mat2_curve_equal(&m, &example1_mat()).unwrap());
    }

    pub(crate) const EXAMPLE2: &str = "256x^6+768x^4y^2+256x^4z^2+768x^2y^4+512x^2y^2z^2+256y^6+256y^4z^2-1536x^5\
        +512x^4z-3072x^3y^2-1024x^3z^2-128x^2y^2z+512x^2z^3-1536xy^4-1024xy^2z^2-640y^4z-512y^2z^3\
        +3712x^4-2048x^3z+4928x^2y^2-1152x^2yz+1664x^2z^2+256xy^2z-1024xz^3+784y^4-1152y^3z\
        +1024y^2z^2-1024yz^3+256z^4-4608x^3+576x^2y+2656x^2z-3712xy^2+2304xyz-1280xz^2-288y^3\
        -448y^2z+384yz^2+128z^3+3232x^2-1152xy-1216xz+584y^2-1056yz+496z^2-1344x+344y+120z+257";

    pub(crate) fn example2_mat() -> SquaredMAT {
        let s2 = RatFunc::new(UPoly::from_ints(&[7, -14]), UPoly::from_ints(&[-5, 12]));
        let s3 = RatFunc::new(UPoly::from_ints(&[49, -196, 196]), UPoly::from_ints(&[25, -120, 144]));
        SquaredMAT { s: [RatFunc::one(), s2.clone(), s3], r: s2 }
    }

    #[test]
    fn example2_end_to_end() {
        use crate::curvetools::hyperelliptic_map;
        use crate::surface::plane_section;
        let f = crate::parse::parse_surface_expression(EXAMPLE2).unwrap();
        let s = Surface::new(&f).unwrap();
        let h = &(&qvar(0) + &qvar(1).scale(&rint(2))) - &qvar(2);
        let hc = plane_section(&s, &h).unwrap();
        let map = hyperelliptic_map(&hc).unwrap();
        let param = fiber_sqrt_param(&map, &hc.frame).unwrap();
        let spine = spine_from_normals(&s, &param).unwrap();
        let r = squared_radius(&param, &spine).unwrap();
        let m = SquaredMAT { s: spine, r };
        assert!(mat2_curve_equal(&m, &example2_mat()).unwrap());
        assert!(!mat_is_rational(&m.r));
    }

    #[test]
    fn example2_implicitization() {
        let f = crate::parse::parse_surface_expression(EXAMPLE2).unwrap();
        assert!(implicitize_canal(&example2_mat()).unwrap().proportional(&f));
    }

    #[test]
    fn implicitization_with_a_clearing_pole() {
        // t ↦ 1/t puts t² in every denominator
        let m = example1_mat().reparametrize(&rint(0), &rint(1), &rint(1), &rint(0));
        assert!(implicitize_canal(&m).unwrap().proportional(&example1()));
    }

    #[test]
    fn curve_equality() {
        let m = example1_mat();
        let re = m.reparametrize(&rint(2), &rint(1), &rint(0), &rint(1));
        assert!(mat2_curve_equal(&m, &re).unwrap());
        let mut doubled = m.clone();
        doubled.r = doubled.r.times(&RatFunc::constant(rint(2)));
        assert!(!mat2_curve_equal(&m, &doubled).unwrap());
    }

    #[test]
    fn rationality_of_radius() {
        assert!(mat_is_rational(&RatFunc::t().times(&RatFunc::t())));
        let r = RatFunc::new(UPoly::from_ints(&[7, -14]), UPoly::from_ints(&[-5, 12]));
        assert!(!mat_is_rational(&r));
    }
}
