//! Coherent maps for elliptic sections: the corresponding point of a
//! regular point, a Weierstrass model of a plane cubic, the chord
//! construction and the projection from its third point.

use crate::curvetools::{fiber_degree, local_parametrization, CurveError, Map2P1};
use crate::qpoly::zpoly::rat_poly_gcd;
use crate::qpoly::{
    factor_univariate, mgcd, resultant, rint, AlgElem, AlgExt, Field, MPoly, QpolyError, Rat,
    Ring, UPoly,
};
use crate::surface::{PlaneCurve, PlaneFrame, Point, Surface, SurfaceError};
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoherentError {
    #[error("{0} non-trivial solutions for the corresponding point")]
    MultipleCandidates(usize),
    #[error("every solution for the corresponding point needs an extension of degree above 2")]
    UnsupportedAlgebraicDegree,
    #[error("the corresponding-point system vanishes on the whole section")]
    InfiniteCandidates,
    #[error("genus-one section of degree {0} is not a plane cubic")]
    NotCubicSection(u32),
    #[error("the section is not an elliptic curve")]
    NotElliptic,
    #[error("base point is not a smooth point of the section")]
    SingularBase,
    #[error("the point does not lie on the plane")]
    PointNotOnPlane,
    #[error("corresponding points must be distinct")]
    SamePoint,
    #[error("point is not defined over Q")]
    NonRationalPoint,
    #[error("a birational map is undefined at the given point")]
    Undefined,
    #[error("coherent map has fiber degree {0}")]
    WrongFiberDegree(usize),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Algebra(#[from] QpolyError),
}

/// A solution of the corresponding-point system, in space and in the
/// coordinates of the plane frame centred at p.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrespondingPoint {
    pub point: [AlgElem; 3],
    pub uv: [AlgElem; 2],
    pub frame: PlaneFrame,
}

impl CorrespondingPoint {
    pub fn as_rational(&self) -> Option<Point> {
        let c: Option<Vec<Rat>> = self.point.iter().map(|a| a.as_rational()).collect();
        c.map(|c| [c[0].clone(), c[1].clone(), c[2].clone()])
    }

    pub fn uv_rational(&self) -> Option<[Rat; 2]> {
        Some([self.uv[0].as_rational()?, self.uv[1].as_rational()?])
    }
}

fn embed(c: &Rat) -> AlgElem {
    AlgElem::rational(c.clone())
}

fn eval_k(p: &MPoly<Rat>, pt: &[AlgElem]) -> AlgElem {
    p.eval_in(pt, embed)
}

fn dot(a: &[MPoly<Rat>; 3], b: &[MPoly<Rat>; 3]) -> MPoly<Rat> {
    (0..3).fold(MPoly::zero(), |acc, i| acc.add_ref(&a[i].mul_ref(&b[i])))
}

/// The four polynomials of the corresponding-point system in plane coordinates.
fn system(s: &Surface, p: &Point, frame: &PlaneFrame) -> [MPoly<Rat>; 3] {
    let images = frame.images();
    let g1 = s.f().compose(&images);
    let gx: [MPoly<Rat>; 3] = std::array::from_fn(|i| s.gradient()[i].compose(&images));
    let gp = s.gradient_at(p);
    let gp: [MPoly<Rat>; 3] = std::array::from_fn(|i| MPoly::constant(gp[i].clone()));
    let d: [MPoly<Rat>; 3] = std::array::from_fn(|i| MPoly::constant(p[i].clone()).sub_ref(&images[i]));
    let det = d[0].mul_ref(&gp[1].mul_ref(&gx[2]).sub_ref(&gp[2].mul_ref(&gx[1])))
        .sub_ref(&d[1].mul_ref(&gp[0].mul_ref(&gx[2]).sub_ref(&gp[2].mul_ref(&gx[0]))))
        .add_ref(&d[2].mul_ref(&gp[0].mul_ref(&gx[1]).sub_ref(&gp[1].mul_ref(&gx[0]))));
    let dx = dot(&d, &gx);
    let dp = dot(&d, &gp);
    let iso = dx.mul_ref(&dx).mul_ref(&dot(&gp, &gp)).sub_ref(&dp.mul_ref(&dp).mul_ref(&dot(&gx, &gx)));
    [g1, det, iso]
}

fn at_u(g: &MPoly<Rat>, a: &AlgElem) -> UPoly<AlgElem> {
    let gv = g.as_univariate(1);
    UPoly::new(gv.coeffs().iter().map(|c| eval_k(c, &[a.clone(), AlgElem::zero()])).collect())
}

/// Roots in Q or a real quadratic extension of a univariate polynomial
/// over K, and whether some root lies outside that range.
fn small_roots(p: &UPoly<AlgElem>) -> (Vec<AlgElem>, bool) {
    let p = if p.deg() > 1 { p.squarefree_part() } else { p.monic() };
    if p.deg() <= 0 {
        return (Vec::new(), false);
    }
    if p.deg() == 1 {
        return (vec![p.coeff(0).negate()], false);
    }
    let coeffs: Option<Vec<Rat>> = p.coeffs().iter().map(|a| a.as_rational()).collect();
    let Some(coeffs) = coeffs else {
        return (Vec::new(), true);
    };
    let mut out = Vec::new();
    let mut beyond = false;
    for (phi, _) in factor_univariate(&UPoly::new(coeffs)).map(|f| f.factors).unwrap_or_default() {
        match phi.deg() {
            1 => out.push(AlgElem::rational(phi.coeff(0).negate())),
            2 => {
                let disc = phi.coeff(1) * phi.coeff(1) - rint(4) * phi.coeff(0);
                if disc.is_positive() {
                    let ext = AlgExt::new(&phi).expect("irreducible factor");
                    out.push(AlgElem::generator(&ext));
                }
            }
            _ => beyond = true,
        }
    }
    (out, beyond)
}

/// All non-trivial solutions over Q and real quadratic fields of the
/// corresponding-point system, and whether solutions over larger fields exist.
pub fn corresponding_candidates(
    s: &Surface,
    p: &Point,
    h: &MPoly<Rat>,
) -> Result<(Vec<CorrespondingPoint>, bool), CoherentError> {
    let frame = PlaneFrame::for_plane(h, Some(p))?;
    if frame.origin != *p {
        return Err(CoherentError::PointNotOnPlane);
    }
    let [g1, g2, g3] = system(s, p, &frame);
    if g1.is_zero() {
        return Err(SurfaceError::PlaneInSurface.into());
    }
    let r12 = resultant(&g1, &g2, 1)?;
    let r13 = resultant(&g1, &g3, 1)?;
    // one equation may hold on the whole section (e.g. the angle condition
    // on a cylinder); the other still cuts out finitely many points
    let r = match (r12.is_zero(), r13.is_zero()) {
        (true, true) => return Err(CoherentError::InfiniteCandidates),
        (false, true) => r12.to_upoly(0).unwrap(),
        (true, false) => r13.to_upoly(0).unwrap(),
        (false, false) => rat_poly_gcd(&r12.to_upoly(0).unwrap(), &r13.to_upoly(0).unwrap()),
    };
    let mut found: Vec<CorrespondingPoint> = Vec::new();
    let mut beyond = false;
    let frame_images = frame.images();
    let grad = s.gradient();
    let regular = |uv: &[AlgElem; 2]| {
        let x: Vec<AlgElem> = frame_images.iter().map(|c| eval_k(c, uv)).collect();
        grad.iter().any(|gi| !eval_k(gi, &x).is_zero())
    };
    if r.deg() > 0 {
        for (phi, _) in factor_univariate(&r)?.factors {
            let alpha = if phi.deg() == 1 {
                AlgElem::rational(phi.coeff(0).negate())
            } else {
                AlgElem::generator(&AlgExt::new(&phi)?)
            };
            let common = at_u(&g1, &alpha).gcd(&at_u(&g2, &alpha)).gcd(&at_u(&g3, &alpha));
            if common.deg() <= 0 {
                continue;
            }
            let real_small = phi.deg() == 1
                || (phi.deg() == 2
                    && (phi.coeff(1) * phi.coeff(1) - rint(4) * phi.coeff(0)).is_positive());
            if phi.deg() > 2 || !real_small {
                // genuine solutions over larger fields, unless they are singular points
                let common = common.squarefree_part();
                let trivial = common.deg() == 1 && !regular(&[alpha.clone(), common.coeff(0).negate()]);
                if phi.deg() > 2 && !trivial {
                    beyond = true;
                }
                continue;
            }
            let (vs, more) = small_roots(&common);
            beyond |= more;
            for v in vs {
                let uv = [alpha.clone(), v];
                if uv.iter().all(|c| c.is_zero()) || !regular(&uv) {
                    continue;
                }
                debug_assert!([&g1, &g2, &g3].iter().all(|g| eval_k(g, &uv).is_zero()));
                let point = frame.point_in(&uv[0], &uv[1]);
                found.push(CorrespondingPoint { point, uv, frame: frame.clone() });
            }
        }
    }
    Ok((found, beyond))
}

/// Solves the corresponding-point system for p on the plane h = 0.
pub fn corresponding_point(
    s: &Surface,
    p: &Point,
    h: &MPoly<Rat>,
) -> Result<Option<CorrespondingPoint>, CoherentError> {
    let (mut found, beyond) = corresponding_candidates(s, p, h)?;
    let count: usize = found.iter().map(|c| if c.as_rational().is_some() { 1 } else { 2 }).sum();
    match (count, beyond) {
        (0, false) => Ok(None),
        (0, true) => Err(CoherentError::UnsupportedAlgebraicDegree),
        (1, false) => Ok(found.pop()),
        (n, _) => Err(CoherentError::MultipleCandidates(n + beyond as usize)),
    }
}

/// A point of a Weierstrass cubic, possibly the point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum EPoint<K> {
    Infinity,
    Affine(K, K),
}

/// A ratio of two polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct Ratio {
    pub num: MPoly<Rat>,
    pub den: MPoly<Rat>,
}

/// E: y0² + x0³ + b·x0 + c = 0 with birational maps to and from the section.
#[derive(Clone, Debug)]
pub struct CubicModel {
    pub b: Rat,
    pub c: Rat,
    /// σ⁻¹ : H ⇢ E, as functions of (u, v).
    pub to_e: [Ratio; 2],
    /// σ : E ⇢ H, as functions of (x0, y0).
    pub to_h: [Ratio; 2],
    pub base: [Rat; 2],
    pub curve: PlaneCurve,
}

impl CubicModel {
    /// The Weierstrass polynomial in x0 (index 0) and y0 (index 1).
    pub fn equation(&self) -> MPoly<Rat> {
        let (x, y) = (MPoly::<Rat>::var(0), MPoly::<Rat>::var(1));
        y.pow(2)
            .add_ref(&x.pow(3))
            .add_ref(&x.scale(&self.b))
            .add_ref(&MPoly::constant(self.c.clone()))
    }

    pub fn j_invariant(&self) -> Option<Rat> {
        weierstrass_j(&self.b, &self.c)
    }

    pub fn contains<K: Field>(&self, pt: &EPoint<K>) -> bool {
        match pt {
            EPoint::Infinity => true,
            EPoint::Affine(x, y) => self.equation().eval_in(&[x.clone(), y.clone()], |c| K::from_rat(c)).is_zero(),
        }
    }

    /// σ⁻¹ at a rational point of H, resolving 0/0 along the branch.
    pub fn to_e_at(&self, pt: &[Rat; 2]) -> Result<EPoint<Rat>, CoherentError> {
        if *pt == self.base {
            return Ok(EPoint::Infinity);
        }
        let x = ratio_at(&self.to_e[0], &self.curve.g, pt)?;
        let y = ratio_at(&self.to_e[1], &self.curve.g, pt)?;
        match (x, y) {
            (Some(x), Some(y)) => Ok(EPoint::Affine(x, y)),
            _ => Ok(EPoint::Infinity),
        }
    }

    /// σ at a point of E; `None` where σ is undefined.
    pub fn to_h_at<K: Field>(&self, x: &K, y: &K) -> Option<[K; 2]> {
        let ev = |r: &Ratio| {
            let n = r.num.eval_in(&[x.clone(), y.clone()], |c| K::from_rat(c));
            let d = r.den.eval_in(&[x.clone(), y.clone()], |c| K::from_rat(c));
            n.divide(&d)
        };
        Some([ev(&self.to_h[0])?, ev(&self.to_h[1])?])
    }
}

/// j-invariant of y² + x³ + b·x + c = 0, i.e. of Y² = X³ + bX − c.
pub fn weierstrass_j(b: &Rat, c: &Rat) -> Option<Rat> {
    let a3 = b * b * b * rint(4);
    let den = &a3 + c * c * rint(27);
    if den == rint(0) {
        return None;
    }
    Some(rint(1728) * a3 / den)
}

/// Value of num/den at a smooth rational point of g = 0, `None` for ∞.
fn ratio_at(r: &Ratio, g: &MPoly<Rat>, pt: &[Rat; 2]) -> Result<Option<Rat>, CoherentError> {
    let n = r.num.eval(pt);
    let d = r.den.eval(pt);
    if !d.is_zero() {
        return Ok(Some(n / d));
    }
    if !n.is_zero() {
        return Ok(None);
    }
    let prec = 16;
    let (us, vs) = local_parametrization(g, pt, prec);
    let ser = |p: &MPoly<Rat>| p.eval_in(&[us.clone(), vs.clone()], |c| UPoly::constant(c.clone()));
    let (ns, ds) = (ser(&r.num), ser(&r.den));
    let ord = |s: &UPoly<Rat>| (0..prec).find(|&k| !s.coeff(k).is_zero());
    match (ord(&ns), ord(&ds)) {
        (_, None) => Err(CoherentError::Undefined),
        (None, Some(_)) => Ok(Some(rint(0))),
        (Some(a), Some(b)) if a > b => Ok(Some(rint(0))),
        (Some(a), Some(b)) if a < b => Ok(None),
        (Some(a), Some(_)) => Ok(Some(ns.coeff(a) / ds.coeff(a))),
    }
}

fn lin(a: &Rat, b: &Rat, c: &Rat) -> MPoly<Rat> {
    MPoly::var(0).scale(a).add_ref(&MPoly::var(1).scale(b)).add_ref(&MPoly::constant(c.clone()))
}

fn coeffs_of(l: &MPoly<Rat>) -> [Rat; 3] {
    [l.coeff(&[1]), l.coeff(&[0, 1]), l.constant_term()]
}

fn inverse3(m: &[[Rat; 3]; 3]) -> Option<[[Rat; 3]; 3]> {
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    if det == rint(0) {
        return None;
    }
    let cof = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        let v = &m[r[0]][c[0]] * &m[r[1]][c[1]] - &m[r[0]][c[1]] * &m[r[1]][c[0]];
        if (i + j).is_multiple_of(2) { v } else { -v }
    };
    Some(std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i) / &det)))
}

/// Weierstrass model of a smooth plane cubic sending `base` to the point
/// at infinity.
pub fn cubic_model(hc: &PlaneCurve, base: &[Rat; 2]) -> Result<CubicModel, CoherentError> {
    let g = &hc.g;
    let d = hc.degree();
    if d != 3 {
        return Err(if d > 3 { CoherentError::NotCubicSection(d) } else { CoherentError::NotElliptic });
    }
    if !g.eval(base).is_zero() {
        return Err(CoherentError::SingularBase);
    }
    let gu = g.partial(0).eval(base);
    let gv = g.partial(1).eval(base);
    if gu.is_zero() && gv.is_zero() {
        return Err(CoherentError::SingularBase);
    }
    // tangent line and its third intersection Q
    let lt = lin(&gu, &gv, &-(&gu * &base[0] + &gv * &base[1]));
    let dir = [gv.clone(), -gu.clone()];
    let along = g.compose(&[
        MPoly::constant(base[0].clone()).add_ref(&MPoly::var(0).scale(&dir[0])),
        MPoly::constant(base[1].clone()).add_ref(&MPoly::var(0).scale(&dir[1])),
    ]);
    let (c2, c3) = (along.coeff(&[2]), along.coeff(&[3]));
    // a line through Q other than the tangent
    let l1 = if c3.is_zero() {
        // Q at infinity in the tangent direction: a parallel line
        lin(&gu, &gv, &(-(&gu * &base[0] + &gv * &base[1]) - rint(1)))
    } else {
        let s = -(&c2 / &c3);
        let q = [&base[0] + &s * &dir[0], &base[1] + &s * &dir[1]];
        let normal = if gu.is_zero() { [rint(1), rint(0)] } else { [rint(0), rint(1)] };
        lin(&normal[0], &normal[1], &-(&normal[0] * &q[0] + &normal[1] * &q[1]))
    };
    let m_line = [MPoly::var(0), MPoly::var(1), MPoly::var(0).add_ref(&MPoly::var(1)).add_ref(&MPoly::one())]
        .into_iter()
        .map(|m| (m.clone(), [coeffs_of(&l1), coeffs_of(&m), coeffs_of(&lt)]))
        .find(|(_, t)| inverse3(t).is_some())
        .expect("some line completes the frame");
    let (m, t) = m_line;
    let tinv = inverse3(&t).unwrap();
    // g in coordinates x = L1/LT, y' = M/LT
    let (x, yp) = (MPoly::<Rat>::var(0), MPoly::<Rat>::var(1));
    let row = |i: usize| x.scale(&tinv[i][0]).add_ref(&yp.scale(&tinv[i][1])).add_ref(&MPoly::constant(tinv[i][2].clone()));
    let gh = homogenize3(g);
    let gx = gh.compose(&[row(0), row(1), row(2)]);
    if gx.degree_in(1) != 2 {
        return Err(CoherentError::NotElliptic);
    }
    let quad = gx.as_univariate(1);
    let to_u = |p: &MPoly<Rat>| p.to_upoly(0).unwrap_or_else(UPoly::zero);
    let (a, b, c) = (to_u(&quad.coeff(2)), to_u(&quad.coeff(1)), to_u(&quad.coeff(0)));
    let disc = b.mul_ref(&b).sub_ref(&a.mul_ref(&c).scale(&rint(4)));
    if disc.deg() != 3 || rat_poly_gcd(&disc, &disc.derivative()).deg() > 0 {
        return Err(CoherentError::NotElliptic);
    }
    let d3 = disc.coeff(3);
    let d2 = disc.coeff(2);
    let shift = &d2 / (&d3 * rint(3));
    // y² = D(x) with y = 2a(x)y' + b(x); x0 = (x + shift)/(−d3), y0 = y/d3²
    let x0_shifted = disc.compose(&UPoly::new(vec![-shift.clone(), rint(1)]));
    let e1 = x0_shifted.coeff(1);
    let e0 = x0_shifted.coeff(0);
    let d3sq = &d3 * &d3;
    let wb = &e1 / (&d3sq * &d3);
    let wc = -(&e0 / (&d3sq * &d3sq));
    // σ⁻¹ in (u,v)
    let hom = |p: &UPoly<Rat>, deg: usize| {
        (0..=deg).fold(MPoly::zero(), |acc, k| {
            acc.add_ref(&l1.pow(k as u32).mul_ref(&lt.pow((deg - k) as u32)).scale(&p.coeff(k)))
        })
    };
    let xnum = l1.add_ref(&lt.scale(&shift));
    let xden = lt.scale(&-d3.clone());
    let ynum = hom(&a, 1).mul_ref(&m).scale(&rint(2)).add_ref(&hom(&b, 2));
    let yden = lt.mul_ref(&lt).scale(&d3sq);
    // σ in (x0, y0): x = −d3·x0 − shift, y = d3²·y0, y' = (y − b(x))/(2a(x))
    let (ex, ey) = (MPoly::<Rat>::var(0), MPoly::<Rat>::var(1));
    let xe = ex.scale(&-d3.clone()).sub_ref(&MPoly::constant(shift.clone()));
    let ye = ey.scale(&d3sq);
    let up = |p: &UPoly<Rat>| MPoly::from_upoly(0, p).compose(std::slice::from_ref(&xe));
    let two_a = up(&a).scale(&rint(2));
    let yp_num = ye.sub_ref(&up(&b));
    let comp = |i: usize| {
        xe.mul_ref(&two_a)
            .scale(&tinv[i][0])
            .add_ref(&yp_num.scale(&tinv[i][1]))
            .add_ref(&two_a.scale(&tinv[i][2]))
    };
    let (cu, cv, cw) = (comp(0), comp(1), comp(2));
    Ok(CubicModel {
        b: wb,
        c: wc,
        to_e: [reduce(xnum, xden), reduce(ynum, yden)],
        to_h: [reduce(cu, cw.clone()), reduce(cv, cw)],
        base: base.clone(),
        curve: hc.clone(),
    })
}

fn homogenize3(g: &MPoly<Rat>) -> MPoly<Rat> {
    let d = g.total_degree().max(0) as u32;
    MPoly::from_terms(g.terms().map(|(e, c)| {
        let t: u32 = e.iter().sum();
        let mut e2 = e.clone();
        e2.resize(3, 0);
        e2[2] = d - t;
        (e2, c.clone())
    }))
}

fn reduce(num: MPoly<Rat>, den: MPoly<Rat>) -> Ratio {
    let g = mgcd(&num, &den);
    if g.is_constant() {
        return Ratio { num, den };
    }
    Ratio { num: num.div_exact(&g).unwrap(), den: den.div_exact(&g).unwrap() }
}

/// Third intersection of the line P1P2 with y² + x³ + b·x + c = 0.
pub fn chord_third_point<K: Field>(b: &Rat, p1: &EPoint<K>, p2: &EPoint<K>) -> EPoint<K> {
    let (x1, y1, x2, y2) = match (p1, p2) {
        (EPoint::Infinity, EPoint::Infinity) => return EPoint::Infinity,
        (EPoint::Infinity, EPoint::Affine(x, y)) | (EPoint::Affine(x, y), EPoint::Infinity) => {
            return EPoint::Affine(x.clone(), y.negate())
        }
        (EPoint::Affine(x1, y1), EPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
    };
    let lambda = if x1 != x2 {
        y2.minus(y1).divide(&x2.minus(x1)).unwrap()
    } else if y1 == y2 && !y1.is_zero() {
        // tangent: 2y·dy + (3x² + b)·dx = 0
        let num = x1.times(x1).times(&K::from_int(3)).plus(&K::from_rat(b));
        num.negate().divide(&y1.times(&K::from_int(2))).unwrap()
    } else {
        return EPoint::Infinity;
    };
    let x3 = lambda.times(&lambda).negate().minus(x1).minus(x2);
    let y3 = y1.plus(&lambda.times(&x3.minus(x1)));
    EPoint::Affine(x3, y3)
}

/// The coherent map π∘σ⁻¹ of an elliptic plane cubic through the
/// corresponding rational points p and q.
pub fn coherent_map_elliptic(
    hc: &PlaneCurve,
    p: &[Rat; 2],
    q: &[Rat; 2],
) -> Result<Map2P1, CoherentError> {
    if p == q {
        return Err(CoherentError::SamePoint);
    }
    let model = cubic_model(hc, p)?;
    let map = coherent_map_from_model(&model, q)?;
    match fiber_degree(&map)? {
        2 => Ok(map),
        k => Err(CoherentError::WrongFiberDegree(k)),
    }
}

/// Projection from r = third point of the chord through σ⁻¹(p) = ∞ and σ⁻¹(q).
pub fn coherent_map_from_model(model: &CubicModel, q: &[Rat; 2]) -> Result<Map2P1, CoherentError> {
    let qe = model.to_e_at(q)?;
    let r = chord_third_point(&model.b, &EPoint::Infinity, &qe);
    let [xr, yr] = &model.to_e;
    let (num, den) = match r {
        // σ⁻¹(q) = ∞ as well: project along verticals
        EPoint::Infinity => (xr.num.clone(), xr.den.clone()),
        EPoint::Affine(rx, ry) => {
            // (y − ry)/(x − rx) with x = xn/xd, y = yn/yd
            let num = yr.num.sub_ref(&yr.den.scale(&ry)).mul_ref(&xr.den);
            let den = xr.num.sub_ref(&xr.den.scale(&rx)).mul_ref(&yr.den);
            (num, den)
        }
    };
    let red = reduce(num, den);
    Ok(Map2P1 { num: red.num.primitive(), den: red.den.primitive(), source: model.curve.clone() })
}

/// Value of a map to P¹ at a rational curve point, `None` for ∞.
pub fn map_value(m: &Map2P1, pt: &[Rat; 2]) -> Result<Option<Rat>, CoherentError> {
    ratio_at(&Ratio { num: m.num.clone(), den: m.den.clone() }, &m.source.g, pt)
}
