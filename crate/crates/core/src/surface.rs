//! The input surface: homogenization, cyclicity of the absolute conic,
//! rational regular points and plane sections.

use crate::qpoly::{
    find_bivariate_factor, msquarefree_part, rational_roots, rint, AlgElem, AlgExt, Field, Int,
    MPoly, Rat, Ring, UPoly,
};
use crate::rng::{small_nonzero, small_rat, Rng};
use num_integer::Integer;
use num_traits::Signed;

pub type Point = [Rat; 3];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SurfaceError {
    #[error("the defining polynomial is constant")]
    Constant,
    #[error("no regular rational point of height at most {bound}")]
    NoRationalPointFound { bound: u64 },
    #[error("plane equation is not linear")]
    NotLinear,
    #[error("plane equation is constant")]
    ConstantPlane,
    #[error("the plane is a component of the surface")]
    PlaneInSurface,
    #[error("the plane does not meet the surface")]
    EmptySection,
    #[error("cyclicity disagrees across samples: {0:?}")]
    CyclicityDisagreement(Vec<u32>),
}

/// A reduced algebraic surface f(x,y,z) = 0 over Q.
#[derive(Clone, Debug)]
pub struct Surface {
    f: MPoly<Rat>,
    big_f: MPoly<Rat>,
    grad: [MPoly<Rat>; 3],
    degree: u32,
    reduced_from: Option<MPoly<Rat>>,
}

impl Surface {
    /// Builds the surface, dividing out repeated factors of `f`.
    pub fn new(f: &MPoly<Rat>) -> Result<Self, SurfaceError> {
        if f.is_constant() {
            return Err(SurfaceError::Constant);
        }
        let red = msquarefree_part(f);
        let reduced_from = (red.total_degree() < f.total_degree()).then(|| f.clone());
        let degree = red.total_degree() as u32;
        let grad = [red.partial(0), red.partial(1), red.partial(2)];
        Ok(Surface { big_f: red.homogenize(3), f: red, grad, degree, reduced_from })
    }

    pub fn f(&self) -> &MPoly<Rat> {
        &self.f
    }

    /// Homogenization F in the variables X, Y, Z, W (indices 0..4).
    pub fn homogeneous(&self) -> &MPoly<Rat> {
        &self.big_f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gradient(&self) -> &[MPoly<Rat>; 3] {
        &self.grad
    }

    /// The original input when it had repeated factors.
    pub fn reduced_from(&self) -> Option<&MPoly<Rat>> {
        self.reduced_from.as_ref()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.f.eval(p).is_zero()
    }

    pub fn gradient_at(&self, p: &Point) -> Point {
        [self.grad[0].eval(p), self.grad[1].eval(p), self.grad[2].eval(p)]
    }

    pub fn is_regular_point(&self, p: &Point) -> bool {
        self.contains(p) && self.gradient_at(p).iter().any(|c| !c.is_zero())
    }
}

fn multiplicity_on_omega(fk: &MPoly<AlgElem>, i: &AlgElem, u0: &Rat) -> u32 {
    let one = Rat::from_integer(1.into());
    let u2 = u0 * u0;
    let pt = [
        AlgElem::rational(&one - &u2),
        i.times(&AlgElem::rational(&one + &u2)),
        AlgElem::rational(u0 * rint(2)),
        AlgElem::rational(rint(0)),
    ];
    let images: Vec<MPoly<AlgElem>> = pt
        .iter()
        .enumerate()
        .map(|(j, c)| MPoly::var(j).add_ref(&MPoly::constant(c.clone())))
        .collect();
    fk.compose(&images).order() as u32
}

/// Multiplicity of the absolute conic on the projective closure of `s`.
pub fn cyclicity(s: &Surface, trials: usize, rng: &mut Rng) -> Result<u32, SurfaceError> {
    let qi = AlgExt::sqrt(&rint(-1)).expect("x^2+1 is irreducible");
    let i = AlgElem::generator(&qi);
    let fk = s.big_f.map_coeffs(|c| AlgElem::rational(c.clone()));
    // ω(u) = (1-u^2 : i(1+u^2) : 2u : 0)
    let u = UPoly::<AlgElem>::x();
    let u2 = u.mul_ref(&u);
    let one = UPoly::<AlgElem>::one();
    let omega = [
        one.sub_ref(&u2),
        one.add_ref(&u2).scale(&i),
        u.scale(&AlgElem::from_int(2)),
        UPoly::zero(),
    ];
    if !fk.eval_in(&omega, |c| UPoly::constant(c.clone())).is_zero() {
        return Ok(0);
    }
    let trials = trials.max(1);
    let sample = |rng: &mut Rng| -> Vec<u32> {
        (0..trials)
            .map(|_| multiplicity_on_omega(&fk, &i, &small_rat(rng, 50)))
            .collect()
    };
    let first = sample(rng);
    debug_assert!(first.iter().all(|&m| m >= 1));
    if first.iter().all(|&m| m == first[0]) {
        return Ok(first[0]);
    }
    let m = *first.iter().min().unwrap();
    let second = sample(rng);
    if second.iter().all(|&k| k == m) {
        return Ok(m);
    }
    Err(SurfaceError::CyclicityDisagreement(first.into_iter().chain(second).collect()))
}

/// Rationals of height at most `bound`, grouped by height.
fn rationals_by_height(bound: u64) -> Vec<Vec<Rat>> {
    let mut out = vec![Vec::new(); bound as usize + 1];
    out[1].push(rint(0));
    for d in 1..=bound as i64 {
        for n in 1..=bound as i64 {
            if n.gcd(&d) != 1 {
                continue;
            }
            let h = n.max(d) as usize;
            let r = Rat::new(Int::from(n), Int::from(d));
            out[h].push(r.clone());
            out[h].push(-r);
        }
    }
    out
}

/// Regular rational points of `s` found on axis-parallel lines through
/// rational points of bounded height, in order of increasing height.
/// The hint, when valid, comes first.
pub fn regular_rational_points<'a>(
    s: &'a Surface,
    bound: u64,
    hint: Option<&Point>,
) -> impl Iterator<Item = Point> + 'a {
    let hint = hint.filter(|p| s.is_regular_point(p)).cloned();
    let by_h = rationals_by_height(bound.max(1));
    let coeffs: Vec<UPoly<MPoly<Rat>>> = (0..3).map(|k| s.f.as_univariate(k)).collect();
    let mut pairs: Vec<(Rat, Rat)> = Vec::new();
    let mut upto: Vec<Rat> = Vec::new();
    let mut lines = Vec::new();
    for group in by_h.iter().skip(1) {
        let old = upto.len();
        upto.extend(group.iter().cloned());
        for (ia, a) in upto.iter().enumerate() {
            for (ib, b) in upto.iter().enumerate() {
                if ia >= old || ib >= old {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        for (a, b) in pairs.drain(..) {
            for k in (0..3).rev() {
                lines.push((k, a.clone(), b.clone()));
            }
        }
    }
    hint.into_iter().chain(lines.into_iter().flat_map(move |(k, a, b)| {
        let mut pt = [rint(0), rint(0), rint(0)];
        let others: Vec<usize> = (0..3).filter(|&j| j != k).collect();
        pt[others[0]] = a;
        pt[others[1]] = b;
        let line = UPoly::new(coeffs[k].coeffs().iter().map(|c| c.eval(&pt)).collect());
        let candidates: Vec<Rat> = if line.is_zero() {
            (0..8).map(|j| rint(j / 2 * if j % 2 == 0 { 1 } else { -1 })).collect()
        } else {
            rational_roots(&line)
        };
        candidates
            .into_iter()
            .map(|t| {
                let mut q = pt.clone();
                q[k] = t;
                q
            })
            .filter(|q| s.is_regular_point(q))
            .collect::<Vec<_>>()
    }))
}

pub fn find_regular_rational_point(
    s: &Surface,
    bound: u64,
    hint: Option<&Point>,
) -> Result<Point, SurfaceError> {
    regular_rational_points(s, bound, hint)
        .next()
        .ok_or(SurfaceError::NoRationalPointFound { bound })
}

/// Affine coordinates origin + u·d1 + v·d2 on a plane.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneFrame {
    pub origin: Point,
    pub d1: Point,
    pub d2: Point,
}

fn linear_parts(h: &MPoly<Rat>) -> Result<([Rat; 3], Rat), SurfaceError> {
    if h.total_degree() > 1 || h.nvars_used() > 3 {
        return Err(SurfaceError::NotLinear);
    }
    let n = [h.coeff(&[1]), h.coeff(&[0, 1]), h.coeff(&[0, 0, 1])];
    if n.iter().all(|c| c.is_zero()) {
        return Err(SurfaceError::ConstantPlane);
    }
    Ok((n, h.constant_term()))
}

fn primitive_int_vector(v: [Rat; 3]) -> Point {
    let den = v.iter().fold(Int::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Int> = v.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut g = ints.iter().fold(Int::from(0), |acc, c| acc.gcd(c));
    if ints.iter().find(|c| c.sign() != num_bigint::Sign::NoSign).is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    let out: Vec<Rat> = ints.iter().map(|c| Rat::new(c.clone(), g.clone())).collect();
    [out[0].clone(), out[1].clone(), out[2].clone()]
}

impl PlaneFrame {
    /// Frame for the plane h = 0 with integer directions spanning the kernel
    /// of its linear part. `origin` is used when it lies on the plane.
    pub fn for_plane(h: &MPoly<Rat>, origin: Option<&Point>) -> Result<Self, SurfaceError> {
        let (n, e) = linear_parts(h)?;
        let k = (0..3).rev().find(|&i| !n[i].is_zero()).unwrap();
        let origin = match origin {
            Some(p) if h.eval(p).is_zero() => p.clone(),
            _ => {
                let mut o = [rint(0), rint(0), rint(0)];
                o[k] = -(&e / &n[k]);
                o
            }
        };
        let dirs: Vec<Point> = (0..3)
            .filter(|&j| j != k)
            .map(|j| {
                let mut d = [rint(0), rint(0), rint(0)];
                d[j] = n[k].clone();
                d[k] = -n[j].clone();
                primitive_int_vector(d)
            })
            .collect();
        Ok(PlaneFrame { origin, d1: dirs[0].clone(), d2: dirs[1].clone() })
    }

    pub fn point(&self, u: &Rat, v: &Rat) -> Point {
        self.point_in(u, v)
    }

    /// origin + u·d1 + v·d2 over any ring containing Q.
    pub fn point_in<R: Ring>(&self, u: &R, v: &R) -> [R; 3] {
        let c = |i: usize| {
            R::from_rat(&self.origin[i])
                .plus(&u.times(&R::from_rat(&self.d1[i])))
                .plus(&v.times(&R::from_rat(&self.d2[i])))
        };
        [c(0), c(1), c(2)]
    }

    /// x, y, z as linear polynomials in u (index 0) and v (index 1).
    pub fn images(&self) -> [MPoly<Rat>; 3] {
        let c = |i: usize| {
            MPoly::constant(self.origin[i].clone())
                .add_ref(&MPoly::var(0).scale(&self.d1[i]))
                .add_ref(&MPoly::var(1).scale(&self.d2[i]))
        };
        [c(0), c(1), c(2)]
    }

    /// Plane coordinates (u, v) of a point on the plane.
    pub fn coords_of<K: Field>(&self, p: &[K; 3]) -> Option<(K, K)> {
        let r = |x: &Rat| K::from_rat(x);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = &self.d1[i] * &self.d2[j] - &self.d1[j] * &self.d2[i];
            if det.is_zero() {
                continue;
            }
            let pi = p[i].minus(&r(&self.origin[i]));
            let pj = p[j].minus(&r(&self.origin[j]));
            let inv = r(&det).inverse().unwrap();
            let u = pi.times(&r(&self.d2[j])).minus(&pj.times(&r(&self.d2[i]))).times(&inv);
            let v = pj.times(&r(&self.d1[i])).minus(&pi.times(&r(&self.d1[j]))).times(&inv);
            let back = self.point_in(&u, &v);
            return (back == *p).then_some((u, v));
        }
        None
    }
}

/// A plane section: g(u,v) ∝ f(origin + u·d1 + v·d2).
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    pub g: MPoly<Rat>,
    pub frame: PlaneFrame,
    pub h: MPoly<Rat>,
}

impl PlaneCurve {
    /// A curve given directly in plane coordinates, placed in z = 0.
    pub fn from_uv(g: MPoly<Rat>) -> Self {
        let frame = PlaneFrame {
            origin: [rint(0), rint(0), rint(0)],
            d1: [rint(1), rint(0), rint(0)],
            d2: [rint(0), rint(1), rint(0)],
        };
        PlaneCurve { g, frame, h: MPoly::var(2) }
    }

    pub fn degree(&self) -> u32 {
        self.g.total_degree().max(0) as u32
    }
}

pub fn plane_section(s: &Surface, h: &MPoly<Rat>) -> Result<PlaneCurve, SurfaceError> {
    plane_section_at(s, h, None)
}

/// Plane section with the frame origin placed at `origin` when it lies on h = 0.
pub fn plane_section_at(
    s: &Surface,
    h: &MPoly<Rat>,
    origin: Option<&Point>,
) -> Result<PlaneCurve, SurfaceError> {
    let frame = PlaneFrame::for_plane(h, origin)?;
    let g = s.f.compose(&frame.images());
    if g.is_zero() {
        return Err(SurfaceError::PlaneInSurface);
    }
    if g.is_constant() {
        return Err(SurfaceError::EmptySection);
    }
    Ok(PlaneCurve { g: g.primitive(), frame, h: h.clone() })
}

/// Random plane a(x-p1) + b(y-p2) + c(z-p3) = 0 through `p` with small
/// nonzero integer normal.
pub fn random_plane_through(p: &Point, rng: &mut Rng, bound: i64) -> MPoly<Rat> {
    (0..3).fold(MPoly::zero(), |acc, i| {
        let a = rint(small_nonzero(rng, bound));
        acc.add_ref(&MPoly::var(i).sub_ref(&MPoly::constant(p[i].clone())).scale(&a))
    })
}

/// Exact irreducibility of the section over Q.
pub fn section_irreducible(c: &PlaneCurve) -> bool {
    if c.g.total_degree() < 1 {
        return false;
    }
    if msquarefree_part(&c.g).total_degree() < c.g.total_degree() {
        return false;
    }
    find_bivariate_factor(&c.g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{qconst, qvar, rat};
    use crate::rng::seeded;

    fn sphere() -> MPoly<Rat> {
        let (x, y, z) = (qvar(0), qvar(1), qvar(2));
        &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) - &qconst(1)
    }

    fn example1() -> MPoly<Rat> {
        let (x, y, z) = (qvar(0), qvar(1), qvar(2));
        let x2 = &x * &x;
        let terms = [
            &x2 * &x,
            &x * &(&y * &y),
            &x * &(&z * &z),
            x2.scale(&rint(2)),
            (&y * &y).scale(&rint(3)),
            &z * &z,
            x.scale(&rint(-5)),
            qconst(-6),
        ];
        terms.iter().fold(MPoly::zero(), |a, t| a.add_ref(t))
    }

    #[test]
    fn cyclicity_examples() {
        let mut rng = seeded(1);
        let s = Surface::new(&sphere()).unwrap();
        assert_eq!(cyclicity(&s, 3, &mut rng).unwrap(), 1);
        let e1 = Surface::new(&example1()).unwrap();
        assert_eq!(cyclicity(&e1, 3, &mut rng).unwrap(), 1);
        let plane = Surface::new(&qvar(0)).unwrap();
        assert_eq!(cyclicity(&plane, 3, &mut rng).unwrap(), 0);
        // (x^2+y^2+z^2)^2 + x: Ω is a double curve
        let r2 = &(&(&qvar(0) * &qvar(0)) + &(&qvar(1) * &qvar(1))) + &(&qvar(2) * &qvar(2));
        let dupin = &(&r2 * &r2) + &qvar(0);
        assert_eq!(cyclicity(&Surface::new(&dupin).unwrap(), 3, &mut rng).unwrap(), 2);
    }

    #[test]
    fn regular_points() {
        let e1 = Surface::new(&example1()).unwrap();
        let hint = [rat(3, 2), rat(0, 1), rat(3, 2)];
        assert_eq!(find_regular_rational_point(&e1, 20, Some(&hint)).unwrap(), hint);
        let s = Surface::new(&sphere()).unwrap();
        let p = find_regular_rational_point(&s, 20, None).unwrap();
        assert!(s.is_regular_point(&p));
        let empty = &sphere() + &qconst(2);
        let e = Surface::new(&empty).unwrap();
        assert_eq!(
            find_regular_rational_point(&e, 4, None),
            Err(SurfaceError::NoRationalPointFound { bound: 4 })
        );
    }

    #[test]
    fn sphere_section_by_z() {
        let s = Surface::new(&sphere()).unwrap();
        let c = plane_section(&s, &qvar(2)).unwrap();
        let (u, v) = (qvar(0), qvar(1));
        assert_eq!(c.g, &(&(&u * &u) + &(&v * &v)) - &qconst(1));
        assert_eq!(c.frame.origin, [rint(0), rint(0), rint(0)]);
        assert_eq!(c.frame.d1, [rint(1), rint(0), rint(0)]);
        assert_eq!(c.frame.d2, [rint(0), rint(1), rint(0)]);
        assert_eq!(plane_section(&s, &qconst(5)).unwrap_err(), SurfaceError::ConstantPlane);
    }

    #[test]
    fn example1_section_is_cubic_on_the_plane() {
        let s = Surface::new(&example1()).unwrap();
        let h = &(&qvar(0) - &qvar(2)) + &qconst(3);
        let c = plane_section(&s, &h).unwrap();
        assert_eq!(c.degree(), 3);
        let ratio = s.f().compose(&c.frame.images());
        assert!(ratio.proportional(&c.g));
        for (u, v) in [(rat(1, 2), rat(-3, 1)), (rat(2, 1), rat(5, 7))] {
            assert!(h.eval(&c.frame.point(&u, &v)).is_zero());
        }
    }

    #[test]
    fn irreducibility() {
        let (u, v) = (qvar(0), qvar(1));
        let circle = PlaneCurve::from_uv(&(&(&u * &u) + &(&v * &v)) - &qconst(1));
        assert!(section_irreducible(&circle));
        let pair = PlaneCurve::from_uv(&(&u + &v) * &(&u - &v));
        assert!(!section_irreducible(&pair));
    }

    #[test]
    fn frame_coordinates_round_trip() {
        let h = &(&qvar(0).scale(&rint(2)) - &qvar(1)) + &qvar(2).scale(&rat(1, 3));
        let f = PlaneFrame::for_plane(&h, None).unwrap();
        let p = f.point(&rat(3, 5), &rat(-2, 1));
        assert_eq!(f.coords_of(&p), Some((rat(3, 5), rat(-2, 1))));
    }
}
