//! Plane curve analysis: singular points, delta invariants, genus,
//! adjoint curves and degree-2 maps to the projective line.

use std::sync::Arc;

use crate::qpoly::linalg::nullspace;
use crate::qpoly::mpoly::exp_of;
use crate::qpoly::zpoly::rat_poly_gcd;
use crate::qpoly::{
    factor_univariate, rational_roots, resultant, rint, AlgElem, AlgExt, Field, MPoly, QpolyError,
    Rat, Ring, UPoly,
};
use crate::rng::{seeded, small_int};
use crate::surface::PlaneCurve;

const MAX_BLOWUP_DEPTH: usize = 48;
const POSITION_ATTEMPTS: usize = 24;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CurveError {
    #[error("curve is not reduced")]
    NotReduced,
    #[error("curve is reducible")]
    Reducible,
    #[error("blow-up recursion exceeded depth {0}")]
    DepthExceeded(usize),
    #[error("an infinitely near point needs a tower of algebraic extensions")]
    UnsupportedTower,
    #[error("no projective frame in general position found")]
    NoGeneralPosition,
    #[error("genus {0} is outside the range of this operation")]
    GenusOutOfRange(i64),
    #[error("adjoint space has dimension {found}, expected {expected}")]
    AdjointDimension { expected: usize, found: usize },
    #[error("curve is not hyperelliptic")]
    NotHyperelliptic,
    #[error("no smooth rational point found on the curve")]
    NoSmoothPoint,
    #[error("map has fiber degree {0}, expected 2")]
    WrongFiberDegree(usize),
    #[error("map is constant on the curve")]
    ConstantMap,
    #[error(transparent)]
    Algebra(#[from] QpolyError),
}

/// A conjugate class of singular points of the projective closure.
#[derive(Clone, Debug)]
pub struct SingCluster {
    /// Projective coordinates (u : v : w) of one representative.
    pub point: [AlgElem; 3],
    /// Defining extension of the representative, absent for rational points.
    pub ext: Option<Arc<AlgExt>>,
    pub at_infinity: bool,
    pub multiplicity: u32,
    /// Delta of the whole cluster (per-point delta times cluster size).
    pub delta: u32,
    pub cluster_size: usize,
}

/// A rational map from a plane curve to P¹, (u,v) ↦ (num : den).
#[derive(Clone, Debug)]
pub struct Map2P1 {
    pub num: MPoly<Rat>,
    pub den: MPoly<Rat>,
    pub source: PlaneCurve,
}

type Mat3 = [[Rat; 3]; 3];

fn identity() -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| rint((i == j) as i64)))
}

fn det3(m: &Mat3) -> Rat {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1];
    &m[0][0] * minor(1, 2, 1, 2) - &m[0][1] * minor(1, 2, 0, 2) + &m[0][2] * minor(1, 2, 0, 1)
}

fn inverse3(m: &Mat3) -> Mat3 {
    let d = det3(m);
    let cof = |i: usize, j: usize| {
        let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
        let v = &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]];
        if (i + j).is_multiple_of(2) {
            v
        } else {
            -v
        }
    };
    std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i) / &d))
}

/// Homogenizes to exactly degree `deg` with the new variable at index `h`.
fn homogenize_to<K: Ring>(p: &MPoly<K>, deg: u32, h: usize) -> MPoly<K> {
    MPoly::from_terms(p.terms().map(|(e, c)| {
        let t: u32 = e.iter().sum();
        let mut e2 = e.clone();
        e2.resize(e2.len().max(h + 1), 0);
        e2[h] = deg - t;
        (e2, c.clone())
    }))
}

/// p(M·(u, v, 1)) for a polynomial of degree at most `deg`.
fn apply_projective(p: &MPoly<Rat>, deg: u32, m: &Mat3) -> MPoly<Rat> {
    let ph = homogenize_to(p, deg, 2);
    let images: Vec<MPoly<Rat>> = (0..3)
        .map(|i| {
            MPoly::constant(m[i][2].clone())
                .add_ref(&MPoly::var(0).scale(&m[i][0]))
                .add_ref(&MPoly::var(1).scale(&m[i][1]))
        })
        .collect();
    ph.compose(&images)
}

fn lift(p: &MPoly<Rat>) -> MPoly<AlgElem> {
    p.map_coeffs(|c| AlgElem::rational(c.clone()))
}

fn monomials_upto(d: i64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for t in 0..=d {
        for i in (0..=t).rev() {
            out.push(vec![i as u32, (t - i) as u32]);
        }
    }
    out
}

/// The specialization g(a, v) as a univariate polynomial over K.
fn at_u(g: &MPoly<Rat>, a: &AlgElem) -> UPoly<AlgElem> {
    let gv = g.as_univariate(1);
    UPoly::new(
        gv.coeffs()
            .iter()
            .map(|c| c.eval_in(&[a.clone(), AlgElem::zero()], |x| AlgElem::rational(x.clone())))
            .collect(),
    )
}

fn general_position(g: &MPoly<Rat>, d: u32) -> bool {
    let top = g.homogeneous_part(d).substitute(0, &MPoly::one());
    let q = top.to_upoly(1).unwrap_or_else(UPoly::zero);
    q.deg() == d as isize && rat_poly_gcd(&q, &q.derivative()).deg() == 0
}

struct AffinePoint {
    ext: Option<Arc<AlgExt>>,
    u: AlgElem,
    v: AlgElem,
    size: usize,
}

/// Affine singular points of a curve in general position, or `None` when
/// two of them share a u-coordinate.
fn affine_singular_points(g: &MPoly<Rat>) -> Result<Option<Vec<AffinePoint>>, CurveError> {
    let gu = g.partial(0);
    let gv = g.partial(1);
    let r1 = resultant(g, &gu, 1)?;
    let r2 = resultant(g, &gv, 1)?;
    if r1.is_zero() || r2.is_zero() {
        return Err(CurveError::NotReduced);
    }
    let r = rat_poly_gcd(&r1.to_upoly(0).unwrap(), &r2.to_upoly(0).unwrap());
    let mut out = Vec::new();
    if r.deg() <= 0 {
        return Ok(Some(out));
    }
    for (phi, _) in factor_univariate(&r)?.factors {
        let (ext, alpha) = if phi.deg() == 1 {
            (None, AlgElem::rational(phi.coeff(0).negate()))
        } else {
            let e = AlgExt::new(&phi)?;
            (Some(e.clone()), AlgElem::generator(&e))
        };
        let common = at_u(g, &alpha).gcd(&at_u(&gu, &alpha)).gcd(&at_u(&gv, &alpha));
        let common = if common.deg() > 1 { common.squarefree_part() } else { common };
        match common.deg() {
            0 => continue,
            1 => {
                let m = common.monic();
                out.push(AffinePoint { ext, u: alpha, v: m.coeff(0).negate(), size: phi.deg() as usize });
            }
            _ => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn push_rows(rows: &mut Vec<Vec<Rat>>, row: &[AlgElem]) {
    let n = row.iter().filter_map(|a| a.ext()).map(|e| e.degree()).max().unwrap_or(1);
    for l in 0..n {
        rows.push(
            row.iter()
                .map(|a| a.coords().get(l).cloned().unwrap_or_else(|| rint(0)))
                .collect(),
        );
    }
}

fn translate(p: &MPoly<AlgElem>, a: &AlgElem, b: &AlgElem) -> MPoly<AlgElem> {
    p.compose(&[
        MPoly::var(0).add_ref(&MPoly::constant(a.clone())),
        MPoly::var(1).add_ref(&MPoly::constant(b.clone())),
    ])
}

/// Substitutes y = x·y and divides by x^k, dropping terms of lower x-order.
fn blow_up(p: &MPoly<AlgElem>, k: u32) -> MPoly<AlgElem> {
    let q = p.compose(&[MPoly::var(0), MPoly::var(0).mul_ref(&MPoly::var(1))]);
    MPoly::from_terms(q.terms().filter(|(e, _)| exp_of(e, 0) >= k).map(|(e, c)| {
        (vec![exp_of(e, 0) - k, exp_of(e, 1)], c.clone())
    }))
}

/// Blow-up recursion collecting the adjoint conditions on `basis`.
struct Resolver {
    rows: Vec<Vec<Rat>>,
}

impl Resolver {
    /// Returns (multiplicity, delta) of the point at the origin of `h`.
    fn resolve(
        &mut self,
        h: &MPoly<AlgElem>,
        basis: &[MPoly<AlgElem>],
        rational_field: bool,
        depth: usize,
    ) -> Result<(u32, u32), CurveError> {
        let m = h.order().max(0) as u32;
        if m <= 1 {
            return Ok((m, 0));
        }
        if depth > MAX_BLOWUP_DEPTH {
            return Err(CurveError::DepthExceeded(MAX_BLOWUP_DEPTH));
        }
        for e in monomials_upto(m as i64 - 2) {
            let row: Vec<AlgElem> = basis.iter().map(|b| b.coeff(&e)).collect();
            push_rows(&mut self.rows, &row);
        }
        let hm = h.homogeneous_part(m);
        let c = (0..=m as i64)
            .find(|&c| !hm.eval(&[AlgElem::from_int(c), AlgElem::one()]).is_zero())
            .unwrap();
        let shear = |p: &MPoly<AlgElem>| {
            if c == 0 {
                p.clone()
            } else {
                p.compose(&[
                    MPoly::var(0).add_ref(&MPoly::var(1).scale(&AlgElem::from_int(c))),
                    MPoly::var(1),
                ])
            }
        };
        let h1 = blow_up(&shear(h), m);
        let basis1: Vec<MPoly<AlgElem>> = basis.iter().map(|b| blow_up(&shear(b), m - 1)).collect();
        let on_exceptional = UPoly::new(
            (0..=m as usize).map(|j| h1.coeff(&[0, j as u32])).collect::<Vec<_>>(),
        );
        let mut delta = m * (m - 1) / 2;
        for (fac, e) in on_exceptional.squarefree_decomposition() {
            if e < 2 || fac.deg() < 1 {
                continue;
            }
            if fac.deg() == 1 {
                let r = fac.coeff(0).negate().divide(&fac.coeff(1)).unwrap();
                delta += self.descend(&h1, &basis1, &r, rational_field, depth)?;
                continue;
            }
            let coeffs: Option<Vec<Rat>> = fac.coeffs().iter().map(|a| a.as_rational()).collect();
            let Some(coeffs) = coeffs else {
                return Err(CurveError::UnsupportedTower);
            };
            for (phi, _) in factor_univariate(&UPoly::new(coeffs))?.factors {
                if phi.deg() == 1 {
                    let r = AlgElem::rational(phi.coeff(0).negate());
                    delta += self.descend(&h1, &basis1, &r, rational_field, depth)?;
                } else if rational_field {
                    let ext = AlgExt::new(&phi)?;
                    let r = AlgElem::generator(&ext);
                    delta += phi.deg() as u32 * self.descend(&h1, &basis1, &r, false, depth)?;
                } else {
                    return Err(CurveError::UnsupportedTower);
                }
            }
        }
        Ok((m, delta))
    }

    fn descend(
        &mut self,
        h1: &MPoly<AlgElem>,
        basis1: &[MPoly<AlgElem>],
        r: &AlgElem,
        rational_field: bool,
        depth: usize,
    ) -> Result<u32, CurveError> {
        let z = AlgElem::zero();
        let h2 = translate(h1, &z, r);
        let b2: Vec<MPoly<AlgElem>> = basis1.iter().map(|b| translate(b, &z, r)).collect();
        let rational = rational_field && r.ext().is_none();
        Ok(self.resolve(&h2, &b2, rational, depth + 1)?.1)
    }
}

/// Delta invariant of the curve h = 0 at the origin.
pub fn delta_at_origin(h: &MPoly<Rat>) -> Result<u32, CurveError> {
    let mut r = Resolver { rows: Vec::new() };
    Ok(r.resolve(&lift(h), &[], true, 0)?.1)
}

/// Singularities, genus and adjoint conditions of a plane curve.
#[derive(Clone, Debug)]
pub struct CurveAnalysis {
    pub degree: u32,
    pub clusters: Vec<SingCluster>,
    pub genus: i64,
    inverse: Mat3,
    adjoint_rows: Vec<Vec<Rat>>,
}

impl CurveAnalysis {
    pub fn total_delta(&self) -> u32 {
        self.clusters.iter().map(|c| c.delta).sum()
    }
}

fn original_point(m: &Mat3, p: &AffinePoint) -> ([AlgElem; 3], bool) {
    let x = [p.u.clone(), p.v.clone(), AlgElem::one()];
    let mut y: [AlgElem; 3] = std::array::from_fn(|i| {
        (0..3).fold(AlgElem::zero(), |acc, j| acc.plus(&x[j].times(&AlgElem::rational(m[i][j].clone()))))
    });
    if y[2].is_zero() {
        let k = if y[0].is_zero() { 1 } else { 0 };
        let inv = y[k].inverse().unwrap();
        y = std::array::from_fn(|i| y[i].times(&inv));
        (y, true)
    } else {
        let inv = y[2].inverse().unwrap();
        (std::array::from_fn(|i| y[i].times(&inv)), false)
    }
}

fn try_position(g: &MPoly<Rat>, d: u32, m: &Mat3) -> Result<Option<CurveAnalysis>, CurveError> {
    let gt = apply_projective(g, d, m);
    if !general_position(&gt, d) {
        return Ok(None);
    }
    let Some(points) = affine_singular_points(&gt)? else {
        return Ok(None);
    };
    let monos = monomials_upto(d as i64 - 3);
    let glift = lift(&gt);
    let mut resolver = Resolver { rows: Vec::new() };
    let mut clusters = Vec::new();
    for p in &points {
        let h = translate(&glift, &p.u, &p.v);
        let basis: Vec<MPoly<AlgElem>> = monos
            .iter()
            .map(|e| translate(&MPoly::monomial(AlgElem::one(), e.clone()), &p.u, &p.v))
            .collect();
        let (mult, delta) = resolver.resolve(&h, &basis, p.ext.is_none(), 0)?;
        if mult < 2 {
            continue;
        }
        let (point, at_infinity) = original_point(m, p);
        clusters.push(SingCluster {
            point,
            ext: p.ext.clone(),
            at_infinity,
            multiplicity: mult,
            delta: delta * p.size as u32,
            cluster_size: p.size,
        });
    }
    let arith = (d as i64 - 1) * (d as i64 - 2) / 2;
    let genus = arith - clusters.iter().map(|c| c.delta as i64).sum::<i64>();
    if genus < 0 {
        return Err(CurveError::Reducible);
    }
    Ok(Some(CurveAnalysis {
        degree: d,
        clusters,
        genus,
        inverse: inverse3(m),
        adjoint_rows: resolver.rows,
    }))
}

/// Full singularity analysis in a projective frame where the curve meets
/// the line at infinity transversally.
pub fn analyze(c: &PlaneCurve) -> Result<CurveAnalysis, CurveError> {
    let d = c.degree();
    if d == 0 {
        return Err(CurveError::NotReduced);
    }
    let mut rng = seeded(0x5eed ^ d as u64);
    for attempt in 0..POSITION_ATTEMPTS {
        let m = if attempt == 0 {
            identity()
        } else {
            let b = 1 + attempt as i64 / 4;
            let m: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| rint(small_int(&mut rng, b))));
            if det3(&m) == rint(0) {
                continue;
            }
            m
        };
        if let Some(a) = try_position(&c.g, d, &m)? {
            return Ok(a);
        }
    }
    Err(CurveError::NoGeneralPosition)
}

pub fn singular_points(c: &PlaneCurve) -> Result<Vec<SingCluster>, CurveError> {
    Ok(analyze(c)?.clusters)
}

pub fn delta_invariant(_c: &PlaneCurve, cluster: &SingCluster) -> u32 {
    cluster.delta
}

pub fn genus(c: &PlaneCurve) -> Result<i64, CurveError> {
    Ok(analyze(c)?.genus)
}

/// Basis of the adjoint curves of degree d−3, in the curve's own coordinates.
pub fn adjoint_basis(c: &PlaneCurve) -> Result<Vec<MPoly<Rat>>, CurveError> {
    let a = analyze(c)?;
    adjoints_from(&a)
}

fn adjoints_from(a: &CurveAnalysis) -> Result<Vec<MPoly<Rat>>, CurveError> {
    if a.genus < 1 {
        return Err(CurveError::GenusOutOfRange(a.genus));
    }
    let d = a.degree;
    let monos = monomials_upto(d as i64 - 3);
    let kernel = nullspace(&a.adjoint_rows, monos.len());
    if kernel.len() != a.genus as usize {
        return Err(CurveError::AdjointDimension { expected: a.genus as usize, found: kernel.len() });
    }
    Ok(kernel
        .iter()
        .map(|v| {
            let at = MPoly::from_terms(monos.iter().cloned().zip(v.iter().cloned()));
            apply_projective(&at, d - 3, &a.inverse).primitive()
        })
        .collect())
}

/// Dimension of the space of quadratic relations among the adjoints modulo g.
fn quadric_relations(g: &MPoly<Rat>, adj: &[MPoly<Rat>]) -> usize {
    let n = adj.len();
    let mut cols: Vec<MPoly<Rat>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            cols.push(adj[i].mul_ref(&adj[j]));
        }
    }
    let nq = cols.len();
    let d = g.total_degree();
    for e in monomials_upto(2 * (d - 3) - d) {
        cols.push(g.mul_ref(&MPoly::monomial(rint(-1), e)));
    }
    let mut keys: Vec<Vec<u32>> = cols.iter().flat_map(|c| c.terms().map(|(e, _)| e.clone())).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Rat>> = keys.iter().map(|e| cols.iter().map(|c| c.coeff(e)).collect()).collect();
    let kernel = nullspace(&rows, cols.len());
    // the B-part is determined by the quadric part
    debug_assert!(kernel.iter().all(|v| v[..nq].iter().any(|x| !x.is_zero())));
    kernel.len()
}

fn is_smooth_point(g: &MPoly<Rat>, p: &[Rat; 2]) -> bool {
    g.eval(p).is_zero() && (!g.partial(0).eval(p).is_zero() || !g.partial(1).eval(p).is_zero())
}

/// A smooth rational point: the origin if possible, else a search along
/// vertical and horizontal lines.
pub fn find_smooth_rational_point(g: &MPoly<Rat>, bound: i64) -> Option<[Rat; 2]> {
    let origin = [rint(0), rint(0)];
    if is_smooth_point(g, &origin) {
        return Some(origin);
    }
    for hgt in 1..=bound {
        for n in -hgt..=hgt {
            for den in 1..=hgt {
                if n.abs().max(den) != hgt {
                    continue;
                }
                let a = Rat::new(n.into(), den.into());
                for var in [0usize, 1] {
                    let line = g.substitute(var, &MPoly::constant(a.clone()));
                    let Some(q) = line.to_upoly(1 - var) else { continue };
                    if q.is_zero() {
                        continue;
                    }
                    for r in rational_roots(&q) {
                        let mut p = [rint(0), rint(0)];
                        p[var] = a.clone();
                        p[1 - var] = r;
                        if is_smooth_point(g, &p) {
                            return Some(p);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Truncated power series (u(s), v(s)) of the branch through a smooth point.
pub fn local_parametrization(g: &MPoly<Rat>, p: &[Rat; 2], n: usize) -> (UPoly<Rat>, UPoly<Rat>) {
    let gv = g.partial(1).eval(p);
    let (free, dep) = if gv.is_zero() { (1, 0) } else { (0, 1) };
    let slope = g.partial(dep).eval(p);
    let trunc = |q: UPoly<Rat>| UPoly::new(q.coeffs().iter().take(n).cloned().collect());
    let mut w = UPoly::<Rat>::zero();
    let s = UPoly::new(vec![p[free].clone(), rint(1)]);
    for k in 1..n {
        let mut pt = [UPoly::zero(), UPoly::zero()];
        pt[free] = s.clone();
        pt[dep] = w.add_ref(&UPoly::constant(p[dep].clone()));
        let r = trunc(g.eval_in(&pt, |c| UPoly::constant(c.clone())));
        let rk = r.coeff(k);
        w = w.sub_ref(&UPoly::monomial(rk / &slope, k));
    }
    let other = w.add_ref(&UPoly::constant(p[dep].clone()));
    if free == 0 {
        (s, other)
    } else {
        (other, s)
    }
}

fn series_of(a: &MPoly<Rat>, us: &UPoly<Rat>, vs: &UPoly<Rat>, n: usize) -> Vec<Rat> {
    let v = a.eval_in(&[us.clone(), vs.clone()], |c| UPoly::constant(c.clone()));
    (0..n).map(|k| v.coeff(k)).collect()
}

fn combine(coeffs: &[Rat], basis: &[MPoly<Rat>]) -> MPoly<Rat> {
    basis
        .iter()
        .zip(coeffs)
        .fold(MPoly::zero(), |acc, (b, c)| acc.add_ref(&b.scale(c)))
}

/// A degree-2 map to P¹ on a curve of genus ≥ 2, unique up to Aut(P¹).
pub fn hyperelliptic_map(c: &PlaneCurve) -> Result<Map2P1, CurveError> {
    let a = analyze(c)?;
    if a.genus < 2 {
        return Err(CurveError::GenusOutOfRange(a.genus));
    }
    let adj = adjoints_from(&a)?;
    let gen = adj.len();
    let (num, den) = if gen == 2 {
        (adj[0].clone(), adj[1].clone())
    } else {
        if quadric_relations(&c.g, &adj) != (gen - 1) * (gen - 2) / 2 {
            return Err(CurveError::NotHyperelliptic);
        }
        let p = find_smooth_rational_point(&c.g, 12).ok_or(CurveError::NoSmoothPoint)?;
        let n = 2 * gen + 1;
        let (us, vs) = local_parametrization(&c.g, &p, n);
        let series: Vec<Vec<Rat>> = adj.iter().map(|b| series_of(b, &us, &vs, n)).collect();
        let mut best = None;
        for k in 0..n {
            let rows: Vec<Vec<Rat>> = (0..k).map(|i| series.iter().map(|s| s[i].clone()).collect()).collect();
            let ker = nullspace(&rows, gen);
            if ker.len() >= 2 {
                best = Some(ker);
            } else {
                break;
            }
        }
        let ker = best.ok_or(CurveError::NotHyperelliptic)?;
        (combine(&ker[0], &adj), combine(&ker[1], &adj))
    };
    let map = Map2P1 { num: num.primitive(), den: den.primitive(), source: c.clone() };
    match fiber_degree(&map)? {
        2 => Ok(map),
        k => Err(CurveError::WrongFiberDegree(k)),
    }
}

/// Degree of the generic fiber of `m`, from the t-primitive part of
/// Res_v(g, num − t·den).
pub fn fiber_degree(m: &Map2P1) -> Result<usize, CurveError> {
    let g = &m.source.g;
    let d = g.total_degree() as u32;
    let top = g.homogeneous_part(d);
    let c = (0..=d as i64)
        .find(|&c| !top.eval(&[rint(c), rint(1)]).is_zero())
        .unwrap();
    let shear = |p: &MPoly<Rat>| {
        p.compose(&[MPoly::var(0).add_ref(&MPoly::var(1).scale(&rint(c))), MPoly::var(1)])
    };
    let gs = shear(g);
    let pencil = shear(&m.num).sub_ref(&shear(&m.den).mul_ref(&MPoly::var(2)));
    let r = if pencil.degree_in(1) <= 0 {
        // the pencil does not involve v: resultant is pencil^deg_v(g)
        pencil.pow(gs.degree_in(1) as u32)
    } else {
        resultant(&gs, &pencil, 1)?
    };
    if r.is_zero() {
        return Err(CurveError::ConstantMap);
    }
    let mut content = UPoly::<Rat>::zero();
    for k in r.as_univariate(2).coeffs() {
        let kp = k.to_upoly(0).unwrap_or_else(UPoly::zero);
        content = if content.is_zero() { kp } else { rat_poly_gcd(&content, &kp) };
    }
    if r.degree_in(2) <= 0 {
        return Ok(0);
    }
    Ok((r.degree_in(0) - content.deg().max(0) as i64) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{qconst, qvar};

    fn uv() -> (MPoly<Rat>, MPoly<Rat>) {
        (qvar(0), qvar(1))
    }

    #[test]
    fn local_deltas() {
        let (u, v) = uv();
        let node = &(&v * &v) - &(&(&u * &u) * &(&u + &qconst(1)));
        assert_eq!(delta_at_origin(&node).unwrap(), 1);
        let cusp = &(&v * &v) - &u.pow(3);
        assert_eq!(delta_at_origin(&cusp).unwrap(), 1);
        let tacnode = &(&v * &v) - &u.pow(4);
        assert_eq!(delta_at_origin(&tacnode).unwrap(), 2);
        let triple = &u.pow(3) - &(&v.pow(3) + &(&u.pow(4) + &v.pow(4)));
        assert_eq!(delta_at_origin(&triple).unwrap(), 3);
    }

    #[test]
    fn nodal_cubic_and_circle() {
        let (u, v) = uv();
        let node = PlaneCurve::from_uv(&(&v * &v) - &(&(&u * &u) * &(&u + &qconst(1))));
        let cl = singular_points(&node).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].multiplicity, 2);
        assert!(cl[0].point[0].is_zero() && cl[0].point[1].is_zero());
        assert_eq!(genus(&node).unwrap(), 0);
        let circle = PlaneCurve::from_uv(&(&(&u * &u) + &(&v * &v)) - &qconst(1));
        assert!(singular_points(&circle).unwrap().is_empty());
        assert_eq!(genus(&circle).unwrap(), 0);
        assert_eq!(adjoint_basis(&circle).unwrap_err(), CurveError::GenusOutOfRange(0));
    }

    #[test]
    fn smooth_cubic_adjoints_are_constants() {
        let (u, v) = uv();
        let c = PlaneCurve::from_uv(&(&(&v * &v) - &u.pow(3)) - &qconst(1));
        assert_eq!(genus(&c).unwrap(), 1);
        let adj = adjoint_basis(&c).unwrap();
        assert_eq!(adj.len(), 1);
        assert!(adj[0].is_constant());
    }

    #[test]
    fn smooth_quartic_is_not_hyperelliptic() {
        let (u, v) = uv();
        let c = PlaneCurve::from_uv(&(&u.pow(4) + &v.pow(4)) - &qconst(1));
        assert_eq!(genus(&c).unwrap(), 3);
        assert_eq!(hyperelliptic_map(&c).unwrap_err(), CurveError::NotHyperelliptic);
    }

    #[test]
    fn genus_three_hyperelliptic_model() {
        let (u, v) = uv();
        let c = PlaneCurve::from_uv(&(&v * &v) - &(&u.pow(7) - &qconst(1)));
        assert_eq!(genus(&c).unwrap(), 3);
        let m = hyperelliptic_map(&c).unwrap();
        assert!(!m.num.involves(1) && !m.den.involves(1));
        assert_eq!(fiber_degree(&m).unwrap(), 2);
    }

    #[test]
    fn fiber_degrees() {
        let (u, v) = uv();
        let circle = PlaneCurve::from_uv(&(&(&u * &u) + &(&v * &v)) - &qconst(1));
        let m = Map2P1 { num: u.clone(), den: qconst(1), source: circle };
        assert_eq!(fiber_degree(&m).unwrap(), 2);
        let cubic = PlaneCurve::from_uv(&v - &u.pow(3));
        let m = Map2P1 { num: u.clone(), den: qconst(1), source: cubic };
        assert_eq!(fiber_degree(&m).unwrap(), 1);
    }
}
