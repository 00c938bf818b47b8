//! The recognition flow: cyclicity, plane sections, coherent maps and the
//! reconstruction of M², with a machine-readable report.

use serde_json::{json, Value};

use crate::coherent::{coherent_map_elliptic, corresponding_candidates, CoherentError};
use crate::curvetools::{analyze, fiber_degree, hyperelliptic_map, CurveError, Map2P1};
use crate::matrec::{
    fiber_sqrt_param, mat2_curve_equal, mat_is_rational, spine_from_normals, squared_radius, verify_canal, MatrecError,
    SquaredMAT, VerifyMode,
};
use crate::qpoly::field::rat_to_string;
use crate::qpoly::{rational_roots, rint, MPoly, Rat, Ring, UPoly};
use crate::rng::{seeded, split};
use crate::sqrtfield::RatFunc;
use crate::surface::{
    cyclicity, plane_section_at, random_plane_through, regular_rational_points, section_irreducible,
    PlaneCurve, Point, Surface,
};

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub seed: u64,
    pub plane_retries: u32,
    pub point_retries: u32,
    pub height_bound: u64,
    pub verify_mode: VerifyMode,
    pub assume_not_rotational: bool,
    /// Plane a·x + b·y + c·z + d = 0 to try first.
    pub plane: Option<[Rat; 4]>,
    /// Regular point to try first.
    pub point: Option<Point>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            plane_retries: 5,
            point_retries: 3,
            height_bound: 20,
            verify_mode: VerifyMode::Sampling,
            assume_not_rotational: false,
            plane: None,
            point: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    RationalCanal,
    NotCanal,
    RevolutionReferral,
    NotRecognizedBudget,
    UnsupportedShape,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::RationalCanal => 0,
            Verdict::NotCanal => 1,
            Verdict::RevolutionReferral => 2,
            Verdict::NotRecognizedBudget | Verdict::UnsupportedShape => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::RationalCanal => "RATIONAL_CANAL",
            Verdict::NotCanal => "NOT_CANAL",
            Verdict::RevolutionReferral => "REVOLUTION_REFERRAL",
            Verdict::NotRecognizedBudget => "NOT_RECOGNIZED_BUDGET",
            Verdict::UnsupportedShape => "UNSUPPORTED_SHAPE",
        }
    }
}

/// Which construction produced the degree-2 map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapPath {
    Elliptic,
    Hyperelliptic,
    Conic,
}

/// The decision node that ended the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExitNode {
    Cyclicity,
    RationalSection,
    CorrespondingPoint,
    Hyperellipticity,
    Reconstruction,
    Verification,
    Budget,
    SectionShape,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub verdict: Verdict,
    pub exit: ExitNode,
    pub cyclicity: u32,
    pub section_genus: Option<i64>,
    pub path: Option<MapPath>,
    pub point: Option<Point>,
    pub plane: Option<MPoly<Rat>>,
    pub mat2: Option<SquaredMAT>,
    /// Further verified sphere families (surfaces such as Dupin cyclides have two).
    pub alternative_mat2: Vec<SquaredMAT>,
    pub mat_rational: Option<bool>,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PipelineError {
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("given point is not a regular point of the surface")]
    BadPoint,
    #[error("given plane is degenerate or does not pass through the point")]
    BadPlane,
}

struct Run {
    report: Report,
}

impl Run {
    fn log(&mut self, msg: impl Into<String>) {
        self.report.diagnostics.push(msg.into());
    }

    fn finish(mut self, verdict: Verdict, exit: ExitNode, msg: impl Into<String>) -> Report {
        self.log(msg);
        self.report.verdict = verdict;
        self.report.exit = exit;
        self.report
    }
}

/// Outcome of one plane attempt.
enum Attempt {
    Done(Report),
    Found(Vec<Map2P1>, MapPath),
    /// Try another plane; `not_canal` marks evidence against canality.
    Retry { not_canal: bool },
}

/// Runs the recognition flow on f.
pub fn run_pipeline(f: &MPoly<Rat>, cfg: &Config) -> Result<Report, PipelineError> {
    let s = Surface::new(f).map_err(|_| PipelineError::ConstantInput)?;
    let mut rng = seeded(cfg.seed);
    let mut run = Run {
        report: Report {
            verdict: Verdict::NotRecognizedBudget,
            exit: ExitNode::Budget,
            cyclicity: 0,
            section_genus: None,
            path: None,
            point: None,
            plane: None,
            mat2: None,
            alternative_mat2: Vec::new(),
            mat_rational: None,
            diagnostics: Vec::new(),
        },
    };
    run.log(format!("surface of degree {}", s.degree()));
    if let Some(p) = &cfg.point {
        if !s.is_regular_point(p) {
            return Err(PipelineError::BadPoint);
        }
    }
    let c = match cyclicity(&s, 5, &mut split(&mut rng, 1)) {
        Ok(c) => c,
        Err(e) => {
            return Ok(run.finish(Verdict::UnsupportedShape, ExitNode::Cyclicity, format!("cyclicity: {e}")))
        }
    };
    run.report.cyclicity = c;
    run.log(format!("cyclicity {c}"));
    if c == 0 {
        if cfg.assume_not_rotational {
            return Ok(run.finish(
                Verdict::NotCanal,
                ExitNode::Cyclicity,
                "cyclicity 0: a canal surface that is not a surface of revolution contains the absolute conic",
            ));
        }
        run.log("cyclicity 0: continuing only if plane sections are rational (rotational suspicion)");
    } else {
        run.log("rotational gate deferred to the genus-0 branch");
    }

    let points = base_points(&s, cfg);
    if points.is_empty() {
        return Ok(run.finish(
            Verdict::NotRecognizedBudget,
            ExitNode::Budget,
            format!("no regular rational point of height at most {}", cfg.height_bound),
        ));
    }
    let mut not_canal_evidence = false;
    let mut no_q = 0;
    for (pi, p) in points.iter().enumerate() {
        run.log(format!("regular point {}", fmt_point(p)));
        let mut prng = split(&mut rng, 100 + pi as u64);
        for k in 0..cfg.plane_retries.max(1) {
            let h = match (&cfg.plane, pi, k) {
                (Some(pl), 0, 0) => {
                    let h = plane_poly(pl);
                    if !h.eval(p).is_zero() || h.total_degree() != 1 {
                        return Err(PipelineError::BadPlane);
                    }
                    h
                }
                _ => random_plane_through(p, &mut prng, 9),
            };
            run.report.point = Some(p.clone());
            run.report.plane = Some(h.clone());
            run.log(format!("plane {}", h.display(&["x", "y", "z"])));
            let attempt = try_plane(&s, c, p, &h, cfg, &mut run, &mut no_q);
            let (maps, path) = match attempt {
                Attempt::Done(r) => return Ok(r),
                Attempt::Retry { not_canal } => {
                    not_canal_evidence |= not_canal;
                    continue;
                }
                Attempt::Found(m, path) => (m, path),
            };
            run.report.path = Some(path);
            let mut failed_verification = None;
            let mut families: Vec<SquaredMAT> = Vec::new();
            for map in &maps {
                let m2 = match reconstruct(&s, map, &map.source.frame) {
                    Ok(m2) => m2,
                    Err(e) => {
                        run.log(format!("reconstruction: {e}"));
                        not_canal_evidence |= matches!(e, MatrecError::NotCanal(_));
                        continue;
                    }
                };
                run.log(format!(
                    "M² candidate: ({}, {}, {}, {})",
                    m2.s[0].display("t"),
                    m2.s[1].display("t"),
                    m2.s[2].display("t"),
                    m2.r.display("t")
                ));
                let v = verify_canal(&s, &m2, cfg.verify_mode, &mut split(&mut rng, 7));
                if !v.passed {
                    let why = v.failure.unwrap_or_default();
                    run.log(format!("verification failed: {why}"));
                    failed_verification = Some(why);
                    continue;
                }
                run.log(format!(
                    "verified ({:?}) at t = {}",
                    cfg.verify_mode,
                    v.samples.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
                ));
                if !families.iter().any(|f| mat2_curve_equal(f, &m2).unwrap_or(false)) {
                    families.push(m2);
                }
            }
            if !families.is_empty() {
                let m2 = families.remove(0);
                if !families.is_empty() {
                    run.log(format!("{} further sphere families verified", families.len()));
                }
                run.report.mat_rational = Some(mat_is_rational(&m2.r));
                run.report.mat2 = Some(m2);
                run.report.alternative_mat2 = families;
                return Ok(run.finish(Verdict::RationalCanal, ExitNode::Verification, "rational canal surface"));
            }
            if let Some(why) = failed_verification {
                return Ok(run.finish(Verdict::NotCanal, ExitNode::Verification, format!("verification failed: {why}")));
            }
        }
    }
    if not_canal_evidence {
        return Ok(run.finish(Verdict::NotCanal, ExitNode::Reconstruction, "every attempt contradicted canality"));
    }
    Ok(run.finish(Verdict::NotRecognizedBudget, ExitNode::Budget, "retry budget exhausted"))
}

/// Regular rational points to try, the given one first. Points on
/// coordinate planes tend to lie on symmetry planes of the input, so
/// points with fewer zero coordinates are preferred.
fn base_points(s: &Surface, cfg: &Config) -> Vec<Point> {
    let mut pts: Vec<Point> = regular_rational_points(s, cfg.height_bound, cfg.point.as_ref()).take(POINT_POOL).collect();
    let given = cfg.point.is_some() && !pts.is_empty();
    let rest = if given { &mut pts[1..] } else { &mut pts[..] };
    rest.sort_by_key(|p| p.iter().filter(|c| c.is_zero()).count());
    pts.truncate(cfg.point_retries.max(1) as usize);
    pts
}

const POINT_POOL: usize = 60;

fn plane_poly(pl: &[Rat; 4]) -> MPoly<Rat> {
    (0..3).fold(MPoly::constant(pl[3].clone()), |acc, i| acc.add_ref(&MPoly::var(i).scale(&pl[i])))
}

fn fmt_point(p: &Point) -> String {
    format!("({})", p.iter().map(rat_to_string).collect::<Vec<_>>().join(", "))
}

fn try_plane(
    s: &Surface,
    c: u32,
    p: &Point,
    h: &MPoly<Rat>,
    cfg: &Config,
    run: &mut Run,
    no_q: &mut u32,
) -> Attempt {
    let hc = match plane_section_at(s, h, Some(p)) {
        Ok(hc) => hc,
        Err(e) => {
            run.log(format!("section: {e}"));
            return Attempt::Retry { not_canal: false };
        }
    };
    if !section_irreducible(&hc) {
        run.log("section reducible");
        return Attempt::Retry { not_canal: false };
    }
    let analysis = match analyze(&hc) {
        Ok(a) => a,
        Err(e) => {
            run.log(format!("curve analysis: {e}"));
            return Attempt::Retry { not_canal: false };
        }
    };
    let genus = analysis.genus;
    run.report.section_genus = Some(genus);
    run.log(format!("section of degree {} and genus {genus}", hc.degree()));
    let done = |run: &mut Run, v, e, m: &str| {
        let r = Run { report: run.report.clone() }.finish(v, e, m);
        Attempt::Done(r)
    };
    if genus == 0 {
        if cfg.assume_not_rotational && c > 0 {
            return done(run, Verdict::NotCanal, ExitNode::RationalSection, "rational section but not a surface of revolution");
        }
        if hc.degree() == 2 {
            run.log("conic section: degree-2 map from two pairs of corresponding points");
            let maps = conic_maps(s, h, &hc, cfg.height_bound);
            run.log(format!("{} candidate involution centre(s)", maps.len()));
            if !maps.is_empty() {
                return Attempt::Found(maps, MapPath::Conic);
            }
        }
        return done(
            run,
            Verdict::RevolutionReferral,
            ExitNode::RationalSection,
            "rational plane section: a canal surface of this kind is a surface of revolution",
        );
    }
    if c == 0 {
        return done(
            run,
            Verdict::NotCanal,
            ExitNode::Cyclicity,
            "cyclicity 0 and non-rational sections: not a canal surface",
        );
    }
    if genus == 1 {
        if hc.degree() != 3 {
            return done(
                run,
                Verdict::UnsupportedShape,
                ExitNode::SectionShape,
                &format!("genus-one section of degree {} is not supported", hc.degree()),
            );
        }
        let (cands, beyond) = match corresponding_candidates(s, p, h) {
            Ok(c) => c,
            Err(e) => {
                run.log(format!("corresponding point: {e}"));
                return Attempt::Retry { not_canal: false };
            }
        };
        let rational: Vec<Point> = cands.iter().filter_map(|q| q.as_rational()).collect();
        if cands.is_empty() && !beyond {
            *no_q += 1;
            run.log("no corresponding point on this plane");
            if *no_q >= 2 {
                return done(run, Verdict::NotCanal, ExitNode::CorrespondingPoint, "no corresponding point exists");
            }
            return Attempt::Retry { not_canal: true };
        }
        if rational.is_empty() {
            run.log(format!("{}", CoherentError::UnsupportedAlgebraicDegree));
            return Attempt::Retry { not_canal: false };
        }
        if rational.len() > 1 {
            run.log(format!("{} rational candidates for the corresponding point; trying each", rational.len()));
        }
        let mut maps = Vec::new();
        for q in &rational {
            run.log(format!("corresponding point {}", fmt_point(q)));
            let Some((qu, qv)) = hc.frame.coords_of(q) else { continue };
            match coherent_map_elliptic(&hc, &[rint(0), rint(0)], &[qu, qv]) {
                Ok(m) => maps.push(m),
                Err(e) => run.log(format!("coherent map: {e}")),
            }
        }
        if maps.is_empty() {
            return Attempt::Retry { not_canal: false };
        }
        return Attempt::Found(maps, MapPath::Elliptic);
    }
    match hyperelliptic_map(&hc) {
        Ok(m) => Attempt::Found(vec![m], MapPath::Hyperelliptic),
        Err(CurveError::NotHyperelliptic) => done(
            run,
            Verdict::NotCanal,
            ExitNode::Hyperellipticity,
            "section is not hyperelliptic, so no coherent map exists",
        ),
        Err(e) => {
            run.log(format!("hyperelliptic map: {e}"));
            Attempt::Retry { not_canal: false }
        }
    }
}

fn reconstruct(
    s: &Surface,
    map: &Map2P1,
    frame: &crate::surface::PlaneFrame,
) -> Result<SquaredMAT, MatrecError> {
    let param = fiber_sqrt_param(map, frame)?;
    let spine = spine_from_normals(s, &param)?;
    let r = squared_radius(&param, &spine)?;
    Ok(SquaredMAT { s: spine, r })
}

/// Second rational point of a conic through the origin, on a line v = m·u.
fn second_point(g: &MPoly<Rat>, m: &Rat) -> Option<[Rat; 2]> {
    let line = g.compose(&[MPoly::var(0), MPoly::var(0).scale(m)]).to_upoly(0)?;
    rational_roots(&line)
        .into_iter()
        .find(|u| !u.is_zero())
        .map(|u| [u.clone(), u * m])
}

/// Chord through two plane points as a line a·u + b·v + c = 0.
fn chord(x: &[Rat; 2], y: &[Rat; 2]) -> [Rat; 3] {
    let a = &y[1] - &x[1];
    let b = &x[0] - &y[0];
    let c = -(&a * &x[0] + &b * &x[1]);
    [a, b, c]
}

fn meet(l1: &[Rat; 3], l2: &[Rat; 3]) -> [Rat; 3] {
    [
        &l1[1] * &l2[2] - &l1[2] * &l2[1],
        &l1[2] * &l2[0] - &l1[0] * &l2[2],
        &l1[0] * &l2[1] - &l1[1] * &l2[0],
    ]
}

fn incident(l: &[Rat; 3], o: &[Rat; 3]) -> bool {
    (&l[0] * &o[0] + &l[1] * &o[1] + &l[2] * &o[2]).is_zero()
}

/// Candidate degree-2 maps on a conic section: pencils of lines through
/// a centre O on which the chords of corresponding pairs concur.
fn conic_maps(s: &Surface, h: &MPoly<Rat>, hc: &PlaneCurve, bound: u64) -> Vec<Map2P1> {
    let frame = &hc.frame;
    let mut starts = vec![[rint(0), rint(0)]];
    for k in 1..=bound as i64 {
        for m in [rint(k), -rint(k), Rat::new(1.into(), k.into()), Rat::new((-1).into(), k.into())] {
            if let Some(pt) = second_point(&hc.g, &m) {
                if !starts.contains(&pt) {
                    starts.push(pt);
                }
            }
        }
        if starts.len() >= 8 {
            break;
        }
    }
    // rational partners of each start point
    let mut partners: Vec<([Rat; 2], Vec<[Rat; 2]>)> = Vec::new();
    for a in starts {
        if partners.len() == 4 {
            break;
        }
        let pa = frame.point(&a[0], &a[1]);
        if !s.is_regular_point(&pa) {
            continue;
        }
        let Ok((cands, _)) = corresponding_candidates(s, &pa, h) else { continue };
        let uv: Vec<[Rat; 2]> = cands
            .iter()
            .filter_map(|c| c.as_rational())
            .filter_map(|q| frame.coords_of(&q).map(|(u, v)| [u, v]))
            .collect();
        if !uv.is_empty() {
            partners.push((a, uv));
        }
    }
    if partners.len() < 3 {
        return Vec::new();
    }
    let mut centres: Vec<[Rat; 3]> = Vec::new();
    let (a0, c0s) = &partners[0];
    let (a1, c1s) = &partners[1];
    for c0 in c0s {
        for c1 in c1s {
            let o = meet(&chord(a0, c0), &chord(a1, c1));
            if o.iter().all(|x| x.is_zero()) {
                continue;
            }
            let consistent = partners[2..]
                .iter()
                .all(|(a, cs)| cs.iter().any(|c| incident(&chord(a, c), &o)));
            let same = |x: &[Rat; 3]| meet_is_zero(x, &o);
            if consistent && !centres.iter().any(same) {
                centres.push(o);
            }
        }
    }
    let (u, v) = (MPoly::<Rat>::var(0), MPoly::<Rat>::var(1));
    centres
        .into_iter()
        .filter_map(|o| {
            let (num, den) = if o[2].is_zero() {
                // parallel chords: level sets of the perpendicular linear form
                (u.scale(&o[1]).sub_ref(&v.scale(&o[0])), MPoly::one())
            } else {
                let ou = &o[0] / &o[2];
                let ov = &o[1] / &o[2];
                (v.sub_ref(&MPoly::constant(ov)), u.sub_ref(&MPoly::constant(ou)))
            };
            let map = Map2P1 { num, den, source: hc.clone() };
            matches!(fiber_degree(&map), Ok(2)).then_some(map)
        })
        .collect()
}

/// True when two homogeneous triples are proportional.
fn meet_is_zero(a: &[Rat; 3], b: &[Rat; 3]) -> bool {
    meet(a, b).iter().all(|x| x.is_zero())
}

fn rat_json(r: &Rat) -> Value {
    Value::String(rat_to_string(r))
}

fn upoly_json(p: &UPoly<Rat>) -> Value {
    Value::Array(p.coeffs().iter().map(rat_json).collect())
}

pub fn ratfunc_json(r: &RatFunc) -> Value {
    json!({ "num": upoly_json(r.num()), "den": upoly_json(r.den()) })
}

pub fn mpoly_json(p: &MPoly<Rat>) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                let ex: Vec<u32> = (0..3).map(|i| crate::qpoly::mpoly::exp_of(e, i)).collect();
                json!([rat_to_string(c), ex])
            })
            .collect(),
    )
}

pub fn mat2_json(m: &SquaredMAT) -> Value {
    json!({
        "spine": m.s.iter().map(ratfunc_json).collect::<Vec<_>>(),
        "R": ratfunc_json(&m.r),
    })
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "exit": self.exit,
            "cyclicity": self.cyclicity,
            "section_genus": self.section_genus,
            "path": self.path,
            "point": self.point.as_ref().map(|p| p.iter().map(rat_json).collect::<Vec<_>>()),
            "plane": self.plane.as_ref().map(mpoly_json),
            "mat2": self.mat2.as_ref().map(mat2_json),
            "alternative_mat2": self.alternative_mat2.iter().map(mat2_json).collect::<Vec<_>>(),
            "mat_rational": self.mat_rational,
            "diagnostics": self.diagnostics,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verdict: {}\n", self.verdict.as_str());
        out += &format!("decided at: {}\n", serde_json::to_value(self.exit).unwrap().as_str().unwrap());
        out += &format!("cyclicity: {}\n", self.cyclicity);
        if let Some(g) = self.section_genus {
            out += &format!("section genus: {g}\n");
        }
        if let Some(m) = &self.mat2 {
            let names = ["s1", "s2", "s3", "R"];
            for (n, c) in names.iter().zip(m.coords()) {
                out += &format!("{n}(t) = {}\n", c.display("t"));
            }
        }
        if let Some(r) = self.mat_rational {
            out += &format!("MAT rational: {r}\n");
        }
        for d in &self.diagnostics {
            out += &format!("  - {d}\n");
        }
        out
    }
}
