//! Exact rational realizations in the projective plane: faithfulness
//! checks, the parametric systems for the 4-cycle and 3-cycle skews over a
//! Grassmannian axis, and a closure harness.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::constructions::{grassmannian, SkewPerspectiveSpec};
use crate::error::{Error, Result};
use crate::incidence::{Configuration, PointLabel};
use crate::perm::{all_pairs, Permutation};

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-3/4"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

/// A point of the rational projective plane, stored with its first nonzero
/// coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint([Q; 3]);

impl ProjPoint {
    pub fn new(x: Q, y: Q, z: Q) -> Result<ProjPoint> {
        let v = [x, y, z];
        let lead = v.iter().find(|c| !c.is_zero()).cloned();
        match lead {
            None => Err(Error::DegenerateParameters("zero coordinate vector".into())),
            Some(l) => Ok(ProjPoint([&v[0] / &l, &v[1] / &l, &v[2] / &l])),
        }
    }

    pub fn ints(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new(q(x), q(y), q(z)).expect("nonzero integer triple")
    }

    pub fn coords(&self) -> &[Q; 3] {
        &self.0
    }

    /// Cross product: the line through two points, or the meet of two lines.
    /// `None` when the inputs coincide.
    pub fn cross(&self, other: &ProjPoint) -> Option<ProjPoint> {
        let (a, b) = (&self.0, &other.0);
        ProjPoint::new(&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]).ok()
    }

    /// Affine combination `self + t·other` of the stored representatives.
    pub fn plus(&self, t: &Q, other: &ProjPoint) -> Option<ProjPoint> {
        let (a, b) = (&self.0, &other.0);
        ProjPoint::new(&a[0] + t * &b[0], &a[1] + t * &b[1], &a[2] + t * &b[2]).ok()
    }
}

fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", fmt_q(&self.0[0]), fmt_q(&self.0[1]), fmt_q(&self.0[2]))
    }
}

pub fn det3(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Q {
    let (a, b, c) = (&a.0, &b.0, &c.0);
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

pub fn collinear(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    det3(a, b, c).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RealizationFailure {
    NotInjective { first: String, second: String },
    LineNotCollinear { line: Vec<String> },
    SpuriousCollinearity { triple: [String; 3] },
}

impl fmt::Display for RealizationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizationFailure::NotInjective { first, second } => write!(f, "{first} and {second} coincide"),
            RealizationFailure::LineNotCollinear { line } => write!(f, "line {{{}}} not collinear", line.join(",")),
            RealizationFailure::SpuriousCollinearity { triple } => {
                write!(f, "non-collinear triple {{{}}} mapped collinear", triple.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub points: Vec<ProjPoint>,
    /// Injective with every line mapped into a projective line; extra
    /// collinearities allowed.
    pub lines_hold: bool,
    pub faithful: bool,
    pub failure: Option<RealizationFailure>,
}

struct Checker<'a> {
    config: &'a Configuration,
    points: &'a [ProjPoint],
    line_triples: HashSet<[usize; 3]>,
}

impl<'a> Checker<'a> {
    fn new(config: &'a Configuration, points: &'a [ProjPoint]) -> Result<Checker<'a>> {
        let n = config.num_points();
        if points.len() != n {
            return Err(Error::InvalidArgument(format!("{} coordinates for {} points", points.len(), n)));
        }
        let mut line_triples = HashSet::new();
        for l in config.lines() {
            for (s, &x) in l.iter().enumerate() {
                for (t, &y) in l.iter().enumerate().skip(s + 1) {
                    for &z in &l[t + 1..] {
                        line_triples.insert([x, y, z]);
                    }
                }
            }
        }
        Ok(Checker { config, points, line_triples })
    }

    fn name(&self, x: usize) -> String {
        self.config.label(x).to_string()
    }

    fn injectivity(&self) -> Option<RealizationFailure> {
        let mut seen: HashMap<&ProjPoint, usize> = HashMap::new();
        for (x, pt) in self.points.iter().enumerate() {
            if let Some(&y) = seen.get(pt) {
                return Some(RealizationFailure::NotInjective { first: self.name(y), second: self.name(x) });
            }
            seen.insert(pt, x);
        }
        None
    }

    fn line_holds(&self, l: &[usize]) -> bool {
        l.len() < 3 || l[2..].iter().all(|&z| collinear(&self.points[l[0]], &self.points[l[1]], &self.points[z]))
    }

    fn line_failure(&self, l: &[usize]) -> RealizationFailure {
        RealizationFailure::LineNotCollinear { line: l.iter().map(|&x| self.name(x)).collect() }
    }

    /// A triple not inside a common line, mapped onto a collinear triple.
    fn spurious(&self) -> Option<RealizationFailure> {
        let n = self.config.num_points();
        for x in 0..n {
            for y in x + 1..n {
                let xy = self.points[x].cross(&self.points[y])?;
                for z in y + 1..n {
                    if self.line_triples.contains(&[x, y, z]) {
                        continue;
                    }
                    let c = &xy.0;
                    let p = &self.points[z].0;
                    if (&c[0] * &p[0] + &c[1] * &p[1] + &c[2] * &p[2]).is_zero() {
                        return Some(RealizationFailure::SpuriousCollinearity {
                            triple: [self.name(x), self.name(y), self.name(z)],
                        });
                    }
                }
            }
        }
        None
    }
}

/// Faithful iff injective, every line maps into a projective line, and no
/// triple outside a common line maps onto a collinear triple.
pub fn verify_realization(config: &Configuration, points: &[ProjPoint]) -> Result<Realization> {
    let ck = Checker::new(config, points)?;
    let failure =
        ck.injectivity().or_else(|| config.lines().iter().find(|l| !ck.line_holds(l)).map(|l| ck.line_failure(l)));
    let lines_hold = failure.is_none();
    let failure = failure.or_else(|| ck.spurious());
    Ok(Realization { points: points.to_vec(), lines_hold, faithful: failure.is_none(), failure })
}

/// Assumes every line except `withheld` maps collinearly (lines through the
/// center named separately), the map is injective and no non-collinear
/// triple goes to a collinear one. Reports whether `withheld` closes.
pub fn closure_check(config: &Configuration, points: &[ProjPoint], withheld: &[usize]) -> Result<bool> {
    let mut w = withheld.to_vec();
    w.sort_unstable();
    if !config.lines().contains(&w) {
        return Err(Error::InvalidArgument("withheld set is not a line".into()));
    }
    let ck = Checker::new(config, points)?;
    if let Some(f) = ck.injectivity() {
        return Err(Error::HypothesesViolated(format!("map not injective: {f}")));
    }
    let center = config.index_of(&PointLabel::Center);
    let others: Vec<&Vec<usize>> = config.lines().iter().filter(|l| **l != w).collect();
    let through_center = |l: &Vec<usize>| center.is_some_and(|p| l.contains(&p));
    for l in others.iter().filter(|l| through_center(l)) {
        if !ck.line_holds(l) {
            return Err(Error::HypothesesViolated(format!("clause (i): {}", ck.line_failure(l))));
        }
    }
    for l in others.iter().filter(|l| !through_center(l)) {
        if !ck.line_holds(l) {
            return Err(Error::HypothesesViolated(format!("clause (ii): {}", ck.line_failure(l))));
        }
    }
    if let Some(f) = ck.spurious() {
        return Err(Error::HypothesesViolated(format!("clause (iii): {f}")));
    }
    Ok(ck.line_holds(&w))
}

/// Coordinates of all points of `Π(n, σ̄, axis)` from the center and the
/// `aᵢ, bᵢ`; each `c_{i,j}` is the meet of `aᵢaⱼ` and `b_{σ(i)}b_{σ(j)}`.
pub fn perspective_coordinates(
    sigma: &Permutation,
    p: &ProjPoint,
    a: &[ProjPoint],
    b: &[ProjPoint],
) -> Result<Vec<ProjPoint>> {
    let n = sigma.n();
    if a.len() != n || b.len() != n {
        return Err(Error::InvalidArgument("need n points in each triangle".into()));
    }
    let mut out = vec![p.clone()];
    out.extend(a.iter().cloned());
    out.extend(b.iter().cloned());
    for (i, j) in all_pairs(n) {
        let degenerate = || Error::DegenerateParameters(format!("c{{{},{}}} undefined", i + 1, j + 1));
        let la = a[i].cross(&a[j]).ok_or_else(degenerate)?;
        let lb = b[sigma.apply(i)].cross(&b[sigma.apply(j)]).ok_or_else(degenerate)?;
        out.push(la.cross(&lb).ok_or_else(degenerate)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParametricCase {
    /// `σ = (1,2,3,4)`.
    C4,
    /// `σ = (1,2,3)(4)`.
    C3PlusFix,
}

impl ParametricCase {
    pub fn sigma(self) -> Permutation {
        let s = match self {
            ParametricCase::C4 => "(1,2,3,4)",
            ParametricCase::C3PlusFix => "(1,2,3)",
        };
        Permutation::parse(s, 4).expect("fixed cycle")
    }
}

impl FromStr for ParametricCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<ParametricCase> {
        match s.to_ascii_lowercase().as_str() {
            "c4" => Ok(ParametricCase::C4),
            "c3plusfix" | "c3" | "c3+1" => Ok(ParametricCase::C3PlusFix),
            _ => Err(Error::Parse(format!("unknown case {s:?}"))),
        }
    }
}

/// Parameter values; unset ones are derived from the constraint equations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParametricParams {
    pub alpha1: Option<Q>,
    pub alpha2: Option<Q>,
    pub beta1: Option<Q>,
    pub beta2: Option<Q>,
    pub x: Option<Q>,
    pub y: Option<Q>,
}

/// Parses `"beta2=2,x=2,y=2"`; values may be `p/q`.
pub fn parse_params(s: &str) -> Result<ParametricParams> {
    let mut out = ParametricParams::default();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
        let slot = match k.trim() {
            "alpha1" | "a1" => &mut out.alpha1,
            "alpha2" | "a2" => &mut out.alpha2,
            "beta1" | "b1" => &mut out.beta1,
            "beta2" | "b2" => &mut out.beta2,
            "x" => &mut out.x,
            "y" => &mut out.y,
            other => return Err(Error::Parse(format!("unknown parameter {other:?}"))),
        };
        if slot.is_some() {
            return Err(Error::Parse(format!("parameter {k:?} given twice")));
        }
        *slot = Some(parse_rational(v)?);
    }
    Ok(out)
}

/// All six parameters after derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedParams {
    pub alpha1: Q,
    pub alpha2: Q,
    pub beta1: Q,
    pub beta2: Q,
    pub x: Q,
    pub y: Q,
}

impl fmt::Display for ResolvedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha1={}, alpha2={}, beta1={}, beta2={}, x={}, y={}",
            fmt_q(&self.alpha1),
            fmt_q(&self.alpha2),
            fmt_q(&self.beta1),
            fmt_q(&self.beta2),
            fmt_q(&self.x),
            fmt_q(&self.y)
        )
    }
}

fn need(v: &Option<Q>, name: &str) -> Result<Q> {
    v.clone().ok_or_else(|| Error::InvalidArgument(format!("parameter {name} is required")))
}

fn nonzero(v: Q, what: &str) -> Result<Q> {
    if v.is_zero() {
        Err(Error::DegenerateParameters(format!("{what} vanishes")))
    } else {
        Ok(v)
    }
}

/// Fills in the derived parameters; explicitly given values win.
///
/// `C4` takes `(β₁, β₂, x, y)` with `α₁ = β₁(β₂y−1)/(x(β₂−1))` and
/// `α₂ = β₂y(β₁(β₂y−1) − x(β₂−1))/(x(β₁(β₂y−1) − β₂ + 1))`; `β₁` defaults to
/// `(1−β₂y)/y`, which puts `b₄` on the line `b₁b₃`.
///
/// `C3PlusFix` takes `(β₁, β₂, x, y)` with `α₁ = β₁/(β₂x)` and
/// `α₂ = (β₁−β₂x)/(x(β₁−β₂))`; `x` defaults to `(β₂²−β₂β₁+β₁²)/β₂²`, which
/// puts `b₂` on the line `b₁b₃`. Both defaults keep every line but are not
/// faithful; other values of the extra parameter can be.
pub fn resolve_params(case: ParametricCase, p: &ParametricParams) -> Result<ResolvedParams> {
    let one = Q::one();
    match case {
        ParametricCase::C4 => {
            let (b2, x, y) = (need(&p.beta2, "beta2")?, need(&p.x, "x")?, need(&p.y, "y")?);
            let y = nonzero(y, "y")?;
            let b1 = p.beta1.clone().unwrap_or_else(|| (&one - &b2 * &y) / &y);
            let k = &b1 * (&b2 * &y - &one);
            let a1 = match &p.alpha1 {
                Some(v) => v.clone(),
                None => &k / nonzero(&x * (&b2 - &one), "x·(β₂−1)")?,
            };
            let a2 = match &p.alpha2 {
                Some(v) => v.clone(),
                None => {
                    let den = nonzero(&x * (&k - &b2 + &one), "x·(β₁(β₂y−1)−β₂+1)")?;
                    &b2 * &y * (&k - &x * (&b2 - &one)) / den
                }
            };
            Ok(ResolvedParams { alpha1: a1, alpha2: a2, beta1: b1, beta2: b2, x, y })
        }
        ParametricCase::C3PlusFix => {
            let (b1, b2, y) = (need(&p.beta1, "beta1")?, need(&p.beta2, "beta2")?, need(&p.y, "y")?);
            let y = nonzero(y, "y")?;
            if b1 == (&one - &b2 * &y) / &y {
                return Err(Error::DegenerateParameters(
                    "β₁ = −(β₂y−1)/y makes c{1,2}, c{1,3}, c{1,4} collinear".into(),
                ));
            }
            let b2 = nonzero(b2, "β₂")?;
            let x = p.x.clone().unwrap_or_else(|| (&b2 * &b2 - &b2 * &b1 + &b1 * &b1) / (&b2 * &b2));
            let x = nonzero(x, "x")?;
            let a1 = match &p.alpha1 {
                Some(v) => v.clone(),
                None => &b1 / (&b2 * &x),
            };
            let a2 = match &p.alpha2 {
                Some(v) => v.clone(),
                None => (&b1 - &b2 * &x) / nonzero(&x * (&b1 - &b2), "x·(β₁−β₂)")?,
            };
            Ok(ResolvedParams { alpha1: a1, alpha2: a2, beta1: b1, beta2: b2, x, y })
        }
    }
}

/// The nine base points `p, a₁..a₄, b₁..b₄` of the parametric system.
pub fn base_points(v: &ResolvedParams) -> (ProjPoint, Vec<ProjPoint>, Vec<ProjPoint>) {
    let pt = |x: Q, y: Q, z: Q| ProjPoint::new(x, y, z).expect("first coordinate or a unit is nonzero");
    let (o, z) = (Q::one(), Q::zero());
    let p = pt(o.clone(), z.clone(), z.clone());
    let a = vec![
        pt(z.clone(), z.clone(), o.clone()),
        pt(o.clone(), v.alpha1.clone(), v.alpha2.clone()),
        pt(z.clone(), o.clone(), z.clone()),
        pt(o.clone(), v.beta1.clone(), v.beta2.clone()),
    ];
    let b = vec![
        pt(o.clone(), z.clone(), o.clone()),
        pt(o.clone(), &v.alpha1 * &v.x, &v.alpha2 * &v.x),
        pt(o.clone(), o.clone(), z.clone()),
        pt(o.clone(), &v.beta1 * &v.y, &v.beta2 * &v.y),
    ];
    (p, a, b)
}

#[derive(Clone, Debug)]
pub struct ParametricRealization {
    pub case: ParametricCase,
    pub params: ResolvedParams,
    pub spec: SkewPerspectiveSpec,
    pub config: Configuration,
    pub realization: Realization,
}

/// Coordinates for `Π(4, σ, G(4,2))` from the parametric system, checked
/// for faithfulness.
pub fn parametric_realization(case: ParametricCase, params: &ParametricParams) -> Result<ParametricRealization> {
    let v = resolve_params(case, params)?;
    let sigma = case.sigma();
    let spec = SkewPerspectiveSpec::induced(&sigma, &grassmannian(4)?)?;
    let config = spec.build();
    let (p, a, b) = base_points(&v);
    let pts = perspective_coordinates(&sigma, &p, &a, &b)?;
    let realization = verify_realization(&config, &pts)?;
    Ok(ParametricRealization { case, params: v, spec, config, realization })
}

/// Two triangles in perspective from `[0,0,1]`: the classical realization
/// of the Desargues configuration `Π(3, id, G(3,2)) ≅ G(5,2)`.
pub fn desargues_realization() -> Result<(Configuration, Realization)> {
    let spec = SkewPerspectiveSpec::induced(&Permutation::identity(3), &grassmannian(3)?)?;
    let p = ProjPoint::ints(0, 0, 1);
    let a = vec![ProjPoint::ints(1, 0, 1), ProjPoint::ints(0, 1, 1), ProjPoint::ints(-1, -2, 1)];
    let b: Vec<ProjPoint> = a.iter().zip([2, 3, -2]).map(|(x, t)| p.plus(&q(t), x).expect("distinct")).collect();
    let pts = perspective_coordinates(&Permutation::identity(3), &p, &a, &b)?;
    let config = spec.build();
    let r = verify_realization(&config, &pts)?;
    Ok((config, r))
}

#[derive(Clone, Debug)]
pub struct FezWitness {
    pub spec: SkewPerspectiveSpec,
    pub config: Configuration,
    pub points: Vec<ProjPoint>,
    /// The line `{p, a₃, b₃}` as point indices.
    pub withheld: Vec<usize>,
    /// `(x, y, t)` used by the search.
    pub params: (i64, i64, i64),
}

/// Searches small integers for coordinates of the fez configuration
/// `Π(3, (1,2,3), G(3,2))` meeting every line except `{p, a₃, b₃}`, with no
/// spurious collinearity and `p, a₃, b₃` not collinear.
pub fn fez_counterexample() -> Result<FezWitness> {
    let sigma = Permutation::parse("(1,2,3)", 3)?;
    let spec = SkewPerspectiveSpec::induced(&sigma, &grassmannian(3)?)?;
    let config = spec.build();
    let ix = spec.index();
    let withheld = {
        let mut l = vec![ix.p(), ix.a(2), ix.b(2)];
        l.sort_unstable();
        l
    };
    let p = ProjPoint::ints(1, 1, 1);
    let a = [ProjPoint::ints(1, 0, 0), ProjPoint::ints(0, 1, 0), ProjPoint::ints(0, 0, 1)];
    let range: Vec<i64> = (-4..=4).filter(|&v| v != 0).collect();
    for &x in &range {
        for &y in &range {
            for &t in &range {
                let Some(pts) = fez_candidate(&p, &a, x, y, t) else { continue };
                if collinear(&pts[ix.p()], &pts[ix.a(2)], &pts[ix.b(2)]) {
                    continue;
                }
                if closure_check(&config, &pts, &withheld).is_ok() {
                    return Ok(FezWitness { spec, config, points: pts, withheld, params: (x, y, t) });
                }
            }
        }
    }
    Err(Error::DegenerateParameters("no fez witness in the search box".into()))
}

fn fez_candidate(p: &ProjPoint, a: &[ProjPoint; 3], x: i64, y: i64, t: i64) -> Option<Vec<ProjPoint>> {
    let b1 = p.plus(&q(x), &a[0])?;
    let b2 = p.plus(&q(y), &a[1])?;
    let c13 = a[0].cross(&a[2])?.cross(&b2.cross(&b1)?)?;
    let c12 = a[0].plus(&q(t), &a[1])?;
    let c23 = a[1].cross(&a[2])?.cross(&c12.cross(&c13)?)?;
    let b3 = c12.cross(&b2)?.cross(&c23.cross(&b1)?)?;
    // Point order: p, a1..a3, b1..b3, c12, c13, c23.
    Some(vec![p.clone(), a[0].clone(), a[1].clone(), a[2].clone(), b1, b2, b3, c12, c13, c23])
}

fn q_to_json(x: &Q) -> Value {
    if x.is_integer() {
        if let Ok(v) = i64::try_from(x.numer().clone()) {
            return Value::from(v);
        }
    }
    Value::String(fmt_q(x))
}

fn q_from_json(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => {
            n.as_i64().map(q).ok_or_else(|| Error::Parse(format!("coordinate {n} is not an integer; use \"p/q\"")))
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("bad coordinate {other}"))),
    }
}

/// `{label: [x, y, z]}` with integers as numbers and other rationals as
/// `"p/q"` strings.
pub fn realization_to_json(config: &Configuration, points: &[ProjPoint]) -> String {
    let mut m = serde_json::Map::new();
    for (x, pt) in points.iter().enumerate() {
        m.insert(config.label(x).to_string(), Value::Array(pt.0.iter().map(q_to_json).collect()));
    }
    serde_json::to_string_pretty(&Value::Object(m)).expect("json values serialize")
}

/// Parses the label-keyed map without reference to a configuration.
pub fn parse_realization(s: &str) -> Result<Vec<(PointLabel, ProjPoint)>> {
    let v: Value = serde_json::from_str(s)?;
    let obj = v.as_object().ok_or_else(|| Error::Parse("realization must be an object".into()))?;
    let mut out = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let arr = c
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::Parse(format!("{k}: expected 3 coordinates")))?;
        let coords = arr.iter().map(q_from_json).collect::<Result<Vec<Q>>>()?;
        let [x, y, z]: [Q; 3] = coords.try_into().expect("length checked");
        out.push((k.parse().expect("labels always parse"), ProjPoint::new(x, y, z)?));
    }
    Ok(out)
}

/// Reads a realization and orders it by the configuration's points.
pub fn realization_from_json(config: &Configuration, s: &str) -> Result<Vec<ProjPoint>> {
    let parsed = parse_realization(s)?;
    let mut slots: Vec<Option<ProjPoint>> = vec![None; config.num_points()];
    for (label, pt) in parsed {
        let x = config.require(&label)?;
        slots[x] = Some(pt);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(x, s)| s.ok_or_else(|| Error::InvalidArgument(format!("no coordinates for {}", config.label(x)))))
        .collect()
}
