//! Exhaustive search for faithful embeddings of a configuration in PG(2,q).
//!
//! A faithful embedding is injective, sends lines to collinear points and
//! sends no other triple to collinear points. Equivalently, every plane line
//! spanned by two placed points carries only points of the configuration
//! line through them.

use serde::Serialize;

use crate::error::Result;
use crate::field::GaloisField;
use crate::incidence::{Configuration, JoinTable};

/// All points of PG(2,q) as normalized triples, in lexicographic order.
pub fn pg2q_points(q: usize) -> Result<Vec<[u8; 3]>> {
    let f = GaloisField::new(q)?;
    Ok(plane_points(&f))
}

fn plane_points(f: &GaloisField) -> Vec<[u8; 3]> {
    let q = f.order() as u8;
    let mut pts = vec![[0, 0, 1]];
    for z in 0..q {
        pts.push([0, 1, z]);
    }
    for y in 0..q {
        for z in 0..q {
            pts.push([1, y, z]);
        }
    }
    pts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "points", rename_all = "lowercase")]
pub enum EmbedOutcome {
    /// Plane point of every configuration point, in point order.
    Found(Vec<[u8; 3]>),
    /// The whole search space was covered without success.
    Exhausted,
    /// The node budget ran out first.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbedResult {
    pub q: usize,
    pub outcome: EmbedOutcome,
    pub nodes: u64,
}

impl EmbedResult {
    pub fn found(&self) -> bool {
        matches!(self.outcome, EmbedOutcome::Found(_))
    }

    pub fn exhausted(&self) -> bool {
        self.outcome == EmbedOutcome::Exhausted
    }
}

struct Plane {
    points: Vec<[u8; 3]>,
    /// Lines through each point, as line indices.
    point_lines: Vec<Vec<usize>>,
    /// Points on each line.
    line_points: Vec<Vec<usize>>,
    /// Line index through two distinct points.
    join: Vec<usize>,
}

impl Plane {
    fn new(f: &GaloisField) -> Plane {
        let points = plane_points(f);
        let n = points.len();
        let index = |v: [u8; 3]| points.binary_search(&v).expect("normalized point");
        // Lines are indexed by their normalized dual coordinates.
        let dot = |a: [u8; 3], b: [u8; 3]| {
            let mut s = 0;
            for k in 0..3 {
                s = f.add(s, f.mul(a[k], b[k]));
            }
            s
        };
        let mut line_points = vec![Vec::new(); n];
        let mut point_lines = vec![Vec::new(); n];
        for (l, &lc) in points.iter().enumerate() {
            for (p, &pc) in points.iter().enumerate() {
                if dot(lc, pc) == 0 {
                    line_points[l].push(p);
                    point_lines[p].push(l);
                }
            }
        }
        let mut join = vec![usize::MAX; n * n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let l = f.normalize(f.cross(points[a], points[b])).expect("distinct points");
                    join[a * n + b] = index(l);
                }
            }
        }
        Plane { points, point_lines, line_points, join }
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn line(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }
}

struct Search<'a> {
    plane: &'a Plane,
    jt: JoinTable,
    /// Configuration lines through each point.
    cfg_point_lines: Vec<Vec<usize>>,
    cfg_lines: &'a [Vec<usize>],
    pos: Vec<Option<usize>>,
    used: Vec<bool>,
    /// Placed configuration points on each plane line.
    owners: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> Search<'a> {
    /// Configuration lines through `x` holding at least two placed points,
    /// with one placed pair from each.
    fn mate_lines(&self, x: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &l in &self.cfg_point_lines[x] {
            let placed: Vec<usize> = self.cfg_lines[l].iter().copied().filter(|&y| self.pos[y].is_some()).collect();
            if placed.len() >= 2 {
                out.push((placed[0], placed[1]));
            }
        }
        out
    }

    fn valid(&self, x: usize, p: usize, mates: usize) -> bool {
        if self.used[p] {
            return false;
        }
        let mut occupied = 0;
        for &l in &self.plane.point_lines[p] {
            let o = &self.owners[l];
            if o.len() >= 2 {
                match self.jt.line(o[0], o[1]) {
                    Some(cl) if self.cfg_lines[cl].contains(&x) => occupied += 1,
                    _ => return false,
                }
            }
        }
        occupied == mates
    }

    fn domain(&self, x: usize) -> Vec<usize> {
        let mates = self.mate_lines(x);
        let cand: Box<dyn Iterator<Item = usize>> = match mates.first() {
            Some(&(y, z)) => {
                let l = self.plane.line(self.pos[y].unwrap(), self.pos[z].unwrap());
                Box::new(self.plane.line_points[l].iter().copied())
            }
            None => Box::new(0..self.plane.len()),
        };
        cand.filter(|&p| self.valid(x, p, mates.len())).collect()
    }

    fn place(&mut self, x: usize, p: usize) {
        self.pos[x] = Some(p);
        self.used[p] = true;
        for &l in &self.plane.point_lines[p] {
            self.owners[l].push(x);
        }
    }

    fn unplace(&mut self, x: usize, p: usize) {
        self.pos[x] = None;
        self.used[p] = false;
        for &l in &self.plane.point_lines[p] {
            self.owners[l].pop();
        }
    }

    fn run(&mut self) -> Step {
        // Most constrained point first; ties to the lowest index.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for x in 0..self.pos.len() {
            if self.pos[x].is_some() {
                continue;
            }
            let d = self.domain(x);
            if d.is_empty() {
                return Step::Exhausted;
            }
            if best.as_ref().is_none_or(|(_, b)| d.len() < b.len()) {
                best = Some((x, d));
            }
        }
        let Some((x, dom)) = best else {
            return Step::Found;
        };
        for p in dom {
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            self.place(x, p);
            match self.run() {
                Step::Exhausted => self.unplace(x, p),
                other => return other,
            }
        }
        Step::Exhausted
    }
}

/// First four points in index order with no three on a common line.
fn frame(config: &Configuration, jt: &JoinTable) -> Option<[usize; 4]> {
    let n = config.num_points();
    let free = |a: usize, b: usize, c: usize| jt.line(a, b).is_none_or(|l| !config.lines()[l].contains(&c));
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !free(a, b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if free(a, b, d) && free(a, c, d) && free(b, c, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Backtracking search for a faithful embedding in PG(2,q). The first
/// four points in general position are pinned to the standard frame, which
/// loses nothing since PGL(3,q) is transitive on ordered frames. `budget`
/// bounds the number of placements tried.
pub fn embed_search(config: &Configuration, q: usize, budget: u64) -> Result<EmbedResult> {
    let f = GaloisField::new(q)?;
    let plane = Plane::new(&f);
    let jt = config.join_table();
    let n = config.num_points();
    let mut s = Search {
        plane: &plane,
        jt,
        cfg_point_lines: config.point_lines(),
        cfg_lines: config.lines(),
        pos: vec![None; n],
        used: vec![false; plane.len()],
        owners: vec![Vec::new(); plane.len()],
        nodes: 0,
        budget,
    };
    let done = |s: &Search, outcome| EmbedResult { q, outcome, nodes: s.nodes };
    if n > plane.len() {
        return Ok(done(&s, EmbedOutcome::Exhausted));
    }
    if let Some(fr) = frame(config, &s.jt) {
        let std = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
        for (&x, v) in fr.iter().zip(std) {
            let p = plane.points.binary_search(&v).expect("frame point");
            let mates = s.mate_lines(x).len();
            if !s.valid(x, p, mates) {
                return Ok(done(&s, EmbedOutcome::Exhausted));
            }
            s.place(x, p);
        }
    }
    let outcome = match s.run() {
        Step::Found => EmbedOutcome::Found(s.pos.iter().map(|p| plane.points[p.unwrap()]).collect()),
        Step::Exhausted => EmbedOutcome::Exhausted,
        Step::OutOfBudget => EmbedOutcome::Inconclusive,
    };
    Ok(done(&s, outcome))
}

/// Direct check of a claimed embedding: injective, lines collinear and
/// every collinear triple a subset of a line.
pub fn verify_embedding(config: &Configuration, q: usize, pts: &[[u8; 3]]) -> Result<bool> {
    let f = GaloisField::new(q)?;
    let n = config.num_points();
    if pts.len() != n {
        return Ok(false);
    }
    let norm: Vec<Option<[u8; 3]>> = pts.iter().map(|&v| f.normalize(v)).collect();
    if norm.iter().any(|v| v.is_none()) {
        return Ok(false);
    }
    for a in 0..n {
        for b in a + 1..n {
            if norm[a] == norm[b] {
                return Ok(false);
            }
        }
    }
    let jt = config.join_table();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let on_line = jt.line(a, b).is_some_and(|l| config.lines()[l].contains(&c));
                let col = f.det3(pts[a], pts[b], pts[c]) == 0;
                if on_line != col {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{grassmannian, SkewPerspectiveSpec};
    use crate::perm::Permutation;

    fn fano() -> Configuration {
        let lines = vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ];
        Configuration::unlabeled(7, lines).unwrap()
    }

    #[test]
    fn plane_sizes() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let pts = pg2q_points(q).unwrap();
            assert_eq!(pts.len(), q * q + q + 1);
            let f = GaloisField::new(q).unwrap();
            let plane = Plane::new(&f);
            assert!(plane.line_points.iter().all(|l| l.len() == q + 1));
            assert!(plane.point_lines.iter().all(|l| l.len() == q + 1));
        }
    }

    #[test]
    fn fano_only_in_characteristic_two() {
        let c = fano();
        for (q, ok) in [(2, true), (3, false), (4, true), (5, false), (7, false)] {
            let r = embed_search(&c, q, u64::MAX).unwrap();
            assert_eq!(r.found(), ok, "q = {q}");
            if let EmbedOutcome::Found(pts) = &r.outcome {
                assert!(verify_embedding(&c, q, pts).unwrap());
            }
        }
    }

    #[test]
    fn budget_gives_inconclusive() {
        let spec =
            SkewPerspectiveSpec::induced(&Permutation::parse("(1)(2)(3,4)", 4).unwrap(), &grassmannian(4).unwrap())
                .unwrap();
        let r = embed_search(&spec.build(), 5, 3).unwrap();
        assert_eq!(r.outcome, EmbedOutcome::Inconclusive);
        assert_eq!(r.nodes, 3);
    }

    #[test]
    fn verify_rejects_bad_maps() {
        let c = fano();
        let r = embed_search(&c, 2, u64::MAX).unwrap();
        let EmbedOutcome::Found(mut pts) = r.outcome else { panic!() };
        pts.swap(0, 6);
        assert!(!verify_embedding(&c, 2, &pts).unwrap());
        pts[1] = pts[2];
        assert!(!verify_embedding(&c, 2, &pts).unwrap());
    }
}
