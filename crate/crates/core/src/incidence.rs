//! Incidence structures: labeled points, uniform lines, axiom checks and the
//! partial join `x ⊕ y`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Role of a point in a skew perspective. Indices are zero-based here and
/// printed one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointLabel {
    Center,
    A(u8),
    B(u8),
    /// A 2-subset `{i, j}` with `i < j`.
    C(u8, u8),
    Free(String),
}

impl PointLabel {
    pub fn pair(i: usize, j: usize) -> PointLabel {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        PointLabel::C(i as u8, j as u8)
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Center => write!(f, "p"),
            PointLabel::A(i) => write!(f, "a{}", *i as usize + 1),
            PointLabel::B(i) => write!(f, "b{}", *i as usize + 1),
            PointLabel::C(i, j) => write!(f, "c{{{},{}}}", *i as usize + 1, *j as usize + 1),
            PointLabel::Free(s) => write!(f, "{s}"),
        }
    }
}

fn parse_index(s: &str) -> Option<u8> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || s.starts_with('0') {
        return None;
    }
    let v: usize = s.parse().ok()?;
    if (1..=255).contains(&v) {
        Some((v - 1) as u8)
    } else {
        None
    }
}

impl FromStr for PointLabel {
    type Err = Error;

    /// Never fails: strings that do not match `p`, `aN`, `bN` or `c{i,j}`
    /// become free labels.
    fn from_str(s: &str) -> Result<Self> {
        if s == "p" {
            return Ok(PointLabel::Center);
        }
        if let Some(rest) = s.strip_prefix('a') {
            if let Some(i) = parse_index(rest) {
                return Ok(PointLabel::A(i));
            }
        }
        if let Some(rest) = s.strip_prefix('b') {
            if let Some(i) = parse_index(rest) {
                return Ok(PointLabel::B(i));
            }
        }
        if let Some(inner) = s.strip_prefix("c{").and_then(|r| r.strip_suffix('}')) {
            if let Some((x, y)) = inner.split_once(',') {
                if let (Some(i), Some(j)) = (parse_index(x.trim()), parse_index(y.trim())) {
                    if i != j {
                        return Ok(PointLabel::pair(i as usize, j as usize));
                    }
                }
            }
        }
        Ok(PointLabel::Free(s.to_string()))
    }
}

/// Parameters `(ν, r, b, κ)`. `r` is absent when ranks are not uniform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub nu: usize,
    pub r: Option<usize>,
    pub b: usize,
    pub kappa: usize,
}

impl Signature {
    pub fn binomial(n: usize) -> Signature {
        let m = n + 2;
        Signature { nu: m * (m - 1) / 2, r: Some(n), b: m * (m - 1) * (m - 2) / 6, kappa: 3 }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r {
            Some(r) => write!(f, "({}, {}, {}, {})", self.nu, r, self.b, self.kappa),
            None => write!(f, "({}, -, {}, {})", self.nu, self.b, self.kappa),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A line whose size differs from the first line's.
    NotKConfiguration {
        line: Vec<usize>,
        expected: usize,
    },
    DuplicateLine {
        line: Vec<usize>,
    },
    NotPartiallyLinear {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// Ranks are not uniform, or the structure is degenerate.
    NotRegular {
        signature: Signature,
        point: Option<usize>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotKConfiguration { line, expected } => {
                write!(f, "not a k-configuration: line {line:?} has size {} (expected {expected})", line.len())
            }
            Violation::DuplicateLine { line } => write!(f, "duplicate line {line:?}"),
            Violation::NotPartiallyLinear { first, second } => {
                write!(f, "not partially linear: lines {first:?} and {second:?} share two points")
            }
            Violation::NotRegular { signature, point } => match point {
                Some(p) => write!(f, "not regular: point {p} breaks uniform rank, signature {signature}"),
                None => write!(f, "not regular: degenerate structure, signature {signature}"),
            },
        }
    }
}

/// Outcome of the partial join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Join {
    Same(usize),
    Line(usize),
    None,
}

/// A finite incidence structure with a deterministic point order. Lines are
/// sorted index sets, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<PointLabel>,
    lines: Vec<Vec<usize>>,
    index: HashMap<PointLabel, usize>,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    points: Vec<String>,
    lines: Vec<Vec<usize>>,
}

impl Configuration {
    /// Normalizes line order. Rejects out-of-range indices, repeated points
    /// inside a line and duplicate labels; axiom violations are left for
    /// [`Configuration::verify`].
    pub fn new(points: Vec<PointLabel>, lines: Vec<Vec<usize>>) -> Result<Configuration> {
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::InvalidConfiguration(format!("duplicate point label {p}")));
            }
        }
        let mut lines = lines;
        for l in lines.iter_mut() {
            l.sort_unstable();
            if let Some(&x) = l.iter().find(|&&x| x >= points.len()) {
                return Err(Error::InvalidConfiguration(format!("line refers to point {x} out of range")));
            }
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidConfiguration(format!("line {l:?} repeats a point")));
            }
        }
        lines.sort();
        Ok(Configuration { points, lines, index })
    }

    /// Points labeled `Free("0")`, `Free("1")`, ...
    pub fn unlabeled(n: usize, lines: Vec<Vec<usize>>) -> Result<Configuration> {
        Configuration::new((0..n).map(|i| PointLabel::Free(i.to_string())).collect(), lines)
    }

    pub fn points(&self) -> &[PointLabel] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn label(&self, i: usize) -> &PointLabel {
        &self.points[i]
    }

    pub fn index_of(&self, label: &PointLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &PointLabel) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::NoSuchPoint(label.to_string()))
    }

    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![0; self.points.len()];
        for l in &self.lines {
            for &x in l {
                r[x] += 1;
            }
        }
        r
    }

    pub fn rank(&self, x: usize) -> usize {
        self.lines.iter().filter(|l| l.contains(&x)).count()
    }

    /// Line indices through each point.
    pub fn point_lines(&self) -> Vec<Vec<usize>> {
        let mut pl = vec![Vec::new(); self.points.len()];
        for (k, l) in self.lines.iter().enumerate() {
            for &x in l {
                pl[x].push(k);
            }
        }
        pl
    }

    pub fn verify(&self) -> std::result::Result<Signature, Violation> {
        let nu = self.points.len();
        let b = self.lines.len();
        let kappa = self.lines.first().map_or(0, |l| l.len());
        for l in &self.lines {
            if l.len() != kappa {
                return Err(Violation::NotKConfiguration { line: l.clone(), expected: kappa });
            }
        }
        for w in self.lines.windows(2) {
            if w[0] == w[1] {
                return Err(Violation::DuplicateLine { line: w[0].clone() });
            }
        }
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (k, l) in self.lines.iter().enumerate() {
            for (s, &x) in l.iter().enumerate() {
                for &y in &l[s + 1..] {
                    if let Some(&other) = owner.get(&(x, y)) {
                        return Err(Violation::NotPartiallyLinear {
                            first: self.lines[other].clone(),
                            second: l.clone(),
                        });
                    }
                    owner.insert((x, y), k);
                }
            }
        }
        let ranks = self.ranks();
        let mut sig = Signature { nu, r: None, b, kappa };
        if nu < 3 || b == 0 {
            return Err(Violation::NotRegular { signature: sig, point: None });
        }
        if let Some(p) = ranks.iter().position(|&r| r != ranks[0]) {
            return Err(Violation::NotRegular { signature: sig, point: Some(p) });
        }
        sig.r = Some(ranks[0]);
        Ok(sig)
    }

    /// Verification that returns the crate error type.
    pub fn verified(&self) -> Result<Signature> {
        self.verify().map_err(Error::NotVerified)
    }

    pub fn join(&self, x: usize, y: usize) -> Result<Join> {
        let n = self.points.len();
        if x >= n || y >= n {
            return Err(Error::NoSuchPoint(format!("{}", x.max(y))));
        }
        if x == y {
            return Ok(Join::Same(x));
        }
        Ok(self.lines.iter().position(|l| l.contains(&x) && l.contains(&y)).map_or(Join::None, Join::Line))
    }

    pub fn join_labels(&self, x: &PointLabel, y: &PointLabel) -> Result<Option<&[usize]>> {
        let (i, j) = (self.require(x)?, self.require(y)?);
        Ok(match self.join(i, j)? {
            Join::Line(k) => Some(&self.lines[k]),
            _ => None,
        })
    }

    /// `x ⊕ y` for size-3 lines.
    pub fn third_point(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            return None;
        }
        self.lines
            .iter()
            .find(|l| l.len() == 3 && l.contains(&x) && l.contains(&y))
            .and_then(|l| l.iter().copied().find(|&z| z != x && z != y))
    }

    pub fn join_table(&self) -> JoinTable {
        JoinTable::new(self)
    }

    /// Keeps exactly the lines inside `subset`; points keep their relative
    /// order.
    pub fn induced(&self, subset: &[usize]) -> Result<Configuration> {
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut newidx = vec![usize::MAX; self.points.len()];
        for (k, &x) in keep.iter().enumerate() {
            if x >= self.points.len() {
                return Err(Error::NoSuchPoint(x.to_string()));
            }
            newidx[x] = k;
        }
        let lines = self
            .lines
            .iter()
            .filter(|l| l.iter().all(|&x| newidx[x] != usize::MAX))
            .map(|l| l.iter().map(|&x| newidx[x]).collect())
            .collect();
        Configuration::new(keep.iter().map(|&x| self.points[x].clone()).collect(), lines)
    }

    pub fn induced_labels(&self, labels: &[PointLabel]) -> Result<Configuration> {
        let idx = labels.iter().map(|l| self.require(l)).collect::<Result<Vec<_>>>()?;
        self.induced(&idx)
    }

    /// Adjacency lists of the collinearity graph.
    pub fn collinearity_graph(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.points.len()];
        for l in &self.lines {
            for &x in l {
                for &y in l {
                    if x != y {
                        adj[x].push(y);
                    }
                }
            }
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    /// Moves point `i` to position `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Configuration> {
        let n = self.points.len();
        if perm.len() != n {
            return Err(Error::InvalidArgument("relabeling has wrong length".into()));
        }
        let mut points = vec![PointLabel::Center; n];
        let mut seen = vec![false; n];
        for (i, &t) in perm.iter().enumerate() {
            if t >= n || seen[t] {
                return Err(Error::InvalidArgument("relabeling is not a bijection".into()));
            }
            seen[t] = true;
            points[t] = self.points[i].clone();
        }
        let lines = self.lines.iter().map(|l| l.iter().map(|&x| perm[x]).collect()).collect();
        Configuration::new(points, lines)
    }

    /// Same lines, fresh labels `Free("0")`, ...
    pub fn strip_labels(&self) -> Configuration {
        Configuration::unlabeled(self.points.len(), self.lines.clone()).expect("valid indices")
    }

    /// True when `map` (point of self to point of other) sends the line set
    /// of `self` exactly onto that of `other`.
    pub fn is_isomorphism(&self, other: &Configuration, map: &[usize]) -> bool {
        if map.len() != self.num_points()
            || self.num_points() != other.num_points()
            || self.lines.len() != other.lines.len()
        {
            return false;
        }
        let mut seen = vec![false; other.num_points()];
        for &t in map {
            if t >= seen.len() || seen[t] {
                return false;
            }
            seen[t] = true;
        }
        let mut img: Vec<Vec<usize>> = self
            .lines
            .iter()
            .map(|l| {
                let mut v: Vec<usize> = l.iter().map(|&x| map[x]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        img.sort();
        img == other.lines
    }

    pub fn to_json(&self) -> String {
        let w = Wire { points: self.points.iter().map(|p| p.to_string()).collect(), lines: self.lines.clone() };
        serde_json::to_string(&w).expect("serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        let w = Wire { points: self.points.iter().map(|p| p.to_string()).collect(), lines: self.lines.clone() };
        serde_json::to_string_pretty(&w).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Configuration> {
        let w: Wire = serde_json::from_str(s)?;
        let points = w.points.iter().map(|s| s.parse()).collect::<Result<Vec<PointLabel>>>()?;
        Configuration::new(points, w.lines)
    }

    /// Levi graph in DOT: points circled, lines boxed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph levi {\n");
        for (i, p) in self.points.iter().enumerate() {
            let label = p.to_string().replace('"', "\\\"");
            s.push_str(&format!("  p{i} [label=\"{label}\", shape=circle];\n"));
        }
        for (k, _) in self.lines.iter().enumerate() {
            s.push_str(&format!("  l{k} [label=\"L{k}\", shape=box];\n"));
        }
        for (k, l) in self.lines.iter().enumerate() {
            for &x in l {
                s.push_str(&format!("  p{x} -- l{k};\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn export(&self, format: &str) -> Result<Vec<u8>> {
        match format {
            "json" => Ok(self.to_json().into_bytes()),
            "dot" => Ok(self.to_dot().into_bytes()),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Dense `x ⊕ y` lookup for partial linear spaces with 3-point lines.
#[derive(Clone, Debug)]
pub struct JoinTable {
    n: usize,
    line: Vec<u32>,
    third: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl JoinTable {
    pub fn new(c: &Configuration) -> JoinTable {
        let n = c.num_points();
        let mut line = vec![NONE; n * n];
        let mut third = vec![NONE; n * n];
        for (k, l) in c.lines().iter().enumerate() {
            for &x in l {
                for &y in l {
                    if x != y && line[x * n + y] == NONE {
                        line[x * n + y] = k as u32;
                        if l.len() == 3 {
                            let z = l.iter().copied().find(|&z| z != x && z != y).unwrap();
                            third[x * n + y] = z as u32;
                        }
                    }
                }
            }
        }
        JoinTable { n, line, third }
    }

    pub fn line(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.line[x * self.n + y];
        (v != NONE).then_some(v as usize)
    }

    pub fn third(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.third[x * self.n + y];
        (v != NONE).then_some(v as usize)
    }

    pub fn collinear(&self, x: usize, y: usize) -> bool {
        self.line[x * self.n + y] != NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_line() -> Configuration {
        Configuration::unlabeled(3, vec![vec![2, 0, 1]]).unwrap()
    }

    #[test]
    fn labels_round_trip() {
        for s in ["p", "a1", "b12", "c{1,2}", "c{3,4}", "xyz", "a0", "a01", "c{2,2}", "a^2b"] {
            let l: PointLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert_eq!("c{2,1}".parse::<PointLabel>().unwrap(), PointLabel::C(0, 1));
        assert!(matches!("a0".parse::<PointLabel>().unwrap(), PointLabel::Free(_)));
    }

    #[test]
    fn single_line_signature() {
        let c = single_line();
        assert_eq!(c.verify().unwrap(), Signature { nu: 3, r: Some(1), b: 1, kappa: 3 });
        assert_eq!(c.lines(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn degenerate_inputs_are_irregular() {
        let empty = Configuration::unlabeled(0, vec![]).unwrap();
        assert!(matches!(empty.verify(), Err(Violation::NotRegular { .. })));
        let no_lines = Configuration::unlabeled(5, vec![]).unwrap();
        assert!(matches!(no_lines.verify(), Err(Violation::NotRegular { .. })));
    }

    #[test]
    fn violations_are_named() {
        let c = Configuration::unlabeled(5, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(matches!(c.verify(), Err(Violation::NotPartiallyLinear { .. })));
        let c = Configuration::unlabeled(5, vec![vec![0, 1, 2], vec![2, 3]]).unwrap();
        assert!(matches!(c.verify(), Err(Violation::NotKConfiguration { .. })));
        let c = Configuration::unlabeled(3, vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert!(matches!(c.verify(), Err(Violation::DuplicateLine { .. })));
        let c = Configuration::unlabeled(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(matches!(c.verify(), Err(Violation::NotRegular { point: Some(2), .. })));
        assert!(Configuration::unlabeled(2, vec![vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn join_and_third_point() {
        let c = single_line();
        assert_eq!(c.join(0, 1).unwrap(), Join::Line(0));
        assert_eq!(c.join(1, 1).unwrap(), Join::Same(1));
        assert_eq!(c.third_point(0, 2), Some(1));
        assert!(c.join(0, 7).is_err());
    }

    #[test]
    fn collinearity_of_a_line_is_a_triangle() {
        assert_eq!(single_line().collinearity_graph(), vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
    }

    #[test]
    fn json_and_dot() {
        let c = Configuration::new(vec![PointLabel::Center, PointLabel::A(0), PointLabel::B(0)], vec![vec![0, 1, 2]])
            .unwrap();
        let j = c.to_json();
        assert_eq!(j, r#"{"points":["p","a1","b1"],"lines":[[0,1,2]]}"#);
        assert_eq!(Configuration::from_json(&j).unwrap(), c);
        let dot = c.to_dot();
        assert!(dot.contains("shape=circle") && dot.contains("shape=box"));
        assert!(c.export("svg").is_err());
    }
}
