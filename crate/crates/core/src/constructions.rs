//! Configuration families: Grassmannians, skew perspectives, labeled Veblen
//! configurations, multiveblen configurations, Veronesians and
//! quasi-Grassmannians.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::incidence::{Configuration, PointLabel, Signature};
use crate::perm::{all_pairs, num_pairs, pair_index, PairPermutation, Permutation};

/// The points `c{i,j}` of `℘₂(I)` in lexicographic order.
pub fn pair_points(n: usize) -> Vec<PointLabel> {
    all_pairs(n).into_iter().map(|(i, j)| PointLabel::pair(i, j)).collect()
}

/// A configuration on `℘₂(I)` from lines given as pair indices.
pub fn pair_configuration(n: usize, lines: Vec<Vec<usize>>) -> Result<Configuration> {
    Configuration::new(pair_points(n), lines)
}

/// Lines of a configuration on `℘₂(I)` written as pair indices.
pub fn axis_pair_lines(axis: &Configuration, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut idx = vec![usize::MAX; axis.num_points()];
    let mut hit = vec![false; num_pairs(n)];
    for (k, p) in axis.points().iter().enumerate() {
        match *p {
            PointLabel::C(i, j) if (j as usize) < n => {
                let u = pair_index(n, i as usize, j as usize);
                hit[u] = true;
                idx[k] = u;
            }
            _ => return Err(Error::AxisInvalid(format!("point {p} is not a pair of I_{n}"))),
        }
    }
    if axis.num_points() != num_pairs(n) || hit.iter().any(|h| !h) {
        return Err(Error::AxisInvalid(format!("points are not exactly the pairs of I_{n}")));
    }
    let mut lines: Vec<Vec<usize>> = axis
        .lines()
        .iter()
        .map(|l| {
            let mut v: Vec<usize> = l.iter().map(|&x| idx[x]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    lines.sort();
    Ok(lines)
}

/// Puts an axis into the standard pair order.
pub fn normalize_axis(axis: &Configuration, n: usize) -> Result<Configuration> {
    pair_configuration(n, axis_pair_lines(axis, n)?)
}

/// The image of an axis under a pair bijection.
pub fn map_axis(axis: &Configuration, delta: &PairPermutation) -> Result<Configuration> {
    let n = delta.n();
    let lines =
        axis_pair_lines(axis, n)?.into_iter().map(|l| l.into_iter().map(|u| delta.apply(u)).collect()).collect();
    pair_configuration(n, lines)
}

/// `G(n, 2)`: points are the 2-subsets, lines the 3-subsets.
pub fn grassmannian(n: usize) -> Result<Configuration> {
    if n < 3 {
        return Err(Error::InvalidArgument("grassmannian needs n >= 3 (no lines)".into()));
    }
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                lines.push(vec![pair_index(n, i, j), pair_index(n, i, k), pair_index(n, j, k)]);
            }
        }
    }
    pair_configuration(n, lines)
}

/// Point indices of a skew perspective in construction order:
/// `p`, `a_0..a_{n-1}`, `b_0..b_{n-1}`, then the pairs.
#[derive(Clone, Copy, Debug)]
pub struct SkewIndex {
    pub n: usize,
}

impl SkewIndex {
    pub fn p(&self) -> usize {
        0
    }
    pub fn a(&self, i: usize) -> usize {
        1 + i
    }
    pub fn b(&self, i: usize) -> usize {
        1 + self.n + i
    }
    pub fn c(&self, i: usize, j: usize) -> usize {
        1 + 2 * self.n + pair_index(self.n, i, j)
    }
    pub fn c_index(&self, u: usize) -> usize {
        1 + 2 * self.n + u
    }
    pub fn total(&self) -> usize {
        1 + 2 * self.n + num_pairs(self.n)
    }
}

/// The recipe `(n, δ, axis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPerspectiveSpec {
    pub n: usize,
    pub delta: PairPermutation,
    pub axis: Configuration,
}

impl SkewPerspectiveSpec {
    /// Checks that the axis is a binomial configuration on `℘₂(I)` and puts
    /// it in standard pair order.
    pub fn new(n: usize, delta: PairPermutation, axis: &Configuration) -> Result<SkewPerspectiveSpec> {
        if n < 3 {
            return Err(Error::AxisInvalid("n must be at least 3".into()));
        }
        if delta.n() != n {
            return Err(Error::InvalidArgument("skew acts on a different index set".into()));
        }
        let axis = normalize_axis(axis, n)?;
        let sig = axis.verify().map_err(|v| Error::AxisInvalid(v.to_string()))?;
        let want = Signature::binomial(n - 2);
        if sig != want {
            return Err(Error::AxisInvalid(format!("signature {sig}, expected {want}")));
        }
        Ok(SkewPerspectiveSpec { n, delta, axis })
    }

    pub fn induced(sigma: &Permutation, axis: &Configuration) -> Result<SkewPerspectiveSpec> {
        SkewPerspectiveSpec::new(sigma.n(), PairPermutation::induced(sigma), axis)
    }

    pub fn kappa(phi: &Permutation, axis: &Configuration) -> Result<SkewPerspectiveSpec> {
        SkewPerspectiveSpec::new(phi.n(), PairPermutation::kappa_composed(phi)?, axis)
    }

    pub fn index(&self) -> SkewIndex {
        SkewIndex { n: self.n }
    }

    pub fn build(&self) -> Configuration {
        skew_perspective(self)
    }

    /// The same structure with indices renamed by `φ`: skew `φ̄δφ̄⁻¹`, axis
    /// `φ̄(axis)`.
    pub fn relabel(&self, phi: &Permutation) -> SkewPerspectiveSpec {
        let bar = PairPermutation::induced(phi);
        let delta = bar.compose(&self.delta).compose(&bar.inverse());
        let axis = map_axis(&self.axis, &bar).expect("axis already validated");
        SkewPerspectiveSpec { n: self.n, delta, axis }
    }

    /// Point map from `self.build()` to `self.relabel(φ).build()`.
    pub fn relabel_point_map(&self, phi: &Permutation) -> Vec<usize> {
        let ix = self.index();
        let bar = PairPermutation::induced(phi);
        let mut m = vec![0; ix.total()];
        for i in 0..self.n {
            m[ix.a(i)] = ix.a(phi.apply(i));
            m[ix.b(i)] = ix.b(phi.apply(i));
        }
        for u in 0..num_pairs(self.n) {
            m[ix.c_index(u)] = ix.c_index(bar.apply(u));
        }
        m
    }
}

impl fmt::Display for SkewPerspectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = catalog_name_of(&self.axis, self.n).map(|c| c.to_string());
        match name {
            Some(a) => write!(f, "Π({}, {}, {})", self.n, self.delta, a),
            None => write!(f, "Π({}, {}, <axis>)", self.n, self.delta),
        }
    }
}

/// `Π(n, δ, N)`: lines `{p,aᵢ,bᵢ}`, `{aᵢ,aⱼ,c_{ij}}`, `{bᵢ,bⱼ,c_{δ⁻¹{i,j}}}`
/// and the axis lines.
pub fn skew_perspective(spec: &SkewPerspectiveSpec) -> Configuration {
    let n = spec.n;
    let ix = spec.index();
    let mut points = vec![PointLabel::Center];
    points.extend((0..n).map(|i| PointLabel::A(i as u8)));
    points.extend((0..n).map(|i| PointLabel::B(i as u8)));
    points.extend(pair_points(n));
    let inv = spec.delta.inverse();
    let mut lines = Vec::new();
    for i in 0..n {
        lines.push(vec![ix.p(), ix.a(i), ix.b(i)]);
    }
    for (u, (i, j)) in all_pairs(n).into_iter().enumerate() {
        lines.push(vec![ix.a(i), ix.a(j), ix.c_index(u)]);
        lines.push(vec![ix.b(i), ix.b(j), ix.c_index(inv.apply(u))]);
    }
    for l in spec.axis.lines() {
        // The axis is in standard pair order, so its indices are pair indices.
        lines.push(l.iter().map(|&u| ix.c_index(u)).collect());
    }
    Configuration::new(points, lines).expect("construction indices are valid")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    G,
    GStar,
    W2,
    V4,
    V5,
    V6,
}

impl CatalogName {
    pub const ALL: [CatalogName; 6] =
        [CatalogName::G, CatalogName::GStar, CatalogName::W2, CatalogName::V4, CatalogName::V5, CatalogName::V6];
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CatalogName::G => "G",
            CatalogName::GStar => "G*",
            CatalogName::W2 => "W2",
            CatalogName::V4 => "V4",
            CatalogName::V5 => "V5",
            CatalogName::V6 => "V6",
        };
        write!(f, "{s}")
    }
}

impl FromStr for CatalogName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "G" => CatalogName::G,
            "G*" => CatalogName::GStar,
            "W2" => CatalogName::W2,
            "V4" => CatalogName::V4,
            "V5" => CatalogName::V5,
            "V6" => CatalogName::V6,
            _ => return Err(Error::Parse(format!("unknown catalog axis {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeblenLabeling {
    pub config: Configuration,
    pub name: Option<CatalogName>,
}

fn is_top(n: usize, line: &[usize]) -> bool {
    let pairs = all_pairs(n);
    let set: BTreeSet<usize> = line.iter().flat_map(|&u| [pairs[u].0, pairs[u].1]).collect();
    set.len() == 3
}

fn is_star(n: usize, line: &[usize]) -> bool {
    let pairs = all_pairs(n);
    (0..n).any(|i| line.iter().all(|&u| pairs[u].0 == i || pairs[u].1 == i))
}

/// Number of axis lines of the form `T(Y)`.
pub fn top_line_count(axis: &Configuration, n: usize) -> Result<usize> {
    Ok(axis_pair_lines(axis, n)?.iter().filter(|l| is_top(n, l)).count())
}

/// Number of axis lines of the form `S(i)`.
pub fn star_line_count(axis: &Configuration, n: usize) -> Result<usize> {
    Ok(axis_pair_lines(axis, n)?.iter().filter(|l| is_star(n, l)).count())
}

/// The `48` maps `φ̄` and `κφ̄` on `℘₂(I₄)`, induced maps first.
pub fn veblen_maps() -> Vec<PairPermutation> {
    let perms = Permutation::all(4);
    let mut v: Vec<PairPermutation> = perms.iter().map(PairPermutation::induced).collect();
    v.extend(perms.iter().map(|p| PairPermutation::kappa_composed(p).expect("n = 4")));
    v
}

/// All labeled Veblen configurations on `℘₂(I₄)` and their orbits under the
/// 48 maps.
#[derive(Clone, Debug)]
pub struct VeblenEnumeration {
    /// Sorted by line list.
    pub labelings: Vec<Configuration>,
    /// Each orbit lists labeling indices in increasing order; orbits are
    /// ordered by their least member.
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
    pub catalog_orbits: Vec<(CatalogName, usize)>,
    /// True when every orbit contains a catalog labeling.
    pub catalog_exhaustive: bool,
}

fn enumerate_labelings() -> Vec<Configuration> {
    let triples: Vec<Vec<usize>> = {
        let mut t = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    t.push(vec![a, b, c]);
                }
            }
        }
        t
    };
    let m = triples.len();
    let mut out = Vec::new();
    let meets_ok = |x: &Vec<usize>, y: &Vec<usize>| x.iter().filter(|p| y.contains(p)).count() <= 1;
    for i in 0..m {
        for j in i + 1..m {
            if !meets_ok(&triples[i], &triples[j]) {
                continue;
            }
            for k in j + 1..m {
                if !meets_ok(&triples[i], &triples[k]) || !meets_ok(&triples[j], &triples[k]) {
                    continue;
                }
                for l in k + 1..m {
                    let set = [&triples[i], &triples[j], &triples[k], &triples[l]];
                    if !set[..3].iter().all(|t| meets_ok(t, &triples[l])) {
                        continue;
                    }
                    let mut deg = [0; 6];
                    for t in set {
                        for &x in t {
                            deg[x] += 1;
                        }
                    }
                    if deg.iter().all(|&d| d == 2) {
                        out.push(pair_configuration(4, set.iter().map(|t| t.to_vec()).collect()).unwrap());
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.lines().cmp(b.lines()));
    out
}

pub fn enumerate_veblen() -> VeblenEnumeration {
    let labelings = enumerate_labelings();
    let pos: BTreeMap<Vec<Vec<usize>>, usize> =
        labelings.iter().enumerate().map(|(k, c)| (c.lines().to_vec(), k)).collect();
    let maps = veblen_maps();
    let mut orbit_of = vec![usize::MAX; labelings.len()];
    let mut orbits = Vec::new();
    for k in 0..labelings.len() {
        if orbit_of[k] != usize::MAX {
            continue;
        }
        let mut orb = BTreeSet::new();
        for d in &maps {
            let img = map_axis(&labelings[k], d).unwrap();
            orb.insert(pos[img.lines()]);
        }
        for &m in &orb {
            orbit_of[m] = orbits.len();
        }
        orbits.push(orb.into_iter().collect::<Vec<_>>());
    }
    let catalog = catalog_from(&labelings);
    let catalog_orbits: Vec<(CatalogName, usize)> =
        catalog.iter().map(|v| (v.name.unwrap(), orbit_of[pos[v.config.lines()]])).collect();
    let covered: BTreeSet<usize> = catalog_orbits.iter().map(|&(_, o)| o).collect();
    let catalog_exhaustive = covered.len() == orbits.len();
    VeblenEnumeration { labelings, orbits, orbit_of, catalog_orbits, catalog_exhaustive }
}

/// The labeling whose lines are printed in the multiveblen example.
pub fn w2() -> Configuration {
    let p = |i: usize, j: usize| pair_index(4, i - 1, j - 1);
    pair_configuration(
        4,
        vec![
            vec![p(1, 4), p(1, 2), p(2, 4)],
            vec![p(1, 4), p(1, 3), p(3, 4)],
            vec![p(1, 2), p(2, 3), p(3, 4)],
            vec![p(1, 3), p(2, 3), p(2, 4)],
        ],
    )
    .unwrap()
}

fn catalog_from(labelings: &[Configuration]) -> Vec<VeblenLabeling> {
    let kappa = PairPermutation::kappa(4).unwrap();
    let g = grassmannian(4).unwrap();
    let gs = map_axis(&g, &kappa).unwrap();
    let w = w2();
    let v4 = map_axis(&w, &kappa).unwrap();
    let v5 = labelings
        .iter()
        .find(|c| top_line_count(c, 4).unwrap() == 1 && star_line_count(c, 4).unwrap() == 0)
        .expect("a labeling with a single top line exists")
        .clone();
    let v6 = map_axis(&v5, &kappa).unwrap();
    [g, gs, w, v4, v5, v6]
        .into_iter()
        .zip(CatalogName::ALL)
        .map(|(config, name)| VeblenLabeling { config, name: Some(name) })
        .collect()
}

fn catalog_cached() -> &'static [VeblenLabeling] {
    static CATALOG: OnceLock<Vec<VeblenLabeling>> = OnceLock::new();
    CATALOG.get_or_init(|| catalog_from(&enumerate_labelings()))
}

/// `G, G*, W2, V4, V5, V6` in that order.
pub fn veblen_catalog() -> Vec<VeblenLabeling> {
    catalog_cached().to_vec()
}

pub fn catalog_axis(name: CatalogName) -> Configuration {
    catalog_cached().iter().find(|v| v.name == Some(name)).unwrap().config.clone()
}

/// Catalog name of an axis on `℘₂(I₄)` if it is literally one of the six.
pub fn catalog_name_of(axis: &Configuration, n: usize) -> Option<CatalogName> {
    if n != 4 {
        return None;
    }
    let lines = axis_pair_lines(axis, 4).ok()?;
    catalog_cached().iter().find(|v| v.config.lines() == lines.as_slice()).and_then(|v| v.name)
}

/// A simple graph on `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            if i == j || i >= n || j >= n {
                return Err(Error::InvalidArgument(format!("bad edge ({i},{j})")));
            }
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Graph { n, edges: set })
    }
    pub fn complete(n: usize) -> Graph {
        Graph { n, edges: all_pairs(n).into_iter().collect() }
    }
    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: BTreeSet::new() }
    }
    pub fn path(n: usize) -> Graph {
        Graph { n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }
}

/// The multiveblen configuration: the graph decides whether `c_{ij}` joins
/// `aᵢaⱼ` and `bᵢbⱼ`, or the mixed pairs `aᵢbⱼ` and `bᵢaⱼ`.
pub fn multiveblen(graph: &Graph, axis: &Configuration) -> Result<Configuration> {
    let n = graph.n;
    let axis_lines = axis_pair_lines(axis, n)?;
    let ix = SkewIndex { n };
    let mut points = vec![PointLabel::Center];
    points.extend((0..n).map(|i| PointLabel::A(i as u8)));
    points.extend((0..n).map(|i| PointLabel::B(i as u8)));
    points.extend(pair_points(n));
    let mut lines = Vec::new();
    for i in 0..n {
        lines.push(vec![ix.p(), ix.a(i), ix.b(i)]);
    }
    for (u, (i, j)) in all_pairs(n).into_iter().enumerate() {
        let c = ix.c_index(u);
        if graph.has_edge(i, j) {
            lines.push(vec![ix.a(i), ix.a(j), c]);
            lines.push(vec![ix.b(i), ix.b(j), c]);
        } else {
            lines.push(vec![ix.a(i), ix.b(j), c]);
            lines.push(vec![ix.b(i), ix.a(j), c]);
        }
    }
    for l in axis_lines {
        lines.push(l.into_iter().map(|u| ix.c_index(u)).collect());
    }
    let c = Configuration::new(points, lines)?;
    c.verified()?;
    Ok(c)
}

/// Exponents of `a^i b^j c^l` with `i + j + l = k`, ordered by decreasing
/// `a`-exponent, then decreasing `b`-exponent.
pub fn veronesian_monomials(k: usize) -> Vec<[usize; 3]> {
    let mut v = Vec::new();
    for i in (0..=k).rev() {
        for j in (0..=k - i).rev() {
            v.push([i, j, k - i - j]);
        }
    }
    v
}

pub fn monomial_label(e: [usize; 3]) -> PointLabel {
    let mut s = String::new();
    for (letter, &x) in ["a", "b", "c"].iter().zip(&e) {
        match x {
            0 => {}
            1 => s.push_str(letter),
            _ => s.push_str(&format!("{letter}^{x}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    PointLabel::Free(s)
}

/// `V(3, k)` on degree-`k` monomials over `{a, b, c}`: lines are
/// `{e·a^s, e·b^s, e·c^s}` for `1 ≤ s ≤ k` and `deg e = k − s`.
pub fn veronesian(k: usize) -> Result<Configuration> {
    if k == 0 {
        return Err(Error::InvalidArgument("veronesian needs k >= 1".into()));
    }
    let mons = veronesian_monomials(k);
    let pos: BTreeMap<[usize; 3], usize> = mons.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut lines = Vec::new();
    for s in 1..=k {
        for e in veronesian_monomials(k - s) {
            let l: Vec<usize> = (0..3)
                .map(|x| {
                    let mut m = e;
                    m[x] += s;
                    pos[&m]
                })
                .collect();
            lines.push(l);
        }
    }
    Configuration::new(mons.into_iter().map(monomial_label).collect(), lines)
}

/// `(1,2)(3,4)...` on `n` points; for odd `n` the last index is fixed.
pub fn quasi_grassmannian_skew(n: usize) -> Permutation {
    let mut img: Vec<usize> = (0..n).collect();
    for k in 0..n / 2 {
        img.swap(2 * k, 2 * k + 1);
    }
    Permutation::from_images(img).unwrap()
}

pub fn quasi_grassmannian_spec(n: usize) -> Result<SkewPerspectiveSpec> {
    if n < 4 {
        return Err(Error::InvalidArgument("quasi-Grassmannian needs n >= 4".into()));
    }
    SkewPerspectiveSpec::induced(&quasi_grassmannian_skew(n), &grassmannian(n)?)
}

pub fn quasi_grassmannian(n: usize) -> Result<Configuration> {
    Ok(skew_perspective(&quasi_grassmannian_spec(n)?))
}

/// Swaps `{1,2} ↔ {3,4}` and fixes the other pairs.
pub fn zeta() -> PairPermutation {
    let mut map: Vec<usize> = (0..6).collect();
    map.swap(pair_index(4, 0, 1), pair_index(4, 2, 3));
    PairPermutation::general(4, map).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn grassmannian_signatures() {
        assert_eq!(grassmannian(4).unwrap().verify().unwrap(), Signature { nu: 6, r: Some(2), b: 4, kappa: 3 });
        assert_eq!(grassmannian(5).unwrap().verify().unwrap(), Signature { nu: 10, r: Some(3), b: 10, kappa: 3 });
        assert_eq!(grassmannian(6).unwrap().verify().unwrap(), Signature::binomial(4));
        assert!(grassmannian(2).is_err());
    }

    #[test]
    fn binomial_signature_for_n5() {
        let spec = SkewPerspectiveSpec::induced(&perm("(1,2)(3,4)", 5), &grassmannian(5).unwrap()).unwrap();
        assert_eq!(spec.build().verify().unwrap(), Signature { nu: 21, r: Some(5), b: 35, kappa: 3 });
    }

    #[test]
    fn b_joins_follow_the_inverse_skew() {
        let spec = SkewPerspectiveSpec::induced(&perm("(1,2,3,4)", 4), &grassmannian(4).unwrap()).unwrap();
        let c = spec.build();
        let ix = spec.index();
        assert_eq!(c.third_point(ix.b(1), ix.b(2)), Some(ix.c(0, 1)));
        let s = perm("(1,2,3,4)", 4);
        let si = s.inverse();
        for i in 0..4 {
            for j in i + 1..4 {
                assert_eq!(c.third_point(ix.b(i), ix.b(j)), Some(ix.c(si.apply(i), si.apply(j))));
                assert_eq!(c.third_point(ix.a(i), ix.a(j)), Some(ix.c(i, j)));
            }
        }
    }

    #[test]
    fn axis_must_be_binomial() {
        let bad = pair_configuration(4, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(SkewPerspectiveSpec::induced(&Permutation::identity(4), &bad), Err(Error::AxisInvalid(_))));
        assert!(SkewPerspectiveSpec::induced(&Permutation::identity(5), &grassmannian(4).unwrap()).is_err());
    }

    #[test]
    fn catalog_shapes() {
        let cat = veblen_catalog();
        let counts: Vec<(usize, usize)> = cat
            .iter()
            .map(|v| (top_line_count(&v.config, 4).unwrap(), star_line_count(&v.config, 4).unwrap()))
            .collect();
        assert_eq!(counts, vec![(4, 0), (0, 4), (2, 0), (0, 2), (1, 0), (0, 1)]);
        for v in &cat {
            assert_eq!(v.config.verify().unwrap(), Signature { nu: 6, r: Some(2), b: 4, kappa: 3 });
        }
    }

    #[test]
    fn veblen_enumeration() {
        let e = enumerate_veblen();
        assert_eq!(e.labelings.len(), 30);
        let mut sizes: Vec<usize> = e.orbits.iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 12, 16]);
        assert!(e.catalog_exhaustive);
        let g = e.catalog_orbits.iter().find(|x| x.0 == CatalogName::G).unwrap().1;
        let gs = e.catalog_orbits.iter().find(|x| x.0 == CatalogName::GStar).unwrap().1;
        assert_eq!(g, gs);
        assert_eq!(e.orbits[g].len(), 2);
    }

    #[test]
    fn veronesian_small_cases() {
        assert_eq!(veronesian(1).unwrap().verify().unwrap(), Signature { nu: 3, r: Some(1), b: 1, kappa: 3 });
        assert_eq!(veronesian(2).unwrap().verify().unwrap(), Signature { nu: 6, r: Some(2), b: 4, kappa: 3 });
        for k in 2..7 {
            assert_eq!(veronesian(k).unwrap().verify().unwrap(), Signature::binomial(k), "k = {k}");
        }
    }

    #[test]
    fn quasi_grassmannian_signature() {
        assert_eq!(quasi_grassmannian(4).unwrap().verify().unwrap(), Signature::binomial(4));
        assert_eq!(quasi_grassmannian_skew(5).to_string(), "(1,2)(3,4)");
        assert!(quasi_grassmannian(3).is_err());
    }

    #[test]
    fn multiveblen_signatures() {
        let g = grassmannian(4).unwrap();
        for graph in [Graph::complete(4), Graph::path(4), Graph::empty(4)] {
            assert_eq!(multiveblen(&graph, &g).unwrap().verify().unwrap(), Signature::binomial(4));
        }
    }

    #[test]
    fn zeta_is_general() {
        let z = zeta();
        assert_eq!(z.apply_pair(0, 1), (2, 3));
        assert_eq!(z.apply_pair(0, 2), (0, 2));
        let spec = SkewPerspectiveSpec::new(4, z, &grassmannian(4).unwrap()).unwrap();
        assert_eq!(spec.build().verify().unwrap(), Signature::binomial(4));
    }
}
