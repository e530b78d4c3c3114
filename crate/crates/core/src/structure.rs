//! Freely contained complete graphs, skew classification, alternate centers
//! and re-presentation of a configuration as a perspective from a new center.

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{pair_configuration, SkewPerspectiveSpec};
use crate::error::{Error, Result};
use crate::incidence::{Configuration, JoinTable};
use crate::perm::{all_pairs, num_pairs, pair_index, star, PairPermutation, PairTag, Permutation};

/// Freeness from the definition: every edge lies on a line, distinct edges
/// lie on distinct lines, and lines of disjoint edges do not meet.
pub fn is_freely_contained(config: &Configuration, vertices: &[usize]) -> bool {
    let jt = config.join_table();
    let mut v = vertices.to_vec();
    v.sort_unstable();
    v.dedup();
    let mut edges = Vec::new();
    for (s, &x) in v.iter().enumerate() {
        for &y in &v[s + 1..] {
            match jt.line(x, y) {
                Some(l) => edges.push((x, y, l)),
                None => return false,
            }
        }
    }
    for (s, e) in edges.iter().enumerate() {
        for f in &edges[s + 1..] {
            if e.2 == f.2 {
                return false;
            }
            let disjoint = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
            if disjoint {
                let le = &config.lines()[e.2];
                let lf = &config.lines()[f.2];
                if le.iter().any(|p| lf.contains(p)) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeGraph {
    pub vertices: Vec<usize>,
    /// The fixed index whose star predicts this graph, when it does.
    pub via_criterion: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeGraphReport {
    pub size: usize,
    pub graphs: Vec<FreeGraph>,
}

impl FreeGraphReport {
    pub fn count(&self) -> usize {
        self.graphs.len()
    }
}

struct CliqueSearch<'a> {
    jt: &'a JoinTable,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl CliqueSearch<'_> {
    fn grow(&self, clique: &mut Vec<usize>, thirds: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if clique.len() == self.m {
            out.push(clique.clone());
            return;
        }
        let last = *clique.last().unwrap();
        'cand: for &v in self.adj[last].iter().filter(|&&v| v > last) {
            if thirds.contains(&v) {
                continue;
            }
            let mark = thirds.len();
            for &u in clique.iter() {
                let Some(t) = self.jt.third(u, v) else {
                    thirds.truncate(mark);
                    continue 'cand;
                };
                if clique.contains(&t) || thirds.contains(&t) {
                    thirds.truncate(mark);
                    continue 'cand;
                }
                thirds.push(t);
            }
            clique.push(v);
            self.grow(clique, thirds, out);
            clique.pop();
            thirds.truncate(mark);
        }
    }
}

/// All `m`-sets that are freely contained complete graphs, in increasing
/// lexicographic order. Assumes 3-point lines.
pub fn free_complete_subgraphs(config: &Configuration, m: usize) -> FreeGraphReport {
    let jt = config.join_table();
    let search = CliqueSearch { jt: &jt, adj: config.collinearity_graph(), m };
    let mut all: Vec<Vec<usize>> = if m == 0 {
        vec![vec![]]
    } else {
        (0..config.num_points())
            .into_par_iter()
            .flat_map_iter(|root| {
                let mut out = Vec::new();
                search.grow(&mut vec![root], &mut Vec::new(), &mut out);
                out
            })
            .collect()
    };
    all.sort();
    FreeGraphReport {
        size: m,
        graphs: all.into_iter().map(|vertices| FreeGraph { vertices, via_criterion: None }).collect(),
    }
}

/// The permutation behind an induced skew, recovered if needed.
pub fn permutation_skew(delta: &PairPermutation) -> Option<Permutation> {
    match delta.tag() {
        PairTag::Induced(s) => Some(s.clone()),
        _ => match classify_pair_skew(delta) {
            SkewClass::InducedBy(s) => Some(s),
            _ => None,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThirdGraph {
    pub i0: usize,
    /// Points `a_{i0}`, `b_{i0}` and the star `S(i0)` in the perspective.
    pub vertices: Vec<usize>,
}

/// Fixed indices `i0` whose star is a freely contained clique of the axis.
pub fn third_graph_criterion(spec: &SkewPerspectiveSpec) -> Result<Vec<ThirdGraph>> {
    let sigma = permutation_skew(&spec.delta).ok_or(Error::NotPermutationSkew)?;
    let ix = spec.index();
    let mut out = Vec::new();
    for i0 in sigma.fixed_points() {
        let s: Vec<usize> = star(i0, spec.n).into_iter().map(|(i, j)| pair_index(spec.n, i, j)).collect();
        if is_freely_contained(&spec.axis, &s) {
            let mut vertices = vec![ix.a(i0), ix.b(i0)];
            vertices.extend(s.iter().map(|&u| ix.c_index(u)));
            vertices.sort_unstable();
            out.push(ThirdGraph { i0, vertices });
        }
    }
    Ok(out)
}

/// Free `K_{n+1}` report for a skew perspective, with graphs predicted by the
/// fixed-point criterion marked.
pub fn free_graphs_of_spec(spec: &SkewPerspectiveSpec) -> FreeGraphReport {
    let mut rep = free_complete_subgraphs(&spec.build(), spec.n + 1);
    if let Ok(third) = third_graph_criterion(spec) {
        for g in rep.graphs.iter_mut() {
            g.via_criterion = third.iter().find(|t| t.vertices == g.vertices).map(|t| t.i0);
        }
    }
    rep
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SkewClass {
    InducedBy(Permutation),
    ComplementOf(Permutation),
    NonPreserving,
}

impl std::fmt::Display for SkewClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SkewClass::InducedBy(p) => write!(f, "induced by {p}"),
            SkewClass::ComplementOf(p) => write!(f, "κ composed with {p}"),
            SkewClass::NonPreserving => write!(f, "not intersection-preserving"),
        }
    }
}

fn meets_once(n: usize, u: usize, v: usize) -> bool {
    let pairs = all_pairs(n);
    let (a, b) = (pairs[u], pairs[v]);
    let common = [a.0, a.1].iter().filter(|x| **x == b.0 || **x == b.1).count();
    common == 1
}

fn recover_induced(delta: &[usize], n: usize) -> Option<Permutation> {
    let pairs = all_pairs(n);
    let mut img = Vec::with_capacity(n);
    for i in 0..n {
        let images: Vec<(usize, usize)> =
            star(i, n).into_iter().map(|(a, b)| pairs[delta[pair_index(n, a, b)]]).collect();
        let c = (0..n).find(|&c| images.iter().all(|&(x, y)| x == c || y == c))?;
        img.push(c);
    }
    let phi = Permutation::from_images(img).ok()?;
    (PairPermutation::induced(&phi).images() == delta).then_some(phi)
}

/// Decides whether `δ` preserves pair intersection and, if so, recovers `φ`
/// with `δ = φ̄` or (for `n = 4`) `δ = κφ̄`.
pub fn classify_pair_skew(delta: &PairPermutation) -> SkewClass {
    let n = delta.n();
    let m = num_pairs(n);
    for u in 0..m {
        for v in u + 1..m {
            if meets_once(n, u, v) != meets_once(n, delta.apply(u), delta.apply(v)) {
                return SkewClass::NonPreserving;
            }
        }
    }
    if let Some(phi) = recover_induced(delta.images(), n) {
        return SkewClass::InducedBy(phi);
    }
    if n == 4 {
        let kappa = PairPermutation::kappa(4).unwrap();
        let kd = kappa.compose(&delta.untagged());
        if let Some(phi) = recover_induced(kd.images(), n) {
            return SkewClass::ComplementOf(phi);
        }
    }
    if n <= 8 {
        for phi in Permutation::all(n) {
            if PairPermutation::induced(&phi).images() == delta.images() {
                return SkewClass::InducedBy(phi);
            }
        }
    }
    SkewClass::NonPreserving
}

/// Re-tags a pair map with its recovered provenance.
pub fn tagged(delta: &PairPermutation) -> PairPermutation {
    match classify_pair_skew(delta) {
        SkewClass::InducedBy(p) => PairPermutation::induced(&p),
        SkewClass::ComplementOf(p) => PairPermutation::kappa_composed(&p).unwrap(),
        SkewClass::NonPreserving => delta.untagged(),
    }
}

/// Searches `τ ∈ S_{I∖{i0}}` such that moving the center to `a_{i0}` with the
/// graphs `A*` and `G_(i0)` gives a skew induced by `τ`. This needs both
/// `c_{i0,τ(i)} ⊕ c_{i0,τ(j)} = c_{i,j}` in the axis and, on the lines
/// through the old center, `σ(τ(i)) = i`.
pub fn movecenter_condition(spec: &SkewPerspectiveSpec, i0: usize) -> Result<Option<Permutation>> {
    let sigma = permutation_skew(&spec.delta).ok_or(Error::NotPermutationSkew)?;
    if !third_graph_criterion(spec)?.iter().any(|t| t.i0 == i0) {
        return Err(Error::InvalidCenter(format!("{} fails the fixed-point star criterion", i0 + 1)));
    }
    let n = spec.n;
    let jt = spec.axis.join_table();
    let others: Vec<usize> = (0..n).filter(|&i| i != i0).collect();
    'tau: for tau in Permutation::all(n) {
        if tau.apply(i0) != i0 {
            continue;
        }
        for &i in &others {
            if sigma.apply(tau.apply(i)) != i {
                continue 'tau;
            }
        }
        for (s, &i) in others.iter().enumerate() {
            for &j in &others[s + 1..] {
                let x = pair_index(n, i0, tau.apply(i));
                let y = pair_index(n, i0, tau.apply(j));
                if jt.third(x, y) != Some(pair_index(n, i, j)) {
                    continue 'tau;
                }
            }
        }
        return Ok(Some(tau));
    }
    Ok(None)
}

/// A configuration presented as a skew perspective from a chosen center.
#[derive(Clone, Debug)]
pub struct Reperspective {
    pub spec: SkewPerspectiveSpec,
    /// `point_map[k]` is the original point playing the role of point `k` of
    /// `spec.build()`.
    pub point_map: Vec<usize>,
}

/// Center `q`, free graphs `g1`, `g2` through `q`; the new indices follow the
/// original order of `g1 ∖ {q}`.
pub fn reperspective(config: &Configuration, q: usize, g1: &[usize], g2: &[usize]) -> Result<Reperspective> {
    let mut xs: Vec<usize> = g1.iter().copied().filter(|&x| x != q).collect();
    xs.sort_unstable();
    xs.dedup();
    if xs.len() + 1 != g1.len() || !g1.contains(&q) {
        return Err(Error::NotPerspectivePair("first graph must contain the center once".into()));
    }
    reperspective_ordered(config, q, &xs, g2)
}

/// As [`reperspective`] with the order of the new `A`-points given.
pub fn reperspective_ordered(config: &Configuration, q: usize, xs: &[usize], g2: &[usize]) -> Result<Reperspective> {
    let bad = |m: &str| Error::NotPerspectivePair(m.to_string());
    let n = xs.len();
    let total = config.num_points();
    if n < 3 || total != 1 + 2 * n + num_pairs(n) {
        return Err(bad("point count does not match a skew perspective on the given graphs"));
    }
    let mut g1: Vec<usize> = xs.to_vec();
    g1.push(q);
    let mut g2s: Vec<usize> = g2.to_vec();
    g2s.sort_unstable();
    g2s.dedup();
    if g2s.len() != n + 1 || !g2s.contains(&q) || g1.iter().any(|x| *x >= total) || g2s.iter().any(|x| *x >= total) {
        return Err(bad("graphs must both have n+1 points and contain the center"));
    }
    if g1.iter().filter(|x| g2s.contains(x)).count() != 1 {
        return Err(bad("graphs must meet exactly in the center"));
    }
    if !is_freely_contained(config, &g1) || !is_freely_contained(config, &g2s) {
        return Err(bad("graphs are not freely contained"));
    }
    let jt = config.join_table();
    let mut ys = Vec::with_capacity(n);
    for &x in xs {
        match jt.third(q, x) {
            Some(y) if g2s.contains(&y) => ys.push(y),
            _ => return Err(bad("a line through the center misses the second graph")),
        }
    }
    let mut in_graphs = vec![false; total];
    for &x in g1.iter().chain(&g2s) {
        in_graphs[x] = true;
    }
    let pairs = all_pairs(n);
    let mut e = Vec::with_capacity(pairs.len());
    let mut owner = vec![usize::MAX; total];
    for (u, &(i, j)) in pairs.iter().enumerate() {
        match jt.third(xs[i], xs[j]) {
            Some(t) if !in_graphs[t] && owner[t] == usize::MAX => {
                owner[t] = u;
                e.push(t);
            }
            _ => return Err(bad("edge joins of the first graph do not give fresh points")),
        }
    }
    let mut inv = vec![usize::MAX; pairs.len()];
    for (u, &(i, j)) in pairs.iter().enumerate() {
        match jt.third(ys[i], ys[j]) {
            Some(t) if owner[t] != usize::MAX && inv[u] == usize::MAX => inv[u] = owner[t],
            _ => return Err(bad("edge joins of the second graph miss the axis points")),
        }
    }
    let mut fwd = vec![usize::MAX; pairs.len()];
    for (u, &v) in inv.iter().enumerate() {
        if fwd[v] != usize::MAX {
            return Err(bad("skew is not a bijection"));
        }
        fwd[v] = u;
    }
    let delta = tagged(&PairPermutation::general(n, fwd)?);
    let axis_lines: Vec<Vec<usize>> = config
        .lines()
        .iter()
        .filter(|l| l.iter().all(|&x| owner[x] != usize::MAX))
        .map(|l| l.iter().map(|&x| owner[x]).collect())
        .collect();
    let axis = pair_configuration(n, axis_lines)?;
    let spec = SkewPerspectiveSpec::new(n, delta, &axis).map_err(|e| bad(&e.to_string()))?;
    let ix = spec.index();
    let mut point_map = vec![0; total];
    point_map[ix.p()] = q;
    for i in 0..n {
        point_map[ix.a(i)] = xs[i];
        point_map[ix.b(i)] = ys[i];
    }
    for (u, &t) in e.iter().enumerate() {
        point_map[ix.c_index(u)] = t;
    }
    if !spec.build().is_isomorphism(config, &point_map) {
        return Err(bad("incidences do not match the rebuilt perspective"));
    }
    Ok(Reperspective { spec, point_map })
}

#[derive(Clone, Debug)]
pub struct CenterPresentation {
    pub q: usize,
    pub g1: Vec<usize>,
    pub g2: Vec<usize>,
    pub presentation: Reperspective,
}

/// Every way to read the configuration as a skew perspective on index sets
/// of size `n`: ordered pairs of free `K_{n+1}` meeting in one point.
pub fn perspective_centers(config: &Configuration, n: usize) -> Vec<CenterPresentation> {
    let free = free_complete_subgraphs(config, n + 1);
    let mut out = Vec::new();
    for g1 in &free.graphs {
        for g2 in &free.graphs {
            let common: Vec<usize> = g1.vertices.iter().copied().filter(|x| g2.vertices.contains(x)).collect();
            if common.len() != 1 {
                continue;
            }
            let q = common[0];
            if let Ok(r) = reperspective(config, q, &g1.vertices, &g2.vertices) {
                out.push(CenterPresentation { q, g1: g1.vertices.clone(), g2: g2.vertices.clone(), presentation: r });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{grassmannian, zeta};

    fn spec(s: &str) -> SkewPerspectiveSpec {
        SkewPerspectiveSpec::induced(&Permutation::parse(s, 4).unwrap(), &grassmannian(4).unwrap()).unwrap()
    }

    #[test]
    fn a_star_and_b_star_are_free() {
        let s = spec("(1,2,3,4)");
        let c = s.build();
        let ix = s.index();
        let a: Vec<usize> = (0..4).map(|i| ix.a(i)).chain([0]).collect();
        let b: Vec<usize> = (0..4).map(|i| ix.b(i)).chain([0]).collect();
        assert!(is_freely_contained(&c, &a));
        assert!(is_freely_contained(&c, &b));
        assert!(!is_freely_contained(&c, &c.lines()[0]));
    }

    #[test]
    fn third_graphs() {
        assert_eq!(third_graph_criterion(&spec("id")).unwrap().len(), 4);
        let t = third_graph_criterion(&spec("(1)(2,3,4)")).unwrap();
        assert_eq!(t.iter().map(|x| x.i0).collect::<Vec<_>>(), vec![0]);
        assert!(third_graph_criterion(&spec("(1,2)(3,4)")).unwrap().is_empty());
        let z = SkewPerspectiveSpec::new(4, zeta(), &grassmannian(4).unwrap()).unwrap();
        assert!(matches!(third_graph_criterion(&z), Err(Error::NotPermutationSkew)));
        assert_eq!(free_complete_subgraphs(&z.build(), 5).count(), 2);
    }

    #[test]
    fn pair_skew_classes() {
        let p = Permutation::parse("(1,2,3,4)", 4).unwrap();
        assert_eq!(classify_pair_skew(&PairPermutation::induced(&p).untagged()), SkewClass::InducedBy(p));
        assert_eq!(
            classify_pair_skew(&PairPermutation::kappa(4).unwrap()),
            SkewClass::ComplementOf(Permutation::identity(4))
        );
        // ζ as written coincides with κ∘((1,2)(3,4))‾.
        assert_eq!(classify_pair_skew(&zeta()), SkewClass::ComplementOf(Permutation::parse("(1,2)(3,4)", 4).unwrap()));
        let mut swap: Vec<usize> = (0..6).collect();
        swap.swap(0, 1);
        assert_eq!(classify_pair_skew(&PairPermutation::general(4, swap).unwrap()), SkewClass::NonPreserving);
    }

    #[test]
    fn movecenter_over_grassmannian_axis() {
        assert_eq!(movecenter_condition(&spec("id"), 0).unwrap(), Some(Permutation::identity(4)));
        assert_eq!(movecenter_condition(&spec("(1)(2,3,4)"), 0).unwrap(), None);
        assert!(matches!(movecenter_condition(&spec("(1)(2,3,4)"), 1), Err(Error::InvalidCenter(_))));
    }

    #[test]
    fn reperspective_from_the_original_center_is_identity() {
        let s = spec("(1,2)(3,4)");
        let c = s.build();
        let ix = s.index();
        let a: Vec<usize> = (0..4).map(|i| ix.a(i)).chain([0]).collect();
        let b: Vec<usize> = (0..4).map(|i| ix.b(i)).chain([0]).collect();
        let r = reperspective(&c, 0, &a, &b).unwrap();
        assert_eq!(r.spec.delta.images(), s.delta.images());
        assert_eq!(r.point_map, (0..15).collect::<Vec<_>>());
    }
}
