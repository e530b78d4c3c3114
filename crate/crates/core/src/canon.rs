//! Canonical forms of partial linear spaces by individualization and
//! refinement. The search visits every leaf whose invariant trace is not
//! beaten, so equal canonical line lists mean isomorphic inputs and the
//! number of leaves achieving the optimum is the automorphism count.

use std::cmp::Ordering;

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::incidence::Configuration;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `order[k]` is the original point placed at position `k`.
    pub order: Vec<usize>,
    /// Lines in canonical positions, sorted.
    pub lines: Vec<Vec<usize>>,
    /// Hex SHA-256 of the canonical line list.
    pub hash: String,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub form: CanonicalForm,
    pub automorphisms: u64,
}

struct Ctx {
    n: usize,
    lines: Vec<Vec<u32>>,
    point_lines: Vec<Vec<u32>>,
}

struct Best {
    trace: Vec<Vec<u32>>,
    cert: Vec<Vec<u32>>,
    order: Vec<usize>,
    count: u64,
}

fn rank_by<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect();
    (ranks, sorted.len())
}

impl Ctx {
    fn new(c: &Configuration) -> Ctx {
        let lines: Vec<Vec<u32>> = c.lines().iter().map(|l| l.iter().map(|&x| x as u32).collect()).collect();
        let point_lines = c.point_lines().into_iter().map(|v| v.into_iter().map(|k| k as u32).collect()).collect();
        Ctx { n: c.num_points(), lines, point_lines }
    }

    /// Rank and the number of non-line triangles through each point.
    fn initial_colors(&self) -> Vec<u32> {
        let n = self.n;
        let mut adj = vec![false; n * n];
        let mut on_line = std::collections::HashSet::new();
        for l in &self.lines {
            for &x in l {
                for &y in l {
                    if x != y {
                        adj[x as usize * n + y as usize] = true;
                    }
                }
            }
            if l.len() == 3 {
                on_line.insert((l[0], l[1], l[2]));
            }
        }
        let nbrs: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| adj[x * n + y]).collect()).collect();
        let mut tri = vec![0u32; n];
        for x in 0..n {
            for (s, &y) in nbrs[x].iter().enumerate() {
                for &z in &nbrs[x][s + 1..] {
                    if adj[y * n + z] {
                        let mut t = [x as u32, y as u32, z as u32];
                        t.sort_unstable();
                        if !on_line.contains(&(t[0], t[1], t[2])) {
                            tri[x] += 1;
                        }
                    }
                }
            }
        }
        let keys: Vec<(usize, u32)> = (0..n).map(|x| (self.point_lines[x].len(), tri[x])).collect();
        rank_by(&keys).0
    }

    /// Refines to the coarsest equitable partition below `colors`.
    fn refine(&self, colors: &mut Vec<u32>) {
        let mut cells = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        loop {
            let line_keys: Vec<Vec<u32>> = self
                .lines
                .iter()
                .map(|l| {
                    let mut v: Vec<u32> = l.iter().map(|&x| colors[x as usize]).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            let (line_colors, _) = rank_by(&line_keys);
            let point_keys: Vec<(u32, Vec<u32>)> = (0..self.n)
                .map(|x| {
                    let mut v: Vec<u32> = self.point_lines[x].iter().map(|&k| line_colors[k as usize]).collect();
                    v.sort_unstable();
                    (colors[x], v)
                })
                .collect();
            let (next, count) = rank_by(&point_keys);
            *colors = next;
            if count == cells {
                return;
            }
            cells = count;
        }
    }

    fn cell_sizes(&self, colors: &[u32]) -> Vec<u32> {
        let mut h = vec![0u32; self.n];
        for &c in colors {
            h[c as usize] += 1;
        }
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    fn certificate(&self, colors: &[u32]) -> Vec<Vec<u32>> {
        let mut cert: Vec<Vec<u32>> = self
            .lines
            .iter()
            .map(|l| {
                let mut v: Vec<u32> = l.iter().map(|&x| colors[x as usize]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        cert.sort();
        cert
    }

    fn dfs(&self, colors: &[u32], trace: &mut Vec<Vec<u32>>, best: &mut Option<Best>) {
        if let Some(b) = best.as_ref() {
            let m = trace.len().min(b.trace.len());
            match trace.as_slice().cmp(&b.trace[..m]) {
                Ordering::Greater => return,
                Ordering::Equal if trace.len() > b.trace.len() => return,
                _ => {}
            }
        }
        let sizes = trace.last().expect("trace holds the root");
        if sizes.len() == self.n {
            let cert = self.certificate(colors);
            let mut order = vec![0; self.n];
            for (x, &c) in colors.iter().enumerate() {
                order[c as usize] = x;
            }
            match best {
                None => *best = Some(Best { trace: trace.clone(), cert, order, count: 1 }),
                Some(b) => match (trace.as_slice().cmp(&b.trace), cert.cmp(&b.cert)) {
                    (Ordering::Less, _) | (Ordering::Equal, Ordering::Less) => {
                        *b = Best { trace: trace.clone(), cert, order, count: 1 }
                    }
                    (Ordering::Equal, Ordering::Equal) => b.count += 1,
                    _ => {}
                },
            }
            return;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let members: Vec<usize> = (0..self.n).filter(|&x| colors[x] == target).collect();
        for v in members {
            let keys: Vec<(u32, bool)> = colors.iter().enumerate().map(|(x, &c)| (c, x != v)).collect();
            let (mut next, _) = rank_by(&keys);
            self.refine(&mut next);
            trace.push(self.cell_sizes(&next));
            self.dfs(&next, trace, best);
            trace.pop();
        }
    }
}

fn hash_lines(n: usize, lines: &[Vec<usize>]) -> String {
    let mut h = Sha256::new();
    h.update(format!("{n};").as_bytes());
    for l in lines {
        let s: Vec<String> = l.iter().map(|x| x.to_string()).collect();
        h.update(s.join(",").as_bytes());
        h.update(b";");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Canonical form and automorphism count. The input must verify.
pub fn canonical_search(config: &Configuration) -> Result<SearchResult> {
    config.verified()?;
    Ok(canonical_search_unchecked(config))
}

/// As [`canonical_search`] for any structure with uniform line size; used on
/// sub-structures that need not be regular.
pub fn canonical_search_unchecked(config: &Configuration) -> SearchResult {
    let ctx = Ctx::new(config);
    if ctx.n == 0 {
        return SearchResult {
            form: CanonicalForm { order: vec![], lines: vec![], hash: hash_lines(0, &[]) },
            automorphisms: 1,
        };
    }
    let mut colors = ctx.initial_colors();
    ctx.refine(&mut colors);
    let mut trace = vec![ctx.cell_sizes(&colors)];
    let mut best = None;
    ctx.dfs(&colors, &mut trace, &mut best);
    let b = best.expect("search reaches a leaf");
    let lines: Vec<Vec<usize>> = b.cert.iter().map(|l| l.iter().map(|&x| x as usize).collect()).collect();
    let hash = hash_lines(ctx.n, &lines);
    SearchResult { form: CanonicalForm { order: b.order, lines, hash }, automorphisms: b.count }
}

pub fn canonical_form(config: &Configuration) -> Result<CanonicalForm> {
    Ok(canonical_search(config)?.form)
}

pub fn automorphism_count(config: &Configuration) -> Result<u64> {
    Ok(canonical_search(config)?.automorphisms)
}

/// A point bijection `c1 → c2` mapping lines onto lines, if one exists.
pub fn are_isomorphic(c1: &Configuration, c2: &Configuration) -> Result<Option<Vec<usize>>> {
    let s1 = c1.verified()?;
    let s2 = c2.verified()?;
    if s1 != s2 {
        return Ok(None);
    }
    Ok(isomorphism_from_forms(&canonical_form(c1)?, &canonical_form(c2)?))
}

pub fn isomorphism_from_forms(f1: &CanonicalForm, f2: &CanonicalForm) -> Option<Vec<usize>> {
    if f1.lines != f2.lines || f1.order.len() != f2.order.len() {
        return None;
    }
    let mut map = vec![0; f1.order.len()];
    for (k, &x) in f1.order.iter().enumerate() {
        map[x] = f2.order[k];
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{grassmannian, SkewPerspectiveSpec};
    use crate::perm::Permutation;

    #[test]
    fn single_line_has_six_automorphisms() {
        let c = Configuration::unlabeled(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(automorphism_count(&c).unwrap(), 6);
    }

    #[test]
    fn grassmannian_automorphisms_are_symmetric_groups() {
        assert_eq!(automorphism_count(&grassmannian(4).unwrap()).unwrap(), 24);
        assert_eq!(automorphism_count(&grassmannian(5).unwrap()).unwrap(), 120);
        assert_eq!(automorphism_count(&grassmannian(6).unwrap()).unwrap(), 720);
    }

    #[test]
    fn witness_maps_lines_to_lines() {
        let g6 = grassmannian(6).unwrap();
        let pi = SkewPerspectiveSpec::induced(&Permutation::identity(4), &grassmannian(4).unwrap()).unwrap().build();
        let m = are_isomorphic(&pi, &g6).unwrap().expect("isomorphic");
        assert!(pi.is_isomorphism(&g6, &m));
    }

    #[test]
    fn rejects_unverified_input() {
        let c = Configuration::unlabeled(5, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(canonical_form(&c).is_err());
    }
}
