//! Permutations of `I = {0..n-1}`, their action on 2-subsets, the
//! complement correlation for `n = 4`, cycle types and partitions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { img: (0..n).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            if x >= img.len() || seen[x] {
                return Err(Error::Parse(format!("{img:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { img })
    }

    /// Builds a permutation from one-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Permutation> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for &x in c.iter() {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::Parse(format!("bad cycle element {x}")));
                }
                seen[x - 1] = true;
            }
            for k in 0..c.len() {
                img[c[k] - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Ok(Permutation { img })
    }

    /// Parses cycle notation such as `(1,2)(3,4)`, `(1)(2,3,4)` or `id`.
    pub fn parse(s: &str, n: usize) -> Result<Permutation> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "id" || t.is_empty() {
            return Ok(Permutation::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let end = body.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let inner = &body[..end];
            if inner.is_empty() {
                return Err(Error::Parse(format!("empty cycle in {s:?}")));
            }
            let cyc = inner
                .split(',')
                .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad element {x:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cyc);
            rest = &body[end + 1..];
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(n, &refs)
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { img: other.img.iter().map(|&x| self.img[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { img: inv }
    }

    /// `σ^α = α σ α⁻¹`.
    pub fn conjugate_by(&self, alpha: &Permutation) -> Permutation {
        alpha.compose(self).compose(&alpha.inverse())
    }

    /// Cycles with each cycle starting at its least element, ordered by that
    /// element. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for s in 0..self.img.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.img[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.img[x];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        CycleType(t)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.img[i] == i).collect()
    }

    /// Cycle notation with fixed points written out, e.g. `(1)(2,3,4)`.
    pub fn to_full_string(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }

    /// All permutations of `n` points in lexicographic order of image arrays.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut a: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { img: a.clone() });
            let Some(i) = (1..n).rev().find(|&i| a[i - 1] < a[i]).map(|i| i - 1) else { break };
            let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
            a.swap(i, j);
            a[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        for c in self.cycles().iter().filter(|c| c.len() > 1) {
            write!(f, "({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(","))?;
        }
        Ok(())
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Non-decreasing cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Vec<usize>);

/// Witness `α` with `σ₂ = α σ₁ α⁻¹`, if the two are conjugate.
pub fn are_conjugate(s1: &Permutation, s2: &Permutation) -> Option<Permutation> {
    if s1.n() != s2.n() || s1.cycle_type() != s2.cycle_type() {
        return None;
    }
    let mut c1 = s1.cycles();
    let mut c2 = s2.cycles();
    c1.sort_by_key(|c| c.len());
    c2.sort_by_key(|c| c.len());
    let mut img = vec![0; s1.n()];
    for (a, b) in c1.iter().zip(&c2) {
        for (x, y) in a.iter().zip(b) {
            img[*x] = *y;
        }
    }
    let alpha = Permutation { img };
    debug_assert_eq!(&s1.conjugate_by(&alpha), s2);
    Some(alpha)
}

fn check_subgroup(h: &[Permutation], n: usize) -> Result<()> {
    let set: BTreeSet<&Permutation> = h.iter().collect();
    if h.iter().any(|g| g.n() != n) {
        return Err(Error::NotASubgroup("mixed degrees".into()));
    }
    if !set.contains(&Permutation::identity(n)) {
        return Err(Error::NotASubgroup("identity missing".into()));
    }
    for a in h {
        if !set.contains(&a.inverse()) {
            return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
        }
        for b in h {
            if !set.contains(&a.compose(b)) {
                return Err(Error::NotASubgroup(format!("{a} ∘ {b} missing")));
            }
        }
    }
    Ok(())
}

/// One representative per orbit of `S_n` under conjugation by `H`, each the
/// lexicographically least image array of its orbit, in increasing order.
pub fn conjugacy_reps_under(h: &[Permutation], n: usize) -> Result<Vec<Permutation>> {
    check_subgroup(h, n)?;
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for s in Permutation::all(n) {
        if seen.contains(&s) {
            continue;
        }
        for a in h {
            seen.insert(s.conjugate_by(a));
        }
        reps.push(s);
    }
    Ok(reps)
}

/// `P(n, k)` for `k = 0..=n` and the total `P(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    pub by_parts: Vec<u64>,
    pub total: u64,
}

pub fn partitions(n: usize) -> PartitionTable {
    // p[m][k]: partitions of m into exactly k parts.
    let mut p = vec![vec![0u64; n + 1]; n + 1];
    p[0][0] = 1;
    for m in 1..=n {
        for k in 1..=m {
            p[m][k] = p[m - 1][k - 1] + p[m - k][k];
        }
    }
    let by_parts = p[n].clone();
    let total = by_parts.iter().sum();
    PartitionTable { by_parts, total }
}

/// Lexicographic index of the pair `{i, j}` among the 2-subsets of `n`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            v.push((i, j));
        }
    }
    v
}

pub fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `S(i)`: the pairs through `i`.
pub fn star(i: usize, n: usize) -> Vec<(usize, usize)> {
    all_pairs(n).into_iter().filter(|&(a, b)| a == i || b == i).collect()
}

/// `T(Y)`: the pairs inside the 3-set `Y`.
pub fn top(y: [usize; 3]) -> Vec<(usize, usize)> {
    let mut y = y;
    y.sort_unstable();
    vec![(y[0], y[1]), (y[0], y[2]), (y[1], y[2])]
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairTag {
    /// `u ↦ φ̄(u)`.
    Induced(Permutation),
    /// `u ↦ I₄ ∖ φ̄(u)`.
    KappaComposed(Permutation),
    General,
}

/// A bijection of the 2-subsets of `I`, stored on lexicographic pair indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPermutation {
    n: usize,
    map: Vec<usize>,
    tag: PairTag,
}

fn complement_pair(n: usize, u: usize) -> usize {
    let pairs = all_pairs(n);
    let (i, j) = pairs[u];
    let rest: Vec<usize> = (0..n).filter(|&x| x != i && x != j).collect();
    pair_index(n, rest[0], rest[1])
}

impl PairPermutation {
    pub fn induced(phi: &Permutation) -> PairPermutation {
        let n = phi.n();
        let map = all_pairs(n).iter().map(|&(i, j)| pair_index(n, phi.apply(i), phi.apply(j))).collect();
        PairPermutation { n, map, tag: PairTag::Induced(phi.clone()) }
    }

    pub fn kappa(n: usize) -> Result<PairPermutation> {
        PairPermutation::kappa_composed(&Permutation::identity(n))
    }

    /// `κ ∘ φ̄`, which equals `φ̄ ∘ κ`.
    pub fn kappa_composed(phi: &Permutation) -> Result<PairPermutation> {
        let n = phi.n();
        if n != 4 {
            return Err(Error::CorrelationUndefined(n));
        }
        let bar = PairPermutation::induced(phi);
        let map: Vec<usize> = bar.map.iter().map(|&v| complement_pair(n, v)).collect();
        let other: Vec<usize> = (0..6).map(|u| bar.map[complement_pair(n, u)]).collect();
        assert_eq!(map, other, "κ must commute with induced maps");
        Ok(PairPermutation { n, map, tag: PairTag::KappaComposed(phi.clone()) })
    }

    pub fn general(n: usize, map: Vec<usize>) -> Result<PairPermutation> {
        let m = num_pairs(n);
        if map.len() != m {
            return Err(Error::InvalidArgument(format!("pair map needs {m} entries")));
        }
        let mut seen = vec![false; m];
        for &v in &map {
            if v >= m || seen[v] {
                return Err(Error::InvalidArgument("pair map is not a bijection".into()));
            }
            seen[v] = true;
        }
        Ok(PairPermutation { n, map, tag: PairTag::General })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> &PairTag {
        &self.tag
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, u: usize) -> usize {
        self.map[u]
    }

    pub fn apply_pair(&self, i: usize, j: usize) -> (usize, usize) {
        all_pairs(self.n)[self.map[pair_index(self.n, i, j)]]
    }

    /// Drops the provenance tag.
    pub fn untagged(&self) -> PairPermutation {
        PairPermutation { n: self.n, map: self.map.clone(), tag: PairTag::General }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PairPermutation) -> PairPermutation {
        let map = other.map.iter().map(|&v| self.map[v]).collect();
        use PairTag::*;
        let tag = match (&self.tag, &other.tag) {
            (Induced(a), Induced(b)) | (KappaComposed(a), KappaComposed(b)) => Induced(a.compose(b)),
            (Induced(a), KappaComposed(b)) | (KappaComposed(a), Induced(b)) => KappaComposed(a.compose(b)),
            _ => General,
        };
        PairPermutation { n: self.n, map, tag }
    }

    pub fn inverse(&self) -> PairPermutation {
        let mut inv = vec![0; self.map.len()];
        for (u, &v) in self.map.iter().enumerate() {
            inv[v] = u;
        }
        let tag = match &self.tag {
            PairTag::Induced(a) => PairTag::Induced(a.inverse()),
            PairTag::KappaComposed(a) => PairTag::KappaComposed(a.inverse()),
            PairTag::General => PairTag::General,
        };
        PairPermutation { n: self.n, map: inv, tag }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(u, &v)| u == v)
    }
}

impl fmt::Display for PairPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tag {
            PairTag::Induced(p) => write!(f, "{p}"),
            PairTag::KappaComposed(p) if p.is_identity() => write!(f, "κ"),
            PairTag::KappaComposed(p) => write!(f, "{p}κ"),
            PairTag::General => {
                let pairs = all_pairs(self.n);
                let parts: Vec<String> = pairs
                    .iter()
                    .zip(&self.map)
                    .map(|(&(i, j), &v)| format!("{}{}->{}{}", i + 1, j + 1, pairs[v].0 + 1, pairs[v].1 + 1))
                    .collect();
                write!(f, "[{}]", parts.join(" "))
            }
        }
    }
}
