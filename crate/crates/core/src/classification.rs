//! Isomorphism censuses of skew perspectives: Grassmannian axes for small
//! `n`, and on `I₄` the permutation and κ families over every Veblen
//! labeling. Classes are formed by canonical form, so membership never
//! depends on the reference lists; those only contribute labels.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_search, CanonicalForm};
use crate::constructions::{
    axis_pair_lines, catalog_axis, enumerate_veblen, grassmannian, map_axis, multiveblen, quasi_grassmannian_skew,
    CatalogName, Graph, SkewPerspectiveSpec,
};
use crate::error::{Error, Result};
use crate::incidence::{Configuration, Signature};
use crate::perm::{all_pairs, partitions, CycleType, PairPermutation, Permutation};
use crate::structure::{classify_pair_skew, free_complete_subgraphs, third_graph_criterion};

pub const CENSUS_SCHEMA_VERSION: &str = "1";

/// Theorem counts the census is compared against.
pub const LISTED_PERM_TYPES: usize = 42;
pub const LISTED_KAPPA_TYPES: usize = 20;
pub const LISTED_TOTAL: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SkewFamily {
    /// `σ̄` for `σ ∈ S_n`.
    Perm,
    /// `κσ̄` for `σ ∈ S₄`.
    Kappa,
}

impl SkewFamily {
    fn spec(self, sigma: &Permutation, axis: &Configuration) -> Result<SkewPerspectiveSpec> {
        match self {
            SkewFamily::Perm => SkewPerspectiveSpec::induced(sigma, axis),
            SkewFamily::Kappa => SkewPerspectiveSpec::kappa(sigma, axis),
        }
    }
}

/// `φ ∈ S₄` whose induced map preserves the lines of a labeling.
pub fn aut_group(axis: &Configuration) -> Result<Vec<Permutation>> {
    preserving(axis, |p| Ok(PairPermutation::induced(p)))
}

/// `φ ∈ S₄` with `κφ̄` preserving the lines of a labeling.
pub fn kappa_aut_set(axis: &Configuration) -> Result<Vec<Permutation>> {
    preserving(axis, PairPermutation::kappa_composed)
}

fn preserving(axis: &Configuration, f: impl Fn(&Permutation) -> Result<PairPermutation>) -> Result<Vec<Permutation>> {
    let lines = axis_pair_lines(axis, 4)?;
    let mut out = Vec::new();
    for p in Permutation::all(4) {
        if axis_pair_lines(&map_axis(axis, &f(&p)?)?, 4)? == lines {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    /// Freely contained `K_{n+1}` graphs.
    pub free_k: usize,
    /// Fixed-point stars predicting extra free graphs (permutation skews).
    pub third_graphs: Option<usize>,
    pub automorphisms: u64,
    pub skew_class: String,
    pub cycle_type: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub n: usize,
    pub family: SkewFamily,
    /// `σ` in cycle notation; the skew is `σ̄` or `κσ̄` by family.
    pub sigma: Permutation,
    pub skew: String,
    /// Axis lines as 1-based pair labels.
    pub axis: Vec<Vec<String>>,
    /// Catalog name when the axis is literally one of the six.
    pub axis_name: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub representative: Representative,
    #[serde(skip)]
    pub spec: SkewPerspectiveSpec,
    #[serde(skip)]
    pub canonical: CanonicalForm,
    pub canonical_hash: String,
    pub invariants: Invariants,
    /// Type label from the theorem lists, when a listed item lands here.
    pub paper_label: Option<String>,
    /// The listed items in this class, as `Π(4, σ, axis)` in the theorem frame.
    pub listed_as: Vec<String>,
    /// Number of enumerated `(σ, axis)` pairs in the class.
    pub class_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    /// The number of classes differs from the theorem's count.
    CountMismatch { family: SkewFamily, computed: usize, listed: usize },
    /// A class containing none of the listed items.
    Unlisted { family: SkewFamily, representative: String, canonical_hash: String, witness: Option<String> },
    /// Several listed items that are isomorphic.
    SharedClass { family: SkewFamily, items: Vec<String>, canonical_hash: String },
    /// A κφ̄ preserving a catalog labeling, which the lists assume never happens.
    KappaAutomorphism { axis: String, sigma: String },
    /// An entry whose invariants contradict its family.
    InconsistentInvariants { representative: String },
    /// A class shared by the two families.
    CrossFamily { canonical_hash: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub family: SkewFamily,
    /// Enumerated `(σ, axis)` pairs.
    pub configurations: usize,
    pub listed: usize,
    pub entries: Vec<CensusEntry>,
    pub findings: Vec<Finding>,
}

impl Census {
    pub fn class_count(&self) -> usize {
        self.entries.len()
    }

    /// Pairwise distinct canonical forms and family-consistent invariants.
    pub fn internally_consistent(&self) -> bool {
        let mut hashes: Vec<&str> = self.entries.iter().map(|e| e.canonical_hash.as_str()).collect();
        hashes.sort_unstable();
        hashes.dedup();
        hashes.len() == self.entries.len()
            && !self.findings.iter().any(|f| matches!(f, Finding::InconsistentInvariants { .. }))
    }
}

fn representative(family: SkewFamily, sigma: &Permutation, spec: &SkewPerspectiveSpec) -> Representative {
    let axis = axis_pair_lines(&spec.axis, spec.n)
        .expect("validated axis")
        .iter()
        .map(|l| {
            let pairs = all_pairs(spec.n);
            l.iter().map(|&u| format!("{}{}", pairs[u].0 + 1, pairs[u].1 + 1)).collect()
        })
        .collect();
    let axis_name = crate::constructions::catalog_name_of(&spec.axis, spec.n).map(|c| c.to_string());
    Representative { n: spec.n, family, sigma: sigma.clone(), skew: spec.delta.to_string(), axis, axis_name }
}

fn invariants(family: SkewFamily, sigma: &Permutation, spec: &SkewPerspectiveSpec, automorphisms: u64) -> Invariants {
    let c = spec.build();
    let skew_class = classify_pair_skew(&spec.delta).to_string();
    Invariants {
        free_k: free_complete_subgraphs(&c, spec.n + 1).count(),
        third_graphs: match family {
            SkewFamily::Perm => third_graph_criterion(spec).ok().map(|v| v.len()),
            SkewFamily::Kappa => None,
        },
        automorphisms,
        skew_class,
        cycle_type: sigma.cycle_type().0,
    }
}

fn consistent(family: SkewFamily, inv: &Invariants) -> bool {
    match family {
        SkewFamily::Perm => inv.third_graphs.is_some_and(|t| inv.free_k == 2 + t),
        SkewFamily::Kappa => inv.free_k == 2,
    }
}

struct Member {
    key: (Vec<usize>, Vec<Vec<usize>>),
    sigma: Permutation,
    spec: SkewPerspectiveSpec,
    form: CanonicalForm,
    automorphisms: u64,
}

/// Builds and canonizes every `(σ, axis)` pair, then groups by canonical
/// line list. Each class keeps its least `(σ images, axis lines)` member.
fn classes(family: SkewFamily, sigmas: &[Permutation], axes: &[Configuration]) -> Result<Vec<(Member, usize)>> {
    let jobs: Vec<(&Permutation, &Configuration)> =
        sigmas.iter().flat_map(|s| axes.iter().map(move |a| (s, a))).collect();
    let members: Vec<Member> = jobs
        .par_iter()
        .map(|&(sigma, axis)| {
            let spec = family.spec(sigma, axis)?;
            let res = canonical_search(&spec.build())?;
            let key = (sigma.images().to_vec(), spec.axis.lines().to_vec());
            Ok(Member { key, sigma: sigma.clone(), spec, form: res.form, automorphisms: res.automorphisms })
        })
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<Vec<Vec<usize>>, (Member, usize)> = BTreeMap::new();
    for m in members {
        match groups.get_mut(&m.form.lines) {
            Some((best, size)) => {
                *size += 1;
                if m.key < best.key {
                    *best = m;
                }
            }
            None => {
                groups.insert(m.form.lines.clone(), (m, 1));
            }
        }
    }
    let mut out: Vec<(Member, usize)> = groups.into_values().collect();
    out.sort_by(|a, b| a.0.key.cmp(&b.0.key));
    Ok(out)
}

/// A named item of a theorem list.
#[derive(Clone, Debug)]
pub struct ListedItem {
    pub family: SkewFamily,
    pub sigma: Permutation,
    /// Axis name in the theorem frame.
    pub axis_name: &'static str,
    pub label: &'static str,
    pub spec: SkewPerspectiveSpec,
}

impl ListedItem {
    pub fn describe(&self) -> String {
        match self.family {
            SkewFamily::Perm => format!("Π(4, {}, {})", self.sigma, self.axis_name),
            SkewFamily::Kappa if self.sigma.is_identity() => format!("Π(4, κ, {})", self.axis_name),
            SkewFamily::Kappa => format!("Π(4, {}κ, {})", self.sigma, self.axis_name),
        }
    }
}

const NEW: &str = "new type";

/// The theorem's `W(2)`: the printed labeling with star-triangles moved to
/// `S(1), S(2)` by the transposition `(1,3)`.
pub fn theorem_w2() -> Configuration {
    let t = Permutation::parse("(1,3)", 4).unwrap();
    map_axis(&crate::constructions::w2(), &PairPermutation::induced(&t)).unwrap()
}

/// The theorem's `V5`, whose top line is `T({1,2,4})`.
pub fn theorem_v5() -> Configuration {
    let v5 = catalog_axis(CatalogName::V5);
    let pairs = all_pairs(4);
    let lines = axis_pair_lines(&v5, 4).unwrap();
    let top = lines
        .iter()
        .find(|l| {
            let mut s: Vec<usize> = l.iter().flat_map(|&u| [pairs[u].0, pairs[u].1]).collect();
            s.sort_unstable();
            s.dedup();
            s.len() == 3
        })
        .expect("V5 has a top line");
    let m = (0..4).find(|&i| top.iter().all(|&u| pairs[u].0 != i && pairs[u].1 != i)).unwrap();
    if m == 2 {
        return v5;
    }
    let t = Permutation::from_cycles(4, &[&[m + 1, 3]]).unwrap();
    map_axis(&v5, &PairPermutation::induced(&t)).unwrap()
}

fn kappa_of(axis: &Configuration) -> Configuration {
    map_axis(axis, &PairPermutation::kappa(4).unwrap()).unwrap()
}

/// The items of both theorem lists with their type labels, in the theorem
/// frame.
/// An axis, its name and the `(σ, label)` items listed over it.
type ListedAxis<'a> = (&'a Configuration, &'static str, Vec<(&'static str, &'static str)>);

pub fn listed_items() -> Vec<ListedItem> {
    let g = grassmannian(4).unwrap();
    let gs = kappa_of(&g);
    let w = theorem_w2();
    let v4 = kappa_of(&w);
    let v5 = theorem_v5();
    let v6 = kappa_of(&v5);
    let perm: Vec<ListedAxis> = vec![
        (
            &g,
            "G",
            vec![
                ("id", "generalized Desargues configuration (Cayley-Simson)"),
                ("(1,2)(3,4)", "quasi-Grassmannian R4"),
                ("(1)(2,3,4)", "STP3K5 type 2.8(ii)"),
                ("(1)(2)(3,4)", "STP3K5 type 2.10(iii); multiveblen over L4"),
                ("(1,2,3,4)", NEW),
            ],
        ),
        (&gs, "G*", ["id", "(1,2)(3,4)", "(1)(2,3,4)", "(1)(2)(3,4)", "(1,2,3,4)"].map(|s| (s, NEW)).to_vec()),
        (
            &w,
            "W(2)",
            vec![
                ("(1,2)(3,4)", NEW),
                ("(1,3)(2,4)", NEW),
                ("(3)(1,2,4)", NEW),
                ("(1,2,3,4)", NEW),
                ("(1,3,2,4)", NEW),
                ("(1)(2)(3,4)", "STP3K5 type 2.10(ii); multiveblen over N4"),
                ("(1)(2,3,4)", "STP3K5 type 2.8(xii)"),
                ("(1)(4)(2,3)", "STP3K5 type 2.8(xi)"),
            ],
        ),
        (
            &v4,
            "V4",
            [
                "id",
                "(1,2)(3,4)",
                "(1,3)(2,4)",
                "(1)(2,3,4)",
                "(4)(1,2,3)",
                "(1)(2)(3,4)",
                "(1,2)(3)(4)",
                "(1)(2,3)(4)",
                "(1,2,3,4)",
                "(1,3,2,4)",
            ]
            .map(|s| (s, NEW))
            .to_vec(),
        ),
        (
            &v5,
            "V5",
            vec![
                ("id", "STP3K5 type 2.8(v)"),
                ("(3)(1,2,4)", "STP3K5 type 2.8(i)"),
                ("(3)(1)(2,4)", "STP3K5 type 2.8(xiv)"),
                ("(1,2)(3,4)", NEW),
                ("(1)(2,3,4)", NEW),
                ("(1)(2)(3,4)", NEW),
                ("(1,2,3,4)", NEW),
            ],
        ),
        (
            &v6,
            "V6",
            ["id", "(1,2)(3,4)", "(1)(2,3,4)", "(3)(1,2,4)", "(1)(3)(2,4)", "(1)(2)(3,4)", "(1,2,3,4)"]
                .map(|s| (s, NEW))
                .to_vec(),
        ),
    ];
    let kappa: Vec<(&Configuration, &'static str, Vec<&str>)> = vec![
        (&g, "G", vec!["id", "(1,2)(3,4)", "(1)(2)(3,4)", "(1)(2,3,4)", "(1,2,3,4)"]),
        (
            &w,
            "W(2)",
            vec![
                "id",
                "(1)(2)(3,4)",
                "(1,2)(3)(4)",
                "(1)(2,3,4)",
                "(4)(1,2,3)",
                "(1,2)(3,4)",
                "(1,4)(2,3)",
                "(1,2,3,4)",
            ],
        ),
        (&v5, "V5", vec!["id", "(1)(3)(2,4)", "(1)(2)(3,4)", "(1)(2,3,4)", "(3)(1,2,4)", "(1,2,3,4)", "(1,2)(3,4)"]),
    ];
    let mut out = Vec::new();
    for (axis, axis_name, items) in perm {
        for (s, label) in items {
            let sigma = Permutation::parse(s, 4).unwrap();
            let spec = SkewPerspectiveSpec::induced(&sigma, axis).unwrap();
            out.push(ListedItem { family: SkewFamily::Perm, sigma, axis_name, label, spec });
        }
    }
    for (axis, axis_name, items) in kappa {
        for s in items {
            let sigma = Permutation::parse(s, 4).unwrap();
            let spec = SkewPerspectiveSpec::kappa(&sigma, axis).unwrap();
            out.push(ListedItem { family: SkewFamily::Kappa, sigma, axis_name, label: NEW, spec });
        }
    }
    out
}

/// The six catalog axes in the theorem frame, those the theorems use first.
pub fn theorem_axes() -> Vec<(&'static str, Configuration)> {
    let g = grassmannian(4).unwrap();
    let w = theorem_w2();
    let v5 = theorem_v5();
    let (gs, v4, v6) = (kappa_of(&g), kappa_of(&w), kappa_of(&v5));
    vec![("G", g), ("W(2)", w), ("V5", v5), ("G*", gs), ("V4", v4), ("V6", v6)]
}

/// Canonical forms of every skew of the family over the theorem-frame
/// axes, in theorem notation, for naming classes outside the lists.
fn theorem_frame_forms(family: SkewFamily) -> Result<Vec<(String, CanonicalForm)>> {
    let mut jobs = Vec::new();
    for (name, axis) in theorem_axes() {
        for sigma in Permutation::all(4) {
            jobs.push((name, axis.clone(), sigma));
        }
    }
    jobs.par_iter()
        .map(|(name, axis, sigma)| {
            let spec = family.spec(sigma, axis)?;
            let d = match family {
                SkewFamily::Perm => format!("Π(4, {sigma}, {name})"),
                SkewFamily::Kappa if sigma.is_identity() => format!("Π(4, κ, {name})"),
                SkewFamily::Kappa => format!("Π(4, {sigma}κ, {name})"),
            };
            Ok((d, canonical_search(&spec.build())?.form))
        })
        .collect()
}

fn census_n4(family: SkewFamily) -> Result<Census> {
    let labelings = enumerate_veblen().labelings;
    let sigmas = Permutation::all(4);
    let groups = classes(family, &sigmas, &labelings)?;
    let listed: Vec<ListedItem> = listed_items().into_iter().filter(|i| i.family == family).collect();
    let listed_forms: Vec<CanonicalForm> =
        listed.iter().map(|i| canonical_search(&i.spec.build()).map(|r| r.form)).collect::<Result<_>>()?;
    let frame_forms = theorem_frame_forms(family)?;
    let mut findings = Vec::new();
    for name in CatalogName::ALL {
        for p in kappa_aut_set(&catalog_axis(name))? {
            findings.push(Finding::KappaAutomorphism { axis: name.to_string(), sigma: p.to_string() });
        }
    }
    let mut entries = Vec::new();
    for (m, size) in groups {
        let here: Vec<&ListedItem> =
            listed.iter().zip(&listed_forms).filter(|(_, f)| f.lines == m.form.lines).map(|(i, _)| i).collect();
        let rep = representative(family, &m.sigma, &m.spec);
        let inv = invariants(family, &m.sigma, &m.spec, m.automorphisms);
        if !consistent(family, &inv) {
            findings.push(Finding::InconsistentInvariants { representative: m.spec.to_string() });
        }
        if here.is_empty() {
            let witness = frame_forms.iter().find(|(_, f)| f.lines == m.form.lines).map(|(d, _)| d.clone());
            findings.push(Finding::Unlisted {
                family,
                representative: m.spec.to_string(),
                canonical_hash: m.form.hash.clone(),
                witness,
            });
        }
        if here.len() > 1 {
            findings.push(Finding::SharedClass {
                family,
                items: here.iter().map(|i| i.describe()).collect(),
                canonical_hash: m.form.hash.clone(),
            });
        }
        let prior: Vec<&str> = here.iter().map(|i| i.label).filter(|&l| l != NEW).collect();
        let paper_label = match (here.is_empty(), prior.is_empty()) {
            (true, _) => None,
            (false, true) => Some(NEW.to_string()),
            (false, false) => Some(prior.join("; ")),
        };
        entries.push(CensusEntry {
            representative: rep,
            canonical_hash: m.form.hash.clone(),
            spec: m.spec,
            canonical: m.form,
            invariants: inv,
            paper_label,
            listed_as: here.iter().map(|i| i.describe()).collect(),
            class_size: size,
        });
    }
    if entries.len() != listed.len() {
        findings.push(Finding::CountMismatch { family, computed: entries.len(), listed: listed.len() });
    }
    Ok(Census { family, configurations: sigmas.len() * labelings.len(), listed: listed.len(), entries, findings })
}

/// `Π(4, σ̄, V)` over all `σ ∈ S₄` and all Veblen labelings `V`.
pub fn census_perm_n4() -> Result<Census> {
    census_n4(SkewFamily::Perm)
}

/// `Π(4, κσ̄, V)` over all `σ ∈ S₄` and all Veblen labelings `V`.
pub fn census_kappa_n4() -> Result<Census> {
    census_n4(SkewFamily::Kappa)
}

#[derive(Clone, Debug, Serialize)]
pub struct FullCensus {
    pub schema_version: &'static str,
    pub perm: Census,
    pub kappa: Census,
    pub total: usize,
    pub listed_total: usize,
    /// Classes carrying a label from prior work.
    pub prior_labeled: usize,
    /// No class occurs in both families.
    pub disjoint: bool,
    pub findings: Vec<Finding>,
}

impl FullCensus {
    pub fn entries(&self) -> impl Iterator<Item = &CensusEntry> {
        self.perm.entries.iter().chain(&self.kappa.entries)
    }

    /// Entries as the persisted JSON array.
    pub fn entries_json(&self) -> Result<String> {
        let v: Vec<&CensusEntry> = self.entries().collect();
        Ok(serde_json::to_string_pretty(&v)?)
    }
}

pub fn full_census() -> Result<FullCensus> {
    let perm = census_perm_n4()?;
    let kappa = census_kappa_n4()?;
    let mut findings = Vec::new();
    for e in &perm.entries {
        if kappa.entries.iter().any(|k| k.canonical.lines == e.canonical.lines) {
            findings.push(Finding::CrossFamily { canonical_hash: e.canonical_hash.clone() });
        }
    }
    let disjoint = findings.is_empty();
    let total = perm.class_count() + kappa.class_count();
    let prior_labeled = perm
        .entries
        .iter()
        .chain(&kappa.entries)
        .filter(|e| e.paper_label.as_deref().is_some_and(|l| l != NEW))
        .count();
    Ok(FullCensus {
        schema_version: CENSUS_SCHEMA_VERSION,
        perm,
        kappa,
        total,
        listed_total: LISTED_TOTAL,
        prior_labeled,
        disjoint,
        findings,
    })
}

fn cached_census() -> Result<&'static FullCensus> {
    static CENSUS: OnceLock<FullCensus> = OnceLock::new();
    if let Some(c) = CENSUS.get() {
        return Ok(c);
    }
    let c = full_census()?;
    Ok(CENSUS.get_or_init(|| c))
}

/// Looks a 15-point binomial configuration up in the `I₄` census.
pub fn identify(config: &Configuration) -> Result<Option<CensusEntry>> {
    let sig = config.verified()?;
    if sig != Signature::binomial(4) {
        return Err(Error::InvalidConfiguration("not a 15-point binomial configuration".into()));
    }
    let form = canonical_search(config)?.form;
    Ok(cached_census()?.entries().find(|e| e.canonical.lines == form.lines).cloned())
}

#[derive(Clone, Debug, Serialize)]
pub struct GrasClassification {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
    /// `P(n)`, the number of cycle types.
    pub partitions: u64,
    /// Every class is exactly one cycle type.
    pub classes_match_cycle_types: bool,
}

fn gras_label(n: usize, sigma: &Permutation) -> Option<&'static str> {
    let t = sigma.cycle_type();
    if n == 3 {
        return Some(match t.0.as_slice() {
            [1, 1, 1] => "Desargues configuration",
            [1, 2] => "Kantor configuration",
            _ => "fez configuration",
        });
    }
    if sigma.is_identity() {
        return Some("generalized Desargues configuration");
    }
    (t == quasi_grassmannian_skew(n).cycle_type()).then_some("quasi-Grassmannian")
}

/// `Π(n, σ̄, G(n,2))` over all of `S_n`, one entry per isomorphism class.
pub fn classify_grasaxis(n: usize) -> Result<GrasClassification> {
    if !(3..=6).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} outside 3..=6")));
    }
    let g = grassmannian(n)?;
    let sigmas = Permutation::all(n);
    let groups = classes(SkewFamily::Perm, &sigmas, std::slice::from_ref(&g))?;
    // Cycle types seen in each class, from an independent pass.
    let mut by_type: BTreeMap<CycleType, Vec<Vec<Vec<usize>>>> = BTreeMap::new();
    let forms: Vec<(CycleType, Vec<Vec<usize>>)> = sigmas
        .par_iter()
        .map(|s| {
            let spec = SkewPerspectiveSpec::induced(s, &g)?;
            Ok((s.cycle_type(), canonical_search(&spec.build())?.form.lines))
        })
        .collect::<Result<_>>()?;
    for (t, f) in forms {
        let v = by_type.entry(t).or_default();
        if !v.contains(&f) {
            v.push(f);
        }
    }
    let one_form_per_type = by_type.values().all(|v| v.len() == 1);
    let mut distinct: Vec<&Vec<Vec<usize>>> = by_type.values().flatten().collect();
    distinct.sort();
    distinct.dedup();
    let classes_match_cycle_types = one_form_per_type && distinct.len() == by_type.len();
    let entries = groups
        .into_iter()
        .map(|(m, size)| CensusEntry {
            representative: representative(SkewFamily::Perm, &m.sigma, &m.spec),
            invariants: invariants(SkewFamily::Perm, &m.sigma, &m.spec, m.automorphisms),
            paper_label: gras_label(n, &m.sigma).map(str::to_string),
            listed_as: vec![],
            canonical_hash: m.form.hash.clone(),
            spec: m.spec,
            canonical: m.form,
            class_size: size,
        })
        .collect();
    Ok(GrasClassification { n, entries, partitions: partitions(n).total, classes_match_cycle_types })
}

/// `multiveblen(L₄, G)`, the cross-reference instance for the type
/// 2.10(iii) label.
pub fn multiveblen_l4() -> Result<Configuration> {
    let l4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    multiveblen(&l4, &grassmannian(4)?)
}
