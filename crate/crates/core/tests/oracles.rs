//! Independent oracles: a naive index-order embedding backtracker checked
//! against the pruned search, and hand-derived small facts.

use perspectra::canon::automorphism_count;
use perspectra::constructions::{grassmannian, SkewPerspectiveSpec};
use perspectra::embed::{embed_search, pg2q_points, verify_embedding, EmbedOutcome};
use perspectra::field::GaloisField;
use perspectra::incidence::Configuration;
use perspectra::perm::Permutation;

struct Naive<'a> {
    f: GaloisField,
    pts: Vec<[u8; 3]>,
    c: &'a Configuration,
}

impl Naive<'_> {
    fn on(&self, a: usize, b: usize, x: usize) -> bool {
        self.c.lines().iter().any(|l| l.contains(&a) && l.contains(&b) && l.contains(&x))
    }

    /// Every placed pair decides collinearity of the new point exactly as the
    /// configuration does.
    fn rec(&self, k: usize, order: &[usize], pos: &mut Vec<Option<[u8; 3]>>) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        let placed: Vec<usize> = (0..pos.len()).filter(|&y| pos[y].is_some()).collect();
        'cand: for &p in &self.pts {
            if placed.iter().any(|&y| pos[y] == Some(p)) {
                continue;
            }
            for (s, &a) in placed.iter().enumerate() {
                for &b in &placed[s + 1..] {
                    let col = self.f.det3(pos[a].unwrap(), pos[b].unwrap(), p) == 0;
                    if col != self.on(a, b, x) {
                        continue 'cand;
                    }
                }
            }
            pos[x] = Some(p);
            if self.rec(k + 1, order, pos) {
                return true;
            }
            pos[x] = None;
        }
        false
    }
}

/// Frame pinned on the first quadruple of points with no three on a line.
fn naive_embeds(c: &Configuration, q: usize) -> Option<Vec<[u8; 3]>> {
    let nv = Naive { f: GaloisField::new(q).unwrap(), pts: pg2q_points(q).unwrap(), c };
    let n = c.num_points();
    let mut frame = None;
    'o: for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                if nv.on(a, b, d) {
                    continue;
                }
                for e in d + 1..n {
                    if !nv.on(a, b, e) && !nv.on(a, d, e) && !nv.on(b, d, e) {
                        frame = Some([a, b, d, e]);
                        break 'o;
                    }
                }
            }
        }
    }
    let frame = frame.expect("configuration has four points in general position");
    let mut pos = vec![None; n];
    for (&x, v) in frame.iter().zip([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]) {
        pos[x] = Some(v);
    }
    let order: Vec<usize> = (0..n).filter(|x| !frame.contains(x)).collect();
    nv.rec(0, &order, &mut pos).then(|| pos.into_iter().map(Option::unwrap).collect())
}

fn fano() -> Configuration {
    let lines =
        vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6], vec![1, 3, 5], vec![1, 4, 6], vec![2, 3, 6], vec![2, 4, 5]];
    Configuration::unlabeled(7, lines).unwrap()
}

fn pi4(s: &str) -> Configuration {
    SkewPerspectiveSpec::induced(&Permutation::parse(s, 4).unwrap(), &grassmannian(4).unwrap()).unwrap().build()
}

fn agree(name: &str, c: &Configuration, qs: &[usize]) {
    for &q in qs {
        let naive = naive_embeds(c, q);
        if let Some(p) = &naive {
            assert!(verify_embedding(c, q, p).unwrap(), "{name} q={q}: naive witness rejected");
        }
        let fast = embed_search(c, q, u64::MAX).unwrap();
        match &fast.outcome {
            EmbedOutcome::Found(p) => assert!(verify_embedding(c, q, p).unwrap(), "{name} q={q}: witness rejected"),
            EmbedOutcome::Exhausted => {}
            EmbedOutcome::Inconclusive => panic!("{name} q={q}: unlimited budget ran out"),
        }
        assert_eq!(naive.is_some(), fast.found(), "{name} q={q}");
    }
}

#[test]
fn fano_embeds_exactly_in_even_characteristic() {
    agree("Fano", &fano(), &[2, 3, 4, 5, 7, 8]);
    assert!(embed_search(&fano(), 8, u64::MAX).unwrap().found());
    assert!(!embed_search(&fano(), 9, u64::MAX).unwrap().found());
}

#[test]
fn desargues_agrees_with_naive_search() {
    let d = grassmannian(5).unwrap();
    agree("G(5,2)", &d, &[2, 3, 4, 5, 7]);
    assert!(!embed_search(&d, 4, u64::MAX).unwrap().found());
    assert!(embed_search(&d, 5, u64::MAX).unwrap().found());
}

#[test]
fn small_skew_perspectives_agree_with_naive_search() {
    agree("Π(4,(1,2,3,4),G)", &pi4("(1,2,3,4)"), &[2, 3, 4, 5, 7]);
    agree("Π(4,(1)(2)(3,4),G)", &pi4("(1)(2)(3,4)"), &[2, 3, 4, 5, 7]);
    agree("Π(4,(1,2)(3,4),G)", &pi4("(1,2)(3,4)"), &[3, 4, 5]);
}

#[test]
fn plane_sizes_and_line_counts() {
    for q in [2usize, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = GaloisField::new(q).unwrap();
        let pts = pg2q_points(q).unwrap();
        assert_eq!(pts.len(), q * q + q + 1);
        // Points on the line through the first two points.
        let on = pts.iter().filter(|&&p| f.det3(pts[0], pts[1], p) == 0).count();
        assert_eq!(on, q + 1, "q={q}");
    }
}

#[test]
fn frozen_automorphism_counts() {
    // Hand-derived: Aut(Fano) = PGL(3,2) of order 168; Desargues has S5.
    assert_eq!(automorphism_count(&fano()).unwrap(), 168);
    assert_eq!(automorphism_count(&grassmannian(5).unwrap()).unwrap(), 120);
    // G(4,2) is four lines in general position: S4 acting on the lines.
    assert_eq!(automorphism_count(&grassmannian(4).unwrap()).unwrap(), 24);
}

#[test]
fn fixed_transposition_skew_has_no_small_embedding() {
    let c = pi4("(1)(2)(3,4)");
    for q in [2, 3, 4, 5, 7, 8, 9, 11] {
        assert!(embed_search(&c, q, u64::MAX).unwrap().exhausted(), "q={q}");
    }
}
