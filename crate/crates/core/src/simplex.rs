//! The simplex category: ordinals `[k] = {0..k}` and monotone maps.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplexError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not a monotone map: {0}")]
    NotMonotone(String),
    #[error("cannot compose: {0}")]
    Mismatch(String),
}

/// A monotone map `[source] → [target]`, stored by its values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    source: usize,
    target: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self, SimplexError> {
        if values.len() != source + 1 {
            return Err(SimplexError::NotMonotone(format!(
                "[{source}] has {} elements, got {} values",
                source + 1,
                values.len()
            )));
        }
        if values.iter().any(|&v| v > target) {
            return Err(SimplexError::NotMonotone(format!("{values:?} leaves [{target}]")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(SimplexError::NotMonotone(format!("{values:?} decreases")));
        }
        Ok(MonotoneMap { source, target, values })
    }

    pub fn identity(k: usize) -> Self {
        MonotoneMap {
            source: k,
            target: k,
            values: (0..=k).collect(),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }
    pub fn target(&self) -> usize {
        self.target
    }
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.values.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// Every monotone map `[source] → [target]`, in lexicographic order.
    pub fn enumerate(source: usize, target: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut cur = vec![0; source + 1];
        loop {
            out.push(MonotoneMap {
                source,
                target,
                values: cur.clone(),
            });
            // next non-decreasing sequence
            let Some(pos) = (0..=source).rev().find(|&p| cur[p] < target) else {
                return out;
            };
            let v = cur[pos] + 1;
            for c in &mut cur[pos..] {
                *c = v;
            }
        }
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]→[{}] (", self.source, self.target)?;
        for (n, v) in self.values.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `ε_i: [k-1] → [k]`, the injection missing `i`.
pub fn face(i: usize, k: usize) -> Result<MonotoneMap, SimplexError> {
    if k == 0 || i > k {
        return Err(SimplexError::IndexOutOfRange(format!("face ε_{i} into [{k}]")));
    }
    Ok(MonotoneMap {
        source: k - 1,
        target: k,
        values: (0..k).map(|j| if j < i { j } else { j + 1 }).collect(),
    })
}

/// `ζ_i: [k+1] → [k]`, the surjection hitting `i` twice.
pub fn degeneracy(i: usize, k: usize) -> Result<MonotoneMap, SimplexError> {
    if i > k {
        return Err(SimplexError::IndexOutOfRange(format!("degeneracy ζ_{i} onto [{k}]")));
    }
    Ok(MonotoneMap {
        source: k + 1,
        target: k,
        values: (0..=k + 1).map(|j| if j <= i { j } else { j - 1 }).collect(),
    })
}

/// `g ∘ f`.
pub fn compose_maps(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap, SimplexError> {
    if f.target != g.source {
        return Err(SimplexError::Mismatch(format!("{g} after {f}")));
    }
    Ok(MonotoneMap {
        source: f.source,
        target: g.target,
        values: f.values.iter().map(|&v| g.values[v]).collect(),
    })
}

/// Normal form `f = ε_{a₁}∘⋯∘ε_{a_p}∘ζ_{b₁}∘⋯∘ζ_{b_q}` with `a₁ > ⋯ > a_p` and
/// `b₁ < ⋯ < b_q`. Entries are `(index, k)` naming `face(index, k)` or
/// `degeneracy(index, k)`, listed left to right as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub source: usize,
    pub faces: Vec<(usize, usize)>,
    pub degeneracies: Vec<(usize, usize)>,
}

impl Factorization {
    /// The factors in the order they are applied (rightmost first).
    pub fn steps(&self) -> Vec<Step> {
        let mut out: Vec<Step> = self.degeneracies.iter().rev().map(|&(i, k)| Step::Degeneracy(i, k)).collect();
        out.extend(self.faces.iter().rev().map(|&(i, k)| Step::Face(i, k)));
        out
    }

    pub fn recompose(&self) -> MonotoneMap {
        let mut acc = MonotoneMap::identity(self.source);
        for s in self.steps() {
            let m = match s {
                Step::Face(i, k) => face(i, k),
                Step::Degeneracy(i, k) => degeneracy(i, k),
            }
            .expect("normal form indices are in range");
            acc = compose_maps(&m, &acc).expect("normal form steps chain");
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Face(usize, usize),
    Degeneracy(usize, usize),
}

pub fn factorize(f: &MonotoneMap) -> Factorization {
    let m = f.source;
    let n = f.target;
    let collapsed: Vec<usize> = (0..m).filter(|&j| f.values[j] == f.values[j + 1]).collect();
    let mut missed: Vec<usize> = (0..=n).filter(|t| !f.values.contains(t)).collect();
    missed.reverse();
    let q = collapsed.len();
    let degeneracies = collapsed
        .iter()
        .enumerate()
        .map(|(l, &b)| (b, m - q + l))
        .collect();
    let faces = missed.iter().enumerate().map(|(l, &a)| (a, n - l)).collect();
    Factorization {
        source: m,
        faces,
        degeneracies,
    }
}

/// Result of an exhaustive identity sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect_eq(&mut self, name: &str, lhs: MonotoneMap, rhs: MonotoneMap) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(format!("{name}: {lhs} != {rhs}"));
        }
    }
}

fn c(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap {
    compose_maps(&g, &f).expect("identity sides chain")
}

/// Every face/degeneracy relation whose ordinals stay within `[k_max]`:
///
/// * `ε_j ε_i = ε_i ε_{j-1}` for `i < j`
/// * `ζ_j ζ_i = ζ_i ζ_{j+1}` for `i ≤ j`
/// * `ζ_j ε_i` is `ε_i ζ_{j-1}` for `i < j`, the identity for `i ∈ {j, j+1}`,
///   and `ε_{i-1} ζ_j` for `i > j + 1`.
pub fn check_simplicial_identities(k_max: usize) -> IdentityReport {
    let mut r = IdentityReport::default();
    let f = |i, k| face(i, k).expect("in range");
    let s = |i, k| degeneracy(i, k).expect("in range");
    // faces [k-1] → [k] → [k+1]
    for k in 1..k_max {
        for j in 0..=k + 1 {
            for i in 0..j {
                r.expect_eq("face-face", c(f(j, k + 1), f(i, k)), c(f(i, k + 1), f(j - 1, k)));
            }
        }
    }
    // degeneracies [k+2] → [k+1] → [k]
    for k in 0..k_max.saturating_sub(1) {
        for j in 0..=k {
            for i in 0..=j {
                r.expect_eq(
                    "degeneracy-degeneracy",
                    c(s(j, k), s(i, k + 1)),
                    c(s(i, k), s(j + 1, k + 1)),
                );
            }
        }
    }
    // ζ_j: [k+1] → [k] after ε_i: [k] → [k+1]
    for k in 0..k_max {
        for j in 0..=k {
            for i in 0..=k + 1 {
                let lhs = c(s(j, k), f(i, k + 1));
                if i < j {
                    r.expect_eq("mixed (i < j)", lhs, c(f(i, k), s(j - 1, k - 1)));
                } else if i == j || i == j + 1 {
                    r.expect_eq("mixed (identity)", lhs, MonotoneMap::identity(k));
                } else {
                    r.expect_eq("mixed (i > j+1)", lhs, c(f(i - 1, k), s(j, k - 1)));
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn map(s: usize, t: usize, v: &[usize]) -> MonotoneMap {
        MonotoneMap::new(s, t, v.to_vec()).unwrap()
    }

    #[test]
    fn face_examples() {
        assert_eq!(face(1, 3).unwrap(), map(2, 3, &[0, 2, 3]));
        assert_eq!(face(0, 1).unwrap(), map(0, 1, &[1]));
        assert_eq!(face(2, 2).unwrap(), map(1, 2, &[0, 1]));
        assert!(face(4, 3).is_err());
        assert!(face(0, 0).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(0, 0).unwrap(), map(1, 0, &[0, 0]));
        assert_eq!(degeneracy(1, 1).unwrap(), map(2, 1, &[0, 1, 1]));
        assert!(compose_maps(&degeneracy(0, 0).unwrap(), &face(0, 1).unwrap())
            .unwrap()
            .is_identity());
        assert!(degeneracy(2, 1).is_err());
    }

    #[test]
    fn composition() {
        let f = map(1, 2, &[0, 2]);
        assert_eq!(compose_maps(&MonotoneMap::identity(2), &f).unwrap(), f);
        // ε₀ = (1,2) then ε₁ = (0,2,3)
        let e0 = face(0, 2).unwrap();
        let e1 = face(1, 3).unwrap();
        assert_eq!(compose_maps(&e1, &e0).unwrap(), map(1, 3, &[2, 3]));
        assert!(compose_maps(&e0, &e1).is_err());
        assert!(MonotoneMap::new(1, 2, vec![2, 1]).is_err());
        assert!(MonotoneMap::new(1, 2, vec![0, 3]).is_err());
    }

    #[test]
    fn factorize_examples() {
        let id = factorize(&MonotoneMap::identity(3));
        assert!(id.faces.is_empty() && id.degeneracies.is_empty());
        let f = factorize(&face(1, 3).unwrap());
        assert_eq!(f.faces, vec![(1, 3)]);
        assert!(f.degeneracies.is_empty());
        let constant = map(1, 1, &[0, 0]);
        let fc = factorize(&constant);
        assert_eq!(fc.degeneracies, vec![(0, 0)]);
        assert_eq!(fc.faces, vec![(1, 1)]);
        assert_eq!(fc.recompose(), constant);
    }

    #[test]
    fn exhaustive_identities() {
        let r = check_simplicial_identities(6);
        assert!(r.all_passed(), "{:?}", r.failures);
        assert!(r.checked > 100);
    }

    #[test]
    fn swapped_face_indices_differ() {
        // ε_j ε_i against ε_j ε_{i} with the roles exchanged
        let lhs = compose_maps(&face(2, 3).unwrap(), &face(0, 2).unwrap()).unwrap();
        let rhs = compose_maps(&face(0, 3).unwrap(), &face(2, 2).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn transposed_mixed_clause_fails() {
        // for i > j+1 the relation is ζ_j ε_i = ε_{i-1} ζ_j; reading it as
        // ζ_{i-1} ε_j breaks already at j = 0, i = 2
        let lhs = compose_maps(&degeneracy(0, 2).unwrap(), &face(2, 3).unwrap()).unwrap();
        let good = compose_maps(&face(1, 2).unwrap(), &degeneracy(0, 1).unwrap()).unwrap();
        let wrong = compose_maps(&degeneracy(1, 2).unwrap(), &face(0, 3).unwrap()).unwrap();
        assert_eq!(lhs, good);
        assert_ne!(lhs, wrong);
    }

    #[test]
    fn factorize_round_trips_everything_small() {
        for s in 0..=4 {
            for t in 0..=4 {
                for f in MonotoneMap::enumerate(s, t) {
                    let fac = factorize(&f);
                    assert_eq!(fac.recompose(), f);
                    assert!(fac.faces.windows(2).all(|w| w[0].0 > w[1].0));
                    assert!(fac.degeneracies.windows(2).all(|w| w[0].0 < w[1].0));
                    let image = f.values().iter().collect::<std::collections::BTreeSet<_>>().len();
                    assert_eq!(fac.faces.len(), t + 1 - image);
                    assert_eq!(fac.degeneracies.len(), s + 1 - image);
                }
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        // monotone maps [m] → [n]: C(m+n+1, m+1)
        assert_eq!(MonotoneMap::enumerate(1, 1).len(), 3);
        assert_eq!(MonotoneMap::enumerate(2, 3).len(), 20);
        assert_eq!(MonotoneMap::enumerate(0, 4).len(), 5);
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let s = rng.gen_range(0..=6);
            let t = rng.gen_range(0..=6);
            let mut v: Vec<usize> = (0..=s).map(|_| rng.gen_range(0..=t)).collect();
            v.sort_unstable();
            let f = MonotoneMap::new(s, t, v).unwrap();
            assert_eq!(factorize(&f).recompose(), f);
        }
    }
}
