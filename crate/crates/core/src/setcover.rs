//! Multi-interval set cover.
//!
//! Every element of the universe is an interval and every set is a list of
//! intervals. The instance is turned into ordinary set cover by cutting the
//! union of all intervals at every endpoint ("atoms") and recording which
//! atoms each set covers; greedy set cover then carries its `H(|atoms|)`
//! guarantee over unchanged.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::TOLERANCE;

/// A closed interval `[lo, hi]`. Serialized as `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Interval1D {
    pub lo: f64,
    pub hi: f64,
}

impl Interval1D {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::InvalidGeometry(format!("interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo - TOLERANCE && x <= self.hi + TOLERANCE
    }
}

impl TryFrom<[f64; 2]> for Interval1D {
    type Error = Error;
    fn try_from([lo, hi]: [f64; 2]) -> Result<Self> {
        Self::new(lo, hi)
    }
}

impl From<Interval1D> for [f64; 2] {
    fn from(i: Interval1D) -> Self {
        [i.lo, i.hi]
    }
}

/// The sets `Q_1..Q_n`; the universe is the union of all their intervals.
/// JSON: `{"sets":[[[lo,hi],...],...]}`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct MultiIntervalInstance {
    pub sets: Vec<Vec<Interval1D>>,
}

impl MultiIntervalInstance {
    pub fn new(sets: Vec<Vec<Interval1D>>) -> Self {
        Self { sets }
    }

    /// Convenience constructor from `(lo, hi)` pairs.
    pub fn from_pairs(sets: &[&[(f64, f64)]]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|s| s.iter().map(|&(lo, hi)| Interval1D::new(lo, hi)).collect())
            .collect::<Result<_>>()?;
        Ok(Self { sets })
    }

    pub fn intervals(&self) -> impl Iterator<Item = &Interval1D> {
        self.sets.iter().flatten()
    }

    fn set_contains(&self, set: usize, x: f64) -> bool {
        self.sets[set].iter().any(|iv| iv.contains(x))
    }
}

/// Ordinary set cover over disjoint atoms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverInstance {
    pub atoms: Vec<Interval1D>,
    /// `covers[i]` lists the atom indices covered by set `i`, ascending.
    pub covers: Vec<Vec<usize>>,
}

impl CoverInstance {
    /// Set cover over abstract elements `0..universe`; atoms become unit
    /// intervals `[e, e + 1]`.
    pub fn abstract_instance(universe: usize, covers: Vec<Vec<usize>>) -> Self {
        let atoms = (0..universe)
            .map(|e| Interval1D {
                lo: e as f64,
                hi: e as f64 + 1.0,
            })
            .collect();
        Self { atoms, covers }
    }

    /// Greedy guarantee `H(|atoms|) ≤ ln|atoms| + 1`.
    pub fn greedy_factor(&self) -> f64 {
        greedy_factor(self.atoms.len())
    }
}

/// `ln(m) + 1` for `m ≥ 1` atoms, `1` otherwise.
pub fn greedy_factor(atoms: usize) -> f64 {
    if atoms <= 1 {
        1.0
    } else {
        (atoms as f64).ln() + 1.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverSolution {
    /// Chosen set indices in pick order.
    pub chosen: Vec<usize>,
    pub atom_coverage: Vec<bool>,
}

impl CoverSolution {
    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    pub fn atom_count(&self) -> usize {
        self.atom_coverage.len()
    }
}

/// Solution document: `{"chosen":[..],"atoms":n,"greedy_bound":x}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub chosen: Vec<usize>,
    pub atoms: usize,
    pub greedy_bound: f64,
}

impl From<&CoverSolution> for SolutionDoc {
    fn from(s: &CoverSolution) -> Self {
        Self {
            chosen: s.chosen.clone(),
            atoms: s.atom_count(),
            greedy_bound: greedy_factor(s.atom_count()),
        }
    }
}

/// Sorted endpoints with values closer than the tolerance merged.
fn snapped_endpoints(inst: &MultiIntervalInstance) -> Vec<f64> {
    let mut xs: Vec<f64> = inst.intervals().flat_map(|iv| [iv.lo, iv.hi]).collect();
    xs.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(xs.len());
    for x in xs {
        match out.last() {
            Some(&last) if x - last <= TOLERANCE => {}
            _ => out.push(x),
        }
    }
    out
}

/// Cut the union of all intervals at every endpoint.
///
/// Positive-length atoms lie between consecutive endpoints and are kept when
/// their midpoint is in the union. A zero-length interval contributes a
/// point atom only when no positive-length atom already contains it.
pub fn atomic_decomposition(inst: &MultiIntervalInstance) -> CoverInstance {
    let xs = snapped_endpoints(inst);
    let in_union = |x: f64| inst.intervals().any(|iv| iv.contains(x));

    let mut atoms: Vec<Interval1D> = xs
        .windows(2)
        .map(|w| Interval1D { lo: w[0], hi: w[1] })
        .filter(|a| in_union(a.midpoint()))
        .collect();

    let mut points: Vec<f64> = Vec::new();
    for iv in inst.intervals().filter(|iv| iv.length() <= TOLERANCE) {
        let x = iv.midpoint();
        let absorbed = atoms.iter().any(|a| a.contains(x));
        if !absorbed && !points.iter().any(|p| (p - x).abs() <= TOLERANCE) {
            points.push(x);
        }
    }
    atoms.extend(points.into_iter().map(|x| Interval1D { lo: x, hi: x }));
    atoms.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));

    let covers = (0..inst.sets.len())
        .map(|i| {
            atoms
                .iter()
                .enumerate()
                .filter(|(_, a)| inst.set_contains(i, a.midpoint()))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    CoverInstance { atoms, covers }
}

/// Greedy set cover: repeatedly take the set covering the most uncovered
/// atoms, ties to the lowest index.
pub fn greedy_set_cover(ci: &CoverInstance) -> Result<CoverSolution> {
    let m = ci.atoms.len();
    let mut coverable = vec![false; m];
    for &a in ci.covers.iter().flatten() {
        coverable[a] = true;
    }
    if let Some(a) = coverable.iter().position(|c| !c) {
        return Err(Error::Infeasible(a));
    }

    let mut covered = vec![false; m];
    let mut remaining = m;
    let mut taken = vec![false; ci.covers.len()];
    let mut chosen = Vec::new();
    while remaining > 0 {
        let mut best: Option<(usize, usize)> = None;
        for (i, set) in ci.covers.iter().enumerate() {
            if taken[i] {
                continue;
            }
            let gain = set.iter().filter(|&&a| !covered[a]).count();
            if gain > 0 && best.is_none_or(|(_, g)| gain > g) {
                best = Some((i, gain));
            }
        }
        let (i, gain) = best.expect("coverable atoms always have a set with positive gain");
        taken[i] = true;
        chosen.push(i);
        for &a in &ci.covers[i] {
            covered[a] = true;
        }
        remaining -= gain;
    }
    Ok(CoverSolution {
        chosen,
        atom_coverage: covered,
    })
}

/// Atomic decomposition followed by greedy set cover.
pub fn multi_interval_set_cover(inst: &MultiIntervalInstance) -> Result<CoverSolution> {
    greedy_set_cover(&atomic_decomposition(inst))
}

/// Embed abstract set cover over elements `1..=universe` as multi-interval set
/// cover: element `e` becomes `[e - 1, e]`.
pub fn setcover_to_multiinterval(universe: usize, sets: &[Vec<usize>]) -> Result<MultiIntervalInstance> {
    let sets = sets
        .iter()
        .map(|set| {
            set.iter()
                .map(|&e| {
                    if e == 0 || e > universe {
                        Err(Error::ElementOutOfRange { element: e, universe })
                    } else {
                        Ok(Interval1D {
                            lo: (e - 1) as f64,
                            hi: e as f64,
                        })
                    }
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(MultiIntervalInstance { sets })
}

/// Largest number of input intervals sharing a point (closed endpoints).
pub fn ply(inst: &MultiIntervalInstance) -> Result<usize> {
    let mut events: Vec<(f64, i32)> = inst.intervals().flat_map(|iv| [(iv.lo, 1), (iv.hi, -1)]).collect();
    if events.is_empty() {
        return Err(Error::EmptyInput("ply of an empty union"));
    }
    // openings before closings at the same coordinate
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut depth = 0i32;
    let mut best = 0i32;
    for (_, delta) in events {
        depth += delta;
        best = best.max(depth);
    }
    Ok(best as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval1D {
        Interval1D::new(lo, hi).unwrap()
    }

    #[test]
    fn decomposition_of_two_overlapping_sets() {
        let inst = MultiIntervalInstance::from_pairs(&[&[(0.0, 2.0)], &[(1.0, 3.0)]]).unwrap();
        let ci = atomic_decomposition(&inst);
        assert_eq!(ci.atoms, vec![iv(0.0, 1.0), iv(1.0, 2.0), iv(2.0, 3.0)]);
        assert_eq!(ci.covers, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn decomposition_trivial_cases() {
        let one = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)]]).unwrap();
        let ci = atomic_decomposition(&one);
        assert_eq!(ci.atoms, vec![iv(0.0, 1.0)]);
        assert_eq!(ci.covers, vec![vec![0]]);

        let apart = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)], &[(2.0, 3.0)]]).unwrap();
        let ci = atomic_decomposition(&apart);
        assert_eq!(ci.atoms, vec![iv(0.0, 1.0), iv(2.0, 3.0)]);
        assert_eq!(ci.covers, vec![vec![0], vec![1]]);
    }

    #[test]
    fn zero_length_intervals() {
        // isolated point becomes its own atom
        let inst = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)], &[(5.0, 5.0)]]).unwrap();
        let ci = atomic_decomposition(&inst);
        assert_eq!(ci.atoms, vec![iv(0.0, 1.0), iv(5.0, 5.0)]);
        assert_eq!(ci.covers, vec![vec![0], vec![1]]);

        // a point inside another interval merges into it
        let inst = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)], &[(0.5, 0.5)]]).unwrap();
        let ci = atomic_decomposition(&inst);
        assert_eq!(ci.atoms.len(), 2);
        assert!(ci.atoms.iter().all(|a| a.length() > 0.0));
        assert_eq!(multi_interval_set_cover(&inst).unwrap().chosen, vec![0]);
    }

    #[test]
    fn greedy_trace() {
        let ci = CoverInstance::abstract_instance(3, vec![vec![0, 1], vec![1, 2], vec![2]]);
        assert_eq!(greedy_set_cover(&ci).unwrap().chosen, vec![0, 1]);

        let ci = CoverInstance::abstract_instance(4, vec![vec![0], vec![0, 1, 2, 3]]);
        assert_eq!(greedy_set_cover(&ci).unwrap().chosen, vec![1]);

        let singletons = (0..5).map(|e| vec![e]).collect();
        let ci = CoverInstance::abstract_instance(5, singletons);
        assert_eq!(greedy_set_cover(&ci).unwrap().chosen, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn uncoverable_atom_is_an_error() {
        let ci = CoverInstance::abstract_instance(2, vec![vec![0]]);
        assert!(matches!(greedy_set_cover(&ci), Err(Error::Infeasible(1))));
    }

    #[test]
    fn multi_interval_examples() {
        let inst =
            MultiIntervalInstance::from_pairs(&[&[(0.0, 2.0)], &[(1.0, 3.0)], &[(0.0, 1.0), (2.0, 3.0)]]).unwrap();
        assert_eq!(multi_interval_set_cover(&inst).unwrap().chosen, vec![0, 1]);

        // a = [0,1], b = [1,2], c = [0.5,1.5] ⊂ a ∪ b
        let inst = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)], &[(1.0, 2.0)], &[(0.5, 1.5)]]).unwrap();
        assert_eq!(multi_interval_set_cover(&inst).unwrap().chosen, vec![0, 1]);

        let inst = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)], &[(0.0, 3.0)], &[(2.0, 3.0)]]).unwrap();
        assert_eq!(multi_interval_set_cover(&inst).unwrap().chosen, vec![1]);
    }

    #[test]
    fn reduction_examples() {
        let inst = setcover_to_multiinterval(3, &[vec![1, 2], vec![2, 3], vec![3]]).unwrap();
        assert_eq!(inst.sets[0], vec![iv(0.0, 1.0), iv(1.0, 2.0)]);
        assert_eq!(inst.sets[1], vec![iv(1.0, 2.0), iv(2.0, 3.0)]);
        assert_eq!(inst.sets[2], vec![iv(2.0, 3.0)]);

        let single = setcover_to_multiinterval(1, &[vec![1]]).unwrap();
        assert_eq!(single.sets, vec![vec![iv(0.0, 1.0)]]);

        let with_empty = setcover_to_multiinterval(2, &[vec![1, 2], vec![]]).unwrap();
        assert!(with_empty.sets[1].is_empty());
        assert_eq!(multi_interval_set_cover(&with_empty).unwrap().chosen, vec![0]);

        assert!(matches!(
            setcover_to_multiinterval(2, &[vec![3]]),
            Err(Error::ElementOutOfRange {
                element: 3,
                universe: 2
            })
        ));
        assert!(setcover_to_multiinterval(2, &[vec![0]]).is_err());
    }

    #[test]
    fn ply_examples() {
        let disjoint = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)], &[(2.0, 3.0)]]).unwrap();
        assert_eq!(ply(&disjoint).unwrap(), 1);
        let three = MultiIntervalInstance::from_pairs(&[&[(0.0, 2.0)], &[(1.0, 3.0)], &[(1.5, 2.5)]]).unwrap();
        assert_eq!(ply(&three).unwrap(), 3);
        let copies = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)] as &[_]; 4]).unwrap();
        assert_eq!(ply(&copies).unwrap(), 4);
        // closed endpoints touch
        let touching = MultiIntervalInstance::from_pairs(&[&[(0.0, 1.0)], &[(1.0, 2.0)]]).unwrap();
        assert_eq!(ply(&touching).unwrap(), 2);
        assert!(ply(&MultiIntervalInstance::default()).is_err());
    }

    #[test]
    fn json_formats() {
        let inst: MultiIntervalInstance = serde_json::from_str(r#"{"sets":[[[0,2]],[[1,3]]]}"#).unwrap();
        assert_eq!(inst.sets.len(), 2);
        let sol = multi_interval_set_cover(&inst).unwrap();
        let doc = serde_json::to_value(SolutionDoc::from(&sol)).unwrap();
        assert_eq!(doc["chosen"], serde_json::json!([0, 1]));
        assert_eq!(doc["atoms"], serde_json::json!(3));
        assert!(serde_json::from_str::<MultiIntervalInstance>(r#"{"sets":[[[2,1]]]}"#).is_err());
    }
}
