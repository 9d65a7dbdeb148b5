//! Subspace-code and rank-metric-code containers, the spread / orbit /
//! lifted constructions, and code analysis.

pub mod orbit;
pub mod rank;
pub mod spread;

use std::collections::BTreeMap;

use crate::action::{act, SemilinearMap};
use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::linalg::poly::PolyGF;
use crate::space::{Metric, Subspace};

pub use orbit::orbit_code;
pub use rank::{lift, rank_automorphisms, rank_distance, RankMetricCode};
pub use spread::{desarguesian_aut_generators, desarguesian_spread, spread_aut_order_formula};

/// How a code was built, with its construction parameters.
#[derive(Clone, Debug)]
pub enum Provenance {
    Spread {
        k: usize,
        n: usize,
        poly: PolyGF,
    },
    Orbit {
        start: Subspace,
        generators: Vec<SemilinearMap>,
    },
    Lifted {
        k: usize,
        m: usize,
    },
    Adhoc,
}

/// A set of subspaces of F_q^n, kept sorted on canonical bases: no
/// duplicates, deterministic iteration. Equality ignores provenance.
#[derive(Clone, Debug)]
pub struct SubspaceCode {
    spec: FieldRef,
    ambient: usize,
    words: Vec<Subspace>,
    provenance: Provenance,
}

impl PartialEq for SubspaceCode {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.spec == other.spec && self.words == other.words
    }
}

impl Eq for SubspaceCode {}

impl SubspaceCode {
    pub fn from_words(
        spec: &FieldRef,
        ambient: usize,
        words: impl IntoIterator<Item = Subspace>,
        provenance: Provenance,
    ) -> Result<SubspaceCode> {
        let mut words: Vec<Subspace> = words.into_iter().collect();
        for w in &words {
            if w.spec() != spec {
                return Err(Error::FieldMismatch);
            }
            if w.ambient() != ambient {
                return Err(Error::AmbientMismatch);
            }
        }
        words.sort();
        words.dedup();
        Ok(SubspaceCode {
            spec: spec.clone(),
            ambient,
            words,
            provenance,
        })
    }

    pub fn spec(&self) -> &FieldRef {
        &self.spec
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Codewords in canonical sorted order.
    pub fn words(&self) -> &[Subspace] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, u: &Subspace) -> bool {
        self.words.binary_search(u).is_ok()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The image code `C g`, word by word.
    pub fn apply(&self, g: &SemilinearMap) -> Result<SubspaceCode> {
        let words = self
            .words
            .iter()
            .map(|w| act(w, g))
            .collect::<Result<Vec<_>>>()?;
        SubspaceCode::from_words(&self.spec, self.ambient, words, Provenance::Adhoc)
    }

    pub fn dimension_distribution(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for w in &self.words {
            *out.entry(w.dim()).or_insert(0) += 1;
        }
        out
    }

    /// Minimum distance over all unordered pairs; undefined below two words.
    pub fn min_distance(&self, metric: Metric) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::UndefinedMinimum);
        }
        let mut min = usize::MAX;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                min = min.min(u.distance(v, metric)?);
            }
        }
        Ok(min)
    }
}

/// Minimum and full pair distribution of one metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceStats {
    /// None when the code has fewer than two words, never 0 in that case.
    pub min: Option<usize>,
    pub distribution: BTreeMap<usize, u64>,
}

/// The isometry-relevant profile of a code: ambient, cardinality, dimension
/// distribution, and both distance distributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeReport {
    pub q: u32,
    pub ambient: usize,
    pub cardinality: usize,
    pub dimensions: BTreeMap<usize, u64>,
    pub subspace_distance: DistanceStats,
    pub injection_distance: DistanceStats,
}

pub fn analyze(code: &SubspaceCode) -> Result<CodeReport> {
    let mut ds = BTreeMap::new();
    let mut di = BTreeMap::new();
    let words = code.words();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            *ds.entry(u.distance(v, Metric::Subspace)?).or_insert(0u64) += 1;
            *di.entry(u.distance(v, Metric::Injection)?).or_insert(0u64) += 1;
        }
    }
    Ok(CodeReport {
        q: code.spec().order(),
        ambient: code.ambient(),
        cardinality: code.len(),
        dimensions: code.dimension_distribution(),
        subspace_distance: DistanceStats {
            min: ds.keys().next().copied(),
            distribution: ds,
        },
        injection_distance: DistanceStats {
            min: di.keys().next().copied(),
            distribution: di,
        },
    })
}

/// A code is a spread when its words share one dimension k, pairwise
/// intersect trivially, and cover the space, checked in counting form:
/// `|C| (q^k - 1) = q^n - 1`.
pub fn is_spread(code: &SubspaceCode) -> Result<bool> {
    let words = code.words();
    let Some(first) = words.first() else {
        return Ok(false);
    };
    let k = first.dim();
    if k == 0 || words.iter().any(|w| w.dim() != k) {
        return Ok(false);
    }
    let q = code.spec().order() as u128;
    let n = code.ambient() as u32;
    if words.len() as u128 * (q.pow(k as u32) - 1) != q.pow(n) - 1 {
        return Ok(false);
    }
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            if u.basis().vstack(v.basis())?.rank() != 2 * k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
