//! The general semilinear group and its right action on subspaces:
//! composition, group closure by breadth-first search, stabilizers, and
//! automorphism groups of subspace codes.

use std::cmp::Ordering;
use std::collections::HashSet;

use rayon::prelude::*;

use crate::codes::SubspaceCode;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef, Frobenius};
use crate::linalg::gl::GlStream;
use crate::linalg::{mat_mul_into, rref_in_place, MatrixGF};
use crate::space::Subspace;

/// Index range handed to one worker of a parallel GL scan. Fixed so that
/// chunk boundaries, and therefore merged output, never depend on the
/// number of threads.
pub(crate) const GL_CHUNK: u64 = 1 << 15;

/// An element (A, alpha) of the general semilinear group: an invertible
/// matrix together with a field automorphism. The linear subgroup is
/// `alpha = id`, which is all there is over prime fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemilinearMap {
    mat: MatrixGF,
    frob: Frobenius,
}

impl PartialOrd for SemilinearMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SemilinearMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.frob
            .exponent()
            .cmp(&other.frob.exponent())
            .then_with(|| self.mat.cmp(&other.mat))
    }
}

impl SemilinearMap {
    /// Wraps an invertible matrix and a Frobenius exponent (reduced mod m).
    pub fn new(mat: MatrixGF, frob_exponent: u32) -> Result<SemilinearMap> {
        if !mat.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let frob = mat.spec().frobenius(frob_exponent);
        Ok(SemilinearMap { mat, frob })
    }

    /// A purely linear map.
    pub fn linear(mat: MatrixGF) -> Result<SemilinearMap> {
        SemilinearMap::new(mat, 0)
    }

    pub fn identity(spec: &FieldRef, n: usize) -> SemilinearMap {
        SemilinearMap {
            mat: MatrixGF::identity(spec, n),
            frob: Frobenius::IDENTITY,
        }
    }

    /// Trusted constructor for products of already-validated elements.
    pub(crate) fn from_parts_unchecked(mat: MatrixGF, frob: Frobenius) -> SemilinearMap {
        SemilinearMap { mat, frob }
    }

    pub fn matrix(&self) -> &MatrixGF {
        &self.mat
    }

    pub fn frobenius(&self) -> Frobenius {
        self.frob
    }

    pub fn spec(&self) -> &FieldRef {
        self.mat.spec()
    }

    pub fn dimension(&self) -> usize {
        self.mat.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.frob.is_identity() && self.mat.is_identity()
    }

    /// The semidirect product rule `(A, a)(B, b) = (A a^{-1}(B), ab)`.
    pub fn compose(&self, other: &SemilinearMap) -> Result<SemilinearMap> {
        let spec = self.spec();
        let alpha_inv = self.frob.inverse(spec);
        let twisted = other.mat.frobenius_entrywise(alpha_inv.exponent());
        Ok(SemilinearMap {
            mat: self.mat.mul(&twisted)?,
            frob: self.frob.compose(other.frob, spec),
        })
    }

    /// `(A, a)^{-1} = (a(A^{-1}), a^{-1})`.
    pub fn inverse(&self) -> Result<SemilinearMap> {
        let inv = self.mat.inverse()?;
        Ok(SemilinearMap {
            mat: inv.frobenius_entrywise(self.frob.exponent()),
            frob: self.frob.inverse(self.spec()),
        })
    }
}

/// The right action `U (A, a) = rs(a(U A))`: multiply first, then apply the
/// automorphism entrywise, then canonicalize. Dimension is preserved and
/// the result is independent of the basis representative.
pub fn act(u: &Subspace, g: &SemilinearMap) -> Result<Subspace> {
    if u.spec() != g.spec() {
        return Err(Error::FieldMismatch);
    }
    if u.ambient() != g.dimension() {
        return Err(Error::AmbientMismatch);
    }
    let image = u
        .basis()
        .mul(&g.mat)?
        .frobenius_entrywise(g.frob.exponent());
    Ok(Subspace::from_rows(image))
}

/// An explicitly enumerated subgroup with generator provenance.
///
/// `truncated = false` guarantees the element set contains the identity and
/// is closed under composition and inverse. Elements are kept sorted, so
/// two closures are equal as groups exactly when their element vectors are
/// equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupClosure {
    elements: Vec<SemilinearMap>,
    generators: Vec<SemilinearMap>,
    truncated: bool,
}

impl GroupClosure {
    /// Breadth-first closure of the generators under composition. Stops
    /// with `truncated = true` once the element count would exceed `cap`.
    /// An empty generator list yields the trivial group.
    pub fn generate(
        spec: &FieldRef,
        n: usize,
        generators: &[SemilinearMap],
        cap: u64,
    ) -> Result<GroupClosure> {
        if cap == 0 {
            return Err(Error::ZeroCap);
        }
        for g in generators {
            if g.spec() != spec {
                return Err(Error::FieldMismatch);
            }
            if g.dimension() != n {
                return Err(Error::AmbientMismatch);
            }
        }
        let identity = SemilinearMap::identity(spec, n);
        let mut seen: HashSet<SemilinearMap> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = vec![identity];
        let mut cursor = 0;
        let mut truncated = false;
        'bfs: while cursor < queue.len() {
            let current = queue[cursor].clone();
            cursor += 1;
            for g in generators {
                let next = current.compose(g)?;
                if seen.contains(&next) {
                    continue;
                }
                if seen.len() as u64 >= cap {
                    truncated = true;
                    break 'bfs;
                }
                seen.insert(next.clone());
                queue.push(next);
            }
        }
        let mut elements: Vec<SemilinearMap> = seen.into_iter().collect();
        elements.sort();
        Ok(GroupClosure {
            elements,
            generators: generators.to_vec(),
            truncated,
        })
    }

    pub(crate) fn from_parts(
        mut elements: Vec<SemilinearMap>,
        generators: Vec<SemilinearMap>,
        truncated: bool,
    ) -> GroupClosure {
        elements.sort();
        GroupClosure {
            elements,
            generators,
            truncated,
        }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Elements in canonical sorted order.
    pub fn elements(&self) -> &[SemilinearMap] {
        &self.elements
    }

    /// The defining generator list; empty when the group was enumerated
    /// directly (for example by a brute-force stabilizer scan).
    pub fn generators(&self) -> &[SemilinearMap] {
        &self.generators
    }

    /// Generators if present, otherwise the full element list; a valid
    /// generating set either way.
    pub fn effective_generators(&self) -> &[SemilinearMap] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn contains(&self, g: &SemilinearMap) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Full pairwise closure-and-inverse check; quadratic, intended for
    /// verification at small orders.
    pub fn verify_closed(&self) -> Result<bool> {
        for a in &self.elements {
            if !self.contains(&a.inverse()?) {
                return Ok(false);
            }
            for b in &self.elements {
                if !self.contains(&a.compose(b)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The conjugate subgroup `s^{-1} G s`, element by element; same order.
    pub fn conjugate(&self, s: &SemilinearMap) -> Result<GroupClosure> {
        let s_inv = s.inverse()?;
        let map = |g: &SemilinearMap| s_inv.compose(g)?.compose(s);
        let elements = self.elements.iter().map(map).collect::<Result<Vec<_>>>()?;
        let generators = self
            .generators
            .iter()
            .map(map)
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupClosure::from_parts(
            elements,
            generators,
            self.truncated,
        ))
    }
}

// ---------------------------------------------------------------------------
// Fast stabilizer scanning.

/// Precomputed tables for testing many candidates against one or two codes:
/// source words are mapped in a fixed (sorted) order and probed against the
/// target's canonical-basis hash set, failing on the first miss. Almost all
/// candidates die on the first word, which is what makes full GL scans at
/// GL(4, 3) scale tractable.
pub(crate) struct CodeScan {
    n: usize,
    source: Vec<(usize, Vec<FieldElement>)>,
    target: HashSet<Vec<FieldElement>>,
}

impl CodeScan {
    pub(crate) fn automorphism(code: &SubspaceCode) -> CodeScan {
        CodeScan::between(code, code)
    }

    /// Source words of `from` (lexicographically least first), target key
    /// set of `to`.
    pub(crate) fn between(from: &SubspaceCode, to: &SubspaceCode) -> CodeScan {
        let source = from
            .words()
            .iter()
            .map(|w| (w.dim(), w.basis().entries().to_vec()))
            .collect();
        let target = to
            .words()
            .iter()
            .map(|w| w.basis().entries().to_vec())
            .collect();
        CodeScan {
            n: from.ambient(),
            source,
            target,
        }
    }

    /// Stabilizer test for a single subspace.
    pub(crate) fn stabilizer(u: &Subspace) -> CodeScan {
        CodeScan {
            n: u.ambient(),
            source: vec![(u.dim(), u.basis().entries().to_vec())],
            target: std::iter::once(u.basis().entries().to_vec()).collect(),
        }
    }

    /// Does the candidate map every source word into the target set?
    pub(crate) fn candidate_maps(
        &self,
        spec: &FieldRef,
        a: &[FieldElement],
        frob: Frobenius,
        scratch: &mut Vec<FieldElement>,
    ) -> bool {
        for (k, flat) in &self.source {
            let k = *k;
            scratch.clear();
            scratch.resize(k * self.n, FieldElement::ZERO);
            mat_mul_into(spec, flat, k, self.n, a, self.n, scratch);
            if !frob.is_identity() {
                for e in scratch.iter_mut() {
                    *e = spec.frobenius_apply(frob, *e);
                }
            }
            let (rank, _) = rref_in_place(spec, scratch, k, self.n);
            debug_assert_eq!(rank, k, "invertible maps preserve dimension");
            if !self.target.contains(&scratch[..k * self.n]) {
                return false;
            }
        }
        true
    }
}

/// Filters the full GL(n, q) stream through a predicate, in parallel over
/// fixed index chunks; hits come back in stream order regardless of worker
/// count.
pub(crate) fn gl_filter<F>(stream: &GlStream, pred: F) -> Vec<MatrixGF>
where
    F: Fn(&MatrixGF) -> bool + Sync,
{
    let chunks = stream.ranges(GL_CHUNK);
    chunks
        .par_iter()
        .map(|&(start, end)| {
            stream
                .range(start, end)
                .filter(|m| pred(m))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

// ---------------------------------------------------------------------------
// Automorphism groups of subspace codes.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutMode {
    /// Stabilizer in GL(n, q).
    Linear,
    /// Stabilizer in the full semilinear group; over prime fields this
    /// coincides with the linear mode because Aut(F_p) is trivial.
    Semilinear,
}

#[derive(Debug, Clone)]
pub enum AutStrategy {
    /// Exhaustive filter of the GL stream (crossed with every Frobenius
    /// exponent in semilinear mode). Sound and complete within the cap.
    Brute,
    /// Close the supplied generators and check every element; reports the
    /// order of a subgroup of the automorphism group without claiming
    /// maximality.
    VerifyClosure(Vec<SemilinearMap>),
}

/// An automorphism-group computation outcome. `certified_maximal` is true
/// only for exhaustive strategies: a verified closure is a subgroup, not
/// necessarily the whole stabilizer.
#[derive(Debug, Clone)]
pub struct AutReport {
    pub group: GroupClosure,
    pub certified_maximal: bool,
}

/// True exactly when the image of every codeword under `g` is again a
/// codeword (set equality follows from injectivity).
pub fn is_automorphism(code: &SubspaceCode, g: &SemilinearMap) -> Result<bool> {
    if code.spec() != g.spec() {
        return Err(Error::FieldMismatch);
    }
    if code.ambient() != g.dimension() {
        return Err(Error::AmbientMismatch);
    }
    let scan = CodeScan::automorphism(code);
    let mut scratch = Vec::new();
    Ok(scan.candidate_maps(
        code.spec(),
        g.matrix().entries(),
        g.frobenius(),
        &mut scratch,
    ))
}

/// Computes Aut(C) (linear) or SAut(C) (semilinear).
pub fn automorphism_group(
    code: &SubspaceCode,
    mode: AutMode,
    strategy: &AutStrategy,
    cap: u64,
) -> Result<AutReport> {
    match strategy {
        AutStrategy::Brute => brute_automorphisms(code, mode, cap),
        AutStrategy::VerifyClosure(generators) => {
            let closure = GroupClosure::generate(code.spec(), code.ambient(), generators, cap)?;
            for g in closure.elements() {
                if !is_automorphism(code, g)? {
                    return Err(Error::NotAnAutomorphism);
                }
            }
            Ok(AutReport {
                group: closure,
                certified_maximal: false,
            })
        }
    }
}

fn brute_automorphisms(code: &SubspaceCode, mode: AutMode, cap: u64) -> Result<AutReport> {
    let spec = code.spec().clone();
    let n = code.ambient();
    let stream = GlStream::new(&spec, n, cap)?;
    let frobs: Vec<Frobenius> = match mode {
        AutMode::Linear => vec![Frobenius::IDENTITY],
        AutMode::Semilinear => spec.frobenius_orbit().collect(),
    };
    let scan = CodeScan::automorphism(code);
    let mut elements = Vec::new();
    for &frob in &frobs {
        let chunks = stream.ranges(GL_CHUNK);
        let hits: Vec<Vec<SemilinearMap>> = chunks
            .par_iter()
            .map(|&(start, end)| {
                let mut out = Vec::new();
                let mut scratch = Vec::new();
                for mat in stream.range(start, end) {
                    if scan.candidate_maps(&spec, mat.entries(), frob, &mut scratch) {
                        out.push(SemilinearMap::from_parts_unchecked(mat, frob));
                    }
                }
                out
            })
            .collect();
        elements.extend(hits.into_iter().flatten());
    }
    Ok(AutReport {
        group: GroupClosure::from_parts(elements, Vec::new(), false),
        certified_maximal: true,
    })
}

// ---------------------------------------------------------------------------
// Stabilizers of single subspaces.

pub fn is_stabilizer_element(u: &Subspace, g: &SemilinearMap) -> Result<bool> {
    Ok(act(u, g)? == *u)
}

/// Order of the stabilizer of `u` in GL(n, q), by brute-force filter.
pub fn stabilizer_order(u: &Subspace, cap: u64) -> Result<u64> {
    let stream = GlStream::new(u.spec(), u.ambient(), cap)?;
    let spec = u.spec().clone();
    let scan = CodeScan::stabilizer(u);
    let chunks = stream.ranges(GL_CHUNK);
    let total: u64 = chunks
        .par_iter()
        .map(|&(start, end)| {
            let mut scratch = Vec::new();
            stream
                .range(start, end)
                .filter(|m| {
                    scan.candidate_maps(&spec, m.entries(), Frobenius::IDENTITY, &mut scratch)
                })
                .count() as u64
        })
        .sum();
    Ok(total)
}

/// Closed form for the stabilizer order of a k-dimensional subspace of
/// F_q^n: |GL_k| * |GL_{n-k}| * q^(k(n-k)). The independent cross-check for
/// [`stabilizer_order`].
pub fn stabilizer_order_formula(q: u64, n: usize, k: usize) -> u128 {
    crate::linalg::gl::gl_order(q, k)
        * crate::linalg::gl::gl_order(q, n - k)
        * (q as u128).pow((k * (n - k)) as u32)
}
