//! Deciding linear and semilinear isometry between subspace codes:
//! fingerprint short-circuit, exhaustive witness search over the general
//! (semi)linear group, conjugacy of cyclic generating groups via the
//! rational canonical form, and transport of orbit presentations.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::action::{act, CodeScan, GroupClosure, SemilinearMap, GL_CHUNK};
use crate::codes::orbit::orbit_code;
use crate::codes::SubspaceCode;
use crate::error::{Error, Result};
use crate::field::Frobenius;
use crate::linalg::gl::GlStream;
use crate::linalg::rcf::rational_canonical_form;
use crate::linalg::MatrixGF;
use crate::space::Metric;

/// Everything a (semi)linear isometry must preserve; computable from the
/// code alone. Equal codes have equal fingerprints, and so do isometric
/// ones, so a mismatch certifies non-isometry without any search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub q: u32,
    pub ambient: usize,
    pub cardinality: usize,
    pub dimensions: BTreeMap<usize, u64>,
    /// Multiset of pairwise subspace distances.
    pub subspace_distances: BTreeMap<usize, u64>,
}

pub fn fingerprint(code: &SubspaceCode) -> Fingerprint {
    let mut distances = BTreeMap::new();
    let words = code.words();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            let d = u
                .distance(v, Metric::Subspace)
                .expect("codewords share one ambient space");
            *distances.entry(d).or_insert(0u64) += 1;
        }
    }
    Fingerprint {
        q: code.spec().order(),
        ambient: code.ambient(),
        cardinality: code.len(),
        dimensions: code.dimension_distribution(),
        subspace_distances: distances,
    }
}

/// Why two codes are certified non-isometric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsometry {
    /// The named fingerprint component differs.
    FingerprintMismatch { component: &'static str },
    /// The full search space was scanned without finding a witness.
    ExhaustiveSearchCompleted,
}

#[derive(Clone, Debug)]
pub enum IsometryOutcome {
    /// A verified witness g with `C1 g = C2`.
    Isometric(SemilinearMap),
    NotIsometric(NonIsometry),
}

impl IsometryOutcome {
    pub fn witness(&self) -> Option<&SemilinearMap> {
        match self {
            IsometryOutcome::Isometric(g) => Some(g),
            IsometryOutcome::NotIsometric(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryMode {
    Linear,
    Semilinear,
}

fn fingerprint_certificate(a: &Fingerprint, b: &Fingerprint) -> Option<&'static str> {
    if a.q != b.q {
        Some("field")
    } else if a.ambient != b.ambient {
        Some("ambient")
    } else if a.cardinality != b.cardinality {
        Some("cardinality")
    } else if a.dimensions != b.dimensions {
        Some("dimension distribution")
    } else if a.subspace_distances != b.subspace_distances {
        Some("distance distribution")
    } else {
        None
    }
}

/// Decides whether `c1 g = c2` for some g in GL (linear) or the full
/// semilinear group. Fingerprints are compared first; the exhaustive scan
/// is sound and complete within the cap, so a completed search is a
/// certificate of non-isometry, and a cap refusal is an error, never a
/// false negative.
///
/// The scan maps the lexicographically least codeword of `c1` first, which
/// prunes nearly every candidate in one membership probe. The witness
/// returned is the one of lowest stream index (linear candidates before
/// twisted ones), re-verified to map code to code exactly.
pub fn isometric(
    c1: &SubspaceCode,
    c2: &SubspaceCode,
    mode: IsometryMode,
    cap: u64,
) -> Result<IsometryOutcome> {
    if c1.spec() != c2.spec() {
        return Ok(IsometryOutcome::NotIsometric(
            NonIsometry::FingerprintMismatch { component: "field" },
        ));
    }
    if let Some(component) = fingerprint_certificate(&fingerprint(c1), &fingerprint(c2)) {
        return Ok(IsometryOutcome::NotIsometric(
            NonIsometry::FingerprintMismatch { component },
        ));
    }

    let spec = c1.spec().clone();
    let n = c1.ambient();
    let stream = GlStream::new(&spec, n, cap)?;
    let frobs: Vec<Frobenius> = match mode {
        IsometryMode::Linear => vec![Frobenius::IDENTITY],
        IsometryMode::Semilinear => spec.frobenius_orbit().collect(),
    };
    let scan = CodeScan::between(c1, c2);
    let chunks = stream.ranges(GL_CHUNK);
    for &frob in &frobs {
        let hit = chunks.par_iter().find_map_first(|&(start, end)| {
            let mut scratch = Vec::new();
            stream
                .range(start, end)
                .find(|m| scan.candidate_maps(&spec, m.entries(), frob, &mut scratch))
        });
        if let Some(mat) = hit {
            let witness = SemilinearMap::from_parts_unchecked(mat, frob);
            let image = c1.apply(&witness)?;
            assert_eq!(image, *c2, "witness failed re-verification");
            return Ok(IsometryOutcome::Isometric(witness));
        }
    }
    Ok(IsometryOutcome::NotIsometric(
        NonIsometry::ExhaustiveSearchCompleted,
    ))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Conjugacy of the cyclic groups `<g1>` and `<g2>` in GL(n, q): true
/// exactly when some power g1^t with t coprime to ord(g1) is similar to g2,
/// decided by comparing rational canonical forms. This is group conjugacy,
/// not mere matrix similarity.
pub fn cyclic_conjugate(g1: &MatrixGF, g2: &MatrixGF) -> Result<bool> {
    if g1.spec() != g2.spec() {
        return Err(Error::FieldMismatch);
    }
    if g1.rows() != g2.rows() || g1.cols() != g2.cols() {
        return Err(Error::DimensionMismatch(format!(
            "conjugacy of {}x{} vs {}x{}",
            g1.rows(),
            g1.cols(),
            g2.rows(),
            g2.cols()
        )));
    }
    let ord1 = g1.multiplicative_order()?;
    let ord2 = g2.multiplicative_order()?;
    if ord1 != ord2 {
        return Ok(false);
    }
    let target = rational_canonical_form(g2)?;
    let mut power = g1.clone();
    for t in 1..=ord1 {
        if gcd(t, ord1) == 1 && rational_canonical_form(&power)? == target {
            return Ok(true);
        }
        power = power.mul(g1)?;
    }
    Ok(false)
}

/// Transports an orbit presentation `C1 = start G` along S: returns the
/// code `(start S)(S^{-1} G S)` together with the conjugated group. The
/// returned code equals `C1 S` element by element.
pub fn orbit_isometry_transport(
    start: &crate::space::Subspace,
    group: &GroupClosure,
    s: &MatrixGF,
) -> Result<(SubspaceCode, GroupClosure)> {
    let s_map = SemilinearMap::linear(s.clone())?;
    let conjugated = group.conjugate(&s_map)?;
    let new_start = act(start, &s_map)?;
    let code = orbit_code(&new_start, conjugated.effective_generators())?;
    Ok((code, conjugated))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::rank::{lift, RankMetricCode};
    use crate::codes::spread::desarguesian_spread;
    use crate::codes::Provenance;
    use crate::field::{FieldRef, FieldSpec};
    use crate::linalg::companion_matrix;
    use crate::linalg::poly::PolyGF;
    use crate::space::Subspace;
    use crate::testrng::SplitMix;
    use crate::DEFAULT_CAP;

    fn gf(p: u32) -> FieldRef {
        FieldSpec::make(p, 1, None).unwrap()
    }

    fn mat(spec: &FieldRef, rows: &[&[u32]]) -> MatrixGF {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        MatrixGF::from_rows(spec, &rows).unwrap()
    }

    fn random_invertible(spec: &FieldRef, n: usize, rng: &mut SplitMix) -> MatrixGF {
        loop {
            let rows: Vec<Vec<u32>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| rng.below(spec.order() as u64) as u32)
                        .collect()
                })
                .collect();
            let m = MatrixGF::from_rows(spec, &rows).unwrap();
            if m.is_invertible() {
                return m;
            }
        }
    }

    fn binary_spread(spec: &FieldRef) -> SubspaceCode {
        let poly = PolyGF::from_indices(spec, &[1, 1, 1]).unwrap();
        desarguesian_spread(spec, 2, 4, &poly).unwrap()
    }

    fn lifted_code(spec: &FieldRef) -> SubspaceCode {
        let code = RankMetricCode::from_words(
            spec,
            2,
            2,
            vec![
                mat(spec, &[&[1, 0], &[0, 1]]),
                mat(spec, &[&[1, 1], &[0, 1]]),
                mat(spec, &[&[0, 1], &[0, 1]]),
                mat(spec, &[&[0, 0], &[0, 1]]),
            ],
        )
        .unwrap();
        lift(&code).unwrap()
    }

    #[test]
    fn fingerprint_of_the_binary_spread() {
        let f2 = gf(2);
        let fp = fingerprint(&binary_spread(&f2));
        assert_eq!(fp.q, 2);
        assert_eq!(fp.ambient, 4);
        assert_eq!(fp.cardinality, 5);
        assert_eq!(fp.dimensions, BTreeMap::from([(2, 5)]));
        assert_eq!(fp.subspace_distances, BTreeMap::from([(4, 10)]));
    }

    #[test]
    fn fingerprint_is_action_invariant() {
        let f2 = gf(2);
        let code = binary_spread(&f2);
        let fp = fingerprint(&code);
        let mut rng = SplitMix::new(99);
        for _ in 0..10 {
            let g = SemilinearMap::linear(random_invertible(&f2, 4, &mut rng)).unwrap();
            assert_eq!(fingerprint(&code.apply(&g).unwrap()), fp);
        }
    }

    #[test]
    fn singleton_fingerprint_is_empty() {
        let f2 = gf(2);
        let u = Subspace::from_rows(mat(&f2, &[&[1, 0, 0, 0]]));
        let code = SubspaceCode::from_words(&f2, 4, vec![u], Provenance::Adhoc).unwrap();
        assert!(fingerprint(&code).subspace_distances.is_empty());
    }

    #[test]
    fn code_is_isometric_to_its_translate() {
        let f2 = gf(2);
        let code = lifted_code(&f2);
        let mut rng = SplitMix::new(17);
        let a = SemilinearMap::linear(random_invertible(&f2, 4, &mut rng)).unwrap();
        let translated = code.apply(&a).unwrap();
        let outcome = isometric(&code, &translated, IsometryMode::Linear, DEFAULT_CAP).unwrap();
        let witness = outcome.witness().expect("translate must be isometric");
        assert_eq!(code.apply(witness).unwrap(), translated);

        // Over a prime field, semilinear mode returns the identical witness.
        let semi = isometric(&code, &translated, IsometryMode::Semilinear, DEFAULT_CAP).unwrap();
        assert_eq!(semi.witness(), Some(witness));
    }

    #[test]
    fn mismatched_codes_short_circuit() {
        let f2 = gf(2);
        let spread = binary_spread(&f2);
        let lifted = lifted_code(&f2);
        let outcome = isometric(&spread, &lifted, IsometryMode::Linear, DEFAULT_CAP).unwrap();
        match outcome {
            IsometryOutcome::NotIsometric(NonIsometry::FingerprintMismatch { component }) => {
                assert_eq!(component, "cardinality");
            }
            other => panic!("expected fingerprint mismatch, got {other:?}"),
        }

        // Same cardinality, different distance distribution.
        let four_words =
            SubspaceCode::from_words(&f2, 4, spread.words()[..4].to_vec(), Provenance::Adhoc)
                .unwrap();
        let outcome = isometric(&four_words, &lifted, IsometryMode::Linear, DEFAULT_CAP).unwrap();
        match outcome {
            IsometryOutcome::NotIsometric(NonIsometry::FingerprintMismatch { component }) => {
                assert_eq!(component, "distance distribution");
            }
            other => panic!("expected fingerprint mismatch, got {other:?}"),
        }
    }

    #[test]
    fn cap_refusal_is_an_error_not_a_negative() {
        let f3 = gf(3);
        let poly = PolyGF::from_indices(&f3, &[2, 1, 1]).unwrap();
        let code = desarguesian_spread(&f3, 2, 4, &poly).unwrap();
        let err = isometric(&code, &code, IsometryMode::Linear, 1000).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn fingerprint_mismatch_agrees_with_raw_exhaustive_search() {
        // The short-circuit is a certified necessary condition: where the
        // fingerprints differ, a direct scan of all of GL(4, 2) (bypassing
        // the fingerprint check entirely) also finds no witness.
        let f2 = gf(2);
        let lifted = lifted_code(&f2);
        let spread = binary_spread(&f2);
        let four_spread_words =
            SubspaceCode::from_words(&f2, 4, spread.words()[..4].to_vec(), Provenance::Adhoc)
                .unwrap();
        assert_ne!(fingerprint(&lifted), fingerprint(&four_spread_words));

        let stream = crate::GlStream::new(&f2, 4, DEFAULT_CAP).unwrap();
        for m in stream.iter() {
            let g = SemilinearMap::linear(m).unwrap();
            assert_ne!(lifted.apply(&g).unwrap(), four_spread_words);
        }
        match isometric(
            &lifted,
            &four_spread_words,
            IsometryMode::Linear,
            DEFAULT_CAP,
        )
        .unwrap()
        {
            IsometryOutcome::NotIsometric(NonIsometry::FingerprintMismatch { .. }) => {}
            other => panic!("expected a fingerprint certificate, got {other:?}"),
        }
    }

    #[test]
    fn cyclic_conjugacy_is_reflexive_and_symmetric() {
        let f3 = gf(3);
        let mut rng = SplitMix::new(53);
        for _ in 0..15 {
            let g = random_invertible(&f3, 3, &mut rng);
            assert!(cyclic_conjugate(&g, &g).unwrap());
            let h = random_invertible(&f3, 3, &mut rng);
            assert_eq!(
                cyclic_conjugate(&g, &h).unwrap(),
                cyclic_conjugate(&h, &g).unwrap()
            );
        }
    }

    #[test]
    fn cyclic_conjugacy_by_rcf() {
        let f3 = gf(3);
        let p = companion_matrix(&PolyGF::from_indices(&f3, &[2, 1, 1]).unwrap()).unwrap();
        let mut rng = SplitMix::new(31);

        // Explicit conjugation.
        let s = random_invertible(&f3, 2, &mut rng);
        let conj = s.inverse().unwrap().mul(&p).unwrap().mul(&s).unwrap();
        assert!(cyclic_conjugate(&p, &conj).unwrap());

        // Coprime powers generate the same group.
        assert!(cyclic_conjugate(&p, &p.pow(3).unwrap()).unwrap());

        // Block doubles: conjugate after conjugation, distinct from P + I.
        let mut a = MatrixGF::zeros(&f3, 4, 4);
        a.set_block(0, 0, &p);
        a.set_block(2, 2, &p);
        let s = random_invertible(&f3, 4, &mut rng);
        let conj = s.inverse().unwrap().mul(&a).unwrap().mul(&s).unwrap();
        assert!(cyclic_conjugate(&a, &conj).unwrap());

        let mut b = MatrixGF::zeros(&f3, 4, 4);
        b.set_block(0, 0, &p);
        b.set_block(2, 2, &MatrixGF::identity(&f3, 2));
        assert!(!cyclic_conjugate(&a, &b).unwrap());

        // Singular input is rejected.
        let singular = mat(&f3, &[&[1, 2], &[2, 1]]);
        assert!(cyclic_conjugate(&singular, &p).is_err());
    }

    #[test]
    fn orbit_transport_matches_elementwise_translation() {
        let f2 = gf(2);
        let gens: Vec<SemilinearMap> = [
            mat(
                &f2,
                &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
            ),
            mat(
                &f2,
                &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 1]],
            ),
            mat(
                &f2,
                &[&[1, 0, 0, 1], &[0, 1, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]],
            ),
        ]
        .into_iter()
        .map(|m| SemilinearMap::linear(m).unwrap())
        .collect();
        let start = Subspace::from_rows(mat(&f2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let group = GroupClosure::generate(&f2, 4, &gens, DEFAULT_CAP).unwrap();
        let c1 = orbit_code(&start, &gens).unwrap();

        // Identity transport is trivial.
        let (same, same_group) =
            orbit_isometry_transport(&start, &group, &MatrixGF::identity(&f2, 4)).unwrap();
        assert_eq!(same, c1);
        assert_eq!(same_group.order(), group.order());

        let mut rng = SplitMix::new(8);
        for _ in 0..5 {
            let s = random_invertible(&f2, 4, &mut rng);
            let (code, conj) = orbit_isometry_transport(&start, &group, &s).unwrap();
            let translated = c1.apply(&SemilinearMap::linear(s).unwrap()).unwrap();
            assert_eq!(code, translated);
            assert_eq!(conj.order(), group.order());
        }
    }
}
