//! Orbit codes: the orbit of one subspace under a matrix group, enumerated
//! breadth-first over generator applications.

use std::collections::HashSet;

use crate::action::{act, GroupClosure, SemilinearMap};
use crate::codes::{Provenance, SubspaceCode};
use crate::error::{Error, Result};
use crate::space::Subspace;

/// Enumerates `{ U g : g in <generators> }`. A trivial generator list
/// yields the singleton code.
pub fn orbit_code(start: &Subspace, generators: &[SemilinearMap]) -> Result<SubspaceCode> {
    for g in generators {
        if g.spec() != start.spec() {
            return Err(Error::FieldMismatch);
        }
        if g.dimension() != start.ambient() {
            return Err(Error::AmbientMismatch);
        }
    }
    let mut seen: HashSet<Subspace> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start.clone()];
    let mut cursor = 0;
    while cursor < queue.len() {
        let current = queue[cursor].clone();
        cursor += 1;
        for g in generators {
            let image = act(&current, g)?;
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    SubspaceCode::from_words(
        start.spec(),
        start.ambient(),
        seen,
        Provenance::Orbit {
            start: start.clone(),
            generators: generators.to_vec(),
        },
    )
}

/// The orbit of `start` under an already-closed group.
pub fn orbit_under(start: &Subspace, group: &GroupClosure) -> Result<SubspaceCode> {
    orbit_code(start, group.effective_generators())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::is_automorphism;
    use crate::codes::spread::desarguesian_spread;
    use crate::field::{FieldRef, FieldSpec};
    use crate::linalg::poly::PolyGF;
    use crate::linalg::MatrixGF;
    use crate::DEFAULT_CAP;

    fn gf2() -> FieldRef {
        FieldSpec::make(2, 1, None).unwrap()
    }

    fn lin(spec: &FieldRef, rows: &[&[u32]]) -> SemilinearMap {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        SemilinearMap::linear(MatrixGF::from_rows(spec, &rows).unwrap()).unwrap()
    }

    fn spread_generators(spec: &FieldRef) -> Vec<SemilinearMap> {
        vec![
            lin(
                spec,
                &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
            ),
            lin(
                spec,
                &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 1]],
            ),
            lin(
                spec,
                &[&[1, 0, 0, 1], &[0, 1, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]],
            ),
            lin(
                spec,
                &[&[1, 0, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 1, 1]],
            ),
        ]
    }

    fn start(spec: &FieldRef) -> Subspace {
        Subspace::from_rows(
            MatrixGF::from_rows(spec, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap(),
        )
    }

    #[test]
    fn spread_is_an_orbit_of_its_automorphism_generators() {
        let f2 = gf2();
        let orbit = orbit_code(&start(&f2), &spread_generators(&f2)).unwrap();
        let poly = PolyGF::from_indices(&f2, &[1, 1, 1]).unwrap();
        let spread = desarguesian_spread(&f2, 2, 4, &poly).unwrap();
        assert_eq!(orbit, spread);
        assert!(matches!(orbit.provenance(), Provenance::Orbit { .. }));
    }

    #[test]
    fn trivial_and_scalar_orbits_are_singletons() {
        let f2 = gf2();
        let u = start(&f2);
        let orbit = orbit_code(&u, &[]).unwrap();
        assert_eq!(orbit.len(), 1);
        assert!(orbit.contains(&u));

        // Scalars fix every subspace.
        let f3 = FieldSpec::make(3, 1, None).unwrap();
        let v = Subspace::from_rows(
            MatrixGF::from_rows(&f3, &[vec![1, 0, 2, 1], vec![0, 1, 1, 1]]).unwrap(),
        );
        let scalar =
            SemilinearMap::linear(MatrixGF::scalar(&f3, 4, f3.element(2).unwrap())).unwrap();
        let scalars =
            crate::action::GroupClosure::generate(&f3, 4, &[scalar], DEFAULT_CAP).unwrap();
        let orbit = orbit_under(&v, &scalars).unwrap();
        assert_eq!(orbit.len(), 1);
    }

    #[test]
    fn every_generating_group_element_is_an_automorphism() {
        let f2 = gf2();
        let gens = spread_generators(&f2);
        let orbit = orbit_code(&start(&f2), &gens).unwrap();
        let group = crate::action::GroupClosure::generate(&f2, 4, &gens, DEFAULT_CAP).unwrap();
        for g in group.elements() {
            assert!(is_automorphism(&orbit, g).unwrap());
        }
    }
}
