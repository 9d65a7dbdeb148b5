//! Desarguesian spread codes.
//!
//! The construction works inside the matrix algebra F_q[P], P the companion
//! matrix of an irreducible polynomial of degree k: codewords are the row
//! spaces of `[B_1 ... B_l]` where the block tuple runs over the projective
//! points of F_q[P]^l, each tuple normalized so its first nonzero block is
//! the identity. With l = n/k this yields all (q^n - 1)/(q^k - 1) words,
//! pairwise trivially intersecting, of minimum subspace distance 2k.

use crate::action::SemilinearMap;
use crate::codes::{Provenance, SubspaceCode};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use crate::linalg::poly::PolyGF;
use crate::linalg::{companion_matrix, MatrixGF};
use crate::space::Subspace;

/// Enumeration guard: spreads are desk-sized objects.
const MAX_WORDS: u128 = 1 << 26;

fn validate(spec: &FieldRef, k: usize, n: usize, poly: &PolyGF) -> Result<usize> {
    if poly.spec() != spec {
        return Err(Error::FieldMismatch);
    }
    if k == 0 || n == 0 || !n.is_multiple_of(k) {
        return Err(Error::NonDivisorDimension { k, n });
    }
    if poly.degree() != Some(k) {
        return Err(Error::ModulusDegree {
            got: poly.degree().map_or(0, |d| d),
            want: k,
        });
    }
    if !poly.is_irreducible() {
        return Err(Error::ReduciblePolynomial);
    }
    let q = spec.order() as u128;
    if (q.pow(n as u32) - 1) / (q.pow(k as u32) - 1) > MAX_WORDS {
        return Err(Error::CapExceeded {
            predicted: (q.pow(n as u32) - 1) / (q.pow(k as u32) - 1),
            cap: MAX_WORDS as u64,
        });
    }
    Ok(n / k)
}

/// All q^k elements of F_q[P] in index order: index digits (base q) are the
/// coefficients of I, P, ..., P^{k-1}.
fn algebra_blocks(spec: &FieldRef, poly: &PolyGF) -> Result<Vec<MatrixGF>> {
    let k = poly.degree().unwrap();
    let p_mat = companion_matrix(poly)?;
    let q = spec.order() as u64;
    let count = q.pow(k as u32);
    let identity = MatrixGF::identity(spec, k);
    let mut out = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let mut digits = vec![FieldElement::ZERO; k];
        let mut rest = idx;
        for d in digits.iter_mut() {
            *d = spec.element((rest % q) as u32)?;
            rest /= q;
        }
        // Horner: (((c_{k-1}) P + c_{k-2} I) P + ...) down to c_0.
        let mut m = identity.scalar_mul(digits[k - 1]);
        for i in (0..k - 1).rev() {
            m = m.mul(&p_mat)?.add(&identity.scalar_mul(digits[i]))?;
        }
        out.push(m);
    }
    Ok(out)
}

/// Constructs the Desarguesian spread code of k-dimensional subspaces of
/// F_q^n from an irreducible polynomial of degree k.
pub fn desarguesian_spread(
    spec: &FieldRef,
    k: usize,
    n: usize,
    poly: &PolyGF,
) -> Result<SubspaceCode> {
    let l = validate(spec, k, n, poly)?;
    let blocks = algebra_blocks(spec, poly)?;
    let qk = blocks.len() as u64;
    let identity = MatrixGF::identity(spec, k);

    let mut words = Vec::new();
    for lead in 0..l {
        let tail_slots = l - 1 - lead;
        let combos = qk.pow(tail_slots as u32);
        for t in 0..combos {
            let mut generator = MatrixGF::zeros(spec, k, n);
            generator.set_block(0, lead * k, &identity);
            let mut rest = t;
            // Last trailing block varies fastest.
            for slot in (0..tail_slots).rev() {
                let digit = (rest % qk) as usize;
                rest /= qk;
                generator.set_block(0, (lead + 1 + slot) * k, &blocks[digit]);
            }
            words.push(Subspace::from_rows(generator));
        }
    }

    let q = spec.order() as u128;
    debug_assert_eq!(
        words.len() as u128,
        (q.pow(n as u32) - 1) / (q.pow(k as u32) - 1)
    );
    SubspaceCode::from_words(
        spec,
        n,
        words,
        Provenance::Spread {
            k,
            n,
            poly: poly.clone(),
        },
    )
}

fn block_multiplicative_order(block: &MatrixGF, cap: u64) -> Result<u64> {
    let mut acc = block.clone();
    let mut ord = 1u64;
    while !acc.is_identity() {
        acc = acc.mul(block)?;
        ord += 1;
        if ord > cap {
            return Err(Error::SingularMatrix);
        }
    }
    Ok(ord)
}

/// The k x k matrix of the Galois generator `a -> a^q` of F_{q^k} over F_q
/// in the basis 1, x, ..., x^{k-1}: row i holds the coordinates of
/// `x^{i q} mod poly`, acting on coordinate row vectors from the right.
pub fn galois_block(spec: &FieldRef, poly: &PolyGF) -> Result<MatrixGF> {
    let k = poly.degree().ok_or(Error::NotMonic)?;
    let q = spec.order() as u64;
    let x = PolyGF::x(spec);
    let mut out = MatrixGF::zeros(spec, k, k);
    for i in 0..k {
        let image = x.pow_mod(i as u64 * q, poly)?;
        for j in 0..k {
            out.set(i, j, image.coeff(j));
        }
    }
    Ok(out)
}

/// Construction-derived generators of the full automorphism group of the
/// Desarguesian spread: block permutations, multiplication of one block row
/// by a primitive element of F_q[P], a block transvection, and the
/// blockwise Galois matrix. Every generator is linear over the base field.
pub fn desarguesian_aut_generators(
    spec: &FieldRef,
    k: usize,
    n: usize,
    poly: &PolyGF,
) -> Result<Vec<SemilinearMap>> {
    let l = validate(spec, k, n, poly)?;
    let blocks = algebra_blocks(spec, poly)?;
    let qk = blocks.len() as u64;
    let identity = MatrixGF::identity(spec, k);

    // First element of F_q[P]* of full multiplicative order q^k - 1.
    let primitive = blocks[1..]
        .iter()
        .find(|b| block_multiplicative_order(b, qk).ok() == Some(qk - 1))
        .expect("the unit group of a finite field is cyclic")
        .clone();

    let embed = |assign: &dyn Fn(usize, usize) -> Option<MatrixGF>| -> Result<SemilinearMap> {
        let mut m = MatrixGF::zeros(spec, n, n);
        for bi in 0..l {
            for bj in 0..l {
                if let Some(block) = assign(bi, bj) {
                    m.set_block(bi * k, bj * k, &block);
                }
            }
        }
        SemilinearMap::linear(m)
    };

    let mut gens = Vec::new();
    if l >= 2 {
        // Swap of the first two block positions.
        gens.push(embed(&|i, j| {
            let target = match i {
                0 => 1,
                1 => 0,
                other => other,
            };
            (j == target).then(|| identity.clone())
        })?);
    }
    if l >= 3 {
        // Full block cycle.
        gens.push(embed(&|i, j| (j == (i + 1) % l).then(|| identity.clone()))?);
    }
    // Scale the first block row by a primitive element.
    gens.push(embed(&|i, j| {
        if i != j {
            return None;
        }
        Some(if i == 0 {
            primitive.clone()
        } else {
            identity.clone()
        })
    })?);
    if l >= 2 {
        // Add block row 1 into block row 0.
        gens.push(embed(&|i, j| {
            if i == j {
                Some(identity.clone())
            } else {
                (i == 0 && j == 1).then(|| identity.clone())
            }
        })?);
    }
    if k >= 2 {
        let q_block = galois_block(spec, poly)?;
        gens.push(embed(&|i, j| (i == j).then(|| q_block.clone()))?);
    }
    Ok(gens)
}

/// Order of the automorphism group of a Desarguesian spread:
/// `k * prod_{i=0}^{n/k - 1} (q^n - q^{ki})`.
pub fn spread_aut_order_formula(q: u64, k: usize, n: usize) -> u128 {
    let l = n / k;
    let qn = (q as u128).pow(n as u32);
    (k as u128)
        * (0..l)
            .map(|i| qn - (q as u128).pow((k * i) as u32))
            .product::<u128>()
}
