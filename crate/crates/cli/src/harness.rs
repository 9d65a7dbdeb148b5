//! The `verify-paper` harness: re-derives every published reference value
//! from the built-in fixtures and prints one PASS/FAIL line per check.
//! Output is free of timing and thread information, so reports are
//! byte-identical for any worker count.

use std::io::Write;

use subcode::{
    automorphism_group, desarguesian_aut_generators, desarguesian_spread, is_automorphism,
    isometric, lift, rank_automorphisms, spread_aut_order_formula, AutMode, AutStrategy, GlStream,
    GroupClosure, IsometryMode, MatrixGF, Metric, PolyGF, SemilinearMap,
};

use crate::fixtures;

struct Outcome {
    name: &'static str,
    result: Result<String, String>,
}

fn check(name: &'static str, body: impl FnOnce() -> Result<String, String>) -> Outcome {
    Outcome {
        name,
        result: body(),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want}, got {got}"))
    }
}

/// Runs every check, writing one line each; returns true when all pass.
pub fn verify(cap: u64, out: &mut dyn Write) -> std::io::Result<bool> {
    let checks = run_checks(cap);
    let mut all_ok = true;
    for c in &checks {
        match &c.result {
            Ok(detail) => writeln!(out, "PASS {}: {detail}", c.name)?,
            Err(reason) => {
                all_ok = false;
                writeln!(out, "FAIL {}: {reason}", c.name)?;
            }
        }
    }
    let passed = checks.iter().filter(|c| c.result.is_ok()).count();
    writeln!(out, "{passed}/{} checks passed", checks.len())?;
    Ok(all_ok)
}

fn run_checks(cap: u64) -> Vec<Outcome> {
    let f2 = fixtures::gf2();
    let f3 = fixtures::gf3();

    let mut checks = Vec::new();

    // --- binary 2-in-4 spread ---------------------------------------------
    let spread2 = fixtures::binary_spread();
    checks.push(check("spread(2,2,4) codewords", || {
        expect_eq("cardinality", spread2.len(), 5)?;
        for w in fixtures::binary_spread_words() {
            if !spread2.contains(&w) {
                return Err("expected codeword missing".into());
            }
        }
        expect_eq(
            "min d_S",
            spread2
                .min_distance(Metric::Subspace)
                .map_err(|e| e.to_string())?,
            4,
        )?;
        Ok("the 5 expected words, min d_S = 4".into())
    }));

    let gens2 = fixtures::binary_spread_generators();
    checks.push(check("spread(2,2,4) generators", || {
        for g in &gens2 {
            if !is_automorphism(&spread2, g).map_err(|e| e.to_string())? {
                return Err("a published generator fails the automorphism test".into());
            }
        }
        Ok("all 4 published generators are automorphisms".into())
    }));

    let closure2 = GroupClosure::generate(&f2, 4, &gens2, cap);
    checks.push(check("spread(2,2,4) closure order", || {
        let c = closure2.as_ref().map_err(|e| e.to_string())?;
        expect_eq("order", c.order(), 360)?;
        Ok("closure of the published generators has order 360".into())
    }));

    let brute2 = automorphism_group(&spread2, AutMode::Linear, &AutStrategy::Brute, cap);
    checks.push(check("spread(2,2,4) brute-force order", || {
        let stream = GlStream::new(&f2, 4, cap).map_err(|e| e.to_string())?;
        expect_eq("|GL_4(2)|", stream.count(), 20_160)?;
        let report = brute2.as_ref().map_err(|e| e.to_string())?;
        expect_eq("order", report.group.order(), 360)?;
        match &closure2 {
            Ok(c) if c.elements() == report.group.elements() => {}
            Ok(_) => return Err("closure and brute-force stabilizer differ as sets".into()),
            Err(e) => return Err(e.to_string()),
        }
        Ok("|Aut| = 360 over 20160 candidates, equal to the closure as a set".into())
    }));

    // --- ternary 2-in-4 spread --------------------------------------------
    let spread3 = fixtures::ternary_spread();
    checks.push(check("spread(3,2,4) codewords", || {
        expect_eq("cardinality", spread3.len(), 10)?;
        let p_mat = fixtures::mat(&f3, &[&[0, 1], &[1, 2]]);
        let identity = MatrixGF::identity(&f3, 2);
        let mut expected = vec![
            subcode::Subspace::from_rows(fixtures::mat(&f3, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])),
            subcode::Subspace::from_rows(fixtures::mat(&f3, &[&[0, 0, 1, 0], &[0, 0, 0, 1]])),
        ];
        for i in 0..8 {
            let block = p_mat.pow(i).map_err(|e| e.to_string())?;
            expected.push(subcode::Subspace::from_rows(
                identity.hstack(&block).map_err(|e| e.to_string())?,
            ));
        }
        for w in &expected {
            if !spread3.contains(w) {
                return Err("expected codeword missing".into());
            }
        }
        Ok("the 10 expected words".into())
    }));

    let gens3 = fixtures::ternary_spread_generators();
    let closure3 = GroupClosure::generate(&f3, 4, &gens3, cap);
    checks.push(check("spread(3,2,4) closure order", || {
        let c = closure3.as_ref().map_err(|e| e.to_string())?;
        expect_eq("order", c.order(), 11_520)?;
        Ok("closure of the published generators has order 11520".into())
    }));

    checks.push(check("spread(3,2,4) brute-force order", || {
        let stream = GlStream::new(&f3, 4, cap).map_err(|e| e.to_string())?;
        expect_eq("|GL_4(3)|", stream.count(), 24_261_120)?;
        let report = automorphism_group(&spread3, AutMode::Linear, &AutStrategy::Brute, cap)
            .map_err(|e| e.to_string())?;
        expect_eq("order", report.group.order(), 11_520)?;
        match &closure3 {
            Ok(c) if c.elements() == report.group.elements() => {}
            Ok(_) => return Err("closure and brute-force stabilizer differ as sets".into()),
            Err(e) => return Err(e.to_string()),
        }
        Ok("|Aut| = 11520 over 24261120 candidates".into())
    }));

    // --- lifted rank-metric code ------------------------------------------
    let rank_code = fixtures::four_word_rank_code();
    let lifted = lift(&rank_code);
    checks.push(check("lifted code distances", || {
        let code = lifted.as_ref().map_err(|e| e.to_string())?;
        expect_eq(
            "min rank distance",
            rank_code.min_rank_distance().map_err(|e| e.to_string())?,
            1,
        )?;
        expect_eq(
            "min d_S",
            code.min_distance(Metric::Subspace)
                .map_err(|e| e.to_string())?,
            2,
        )?;
        Ok("min rank distance 1 lifts to min d_S = 2".into())
    }));

    let rank_auts = rank_automorphisms(&rank_code, cap);
    checks.push(check("rank-metric automorphisms", || {
        let auts = rank_auts.as_ref().map_err(|e| e.to_string())?;
        let expected = vec![
            fixtures::mat(&f2, &[&[1, 0], &[0, 1]]),
            fixtures::mat(&f2, &[&[1, 1], &[0, 1]]),
        ];
        if *auts != expected {
            return Err("expected exactly the two unitriangular matrices".into());
        }
        Ok("exactly the two unitriangular matrices".into())
    }));

    checks.push(check("lifted code automorphism order", || {
        let code = lifted.as_ref().map_err(|e| e.to_string())?;
        let report = automorphism_group(code, AutMode::Linear, &AutStrategy::Brute, cap)
            .map_err(|e| e.to_string())?;
        expect_eq("order", report.group.order(), 192)?;

        // diag(I, A) stabilizes the lift exactly for rank automorphisms A.
        let auts = rank_auts.as_ref().map_err(|e| e.to_string())?;
        let stream = GlStream::new(&f2, 2, cap).map_err(|e| e.to_string())?;
        for a in stream.iter() {
            let mut g = MatrixGF::identity(&f2, 4);
            g.set_block(2, 2, &a);
            let embedded = SemilinearMap::linear(g).map_err(|e| e.to_string())?;
            if report.group.contains(&embedded) != auts.contains(&a) {
                return Err("diagonal-embedding equality fails".into());
            }
        }

        // The published four generators close to the same group.
        let closure = GroupClosure::generate(&f2, 4, &fixtures::lifted_code_generators(), cap)
            .map_err(|e| e.to_string())?;
        if closure.elements() != report.group.elements() {
            return Err("published generators do not close to the stabilizer".into());
        }
        Ok(
            "|Aut| = 192 = closure of the 4 published generators; diagonal embedding \
            matches the rank automorphisms exactly"
                .into(),
        )
    }));

    // --- order formula ------------------------------------------------------
    checks.push(check("automorphism order formula", || {
        expect_eq("formula(2,2,4)", spread_aut_order_formula(2, 2, 4), 360)?;
        expect_eq("formula(3,2,4)", spread_aut_order_formula(3, 2, 4), 11_520)?;
        expect_eq("formula(2,2,6)", spread_aut_order_formula(2, 2, 6), 362_880)?;
        let poly6 = PolyGF::from_indices(&f2, &[1, 1, 1]).map_err(|e| e.to_string())?;
        let spread6 = desarguesian_spread(&f2, 2, 6, &poly6).map_err(|e| e.to_string())?;
        expect_eq("spread(2,2,6) cardinality", spread6.len(), 21)?;
        let gens6 = desarguesian_aut_generators(&f2, 2, 6, &poly6).map_err(|e| e.to_string())?;
        for g in &gens6 {
            if !is_automorphism(&spread6, g).map_err(|e| e.to_string())? {
                return Err("a derived generator fails the automorphism test".into());
            }
        }
        let closure6 = GroupClosure::generate(&f2, 6, &gens6, cap).map_err(|e| e.to_string())?;
        expect_eq("closure(2,2,6) order", closure6.order() as u128, 362_880)?;
        Ok("360, 11520 and 362880 = 2*63*60*48, all matching k * prod(q^n - q^{ki})".into())
    }));

    // --- isometry of Desarguesian spreads -----------------------------------
    checks.push(check("Desarguesian spread isometry", || {
        let p1 = PolyGF::from_indices(&f3, &[2, 1, 1]).map_err(|e| e.to_string())?;
        let p2 = PolyGF::from_indices(&f3, &[2, 2, 1]).map_err(|e| e.to_string())?;
        let c1 = desarguesian_spread(&f3, 2, 4, &p1).map_err(|e| e.to_string())?;
        let c2 = desarguesian_spread(&f3, 2, 4, &p2).map_err(|e| e.to_string())?;
        let outcome = isometric(&c1, &c2, IsometryMode::Linear, cap).map_err(|e| e.to_string())?;
        let witness = outcome.witness().ok_or("no witness found")?;
        if c1.apply(witness).map_err(|e| e.to_string())? != c2 {
            return Err("witness fails re-verification".into());
        }
        Ok("spreads from x^2+x+2 and x^2+2x+2 are linearly isometric; witness re-verified".into())
    }));

    checks
}
