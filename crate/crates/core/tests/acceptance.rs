//! Acceptance gate: every identity is checked exactly, under a time budget,
//! with one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bfc::fermion::{cortj_check, fundlem_check, sigma_boson, solution_wedge, solution_wedge_det};
use bfc::infinite::{check_ring_hom, schur_vs_exp};
use bfc::vertex::{fermionic_gamma_vee, g_twisted, gamma_vee_det};
use bfc::{
    cauchy_decompose, combine_u_basis, corrupted_u0, epoly_to_schur, exp_vertex, g, g_vee, gamma,
    gamma_vee, kp_residual, kp_residual_of, pieri, rat, remove_vertical_strip, EPoly, HPoly,
    Laurent, LaurentBoson, Partition, Ring, SchurVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn d(s: &str, r: usize) -> SchurVector {
    SchurVector::basis(p(s), r).unwrap()
}

fn lb(terms: &[(i64, SchurVector)], r: usize) -> LaurentBoson {
    Laurent::from_terms(&SchurVector::zero(r), terms.iter().cloned())
}

fn partitions(r: usize, w: usize) -> Vec<Partition> {
    Partition::all_up_to(w, r)
}

fn worked_example() -> Outcome {
    let one = SchurVector::one(1);
    check(
        gamma(&d("1", 1), 6) == lb(&[(-1, one.negated())], 1),
        || "Γ_1(z)h_1 ≠ -1/z".into(),
    )?;
    check(
        gamma(&d("2", 1), 6) == lb(&[(-1, d("1", 1).negated())], 1),
        || "Γ_1(z)h_2 ≠ -h_1/z".into(),
    )?;
    let h1 = d("1", 1);
    let lhs = g(&h1.times(&h1));
    check(lhs == lb(&[(0, d("2", 1)), (-1, h1.negated())], 1), || {
        "G_1(h_1²) ≠ h_2 - h_1/z".into()
    })?;
    let g1 = g(&h1);
    let square = g1.times(&g1);
    check(
        square == lb(&[(0, d("2", 1)), (-1, h1.scaled(&rat(-2))), (-2, one)], 1),
        || "(G_1h_1)² ≠ h_2 - 2h_1/z + 1/z²".into(),
    )?;
    check(lhs != square, || "G_1 is multiplicative on h_1·h_1".into())?;
    Ok("Γ_1h_1 = -1/z, Γ_1h_2 = -h_1/z, G_1(h_1²) ≠ (G_1h_1)²".into())
}

fn pieri_examples() -> Outcome {
    let v = d("3,2", 3);
    let expected = d("4,3", 3).plus(&d("3,3,1", 3)).plus(&d("4,2,1", 3));
    check(pieri(2, &v) == expected, || {
        format!("e_2Δ_(3,2) = {}", pieri(2, &v))
    })?;
    let oracle = epoly_to_schur(&EPoly::e(2, 3).times(&bfc::schur_to_epoly(&v)));
    check(oracle == expected, || "e-basis product disagrees".into())?;
    let mut minus: Vec<_> = remove_vertical_strip(&p("3,2"), 1);
    minus.sort();
    let mut want = vec![p("2,2"), p("3,1")];
    want.sort();
    check(minus == want, || format!("Δ_(3,2)-1 = {minus:?}"))?;
    Ok("e_2Δ_(3,2) = Δ_(4,3)+Δ_(3,3,1)+Δ_(4,2,1); Δ_(3,2)-1 = Δ_(2,2)+Δ_(3,1)".into())
}

fn g_strip_formula() -> Outcome {
    let mut n = 0;
    for r in 1..=3 {
        for l in partitions(r, 6) {
            let v = SchurVector::basis(l.clone(), r).unwrap();
            check(g(&v) == g_twisted(&v), || format!("r={r} λ={l}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} cases"))
}

fn g_vee_three_paths() -> Outcome {
    let mut n = 0;
    for r in 1..=3 {
        for l in partitions(r, 6) {
            let v = SchurVector::basis(l.clone(), r).unwrap();
            let a = gamma_vee(&v);
            check(a == gamma_vee_det(&l, r).unwrap(), || {
                format!("det path r={r} λ={l}")
            })?;
            check(a == fermionic_gamma_vee(&l, r).unwrap(), || {
                format!("wedge path r={r} λ={l}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} cases, three paths"))
}

fn inverse() -> Outcome {
    let mut n = 0;
    for r in 1..=3 {
        for l in partitions(r, 6) {
            let v = SchurVector::basis(l.clone(), r).unwrap();
            let unit = LaurentBoson::constant(v.clone());
            let after = |first: fn(&SchurVector) -> LaurentBoson,
                         second: fn(&SchurVector) -> LaurentBoson| {
                bfc::vertex::extend_linear(&first(&v), second)
            };
            check(after(g, g_vee) == unit, || format!("G^∨∘G r={r} λ={l}"))?;
            check(after(g_vee, g) == unit, || format!("G∘G^∨ r={r} λ={l}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} cases"))
}

fn random_epoly(rng: &mut ChaCha8Rng, r: usize) -> EPoly {
    let mut out = EPoly::zero(r);
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; r];
        for _ in 0..rng.gen_range(0..=2) {
            exps[rng.gen_range(0..r)] += 1;
        }
        let c = rng.gen_range(-3i64..=3);
        out = out.plus(&EPoly::monomial(r, exps, rat(c)));
    }
    out
}

fn random_coords(rng: &mut ChaCha8Rng, r: usize) -> Vec<EPoly> {
    (0..r).map(|_| random_epoly(rng, r)).collect()
}

fn boson_fermion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut n = 0;
    for r in 1..=3 {
        for case in 0..50 {
            let v: Vec<_> = (0..r)
                .map(|_| combine_u_basis(&random_coords(&mut rng, r), r, 8))
                .collect();
            let det = solution_wedge_det(&v, r).map_err(|e| e.to_string())?;
            let wedge = solution_wedge(&v, r).map_err(|e| e.to_string())?;
            let image = sigma_boson(&wedge).map_err(|e| e.to_string())?;
            check(epoly_to_schur(&det) == image, || {
                format!("r={r} case {case}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} random cases"))
}

fn cauchy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut n = 0;
    for r in 1..=3 {
        for case in 0..50 {
            let coords = random_coords(&mut rng, r);
            let phi = combine_u_basis(&coords, r, 12);
            let back = cauchy_decompose(&phi, r).map_err(|e| e.to_string())?;
            check(back == coords, || format!("r={r} case {case}"))?;
            check(combine_u_basis(&back, r, 12) == phi, || {
                format!("rebuild r={r} case {case}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} random kernel elements"))
}

fn wedge_identities() -> Outcome {
    let mut n = 0;
    for r in 1..=3 {
        for l in partitions(r, 6) {
            check(
                fundlem_check(&l, r, -8, 8).map_err(|e| e.to_string())?,
                || format!("fundamental r={r} λ={l}"),
            )?;
            check(
                cortj_check(&l, r, -8, 8, 12).map_err(|e| e.to_string())?,
                || format!("exp(t/z) r={r} λ={l}"),
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} cases, both identities"))
}

fn h(n: i64, m: usize) -> HPoly {
    HPoly::h(n, m).unwrap()
}

fn random_hpoly(rng: &mut ChaCha8Rng, m: usize) -> HPoly {
    let mut out = HPoly::zero(m);
    for _ in 0..rng.gen_range(1..=3) {
        let mut t = HPoly::constant(m, rat(rng.gen_range(-3i64..=3)));
        for _ in 0..rng.gen_range(0..=2) {
            t = t.times(&h(rng.gen_range(1..=4), m));
        }
        out = out.plus(&t);
    }
    out
}

fn infinite_order() -> Outcome {
    const M: usize = 14;
    const Z: usize = 6;
    let zero = HPoly::zero(M);
    for n in 0..=6i64 {
        let minus = Laurent::from_terms(&zero, [(0, h(n, M)), (-1, h(n - 1, M).negated())]);
        check(exp_vertex(-1, &h(n, M), Z) == minus, || {
            format!("G_∞ h_{n}")
        })?;
        let plus = Laurent::from_terms(&zero, (0..=n).map(|k| (-k, h(n - k, M))));
        check(exp_vertex(1, &h(n, M), Z) == plus, || {
            format!("G_∞^∨ h_{n}")
        })?;
    }
    let mut n_schur = 0;
    for w in 0..=6 {
        for l in Partition::all_of_weight(w, w) {
            check(schur_vs_exp(&l, M, Z).map_err(|e| e.to_string())?, || {
                format!("Δ_{l}")
            })?;
            n_schur += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for case in 0..50 {
        let a = random_hpoly(&mut rng, 8);
        let b = random_hpoly(&mut rng, 8);
        let sign = if case % 2 == 0 { -1 } else { 1 };
        check(check_ring_hom(sign, &a, &b, Z), || {
            format!("ring hom case {case}")
        })?;
    }
    Ok(format!(
        "h_0..h_6, {n_schur} Schur classes, 50 random pairs"
    ))
}

fn kp() -> Outcome {
    for j in 0..=2i64 {
        for n in 1..=2 {
            let res = kp_residual(j, n, 8, 8 + j as usize).map_err(|e| e.to_string())?;
            check(res.is_zero(), || format!("u_{j}, n={n}"))?;
        }
    }
    let bad = kp_residual_of(&corrupted_u0(8, 8).map_err(|e| e.to_string())?, 1);
    check(!bad.is_zero(), || {
        "corrupted input has zero residual".into()
    })?;
    Ok("u_0,u_1,u_2 at n=1,2 vanish; control nonzero".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked example", Duration::from_secs(1), worked_example),
        ("Pieri examples", Duration::from_secs(1), pieri_examples),
        (
            "G strip vs twisted determinant",
            Duration::from_secs(10),
            g_strip_formula,
        ),
        (
            "G^∨ three paths",
            Duration::from_secs(30),
            g_vee_three_paths,
        ),
        ("G and G^∨ inverse", Duration::from_secs(30), inverse),
        (
            "boson-fermion determinant",
            Duration::from_secs(30),
            boson_fermion,
        ),
        ("Cauchy decomposition", Duration::from_secs(10), cauchy),
        (
            "wedge identities",
            Duration::from_secs(60),
            wedge_identities,
        ),
        ("infinite order", Duration::from_secs(30), infinite_order),
        ("KP", Duration::from_secs(60), kp),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let line = match outcome {
            Ok(detail) if took <= *limit => {
                format!("PASS [{}] {name}: {detail} ({took:.2?})", i + 1)
            }
            Ok(_) => format!("FAIL [{}] {name}: exceeded {limit:?} ({took:.2?})", i + 1),
            Err(why) => format!("FAIL [{}] {name}: {why} ({took:.2?})", i + 1),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
