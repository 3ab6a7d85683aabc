//! Acceptance suite. Each test covers one numbered criterion and prints
//! one pass/fail line (visible with `cargo test --test acceptance --
//! --nocapture`).

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use liepi_core::catalog;
use liepi_core::exact::ExactComplex;
use liepi_core::growth::{exp_growth_fit, exp_minus_one_degree, power_sweep_fit, SweepSpec};
use liepi_core::lie::unit_vector;
use liepi_core::linalg::QMat;
use liepi_core::pbw::{two_sided_ideal_identity_check, TruncatedUEA};
use liepi_core::pi::{
    check_conditions, composite_identity, eval_standard_identity_float, family_analysis,
    standard_identity, standard_identity_unit_counterexample, CheckOptions, FamilyVerdict,
    RepFamily,
};
use liepi_core::rep::{
    element_nilpotency_degree, frobenius, radical_containment_check, CMatrix,
};
use liepi_core::samples::{
    random_nilpotent, random_rep_suite, random_subspace_combinations,
};

macro_rules! check {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn criterion(n: usize, desc: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("criterion {n}: PASS - {desc}"),
        Err(e) => {
            println!("criterion {n}: FAIL - {desc}: {e}");
            panic!("criterion {n} failed: {e}");
        }
    }
}

#[test]
fn criterion_1_structure_oracle() {
    criterion(1, "catalog radical/nil-radical/Levi dimensions exact", || {
        let start = Instant::now();
        // (name, radical dim, nil radical dim, levi dim)
        let truth = [
            ("abelian2", 2usize, 0usize, 0usize),
            ("aff1", 2, 1, 0),
            ("heisenberg", 3, 1, 0),
            ("sl2", 0, 0, 3),
            ("gl2", 1, 0, 3),
            ("sl2_h3", 3, 1, 3),
        ];
        for (name, r_dim, n_dim, s_dim) in truth {
            let entry = catalog::entry(name).expect("catalog name");
            let l = &entry.algebra;
            let r = l.solvable_radical();
            let n = l.nilpotent_radical();
            let s = l.levi_subalgebra().map_err(|e| e.to_string())?;
            check!(r.dim() == r_dim, "{name}: radical dim {} != {r_dim}", r.dim());
            check!(n.dim() == n_dim, "{name}: nil radical dim {} != {n_dim}", n.dim());
            check!(s.dim() == s_dim, "{name}: Levi dim {} != {s_dim}", s.dim());
        }
        // The 2-dimensional case pins the span, not just the dimension.
        let aff = catalog::aff1();
        let n = aff.nilpotent_radical();
        check!(n.contains(&unit_vector(2, 1)), "aff1: e2 not in nil radical");
        check!(!n.contains(&unit_vector(2, 0)), "aff1: e1 wrongly in nil radical");
        // Reductive entries have trivial nilpotent radical.
        for name in ["abelian2", "sl2", "gl2"] {
            let entry = catalog::entry(name).unwrap();
            check!(
                entry.algebra.nilpotent_radical().is_zero(),
                "{name}: nilpotent radical should vanish"
            );
        }
        let elapsed = start.elapsed();
        check!(
            elapsed.as_secs_f64() < 1.0,
            "structure oracle took {:.3}s (budget 1s)",
            elapsed.as_secs_f64()
        );
        Ok(())
    });
}

#[test]
fn criterion_2_equivalence_suite() {
    criterion(2, "100 random reps: conditions 1,2a,2b,3a,3b true and coherent", || {
        let start = Instant::now();
        let suite = random_rep_suite(1, 100, 8);
        check!(suite.len() == 100, "suite size");
        let mut alarms = 0usize;
        for (i, rep) in suite.iter().enumerate() {
            check!(rep.rep_dim() <= 8, "rep {i}: dimension {} > 8", rep.rep_dim());
            let opts = CheckOptions { seed: 1000 + i as u64, ..CheckOptions::default() };
            let report = check_conditions(rep, &opts).map_err(|e| format!("rep {i}: {e}"))?;
            let c = &report.conditions;
            let five = [
                c.pi.holds,
                c.elementwise_nilpotent.holds,
                c.algebra_nilpotent.holds,
                c.exp_elementwise.holds,
                c.exp_uniform.holds,
            ];
            check!(five.iter().all(|&b| b), "rep {i}: a condition reported false: {:?}", five);
            check!(
                report.degrees.algebra == report.degrees.exp_uniform,
                "rep {i}: d(2b) = {} but d(3b) = {}",
                report.degrees.algebra,
                report.degrees.exp_uniform
            );
            check!(
                report.degrees.algebra >= report.degrees.element_max,
                "rep {i}: uniform degree below element degree"
            );
            if !report.consistent {
                alarms += 1;
            }
        }
        check!(alarms == 0, "{alarms} inconsistency alarms");
        let elapsed = start.elapsed();
        check!(
            elapsed.as_secs_f64() < 60.0,
            "equivalence suite took {:.1}s (budget 60s)",
            elapsed.as_secs_f64()
        );
        Ok(())
    });
}

#[test]
fn criterion_3_exp_degree_equivalence() {
    criterion(3, "200 random nilpotents: exp(b)-1 degree equals degree of b", || {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for i in 0..200 {
            let n = 2 + (i % 9); // sizes 2..=10
            let b = CMatrix::Exact(random_nilpotent(&mut rng, n));
            let direct = element_nilpotency_degree(&b)
                .ok_or_else(|| format!("sample {i}: not nilpotent"))?;
            let via_exp = exp_minus_one_degree(&b).map_err(|e| format!("sample {i}: {e}"))?;
            check!(direct == via_exp, "sample {i}: {direct} != {via_exp}");
        }
        Ok(())
    });
}

#[test]
fn criterion_4_growth_exponents() {
    criterion(4, "Jordan blocks: fitted alpha within 0.15 of d-1, residual < 0.05", || {
        let exp_spec = SweepSpec::default();
        let pow_spec = SweepSpec { k_max: 1 << 14, ..SweepSpec::default() };
        for d in 2..=8usize {
            let b = CMatrix::jordan_block(d);
            let target = (d - 1) as f64;

            let fit = exp_growth_fit(&b, &exp_spec).map_err(|e| e.to_string())?;
            check!(
                (fit.alpha - target).abs() <= 0.15,
                "J{d} exp sweep: alpha {:.4} vs {target}",
                fit.alpha
            );
            check!(fit.residual < 0.05, "J{d} exp sweep: residual {:.4}", fit.residual);

            let fit = power_sweep_fit(&b, &pow_spec).map_err(|e| e.to_string())?;
            check!(
                (fit.alpha - target).abs() <= 0.15,
                "J{d} power sweep: alpha {:.4} vs {target}",
                fit.alpha
            );
            check!(fit.residual < 0.05, "J{d} power sweep: residual {:.4}", fit.residual);
        }
        Ok(())
    });
}

#[test]
fn criterion_5_family_non_pi_route() {
    criterion(5, "Heisenberg truncation family: d_n = n, no uniform bound", || {
        let start = Instant::now();
        let heis = catalog::heisenberg();
        let family = RepFamily::Truncation { algebra: heis.clone(), n_min: 2, n_max: 8 };
        let report = family_analysis(&family).map_err(|e| e.to_string())?;
        for member in &report.members {
            check!(
                member.degree == member.index,
                "member n={}: degree {} != n",
                member.index,
                member.degree
            );
        }
        check!(
            report.verdict == FamilyVerdict::NoUniformBoundWithinRange,
            "verdict should be the unbounded one, got {:?}",
            report.verdict
        );

        // Derived oracle: span-power computation inside T_n itself.
        let nil = heis.nilpotent_radical();
        for n in 2..=8usize {
            let t = TruncatedUEA::new(&heis, n).map_err(|e| e.to_string())?;
            let images: Vec<_> = nil
                .basis()
                .iter()
                .map(|v| t.lie_elem(v).expect("nil image"))
                .collect();
            let (_, closed) = t.closure_non_unital(&images);
            let d = t
                .span_power_degree(&closed)
                .ok_or_else(|| format!("T_{n}: span powers did not terminate"))?;
            check!(d == n, "oracle in T_{n}: degree {d} != {n}");
        }
        let elapsed = start.elapsed();
        check!(
            elapsed.as_secs_f64() < 120.0,
            "family run took {:.1}s (budget 120s)",
            elapsed.as_secs_f64()
        );
        Ok(())
    });
}

#[test]
fn criterion_6_pi_witness() {
    criterion(6, "S4 vanishes on M2 (sampled + all unit tuples), fails on M3; S2 fails on M2", || {
        use rand::Rng;
        // 500 random 2×2 tuples, relative residual below 1e-10.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for i in 0..500 {
            let args: Vec<liepi_core::rep::FMat> = (0..4)
                .map(|_| {
                    liepi_core::rep::FMat::from_fn(2, 2, |_, _| {
                        num_complex::Complex64::new(
                            rng.gen_range(-1.0..1.0),
                            rng.gen_range(-1.0..1.0),
                        )
                    })
                })
                .collect();
            let value = eval_standard_identity_float(&args);
            let scale = 24.0 * args.iter().map(|a| frobenius(a).max(1.0)).product::<f64>();
            let rel = frobenius(&value) / scale;
            check!(rel < 1e-10, "tuple {i}: relative residual {rel:e}");
        }

        // Exactly zero on all 256 matrix-unit 4-tuples of M2.
        let s4 = standard_identity(4).map_err(|e| e.to_string())?;
        let units: Vec<CMatrix> = (0..2)
            .flat_map(|i| (0..2).map(move |j| CMatrix::unit(2, i, j)))
            .collect();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let val = s4
                            .eval(&[
                                units[a].clone(),
                                units[b].clone(),
                                units[c].clone(),
                                units[d].clone(),
                            ])
                            .map_err(|e| e.to_string())?;
                        check!(
                            val.is_exactly_zero(),
                            "S4 nonzero on unit tuple ({a},{b},{c},{d})"
                        );
                    }
                }
            }
        }

        // Sharpness: S4 does not vanish on 3×3 (exhaustive unit search).
        check!(
            standard_identity_unit_counterexample(4, 3).is_some(),
            "no 3×3 unit counterexample for S4 found"
        );

        // S2 fails on a 2×2 pair.
        let s2 = standard_identity(2).map_err(|e| e.to_string())?;
        let v = s2
            .eval(&[CMatrix::unit(2, 0, 1), CMatrix::unit(2, 1, 0)])
            .map_err(|e| e.to_string())?;
        check!(!v.is_exactly_zero(), "S2 unexpectedly vanishes on (E12, E21)");
        Ok(())
    });
}

#[test]
fn criterion_7_composite_identity_mechanism() {
    criterion(7, "S2∘S2 vanishes exactly on upper-triangular 2×2, nonzero on M2", || {
        use rand::Rng;
        let s2 = standard_identity(2).map_err(|e| e.to_string())?;
        let comp = composite_identity(&s2, &s2);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for i in 0..50 {
            let args: Vec<CMatrix> = (0..4)
                .map(|_| {
                    CMatrix::Exact(QMat::from_rows(vec![
                        vec![
                            ExactComplex::from_ints(rng.gen_range(-4..=4), rng.gen_range(-1..=1)),
                            ExactComplex::from_ints(rng.gen_range(-4..=4), rng.gen_range(-1..=1)),
                        ],
                        vec![
                            ExactComplex::zero(),
                            ExactComplex::from_ints(rng.gen_range(-4..=4), rng.gen_range(-1..=1)),
                        ],
                    ]))
                })
                .collect();
            let val = comp.eval(&args).map_err(|e| e.to_string())?;
            check!(val.is_exactly_zero(), "tuple {i}: composite identity nonzero");
        }

        let witness = comp
            .eval(&[
                CMatrix::unit(2, 0, 1),
                CMatrix::unit(2, 1, 0),
                CMatrix::unit(2, 0, 0),
                CMatrix::unit(2, 0, 1),
            ])
            .map_err(|e| e.to_string())?;
        check!(!witness.is_exactly_zero(), "no nonzero witness on full M2");
        Ok(())
    });
}

#[test]
fn criterion_8_pbw_ideal_identities() {
    criterion(8, "T3/T4 span identities and I^d = 0 with independently computed d", || {
        for (name, algebra) in [("heisenberg", catalog::heisenberg()), ("aff1", catalog::aff1())] {
            let nil = algebra.nilpotent_radical();
            for cutoff in [3usize, 4] {
                let report = two_sided_ideal_identity_check(&algebra, &nil, cutoff)
                    .map_err(|e| e.to_string())?;
                check!(
                    report.spans_equal,
                    "{name} T{cutoff}: U(g)·U(n)0 and U(n)0·U(g) spans differ ({} vs {})",
                    report.left_dim,
                    report.right_dim
                );
                let d_ideal = report
                    .ideal_nilpotency_degree
                    .ok_or_else(|| format!("{name} T{cutoff}: ideal powers did not vanish"))?;

                // Independent route: nilpotency degree of the non-unital
                // algebra generated by the image of n, by span powers.
                let t = TruncatedUEA::new(&algebra, cutoff).map_err(|e| e.to_string())?;
                let images: Vec<_> = nil
                    .basis()
                    .iter()
                    .map(|v| t.lie_elem(v).expect("nil image"))
                    .collect();
                let (_, closed) = t.closure_non_unital(&images);
                let d_a0 = t
                    .span_power_degree(&closed)
                    .ok_or_else(|| format!("{name} T{cutoff}: A0 powers did not vanish"))?;
                check!(
                    d_ideal == d_a0,
                    "{name} T{cutoff}: I^d with d = {d_ideal} but deg A0 = {d_a0}"
                );
                check!(d_ideal == cutoff, "{name} T{cutoff}: expected degree {cutoff}, got {d_ideal}");
            }
        }

        // Where the left regular representation is valid (Heisenberg), the
        // matrix route must agree with the in-quotient span computation.
        let heis = catalog::heisenberg();
        let nil = heis.nilpotent_radical();
        for cutoff in [3usize, 4] {
            let t = TruncatedUEA::new(&heis, cutoff).map_err(|e| e.to_string())?;
            let rep = t.left_regular_rep();
            rep.validate().map_err(|e| e.to_string())?;
            let mats: Vec<CMatrix> = nil
                .basis()
                .iter()
                .map(|v| rep.apply(v).expect("apply"))
                .collect();
            let a0 = liepi_core::rep::associative_closure(&mats, false).map_err(|e| e.to_string())?;
            let d_mat = liepi_core::rep::algebra_nilpotency_degree(&a0)
                .ok_or_else(|| format!("heisenberg T{cutoff}: matrix algebra not nilpotent"))?;
            check!(d_mat == cutoff, "heisenberg T{cutoff}: matrix route degree {d_mat}");
        }
        Ok(())
    });
}

#[test]
fn criterion_9_radical_containment() {
    criterion(9, "image of the nilpotent radical lies in the Jacobson radical", || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut instances: Vec<(String, liepi_core::rep::MatrixRep)> = Vec::new();
        for entry in catalog::all() {
            if let Some(rep) = entry.default_rep {
                instances.push((entry.name.to_string(), rep));
            }
        }
        for (i, rep) in random_rep_suite(6, 20, 8).into_iter().enumerate() {
            instances.push((format!("random-{i}"), rep));
        }
        let t = TruncatedUEA::new(&catalog::heisenberg(), 3).map_err(|e| e.to_string())?;
        instances.push(("heisenberg-T3".into(), t.left_regular_rep()));

        for (name, rep) in &instances {
            let nil = rep.algebra().nilpotent_radical();
            let extras = random_subspace_combinations(&mut rng, &nil, 20);
            let outcome =
                radical_containment_check(rep, &nil, &extras).map_err(|e| e.to_string())?;
            check!(
                outcome.ok(),
                "{name}: counterexample {:?} (checked {}, radical dim {})",
                outcome.counterexample,
                outcome.checked,
                outcome.radical_dim
            );
        }
        Ok(())
    });
}
