//! Acceptance gate: one PASS/FAIL line per criterion, each with a wall-clock
//! budget. Exits nonzero if any criterion fails or runs over budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skein_mcg::mcg::{rescaled_scalar_check, verify_birman, verify_power_scalar};
use skein_mcg::order::{
    excluded_r_set, group_closure, infinite_order_word, m_matrix_at, projective_order_2x2,
    projective_order_general, verify_certificate, CertifyOptions, ClosureResult, OrderCertificate,
    Verdict, Witness,
};
use skein_mcg::scalar::{canonical_root_for_m, pm_polynomial};
use skein_mcg::skein::{catalan, enumerate_matchings};
use skein_mcg::{
    BraidWord, CyclotomicField, CyclotomicScalar, LaurentPolynomial, Matrix, RingSelector,
    RootOfUnityChoice, Scalar, SkeinModule, SkeinParams,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lp(s: &str) -> LaurentPolynomial {
    s.parse().expect("valid Laurent polynomial")
}

fn lmat(rows: [[&str; 2]; 2]) -> Matrix<LaurentPolynomial> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|e| lp(e)).collect())
            .collect(),
    )
}

fn root(n: u64) -> RootOfUnityChoice {
    RootOfUnityChoice::new(n, 1).unwrap()
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn c1_dimensions() -> Check {
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_matchings(n).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure(counts == [1, 2, 5, 14, 42, 132], || {
        format!("counts {counts:?}")
    })?;
    ensure(
        (1..=6).all(|n| catalan(n) as usize == counts[n as usize - 1]),
        || "catalan".into(),
    )?;
    Ok(format!("counts {counts:?}"))
}

fn c2_four_point_matrices() -> Check {
    let module = SkeinModule::new(2).map_err(err)?;
    let p = SkeinParams::symbolic();
    let w = |l: Vec<i32>| BraidWord::new(2, l).unwrap();
    let s1 = module.word_matrix(&p, &w(vec![1])).map_err(err)?;
    let s2 = module.word_matrix(&p, &w(vec![2])).map_err(err)?;
    let m = module
        .word_matrix(&p, &w(vec![1, 1, -2, -2]))
        .map_err(err)?;
    ensure(s1 == lmat([["-A^3", "A"], ["0", "A^-1"]]), || {
        format!("sigma_1 = {s1}")
    })?;
    ensure(s2 == lmat([["A^-1", "0"], ["A", "-A^3"]]), || {
        format!("sigma_2 = {s2}")
    })?;
    let expect = lmat([
        ["2 - A^4 - A^-4 + A^8", "-A^-2 + A^-6"],
        ["A^-2 - A^-6", "A^-8"],
    ]);
    ensure(m == expect, || format!("M = {m}"))?;
    ensure(m.determinant() == LaurentPolynomial::one(), || {
        "det M != 1".into()
    })?;
    let (q, qi) = (lp("A^4"), lp("A^-4"));
    let t = &(&(&lp("2") - &q) - &qi) + &(&(&q * &q) + &(&qi * &qi));
    ensure(m.trace() == t, || format!("trace {}", m.trace()))?;
    Ok(format!("tr M = {t}"))
}

fn c3_relations() -> Check {
    let p = SkeinParams::<LaurentPolynomial>::symbolic();
    let delta = LaurentPolynomial::delta();
    let mut checked = 0;
    for n in 2..=4 {
        let module = SkeinModule::new(n).map_err(err)?;
        let k = 2 * n - 1;
        let s: Vec<_> = (1..=k)
            .map(|i| module.generator_matrix(&p, i, 1).unwrap())
            .collect();
        let e: Vec<_> = (1..=k).map(|i| module.tl_matrix(&p, i).unwrap()).collect();
        for i in 0..k {
            ensure(e[i].mul(&e[i]) == e[i].scale(&delta), || {
                format!("E_{}^2, n={n}", i + 1)
            })?;
            for j in 0..k {
                let d = i.abs_diff(j);
                if d == 1 {
                    let lhs = s[i].mul(&s[j]).mul(&s[i]);
                    let rhs = s[j].mul(&s[i]).mul(&s[j]);
                    ensure(lhs == rhs, || format!("braid relation {i},{j}, n={n}"))?;
                    ensure(e[i].mul(&e[j]).mul(&e[i]) == e[i], || {
                        format!("E relation {i},{j}")
                    })?;
                } else if d >= 2 {
                    ensure(s[i].mul(&s[j]) == s[j].mul(&s[i]), || {
                        format!("far commutation {i},{j}")
                    })?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} generator pairs, n = 2..4"))
}

fn c4_birman() -> Check {
    let mut rows = Vec::new();
    for n in [2usize, 3] {
        let module = SkeinModule::new(n).map_err(err)?;
        let (a, b) = verify_birman(&module, &SkeinParams::symbolic(), RingSelector::Symbolic)
            .map_err(err)?;
        ensure(a.pass() && b.pass(), || format!("symbolic n={n}"))?;
        rows.push(format!("n={n} symbolic"));
    }
    let module = SkeinModule::new(4).map_err(err)?;
    for m in [6i64, 7, 8] {
        let c = canonical_root_for_m(m).map_err(err)?;
        let (a, b) =
            verify_birman(&module, &SkeinParams::at_root(c), RingSelector::root(c)).map_err(err)?;
        ensure(a.pass() && b.pass(), || format!("n=4 at {c}"))?;
        rows.push(format!("n=4 at {c}"));
    }
    Ok(rows.join(", "))
}

fn c5_powers() -> Check {
    for m in 6..=16i64 {
        let c = canonical_root_for_m(m).map_err(err)?;
        for n in [2usize, 3] {
            let r = verify_power_scalar(n, m as u64, c).map_err(err)?;
            ensure(r.holds, || format!("m={m} n={n}"))?;
        }
    }
    let p = SkeinParams::<LaurentPolynomial>::symbolic();
    for n in [2usize, 3] {
        let module = SkeinModule::new(n).map_err(err)?;
        for i in 1..2 * n {
            let g = module.generator_matrix(&p, i, 1).map_err(err)?;
            let e = module.tl_matrix(&p, i).map_err(err)?;
            for m in 1..=8i64 {
                let pm = pm_polynomial(m).map_err(err)?;
                let expect = e
                    .scale(&pm)
                    .add(&Matrix::scalar(g.dim(), &LaurentPolynomial::a_pow(-m)));
                ensure(g.pow(m as u64) == expect, || {
                    format!("symbolic m={m} n={n} i={i}")
                })?;
            }
        }
    }
    Ok("m = 6..16 at canonical roots; symbolic m <= 8".into())
}

fn c6_m_infinite_order() -> Check {
    let ex = excluded_r_set(50).map_err(err)?;
    ensure(ex == BTreeSet::from([4, 6, 10]), || {
        format!("excluded {ex:?}")
    })?;
    for m in 6..=16i64 {
        let c = canonical_root_for_m(m).map_err(err)?;
        let r = c.q_order();
        let g = m_matrix_at(c);
        let cert = projective_order_2x2(&g).map_err(err)?;
        verify_certificate(&g, &cert).map_err(err)?;
        let ok = match cert.witness() {
            Some(Witness::ParabolicTrace { .. }) => r == 3,
            Some(Witness::TraceConjugate { .. }) => r >= 5,
            _ => false,
        };
        ensure(ok, || format!("m={m} r={r}: {cert:?}"))?;
    }
    Ok(format!(
        "excluded {ex:?}; m = 6..16 infinite and re-verified"
    ))
}

fn c7_reproduce() -> Check {
    let mut out = Vec::new();
    let mut errs = Vec::new();
    let args = ["skein-mcg", "reproduce", "--m", "6..12", "--points", "4,6"];
    let code = skein_mcg_cli::run(args, &mut out, &mut errs);
    let text = String::from_utf8(out).map_err(err)?;
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure(code == 0, || {
        format!("exit {code}: {}", String::from_utf8_lossy(&errs))
    })?;
    let body = &rows[..rows.len() - 1];
    ensure(body.len() == 14, || format!("{} rows", body.len()))?;
    let all = body.iter().all(|r| {
        r["pass"] == true
            && r["pm_root"] == true
            && r["r1_pass"] == true
            && r["r2_pass"] == true
            && r["power_scalar_holds"] == true
            && r["certificate"]["verdict"] == "infinite"
    });
    ensure(all, || "a row failed".into())?;
    ensure(rows.last().unwrap()["pass"] == true, || "summary".into())?;
    Ok("14/14 rows pass".into())
}

fn generators(choice: RootOfUnityChoice) -> Vec<Matrix<CyclotomicScalar>> {
    let module = SkeinModule::new(2).unwrap();
    let p = SkeinParams::at_root(choice);
    (1..=3)
        .map(|i| module.generator_matrix(&p, i, 1).unwrap())
        .collect()
}

fn c8_closure() -> Check {
    let c = skein_mcg::pipeline::p5_root();
    ensure(skein_mcg::scalar::is_pm_root(5, c).map_err(err)?, || {
        "not a P_5 root".into()
    })?;
    let finite = group_closure(&generators(c), 10_000).map_err(err)?;
    ensure(finite == ClosureResult::Finite { order: 60 }, || {
        format!("{finite:?}")
    })?;
    let big = group_closure(&generators(root(12)), 10_000).map_err(err)?;
    ensure(big == ClosureResult::CapExceeded { cap: 10_000 }, || {
        format!("{big:?}")
    })?;
    Ok(format!("order 60 at {c}; cap 10000 exceeded at 12:1"))
}

fn c9_rescale() -> Check {
    for m in [7u64, 9, 11] {
        let c = canonical_root_for_m(m as i64).map_err(err)?;
        for n in [2usize, 3, 4] {
            let s = rescaled_scalar_check(n, m, c).map_err(err)?;
            let expect = if n % 2 == 1 { 1 } else { -1 };
            ensure(s == expect, || format!("m={m} n={n}: {s}"))?;
        }
    }
    Ok("(-1)^(n+1) for m = 7, 9, 11 and n = 2..4".into())
}

fn c10_subrep() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let p = SkeinParams::<LaurentPolynomial>::symbolic();
    let base = SkeinModule::new(2).map_err(err)?;
    let mut compared = 0;
    for _ in 0..20 {
        let len = rng.gen_range(1..=8);
        let letters: Vec<i32> = (0..len)
            .map(|_| [1, -1, 2, -2][rng.gen_range(0..4)])
            .collect();
        let expect = base
            .word_matrix(&p, &BraidWord::new(2, letters.clone()).unwrap())
            .map_err(err)?;
        for n in [3usize, 4] {
            let module = SkeinModule::new(n).map_err(err)?;
            let w = BraidWord::new(n, letters.clone()).unwrap();
            for filler in enumerate_matchings(n as i64 - 2).map_err(err)? {
                let sub = module.two_strand_subrep(&p, &w, &filler).map_err(err)?;
                ensure(sub == expect, || format!("word {w} n={n} filler {filler}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} word/filler pairs"))
}

/// Small-height element of `Z[zeta_N]`.
fn small(rng: &mut ChaCha8Rng, f: &std::sync::Arc<CyclotomicField>) -> CyclotomicScalar {
    let mut x = f.zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = f.integer(rng.gen_range(-1..=1));
        x = &x + &(&c * &f.zeta_pow(rng.gen_range(0..f.conductor() as i64)));
    }
    x
}

/// Random element of `SL_2(Z[zeta_N])`: conjugated rotations (finite order)
/// or short products of elementary matrices (usually infinite).
fn random_sl2(rng: &mut ChaCha8Rng) -> Matrix<CyclotomicScalar> {
    let n = [5u64, 7, 8, 9, 12, 15, 20][rng.gen_range(0..7)];
    let f = CyclotomicField::new(n);
    let (o, l) = (f.zero(), f.one());
    let upper = |a: CyclotomicScalar| {
        Matrix::from_rows(vec![vec![l.clone(), a], vec![o.clone(), l.clone()]])
    };
    let lower = |a: CyclotomicScalar| {
        Matrix::from_rows(vec![vec![l.clone(), o.clone()], vec![a, l.clone()]])
    };
    if rng.gen_bool(0.5) {
        let k = rng.gen_range(0..n as i64);
        let d = Matrix::from_rows(vec![
            vec![f.zeta_pow(k), o.clone()],
            vec![o.clone(), f.zeta_pow(-k)],
        ]);
        let a = small(rng, &f);
        upper(a.clone()).mul(&d).mul(&upper(a.neg()))
    } else {
        let mut g = Matrix::identity(2, &l);
        for _ in 0..rng.gen_range(1..=3) {
            g = g.mul(&upper(small(rng, &f))).mul(&lower(small(rng, &f)));
        }
        g
    }
}

fn agree(g: &Matrix<CyclotomicScalar>) -> Result<(OrderCertificate, OrderCertificate), String> {
    let a = projective_order_2x2(g).map_err(err)?;
    let b = projective_order_general(g, &CertifyOptions::default()).map_err(err)?;
    verify_certificate(g, &a).map_err(err)?;
    verify_certificate(g, &b).map_err(err)?;
    let same = match (&a.verdict, &b.verdict) {
        (
            Verdict::Finite {
                projective_order: x,
                ..
            },
            Verdict::Finite {
                projective_order: y,
                ..
            },
        ) => x == y,
        (Verdict::Infinite(_), Verdict::Infinite(_)) => true,
        _ => false,
    };
    ensure(same, || format!("2x2 {a:?} vs general {b:?}"))?;
    Ok((a, b))
}

fn c11_cross_validation() -> Check {
    let mut fixed = 0;
    for m in 6..=16 {
        agree(&m_matrix_at(canonical_root_for_m(m).map_err(err)?))?;
        fixed += 1;
    }
    for r in [3u64, 4, 5, 6, 10] {
        agree(&m_matrix_at(root(4 * r)))?;
        fixed += 1;
    }
    let module = SkeinModule::new(2).map_err(err)?;
    for n in [12u64, 20, 40] {
        let g = module
            .word_matrix(
                &SkeinParams::at_root(root(n)),
                &infinite_order_word(2).inverse(),
            )
            .map_err(err)?;
        agree(&g)?;
        fixed += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut finite, mut infinite) = (0, 0);
    for _ in 0..100 {
        let g = random_sl2(&mut rng);
        if agree(&g)?.0.is_finite() {
            finite += 1;
        } else {
            infinite += 1;
        }
    }
    ensure(finite > 0 && infinite > 0, || {
        "random sample lacks variety".into()
    })?;
    Ok(format!(
        "{fixed} fixed cases; 100 random ({finite} finite, {infinite} infinite)"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 11] = [
        ("basis dimensions are Catalan numbers", c1_dimensions, 1),
        (
            "four-point generator matrices and M",
            c2_four_point_matrices,
            1,
        ),
        ("braid and Temperley-Lieb relations", c3_relations, 30),
        ("Birman relators act by scalars", c4_birman, 120),
        ("half-twist powers are scalar", c5_powers, 60),
        (
            "M has infinite order, exclusions {4,6,10}",
            c6_m_infinite_order,
            60,
        ),
        ("reproduce --m 6..12 --points 4,6", c7_reproduce, 300),
        ("finite quotient closure at m = 5", c8_closure, 120),
        ("rescaled power scalar signs", c9_rescale, 1),
        ("two-strand subspace embedding", c10_subrep, 60),
        (
            "2x2 and general certifiers agree",
            c11_cross_validation,
            300,
        ),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} [{:>2}] {name} ({:.2}s / {budget}s): {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
