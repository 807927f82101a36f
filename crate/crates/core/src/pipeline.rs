//! End-to-end runs: the infinite-index reproduction table for `m >= 6` and
//! the word search at `m = 5`.
//!
//! Both are pure functions of their arguments; rows are produced in a fixed
//! order and contain no timing data.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mcg::{verify_birman, verify_power_scalar};
use crate::order::{
    certify, infinite_order_word, projective_order_2x2, verify_certificate, CertificateJson,
    CertifyOptions, OrderCertificate, Witness,
};
use crate::scalar::{canonical_root_for_m, is_pm_root, RootOfUnityChoice};
use crate::skein::{
    reduced_words, BraidWord, NoncrossingMatching, RingSelector, SkeinModule, SkeinParams,
};

pub const REPRODUCE_SCHEMA: &str = "skein-mcg/reproduce-row/v1";
pub const EXPLORE_SCHEMA: &str = "skein-mcg/explore-record/v1";

/// Smallest `m` covered by the reproduction table.
pub const REPRODUCE_MIN_M: i64 = 6;

/// Largest `2n` for which [`reproduce_row`] also certifies the full
/// `d x d` matrix (`d = 5` at `2n = 6`).
pub const FULL_CERTIFY_MAX_POINTS: usize = 6;

/// The `P_5` root used for `m = 5` work: `A = zeta_40`, so `A^4` has order 10.
pub fn p5_root() -> RootOfUnityChoice {
    RootOfUnityChoice::new(40, 1).expect("valid root")
}

pub fn witness_name(w: &Witness) -> &'static str {
    match w {
        Witness::TraceConjugate { .. } => "trace_conjugate",
        Witness::ParabolicTrace { .. } => "parabolic_trace",
        Witness::UnipotentPower { .. } => "unipotent_power",
        Witness::NonCyclotomicRatio { .. } => "non_cyclotomic_ratio",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceRow {
    pub schema: String,
    pub m: i64,
    pub points: usize,
    pub root: String,
    /// `P_m(A) = 0` at the chosen root.
    pub pm_root: bool,
    pub r1_pass: bool,
    pub r2_pass: bool,
    /// `rho(sigma_i^m) = A^-m Id` for every generator.
    pub power_scalar_holds: bool,
    pub power_scalar: String,
    /// Certificate for `sigma_1^2 sigma_2^-2` on the two-dimensional
    /// invariant subspace.
    pub certificate: CertificateJson,
    pub witness: Option<String>,
    /// Verdict of the full `d x d` matrix, when computed.
    pub full_verdict: Option<String>,
    pub pass: bool,
}

fn check_m(m: i64) -> Result<()> {
    if m < REPRODUCE_MIN_M {
        return Err(Error::Unsupported(format!(
            "the reproduction table covers m >= {REPRODUCE_MIN_M}; m = {m} is outside it \
             (at m = 5 and 2n = 4 the quotient is finite)"
        )));
    }
    Ok(())
}

fn filler(n: usize) -> NoncrossingMatching {
    NoncrossingMatching::side_by_side(2 * n - 4)
}

/// One row of the table for `m` and `2n` points.
pub fn reproduce_row(m: i64, n: usize) -> Result<ReproduceRow> {
    check_m(m)?;
    if n < 2 {
        return Err(Error::domain(format!("need 2n >= 4 points, got {}", 2 * n)));
    }
    let choice = canonical_root_for_m(m)?;
    let pm_root = is_pm_root(m, choice)?;
    let module = SkeinModule::new(n)?;
    let params = SkeinParams::at_root(choice);
    let (r1, r2) = verify_birman(&module, &params, RingSelector::root(choice))?;
    let power = verify_power_scalar(n, m as u64, choice)?;

    let word = infinite_order_word(n);
    let sub = module.two_strand_subrep(&params, &word, &filler(n))?;
    let cert = projective_order_2x2(&sub)?;
    verify_certificate(&sub, &cert)?;

    let full_verdict = if 2 * n <= FULL_CERTIFY_MAX_POINTS {
        let g = module.word_matrix(&params, &word)?;
        let full = certify(&g, &CertifyOptions::default())?;
        verify_certificate(&g, &full)?;
        Some(full.verdict_name().to_string())
    } else {
        None
    };

    let pass = pm_root
        && r1.pass()
        && r2.pass()
        && power.holds
        && cert.is_infinite()
        && full_verdict.as_deref().is_none_or(|v| v == "infinite");
    Ok(ReproduceRow {
        schema: REPRODUCE_SCHEMA.to_string(),
        m,
        points: 2 * n,
        root: choice.to_string(),
        pm_root,
        r1_pass: r1.pass(),
        r2_pass: r2.pass(),
        power_scalar_holds: power.holds,
        power_scalar: power.scalar.to_string(),
        witness: cert.witness().map(|w| witness_name(w).to_string()),
        certificate: cert.to_json(),
        full_verdict,
        pass,
    })
}

/// Rows for every `m` in `ms` and every point count in `points`
/// (m-major order).
pub fn reproduce(ms: impl IntoIterator<Item = i64>, points: &[usize]) -> Result<Vec<ReproduceRow>> {
    let ms: Vec<i64> = ms.into_iter().collect();
    for &m in &ms {
        check_m(m)?;
    }
    for &p in points {
        if p < 4 || p % 2 != 0 {
            return Err(Error::domain(format!(
                "point count must be even and >= 4, got {p}"
            )));
        }
    }
    let mut rows = Vec::new();
    for &m in &ms {
        for &p in points {
            rows.push(reproduce_row(m, p / 2)?);
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreRecord {
    pub schema: String,
    pub root: String,
    pub word: String,
    pub length: usize,
    pub verdict: String,
    pub witness: Option<String>,
    pub certificate: CertificateJson,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreSummary {
    pub examined: usize,
    pub finite: usize,
    pub infinite: usize,
    pub inconclusive: usize,
    /// The word budget ran out before all words were certified.
    pub truncated: bool,
}

/// Certify `rho(w)` on the 6-point module at a `P_5` root.
pub fn certify_b6_word(w: &BraidWord) -> Result<OrderCertificate> {
    let module = SkeinModule::new(3)?;
    let g = module.word_matrix(&SkeinParams::at_root(p5_root()), w)?;
    let cert = certify(&g, &CertifyOptions::default())?;
    verify_certificate(&g, &cert)?;
    Ok(cert)
}

/// Certify freely reduced words in `B_6` of length `1..=max_len` in
/// shortlex order, at most `cap` of them, passing each record to `sink`.
/// The search only reports what it finds.
pub fn explore_m5(
    max_len: usize,
    cap: usize,
    mut sink: impl FnMut(&ExploreRecord),
) -> Result<ExploreSummary> {
    let mut summary = ExploreSummary::default();
    let module = SkeinModule::new(3)?;
    let params = SkeinParams::at_root(p5_root());
    let words = reduced_words(3, max_len);
    summary.truncated = words.len() > cap;
    for w in words.into_iter().take(cap) {
        let g = module.word_matrix(&params, &w)?;
        let cert = certify(&g, &CertifyOptions::default())?;
        verify_certificate(&g, &cert)?;
        match cert.verdict_name() {
            "finite" => summary.finite += 1,
            "infinite" => summary.infinite += 1,
            _ => summary.inconclusive += 1,
        }
        summary.examined += 1;
        sink(&ExploreRecord {
            schema: EXPLORE_SCHEMA.to_string(),
            root: p5_root().to_string(),
            word: w.to_string(),
            length: w.len(),
            verdict: cert.verdict_name().to_string(),
            witness: cert.witness().map(|x| witness_name(x).to_string()),
            certificate: cert.to_json(),
        });
    }
    Ok(summary)
}
