//! Linear complementary pairs of group codes: verification, the split of
//! unity, dual-formula and hat-equivalence checks, the security parameter,
//! and exhaustive idempotent sweeps.

use crate::algebra::AlgebraElement;
use crate::codes::{DistanceOutcome, GroupCode};
use crate::error::Error;
use crate::field::Field;
use crate::group::Group;
use crate::linalg::solve_in_sum_raw;

/// Default cap on the number of algebra elements enumerated by sweeps.
pub const DEFAULT_SWEEP_BUDGET: u64 = 1 << 20;

/// Which inner product the dual is taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityMode {
    Euclidean,
    Hermitian,
}

impl DualityMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            DualityMode::Euclidean => "euclidean",
            DualityMode::Hermitian => "hermitian",
        }
    }
}

/// Sidedness verdicts for one code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sidedness {
    pub right: bool,
    pub left: bool,
}

impl Sidedness {
    pub fn of(code: &GroupCode) -> Sidedness {
        Sidedness {
            right: code.is_right_ideal(),
            left: code.is_left_ideal(),
        }
    }

    pub fn two_sided(&self) -> bool {
        self.right && self.left
    }
}

/// Everything `analyze` establishes about a pair (C, D).
#[derive(Clone, Debug)]
pub struct LcpReport {
    pub mode: DualityMode,
    pub is_lcp: bool,
    /// The split of unity 1 = f + e with f in C and e in D, when the pair is
    /// complementary.
    pub f: Option<AlgebraElement>,
    pub e: Option<AlgebraElement>,
    pub e_idempotent: Option<bool>,
    pub e_central: Option<bool>,
    pub c_sidedness: Sidedness,
    pub d_sidedness: Sidedness,
    /// Whether the dual of D equals (1 - adjoint(e))KG (Hermitian mode:
    /// (1 - adjoint(frobenius(e, q)))KG). Needs the split idempotent.
    pub dual_formula_holds: Option<bool>,
    /// Whether the dual of D equals the hat image of C (Hermitian mode: of
    /// the coordinatewise q-power image of C) — the permutation-equivalence
    /// witness.
    pub theorem_holds: bool,
    pub dim_c: usize,
    pub dim_dperp: usize,
    pub dist_c: DistanceOutcome,
    pub dist_dperp: DistanceOutcome,
    /// min(dist_c, dist_dperp) when both are exact.
    pub security_parameter: DistanceOutcome,
    /// Deterministic work counter: codewords visited by the distance
    /// enumerations above.
    pub codewords_enumerated: u64,
}

/// Whether C and D intersect trivially and span the whole ambient space.
pub fn is_lcp(c: &GroupCode, d: &GroupCode) -> Result<bool, Error> {
    require_same_ambient(c, d)?;
    if c.dim() + d.dim() != c.length() {
        return Ok(false);
    }
    Ok(c.space().intersect(d.space())?.is_zero())
}

/// The unique decomposition 1 = f + e with f in C and e in D, for a
/// complementary pair of right ideals. The result is verified: e must be
/// idempotent, f must be 1 - e, and the two ideals must be recovered as fKG
/// and eKG; a failure signals corrupted inputs.
pub fn split_unity(
    c: &GroupCode,
    d: &GroupCode,
) -> Result<(AlgebraElement, AlgebraElement), Error> {
    if !is_lcp(c, d)? {
        return Err(Error::NotLcp);
    }
    if !c.is_right_ideal() || !d.is_right_ideal() {
        return Err(Error::NotRightIdeals);
    }
    let (f, e) = split_vectors(c, d)?;
    if !e.is_idempotent() {
        return Err(Error::SplitInvalid("e^2 != e".to_string()));
    }
    let one = AlgebraElement::one(c.field(), c.group());
    if one.checked_sub(&e)? != f {
        return Err(Error::SplitInvalid("f != 1 - e".to_string()));
    }
    if &GroupCode::right_ideal(std::slice::from_ref(&f))? != c {
        return Err(Error::SplitInvalid("C != fKG".to_string()));
    }
    if &GroupCode::right_ideal(std::slice::from_ref(&e))? != d {
        return Err(Error::SplitInvalid("D != eKG".to_string()));
    }
    Ok((f, e))
}

/// The raw linear-algebra split, without ideal-theoretic verification.
fn split_vectors(
    c: &GroupCode,
    d: &GroupCode,
) -> Result<(AlgebraElement, AlgebraElement), Error> {
    let one = AlgebraElement::one(c.field(), c.group());
    let (x, y) = solve_in_sum_raw(one.raw_coeffs(), c.space(), d.space())?;
    Ok((
        AlgebraElement::from_raw(c.field(), c.group(), x),
        AlgebraElement::from_raw(c.field(), c.group(), y),
    ))
}

/// Strict verification for a complementary pair of two-sided ideals: the
/// split idempotent must be central, the dual of D must equal the hat image
/// of C, and the minimum distances must agree when within budget. Errors on
/// any violation; `analyze` is the forgiving variant.
pub fn verify_theorem(
    c: &GroupCode,
    d: &GroupCode,
    budget: u64,
    workers: usize,
) -> Result<LcpReport, Error> {
    if !is_lcp(c, d)? {
        return Err(Error::NotLcp);
    }
    if !c.is_two_sided() || !d.is_two_sided() {
        return Err(Error::NotTwoSided);
    }
    let (_, e) = split_unity(c, d)?;
    if !e.is_central() {
        return Err(Error::SplitNotCentral);
    }
    let report = analyze(c, d, DualityMode::Euclidean, budget, workers)?;
    if !report.theorem_holds {
        return Err(Error::PairVerificationFailed(
            "dual(D) != hat_image(C)".to_string(),
        ));
    }
    if !report.dist_c.agrees_with(&report.dist_dperp) {
        return Err(Error::PairVerificationFailed(format!(
            "dist(C) = {:?} but dist(dual(D)) = {:?}",
            report.dist_c, report.dist_dperp
        )));
    }
    Ok(report)
}

/// Full report on a pair without any preconditions beyond a shared ambient
/// space: verdicts are recorded, never asserted.
pub fn analyze(
    c: &GroupCode,
    d: &GroupCode,
    mode: DualityMode,
    budget: u64,
    workers: usize,
) -> Result<LcpReport, Error> {
    require_same_ambient(c, d)?;
    let field = c.field().clone();
    let hermitian_q = match mode {
        DualityMode::Euclidean => None,
        DualityMode::Hermitian => Some(field.hermitian_subfield_order()?),
    };
    let lcp = is_lcp(c, d)?;
    let c_sidedness = Sidedness::of(c);
    let d_sidedness = Sidedness::of(d);

    let (f, e) = if lcp {
        let (f, e) = split_vectors(c, d)?;
        (Some(f), Some(e))
    } else {
        (None, None)
    };
    let e_idempotent = e.as_ref().map(|e| e.is_idempotent());
    let e_central = e.as_ref().map(|e| e.is_central());

    let dperp = match hermitian_q {
        None => d.dual(),
        Some(q) => d.hermitian_dual(q)?,
    };

    let dual_formula_holds = match &e {
        None => None,
        Some(e) => {
            let one = AlgebraElement::one(&field, c.group());
            let gen = match hermitian_q {
                None => one.checked_sub(&e.adjoint())?,
                Some(q) => one.checked_sub(&e.frobenius(q)?.adjoint())?,
            };
            Some(GroupCode::right_ideal(&[gen])? == dperp)
        }
    };

    let witness = match hermitian_q {
        None => c.hat_image(),
        Some(q) => c.frobenius_image(q)?.hat_image(),
    };
    let theorem_holds = witness == dperp;

    let (dist_c, words_c) = c.distance_outcome(budget, workers);
    let (dist_dperp, words_d) = dperp.distance_outcome(budget, workers);

    Ok(LcpReport {
        mode,
        is_lcp: lcp,
        f,
        e,
        e_idempotent,
        e_central,
        c_sidedness,
        d_sidedness,
        dual_formula_holds,
        theorem_holds,
        dim_c: c.dim(),
        dim_dperp: dperp.dim(),
        dist_c,
        dist_dperp,
        security_parameter: security_parameter(dist_c, dist_dperp),
        codewords_enumerated: words_c + words_d,
    })
}

fn security_parameter(a: DistanceOutcome, b: DistanceOutcome) -> DistanceOutcome {
    use DistanceOutcome::*;
    match (a, b) {
        (Exact(x), Exact(y)) => Exact(x.min(y)),
        (ZeroCode, _) | (_, ZeroCode) => ZeroCode,
        _ => BudgetExceeded,
    }
}

/// All idempotents of KG, by exhaustive enumeration of the q^|G| elements in
/// coefficient-lexicographic order (the coefficient of the identity is most
/// significant).
pub fn idempotent_sweep(
    field: &Field,
    group: &Group,
    budget: u64,
) -> Result<Vec<AlgebraElement>, Error> {
    let q = field.order();
    let n = group.order();
    let needed = (q as u128)
        .checked_pow(n as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::new();
    for v in 0..needed as u64 {
        let mut coeffs = vec![0u64; n];
        let mut rest = v;
        for slot in coeffs.iter_mut().rev() {
            *slot = rest % q;
            rest /= q;
        }
        let e = AlgebraElement::from_raw(field, group, coeffs);
        if e.is_idempotent() {
            out.push(e);
        }
    }
    Ok(out)
}

/// Counts the two-sided complements of a two-sided ideal: the number of
/// central idempotents e with (c, eKG) a complementary pair. A direct
/// summand has exactly one.
pub fn uniqueness_check(c: &GroupCode, sweep_budget: u64) -> Result<usize, Error> {
    if !c.is_two_sided() {
        return Err(Error::NotTwoSided);
    }
    let idempotents = idempotent_sweep(c.field(), c.group(), sweep_budget)?;
    let mut complements: Vec<GroupCode> = Vec::new();
    for e in idempotents.iter().filter(|e| e.is_central()) {
        let d = GroupCode::right_ideal(std::slice::from_ref(e))?;
        if is_lcp(c, &d)? && !complements.contains(&d) {
            complements.push(d);
        }
    }
    Ok(complements.len())
}

/// One hat-equivalence failure from a sweep.
#[derive(Clone, Debug)]
pub struct HatCounterexample {
    pub e: AlgebraElement,
    pub central: bool,
    pub subspace_equal: bool,
    pub dist_c: DistanceOutcome,
    pub dist_dperp: DistanceOutcome,
}

/// Summary of a full idempotent sweep with per-idempotent identity checks.
#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub mode: DualityMode,
    pub elements_enumerated: u64,
    pub idempotents: usize,
    pub central_idempotents: usize,
    /// dim of the right ideal of adjoint(e) equals dim of the right ideal
    /// of e.
    pub adjoint_dim_passes: usize,
    /// dual(eKG) = (1 - adjoint(e))KG, with the Hermitian variant in
    /// Hermitian mode. The dual side is computed independently as a kernel.
    pub dual_formula_passes: usize,
    /// dual(eKG) = hat_image((1-e)KG) (Hermitian: with the q-power image)
    /// and the distances agree.
    pub hat_equivalence_passes: usize,
    pub adjoint_dim_failures: Vec<AlgebraElement>,
    pub dual_formula_failures: Vec<AlgebraElement>,
    pub hat_counterexamples: Vec<HatCounterexample>,
    pub codewords_enumerated: u64,
}

/// Enumerates every idempotent of KG and checks the adjoint-dimension, dual
/// formula, and hat-equivalence identities on each. Failures are recorded,
/// not asserted: non-central idempotents may legitimately fail the hat
/// equivalence.
pub fn sweep(
    field: &Field,
    group: &Group,
    mode: DualityMode,
    sweep_budget: u64,
    codeword_budget: u64,
    workers: usize,
) -> Result<SweepSummary, Error> {
    let hermitian_q = match mode {
        DualityMode::Euclidean => None,
        DualityMode::Hermitian => Some(field.hermitian_subfield_order()?),
    };
    let idempotents = idempotent_sweep(field, group, sweep_budget)?;
    let one = AlgebraElement::one(field, group);
    let mut summary = SweepSummary {
        mode,
        elements_enumerated: (field.order() as u128).pow(group.order() as u32) as u64,
        idempotents: idempotents.len(),
        central_idempotents: 0,
        adjoint_dim_passes: 0,
        dual_formula_passes: 0,
        hat_equivalence_passes: 0,
        adjoint_dim_failures: Vec::new(),
        dual_formula_failures: Vec::new(),
        hat_counterexamples: Vec::new(),
        codewords_enumerated: 0,
    };

    for e in &idempotents {
        let central = e.is_central();
        if central {
            summary.central_idempotents += 1;
        }
        let d_code = GroupCode::right_ideal(std::slice::from_ref(e))?;
        let c_code = GroupCode::right_ideal(&[one.checked_sub(e)?])?;

        let e_hat_code = GroupCode::right_ideal(&[e.adjoint()])?;
        if e_hat_code.dim() == d_code.dim() {
            summary.adjoint_dim_passes += 1;
        } else {
            summary.adjoint_dim_failures.push(e.clone());
        }

        let dperp = match hermitian_q {
            None => d_code.dual(),
            Some(q) => d_code.hermitian_dual(q)?,
        };
        let formula_gen = match hermitian_q {
            None => one.checked_sub(&e.adjoint())?,
            Some(q) => one.checked_sub(&e.frobenius(q)?.adjoint())?,
        };
        if GroupCode::right_ideal(&[formula_gen])? == dperp {
            summary.dual_formula_passes += 1;
        } else {
            summary.dual_formula_failures.push(e.clone());
        }

        let witness = match hermitian_q {
            None => c_code.hat_image(),
            Some(q) => c_code.frobenius_image(q)?.hat_image(),
        };
        let subspace_equal = witness == dperp;
        let (dist_c, words_c) = c_code.distance_outcome(codeword_budget, workers);
        let (dist_dperp, words_d) = dperp.distance_outcome(codeword_budget, workers);
        summary.codewords_enumerated += words_c + words_d;
        if subspace_equal && dist_c.agrees_with(&dist_dperp) {
            summary.hat_equivalence_passes += 1;
        } else {
            summary.hat_counterexamples.push(HatCounterexample {
                e: e.clone(),
                central,
                subspace_equal,
                dist_c,
                dist_dperp,
            });
        }
    }
    Ok(summary)
}

fn require_same_ambient(c: &GroupCode, d: &GroupCode) -> Result<(), Error> {
    if c.field() != d.field() || c.group() != d.group() {
        return Err(Error::AmbientMismatch);
    }
    Ok(())
}
