//! The theorem harness: noncommutative polynomial identities (standard
//! identities, composite identities) and the six equivalent conditions
//! evaluated on a matrix representation or on a representation family.
//!
//! On a single finite-dimensional representation all conditions hold and
//! the report's `consistent` flag asserts their agreement; a disagreement
//! is an implementation-bug alarm, never a mathematical outcome. Families
//! of representations are the one place a negative verdict can appear:
//! when the nilpotency degrees of the images of the nilpotent radical
//! grow without a uniform bound across the family, the direct-sum
//! completion fails the uniform-nilpotency criterion and therefore cannot
//! satisfy any polynomial identity.

use std::collections::HashMap;
use std::ops::Mul;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactComplex;
use crate::growth::{exp_growth_fit_scaled, operator_norm, GrowthFit, SweepSpec};
use crate::lie::Subspace;
use crate::linalg::{coordinates_in, QMat, QVec};
use crate::pbw::TruncatedUEA;
use crate::rep::{
    algebra_nilpotency_degree, associative_closure, element_nilpotency_degree, frobenius, CMatrix,
    FMat, MatrixRep, Mode,
};

/// Fit-residual threshold under which the polynomial growth condition is
/// reported as satisfied.
pub const FIT_RESIDUAL_MAX: f64 = 0.05;
/// Relative residual under which a sampled identity evaluation counts as
/// vanishing.
pub const IDENTITY_RESIDUAL_MAX: f64 = 1e-10;
/// Cap on the number of variables of a standard identity (8! terms).
pub const STANDARD_IDENTITY_CAP: usize = 8;

/// A noncommutative polynomial: terms are (coefficient, word) pairs over
/// variable indices `0..vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPolynomial {
    vars: usize,
    terms: Vec<(ExactComplex, Vec<usize>)>,
}

impl NCPolynomial {
    /// Normalizes (merges equal words, drops zero coefficients) and
    /// validates non-triviality: at least one term, all words non-empty.
    pub fn new(vars: usize, terms: Vec<(ExactComplex, Vec<usize>)>) -> Result<Self> {
        let mut merged: HashMap<Vec<usize>, ExactComplex> = HashMap::new();
        for (c, w) in terms {
            if w.is_empty() {
                return Err(Error::InvalidStructure(
                    "polynomial words must be non-empty".into(),
                ));
            }
            if w.iter().any(|&v| v >= vars) {
                return Err(Error::InvalidStructure(
                    "polynomial word uses an out-of-range variable".into(),
                ));
            }
            let entry = merged.entry(w).or_insert_with(ExactComplex::zero);
            *entry += &c;
        }
        let mut terms: Vec<(ExactComplex, Vec<usize>)> = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (c, w))
            .collect();
        if terms.is_empty() {
            return Err(Error::InvalidStructure(
                "polynomial is trivial after normalization".into(),
            ));
        }
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        Ok(Self { vars, terms })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &[(ExactComplex, Vec<usize>)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Evaluates the polynomial on matrices of a common size and mode.
    pub fn eval(&self, args: &[CMatrix]) -> Result<CMatrix> {
        if args.len() != self.vars {
            return Err(Error::Arity { expected: self.vars, got: args.len() });
        }
        let Some(first) = args.first() else {
            return Err(Error::Arity { expected: self.vars, got: 0 });
        };
        let n = first.ambient();
        if args.iter().any(|a| a.ambient() != n) {
            return Err(Error::DimensionMismatch(
                "polynomial arguments must share an ambient dimension".into(),
            ));
        }
        let float = args.iter().any(|a| a.mode() == Mode::Float);
        let mut acc = if float {
            CMatrix::Float(FMat::zeros(n, n))
        } else {
            CMatrix::zero(n)
        };
        for (c, w) in &self.terms {
            let mut prod = args[w[0]].clone();
            for &v in &w[1..] {
                prod = prod.mul(&args[v]);
            }
            acc = acc.add(&prod.scale_exact(c));
        }
        Ok(acc)
    }
}

/// The standard identity `S_n = Σ_{σ ∈ Sym_n} sgn(σ) x_{σ(1)}⋯x_{σ(n)}`.
pub fn standard_identity(n: usize) -> Result<NCPolynomial> {
    if n < 2 {
        return Err(Error::InvalidStructure(
            "standard identity needs at least 2 variables".into(),
        ));
    }
    if n > STANDARD_IDENTITY_CAP {
        return Err(Error::IdentityOrder(n));
    }
    let mut terms = Vec::new();
    let mut word: Vec<usize> = (0..n).collect();
    // Heap's algorithm with parity tracking.
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    terms.push((ExactComplex::from_int(sign), word.clone()));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                word.swap(0, i);
            } else {
                word.swap(c[i], i);
            }
            sign = -sign;
            terms.push((ExactComplex::from_int(sign), word.clone()));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    NCPolynomial::new(n, terms)
}

/// Substitutes `p` into every variable of `q`: the result has `n·m`
/// variables where variable `(i, j)` feeds copy `j` of `p` into variable
/// `j` of `q`. Non-trivial whenever `p` and `q` are: distinct `q`-words
/// produce words over disjoint block patterns, so no cross-cancellation
/// can empty the expansion.
pub fn composite_identity(p: &NCPolynomial, q: &NCPolynomial) -> NCPolynomial {
    let n = p.vars;
    let mut terms: Vec<(ExactComplex, Vec<usize>)> = Vec::new();
    for (qc, qw) in &q.terms {
        // Product over the letters of the q-word of p evaluated in block j.
        let mut partial: Vec<(ExactComplex, Vec<usize>)> =
            vec![(qc.clone(), Vec::new())];
        for &j in qw {
            let mut next = Vec::with_capacity(partial.len() * p.terms.len());
            for (c, w) in &partial {
                for (pc, pw) in &p.terms {
                    let mut word = w.clone();
                    word.extend(pw.iter().map(|&i| j * n + i));
                    next.push((c.mul(pc), word));
                }
            }
            partial = next;
        }
        terms.extend(partial);
    }
    NCPolynomial::new(n * q.vars, terms).expect("composite of non-trivial polynomials")
}

/// Evaluates the standard identity `S_n` on float matrices via subset
/// dynamic programming (`n·2^n` matrix products instead of `n!` words).
pub fn eval_standard_identity_float(args: &[FMat]) -> FMat {
    let n = args.len();
    assert!(n >= 1 && n <= 20, "subset DP needs a small variable count");
    let dim = args[0].nrows();
    let mut table: Vec<Option<FMat>> = vec![None; 1 << n];
    for (j, a) in args.iter().enumerate() {
        table[1 << j] = Some(a.clone());
    }
    for mask in 1usize..(1 << n) {
        if table[mask].is_some() || mask.count_ones() < 2 {
            continue;
        }
        let k = mask.count_ones() as i32;
        let mut acc = FMat::zeros(dim, dim);
        let mut rank = 0i32;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            rank += 1;
            let prev = table[mask ^ (1 << j)].as_ref().expect("smaller mask filled");
            let sign = if (k - rank) % 2 == 0 { 1.0 } else { -1.0 };
            acc.gemm(
                num_complex::Complex64::new(sign, 0.0),
                prev,
                &args[j],
                num_complex::Complex64::new(1.0, 0.0),
            );
        }
        table[mask] = Some(acc);
    }
    table[(1 << n) - 1].take().expect("full mask")
}

/// Exact-subset DP evaluation of `S_n` on exact matrices.
pub fn eval_standard_identity_exact(args: &[QMat]) -> QMat {
    let n = args.len();
    let dim = args[0].rows();
    let mut table: Vec<Option<QMat>> = vec![None; 1 << n];
    for (j, a) in args.iter().enumerate() {
        table[1 << j] = Some(a.clone());
    }
    for mask in 1usize..(1 << n) {
        if table[mask].is_some() || mask.count_ones() < 2 {
            continue;
        }
        let k = mask.count_ones() as i32;
        let mut acc = QMat::zeros(dim, dim);
        let mut rank = 0i32;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            rank += 1;
            let prev = table[mask ^ (1 << j)].as_ref().expect("smaller mask filled");
            let term = prev.mul(&args[j]);
            acc = if (k - rank) % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        table[mask] = Some(acc);
    }
    table[(1 << n) - 1].take().expect("full mask")
}

/// Exact verification that `S_{2N}` vanishes on all matrix-unit tuples of
/// `M_N`. Tuples with a repeated unit vanish identically because the
/// standard identity is alternating, so checking the strictly increasing
/// tuples of distinct units spans everything; multilinearity then extends
/// the identity to all of `M_N`. Results are cached per `N`.
pub fn standard_identity_vanishes_on_units(mat_dim: usize) -> bool {
    static CACHE: OnceLock<Mutex<HashMap<usize, bool>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&hit) = cache.lock().unwrap().get(&mat_dim) {
        return hit;
    }
    let nvars = 2 * mat_dim;
    let units: Vec<QMat> = (0..mat_dim)
        .flat_map(|i| (0..mat_dim).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut m = QMat::zeros(mat_dim, mat_dim);
            m[(i, j)] = ExactComplex::one();
            m
        })
        .collect();
    let mut ok = true;
    let mut chosen = vec![0usize; nvars];
    // Iterate strictly increasing index tuples.
    fn rec(
        units: &[QMat],
        chosen: &mut Vec<usize>,
        depth: usize,
        start: usize,
        nvars: usize,
        ok: &mut bool,
    ) {
        if !*ok {
            return;
        }
        if depth == nvars {
            let args: Vec<QMat> = chosen.iter().map(|&i| units[i].clone()).collect();
            if !eval_standard_identity_exact(&args).is_zero() {
                *ok = false;
            }
            return;
        }
        for i in start..units.len() {
            chosen[depth] = i;
            rec(units, chosen, depth + 1, i + 1, nvars, ok);
        }
    }
    rec(&units, &mut chosen, 0, 0, nvars, &mut ok);
    cache.lock().unwrap().insert(mat_dim, ok);
    ok
}

/// Exhaustive search for a matrix-unit tuple on which `S_n` does not
/// vanish; returns the unit index tuple `(i, j)` list if found.
pub fn standard_identity_unit_counterexample(
    n_vars: usize,
    mat_dim: usize,
) -> Option<Vec<(usize, usize)>> {
    let units: Vec<(usize, usize)> = (0..mat_dim)
        .flat_map(|i| (0..mat_dim).map(move |j| (i, j)))
        .collect();
    let unit_mats: Vec<QMat> = units
        .iter()
        .map(|&(i, j)| {
            let mut m = QMat::zeros(mat_dim, mat_dim);
            m[(i, j)] = ExactComplex::one();
            m
        })
        .collect();
    // Repeated units vanish by alternation; scan increasing tuples.
    let mut chosen = vec![0usize; n_vars];
    fn rec(
        unit_mats: &[QMat],
        chosen: &mut Vec<usize>,
        depth: usize,
        start: usize,
        n_vars: usize,
    ) -> Option<Vec<usize>> {
        if depth == n_vars {
            let args: Vec<QMat> = chosen.iter().map(|&i| unit_mats[i].clone()).collect();
            if !eval_standard_identity_exact(&args).is_zero() {
                return Some(chosen.clone());
            }
            return None;
        }
        for i in start..unit_mats.len() {
            chosen[depth] = i;
            if let Some(hit) = rec(unit_mats, chosen, depth + 1, i + 1, n_vars) {
                return Some(hit);
            }
        }
        None
    }
    rec(&unit_mats, &mut chosen, 0, 0, n_vars).map(|idx| idx.iter().map(|&i| units[i]).collect())
}

// ---------------------------------------------------------------------
// Condition checking
// ---------------------------------------------------------------------

/// Norm on the nilpotent radical used by homomorphism-mode checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormOnN {
    Euclidean,
    Basis,
}

impl NormOnN {
    fn measure(&self, coeffs: &[ExactComplex]) -> f64 {
        match self {
            NormOnN::Euclidean => coeffs
                .iter()
                .map(|c| c.to_c64().norm_sqr())
                .sum::<f64>()
                .sqrt(),
            NormOnN::Basis => coeffs
                .iter()
                .map(|c| c.to_c64().norm())
                .fold(0.0, f64::max),
        }
    }
}

/// Tunables for a condition check; the defaults match the artifact's
/// documented sampling design.
#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    pub eta_samples: usize,
    pub pi_samples: usize,
    pub growth_samples: usize,
    pub sweep: SweepSpec,
    pub norm_on_n: NormOnN,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            eta_samples: 200,
            pi_samples: 24,
            growth_samples: 8,
            sweep: SweepSpec::default(),
            norm_on_n: NormOnN::Euclidean,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PiVerdict {
    pub holds: bool,
    pub witness_degree: usize,
    pub method: String,
    pub sampled_tuples: usize,
    pub max_relative_residual: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementwiseVerdict {
    pub holds: bool,
    pub samples: usize,
    pub max_degree: usize,
    pub numeric: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniformVerdict {
    pub holds: bool,
    pub degree: usize,
    pub numeric: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthConditionVerdict {
    pub holds: bool,
    pub fits: usize,
    pub max_alpha: f64,
    pub max_residual: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConditionSet {
    #[serde(rename = "1")]
    pub pi: PiVerdict,
    #[serde(rename = "2a")]
    pub elementwise_nilpotent: ElementwiseVerdict,
    #[serde(rename = "2b")]
    pub algebra_nilpotent: UniformVerdict,
    #[serde(rename = "3a")]
    pub exp_elementwise: ElementwiseVerdict,
    #[serde(rename = "3b")]
    pub exp_uniform: UniformVerdict,
    #[serde(rename = "4")]
    pub growth_bound: GrowthConditionVerdict,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub element_max: usize,
    pub algebra: usize,
    pub exp_uniform: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthSummary {
    pub max_alpha: f64,
    pub max_residual: f64,
    pub fits_computed: usize,
    pub representative: Option<GrowthFit>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomSummary {
    /// Best constant bounding `‖ρ(η)‖ ≤ K·|η|` over the sampled sphere.
    pub k_bound: f64,
    pub norm: NormOnN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    SingleRep,
    SingleRepHom,
}

/// Verdicts and witnesses for the six equivalent conditions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConditionReport {
    pub mode: CheckMode,
    pub rep_dim: usize,
    pub nil_radical_dim: usize,
    pub conditions: ConditionSet,
    pub degrees: DegreeSummary,
    pub growth: GrowthSummary,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom: Option<HomSummary>,
}

struct EtaSample {
    ambient: QVec,
    nil_coeffs: QVec,
}

fn sample_etas(nil: &Subspace, count: usize, rng: &mut ChaCha8Rng) -> Vec<EtaSample> {
    let basis = nil.basis();
    let k = basis.len();
    let ambient = nil.ambient_dim();
    let mut out = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let mut coeffs = vec![ExactComplex::zero(); k];
        coeffs[i] = ExactComplex::one();
        out.push(EtaSample { ambient: b.clone(), nil_coeffs: coeffs });
    }
    if k == 0 {
        return out;
    }
    for _ in 0..count {
        let mut coeffs = Vec::with_capacity(k);
        loop {
            coeffs.clear();
            for _ in 0..k {
                let re: i64 = rng.gen_range(-3..=3);
                let im: i64 = if rng.gen_bool(0.2) { rng.gen_range(-1..=1) } else { 0 };
                coeffs.push(ExactComplex::from_ints(re, im));
            }
            if coeffs.iter().any(|c| !c.is_zero()) {
                break;
            }
        }
        let mut v = vec![ExactComplex::zero(); ambient];
        for (c, b) in coeffs.iter().zip(basis) {
            for (vi, bi) in v.iter_mut().zip(b.iter()) {
                let t = c.mul(bi);
                *vi += &t;
            }
        }
        out.push(EtaSample { ambient: v, nil_coeffs: coeffs });
    }
    out
}

fn random_algebra_element(
    basis: &[CMatrix],
    rng: &mut ChaCha8Rng,
) -> FMat {
    let n = basis[0].ambient();
    let mut acc = FMat::zeros(n, n);
    for b in basis {
        let re: i64 = rng.gen_range(-2..=2);
        if re != 0 {
            acc += b.to_float() * num_complex::Complex64::new(re as f64, 0.0);
        }
    }
    acc
}

fn pi_condition(rep: &MatrixRep, opts: &CheckOptions, rng: &mut ChaCha8Rng) -> Result<PiVerdict> {
    let n = rep.rep_dim();
    let witness_degree = 2 * n;
    if witness_degree > STANDARD_IDENTITY_CAP {
        // The witness is still the standard identity of order 2N, which
        // vanishes on all of M_N; its term count rules out evaluation, so
        // the verdict is certified by containment in M_N.
        return Ok(PiVerdict {
            holds: true,
            witness_degree,
            method: "matrix-algebra-containment-certificate".into(),
            sampled_tuples: 0,
            max_relative_residual: 0.0,
        });
    }

    let mut method = String::from("sampled-evaluation");
    let mut holds = true;
    if n <= 3 {
        let exact_ok = standard_identity_vanishes_on_units(n);
        holds &= exact_ok;
        method = "exact-matrix-unit-spanning-set+sampled-evaluation".into();
    }

    // Sample tuples from the unital algebra generated by the image.
    let mut gens: Vec<CMatrix> = vec![CMatrix::identity(n)];
    gens.extend(rep.matrices().iter().cloned());
    let algebra = associative_closure(&gens, true)?;
    let mut max_rel = 0.0f64;
    for _ in 0..opts.pi_samples {
        let args: Vec<FMat> = (0..witness_degree)
            .map(|_| random_algebra_element(algebra.basis(), rng))
            .collect();
        let value = eval_standard_identity_float(&args);
        let scale = (1..=witness_degree).product::<usize>() as f64
            * args.iter().map(|a| frobenius(a).max(1.0)).product::<f64>();
        let rel = frobenius(&value) / scale;
        max_rel = max_rel.max(rel);
    }
    holds &= max_rel <= IDENTITY_RESIDUAL_MAX;

    Ok(PiVerdict {
        holds,
        witness_degree,
        method,
        sampled_tuples: opts.pi_samples,
        max_relative_residual: max_rel,
    })
}

fn run_conditions(
    rep: &MatrixRep,
    opts: &CheckOptions,
    hom_mode: bool,
) -> Result<ConditionReport> {
    rep.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let numeric = rep.mode() == Mode::Float;
    let nil = rep.algebra().nilpotent_radical();
    let etas = sample_etas(&nil, opts.eta_samples, &mut rng);

    // (2a) every element of the nilpotent radical is nilpotent.
    let mut holds_2a = true;
    let mut max_elem_degree = 0usize;
    let mut images: Vec<CMatrix> = Vec::with_capacity(etas.len());
    for eta in &etas {
        let image = rep.apply(&eta.ambient)?;
        match element_nilpotency_degree(&image) {
            Some(d) => max_elem_degree = max_elem_degree.max(d),
            None => holds_2a = false,
        }
        images.push(image);
    }

    // (2b) the non-unital algebra generated by the radical image.
    let nil_images: Vec<CMatrix> = nil
        .basis()
        .iter()
        .map(|b| rep.apply(b))
        .collect::<Result<Vec<_>>>()?;
    let (holds_2b, d_2b) = if nil_images.is_empty() {
        (true, 1)
    } else {
        let a0 = associative_closure(&nil_images, false)?;
        match algebra_nilpotency_degree(&a0) {
            Some(d) => (true, d),
            None => (false, 0),
        }
    };

    // (3a) e^b - 1 nilpotent per element.
    let mut holds_3a = true;
    let mut max_exp_degree = 0usize;
    for image in &images {
        match crate::growth::exp_minus_one_degree(image) {
            Ok(d) => max_exp_degree = max_exp_degree.max(d),
            Err(_) => holds_3a = false,
        }
    }

    // (3b) uniform bound: the non-unital algebra generated by the
    // elements e^b - 1 recovers the same algebra as (2b) (logarithm and
    // exponential are finite polynomial maps on nilpotents), so its
    // nilpotency degree is an independent route to the same d.
    let (holds_3b, d_3b) = if nil_images.is_empty() {
        (true, 1)
    } else {
        let exp_gens: Vec<CMatrix> = nil_images
            .iter()
            .map(|b| {
                let e = crate::growth::matrix_exp(b)?;
                Ok(e.sub(&CMatrix::identity(rep.rep_dim())))
            })
            .collect::<Result<Vec<_>>>()?;
        let a = associative_closure(&exp_gens, false)?;
        match algebra_nilpotency_degree(&a) {
            Some(d) => (true, d),
            None => (false, 0),
        }
    };

    // (4) polynomial growth of ‖e^{tb}‖.
    let growth_count = nil.dim() + opts.growth_samples.min(etas.len() - nil.dim().min(etas.len()));
    let mut fits: Vec<GrowthFit> = Vec::new();
    let mut holds_4 = true;
    let mut k_bound = 0.0f64;
    for (eta, image) in etas.iter().zip(images.iter()).take(growth_count.max(1)) {
        if image.is_exactly_zero() && nil.dim() == 0 {
            continue;
        }
        let scale = if hom_mode {
            opts.norm_on_n.measure(&eta.nil_coeffs)
        } else {
            operator_norm(image)
        };
        if hom_mode {
            let img_norm = operator_norm(image);
            if scale > 0.0 {
                k_bound = k_bound.max(img_norm / scale);
            }
        }
        match exp_growth_fit_scaled(image, scale, &opts.sweep) {
            Ok(fit) => {
                if !fit.degenerate && fit.residual >= FIT_RESIDUAL_MAX {
                    holds_4 = false;
                }
                fits.push(fit);
            }
            Err(_) => holds_4 = false,
        }
    }
    let max_alpha = fits.iter().map(|f| f.alpha).fold(0.0, f64::max);
    let max_residual = fits.iter().map(|f| f.residual).fold(0.0, f64::max);
    let representative = fits
        .iter()
        .cloned()
        .max_by(|a, b| a.alpha.partial_cmp(&b.alpha).unwrap());

    // (1) the generated algebra satisfies a polynomial identity.
    let pi = pi_condition(rep, opts, &mut rng)?;

    let booleans = [pi.holds, holds_2a, holds_2b, holds_3a, holds_3b, holds_4];
    let degrees_ok = d_2b == d_3b && d_2b >= max_elem_degree && d_3b >= max_exp_degree;
    let consistent = booleans.iter().all(|&b| b == booleans[0]) && degrees_ok;

    Ok(ConditionReport {
        mode: if hom_mode { CheckMode::SingleRepHom } else { CheckMode::SingleRep },
        rep_dim: rep.rep_dim(),
        nil_radical_dim: nil.dim(),
        conditions: ConditionSet {
            pi,
            elementwise_nilpotent: ElementwiseVerdict {
                holds: holds_2a,
                samples: etas.len(),
                max_degree: max_elem_degree,
                numeric,
            },
            algebra_nilpotent: UniformVerdict { holds: holds_2b, degree: d_2b, numeric },
            exp_elementwise: ElementwiseVerdict {
                holds: holds_3a,
                samples: etas.len(),
                max_degree: max_exp_degree,
                numeric,
            },
            exp_uniform: UniformVerdict { holds: holds_3b, degree: d_3b, numeric },
            growth_bound: GrowthConditionVerdict {
                holds: holds_4,
                fits: fits.len(),
                max_alpha,
                max_residual,
            },
        },
        degrees: DegreeSummary {
            element_max: max_elem_degree,
            algebra: d_2b,
            exp_uniform: d_3b,
        },
        growth: GrowthSummary {
            max_alpha,
            max_residual,
            fits_computed: fits.len(),
            representative,
        },
        consistent,
        hom: hom_mode.then_some(HomSummary { k_bound, norm: opts.norm_on_n }),
    })
}

/// Evaluates all six conditions on a representation, with the growth
/// condition measured against `‖ρ(η)‖`.
pub fn check_conditions(rep: &MatrixRep, opts: &CheckOptions) -> Result<ConditionReport> {
    run_conditions(rep, opts, false)
}

/// Homomorphism-mode variant: the growth condition is measured against a
/// chosen norm on the nilpotent radical itself, and the bounding constant
/// `K` with `‖ρ(η)‖ ≤ K|η|` is reported.
pub fn check_conditions_hom(rep: &MatrixRep, opts: &CheckOptions) -> Result<ConditionReport> {
    run_conditions(rep, opts, true)
}

// ---------------------------------------------------------------------
// Representation families
// ---------------------------------------------------------------------

/// A family of representations indexed by the truncation cutoff.
#[derive(Clone, Debug)]
pub enum RepFamily {
    /// Left regular representations of the truncated enveloping quotients
    /// of one algebra.
    Truncation { algebra: crate::lie::LieAlgebra, n_min: usize, n_max: usize },
    /// The same representation repeated (a bounded control family).
    Constant { rep: MatrixRep, copies: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyMember {
    pub index: usize,
    pub rep_dim: usize,
    pub degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyVerdict {
    BoundedWithinRange,
    NoUniformBoundWithinRange,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyReport {
    pub members: Vec<FamilyMember>,
    pub max_degree: usize,
    pub verdict: FamilyVerdict,
    pub statement: String,
}

/// Computes the nilpotency degree `d_n` of the algebra generated by the
/// image of the nilpotent radical in each family member and judges
/// whether the degrees admit a uniform bound within the tested range.
pub fn family_analysis(family: &RepFamily) -> Result<FamilyReport> {
    let mut members = Vec::new();
    match family {
        RepFamily::Truncation { algebra, n_min, n_max } => {
            if *n_min < 1 || n_max < n_min {
                return Err(Error::Precondition("family range must satisfy 1 <= n_min <= n_max".into()));
            }
            let nil = algebra.nilpotent_radical();
            for n in *n_min..=*n_max {
                let t = TruncatedUEA::new(algebra, n)?;
                let rep = t.left_regular_rep();
                rep.validate()?;
                let degree = member_degree(&rep, &nil)?;
                members.push(FamilyMember { index: n, rep_dim: rep.rep_dim(), degree });
            }
        }
        RepFamily::Constant { rep, copies } => {
            rep.validate()?;
            let nil = rep.algebra().nilpotent_radical();
            let degree = member_degree(rep, &nil)?;
            for i in 0..*copies.max(&1) {
                members.push(FamilyMember { index: i + 1, rep_dim: rep.rep_dim(), degree });
            }
        }
    }
    let max_degree = members.iter().map(|m| m.degree).max().unwrap_or(1);
    let min_degree = members.iter().map(|m| m.degree).min().unwrap_or(1);
    let last = members.last().map(|m| m.degree).unwrap_or(1);
    let tail_grows = members.len() >= 2
        && last == max_degree
        && last > members[members.len() - 2].degree;
    let verdict = if tail_grows && max_degree > min_degree {
        FamilyVerdict::NoUniformBoundWithinRange
    } else {
        FamilyVerdict::BoundedWithinRange
    };
    let statement = match verdict {
        FamilyVerdict::NoUniformBoundWithinRange => format!(
            "no uniform nilpotency degree within tested range (d grows through {max_degree} at the range end) \
             => the completion of the direct sum fails the uniform nilpotency condition, \
             hence satisfies no polynomial identity"
        ),
        FamilyVerdict::BoundedWithinRange => format!(
            "nilpotency degrees are bounded by {max_degree} within the tested range \
             => the direct-sum completion satisfies the uniform nilpotency condition on this range"
        ),
    };
    Ok(FamilyReport { members, max_degree, verdict, statement })
}

fn member_degree(rep: &MatrixRep, nil: &Subspace) -> Result<usize> {
    let images: Vec<CMatrix> = nil
        .basis()
        .iter()
        .map(|b| rep.apply(b))
        .collect::<Result<Vec<_>>>()?;
    if images.is_empty() {
        return Ok(1);
    }
    let a0 = associative_closure(&images, false)?;
    algebra_nilpotency_degree(&a0).ok_or_else(|| {
        Error::InvalidRep("nilpotent-radical image generated a non-nilpotent algebra".into())
    })
}

/// Exact membership test for `η ∈ n` given ambient coordinates.
pub fn nil_membership(nil: &Subspace, coords: &[ExactComplex]) -> Result<QVec> {
    if !nil.contains(coords) {
        return Err(Error::NotInNilRadical);
    }
    let basis: Vec<QVec> = nil.basis().to_vec();
    Ok(coordinates_in(&basis, coords)?.expect("contained vector decomposes"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ec(n: i64) -> ExactComplex {
        ExactComplex::from_int(n)
    }

    #[test]
    fn nc_polynomial_eval() {
        // S2(x, y) = xy - yx.
        let s2 = standard_identity(2).unwrap();
        assert_eq!(s2.num_terms(), 2);

        // Commuting diagonals vanish.
        let d1 = CMatrix::from_ints(&[&[1, 0], &[0, 2]]);
        let d2 = CMatrix::from_ints(&[&[3, 0], &[0, 5]]);
        assert!(s2.eval(&[d1, d2]).unwrap().is_exactly_zero());

        // S2(E12, E21) = diag(1, -1).
        let v = s2
            .eval(&[CMatrix::unit(2, 0, 1), CMatrix::unit(2, 1, 0)])
            .unwrap();
        let expected = CMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        assert!(v.sub(&expected).is_exactly_zero());

        // Any polynomial vanishes on zero matrices.
        let z = s2.eval(&[CMatrix::zero(3), CMatrix::zero(3)]).unwrap();
        assert!(z.is_exactly_zero());

        // Arity mismatch.
        assert!(matches!(
            s2.eval(&[CMatrix::zero(2)]),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn polynomial_normalization_rejects_trivial() {
        let t = NCPolynomial::new(
            1,
            vec![(ec(1), vec![0]), (ec(-1), vec![0])],
        );
        assert!(t.is_err());
        assert!(NCPolynomial::new(1, vec![(ec(1), vec![])]).is_err());
    }

    #[test]
    fn standard_identity_shape_and_cap() {
        assert_eq!(standard_identity(2).unwrap().num_terms(), 2);
        assert_eq!(standard_identity(4).unwrap().num_terms(), 24);
        assert!(matches!(standard_identity(9), Err(Error::IdentityOrder(9))));
        assert!(standard_identity(1).is_err());
    }

    #[test]
    fn dp_matches_direct_evaluation() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let s4 = standard_identity(4).unwrap();
        for _ in 0..5 {
            let args: Vec<CMatrix> = (0..4)
                .map(|_| {
                    CMatrix::from_ints(&[
                        &[rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3)],
                        &[rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3)],
                        &[rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3)],
                    ])
                })
                .collect();
            let direct = s4.eval(&args).unwrap();
            let qs: Vec<QMat> = args.iter().map(|a| a.as_exact().unwrap().clone()).collect();
            let dp = eval_standard_identity_exact(&qs);
            assert!(direct.sub(&CMatrix::Exact(dp)).is_exactly_zero());
        }
    }

    #[test]
    fn amitsur_levitzki_on_2x2_and_3x3() {
        assert!(standard_identity_vanishes_on_units(2));
        // S4 fails on 3×3: the identity is sharp.
        let counter = standard_identity_unit_counterexample(4, 3);
        assert!(counter.is_some());
        // S2 fails on 2×2.
        assert!(standard_identity_unit_counterexample(2, 2).is_some());
    }

    #[test]
    fn composite_identity_shapes() {
        let s2 = standard_identity(2).unwrap();
        let comp = composite_identity(&s2, &s2);
        assert_eq!(comp.vars(), 4);

        // Substituting into a single variable recovers p.
        let single = NCPolynomial::new(1, vec![(ec(1), vec![0])]).unwrap();
        let again = composite_identity(&s2, &single);
        assert_eq!(again.vars(), 2);
        assert_eq!(again.terms(), s2.terms());
    }

    #[test]
    fn composite_identity_vanishes_on_block_instances() {
        use rand::{Rng, SeedableRng};
        // S2∘S2 on upper-triangular 2×2: inner commutators are strictly
        // upper, and strictly upper 2×2 matrices commute.
        let s2 = standard_identity(2).unwrap();
        let comp = composite_identity(&s2, &s2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let args: Vec<CMatrix> = (0..4)
                .map(|_| {
                    CMatrix::from_ints(&[
                        &[rng.gen_range(-4..=4), rng.gen_range(-4..=4)],
                        &[0, rng.gen_range(-4..=4)],
                    ])
                })
                .collect();
            assert!(comp.eval(&args).unwrap().is_exactly_zero());
        }

        // Commuting inputs kill the inner polynomial outright.
        let diag: Vec<CMatrix> = (0..4)
            .map(|k| CMatrix::from_ints(&[&[k as i64, 0], &[0, 1]]))
            .collect();
        assert!(comp.eval(&diag).unwrap().is_exactly_zero());

        // Witnessed non-trivial on full M2.
        let witness = comp
            .eval(&[
                CMatrix::unit(2, 0, 1),
                CMatrix::unit(2, 1, 0),
                CMatrix::unit(2, 0, 0),
                CMatrix::unit(2, 0, 1),
            ])
            .unwrap();
        assert!(!witness.is_exactly_zero());
    }

    #[test]
    fn check_conditions_on_aff1() {
        let rep = catalog::entry("aff1").unwrap().default_rep.unwrap();
        let report = check_conditions(&rep, &CheckOptions::default()).unwrap();
        assert!(report.consistent);
        assert!(report.conditions.pi.holds);
        assert_eq!(report.degrees.algebra, 2);
        assert_eq!(report.degrees.exp_uniform, 2);
        assert!((report.growth.max_alpha - 1.0).abs() < 0.15);
    }

    #[test]
    fn check_conditions_on_reductive_is_vacuous() {
        let rep = catalog::entry("sl2").unwrap().default_rep.unwrap();
        let report = check_conditions(&rep, &CheckOptions::default()).unwrap();
        assert!(report.consistent);
        assert_eq!(report.nil_radical_dim, 0);
        assert_eq!(report.degrees.algebra, 1);
        assert_eq!(report.growth.max_alpha, 0.0);
    }

    #[test]
    fn check_conditions_heisenberg_truncation() {
        let t = TruncatedUEA::new(&catalog::heisenberg(), 4).unwrap();
        let rep = t.left_regular_rep();
        let mut opts = CheckOptions::default();
        opts.eta_samples = 40;
        let report = check_conditions(&rep, &opts).unwrap();
        assert!(report.consistent);
        assert_eq!(report.degrees.algebra, 4);
        assert_eq!(report.degrees.exp_uniform, 4);
    }

    #[test]
    fn hom_mode_reports_k() {
        let rep = catalog::entry("aff1").unwrap().default_rep.unwrap();
        let report = check_conditions_hom(&rep, &CheckOptions::default()).unwrap();
        let hom = report.hom.expect("hom summary");
        // ρ(e2) = E12 and |e2| = 1 in the basis of n: K = 1.
        assert!((hom.k_bound - 1.0).abs() < 1e-9);
        assert!(report.consistent);

        // Vacuous for trivial radical: K = 0.
        let rep = catalog::entry("abelian2").unwrap().default_rep.unwrap();
        let report = check_conditions_hom(&rep, &CheckOptions::default()).unwrap();
        assert_eq!(report.hom.unwrap().k_bound, 0.0);
    }

    #[test]
    fn rescaling_preserves_verdicts_and_k_scales() {
        // Automorphism e2 ↦ 3e2 of [e1,e2] = e2 composed with the
        // default representation: boolean verdicts stay, K triples.
        let aff = catalog::aff1();
        let scaled = MatrixRep::new(
            aff,
            vec![
                CMatrix::from_ints(&[&[1, 0], &[0, 0]]),
                CMatrix::unit(2, 0, 1).scale_exact(&ec(3)),
            ],
        )
        .unwrap();
        assert!(scaled.validate().is_ok());
        let base = catalog::entry("aff1").unwrap().default_rep.unwrap();
        let r1 = check_conditions_hom(&base, &CheckOptions::default()).unwrap();
        let r2 = check_conditions_hom(&scaled, &CheckOptions::default()).unwrap();
        assert_eq!(r1.consistent, r2.consistent);
        assert_eq!(r1.conditions.pi.holds, r2.conditions.pi.holds);
        assert_eq!(r1.degrees.algebra, r2.degrees.algebra);
        let k1 = r1.hom.unwrap().k_bound;
        let k2 = r2.hom.unwrap().k_bound;
        assert!((k2 / k1 - 3.0).abs() < 1e-9);
        // Fitted alpha is scale invariant.
        assert!((r1.growth.max_alpha - r2.growth.max_alpha).abs() < 0.05);
    }

    #[test]
    fn family_analysis_heisenberg_unbounded() {
        let family = RepFamily::Truncation {
            algebra: catalog::heisenberg(),
            n_min: 2,
            n_max: 6,
        };
        let report = family_analysis(&family).unwrap();
        let degrees: Vec<usize> = report.members.iter().map(|m| m.degree).collect();
        assert_eq!(degrees, vec![2, 3, 4, 5, 6]);
        assert_eq!(report.verdict, FamilyVerdict::NoUniformBoundWithinRange);
    }

    #[test]
    fn family_analysis_bounded_cases() {
        let rep = catalog::entry("heisenberg").unwrap().default_rep.unwrap();
        let constant = RepFamily::Constant { rep, copies: 4 };
        let report = family_analysis(&constant).unwrap();
        assert_eq!(report.verdict, FamilyVerdict::BoundedWithinRange);
        assert!(report.members.iter().all(|m| m.degree == 2));

        let family = RepFamily::Truncation {
            algebra: catalog::abelian(2),
            n_min: 2,
            n_max: 6,
        };
        let report = family_analysis(&family).unwrap();
        assert_eq!(report.verdict, FamilyVerdict::BoundedWithinRange);
        assert!(report.members.iter().all(|m| m.degree == 1));
    }

    #[test]
    fn nil_membership_checks() {
        let heis = catalog::heisenberg();
        let nil = heis.nilpotent_radical();
        let z = vec![ec(0), ec(0), ec(5)];
        assert!(nil_membership(&nil, &z).is_ok());
        let x = vec![ec(1), ec(0), ec(0)];
        assert!(matches!(
            nil_membership(&nil, &x),
            Err(Error::NotInNilRadical)
        ));
    }
}
