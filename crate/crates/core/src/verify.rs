//! Verification suites that compare the closed forms with the brute-force
//! oracle on one scheme.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::krawtchouk::{c_poly, check_recurrence, delsarte_p, eigenmatrix};
use crate::macwilliams::{
    dual_diameter_sum, moment_b_below_dual_distance, moment_b_with_dual, moment_binv_below_dual_distance,
    moment_binv_with_dual, transform_eigen, transform_functional, TransformInput, WeightDistribution,
};
use crate::oracle::{char_eigenmatrix, random_code, verify_scheme_axioms_with, Ambient, LinearCode};
use crate::scalar;
use crate::scheme::{SchemeKind, SchemeParams, SchemeSpec};

/// Largest space the code-based suites will work in.
pub const VERIFY_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Eigen,
    Transform,
    Moments,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::Axioms, Suite::Eigen, Suite::Transform, Suite::Moments];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Eigen => "eigen",
            Suite::Transform => "transform",
            Suite::Moments => "moments",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 20, seed: 0 }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: Vec<String>,
    /// Checks that do not apply to this scheme.
    pub skipped: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport { suite: suite.name().into(), ..Default::default() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.failures.is_empty();
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub scheme: SchemeSpec,
    pub options: VerifyOptions,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// A brute-forced code and its dual.
#[derive(Clone, Debug)]
pub struct CodePair {
    pub code: LinearCode,
    pub dist: WeightDistribution,
    pub dual_dist: WeightDistribution,
}

impl CodePair {
    pub fn new(code: LinearCode) -> Result<Self> {
        let dist = code.weight_distribution()?;
        let dual_dist = code.dual()?.weight_distribution()?;
        Ok(CodePair { code, dist, dual_dist })
    }

    pub fn input(&self) -> Result<TransformInput> {
        TransformInput::new(self.dist.clone(), self.code.size(), self.code.params().clone())
    }

    pub fn dual_input(&self) -> Result<TransformInput> {
        let size = self.code.params().space_size() / self.code.size();
        TransformInput::new(self.dual_dist.clone(), size, self.code.params().clone())
    }
}

/// `trials` random codes with uniformly drawn dimension, reproducible from
/// `seed`.
pub fn sample_code_pairs(params: &SchemeParams, trials: usize, seed: u64) -> Result<Vec<CodePair>> {
    let ambient = Arc::new(Ambient::new(params)?);
    guard(&ambient)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let dim = rng.gen_range(0..=ambient.dim());
            CodePair::new(random_code(ambient.clone(), dim, &mut rng)?)
        })
        .collect()
}

fn guard(ambient: &Ambient) -> Result<()> {
    match ambient.size() {
        Some(s) if s <= VERIFY_LIMIT => Ok(()),
        _ => Err(Error::SizeGuard { size: ambient.params().space_size().to_string(), limit: VERIFY_LIMIT }),
    }
}

pub fn verify(params: &SchemeParams, suite: Suite, options: VerifyOptions) -> Result<VerifyReport> {
    let suites = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let needs_codes = suites.iter().any(|s| matches!(s, Suite::Transform | Suite::Moments));
    let pairs = if needs_codes { sample_code_pairs(params, options.trials, options.seed)? } else { Vec::new() };
    let reports = suites
        .into_iter()
        .map(|s| match s {
            Suite::Axioms => axioms_suite(params, options),
            Suite::Eigen => eigen_suite(params),
            Suite::Transform => Ok(transform_suite(&pairs)),
            Suite::Moments => Ok(moments_suite(params, &pairs)),
            Suite::All => unreachable!(),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        scheme: *params.spec(),
        options,
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    })
}

fn axioms_suite(params: &SchemeParams, options: VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Axioms);
    let axioms = verify_scheme_axioms_with(params, options.trials.max(1), options.seed)?;
    report.checks = axioms.pairs_checked as u64 + (axioms.samples_per_relation * axioms.valencies.len()) as u64;
    report.failures = axioms.violations;
    Ok(report.finish())
}

pub fn eigen_suite(params: &SchemeParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Eigen);
    let n = params.n();
    for k in 0..=n {
        for x in 0..=n {
            let (c, p) = (c_poly(k, x, params)?, delsarte_p(k, x, params)?);
            report.check(c == p, || {
                format!("C_{k}({x}) = {} but P_{k}({x}) = {}", scalar::format(&c), scalar::format(&p))
            });
        }
    }
    match eigenmatrix(params) {
        Ok(p) => {
            report.check(p.is_involution(), || "P P != |X| I".into());
            report.check(p.is_orthogonal(), || "orthogonality relation fails".into());
            let failures = check_recurrence(params, n);
            report.check(failures.is_empty(), || format!("{} recurrence failures", failures.len()));
            if params.q().is_multiple_of(2) {
                let chars = char_eigenmatrix(params)?;
                for (x, row) in chars.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        report.check(v == p.get(x, k), || {
                            format!("character sum P_{k}({x}) = {v} but C_{k}({x}) = {}", p.get(x, k))
                        });
                    }
                }
            } else {
                report.skipped.push("character sums need characteristic 2".into());
            }
        }
        Err(e) => report.failures.push(e.to_string()),
    }
    Ok(report.finish())
}

pub fn transform_suite(pairs: &[CodePair]) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Transform);
    for (t, pair) in pairs.iter().enumerate() {
        let outcome = (|| -> Result<()> {
            let input = pair.input()?;
            let eigen = transform_eigen(&input)?;
            let functional = transform_functional(&input)?;
            report.check(eigen == pair.dual_dist, || {
                format!("trial {t}: eigen transform {eigen} but brute-force dual {}", pair.dual_dist)
            });
            report.check(functional == eigen, || {
                format!("trial {t}: functional transform {functional} but eigen transform {eigen}")
            });
            let back = transform_eigen(&pair.dual_input()?)?;
            report.check(back == pair.dist, || format!("trial {t}: transform of the dual gives {back}"));
            Ok(())
        })();
        if let Err(e) = outcome {
            report.failures.push(format!("trial {t}: {e}"));
        }
    }
    report.finish()
}

pub fn moments_suite(params: &SchemeParams, pairs: &[CodePair]) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Moments);
    for (t, pair) in pairs.iter().enumerate() {
        if let Err(e) = check_moments(params, pair, &mut report) {
            report.failures.push(format!("trial {t}: {e}"));
        }
    }
    report.finish()
}

/// Both moment identities at every `phi`, for the code and with the roles of
/// code and dual swapped, plus the corollaries whose hypotheses hold.
pub fn check_moments(params: &SchemeParams, pair: &CodePair, report: &mut SuiteReport) -> Result<()> {
    let n = params.n();
    let input = pair.input()?;
    let dual_input = pair.dual_input()?;
    let d_dual = pair.dual_dist.min_distance();
    let rho_dual = pair.dual_dist.diameter();
    for phi in 0..=n {
        for (label, inp, other) in [("C", &input, &pair.dual_dist), ("dual", &dual_input, &pair.dist)] {
            let mb = moment_b_with_dual(inp, other, phi)?;
            report.check(mb.balanced(), || format!("b-moment of {label} {} unbalanced at phi={phi}", inp.dist()));
            let mi = moment_binv_with_dual(inp, other, phi)?;
            report.check(mi.balanced(), || format!("b^-1-moment of {label} {} unbalanced at phi={phi}", inp.dist()));
        }
        if phi < d_dual {
            let mb = moment_b_with_dual(&input, &pair.dual_dist, phi)?;
            let mi = moment_binv_with_dual(&input, &pair.dual_dist, phi)?;
            let dual_size = input.dual_size();
            report.check(mb.rhs == moment_b_below_dual_distance(params, &dual_size, phi), || {
                format!("b-moment corollary fails for {} at phi={phi}", pair.dist)
            });
            report.check(mi.rhs == moment_binv_below_dual_distance(params, &dual_size, phi), || {
                format!("b^-1-moment corollary fails for {} at phi={phi}", pair.dist)
            });
        }
        if rho_dual < phi {
            let s = dual_diameter_sum(params, &pair.dist, phi)?;
            report.check(s.is_zero(), || format!("dual diameter sum is {} for {} at phi={phi}", scalar::format(&s), pair.dist));
        }
    }
    if params.kind() == SchemeKind::Hamming && rho_dual < n {
        let q1 = BigInt::from(params.q() - 1);
        let s: BigInt = pair
            .dist
            .counts()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                sign * num_traits::pow(q1.clone(), n - i) * c
            })
            .sum();
        report.check(s.is_zero(), || format!("alternating sum is {s} for {}", pair.dist));
    }
    Ok(())
}
