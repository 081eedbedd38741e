use rand::Rng;

use crate::error::Result;
use crate::exact::matrix::{add_vectors, neg_vector, unit_vector, Vector};
use crate::exact::scalar::ratio;
use crate::exact::GaussianRational;

use super::classify::LedgerEntry;
use super::structure::{nijenhuis, nijenhuis_lifted, ComplexStructure};

/// Outcome of the randomized Nijenhuis checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisTrials {
    /// Number of `N` evaluations performed.
    pub evaluations: usize,
    /// First failure: `(check, u index, v index)`.
    pub failure: Option<(&'static str, usize, usize)>,
}

impl NijenhuisTrials {
    pub fn ledger_entries(&self) -> Vec<LedgerEntry> {
        let detail = match self.failure {
            None => format!("{} evaluations", self.evaluations),
            Some((what, a, b)) => format!("{what} fails on basis pair ({a}, {b})"),
        };
        vec![LedgerEntry::new(
            "N independent of lifts; N(u,v) = -N(v,u); N(Ju,v) = -J N(u,v)",
            self.failure.is_none(),
            detail,
        )]
    }
}

/// Small random rational in `[-4, 4]` with denominator at most 3.
pub fn random_rational<R: Rng>(rng: &mut R) -> GaussianRational {
    GaussianRational::real(ratio(rng.gen_range(-12..=12), rng.gen_range(1..=3)))
}

/// Random rational combination of the basis of `h`.
pub fn random_h_element<R: Rng>(j: &ComplexStructure, rng: &mut R) -> Vector {
    let h = j.h().space();
    let coeffs: Vec<GaussianRational> = (0..h.dim()).map(|_| random_rational(rng)).collect();
    h.combine(&coeffs)
}

/// For every basis pair `(u, v)` of `g/h`: compares `N(u, v)` against
/// `perturbations` evaluations with each lift shifted by a random element of
/// `h`, and checks both antisymmetry identities.
pub fn nijenhuis_trials<R: Rng>(
    j: &ComplexStructure,
    perturbations: usize,
    rng: &mut R,
) -> Result<NijenhuisTrials> {
    let d = j.dim();
    let q = j.quotient();
    let mut evaluations = 0;
    let units: Vec<Vector> = (0..d).map(|k| unit_vector(d, k)).collect();
    for a in 0..d {
        for b in 0..d {
            let (u, v) = (&units[a], &units[b]);
            let base = nijenhuis(j, u, v)?;
            let (ju, jv) = (j.apply(u), j.apply(v));
            let lifts = [q.lift(u), q.lift(v), q.lift(&ju), q.lift(&jv)];
            for _ in 0..perturbations {
                let shifted: Vec<Vector> = lifts
                    .iter()
                    .map(|x| add_vectors(x, &random_h_element(j, rng)))
                    .collect();
                let n = nijenhuis_lifted(j, &shifted[0], &shifted[1], &shifted[2], &shifted[3])?;
                evaluations += 1;
                if n != base {
                    return Ok(NijenhuisTrials {
                        evaluations,
                        failure: Some(("lift independence", a, b)),
                    });
                }
            }
            evaluations += 3;
            if nijenhuis(j, v, u)? != neg_vector(&base) {
                return Ok(NijenhuisTrials {
                    evaluations,
                    failure: Some(("antisymmetry", a, b)),
                });
            }
            if nijenhuis(j, &ju, v)? != neg_vector(&j.apply(&base)) {
                return Ok(NijenhuisTrials {
                    evaluations,
                    failure: Some(("J-antilinearity", a, b)),
                });
            }
        }
    }
    Ok(NijenhuisTrials {
        evaluations,
        failure: None,
    })
}
