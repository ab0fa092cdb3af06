use alloc::vec::Vec;
use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{Coloring, Frame};
use crate::csl::Isometry;
use crate::exact::RatMatrix;
use crate::error::{Error, Result};

/// Which of `Γ₁(R)` and `Γ₁(R⁻¹)` lie inside `Γ₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Containment {
    Both,
    CslOnly,
    InverseCslOnly,
    Neither,
}

/// A known consequence whose hypotheses hold for the isometry at hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// A coincidence site lattice inside `Γ₂` forces `Σ₂ | Σ₁`.
    ContainedCsl,
    /// Both inside `Γ₂` iff `Σ₂ = Σ₁/m`; always applicable.
    BothContainedIffMinimal,
    /// `m` prime: `Σ₂ ∈ {Σ₁/p, Σ₁, pΣ₁}` fixed by containment and color coincidence.
    PrimeIndex { p: u64, case: Containment, predicted: BigRational },
    /// `gcd(Σ₁, m) = 1`: every color occurs in both coincidence site lattices.
    CoprimeIndex,
    /// `gcd(Σ₁, m) = 1` claimed to give `Σ₂ | Σ₁`. Only true when `u = 1`:
    /// in general `Σ₂ = u·Σ₁` there, so this fails for every coprime
    /// isometry that is not a color coincidence.
    CoprimeDivisibility,
    /// Color coincidences have `Σ₂ | Σ₁`.
    ColorCoincidenceDivides,
    /// With `s = t = m`, color coincidence iff `Σ₂ = Σ₁`.
    AllColorsCriterion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub rule: Rule,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub containment: Containment,
    pub sigma1: BigInt,
    pub sigma2: BigInt,
    pub m: u64,
    pub is_color_coincidence: bool,
    pub predictions: Vec<Prediction>,
}

impl Classification {
    pub fn all_hold(&self) -> bool {
        self.predictions.iter().all(|p| p.holds)
    }

    /// Predictions that failed.
    pub fn failures(&self) -> impl Iterator<Item = &Rule> {
        self.predictions.iter().filter(|p| !p.holds).map(|p| &p.rule)
    }

    pub fn prime_index_prediction(&self) -> Option<&BigRational> {
        self.predictions.iter().find_map(|p| match &p.rule {
            Rule::PrimeIndex { predicted, .. } => Some(predicted),
            _ => None,
        })
    }
}

/// Outcome of composing two color coincidences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCheck {
    pub sigma1_first: BigInt,
    pub sigma1_second: BigInt,
    pub gcd: BigInt,
    /// Whether `R₂R₁` is a color coincidence.
    pub product_is_color_coincidence: bool,
    /// False only if the `Σ₁` values are coprime and the product is not a
    /// color coincidence.
    pub implication_held: bool,
}

/// Color coincidences among a candidate list that fail to be closed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureFindings {
    /// Indices of candidates that are color coincidences.
    pub members: Vec<usize>,
    /// `(i, j)` with `candidates[j] ∘ candidates[i]` not a color coincidence.
    pub product_violations: Vec<(usize, usize)>,
    /// Members whose inverse is not a color coincidence.
    pub inverse_violations: Vec<usize>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn divides(a: &BigInt, b: &BigInt) -> bool {
    (b % a) == BigInt::from(0)
}

impl Frame<'_> {
    pub fn containment(&self) -> Result<Containment> {
        let sub = self.coloring().sub();
        let direct = self.csl.is_sublattice_of(sub)?;
        let inverse = self.csl_inv.is_sublattice_of(sub)?;
        Ok(match (direct, inverse) {
            (true, true) => Containment::Both,
            (true, false) => Containment::CslOnly,
            (false, true) => Containment::InverseCslOnly,
            (false, false) => Containment::Neither,
        })
    }

    pub fn classify(&self) -> Result<Classification> {
        let containment = self.containment()?;
        let m = self.coloring().order();
        let mb = BigInt::from(m);
        let (s1, s2) = (&self.sigma1, &self.sigma2);
        let cc = self.is_color_coincidence();
        let stuv = self.stuv()?;
        let mut predictions = Vec::new();
        if containment != Containment::Neither {
            predictions.push(Prediction { rule: Rule::ContainedCsl, holds: divides(s2, s1) });
        }
        let minimal = s2 * &mb == *s1;
        predictions.push(Prediction { rule: Rule::BothContainedIffMinimal, holds: minimal == (containment == Containment::Both) });
        if is_prime(m) {
            let one = BigRational::one();
            let factor = match containment {
                Containment::Both => BigRational::new(BigInt::one(), mb.clone()),
                Containment::CslOnly | Containment::InverseCslOnly => one,
                Containment::Neither if cc => one,
                Containment::Neither => BigRational::from_integer(mb.clone()),
            };
            let predicted = factor * BigRational::from_integer(s1.clone());
            let holds = predicted == BigRational::from_integer(s2.clone());
            predictions.push(Prediction { rule: Rule::PrimeIndex { p: m, case: containment, predicted }, holds });
        }
        if s1.gcd(&mb).is_one() {
            predictions.push(Prediction { rule: Rule::CoprimeIndex, holds: stuv.s == m && stuv.t == m });
            predictions.push(Prediction { rule: Rule::CoprimeDivisibility, holds: divides(s2, s1) });
        }
        if cc {
            predictions.push(Prediction { rule: Rule::ColorCoincidenceDivides, holds: divides(s2, s1) });
        }
        if stuv.s == m && stuv.t == m {
            predictions.push(Prediction { rule: Rule::AllColorsCriterion, holds: cc == (s1 == s2) });
        }
        Ok(Classification {
            containment,
            sigma1: s1.clone(),
            sigma2: s2.clone(),
            m,
            is_color_coincidence: cc,
            predictions,
        })
    }
}

impl Coloring {
    pub fn classify_special_case(&self, r: &Isometry) -> Result<Classification> {
        self.frame(r)?.classify()
    }

    /// Checks whether `R₂R₁` is a color coincidence for color coincidences
    /// `R₁, R₂`, and whether coprime `Σ₁` values guaranteed it.
    pub fn product_color_coincidence_check(&self, r1: &Isometry, r2: &Isometry) -> Result<ProductCheck> {
        let f1 = self.frame(r1)?;
        let f2 = self.frame(r2)?;
        if !f1.is_color_coincidence() || !f2.is_color_coincidence() {
            return Err(Error::NotColorCoincidence);
        }
        let product = self.frame(&r2.compose(r1)?)?.is_color_coincidence();
        let gcd = f1.sigma1.gcd(&f2.sigma1);
        Ok(ProductCheck {
            implication_held: product || !gcd.is_one(),
            sigma1_first: f1.sigma1,
            sigma1_second: f2.sigma1,
            gcd,
            product_is_color_coincidence: product,
        })
    }

    /// All ordered pairs of color coincidences among `candidates` whose
    /// product leaves the set, and members whose inverse leaves it.
    pub fn closure_search(&self, candidates: &[Isometry]) -> Result<ClosureFindings> {
        let mut findings = ClosureFindings::default();
        for (i, r) in candidates.iter().enumerate() {
            if self.is_color_coincidence(r)? {
                findings.members.push(i);
                if !self.is_color_coincidence(&r.inverse())? {
                    findings.inverse_violations.push(i);
                }
            }
        }
        // products of a large candidate set repeat heavily
        let mut known: BTreeMap<RatMatrix, bool> = BTreeMap::new();
        for &i in &findings.members {
            known.insert(candidates[i].matrix().clone(), true);
        }
        for &i in &findings.members {
            for &j in &findings.members {
                let product = candidates[j].compose(&candidates[i])?;
                let member = match known.get(product.matrix()) {
                    Some(&m) => m,
                    None => {
                        let m = self.is_color_coincidence(&product)?;
                        known.insert(product.matrix().clone(), m);
                        m
                    }
                };
                if !member {
                    findings.product_violations.push((i, j));
                }
            }
        }
        Ok(findings)
    }
}
