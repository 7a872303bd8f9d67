//! Exact slope and degree calculus for bundle transforms on a curve in
//! characteristic `p`.
//!
//! Everything here is pure arithmetic on `(rank, degree)` pairs. The genus
//! and the characteristic live in a [`CurveContext`]; bundles are
//! [`BundleNumerics`]. No sheaves are ever constructed.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratio::format_ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),
    #[error("characteristic must be a prime >= 2, got {0}")]
    InvalidCharacteristic(i64),
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(i64),
    #[error("covering degree must be at least 1, got {0}")]
    InvalidCoveringDegree(i64),
}

/// Trial-division primality check; inputs here are small by construction.
pub(crate) fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Ambient numerical data: genus `g >= 2` and prime characteristic `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveContext {
    genus: i64,
    characteristic: i64,
}

impl CurveContext {
    pub fn new(genus: i64, characteristic: i64) -> Result<Self, CurveError> {
        if genus < 2 {
            return Err(CurveError::InvalidGenus(genus));
        }
        if !is_prime(characteristic) {
            return Err(CurveError::InvalidCharacteristic(characteristic));
        }
        Ok(CurveContext {
            genus,
            characteristic,
        })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn characteristic(&self) -> i64 {
        self.characteristic
    }

    /// Degree of the canonical bundle, `2g - 2`.
    pub fn canonical_degree(&self) -> i64 {
        2 * self.genus - 2
    }
}

/// Rank and degree of a bundle; the slope `degree/rank` is derived exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BundleNumerics {
    rank: i64,
    degree: i64,
}

impl BundleNumerics {
    pub fn new(rank: i64, degree: i64) -> Result<Self, CurveError> {
        if rank < 1 {
            return Err(CurveError::InvalidRank(rank));
        }
        Ok(BundleNumerics { rank, degree })
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `degree/rank` as a reduced rational with positive denominator.
    pub fn slope(&self) -> Rational64 {
        Rational64::new(self.degree, self.rank)
    }

    /// Tensoring with a line bundle of the given degree: the degree shifts
    /// by `rank * line_degree`, the rank is unchanged.
    pub fn twist(&self, line_degree: i64) -> BundleNumerics {
        BundleNumerics {
            rank: self.rank,
            degree: self.degree + self.rank * line_degree,
        }
    }
}

impl CurveContext {
    /// Numerics of the Frobenius direct image: rank `p*r` and degree
    /// `d + r(p-1)(g-1)`, i.e. the Euler characteristic is conserved.
    pub fn frobenius_pushforward(&self, b: BundleNumerics) -> BundleNumerics {
        let p = self.characteristic;
        BundleNumerics {
            rank: p * b.rank,
            degree: b.degree + b.rank * (p - 1) * (self.genus - 1),
        }
    }

    /// Numerics of the Frobenius pullback: the degree multiplies by `p`,
    /// the rank is unchanged.
    pub fn frobenius_pullback(&self, b: BundleNumerics) -> BundleNumerics {
        BundleNumerics {
            rank: b.rank,
            degree: self.characteristic * b.degree,
        }
    }

    /// Pullback along a connected étale cover of degree `n`: the degree
    /// multiplies by `n` and the covering curve has `g̃ - 1 = n(g - 1)`.
    /// Returns the transformed numerics together with the covered genus.
    pub fn etale_pullback(
        &self,
        n: i64,
        b: BundleNumerics,
    ) -> Result<(BundleNumerics, i64), CurveError> {
        if n < 1 {
            return Err(CurveError::InvalidCoveringDegree(n));
        }
        let covered_genus = n * (self.genus - 1) + 1;
        Ok((
            BundleNumerics {
                rank: b.rank,
                degree: n * b.degree,
            },
            covered_genus,
        ))
    }

    /// Least integer strictly greater than `r^2 (g-1) / 4`, the auxiliary
    /// rank needed by the cohomological semistability criterion.
    pub fn faltings_rank_bound(&self, r: i64) -> Result<i64, CurveError> {
        if r < 1 {
            return Err(CurveError::InvalidRank(r));
        }
        Ok((r * r * (self.genus - 1)).div_euclid(4) + 1)
    }

    /// Window bounding the Harder-Narasimhan slopes of the Frobenius
    /// pullback of a semistable bundle: returns
    /// `(p·μ - (p-1)(g-1), p·μ + (p-1)(g-1))`. The first entry bounds
    /// `μ_min(F*b)` from below, the second bounds `μ_max(F*b)` from above.
    /// These are bounds, not the actual extremal slopes (which would need
    /// the bundle itself, not just its numerics). The window width is
    /// `(p-1)(2g-2)` independently of `μ`.
    pub fn adjunction_bounds(&self, b: BundleNumerics) -> (Rational64, Rational64) {
        let p = Rational64::from_integer(self.characteristic);
        let shift = Rational64::from_integer((self.characteristic - 1) * (self.genus - 1));
        let center = p * b.slope();
        (center - shift, center + shift)
    }
}

/// Certificate for the normalization of a bundle to slope `g̃ - 1`:
/// pull back along an étale cover of degree `n = p^k * (p*r)`, twist by the
/// Frobenius pullback of a line bundle of degree `d`, and push forward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionPlan {
    /// Exponent `k` in `n = p^k * m`; `k = 0` always suffices arithmetically.
    pub covering_exponent: u32,
    /// Degree `n` of the étale cover.
    pub covering_degree: i64,
    /// Degree `d` of the twisting line bundle on the covered curve.
    pub twist_degree: i64,
    /// Genus of the covering curve, `g̃ = n(g-1) + 1`.
    pub covered_genus: i64,
}

impl CurveContext {
    /// Builds the normalization certificate for `b`. Writing
    /// `μ(b) = g - 1 + s/r`, take `m = p*r`, `n = p^0 * m` and `d = -s`;
    /// then pull back, twist by degree `p*d` per rank unit and push forward
    /// to land on slope exactly `g̃ - 1`. The construction is verified
    /// internally; the end slope is an invariant of the plan.
    pub fn reduction_plan(&self, b: BundleNumerics) -> ReductionPlan {
        let p = self.characteristic;
        // s is the integer with slope(b) = g - 1 + s/r.
        let s = b.degree - b.rank * (self.genus - 1);
        let n = p * b.rank;
        let plan = ReductionPlan {
            covering_exponent: 0,
            covering_degree: n,
            twist_degree: -s,
            covered_genus: n * (self.genus - 1) + 1,
        };
        debug_assert_eq!(
            self.run_reduction(b, &plan).slope(),
            Rational64::from_integer(plan.covered_genus - 1)
        );
        plan
    }

    /// Replays a reduction plan through the elementary transforms and
    /// returns the final pushed-forward numerics on the covering curve.
    pub fn run_reduction(&self, b: BundleNumerics, plan: &ReductionPlan) -> BundleNumerics {
        let (pulled, covered_genus) = self
            .etale_pullback(plan.covering_degree, b)
            .expect("plan covering degree is positive");
        // Twisting by F*L multiplies the line degree by p.
        let twisted = pulled.twist(self.characteristic * plan.twist_degree);
        let covered_ctx = CurveContext {
            genus: covered_genus,
            characteristic: self.characteristic,
        };
        covered_ctx.frobenius_pushforward(twisted)
    }
}

/// JSON-facing view of bundle numerics with the slope spelled out.
#[derive(Debug, Serialize, Deserialize)]
pub struct BundleReport {
    pub rank: i64,
    pub degree: i64,
    pub slope: String,
}

impl From<BundleNumerics> for BundleReport {
    fn from(b: BundleNumerics) -> Self {
        BundleReport {
            rank: b.rank,
            degree: b.degree,
            slope: format_ratio(b.slope()),
        }
    }
}
