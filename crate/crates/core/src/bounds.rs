//! Closed-form extremal bounds as exact rationals.

use num_integer::Integer;
use num_rational::Rational64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("bound for {pattern} applies only for n >= {min_n} (got {n})")]
    OutOfRange {
        pattern: &'static str,
        min_n: usize,
        n: usize,
    },
}

/// A closed-form upper bound on ex(n, H) for planar graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundForm {
    /// 2n - 4, triangle-free planar graphs, n >= 3
    TriangleFree,
    /// 15/7 (n - 2), C4-free, n >= 4
    C4,
    /// 12/5 (n - 2), C5-free, n >= 5
    C5Simple,
    /// (12n - 33)/5, C5-free, n >= 11
    C5Full,
    /// 3n - 6, K4-free (and planar in general), n >= 3
    K4Free,
}

impl BoundForm {
    pub fn min_n(&self) -> usize {
        match self {
            BoundForm::TriangleFree | BoundForm::K4Free => 3,
            BoundForm::C4 => 4,
            BoundForm::C5Simple => 5,
            BoundForm::C5Full => 11,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BoundForm::TriangleFree => "2n-4",
            BoundForm::C4 => "15/7(n-2)",
            BoundForm::C5Simple => "12/5(n-2)",
            BoundForm::C5Full => "(12n-33)/5",
            BoundForm::K4Free => "3n-6",
        }
    }

    pub fn evaluate(&self, n: usize) -> Result<Rational64, BoundError> {
        if n < self.min_n() {
            return Err(BoundError::OutOfRange {
                pattern: self.name(),
                min_n: self.min_n(),
                n,
            });
        }
        let n = n as i64;
        Ok(match self {
            BoundForm::TriangleFree => Rational64::from_integer(2 * n - 4),
            BoundForm::C4 => Rational64::new(15 * (n - 2), 7),
            BoundForm::C5Simple => Rational64::new(12 * (n - 2), 5),
            BoundForm::C5Full => Rational64::new(12 * n - 33, 5),
            BoundForm::K4Free => Rational64::from_integer(3 * n - 6),
        })
    }
}

/// Floor of an exact rational, for printing integer edge caps.
pub fn floor_of(r: Rational64) -> i64 {
    r.numer().div_floor(r.denom())
}
