//! Brute-force demand over the eight (consumer type, signal) cells.
//!
//! Deliberately shares nothing with the demand module: beliefs come from
//! joint signal probabilities computed here, and the buy rule is applied cell
//! by cell.

use crate::model::{ModelParams, Quality};

/// Two reservation values are treated as equal when closer than this, so
/// that rounding differences between the solver and the oracle do not
/// flip a purchase at an exact tie.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Cell {
    pub sophisticated: bool,
    pub good_valence: bool,
    pub high_precision: bool,
    pub wtp: f64,
    mass_good: f64,
    mass_bad: f64,
}

impl Cell {
    pub fn mass(&self, quality: Quality) -> f64 {
        match quality {
            Quality::Good => self.mass_good,
            Quality::Bad => self.mass_bad,
        }
    }
}

/// `Pr(valence, precision | quality)`.
fn joint(p: &ModelParams, good_valence: bool, high_precision: bool, good_quality: bool) -> f64 {
    let w = if high_precision { p.h() } else { p.l() };
    let pw = if high_precision { p.gamma() } else { 1.0 - p.gamma() };
    let correct = good_valence == good_quality;
    pw * if correct { w } else { 1.0 - w }
}

fn bayes(prior: f64, good: f64, bad: f64) -> f64 {
    let num = prior * good;
    let den = num + (1.0 - prior) * bad;
    if den == 0.0 {
        prior
    } else {
        num / den
    }
}

pub(crate) fn cells(p: &ModelParams) -> [Cell; 8] {
    let mut out = [Cell {
        sophisticated: false,
        good_valence: false,
        high_precision: false,
        wtp: 0.0,
        mass_good: 0.0,
        mass_bad: 0.0,
    }; 8];
    let mut i = 0;
    for sophisticated in [true, false] {
        let share = if sophisticated { p.lambda() } else { 1.0 - p.lambda() };
        for good_valence in [true, false] {
            for high_precision in [true, false] {
                let mu = if sophisticated {
                    bayes(
                        p.mu0(),
                        joint(p, good_valence, high_precision, true),
                        joint(p, good_valence, high_precision, false),
                    )
                } else {
                    let g = joint(p, good_valence, true, true) + joint(p, good_valence, false, true);
                    let b = joint(p, good_valence, true, false) + joint(p, good_valence, false, false);
                    bayes(p.mu0(), g, b)
                };
                out[i] = Cell {
                    sophisticated,
                    good_valence,
                    high_precision,
                    wtp: mu * p.v_g() + (1.0 - mu) * p.v_b(),
                    mass_good: share * joint(p, good_valence, high_precision, true),
                    mass_bad: share * joint(p, good_valence, high_precision, false),
                };
                i += 1;
            }
        }
    }
    out
}

pub(crate) fn buys(wtp: f64, price: f64) -> bool {
    wtp >= price - TIE_TOL
}

/// Expected demand by direct summation over the eight cells.
pub fn oracle_demand(p: &ModelParams, quality: Quality, price: f64) -> f64 {
    cells(p)
        .iter()
        .filter(|c| buys(c.wtp, price))
        .map(|c| c.mass(quality))
        .sum()
}
