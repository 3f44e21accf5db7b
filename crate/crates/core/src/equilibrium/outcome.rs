use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EquilibriumKind {
    Pooling,
    Mixed,
    None,
}

/// Pooling region, named after the WTP level the common price targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    R1,
    R2,
    R3,
    R4,
}

impl Region {
    pub fn from_level(level: u8) -> Option<Region> {
        match level {
            1 => Some(Region::R1),
            2 => Some(Region::R2),
            3 => Some(Region::R3),
            4 => Some(Region::R4),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Region::R1 => "R1",
            Region::R2 => "R2",
            Region::R3 => "R3",
            Region::R4 => "R4",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Region-map label of one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    R1,
    R2,
    R3,
    R4,
    /// Pooling at the top WTP level. Never optimal in the base model but
    /// kept so that every outcome has a label.
    L5,
    #[serde(rename = "mixed")]
    Mixed,
    #[serde(rename = "none")]
    None,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::R1 => "R1",
            Classification::R2 => "R2",
            Classification::R3 => "R3",
            Classification::R4 => "R4",
            Classification::L5 => "L5",
            Classification::Mixed => "mixed",
            Classification::None => "none",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of an equilibrium solver.
///
/// `kind = none` is an ordinary result: prices and profits are absent and
/// `diagnostic` says why no equilibrium of the requested family exists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumOutcome {
    pub kind: EquilibriumKind,
    /// Pooling price, or the high price of a mixed equilibrium.
    pub price: Option<f64>,
    pub low_price: Option<f64>,
    /// Probability that the low-quality firm posts the high price.
    pub alpha: Option<f64>,
    #[serde(rename = "profit_G")]
    pub profit_g: Option<f64>,
    #[serde(rename = "profit_B")]
    pub profit_b: Option<f64>,
    pub region: Option<Region>,
    pub candidate_level: Option<u8>,
    pub diagnostic: Option<String>,
}

impl EquilibriumOutcome {
    pub(crate) fn pooling(price: f64, level: Option<u8>, profit_g: f64, profit_b: f64) -> Self {
        EquilibriumOutcome {
            kind: EquilibriumKind::Pooling,
            price: Some(price),
            low_price: None,
            alpha: None,
            profit_g: Some(profit_g),
            profit_b: Some(profit_b),
            region: level.and_then(Region::from_level),
            candidate_level: level,
            diagnostic: None,
        }
    }

    pub(crate) fn mixed(high_price: f64, low_price: f64, alpha: f64, profit_g: f64, profit_b: f64) -> Self {
        EquilibriumOutcome {
            kind: EquilibriumKind::Mixed,
            price: Some(high_price),
            low_price: Some(low_price),
            alpha: Some(alpha),
            profit_g: Some(profit_g),
            profit_b: Some(profit_b),
            region: None,
            candidate_level: None,
            diagnostic: None,
        }
    }

    pub(crate) fn none(diagnostic: impl Into<String>) -> Self {
        EquilibriumOutcome {
            kind: EquilibriumKind::None,
            price: None,
            low_price: None,
            alpha: None,
            profit_g: None,
            profit_b: None,
            region: None,
            candidate_level: None,
            diagnostic: Some(diagnostic.into()),
        }
    }

    pub fn is_pooling(&self) -> bool {
        self.kind == EquilibriumKind::Pooling
    }

    pub fn is_mixed(&self) -> bool {
        self.kind == EquilibriumKind::Mixed
    }

    pub fn is_none(&self) -> bool {
        self.kind == EquilibriumKind::None
    }

    pub fn classification(&self) -> Classification {
        match self.kind {
            EquilibriumKind::Mixed => Classification::Mixed,
            EquilibriumKind::None => Classification::None,
            EquilibriumKind::Pooling => match self.region {
                Some(Region::R1) => Classification::R1,
                Some(Region::R2) => Classification::R2,
                Some(Region::R3) => Classification::R3,
                Some(Region::R4) => Classification::R4,
                None => Classification::L5,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_names_are_stable() {
        let o = EquilibriumOutcome::pooling(0.55, Some(3), 0.4675, 0.2475);
        let v = serde_json::to_value(&o).unwrap();
        assert_eq!(v["kind"], "pooling");
        assert_eq!(v["region"], "R3");
        assert_eq!(v["profit_G"], 0.4675);
        assert!(v["alpha"].is_null());
        let back: EquilibriumOutcome = serde_json::from_value(v).unwrap();
        assert_eq!(back, o);
    }

    #[test]
    fn classification_follows_kind() {
        assert_eq!(EquilibriumOutcome::none("x").classification(), Classification::None);
        assert_eq!(
            EquilibriumOutcome::mixed(0.88, 0.22, 0.5, 0.66, 0.22).classification(),
            Classification::Mixed
        );
        assert_eq!(
            EquilibriumOutcome::pooling(0.9, Some(5), 0.1, 0.1).classification(),
            Classification::L5
        );
        assert_eq!(Classification::Mixed.to_string(), "mixed");
    }
}
