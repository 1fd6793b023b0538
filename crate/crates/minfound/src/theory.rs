//! Theory descriptors: which member of the family a derivation is checked in.
//!
//! A theory is a base level (intensional or extensional) plus independent
//! axiom/rule flags. The concrete rule inventory for a descriptor lives in
//! [`crate::rules`]; this module only names theories and validates flag
//! combinations.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The four kinds, with their inclusion square:
/// `PropS <= Prop <= Col` and `PropS <= Set <= Col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    PropS,
    Prop,
    Set,
    Col,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::PropS => "props",
            Kind::Prop => "prop",
            Kind::Set => "set",
            Kind::Col => "col",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "props" => Some(Kind::PropS),
            "prop" => Some(Kind::Prop),
            "set" => Some(Kind::Set),
            "col" => Some(Kind::Col),
            _ => None,
        }
    }

    /// Reflexive-transitive inclusion order of the square.
    pub fn included_in(self, other: Kind) -> bool {
        use Kind::*;
        self == other
            || matches!(
                (self, other),
                (PropS, Prop) | (PropS, Set) | (PropS, Col) | (Prop, Col) | (Set, Col)
            )
    }

    pub fn is_prop_kind(self) -> bool {
        matches!(self, Kind::PropS | Kind::Prop)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Base level of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoryBase {
    /// Intensional level: tagged proof terms, intensional Id, Prop_s universe.
    Mtt,
    /// Extensional level: equality reflection, quotients, P(1), proof
    /// irrelevance via the single proof term `true`.
    Emtt,
}

impl TheoryBase {
    pub fn name(self) -> &'static str {
        match self {
            TheoryBase::Mtt => "mtt",
            TheoryBase::Emtt => "emtt",
        }
    }
}

/// A member of the family: base plus flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TheoryDesc {
    pub base: TheoryBase,
    /// Excluded-middle rule `phi prop |- phi \/ not phi true` (extensional only).
    pub lem: bool,
    /// Propositional extensionality rules (both the prop and the prop_s form).
    pub propext: bool,
    /// Resizing rules: every collection is a set, every proposition is small.
    pub resizing: bool,
    /// The typed classical constant `lem` (intensional only).
    pub lem_constant: bool,
    /// Congruence rules for types and terms. Always present extensionally;
    /// on the intensional level only with this flag (the `_imp` variants).
    pub congruence: bool,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TheoryError {
    #[error("the LEM rule belongs to the extensional level only")]
    LemOnMtt,
    #[error("the lem constant belongs to the intensional level only")]
    LemConstantOnEmtt,
    #[error("unknown theory name `{0}`")]
    UnknownName(String),
    #[error("unknown theory flag `{0}`")]
    UnknownFlag(String),
}

impl TheoryDesc {
    pub fn new(base: TheoryBase) -> Self {
        TheoryDesc {
            base,
            lem: false,
            propext: false,
            resizing: false,
            lem_constant: false,
            congruence: base == TheoryBase::Emtt,
        }
    }

    pub fn mtt() -> Self {
        Self::new(TheoryBase::Mtt)
    }

    pub fn emtt() -> Self {
        Self::new(TheoryBase::Emtt)
    }

    /// Classical extensional level: emTT plus the LEM rule.
    pub fn emtt_c() -> Self {
        TheoryDesc { lem: true, ..Self::emtt() }
    }

    pub fn with_propext(self) -> Self {
        TheoryDesc { propext: true, ..self }
    }

    pub fn with_resizing(self) -> Self {
        TheoryDesc { resizing: true, ..self }
    }

    pub fn with_lem(self) -> Self {
        TheoryDesc { lem: true, ..self }
    }

    pub fn with_lem_constant(self) -> Self {
        TheoryDesc { lem_constant: true, ..self }
    }

    pub fn with_congruence(self) -> Self {
        TheoryDesc { congruence: true, ..self }
    }

    /// The impredicative intensional theory: congruence plus resizing.
    pub fn cc_ml() -> Self {
        Self::mtt().with_congruence().with_resizing()
    }

    /// Its classical extension by the typed constant.
    pub fn cc_ml_c() -> Self {
        Self::cc_ml().with_lem_constant()
    }

    pub fn validate(&self) -> Result<(), TheoryError> {
        if self.lem && self.base == TheoryBase::Mtt {
            return Err(TheoryError::LemOnMtt);
        }
        if self.lem_constant && self.base == TheoryBase::Emtt {
            return Err(TheoryError::LemConstantOnEmtt);
        }
        Ok(())
    }

    /// Canonical surface name: base, then `c` for LEM, then sorted flag
    /// suffixes. Examples: `emtt`, `emttc`, `emtt-propext`, `mtt-imp`,
    /// `cc-ml`, `cc-ml-c`.
    pub fn name(&self) -> String {
        // The two impredicative intensional presets get their short names.
        if self.base == TheoryBase::Mtt && self.congruence && self.resizing && !self.propext {
            return if self.lem_constant { "cc-ml-c".into() } else { "cc-ml".into() };
        }
        let mut s = String::from(self.base.name());
        if self.lem {
            s.push('c');
        }
        if self.base == TheoryBase::Mtt && self.congruence {
            s.push_str("-cong");
        }
        if self.resizing {
            s.push_str("-imp");
        }
        if self.propext {
            s.push_str("-propext");
        }
        if self.lem_constant {
            s.push_str("-lemconst");
        }
        s
    }

    /// Parse a canonical name produced by [`TheoryDesc::name`].
    pub fn parse(s: &str) -> Result<Self, TheoryError> {
        let mut rest = s;
        let mut t;
        if let Some(r) = rest.strip_prefix("cc-ml") {
            t = Self::cc_ml();
            rest = r;
            if let Some(r) = rest.strip_prefix("-c") {
                t = t.with_lem_constant();
                rest = r;
            }
        } else if let Some(r) = rest.strip_prefix("emttc") {
            t = Self::emtt_c();
            rest = r;
        } else if let Some(r) = rest.strip_prefix("emtt") {
            t = Self::emtt();
            rest = r;
        } else if let Some(r) = rest.strip_prefix("mtt") {
            t = Self::mtt();
            rest = r;
        } else {
            return Err(TheoryError::UnknownName(s.into()));
        }
        while !rest.is_empty() {
            let r = rest.strip_prefix('-').unwrap_or(rest);
            if let Some(r2) = r.strip_prefix("propext") {
                t = t.with_propext();
                rest = r2;
            } else if let Some(r2) = r.strip_prefix("imp") {
                t = t.with_resizing();
                rest = r2;
            } else if let Some(r2) = r.strip_prefix("cong") {
                t = t.with_congruence();
                rest = r2;
            } else if let Some(r2) = r.strip_prefix("lemconst") {
                t = t.with_lem_constant();
                rest = r2;
            } else {
                return Err(TheoryError::UnknownName(s.into()));
            }
        }
        t.validate()?;
        Ok(t)
    }

    /// Apply one surface flag keyword (the `.mf` header form).
    pub fn apply_flag(self, flag: &str) -> Result<Self, TheoryError> {
        let t = match flag {
            "lem" => {
                if self.base == TheoryBase::Mtt {
                    return Err(TheoryError::LemOnMtt);
                }
                self.with_lem()
            }
            "propext" => self.with_propext(),
            "resizing" | "impredicative" => self.with_resizing(),
            "congruence" => self.with_congruence(),
            "lem-constant" => {
                if self.base == TheoryBase::Emtt {
                    return Err(TheoryError::LemConstantOnEmtt);
                }
                self.with_lem_constant()
            }
            other => return Err(TheoryError::UnknownFlag(other.into())),
        };
        Ok(t)
    }
}

impl fmt::Display for TheoryDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_square() {
        assert!(Kind::PropS.included_in(Kind::Set));
        assert!(Kind::PropS.included_in(Kind::Prop));
        assert!(Kind::Set.included_in(Kind::Col));
        assert!(Kind::Prop.included_in(Kind::Col));
        assert!(!Kind::Prop.included_in(Kind::Set));
        assert!(!Kind::Set.included_in(Kind::Prop));
        assert!(!Kind::Col.included_in(Kind::Set));
    }

    #[test]
    fn names_round_trip() {
        for t in [
            TheoryDesc::mtt(),
            TheoryDesc::emtt(),
            TheoryDesc::emtt_c(),
            TheoryDesc::emtt().with_propext(),
            TheoryDesc::emtt_c().with_propext(),
            TheoryDesc::emtt().with_resizing(),
            TheoryDesc::emtt_c().with_resizing().with_propext(),
            TheoryDesc::cc_ml(),
            TheoryDesc::cc_ml_c(),
            TheoryDesc::mtt().with_congruence(),
        ] {
            let name = t.name();
            assert_eq!(TheoryDesc::parse(&name).unwrap(), t, "{name}");
        }
    }

    #[test]
    fn flag_sanity() {
        assert!(TheoryDesc::parse("mttc").is_err());
        assert_eq!(TheoryDesc::parse("emttc").unwrap(), TheoryDesc::emtt_c());
        assert!(TheoryDesc::mtt().with_lem().validate().is_err());
        assert!(TheoryDesc::emtt().with_lem_constant().validate().is_err());
        assert!(TheoryDesc::emtt().congruence);
        assert!(!TheoryDesc::mtt().congruence);
    }
}
