use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: the rationals or a prime field of odd characteristic.
///
/// Characteristic 2 is rejected at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct FieldSpec {
    // 0 encodes the rationals.
    modulus: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { modulus: 0 };

    /// Largest accepted modulus; keeps products inside `u128` comfortably and
    /// primality testing by trial division cheap.
    pub const MAX_PRIME: u64 = 1 << 31;

    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField(
                "characteristic 2 is not supported".into(),
            ));
        }
        if p > Self::MAX_PRIME {
            return Err(Error::InvalidField(format!(
                "modulus {p} exceeds {}",
                Self::MAX_PRIME
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec { modulus: p })
    }

    pub fn kind(self) -> FieldKind {
        match self.modulus {
            0 => FieldKind::Rationals,
            p => FieldKind::Prime(p),
        }
    }

    /// 0 for the rationals, p otherwise.
    pub fn characteristic(self) -> u64 {
        self.modulus
    }

    pub fn is_rationals(self) -> bool {
        self.modulus == 0
    }

    /// True when the characteristic is 0 or at least `n`.
    pub fn allows_rewriting(self, n: usize) -> bool {
        self.modulus == 0 || self.modulus >= n as u64
    }

    /// Fails unless the characteristic is 0 or at least `n`.
    pub fn require_rewriting(self, n: usize) -> Result<()> {
        if self.allows_rewriting(n) {
            Ok(())
        } else {
            Err(Error::Characteristic(format!(
                "field {self} has characteristic below n = {n}"
            )))
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::RATIONALS);
        }
        let digits = s
            .strip_prefix('F')
            .ok_or_else(|| Error::InvalidField(format!("expected Q or F<p>, got {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus in {s:?}")))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}
