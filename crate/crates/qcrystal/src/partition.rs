//! Strict partitions `λ_1 > λ_2 > ... > λ_r > 0`.
//!
//! Strict partitions label highest weight vectors and connected components.
//! The empty partition (r = 0) is allowed as a value, since it is the
//! highest weight of the one-node crystal `B^{⊗0}`; the textual parser used
//! by the CLI requires at least one part.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::word::Weight;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Checked constructor: parts must be strictly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        if !ok {
            return Err(Error::NotStrictPartition(parts));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `ℓ(λ) = r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ| = λ_1 + ... + λ_r`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Read a strict partition off a weight in `Λ⁺` (trailing zeros dropped).
    /// Returns `None` when the weight is not strictly dominant.
    pub fn from_weight(weight: &Weight) -> Option<Self> {
        if !weight.is_strict_dominant() {
            return None;
        }
        let parts = weight
            .coords()
            .iter()
            .take_while(|&&c| c > 0)
            .map(|&c| c as u32)
            .collect();
        Some(StrictPartition { parts })
    }

    /// Embed as a weight of rank `n`, padding with zeros. Fails when `r > n`.
    pub fn to_weight(&self, n: u8) -> Result<Weight, Error> {
        if self.len() > n as usize {
            return Err(Error::TooManyRows {
                rows: self.len(),
                n,
            });
        }
        let mut coords = vec![0i64; n as usize];
        for (k, &p) in self.parts.iter().enumerate() {
            coords[k] = p as i64;
        }
        Ok(Weight::new(coords))
    }

    /// All strict partitions of `size`, in increasing part-vector order.
    pub fn all_of_size(size: u32) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn go(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if remaining == 0 {
                out.push(StrictPartition { parts: stack.clone() });
                return;
            }
            let hi = remaining.min(max_part);
            for p in (1..=hi).rev() {
                stack.push(p);
                go(remaining - p, p.saturating_sub(1), stack, out);
                stack.pop();
            }
        }
        go(size, size, &mut stack, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    /// Comma-separated descending positive integers, e.g. `3,1`.
    /// Trailing zeros are rejected.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<u32> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid partition part {tok:?}")))
            })
            .collect::<Result<_, _>>()?;
        StrictPartition::new(parts)
    }
}
