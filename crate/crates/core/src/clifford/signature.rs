use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported number of generators (one bit per generator).
pub const MAX_N: usize = 64;

/// Largest `n` for operations that enumerate all `2^{n+1}` elements.
pub const ENUMERATION_CAP: usize = 20;

/// `𝐭 = (t₁, …, tₙ) ∈ {1, Z}ⁿ`. Bit `i − 1` of `zmask` is set when `tᵢ = Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    n: usize,
    zmask: u64,
}

impl Signature {
    pub fn new(n: usize, zmask: u64) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::SizeCap { what: "signature length", size: n, cap: MAX_N });
        }
        if zmask & !full_mask(n) != 0 {
            return Err(Error::InvalidArgument(format!("flag mask {zmask:#x} exceeds n = {n}")));
        }
        Ok(Self { n, zmask })
    }

    /// `tᵢ = Z` exactly where `flags[i − 1]` is true.
    pub fn from_flags(flags: &[bool]) -> Result<Self> {
        let mask = flags
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        if flags.len() > MAX_N {
            return Err(Error::SizeCap { what: "signature length", size: flags.len(), cap: MAX_N });
        }
        Self::new(flags.len(), mask)
    }

    /// `Q_{p,q}`: `p` entries `1` followed by `q` entries `Z`.
    pub fn pq(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n > MAX_N {
            return Err(Error::SizeCap { what: "signature length", size: n, cap: MAX_N });
        }
        Self::new(n, full_mask(n) & !full_mask(p))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zmask(&self) -> u64 {
        self.zmask
    }

    /// All subsets of `{1..n}`.
    pub fn full(&self) -> u64 {
        full_mask(self.n)
    }

    /// `tᵢ` as a bit (1-indexed).
    pub fn t(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.n, "generator index out of range");
        self.zmask >> (i - 1) & 1 == 1
    }

    pub fn flags(&self) -> Vec<bool> {
        (1..=self.n).map(|i| self.t(i)).collect()
    }

    /// `(p, q)` = (number of `1`s, number of `Z`s).
    pub fn counts(&self) -> (usize, usize) {
        let q = self.zmask.count_ones() as usize;
        (self.n - q, q)
    }

    pub fn all_equal(&self) -> bool {
        self.zmask == 0 || self.zmask == self.full()
    }

    /// `𝐭 ⊕ 𝐬`
    pub fn concat(&self, other: &Signature) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_N {
            return Err(Error::SizeCap { what: "signature length", size: n, cap: MAX_N });
        }
        Self::new(n, self.zmask | other.zmask.checked_shl(self.n as u32).unwrap_or(0))
    }

    /// Entries `start..end` (0-indexed, half open).
    pub fn slice(&self, start: usize, end: usize) -> Result<Self> {
        if start > end || end > self.n {
            return Err(Error::InvalidArgument(format!("bad slice {start}..{end} of n = {}", self.n)));
        }
        Self::new(end - start, (self.zmask >> start) & full_mask(end - start))
    }

    pub fn check_enumerable(&self) -> Result<()> {
        if self.n > ENUMERATION_CAP {
            return Err(Error::SizeCap {
                what: "enumeration of Q(t)",
                size: self.n,
                cap: ENUMERATION_CAP,
            });
        }
        Ok(())
    }

    /// Number of elements, `2^{n+1}`.
    pub fn order(&self) -> u128 {
        1u128 << (self.n + 1)
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.flags().iter().map(|&z| if z { "Z" } else { "1" }).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Comma separated tokens `1` / `Z`; the empty string is `n = 0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Self::new(0, 0);
        }
        let flags = s
            .split(',')
            .map(|tok| match tok.trim() {
                "1" => Ok(false),
                "Z" | "z" => Ok(true),
                other => Err(Error::Parse(format!("unknown signature token {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_flags(&flags)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_layout() {
        let s = Signature::pq(2, 3).unwrap();
        assert_eq!(s.to_string(), "1,1,Z,Z,Z");
        assert_eq!(s.counts(), (2, 3));
        assert!(!s.t(2) && s.t(3));
    }

    #[test]
    fn parse_round_trip() {
        for text in ["", "1", "Z", "1,Z,Z", "Z,1"] {
            let s: Signature = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert!(matches!("1,X".parse::<Signature>(), Err(Error::Parse(_))));
    }

    #[test]
    fn concat_is_associative() {
        let t: Signature = "1,Z".parse().unwrap();
        let s: Signature = "Z".parse().unwrap();
        let r: Signature = "1,1,Z".parse().unwrap();
        let left = t.concat(&s).unwrap().concat(&r).unwrap();
        let right = t.concat(&s.concat(&r).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.to_string(), "1,Z,Z,1,1,Z");
    }

    #[test]
    fn caps() {
        assert!(Signature::pq(64, 0).is_ok());
        assert!(matches!(Signature::pq(40, 25), Err(Error::SizeCap { .. })));
        assert!(Signature::pq(21, 0).unwrap().check_enumerable().is_err());
    }
}
