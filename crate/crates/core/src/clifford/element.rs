use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clifford::signature::{full_mask, Signature};
use crate::error::{Error, Result};

/// `Z^z e_A` in `Q(𝐭)`. Bit `i − 1` of `a` stands for generator `eᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VeeElement {
    pub z: bool,
    pub a: u64,
}

impl VeeElement {
    pub const ONE: VeeElement = VeeElement { z: false, a: 0 };
    pub const Z: VeeElement = VeeElement { z: true, a: 0 };

    pub fn new(z: bool, a: u64) -> Self {
        Self { z, a }
    }

    /// `e_A`
    pub fn e(a: u64) -> Self {
        Self { z: false, a }
    }

    /// The generator `eᵢ`, 1-indexed.
    pub fn generator(i: usize) -> Self {
        Self::e(1 << (i - 1))
    }

    /// `e_A` from 1-indexed generator numbers.
    pub fn from_indices(indices: &[usize]) -> Self {
        Self::e(indices.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }

    pub fn times_z(self) -> Self {
        Self { z: !self.z, a: self.a }
    }

    /// `|A| mod 2`
    pub fn degree(self) -> bool {
        self.a.count_ones() % 2 == 1
    }

    /// 1-indexed generators in `A`.
    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|i| self.a >> i & 1 == 1).map(|i| i + 1).collect()
    }

    /// Dense index `2A + z`, used for tables.
    pub fn index(self) -> usize {
        ((self.a as usize) << 1) | self.z as usize
    }

    pub fn from_index(k: usize) -> Self {
        Self { z: k & 1 == 1, a: (k >> 1) as u64 }
    }
}

/// `e_{12}`-style label of a subset; `1` for the empty set. Indices above 9
/// are separated by commas.
pub fn subset_label(a: u64) -> String {
    let idx: Vec<usize> = VeeElement::e(a).indices();
    match idx.len() {
        0 => "1".into(),
        1 => format!("e_{}", idx[0]),
        _ => {
            let sep = if idx.iter().any(|&i| i > 9) { "," } else { "" };
            let body: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            format!("e_{{{}}}", body.join(sep))
        }
    }
}

impl fmt::Display for VeeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.z, self.a) {
            (false, _) => f.write_str(&subset_label(self.a)),
            (true, 0) => f.write_str("Z"),
            (true, a) => write!(f, "Z {}", subset_label(a)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VeeJson {
    z: u8,
    #[serde(rename = "A")]
    a: Vec<usize>,
}

impl Serialize for VeeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VeeJson { z: self.z as u8, a: self.indices() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VeeElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = VeeJson::deserialize(d)?;
        if j.z > 1 {
            return Err(D::Error::custom("z must be 0 or 1"));
        }
        if j.a.iter().any(|&i| i == 0 || i > 64) {
            return Err(D::Error::custom("generator indices run from 1 to 64"));
        }
        Ok(VeeElement { z: j.z == 1, a: VeeElement::from_indices(&j.a).a })
    }
}

/// Parity of `|{(a, b) ∈ A × B : a > b}|`.
#[inline]
pub fn gamma_cocycle(a: u64, b: u64) -> bool {
    // For each b ∈ B count the elements of A above it.
    let mut parity = 0u32;
    let mut rest = b;
    while rest != 0 {
        let low = rest.trailing_zeros();
        let above = if low >= 63 { 0 } else { a >> (low + 1) };
        parity ^= above.count_ones();
        rest &= rest - 1;
    }
    parity & 1 == 1
}

/// `|{(a, b) ∈ A × B : a > b}|` as an integer.
pub fn inversion_count(a: u64, b: u64) -> u32 {
    let mut count = 0;
    let mut rest = a;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        count += (b & ((1u64 << bit) - 1)).count_ones();
        rest &= rest - 1;
    }
    count
}

/// `𝐭_S` as a bit: whether an odd number of `t_s`, `s ∈ S`, equal `Z`.
#[inline]
pub fn t_measure(sig: &Signature, s: u64) -> bool {
    (s & sig.zmask()).count_ones() % 2 == 1
}

impl Signature {
    /// `e_A e_B = 𝐭_{A∩B} γ(A,B) e_{AΔB}`, unchecked.
    #[inline]
    pub fn mul(&self, x: VeeElement, y: VeeElement) -> VeeElement {
        VeeElement {
            z: x.z ^ y.z ^ gamma_cocycle(x.a, y.a) ^ t_measure(self, x.a & y.a),
            a: x.a ^ y.a,
        }
    }

    #[inline]
    pub fn inv(&self, x: VeeElement) -> VeeElement {
        VeeElement { z: x.z ^ gamma_cocycle(x.a, x.a) ^ t_measure(self, x.a), a: x.a }
    }

    pub fn contains(&self, x: VeeElement) -> bool {
        x.a & !full_mask(self.n()) == 0
    }

    fn check(&self, x: VeeElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!(
                "{x} is not an element of Q({self}) with n = {}",
                self.n()
            )))
        }
    }
}

pub fn vee_mul(sig: &Signature, x: VeeElement, y: VeeElement) -> Result<VeeElement> {
    sig.check(x)?;
    sig.check(y)?;
    Ok(sig.mul(x, y))
}

pub fn vee_inverse(sig: &Signature, x: VeeElement) -> Result<VeeElement> {
    sig.check(x)?;
    Ok(sig.inv(x))
}

/// Order of `x`: 1, 2 or 4.
pub fn vee_order(sig: &Signature, x: VeeElement) -> Result<u32> {
    sig.check(x)?;
    Ok(if x == VeeElement::ONE {
        1
    } else if sig.mul(x, x) == VeeElement::ONE {
        2
    } else {
        4
    })
}

/// `e_A e_B e_A⁻¹ = Z^{|A||B| − |A∩B|} e_B`
pub fn conjugate(a: u64, b: u64) -> (bool, u64) {
    let ka = a.count_ones();
    let kb = b.count_ones();
    let k = (a & b).count_ones();
    ((ka * kb - k) % 2 == 1, b)
}
