use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::group_algebra::{GroupAlgebraElement, ZProjectors};
use crate::algebra::linalg::{half, rational, Rational};
use crate::clifford::{as_graded_group, inversion_count, subset_label, Signature, VeeElement};
use crate::error::{Error, Result};

/// Diagonal quadratic form `(t₁, …, tₙ)` with nonzero scalar entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordSignature {
    squares: Vec<Rational>,
}

impl CliffordSignature {
    pub fn new(squares: Vec<Rational>) -> Result<Self> {
        if squares.len() > 63 {
            return Err(Error::InvalidArgument(format!("n = {} exceeds 63", squares.len())));
        }
        if squares.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("quadratic form entries must be nonzero".into()));
        }
        Ok(Self { squares })
    }

    /// `tᵢ = +1` for flag `1` and `−1` for flag `Z`.
    pub fn from_signature(sig: &Signature) -> Self {
        let squares = sig.flags().into_iter().map(|z| rational(if z { -1 } else { 1 })).collect();
        Self { squares }
    }

    /// `(1, …, 1)`
    pub fn ones(n: usize) -> Self {
        Self { squares: vec![Rational::one(); n] }
    }

    pub fn n(&self) -> usize {
        self.squares.len()
    }

    pub fn squares(&self) -> &[Rational] {
        &self.squares
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        Self::new(self.squares.iter().chain(&other.squares).cloned().collect())
    }

    /// `e_A e_B = (−1)^{m(A,B)} ∏_{k∈A∩B} t_k · e_{AΔB}`
    pub fn basis_product(&self, a: u64, b: u64) -> (Rational, u64) {
        let mut c = if inversion_count(a, b).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let mut both = a & b;
        while both != 0 {
            c *= &self.squares[both.trailing_zeros() as usize];
            both &= both - 1;
        }
        (c, a ^ b)
    }
}

impl fmt::Display for CliffordSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.squares.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of `Cl_𝕂(𝐭)` in the Clifford basis `(e_A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    sig: Arc<CliffordSignature>,
    coeffs: BTreeMap<u64, Rational>,
}

impl CliffordElement {
    pub fn zero(sig: &Arc<CliffordSignature>) -> Self {
        Self { sig: sig.clone(), coeffs: BTreeMap::new() }
    }

    pub fn basis(sig: &Arc<CliffordSignature>, a: u64) -> Result<Self> {
        Self::from_terms(sig, [(a, Rational::one())])
    }

    pub fn scalar(sig: &Arc<CliffordSignature>, c: Rational) -> Self {
        Self::from_terms(sig, [(0, c)]).unwrap()
    }

    pub fn from_terms(sig: &Arc<CliffordSignature>, terms: impl IntoIterator<Item = (u64, Rational)>) -> Result<Self> {
        let mut out = Self::zero(sig);
        for (a, c) in terms {
            if a >> sig.n() != 0 {
                return Err(Error::SignatureMismatch(format!(
                    "{} is not a subset of 1..{}",
                    subset_label(a),
                    sig.n()
                )));
            }
            out.add_term(a, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, a: u64, c: Rational) {
        let entry = self.coeffs.entry(a).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    pub fn signature(&self) -> &Arc<CliffordSignature> {
        &self.sig
    }

    pub fn coeff(&self, a: u64) -> Rational {
        self.coeffs.get(&a).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.coeffs.iter().map(|(&a, c)| (a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient vector indexed by bitmask.
    pub fn to_dense(&self) -> Vec<Rational> {
        (0..self.sig.dim() as u64).map(|a| self.coeff(a)).collect()
    }

    /// Parity of a homogeneous element.
    pub fn parity(&self) -> Option<bool> {
        let mut parities = self.coeffs.keys().map(|a| a.count_ones() % 2 == 1);
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!("Cl{} vs Cl{}", self.sig, other.sig)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(a, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.sig);
        for (a, x) in self.terms() {
            out.add_term(a, x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        clifford_mul(self, other)
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&a, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let c = c.abs();
            let basis = subset_label(a);
            match (c.is_one(), a == 0) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{basis}")?,
                (false, true) => write!(f, "{c}")?,
                (false, false) => write!(f, "{c} {basis}")?,
            }
        }
        Ok(())
    }
}

/// Bilinear extension of the basis rule.
pub fn clifford_mul(x: &CliffordElement, y: &CliffordElement) -> Result<CliffordElement> {
    x.check(y)?;
    let mut out = CliffordElement::zero(&x.sig);
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            let (s, ab) = x.sig.basis_product(a, b);
            out.add_term(ab, s * c * d);
        }
    }
    Ok(out)
}

/// `e_A e_B = sign · e_{product}`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructureConstant {
    pub a: u64,
    pub b: u64,
    pub sign: i8,
    pub product: u64,
}

/// Structure constants of a `±1` table, row-major over `(A, B)`.
pub type StructureTable = Vec<StructureConstant>;

fn sign_of(c: &Rational) -> Option<i8> {
    if c.is_one() {
        Some(1)
    } else if *c == -Rational::one() {
        Some(-1)
    } else {
        None
    }
}

/// Constants of `Cl(𝐭)` with `tᵢ = ±1`.
pub fn clifford_structure_constants(sig: &Signature) -> Result<StructureTable> {
    let cs = CliffordSignature::from_signature(sig);
    check_table_size(sig)?;
    let dim = cs.dim() as u64;
    Ok((0..dim)
        .flat_map(|a| (0..dim).map(move |b| (a, b)))
        .map(|(a, b)| {
            let (c, product) = cs.basis_product(a, b);
            StructureConstant { a, b, sign: sign_of(&c).expect("±1 form"), product }
        })
        .collect())
}

/// Largest `n` for which structure tables are produced.
pub const TABLE_CAP: usize = 10;

fn check_table_size(sig: &Signature) -> Result<()> {
    if sig.n() > TABLE_CAP {
        return Err(Error::SizeCap { what: "structure table", size: 1 << (2 * sig.n()).min(62), cap: 1 << (2 * TABLE_CAP) });
    }
    Ok(())
}

/// Reads `P^∓δ_{e_A} * P^∓δ_{e_B} = ±P^∓δ_{e_C}` off `𝕂[Q(𝐭)]`.
fn ideal_structure_constants(sig: &Signature, plus: bool) -> Result<StructureTable> {
    let g = Arc::new(as_graded_group(sig)?);
    let p = ZProjectors::new(&g)?;
    let project = |f: &GroupAlgebraElement| if plus { p.plus(f) } else { p.minus(f) };
    let dim = 1u64 << sig.n();
    let basis: Vec<GroupAlgebraElement> = (0..dim)
        .map(|a| project(&GroupAlgebraElement::delta(&g, VeeElement::e(a).index())))
        .collect();
    let mut out = Vec::with_capacity(basis.len() * basis.len());
    for a in 0..dim {
        for b in 0..dim {
            let prod = basis[a as usize].mul(&basis[b as usize])?;
            let product = a ^ b;
            let c = prod.coeff(VeeElement::e(product).index()) / half();
            let sign = sign_of(&c)
                .filter(|&s| prod == basis[product as usize].scale(&rational(s as i64)))
                .ok_or_else(|| {
                    Error::InvalidGroup(format!("P δ_e_A * P δ_e_B is not ± a basis image for A={a}, B={b}"))
                })?;
            out.push(StructureConstant { a, b, sign, product });
        }
    }
    Ok(out)
}

/// Constants of `𝕂[Q(𝐭)]⁻` in the basis `P⁻δ_{e_A}`.
pub fn minus_ideal_structure_constants(sig: &Signature) -> Result<StructureTable> {
    ideal_structure_constants(sig, false)
}

/// Constants of `𝕂[Q(𝐭)]⁺` in the basis `P⁺δ_{e_A}`.
pub fn plus_ideal_structure_constants(sig: &Signature) -> Result<StructureTable> {
    ideal_structure_constants(sig, true)
}

/// `a ⊗ b ↦ Σ a_A b_B e_{A ∪ (B + |𝐭|)}` in `Cl(𝐭 ⊕ 𝐬)`.
pub fn graded_tensor(a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement> {
    let n = a.sig.n();
    let sig = Arc::new(a.sig.concat(&b.sig)?);
    let mut out = CliffordElement::zero(&sig);
    for (x, c) in a.terms() {
        for (y, d) in b.terms() {
            out.add_term(x | (y << n), c * d);
        }
    }
    Ok(out)
}

/// `(a ⊗ b)(a′ ⊗ b′) = (−1)^{|b||a′|} aa′ ⊗ bb′` on basis constants.
pub fn graded_tensor_constants(t: &StructureTable, s: &StructureTable, t_n: usize, s_n: usize) -> StructureTable {
    let t_dim = 1usize << t_n;
    let s_dim = 1usize << s_n;
    let at = |tab: &StructureTable, dim: usize, a: u64, b: u64| tab[a as usize * dim + b as usize];
    let dim = (t_dim * s_dim) as u64;
    let low = (t_dim - 1) as u64;
    let mut out = Vec::with_capacity((dim * dim) as usize);
    for x in 0..dim {
        for y in 0..dim {
            let (a, b) = (x & low, x >> t_n);
            let (a2, b2) = (y & low, y >> t_n);
            let ct = at(t, t_dim, a, a2);
            let cs = at(s, s_dim, b, b2);
            let twist = if (b.count_ones() * a2.count_ones()) % 2 == 1 { -1 } else { 1 };
            out.push(StructureConstant {
                a: x,
                b: y,
                sign: twist * ct.sign * cs.sign,
                product: ct.product | (cs.product << t_n),
            });
        }
    }
    out
}

/// Algebra morphism `Cl(t₁², …, tₙ²) → Cl(1, …, 1)`, `e_A ↦ (∏_{a∈A} t_a) e_A`.
pub fn anchor(roots: &[Rational], x: &CliffordElement) -> Result<CliffordElement> {
    let squares: Vec<Rational> = roots.iter().map(|t| t * t).collect();
    if x.sig.squares() != squares.as_slice() {
        return Err(Error::SignatureMismatch(format!(
            "roots do not square to the form Cl{}",
            x.sig
        )));
    }
    let target = Arc::new(CliffordSignature::ones(roots.len()));
    let mut out = CliffordElement::zero(&target);
    for (a, c) in x.terms() {
        let scale = (0..roots.len()).filter(|i| a >> i & 1 == 1).fold(Rational::one(), |acc, i| acc * &roots[i]);
        out.add_term(a, c * scale);
    }
    Ok(out)
}
