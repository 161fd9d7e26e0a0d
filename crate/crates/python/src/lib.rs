//! Python bindings for the discrete Clifford groups `Q(t)`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use pyo3::create_exception;
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use graded_clifford::algebra::{
    central_function_basis, character_table, clifford_center, clifford_structure_constants, idempotent_constant,
};
use graded_clifford::classify::{automorphism_count, normal_form, periodic_table};
use graded_clifford::clifford::{
    as_graded_group, center, commutator_subgroup, conjugacy_classes, elements, even_part, subset_label,
    VeeElement as CoreElement,
};
use graded_clifford::Error;

create_exception!(graded_clifford_py, SizeCapError, PyValueError);

/// `(name, [(element, coefficient)])`
pub type CentralFunction = (String, Vec<(String, String)>);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::SizeCap { .. } => SizeCapError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An element `Z^z e_A` of `Q(t)`.
#[pyclass(name = "VeeElement", frozen, eq, hash, skip_from_py_object)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PyVeeElement {
    inner: CoreElement,
}

impl From<CoreElement> for PyVeeElement {
    fn from(inner: CoreElement) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyVeeElement {
    /// `Z^z e_{i₁} ⋯ e_{iₖ}` for increasing 1-based indices.
    #[new]
    #[pyo3(signature = (indices = Vec::new(), z = false))]
    pub fn new(indices: Vec<usize>, z: bool) -> PyResult<Self> {
        if indices.iter().any(|&i| i == 0 || i > 64) {
            return Err(PyIndexError::new_err("generator indices run from 1 to 64"));
        }
        let e = CoreElement::from_indices(&indices);
        Ok(CoreElement::new(z, e.a).into())
    }

    #[getter]
    pub fn z(&self) -> bool {
        self.inner.z
    }

    #[getter]
    pub fn indices(&self) -> Vec<usize> {
        self.inner.indices()
    }

    /// Dense index `2A + z`.
    #[getter]
    pub fn index(&self) -> usize {
        self.inner.index()
    }

    /// `true` for odd elements.
    #[getter]
    pub fn degree(&self) -> bool {
        self.inner.degree()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("VeeElement({:?}, z={})", self.inner.indices(), if self.inner.z { "True" } else { "False" })
    }
}

/// A signature `t = (t₁, …, tₙ)` with `tᵢ ∈ {1, Z}`.
#[pyclass(name = "Signature", frozen, eq, skip_from_py_object)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PySignature {
    inner: graded_clifford::clifford::Signature,
}

impl PySignature {
    fn element(&self, x: &PyVeeElement) -> PyResult<CoreElement> {
        if x.inner.a & !self.inner.full() != 0 {
            return Err(PyValueError::new_err(format!("{} is not in Q({})", x.inner, self.spec())));
        }
        Ok(x.inner)
    }

    fn spec(&self) -> String {
        self.inner.flags().iter().map(|&t| if t { "Z" } else { "1" }).collect::<Vec<_>>().join(",")
    }
}

#[pymethods]
impl PySignature {
    /// Parse comma separated tokens `1` and `Z`.
    #[new]
    pub fn new(spec: &str) -> PyResult<Self> {
        Ok(Self { inner: spec.parse().map_err(to_py)? })
    }

    /// `p` ones followed by `q` copies of `Z`.
    #[staticmethod]
    pub fn pq(p: usize, q: usize) -> PyResult<Self> {
        Ok(Self { inner: graded_clifford::clifford::Signature::pq(p, q).map_err(to_py)? })
    }

    #[getter]
    pub fn n(&self) -> usize {
        self.inner.n()
    }

    /// `True` where `tᵢ = Z`.
    #[getter]
    pub fn flags(&self) -> Vec<bool> {
        self.inner.flags()
    }

    /// Counts of `1` and `Z`.
    #[getter]
    pub fn counts(&self) -> (usize, usize) {
        self.inner.counts()
    }

    /// `|Q(t)| = 2^{n+1}`
    #[getter]
    pub fn order(&self) -> u128 {
        self.inner.order()
    }

    pub fn mul(&self, x: PyRef<'_, PyVeeElement>, y: PyRef<'_, PyVeeElement>) -> PyResult<PyVeeElement> {
        Ok(self.inner.mul(self.element(&x)?, self.element(&y)?).into())
    }

    pub fn inv(&self, x: PyRef<'_, PyVeeElement>) -> PyResult<PyVeeElement> {
        Ok(self.inner.inv(self.element(&x)?).into())
    }

    pub fn elements(&self) -> PyResult<Vec<PyVeeElement>> {
        Ok(elements(&self.inner).map_err(to_py)?.into_iter().map(Into::into).collect())
    }

    /// Center elements and the tag `C_2`, `C_4` or `C_2^2`.
    pub fn center(&self) -> PyResult<(Vec<PyVeeElement>, String)> {
        let c = center(&self.inner).map_err(to_py)?;
        Ok((c.elements.into_iter().map(Into::into).collect(), c.iso.to_string()))
    }

    pub fn conjugacy_classes(&self) -> PyResult<Vec<Vec<PyVeeElement>>> {
        Ok(conjugacy_classes(&self.inner)
            .map_err(to_py)?
            .into_iter()
            .map(|c| c.into_iter().map(Into::into).collect())
            .collect())
    }

    pub fn commutator_subgroup(&self) -> PyResult<Vec<PyVeeElement>> {
        Ok(commutator_subgroup(&self.inner).map_err(to_py)?.into_iter().map(Into::into).collect())
    }

    /// Signature whose group is the even subgroup; needs `n ≥ 2`.
    pub fn even_part(&self) -> PyResult<Self> {
        Ok(Self { inner: even_part(&self.inner).map_err(to_py)? })
    }

    /// Normal form label such as `D^2 Q`.
    pub fn normal_form(&self) -> String {
        let (p, q) = self.inner.counts();
        normal_form(p, q).label()
    }

    /// Paired Clifford algebra label such as `M_2(H_K)`.
    pub fn algebra(&self) -> String {
        let (p, q) = self.inner.counts();
        normal_form(p, q).algebra_label()
    }

    /// `|Aut(Q(t))|` by exhaustive search.
    pub fn automorphism_count(&self) -> PyResult<usize> {
        let g = as_graded_group(&self.inner).map_err(to_py)?;
        automorphism_count(&g).map_err(to_py)
    }

    /// Multiplication table in the order of `elements()`, as labels.
    pub fn table(&self) -> PyResult<Vec<Vec<String>>> {
        let all = elements(&self.inner).map_err(to_py)?;
        Ok(all.iter().map(|&x| all.iter().map(|&y| self.inner.mul(x, y).to_string()).collect()).collect())
    }

    /// `(A, B, sign, A Δ B)` as bitmasks, row-major.
    pub fn structure_constants(&self) -> PyResult<Vec<(u64, u64, i8, u64)>> {
        Ok(clifford_structure_constants(&self.inner)
            .map_err(to_py)?
            .into_iter()
            .map(|c| (c.a, c.b, c.sign, c.product))
            .collect())
    }

    /// Central-function basis as `(name, [(element, coefficient)])`.
    pub fn central_functions(&self) -> PyResult<Vec<CentralFunction>> {
        let g = as_graded_group(&self.inner).map_err(to_py)?;
        Ok(central_function_basis(&self.inner)
            .map_err(to_py)?
            .into_iter()
            .map(|f| {
                let terms = f.element.terms().map(|(i, c)| (g.name(i).to_string(), c.to_string())).collect();
                (f.name, terms)
            })
            .collect())
    }

    /// `c` with `E_A⁺ E_B⁺ = c [A = B] E_A⁺`, as a string.
    pub fn idempotent_constant(&self) -> PyResult<Option<String>> {
        Ok(idempotent_constant(&self.inner).map_err(to_py)?.map(|c| c.to_string()))
    }

    /// Basis of the center of `Cl(t)`.
    pub fn clifford_center(&self) -> PyResult<Vec<String>> {
        Ok(clifford_center(&self.inner).map_err(to_py)?.iter().map(|x| x.to_string()).collect())
    }

    fn __str__(&self) -> String {
        format!("({})", self.spec())
    }

    fn __repr__(&self) -> String {
        format!("Signature({:?})", self.spec())
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

/// Normal form label of `Q_{p,q}`.
#[pyfunction(name = "normal_form")]
pub fn py_normal_form(p: usize, q: usize) -> String {
    normal_form(p, q).label()
}

/// Rows `(p, q, normal_form, order, algebra)` for `p + q ≤ max_n`.
#[pyfunction(name = "periodic_table")]
pub fn py_periodic_table(max_n: usize) -> Vec<(usize, usize, String, u128, String)> {
    periodic_table(max_n)
        .entries()
        .map(|e| (e.p, e.q, e.normal_form.label(), e.order, e.algebra.clone()))
        .collect()
}

/// `(χ_A(B))` with subsets ordered by bitmask.
#[pyfunction(name = "character_table")]
pub fn py_character_table(n: usize) -> PyResult<Vec<Vec<i8>>> {
    character_table(n).map_err(to_py)
}

/// `e_{12}`-style label of a bitmask.
#[pyfunction(name = "subset_label")]
pub fn py_subset_label(a: u64) -> String {
    subset_label(a)
}

#[pymodule]
fn graded_clifford_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySignature>()?;
    m.add_class::<PyVeeElement>()?;
    m.add("SizeCapError", m.py().get_type::<SizeCapError>())?;
    m.add_function(wrap_pyfunction!(py_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(py_periodic_table, m)?)?;
    m.add_function(wrap_pyfunction!(py_character_table, m)?)?;
    m.add_function(wrap_pyfunction!(py_subset_label, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_outside_the_signature_are_rejected() {
        let sig = PySignature::new("1,Z").unwrap();
        assert!(sig.element(&PyVeeElement::new(vec![2], true).unwrap()).is_ok());
        assert!(sig.element(&PyVeeElement::new(vec![3], false).unwrap()).is_err());
        assert!(PyVeeElement::new(vec![0], false).is_err());
    }

    #[test]
    fn spec_round_trips() {
        for s in ["", "Z", "1,Z,Z"] {
            assert_eq!(PySignature::new(s).unwrap().spec(), s);
        }
        assert_eq!(PySignature::pq(1, 1).unwrap().__str__(), "(1,Z)");
    }
}
