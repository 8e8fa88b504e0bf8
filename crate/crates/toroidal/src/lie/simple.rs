//! Finite-dimensional simple Lie algebras presented by structure-constant tables.
//!
//! The crate ships sl₂ and sl₃, both generated from explicit trace-zero
//! matrices so the table, the invariant form (trace form, giving long roots
//! squared length 2), and the designated root vectors are all computed rather
//! than transcribed. Any user table passing [`SimpleLieData::validate`] works
//! in their place.

use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::Scalar;

/// Coefficient vector of a 𝔤-element over the fixed basis.
pub type GVector = Vec<Scalar>;

/// A simple Lie algebra: structure constants, invariant form, designated
/// root vectors and Cartan indices, plus an optional stored nilpotent basis.
#[derive(Clone)]
pub struct SimpleLieData {
    name: String,
    dim: usize,
    labels: Vec<String>,
    /// bracket_table[i][j] = coefficients of [bᵢ, bⱼ] over the basis.
    bracket_table: Vec<Vec<GVector>>,
    form_matrix: Vec<Vec<Scalar>>,
    root_vectors: Vec<usize>,
    cartan: Vec<usize>,
    nilpotent: Option<Vec<GVector>>,
}

/// JSON table format for user-supplied algebras.
#[derive(Deserialize)]
struct AlgebraTable {
    #[serde(default)]
    name: Option<String>,
    dimension: usize,
    /// Entries [i, j, k, "c"] meaning [bᵢ,bⱼ] has coefficient c on bₖ.
    brackets: Vec<(usize, usize, usize, String)>,
    form: Vec<Vec<String>>,
    root_vectors: Vec<usize>,
    cartan: Vec<usize>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl SimpleLieData {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn root_vectors(&self) -> &[usize] {
        &self.root_vectors
    }

    pub fn cartan(&self) -> &[usize] {
        &self.cartan
    }

    /// Coefficients of [bᵢ, bⱼ] over the basis.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &GVector {
        &self.bracket_table[i][j]
    }

    /// Bilinear extension of the bracket to coefficient vectors.
    pub fn bracket_g(&self, a: &GVector, b: &GVector) -> GVector {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca * cb;
                for (k, t) in self.bracket_table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &(&c * t);
                    }
                }
            }
        }
        out
    }

    pub fn form_basis(&self, i: usize, j: usize) -> &Scalar {
        &self.form_matrix[i][j]
    }

    /// The normalized invariant form ⟨a, b⟩, extended bilinearly.
    pub fn invariant_form(&self, a: &GVector, b: &GVector) -> Result<Scalar> {
        if a.len() != self.dim || b.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: if a.len() != self.dim { a.len() } else { b.len() },
            });
        }
        let mut acc = Scalar::zero();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    acc += &(&(ca * cb) * &self.form_matrix[i][j]);
                }
            }
        }
        Ok(acc)
    }

    /// Unit coefficient vector for basis element i.
    pub fn basis_vector(&self, i: usize) -> GVector {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    /// A basis {a₁,…,a_l} with `⟨aᵢ,aᵢ⟩ = 0` and `[aᵢ,aᵢ] = 0`, so that every
    /// mode pair aᵢ(n₀,n̲), aᵢ(m₀,m̲) commutes. Both conditions and linear
    /// independence are re-verified on every call before returning.
    pub fn nilpotent_basis(&self) -> Result<Vec<GVector>> {
        let basis = self
            .nilpotent
            .clone()
            .ok_or_else(|| Error::BasisSearchFailed(self.name.clone()))?;
        if basis.len() != self.dim {
            return Err(Error::BasisSearchFailed(self.name.clone()));
        }
        for a in &basis {
            if !self.invariant_form(a, a)?.is_zero() {
                return Err(Error::BasisSearchFailed(self.name.clone()));
            }
            if self.bracket_g(a, a).iter().any(|c| !c.is_zero()) {
                return Err(Error::BasisSearchFailed(self.name.clone()));
            }
        }
        if rank(&basis) != self.dim {
            return Err(Error::BasisSearchFailed(self.name.clone()));
        }
        Ok(basis)
    }

    /// Checks every invariant the table is supposed to satisfy:
    /// antisymmetry, the Jacobi identity on all basis triples, symmetry and
    /// invariance of the form, and isotropy of the designated root vectors.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        let fail = |msg: String| Err(Error::InvalidAlgebra(msg));
        if self.bracket_table.len() != d
            || self.bracket_table.iter().any(|row| row.len() != d)
            || self.form_matrix.len() != d
            || self.form_matrix.iter().any(|row| row.len() != d)
            || self.labels.len() != d
        {
            return fail("table dimensions inconsistent".into());
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let sum = &self.bracket_table[i][j][k] + &self.bracket_table[j][i][k];
                    if !sum.is_zero() {
                        return fail(format!("antisymmetry fails at [{i},{j}] -> {k}"));
                    }
                }
                if self.form_matrix[i][j] != self.form_matrix[j][i] {
                    return fail(format!("form not symmetric at ({i},{j})"));
                }
            }
        }
        // Jacobi on basis triples
        for i in 0..d {
            let bi = self.basis_vector(i);
            for j in 0..d {
                let bj = self.basis_vector(j);
                for k in 0..d {
                    let bk = self.basis_vector(k);
                    let mut acc = self.bracket_g(&bi, &self.bracket_g(&bj, &bk));
                    for (t, c) in self.bracket_g(&bj, &self.bracket_g(&bk, &bi)).into_iter().enumerate() {
                        acc[t] += &c;
                    }
                    for (t, c) in self.bracket_g(&bk, &self.bracket_g(&bi, &bj)).into_iter().enumerate() {
                        acc[t] += &c;
                    }
                    if acc.iter().any(|c| !c.is_zero()) {
                        return fail(format!("Jacobi fails at ({i},{j},{k})"));
                    }
                }
            }
        }
        // invariance <[a,b],c> = <a,[b,c]>
        for i in 0..d {
            let bi = self.basis_vector(i);
            for j in 0..d {
                let bj = self.basis_vector(j);
                for k in 0..d {
                    let bk = self.basis_vector(k);
                    let lhs = self.invariant_form(&self.bracket_g(&bi, &bj), &bk)?;
                    let rhs = self.invariant_form(&bi, &self.bracket_g(&bj, &bk))?;
                    if lhs != rhs {
                        return fail(format!("form invariance fails at ({i},{j},{k})"));
                    }
                }
            }
        }
        for &rv in &self.root_vectors {
            if rv >= d {
                return fail(format!("root vector index {rv} out of range"));
            }
            if !self.form_matrix[rv][rv].is_zero() {
                return fail(format!("root vector {rv} not isotropic"));
            }
        }
        for &c in &self.cartan {
            if c >= d {
                return fail(format!("cartan index {c} out of range"));
            }
        }
        Ok(())
    }

    /// Loads a user table from JSON and validates it.
    pub fn from_json(value: &serde_json::Value) -> Result<Arc<SimpleLieData>> {
        let table: AlgebraTable = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidDescriptor(format!("algebra table: {e}")))?;
        let d = table.dimension;
        let mut bracket_table = vec![vec![vec![Scalar::zero(); d]; d]; d];
        for (i, j, k, c) in &table.brackets {
            if *i >= d || *j >= d || *k >= d {
                return Err(Error::InvalidDescriptor(format!(
                    "bracket entry ({i},{j},{k}) out of range"
                )));
            }
            bracket_table[*i][*j][*k] = c.parse()?;
        }
        let mut form_matrix = vec![vec![Scalar::zero(); d]; d];
        for (i, row) in table.form.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                form_matrix[i][j] = c.parse()?;
            }
        }
        let labels = table
            .labels
            .unwrap_or_else(|| (0..d).map(|i| format!("b{i}")).collect());
        let data = SimpleLieData {
            name: table.name.unwrap_or_else(|| "custom".into()),
            dim: d,
            labels,
            bracket_table,
            form_matrix,
            root_vectors: table.root_vectors,
            cartan: table.cartan,
            nilpotent: None,
        };
        data.validate()?;
        Ok(Arc::new(data))
    }

    /// sl₂ with basis e, f, h and the trace form (⟨e,f⟩ = 1, ⟨h,h⟩ = 2).
    pub fn sl2() -> Arc<SimpleLieData> {
        sl_n(2)
    }

    /// sl₃ with basis e1,e2,e3,f1,f2,f3,h1,h2 (eᵢ/fᵢ the elementary matrices).
    pub fn sl3() -> Arc<SimpleLieData> {
        sl_n(3)
    }

    /// Looks up a shipped algebra by name.
    pub fn by_name(name: &str) -> Result<Arc<SimpleLieData>> {
        match name {
            "sl2" => Ok(Self::sl2()),
            "sl3" => Ok(Self::sl3()),
            other => Err(Error::InvalidDescriptor(format!("unknown algebra `{other}`"))),
        }
    }
}

impl fmt::Debug for SimpleLieData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleLieData({}, dim {})", self.name, self.dim)
    }
}

type Matrix = Vec<Vec<Scalar>>;

fn zero_matrix(n: usize) -> Matrix {
    vec![vec![Scalar::zero(); n]; n]
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = zero_matrix(n);
    m[i][j] = Scalar::one();
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = zero_matrix(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn mat_commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    let n = a.len();
    let mut out = zero_matrix(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = &ab[i][j] - &ba[i][j];
        }
    }
    out
}

fn trace_product(a: &Matrix, b: &Matrix) -> Scalar {
    let ab = mat_mul(a, b);
    let mut t = Scalar::zero();
    for (i, row) in ab.iter().enumerate() {
        t += &row[i];
    }
    t
}

/// Expands a traceless n×n matrix over the basis {E_ij (i≠j)} ∪ {H_i}.
///
/// Off-diagonal coefficients read off directly; the H-coefficients are the
/// partial sums of the diagonal.
#[allow(clippy::needless_range_loop)]
fn decompose_traceless(m: &Matrix, order: &[(usize, usize)], n: usize) -> GVector {
    let mut coeffs: GVector = Vec::with_capacity(order.len() + n - 1);
    for &(i, j) in order {
        coeffs.push(m[i][j].clone());
    }
    let mut partial = Scalar::zero();
    for i in 0..n - 1 {
        partial += &m[i][i];
        coeffs.push(partial.clone());
    }
    coeffs
}

/// Builds sl(n) for n = 2, 3 from matrices: basis e's, f's (elementary
/// matrices), then h's (Eᵢᵢ − Eᵢ₊₁,ᵢ₊₁), trace form, and a stored nilpotent
/// basis {eᵢ, fᵢ, hᵢ + eᵢ − fᵢ on the simple entries}.
fn sl_n(n: usize) -> Arc<SimpleLieData> {
    assert!(n == 2 || n == 3);
    // positions of the e's (upper triangle, ordered by (j - i, i)), then f's.
    let mut e_pos: Vec<(usize, usize)> = Vec::new();
    for span in 1..n {
        for i in 0..n - span {
            e_pos.push((i, i + span));
        }
    }
    let f_pos: Vec<(usize, usize)> = e_pos.iter().map(|&(i, j)| (j, i)).collect();
    let mut order: Vec<(usize, usize)> = e_pos.clone();
    order.extend(f_pos.iter().copied());

    let mut mats: Vec<Matrix> = order.iter().map(|&(i, j)| elementary(n, i, j)).collect();
    for i in 0..n - 1 {
        let mut h = zero_matrix(n);
        h[i][i] = Scalar::one();
        h[i + 1][i + 1] = -Scalar::one();
        mats.push(h);
    }
    let dim = mats.len();

    let mut labels: Vec<String> = Vec::new();
    if n == 2 {
        labels.extend(["e", "f", "h"].map(String::from));
    } else {
        labels.extend((1..=3).map(|k| format!("e{k}")));
        labels.extend((1..=3).map(|k| format!("f{k}")));
        labels.extend((1..=2).map(|k| format!("h{k}")));
    }

    let mut bracket_table = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            bracket_table[i][j] = decompose_traceless(&mat_commutator(&mats[i], &mats[j]), &order, n);
        }
    }
    let mut form_matrix = vec![vec![Scalar::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            form_matrix[i][j] = trace_product(&mats[i], &mats[j]);
        }
    }

    let root_vectors: Vec<usize> = (0..order.len()).collect();
    let cartan: Vec<usize> = (order.len()..dim).collect();

    // e's and f's are nilpotent; each hᵢ direction is replaced by
    // hᵢ + eᵢ − fᵢ, which squares to zero as a matrix.
    let simple_e: Vec<usize> = (0..n - 1)
        .map(|i| order.iter().position(|&(a, b)| (a, b) == (i, i + 1)).unwrap())
        .collect();
    let simple_f: Vec<usize> = (0..n - 1)
        .map(|i| order.iter().position(|&(a, b)| (a, b) == (i + 1, i)).unwrap())
        .collect();
    let mut nilpotent: Vec<GVector> = Vec::new();
    for i in 0..order.len() {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        nilpotent.push(v);
    }
    for i in 0..n - 1 {
        let mut v = vec![Scalar::zero(); dim];
        v[order.len() + i] = Scalar::one();
        v[simple_e[i]] = Scalar::one();
        v[simple_f[i]] = -Scalar::one();
        nilpotent.push(v);
    }

    let data = SimpleLieData {
        name: format!("sl{n}"),
        dim,
        labels,
        bracket_table,
        form_matrix,
        root_vectors,
        cartan,
        nilpotent: Some(nilpotent),
    };
    data.validate().expect("shipped sl(n) tables are valid");
    Arc::new(data)
}

/// Rank of a set of coefficient vectors, by exact Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn rank(vectors: &[GVector]) -> usize {
    let mut rows: Vec<GVector> = vectors.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &pivot;
                for k in c..cols {
                    let sub = &factor * &rows[r][k];
                    rows[i][k] = &rows[i][k] - &sub;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    #[test]
    fn sl2_form_values() {
        let g = SimpleLieData::sl2();
        let e = g.basis_vector(0);
        let f = g.basis_vector(1);
        let h = g.basis_vector(2);
        assert_eq!(g.invariant_form(&e, &f).unwrap(), s(1));
        assert_eq!(g.invariant_form(&h, &h).unwrap(), s(2));
        assert_eq!(g.invariant_form(&e, &e).unwrap(), s(0));
    }

    #[test]
    fn sl2_brackets() {
        let g = SimpleLieData::sl2();
        let e = g.basis_vector(0);
        let f = g.basis_vector(1);
        let h = g.basis_vector(2);
        assert_eq!(g.bracket_g(&e, &f), h);
        assert_eq!(g.bracket_g(&h, &e), vec![s(2), s(0), s(0)]);
        assert_eq!(g.bracket_g(&h, &f), vec![s(0), s(-2), s(0)]);
    }

    #[test]
    fn shipped_algebras_validate() {
        SimpleLieData::sl2().validate().unwrap();
        SimpleLieData::sl3().validate().unwrap();
    }

    #[test]
    fn sl2_nilpotent_basis_is_e_f_and_h_plus_e_minus_f() {
        let g = SimpleLieData::sl2();
        let basis = g.nilpotent_basis().unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0], g.basis_vector(0));
        assert_eq!(basis[1], g.basis_vector(1));
        assert_eq!(basis[2], vec![s(1), s(-1), s(1)]);
    }

    #[test]
    fn sl3_nilpotent_basis_verifies() {
        let g = SimpleLieData::sl3();
        let basis = g.nilpotent_basis().unwrap();
        assert_eq!(basis.len(), 8);
        for a in &basis {
            assert!(g.invariant_form(a, a).unwrap().is_zero());
        }
    }

    #[test]
    fn json_round_trip_validates() {
        let g = SimpleLieData::sl2();
        // rebuild sl2 through the JSON interface
        let mut brackets = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let c = &g.bracket_basis(i, j)[k];
                    if !c.is_zero() {
                        brackets.push(serde_json::json!([i, j, k, c.to_string()]));
                    }
                }
            }
        }
        let form: Vec<Vec<String>> = (0..3)
            .map(|i| (0..3).map(|j| g.form_basis(i, j).to_string()).collect())
            .collect();
        let value = serde_json::json!({
            "name": "sl2-json",
            "dimension": 3,
            "brackets": brackets,
            "form": form,
            "root_vectors": [0, 1],
            "cartan": [2],
            "labels": ["e", "f", "h"],
        });
        let loaded = SimpleLieData::from_json(&value).unwrap();
        assert_eq!(loaded.dim(), 3);
        assert_eq!(loaded.bracket_basis(0, 1), g.bracket_basis(0, 1));
    }

    #[test]
    fn invalid_table_rejected() {
        // [e,f] = h but [f,e] = 0 breaks antisymmetry
        let value = serde_json::json!({
            "dimension": 3,
            "brackets": [[0, 1, 2, "1"]],
            "form": [["0","1","0"],["1","0","0"],["0","0","2"]],
            "root_vectors": [0, 1],
            "cartan": [2],
        });
        assert!(matches!(
            SimpleLieData::from_json(&value),
            Err(Error::InvalidAlgebra(_))
        ));
    }
}
