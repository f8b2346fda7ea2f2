//! Bit-packed linear algebra over GF(2) with labeled coordinate bases.
//!
//! Every group element, correction function and gauge in this crate is a
//! vector over some labeled basis; row reduction, span membership and
//! solving all return certificates that can be recomputed independently.
//!
//! # Determinism
//!
//! Row reduction pivots leftmost-column-first and picks the first nonzero
//! row, so every rank, pivot list and reduced matrix is a function of the
//! input row order alone. Downstream bases and cache files rely on this.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

pub mod cache;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("duplicate label `{0}` in basis")]
    DuplicateLabel(String),
    #[error("basis mismatch in {context}: expected `{expected}`, got `{got}`")]
    BasisMismatch {
        context: &'static str,
        expected: String,
        got: String,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// An ordered list of distinct coordinate labels.
///
/// The basis owns the coordinate ordering: two computations over the same
/// labels agree bit for bit. Labels are opaque strings.
#[derive(Debug)]
pub struct Basis {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Basis {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Arc<Self>, Gf2Error> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Gf2Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(Basis {
            name: name.into(),
            labels,
            index,
        }))
    }

    /// Basis with labels `prefix0..prefixN-1`.
    pub fn anonymous(name: impl Into<String>, prefix: &str, len: usize) -> Arc<Self> {
        let labels = (0..len).map(|i| format!("{prefix}{i}")).collect();
        Basis::new(name, labels).expect("generated labels are distinct")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn words(&self) -> usize {
        self.labels.len().div_ceil(64)
    }
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}
impl Eq for Basis {}

fn same_basis(a: &Arc<Basis>, b: &Arc<Basis>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A vector over GF(2), packed 64 bits per word, little-endian within the
/// vector: coordinate `i` is bit `i % 64` of word `i / 64`.
#[derive(Clone, Debug)]
pub struct Gf2Vector {
    basis: Arc<Basis>,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(basis: &Arc<Basis>) -> Self {
        Gf2Vector {
            basis: Arc::clone(basis),
            words: vec![0; basis.words()],
        }
    }

    pub fn unit(basis: &Arc<Basis>, i: usize) -> Self {
        let mut v = Self::zeros(basis);
        v.set(i, true);
        v
    }

    pub fn from_support(basis: &Arc<Basis>, support: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(basis);
        for i in support {
            v.set(i, true);
        }
        v
    }

    pub fn from_fn(basis: &Arc<Basis>, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(basis);
        for i in 0..basis.len() {
            if f(i) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len(), "coordinate {i} out of range ({})", self.len());
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len(), "coordinate {i} out of range ({})", self.len());
        let w = i / 64;
        let b = i % 64;
        if value {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn flip(&mut self, i: usize) {
        let cur = self.get(i);
        self.set(i, !cur);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Lowest set coordinate, if any.
    pub fn leading_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    fn check(&self, other: &Self, context: &'static str) -> Result<(), Gf2Error> {
        if same_basis(&self.basis, &other.basis) {
            Ok(())
        } else {
            Err(Gf2Error::BasisMismatch {
                context,
                expected: self.basis.name.clone(),
                got: other.basis.name.clone(),
            })
        }
    }

    pub fn xor_assign(&mut self, other: &Self) -> Result<(), Gf2Error> {
        self.check(other, "xor_assign")?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    /// Coordinatewise XOR; this is the group operation everywhere in the crate.
    pub fn add(&self, other: &Self) -> Result<Self, Gf2Error> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    pub fn dot(&self, other: &Self) -> Result<bool, Gf2Error> {
        self.check(other, "dot")?;
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones() & 1;
        }
        Ok(acc == 1)
    }
}

impl PartialEq for Gf2Vector {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.basis, &other.basis) && self.words == other.words
    }
}
impl Eq for Gf2Vector {}

impl Hash for Gf2Vector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.len().hash(state);
        self.words.hash(state);
    }
}

impl PartialOrd for Gf2Vector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Word-lexicographic order; total on vectors over one basis, used only to
/// pick deterministic representatives.
impl Ord for Gf2Vector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert!(same_basis(&self.basis, &other.basis));
        self.words.cmp(&other.words)
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.iter_ones().map(|i| self.basis.label(i)).collect();
        write!(f, "[{}]", labels.join(","))
    }
}

/// A matrix over GF(2); rows share `col_basis`, one row per `row_basis` label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    row_basis: Arc<Basis>,
    col_basis: Arc<Basis>,
    rows: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn new(
        row_basis: Arc<Basis>,
        col_basis: Arc<Basis>,
        rows: Vec<Gf2Vector>,
    ) -> Result<Self, Gf2Error> {
        if rows.len() != row_basis.len() {
            return Err(Gf2Error::DimensionMismatch(format!(
                "{} rows given for row basis of size {}",
                rows.len(),
                row_basis.len()
            )));
        }
        for r in &rows {
            if !same_basis(r.basis(), &col_basis) {
                return Err(Gf2Error::BasisMismatch {
                    context: "matrix row",
                    expected: col_basis.name.clone(),
                    got: r.basis().name.clone(),
                });
            }
        }
        Ok(Gf2Matrix {
            row_basis,
            col_basis,
            rows,
        })
    }

    /// Rows indexed by an anonymous `r0..rN-1` basis.
    pub fn from_rows(
        name: &str,
        col_basis: &Arc<Basis>,
        rows: Vec<Gf2Vector>,
    ) -> Result<Self, Gf2Error> {
        let row_basis = Basis::anonymous(format!("{name}-rows"), "r", rows.len());
        Gf2Matrix::new(row_basis, Arc::clone(col_basis), rows)
    }

    pub fn identity(basis: &Arc<Basis>) -> Self {
        let rows = (0..basis.len()).map(|i| Gf2Vector::unit(basis, i)).collect();
        Gf2Matrix {
            row_basis: Arc::clone(basis),
            col_basis: Arc::clone(basis),
            rows,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_basis.len()
    }

    pub fn row_basis(&self) -> &Arc<Basis> {
        &self.row_basis
    }

    pub fn col_basis(&self) -> &Arc<Basis> {
        &self.col_basis
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut rows: Vec<Gf2Vector> = (0..self.ncols())
            .map(|_| Gf2Vector::zeros(&self.row_basis))
            .collect();
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter_ones() {
                rows[j].set(i, true);
            }
        }
        Gf2Matrix {
            row_basis: Arc::clone(&self.col_basis),
            col_basis: Arc::clone(&self.row_basis),
            rows,
        }
    }

    /// `coeffs . self`: combination of rows, `coeffs` over the row basis.
    pub fn combine_rows(&self, coeffs: &Gf2Vector) -> Result<Gf2Vector, Gf2Error> {
        if !same_basis(coeffs.basis(), &self.row_basis) {
            return Err(Gf2Error::BasisMismatch {
                context: "combine_rows",
                expected: self.row_basis.name.clone(),
                got: coeffs.basis().name.clone(),
            });
        }
        let mut out = Gf2Vector::zeros(&self.col_basis);
        for i in coeffs.iter_ones() {
            out.xor_assign(&self.rows[i])?;
        }
        Ok(out)
    }

    /// `self . x`: one dot product per row, `x` over the column basis.
    pub fn apply(&self, x: &Gf2Vector) -> Result<Gf2Vector, Gf2Error> {
        if !same_basis(x.basis(), &self.col_basis) {
            return Err(Gf2Error::BasisMismatch {
                context: "apply",
                expected: self.col_basis.name.clone(),
                got: x.basis().name.clone(),
            });
        }
        let mut out = Gf2Vector::zeros(&self.row_basis);
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(x)? {
                out.set(i, true);
            }
        }
        Ok(out)
    }
}

/// Reduced row-echelon form with provenance.
///
/// `rows[t]` is the `t`-th nonzero RREF row with pivot `pivot_cols[t]`;
/// `provenance[t]` expresses it as a combination of the original rows.
/// `left_kernel` spans the combinations of original rows equal to zero.
#[derive(Clone, Debug)]
pub struct Rref {
    row_basis: Arc<Basis>,
    col_basis: Arc<Basis>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub rows: Vec<Gf2Vector>,
    pub provenance: Vec<Gf2Vector>,
    pub left_kernel: Vec<Gf2Vector>,
}

/// Span-membership answer: either coefficients over the matrix row basis
/// with `coeffs . m = v`, or a functional orthogonal to every row but not
/// to `v`.
#[derive(Clone, Debug)]
pub enum SpanResult {
    In { coeffs: Gf2Vector },
    Out { functional: Gf2Vector },
}

impl SpanResult {
    pub fn is_in(&self) -> bool {
        matches!(self, SpanResult::In { .. })
    }
}

/// Outcome of `solve`: `x` with `m . x = b`, or a row combination `w`
/// with `w . m = 0` and `w . b = 1`.
#[derive(Clone, Debug)]
pub enum SolveResult {
    Solution(Gf2Vector),
    Inconsistent { witness: Gf2Vector },
}

impl SolveResult {
    pub fn solution(&self) -> Option<&Gf2Vector> {
        match self {
            SolveResult::Solution(x) => Some(x),
            SolveResult::Inconsistent { .. } => None,
        }
    }
}

/// Deterministic RREF: leftmost pivot column, first nonzero row.
pub fn row_reduce(m: &Gf2Matrix) -> Rref {
    let n = m.nrows();
    let mut rows: Vec<Gf2Vector> = m.rows.clone();
    let mut prov: Vec<Gf2Vector> = (0..n)
        .map(|i| Gf2Vector::unit(&m.row_basis, i))
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..m.ncols() {
        let Some(p) = (r..n).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        prov.swap(r, p);
        for i in 0..n {
            if i != r && rows[i].get(col) {
                let (pr, pp) = (rows[r].clone(), prov[r].clone());
                rows[i].xor_assign(&pr).expect("shared basis");
                prov[i].xor_assign(&pp).expect("shared basis");
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == n {
            break;
        }
    }
    let left_kernel = prov.split_off(r);
    rows.truncate(r);
    debug_assert!(rows.iter().all(|row| !row.is_zero()));
    Rref {
        row_basis: Arc::clone(&m.row_basis),
        col_basis: Arc::clone(&m.col_basis),
        rank: r,
        pivot_cols,
        rows,
        provenance: prov,
        left_kernel,
    }
}

impl Rref {
    pub fn col_basis(&self) -> &Arc<Basis> {
        &self.col_basis
    }

    pub fn row_basis(&self) -> &Arc<Basis> {
        &self.row_basis
    }

    /// RREF rows followed by zero rows, padded to the original row count.
    pub fn reduced_matrix(&self) -> Gf2Matrix {
        let total = self.rank + self.left_kernel.len();
        let mut rows = self.rows.clone();
        rows.resize_with(total, || Gf2Vector::zeros(&self.col_basis));
        Gf2Matrix::from_rows("rref", &self.col_basis, rows).expect("rows over col basis")
    }

    /// Residual of `v` after elimination, plus the combination used.
    pub fn reduce(&self, v: &Gf2Vector) -> Result<(Gf2Vector, Gf2Vector), Gf2Error> {
        if !same_basis(v.basis(), &self.col_basis) {
            return Err(Gf2Error::BasisMismatch {
                context: "reduce",
                expected: self.col_basis.name.clone(),
                got: v.basis().name.clone(),
            });
        }
        let mut residual = v.clone();
        let mut coeffs = Gf2Vector::zeros(&self.row_basis);
        for (t, row) in self.rows.iter().enumerate() {
            if residual.get(self.pivot_cols[t]) {
                residual.xor_assign(row)?;
                coeffs.xor_assign(&self.provenance[t])?;
            }
        }
        Ok((residual, coeffs))
    }
}

/// Is `v` in the row space of `m`? Positive answers carry coefficients,
/// negative answers a separating functional; both recompute.
pub fn in_span(rref: &Rref, v: &Gf2Vector) -> Result<SpanResult, Gf2Error> {
    let (residual, coeffs) = rref.reduce(v)?;
    if residual.is_zero() {
        return Ok(SpanResult::In { coeffs });
    }
    let j = residual.leading_one().expect("nonzero residual");
    let mut functional = Gf2Vector::unit(&rref.col_basis, j);
    for (t, row) in rref.rows.iter().enumerate() {
        if row.get(j) {
            functional.set(rref.pivot_cols[t], true);
        }
    }
    Ok(SpanResult::Out { functional })
}

/// Solve `m . x = b` for `x` over the column basis.
pub fn solve(m: &Gf2Matrix, b: &Gf2Vector) -> Result<SolveResult, Gf2Error> {
    if !same_basis(b.basis(), &m.row_basis) {
        return Err(Gf2Error::DimensionMismatch(format!(
            "rhs over `{}`, rows over `{}`",
            b.basis().name,
            m.row_basis.name
        )));
    }
    let rref = row_reduce(m);
    for w in &rref.left_kernel {
        if w.dot(b)? {
            return Ok(SolveResult::Inconsistent { witness: w.clone() });
        }
    }
    let mut x = Gf2Vector::zeros(&m.col_basis);
    for (t, p) in rref.pivot_cols.iter().enumerate() {
        if rref.provenance[t].dot(b)? {
            x.set(*p, true);
        }
    }
    Ok(SolveResult::Solution(x))
}

/// Basis of `{x : m . x = 0}`, one vector per free column.
pub fn kernel_basis(m: &Gf2Matrix) -> Vec<Gf2Vector> {
    let rref = row_reduce(m);
    let pivots: std::collections::HashSet<usize> = rref.pivot_cols.iter().copied().collect();
    let mut out = Vec::new();
    for j in 0..m.ncols() {
        if pivots.contains(&j) {
            continue;
        }
        let mut v = Gf2Vector::unit(&m.col_basis, j);
        for (t, p) in rref.pivot_cols.iter().enumerate() {
            if rref.rows[t].get(j) {
                v.set(*p, true);
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn basis(n: usize) -> Arc<Basis> {
        Basis::anonymous("test", "b", n)
    }

    fn vec_of(b: &Arc<Basis>, bits: &str) -> Gf2Vector {
        Gf2Vector::from_fn(b, |i| bits.as_bytes()[i] == b'1')
    }

    #[test]
    fn add_is_xor() {
        let b = basis(4);
        let v = vec_of(&b, "1100");
        let w = vec_of(&b, "1010");
        assert_eq!(v.add(&w).unwrap(), vec_of(&b, "0110"));
        assert!(v.add(&v).unwrap().is_zero());
        assert_eq!(v.add(&Gf2Vector::zeros(&b)).unwrap(), v);
    }

    #[test]
    fn add_rejects_basis_mismatch() {
        let b = basis(4);
        let c = Basis::anonymous("other", "c", 4);
        let v = Gf2Vector::zeros(&b);
        let w = Gf2Vector::zeros(&c);
        assert!(matches!(
            v.add(&w),
            Err(Gf2Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn rank_of_identity_and_zero() {
        let b = basis(3);
        assert_eq!(row_reduce(&Gf2Matrix::identity(&b)).rank, 3);
        let z = Gf2Matrix::from_rows("z", &b, vec![Gf2Vector::zeros(&b); 3]).unwrap();
        assert_eq!(row_reduce(&z).rank, 0);
    }

    #[test]
    fn dependent_rows_drop_rank() {
        let b = basis(3);
        let rows = vec![vec_of(&b, "110"), vec_of(&b, "011"), vec_of(&b, "101")];
        let m = Gf2Matrix::from_rows("m", &b, rows).unwrap();
        let r = row_reduce(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.left_kernel.len(), 1);
        // the kernel combination really sums to zero
        assert!(m.combine_rows(&r.left_kernel[0]).unwrap().is_zero());
    }

    #[test]
    fn in_span_full_rank_and_zero_vector() {
        let b = basis(3);
        let m = Gf2Matrix::identity(&b);
        let r = row_reduce(&m);
        let v = vec_of(&b, "101");
        match in_span(&r, &v).unwrap() {
            SpanResult::In { coeffs } => assert_eq!(m.combine_rows(&coeffs).unwrap(), v),
            SpanResult::Out { .. } => panic!("identity spans everything"),
        }
        match in_span(&r, &Gf2Vector::zeros(&b)).unwrap() {
            SpanResult::In { coeffs } => assert!(coeffs.is_zero()),
            SpanResult::Out { .. } => panic!("zero is in every span"),
        }
    }

    #[test]
    fn in_span_rejection_certificate() {
        // span{110, 011} = {000, 110, 011, 101}; 001 is outside.
        let b = basis(3);
        let rows = vec![vec_of(&b, "110"), vec_of(&b, "011")];
        let m = Gf2Matrix::from_rows("m", &b, rows).unwrap();
        let r = row_reduce(&m);
        let v = vec_of(&b, "001");
        match in_span(&r, &v).unwrap() {
            SpanResult::In { .. } => panic!("001 is not in the span"),
            SpanResult::Out { functional } => {
                for row in m.rows() {
                    assert!(!functional.dot(row).unwrap());
                }
                assert!(functional.dot(&v).unwrap());
            }
        }
    }

    #[test]
    fn solve_identity_and_unsolvable() {
        let b = basis(5);
        let m = Gf2Matrix::identity(&b);
        let rhs = vec_of(&b, "10110");
        match solve(&m, &rhs).unwrap() {
            SolveResult::Solution(x) => assert_eq!(x, rhs),
            SolveResult::Inconsistent { .. } => panic!("identity always solves"),
        }
        let z = Gf2Matrix::from_rows("z", &b, vec![Gf2Vector::zeros(&b); 5]).unwrap();
        match solve(&z, &rhs).unwrap() {
            SolveResult::Solution(_) => panic!("0 . x = b has no solution for b != 0"),
            SolveResult::Inconsistent { witness } => {
                assert!(witness.dot(&rhs).unwrap());
            }
        }
    }

    fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Gf2Matrix {
        let b = basis(cols);
        let rs = (0..rows)
            .map(|_| Gf2Vector::from_fn(&b, |_| rng.gen_bool(0.5)))
            .collect();
        Gf2Matrix::from_rows("rand", &b, rs).unwrap()
    }

    #[test]
    fn construct_then_solve_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=40);
            let cols = rng.gen_range(1..=40);
            let m = random_matrix(&mut rng, rows, cols);
            let x0 = Gf2Vector::from_fn(m.col_basis(), |_| rng.gen_bool(0.5));
            let b = m.apply(&x0).unwrap();
            match solve(&m, &b).unwrap() {
                SolveResult::Solution(x) => assert_eq!(m.apply(&x).unwrap(), b),
                SolveResult::Inconsistent { .. } => panic!("constructed system must solve"),
            }
        }
    }

    #[test]
    fn rank_nullity_and_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let rows = rng.gen_range(1..=64);
            let cols = rng.gen_range(1..=64);
            let m = random_matrix(&mut rng, rows, cols);
            let rank = row_reduce(&m).rank;
            let kernel = kernel_basis(&m);
            assert_eq!(rank + kernel.len(), cols);
            for v in &kernel {
                assert!(m.apply(v).unwrap().is_zero());
            }
        }
    }

    proptest! {
        #[test]
        fn rank_invariant_under_row_permutation(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rows = rng.gen_range(1..=16);
            let cols = rng.gen_range(1..=16);
            let m = random_matrix(&mut rng, rows, cols);
            let base = row_reduce(&m).rank;
            let mut shuffled = m.rows().to_vec();
            for i in (1..shuffled.len()).rev() {
                let j = rng.gen_range(0..=i);
                shuffled.swap(i, j);
            }
            let m2 = Gf2Matrix::from_rows("shuf", m.col_basis(), shuffled).unwrap();
            prop_assert_eq!(row_reduce(&m2).rank, base);
        }

        #[test]
        fn in_span_certificates_recompute(seed in 0u64..300) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(97).wrapping_add(3));
            let rows = rng.gen_range(1..=12);
            let cols = rng.gen_range(1..=12);
            let m = random_matrix(&mut rng, rows, cols);
            let rref = row_reduce(&m);
            let v = Gf2Vector::from_fn(m.col_basis(), |_| rng.gen_bool(0.5));
            match in_span(&rref, &v).unwrap() {
                SpanResult::In { coeffs } => {
                    prop_assert_eq!(m.combine_rows(&coeffs).unwrap(), v);
                }
                SpanResult::Out { functional } => {
                    for row in m.rows() {
                        prop_assert!(!functional.dot(row).unwrap());
                    }
                    prop_assert!(functional.dot(&v).unwrap());
                }
            }
        }
    }
}
