//! Projective points over a field, deterministic enumeration of P^n(F_q),
//! and the exact linear algebra (reduced row echelon, kernels) that the
//! multiplicity conditions run on.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A point of P^n, stored with its first nonzero coordinate scaled to one,
/// so equality and hashing are structural.
///
/// # Example
///
/// ```
/// use pencilbox::field::{Field, Fp};
/// use pencilbox::projspace::ProjPoint;
/// type F5 = Fp<5>;
/// let p = ProjPoint::new(vec![F5::from_integer(2), F5::from_integer(4)]).unwrap();
/// assert_eq!(p.to_string(), "(1 : 2)");
/// ```
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint<K> {
    coords: Vec<K>,
}

impl<K: Field> ProjPoint<K> {
    /// Normalizes homogeneous coordinates; errors on the zero vector.
    pub fn new(coords: Vec<K>) -> Result<Self> {
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroProjectivePoint)?;
        let inv = coords[pivot].inverse().expect("nonzero pivot");
        let coords = coords.into_iter().map(|c| c * inv.clone()).collect();
        Ok(ProjPoint { coords })
    }

    /// Builds from integer coordinates.
    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| K::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[K] {
        &self.coords
    }

    /// Dimension of the ambient projective space.
    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    /// Index of the first nonzero (= 1) coordinate.
    pub fn pivot(&self) -> usize {
        self.coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("normalized point")
    }

    /// Affine coordinates in the chart of the pivot (pivot coordinate
    /// dropped; it equals one).
    pub fn chart_coords(&self) -> Vec<K> {
        let piv = self.pivot();
        self.coords
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != piv)
            .map(|(_, c)| c.clone())
            .collect()
    }
}

impl<K: Field> fmt::Display for ProjPoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// Number of points of P^n(F_q): (q^(n+1) - 1)/(q - 1).
pub fn proj_count(q: u64, n: usize) -> u128 {
    let mut acc: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..=n {
        acc += pw;
        pw *= q as u128;
    }
    acc
}

/// Enumerates P^n(F_q) in the fixed order: points grouped by pivot position
/// ascending, remaining coordinates counted through the field's element
/// order. Errors for infinite fields or when the count exceeds `cap`.
pub fn enumerate_proj<K: Field>(n: usize, cap: u64) -> Result<Vec<ProjPoint<K>>> {
    let q = K::order().ok_or(Error::InfiniteField {
        op: "enumerate_proj",
    })?;
    let needed = proj_count(q, n);
    if needed > cap as u128 {
        return Err(Error::EnumerationCap { needed, cap });
    }
    let elems = K::elements();
    let mut out = Vec::with_capacity(needed as usize);
    for pivot in 0..=n {
        let free = n - pivot;
        let mut idx = vec![0usize; free];
        loop {
            let mut coords = vec![K::zero(); n + 1];
            coords[pivot] = K::one();
            for (j, &i) in idx.iter().enumerate() {
                coords[pivot + 1 + j] = elems[i].clone();
            }
            out.push(ProjPoint { coords });
            // increment mixed-radix counter (last coordinate fastest)
            let mut k = free;
            loop {
                if k == 0 {
                    break;
                }
                idx[k - 1] += 1;
                if idx[k - 1] < elems.len() {
                    break;
                }
                idx[k - 1] = 0;
                k -= 1;
            }
            if k == 0 {
                break;
            }
        }
    }
    Ok(out)
}

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving nonzero row.
pub fn rref<K: Field>(mat: &mut Vec<Vec<K>>) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, sel);
        let inv = mat[r][c].inverse().expect("pivot nonzero");
        for j in c..cols {
            mat[r][j] = mat[r][j].clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    mat[i][j] = mat[i][j].clone() - f.clone() * mat[r][j].clone();
                }
                mat[i][c] = K::zero();
            }
        }
        pivots.push(c);
        r += 1;
    }
    mat.truncate(r);
    pivots
}

/// Rank of a matrix.
pub fn rank<K: Field>(mat: &[Vec<K>]) -> usize {
    let mut m = mat.to_vec();
    rref(&mut m).len()
}

/// Basis of the kernel {x : M x = 0}, in reduced echelon form with a
/// deterministic order (one vector per free column, ascending).
pub fn kernel_basis<K: Field>(mat: &[Vec<K>], cols: usize) -> Vec<Vec<K>> {
    let mut m = mat.to_vec();
    let pivots = rref(&mut m);
    let is_pivot = |c: usize| pivots.contains(&c);
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![K::zero(); cols];
        v[free] = K::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of M x = b, or `None` when inconsistent.
pub fn solve<K: Field>(mat: &[Vec<K>], rhs: &[K]) -> Option<Vec<K>> {
    let cols = mat.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<K>> = mat
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // pivot in the constant column
    }
    let mut x = vec![K::zero(); cols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

/// A linear subspace of K^ambient, stored as a reduced-echelon basis of row
/// vectors. Used for the parameter subspaces T_r(x).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSubspace<K> {
    ambient: usize,
    basis: Vec<Vec<K>>,
}

impl<K: Field> LinearSubspace<K> {
    /// Span of the given vectors inside K^ambient.
    pub fn span(ambient: usize, vectors: Vec<Vec<K>>) -> Self {
        let mut m: Vec<Vec<K>> = vectors
            .into_iter()
            .filter(|v| !v.iter().all(|c| c.is_zero()))
            .collect();
        for v in &m {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        rref(&mut m);
        LinearSubspace { ambient, basis: m }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![K::zero(); ambient];
                v[i] = K::one();
                v
            })
            .collect();
        LinearSubspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<K>] {
        &self.basis
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains_vector(&self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for row in &self.basis {
            let pc = row.iter().position(|c| !c.is_zero()).expect("echelon row");
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for j in 0..self.ambient {
                    v[j] = v[j].clone() - f.clone() * row[j].clone();
                }
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// The projective points lying in this subspace, in deterministic order
    /// (coefficient tuples of P^(dim-1) over the basis).
    pub fn proj_points(&self, cap: u64) -> Result<Vec<ProjPoint<K>>> {
        if self.basis.is_empty() {
            return Ok(Vec::new());
        }
        let coeff_points = enumerate_proj::<K>(self.dim() - 1, cap)?;
        let mut out = Vec::with_capacity(coeff_points.len());
        for cp in coeff_points {
            let mut v = vec![K::zero(); self.ambient];
            for (c, row) in cp.coords().iter().zip(&self.basis) {
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    v[j] = v[j].clone() + c.clone() * row[j].clone();
                }
            }
            out.push(ProjPoint::new(v).expect("independent basis rows"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::{One, Zero};

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    #[test]
    fn normalization_and_equality() {
        let a = ProjPoint::<F3>::from_integers(&[2, 1, 0]).unwrap();
        let b = ProjPoint::<F3>::from_integers(&[1, 2, 0]).unwrap();
        assert_eq!(a, b); // (2:1:0) = 2*(1:2:0)
        assert_eq!(a.pivot(), 0);
        assert!(ProjPoint::<F3>::from_integers(&[0, 0, 0]).is_err());
    }

    #[test]
    fn enumeration_order_over_f2_line() {
        let pts = enumerate_proj::<F2>(1, 100).unwrap();
        let shown: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["(1 : 0)", "(1 : 1)", "(0 : 1)"]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_proj::<F3>(2, 100).unwrap().len(), 13);
        assert_eq!(proj_count(5, 3), 156);
        assert!(matches!(
            enumerate_proj::<F3>(9, 1000),
            Err(Error::EnumerationCap { .. })
        ));
        assert!(enumerate_proj::<Rational>(1, 10).is_err());
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let pts = enumerate_proj::<F3>(2, 100).unwrap();
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i + 1..] {
                assert_ne!(p, q);
            }
        }
    }

    #[test]
    fn kernel_of_known_matrix() {
        // x + y + z = 0 over F_3: kernel of the 1x3 matrix [1 1 1]
        let mat = vec![vec![F3::from_integer(1); 3]];
        let ker = kernel_basis(&mat, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s = v.iter().fold(F3::zero(), |a, b| a + *b);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let mat = vec![
            vec![F3::from_integer(1), F3::from_integer(1)],
            vec![F3::from_integer(0), F3::from_integer(1)],
        ];
        let x = solve(&mat, &[F3::from_integer(2), F3::from_integer(1)]).unwrap();
        assert_eq!(x, vec![F3::from_integer(1), F3::from_integer(1)]);
        let bad = vec![
            vec![F3::from_integer(1), F3::from_integer(1)],
            vec![F3::from_integer(2), F3::from_integer(2)],
        ];
        assert!(solve(&bad, &[F3::from_integer(0), F3::from_integer(1)]).is_none());
    }

    #[test]
    fn subspace_membership_and_points() {
        // span{(1,0,1), (0,1,0)} in F_2^3
        let s = LinearSubspace::span(
            3,
            vec![
                vec![F2::one(), F2::zero(), F2::one()],
                vec![F2::zero(), F2::one(), F2::zero()],
            ],
        );
        assert_eq!(s.dim(), 2);
        assert!(s.contains_vector(&[F2::one(), F2::one(), F2::one()]));
        assert!(!s.contains_vector(&[F2::one(), F2::zero(), F2::zero()]));
        let pts = s.proj_points(100).unwrap();
        assert_eq!(pts.len(), 3); // P^1(F_2)
        assert!(!s.is_full());
        assert!(LinearSubspace::<F2>::full(3).contains_subspace(&s));
    }
}
