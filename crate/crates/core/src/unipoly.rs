//! Dense univariate polynomials over a [`Field`], ascending coefficients.
//!
//! Used for section coordinate functions, Lagrange interpolation, the
//! univariate layer of the multivariate GCD, and factorization over finite
//! fields.

use crate::error::{Error, Result};
use crate::field::Field;

/// A univariate polynomial; `coeffs[i]` multiplies x^i, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![K::one()],
        }
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial x.
    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![K::zero(), K::one()],
        }
    }

    /// x^e.
    pub fn x_pow(e: usize) -> Self {
        let mut coeffs = vec![K::zero(); e + 1];
        coeffs[e] = K::one();
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients (trimmed).
    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading_coeff(&self) -> Option<K> {
        self.coeffs.last().cloned()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Divides by the leading coefficient; no-op on zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor
            .leading_coeff()
            .unwrap()
            .inverse()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![K::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            let q = c * lc_inv.clone();
            quot[i - dd] = q.clone();
            for j in 0..=dd {
                rem[i - dd + j] = rem[i - dd + j].clone() - q.clone() * divisor.coeff(j);
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor (Euclid); gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(K::from_integer(i as i64) * c.clone());
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// self^e mod m by square-and-multiply.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Result<Self> {
        let mut base = self.div_rem(m)?.1;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).div_rem(m)?.1;
            }
            base = base.mul(&base).div_rem(m)?.1;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Lagrange interpolation through `(x, y)` pairs; errors on duplicate x.
    pub fn interpolate(points: &[(K, K)]) -> Result<Self> {
        for (i, (xi, _)) in points.iter().enumerate() {
            for (xj, _) in points.iter().skip(i + 1) {
                if xi == xj {
                    return Err(Error::DuplicateInterpolationNode);
                }
            }
        }
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
            let mut num = Self::one();
            let mut den = K::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                num = num.mul(&Self::new(vec![-xj.clone(), K::one()]));
                den = den * (xi.clone() - xj.clone());
            }
            let scale = yi.clone() * den.inverse().expect("distinct nodes");
            acc = acc.add(&num.scale(&scale));
        }
        Ok(acc)
    }

    /// Substitutes x -> x^e (used by the p-th-root step in factorization).
    pub fn stretch(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); (self.coeffs.len() - 1) * e + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * e] = c.clone();
        }
        Self::new(out)
    }

    /// Renders with the given variable name, descending powers.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && i > 0 {
                String::new()
            } else {
                format!("{c}")
            };
            let body = match i {
                0 => coeff,
                1 if coeff.is_empty() => var.to_string(),
                1 => format!("{coeff}*{var}"),
                _ if coeff.is_empty() => format!("{var}^{i}"),
                _ => format!("{coeff}*{var}^{i}"),
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}
