//! Sparse multivariate polynomials over a [`Field`], with the divided-power
//! (Hasse) derivative calculus that makes multiplicity work in every
//! characteristic.
//!
//! Terms are kept in canonical graded-lex order (total degree first, then
//! lexicographic with the first variable largest), so equality, hashing and
//! printing are all structural.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::unipoly::UniPoly;

/// Graded-lex comparison of exponent vectors (equal lengths assumed).
pub fn grlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// A polynomial in `num_vars` variables; terms sorted graded-lex descending.
///
/// # Example
///
/// ```
/// use pencilbox::field::Fp;
/// use pencilbox::poly::MultiPoly;
/// type F2 = Fp<2>;
/// // (x + y)^2 = x^2 + y^2 over F_2
/// let x = MultiPoly::<F2>::var(2, 0);
/// let y = MultiPoly::<F2>::var(2, 1);
/// let s = &x + &y;
/// assert_eq!((&s * &s).to_string(), "x0^2 + x1^2");
/// ```
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly<K> {
    num_vars: usize,
    terms: Vec<(Vec<u32>, K)>,
}

impl<K: Field> MultiPoly<K> {
    /// Builds from raw terms: merges duplicates, drops zeros, sorts.
    pub fn new(num_vars: usize, terms: Vec<(Vec<u32>, K)>) -> Self {
        for (e, _) in &terms {
            assert_eq!(e.len(), num_vars, "exponent vector length mismatch");
        }
        let mut merged: BTreeMap<Vec<u32>, K> = BTreeMap::new();
        for (e, c) in terms {
            let entry = merged.entry(e).or_insert_with(K::zero);
            *entry = entry.clone() + c;
        }
        let mut out: Vec<(Vec<u32>, K)> =
            merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|(a, _), (b, _)| grlex(b, a));
        MultiPoly {
            num_vars,
            terms: out,
        }
    }

    /// Builds from integer coefficients via the canonical map Z -> K.
    pub fn from_int_terms(num_vars: usize, terms: &[(Vec<u32>, i64)]) -> Self {
        Self::new(
            num_vars,
            terms
                .iter()
                .map(|(e, c)| (e.clone(), K::from_integer(*c)))
                .collect(),
        )
    }

    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(num_vars: usize, c: K) -> Self {
        Self::new(num_vars, vec![(vec![0; num_vars], c)])
    }

    /// The variable x_i.
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::new(num_vars, vec![(e, K::one())])
    }

    /// A single term c * x^e.
    pub fn monomial(num_vars: usize, e: Vec<u32>, c: K) -> Self {
        Self::new(num_vars, vec![(e, c)])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[(Vec<u32>, K)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    /// Graded-lex leading term.
    pub fn leading(&self) -> Option<(&[u32], &K)> {
        self.terms.first().map(|(e, c)| (e.as_slice(), c))
    }

    /// Scales so the graded-lex leading coefficient is one; no-op on zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => {
                let inv = c.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max()
    }

    /// Largest exponent of `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e[var]).max()
    }

    /// `Some(degree)` when every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(e, _)| e.iter().sum::<u32>());
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    fn assert_compatible(&self, rhs: &Self) {
        assert_eq!(
            self.num_vars, rhs.num_vars,
            "polynomials live in different variable counts"
        );
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        Self::new(self.num_vars, terms)
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().map(|(e, c)| (e.clone(), -c.clone())));
        Self::new(self.num_vars, terms)
    }

    pub fn neg_ref(&self) -> Self {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                terms.push((e, ca.clone() * cb.clone()));
            }
        }
        Self::new(self.num_vars, terms)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self::new(
            self.num_vars,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * k.clone()))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.num_vars, K::one());
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    pub fn evaluate(&self, point: &[K]) -> Result<K> {
        if point.len() != self.num_vars {
            return Err(Error::PointLength {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut acc = K::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = t * point[i].pow_u(exp as u64);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `var`.
    pub fn formal_partial(&self, var: usize) -> Self {
        assert!(var < self.num_vars);
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            terms.push((e2, K::from_integer(e[var] as i64) * c.clone()));
        }
        Self::new(self.num_vars, terms)
    }

    /// Substitutes one polynomial per variable (all substitutes must share a
    /// variable count, which becomes the result's).
    pub fn substitute_all(&self, subs: &[Self]) -> Result<Self> {
        if subs.len() != self.num_vars {
            return Err(Error::PointLength {
                expected: self.num_vars,
                got: subs.len(),
            });
        }
        let out_vars = subs.first().map_or(0, |s| s.num_vars);
        for s in subs {
            if s.num_vars != out_vars {
                return Err(Error::VariableCountMismatch {
                    left: out_vars,
                    right: s.num_vars,
                });
            }
        }
        // memoized powers of each substitute
        let mut pows: Vec<Vec<Self>> = subs
            .iter()
            .map(|s| vec![Self::constant(out_vars, K::one()), s.clone()])
            .collect();
        let mut acc = Self::zero(out_vars);
        for (e, c) in &self.terms {
            let mut t = Self::constant(out_vars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                while pows[i].len() <= exp as usize {
                    let next = pows[i].last().unwrap().mul_ref(&subs[i]);
                    pows[i].push(next);
                }
                t = t.mul_ref(&pows[i][exp as usize]);
            }
            acc = acc.add_ref(&t);
        }
        Ok(acc)
    }

    /// Substitutes a constant for `var`, keeping the variable count.
    pub fn partial_eval(&self, var: usize, value: &K) -> Self {
        assert!(var < self.num_vars);
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let exp = e2[var];
            e2[var] = 0;
            terms.push((e2, c.clone() * value.pow_u(exp as u64)));
        }
        Self::new(self.num_vars, terms)
    }

    /// Drops a variable the polynomial no longer involves.
    pub fn remove_var(&self, var: usize) -> Result<Self> {
        if self.degree_in(var).unwrap_or(0) > 0 {
            return Err(Error::NotUnivariate);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.remove(var);
                (e2, c.clone())
            })
            .collect();
        Ok(Self::new(self.num_vars - 1, terms))
    }

    /// Sets x_chart = 1 and drops that variable (projective chart).
    pub fn dehomogenize(&self, chart: usize) -> Self {
        self.partial_eval(chart, &K::one())
            .remove_var(chart)
            .expect("variable was substituted away")
    }

    /// The expansion u(x + d) in doubled variables (x_0..x_{n-1}, d_0..d_{n-1}).
    ///
    /// This is the single shared code path behind Hasse derivatives and
    /// Taylor shifts: derivatives are its d-coefficients, shifts evaluate d.
    pub fn shift_doubled(&self) -> Self {
        let n = self.num_vars;
        let subs: Vec<Self> = (0..n)
            .map(|i| Self::var(2 * n, i).add_ref(&Self::var(2 * n, n + i)))
            .collect();
        // widen each term to 2n variables, then substitute x_i + d_i
        let widened = Self::new(
            2 * n,
            self.terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.extend(std::iter::repeat(0).take(n));
                    (e2, c.clone())
                })
                .collect(),
        );
        let mut out = Self::zero(2 * n);
        for (e, c) in &widened.terms {
            let mut t = Self::constant(2 * n, c.clone());
            for (i, &exp) in e.iter().enumerate().take(n) {
                for _ in 0..exp {
                    t = t.mul_ref(&subs[i]);
                }
            }
            out = out.add_ref(&t);
        }
        out
    }

    /// All Hasse derivatives H^alpha u of order |alpha| <= max_order, as a
    /// map alpha -> polynomial (absent keys are zero).
    ///
    /// H^alpha u is the coefficient of d^alpha in u(x + d); in characteristic
    /// zero it equals the alpha-th partial divided by alpha factorial.
    pub fn hasse_table(&self, max_order: u32) -> BTreeMap<Vec<u32>, Self> {
        let n = self.num_vars;
        let doubled = self.shift_doubled();
        let mut table: BTreeMap<Vec<u32>, Vec<(Vec<u32>, K)>> = BTreeMap::new();
        for (e, c) in &doubled.terms {
            let alpha: Vec<u32> = e[n..].to_vec();
            if alpha.iter().sum::<u32>() > max_order {
                continue;
            }
            let xpart: Vec<u32> = e[..n].to_vec();
            table.entry(alpha).or_default().push((xpart, c.clone()));
        }
        table
            .into_iter()
            .map(|(alpha, terms)| (alpha, Self::new(n, terms)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    /// A single Hasse derivative H^alpha u.
    pub fn hasse_derivative(&self, alpha: &[u32]) -> Result<Self> {
        if alpha.len() != self.num_vars {
            return Err(Error::PointLength {
                expected: self.num_vars,
                got: alpha.len(),
            });
        }
        let order: u32 = alpha.iter().sum();
        let table = self.hasse_table(order);
        Ok(table
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| Self::zero(self.num_vars)))
    }

    /// u(x + a) for a constant vector a, via the same doubled expansion.
    pub fn taylor_shift(&self, a: &[K]) -> Result<Self> {
        if a.len() != self.num_vars {
            return Err(Error::PointLength {
                expected: self.num_vars,
                got: a.len(),
            });
        }
        let n = self.num_vars;
        let doubled = self.shift_doubled();
        let mut terms = Vec::with_capacity(doubled.terms.len());
        for (e, c) in &doubled.terms {
            let mut coeff = c.clone();
            for (i, &exp) in e[n..].iter().enumerate() {
                if exp > 0 {
                    coeff = coeff * a[i].pow_u(exp as u64);
                }
            }
            terms.push((e[..n].to_vec(), coeff));
        }
        Ok(Self::new(n, terms))
    }

    /// Multiplicity at an affine point: the least total degree appearing in
    /// the shift of u moving the point to the origin. Errors on the zero
    /// polynomial, whose multiplicity is undefined.
    pub fn multiplicity_at_affine(&self, point: &[K]) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomialMultiplicity);
        }
        let shifted = self.taylor_shift(point)?;
        Ok(shifted
            .terms
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>())
            .min()
            .expect("shift of a nonzero polynomial is nonzero"))
    }

    /// Euler residual: (sum_i x_i du/dx_i) - m u for homogeneous u of degree
    /// m. Identically zero in every characteristic (with m reduced mod p);
    /// returned for checking rather than assumed.
    pub fn euler_residual(&self) -> Result<Self> {
        let m = self.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let mut acc = self.scale(&-K::from_integer(m as i64));
        for i in 0..self.num_vars {
            acc = acc.add_ref(&Self::var(self.num_vars, i).mul_ref(&self.formal_partial(i)));
        }
        Ok(acc)
    }

    /// `Some((var, poly))` when at most one variable occurs; constants report
    /// variable 0.
    pub fn to_univariate(&self) -> Option<(usize, UniPoly<K>)> {
        let mut active = None;
        for (e, _) in &self.terms {
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    match active {
                        None => active = Some(i),
                        Some(v) if v == i => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        let var = active.unwrap_or(0);
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![K::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[var] as usize] = c.clone();
        }
        Some((var, UniPoly::new(coeffs)))
    }

    /// Embeds a univariate polynomial as `var` of a `num_vars`-variable one.
    pub fn from_univariate(num_vars: usize, var: usize, p: &UniPoly<K>) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut e = vec![0; num_vars];
                e[var] = i as u32;
                (e, c.clone())
            })
            .collect();
        Self::new(num_vars, terms)
    }

    /// Renders with the given variable names (grammar-compatible).
    pub fn render(&self, names: &[impl AsRef<str>]) -> String {
        assert_eq!(names.len(), self.num_vars, "one name per variable");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        names[i].as_ref().to_string()
                    } else {
                        format!("{}^{}", names[i].as_ref(), exp)
                    }
                })
                .collect();
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            // extension-field coefficients print with internal '+'; wrap them
            let mag = if mag.contains('+') {
                format!("({mag})")
            } else {
                mag
            };
            if mono.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    /// Default variable names x0, x1, ...
    pub fn default_names(num_vars: usize) -> Vec<String> {
        (0..num_vars).map(|i| format!("x{i}")).collect()
    }
}

impl<K: Field> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&Self::default_names(self.num_vars)))
    }
}

macro_rules! forward_binop {
    ($trait_:ident, $method:ident, $inner:ident) => {
        impl<'a, 'b, K: Field> std::ops::$trait_<&'b MultiPoly<K>> for &'a MultiPoly<K> {
            type Output = MultiPoly<K>;
            fn $method(self, rhs: &'b MultiPoly<K>) -> MultiPoly<K> {
                self.$inner(rhs)
            }
        }
        impl<K: Field> std::ops::$trait_ for MultiPoly<K> {
            type Output = MultiPoly<K>;
            fn $method(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<K: Field> std::ops::Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        self.neg_ref()
    }
}

impl<K: Field> std::ops::Neg for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::One;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn q(n: i64) -> Rational {
        <Rational as Field>::from_integer(n)
    }

    #[test]
    fn freshman_dream_over_f2() {
        let x = MultiPoly::<F2>::var(2, 0);
        let y = MultiPoly::<F2>::var(2, 1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(
            sq,
            MultiPoly::from_int_terms(2, &[(vec![2, 0], 1), (vec![0, 2], 1)])
        );
    }

    #[test]
    fn formal_partial_dies_on_pth_powers() {
        let xc = MultiPoly::<F3>::from_int_terms(1, &[(vec![3], 1)]);
        assert!(xc.formal_partial(0).is_zero());
    }

    #[test]
    fn hasse_derivative_survives_where_partial_dies() {
        // u = x^3 over F_3: H^(1) u = 3x^2 = 0 but H^(3) u = 1
        let u = MultiPoly::<F3>::from_int_terms(1, &[(vec![3], 1)]);
        assert!(u.hasse_derivative(&[1]).unwrap().is_zero());
        assert_eq!(
            u.hasse_derivative(&[3]).unwrap(),
            MultiPoly::constant(1, F3::one())
        );
    }

    #[test]
    fn hasse_mixed_coefficient_vanishes_mod_2() {
        // H^(1,1) of x^2 y has coefficient C(2,1)C(1,1) = 2, which is 0 mod 2
        let u = MultiPoly::<F2>::from_int_terms(2, &[(vec![2, 1], 1)]);
        assert!(u.hasse_derivative(&[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn hasse_matches_binomial_extraction_over_q() {
        // independent oracle: H^alpha(x^e) = C(e, alpha) x^(e-alpha)
        let u = MultiPoly::<Rational>::from_int_terms(2, &[(vec![4, 2], 3), (vec![1, 1], 7)]);
        let h = u.hasse_derivative(&[2, 1]).unwrap();
        // C(4,2)*C(2,1) * 3 = 6*2*3 = 36 on x^2 y, nothing from x y
        assert_eq!(h, MultiPoly::from_int_terms(2, &[(vec![2, 1], 36)]));
    }

    #[test]
    fn taylor_shift_matches_expansion() {
        // (y + b)^2 - (x + a)^3 with a = 1, b = 2 over Q
        let u = MultiPoly::<Rational>::from_int_terms(2, &[(vec![0, 2], 1), (vec![3, 0], -1)]);
        let shifted = u.taylor_shift(&[q(1), q(2)]).unwrap();
        let expected = MultiPoly::from_int_terms(
            2,
            &[
                (vec![0, 2], 1),
                (vec![0, 1], 4),
                (vec![3, 0], -1),
                (vec![2, 0], -3),
                (vec![1, 0], -3),
                (vec![0, 0], 3),
            ],
        );
        assert_eq!(shifted, expected);
    }

    #[test]
    fn multiplicity_of_cusp() {
        // y^2 - x^3: double point at the origin, simple elsewhere on the curve
        let u = MultiPoly::<Rational>::from_int_terms(2, &[(vec![0, 2], 1), (vec![3, 0], -1)]);
        assert_eq!(u.multiplicity_at_affine(&[q(0), q(0)]).unwrap(), 2);
        assert_eq!(u.multiplicity_at_affine(&[q(1), q(1)]).unwrap(), 1);
        assert_eq!(u.multiplicity_at_affine(&[q(2), q(1)]).unwrap(), 0);
    }

    #[test]
    fn multiplicity_of_zero_poly_is_an_error() {
        let z = MultiPoly::<Rational>::zero(2);
        assert!(matches!(
            z.multiplicity_at_affine(&[q(0), q(0)]),
            Err(Error::ZeroPolynomialMultiplicity)
        ));
    }

    #[test]
    fn euler_residual_vanishes_even_when_p_divides_degree() {
        // x^2 + xy over F_2: m = 2 = 0, and x*(dx) + y*(dy) = x*y + x*y = 0
        let u = MultiPoly::<F2>::from_int_terms(2, &[(vec![2, 0], 1), (vec![1, 1], 1)]);
        assert!(u.euler_residual().unwrap().is_zero());
        let v = MultiPoly::<Rational>::from_int_terms(3, &[(vec![1, 2, 0], 1), (vec![0, 2, 1], 5)]);
        assert!(v.euler_residual().unwrap().is_zero());
    }

    #[test]
    fn dehomogenize_and_univariate_round_trip() {
        let u = MultiPoly::<F3>::from_int_terms(3, &[(vec![1, 2, 0], 1), (vec![0, 2, 1], 2)]);
        let aff = u.dehomogenize(2); // z = 1
        assert_eq!(
            aff,
            MultiPoly::from_int_terms(2, &[(vec![1, 2], 1), (vec![0, 2], 2)])
        );
        let uni = MultiPoly::<F3>::from_int_terms(2, &[(vec![0, 3], 2), (vec![0, 1], 1)]);
        let (var, up) = uni.to_univariate().unwrap();
        assert_eq!(var, 1);
        assert_eq!(MultiPoly::from_univariate(2, 1, &up), uni);
    }

    #[test]
    fn substitution_composes_linear_change() {
        // u(x, y) = x*y under (x, y) -> (x + y, x - y) gives x^2 - y^2
        let u = MultiPoly::<Rational>::from_int_terms(2, &[(vec![1, 1], 1)]);
        let sx = MultiPoly::from_int_terms(2, &[(vec![1, 0], 1), (vec![0, 1], 1)]);
        let sy = MultiPoly::from_int_terms(2, &[(vec![1, 0], 1), (vec![0, 1], -1)]);
        let out = u.substitute_all(&[sx, sy]).unwrap();
        assert_eq!(
            out,
            MultiPoly::from_int_terms(2, &[(vec![2, 0], 1), (vec![0, 2], -1)])
        );
    }

    #[test]
    #[should_panic(expected = "different variable counts")]
    fn mismatched_variable_counts_panic() {
        let a = MultiPoly::<F2>::var(2, 0);
        let b = MultiPoly::<F2>::var(3, 0);
        let _ = &a + &b;
    }

    #[test]
    fn rendering_is_grammar_shaped() {
        let u = MultiPoly::<Rational>::from_int_terms(
            3,
            &[(vec![1, 2, 0], 1), (vec![0, 0, 3], -2), (vec![0, 0, 0], 1)],
        );
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(u.render(&names), "x*y^2 - 2*z^3 + 1");
    }
}
