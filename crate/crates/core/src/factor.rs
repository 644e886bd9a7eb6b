//! Univariate factorization over finite fields and p-th power extraction.
//!
//! The pipeline is the classical one: squarefree decomposition (with the
//! p-th-root fallback when the derivative vanishes), distinct-degree
//! splitting, then seeded equal-degree splitting. Output order is canonical,
//! so results are independent of the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::MultiPoly;
use crate::unipoly::UniPoly;

/// A complete factorization `unit * prod factor^multiplicity` into monic
/// irreducibles, sorted by degree then coefficient order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniFactorization<K> {
    pub unit: K,
    pub factors: Vec<(UniPoly<K>, u32)>,
}

impl<K: Field> UniFactorization<K> {
    /// Multiplies the factorization back out (test oracle).
    pub fn expand(&self) -> UniPoly<K> {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Position of an element in the field's fixed enumeration (finite fields).
fn elem_index<K: Field>(table: &[K], x: &K) -> usize {
    table
        .iter()
        .position(|e| e == x)
        .expect("element of a finite field")
}

/// Canonical sort key for a monic polynomial over a finite field.
fn poly_key<K: Field>(table: &[K], f: &UniPoly<K>) -> (usize, Vec<usize>) {
    (
        f.degree().unwrap_or(0),
        f.coeffs().iter().map(|c| elem_index(table, c)).collect(),
    )
}

/// The p-th root of a polynomial whose derivative vanishes (so every
/// exponent is a multiple of p and the coefficient roots exist).
fn pth_root_poly<K: Field>(f: &UniPoly<K>, p: u64) -> UniPoly<K> {
    let deg = f.degree().unwrap_or(0);
    let mut out = vec![K::zero(); deg / p as usize + 1];
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        debug_assert_eq!(i % p as usize, 0, "derivative was zero");
        out[i / p as usize] = c.pth_root().expect("finite field has p-th roots");
    }
    UniPoly::new(out)
}

/// Squarefree decomposition of a monic polynomial in characteristic p > 0
/// (or characteristic 0, where the derivative never vanishes identically for
/// nonconstant input): pairs (squarefree part, multiplicity).
fn squarefree_decomposition<K: Field>(f: &UniPoly<K>) -> Vec<(UniPoly<K>, u32)> {
    let p = K::characteristic();
    if f.is_constant() {
        return Vec::new();
    }
    let d = f.derivative();
    if d.is_zero() {
        // f = h(x^p) = (p-th root of h's coefficients)(x)^p
        let root = pth_root_poly(f, p);
        return squarefree_decomposition(&root)
            .into_iter()
            .map(|(g, m)| (g, m * p as u32))
            .collect();
    }
    let mut out = Vec::new();
    let mut g = f.gcd(&d);
    let mut w = f.div_rem(&g).expect("gcd divides").0;
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&g);
        let z = w.div_rem(&y).expect("gcd divides").0;
        if !z.is_constant() {
            out.push((z.monic(), i));
        }
        g = g.div_rem(&y).expect("gcd divides").0;
        w = y;
        i += 1;
    }
    if !g.is_constant() {
        // leftover p-th power part
        let root = pth_root_poly(&g.monic(), p);
        out.extend(
            squarefree_decomposition(&root)
                .into_iter()
                .map(|(h, m)| (h, m * p as u32)),
        );
    }
    out
}

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// (product of irreducibles of degree d, d).
fn distinct_degree<K: Field>(f: &UniPoly<K>, q: u64) -> Result<Vec<(UniPoly<K>, usize)>> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = UniPoly::<K>::x().div_rem(&f)?.1;
    let mut d = 0usize;
    while f.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(q as u128, &f)?;
        let g = h.sub(&UniPoly::x()).gcd(&f);
        if !g.is_constant() {
            out.push((g.clone(), d));
            f = f.div_rem(&g)?.0;
            h = h.div_rem(&f)?.1;
        }
    }
    if f.degree().unwrap_or(0) > 0 {
        let d = f.degree().unwrap();
        out.push((f, d));
    }
    Ok(out)
}

fn random_poly<K: Field>(table: &[K], deg: usize, rng: &mut ChaCha8Rng) -> UniPoly<K> {
    let coeffs = (0..=deg)
        .map(|_| table[rng.gen_range(0..table.len())].clone())
        .collect();
    UniPoly::new(coeffs)
}

/// Equal-degree splitting: factors a monic squarefree product of
/// irreducibles all of degree d into those irreducibles.
fn equal_degree<K: Field>(
    f: &UniPoly<K>,
    d: usize,
    q: u64,
    table: &[K],
    rng: &mut ChaCha8Rng,
    out: &mut Vec<UniPoly<K>>,
) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        out.push(f.monic());
        return Ok(());
    }
    let p = K::characteristic();
    loop {
        let a = random_poly(table, n - 1, rng);
        if a.is_constant() {
            continue;
        }
        let split = if p == 2 {
            // trace map over F_2: T(a) = a + a^2 + ... + a^(2^(k d - 1))
            let k = q.trailing_zeros() as usize; // q = 2^k here
            let mut t = a.div_rem(f)?.1;
            let mut acc = t.clone();
            for _ in 1..(k * d) {
                t = t.mul(&t).div_rem(f)?.1;
                acc = acc.add(&t);
            }
            acc.gcd(f)
        } else {
            let e = (q as u128).pow(d as u32) / 2; // (q^d - 1)/2 rounded
            let b = a.pow_mod(e, f)?;
            b.sub(&UniPoly::one()).gcd(f)
        };
        let ds = split.degree().unwrap_or(0);
        if ds > 0 && ds < n {
            let rest = f.div_rem(&split)?.0;
            equal_degree(&split, d, q, table, rng, out)?;
            equal_degree(&rest, d, q, table, rng, out)?;
            return Ok(());
        }
    }
}

/// Factors a univariate polynomial over a finite field into monic
/// irreducibles with multiplicities; the unit is the leading coefficient.
/// The seed drives only the internal splitting — output is canonical.
pub fn univariate_factor<K: Field>(f: &UniPoly<K>, seed: u64) -> Result<UniFactorization<K>> {
    let q = K::order().ok_or(Error::InfiniteField {
        op: "univariate_factor",
    })?;
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let unit = f.leading_coeff().unwrap();
    let monic = f.monic();
    if monic.is_constant() {
        return Ok(UniFactorization {
            unit,
            factors: Vec::new(),
        });
    }
    let table = K::elements();
    // fixed diversifier keeps this draw stream decorrelated from other
    // consumers of the same user seed
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_fac7);
    let mut factors: Vec<(UniPoly<K>, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (prod, d) in distinct_degree(&part, q)? {
            let mut irr = Vec::new();
            equal_degree(&prod, d, q, &table, &mut rng, &mut irr)?;
            for g in irr {
                match factors.iter_mut().find(|(h, _)| *h == g) {
                    Some((_, m)) => *m += mult,
                    None => factors.push((g, mult)),
                }
            }
        }
    }
    factors.sort_by_key(|(g, _)| poly_key(&table, g));
    Ok(UniFactorization { unit, factors })
}

/// Whether a univariate polynomial over a finite field is irreducible.
pub fn is_irreducible<K: Field>(f: &UniPoly<K>, seed: u64) -> Result<bool> {
    let fact = univariate_factor(f, seed)?;
    Ok(fact.factors.len() == 1 && fact.factors[0].1 == 1)
}

/// If `u` is a p^e-th power, returns the p^e-th root; `None` otherwise.
/// Errors in characteristic zero.
pub fn pth_power_root<K: Field>(u: &MultiPoly<K>, e: u32) -> Result<Option<MultiPoly<K>>> {
    let p = K::characteristic();
    if p == 0 {
        return Err(Error::CharacteristicZero {
            op: "pth_power_root",
        });
    }
    let mut pe: u64 = 1;
    for _ in 0..e {
        pe = pe.checked_mul(p).expect("p^e overflow");
    }
    let mut terms = Vec::with_capacity(u.terms().len());
    for (exps, c) in u.terms() {
        if exps.iter().any(|&x| x as u64 % pe != 0) {
            return Ok(None);
        }
        let root_exp: Vec<u32> = exps.iter().map(|&x| (x as u64 / pe) as u32).collect();
        let root_coeff = c.peth_root(e).expect("finite fields are perfect");
        terms.push((root_exp, root_coeff));
    }
    Ok(Some(MultiPoly::new(u.num_vars(), terms)))
}

/// The largest e with `u` a p^e-th power, together with the p^e-th root
/// (e = 0 and `u` itself when it is not a p-th power).
pub fn largest_pth_power<K: Field>(u: &MultiPoly<K>) -> Result<(u32, MultiPoly<K>)> {
    let mut e = 0u32;
    let mut root = u.clone();
    while let Some(r) = pth_power_root(&root, 1)? {
        if root.is_constant() {
            break;
        }
        e += 1;
        root = r;
    }
    Ok((e, root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Fq};

    type F2 = Fp<2>;
    type F3 = Fp<3>;
    type F5 = Fp<5>;
    type F9 = Fq<3, 2>;

    fn up<K: Field>(cs: &[i64]) -> UniPoly<K> {
        UniPoly::new(cs.iter().map(|&c| K::from_integer(c)).collect())
    }

    #[test]
    fn pth_root_path_over_f2() {
        // x^4 + x^2 = (x^2 + x)^2 = x^2 (x+1)^2
        let f = up::<F2>(&[0, 0, 1, 0, 1]);
        let fact = univariate_factor(&f, 0).unwrap();
        assert_eq!(fact.expand(), f);
        assert_eq!(
            fact.factors,
            vec![(up::<F2>(&[0, 1]), 2), (up::<F2>(&[1, 1]), 2)]
        );
    }

    #[test]
    fn irreducible_quadratic_over_f3() {
        let f = up::<F3>(&[1, 0, 1]); // x^2 + 1
        assert!(is_irreducible(&f, 0).unwrap());
        let g = up::<F3>(&[2, 0, 1]); // x^2 + 2 = (x+1)(x+2)
        assert!(!is_irreducible(&g, 0).unwrap());
    }

    #[test]
    fn splits_all_linears_over_f9() {
        // x^9 - x factors into all nine linear polynomials over F_9
        let mut f = UniPoly::<F9>::x_pow(9).sub(&UniPoly::x());
        f = f.monic();
        let fact = univariate_factor(&f, 7).unwrap();
        assert_eq!(fact.factors.len(), 9);
        assert!(fact
            .factors
            .iter()
            .all(|(g, m)| g.degree() == Some(1) && *m == 1));
        assert_eq!(fact.expand(), f);
    }

    #[test]
    fn mixed_degrees_and_multiplicities() {
        // (x+1)^2 (x^2+x+1) over F_2
        let f = up::<F2>(&[1, 1])
            .mul(&up::<F2>(&[1, 1]))
            .mul(&up::<F2>(&[1, 1, 1]));
        let fact = univariate_factor(&f, 3).unwrap();
        assert_eq!(fact.expand(), f);
        assert_eq!(
            fact.factors,
            vec![(up::<F2>(&[1, 1]), 2), (up::<F2>(&[1, 1, 1]), 1)]
        );
    }

    #[test]
    fn seed_does_not_change_canonical_output() {
        let f = up::<F5>(&[3, 1, 4, 1, 1, 2]);
        let a = univariate_factor(&f, 0).unwrap();
        let b = univariate_factor(&f, 123456).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.expand(), f);
    }

    #[test]
    fn pth_power_root_of_frobenius_image() {
        // x^p - c^p y^p = (x - c y)^p over F_p
        let c = 3i64;
        let u = MultiPoly::<F5>::from_int_terms(2, &[(vec![5, 0], 1), (vec![0, 5], -(c.pow(5)))]);
        let root = pth_power_root(&u, 1).unwrap().unwrap();
        assert_eq!(
            root,
            MultiPoly::from_int_terms(2, &[(vec![1, 0], 1), (vec![0, 1], -c)])
        );
        let (e, r) = largest_pth_power(&u).unwrap();
        assert_eq!(e, 1);
        assert_eq!(r, root);
    }

    #[test]
    fn not_a_pth_power() {
        let u = MultiPoly::<F2>::from_int_terms(2, &[(vec![2, 0], 1), (vec![1, 1], 1)]);
        assert!(pth_power_root(&u, 1).unwrap().is_none());
    }
}
