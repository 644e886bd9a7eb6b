//! Multivariate polynomial GCD: content/primitive-part recursion down to a
//! univariate subresultant pseudo-remainder sequence. Deterministic and
//! exact — no modular or heuristic shortcuts.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::MultiPoly;
use crate::unipoly::UniPoly;

/// Exact division of `u` by nonzero `v`; errors when `v` does not divide.
pub fn exact_div<K: Field>(u: &MultiPoly<K>, v: &MultiPoly<K>) -> Result<MultiPoly<K>> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = u.num_vars();
    let mut rem = u.clone();
    let mut quot = MultiPoly::zero(n);
    let (ve, vc) = {
        let (e, c) = v.leading().unwrap();
        (e.to_vec(), c.clone())
    };
    while !rem.is_zero() {
        let (re, rc) = {
            let (e, c) = rem.leading().unwrap();
            (e.to_vec(), c.clone())
        };
        if re.iter().zip(&ve).any(|(&a, &b)| a < b) {
            return Err(Error::InexactDivision);
        }
        let qe: Vec<u32> = re.iter().zip(&ve).map(|(&a, &b)| a - b).collect();
        let qc = rc / vc.clone();
        let qt = MultiPoly::monomial(n, qe, qc);
        rem = rem.sub_ref(&qt.mul_ref(v));
        quot = quot.add_ref(&qt);
    }
    Ok(quot)
}

/// Whether `v` divides `u` exactly (`v` nonzero).
pub fn divides<K: Field>(v: &MultiPoly<K>, u: &MultiPoly<K>) -> bool {
    exact_div(u, v).is_ok()
}

/// Variables that actually occur in `u` or `v`.
fn active_vars<K: Field>(u: &MultiPoly<K>, v: &MultiPoly<K>) -> Vec<usize> {
    (0..u.num_vars())
        .filter(|&i| u.degree_in(i).unwrap_or(0) > 0 || v.degree_in(i).unwrap_or(0) > 0)
        .collect()
}

/// Ascending coefficients of `u` viewed as univariate in `var` (each keeps
/// the full variable count with `var`-exponent zero).
fn var_coeffs<K: Field>(u: &MultiPoly<K>, var: usize) -> Vec<MultiPoly<K>> {
    let n = u.num_vars();
    let deg = u.degree_in(var).unwrap_or(0) as usize;
    let mut out = vec![MultiPoly::zero(n); deg + 1];
    for (e, c) in u.terms() {
        let d = e[var] as usize;
        let mut e2 = e.clone();
        e2[var] = 0;
        out[d] = out[d].add_ref(&MultiPoly::monomial(n, e2, c.clone()));
    }
    out
}

fn lc_in_var<K: Field>(u: &MultiPoly<K>, var: usize) -> MultiPoly<K> {
    var_coeffs(u, var).pop().expect("nonzero polynomial")
}

fn var_shift<K: Field>(u: &MultiPoly<K>, var: usize, by: u32) -> MultiPoly<K> {
    let n = u.num_vars();
    MultiPoly::new(
        n,
        u.terms()
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[var] += by;
                (e2, c.clone())
            })
            .collect(),
    )
}

/// Pseudo-remainder of `f` by `g` in `var`: lc(g)^(deg f - deg g + 1) f mod g.
fn pseudo_rem<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>, var: usize) -> MultiPoly<K> {
    let dg = g.degree_in(var).unwrap_or(0);
    let lcg = lc_in_var(g, var);
    let mut r = f.clone();
    let mut budget = f.degree_in(var).unwrap_or(0) as i64 - dg as i64 + 1;
    while !r.is_zero() {
        let dr = r.degree_in(var).unwrap_or(0);
        if dr < dg {
            break;
        }
        let lcr = lc_in_var(&r, var);
        let t = var_shift(&lcr.mul_ref(g), var, dr - dg);
        r = lcg.mul_ref(&r).sub_ref(&t);
        budget -= 1;
    }
    // pad so the full prem scaling convention holds
    for _ in 0..budget.max(0) {
        r = lcg.mul_ref(&r);
    }
    r
}

/// Content with respect to `var`: the gcd of the `var`-coefficients.
fn content_in_var<K: Field>(u: &MultiPoly<K>, var: usize) -> Result<MultiPoly<K>> {
    let coeffs = var_coeffs(u, var);
    let nonzero: Vec<&MultiPoly<K>> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    let mut acc = nonzero[0].clone();
    for c in &nonzero[1..] {
        acc = multivariate_gcd(&acc, c)?;
        if acc.is_constant() {
            break;
        }
    }
    Ok(acc.monic())
}

/// Greatest common divisor, normalized to graded-lex leading coefficient one.
/// gcd(u, 0) = monic u; gcd(0, 0) is an error.
pub fn multivariate_gcd<K: Field>(u: &MultiPoly<K>, v: &MultiPoly<K>) -> Result<MultiPoly<K>> {
    if u.is_zero() && v.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    if u.is_zero() {
        return Ok(v.monic());
    }
    if v.is_zero() {
        return Ok(u.monic());
    }
    if u.num_vars() != v.num_vars() {
        return Err(Error::VariableCountMismatch {
            left: u.num_vars(),
            right: v.num_vars(),
        });
    }
    let n = u.num_vars();
    let active = active_vars(u, v);
    if active.is_empty() {
        return Ok(MultiPoly::constant(n, K::one()));
    }
    if active.len() == 1 {
        let var = active[0];
        let (_, a) = u.to_univariate().expect("single active variable");
        let (_, b) = v.to_univariate().expect("single active variable");
        let g = a.gcd(&b);
        return Ok(MultiPoly::from_univariate(n, var, &g));
    }

    // multivariate case: recurse on contents, run a subresultant PRS on the
    // primitive parts in the highest active variable
    let main = *active.last().unwrap();
    let cu = content_in_var(u, main)?;
    let cv = content_in_var(v, main)?;
    let c = multivariate_gcd(&cu, &cv)?;
    let mut f1 = exact_div(u, &cu)?;
    let mut f2 = exact_div(v, &cv)?;
    if f1.degree_in(main).unwrap_or(0) < f2.degree_in(main).unwrap_or(0) {
        std::mem::swap(&mut f1, &mut f2);
    }
    let mut g = MultiPoly::constant(n, K::one());
    let mut h = MultiPoly::constant(n, K::one());
    loop {
        let delta = f1.degree_in(main).unwrap_or(0) - f2.degree_in(main).unwrap_or(0);
        let r = pseudo_rem(&f1, &f2, main);
        if r.is_zero() {
            break;
        }
        if r.degree_in(main).unwrap_or(0) == 0 {
            // coprime in the main variable
            f2 = MultiPoly::constant(n, K::one());
            break;
        }
        let beta = g.mul_ref(&h.pow(delta));
        let rnew = exact_div(&r, &beta)?;
        f1 = f2;
        f2 = rnew;
        g = lc_in_var(&f1, main);
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => exact_div(&g.pow(d), &h.pow(d - 1))?,
        };
    }
    let pp = if f2.is_constant() {
        MultiPoly::constant(n, K::one())
    } else {
        let cf = content_in_var(&f2, main)?;
        exact_div(&f2, &cf)?
    };
    Ok(c.mul_ref(&pp).monic())
}

/// Folds the gcd over a list of polynomials (zeros skipped; all-zero errors).
pub fn gcd_many<K: Field>(polys: &[MultiPoly<K>]) -> Result<MultiPoly<K>> {
    let nonzero: Vec<&MultiPoly<K>> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::GcdOfZeros);
    }
    let mut acc = nonzero[0].clone();
    for p in &nonzero[1..] {
        acc = multivariate_gcd(&acc, p)?;
        if acc.is_constant() {
            break;
        }
    }
    Ok(acc.monic())
}

/// Univariate convenience used by section bookkeeping: the monic gcd of a
/// tuple of univariate polynomials (zeros skipped; all-zero gives zero).
pub fn unipoly_gcd_many<K: Field>(polys: &[UniPoly<K>]) -> UniPoly<K> {
    let mut acc = UniPoly::zero();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { p.monic() } else { acc.gcd(p) };
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::One;

    type F2 = Fp<2>;
    type F5 = Fp<5>;

    fn xy_poly<K: Field>(terms: &[(u32, u32, i64)]) -> MultiPoly<K> {
        MultiPoly::from_int_terms(
            2,
            &terms
                .iter()
                .map(|&(a, b, c)| (vec![a, b], c))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let a: MultiPoly<F5> = xy_poly(&[(1, 0, 1), (0, 1, 4)]);
        let b: MultiPoly<F5> = xy_poly(&[(2, 0, 2), (1, 1, 1), (0, 0, 3)]);
        let prod = a.mul_ref(&b);
        assert_eq!(exact_div(&prod, &a).unwrap(), b);
        assert_eq!(exact_div(&prod, &b).unwrap(), a);
        assert!(exact_div(&prod.add_ref(&MultiPoly::constant(2, F5::one())), &a).is_err());
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // gcd((x - y) x, (x - y) y) = x - y
        let g: MultiPoly<Rational> = xy_poly(&[(1, 0, 1), (0, 1, -1)]);
        let a = g.mul_ref(&xy_poly(&[(1, 0, 1)]));
        let b = g.mul_ref(&xy_poly(&[(0, 1, 1)]));
        assert_eq!(multivariate_gcd(&a, &b).unwrap(), g.monic());
    }

    #[test]
    fn gcd_detects_coprime() {
        let a: MultiPoly<Rational> = xy_poly(&[(2, 0, 1), (0, 1, 1)]);
        let b: MultiPoly<Rational> = xy_poly(&[(1, 0, 1), (0, 0, 1)]);
        let g = multivariate_gcd(&a, &b).unwrap();
        assert!(g.is_constant());
    }

    #[test]
    fn gcd_over_f2_with_squared_factor() {
        // gcd(y^2 (x + y), y^3) = y^2 over F_2
        let a: MultiPoly<F2> = xy_poly(&[(1, 2, 1), (0, 3, 1)]);
        let b: MultiPoly<F2> = xy_poly(&[(0, 3, 1)]);
        assert_eq!(multivariate_gcd(&a, &b).unwrap(), xy_poly(&[(0, 2, 1)]));
    }

    #[test]
    fn gcd_three_variables() {
        // common factor x y^2 across the two fig-1-left style forms
        let xy2: MultiPoly<Rational> = MultiPoly::from_int_terms(3, &[(vec![1, 2, 0], 1)]);
        let y2z: MultiPoly<Rational> = MultiPoly::from_int_terms(3, &[(vec![0, 2, 1], 1)]);
        let g = multivariate_gcd(&xy2, &y2z).unwrap();
        assert_eq!(g, MultiPoly::from_int_terms(3, &[(vec![0, 2, 0], 1)]));
    }

    #[test]
    fn gcd_many_folds() {
        let x: MultiPoly<F5> = xy_poly(&[(1, 0, 1)]);
        let forms = vec![
            x.mul_ref(&xy_poly(&[(1, 0, 2), (0, 1, 1)])),
            x.mul_ref(&xy_poly(&[(0, 1, 3)])),
            x.mul_ref(&xy_poly(&[(0, 0, 4)])),
        ];
        assert_eq!(gcd_many(&forms).unwrap(), x);
    }

    #[test]
    fn gcd_zero_cases() {
        let z = MultiPoly::<Rational>::zero(2);
        let a: MultiPoly<Rational> = xy_poly(&[(1, 0, 2)]);
        assert_eq!(multivariate_gcd(&z, &a).unwrap(), a.monic());
        assert!(multivariate_gcd(&z, &z).is_err());
    }

    #[test]
    fn primitive_part_recursion_handles_nested_content() {
        // u = (y+1) * (x+y)^2, v = (y+1) * (x-y) over Q: gcd = y+1
        let c: MultiPoly<Rational> = xy_poly(&[(0, 1, 1), (0, 0, 1)]);
        let u = c.mul_ref(&xy_poly(&[(1, 0, 1), (0, 1, 1)]).pow(2));
        let v = c.mul_ref(&xy_poly(&[(1, 0, 1), (0, 1, -1)]));
        assert_eq!(multivariate_gcd(&u, &v).unwrap(), c.monic());
    }
}
