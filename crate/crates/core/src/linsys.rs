//! Linear systems of projective hypersurfaces: a basis of forms u(0),...,u(s)
//! spanning the members t0*u(0) + ... + ts*u(s), together with the fixed
//! component / residual split and base-locus computation, plus one-parameter
//! algebraic families u(t; x).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gcd::{exact_div, gcd_many};
use crate::poly::MultiPoly;
use crate::projspace::{enumerate_proj, rank, ProjPoint};

/// A linear system on P^n given by s+1 linearly independent forms of a
/// common degree m.
#[derive(Clone, Debug)]
pub struct LinearSystem<K> {
    forms: Vec<MultiPoly<K>>,
    num_vars: usize,
    degree: u32,
}

impl<K: Field> LinearSystem<K> {
    /// Validates and builds a system: at least one form, all nonzero, same
    /// variable count, homogeneous of one common degree, linearly
    /// independent over K.
    pub fn new(forms: Vec<MultiPoly<K>>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::EmptySystem);
        }
        let num_vars = forms[0].num_vars();
        let mut degree = None;
        for (index, f) in forms.iter().enumerate() {
            if f.is_zero() {
                return Err(Error::ZeroForm { index });
            }
            if f.num_vars() != num_vars {
                return Err(Error::FormVariableMismatch {
                    index,
                    expected: num_vars,
                    got: f.num_vars(),
                });
            }
            let d = f
                .homogeneous_degree()
                .ok_or(Error::FormNotHomogeneous { index })?;
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::FormDegreeMismatch {
                        index,
                        expected: d0,
                        got: d,
                    })
                }
                _ => {}
            }
        }
        let degree = degree.expect("nonempty");
        // Linear independence: rank of the coefficient matrix over the
        // union of monomial supports.
        let mut monomials: Vec<Vec<u32>> = Vec::new();
        for f in &forms {
            for (e, _) in f.terms() {
                if !monomials.contains(e) {
                    monomials.push(e.clone());
                }
            }
        }
        let mat: Vec<Vec<K>> = forms
            .iter()
            .map(|f| {
                monomials
                    .iter()
                    .map(|m| {
                        f.terms()
                            .iter()
                            .find(|(e, _)| e == m)
                            .map_or_else(K::zero, |(_, c)| c.clone())
                    })
                    .collect()
            })
            .collect();
        if rank(&mat) != forms.len() {
            return Err(Error::DependentForms);
        }
        Ok(LinearSystem {
            forms,
            num_vars,
            degree,
        })
    }

    pub fn forms(&self) -> &[MultiPoly<K>] {
        &self.forms
    }

    /// s, the projective dimension of the parameter space.
    pub fn s(&self) -> usize {
        self.forms.len() - 1
    }

    /// n, the dimension of the ambient projective space.
    pub fn n(&self) -> usize {
        self.num_vars - 1
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Common degree m of the forms.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Whether the system is a pencil (s = 1).
    pub fn is_pencil(&self) -> bool {
        self.s() == 1
    }

    /// The member at parameter point t: sum of t_i * u(i).
    pub fn member_at(&self, t: &ProjPoint<K>) -> Result<MultiPoly<K>> {
        if t.coords().len() != self.forms.len() {
            return Err(Error::ParameterLength {
                expected: self.forms.len(),
                got: t.coords().len(),
            });
        }
        let mut acc = MultiPoly::zero(self.num_vars);
        for (c, f) in t.coords().iter().zip(&self.forms) {
            if !c.is_zero() {
                acc = &acc + &f.scale(c);
            }
        }
        Ok(acc)
    }

    /// GCD of the basis forms (the fixed component, monic) and the residual
    /// system obtained by dividing it out of every form.
    pub fn fixed_and_residual(&self) -> Result<(MultiPoly<K>, LinearSystem<K>)> {
        let g = gcd_many(&self.forms)?;
        let residual: Vec<MultiPoly<K>> = self
            .forms
            .iter()
            .map(|f| exact_div(f, &g))
            .collect::<Result<_>>()?;
        Ok((g, LinearSystem::new(residual)?))
    }

    /// Whether the fixed component is trivial (a constant).
    pub fn fixed_component_is_trivial(&self) -> Result<bool> {
        Ok(gcd_many(&self.forms)?.is_constant())
    }

    /// Points of P^n(F_q) where every given form vanishes.
    pub fn common_zeros_of(forms: &[MultiPoly<K>], cap: u64) -> Result<Vec<ProjPoint<K>>> {
        let num_vars = forms
            .first()
            .map(|f| f.num_vars())
            .ok_or(Error::EmptySystem)?;
        let pts = enumerate_proj::<K>(num_vars - 1, cap)?;
        let mut out = Vec::new();
        for p in pts {
            let mut all = true;
            for f in forms {
                if !f.evaluate(p.coords())?.is_zero() {
                    all = false;
                    break;
                }
            }
            if all {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Base locus over F_q: the common zeros of the *residual* system, i.e.
    /// the fixed component does not contribute. (The older usage: the
    /// fixed component is split off before intersecting the members.)
    pub fn base_locus(&self, cap: u64) -> Result<Vec<ProjPoint<K>>> {
        let (_, residual) = self.fixed_and_residual()?;
        Self::common_zeros_of(&residual.forms, cap)
    }

    /// Common zeros of the raw basis forms, fixed component included.
    pub fn common_zeros(&self, cap: u64) -> Result<Vec<ProjPoint<K>>> {
        Self::common_zeros_of(&self.forms, cap)
    }
}

/// A one-parameter family of degree-m hypersurfaces u(t; x): a polynomial
/// in x-variables whose coefficients are univariate polynomials in t. Not
/// required to be linear in t (e.g. the cuspidal family with a cube in t).
#[derive(Clone, Debug)]
pub struct AlgebraicFamily<K> {
    /// Polynomial in num_x_vars + 1 variables; the last variable is t.
    poly: MultiPoly<K>,
    num_x_vars: usize,
    degree: u32,
}

impl<K: Field> AlgebraicFamily<K> {
    /// Validates: every term has the same total degree in the x-variables
    /// (homogeneity in x for each power of t), and the family actually
    /// involves x.
    pub fn new(poly: MultiPoly<K>, num_x_vars: usize) -> Result<Self> {
        assert_eq!(
            poly.num_vars(),
            num_x_vars + 1,
            "family takes x-vars plus t"
        );
        // zero, or every term free of the x-variables
        if poly
            .terms()
            .iter()
            .all(|(e, _)| e[..num_x_vars].iter().all(|&x| x == 0))
        {
            return Err(Error::FamilyConstantInX);
        }
        let mut degree = None;
        for (e, _) in poly.terms() {
            let d: u32 = e[..num_x_vars].iter().sum();
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return Err(Error::FamilyNotHomogeneous),
                _ => {}
            }
        }
        let degree = degree.expect("nonzero");
        Ok(AlgebraicFamily {
            poly,
            num_x_vars,
            degree,
        })
    }

    pub fn poly(&self) -> &MultiPoly<K> {
        &self.poly
    }

    pub fn num_x_vars(&self) -> usize {
        self.num_x_vars
    }

    pub fn n(&self) -> usize {
        self.num_x_vars - 1
    }

    /// Common degree in x of every member.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The member at a parameter value: substitute t and drop the t slot.
    pub fn member_at(&self, t: &K) -> MultiPoly<K> {
        self.poly
            .partial_eval(self.num_x_vars, t)
            .remove_var(self.num_x_vars)
            .expect("t fully substituted")
    }

    /// Points lying on every member of the family, over F_q: intersection
    /// of the members at all q parameter values. (Affine parameter values
    /// only; a family is not a linear system and has no point at t = ∞.)
    pub fn common_points(&self, cap: u64) -> Result<Vec<ProjPoint<K>>> {
        K::order().ok_or(Error::InfiniteField {
            op: "family common_points",
        })?;
        let members: Vec<MultiPoly<K>> = K::elements()
            .into_iter()
            .map(|t| self.member_at(&t))
            .collect();
        LinearSystem::common_zeros_of(&members, cap)
    }
}
