//! Multiplicity of members at projective points, the parameter-space
//! conditions T_r(x), the incidence loci M_r, and polynomial sections
//! tau -> (x(tau), t(tau)) with a separability diagnostic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linsys::{AlgebraicFamily, LinearSystem};
use crate::poly::MultiPoly;
use crate::projspace::{enumerate_proj, kernel_basis, LinearSubspace, ProjPoint};
use crate::unipoly::UniPoly;

/// Multiplicity of the hypersurface {u = 0} at a projective point: the
/// least total degree in the expansion of u around the point. Scaling the
/// homogeneous coordinates multiplies the expansion by a unit, so the
/// value does not depend on the representative or on a choice of chart.
pub fn multiplicity_at<K: Field>(u: &MultiPoly<K>, p: &ProjPoint<K>) -> Result<u32> {
    u.multiplicity_at_affine(p.coords())
}

/// Multiplicity of the member at parameter t at the point x.
pub fn member_multiplicity_at<K: Field>(
    sys: &LinearSystem<K>,
    t: &ProjPoint<K>,
    x: &ProjPoint<K>,
) -> Result<u32> {
    multiplicity_at(&sys.member_at(t)?, x)
}

/// All exponent vectors in `num_vars` variables of total degree at most
/// `max_total`, in a fixed (graded, lexicographic) order.
pub fn multi_indices(num_vars: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn rec(out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, rest: usize, budget: u32) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=budget {
            prefix.push(v);
            rec(out, prefix, rest - 1, budget - v);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut by_degree: Vec<Vec<u32>> = Vec::new();
    rec(&mut by_degree, &mut Vec::new(), num_vars, max_total);
    by_degree.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
    out.append(&mut by_degree);
    out
}

/// Precomputed Hasse-derivative tables of the basis forms, for building
/// the linear conditions "multiplicity at least r at x" on the parameters.
pub struct MultiplicityTables<K> {
    tables: Vec<BTreeMap<Vec<u32>, MultiPoly<K>>>,
    indices: Vec<Vec<u32>>,
    num_params: usize,
}

impl<K: Field> MultiplicityTables<K> {
    /// Tables for conditions of order r (derivatives up to order r - 1).
    pub fn new(sys: &LinearSystem<K>, r: u32) -> Self {
        assert!(r >= 1, "multiplicity order must be at least 1");
        let tables = sys.forms().iter().map(|f| f.hasse_table(r - 1)).collect();
        MultiplicityTables {
            tables,
            indices: multi_indices(sys.num_vars(), r - 1),
            num_params: sys.forms().len(),
        }
    }

    /// T_r(x): the subspace of parameter vectors t whose member has
    /// multiplicity at least r at x. Kernel of the matrix whose rows are
    /// indexed by derivative orders alpha with |alpha| <= r - 1 and whose
    /// columns are the basis forms.
    pub fn conditions_at(&self, x: &ProjPoint<K>) -> Result<LinearSubspace<K>> {
        let mut rows = Vec::with_capacity(self.indices.len());
        for alpha in &self.indices {
            let mut row = Vec::with_capacity(self.num_params);
            for table in &self.tables {
                let v = match table.get(alpha) {
                    Some(p) => p.evaluate(x.coords())?,
                    None => K::zero(),
                };
                row.push(v);
            }
            rows.push(row);
        }
        Ok(LinearSubspace::span(
            self.num_params,
            kernel_basis(&rows, self.num_params),
        ))
    }
}

/// T_r(x) for a single point (convenience wrapper).
pub fn multiplicity_conditions<K: Field>(
    sys: &LinearSystem<K>,
    x: &ProjPoint<K>,
    r: u32,
) -> Result<LinearSubspace<K>> {
    MultiplicityTables::new(sys, r).conditions_at(x)
}

/// The incidence locus M_r over F_q: every point x together with the
/// (nonzero) subspace T_r(x) of parameters whose member is r-fold at x.
pub fn m_r_locus<K: Field>(
    sys: &LinearSystem<K>,
    r: u32,
    cap: u64,
) -> Result<Vec<(ProjPoint<K>, LinearSubspace<K>)>> {
    let tables = MultiplicityTables::new(sys, r);
    let mut out = Vec::new();
    for x in enumerate_proj::<K>(sys.n(), cap)? {
        let t = tables.conditions_at(&x)?;
        if t.dim() > 0 {
            out.push((x, t));
        }
    }
    Ok(out)
}

/// Points that are r-fold on every member of the system, computed on the
/// basis forms exactly as given (any common factor of the forms counts
/// toward the multiplicity here).
pub fn everywhere_multiple_locus<K: Field>(
    sys: &LinearSystem<K>,
    r: u32,
    cap: u64,
) -> Result<Vec<ProjPoint<K>>> {
    let tables = MultiplicityTables::new(sys, r);
    let mut out = Vec::new();
    for x in enumerate_proj::<K>(sys.n(), cap)? {
        if tables.conditions_at(&x)?.is_full() {
            out.push(x);
        }
    }
    Ok(out)
}

/// A one-parameter source of members: either a pencil (members
/// u(0) + c u(1) at finite parameter values, plus u(1) at infinity) or an
/// algebraic family u(c; x).
#[derive(Clone, Debug)]
pub enum OneParamSystem<K> {
    Pencil(LinearSystem<K>),
    Family(AlgebraicFamily<K>),
}

impl<K: Field> OneParamSystem<K> {
    /// Wraps a pencil; errors when the system has more than two basis forms.
    pub fn pencil(sys: LinearSystem<K>) -> Result<Self> {
        if !sys.is_pencil() {
            return Err(Error::NotPencil { got: sys.s() });
        }
        Ok(OneParamSystem::Pencil(sys))
    }

    pub fn family(fam: AlgebraicFamily<K>) -> Self {
        OneParamSystem::Family(fam)
    }

    pub fn num_x_vars(&self) -> usize {
        match self {
            OneParamSystem::Pencil(s) => s.num_vars(),
            OneParamSystem::Family(f) => f.num_x_vars(),
        }
    }

    pub fn n(&self) -> usize {
        self.num_x_vars() - 1
    }

    pub fn degree(&self) -> u32 {
        match self {
            OneParamSystem::Pencil(s) => s.degree(),
            OneParamSystem::Family(f) => f.degree(),
        }
    }

    /// How many coordinate polynomials a section's parameter part has:
    /// two for a pencil (a point of P^1), one for a family (a value).
    pub fn num_params(&self) -> usize {
        match self {
            OneParamSystem::Pencil(_) => 2,
            OneParamSystem::Family(_) => 1,
        }
    }

    /// The member at a finite parameter value c.
    pub fn member_at_value(&self, c: &K) -> MultiPoly<K> {
        match self {
            OneParamSystem::Pencil(s) => {
                let u0 = &s.forms()[0];
                let u1 = &s.forms()[1];
                u0.add_ref(&u1.scale(c))
            }
            OneParamSystem::Family(f) => f.member_at(c),
        }
    }

    /// The member at parameter infinity, when there is one (pencils only).
    pub fn member_at_infinity(&self) -> Option<&MultiPoly<K>> {
        match self {
            OneParamSystem::Pencil(s) => Some(&s.forms()[1]),
            OneParamSystem::Family(_) => None,
        }
    }
}

/// A polynomial section tau -> (x(tau), t(tau)) together with the target
/// multiplicity order r: the claim it carries is that x(tau) is an r-fold
/// point of the member at t(tau), identically in tau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Section<K> {
    x: Vec<UniPoly<K>>,
    t: Vec<UniPoly<K>>,
    r: u32,
}

impl<K: Field> Section<K> {
    /// Validates: neither coordinate vector empty or identically zero,
    /// and r at least 1.
    pub fn new(x: Vec<UniPoly<K>>, t: Vec<UniPoly<K>>, r: u32) -> Result<Self> {
        assert!(r >= 1, "multiplicity order must be at least 1");
        if x.is_empty() || x.iter().all(|p| p.is_zero()) {
            return Err(Error::ZeroProjectivePoint);
        }
        if t.is_empty() || t.iter().all(|p| p.is_zero()) {
            return Err(Error::ZeroProjectivePoint);
        }
        Ok(Section { x, t, r })
    }

    pub fn x(&self) -> &[UniPoly<K>] {
        &self.x
    }

    pub fn t(&self) -> &[UniPoly<K>] {
        &self.t
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// The point x(c), when the coordinates do not all vanish at c.
    pub fn x_at(&self, c: &K) -> Option<ProjPoint<K>> {
        ProjPoint::new(self.x.iter().map(|p| p.eval(c)).collect()).ok()
    }

    /// The parameter point t(c), when defined.
    pub fn t_at(&self, c: &K) -> Option<ProjPoint<K>> {
        ProjPoint::new(self.t.iter().map(|p| p.eval(c)).collect()).ok()
    }
}

impl<K: Field> fmt::Display for Section<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.x.iter().map(|p| p.render("tau")).collect();
        let ts: Vec<String> = self.t.iter().map(|p| p.render("tau")).collect();
        write!(
            f,
            "x(tau) = ({}), t(tau) = ({}), r = {}",
            xs.join(" : "),
            ts.join(" : "),
            self.r
        )
    }
}

/// Outcome of the exact section check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionVerification {
    /// Whether x(tau) is r-fold on the member at t(tau) at every parameter
    /// value of the field (finite fields), or identically (infinite ones).
    pub holds: bool,
    /// Whether the displacement expansion has no terms below order r as a
    /// polynomial identity in tau. Over F_q this is strictly stronger than
    /// `holds`: a coordinate like tau^(q/p) inverts Frobenius pointwise on
    /// F_q without satisfying the identity.
    pub holds_identically: bool,
    /// The least displacement order attained; `None` when every parameter
    /// value was degenerate (zero point, zero member).
    pub attained_order: Option<u32>,
}

/// Checks a section exactly: expands the member at t(tau) around x(tau)
/// in displacement variables and reads the least displacement degree,
/// both as a polynomial identity in tau and (over a finite field) at
/// every parameter value. Parameter values where the point or the member
/// degenerates to zero are skipped.
pub fn verify_section<K: Field>(
    sys: &OneParamSystem<K>,
    sec: &Section<K>,
) -> Result<SectionVerification> {
    let nx = sys.num_x_vars();
    if sec.x.len() != nx {
        return Err(Error::PointLength {
            expected: nx,
            got: sec.x.len(),
        });
    }
    if sec.t.len() != sys.num_params() {
        return Err(Error::ParameterLength {
            expected: sys.num_params(),
            got: sec.t.len(),
        });
    }
    // Work in variables (d_0, ..., d_n, tau): substitute x_j -> d_j + x_j(tau).
    let rv = nx + 1;
    let tau = nx;
    let images: Vec<MultiPoly<K>> = (0..nx)
        .map(|j| MultiPoly::var(rv, j).add_ref(&MultiPoly::from_univariate(rv, tau, &sec.x[j])))
        .collect();
    let composed = match sys {
        OneParamSystem::Pencil(s) => {
            let mut acc = MultiPoly::zero(rv);
            for (ti, ui) in sec.t.iter().zip(s.forms()) {
                let t_poly = MultiPoly::from_univariate(rv, tau, ti);
                acc = acc.add_ref(&t_poly.mul_ref(&ui.substitute_all(&images)?));
            }
            acc
        }
        OneParamSystem::Family(f) => {
            let mut imgs = images;
            imgs.push(MultiPoly::from_univariate(rv, tau, &sec.t[0]));
            f.poly().substitute_all(&imgs)?
        }
    };
    let min_delta = |p: &MultiPoly<K>| -> Option<u32> {
        p.terms()
            .iter()
            .map(|(e, _)| e[..nx].iter().sum::<u32>())
            .min()
    };
    let identity_order = min_delta(&composed);
    let holds_identically = identity_order.map_or(true, |d| d >= sec.r);
    if K::order().is_none() {
        return Ok(SectionVerification {
            holds: holds_identically,
            holds_identically,
            attained_order: identity_order,
        });
    }
    // Finite field: the section need only hold at each parameter value.
    let mut holds = true;
    let mut attained: Option<u32> = None;
    for c in K::elements() {
        if sec.x.iter().all(|p| p.eval(&c).is_zero()) {
            continue; // point undefined here
        }
        let at_c = composed.partial_eval(tau, &c);
        if at_c.is_zero() {
            continue; // member degenerates here
        }
        let d = min_delta(&at_c).expect("nonzero polynomial");
        attained = Some(attained.map_or(d, |a: u32| a.min(d)));
        if d < sec.r {
            holds = false;
        }
    }
    Ok(SectionVerification {
        holds,
        holds_identically,
        attained_order: attained,
    })
}

/// What the derivative test can say about a section's point part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separability {
    /// Some coordinate has a nonzero derivative (always the case for a
    /// moving section in characteristic zero).
    Separable,
    /// Every coordinate derivative vanishes yet some coordinate moves:
    /// the parametrization factors through the Frobenius map.
    Inseparable,
    /// Every coordinate is constant; the test sees nothing.
    Inconclusive,
}

impl fmt::Display for Separability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Separability::Separable => "separable",
            Separability::Inseparable => "inseparable",
            Separability::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Derivative test on the coordinate polynomials x(tau) of a section.
/// A diagnostic on the given representative: it does not factor out
/// common factors or recognize reparametrizations.
pub fn section_separability<K: Field>(sec: &Section<K>) -> Separability {
    if sec.x.iter().all(|p| p.is_constant()) {
        return Separability::Inconclusive;
    }
    if K::characteristic() == 0 || sec.x.iter().any(|p| !p.derivative().is_zero()) {
        return Separability::Separable;
    }
    Separability::Inseparable
}

/// Searches for polynomial sections through the r-fold points of the
/// members over F_q: collects the r-fold points of the member at every
/// parameter value, restricts to a chart admissible for all of them,
/// interpolates each coordinate, and keeps the candidates that verify
/// exactly. Fits of degree q - 1 or more are rejected as artifacts of
/// interpolating on all of F_q. At most `combo_budget` candidate
/// combinations are tried per chart.
pub fn find_singular_sections<K: Field>(
    sys: &OneParamSystem<K>,
    r: u32,
    cap: u64,
    combo_budget: u64,
) -> Result<Vec<Section<K>>> {
    let q = K::order().ok_or(Error::InfiniteField {
        op: "find_singular_sections",
    })?;
    let nx = sys.num_x_vars();
    let values = K::elements();
    let points = enumerate_proj::<K>(nx - 1, cap)?;
    // r-fold points of the member at each parameter value
    let mut candidates: Vec<Vec<ProjPoint<K>>> = Vec::with_capacity(values.len());
    for c in &values {
        let member = sys.member_at_value(c);
        let mut here = Vec::new();
        if member.is_zero() {
            here = points.clone();
        } else {
            for p in &points {
                if multiplicity_at(&member, p)? >= r {
                    here.push(p.clone());
                }
            }
        }
        if here.is_empty() {
            return Ok(Vec::new());
        }
        candidates.push(here);
    }
    let canonical_t = |sys: &OneParamSystem<K>| -> Vec<UniPoly<K>> {
        match sys {
            OneParamSystem::Pencil(_) => vec![UniPoly::one(), UniPoly::x()],
            OneParamSystem::Family(_) => vec![UniPoly::x()],
        }
    };
    let mut found: Vec<Section<K>> = Vec::new();
    for chart in 0..nx {
        // candidates with a nonzero chart coordinate, scaled so it is one
        let mut scaled: Vec<Vec<Vec<K>>> = Vec::with_capacity(values.len());
        let mut chart_ok = true;
        for here in &candidates {
            let mut sc = Vec::new();
            for p in here {
                let pc = &p.coords()[chart];
                if pc.is_zero() {
                    continue;
                }
                let inv = pc.inverse().expect("nonzero");
                sc.push(p.coords().iter().map(|c| c.clone() * inv.clone()).collect());
            }
            if sc.is_empty() {
                chart_ok = false;
                break;
            }
            scaled.push(sc);
        }
        if !chart_ok {
            continue;
        }
        // walk combinations (one choice per parameter value) up to budget
        let mut idx = vec![0usize; values.len()];
        let mut tried: u64 = 0;
        'combos: loop {
            tried += 1;
            if tried > combo_budget {
                break;
            }
            let mut coords: Vec<UniPoly<K>> = Vec::with_capacity(nx);
            let mut reject = false;
            for j in 0..nx {
                if j == chart {
                    coords.push(UniPoly::one());
                    continue;
                }
                let nodes: Vec<(K, K)> = values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| (v.clone(), scaled[k][idx[k]][j].clone()))
                    .collect();
                let p = UniPoly::interpolate(&nodes)?;
                if p.degree().map_or(false, |d| d as u64 >= q - 1) {
                    reject = true;
                    break;
                }
                coords.push(p);
            }
            if !reject {
                let sec = Section::new(coords, canonical_t(sys), r)?;
                if verify_section(sys, &sec)?.holds && !found.contains(&sec) {
                    found.push(sec);
                }
            }
            // next combination
            let mut k = values.len();
            loop {
                if k == 0 {
                    break 'combos;
                }
                idx[k - 1] += 1;
                if idx[k - 1] < scaled[k - 1].len() {
                    break;
                }
                idx[k - 1] = 0;
                k -= 1;
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Fq, Rational};
    use num_traits::{One, Zero};

    type F2 = Fp<2>;
    type F3 = Fp<3>;
    type F5 = Fp<5>;
    type F7 = Fp<7>;
    type F9 = Fq<3, 2>;

    fn fig_pencil<K: Field>() -> LinearSystem<K> {
        // (X Y^2, Y^2 Z) on P^2
        let x = MultiPoly::<K>::var(3, 0);
        let y = MultiPoly::<K>::var(3, 1);
        let z = MultiPoly::<K>::var(3, 2);
        LinearSystem::new(vec![x.mul_ref(&y.mul_ref(&y)), y.mul_ref(&y).mul_ref(&z)]).unwrap()
    }

    #[test]
    fn projective_multiplicity_matches_chart_computation() {
        // cuspidal cubic Y^2 Z - X^3 over F_7: cusp at (0:0:1), flex at
        // infinity (0:1:0), smooth point (1:1:1)
        let x = MultiPoly::<F7>::var(3, 0);
        let y = MultiPoly::<F7>::var(3, 1);
        let z = MultiPoly::<F7>::var(3, 2);
        let u = y.mul_ref(&y).mul_ref(&z).sub_ref(&x.pow(3));
        let cusp = ProjPoint::from_integers(&[0, 0, 1]).unwrap();
        let flex = ProjPoint::from_integers(&[0, 1, 0]).unwrap();
        let smooth = ProjPoint::from_integers(&[1, 1, 1]).unwrap();
        let off = ProjPoint::from_integers(&[1, 1, 0]).unwrap();
        assert_eq!(multiplicity_at(&u, &cusp).unwrap(), 2);
        assert_eq!(multiplicity_at(&u, &flex).unwrap(), 1);
        assert_eq!(multiplicity_at(&u, &smooth).unwrap(), 1);
        assert_eq!(multiplicity_at(&u, &off).unwrap(), 0);
    }

    #[test]
    fn representative_invariance() {
        let x = MultiPoly::<F5>::var(2, 0);
        let y = MultiPoly::<F5>::var(2, 1);
        let u = x.mul_ref(&x).mul_ref(&y); // X^2 Y
                                           // (0:1) three ways
        for rep in [[0i64, 1], [0, 2], [0, 4]] {
            let p = ProjPoint::from_integers(&rep).unwrap();
            assert_eq!(multiplicity_at(&u, &p).unwrap(), 2);
        }
    }

    #[test]
    fn conditions_cut_out_the_right_members() {
        // At x = (1:0:1), the member of (XY^2, Y^2Z) at (t0:t1) is
        // (t0 X + t1 Z) Y^2, with multiplicity 2 generically and 3 exactly
        // when t0 + t1 = 0.
        let sys = fig_pencil::<F5>();
        let p = ProjPoint::from_integers(&[1, 0, 1]).unwrap();
        let t2 = multiplicity_conditions(&sys, &p, 2).unwrap();
        assert!(t2.is_full());
        let t3 = multiplicity_conditions(&sys, &p, 3).unwrap();
        assert_eq!(t3.dim(), 1);
        assert!(t3.contains_vector(&[F5::one(), -F5::one()]));
        let t4 = multiplicity_conditions(&sys, &p, 4).unwrap();
        assert_eq!(t4.dim(), 0);
    }

    #[test]
    fn everywhere_multiple_uses_raw_forms() {
        // The common factor Y^2 makes every point of the line Y = 0 a
        // double point of every member; the raw (unreduced) forms keep it.
        let sys = fig_pencil::<F3>();
        let twofold = everywhere_multiple_locus(&sys, 2, 1000).unwrap();
        assert_eq!(twofold.len(), 4);
        for p in &twofold {
            assert!(p.coords()[1].is_zero());
        }
        // No point is threefold on every member: the residual factor
        // t0 X + t1 Z moves with t.
        let threefold = everywhere_multiple_locus(&sys, 3, 1000).unwrap();
        assert!(threefold.is_empty());
    }

    #[test]
    fn m_r_locus_collects_conditions() {
        let sys = fig_pencil::<F2>();
        let m3 = m_r_locus(&sys, 3, 1000).unwrap();
        // (1:0:1) with t0 = t1, (1:0:0) with t0 = 0, (0:0:1) with t1 = 0,
        // (0:1:0) base point of the residual... check a known entry:
        let p = ProjPoint::from_integers(&[1, 0, 1]).unwrap();
        let entry = m3.iter().find(|(x, _)| *x == p).expect("in locus");
        assert!(entry.1.contains_vector(&[F2::one(), F2::one()]));
    }

    #[test]
    fn section_verifies_exactly() {
        // x(tau) = (tau : 0 : 1), t(tau) = (1 : -tau): the member there is
        // (X - tau Z) Y^2, which is 3-fold at (tau : 0 : 1).
        let sys = OneParamSystem::pencil(fig_pencil::<F5>()).unwrap();
        let sec = Section::new(
            vec![UniPoly::x(), UniPoly::zero(), UniPoly::one()],
            vec![UniPoly::one(), UniPoly::x().neg()],
            3,
        )
        .unwrap();
        let v = verify_section(&sys, &sec).unwrap();
        assert!(v.holds);
        assert_eq!(v.attained_order, Some(3));
        // with the sign flipped the multiplicity drops to 2
        let bad = Section::new(
            vec![UniPoly::x(), UniPoly::zero(), UniPoly::one()],
            vec![UniPoly::one(), UniPoly::x()],
            3,
        )
        .unwrap();
        let v = verify_section(&sys, &bad).unwrap();
        assert!(!v.holds);
        assert_eq!(v.attained_order, Some(2));
    }

    #[test]
    fn section_over_q_verifies() {
        let sys = OneParamSystem::pencil(fig_pencil::<Rational>()).unwrap();
        let sec = Section::new(
            vec![UniPoly::x(), UniPoly::zero(), UniPoly::one()],
            vec![UniPoly::one(), UniPoly::x().neg()],
            3,
        )
        .unwrap();
        assert!(verify_section(&sys, &sec).unwrap().holds);
        assert_eq!(section_separability(&sec), Separability::Separable);
    }

    #[test]
    fn separability_classification() {
        let sep = Section::<F3>::new(
            vec![UniPoly::x(), UniPoly::one()],
            vec![UniPoly::one(), UniPoly::x()],
            2,
        )
        .unwrap();
        assert_eq!(section_separability(&sep), Separability::Separable);
        let insep = Section::<F3>::new(
            vec![UniPoly::x_pow(3), UniPoly::one()],
            vec![UniPoly::one(), UniPoly::x()],
            2,
        )
        .unwrap();
        assert_eq!(section_separability(&insep), Separability::Inseparable);
        let cst = Section::<F3>::new(
            vec![UniPoly::one(), UniPoly::one()],
            vec![UniPoly::one(), UniPoly::x()],
            2,
        )
        .unwrap();
        assert_eq!(section_separability(&cst), Separability::Inconclusive);
    }

    #[test]
    fn finds_the_triple_point_section() {
        // members (X + tau Z) Y^2: triple point at (-tau : 0 : 1)
        let sys = OneParamSystem::pencil(fig_pencil::<F5>()).unwrap();
        let found = find_singular_sections(&sys, 3, 1000, 10_000).unwrap();
        assert_eq!(found.len(), 1);
        let sec = &found[0];
        assert_eq!(sec.x()[0], UniPoly::x().neg());
        assert!(sec.x()[1].is_zero());
        assert_eq!(sec.x()[2], UniPoly::one());
        assert_eq!(section_separability(sec), Separability::Separable);
    }

    #[test]
    fn frobenius_section_of_the_purely_inseparable_pencil() {
        // pencil (X^3, -Y^3) over F_9: the member at (1 : tau) is
        // X^3 - tau Y^3 = (X - tau^(1/3) Y)^3, and tau -> tau^(1/3) is
        // the polynomial tau^3 on F_9.
        let x = MultiPoly::<F9>::var(2, 0);
        let y = MultiPoly::<F9>::var(2, 1);
        let sys = LinearSystem::new(vec![x.pow(3), y.pow(3).neg_ref()]).unwrap();
        let one = OneParamSystem::pencil(sys).unwrap();
        let found = find_singular_sections(&one, 3, 1000, 10_000).unwrap();
        assert_eq!(found.len(), 1);
        let sec = &found[0];
        assert_eq!(sec.x()[0], UniPoly::x_pow(3));
        assert_eq!(sec.x()[1], UniPoly::one());
        assert_eq!(section_separability(sec), Separability::Inseparable);
        // holds at every parameter value, but not as an identity:
        // (tau^3)^3 = tau^9 equals tau only pointwise on F_9
        let v = verify_section(&one, sec).unwrap();
        assert!(v.holds);
        assert!(!v.holds_identically);
        assert_eq!(v.attained_order, Some(3));
    }

    #[test]
    fn family_section_for_the_moving_cusp() {
        // u(t) = Y^2 Z - (X - t Z)^3 over F_7: cusp section (tau : 0 : 1)
        let x = MultiPoly::<F7>::var(4, 0);
        let y = MultiPoly::<F7>::var(4, 1);
        let z = MultiPoly::<F7>::var(4, 2);
        let t = MultiPoly::<F7>::var(4, 3);
        let u = y
            .mul_ref(&y)
            .mul_ref(&z)
            .sub_ref(&x.sub_ref(&t.mul_ref(&z)).pow(3));
        let fam = AlgebraicFamily::new(u, 3).unwrap();
        let one = OneParamSystem::family(fam);
        let found = find_singular_sections(&one, 2, 1000, 10_000).unwrap();
        assert_eq!(found.len(), 1);
        let sec = &found[0];
        assert_eq!(sec.x()[0], UniPoly::x());
        assert!(sec.x()[1].is_zero());
        assert_eq!(sec.x()[2], UniPoly::one());
        assert_eq!(sec.t().len(), 1);
        assert_eq!(section_separability(sec), Separability::Separable);
        assert!(verify_section(&one, sec).unwrap().holds);
    }

    #[test]
    fn multi_index_enumeration() {
        let idx = multi_indices(2, 2);
        assert_eq!(
            idx,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![0, 2],
                vec![1, 1],
                vec![2, 0],
            ]
        );
    }
}
