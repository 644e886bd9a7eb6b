//! Exact arithmetic for linear systems of projective hypersurfaces.
//!
//! A linear system is spanned by homogeneous forms u(0), ..., u(s) of a
//! common degree on P^n; its members are the hypersurfaces cut out by the
//! nonzero combinations t0*u(0) + ... + ts*u(s). This crate computes, over
//! the rationals and over small finite fields, the objects the classical
//! statements about such systems turn on:
//!
//! * the fixed component (the gcd of the basis forms) and the base locus
//!   of the residual system ([`linsys`]);
//! * multiplicities of members at points, the linear conditions `T_r(x)`
//!   they impose on parameters, and sections of r-fold points along with
//!   the derivative test for their separability ([`multiplicity`]);
//! * the two statements themselves -- multiple points of variable members
//!   lie in the base locus unless the section of multiple points moves
//!   inseparably, and a pencil without fixed components has almost no
//!   reducible members unless it is composite with a smaller pencil or
//!   made of p-th powers -- together with compositeness tests, image
//!   dimension, and exhaustive factoring ([`theorems`]);
//! * the Hasse-derivative calculus these rest on, which replaces the
//!   ordinary partials in positive characteristic ([`poly`], [`factor`],
//!   [`gcd`]);
//! * a plain-text input format ([`document`], [`expr`]) and a catalog of
//!   the classical examples and counterexamples with replayable check
//!   batteries ([`corpus`]).
//!
//! Arithmetic is exact everywhere: `Fp<P>` and `Fq<P, K>` for finite
//! fields, arbitrary-precision rationals for characteristic zero. Nothing
//! is floating point and no computation is randomized except where a
//! seed is taken explicitly.
//!
//! # Example
//!
//! ```
//! use pencilbox::document::SystemDocument;
//! use pencilbox::multiplicity::OneParamSystem;
//! use pencilbox::theorems::{check_theorem_first, Verdict};
//! use pencilbox::F5;
//!
//! let doc = SystemDocument::parse(
//!     "field gf(5)\n\
//!      vars X Y Z\n\
//!      form X*Y^2\n\
//!      form -Y^2*Z\n\
//!      section x = (tau, 0, 1); t = (1, tau); r = 3\n",
//! )
//! .unwrap();
//! let sys = OneParamSystem::pencil(doc.system::<F5>().unwrap()).unwrap();
//! let sec = doc.section::<F5>(0).unwrap();
//! let report = check_theorem_first(&sys, &sec, 10_000).unwrap();
//! assert_eq!(report.verdict, Verdict::Holds);
//! ```

pub mod corpus;
pub mod document;
pub mod error;
pub mod expr;
pub mod factor;
pub mod field;
pub mod gcd;
pub mod linsys;
pub mod multiplicity;
pub mod poly;
pub mod projspace;
pub mod theorems;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{Field, Fp, Fq, Rational};
pub use poly::MultiPoly;
pub use projspace::ProjPoint;
pub use unipoly::UniPoly;

/// The prime field with two elements.
pub type F2 = Fp<2>;
/// The prime field with three elements.
pub type F3 = Fp<3>;
/// The field with four elements.
pub type F4 = Fq<2, 2>;
/// The prime field with five elements.
pub type F5 = Fp<5>;
/// The prime field with seven elements.
pub type F7 = Fp<7>;
/// The field with eight elements.
pub type F8 = Fq<2, 3>;
/// The field with nine elements.
pub type F9 = Fq<3, 2>;
/// The prime field with eleven elements.
pub type F11 = Fp<11>;
/// The prime field with thirteen elements.
pub type F13 = Fp<13>;
/// The field with twenty-five elements.
pub type F25 = Fq<5, 2>;

/// A multivariate polynomial with exact rational coefficients.
pub type PolyQ = MultiPoly<Rational>;

/// Runs a block of code with `$k` bound to the concrete field type named
/// by a [`document::FieldSpec`], for every field this crate ships. The
/// macro expands to a `match` whose arms `return` the block's value, so
/// it must be used inside a function returning [`Result`]; an unsupported
/// field falls through to an error.
///
/// # Example
///
/// ```
/// use pencilbox::document::{FieldSpec, SystemDocument};
/// use pencilbox::{with_field, Field, Result};
///
/// fn base_point_count(doc: &SystemDocument) -> Result<usize> {
///     with_field!(doc.field, K, {
///         Ok(doc.system::<K>()?.base_locus(10_000)?.len())
///     })
/// }
///
/// let doc = SystemDocument::parse("field gf(5)\nvars X Y Z\nform X\nform Y\n").unwrap();
/// assert_eq!(base_point_count(&doc).unwrap(), 1);
/// ```
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $k:ident, $body:block) => {{
        use $crate::document::FieldSpec;
        match $spec {
            FieldSpec::Gf { p: 2, k: 1 } => {
                type $k = $crate::F2;
                return $body;
            }
            FieldSpec::Gf { p: 3, k: 1 } => {
                type $k = $crate::F3;
                return $body;
            }
            FieldSpec::Gf { p: 5, k: 1 } => {
                type $k = $crate::F5;
                return $body;
            }
            FieldSpec::Gf { p: 7, k: 1 } => {
                type $k = $crate::F7;
                return $body;
            }
            FieldSpec::Gf { p: 11, k: 1 } => {
                type $k = $crate::F11;
                return $body;
            }
            FieldSpec::Gf { p: 13, k: 1 } => {
                type $k = $crate::F13;
                return $body;
            }
            FieldSpec::Gf { p: 2, k: 2 } => {
                type $k = $crate::F4;
                return $body;
            }
            FieldSpec::Gf { p: 2, k: 3 } => {
                type $k = $crate::F8;
                return $body;
            }
            FieldSpec::Gf { p: 3, k: 2 } => {
                type $k = $crate::F9;
                return $body;
            }
            FieldSpec::Gf { p: 5, k: 2 } => {
                type $k = $crate::F25;
                return $body;
            }
            FieldSpec::Q => {
                type $k = $crate::Rational;
                return $body;
            }
            other => {
                return Err($crate::Error::Document {
                    file_line: 0,
                    msg: format!("unsupported field `{other}`"),
                }
                .into())
            }
        }
    }};
}
