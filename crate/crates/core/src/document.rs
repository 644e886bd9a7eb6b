//! A plain-text input format for linear systems, algebraic families, and
//! sections. A document looks like
//!
//! ```text
//! # a pencil of plane cubics
//! field gf(5)
//! vars X Y Z
//! form X*Y^2
//! form Y^2*Z
//! section x = (tau, 0, 1); t = (1, -tau); r = 3
//! ```
//!
//! with these line kinds, in any order, `#` starting a comment:
//!
//! * `field q` or `field gf(p)` / `field gf(p^k)` -- where to work;
//! * `vars X Y Z` -- the homogeneous point coordinates;
//! * `params s t` -- optional parameter names (defaults `t0 t1 ...`);
//! * `form <expr>` -- one basis form, repeated; or
//! * `family <expr>` -- a single polynomial involving exactly one
//!   parameter name, homogeneous in the point variables;
//! * `section x = (<expr>, ...); t = (<expr>, ...); r = <int>` --
//!   univariate expressions in `tau`, repeatable.
//!
//! Coefficients are written as integers or fractions; they are stored
//! exactly and mapped into the chosen field on instantiation, failing
//! cleanly when a denominator vanishes in the target characteristic.

use num::Integer;

use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::field::{Field, Rational};
use crate::linsys::{AlgebraicFamily, LinearSystem};
use crate::multiplicity::{OneParamSystem, Section};
use crate::poly::MultiPoly;
use crate::unipoly::UniPoly;

/// Which field a document asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The finite field with p^k elements.
    Gf { p: u64, k: u32 },
}

impl FieldSpec {
    /// The number of elements, when finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Q => None,
            FieldSpec::Gf { p, k } => Some(p.pow(*k)),
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "q"),
            FieldSpec::Gf { p, k: 1 } => write!(f, "gf({p})"),
            FieldSpec::Gf { p, k } => write!(f, "gf({p}^{k})"),
        }
    }
}

/// A section as written: univariate expressions with exact rational
/// coefficients.
#[derive(Clone, Debug)]
pub struct SectionText {
    pub x: Vec<UniPoly<Rational>>,
    pub t: Vec<UniPoly<Rational>>,
    pub r: u32,
}

/// A parsed document: the field, the variable names, and either a list
/// of basis forms or a one-parameter family, plus any sections.
#[derive(Clone, Debug)]
pub struct SystemDocument {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub forms: Vec<MultiPoly<Rational>>,
    pub family: Option<MultiPoly<Rational>>,
    pub sections: Vec<SectionText>,
}

fn doc_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Document {
        file_line: line,
        msg: msg.into(),
    }
}

fn parse_field(s: &str, line: usize) -> Result<FieldSpec> {
    let s = s.trim().to_ascii_lowercase();
    if s == "q" || s == "rationals" {
        return Ok(FieldSpec::Q);
    }
    let inner = s
        .strip_prefix("gf(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| doc_err(line, format!("unrecognized field `{s}`")))?;
    let (p_str, k_str) = match inner.split_once('^') {
        Some((a, b)) => (a, b),
        None => (inner, "1"),
    };
    let p: u64 = p_str
        .trim()
        .parse()
        .map_err(|_| doc_err(line, format!("bad characteristic `{p_str}`")))?;
    let k: u32 = k_str
        .trim()
        .parse()
        .map_err(|_| doc_err(line, format!("bad extension degree `{k_str}`")))?;
    if p < 2 || k == 0 {
        return Err(doc_err(line, format!("bad field gf({p}^{k})")));
    }
    // normalize prime powers written in flat form: gf(9) -> gf(3^2)
    let q = p
        .checked_pow(k)
        .ok_or_else(|| doc_err(line, format!("field gf({p}^{k}) is too large")))?;
    let base = smallest_prime_factor(q);
    let mut e = 0u32;
    let mut rest = q;
    while rest % base == 0 {
        rest /= base;
        e += 1;
    }
    if rest != 1 {
        return Err(doc_err(line, format!("{q} is not a prime power")));
    }
    Ok(FieldSpec::Gf { p: base, k: e })
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

impl SystemDocument {
    /// Parses a document from text.
    pub fn parse(text: &str) -> Result<Self> {
        let mut field = None;
        let mut vars: Option<Vec<String>> = None;
        let mut params: Option<Vec<String>> = None;
        let mut form_lines: Vec<(usize, String)> = Vec::new();
        let mut family_line: Option<(usize, String)> = None;
        let mut section_lines: Vec<(usize, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (kw, rest) = match line.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (line, ""),
            };
            match kw {
                "field" => {
                    if field.is_some() {
                        return Err(doc_err(line_no, "duplicate `field` line"));
                    }
                    field = Some(parse_field(rest, line_no)?);
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(doc_err(line_no, "duplicate `vars` line"));
                    }
                    let names: Vec<String> =
                        rest.split_whitespace().map(|s| s.to_string()).collect();
                    if names.len() < 2 {
                        return Err(doc_err(line_no, "need at least two variables"));
                    }
                    vars = Some(names);
                }
                "params" => {
                    if params.is_some() {
                        return Err(doc_err(line_no, "duplicate `params` line"));
                    }
                    params = Some(rest.split_whitespace().map(|s| s.to_string()).collect());
                }
                "form" => form_lines.push((line_no, rest.to_string())),
                "family" => {
                    if family_line.is_some() {
                        return Err(doc_err(line_no, "duplicate `family` line"));
                    }
                    family_line = Some((line_no, rest.to_string()));
                }
                "section" => section_lines.push((line_no, rest.to_string())),
                _ => return Err(doc_err(line_no, format!("unknown line kind `{kw}`"))),
            }
        }
        let field = field.ok_or_else(|| doc_err(0, "missing `field` line"))?;
        let vars = vars.ok_or_else(|| doc_err(0, "missing `vars` line"))?;
        if form_lines.is_empty() && family_line.is_none() {
            return Err(doc_err(0, "need `form` lines or a `family` line"));
        }
        if !form_lines.is_empty() && family_line.is_some() {
            return Err(doc_err(0, "`form` and `family` lines cannot be mixed"));
        }
        let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let mut forms = Vec::new();
        for (line_no, src) in &form_lines {
            let p = parse_poly(src, &var_refs).map_err(|e| doc_err(*line_no, e.to_string()))?;
            forms.push(p);
        }
        let params = params.unwrap_or_else(|| {
            if family_line.is_some() {
                vec!["t".to_string()]
            } else {
                (0..forms.len()).map(|i| format!("t{i}")).collect()
            }
        });
        let family = match &family_line {
            Some((line_no, src)) => {
                if params.len() != 1 {
                    return Err(doc_err(
                        *line_no,
                        "a family takes exactly one parameter name",
                    ));
                }
                let mut all: Vec<&str> = var_refs.clone();
                all.push(params[0].as_str());
                Some(parse_poly(src, &all).map_err(|e| doc_err(*line_no, e.to_string()))?)
            }
            None => None,
        };
        if family.is_none() && params.len() != forms.len() {
            return Err(doc_err(
                0,
                format!("{} parameter names for {} forms", params.len(), forms.len()),
            ));
        }
        let mut sections = Vec::new();
        for (line_no, src) in &section_lines {
            sections.push(parse_section(src, *line_no, vars.len())?);
        }
        Ok(SystemDocument {
            field,
            vars,
            params,
            forms,
            family,
            sections,
        })
    }

    /// The number of point variables.
    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Instantiates the basis forms over a concrete field.
    pub fn system<K: Field>(&self) -> Result<LinearSystem<K>> {
        if self.forms.is_empty() {
            return Err(Error::EmptySystem);
        }
        let forms = self
            .forms
            .iter()
            .map(|p| reduce_poly::<K>(p))
            .collect::<Result<Vec<_>>>()?;
        LinearSystem::new(forms)
    }

    /// Instantiates the family over a concrete field.
    pub fn family_over<K: Field>(&self) -> Result<AlgebraicFamily<K>> {
        let poly = self
            .family
            .as_ref()
            .ok_or(Error::NotOneParameter { got: 0 })?;
        AlgebraicFamily::new(reduce_poly::<K>(poly)?, self.num_vars())
    }

    /// Instantiates whichever one-parameter object the document holds:
    /// a two-form pencil or a family.
    pub fn one_param<K: Field>(&self) -> Result<OneParamSystem<K>> {
        match self.family {
            Some(_) => Ok(OneParamSystem::family(self.family_over::<K>()?)),
            None => OneParamSystem::pencil(self.system::<K>()?),
        }
    }

    /// Instantiates the i-th section over a concrete field.
    pub fn section<K: Field>(&self, i: usize) -> Result<Section<K>> {
        let st = &self.sections[i];
        let x =
            st.x.iter()
                .map(|p| reduce_uni::<K>(p))
                .collect::<Result<Vec<_>>>()?;
        let t =
            st.t.iter()
                .map(|p| reduce_uni::<K>(p))
                .collect::<Result<Vec<_>>>()?;
        Section::new(x, t, st.r)
    }
}

/// Maps an exact rational into K, failing when the denominator is
/// divisible by the characteristic.
pub fn reduce_scalar<K: Field>(c: &Rational) -> Result<K> {
    let p = K::characteristic();
    let to_k = |n: &num::BigInt| -> Result<K> {
        if p == 0 {
            let v: i64 = n.try_into().map_err(|_| Error::Parse {
                offset: 0,
                msg: "coefficient too large".to_string(),
            })?;
            Ok(K::from_integer(v))
        } else {
            let v: i64 = (&n.mod_floor(&num::BigInt::from(p)))
                .try_into()
                .expect("residue fits in i64");
            Ok(K::from_integer(v))
        }
    };
    let num = to_k(c.numer())?;
    let den = to_k(c.denom())?;
    if den.is_zero() {
        return Err(Error::CoefficientNotDefined {
            coeff: c.to_string(),
            p: K::characteristic(),
        });
    }
    Ok(num / den)
}

fn reduce_poly<K: Field>(p: &MultiPoly<Rational>) -> Result<MultiPoly<K>> {
    let terms = p
        .terms()
        .iter()
        .map(|(e, c)| Ok((e.clone(), reduce_scalar::<K>(c)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiPoly::new(p.num_vars(), terms))
}

fn reduce_uni<K: Field>(p: &UniPoly<Rational>) -> Result<UniPoly<K>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(reduce_scalar::<K>)
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(coeffs))
}

/// Parses `x = (e, ...); t = (e, ...); r = n` with univariate
/// expressions in `tau`.
fn parse_section(src: &str, line_no: usize, num_vars: usize) -> Result<SectionText> {
    let mut x = None;
    let mut t = None;
    let mut r = None;
    for part in src.split(';') {
        let part = part.trim();
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| doc_err(line_no, format!("expected `key = value` in `{part}`")))?;
        let key = key.trim();
        let val = val.trim();
        match key {
            "x" => x = Some(parse_tuple(val, line_no)?),
            "t" => t = Some(parse_tuple(val, line_no)?),
            "r" => {
                r = Some(
                    val.parse::<u32>()
                        .map_err(|_| doc_err(line_no, format!("bad multiplicity order `{val}`")))?,
                )
            }
            _ => return Err(doc_err(line_no, format!("unknown section key `{key}`"))),
        }
    }
    let x = x.ok_or_else(|| doc_err(line_no, "section needs `x = (...)`"))?;
    let t = t.ok_or_else(|| doc_err(line_no, "section needs `t = (...)`"))?;
    let r = r.ok_or_else(|| doc_err(line_no, "section needs `r = ...`"))?;
    if x.len() != num_vars {
        return Err(doc_err(
            line_no,
            format!(
                "section point has {} coordinates, expected {num_vars}",
                x.len()
            ),
        ));
    }
    if r == 0 {
        return Err(doc_err(line_no, "multiplicity order must be at least 1"));
    }
    Ok(SectionText { x, t, r })
}

fn parse_tuple(val: &str, line_no: usize) -> Result<Vec<UniPoly<Rational>>> {
    let inner = val
        .strip_prefix('(')
        .and_then(|v| v.strip_suffix(')'))
        .ok_or_else(|| doc_err(line_no, format!("expected a tuple `(...)`, got `{val}`")))?;
    inner
        .split(',')
        .map(|piece| {
            let p =
                parse_poly(piece.trim(), &["tau"]).map_err(|e| doc_err(line_no, e.to_string()))?;
            p.to_univariate()
                .map(|(_, u)| u)
                .ok_or_else(|| doc_err(line_no, "section coordinate is not univariate"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::theorems::Verdict;

    type F5 = Fp<5>;

    const PENCIL_DOC: &str = "\
# a pencil with a fixed double line
field gf(5)
vars X Y Z
form X*Y^2
form Y^2*Z
section x = (tau, 0, 1); t = (1, -tau); r = 3
";

    #[test]
    fn parses_and_instantiates_a_pencil_document() {
        let doc = SystemDocument::parse(PENCIL_DOC).unwrap();
        assert_eq!(doc.field, FieldSpec::Gf { p: 5, k: 1 });
        assert_eq!(doc.vars, ["X", "Y", "Z"]);
        assert_eq!(doc.params, ["t0", "t1"]);
        let sys = doc.system::<F5>().unwrap();
        assert!(sys.is_pencil());
        assert_eq!(sys.degree(), 3);
        let sec = doc.section::<F5>(0).unwrap();
        assert_eq!(sec.r(), 3);
        let one = OneParamSystem::pencil(sys).unwrap();
        let rep = crate::theorems::check_theorem_first(&one, &sec, 10_000).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn parses_a_family_document() {
        let doc = SystemDocument::parse(
            "field gf(7)\nvars X Y Z\nparams t\nfamily Y^2*Z - (X - t*Z)^3\n",
        )
        .unwrap();
        let fam = doc.family_over::<Fp<7>>().unwrap();
        assert_eq!(fam.degree(), 3);
        assert!(doc.one_param::<Fp<7>>().is_ok());
    }

    #[test]
    fn field_spellings() {
        assert_eq!(parse_field("q", 1).unwrap(), FieldSpec::Q);
        assert_eq!(
            parse_field("gf(5)", 1).unwrap(),
            FieldSpec::Gf { p: 5, k: 1 }
        );
        // flat prime powers are normalized
        assert_eq!(
            parse_field("gf(9)", 1).unwrap(),
            FieldSpec::Gf { p: 3, k: 2 }
        );
        assert_eq!(
            parse_field("gf(3^2)", 1).unwrap(),
            FieldSpec::Gf { p: 3, k: 2 }
        );
        assert!(parse_field("f5", 1).is_err());
        assert!(parse_field("gf(6)", 1).is_err());
        assert_eq!(FieldSpec::Gf { p: 3, k: 2 }.order(), Some(9));
        assert_eq!(FieldSpec::Gf { p: 3, k: 2 }.to_string(), "gf(3^2)");
    }

    #[test]
    fn rational_coefficients_reduce_mod_p() {
        let doc =
            SystemDocument::parse("field gf(7)\nvars X Y\nform X^2 - 1/2*Y^2\nform X*Y\n").unwrap();
        let sys = doc.system::<Fp<7>>().unwrap();
        // 1/2 = 4 in F_7, so -1/2 = 3
        assert_eq!(sys.forms()[0].render(&["X", "Y"]), "X^2 + 3*Y^2");
        // ... but has no meaning in characteristic 2
        let err = doc.system::<Fp<2>>().unwrap_err();
        assert!(matches!(err, Error::CoefficientNotDefined { .. }));
    }

    #[test]
    fn document_errors_carry_line_numbers() {
        let err = SystemDocument::parse("field gf(5)\nvars X Y\nform W\n").unwrap_err();
        assert!(matches!(err, Error::Document { file_line: 3, .. }));
        let err = SystemDocument::parse("vars X Y\nform X\nform Y\n").unwrap_err();
        assert!(matches!(err, Error::Document { .. }));
        let err = SystemDocument::parse("field gf(5)\nvars X Y\nform X\nfamily X\n").unwrap_err();
        assert!(matches!(err, Error::Document { .. }));
    }

    #[test]
    fn section_line_validation() {
        let bad =
            "field gf(5)\nvars X Y Z\nform X\nform Y\nsection x = (tau, 0); t = (1, tau); r = 2\n";
        assert!(SystemDocument::parse(bad).is_err());
        let bad_r =
            "field gf(5)\nvars X Y\nform X\nform Y\nsection x = (tau, 1); t = (1, tau); r = 0\n";
        assert!(SystemDocument::parse(bad_r).is_err());
    }
}
