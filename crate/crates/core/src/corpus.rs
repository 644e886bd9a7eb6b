//! A built-in collection of worked examples: the classical pencils and
//! families that motivate the two statements, each stored as a document
//! together with a battery of exact checks. `run_checks` replays every
//! computation the example is known for and reports what held.

use num_traits::{One, Zero};

use crate::document::SystemDocument;
use crate::error::{Error, Result};
use crate::field::{Field, Fp, Fq, Rational};
use crate::multiplicity::{
    everywhere_multiple_locus, find_singular_sections, member_multiplicity_at,
    multiplicity_conditions, section_separability, verify_section, OneParamSystem, Separability,
};
use crate::poly::MultiPoly;
use crate::projspace::{enumerate_proj, ProjPoint};
use crate::theorems::{
    brute_force_factor, check_theorem_first, check_theorem_second, check_theorem_singular,
    composite_verdict, decomposition_verify, image_dimension, pencil_irreducible_count,
    CompositeMethod, CompositionKind, Verdict,
};

type F2 = Fp<2>;
type F3 = Fp<3>;
type F5 = Fp<5>;
type F7 = Fp<7>;
type F4 = Fq<2, 2>;
type F9 = Fq<3, 2>;

const CAP: u64 = 200_000;
const SEED: u64 = 0;
const FACTOR_BUDGET: u64 = 50_000;
const SUBSPACE_BUDGET: u64 = 50_000;
const COMBO_BUDGET: u64 = 50_000;

/// One worked example: a name, a document, and prose notes on what the
/// checks establish (including any honest caveats).
pub struct CorpusEntry {
    pub name: &'static str,
    pub title: &'static str,
    pub document: &'static str,
    pub notes: &'static [&'static str],
}

/// One replayed computation with its outcome.
#[derive(Clone, Debug)]
pub struct CorpusCheck {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// The full result of replaying an example.
#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub name: String,
    pub checks: Vec<CorpusCheck>,
    pub notes: Vec<String>,
}

impl CorpusReport {
    /// Whether every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn push(
    checks: &mut Vec<CorpusCheck>,
    label: impl Into<String>,
    passed: bool,
    detail: impl Into<String>,
) {
    checks.push(CorpusCheck {
        label: label.into(),
        passed,
        detail: detail.into(),
    });
}

fn field_name<K: Field>() -> String {
    match K::order() {
        None => "q".to_string(),
        Some(q) => format!("gf({q})"),
    }
}

fn render_points<K: Field>(pts: &[ProjPoint<K>]) -> String {
    let parts: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Points where a single form and all its coordinate partials vanish,
/// by exhaustive search over P^n(F_q).
fn singular_points<K: Field>(
    form: &MultiPoly<K>,
    points: &[ProjPoint<K>],
) -> Result<Vec<ProjPoint<K>>> {
    let partials: Vec<MultiPoly<K>> = (0..form.num_vars())
        .map(|i| form.formal_partial(i))
        .collect();
    let mut out = Vec::new();
    for x in points {
        if !form.evaluate(x.coords())?.is_zero() {
            continue;
        }
        if partials.iter().try_fold(true, |acc, p| {
            Ok::<bool, Error>(acc && p.evaluate(x.coords())?.is_zero())
        })? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// the documents
// ---------------------------------------------------------------------------

const FIG1_LEFT: &str = "\
# Every member splits as the fixed double line Y^2 = 0 together with a
# moving line X = t*Z; the point (t : 0 : 1) where the two meet is a
# triple point of the member at (1 : t), and it moves with the member.
field q
vars X Y Z
params t0 t1
form X*Y^2
form -Y^2*Z
section x = (tau, 0, 1); t = (1, tau); r = 3
";

const FIG1_RIGHT: &str = "\
# A small perturbation of the double-line pencil: both basis forms now
# vanish to order three at (0 : 0 : 1), so the triple point sticks at
# that base point instead of moving.
field q
vars X Y Z
params t0 t1
form X*Y^2
form Y^3
section x = (0, 0, 1); t = (1, tau); r = 3
";

const FIG2: &str = "\
# The translates y^2 = (x - t)^3 of a cuspidal cubic. The cusp
# (t : 0 : 1) is a double point of the member at t only, and the cusps
# sweep the whole x-axis -- yet this breaks no statement about linear
# systems, because the family is not linear in t.
field q
vars X Y Z
params t
family Y^2*Z - (X - t*Z)^3
section x = (tau, 0, 1); t = (tau); r = 2
";

const FIG3: &str = "\
# A pencil of cubic cones in P^3. The member at (1 : t) is a cone with
# vertex (0 : 0 : t : 1): a triple point gliding along the axis
# X = Y = 0 as the member varies, with no fixed component to blame.
field gf(5)
vars X Y Z W
params t0 t1
form Y^2*Z
form -(X^3 + Y^2*W)
section x = (0, 0, tau, 1); t = (1, tau); r = 3
";

const ZARISKI_P2: &str = "\
# In characteristic two the member t0*X^2 - t1*Y^2 is the double line
# (t0^(1/2)*X - t1^(1/2)*Y)^2 through (0 : 0 : 1). Its singular locus is
# the whole line, which moves with t although no point of it moves
# separably: over gf(4) the section below inverts Frobenius pointwise
# (tau^2 squares to tau^4 = tau) without satisfying any identity.
field gf(4)
vars X Y Z
params t0 t1
form X^2
form -Y^2
section x = (tau^2, 1, 0); t = (1, tau); r = 2
";

const ZARISKI_P3: &str = "\
# The same phenomenon one characteristic up: in characteristic three
# the members t0*X^3 - t1*Y^3 are triple lines through (0 : 0 : 1), and
# over gf(9) the pointwise inverse of Frobenius is tau -> tau^3.
field gf(9)
vars X Y Z
params t0 t1
form X^3
form -Y^3
section x = (tau^3, 1, 0); t = (1, tau); r = 3
";

const ZARISKI_P_SEP: &str = "\
# Every member of t0*(Y^2*Z - X^3) + t1*Z^3 is singular, but unlike the
# p-fold lines each affine member has a UNIQUE singular point: the
# member at (1 : t) is a cuspidal cubic with cusp (t^(1/3) : 0 : 1).
# The cusp coordinate is a cube root, so the singular point moves --
# but only inseparably, by the pointwise inverse of Frobenius.
field gf(9)
vars X Y Z
params t0 t1
form Y^2*Z - X^3
form Z^3
section x = (tau^3, 0, 1); t = (1, tau); r = 2
";

const QUADRIC_PAIR: &str = "\
# The pencil t0*X0^2 + t1*X1^2 on the projective line. Every member is
# a degree-two form in the members of the coordinate pencil (X0, X1),
# so the pencil is composite with it; in characteristic two every
# member is moreover the square of a single linear form.
field gf(5)
vars X0 X1
params t0 t1
form X0^2
form X1^2
";

const VERONESE_NET: &str = "\
# The net t0*X0^2 + t1*X0*X1 + t2*X1^2 of all degree-two forms on the
# projective line. The parameter-to-member map is the degree-two
# embedding of P^1 in P^2, so the image of the net is one-dimensional
# and the net is composite with the coordinate pencil.
field gf(5)
vars X0 X1
params t0 t1 t2
form X0^2
form X0*X1
form X1^2
";

const COORDINATE_NET: &str = "\
# The net of all lines t0*X + t1*Y + t2*Z in the plane. The parameter
# map is the identity on P^2: the image is two-dimensional, the base
# locus is empty, and the net is not composite with any pencil.
field gf(5)
vars X Y Z
params t0 t1 t2
form X
form Y
form Z
";

const CONIC_PENCIL: &str = "\
# A pencil of conics with no fixed component and no composition with a
# smaller pencil, so almost every member must be irreducible. Over
# gf(5) exactly one of the six members splits: the pair of lines X*Y at
# (0 : 1), whose singular point lies in the base locus.
field gf(5)
vars X Y Z
params t0 t1
form X^2 + Y*Z
form X*Y
";

// ---------------------------------------------------------------------------
// the catalog
// ---------------------------------------------------------------------------

static ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "fig1-left",
        title: "A fixed double line with a moving triple point",
        document: FIG1_LEFT,
        notes: &[
            "The moving line meets the fixed double line in a triple point that \
             sweeps the whole line Y = 0, yet every member is double along that \
             line, so the multiple points stay confined to members' shared locus.",
        ],
    },
    CorpusEntry {
        name: "fig1-right",
        title: "A pencil whose triple point sticks at the base point",
        document: FIG1_RIGHT,
        notes: &[
            "Here the order-three conditions at (0 : 0 : 1) hold for every \
             parameter at once: T_3 at the base point is the whole parameter \
             line, so the triple point cannot move.",
        ],
    },
    CorpusEntry {
        name: "fig2",
        title: "Cuspidal cubics translating along the x-axis",
        document: FIG2,
        notes: &[
            "The classical description says the curves have no common point; \
             their projective closures do all pass through (0 : 1 : 0), the \
             point at infinity of the y-axis, which the computed common locus \
             reports. The affine members are pairwise disjoint.",
            "The moving cusp violates nothing: the family is algebraic but not \
             linear in t, and the check records that caveat in its notes.",
        ],
    },
    CorpusEntry {
        name: "fig3",
        title: "Cubic cones with a vertex gliding along an axis",
        document: FIG3,
        notes: &[
            "The classical description calls the axis X = Y = 0 the base locus; \
             the computed base locus also contains the plane cubic trace \
             X^3 + Y^2*W = 0 in Z = 0. The axis is exactly the part swept by \
             the moving vertex, which is what the description is about.",
        ],
    },
    CorpusEntry {
        name: "zariski-p2",
        title: "Inseparably moving double lines (characteristic two)",
        document: ZARISKI_P2,
        notes: &[
            "Every point of every member is singular, so the singular points of \
             variable members fill each whole member rather than the base locus.",
            "The section search over gf(4) also returns parametrizations of the \
             moving line whose representatives happen to have nonzero \
             derivative; the derivative test is a syntactic diagnostic on the \
             given representative, and the genuinely Frobenius-inverting \
             section is among those found.",
        ],
    },
    CorpusEntry {
        name: "zariski-p3",
        title: "Inseparably moving triple lines (characteristic three)",
        document: ZARISKI_P3,
        notes: &[
            "The same mechanism as in characteristic two, with cube powers: the \
             section x = tau^3 satisfies the member equation at every point of \
             gf(9) but not as a polynomial identity.",
        ],
    },
    CorpusEntry {
        name: "zariski-p-sep",
        title: "A pencil of cuspidal cubics whose cusp moves by Frobenius",
        document: ZARISKI_P_SEP,
        notes: &[
            "Over gf(3) the unique per-member singular point is (t : 0 : 1) and \
             the interpolated section x = tau has nonzero derivative: the cube \
             root is invisible inside the prime field, where every element is \
             its own cube. The quadratic extension gf(9) exposes it as tau^3.",
            "Even the seemingly separable gf(3) section holds only pointwise, \
             not as an identity -- the verification records that distinction.",
        ],
    },
    CorpusEntry {
        name: "quadric-pair",
        title: "Two squares spanning a composite pencil",
        document: QUADRIC_PAIR,
        notes: &[
            "Irreducibility is decided over the ground field: over gf(5) the \
             member X0^2 + 2*X1^2 has no root and counts as irreducible even \
             though it splits over the closure. The compositeness and square \
             structure are what this example is for.",
        ],
    },
    CorpusEntry {
        name: "veronese-net",
        title: "The net of all binary quadratics",
        document: VERONESE_NET,
        notes: &[
            "Reducibility is over the ground field gf(5): 21 of the 31 members \
             split there, the other 10 split only over gf(25).",
        ],
    },
    CorpusEntry {
        name: "coordinate-net",
        title: "The net of all lines in the plane",
        document: COORDINATE_NET,
        notes: &[],
    },
    CorpusEntry {
        name: "conic-pencil",
        title: "A pencil of conics with one split member",
        document: CONIC_PENCIL,
        notes: &[
            "The five members away from (0 : 1) are smooth conics; the split \
             member X*Y is singular only at (0 : 0 : 1), which lies in the base \
             locus, so no member is singular outside it.",
        ],
    },
];

/// All built-in examples, in a fixed order.
pub fn corpus_list() -> &'static [CorpusEntry] {
    ENTRIES
}

/// Looks up an example by name.
pub fn corpus_get(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Replays every computation the named example is known for.
pub fn run_checks(name: &str) -> Result<CorpusReport> {
    let entry = corpus_get(name).ok_or_else(|| Error::Document {
        file_line: 0,
        msg: format!("no example named `{name}`"),
    })?;
    let doc = SystemDocument::parse(entry.document)?;
    let mut checks = Vec::new();
    match entry.name {
        "fig1-left" => {
            fig1_left_field::<F2>(&doc, &mut checks)?;
            fig1_left_field::<F3>(&doc, &mut checks)?;
            fig1_left_field::<F5>(&doc, &mut checks)?;
            fig1_left_rational(&doc, &mut checks)?;
        }
        "fig1-right" => {
            fig1_right_field::<F2>(&doc, &mut checks)?;
            fig1_right_field::<F3>(&doc, &mut checks)?;
            fig1_right_field::<F5>(&doc, &mut checks)?;
            fig1_right_rational(&doc, &mut checks)?;
        }
        "fig2" => {
            fig2_rational(&doc, &mut checks)?;
            fig2_field::<F5>(&doc, &mut checks)?;
            fig2_field::<F7>(&doc, &mut checks)?;
        }
        "fig3" => fig3_checks(&doc, &mut checks)?,
        "zariski-p2" => {
            zariski_lines_field::<F2>(&doc, &mut checks)?;
            zariski_lines_field::<F4>(&doc, &mut checks)?;
            zariski_section_field::<F4>(&doc, &mut checks)?;
            zariski_p2_search(&doc, &mut checks)?;
        }
        "zariski-p3" => {
            zariski_lines_field::<F3>(&doc, &mut checks)?;
            zariski_lines_field::<F9>(&doc, &mut checks)?;
            zariski_section_field::<F9>(&doc, &mut checks)?;
        }
        "zariski-p-sep" => {
            cusp_field::<F3>(&doc, &mut checks)?;
            cusp_field::<F9>(&doc, &mut checks)?;
            cusp_section(&doc, &mut checks)?;
            cusp_search(&doc, &mut checks)?;
        }
        "quadric-pair" => quadric_pair_checks(&doc, &mut checks)?,
        "veronese-net" => veronese_checks(&doc, &mut checks)?,
        "coordinate-net" => coordinate_net_checks(&doc, &mut checks)?,
        "conic-pencil" => conic_pencil_checks(&doc, &mut checks)?,
        other => {
            return Err(Error::Document {
                file_line: 0,
                msg: format!("no checks registered for `{other}`"),
            })
        }
    }
    Ok(CorpusReport {
        name: entry.name.to_string(),
        checks,
        notes: entry.notes.iter().map(|s| s.to_string()).collect(),
    })
}

// ---------------------------------------------------------------------------
// fig1-left
// ---------------------------------------------------------------------------

fn fig1_left_field<K: Field>(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let fname = field_name::<K>();
    let q = K::order().expect("finite field");
    let sys = doc.system::<K>()?;
    let vars: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();

    let (fixed, _residual) = sys.fixed_and_residual()?;
    let fixed_str = fixed.render(&vars);
    push(
        checks,
        format!("{fname}: fixed component is Y^2"),
        fixed_str == "Y^2",
        format!("gcd of the basis forms: {fixed_str}"),
    );

    let base = sys.base_locus(CAP)?;
    let expected = ProjPoint::<K>::from_integers(&[0, 1, 0])?;
    push(
        checks,
        format!("{fname}: residual base locus is exactly {{(0 : 1 : 0)}}"),
        base.len() == 1 && base[0] == expected,
        format!("residual base points: {}", render_points(&base)),
    );

    let double = everywhere_multiple_locus(&sys, 2, CAP)?;
    let on_line = double.iter().all(|p| p.coords()[1].is_zero());
    push(
        checks,
        format!("{fname}: points double on every member form the line Y = 0"),
        double.len() as u64 == q + 1 && on_line,
        format!(
            "{} points, expected {}, all on Y = 0: {on_line}",
            double.len(),
            q + 1
        ),
    );

    let sec = doc.section::<K>(0)?;
    let one = OneParamSystem::pencil(sys)?;
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        format!("{fname}: the moving triple point verifies and the statement holds"),
        rep.verdict == Verdict::Holds
            && rep.section_in_locus
            && rep.conclusion_holds
            && rep.separability == Separability::Separable,
        format!(
            "verdict {}, in locus {}, separable section, conclusion holds {}",
            rep.verdict, rep.section_in_locus, rep.conclusion_holds
        ),
    );
    Ok(())
}

fn fig1_left_rational(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let sec = doc.section::<Rational>(0)?;
    let one = doc.one_param::<Rational>()?;
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        "q: the statement holds as a polynomial identity",
        rep.verdict == Verdict::Holds && rep.conclusion_holds,
        format!("verdict {}", rep.verdict),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// fig1-right
// ---------------------------------------------------------------------------

fn fig1_right_field<K: Field>(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let fname = field_name::<K>();
    let sys = doc.system::<K>()?;

    let base = sys.base_locus(CAP)?;
    let expected = ProjPoint::<K>::from_integers(&[0, 0, 1])?;
    push(
        checks,
        format!("{fname}: the base locus is the single point (0 : 0 : 1)"),
        base.len() == 1 && base[0] == expected,
        format!("residual base points: {}", render_points(&base)),
    );

    let t3 = multiplicity_conditions(&sys, &expected, 3)?;
    push(
        checks,
        format!("{fname}: T_3 at the base point is the whole parameter line"),
        t3.is_full(),
        format!("dimension {} of {}", t3.dim(), t3.ambient_dim()),
    );
    Ok(())
}

fn fig1_right_rational(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let sec = doc.section::<Rational>(0)?;
    let one = doc.one_param::<Rational>()?;
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        "q: the constant section verifies but claims nothing, and the conclusion holds",
        rep.verdict == Verdict::NotApplicable
            && rep.separability == Separability::Inconclusive
            && rep.section_in_locus
            && rep.conclusion_holds,
        format!(
            "verdict {}, separability {}, conclusion holds {}",
            rep.verdict, rep.separability, rep.conclusion_holds
        ),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// fig2
// ---------------------------------------------------------------------------

fn fig2_rational(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let sec = doc.section::<Rational>(0)?;
    let one = doc.one_param::<Rational>()?;
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        "q: the separable moving cusp breaks the linear-system conclusion",
        rep.verdict == Verdict::Violated
            && rep.separability == Separability::Separable
            && rep.section_in_locus
            && !rep.conclusion_holds,
        format!(
            "verdict {}, separability {}, conclusion holds {}",
            rep.verdict, rep.separability, rep.conclusion_holds
        ),
    );
    let noted = rep.notes.iter().any(|n| n.contains("algebraic family"));
    push(
        checks,
        "q: the report flags that the family is not a linear system",
        noted,
        format!("notes: {:?}", rep.notes),
    );
    Ok(())
}

fn fig2_field<K: Field>(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let fname = field_name::<K>();
    let sec = doc.section::<K>(0)?;
    let one = doc.one_param::<K>()?;
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        format!("{fname}: the moving cusp breaks the conclusion pointwise too"),
        rep.verdict == Verdict::Violated && !rep.conclusion_holds,
        format!("verdict {}", rep.verdict),
    );
    let fam = doc.family_over::<K>()?;
    let common = fam.common_points(CAP)?;
    let expected = ProjPoint::<K>::from_integers(&[0, 1, 0])?;
    push(
        checks,
        format!("{fname}: the members' only common point lies at infinity"),
        common.len() == 1 && common[0] == expected,
        format!("common points: {}", render_points(&common)),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// fig3
// ---------------------------------------------------------------------------

fn fig3_checks(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    type K = F5;
    let sys = doc.system::<K>()?;

    // vertex multiplicities across all members
    let mut own_ok = true;
    let mut other_ok = true;
    for tau in K::elements() {
        let vertex = ProjPoint::new(vec![K::zero(), K::zero(), tau.clone(), K::one()])?;
        for t in enumerate_proj::<K>(1, CAP)? {
            let m = member_multiplicity_at(&sys, &t, &vertex)?;
            let own = t.coords()[0] == K::one() && t.coords()[1] == tau;
            if own && m != 3 {
                own_ok = false;
            }
            if !own && m != 2 {
                other_ok = false;
            }
        }
    }
    push(
        checks,
        "gf(5): each vertex (0 : 0 : t : 1) is a triple point of its own member",
        own_ok,
        "multiplicity 3 at every t".to_string(),
    );
    push(
        checks,
        "gf(5): each vertex is exactly a double point of every other member",
        other_ok,
        "multiplicity 2 off the own member, including at t = (0 : 1)".to_string(),
    );

    // the section along the axis
    let sec = doc.section::<K>(0)?;
    let one = OneParamSystem::pencil(sys.clone())?;
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        "gf(5): the gliding vertex verifies and the statement holds",
        rep.verdict == Verdict::Holds && rep.section_in_locus && rep.conclusion_holds,
        format!("verdict {}", rep.verdict),
    );

    // base locus: the axis plus the trace cubic in Z = 0
    let base = sys.base_locus(CAP)?;
    let axis: Vec<&ProjPoint<K>> = base
        .iter()
        .filter(|p| p.coords()[0].is_zero() && p.coords()[1].is_zero())
        .collect();
    let trace: Vec<&ProjPoint<K>> = base.iter().filter(|p| !p.coords()[1].is_zero()).collect();
    push(
        checks,
        "gf(5): the base locus contains the whole axis X = Y = 0",
        axis.len() == 6,
        format!("{} of 6 axis points in the base locus", axis.len()),
    );
    push(
        checks,
        "gf(5): the base locus also contains the trace cubic in Z = 0",
        base.len() == 11 && trace.len() == 5,
        format!(
            "{} base points in all, {} on the trace X^3 + Y^2*W = 0",
            base.len(),
            trace.len()
        ),
    );

    // and over the rationals the section argument is symbolic
    let sec_q = doc.section::<Rational>(0)?;
    let one_q = doc.one_param::<Rational>()?;
    let rep_q = check_theorem_first(&one_q, &sec_q, CAP)?;
    push(
        checks,
        "q: the gliding vertex verifies as a polynomial identity",
        rep_q.verdict == Verdict::Holds,
        format!("verdict {}", rep_q.verdict),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// the p-fold lines
// ---------------------------------------------------------------------------

fn zariski_lines_field<K: Field>(
    doc: &SystemDocument,
    checks: &mut Vec<CorpusCheck>,
) -> Result<()> {
    let fname = field_name::<K>();
    let q = K::order().expect("finite field");
    let sys = doc.system::<K>()?;
    let rep = check_theorem_singular(&sys, None, CAP)?;
    let every_point = rep
        .members
        .iter()
        .all(|m| m.points_on_member == q + 1 && m.singular_outside == q);
    push(
        checks,
        format!("{fname}: every member is singular at every point outside the base point"),
        rep.verdict == Verdict::Violated
            && rep.fixed_component_trivial
            && rep.base_point_count == 1
            && every_point,
        format!(
            "verdict {}, {} members, each with {} of {} points singular outside the base locus",
            rep.verdict,
            rep.members.len(),
            q,
            q + 1
        ),
    );
    Ok(())
}

fn zariski_section_field<K: Field>(
    doc: &SystemDocument,
    checks: &mut Vec<CorpusCheck>,
) -> Result<()> {
    let fname = field_name::<K>();
    let p = K::characteristic();
    let one = doc.one_param::<K>()?;
    let sec = doc.section::<K>(0)?;
    let ver = verify_section(&one, &sec)?;
    push(
        checks,
        format!("{fname}: x = tau^{p} inverts Frobenius pointwise but not identically"),
        ver.holds && !ver.holds_identically,
        format!(
            "holds at every value: {}, as an identity: {}",
            ver.holds, ver.holds_identically
        ),
    );
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        format!("{fname}: the section is inseparable and the conclusion fails along it"),
        rep.separability == Separability::Inseparable
            && rep.verdict == Verdict::NotApplicable
            && !rep.conclusion_holds,
        format!(
            "separability {}, verdict {}, conclusion holds {}",
            rep.separability, rep.verdict, rep.conclusion_holds
        ),
    );
    Ok(())
}

fn zariski_p2_search(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let one = doc.one_param::<F4>()?;
    let found = find_singular_sections(&one, 2, CAP, COMBO_BUDGET)?;
    let inseparable = found
        .iter()
        .filter(|s| section_separability(s) == Separability::Inseparable)
        .count();
    push(
        checks,
        "gf(4): the exhaustive search finds an inseparable section through the moving lines",
        !found.is_empty() && inseparable >= 1,
        format!("{} sections found, {inseparable} inseparable", found.len()),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// the moving cusp (separable-looking counterexample)
// ---------------------------------------------------------------------------

fn cusp_field<K: Field>(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let fname = field_name::<K>();
    let q = K::order().expect("finite field");
    let sys = doc.system::<K>()?;
    let points = enumerate_proj::<K>(2, CAP)?;

    // exhaustive search: the unique singular point of the member at
    // (1 : t) is (t^(1/3) : 0 : 1)
    let mut cusp_ok = true;
    let mut mult_ok = true;
    for c in K::elements() {
        let t = ProjPoint::new(vec![K::one(), c.clone()])?;
        let member = sys.member_at(&t)?;
        let sing = singular_points(&member, &points)?;
        let root = c.pth_root().expect("characteristic three");
        let cusp = ProjPoint::new(vec![root, K::zero(), K::one()])?;
        if !(sing.len() == 1 && sing[0] == cusp) {
            cusp_ok = false;
        }
        if member_multiplicity_at(&sys, &t, &cusp)? != 2 {
            mult_ok = false;
        }
    }
    push(
        checks,
        format!(
            "{fname}: exhaustive search puts the unique singular point of the member \
             at (1 : t) at (t^(1/3) : 0 : 1)"
        ),
        cusp_ok,
        format!(
            "checked all {q} affine members against all {} points",
            points.len()
        ),
    );
    push(
        checks,
        format!("{fname}: the cusp is exactly a double point"),
        mult_ok,
        "multiplicity 2 at every cusp".to_string(),
    );

    let rep = check_theorem_singular(&sys, None, CAP)?;
    push(
        checks,
        format!("{fname}: every member is singular outside the base locus"),
        rep.verdict == Verdict::Violated && rep.members.iter().all(|m| m.singular_outside >= 1),
        format!("verdict {}, {} members", rep.verdict, rep.members.len()),
    );
    Ok(())
}

fn cusp_section(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    let one = doc.one_param::<F9>()?;
    let sec = doc.section::<F9>(0)?;
    let ver = verify_section(&one, &sec)?;
    push(
        checks,
        "gf(9): the cusp section x = tau^3 holds pointwise but not identically",
        ver.holds && !ver.holds_identically,
        format!(
            "holds at every value: {}, as an identity: {}",
            ver.holds, ver.holds_identically
        ),
    );
    let rep = check_theorem_first(&one, &sec, CAP)?;
    push(
        checks,
        "gf(9): the cusp section is inseparable and the conclusion fails along it",
        rep.separability == Separability::Inseparable
            && rep.verdict == Verdict::NotApplicable
            && !rep.conclusion_holds,
        format!(
            "separability {}, verdict {}, conclusion holds {}",
            rep.separability, rep.verdict, rep.conclusion_holds
        ),
    );
    Ok(())
}

fn cusp_search(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    // over gf(9): the search interpolates the cusps into x = tau^3
    let one9 = doc.one_param::<F9>()?;
    let found9 = find_singular_sections(&one9, 2, CAP, COMBO_BUDGET)?;
    let insep9 = found9
        .iter()
        .filter(|s| section_separability(s) == Separability::Inseparable)
        .count();
    push(
        checks,
        "gf(9): the search recovers the cusp section and sees it is inseparable",
        found9.len() == 1 && insep9 == 1,
        format!("{} section(s) found, {insep9} inseparable", found9.len()),
    );
    // over gf(3): the cube root is invisible and the found section looks
    // separable, yet it still holds only pointwise
    let one3 = doc.one_param::<F3>()?;
    let found3 = find_singular_sections(&one3, 2, CAP, COMBO_BUDGET)?;
    let looks_separable = found3
        .iter()
        .all(|s| section_separability(s) == Separability::Separable);
    let only_pointwise = found3.iter().try_fold(true, |acc, s| {
        let v = verify_section(&one3, s)?;
        Ok::<bool, Error>(acc && v.holds && !v.holds_identically)
    })?;
    push(
        checks,
        "gf(3): the found section x = tau looks separable yet holds only pointwise",
        found3.len() == 1 && looks_separable && only_pointwise,
        format!(
            "{} section(s) found, all derivative-test separable: {looks_separable}, \
             none an identity: {only_pointwise}",
            found3.len()
        ),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// composite systems
// ---------------------------------------------------------------------------

fn quadric_pair_checks(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    type K = F5;
    let sys = doc.system::<K>()?;
    let vars: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();

    let comp = composite_verdict(&sys, CAP, SEED, SUBSPACE_BUDGET)?;
    let pencil_str = comp
        .pencil
        .as_ref()
        .map(|[w0, w1]| format!("({}, {})", w0.render(&vars), w1.render(&vars)));
    push(
        checks,
        "gf(5): the pencil is composite with the coordinate pencil",
        comp.composite
            && comp.method == CompositeMethod::PencilDecomposition
            && pencil_str.as_deref() == Some("(X0, X1)"),
        format!(
            "decomposes through {}",
            pencil_str.as_deref().unwrap_or("nothing")
        ),
    );

    let w0 = MultiPoly::<K>::var(2, 0);
    let w1 = MultiPoly::<K>::var(2, 1);
    let coeffs = decomposition_verify(&sys, &w0, &w1)?;
    let expected = vec![
        vec![K::one(), K::zero(), K::zero()],
        vec![K::zero(), K::zero(), K::one()],
    ];
    push(
        checks,
        "gf(5): each basis form is the square of the matching coordinate",
        coeffs.as_ref() == Some(&expected),
        format!("coefficients on (w0^2, w0*w1, w1^2): {coeffs:?}"),
    );

    let second5 = check_theorem_second(&sys, CAP, SEED, FACTOR_BUDGET, SUBSPACE_BUDGET)?;
    push(
        checks,
        "gf(5): some member is irreducible over the ground field, so the \
         reducibility hypothesis fails there",
        second5.verdict == Verdict::NotApplicable && second5.irreducible_witness.is_some(),
        format!(
            "verdict {}, {} of {} members reducible",
            second5.verdict, second5.reducible_members, second5.total_members
        ),
    );

    let sys2 = doc.system::<F2>()?;
    let second2 = check_theorem_second(&sys2, CAP, SEED, FACTOR_BUDGET, SUBSPACE_BUDGET)?;
    push(
        checks,
        "gf(2): every member is a square of a linear form (power branch, e = 1)",
        second2.verdict == Verdict::Holds
            && second2.branch == Some(CompositionKind::PthPower { e: 1 })
            && second2.reducible_members == second2.total_members,
        format!(
            "verdict {}, branch {:?}, {} of {} members reducible",
            second2.verdict, second2.branch, second2.reducible_members, second2.total_members
        ),
    );
    Ok(())
}

fn veronese_checks(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    type K = F5;
    let sys = doc.system::<K>()?;

    let dim = image_dimension(&sys, CAP, SEED)?;
    push(
        checks,
        "gf(5): the image of the net is one-dimensional",
        dim.dimension == 1,
        format!(
            "fiber counting gives dimension {}, Jacobian bound {:?}",
            dim.dimension, dim.jacobian_dimension
        ),
    );

    let comp = composite_verdict(&sys, CAP, SEED, SUBSPACE_BUDGET)?;
    push(
        checks,
        "gf(5): the net is composite",
        comp.composite
            && comp.method == CompositeMethod::ImageDimension
            && comp.image_dimension == Some(1),
        format!(
            "method {:?}, image dimension {:?}",
            comp.method, comp.image_dimension
        ),
    );

    let w0 = MultiPoly::<K>::var(2, 0);
    let w1 = MultiPoly::<K>::var(2, 1);
    let coeffs = decomposition_verify(&sys, &w0, &w1)?;
    let expected = vec![
        vec![K::one(), K::zero(), K::zero()],
        vec![K::zero(), K::one(), K::zero()],
        vec![K::zero(), K::zero(), K::one()],
    ];
    push(
        checks,
        "gf(5): the three basis forms are the three quadratic monomials in (X0, X1)",
        coeffs.as_ref() == Some(&expected),
        format!("coefficients on (w0^2, w0*w1, w1^2): {coeffs:?}"),
    );

    // ground-field census of the 31 members
    let mut reducible = 0u64;
    let mut irreducible = 0u64;
    for t in enumerate_proj::<K>(sys.s(), CAP)? {
        let member = sys.member_at(&t)?;
        if brute_force_factor(&member, FACTOR_BUDGET)?.is_irreducible() {
            irreducible += 1;
        } else {
            reducible += 1;
        }
    }
    push(
        checks,
        "gf(5): 21 of the 31 members split over the ground field",
        reducible == 21 && irreducible == 10,
        format!("{reducible} reducible, {irreducible} irreducible"),
    );

    let second = check_theorem_second(&sys, CAP, SEED, FACTOR_BUDGET, SUBSPACE_BUDGET)?;
    push(
        checks,
        "gf(5): an irreducible member witnesses that the reducibility hypothesis fails",
        second.verdict == Verdict::NotApplicable && second.irreducible_witness.is_some(),
        format!(
            "verdict {}, witness {:?}",
            second.verdict,
            second.irreducible_witness.as_ref().map(|t| t.to_string())
        ),
    );
    Ok(())
}

fn coordinate_net_checks(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    type K = F5;
    let sys = doc.system::<K>()?;

    let dim = image_dimension(&sys, CAP, SEED)?;
    push(
        checks,
        "gf(5): the image of the net of lines is two-dimensional",
        dim.dimension == 2,
        format!("fiber counting gives dimension {}", dim.dimension),
    );

    let comp = composite_verdict(&sys, CAP, SEED, SUBSPACE_BUDGET)?;
    push(
        checks,
        "gf(5): the net is not composite",
        !comp.composite && comp.method == CompositeMethod::ImageDimension,
        format!(
            "method {:?}, image dimension {:?}",
            comp.method, comp.image_dimension
        ),
    );

    let base = sys.base_locus(CAP)?;
    push(
        checks,
        "gf(5): the base locus is empty",
        base.is_empty(),
        format!("{} base points", base.len()),
    );
    Ok(())
}

fn conic_pencil_checks(doc: &SystemDocument, checks: &mut Vec<CorpusCheck>) -> Result<()> {
    type K = F5;
    let sys = doc.system::<K>()?;

    push(
        checks,
        "gf(5): the pencil has no fixed component",
        sys.fixed_component_is_trivial()?,
        "gcd of the basis forms is constant".to_string(),
    );

    let comp = composite_verdict(&sys, CAP, SEED, SUBSPACE_BUDGET)?;
    push(
        checks,
        "gf(5): the pencil is not composite",
        !comp.composite,
        format!("method {:?}", comp.method),
    );

    let census = pencil_irreducible_count(&sys, CAP, SEED, FACTOR_BUDGET, SUBSPACE_BUDGET)?;
    let split_at = ProjPoint::<K>::from_integers(&[0, 1])?;
    push(
        checks,
        "gf(5): exactly one of the six members splits, the line pair at (0 : 1)",
        census.applicable
            && census.total == 6
            && census.reducible == 1
            && census.irreducible == 5
            && census.undetermined == 0
            && census.reducible_parameters == vec![split_at],
        format!(
            "applicable {}, {} of {} reducible at {}, {} irreducible, {} undetermined",
            census.applicable,
            census.reducible,
            census.total,
            render_points(&census.reducible_parameters),
            census.irreducible,
            census.undetermined
        ),
    );
    push(
        checks,
        "gf(5): only finitely many members split -- at most 3 of 6 here",
        census.reducible <= 3,
        format!("{} reducible members", census.reducible),
    );

    let base = sys.base_locus(CAP)?;
    let expected = vec![
        ProjPoint::<K>::from_integers(&[0, 1, 0])?,
        ProjPoint::<K>::from_integers(&[0, 0, 1])?,
    ];
    push(
        checks,
        "gf(5): the base locus is the two points (0 : 1 : 0) and (0 : 0 : 1)",
        base.len() == 2 && expected.iter().all(|p| base.contains(p)),
        format!("base points: {}", render_points(&base)),
    );

    let singular = check_theorem_singular(&sys, None, CAP)?;
    push(
        checks,
        "gf(5): no member is singular outside the base locus",
        singular.verdict == Verdict::Holds,
        format!("verdict {}", singular.verdict),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        for entry in corpus_list() {
            let doc = SystemDocument::parse(entry.document);
            assert!(
                doc.is_ok(),
                "{} fails to parse: {:?}",
                entry.name,
                doc.err()
            );
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(corpus_get("fig3").is_some());
        assert!(corpus_get("no-such-example").is_none());
        assert!(run_checks("no-such-example").is_err());
    }

    #[test]
    fn every_entry_passes_its_checks() {
        for entry in corpus_list() {
            let report = run_checks(entry.name).unwrap();
            for c in &report.checks {
                assert!(c.passed, "{}: {} -- {}", entry.name, c.label, c.detail);
            }
            assert!(report.passed());
        }
    }
}
