//! Command-line front end: parse a system document, run one computation,
//! and print a human summary or a single JSON report object.
//!
//! Exit codes: 0 when the computation succeeds (and any checked statement
//! holds or carries no claim), 1 when a checked statement is violated or
//! an example's checks fail, 2 on errors.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use pencilbox::corpus::{corpus_get, corpus_list, run_checks, CorpusReport};
use pencilbox::document::{reduce_scalar, SystemDocument};
use pencilbox::expr::parse_poly;
use pencilbox::multiplicity::{
    find_singular_sections, m_r_locus, member_multiplicity_at, section_separability,
    verify_section, Section,
};
use pencilbox::theorems::{
    brute_force_factor, check_theorem_first, check_theorem_second, check_theorem_singular,
    composite_verdict, decomposition_verify, image_dimension, irreducibility_line_test,
    pencil_irreducible_count, AmbientHypersurface, CompositionKind, FactorOutcome, LineTestOutcome,
    Verdict, Witness,
};
use pencilbox::{with_field, Error, Field, MultiPoly, ProjPoint, Rational, Result};

/// Exact computations on linear systems of projective hypersurfaces.
#[derive(Parser)]
#[command(name = "pencilbox", version, about)]
struct Cli {
    /// Emit one JSON object on stdout instead of the human summary.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on exhaustive point enumeration over a finite field.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_points: u64,
    /// Budget for factoring, decomposition, and interpolation searches.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: u64,
    /// Seed for the deterministic sampling in dimension estimates.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print what a document contains.
    Show { file: PathBuf },
    /// Fixed component (gcd of the basis forms) and residual system.
    Fixed { file: PathBuf },
    /// Base locus of the residual system over a finite field.
    BaseLocus { file: PathBuf },
    /// Multiplicity of one member at one point.
    Multiplicity {
        file: PathBuf,
        /// Point, as comma-separated integer coordinates (e.g. "0,0,1").
        #[arg(long)]
        point: String,
        /// Member, as comma-separated integer parameter coordinates.
        #[arg(long)]
        member: String,
    },
    /// Points where some member has multiplicity at least r, with the
    /// dimension of the parameter conditions at each.
    MrLocus {
        file: PathBuf,
        /// The multiplicity order.
        #[arg(short, long)]
        r: u32,
    },
    /// Search for polynomial sections through the r-fold points of the
    /// members over a finite field.
    Sections {
        file: PathBuf,
        /// The multiplicity order.
        #[arg(short, long)]
        r: u32,
    },
    /// Check the multiple-point statement along a section of the document.
    CheckFirst {
        file: PathBuf,
        /// Which section line to use (0-based).
        #[arg(long, default_value_t = 0)]
        section: usize,
    },
    /// Check the statement on singular points of variable members.
    CheckSingular {
        file: PathBuf,
        /// Ambient hypersurface, as a form in the document's variables.
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Dimension of the image of the parameter-to-member map.
    ImageDim { file: PathBuf },
    /// Compositeness of the system, plus the reducibility statement.
    Composite { file: PathBuf },
    /// Verify a proposed decomposition through the pencil (w0, w1).
    Decompose {
        file: PathBuf,
        /// First form of the pencil, in the document's variables.
        #[arg(long)]
        w0: String,
        /// Second form of the pencil, in the document's variables.
        #[arg(long)]
        w1: String,
    },
    /// Factor one member over the ground field by exhaustive search.
    Factor {
        file: PathBuf,
        /// Member, as comma-separated integer parameter coordinates.
        #[arg(long)]
        member: String,
    },
    /// Census of irreducible members of a pencil over a finite field.
    PencilCount { file: PathBuf },
    /// List the built-in examples, or replay one example's checks.
    Corpus {
        /// Example name; omit to list all.
        name: Option<String>,
        /// Replay every example's checks.
        #[arg(long)]
        all: bool,
        /// Print the example's document instead of running checks.
        #[arg(long)]
        show: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let out = run(&cli);
    eprintln!("elapsed {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    match out {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Show { file } => cmd_show(cli, file),
        Command::Fixed { file } => cmd_fixed(cli, file),
        Command::BaseLocus { file } => cmd_base_locus(cli, file),
        Command::Multiplicity {
            file,
            point,
            member,
        } => cmd_multiplicity(cli, file, point, member),
        Command::MrLocus { file, r } => cmd_mr_locus(cli, file, *r),
        Command::Sections { file, r } => cmd_sections(cli, file, *r),
        Command::CheckFirst { file, section } => cmd_check_first(cli, file, *section),
        Command::CheckSingular { file, ambient } => {
            cmd_check_singular(cli, file, ambient.as_deref())
        }
        Command::ImageDim { file } => cmd_image_dim(cli, file),
        Command::Composite { file } => cmd_composite(cli, file),
        Command::Decompose { file, w0, w1 } => cmd_decompose(cli, file, w0, w1),
        Command::Factor { file, member } => cmd_factor(cli, file, member),
        Command::PencilCount { file } => cmd_pencil_count(cli, file),
        Command::Corpus { name, all, show } => cmd_corpus(cli, name.as_deref(), *all, *show),
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::Document { file_line: 0, msg } => msg.clone(),
        Error::Document { file_line, msg } => format!("line {file_line}: {msg}"),
        other => other.to_string(),
    }
}

fn load(path: &Path) -> Result<SystemDocument> {
    let text = fs::read_to_string(path).map_err(|e| Error::Document {
        file_line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    SystemDocument::parse(&text)
}

fn require_forms(doc: &SystemDocument) -> Result<()> {
    if doc.family.is_some() {
        return Err(Error::Document {
            file_line: 0,
            msg: "this command needs `form` lines; the document holds a `family`".into(),
        });
    }
    Ok(())
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|p| {
            p.trim().parse::<i64>().map_err(|_| Error::Document {
                file_line: 0,
                msg: format!("bad integer coordinate `{}`", p.trim()),
            })
        })
        .collect()
}

fn reduce_form<K: Field>(p: &MultiPoly<Rational>) -> Result<MultiPoly<K>> {
    let terms = p
        .terms()
        .iter()
        .map(|(e, c)| Ok((e.clone(), reduce_scalar::<K>(c)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiPoly::new(p.num_vars(), terms))
}

fn verdict_code(v: Verdict) -> ExitCode {
    if v == Verdict::Violated {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn witness_json<K: Field>(w: &Witness<K>) -> serde_json::Value {
    json!({
        "point": w.point.as_ref().map(|p| p.to_string()),
        "parameter": w.parameter.as_ref().map(|p| p.to_string()),
        "detail": w.detail,
    })
}

fn points_json<K: Field>(pts: &[ProjPoint<K>]) -> serde_json::Value {
    serde_json::Value::Array(
        pts.iter()
            .map(|p| serde_json::Value::String(p.to_string()))
            .collect(),
    )
}

fn section_text<K: Field>(sec: &Section<K>) -> String {
    let xs: Vec<String> = sec.x().iter().map(|p| p.render("tau")).collect();
    let ts: Vec<String> = sec.t().iter().map(|p| p.render("tau")).collect();
    format!(
        "x = ({}); t = ({}); r = {}",
        xs.join(", "),
        ts.join(", "),
        sec.r()
    )
}

fn bullet_lines(items: &[String]) -> String {
    items.iter().map(|n| format!("  - {n}\n")).collect()
}

// ---------------------------------------------------------------------------
// document inspection
// ---------------------------------------------------------------------------

fn cmd_show(cli: &Cli, file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    let vars: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();
    let mut human = format!(
        "field: {}\nvars: {}\nparams: {}\n",
        doc.field,
        doc.vars.join(" "),
        doc.params.join(" ")
    );
    let mut body = json!({
        "field": doc.field.to_string(),
        "vars": doc.vars,
        "params": doc.params,
    });
    let obj = body.as_object_mut().expect("object");
    if let Some(fam) = &doc.family {
        let mut names = vars.clone();
        names.push(doc.params[0].as_str());
        let rendered = fam.render(&names);
        human.push_str(&format!("family: {rendered}\n"));
        obj.insert("family".into(), json!(rendered));
    } else {
        let rendered: Vec<String> = doc.forms.iter().map(|f| f.render(&vars)).collect();
        let degree = doc.forms[0].homogeneous_degree();
        human.push_str(&format!(
            "degree: {}\nforms:\n{}",
            degree.map_or_else(|| "?".into(), |d: u32| d.to_string()),
            rendered
                .iter()
                .map(|s| format!("  {s}\n"))
                .collect::<String>()
        ));
        obj.insert("degree".into(), json!(degree));
        obj.insert("forms".into(), json!(rendered));
    }
    let sections: Vec<String> = doc
        .sections
        .iter()
        .map(|st| {
            let xs: Vec<String> = st.x.iter().map(|p| p.render("tau")).collect();
            let ts: Vec<String> = st.t.iter().map(|p| p.render("tau")).collect();
            format!(
                "x = ({}); t = ({}); r = {}",
                xs.join(", "),
                ts.join(", "),
                st.r
            )
        })
        .collect();
    for s in &sections {
        human.push_str(&format!("section: {s}\n"));
    }
    obj.insert("sections".into(), json!(sections));
    report::emit(cli.json, &report::wrap("show", body), &human);
    Ok(ExitCode::SUCCESS)
}

fn cmd_fixed(cli: &Cli, file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let (fixed, residual) = sys.fixed_and_residual()?;
        let vars: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();
        let fixed_s = fixed.render(&vars);
        let residual_s: Vec<String> = residual.forms().iter().map(|f| f.render(&vars)).collect();
        let human = format!(
            "fixed component: {fixed_s}\nresidual basis:\n{}",
            residual_s
                .iter()
                .map(|s| format!("  {s}\n"))
                .collect::<String>()
        );
        let body = json!({
            "field": doc.field.to_string(),
            "fixed_component": fixed_s,
            "residual_forms": residual_s,
        });
        report::emit(cli.json, &report::wrap("fixed", body), &human);
        Ok(ExitCode::SUCCESS)
    })
}

fn cmd_base_locus(cli: &Cli, file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let base = sys.base_locus(cli.max_points)?;
        let human = format!(
            "{} base point(s) of the residual system:\n{}",
            base.len(),
            base.iter().map(|p| format!("  {p}\n")).collect::<String>()
        );
        let body = json!({
            "field": doc.field.to_string(),
            "count": base.len(),
            "points": points_json(&base),
        });
        report::emit(cli.json, &report::wrap("base-locus", body), &human);
        Ok(ExitCode::SUCCESS)
    })
}

fn cmd_multiplicity(cli: &Cli, file: &Path, point: &str, member: &str) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    let pv = parse_ints(point)?;
    let tv = parse_ints(member)?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let x = ProjPoint::<K>::from_integers(&pv)?;
        let t = ProjPoint::<K>::from_integers(&tv)?;
        let m = member_multiplicity_at(&sys, &t, &x)?;
        let human = format!("multiplicity of the member at t = {t} at x = {x}: {m}\n");
        let body = json!({
            "field": doc.field.to_string(),
            "point": x.to_string(),
            "member": t.to_string(),
            "multiplicity": m,
        });
        report::emit(cli.json, &report::wrap("multiplicity", body), &human);
        Ok(ExitCode::SUCCESS)
    })
}

fn cmd_mr_locus(cli: &Cli, file: &Path, r: u32) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let locus = m_r_locus(&sys, r, cli.max_points)?;
        let human = format!(
            "{} point(s) where some member has multiplicity at least {r}:\n{}",
            locus.len(),
            locus
                .iter()
                .map(|(p, t)| format!("  {p}  (conditions dimension {})\n", t.dim()))
                .collect::<String>()
        );
        let body = json!({
            "field": doc.field.to_string(),
            "r": r,
            "count": locus.len(),
            "points": locus
                .iter()
                .map(|(p, t)| json!({"point": p.to_string(), "dim": t.dim()}))
                .collect::<Vec<_>>(),
        });
        report::emit(cli.json, &report::wrap("mr-locus", body), &human);
        Ok(ExitCode::SUCCESS)
    })
}

fn cmd_sections(cli: &Cli, file: &Path, r: u32) -> Result<ExitCode> {
    let doc = load(file)?;
    with_field!(doc.field, K, {
        let one = doc.one_param::<K>()?;
        let found = find_singular_sections(&one, r, cli.max_points, cli.budget)?;
        let mut human = format!("{} section(s) of {r}-fold points found\n", found.len());
        let mut items = Vec::new();
        for sec in &found {
            let ver = verify_section(&one, sec)?;
            let sep = section_separability(sec);
            human.push_str(&format!(
                "  {}  [{sep}{}]\n",
                section_text(sec),
                if ver.holds_identically {
                    ", identity"
                } else {
                    ", pointwise only"
                }
            ));
            items.push(json!({
                "section": section_text(sec),
                "separability": sep.to_string(),
                "holds_identically": ver.holds_identically,
            }));
        }
        let body = json!({
            "field": doc.field.to_string(),
            "r": r,
            "count": found.len(),
            "sections": items,
        });
        report::emit(cli.json, &report::wrap("sections", body), &human);
        Ok(ExitCode::SUCCESS)
    })
}

// ---------------------------------------------------------------------------
// the statements
// ---------------------------------------------------------------------------

fn cmd_check_first(cli: &Cli, file: &Path, section: usize) -> Result<ExitCode> {
    let doc = load(file)?;
    if section >= doc.sections.len() {
        return Err(Error::Document {
            file_line: 0,
            msg: format!(
                "document has {} section line(s); section {section} does not exist",
                doc.sections.len()
            ),
        });
    }
    with_field!(doc.field, K, {
        let one = doc.one_param::<K>()?;
        let sec = doc.section::<K>(section)?;
        let rep = check_theorem_first(&one, &sec, cli.max_points)?;
        let mut human = format!(
            "section: {}\nseparability: {}\nsection lies in the multiple locus: {}\n\
             conclusion ((r-1)-fold on every member): {}\nverdict: {}\n",
            section_text(&sec),
            rep.separability,
            if rep.section_in_locus { "yes" } else { "no" },
            if rep.conclusion_holds {
                "holds"
            } else {
                "fails"
            },
            rep.verdict
        );
        if !rep.notes.is_empty() {
            human.push_str("notes:\n");
            human.push_str(&bullet_lines(&rep.notes));
        }
        if !rep.failures.is_empty() {
            human.push_str(&format!("failures ({} shown):\n", rep.failures.len()));
            for w in &rep.failures {
                human.push_str(&format!("  {w}\n"));
            }
        }
        let body = json!({
            "field": doc.field.to_string(),
            "section": section_text(&sec),
            "verdict": rep.verdict.to_string(),
            "separability": rep.separability.to_string(),
            "section_in_locus": rep.section_in_locus,
            "conclusion_holds": rep.conclusion_holds,
            "failures": rep.failures.iter().map(witness_json).collect::<Vec<_>>(),
            "notes": report::strings(rep.notes.clone()),
        });
        report::emit(cli.json, &report::wrap("check-first", body), &human);
        Ok(verdict_code(rep.verdict))
    })
}

fn cmd_check_singular(cli: &Cli, file: &Path, ambient: Option<&str>) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    let vars: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();
    let ambient_q = ambient.map(|src| parse_poly(src, &vars)).transpose()?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let amb = ambient_q
            .as_ref()
            .map(|p| Ok::<_, Error>(AmbientHypersurface::new(reduce_form::<K>(p)?)?))
            .transpose()?;
        let rep = check_theorem_singular(&sys, amb.as_ref(), cli.max_points)?;
        let mut human = format!(
            "fixed component trivial: {}\nbase points: {}\n",
            rep.fixed_component_trivial, rep.base_point_count
        );
        if amb.is_some() {
            human.push_str(&format!(
                "ambient singular points: {}\n",
                rep.ambient_singular_count
            ));
        }
        for m in &rep.members {
            human.push_str(&format!(
                "member at t = {}: {} point(s), {} singular outside the base locus\n",
                m.parameter, m.points_on_member, m.singular_outside
            ));
        }
        if !rep.witnesses.is_empty() {
            human.push_str(&format!("witnesses ({} shown):\n", rep.witnesses.len()));
            for w in &rep.witnesses {
                human.push_str(&format!("  {w}\n"));
            }
        }
        if !rep.notes.is_empty() {
            human.push_str("notes:\n");
            human.push_str(&bullet_lines(&rep.notes));
        }
        human.push_str(&format!("verdict: {}\n", rep.verdict));
        let body = json!({
            "field": doc.field.to_string(),
            "verdict": rep.verdict.to_string(),
            "fixed_component_trivial": rep.fixed_component_trivial,
            "base_points": rep.base_point_count,
            "ambient_singular_points": rep.ambient_singular_count,
            "members": rep.members.iter().map(|m| json!({
                "parameter": m.parameter.to_string(),
                "points_on_member": m.points_on_member,
                "singular_outside": m.singular_outside,
            })).collect::<Vec<_>>(),
            "witnesses": rep.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
            "notes": report::strings(rep.notes.clone()),
        });
        report::emit(cli.json, &report::wrap("check-singular", body), &human);
        Ok(verdict_code(rep.verdict))
    })
}

fn cmd_image_dim(cli: &Cli, file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let rep = image_dimension(&sys, cli.max_points, cli.seed)?;
        let mut human = format!(
            "image dimension (fiber counting): {}\nJacobian upper bound: {}\n",
            rep.dimension,
            rep.jacobian_dimension
                .map_or_else(|| "n/a".into(), |d: usize| d.to_string())
        );
        for (p, n) in &rep.fiber_samples {
            human.push_str(&format!("  fiber through x = {p}: {n} point(s)\n"));
        }
        if !rep.notes.is_empty() {
            human.push_str("notes:\n");
            human.push_str(&bullet_lines(&rep.notes));
        }
        let body = json!({
            "field": doc.field.to_string(),
            "dimension": rep.dimension,
            "jacobian_dimension": rep.jacobian_dimension,
            "fiber_samples": rep.fiber_samples.iter().map(|(p, n)| json!({
                "point": p.to_string(),
                "fiber_points": n,
            })).collect::<Vec<_>>(),
            "notes": report::strings(rep.notes.clone()),
        });
        report::emit(cli.json, &report::wrap("image-dim", body), &human);
        Ok(ExitCode::SUCCESS)
    })
}

fn branch_json(branch: &Option<CompositionKind>) -> serde_json::Value {
    match branch {
        None => serde_json::Value::Null,
        Some(CompositionKind::PthPower { e }) => json!({"kind": "pth-power", "e": e}),
        Some(CompositionKind::ComposedWithPencil) => json!({"kind": "composed-with-pencil"}),
    }
}

fn cmd_composite(cli: &Cli, file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    let vars: Vec<String> = doc.vars.clone();
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let comp = composite_verdict(&sys, cli.max_points, cli.seed, cli.budget)?;
        let second = check_theorem_second(&sys, cli.max_points, cli.seed, cli.budget, cli.budget)?;
        let pencil_s = comp
            .pencil
            .as_ref()
            .map(|[w0, w1]| format!("({}, {})", w0.render(&vars), w1.render(&vars)));
        let mut human = format!(
            "composite: {}{}\n",
            if comp.composite { "yes" } else { "no" },
            pencil_s
                .as_deref()
                .map_or_else(String::new, |p| format!(", through the pencil {p}"))
        );
        if let Some(d) = comp.image_dimension {
            human.push_str(&format!("image dimension: {d}\n"));
        }
        human.push_str(&format!(
            "members: {} total, {} reducible, {} undetermined\n",
            second.total_members, second.reducible_members, second.undetermined_members
        ));
        match &second.branch {
            Some(CompositionKind::PthPower { e }) => {
                human.push_str(&format!("branch: every member is a p^{e}-th power\n"))
            }
            Some(CompositionKind::ComposedWithPencil) => {
                human.push_str("branch: composite with a pencil\n")
            }
            None => {}
        }
        if let Some(t) = &second.irreducible_witness {
            human.push_str(&format!("irreducible member at t = {t}\n"));
        }
        if !second.notes.is_empty() {
            human.push_str("notes:\n");
            human.push_str(&bullet_lines(&second.notes));
        }
        human.push_str(&format!("reducibility statement: {}\n", second.verdict));
        let body = json!({
            "field": doc.field.to_string(),
            "composite": comp.composite,
            "pencil": pencil_s,
            "image_dimension": comp.image_dimension,
            "verdict": second.verdict.to_string(),
            "branch": branch_json(&second.branch),
            "total_members": second.total_members,
            "reducible_members": second.reducible_members,
            "undetermined_members": second.undetermined_members,
            "irreducible_witness": second.irreducible_witness.as_ref().map(|t| t.to_string()),
            "notes": report::strings(second.notes.clone()),
        });
        report::emit(cli.json, &report::wrap("composite", body), &human);
        Ok(verdict_code(second.verdict))
    })
}

fn cmd_decompose(cli: &Cli, file: &Path, w0: &str, w1: &str) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    let vars: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();
    let w0_q = parse_poly(w0, &vars)?;
    let w1_q = parse_poly(w1, &vars)?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let w0k = reduce_form::<K>(&w0_q)?;
        let w1k = reduce_form::<K>(&w1_q)?;
        let coeffs = decomposition_verify(&sys, &w0k, &w1k)?;
        let human = match &coeffs {
            Some(rows) => {
                let k = rows[0].len() - 1;
                let mut s = format!(
                    "every basis form is a degree-{k} form in (w0, w1); coefficients on \
                     (w0^{k}, w0^{}*w1, ..., w1^{k}):\n",
                    k.saturating_sub(1)
                );
                for (i, row) in rows.iter().enumerate() {
                    let rendered: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                    s.push_str(&format!("  form {i}: [{}]\n", rendered.join(", ")));
                }
                s
            }
            None => "the basis forms do not all lie in powers of that pencil\n".to_string(),
        };
        let body = json!({
            "field": doc.field.to_string(),
            "decomposes": coeffs.is_some(),
            "coefficients": coeffs.as_ref().map(|rows| rows
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
        });
        report::emit(cli.json, &report::wrap("decompose", body), &human);
        Ok(if coeffs.is_some() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        })
    })
}

fn cmd_factor(cli: &Cli, file: &Path, member: &str) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    let tv = parse_ints(member)?;
    let vars: Vec<String> = doc.vars.clone();
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let t = ProjPoint::<K>::from_integers(&tv)?;
        let u = sys.member_at(&t)?;
        let (human, body) = match brute_force_factor(&u, cli.budget) {
            Ok(FactorOutcome::Irreducible) => (
                format!("member at t = {t} is irreducible (exhaustive search)\n"),
                json!({"member": t.to_string(), "outcome": "irreducible"}),
            ),
            Ok(FactorOutcome::Reducible { factor, cofactor }) => (
                format!(
                    "member at t = {t} splits: ({}) * ({})\n",
                    factor.render(&vars),
                    cofactor.render(&vars)
                ),
                json!({
                    "member": t.to_string(),
                    "outcome": "reducible",
                    "factor": factor.render(&vars),
                    "cofactor": cofactor.render(&vars),
                }),
            ),
            Err(Error::BudgetExceeded { .. }) => {
                let lt = irreducibility_line_test(&u, cli.seed, 40)?;
                let outcome = match lt.outcome {
                    LineTestOutcome::CertifiedIrreducible => "irreducible (line test)",
                    LineTestOutcome::SuspectedReducible => "suspected reducible (line test)",
                    LineTestOutcome::Inconclusive => "undetermined (budget exceeded)",
                };
                (
                    format!("member at t = {t}: {outcome}\n"),
                    json!({"member": t.to_string(), "outcome": outcome}),
                )
            }
            Err(e) => return Err(e),
        };
        let mut full = json!({"field": doc.field.to_string()});
        if let (Some(obj), serde_json::Value::Object(extra)) = (full.as_object_mut(), body) {
            for (k, v) in extra {
                obj.insert(k, v);
            }
        }
        report::emit(cli.json, &report::wrap("factor", full), &human);
        Ok(ExitCode::SUCCESS)
    })
}

fn cmd_pencil_count(cli: &Cli, file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    require_forms(&doc)?;
    with_field!(doc.field, K, {
        let sys = doc.system::<K>()?;
        let rep = pencil_irreducible_count(&sys, cli.max_points, cli.seed, cli.budget, cli.budget)?;
        let mut human = format!(
            "hypotheses (trivial fixed component, not composite) established: {}\n\
             members: {} total, {} irreducible, {} reducible, {} undetermined\n",
            if rep.applicable { "yes" } else { "no" },
            rep.total,
            rep.irreducible,
            rep.reducible,
            rep.undetermined
        );
        if !rep.reducible_parameters.is_empty() {
            human.push_str(&format!(
                "reducible members at: {}\n",
                rep.reducible_parameters
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
        if !rep.notes.is_empty() {
            human.push_str("notes:\n");
            human.push_str(&bullet_lines(&rep.notes));
        }
        let body = json!({
            "field": doc.field.to_string(),
            "applicable": rep.applicable,
            "total": rep.total,
            "irreducible": rep.irreducible,
            "reducible": rep.reducible,
            "undetermined": rep.undetermined,
            "reducible_parameters": points_json(&rep.reducible_parameters),
            "notes": report::strings(rep.notes.clone()),
        });
        report::emit(cli.json, &report::wrap("pencil-count", body), &human);
        Ok(ExitCode::SUCCESS)
    })
}

// ---------------------------------------------------------------------------
// the built-in examples
// ---------------------------------------------------------------------------

fn corpus_report_json(rep: &CorpusReport) -> serde_json::Value {
    json!({
        "name": rep.name,
        "passed": rep.passed(),
        "checks": rep.checks.iter().map(|c| json!({
            "label": c.label,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "notes": rep.notes,
    })
}

fn corpus_report_human(rep: &CorpusReport) -> String {
    let title = corpus_get(&rep.name).map_or("", |e| e.title);
    let mut s = format!("{}: {}\n", rep.name, title);
    for c in &rep.checks {
        s.push_str(&format!(
            "  {}  {}\n",
            if c.passed { "pass" } else { "FAIL" },
            c.label
        ));
        if !c.passed {
            s.push_str(&format!("        {}\n", c.detail));
        }
    }
    if !rep.notes.is_empty() {
        s.push_str("notes:\n");
        s.push_str(&bullet_lines(&rep.notes));
    }
    s
}

fn cmd_corpus(cli: &Cli, name: Option<&str>, all: bool, show: bool) -> Result<ExitCode> {
    if let Some(n) = name {
        let entry = corpus_get(n).ok_or_else(|| Error::Document {
            file_line: 0,
            msg: format!("no example named `{n}`; `pencilbox corpus` lists the available names"),
        })?;
        if show {
            let body = json!({
                "name": entry.name,
                "title": entry.title,
                "document": entry.document,
            });
            report::emit(cli.json, &report::wrap("corpus", body), entry.document);
            return Ok(ExitCode::SUCCESS);
        }
        let rep = run_checks(n)?;
        let body = corpus_report_json(&rep);
        report::emit(
            cli.json,
            &report::wrap("corpus", body),
            &corpus_report_human(&rep),
        );
        return Ok(if rep.passed() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    if all {
        let mut reports = Vec::new();
        let mut human = String::new();
        let mut ok = true;
        for entry in corpus_list() {
            let rep = run_checks(entry.name)?;
            ok &= rep.passed();
            human.push_str(&corpus_report_human(&rep));
            reports.push(corpus_report_json(&rep));
        }
        human.push_str(&format!(
            "overall: {}\n",
            if ok {
                "all checks passed"
            } else {
                "some checks FAILED"
            }
        ));
        let body = json!({"passed": ok, "reports": reports});
        report::emit(cli.json, &report::wrap("corpus", body), &human);
        return Ok(if ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    let mut human = String::new();
    let mut items = Vec::new();
    for entry in corpus_list() {
        human.push_str(&format!("{:<14} {}\n", entry.name, entry.title));
        items.push(json!({"name": entry.name, "title": entry.title}));
    }
    let body = json!({"entries": items});
    report::emit(cli.json, &report::wrap("corpus", body), &human);
    Ok(ExitCode::SUCCESS)
}
