//! Command-line front end: build algebras, run projection and coideal
//! queries, enumerate exhaustively, classify Taft algebras, and run the
//! verification suite against golden files.
//!
//! Exit codes: 0 success, 1 check failure or counterexample, 2 usage or
//! input error, 3 search or enumeration budget exceeded. Diagnostics go to
//! stderr; data goes to stdout or `-o` files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopfproj_core::builders::{
    example_ff, function_algebra, group_algebra, taft, GroupPresentation, TaftHandle,
};
use hopfproj_core::coideals::{
    annihilator, classify_taft, counital_integral, enumerate_coideal_subalgebras,
    enumerate_gl_projections, group_likes, hopf_automorphisms_taft, n_p, quotient_and_n_pi, v_p,
    CoidealLabel, Completeness, NpVariant,
};
use hopfproj_core::hopf::{verify_hopf_axioms, Element, HopfAlgebra, Side};
use hopfproj_core::json as hjson;
use hopfproj_core::projections::{summary_report, GlKind};
use hopfproj_core::suite::{verify_suite, CheckStatus, SuiteLevel};
use hopfproj_core::{Error, Field, Scalar};

#[derive(Parser)]
#[command(
    name = "hopfproj",
    about = "Exact engine for group-like projections and coideal subalgebras \
             of finite-dimensional Hopf algebras"
)]
struct Cli {
    /// Worker threads for the enumeration engines (output is independent of
    /// this setting).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildTarget {
    Taft,
    Group,
    Functions,
    Exff,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Right,
    Left,
    #[value(alias = "two_sided")]
    TwoSided,
    #[value(alias = "weak_right")]
    WeakRight,
    #[value(alias = "weak_left")]
    WeakLeft,
    Weak,
}

impl From<KindArg> for GlKind {
    fn from(k: KindArg) -> GlKind {
        match k {
            KindArg::Right => GlKind::Right,
            KindArg::Left => GlKind::Left,
            KindArg::TwoSided => GlKind::TwoSided,
            KindArg::WeakRight => GlKind::WeakRight,
            KindArg::WeakLeft => GlKind::WeakLeft,
            KindArg::Weak => GlKind::Weak,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CoidealOp {
    Vp,
    Np,
    Npl,
    Npr,
    Quotient,
    Faithfulness,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateWhat {
    Projections,
    Coideals,
    Automorphisms,
    #[value(alias = "group_likes")]
    GroupLikes,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and emit its structure-constant JSON.
    Build {
        target: BuildTarget,
        /// Taft parameter, or cyclic group order for group/functions.
        #[arg(long)]
        n: Option<usize>,
        /// Coefficient field: `prime:P`, `cyclotomic:N`, or `rational`.
        #[arg(long, default_value = "rational")]
        field: String,
        /// Cayley table JSON file (array of index rows) for group/functions.
        #[arg(long)]
        cayley: Option<PathBuf>,
        /// Use the symmetric group on K letters for group/functions.
        #[arg(long)]
        symmetric: Option<usize>,
        /// Verify the Hopf axioms after building.
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the projection truth table for one element.
    CheckProjection {
        #[arg(short, long)]
        algebra: PathBuf,
        #[arg(short, long)]
        element: PathBuf,
        #[arg(long)]
        kind: Option<KindArg>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Coideal constructions attached to a projection (or to the embedded
    /// ideal, for the faithfulness report).
    Coideal {
        #[arg(short, long)]
        algebra: PathBuf,
        #[arg(short, long)]
        element: Option<PathBuf>,
        #[arg(long)]
        op: CoidealOp,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive enumerations over prime fields.
    Enumerate {
        #[arg(short, long)]
        algebra: PathBuf,
        #[arg(long)]
        what: EnumerateWhat,
        #[arg(long)]
        kind: Option<KindArg>,
        /// Candidate budget for element scans.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u128,
        /// Taft parameter when the algebra is a Taft build (needed for the
        /// automorphism search).
        #[arg(long)]
        taft_n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a Taft algebra and classify its coideal subalgebras.
    ClassifyTaft {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        field: String,
        /// Explicit β sample for infinite fields (comma-separated integers).
        #[arg(long)]
        beta_sample: Option<String>,
        #[arg(long, default_value_t = 10_000_000)]
        subspace_cap: u128,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the verification suite and optionally diff against golden files.
    VerifySuite {
        #[arg(long, default_value = "quick")]
        level: LevelArg,
        /// Directory of per-check golden files to diff against.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Write the golden files instead of diffing.
        #[arg(long)]
        write_golden: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("warning: thread pool already initialized; --jobs ignored");
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SearchTooLarge { .. } | Error::EnumerationTooLarge { .. } => {
                    ExitCode::from(3)
                }
                Error::EquivalenceViolation { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Invalid(format!("bad JSON in {}: {e}", path.display())))
}

fn emit(value: &Value, output: Option<&Path>) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Invalid(format!("serialization failed: {e}")))?;
    text.push('\n');
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `prime:P`, `cyclotomic:N`, or `rational`, designating a root of
/// unity of order `root_order`.
fn parse_field(spec: &str, root_order: u64) -> Result<Field, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["rational"] => Field::rational_with_root(root_order),
        ["cyclotomic", n] => {
            let n: u64 = n
                .parse()
                .map_err(|_| Error::Invalid(format!("bad cyclotomic index '{n}'")))?;
            Field::cyclotomic_with_root(n, root_order)
        }
        ["prime", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Invalid(format!("bad prime '{p}'")))?;
            Field::prime(p, root_order)
        }
        ["prime", p, omega] => {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Invalid(format!("bad prime '{p}'")))?;
            let omega: u64 = omega
                .parse()
                .map_err(|_| Error::Invalid(format!("bad residue '{omega}'")))?;
            let f = Field::prime_with_omega(p, omega)?;
            if f.root_order() != root_order {
                return Err(Error::NoPrimitiveRoot { order: root_order });
            }
            Ok(f)
        }
        _ => Err(Error::Invalid(format!(
            "field spec '{spec}' is not prime:P, cyclotomic:N, or rational"
        ))),
    }
}

fn load_algebra(path: &Path) -> Result<(HopfAlgebra, Option<hopfproj_core::linalg::Subspace>), Error> {
    hjson::algebra_from_json(&read_json(path)?)
}

fn taft_handle_from(a: HopfAlgebra, n: Option<usize>) -> Result<TaftHandle, Error> {
    let n = match n {
        Some(n) => n,
        None => {
            let root = (a.dim() as f64).sqrt().round() as usize;
            if root * root != a.dim() {
                return Err(Error::Invalid(
                    "algebra dimension is not a square; pass --taft-n".into(),
                ));
            }
            root
        }
    };
    if n * n != a.dim() || a.field().root_order() != n as u64 {
        return Err(Error::Invalid(
            "algebra shape does not match a Taft build for this n".into(),
        ));
    }
    let omega = a.field().omega();
    Ok(TaftHandle { algebra: a, n, omega })
}

fn label_to_json(f: &Field, label: &CoidealLabel) -> Value {
    match label {
        CoidealLabel::KGPrime(d) => json!({"class": "kgprime", "d": d}),
        CoidealLabel::NdX(d) => json!({"class": "ndx", "d": d}),
        CoidealLabel::NBeta(b) => json!({"class": "nbeta", "beta": hjson::scalar_to_json(f, b)}),
        CoidealLabel::Other => json!({"class": "other"}),
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Build {
            target,
            n,
            field,
            cayley,
            symmetric,
            verify,
            output,
        } => {
            let (algebra, ideal) = match target {
                BuildTarget::Taft => {
                    let n = n.ok_or_else(|| Error::Invalid("taft needs --n".into()))?;
                    let f = parse_field(&field, n as u64)?;
                    (taft(n, &f)?.algebra, None)
                }
                BuildTarget::Group | BuildTarget::Functions => {
                    let f = parse_field(&field, 1)?;
                    let group = if let Some(path) = cayley {
                        hjson::group_from_json(&json!({"table": read_json(&path)?}))?
                    } else if let Some(k) = symmetric {
                        GroupPresentation::symmetric(k)
                    } else {
                        let n =
                            n.ok_or_else(|| Error::Invalid("group needs --n, --cayley, or --symmetric".into()))?;
                        GroupPresentation::Cyclic(vec![n])
                    };
                    let a = match target {
                        BuildTarget::Group => group_algebra(&group, &f)?,
                        _ => function_algebra(&group, &f)?,
                    };
                    (a, None)
                }
                BuildTarget::Exff => {
                    let f = parse_field(&field, 1)?;
                    let (a, ideal) = example_ff(&f)?;
                    (a, Some(ideal))
                }
            };
            if verify {
                let report = verify_hopf_axioms(&algebra);
                let expected_hopf = !matches!(target, BuildTarget::Exff);
                let ok = if expected_hopf {
                    report.all_pass_hopf()
                } else {
                    report.associative && report.unital
                };
                if !ok {
                    eprintln!("axiom failures: {:?}", report.failures);
                    return Ok(ExitCode::from(1));
                }
                eprintln!("axioms: pass");
            }
            emit(&hjson::algebra_to_json(&algebra, ideal.as_ref()), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }

        Command::CheckProjection {
            algebra,
            element,
            kind,
            output,
        } => {
            let (a, _) = load_algebra(&algebra)?;
            let e = hjson::element_from_json(&a, &read_json(&element)?)?;
            let report = summary_report(&a, &e)?;
            let mut value = hjson::projection_report_to_json(a.field(), &report);
            if let Some(kind) = kind {
                let flag = hopfproj_core::projections::gl_check(&a, &e, kind.into())?;
                value["requested_kind_holds"] = json!(flag);
            }
            emit(&value, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Coideal {
            algebra,
            element,
            op,
            output,
        } => {
            let (a, ideal) = load_algebra(&algebra)?;
            let f = a.field();
            let need_elem = |element: &Option<PathBuf>| -> Result<Element, Error> {
                let path = element
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("this operation needs -e element.json".into()))?;
                hjson::element_from_json(&a, &read_json(path)?)
            };
            let value = match op {
                CoidealOp::Vp => hjson::subspace_to_json(f, &v_p(&a, &need_elem(&element)?)?),
                CoidealOp::Np | CoidealOp::Npl | CoidealOp::Npr => {
                    let variant = match op {
                        CoidealOp::Np => NpVariant::Full,
                        CoidealOp::Npl => NpVariant::L,
                        _ => NpVariant::R,
                    };
                    let n = n_p(&a, &need_elem(&element)?, variant)?;
                    json!({
                        "subspace": hjson::subspace_to_json(f, &n.subspace),
                        "is_subalgebra": n.is_subalgebra,
                        "is_left_coideal": n.is_left_coideal,
                        "unital": n.unital,
                    })
                }
                CoidealOp::Quotient => {
                    let p = need_elem(&element)?;
                    let n = n_p(&a, &p, NpVariant::Full)?;
                    let (q, npi) = quotient_and_n_pi(&a, &n)?;
                    json!({
                        "quotient_dim": q.dim,
                        "n_pi": hjson::subspace_to_json(f, &npi),
                        "counital_integral": counital_integral(&a, &n)?
                            .map(|e| hjson::element_to_json(&a, &e)),
                    })
                }
                CoidealOp::Faithfulness => {
                    let ideal = ideal.ok_or_else(|| {
                        Error::Invalid("algebra JSON carries no 'ideal' subspace".into())
                    })?;
                    let full = hopfproj_core::linalg::Subspace::full(f, a.dim());
                    let left = annihilator(&a, &full, &ideal, Side::Left)?;
                    let right = annihilator(&a, &full, &ideal, Side::Right)?;
                    let mut products = Vec::new();
                    for u in ideal.basis_vectors() {
                        for v in ideal.basis_vectors() {
                            products.push(a.mul(&Element(u.clone()), &Element(v)).0);
                        }
                    }
                    let squared = hopfproj_core::linalg::Subspace::span_vectors(
                        f,
                        &products,
                        a.dim(),
                    );
                    json!({
                        "ideal_dim": ideal.dim(),
                        "idempotent": squared == ideal,
                        "proper": ideal.dim() < a.dim(),
                        "left_annihilator_dim": left.dim(),
                        "right_annihilator_dim": right.dim(),
                    })
                }
            };
            emit(&value, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Enumerate {
            algebra,
            what,
            kind,
            budget,
            taft_n,
            output,
        } => {
            let (a, _) = load_algebra(&algebra)?;
            let f = a.field().clone();
            let value = match what {
                EnumerateWhat::Projections => {
                    let kind = kind.map(GlKind::from).unwrap_or(GlKind::Right);
                    let found = enumerate_gl_projections(&a, kind, budget)?;
                    Value::Array(found.iter().map(|e| hjson::element_to_json(&a, e)).collect())
                }
                EnumerateWhat::GroupLikes => {
                    let found = group_likes(&a, budget)?;
                    Value::Array(found.iter().map(|e| hjson::element_to_json(&a, e)).collect())
                }
                EnumerateWhat::Coideals => {
                    let found = enumerate_coideal_subalgebras(&a, budget)?;
                    Value::Array(
                        found
                            .iter()
                            .map(|c| {
                                json!({
                                    "dim": c.dim(),
                                    "basis": hjson::subspace_to_json(&f, &c.subspace),
                                })
                            })
                            .collect(),
                    )
                }
                EnumerateWhat::Automorphisms => {
                    let handle = taft_handle_from(a.clone(), taft_n)?;
                    let autos = hopf_automorphisms_taft(&handle, budget)?;
                    Value::Array(
                        autos
                            .iter()
                            .map(|m| {
                                Value::Array(
                                    (0..m.rows())
                                        .map(|r| {
                                            Value::Array(
                                                m.row(r)
                                                    .iter()
                                                    .map(|s| hjson::scalar_to_json(&f, s))
                                                    .collect(),
                                            )
                                        })
                                        .collect(),
                                )
                            })
                            .collect(),
                    )
                }
            };
            emit(&value, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }

        Command::ClassifyTaft {
            n,
            field,
            beta_sample,
            subspace_cap,
            output,
        } => {
            let f = parse_field(&field, n as u64)?;
            let handle = taft(n, &f)?;
            let sample: Option<Vec<Scalar>> = match beta_sample {
                Some(s) => Some(
                    s.split(',')
                        .map(|tok| {
                            tok.trim()
                                .parse::<i64>()
                                .map(|v| f.from_i64(v))
                                .map_err(|_| Error::Invalid(format!("bad beta '{tok}'")))
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                None => None,
            };
            let result = classify_taft(&handle, sample.as_deref(), subspace_cap)?;
            let items: Vec<Value> = result
                .items
                .iter()
                .map(|item| {
                    json!({
                        "label": label_to_json(&f, &item.label),
                        "orbit": item.orbit_id,
                        "dim": item.coideal.dim(),
                        "basis": hjson::subspace_to_json(&f, &item.coideal.subspace),
                        "semisimple": item.semisimple,
                        "counital_integral": item
                            .counital_integral
                            .as_ref()
                            .map(|e| hjson::element_to_json(&handle.algebra, e)),
                    })
                })
                .collect();
            let counts: BTreeMap<&str, usize> = result
                .count_by_label_class()
                .into_iter()
                .collect();
            let value = json!({
                "n": n,
                "field": hjson::field_to_json(&f),
                "items": items,
                "counts": counts,
                "orbit_count": result.orbit_count,
                "completeness": match result.completeness {
                    Completeness::Verified => "verified",
                    Completeness::InventoryOnly => "inventory_only",
                },
            });
            emit(&value, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }

        Command::VerifySuite {
            level,
            golden,
            write_golden,
            output,
        } => {
            let level = match level {
                LevelArg::Quick => SuiteLevel::Quick,
                LevelArg::Full => SuiteLevel::Full,
            };
            let report = verify_suite(level);
            for c in &report.checks {
                let tag = match c.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Inconclusive => "INCONCLUSIVE",
                    CheckStatus::Skipped => "SKIP",
                };
                eprintln!("{tag} {} ({} ms)", c.check_id, c.wall_ms);
                for f in &c.failures {
                    eprintln!("    {f}");
                }
            }
            let mut exit = if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            if let Some(dir) = golden {
                if write_golden {
                    std::fs::create_dir_all(&dir)
                        .map_err(|e| Error::Invalid(format!("cannot create golden dir: {e}")))?;
                    for c in &report.checks {
                        if c.status == CheckStatus::Skipped {
                            continue;
                        }
                        let path = dir.join(format!("{}.json", c.check_id));
                        emit(&c.golden_view(), Some(&path))?;
                    }
                } else {
                    let mut drift = 0;
                    for c in &report.checks {
                        if c.status == CheckStatus::Skipped {
                            continue;
                        }
                        let path = dir.join(format!("{}.json", c.check_id));
                        let expected = read_json(&path)?;
                        if expected != c.golden_view() {
                            eprintln!("golden drift in {}", c.check_id);
                            drift += 1;
                        }
                    }
                    if drift > 0 {
                        exit = ExitCode::from(1);
                    }
                }
            }
            let value = serde_json::to_value(&report)
                .map_err(|e| Error::Invalid(format!("report serialization failed: {e}")))?;
            emit(&value, output.as_deref())?;
            Ok(exit)
        }
    }
}
