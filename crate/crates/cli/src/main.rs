//! `fpext`: exact Ext calculus over finitely presented modules.
//!
//! Exit codes: 0 success, 1 domain errors (non-exact sequence, unsupported
//! ring, ill-defined morphism), 2 malformed input (unreadable files, bad
//! JSON, shape violations, unknown scenarios).

use clap::{Parser, Subcommand};
use fpext_cli::gallery;
use fpext_core::io;
use fpext_core::{
    are_equivalent, class_of, ext_module, flat_dimension, injective_dimension, les_contravariant,
    les_covariant, projective_dimension, splitting, Dimension, Error as CoreError,
    LongExactSequence, NExactSequence,
};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fpext",
    about = "Exact Yoneda Ext calculus over finitely presented modules (Z and Z/n)",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized scenarios
    #[arg(long, global = true, default_value_t = 12345)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Ext^n(X, Y) and print its decomposition
    Ext {
        /// degree (0 computes the hom module)
        #[arg(short = 'n', long = "degree", default_value_t = 1)]
        degree: usize,
        /// module file for X (accepts the X=path form)
        x: String,
        /// module file for Y
        y: String,
    },
    /// Compute the Ext class of a sequence
    Class { seq: String },
    /// Decide equivalence of two sequences with the same ends
    Equiv { a: String, b: String },
    /// Decide splitting of a short exact sequence
    Split { seq: String },
    /// Splice two sequences through a shared end
    Splice {
        a: String,
        b: String,
        /// write the spliced sequence to this file
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Cut a sequence at an interior index 1 < i <= n
    Cut {
        seq: String,
        #[arg(short = 'i', long = "index")]
        index: usize,
        #[arg(long)]
        out_left: Option<PathBuf>,
        #[arg(long)]
        out_right: Option<PathBuf>,
    },
    /// Covariant long homology sequence of Hom(A, -) against a short exact sequence
    #[command(name = "les-cov")]
    LesCov {
        seq: String,
        a: String,
        #[arg(long = "n-max", default_value_t = 3)]
        n_max: usize,
    },
    /// Contravariant long homology sequence of Hom(-, B)
    #[command(name = "les-con")]
    LesCon {
        seq: String,
        b: String,
        #[arg(long = "n-max", default_value_t = 3)]
        n_max: usize,
    },
    /// Projective dimension
    Pd {
        module: String,
        #[arg(long, default_value_t = 16)]
        max: usize,
    },
    /// Injective dimension (Z/n only)
    Id {
        module: String,
        #[arg(long, default_value_t = 16)]
        max: usize,
    },
    /// Flat dimension (coincides with pd over these rings)
    Fd {
        module: String,
        #[arg(long, default_value_t = 16)]
        max: usize,
    },
    /// Validate a sequence file
    Verify { seq: String },
    /// Run a named demonstration scenario
    Gallery { scenario: String },
}

/// Accept both `path` and `NAME=path` argument spellings.
fn clean_path(s: &str) -> PathBuf {
    if let Some((prefix, rest)) = s.split_once('=') {
        if !rest.is_empty()
            && !prefix.is_empty()
            && prefix.len() <= 8
            && prefix.chars().all(|c| c.is_ascii_alphabetic())
        {
            return PathBuf::from(rest);
        }
    }
    PathBuf::from(s)
}

fn classify(e: &CoreError) -> u8 {
    match e {
        CoreError::Malformed(_)
        | CoreError::Io(_)
        | CoreError::ShapeMismatch(_)
        | CoreError::RingMismatch(_) => 2,
        _ => 1,
    }
}

struct Output {
    json: bool,
}

impl Output {
    fn emit(&self, text: Vec<String>, value: Value) {
        if self.json {
            println!("{value:#}");
        } else {
            for line in text {
                println!("{line}");
            }
        }
    }
}

fn dimension_json(kind: &str, d: &Dimension) -> Value {
    let result = match d {
        Dimension::Finite(k) => json!({ "finite": k }),
        Dimension::Infinite {
            first,
            period,
            witness,
        } => json!({
            "infinite": {
                "first": first,
                "period": period,
                "witness": witness.to_string(),
            }
        }),
        Dimension::AtLeast(k) => json!({ "at_least": k }),
    };
    json!({ "kind": kind, "result": result })
}

fn les_output(out: &Output, les: &LongExactSequence) {
    let mut lines = Vec::new();
    for node in &les.nodes {
        lines.push(format!("{} = {}", node.label, node.decomposition));
    }
    for check in &les.certificate.checks {
        lines.push(format!(
            "node {} [{}]: {}",
            check.node,
            check.kind,
            if check.ok { "exact" } else { "FAILED" }
        ));
    }
    out.emit(
        lines,
        serde_json::to_value(&les.certificate).expect("certificate serializes"),
    );
}

fn sequence_summary(s: &NExactSequence) -> String {
    let mut parts = vec![s.left_end().canonical_decomposition().to_string()];
    for m in s.middles() {
        parts.push(m.canonical_decomposition().to_string());
    }
    parts.push(s.right_end().canonical_decomposition().to_string());
    format!("0 -> {} -> 0", parts.join(" -> "))
}

fn run(cli: Cli) -> Result<(), CoreError> {
    let out = Output { json: cli.json };
    match cli.command {
        Command::Ext { degree, x, y } => {
            let xp = io::load_module(&clean_path(&x))?;
            let yp = io::load_module(&clean_path(&y))?;
            let e = ext_module(degree, &xp, &yp)?;
            let d = e.decomposition();
            out.emit(
                vec![d.to_string()],
                json!({
                    "degree": degree,
                    "source": xp.canonical_decomposition().to_string(),
                    "target": yp.canonical_decomposition().to_string(),
                    "decomposition": d.to_string(),
                    "free_rank": d.free_rank,
                    "torsion": d.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "order": e.order().map(|o| o.to_string()),
                }),
            );
        }
        Command::Class { seq } => {
            let s = io::load_sequence(&clean_path(&seq))?;
            let c = class_of(&s)?;
            let coords: Vec<String> = (0..c.element.rows())
                .map(|i| c.element.get(i, 0).to_string())
                .collect();
            out.emit(
                vec![
                    format!("Ext^{}(X, Y) = {}", s.length(), c.module.decomposition()),
                    format!("class coordinates: [{}]", coords.join(", ")),
                    format!("zero class: {}", c.is_zero()),
                ],
                json!({
                    "ext": c.module.decomposition().to_string(),
                    "degree": s.length(),
                    "coordinates": coords,
                    "is_zero": c.is_zero(),
                }),
            );
        }
        Command::Equiv { a, b } => {
            let sa = io::load_sequence(&clean_path(&a))?;
            let sb = io::load_sequence(&clean_path(&b))?;
            let eq = are_equivalent(&sa, &sb)?;
            out.emit(
                vec![if eq { "equivalent" } else { "not equivalent" }.to_string()],
                json!({ "equivalent": eq }),
            );
        }
        Command::Split { seq } => {
            let s = io::load_sequence(&clean_path(&seq))?;
            match splitting(&s)? {
                Some(sp) => out.emit(
                    vec![
                        "splits".to_string(),
                        format!("retraction:\n{}", sp.retraction.matrix()),
                        format!("section:\n{}", sp.section.matrix()),
                    ],
                    json!({
                        "splits": true,
                        "retraction": io::morphism_to_json(&sp.retraction),
                        "section": io::morphism_to_json(&sp.section),
                    }),
                ),
                None => out.emit(
                    vec!["does not split".to_string()],
                    json!({ "splits": false }),
                ),
            }
        }
        Command::Splice { a, b, out: dest } => {
            let sa = io::load_sequence(&clean_path(&a))?;
            let sb = io::load_sequence(&clean_path(&b))?;
            let s = sa.splice(&sb)?;
            if let Some(path) = dest {
                io::save_sequence(&path, &s)?;
            }
            out.emit(
                vec![format!(
                    "spliced into a {}-exact sequence: {}",
                    s.length(),
                    sequence_summary(&s)
                )],
                io::sequence_to_json(&s),
            );
        }
        Command::Cut {
            seq,
            index,
            out_left,
            out_right,
        } => {
            let s = io::load_sequence(&clean_path(&seq))?;
            let (l, r) = s.cut(index)?;
            if let Some(path) = out_left {
                io::save_sequence(&path, &l)?;
            }
            if let Some(path) = out_right {
                io::save_sequence(&path, &r)?;
            }
            out.emit(
                vec![
                    format!("left:  {}", sequence_summary(&l)),
                    format!("right: {}", sequence_summary(&r)),
                ],
                json!({
                    "left": io::sequence_to_json(&l),
                    "right": io::sequence_to_json(&r),
                }),
            );
        }
        Command::LesCov { seq, a, n_max } => {
            let s = io::load_sequence(&clean_path(&seq))?;
            let ap = io::load_module(&clean_path(&a))?;
            let les = les_covariant(&s, &ap, n_max)?;
            les_output(&out, &les);
        }
        Command::LesCon { seq, b, n_max } => {
            let s = io::load_sequence(&clean_path(&seq))?;
            let bp = io::load_module(&clean_path(&b))?;
            let les = les_contravariant(&s, &bp, n_max)?;
            les_output(&out, &les);
        }
        Command::Pd { module, max } => {
            let m = io::load_module(&clean_path(&module))?;
            let d = projective_dimension(&m, max);
            out.emit(vec![d.to_string()], dimension_json("pd", &d));
        }
        Command::Id { module, max } => {
            let m = io::load_module(&clean_path(&module))?;
            let d = injective_dimension(&m, max)?;
            out.emit(vec![d.to_string()], dimension_json("id", &d));
        }
        Command::Fd { module, max } => {
            let m = io::load_module(&clean_path(&module))?;
            let d = flat_dimension(&m, max);
            out.emit(
                vec![
                    d.to_string(),
                    "(flat dimension coincides with projective dimension over these rings)"
                        .to_string(),
                ],
                dimension_json("fd", &d),
            );
        }
        Command::Verify { seq } => {
            let s = io::load_sequence(&clean_path(&seq))?;
            out.emit(
                vec![format!(
                    "valid {}-exact sequence: {}",
                    s.length(),
                    sequence_summary(&s)
                )],
                json!({ "valid": true, "length": s.length() }),
            );
        }
        Command::Gallery { scenario } => {
            let report = gallery::run_scenario(&scenario, cli.seed).ok_or_else(|| {
                CoreError::Malformed(format!(
                    "unknown scenario {scenario:?}; available: {}",
                    gallery::SCENARIOS.join(", ")
                ))
            })?;
            if !report.ok {
                return Err(CoreError::InternalConsistency(format!(
                    "scenario {scenario} failed its own checks"
                )));
            }
            out.emit(
                report.lines.clone(),
                serde_json::to_value(&report).expect("report serializes"),
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify(&e))
        }
    }
}
