use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use homlie::constructions::{example_one_dim, example_sl2, DoubleExtensionData, OneDimExtensionData};
use homlie::io::{
    parse_algebra, parse_matrix, parse_matrix_list, parse_vector, serialize_algebra, serialize_matrix,
    serialize_matrix_list, to_json, vector_strings, InputDigest, ReportDocument,
};
use homlie::lieify::{
    center_triviality_consequences, cocycle_theta, cocycle_witness, is_coboundary, lieify, nilpotency_transfer_check,
    recover_h,
};
use homlie::linalg::{format_rat, parse_rat, Subspace};
use homlie::structure::{decompose, fitting, is_simple_quadratic, DecompositionKind};
use homlie::{CheckReport, Error, HomLieAlgebra, Witness};

#[derive(Parser)]
#[command(name = "homlie", version, about = "Exact computations with quadratic Hom-Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hom-Lie, equivariance and quadratic axioms.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// Build a double or one-dimensional extension.
    Extend {
        #[command(subcommand)]
        kind: ExtendKind,
    },
    /// Split a quadratic algebra with nilpotent equivariant twist and rebuild it.
    Decompose {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// Write the Lie algebra with bracket T∘[.,.].
    Lieify {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// The Ker(T)-valued 2-cocycle, coboundary test and recovery map.
    Cocycle {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// Fitting splitting g = Im(T^l) ⊕ Ker(T^l).
    Fitting {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// Simplicity test for a Lie algebra with invariant form, by dimension of o(B).
    SimpleCheck {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// Write a built-in example.
    Example {
        #[command(subcommand)]
        which: ExampleKind,
    },
}

#[derive(Subcommand)]
enum ExtendKind {
    /// s ⊕ h ⊕ s* from a Lie algebra s with invariant form acting on h.
    #[command(alias = "prop11")]
    Double {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        rho: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// Fd ⊕ h ⊕ Fc from a skew map D and T(d) = v' + lambda' c.
    #[command(name = "one-dim", alias = "prop12")]
    OneDim {
        #[arg(long)]
        h: PathBuf,
        #[arg(long = "D", alias = "d")]
        d: PathBuf,
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        vprime: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
}

#[derive(Subcommand)]
enum ExampleKind {
    /// The 9-dimensional sl2 example.
    Sl2 {
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        eta: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The 4-dimensional one-dimensional extension example.
    OneDim {
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Input or usage problems, exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

struct Inputs(Vec<InputDigest>);

impl Inputs {
    fn new() -> Self {
        Inputs(Vec::new())
    }

    fn read(&mut self, path: &Path) -> Result<Vec<u8>, Usage> {
        let bytes = fs::read(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
        self.0.push(InputDigest { path: path.display().to_string(), sha256: hex::encode(Sha256::digest(&bytes)) });
        Ok(bytes)
    }

    fn algebra(&mut self, path: &Path) -> Result<HomLieAlgebra, Usage> {
        let bytes = self.read(path)?;
        parse_algebra(&bytes).map_err(|e| Usage(format!("{}: {e}", path.display())))
    }
}

fn write(path: &Path, text: &str) -> Result<(), Usage> {
    fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn emit(doc: &ReportDocument, format: ReportFormat) -> ExitCode {
    match format {
        ReportFormat::Json => print!("{}", to_json(doc)),
        ReportFormat::Text => print!("{}", text_report(doc)),
    }
    if doc.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn text_report(doc: &ReportDocument) -> String {
    let mut out = format!("command: {}\n", doc.command);
    for input in &doc.inputs {
        out.push_str(&format!("input: {} sha256:{}\n", input.path, input.sha256));
    }
    for c in &doc.checks {
        let line = match (&c.skipped, &c.witness) {
            (Some(reason), _) => format!("SKIP {} ({reason})", c.name),
            (None, Some(w)) => format!("FAIL {} at ({}) defect [{}]", c.name, join(&w.indices), w.defect.join(", ")),
            (None, None) if c.passed => format!("PASS {}", c.name),
            (None, None) => format!("FAIL {}", c.name),
        };
        out.push_str(&line);
        out.push('\n');
    }
    if let Some(outputs) = &doc.outputs {
        out.push_str("outputs:\n");
        out.push_str(&to_json(outputs));
    }
    out
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Domain failures become a one-entry failing report; parse errors are usage errors.
fn failure_report(command: &str, inputs: Inputs, err: Error) -> Result<ReportDocument, Usage> {
    let mut report = CheckReport::new();
    match err {
        Error::Parse(_) => return Err(Usage(err.to_string())),
        Error::Hypotheses(r) => report = r,
        Error::Verification { check, witness } => {
            report.record(check, Some(witness.unwrap_or_else(|| Witness::new(vec![], vec![]))))
        }
        other => {
            report.record(command, Some(Witness::new(vec![], vec![])));
            let mut doc = ReportDocument::new(command, inputs.0, &report);
            doc.outputs = Some(json!({ "error": other.to_string() }));
            return Ok(doc);
        }
    }
    Ok(ReportDocument::new(command, inputs.0, &report))
}

fn basis_json(vs: &[Vec<homlie::Rat>]) -> Value {
    json!(vs.iter().map(|v| vector_strings(v)).collect::<Vec<_>>())
}

fn subspace_json(s: &Subspace) -> Value {
    basis_json(&s.basis_vectors())
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    match cli.command {
        Command::Check { file, report } => {
            let mut inputs = Inputs::new();
            let a = inputs.algebra(&file)?;
            let doc = ReportDocument::new("check", inputs.0, &a.check_axioms());
            Ok(emit(&doc, report))
        }
        Command::Extend { kind } => extend(kind),
        Command::Decompose { file, output, report } => {
            let mut inputs = Inputs::new();
            let a = inputs.algebra(&file)?;
            let d = match decompose(&a) {
                Ok(d) => d,
                Err(e) => return Ok(emit(&failure_report("decompose", inputs, e)?, report)),
            };
            fs::create_dir_all(&output).map_err(|e| Usage(format!("{}: {e}", output.display())))?;
            let x = &d.extracted;
            let s_alg = HomLieAlgebra::lie("s", x.s_bracket.clone(), Some(x.killing.clone()))?;
            write(&output.join("s.json"), &serialize_algebra(&s_alg))?;
            write(&output.join("h.json"), &serialize_algebra(&x.h_algebra))?;
            write(&output.join("f.json"), &serialize_matrix(&x.f))?;
            write(&output.join("rho.json"), &serialize_matrix_list(&x.rho))?;
            write(&output.join("psi.json"), &serialize_matrix(&x.psi))?;
            write(&output.join("change_of_basis.json"), &serialize_matrix(&d.change_of_basis))?;
            write(&output.join("iso.json"), &serialize_matrix(&d.iso))?;
            write(&output.join("reconstruction.json"), &serialize_algebra(&d.reconstruction))?;
            let mut checks = d.checks.clone();
            checks.extend(d.iso_report.clone());
            let mut doc = ReportDocument::new("decompose", inputs.0, &checks);
            doc.outputs = Some(json!({
                "kind": match d.kind {
                    DecompositionKind::Simple => "simple",
                    DecompositionKind::OneDimensional => "one_dimensional",
                },
                "eta": d.eta.as_ref().map(format_rat),
                "eta_vanishes": d.eta_vanishes,
                "s_basis": basis_json(&d.s_basis),
                "h_basis": basis_json(&d.h_basis),
                "w_basis": basis_json(&d.w_basis),
            }));
            write(&output.join("report.json"), &to_json(&doc))?;
            Ok(emit(&doc, report))
        }
        Command::Lieify { file, output, report } => {
            let mut inputs = Inputs::new();
            let a = inputs.algebra(&file)?;
            let lie = match lieify(&a) {
                Ok(l) => l,
                Err(e) => return Ok(emit(&failure_report("lieify", inputs, e)?, report)),
            };
            write(&output, &serialize_algebra(&lie))?;
            let doc = ReportDocument::new("lieify", inputs.0, &nilpotency_transfer_check(&a));
            Ok(emit(&doc, report))
        }
        Command::Cocycle { file, report } => {
            let mut inputs = Inputs::new();
            let a = inputs.algebra(&file)?;
            let c = match cocycle_theta(&a) {
                Ok(c) => c,
                Err(e) => return Ok(emit(&failure_report("cocycle", inputs, e)?, report)),
            };
            let mut checks = CheckReport::new();
            checks.record("cocycle", cocycle_witness(&a, &c));
            let mu = is_coboundary(&a, &c);
            let recovery = match recover_h(&a, &c) {
                Ok(r) => {
                    checks.extend(r.conditions.clone());
                    Some(r)
                }
                Err(Error::Verification { check, witness }) => {
                    checks.record(check, Some(witness.unwrap_or_else(|| Witness::new(vec![], vec![]))));
                    None
                }
                Err(e) => return Err(e.into()),
            };
            checks.extend(center_triviality_consequences(&a));
            let mut doc = ReportDocument::new("cocycle", inputs.0, &checks);
            doc.outputs = Some(json!({
                "d": c.d,
                "a_basis": basis_json(&c.a_basis),
                "theta": c.theta.iter().map(homlie::io::grid_of).collect::<Vec<_>>(),
                "coboundary": mu.is_some(),
                "mu": mu.as_ref().map(homlie::io::grid_of),
                "recovery": recovery.as_ref().map(|r| homlie::io::grid_of(&r.matrix)),
                "recovery_selection": recovery.as_ref().map(|r| format!("{:?}", r.selection).to_lowercase()),
            }));
            Ok(emit(&doc, report))
        }
        Command::Fitting { file, report } => {
            let mut inputs = Inputs::new();
            let a = inputs.algebra(&file)?;
            let r = match fitting(&a) {
                Ok(r) => r,
                Err(e) => return Ok(emit(&failure_report("fitting", inputs, e)?, report)),
            };
            let mut checks = CheckReport::new();
            checks.record("fitting", None);
            let mut doc = ReportDocument::new("fitting", inputs.0, &checks);
            doc.outputs = Some(json!({
                "ell": r.ell,
                "image_part": subspace_json(&r.image_part),
                "kernel_part": subspace_json(&r.kernel_part),
            }));
            Ok(emit(&doc, report))
        }
        Command::SimpleCheck { file, report } => {
            let mut inputs = Inputs::new();
            let a = inputs.algebra(&file)?;
            let form = match a.form() {
                Some(b) => b.clone(),
                None => return Err(Usage("simple-check needs a bilinear form".into())),
            };
            let simple = match is_simple_quadratic(a.bracket(), &form) {
                Ok(s) => s,
                Err(e) => return Ok(emit(&failure_report("simple", inputs, e)?, report)),
            };
            let mut checks = CheckReport::new();
            checks.record("simple", (!simple).then(|| Witness::new(vec![], vec![])));
            Ok(emit(&ReportDocument::new("simple-check", inputs.0, &checks), report))
        }
        Command::Example { which } => {
            let (a, output) = match which {
                ExampleKind::Sl2 { eta, output } => (example_sl2(parse_rat(&eta)?), output),
                ExampleKind::OneDim { output } => (example_one_dim(), output),
            };
            write(&output, &serialize_algebra(&a))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn extend(kind: ExtendKind) -> Result<ExitCode, Usage> {
    let mut inputs = Inputs::new();
    let (validation, built, output, report) = match kind {
        ExtendKind::Double { h, s, f, rho, eta, output, report } => {
            let h = inputs.algebra(&h)?;
            let s = inputs.algebra(&s)?;
            let s_form = s.form().cloned().ok_or_else(|| Usage("--s needs a bilinear form".into()))?;
            let f = parse_matrix(&inputs.read(&f)?)?;
            let rho = parse_matrix_list(&inputs.read(&rho)?, h.dim())?;
            let data = DoubleExtensionData::new(h, s.bracket().clone(), s_form, f, rho, parse_rat(&eta)?)?;
            let v = data.validate();
            let built = v.all_passed().then(|| data.build()).transpose()?;
            (v, built, output, report)
        }
        ExtendKind::OneDim { h, d, vprime, lambda, output, report } => {
            let h = inputs.algebra(&h)?;
            let d = parse_matrix(&inputs.read(&d)?)?;
            let items: Vec<&str> = vprime.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            // omitted means v' = 0
            let vprime = if items.is_empty() { homlie::linalg::vector::zeros(h.dim()) } else { parse_vector(&items)? };
            let data = OneDimExtensionData::new(h, d, vprime, parse_rat(&lambda)?)?;
            let v = data.validate();
            let built = v.all_passed().then(|| data.build()).transpose()?;
            (v, built, output, report)
        }
    };
    if let Some(a) = built {
        write(&output, &serialize_algebra(&a))?;
    }
    Ok(emit(&ReportDocument::new("extend", inputs.0, &validation), report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
