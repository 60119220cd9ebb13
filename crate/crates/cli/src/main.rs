//! Command-line front end: enumerate the catalog, validate and instantiate
//! parameter sets, run the exact verifiers, compute the universal module
//! constants, and build spectra of quadratic combinations.
//!
//! Exit codes: 0 all checks pass, 1 a verification or spectral check failed,
//! 2 usage or parse errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use superqes_core::catalog::{
    self, grid, instantiate, instantiate_module, instantiate_unchecked, list_families,
    validate_params, FamilyId, FamilyKind, FunctionModule, ParamSet, SuperalgebraInstance,
};
use superqes_core::qes::{
    build_hamiltonian, export_matrix_form, matrix_representation, spectrum, QuadraticCombination,
};
use superqes_core::verify::VerificationReport;

#[derive(Parser)]
#[command(
    name = "superqes",
    version,
    about = "Exact engine for Lie superalgebras of 2x2 matrix differential operators and their QES spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog families with their parameter schemas and rules.
    List {
        /// Show the classification rows of one tier (0-3).
        #[arg(long)]
        tier: Option<u8>,
        /// Show the module shapes only.
        #[arg(long)]
        modules: bool,
        /// Show one family in full.
        #[arg(long)]
        family: Option<String>,
    },
    /// Check an instance file against the family's table rules.
    Validate { instance: PathBuf },
    /// Build the generators (and optionally a module) and print them.
    Instantiate {
        instance: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Verify graded closure, and module invariance when a module is given.
    /// With --grid, run the bounded-parameter sweep over the whole catalog.
    Verify {
        instance: Option<PathBuf>,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        grid: bool,
    },
    /// Print the universal mixed-module constants a_1..a_N.
    Aconst {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Build a quadratic combination of the instance generators.
    Hamiltonian {
        instance: PathBuf,
        #[arg(long)]
        quad: PathBuf,
    },
    /// Exact characteristic polynomial and roots of a quadratic combination
    /// represented on an invariant module.
    Spectrum {
        instance: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        quad: PathBuf,
    },
}

/// On-disk description of an instance: a family label plus parameters.
/// Unknown fields are rejected.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    family: FamilyId,
    #[serde(default)]
    params: ParamSet,
}

enum CliError {
    /// Usage or parse problems (exit 2).
    Input(String),
    /// A verification or spectral check failed (exit 1).
    CheckFailed,
}

fn read_instance(path: &Path) -> Result<InstanceFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_quad(path: &Path) -> Result<QuadraticCombination, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn build_instance(file: &InstanceFile) -> Result<SuperalgebraInstance, CliError> {
    instantiate_unchecked(file.family, &file.params).map_err(|e| CliError::Input(e.to_string()))
}

fn build_module(file: &InstanceFile) -> Result<FunctionModule, CliError> {
    catalog::instantiate_module_unchecked(file.family, &file.params)
        .map_err(|e| CliError::Input(e.to_string()))
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn report_to_text(report: &VerificationReport, out: &mut String) {
    for check in &report.checks {
        match check.status {
            superqes_core::verify::CheckStatus::Pass => {
                let _ = writeln!(out, "  PASS {}", check.label);
            }
            superqes_core::verify::CheckStatus::Fail => {
                let _ = writeln!(
                    out,
                    "  FAIL {} (residual: {})",
                    check.label,
                    check.residual.as_deref().unwrap_or("-")
                );
            }
        }
    }
    let _ = writeln!(
        out,
        "{}: {} checks, {}",
        report.subject,
        report.checks.len(),
        if report.passed {
            "all pass"
        } else {
            "FAILURES"
        }
    );
}

fn cmd_list(
    tier: Option<u8>,
    modules: bool,
    family: Option<String>,
    format: Format,
) -> Result<bool, CliError> {
    let all = list_families();
    let selected: Vec<_> = if let Some(name) = &family {
        let id: FamilyId = name.parse().map_err(|e| CliError::Input(format!("{e}")))?;
        all.into_iter().filter(|f| f.id == id).collect()
    } else if modules {
        all.into_iter()
            .filter(|f| matches!(f.kind, FamilyKind::Module))
            .collect()
    } else if let Some(t) = tier {
        all.into_iter()
            .filter(|f| matches!(f.kind, FamilyKind::Odd) && f.tier == Some(t) && !f.subcase)
            .collect()
    } else {
        all
    };
    if selected.is_empty() {
        return Err(CliError::Input("no matching families".into()));
    }
    match format {
        Format::Json => {
            print_json(&serde_json::to_value(&selected).expect("serializable"));
        }
        Format::Text => {
            if family.is_some() {
                let f = &selected[0];
                println!("family:     {}", f.label);
                println!("kind:       {:?}", f.kind);
                println!(
                    "row:        {}{}",
                    f.row,
                    if f.subcase { " (sub-case)" } else { "" }
                );
                println!("generators: {}", f.generators);
                println!("schema:     {}", f.schema);
                println!("rules:      {}", f.rules);
            } else {
                let width = selected.iter().map(|f| f.label.len()).max().unwrap_or(4);
                for f in &selected {
                    println!("{:width$}  {:30}  {}", f.label, f.generators, f.rules);
                }
            }
        }
    }
    Ok(true)
}

fn cmd_validate(path: &Path, format: Format) -> Result<bool, CliError> {
    let file = read_instance(path)?;
    let violations = validate_params(file.family, &file.params);
    let ok = violations.is_empty();
    match format {
        Format::Json => print_json(&json!({
            "family": file.family.label(),
            "valid": ok,
            "violations": violations,
        })),
        Format::Text => {
            if ok {
                println!("{}: parameters satisfy the table rules", file.family);
            } else {
                println!("{}: {} rule violation(s)", file.family, violations.len());
                for v in &violations {
                    println!("  - {v}");
                }
            }
        }
    }
    if ok {
        Ok(true)
    } else {
        Err(CliError::CheckFailed)
    }
}

fn instance_json(
    inst: &SuperalgebraInstance,
    module: Option<&FunctionModule>,
) -> serde_json::Value {
    let gens = |list: &[superqes_core::SuperOperator]| -> Vec<serde_json::Value> {
        list.iter()
            .enumerate()
            .map(|(i, g)| {
                json!({
                    "index": i,
                    "text": g.to_string(),
                    "terms": g.to_general(),
                })
            })
            .collect()
    };
    let mut value = json!({
        "family": inst.family.label(),
        "params": inst.params,
        "even_gens": gens(&inst.even_gens),
        "odd_gens": gens(&inst.odd_gens),
    });
    if let Some(m) = module {
        value["module"] = json!({
            "label": m.label,
            "dimension": m.dimension(),
            "basis": m.basis.iter().map(|f| json!({
                "text": f.to_string(),
                "even": f.even,
                "odd": f.odd,
            })).collect::<Vec<_>>(),
        });
    }
    value
}

fn cmd_instantiate(
    path: &Path,
    module_path: Option<&Path>,
    format: Format,
) -> Result<bool, CliError> {
    let file = read_instance(path)?;
    let violations = validate_params(file.family, &file.params);
    if !violations.is_empty() {
        return Err(CliError::Input(format!(
            "{}: rule violations: {}",
            file.family,
            violations.join("; ")
        )));
    }
    let inst =
        instantiate(file.family, &file.params).map_err(|e| CliError::Input(e.to_string()))?;
    let module = match module_path {
        Some(p) => {
            let mfile = read_instance(p)?;
            Some(
                instantiate_module(mfile.family, &mfile.params)
                    .map_err(|e| CliError::Input(e.to_string()))?,
            )
        }
        None => None,
    };
    match format {
        Format::Json => print_json(&instance_json(&inst, module.as_ref())),
        Format::Text => {
            println!(
                "family {} ({} even + {} odd generators)",
                inst.family,
                inst.even_gens.len(),
                inst.odd_gens.len()
            );
            for (i, g) in inst.even_gens.iter().enumerate() {
                println!("  even[{i}]: {g}");
            }
            for (i, g) in inst.odd_gens.iter().enumerate() {
                println!("  odd[{i}]:  {g}");
            }
            if let Some(m) = &module {
                println!("module {} (dimension {})", m.label, m.dimension());
                for (i, f) in m.basis.iter().enumerate() {
                    println!("  basis[{i}]: {f}");
                }
            }
        }
    }
    Ok(true)
}

fn cmd_verify(
    instance: Option<&Path>,
    module: Option<&Path>,
    run_grid: bool,
    format: Format,
) -> Result<bool, CliError> {
    if run_grid {
        return cmd_verify_grid(format);
    }
    let path = instance
        .ok_or_else(|| CliError::Input("an instance file is required (or --grid)".into()))?;
    let file = read_instance(path)?;
    let violations = validate_params(file.family, &file.params);
    let inst = build_instance(&file)?;
    let closure = inst.check_closure();
    let module_report = match module {
        Some(p) => {
            let mfile = read_instance(p)?;
            let m = build_module(&mfile)?;
            Some((m.label.clone(), inst.check_module(&m)))
        }
        None => None,
    };
    let passed = closure.passed && module_report.as_ref().is_none_or(|(_, r)| r.passed);
    match format {
        Format::Json => {
            let mut value = json!({
                "family": inst.family.label(),
                "rule_violations": violations,
                "closure": closure,
                "passed": passed,
            });
            if let Some((label, report)) = &module_report {
                value["module"] = json!({ "label": label, "report": report });
            }
            print_json(&value);
        }
        Format::Text => {
            let mut out = String::new();
            if !violations.is_empty() {
                let _ = writeln!(out, "rule violations:");
                for v in &violations {
                    let _ = writeln!(out, "  - {v}");
                }
            }
            report_to_text(&closure, &mut out);
            if let Some((_, report)) = &module_report {
                report_to_text(report, &mut out);
            }
            print!("{out}");
        }
    }
    if passed {
        Ok(true)
    } else {
        Err(CliError::CheckFailed)
    }
}

fn cmd_verify_grid(format: Format) -> Result<bool, CliError> {
    let mut results: Vec<(String, &'static str, bool)> = Vec::new();
    for case in grid::closure_cases() {
        let ok = validate_params(case.family, &case.params).is_empty()
            && instantiate(case.family, &case.params)
                .map(|inst| inst.check_closure().passed)
                .unwrap_or(false);
        results.push((
            format!("closure {} [{}]", case.family, case.label),
            "closure",
            ok,
        ));
    }
    for case in grid::module_cases() {
        let inst_family = grid::instance_family_for(&case);
        let ok = instantiate(inst_family, &case.params)
            .and_then(|inst| {
                instantiate_module(case.family, &case.params)
                    .map(|m| inst.check_module(&m).passed && inst.check_closure().passed)
            })
            .unwrap_or(false);
        results.push((format!("module {}", case.label), "module", ok));
    }
    let passed = results.iter().all(|(_, _, ok)| *ok);
    match format {
        Format::Json => print_json(&json!({
            "cases": results
                .iter()
                .map(|(label, section, ok)| json!({
                    "label": label,
                    "section": section,
                    "passed": ok,
                }))
                .collect::<Vec<_>>(),
            "total": results.len(),
            "passed": passed,
        })),
        Format::Text => {
            for (label, _, ok) in &results {
                println!("{} {label}", if *ok { "PASS" } else { "FAIL" });
            }
            println!(
                "grid sweep: {}/{} cases pass",
                results.iter().filter(|(_, _, ok)| *ok).count(),
                results.len()
            );
        }
    }
    if passed {
        Ok(true)
    } else {
        Err(CliError::CheckFailed)
    }
}

fn cmd_aconst(count: usize, format: Format) -> Result<bool, CliError> {
    if count == 0 {
        return Err(CliError::Input("count must be at least 1".into()));
    }
    let values = catalog::compute_a_constants(count);
    match format {
        Format::Json => print_json(&json!({
            "count": count,
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })),
        Format::Text => {
            for (l, v) in values.iter().enumerate() {
                println!("a_{} = {v}", l + 1);
            }
        }
    }
    Ok(true)
}

fn cmd_hamiltonian(instance: &Path, quad: &Path, format: Format) -> Result<bool, CliError> {
    let file = read_instance(instance)?;
    let inst = build_instance(&file)?;
    let combo = read_quad(quad)?;
    let h =
        build_hamiltonian(&inst.all_gens(), &combo).map_err(|e| CliError::Input(e.to_string()))?;
    match format {
        Format::Json => print_json(&json!({
            "family": inst.family.label(),
            "operator": h.to_string(),
            "terms": h,
            "order": h.order(),
            "matrix_form": export_matrix_form(&h).to_string(),
        })),
        Format::Text => {
            println!("H = {h}");
            println!("order: {}", h.order().unwrap_or(0));
            println!("matrix form:\n{}", export_matrix_form(&h));
        }
    }
    Ok(true)
}

fn cmd_spectrum(
    instance: &Path,
    module: &Path,
    quad: &Path,
    format: Format,
) -> Result<bool, CliError> {
    let file = read_instance(instance)?;
    let inst = build_instance(&file)?;
    let mfile = read_instance(module)?;
    let m = build_module(&mfile)?;
    let combo = read_quad(quad)?;
    let h =
        build_hamiltonian(&inst.all_gens(), &combo).map_err(|e| CliError::Input(e.to_string()))?;
    let matrix = match matrix_representation(&h, &m.basis) {
        Ok(mx) => mx,
        Err(e) => {
            match format {
                Format::Json => print_json(&json!({
                    "family": inst.family.label(),
                    "module": m.label,
                    "invariant": false,
                    "error": e.to_string(),
                })),
                Format::Text => println!("not invariant: {e}"),
            }
            return Err(CliError::CheckFailed);
        }
    };
    let spec = spectrum(&matrix);
    match format {
        Format::Json => print_json(&json!({
            "family": inst.family.label(),
            "module": m.label,
            "module_dimension": spec.dimension,
            "hamiltonian": h.to_string(),
            "charpoly": spec.charpoly.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "trace": spec.trace.to_string(),
            "roots": spec.roots,
        })),
        Format::Text => {
            println!("H = {h}");
            println!("module {} (dimension {})", m.label, spec.dimension);
            let terms: Vec<String> = spec
                .charpoly
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| match k {
                    0 => format!("({c})"),
                    1 => format!("({c})*x"),
                    _ => format!("({c})*x^{k}"),
                })
                .collect();
            println!("charpoly: {}", terms.join(" + "));
            for root in &spec.roots {
                match &root.value {
                    superqes_core::qes::RootValue::Exact(v) => println!("  root {v} (exact)"),
                    superqes_core::qes::RootValue::Numeric { re, im } => {
                        println!("  root {re}{im:+}i (numeric, residual {})", root.residual)
                    }
                }
            }
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::List {
            tier,
            modules,
            family,
        } => cmd_list(tier, modules, family, cli.format),
        Command::Validate { instance } => cmd_validate(&instance, cli.format),
        Command::Instantiate { instance, module } => {
            cmd_instantiate(&instance, module.as_deref(), cli.format)
        }
        Command::Verify {
            instance,
            module,
            grid,
        } => cmd_verify(instance.as_deref(), module.as_deref(), grid, cli.format),
        Command::Aconst { count } => cmd_aconst(count, cli.format),
        Command::Hamiltonian { instance, quad } => cmd_hamiltonian(&instance, &quad, cli.format),
        Command::Spectrum {
            instance,
            module,
            quad,
        } => cmd_spectrum(&instance, &module, &quad, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(_) => ExitCode::from(0),
        Err(CliError::CheckFailed) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_file_round_trip() {
        let file = InstanceFile {
            family: FamilyId::O3_5,
            params: ParamSet {
                alpha: "1/2".parse().ok(),
                beta: "-1/2".parse().ok(),
                gamma: "1".parse().ok(),
                eps: Some(1),
                p: Some(1),
                q: Some(0),
                module: Some(catalog::ModuleChoice::Label {
                    name: "n3.3".into(),
                }),
                ..ParamSet::default()
            },
        };
        let text = serde_json::to_string_pretty(&file).unwrap();
        let back: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"family": "3_5", "params": {}, "extra": 1}"#;
        assert!(serde_json::from_str::<InstanceFile>(text).is_err());
        let text = r#"{"family": "3_5", "params": {"bogus": 1}}"#;
        assert!(serde_json::from_str::<InstanceFile>(text).is_err());
    }
}
