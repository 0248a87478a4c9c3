use std::fs;
use std::process::ExitCode;

use spinflow::catalog::{catalog, catalog_spec};
use spinflow::clifford::build_rep;
use spinflow::error::SpinError;
use spinflow::report::render_report;
use spinflow::spec::load_spec;
use spinflow::verify::run_verification;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}

fn usage() -> String {
    [
        "spinflow — verification engine for spin geometry on homogeneous frames",
        "",
        "usage:",
        "  spinflow catalog",
        "  spinflow verify --manifold <name> [--tau <float>] [--tol <float>] [--format text|json]",
        "  spinflow verify --file <path>     [--tau <float>] [--tol <float>] [--format text|json]",
        "  spinflow rep --dim <n>",
        "",
        "exit codes:",
        "  0  every check passed",
        "  1  at least one check failed",
        "  2  input or spec error",
    ]
    .join("\n")
}

fn run(args: &[String]) -> Result<u8, String> {
    match args.first().map(String::as_str) {
        Some("catalog") => run_catalog(),
        Some("verify") => run_verify(&args[1..]),
        Some("rep") => run_rep(&args[1..]),
        Some("help") | Some("--help") | Some("-h") => {
            println!("{}", usage());
            Ok(0)
        }
        Some(other) => Err(format!("unknown subcommand '{other}'\n\n{}", usage())),
        None => Err(usage()),
    }
}

fn run_catalog() -> Result<u8, String> {
    let entries = catalog();
    let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(4);
    for entry in entries {
        println!("{:<width$}  {}", entry.name, entry.description);
    }
    Ok(0)
}

fn parse_flag_value<'a>(
    args: &'a [String],
    index: &mut usize,
    flag: &str,
) -> Result<&'a str, String> {
    *index += 1;
    args.get(*index)
        .map(String::as_str)
        .ok_or_else(|| format!("{flag} requires a value"))
}

fn run_verify(args: &[String]) -> Result<u8, String> {
    let mut manifold: Option<String> = None;
    let mut file: Option<String> = None;
    let mut tau = 1.0f64;
    let mut tol = 1e-9f64;
    let mut format = "text".to_string();

    let mut index = 0;
    while index < args.len() {
        match args[index].as_str() {
            "--manifold" => {
                manifold = Some(parse_flag_value(args, &mut index, "--manifold")?.to_string())
            }
            "--file" => file = Some(parse_flag_value(args, &mut index, "--file")?.to_string()),
            "--tau" => {
                let v = parse_flag_value(args, &mut index, "--tau")?;
                tau = v
                    .parse()
                    .map_err(|_| format!("--tau: invalid float '{v}'"))?;
            }
            "--tol" => {
                let v = parse_flag_value(args, &mut index, "--tol")?;
                tol = v
                    .parse()
                    .map_err(|_| format!("--tol: invalid float '{v}'"))?;
            }
            "--format" => format = parse_flag_value(args, &mut index, "--format")?.to_string(),
            other => return Err(format!("unknown flag for verify: {other}\n\n{}", usage())),
        }
        index += 1;
    }

    let spec = match (manifold, file) {
        (Some(name), None) => catalog_spec(&name, tau).map_err(|e| e.to_string())?,
        (None, Some(path)) => {
            let text =
                fs::read_to_string(&path).map_err(|e| format!("cannot read '{path}': {e}"))?;
            load_spec(&text).map_err(|e| e.to_string())?
        }
        _ => {
            return Err(format!(
                "verify needs exactly one of --manifold or --file\n\n{}",
                usage()
            ))
        }
    };

    let report = run_verification(&spec, tol).map_err(|e| e.to_string())?;
    let rendered = render_report(&report, &format).map_err(|e| e.to_string())?;
    println!("{rendered}");
    Ok(report.exit_code() as u8)
}

fn run_rep(args: &[String]) -> Result<u8, String> {
    let mut dim: Option<usize> = None;
    let mut index = 0;
    while index < args.len() {
        match args[index].as_str() {
            "--dim" => {
                let v = parse_flag_value(args, &mut index, "--dim")?;
                dim = Some(
                    v.parse()
                        .map_err(|_| format!("--dim: invalid integer '{v}'"))?,
                );
            }
            other => return Err(format!("unknown flag for rep: {other}\n\n{}", usage())),
        }
        index += 1;
    }
    let n = dim.ok_or_else(|| format!("rep requires --dim <n>\n\n{}", usage()))?;
    let rep = build_rep(n).map_err(|e: SpinError| e.to_string())?;
    println!(
        "Clifford generators for dimension {n} on C^{} ([re, im] grids):",
        rep.n_spin
    );
    for (i, g) in rep.gamma.iter().enumerate() {
        println!("gamma_{}:", i + 1);
        for row in 0..rep.n_spin {
            let cells: Vec<String> = (0..rep.n_spin)
                .map(|col| {
                    let z = g.get(row, col);
                    format!("[{:6.3}, {:6.3}]", z.re, z.im)
                })
                .collect();
            println!("  {}", cells.join(" "));
        }
    }
    println!(
        "anticommutation defect: {:.3e}",
        rep.anticommutation_defect()
    );
    Ok(0)
}
