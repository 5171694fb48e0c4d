//! Command-line front end: run verifications, print polynomials and
//! lattices, and emit machine-readable reports.
//!
//! All output is accumulated in buffers and written once, so a fixed command
//! line produces byte-identical text output across runs. Exit status is 0
//! when everything passes, 1 on a verification failure, and 2 on usage
//! errors (which carry a diagnostic on the error stream).

use std::io::Write;
use std::ops::RangeInclusive;

use crate::identities::{
    self, GridReport, IdentityDescriptor, Params, Side, VerificationReport,
};
use crate::lattice;
use crate::qcalc::triangular;

const USAGE: &str = "\
qcubes - exact verification of q-analogues of sum-of-cubes identities

USAGE:
    qcubes list
    qcubes verify (--id <id> | --all) [--range <p>=<lo>..<hi>]...
                  [--format text|json] [--verbose]
    qcubes show --id <id> --<param>=<value>... [--side lhs|rhs]
    qcubes lattice --n <n> [--hooks] [--regions]
    qcubes limits --id <id> --<param>=<value>...

Ranges are inclusive on both ends; multiple --range flags form a Cartesian
product, and omitted parameters fall back to the identity's default grid.
Exit status: 0 all checks passed, 1 verification failure, 2 usage error.
";

/// Entry point shared by the binary and the tests: parse `argv`, run the
/// command, write buffered output, return the exit status.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut stdout_buf = String::new();
    let mut stderr_buf = String::new();
    let code = dispatch(args, &mut stdout_buf, &mut stderr_buf);
    let _ = out.write_all(stdout_buf.as_bytes());
    let _ = err.write_all(stderr_buf.as_bytes());
    code
}

fn dispatch(args: &[String], out: &mut String, err: &mut String) -> i32 {
    let Some(command) = args.first() else {
        err.push_str(USAGE);
        return 2;
    };
    match command.as_str() {
        "list" => cmd_list(&args[1..], out, err),
        "verify" => cmd_verify(&args[1..], out, err),
        "show" => cmd_show(&args[1..], out, err),
        "lattice" => cmd_lattice(&args[1..], out, err),
        "limits" => cmd_limits(&args[1..], out, err),
        "help" | "--help" | "-h" => {
            out.push_str(USAGE);
            0
        }
        other => {
            err.push_str(&format!("unknown command `{other}`\n\n{USAGE}"));
            2
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
}

/// One parsed flag: either `--name value`, `--name=value`, or a bare switch.
struct Flag {
    name: String,
    value: Option<String>,
}

/// Split argv into `--flag[=value]` tokens, consuming a following non-flag
/// token as the value where one is present.
fn scan_flags(args: &[String], switches: &[&str]) -> Result<Vec<Flag>, String> {
    let mut flags = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let Some(body) = arg.strip_prefix("--") else {
            return Err(format!("unexpected argument `{arg}`"));
        };
        if let Some((name, value)) = body.split_once('=') {
            flags.push(Flag {
                name: name.to_string(),
                value: Some(value.to_string()),
            });
        } else if switches.contains(&body) {
            flags.push(Flag {
                name: body.to_string(),
                value: None,
            });
        } else if i + 1 < args.len() && !args[i + 1].starts_with("--") {
            flags.push(Flag {
                name: body.to_string(),
                value: Some(args[i + 1].clone()),
            });
            i += 1;
        } else {
            return Err(format!("flag `--{body}` needs a value"));
        }
        i += 1;
    }
    Ok(flags)
}

fn parse_range(text: &str) -> Result<(String, i64, i64), String> {
    let (name, bounds) = text
        .split_once('=')
        .ok_or_else(|| format!("malformed range `{text}`, expected <param>=<lo>..<hi>"))?;
    let (lo, hi) = bounds
        .split_once("..")
        .ok_or_else(|| format!("malformed range `{text}`, expected <param>=<lo>..<hi>"))?;
    let lo: i64 = lo
        .parse()
        .map_err(|_| format!("malformed range bound `{lo}` in `{text}`"))?;
    let hi: i64 = hi
        .parse()
        .map_err(|_| format!("malformed range bound `{hi}` in `{text}`"))?;
    if lo > hi {
        return Err(format!("empty range `{text}` (lo > hi)"));
    }
    Ok((name.to_string(), lo, hi))
}

fn cmd_list(args: &[String], out: &mut String, err: &mut String) -> i32 {
    if !args.is_empty() {
        err.push_str("`list` takes no arguments\n");
        return 2;
    }
    for desc in identities::list_identities() {
        out.push_str(&format!(
            "{:<24} {:<18} params: {}\n",
            desc.id,
            desc.equation,
            desc.params.join(", ")
        ));
    }
    0
}

fn cmd_verify(args: &[String], out: &mut String, err: &mut String) -> i32 {
    let flags = match scan_flags(args, &["all", "verbose"]) {
        Ok(f) => f,
        Err(msg) => {
            err.push_str(&format!("{msg}\n"));
            return 2;
        }
    };
    let mut id: Option<String> = None;
    let mut all = false;
    let mut verbose = false;
    let mut format = OutputFormat::Text;
    let mut ranges: Vec<(String, i64, i64)> = Vec::new();
    for flag in &flags {
        match (flag.name.as_str(), &flag.value) {
            ("id", Some(v)) => id = Some(v.clone()),
            ("all", None) => all = true,
            ("verbose", None) => verbose = true,
            ("format", Some(v)) => match v.as_str() {
                "text" => format = OutputFormat::Text,
                "json" => format = OutputFormat::Json,
                other => {
                    err.push_str(&format!("unknown format `{other}`\n"));
                    return 2;
                }
            },
            ("range", Some(v)) => match parse_range(v) {
                Ok(range) => ranges.push(range),
                Err(msg) => {
                    err.push_str(&format!("{msg}\n"));
                    return 2;
                }
            },
            (name, _) => {
                err.push_str(&format!("unknown flag `--{name}` for verify\n"));
                return 2;
            }
        }
    }
    let targets: Vec<&'static IdentityDescriptor> = if all {
        if id.is_some() {
            err.push_str("choose either --id or --all, not both\n");
            return 2;
        }
        identities::list_identities().iter().collect()
    } else if let Some(id) = &id {
        match identities::find_identity(id) {
            Ok(desc) => vec![desc],
            Err(e) => {
                err.push_str(&format!("{e}\n"));
                return 2;
            }
        }
    } else {
        err.push_str("verify needs --id <id> or --all\n");
        return 2;
    };

    // every user range must name a parameter of at least one target
    for (name, _, _) in &ranges {
        if !targets.iter().any(|d| d.params.contains(&name.as_str())) {
            err.push_str(&format!("no selected identity has a parameter `{name}`\n"));
            return 2;
        }
    }

    let mut grids: Vec<GridReport> = Vec::new();
    for desc in &targets {
        let merged: Vec<(&str, RangeInclusive<i64>)> = desc
            .default_grid
            .iter()
            .map(|(name, default_lo, default_hi)| {
                let user = ranges.iter().find(|(n, _, _)| n.as_str() == *name);
                match user {
                    Some((_, lo, hi)) => (*name, *lo..=*hi),
                    None => (*name, *default_lo..=*default_hi),
                }
            })
            .collect();
        match identities::verify_grid(desc.id, &merged) {
            Ok(grid) => grids.push(grid),
            Err(e) => {
                err.push_str(&format!("{e}\n"));
                return 2;
            }
        }
    }

    let reports: Vec<&VerificationReport> =
        grids.iter().flat_map(|g| g.reports.iter()).collect();
    let all_passed = reports.iter().all(|r| r.passed());
    match format {
        OutputFormat::Json => {
            let owned: Vec<&VerificationReport> = reports.clone();
            out.push_str(&serde_json::to_string_pretty(&owned).expect("reports serialize"));
            out.push('\n');
        }
        OutputFormat::Text => {
            for grid in &grids {
                if verbose {
                    let desc = identities::find_identity(&grid.id).expect("known id");
                    out.push_str(&format!("# {} [{}]\n", desc.id, desc.equation));
                    if let Some(note) = desc.note {
                        out.push_str(&format!("#   note: {note}\n"));
                    }
                }
                for report in &grid.reports {
                    out.push_str(&report.text_line());
                    out.push('\n');
                    if !report.passed() {
                        if let (Some(lhs), Some(rhs)) = (&report.lhs, &report.rhs) {
                            out.push_str(&format!("  lhs = {lhs}\n  rhs = {rhs}\n"));
                        }
                        if let Some(error) = &report.error {
                            out.push_str(&format!("  error: {error}\n"));
                        }
                    }
                }
            }
            if verbose {
                let passed = reports.iter().filter(|r| r.passed()).count();
                out.push_str(&format!("# {passed}/{} instances passed\n", reports.len()));
            }
        }
    }
    if all_passed {
        0
    } else {
        1
    }
}

/// Parse `--id`, `--side`, and free `--<param>=<value>` flags.
fn parse_identity_invocation(
    args: &[String],
) -> Result<(String, Option<Side>, Params), String> {
    let flags = scan_flags(args, &[])?;
    let mut id = None;
    let mut side = None;
    let mut params = Params::new();
    for flag in &flags {
        match (flag.name.as_str(), &flag.value) {
            ("id", Some(v)) => id = Some(v.clone()),
            ("side", Some(v)) => match v.as_str() {
                "lhs" => side = Some(Side::Lhs),
                "rhs" => side = Some(Side::Rhs),
                other => return Err(format!("unknown side `{other}`, expected lhs or rhs")),
            },
            (name, Some(v)) => {
                let value: i64 = v
                    .parse()
                    .map_err(|_| format!("parameter `{name}` needs an integer, got `{v}`"))?;
                params = params.with(name, value);
            }
            (name, None) => return Err(format!("flag `--{name}` needs a value")),
        }
    }
    let id = id.ok_or("missing --id <id>")?;
    Ok((id, side, params))
}

fn cmd_show(args: &[String], out: &mut String, err: &mut String) -> i32 {
    let (id, side, params) = match parse_identity_invocation(args) {
        Ok(parsed) => parsed,
        Err(msg) => {
            err.push_str(&format!("{msg}\n"));
            return 2;
        }
    };
    let sides = match side {
        Some(side) => vec![side],
        None => vec![Side::Lhs, Side::Rhs],
    };
    for side in &sides {
        match identities::build_side(&id, *side, &params) {
            Ok(value) => {
                if sides.len() == 1 {
                    out.push_str(&format!("{value}\n"));
                } else {
                    let label = match side {
                        Side::Lhs => "lhs",
                        Side::Rhs => "rhs",
                    };
                    out.push_str(&format!("{label} = {value}\n"));
                }
            }
            Err(e) => {
                err.push_str(&format!("{e}\n"));
                return 2;
            }
        }
    }
    0
}

fn cmd_lattice(args: &[String], out: &mut String, err: &mut String) -> i32 {
    let flags = match scan_flags(args, &["hooks", "regions"]) {
        Ok(f) => f,
        Err(msg) => {
            err.push_str(&format!("{msg}\n"));
            return 2;
        }
    };
    let mut n: Option<i64> = None;
    let mut hooks = false;
    let mut regions = false;
    for flag in &flags {
        match (flag.name.as_str(), &flag.value) {
            ("n", Some(v)) => match v.parse::<i64>() {
                Ok(value) => n = Some(value),
                Err(_) => {
                    err.push_str(&format!("--n needs an integer, got `{v}`\n"));
                    return 2;
                }
            },
            ("hooks", None) => hooks = true,
            ("regions", None) => regions = true,
            (name, _) => {
                err.push_str(&format!("unknown flag `--{name}` for lattice\n"));
                return 2;
            }
        }
    }
    let n = match n {
        Some(n) if n >= 1 => n as u64,
        Some(n) => {
            err.push_str(&format!("--n must be at least 1, got {n}\n"));
            return 2;
        }
        None => {
            err.push_str("lattice needs --n <n>\n");
            return 2;
        }
    };
    out.push_str(&lattice::weight_matrix_text(n));
    out.push('\n');
    if hooks {
        out.push('\n');
        for k in 1..=n {
            let points = lattice::hook_points(k, n).expect("1 <= k <= n");
            let weight = lattice::weight_of(&points, n).expect("hook inside square");
            out.push_str(&format!("hook {k}: size {}, weight {weight}\n", points.len()));
        }
    }
    if regions {
        out.push('\n');
        let ambient = triangular(n);
        out.push_str(&format!("regions of S_{ambient}:\n"));
        for j in 1..=n {
            let points = lattice::region_points(j, n).expect("1 <= j <= n");
            let weight = lattice::weight_of(&points, ambient).expect("region inside square");
            out.push_str(&format!(
                "region {j}: size {}, weight {weight}\n",
                points.len()
            ));
        }
    }
    0
}

fn cmd_limits(args: &[String], out: &mut String, err: &mut String) -> i32 {
    let (id, side, params) = match parse_identity_invocation(args) {
        Ok(parsed) => parsed,
        Err(msg) => {
            err.push_str(&format!("{msg}\n"));
            return 2;
        }
    };
    if side.is_some() {
        err.push_str("`limits` checks both sides; --side is not accepted\n");
        return 2;
    }
    let report = match identities::classical_limit_check(&id, &params) {
        Ok(report) => report,
        Err(e) => {
            err.push_str(&format!("{e}\n"));
            return 2;
        }
    };
    if report.passed() {
        let desc = identities::find_identity(&id).expect("known id");
        let value = desc.classical_value(&params).expect("validated params");
        out.push_str(&format!(
            "{} (q=1 value {value}; {})\n",
            report.text_line(),
            desc.classical
        ));
        0
    } else {
        out.push_str(&format!("{}\n", report.text_line()));
        if let (Some(lhs), Some(rhs)) = (&report.lhs, &report.rhs) {
            out.push_str(&format!("  lhs(1) = {lhs}, rhs(1) = {rhs}\n"));
        }
        if let Some(error) = &report.error {
            out.push_str(&format!("  {error}\n"));
        }
        1
    }
}
