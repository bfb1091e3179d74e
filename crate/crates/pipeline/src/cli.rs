//! The `lode-atlas` command line. Exit codes: 0 when every requested check
//! passes, 1 when a check fails or a computation errors, 2 on usage errors.

use crate::example::{closed_form, curve_probe, hauptmodul_membership, l_prime, verify_example};
use crate::fixtures::{default_dir, FixtureSet};
use crate::report::{Report, Section};
use clap::{Parser, Subcommand};
use lode_catalog::{verify_standard, Check, Checks};
use lode_diffop::{symmetric_power, symmetric_power_kills_one, LinODE};
use lode_groups::{catalog_group, GroupId};
use lode_invariants::{build_invariants_with, Reading};
use lode_ratsol::rational_solutions;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

const CLOSURE_BOUND: usize = 5000;

#[derive(Parser, Debug)]
#[command(name = "lode-atlas", version, about = "Exact checks for standard equations of the finite primitive subgroups of SL3")]
struct Cli {
    /// Data directory holding the checksummed fixtures.
    #[arg(long, global = true, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate a group: order, projective order, determinants.
    Group {
        #[arg(long)]
        id: String,
    },
    /// Invariant generators, syzygy residuals and identities of a group.
    Invariants {
        #[arg(long)]
        id: String,
    },
    /// Molien series coefficients.
    Molien {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
    /// Symmetric power of an operator.
    Sympower {
        /// Built-in operator name or path to an operator JSON file.
        #[arg(long)]
        op: String,
        #[arg(long)]
        degree: u32,
        /// Only decide whether the symmetric power annihilates 1.
        #[arg(long)]
        kills_one: bool,
    },
    /// Rational solutions of an operator or of its symmetric power.
    Ratsols {
        #[arg(long)]
        op: String,
        #[arg(long)]
        sympower: Option<u32>,
    },
    /// Verify a standard equation.
    VerifyStandard {
        #[arg(long)]
        group: String,
        /// Comma-separated subset of series,unit,curve,stretch.
        #[arg(long, default_value = "series,unit,curve")]
        checks: String,
        /// Also verify alternative readings of the record.
        #[arg(long)]
        alternatives: bool,
    },
    /// The worked example: operator identity and degree-14 membership.
    VerifyExample {
        /// Also run the curve-relation probe.
        #[arg(long)]
        probe: bool,
    },
    /// Closed form of the worked example's solutions.
    ClosedForm,
    /// Everything above.
    VerifyAll {
        #[arg(long)]
        stretch: bool,
        #[arg(long)]
        probe: bool,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn parse_group(s: &str) -> Result<GroupId, Failure> {
    match s {
        "klein" => Ok(GroupId::G168),
        "hessian" => Ok(GroupId::H216SL3),
        _ => s.parse().map_err(|e: lode_groups::GroupError| Failure::Usage(e.to_string())),
    }
}

fn load(dir: &Option<PathBuf>) -> Result<FixtureSet, Failure> {
    FixtureSet::load(dir.as_deref().unwrap_or(&default_dir())).map_err(|e| Failure::Runtime(e.to_string()))
}

/// Built-in operators by name, or an operator JSON file.
fn resolve_operator(name: &str, fx: &FixtureSet) -> Result<LinODE, Failure> {
    let std_op = |id: GroupId, alternative: bool| {
        fx.readings(id).into_iter().find(|e| (e.reading == "printed") != alternative).map(|e| e.operator.clone())
    };
    let found = match name {
        "klein" => std_op(GroupId::G168, false),
        "h216" => std_op(GroupId::H216SL3, false),
        "h216-alt" => std_op(GroupId::H216SL3, true),
        "f36" => std_op(GroupId::F36SL3, false),
        "a6" => std_op(GroupId::A6SL3, false),
        "a5" => std_op(GroupId::A5, false),
        "vdpu" => Some(fx.example.operator.clone()),
        "l-prime" => Some(l_prime(&fx.example).map_err(|e| Failure::Runtime(e.to_string()))?),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|_| Failure::Usage(format!("`{path}` is neither a built-in operator nor a readable file")))?;
            Some(serde_json::from_str(&text).map_err(|e| Failure::Runtime(format!("{path}: {e}")))?)
        }
    };
    found.ok_or_else(|| Failure::Runtime(format!("no operator `{name}` in the fixtures")))
}

fn group_section(id: GroupId) -> Section {
    let mut s = Section::new(format!("group:{id}"));
    match catalog_group(id).closure(CLOSURE_BOUND) {
        Ok(g) => {
            s.put("order", g.order().unwrap());
            s.put("projective_order", g.projective_order().unwrap());
            s.put("generators", g.generators.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>());
            s.put("conductor", g.conductor);
            s.push(Check::from_result("determinants", g.elements_in_sl3().unwrap(), || "an element has determinant != 1".into()));
        }
        Err(e) => s.push(Check::fail("closure", e.to_string())),
    }
    s
}

#[derive(Serialize)]
struct MemberInfo {
    name: String,
    symbol: String,
    degree: u32,
    terms: usize,
}

fn invariants_section(id: GroupId, fx: &FixtureSet) -> Section {
    let mut s = Section::new(format!("invariants:{id}"));
    let set = match build_invariants_with(id, &fx.syzygies) {
        Ok(set) => set,
        Err(e) => {
            s.push(Check::fail("generator-invariance", e.to_string()));
            return s;
        }
    };
    s.push(Check::pass("generator-invariance"));
    let members: Vec<MemberInfo> = set
        .members
        .iter()
        .map(|m| MemberInfo { name: m.name.clone(), symbol: m.symbol.clone(), degree: m.degree, terms: m.poly.num_terms() })
        .collect();
    s.put("members", members);
    for syz in &set.syzygies {
        let label = match syz.reading {
            Reading::Printed => syz.name.clone(),
            Reading::Alternative => format!("{}[alternative]", syz.name),
        };
        match set.verify_syzygy(&syz.name, syz.reading) {
            Ok(r) => s.push(Check::from_result(format!("syzygy:{label}"), r.is_zero(), || {
                format!("{} residual terms, weights {:?}, leading {}", r.residual_terms, r.weights, r.sample.join(" "))
            })),
            Err(e) => s.push(Check::fail(format!("syzygy:{label}"), e.to_string())),
        }
    }
    for (name, reading, ok) in set.check_identities() {
        let label = match reading {
            Reading::Printed => name,
            Reading::Alternative => format!("{name}[alternative]"),
        };
        s.push(Check::from_result(format!("identity:{label}"), ok, || "sides differ".into()));
    }
    s
}

fn standard_sections(id: GroupId, checks: &Checks, alternatives: bool, fx: &FixtureSet) -> Vec<Section> {
    if let Err(e) = lode_catalog::standard_equation(id) {
        let mut s = Section::new(format!("standard:{id}"));
        s.push(Check::fail("standard-equation", e.to_string()));
        return vec![s];
    }
    fx.readings(id)
        .into_iter()
        .filter(|e| alternatives || e.reading == "printed")
        .map(|eq| {
            let r = verify_standard(eq, checks);
            let mut s = Section::new(format!("standard:{}[{}]", eq.group, eq.reading));
            s.checks = r.checks;
            s
        })
        .collect()
}

fn example_sections(fx: &FixtureSet, probe: bool) -> Result<Vec<Section>, Failure> {
    let klein = fx.standard_equation(GroupId::G168).ok_or_else(|| Failure::Runtime("no Klein record".into()))?;
    let mut out = vec![verify_example(&fx.example, &klein.operator), hauptmodul_membership(&fx.example)];
    if probe {
        out.push(curve_probe(&fx.example));
    }
    Ok(out)
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let name = match &cli.command {
        Command::Group { .. } => "group",
        Command::Invariants { .. } => "invariants",
        Command::Molien { .. } => "molien",
        Command::Sympower { .. } => "sympower",
        Command::Ratsols { .. } => "ratsols",
        Command::VerifyStandard { .. } => "verify-standard",
        Command::VerifyExample { .. } => "verify-example",
        Command::ClosedForm => "closed-form",
        Command::VerifyAll { .. } => "verify-all",
    };
    let sections = match &cli.command {
        Command::Group { id } => vec![group_section(parse_group(id)?)],
        Command::Invariants { id } => {
            let id = parse_group(id)?;
            vec![invariants_section(id, &load(&cli.fixtures)?)]
        }
        Command::Molien { id, max_degree } => {
            let id = parse_group(id)?;
            let mut s = Section::new(format!("molien:{id}"));
            match catalog_group(id).closure(CLOSURE_BOUND).and_then(|g| g.molien(*max_degree)) {
                Ok(m) => s.put("coefficients", m),
                Err(e) => s.push(Check::fail("molien", e.to_string())),
            }
            vec![s]
        }
        Command::Sympower { op, degree, kills_one } => {
            let fx = load(&cli.fixtures)?;
            let l = resolve_operator(op, &fx)?;
            let mut s = Section::new(format!("sympower:{op}^{degree}"));
            if *kills_one {
                match symmetric_power_kills_one(&l, *degree) {
                    Ok(k) => s.push(Check::from_result("kills-one", k, || format!("S^{degree} does not annihilate 1"))),
                    Err(e) => s.push(Check::fail("kills-one", e.to_string())),
                }
            } else {
                match symmetric_power(&l, *degree) {
                    Ok(p) => {
                        s.put("order", p.order());
                        s.put("operator", &p);
                    }
                    Err(e) => s.push(Check::fail("sympower", e.to_string())),
                }
            }
            vec![s]
        }
        Command::Ratsols { op, sympower } => {
            let fx = load(&cli.fixtures)?;
            let mut l = resolve_operator(op, &fx)?;
            if let Some(d) = sympower {
                l = symmetric_power(&l, *d).map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            let mut s = Section::new(format!("ratsols:{op}"));
            match rational_solutions(&l) {
                Ok(b) => {
                    s.put("dimension", b.len());
                    s.put("basis", &b);
                }
                Err(e) => s.push(Check::fail("ratsols", e.to_string())),
            }
            vec![s]
        }
        Command::VerifyStandard { group, checks, alternatives } => {
            let id = parse_group(group)?;
            let checks = Checks::parse(checks).map_err(Failure::Usage)?;
            standard_sections(id, &checks, *alternatives, &load(&cli.fixtures)?)
        }
        Command::VerifyExample { probe } => example_sections(&load(&cli.fixtures)?, *probe)?,
        Command::ClosedForm => {
            let fx = load(&cli.fixtures)?;
            let klein = fx.standard_equation(GroupId::G168).ok_or_else(|| Failure::Runtime("no Klein record".into()))?;
            vec![closed_form(&fx.example, klein).0]
        }
        Command::VerifyAll { stretch, probe } => {
            let fx = load(&cli.fixtures)?;
            let mut out: Vec<Section> = GroupId::ALL.into_iter().map(group_section).collect();
            out.extend(GroupId::ALL.into_iter().map(|id| invariants_section(id, &fx)));
            let checks = Checks { stretch: *stretch, ..Checks::all() };
            for id in [GroupId::G168, GroupId::H216SL3, GroupId::F36SL3, GroupId::A6SL3, GroupId::A5] {
                out.extend(standard_sections(id, &checks, true, &fx));
            }
            out.extend(example_sections(&fx, *probe)?);
            let klein = fx.standard_equation(GroupId::G168).ok_or_else(|| Failure::Runtime("no Klein record".into()))?;
            out.push(closed_form(&fx.example, klein).0);
            out
        }
    };
    Ok(Report::new(name, sections))
}

/// Runs the command line, writing the report to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            let _ = out.write_all(text.as_bytes());
            for s in &report.sections {
                for c in s.checks.iter().filter(|c| c.name == "standard-equation") {
                    if let Some(w) = &c.witness {
                        let _ = writeln!(err, "error: {w}");
                    }
                }
            }
            if report.passed {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Runtime(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

