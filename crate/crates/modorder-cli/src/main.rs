//! `modorder`: query order relations on finite modules, export posets,
//! run the claim suite, and search for counterexample witnesses.
//!
//! Exit codes: 0 = success / relation holds; 1 = relation absent, claim
//! failed, axioms violated, or nothing found; 2 = usage or input error.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use modorder::catalog::{build_instance, builtin_catalog};
use modorder::context::Ctx;
use modorder::lab::{self, search};
use modorder::module::FiniteModule;
use modorder::order::{self, OrderCertificate, Rel};
use modorder::scalar::ScalarRing;
use modorder::{io as doc_io, Error, Result};

#[derive(Parser)]
#[command(name = "modorder", version, about = "Order relations on finite modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate an instance document or a builtin instance
    Validate(ValidateArgs),
    /// Decide whether two elements are related, optionally with a witness
    Order(OrderArgs),
    /// Export a partial order as a DOT digraph
    Hasse(HasseArgs),
    /// Run registered claims over catalog instances and write a JSON report
    Suite(SuiteArgs),
    /// Search the catalog for the first witness of a registered property
    Search(SearchArgs),
    /// List the builtin instances
    Catalog,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Path to an instance document (JSON)
    #[arg(long, value_name = "PATH")]
    instance: Option<PathBuf>,
    /// Name of a builtin instance
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    source: SourceArgs,
}

#[derive(Args)]
struct OrderArgs {
    /// Name of a builtin instance
    #[arg(long, value_name = "NAME")]
    builtin: String,
    /// Relation: mitsch | minus | jones | dsum | space
    #[arg(long, value_name = "REL")]
    rel: String,
    /// Lower element (display name, or #k for index k)
    #[arg(long, value_name = "ELT")]
    m1: String,
    /// Upper element (display name, or #k for index k)
    #[arg(long, value_name = "ELT")]
    m2: String,
    /// Print the certificate as one JSON line
    #[arg(long)]
    witness: bool,
    /// Verify a certificate read from PATH ('-' for stdin) instead of deciding
    #[arg(long, value_name = "PATH")]
    replay: Option<String>,
}

#[derive(Args)]
struct HasseArgs {
    /// Name of a builtin instance
    #[arg(long, value_name = "NAME")]
    builtin: String,
    /// Relation: mitsch | minus | jones | dsum | space
    #[arg(long, value_name = "REL")]
    rel: String,
    /// Output path for the DOT digraph
    #[arg(long, value_name = "PATH")]
    dot: PathBuf,
}

#[derive(Args)]
struct SuiteArgs {
    /// 'all', or comma-separated builtin names
    #[arg(long, default_value = "all", value_name = "NAMES")]
    catalog: String,
    /// 'all', or comma-separated claim ids
    #[arg(long, default_value = "all", value_name = "IDS")]
    claims: String,
    /// Write the JSON report to this path
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Registered property id
    #[arg(long, value_name = "ID",
          value_parser = clap::builder::PossibleValuesParser::new(search::PROPERTIES))]
    property: String,
    /// 'all', 'none', or comma-separated builtin names
    #[arg(long, default_value = "all", value_name = "NAMES")]
    catalog: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Validate(args) => cmd_validate(args),
        Cmd::Order(args) => cmd_order(args),
        Cmd::Hasse(args) => cmd_hasse(args),
        Cmd::Suite(args) => cmd_suite(args),
        Cmd::Search(args) => cmd_search(args),
        Cmd::Catalog => cmd_catalog(),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn builtin_ctx(name: &str) -> Result<Ctx> {
    let desc = builtin_catalog()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownInstance(name.to_string()))?;
    build_instance(&desc)
}

/// Resolve an element by display name, falling back to `#k` as index `k`.
fn resolve_element(m: &FiniteModule, spec: &str) -> Result<usize> {
    if let Some(i) = m.index_of(spec) {
        return Ok(i);
    }
    if let Some(k) = spec.strip_prefix('#') {
        if let Ok(k) = k.parse::<usize>() {
            if k < m.size() {
                return Ok(k);
            }
        }
    }
    Err(Error::UnknownElement(spec.to_string()))
}

fn scalar_summary(s: &ScalarRing) -> String {
    match s {
        ScalarRing::Integers { exponent } => {
            format!("integer scalars (additive exponent {exponent})")
        }
        ScalarRing::Table(ring) => format!("table ring with {} elements", ring.size()),
    }
}

fn describe_module(name: &str, m: &FiniteModule) {
    println!("instance: {name}");
    println!("elements: {}", m.size());
    println!("scalars: {}", scalar_summary(m.scalars()));
}

fn cmd_validate(args: ValidateArgs) -> Result<u8> {
    match (args.source.builtin, args.source.instance) {
        (Some(name), None) => {
            let ctx = builtin_ctx(&name)?;
            describe_module(ctx.name(), ctx.module());
            println!("valid");
            Ok(0)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(&path).map_err(|e| Error::Io(e.to_string()))?;
            match doc_io::load_instance_str(&text) {
                Ok(module) => {
                    describe_module(&path.display().to_string(), &module);
                    println!("valid");
                    Ok(0)
                }
                Err(Error::AxiomViolation { law, witness }) => {
                    println!("invalid: {law} fails at elements {witness:?}");
                    Ok(1)
                }
                Err(other) => Err(other),
            }
        }
        _ => unreachable!("clap enforces exactly one source"),
    }
}

fn decide(ctx: &Ctx, rel: Rel, m1: usize, m2: usize) -> Result<Option<OrderCertificate>> {
    let m = ctx.module();
    Ok(match rel {
        Rel::Mitsch => {
            let homs = ctx.homs()?;
            order::mitsch_leq(m, &homs, m1, m2)
        }
        Rel::Minus => {
            let dual = ctx.dual()?;
            order::minus_leq(m, &dual, m1, m2)
        }
        Rel::Jones => {
            let homs = ctx.homs()?;
            order::jones_leq(m, &homs, m1, m2)
        }
        Rel::Dsum => order::dsum_leq(m, m1, m2),
        Rel::Space => {
            let homs = ctx.homs()?;
            order::space_leq(m, &homs, m1, m2)
        }
    })
}

fn cmd_order(args: OrderArgs) -> Result<u8> {
    let rel = Rel::parse(&args.rel)?;
    let ctx = builtin_ctx(&args.builtin)?;
    let m = ctx.module();
    let m1 = resolve_element(m, &args.m1)?;
    let m2 = resolve_element(m, &args.m2)?;
    let (n1, n2) = (m.name(m1), m.name(m2));

    if let Some(source) = args.replay {
        let text = if source == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Io(e.to_string()))?;
            buf
        } else {
            fs::read_to_string(&source).map_err(|e| Error::Io(e.to_string()))?
        };
        let cert: OrderCertificate = serde_json::from_str(text.trim()).map_err(|e| {
            Error::Schema { path: "$".into(), detail: format!("invalid certificate: {e}") }
        })?;
        let homs = ctx.homs()?;
        let dual = ctx.dual()?;
        let ok = order::replay_certificate(m, &homs, &dual, m1, m2, &cert);
        if ok {
            println!("witness verified: {n1} <= {n2} [{rel} on {}]", ctx.name());
            Ok(0)
        } else {
            println!("witness rejected: {n1} <= {n2} [{rel} on {}]", ctx.name());
            Ok(1)
        }
    } else {
        match decide(&ctx, rel, m1, m2)? {
            Some(cert) => {
                println!("holds: {n1} <= {n2} [{rel} on {}]", ctx.name());
                if args.witness {
                    println!(
                        "{}",
                        serde_json::to_string(&cert).expect("certificates serialize")
                    );
                }
                Ok(0)
            }
            None => {
                println!("absent: {n1} <= {n2} [{rel} on {}]", ctx.name());
                Ok(1)
            }
        }
    }
}

fn cmd_hasse(args: HasseArgs) -> Result<u8> {
    let rel = Rel::parse(&args.rel)?;
    let ctx = builtin_ctx(&args.builtin)?;
    let poset = ctx.poset(rel)?;
    let ax = &poset.axioms;
    if !ax.is_partial_order() {
        if let Some(i) = ax.reflexivity_failure {
            println!("not a partial order: reflexivity fails at {}", ctx.module().name(i as usize));
        } else if let Some((i, j)) = ax.antisymmetry_failure {
            println!(
                "not a partial order: antisymmetry fails at ({}, {})",
                ctx.module().name(i as usize),
                ctx.module().name(j as usize)
            );
        } else if let Some((i, j, k)) = ax.transitivity_failure {
            println!(
                "not a partial order: transitivity fails at ({}, {}, {})",
                ctx.module().name(i as usize),
                ctx.module().name(j as usize),
                ctx.module().name(k as usize)
            );
        }
        return Ok(1);
    }
    let dot = doc_io::export_dot(&poset, ctx.module().element_names())?;
    fs::write(&args.dot, dot).map_err(|e| Error::Io(e.to_string()))?;
    println!("wrote dot: {}", args.dot.display());
    let maximal = poset.maximal.as_ref().expect("partial orders carry maximal elements");
    let names: Vec<&str> =
        maximal.iter().map(|&i| ctx.module().name(i as usize)).collect();
    println!("maximal elements: {}", names.join(", "));
    let lattice = order::lattice_report(&poset)?;
    if lattice.is_lattice {
        println!("lattice: yes");
    } else if let Some(gap) = lattice.join_gap.as_ref().or(lattice.meet_gap.as_ref()) {
        let kind = if lattice.join_gap.is_some() { "join" } else { "meet" };
        println!(
            "lattice: no ({kind} gap at ({}, {}))",
            ctx.module().name(gap.pair.0 as usize),
            ctx.module().name(gap.pair.1 as usize)
        );
    }
    Ok(0)
}

fn parse_catalog(arg: &str) -> Result<Vec<Ctx>> {
    if arg == "all" {
        builtin_catalog().iter().map(build_instance).collect()
    } else if arg == "none" || arg.is_empty() {
        Ok(Vec::new())
    } else {
        arg.split(',').map(|name| builtin_ctx(name.trim())).collect()
    }
}

fn cmd_suite(args: SuiteArgs) -> Result<u8> {
    let ctxs = parse_catalog(&args.catalog)?;
    let filter: Option<Vec<String>> = if args.claims == "all" {
        None
    } else {
        let ids: Vec<String> = args.claims.split(',').map(|s| s.trim().to_string()).collect();
        for id in &ids {
            lab::find_claim(id)?;
        }
        Some(ids)
    };
    let report = lab::run_suite(&ctxs, filter.as_deref())?;
    for check in &report.checks {
        println!("{:<14} {:<12} {}", check.status.as_str(), check.instance, check.claim_id);
    }
    let s = &report.summary;
    println!(
        "summary: {} holds, {} fails, {} vacuous, {} audit-findings, {} capacity-skipped",
        s.holds, s.fails, s.vacuous, s.audit_findings, s.capacity
    );
    if let Some(path) = args.report {
        fs::write(&path, report.to_json_string()).map_err(|e| Error::Io(e.to_string()))?;
        println!("wrote report: {}", path.display());
    }
    let failures = report.non_audit_failures();
    if failures == 0 {
        Ok(0)
    } else {
        println!("FAILURES: {failures}");
        Ok(1)
    }
}

fn cmd_search(args: SearchArgs) -> Result<u8> {
    let ctxs = parse_catalog(&args.catalog)?;
    match search::search_counterexample(&ctxs, &args.property)? {
        search::SearchOutcome::Found { property, instance, witness } => {
            println!("found: {property}");
            println!("instance: {instance}");
            println!("witness: {witness}");
            Ok(0)
        }
        search::SearchOutcome::NotFound { property, instances_searched } => {
            println!("not found: {property} (searched {instances_searched} instances)");
            Ok(1)
        }
    }
}

fn cmd_catalog() -> Result<u8> {
    for desc in builtin_catalog() {
        println!("{:<12} {}", desc.name, desc.note);
    }
    Ok(0)
}
