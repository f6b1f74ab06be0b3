//! Command-line front end: build groups and their (enhanced) power graphs,
//! reconstruct enhanced power graphs from power-graph documents, and run
//! the catalog verification suite.
//!
//! Exit codes: 0 on success, 1 when verification finds a failure, 2 for
//! usage, parse, or I/O errors.

use std::error::Error;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use powergraph::{
    difference_edges, difference_graph_from_power, enhanced_power_graph, make_group, power_graph,
    reconstruct_enhanced, run_verify, to_dot, FiniteGroup, Graph, GraphDocument, GroupSpec,
    ReconstructionReport, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "powergraph",
    version,
    about = "Power graphs of finite groups, and enhanced power graphs reconstructed from them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a group and print a structural summary
    GenGroup(GenGroupArgs),
    /// Build the power graph of a group
    PowerGraph(BuildArgs),
    /// Build the enhanced power graph of a group
    Enhanced(EnhancedArgs),
    /// Reconstruct the enhanced power graph from a power-graph document
    Reconstruct(ReconstructArgs),
    /// Edges gained by the enhanced power graph, as a graph of its own
    Diff(DiffArgs),
    /// Check reconstruction and twin-count facts across the group catalog
    Verify(VerifyArgs),
}

/// Selects a group: either a family with parameters, or a Cayley table.
#[derive(Args)]
struct GroupSelect {
    /// Group family: cyclic, dihedral, q, symmetric, product
    #[arg(value_name = "FAMILY", conflicts_with = "table")]
    family: Option<String>,
    /// Family parameters (e.g. `cyclic 6`, `q 3`, `product 2 4`)
    #[arg(value_name = "PARAM")]
    params: Vec<usize>,
    /// Read the group from a CSV Cayley table of element indices
    #[arg(long, value_name = "PATH", conflicts_with = "family")]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct GenGroupArgs {
    #[command(flatten)]
    group: GroupSelect,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Plain-text graph document
    #[default]
    Doc,
    /// Graphviz DOT
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Shorthand for `--format dot`
    #[arg(long, conflicts_with = "format")]
    dot: bool,
    /// Write to a file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.dot {
            Format::Dot
        } else {
            self.format
        }
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    group: GroupSelect,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EnhancedArgs {
    #[command(flatten)]
    group: GroupSelect,
    #[command(flatten)]
    output: OutputArgs,
    /// Render edges absent from the power graph dashed (DOT only)
    #[arg(long)]
    mark_diff: bool,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Power-graph document to read, or `-` for standard input
    #[arg(value_name = "INPUT")]
    input: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
    /// Render the added edges dashed (DOT only)
    #[arg(long)]
    mark_diff: bool,
}

#[derive(Args)]
struct DiffArgs {
    /// Power-graph document to read, or `-` for standard input
    #[arg(value_name = "INPUT")]
    input: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest group order to include
    #[arg(long, value_name = "N", default_value_t = 48)]
    max_order: usize,
    /// Restrict to one family (cyclic, dihedral, q, symmetric, product)
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    match cli.command {
        Command::GenGroup(args) => cmd_gen_group(&args),
        Command::PowerGraph(args) => cmd_power_graph(&args),
        Command::Enhanced(args) => cmd_enhanced(&args),
        Command::Reconstruct(args) => cmd_reconstruct(&args),
        Command::Diff(args) => cmd_diff(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn resolve_spec(select: &GroupSelect) -> Result<GroupSpec, Box<dyn Error>> {
    match (&select.table, &select.family) {
        (Some(path), None) => Ok(GroupSpec::External(path.clone())),
        (None, Some(family)) => Ok(GroupSpec::from_family(family, &select.params)?),
        (None, None) => {
            Err("specify a group family (e.g. 'cyclic 6') or --table PATH".into())
        }
        (Some(_), Some(_)) => unreachable!("clap rejects --table with a family"),
    }
}

fn resolve_group(select: &GroupSelect) -> Result<(GroupSpec, FiniteGroup), Box<dyn Error>> {
    let spec = resolve_spec(select)?;
    let group = make_group(&spec)?;
    Ok((spec, group))
}

fn cmd_gen_group(args: &GenGroupArgs) -> Result<ExitCode, Box<dyn Error>> {
    let (spec, group) = resolve_group(&args.group)?;
    let histogram = group
        .element_order_histogram()
        .iter()
        .map(|(order, count)| format!("{order}:{count}"))
        .collect::<Vec<_>>()
        .join(", ");
    println!("spec: {spec}");
    println!("order: {}", group.order());
    println!("cyclic: {}", if group.is_cyclic() { "yes" } else { "no" });
    println!(
        "generalized quaternion: {}",
        if group.is_generalized_quaternion() {
            "yes"
        } else {
            "no"
        }
    );
    println!("involutions: {}", group.involution_count());
    println!("element orders: {{{histogram}}}");
    println!("cyclic subgroups: {}", group.cyclic_subgroup_poset().len());
    Ok(ExitCode::SUCCESS)
}

fn labeled_document(group: &FiniteGroup, graph: Graph) -> GraphDocument {
    GraphDocument::new(graph, Some(group.element_names().to_vec()))
}

fn emit(
    doc: &GraphDocument,
    dashed: &[(usize, usize)],
    output: &OutputArgs,
) -> Result<(), Box<dyn Error>> {
    let text = match output.format() {
        Format::Doc => doc.to_text(),
        Format::Dot => to_dot(doc, dashed),
    };
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|err| format!("cannot write {}: {err}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn require_dot_for_mark_diff(output: &OutputArgs, mark_diff: bool) -> Result<(), Box<dyn Error>> {
    if mark_diff && output.format() != Format::Dot {
        return Err("--mark-diff needs DOT output; pass --dot or --format dot".into());
    }
    Ok(())
}

fn cmd_power_graph(args: &BuildArgs) -> Result<ExitCode, Box<dyn Error>> {
    let (_, group) = resolve_group(&args.group)?;
    let doc = labeled_document(&group, power_graph(&group));
    emit(&doc, &[], &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_enhanced(args: &EnhancedArgs) -> Result<ExitCode, Box<dyn Error>> {
    require_dot_for_mark_diff(&args.output, args.mark_diff)?;
    let (_, group) = resolve_group(&args.group)?;
    let enhanced = enhanced_power_graph(&group);
    let dashed = if args.mark_diff {
        difference_edges(&power_graph(&group), &enhanced)
    } else {
        Vec::new()
    };
    let doc = labeled_document(&group, enhanced);
    emit(&doc, &dashed, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn read_document(input: &PathBuf) -> Result<GraphDocument, Box<dyn Error>> {
    let text = if input.as_os_str() == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        buffer
    } else {
        fs::read_to_string(input)
            .map_err(|err| format!("cannot read {}: {err}", input.display()))?
    };
    Ok(GraphDocument::parse(&text)?)
}

fn print_report(report: &ReconstructionReport) {
    eprintln!("input class: {}", report.input_class);
    eprintln!("universal vertices: {}", report.universal_count);
    eprintln!("added edges: {}", report.added_edges.len());
    for edge in &report.added_edges {
        match edge.witness {
            Some(w) => eprintln!("  {} -- {} (witness {})", edge.a, edge.b, w),
            None => eprintln!("  {} -- {}", edge.a, edge.b),
        }
    }
}

fn cmd_reconstruct(args: &ReconstructArgs) -> Result<ExitCode, Box<dyn Error>> {
    require_dot_for_mark_diff(&args.output, args.mark_diff)?;
    let input = read_document(&args.input)?;
    let (enhanced, report) = reconstruct_enhanced(input.graph());
    let dashed: Vec<(usize, usize)> = report.added_edges.iter().map(|e| (e.a, e.b)).collect();
    let doc = GraphDocument::new(enhanced, input.labels().map(<[String]>::to_vec));
    emit(&doc, if args.mark_diff { &dashed } else { &[] }, &args.output)?;
    print_report(&report);
    Ok(ExitCode::SUCCESS)
}

fn cmd_diff(args: &DiffArgs) -> Result<ExitCode, Box<dyn Error>> {
    let input = read_document(&args.input)?;
    let (diff, _report) = difference_graph_from_power(input.graph());
    let labels = input.labels().map(|labels| {
        diff.original_indices
            .iter()
            .map(|&v| labels[v].clone())
            .collect::<Vec<_>>()
    });
    let doc = GraphDocument::new(diff.graph, labels);
    emit(&doc, &[], &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, Box<dyn Error>> {
    let options = VerifyOptions {
        max_order: Some(args.max_order),
        family: args.family.clone(),
    };
    let report = run_verify(&options)?;
    for group in &report.groups {
        let status = if group.failures.is_empty() {
            "pass"
        } else {
            "FAIL"
        };
        println!(
            "{:<14} order {:>3}  {:<22}  N(e) {:>2}  formula {:>3}/{:<3}  {status}",
            group.name,
            group.order,
            group.input_class.to_string(),
            group.identity_count,
            group.formula_covered,
            group.formula_total,
        );
        for failure in &group.failures {
            println!("    {}: {}", failure.check, failure.detail);
        }
    }
    let failed = report
        .groups
        .iter()
        .filter(|g| !g.failures.is_empty())
        .count();
    println!(
        "summary: {} groups, {} passed, {} failed",
        report.groups.len(),
        report.groups.len() - failed,
        failed
    );
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
