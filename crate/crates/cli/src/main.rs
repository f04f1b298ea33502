mod descriptor;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cutgroups::classify::{
    central_height, classify_cut_metacyclic, cut_metacyclic_catalog, CatalogEntry, Classification, ClassifyOptions,
};
use cutgroups::corpus::corpus;
use cutgroups::cut::{is_camina, is_cut_ritter_sehgal, CutVerdict};
use cutgroups::cyclo::{is_cut_wedderburn, wedderburn_components, ComponentDescriptor};
use cutgroups::group::{FiniteGroup, MetacyclicPresentation, DEFAULT_LATTICE_CAP};
use cutgroups::verify::{run_all, run_criterion, CriterionReport, CRITERIA};
use serde::{Deserialize, Serialize};
use serde_json::json;

use descriptor::{metacyclic_from_list, GroupDescriptor};

#[derive(Parser)]
#[command(name = "cutgroups", version, about = "Cut-property checks for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the cut-property of one group.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "conjugacy")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// List the simple components of Q[G] with their centres.
    Wedderburn {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
    /// Central height of V(Z[G]) for a metacyclic group.
    Height {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
    /// Test whether G is a Camina group.
    Camina {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate cut metacyclic groups and compare with the catalog.
    Classify {
        #[arg(long, default_value_t = 42)]
        max_n: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 4, 6])]
        t_set: Vec<u64>,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run every end-to-end check and print a pass/fail table.
    VerifyPaper {
        #[command(flatten)]
        run: RunArgs,
        /// Run only these checks.
        #[arg(long, value_delimiter = ',', value_name = "IDS")]
        only: Vec<u8>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArgs {
    /// Metacyclic presentation `n,t,r,l`.
    #[arg(long, value_name = "N,T,R,L")]
    metacyclic: Option<String>,
    /// Abelian group by invariant factors.
    #[arg(long, value_name = "D1,D2,...")]
    abelian: Option<String>,
    /// Cayley table file.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
    /// Direct product of two short descriptors such as `metacyclic:8,2,3,8` and `abelian:4`.
    #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"])]
    product: Option<Vec<String>>,
    /// Full JSON group descriptor.
    #[arg(long, value_name = "JSON")]
    group_json: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// JSON catalog replacing the built-in one.
    #[arg(long, value_name = "FILE")]
    catalog: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Conjugacy,
    Wedderburn,
    Both,
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Check { group, method, json } => check(&group, method, json),
        Command::Wedderburn { group, json } => wedderburn(&group, json),
        Command::Height { group, json } => height(&group, json),
        Command::Camina { group, json } => camina(&group, json),
        Command::Classify { max_n, t_set, run, json } => classify(max_n, t_set, &run, json),
        Command::VerifyPaper { run, only, json } => verify_paper(&run, &only, json),
    }
}

fn exit(success: bool) -> ExitCode {
    if success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn descriptor(args: &GroupArgs) -> Result<GroupDescriptor, String> {
    let d = if let Some(s) = &args.metacyclic {
        metacyclic_from_list(s)
    } else if let Some(s) = &args.abelian {
        descriptor::parse_list(s).map(|factors| GroupDescriptor::Abelian { factors })
    } else if let Some(p) = &args.table {
        Ok(GroupDescriptor::Table { path: p.clone() })
    } else if let Some(parts) = &args.product {
        let left = GroupDescriptor::parse_short(&parts[0]).map_err(|e| e.to_string())?;
        let right = GroupDescriptor::parse_short(&parts[1]).map_err(|e| e.to_string())?;
        Ok(GroupDescriptor::Product { left: Box::new(left), right: Box::new(right) })
    } else if let Some(s) = &args.group_json {
        return serde_json::from_str(s).map_err(|e| format!("bad group descriptor: {e}"));
    } else {
        unreachable!("clap requires one group argument")
    };
    d.map_err(|e| e.to_string())
}

fn load(args: &GroupArgs) -> Result<(GroupDescriptor, FiniteGroup), String> {
    let d = descriptor(args)?;
    let g = d.build().map_err(|e| e.to_string())?;
    Ok((d, g))
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

#[derive(Serialize)]
struct WitnessReport {
    element: usize,
    label: String,
    exponent: u64,
}

#[derive(Serialize)]
struct VerdictReport {
    is_cut: bool,
    method: cutgroups::cut::CutMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    offending_component: Option<ComponentDescriptor>,
}

impl VerdictReport {
    fn of(g: &FiniteGroup, v: CutVerdict) -> Self {
        VerdictReport {
            is_cut: v.is_cut,
            method: v.method,
            witness: v.witness.map(|w| WitnessReport { element: w.element, label: g.label(w.element), exponent: w.exponent }),
            offending_component: v.offending_component,
        }
    }

    fn describe(&self) -> String {
        let mut s = format!("{:?}: {}", self.method, if self.is_cut { "cut" } else { "not cut" });
        if let Some(w) = &self.witness {
            s += &format!(", x = {} with x^{} conjugate to neither x nor x^-1", w.label, w.exponent);
        }
        if let Some(c) = &self.offending_component {
            s += &format!(", component {} has centre {}", component_pair(c), c.center);
        }
        s
    }
}

fn component_pair(c: &ComponentDescriptor) -> String {
    format!("(H=<{}>, K=<{}>)", c.h_generators.join(","), c.k_generators.join(","))
}

fn check(args: &GroupArgs, method: Method, json: bool) -> CliResult {
    let (d, g) = load(args)?;
    let mut verdicts = Vec::new();
    if method != Method::Wedderburn {
        verdicts.push(VerdictReport::of(&g, is_cut_ritter_sehgal(&g)));
    }
    if method != Method::Conjugacy {
        verdicts.push(VerdictReport::of(&g, is_cut_wedderburn(&g).map_err(|e| e.to_string())?));
    }
    let is_cut = verdicts[0].is_cut;
    let agree = verdicts.iter().all(|v| v.is_cut == is_cut);
    if json {
        let mut value = json!({ "group": d, "order": g.order(), "is_cut": is_cut, "verdicts": verdicts });
        if method == Method::Both {
            value["agree"] = json!(agree);
        }
        print_json(&value);
    } else {
        println!("group of order {}", g.order());
        for v in &verdicts {
            println!("{}", v.describe());
        }
    }
    if !agree {
        return Err("the conjugacy and component tests disagree".into());
    }
    Ok(exit(is_cut))
}

fn wedderburn(args: &GroupArgs, json: bool) -> CliResult {
    let (d, g) = load(args)?;
    let components = wedderburn_components(&g, DEFAULT_LATTICE_CAP).map_err(|e| e.to_string())?;
    let is_cut = components.iter().all(|c| c.center.is_cut_admissible());
    if json {
        print_json(&json!({ "group": d, "order": g.order(), "is_cut": is_cut, "components": components }));
    } else {
        println!("{:<36} {:>5} {:>3}  {:<20} centre", "pair", "[H:K]", "n", "action");
        for c in &components {
            let action: Vec<String> = c.action_image.iter().map(|x| x.to_string()).collect();
            println!(
                "{:<36} {:>5} {:>3}  {:<20} {}",
                component_pair(c),
                c.index,
                c.matrix_size,
                format!("{{{}}}", action.join(",")),
                c.center
            );
        }
        println!("{} components, {}", components.len(), if is_cut { "cut" } else { "not cut" });
    }
    Ok(exit(is_cut))
}

fn height(args: &GroupArgs, json: bool) -> CliResult {
    let (d, g) = load(args)?;
    let v = central_height(&g).map_err(|e| e.to_string())?;
    if json {
        print_json(&json!({ "group": d, "order": g.order(), "height": v.height, "reason": v.reason }));
    } else {
        println!("central height {} ({:?})", v.height, v.reason);
    }
    Ok(ExitCode::SUCCESS)
}

fn camina(args: &GroupArgs, json: bool) -> CliResult {
    let (d, g) = load(args)?;
    let camina = is_camina(&g);
    if json {
        print_json(&json!({ "group": d, "order": g.order(), "is_camina": camina, "is_abelian": g.is_abelian() }));
    } else {
        println!("{}", if camina { "Camina group" } else { "not a Camina group" });
    }
    Ok(exit(camina))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CatalogItem {
    Entry(CatalogEntry),
    Bare(MetacyclicPresentation),
}

fn load_catalog(path: Option<&Path>) -> Result<Vec<CatalogEntry>, String> {
    let Some(path) = path else { return Ok(cut_metacyclic_catalog()) };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let items: Vec<CatalogItem> = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    items
        .into_iter()
        .map(|item| {
            let entry = match item {
                CatalogItem::Entry(e) => e,
                CatalogItem::Bare(p) => CatalogEntry { presentation: p, source_line: String::new() },
            };
            entry.presentation.validate().map_err(|e| format!("catalog entry {}: {e}", entry.presentation))?;
            Ok(entry)
        })
        .collect()
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, String> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    b.build().map_err(|e| e.to_string())
}

fn classify(max_n: u64, t_set: Vec<u64>, run: &RunArgs, json: bool) -> CliResult {
    let catalog = load_catalog(run.catalog.as_deref())?;
    let opts = ClassifyOptions { max_n, t_set, ..Default::default() };
    let c: Classification =
        pool(run.jobs)?.install(|| classify_cut_metacyclic(&opts, &catalog)).map_err(|e| e.to_string())?;
    if json {
        print_json(&c);
    } else {
        println!(
            "{} presentations, {} non-abelian, {} cut, {} classes",
            c.presentations_scanned,
            c.non_abelian_scanned,
            c.cut_presentations.len(),
            c.classes.len()
        );
        for class in &c.classes {
            let entries = if class.catalog_entries.is_empty() {
                "not in catalog".to_string()
            } else {
                format!("catalog {:?}", class.catalog_entries)
            };
            println!("order {:>4}  {}  {} presentations, {entries}", class.order, class.representative, class.members.len());
        }
        let diff = &c.catalog_diff;
        for d in &diff.missing {
            println!("missing: {}", d.presentation);
        }
        for d in &diff.extra {
            println!("extra: {}", d.presentation);
        }
        println!("catalog diff {}", if c.is_bijective() { "empty" } else { "non-empty" });
    }
    Ok(exit(c.is_bijective()))
}

fn verify_paper(run: &RunArgs, only: &[u8], json: bool) -> CliResult {
    if let Some(bad) = only.iter().find(|id| !CRITERIA.contains(id)) {
        return Err(format!("no check numbered {bad}"));
    }
    let catalog = load_catalog(run.catalog.as_deref())?;
    let groups = corpus();
    let reports: Vec<CriterionReport> = pool(run.jobs)?.install(|| {
        if only.is_empty() {
            run_all(&catalog, &groups)
        } else {
            only.iter().filter_map(|&id| run_criterion(id, &catalog, &groups)).collect()
        }
    });
    let passed = reports.iter().all(|r| r.passed);
    if json {
        print_json(&json!({ "passed": passed, "criteria": reports }));
    } else {
        for r in &reports {
            println!(
                "{:>2}  {}  {:<48} {:>7.1}s  {}",
                r.id,
                if r.passed { "PASS" } else { "FAIL" },
                r.title,
                r.seconds,
                r.summary
            );
            for f in &r.failures {
                println!("          {f}");
            }
        }
        let n = reports.iter().filter(|r| r.passed).count();
        println!("{n}/{} passed", reports.len());
    }
    Ok(exit(passed))
}
