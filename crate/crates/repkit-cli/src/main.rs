//! `repkit` command line interface. Every subcommand prints deterministic
//! output (JSON by default, markdown tables or Graphviz DOT on request)
//! and exits 0 on success, 2 on usage errors, or 1 on computation errors
//! with the error name on stderr.

mod md;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use repkit::export;
use repkit::{
    action_matrix, build_group, cartan_null_check, character_table_seeded, colax_check,
    find_injective_homs, ft_euclidean, ft_lorentzian, induction_row, mckay_graph,
    product_module_check, restrict_spin, search_generation_groups_seeded, tensor_multiplicity,
    to_dot, verify_module_axiom, CharacterTable, GroupSpec, ImmirziParam, SpinLabel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
    Dot,
}

#[derive(Parser)]
#[command(
    name = "repkit",
    version,
    about = "Finite rotation groups, character tables, McKay/ADE graphs, and spin-label functors",
    after_help = "Group specs: Z<n> cyclic, D<n> dihedral, T/O/I polyhedral (aliases A4/S4/A5),\n\
                  prefix 2 for binary covers (2T, 2Z5), infix x for products (TxT).\n\
                  Spin flags take twice the spin: --twice-j 3 means j = 3/2.\n\
                  REPKIT_SEED overrides the diagonalization seed (default 0)."
)]
struct Cli {
    /// Output format (dot applies to `mckay` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a catalog group: order, classes, angles
    Group { spec: String },
    /// Character table of a catalog group
    Chartable { spec: String },
    /// Fusion multiplicities in Rep(Gamma); give irreps by name or index
    Fusion {
        spec: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
    },
    /// McKay graph of a binary group with its affine ADE type
    Mckay { spec: String },
    /// Restrict spin j to the group (multiplicities per irrep)
    Restrict {
        spec: String,
        #[arg(long)]
        twice_j: u32,
    },
    /// Action matrices of spins on Rep(Gamma), keyed by twice_j
    Action {
        spec: String,
        /// Single spin; omit for all admissible spins up to --twice-j-max
        #[arg(long)]
        twice_j: Option<u32>,
        #[arg(long, default_value_t = 6)]
        twice_j_max: u32,
    },
    /// Check M_j1 M_j2 = sum N(j1,j2,j3) M_j3 for all pairs up to j_max
    ModuleAxiom {
        spec: String,
        #[arg(long, default_value_t = 6)]
        twice_j_max: u32,
    },
    /// Induction multiplicities of an irrep into spins, by reciprocity
    Induce {
        spec: String,
        /// Irrep name (e.g. 3, 1') or index
        #[arg(long)]
        rho: String,
        #[arg(long, default_value_t = 6)]
        twice_j_max: u32,
    },
    /// Time-functor labels in either signature
    Timefunctor {
        #[arg(long)]
        euclidean: bool,
        #[arg(long)]
        lorentzian: bool,
        /// Euclidean input spin (twice j)
        #[arg(long)]
        twice_j: Option<u32>,
        /// Lorentzian input label (twice k)
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
    },
    /// Colax multiplicity check for a fusion channel (a, b, c)
    Colax {
        #[arg(long)]
        twice_a: u32,
        #[arg(long)]
        twice_b: u32,
        #[arg(long)]
        twice_c: u32,
    },
    /// Product-group module check over the Euclidean time functor
    ProductModule {
        spec: String,
        #[arg(long, default_value_t = 4)]
        twice_j_max: u32,
    },
    /// Brute-force injective homomorphism search g -> h
    Homs { g: String, h: String },
    /// Ample-diagram predicate; reads {"vertices", "edges"} JSON from FILE
    /// or stdin
    Ample { file: Option<PathBuf> },
    /// Scan the SO(3) catalog for the {1,1,1,3} irrep profile
    SearchGenerations {
        #[arg(long, default_value_t = 60)]
        max_order: u32,
    },
}

enum CliError {
    Usage(String),
    Computation(repkit::Error),
}

impl From<repkit::Error> for CliError {
    fn from(e: repkit::Error) -> Self {
        CliError::Computation(e)
    }
}

type CliResult = Result<String, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match std::env::var("REPKIT_SEED") {
        Ok(raw) => match raw.parse::<u64>() {
            Ok(s) => s,
            Err(_) => {
                eprintln!("error: REPKIT_SEED must be an unsigned integer, got `{raw}`");
                return ExitCode::from(2);
            }
        },
        Err(_) => 0,
    };
    match run(&cli, seed) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `repkit --help` for usage");
            ExitCode::from(2)
        }
        Err(CliError::Computation(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}

fn parse_spec(code: &str) -> Result<GroupSpec, CliError> {
    GroupSpec::parse(code).map_err(|e| CliError::Usage(e.to_string()))
}

fn table_for(code: &str, seed: u64) -> Result<CharacterTable, CliError> {
    let spec = parse_spec(code)?;
    let group = Arc::new(build_group(&spec)?);
    Ok(character_table_seeded(&group, seed)?)
}

fn irrep_index(t: &CharacterTable, name: &str) -> Result<usize, CliError> {
    t.irrep_by_name(name)
        .ok_or_else(|| CliError::Usage(format!("unknown irrep `{name}` for group {}", t.group.spec)))
}

fn render(format: Format, value: &Value, md: String) -> CliResult {
    match format {
        Format::Json => Ok(format!("{value}\n")),
        Format::Md => Ok(md),
        Format::Dot => Err(CliError::Usage("dot format only applies to `mckay`".into())),
    }
}

fn run(cli: &Cli, seed: u64) -> CliResult {
    match &cli.cmd {
        Cmd::Group { spec } => {
            let spec = parse_spec(spec)?;
            let group = build_group(&spec)?;
            render(cli.format, &export::group_json(&group), md::group(&group))
        }
        Cmd::Chartable { spec } => {
            let t = table_for(spec, seed)?;
            render(cli.format, &export::chartable_json(&t), md::chartable(&t))
        }
        Cmd::Fusion { spec, a, b, c } => {
            let t = table_for(spec, seed)?;
            fusion_command(cli.format, &t, a.as_deref(), b.as_deref(), c.as_deref())
        }
        Cmd::Mckay { spec } => {
            let t = table_for(spec, seed)?;
            let graph = mckay_graph(&t)?;
            match cli.format {
                Format::Dot => Ok(to_dot(&graph, &t.group.spec.code())),
                Format::Json => {
                    let mut value = export::mckay_json(&graph);
                    value["cartan_null"] = json!(cartan_null_check(&graph));
                    Ok(format!("{value}\n"))
                }
                Format::Md => Ok(md::mckay(&t.group.spec.code(), &graph)),
            }
        }
        Cmd::Restrict { spec, twice_j } => {
            let t = table_for(spec, seed)?;
            let j = SpinLabel::from_twice(*twice_j);
            let mults = restrict_spin(&t, j)?;
            render(
                cli.format,
                &export::restriction_json(&t, *twice_j, &mults),
                md::restriction(&t, j, &mults),
            )
        }
        Cmd::Action { spec, twice_j, twice_j_max } => {
            let t = table_for(spec, seed)?;
            let spins: Vec<SpinLabel> = match twice_j {
                Some(tj) => vec![SpinLabel::from_twice(*tj)],
                None => repkit::admissible_spins(&t, SpinLabel::from_twice(*twice_j_max))?,
            };
            let matrices: Vec<_> = spins
                .iter()
                .map(|&j| action_matrix(&t, j))
                .collect::<Result<_, _>>()?;
            render(
                cli.format,
                &export::action_matrices_json(&t, &matrices),
                md::action(&t, &matrices),
            )
        }
        Cmd::ModuleAxiom { spec, twice_j_max } => {
            let t = table_for(spec, seed)?;
            let report = verify_module_axiom(&t, SpinLabel::from_twice(*twice_j_max))?;
            render(cli.format, &export::module_axiom_json(&report), md::module_axiom(&report))
        }
        Cmd::Induce { spec, rho, twice_j_max } => {
            let t = table_for(spec, seed)?;
            let rho = irrep_index(&t, rho)?;
            let row = induction_row(&t, rho, SpinLabel::from_twice(*twice_j_max))?;
            render(cli.format, &export::induction_json(&t, &row), md::induction(&t, &row))
        }
        Cmd::Timefunctor { euclidean, lorentzian, twice_j, k, gamma } => {
            timefunctor_command(cli.format, *euclidean, *lorentzian, *twice_j, *k, *gamma)
        }
        Cmd::Colax { twice_a, twice_b, twice_c } => {
            let report = colax_check(
                SpinLabel::from_twice(*twice_a),
                SpinLabel::from_twice(*twice_b),
                SpinLabel::from_twice(*twice_c),
            );
            render(cli.format, &export::colax_json(&report), md::colax(&report))
        }
        Cmd::ProductModule { spec, twice_j_max } => {
            let t = table_for(spec, seed)?;
            let report = product_module_check(&t, SpinLabel::from_twice(*twice_j_max))?;
            render(
                cli.format,
                &export::product_module_json(&report),
                md::product_module(&report),
            )
        }
        Cmd::Homs { g, h } => {
            let sg = parse_spec(g)?;
            let sh = parse_spec(h)?;
            let gg = build_group(&sg)?;
            let gh = build_group(&sh)?;
            let search = find_injective_homs(&gg, &gh)?;
            render(cli.format, &export::homs_json(&search), md::homs(&search))
        }
        Cmd::Ample { file } => {
            let text = match file {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
                    buf
                }
            };
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("diagram JSON: {e}")))?;
            let diagram = export::diagram_from_json(&value)?;
            render(cli.format, &export::ample_json(&diagram), md::ample(&diagram))
        }
        Cmd::SearchGenerations { max_order } => {
            let hits = search_generation_groups_seeded(*max_order as usize, seed)?;
            let names: Vec<String> = hits.iter().map(|s| s.name()).collect();
            render(cli.format, &json!(names), md::search_generations(&names))
        }
    }
}

fn fusion_command(
    format: Format,
    t: &CharacterTable,
    a: Option<&str>,
    b: Option<&str>,
    c: Option<&str>,
) -> CliResult {
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => {
            let (ia, ib, ic) = (irrep_index(t, a)?, irrep_index(t, b)?, irrep_index(t, c)?);
            let m = tensor_multiplicity(t, ia, ib, ic)?;
            let value = json!({
                "group": t.group.spec.code(),
                "a": t.irreps[ia].name,
                "b": t.irreps[ib].name,
                "c": t.irreps[ic].name,
                "multiplicity": m,
            });
            render(format, &value, md::fusion_triple(t, ia, ib, ic, m))
        }
        (Some(a), Some(b), None) => {
            let (ia, ib) = (irrep_index(t, a)?, irrep_index(t, b)?);
            let comps = fusion_components(t, ia, ib)?;
            let value = json!({
                "group": t.group.spec.code(),
                "a": t.irreps[ia].name,
                "b": t.irreps[ib].name,
                "components": comps.iter().map(|(n, m)| json!([n, m])).collect::<Vec<_>>(),
            });
            render(format, &value, md::fusion_pair(t, ia, ib, &comps))
        }
        (None, None, None) => {
            let mut rows = Vec::new();
            for ia in 0..t.irreps.len() {
                for ib in ia..t.irreps.len() {
                    rows.push((ia, ib, fusion_components(t, ia, ib)?));
                }
            }
            let value = json!({
                "group": t.group.spec.code(),
                "table": rows.iter().map(|(ia, ib, comps)| json!({
                    "a": t.irreps[*ia].name,
                    "b": t.irreps[*ib].name,
                    "components": comps.iter().map(|(n, m)| json!([n, m])).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            render(format, &value, md::fusion_table(t, &rows))
        }
        _ => Err(CliError::Usage(
            "fusion takes either no irreps, --a and --b, or --a, --b and --c".into(),
        )),
    }
}

/// Nonzero components of a (x) b as (name, multiplicity) pairs.
fn fusion_components(
    t: &CharacterTable,
    a: usize,
    b: usize,
) -> Result<Vec<(String, u32)>, CliError> {
    let mut comps = Vec::new();
    for c in 0..t.irreps.len() {
        let m = tensor_multiplicity(t, a, b, c)?;
        if m > 0 {
            comps.push((t.irreps[c].name.clone(), m));
        }
    }
    Ok(comps)
}

fn timefunctor_command(
    format: Format,
    euclidean: bool,
    lorentzian: bool,
    twice_j: Option<u32>,
    k: Option<u32>,
    gamma: Option<f64>,
) -> CliResult {
    match (euclidean, lorentzian) {
        (true, false) => {
            let twice_j = twice_j
                .ok_or_else(|| CliError::Usage("--euclidean needs --twice-j".into()))?;
            let label = ft_euclidean(SpinLabel::from_twice(twice_j));
            render(format, &export::euclidean_json(&label), md::euclidean(&label))
        }
        (false, true) => {
            let k = k.ok_or_else(|| CliError::Usage("--lorentzian needs --k (twice k)".into()))?;
            let gamma =
                gamma.ok_or_else(|| CliError::Usage("--lorentzian needs --gamma".into()))?;
            let label = ft_lorentzian(SpinLabel::from_twice(k), ImmirziParam::new(gamma))?;
            render(format, &export::lorentzian_json(&label), md::lorentzian(&label))
        }
        _ => Err(CliError::Usage(
            "timefunctor needs exactly one of --euclidean or --lorentzian".into(),
        )),
    }
}
