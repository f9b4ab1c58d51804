//! `tabkit`: shifted tableau switching and coefficients from the command line.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use tabkit::coeff::{self, Constraint, Identity};
use tabkit::evacuation::{evacuate, j_operation};
use tabkit::jdt::rectify_traced;
use tabkit::lattice::{is_lattice, rightmost_unprimed};
use tabkit::modified::mswitch_tableaux;
use tabkit::switching::{switch_tableaux, trace_tableaux, Filling, Switched};
use tabkit::{Cell, Error, Mode, Order, ShiftedTableau, SkewShiftedShape, StrictPartition, SwitchStep, Word};

#[derive(Parser)]
#[command(name = "tabkit", version, about = "Shifted tableau switching and shifted Littlewood-Richardson coefficients")]
struct Cli {
    /// Print ASCII pictures instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Refuse inputs with more cells than this.
    #[arg(long, global = true, env = "TABKIT_MAX_CELLS", default_value_t = 64)]
    max_cells: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rectify a skew tableau by jeu de taquin.
    Rectify(Input),
    /// Switch a pair {"s": S, "t": T} with T extending S.
    Switch(SwitchArgs),
    /// Shifted Littlewood-Richardson coefficient f (or g with --modified).
    Coeff(CoeffArgs),
    /// Run an exhaustive identity sweep.
    Verify(VerifyArgs),
    /// Lattice and LRS checks on a word such as "1 1' 2".
    Word(WordArgs),
    /// The J-operation: rectify the starred tableau.
    Jop(Input),
    /// Generalized evacuation of a normal-shape tableau.
    Evacuate(Input),
    /// Replay a switching run one switch at a time.
    Trace(SwitchArgs),
}

#[derive(Args)]
struct Input {
    /// JSON file; stdin when absent.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Standard,
    Alternate,
}

#[derive(Args)]
struct SwitchArgs {
    #[command(flatten)]
    input: Input,
    /// Use the modified switches on semistandard tableaux.
    #[arg(long)]
    modified: bool,
    #[arg(long, value_enum, default_value = "standard")]
    order: OrderArg,
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long)]
    outer: StrictPartition,
    #[arg(long, default_value = "")]
    inner: StrictPartition,
    #[arg(long)]
    weight: StrictPartition,
    /// Count modified LRS tableaux, giving g.
    #[arg(long)]
    modified: bool,
    /// Include the triple and the witnessing tableaux.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum IdentityArg {
    ProductF,
    ProductG,
    SkewQ,
    SkewP,
    Symmetry,
    /// Σ∘Σ = id on pairs of standard tableaux.
    Involution,
    /// Σ̃∘Σ̃ = id on pairs of semistandard tableaux.
    ModifiedInvolution,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    identity: Vec<IdentityArg>,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    /// Largest letter in the involution sweeps.
    #[arg(long, default_value_t = 2)]
    max_entry: usize,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct WordArgs {
    word: String,
    /// Report only the lattice property.
    #[arg(long, conflicts_with = "lrs")]
    lattice: bool,
    /// Report only whether it is an LRS word.
    #[arg(long)]
    lrs: bool,
}

enum Failure {
    Domain(Error),
    Input { kind: &'static str, message: String },
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input { kind: "malformed_json", message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input { kind: "io", message: e.to_string() }
    }
}

type Out = Result<Output, Failure>;

/// What a command prints: JSON, and the `--pretty` rendering of it.
struct Output {
    json: Value,
    pretty: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairInput {
    s: ShiftedTableau,
    t: ShiftedTableau,
}

#[derive(Serialize)]
struct CellJson {
    row: usize,
    col: usize,
    value: i32,
    primed: bool,
}

fn cells_json(f: &Filling) -> Vec<CellJson> {
    f.iter().map(|(c, l)| CellJson { row: c.row, col: c.col, value: l.value(), primed: l.is_primed() }).collect()
}

fn read_input(input: &Input) -> Result<String, Failure> {
    let mut text = String::new();
    match &input.file {
        Some(path) => text = std::fs::read_to_string(path)?,
        None => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn guard(cells: usize, limit: usize) -> Result<(), Failure> {
    if cells > limit {
        return Err(Failure::Input {
            kind: "too_large",
            message: format!("{cells} cells exceed the limit of {limit} (TABKIT_MAX_CELLS)"),
        });
    }
    Ok(())
}

fn read_tableau(input: &Input, limit: usize) -> Result<ShiftedTableau, Failure> {
    let t: ShiftedTableau = serde_json::from_str(&read_input(input)?)?;
    guard(t.shape().outer().size(), limit)?;
    Ok(t)
}

fn read_pair(input: &Input, limit: usize) -> Result<PairInput, Failure> {
    let p: PairInput = serde_json::from_str(&read_input(input)?)?;
    guard(p.s.shape().outer().size().max(p.t.shape().outer().size()), limit)?;
    Ok(p)
}

fn tableau_json(t: &ShiftedTableau) -> Value {
    serde_json::to_value(t).expect("tableaux serialize")
}

fn step_json(s: &SwitchStep) -> Value {
    serde_json::to_value(s).expect("steps serialize")
}

/// Shifted grid of arbitrary cell labels; missing cells inside the bounding rows print as `.`.
fn render_cells(labels: &[(Cell, String)]) -> String {
    let width = labels.iter().map(|(_, s)| s.len()).max().unwrap_or(1) + 1;
    let rows = labels.iter().map(|(c, _)| c.row).max().unwrap_or(0);
    let mut out = String::new();
    for i in 1..=rows {
        let last = labels.iter().filter(|(c, _)| c.row == i).map(|(c, _)| c.col).max().unwrap_or(i - 1);
        let mut line = " ".repeat(width * (i - 1));
        for j in i..=last {
            let text = labels.iter().find(|(c, _)| *c == Cell::new(i, j)).map_or(".", |(_, s)| s.as_str());
            line.push_str(&format!("{text:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn order_of(o: OrderArg) -> Order {
    match o {
        OrderArg::Standard => Order::Standard,
        OrderArg::Alternate => Order::Alternate,
    }
}

fn rectify_cmd(input: &Input, limit: usize) -> Out {
    let t = read_tableau(input, limit)?;
    let (rect, slides) = rectify_traced(&t)?;
    let slides_json: Vec<Value> = slides
        .iter()
        .map(|s| json!({ "corner": s.start_corner, "path": s.visited, "special": s.special_used }))
        .collect();
    Ok(Output {
        json: json!({ "rect": tableau_json(&rect), "slides": slides_json }),
        pretty: format!("{}after {} slides\n", rect.render(), slides.len()),
    })
}

fn switched(a: &SwitchArgs, p: &PairInput) -> Result<Switched, Failure> {
    let order = order_of(a.order);
    Ok(if a.modified { mswitch_tableaux(&p.s, &p.t, order)? } else { switch_tableaux(&p.s, &p.t, order)? })
}

fn switch_cmd(a: &SwitchArgs, limit: usize) -> Out {
    let p = read_pair(&a.input, limit)?;
    let out = switched(a, &p)?;
    let trace: Vec<Value> = out.steps.iter().map(step_json).collect();
    let mut pretty = format!("inner part:\n{}outer part:\n{}", out.inner.render(), out.outer.render());
    let kinds: Vec<String> = out.steps.iter().map(|s| format!("{}@{}", s.kind, s.cell)).collect();
    writeln!(pretty, "switches: {}", kinds.join(" ")).expect("write to string");
    Ok(Output { json: json!({ "st": tableau_json(&out.inner), "s_t": tableau_json(&out.outer), "trace": trace }), pretty })
}

fn trace_cmd(a: &SwitchArgs, limit: usize) -> Out {
    let p = read_pair(&a.input, limit)?;
    let (out, frames) = trace_tableaux(&p.s, &p.t, order_of(a.order), a.modified)?;
    let mut pretty = String::new();
    let mut frames_json = Vec::new();
    for (k, f) in frames.iter().enumerate() {
        frames_json.push(json!({
            "step": k + 1,
            "kind": f.step.kind,
            "cell": f.step.cell,
            "s": cells_json(&f.a_part),
            "t": cells_json(&f.b_part),
        }));
        let mut labels: Vec<(Cell, String)> = f.a_part.iter().map(|(&c, l)| (c, format!("{l}"))).collect();
        labels.extend(f.b_part.iter().map(|(&c, l)| (c, format!("[{l}]"))));
        writeln!(pretty, "step {}: {} at {}", k + 1, f.step.kind, f.step.cell).expect("write to string");
        pretty.push_str(&render_cells(&labels));
    }
    Ok(Output {
        json: json!({ "frames": frames_json, "st": tableau_json(&out.inner), "s_t": tableau_json(&out.outer) }),
        pretty,
    })
}

fn coeff_cmd(a: &CoeffArgs, limit: usize) -> Out {
    guard(a.outer.size(), limit)?;
    let (name, witnesses) = if a.modified {
        ("g", coeff::modified_lrs_tableaux(&a.outer, &a.inner, &a.weight))
    } else {
        ("f", coeff::lrs_tableaux(&a.outer, &a.inner, &a.weight))
    };
    let mut json = serde_json::Map::new();
    if a.list {
        json.insert("triple".into(), json!({ "outer": a.outer, "inner": a.inner, "weight": a.weight }));
    }
    json.insert(name.into(), json!(witnesses.len()));
    let mut pretty = format!("{name} = {}\n", witnesses.len());
    if a.list {
        json.insert("witnesses".into(), Value::Array(witnesses.iter().map(tableau_json).collect()));
        for w in &witnesses {
            pretty.push('\n');
            pretty.push_str(&w.render());
        }
    }
    Ok(Output { json: Value::Object(json), pretty })
}

/// `Σ∘Σ = id` (or `Σ̃∘Σ̃ = id`) on every pair `S` on `λ/ρ`, `T` on `ν/λ` with `|ν| ≤ max_size`.
fn involution_sweep(max_size: usize, max_entry: usize, modified: bool) -> (usize, Vec<String>) {
    let mode = if modified { Mode::Ssyt } else { Mode::Syt };
    let mut triples = Vec::new();
    for n in 0..=max_size {
        for nu in StrictPartition::all_of_size(n) {
            for lambda in nu.subpartitions() {
                for rho in lambda.subpartitions() {
                    triples.push((rho, lambda.clone(), nu.clone()));
                }
            }
        }
    }
    let fill = |outer: &StrictPartition, inner: &StrictPartition| {
        let shape = SkewShiftedShape::new(outer.clone(), inner.clone()).expect("nested shapes");
        coeff::enumerate_tableaux(&shape, &Constraint::MaxEntry(max_entry), mode)
    };
    let results: Vec<(usize, Vec<String>)> = triples
        .par_iter()
        .map(|(rho, lambda, nu)| {
            let (ss, ts) = (fill(lambda, rho), fill(nu, lambda));
            let mut failures = Vec::new();
            for s in &ss {
                for t in &ts {
                    let run = |s: &ShiftedTableau, t: &ShiftedTableau| {
                        let out = if modified { mswitch_tableaux(s, t, Order::Standard) } else { switch_tableaux(s, t, Order::Standard) };
                        out.map(|o| (o.inner, o.outer))
                    };
                    match run(s, t).and_then(|(a, b)| run(&a, &b)) {
                        Ok((a, b)) if a == *s && b == *t => {}
                        Ok(_) => failures.push(format!("not an involution on {nu}/{lambda}/{rho}: S={:?} T={:?}", s.reading_word().to_string(), t.reading_word().to_string())),
                        Err(e) => failures.push(format!("{nu}/{lambda}/{rho}: {e}")),
                    }
                }
            }
            (ss.len() * ts.len(), failures)
        })
        .collect();
    results.into_iter().fold((0, Vec::new()), |(n, mut f), (k, g)| {
        f.extend(g);
        (n + k, f)
    })
}

fn verify_cmd(a: &VerifyArgs, limit: usize) -> Out {
    guard(a.max_size, limit)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Failure::Input { kind: "thread_pool", message: e.to_string() })?;
    let (cases, failures) = pool.install(|| {
        let mut cases = 0;
        let mut failures = Vec::new();
        let algebraic: Vec<Identity> = a
            .identity
            .iter()
            .filter_map(|i| match i {
                IdentityArg::ProductF => Some(Identity::ProductF),
                IdentityArg::ProductG => Some(Identity::ProductG),
                IdentityArg::SkewQ => Some(Identity::SkewQ),
                IdentityArg::SkewP => Some(Identity::SkewP),
                IdentityArg::Symmetry => Some(Identity::Symmetry),
                IdentityArg::Involution | IdentityArg::ModifiedInvolution => None,
            })
            .collect();
        if !algebraic.is_empty() {
            let report = coeff::verify_identities(a.max_size, &algebraic);
            cases += report.total_cases();
            failures.extend(report.failures);
        }
        for (arg, modified) in [(IdentityArg::Involution, false), (IdentityArg::ModifiedInvolution, true)] {
            if a.identity.contains(&arg) {
                let (n, f) = involution_sweep(a.max_size, a.max_entry, modified);
                cases += n;
                failures.extend(f);
            }
        }
        (cases, failures)
    });
    if failures.is_empty() {
        Ok(Output { json: json!({ "status": "ok", "cases": cases }), pretty: format!("ok: {cases} cases\n") })
    } else {
        Err(Failure::Verify(json!({ "status": "fail", "cases": cases, "failures": failures })))
    }
}

fn word_cmd(a: &WordArgs) -> Out {
    let w: Word = a.word.parse()?;
    let check = is_lattice(&w);
    let lrs = check.lattice && rightmost_unprimed(&w);
    let mut json = serde_json::Map::new();
    json.insert("word".into(), json!(w.to_string()));
    if !a.lrs {
        json.insert("lattice".into(), json!(check.lattice));
        json.insert("violation".into(), json!(check.violation.map(|(j, i)| json!({ "position": j, "value": i }))));
    }
    if !a.lattice {
        json.insert("lrs".into(), json!(lrs));
    }
    let pretty = json.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
    Ok(Output { json: Value::Object(json), pretty })
}

fn unary(input: &Input, limit: usize, key: &str, op: fn(&ShiftedTableau) -> tabkit::Result<ShiftedTableau>) -> Out {
    let t = read_tableau(input, limit)?;
    let out = op(&t)?;
    Ok(Output { json: json!({ key: tableau_json(&out) }), pretty: out.render() })
}

fn run(cli: &Cli) -> Out {
    let limit = cli.max_cells;
    match &cli.command {
        Command::Rectify(i) => rectify_cmd(i, limit),
        Command::Switch(a) => switch_cmd(a, limit),
        Command::Coeff(a) => coeff_cmd(a, limit),
        Command::Verify(a) => verify_cmd(a, limit),
        Command::Word(a) => word_cmd(a),
        Command::Jop(i) => unary(i, limit, "j", j_operation),
        Command::Evacuate(i) => unary(i, limit, "evacuation", evacuate),
        Command::Trace(a) => trace_cmd(a, limit),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) if cli.pretty => {
            print!("{}", out.pretty);
            ExitCode::SUCCESS
        }
        Ok(out) => {
            println!("{}", out.json);
            ExitCode::SUCCESS
        }
        Err(f) => {
            let json = match f {
                Failure::Domain(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
                Failure::Input { kind, message } => json!({ "error": { "kind": kind, "message": message } }),
                Failure::Verify(v) => v,
            };
            println!("{json}");
            ExitCode::from(1)
        }
    }
}
