//! `spinor`: build, verify and query spinor-sheaf matrix factorizations.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use spinor_core::exactalg::{LinMat, Rat, Vector};
use spinor_core::fixtures::{builtin, builtins, Fixture, BUILTIN_LABELS};
use spinor_core::homalg::{
    cohomology_dim, companion_identity_holds, hom_space, is_isomorphic, module_hom_dim, DEFAULT_SEED,
};
use spinor_core::printed_example::{certify, printed_matrices};
use spinor_core::spinor::{cone_compare, drop_vector, flag_sequence, restrict_compare};
use spinor_core::verify::{verify_fixture, Suite};
use spinor_core::{Error, IdealModule, Subspace};

#[derive(Parser)]
#[command(name = "spinor", version, about = "Spinor sheaves on singular quadrics via Clifford ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Fixture JSON file.
    #[arg(short = 'i', long = "input", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Built-in fixture label, or `all` for every built-in (verify only).
    #[arg(long, value_name = "LABEL")]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix factorization of a fixture.
    Build {
        #[command(flatten)]
        input: Input,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        input: Input,
        /// all, construction, dependence, dual, sections or stability-numerics.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Treat UNDECIDED records as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Print the JSON report instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// Answer a single question, printing one JSON record.
    ///
    /// Modules are built-in labels or fixture files, optionally suffixed with
    /// `-shift`. Kinds and arguments:
    ///   hom A B | iso A B [seed=N] | restrict A coords=0,1,.. or u=[[..]]
    ///   cone A coords=.. or u=[[..]] | cohomology A i=I t=T
    ///   flag A drop=[..] or drop-index=K
    #[command(verbatim_doc_comment)]
    Query {
        kind: String,
        #[arg(num_args = 0.., allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Certify the printed 4x4 factorization against the constructed one.
    PaperExample {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in fixtures, or print one as JSON.
    Fixtures { label: Option<String> },
}

/// Failure categories mapped onto exit codes.
enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn input_error<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Input(msg.into()))
}

fn load_file(path: &Path) -> CliResult<Fixture> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Fixture::from_json(&text)?)
}

fn load_label(label: &str) -> CliResult<Fixture> {
    builtin(label).ok_or_else(|| Failure::Input(format!("unknown fixture {label:?}; built-ins are {BUILTIN_LABELS:?}")))
}

fn load_fixtures(input: &Input) -> CliResult<Vec<Fixture>> {
    match (&input.input, &input.fixture) {
        (Some(path), _) => Ok(vec![load_file(path)?]),
        (None, Some(l)) if l == "all" => Ok(builtins()),
        (None, Some(l)) => Ok(vec![load_label(l)?]),
        (None, None) => input_error("either --input or --fixture is required"),
    }
}

fn load_single(input: &Input) -> CliResult<Fixture> {
    let mut fixtures = load_fixtures(input)?;
    if fixtures.len() != 1 {
        return input_error("this command takes a single fixture");
    }
    Ok(fixtures.remove(0))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("JSON value"));
}

fn linmat_json(m: &LinMat) -> Value {
    json!({ "rendered": m.render(), "coefficients": m.coeff() })
}

fn cmd_build(input: &Input, as_json: bool) -> CliResult {
    let fx = load_single(input)?;
    let module = IdealModule::build(&fx.space, &fx.w)?;
    let mf = module.factorization();
    let dims = json!({
        "n": fx.space.dim(),
        "rank_q": fx.space.rank(),
        "dim_w": fx.w.dim(),
        "dim_w_cap_k": mf.intersection_with_radical().dim(),
        "N": mf.size(),
        "dim_i_ev": module.ev_basis().len(),
        "dim_i_odd": module.odd_basis().len(),
    });
    if as_json {
        print_json(&json!({
            "fixture": fx.label,
            "dims": dims,
            "phi": linmat_json(mf.phi()),
            "psi": linmat_json(mf.psi()),
            "identity_holds": mf.identity_holds(),
        }));
    } else {
        println!("fixture {}", fx.label);
        println!("n = {}, rank q = {}, dim W = {}, dim W∩K = {}", dims["n"], dims["rank_q"], dims["dim_w"], dims["dim_w_cap_k"]);
        println!("N = {} (dim I_ev = {}, dim I_odd = {})", mf.size(), dims["dim_i_ev"], dims["dim_i_odd"]);
        println!("phi = {}", mf.phi().render());
        println!("psi = {}", mf.psi().render());
        for (name, lm) in [("phi", mf.phi()), ("psi", mf.psi())] {
            for (i, c) in lm.coeff().iter().enumerate() {
                if !c.is_zero() {
                    println!("{name}[x{i}] = {c:?}");
                }
            }
        }
        println!("phi psi = psi phi = q Id: {}", mf.identity_holds());
    }
    Ok(())
}

fn cmd_verify(input: &Input, suite: &str, strict: bool, seed: u64, out: Option<&Path>, as_json: bool) -> CliResult {
    let suite: Suite = suite.parse()?;
    let fixtures = load_fixtures(input)?;
    let mut reports = Vec::new();
    for fx in &fixtures {
        reports.push(verify_fixture(fx, suite, seed, strict)?);
    }
    for r in &reports {
        if as_json {
            println!("{}", r.to_json());
        } else {
            print!("{}", r.render());
        }
    }
    if let Some(path) = out {
        let text = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        };
        fs::write(path, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// A module operand: a built-in label or fixture file, optionally `-shift`ed.
struct Operand {
    name: String,
    fixture: Fixture,
    shift: bool,
}

impl Operand {
    fn parse(spec: &str) -> CliResult<Operand> {
        let (base, shift) = match spec.strip_suffix("-shift") {
            Some(b) => (b, true),
            None => (spec, false),
        };
        let fixture = if builtin(base).is_some() {
            load_label(base)?
        } else if Path::new(base).is_file() {
            load_file(Path::new(base))?
        } else {
            return input_error(format!("{spec:?} is neither a built-in fixture nor a file"));
        };
        Ok(Operand { name: spec.to_string(), fixture, shift })
    }

    fn module(&self) -> CliResult<IdealModule> {
        let m = IdealModule::build(&self.fixture.space, &self.fixture.w)?;
        Ok(if self.shift { m.shift() } else { m })
    }
}

struct QueryArgs {
    operands: Vec<Operand>,
    keys: BTreeMap<String, String>,
}

impl QueryArgs {
    fn parse(args: &[String]) -> CliResult<QueryArgs> {
        let mut operands = Vec::new();
        let mut keys = BTreeMap::new();
        for a in args {
            match a.split_once('=') {
                Some((k, v)) => {
                    if keys.insert(k.to_string(), v.to_string()).is_some() {
                        return input_error(format!("argument {k} given twice"));
                    }
                }
                None => operands.push(Operand::parse(a)?),
            }
        }
        Ok(QueryArgs { operands, keys })
    }

    fn expect(&self, operands: usize, allowed: &[&str]) -> CliResult {
        if self.operands.len() != operands {
            return input_error(format!("expected {operands} module operand(s), got {}", self.operands.len()));
        }
        if let Some(k) = self.keys.keys().find(|k| !allowed.contains(&k.as_str())) {
            return input_error(format!("unexpected argument {k}; allowed: {allowed:?}"));
        }
        Ok(())
    }

    fn parsed<T: std::str::FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        match self.keys.get(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|_| Failure::Input(format!("cannot parse {key}={v}"))),
        }
    }

    fn required<T: std::str::FromStr>(&self, key: &str) -> CliResult<T> {
        self.parsed(key)?.ok_or_else(|| Failure::Input(format!("missing argument {key}=")))
    }

    fn vectors(&self, key: &str) -> CliResult<Option<Vec<Vector>>> {
        match self.keys.get(key) {
            None => Ok(None),
            Some(v) => serde_json::from_str(v).map(Some).map_err(|e| Failure::Input(format!("{key}: {e}"))),
        }
    }

    fn vector(&self, key: &str) -> CliResult<Option<Vector>> {
        match self.keys.get(key) {
            None => Ok(None),
            Some(v) => serde_json::from_str(v).map(Some).map_err(|e| Failure::Input(format!("{key}: {e}"))),
        }
    }

    /// `coords=0,2,3` (coordinate subspace) or `u=[[1,0,..],..]` (basis vectors).
    fn subspace(&self, n: usize) -> CliResult<Subspace> {
        match (self.keys.get("coords"), self.vectors("u")?) {
            (Some(c), None) => {
                let idx = c
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| Failure::Input(format!("cannot parse coords={c}")))?;
                if let Some(&i) = idx.iter().find(|&&i| i >= n) {
                    return input_error(format!("coordinate {i} out of range for n = {n}"));
                }
                Ok(Subspace::span(n, &idx.iter().map(|&i| spinor_core::exactalg::unit_vector(n, i)).collect::<Vec<_>>()))
            }
            (None, Some(rows)) => {
                if rows.iter().any(|r| r.len() != n) {
                    return input_error(format!("u vectors must have length {n}"));
                }
                Ok(Subspace::span(n, &rows))
            }
            _ => input_error("give exactly one of coords= or u="),
        }
    }
}

fn cmd_query(kind: &str, raw: &[String]) -> CliResult {
    let q = QueryArgs::parse(raw)?;
    let record = match kind {
        "hom" => {
            q.expect(2, &[])?;
            let (a, b) = (q.operands[0].module()?.factorization(), q.operands[1].module()?.factorization());
            if a.space() != b.space() {
                return input_error("operands live over different quadratic spaces");
            }
            let hom = hom_space(&a, &b)?;
            json!({
                "query": "hom",
                "source": q.operands[0].name,
                "target": q.operands[1].name,
                "dim": hom.dim(),
                "module_hom_dim": module_hom_dim(&a, &b)?,
                "companion_identity": companion_identity_holds(&a, &b, &hom),
            })
        }
        "iso" => {
            q.expect(2, &["seed"])?;
            let seed = q.parsed("seed")?.unwrap_or(DEFAULT_SEED);
            let (a, b) = (q.operands[0].module()?.factorization(), q.operands[1].module()?.factorization());
            if a.space() != b.space() {
                return input_error("operands live over different quadratic spaces");
            }
            let v = is_isomorphic(&a, &b, seed)?;
            let mut rec = json!({ "query": "iso", "a": q.operands[0].name, "b": q.operands[1].name, "seed": seed });
            merge(&mut rec, serde_json::to_value(&v).expect("verdict serializes"));
            rec
        }
        "restrict" | "cone" => {
            q.expect(1, &["coords", "u"])?;
            let op = &q.operands[0];
            let u = q.subspace(op.fixture.space.dim())?;
            let module = op.module()?;
            let verdict = if kind == "restrict" {
                serde_json::to_value(restrict_compare(&module, &u)?)
            } else {
                serde_json::to_value(cone_compare(&module, &u)?)
            }
            .expect("verdict serializes");
            let mut rec = json!({ "query": kind, "module": op.name, "dim_u": u.dim() });
            merge(&mut rec, verdict);
            rec
        }
        "cohomology" => {
            q.expect(1, &["i", "t"])?;
            let (i, t): (usize, i64) = (q.required("i")?, q.required("t")?);
            let mf = q.operands[0].module()?.factorization();
            json!({ "query": "cohomology", "module": q.operands[0].name, "i": i, "t": t, "h": cohomology_dim(&mf, i, t)? })
        }
        "flag" => {
            q.expect(1, &["drop", "drop-index"])?;
            let op = &q.operands[0];
            let drop: Vec<Rat> = match (q.vector("drop")?, q.parsed::<usize>("drop-index")?) {
                (Some(v), None) => v,
                (None, Some(k)) => match op.fixture.w.basis().get(k) {
                    Some(v) => v.clone(),
                    None => return input_error(format!("W has no basis vector {k}")),
                },
                (None, None) => match &op.fixture.flag_drop {
                    Some(v) => v.clone(),
                    None => return input_error("give drop= or drop-index="),
                },
                _ => return input_error("give only one of drop= or drop-index="),
            };
            let w_prime = drop_vector(&op.fixture.w, &drop)?;
            let seq = flag_sequence(&op.fixture.space, &w_prime, &drop)?;
            let mut rec = json!({ "query": "flag", "module": op.name, "drop": drop });
            merge(&mut rec, serde_json::to_value(&seq.verdict).expect("verdict serializes"));
            rec
        }
        other => return input_error(format!("unknown query kind {other:?}; expected hom, iso, restrict, cone, cohomology or flag")),
    };
    print_json(&record);
    Ok(())
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn cmd_printed_example(seed: u64, as_json: bool) -> CliResult {
    let (m1, m2) = printed_matrices();
    let cert = certify(&m1, &m2, seed)?;
    let ok = cert.identity_holds && cert.equivalent;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&cert).expect("certificate serializes"));
    } else {
        println!("printed M1 = {}", m1.render());
        println!("printed M2 = {}", m2.render());
        println!("constructed phi = {}", cert.constructed_phi);
        println!("constructed psi = {}", cert.constructed_psi);
        println!("M1 M2 = M2 M1 = q Id: {}", cert.identity_holds);
        if let (Some(a), Some(b)) = (&cert.a, &cert.b) {
            let role = if cert.roles_swapped { "M2" } else { "M1" };
            println!("A phi = {role} B with");
            println!("A = {a:?}");
            println!("B = {b:?}");
            println!("det A = {}, det B = {}", cert.det_a.as_ref().unwrap(), cert.det_b.as_ref().unwrap());
        }
        println!("{}: {}", if ok { "EQUIVALENT" } else { "NOT EQUIVALENT" }, cert.detail);
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_fixtures(label: Option<&str>) -> CliResult {
    match label {
        Some(l) => println!("{}", load_label(l)?.to_json()),
        None => {
            for fx in builtins() {
                println!("{}\tn={}\tdim W={}", fx.label, fx.space.dim(), fx.w.dim());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Build { input, json } => cmd_build(input, *json),
        Command::Verify { input, suite, strict, seed, out, json } => {
            cmd_verify(input, suite, *strict, *seed, out.as_deref(), *json)
        }
        Command::Query { kind, args } => cmd_query(kind, args),
        Command::PaperExample { seed, json } => cmd_printed_example(*seed, *json),
        Command::Fixtures { label } => cmd_fixtures(label.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
