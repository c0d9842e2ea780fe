//! `nck`: command-line front end for the forest Hopf algebra computations.
//!
//! Exit status: 0 ok, 1 a `verify` check failed, 2 usage error, 3 domain
//! error (bad code, composition, ...), 4 cost guard.

mod cmd;
mod render;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use nck_core::Error;
use serde_json::{json, Map, Value};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "nck",
    version,
    about = "Exact computations on plane forests, Lie idempotents and order polytopes"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest size accepted by enumerating commands.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Plane forests and their codes.
    #[command(subcommand)]
    Forest(ForestCmd),
    /// The Tamari order.
    #[command(subcommand)]
    Tamari(TamariCmd),
    /// Products and coproducts in the Y, X and C bases.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Noncommutative and quasi-symmetric functions.
    #[command(subcommand)]
    Nsym(NsymCmd),
    /// Birkhoff factorization, Catalan idempotents and the word model.
    #[command(subcommand)]
    Birkhoff(BirkhoffCmd),
    /// Classical Lie idempotents.
    #[command(subcommand)]
    Idem(IdemCmd),
    /// Order polytopes of forest posets.
    #[command(subcommand)]
    Ehrhart(EhrhartCmd),
    /// Run a named invariant suite (or `all`).
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CodeArg {
    /// Polish code: digits ("2100") or comma separated ("10,0,...").
    #[arg(long, allow_hyphen_values = true)]
    pub code: String,
    /// Read (and print) codes in reverse Polish order.
    #[arg(long)]
    pub reverse: bool,
}

#[derive(Subcommand, Debug)]
pub enum ForestCmd {
    /// Parse a code and describe the forest.
    Parse(CodeArg),
    /// All forests (or trees) with n nodes.
    List {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trees: bool,
    },
    /// Linear extensions and their ribbon shapes.
    Extensions(CodeArg),
}

#[derive(Subcommand, Debug)]
pub enum TamariCmd {
    /// Forests above the given one.
    Up(CodeArg),
    /// Forests below the given one.
    Down(CodeArg),
    /// Whether a <= b.
    Leq {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        reverse: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum HopfCmd {
    /// ΔY_F by admissible cuts.
    Coproduct(CodeArg),
    /// X_a X_b, optionally with its dendriform split.
    Product {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        split: bool,
    },
    /// C_T = sum of X_T' over T' <= T.
    Cbasis(CodeArg),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum NsymBasisArg {
    S,
    #[value(name = "L")]
    Lambda,
    R,
    #[value(name = "Rs")]
    SignedR,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alphabet {
    /// The M/F expansion itself.
    None,
    /// M_I(α) = binomial(α, ℓ(I)).
    Binomial,
    /// X_{q,t}; the opposite order with --opposite.
    Xqt,
    /// 1 < q < ... < q^n.
    Geometric,
    /// The alphabet −X.
    Minus,
    /// X_{q,t} at t = 1 + (q − 1)x.
    Chapoton,
}

#[derive(Subcommand, Debug)]
pub enum NsymCmd {
    /// Image of a basis element of NSym in the X basis.
    Embed {
        #[arg(long, value_enum)]
        basis: NsymBasisArg,
        #[arg(long = "I", id = "I")]
        i: String,
    },
    /// Change of basis in NSym.
    Convert {
        #[arg(long, value_enum)]
        basis: NsymBasisArg,
        #[arg(long = "I", id = "I")]
        i: String,
        #[arg(long, value_enum)]
        to: NsymBasisArg,
    },
    /// Γ_F in QSym, optionally evaluated on an alphabet.
    Gamma {
        #[arg(long)]
        forest: String,
        #[arg(long, value_enum, default_value_t = Alphabet::None)]
        alphabet: Alphabet,
        /// Print in the M basis instead of F.
        #[arg(long)]
        monomial: bool,
        /// Use the opposite-order alphabet (Γ' = ω(Γ)).
        #[arg(long)]
        opposite: bool,
        /// Number of letters minus one for --alphabet geometric.
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpecArg {
    /// a(z) = Σ a_k z^{k−1}.
    Generic,
    /// a(z) = a/z + b/(1−z).
    Ab,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum DBasis {
    C,
    X,
    R,
}

#[derive(Subcommand, Debug)]
pub enum BirkhoffCmd {
    /// φ⁺(Y_F).
    PhiPlus {
        #[arg(long)]
        forest: String,
        #[arg(long, value_enum, default_value_t = SpecArg::Generic)]
        spec: SpecArg,
    },
    /// φ⁻(Y_F) up to z^prec.
    PhiMinus {
        #[arg(long)]
        forest: String,
        #[arg(long, value_enum, default_value_t = SpecArg::Generic)]
        spec: SpecArg,
        #[arg(long, default_value_t = 2)]
        prec: i32,
    },
    /// Degree-n part of σ⁺ in the X basis.
    SigmaPlus {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SpecArg::Generic)]
        spec: SpecArg,
    },
    /// Degree-n part of σ⁻ up to z^prec.
    SigmaMinus {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SpecArg::Generic)]
        spec: SpecArg,
        #[arg(long, default_value_t = 2)]
        prec: i32,
    },
    /// The series C or D, degree n, in the C basis.
    Series {
        #[arg(long, value_parser = ["C", "D"])]
        which: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SpecArg::Generic)]
        spec: SpecArg,
    },
    /// The refined idempotent D_λ, λ a partition of n − 1.
    DLambda {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = DBasis::C)]
        basis: DBasis,
    },
    /// φ⁺ by recursion against the Tamari closed form, every tree with n nodes.
    ClosedForm {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SpecArg::Generic)]
        spec: SpecArg,
    },
    /// The word set W(I) (or S(I) with --refinements).
    Words {
        #[arg(long = "I", id = "I")]
        i: String,
        #[arg(long)]
        refinements: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum IdemBasis {
    S,
    R,
    X,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdemCheck {
    Primitive,
    Quasi,
}

#[derive(Subcommand, Debug)]
pub enum IdemCmd {
    /// Dynkin Ψ_n (or Ψ̄_n with --bar).
    Dynkin {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        bar: bool,
        #[arg(long, value_enum, default_value_t = IdemBasis::X)]
        basis: IdemBasis,
    },
    /// Solomon idempotent φ_n.
    Solomon {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = IdemBasis::X)]
        basis: IdemBasis,
    },
    /// Eulerian idempotent e_n^{(k)}.
    Eulerian {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = IdemBasis::X)]
        basis: IdemBasis,
    },
    /// φ_n(q) in the R basis, or at a rational value of q.
    Qsolomon {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// χ_F(t).
    Chi {
        #[arg(long)]
        forest: String,
    },
    /// Primitivity or group-algebra quasi-idempotency of Ψ_n, Ψ̄_n, φ_n
    /// and every D_λ at size n.
    Verify {
        #[arg(long, value_enum)]
        what: IdemCheck,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum EhrhartCmd {
    /// Ehrhart polynomial of the forest poset.
    Poly {
        #[arg(long)]
        forest: String,
    },
    /// Integral points of nQ (or its interior).
    Points {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        interior: bool,
    },
    /// q-count by sum of coordinates.
    Qcount {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        interior: bool,
    },
    /// The WQSym element Σ M_u (strict words with --signed).
    Wqsym {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        signed: bool,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all", value_parser = [
        "all", "hopf", "birkhoff", "dendriform", "prelie", "series-inverse", "pattern132", "idempotents",
        "qseries", "ehrhart", "words",
    ])]
    pub suite: String,
    /// Size bound (suite default when omitted).
    #[arg(long)]
    pub n: Option<usize>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CostGuard { .. } => 4,
        _ => 3,
    }
}

/// The subcommand path and every argument value (defaults included), as
/// given on the command line.
fn echo(m: &ArgMatches) -> (String, Value) {
    let mut path = Vec::new();
    let mut m = m;
    while let Some((name, sub)) = m.subcommand() {
        path.push(name.to_string());
        m = sub;
    }
    let mut params = Map::new();
    for id in m.ids() {
        let id = id.as_str();
        // argument groups are named after their (capitalized) structs
        if id == "format" || id.starts_with(|c: char| c.is_ascii_uppercase()) && id.len() > 1 {
            continue;
        }
        let Ok(Some(vals)) = m.try_get_raw(id) else {
            continue;
        };
        let vals: Vec<String> = vals.map(|v| v.to_string_lossy().into_owned()).collect();
        let v = match vals.as_slice() {
            [one] => Value::String(one.clone()),
            _ => json!(vals),
        };
        params.insert(id.to_string(), v);
    }
    (path.join(" "), Value::Object(params))
}

fn main() -> ExitCode {
    let parsed = Cli::command()
        .try_get_matches()
        .and_then(|m| Cli::from_arg_matches(&m).map(|c| (c, m)));
    let (cli, matches) = match parsed {
        Ok(p) => p,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cmd::run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => {
                    let (command, params) = echo(&matches);
                    let doc = json!({ "command": command, "params": params, "result": out.json });
                    print!("{}", nck_core::json::render(&doc));
                }
            }
            ExitCode::from(u8::from(out.failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
