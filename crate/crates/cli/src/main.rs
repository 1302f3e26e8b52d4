//! Command line front end: parse classes, dispatch to the ring,
//! construction, classification and obstruction operations, emit JSON.
//!
//! Exit codes: 0 on success, 2 when the answer is a mathematical negative
//! (a NotRealizable verdict or a found obstruction witness), 1 on errors.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schubert_core::classification::{realizability, realizability_searched, Status};
use schubert_core::constructions::{iterated_class_map, IteratedSpec};
use schubert_core::obstructions::{search_obstruction, ObstructionWitness, SearchBudget};
use schubert_core::partitions::enumerate_lambda;
use schubert_core::stability::{canonical_instance, transport};
use schubert_core::text::{parse_class, parse_class_product, parse_product_class};
use schubert_core::{BasisConvention, CohomologyClass, Error, GrassmannianSpec, Ring};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(
    name = "schubert",
    about = "Exact Schubert calculus and realizability on Grassmannians",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Z,
    Q,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Z => Ring::Z,
            RingArg::Q => Ring::Q,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvArg {
    Codim,
    Dim,
}

impl From<ConvArg> for BasisConvention {
    fn from(c: ConvArg) -> BasisConvention {
        match c {
            ConvArg::Codim => BasisConvention::Codim,
            ConvArg::Dim => BasisConvention::Dim,
        }
    }
}

#[derive(clap::Args, Clone)]
struct BudgetArgs {
    /// Largest number of span factors tried by the obstruction search
    #[arg(long, default_value_t = 3)]
    max_factors: usize,
    /// Largest number of ambient extension steps G(k,n) ⊂ G(k+t,n+t)
    #[arg(long, default_value_t = 2)]
    max_embed: u32,
    /// Cap on multiplier tuples per span configuration
    #[arg(long, default_value_t = 10_000)]
    alpha_cap: usize,
}

impl From<&BudgetArgs> for SearchBudget {
    fn from(b: &BudgetArgs) -> SearchBudget {
        SearchBudget {
            max_factors: b.max_factors,
            max_embed: b.max_embed,
            alpha_cap: b.alpha_cap,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply the classes given on stdin as `class * class * ...`
    Mult {
        #[arg(long = "g")]
        g: String,
    },
    /// Coefficient of the point class of the class on stdin
    Integrate {
        #[arg(long = "g")]
        g: String,
    },
    /// Image under the duality isomorphism with G(n-k,n)
    Dual {
        #[arg(long = "g")]
        g: String,
    },
    /// Reindex by complement: σ_λ ↦ σ_{λ^c}
    Complement {
        #[arg(long = "g")]
        g: String,
    },
    /// Realizability verdict for the class on stdin
    Realizable {
        #[arg(long = "g")]
        g: String,
        #[arg(long, value_enum, ignore_case = true)]
        ring: RingArg,
        /// Run the obstruction search when no theorem decides
        #[arg(long)]
        search: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Apply an iterated bundle class map to the product class on stdin
    Construct {
        /// Target Grassmannian, e.g. 3,6
        #[arg(long)]
        target: String,
        /// Strictly decreasing step sizes, e.g. 2,1
        #[arg(long = "i")]
        i: String,
        /// Block sizes, e.g. 1,1
        #[arg(long = "j")]
        j: String,
    },
    /// Canonical stable instance for degree-r classes (and the transported
    /// class, when one is given on stdin)
    Reduce {
        #[arg(long = "r")]
        r: u64,
        #[arg(long = "g")]
        g: String,
        #[arg(long, value_enum, ignore_case = true)]
        ring: RingArg,
        #[arg(long, value_enum, default_value = "codim", ignore_case = true)]
        conv: ConvArg,
    },
    /// Hodge-index obstruction search for the class on stdin
    Obstruct {
        #[arg(long = "g")]
        g: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// List the partitions of weight r in the k×(n-k) box
    Enumerate {
        #[arg(long = "r")]
        r: u64,
        #[arg(long = "g")]
        g: String,
    },
}

fn parse_pair(s: &str) -> Result<GrassmannianSpec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected k,n — got {s:?}"));
    }
    let k: u32 = parts[0]
        .trim()
        .parse()
        .map_err(|_| "k must be an integer")?;
    let n: u32 = parts[1]
        .trim()
        .parse()
        .map_err(|_| "n must be an integer")?;
    GrassmannianSpec::new(k, n).map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad entry {p:?}"))
        })
        .collect()
}

fn read_stdin() -> Result<String, String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| e.to_string())?;
    Ok(buf)
}

fn doc(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(1));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

fn space_json(g: GrassmannianSpec) -> Value {
    json!([g.k(), g.n()])
}

fn witness_json(w: &ObstructionWitness) -> Value {
    let factors: Vec<Value> = w
        .span
        .factors()
        .factors()
        .iter()
        .map(|f| json!([f.k(), f.n()]))
        .collect();
    let alpha: Vec<Value> = w.alpha.iter().map(|a| json!(a.to_string())).collect();
    let matrix: Vec<Value> = w
        .matrix
        .rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(|e| json!(e.to_string())).collect()))
        .collect();
    let (pos, zero, neg) = w.matrix.eigen_sign_counts();
    let pattern = format!("{}{}{}", "+".repeat(pos), "0".repeat(zero), "-".repeat(neg));
    let mut map = Map::new();
    map.insert("target".into(), space_json(w.span.target()));
    map.insert("factors".into(), Value::Array(factors));
    map.insert("alpha".into(), Value::Array(alpha));
    map.insert("matrix".into(), Value::Array(matrix));
    map.insert("eigen_sign_pattern".into(), json!(pattern));
    map.insert("reason".into(), json!(w.reason));
    Value::Object(map)
}

fn run(cmd: Cmd) -> Result<(Value, u8), String> {
    let fail = |e: Error| e.to_string();
    match cmd {
        Cmd::Mult { g } => {
            let g = parse_pair(&g)?;
            let factors = parse_class_product(&read_stdin()?, g).map_err(fail)?;
            let mut acc = CohomologyClass::unit(g);
            for f in &factors {
                acc = acc.multiply(f).map_err(fail)?;
            }
            Ok((
                doc(vec![
                    ("space", space_json(g)),
                    ("class", json!(acc.to_string())),
                ]),
                0,
            ))
        }
        Cmd::Integrate { g } => {
            let g = parse_pair(&g)?;
            let c = parse_class(&read_stdin()?, g).map_err(fail)?;
            Ok((
                doc(vec![
                    ("space", space_json(g)),
                    ("value", json!(c.integrate().to_string())),
                ]),
                0,
            ))
        }
        Cmd::Dual { g } => {
            let g = parse_pair(&g)?;
            let c = parse_class(&read_stdin()?, g).map_err(fail)?;
            let t = c.transpose_class().map_err(fail)?;
            Ok((
                doc(vec![
                    ("space", space_json(t.space())),
                    ("class", json!(t.to_string())),
                ]),
                0,
            ))
        }
        Cmd::Complement { g } => {
            let g = parse_pair(&g)?;
            let c = parse_class(&read_stdin()?, g).map_err(fail)?;
            let t = c.complement_reindex();
            Ok((
                doc(vec![
                    ("space", space_json(g)),
                    ("class", json!(t.to_string())),
                ]),
                0,
            ))
        }
        Cmd::Realizable {
            g,
            ring,
            search,
            budget,
        } => {
            let g = parse_pair(&g)?;
            let c = parse_class(&read_stdin()?, g).map_err(fail)?;
            let verdict = if search {
                realizability_searched(&c, ring.into(), &(&budget).into()).map_err(fail)?
            } else {
                realizability(&c, ring.into()).map_err(fail)?
            };
            let mut fields = vec![
                ("status", json!(format!("{:?}", verdict.status))),
                ("citation", json!(verdict.citation)),
            ];
            if let Some(w) = &verdict.witness {
                fields.push(("witness", witness_json(w)));
            }
            if !verdict.notes.is_empty() {
                fields.push(("notes", json!(verdict.notes)));
            }
            let code = if verdict.status == Status::NotRealizable {
                2
            } else {
                0
            };
            Ok((doc(fields), code))
        }
        Cmd::Construct { target, i, j } => {
            let target = parse_pair(&target)?;
            let spec = IteratedSpec::new(target, parse_list(&i)?, parse_list(&j)?).map_err(fail)?;
            let source = spec.source();
            let c = parse_product_class(&read_stdin()?, &source).map_err(fail)?;
            let image = iterated_class_map(&spec, &c).map_err(fail)?;
            let source_json: Vec<Value> = source
                .factors()
                .iter()
                .map(|f| json!([f.k(), f.n()]))
                .collect();
            Ok((
                doc(vec![
                    ("source", Value::Array(source_json)),
                    ("space", space_json(target)),
                    ("class", json!(image.to_string())),
                ]),
                0,
            ))
        }
        Cmd::Reduce { r, g, ring, conv } => {
            let g = parse_pair(&g)?;
            let target = canonical_instance(r, g, ring.into(), conv.into());
            let mut fields = vec![("canonical", space_json(target))];
            let text = read_stdin()?;
            if !text.trim().is_empty() {
                let c = parse_class(&text, g).map_err(fail)?;
                let w = c.homogeneous_degree().ok_or("class must be homogeneous")?;
                let degree = match BasisConvention::from(conv) {
                    BasisConvention::Codim => w,
                    BasisConvention::Dim => g.dim() - w,
                };
                if degree != r {
                    return Err(format!("class has degree {degree}, expected {r}"));
                }
                let moved = transport(&c, target, conv.into()).map_err(fail)?;
                fields.push(("class", json!(moved.to_string())));
            }
            Ok((doc(fields), 0))
        }
        Cmd::Obstruct { g, budget } => {
            let g = parse_pair(&g)?;
            let c = parse_class(&read_stdin()?, g).map_err(fail)?;
            let found = search_obstruction(&c, &(&budget).into()).map_err(fail)?;
            match found {
                Some(w) => Ok((doc(vec![("witness", witness_json(&w))]), 2)),
                None => Ok((doc(vec![("witness", Value::Null)]), 0)),
            }
        }
        Cmd::Enumerate { r, g } => {
            let g = parse_pair(&g)?;
            let parts: Vec<Value> = enumerate_lambda(r, g)
                .iter()
                .map(|p| json!(p.to_string()))
                .collect();
            Ok((
                doc(vec![
                    ("space", space_json(g)),
                    ("partitions", Value::Array(parts)),
                ]),
                0,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit with code 2, which is reserved for negatives
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.cmd) {
        Ok((value, code)) => {
            println!("{value}");
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
