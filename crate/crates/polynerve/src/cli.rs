//! The `polynerve` command line. Results go to stdout as JSON (DOT with
//! `--dot`); boolean verbs exit 0 when the property holds and 1 when it fails;
//! errors exit 2 with a message on stderr.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::construct::{gradify_with_scott, gradify_without_scott, nervify, nervify_preserving, starlike_witness, ConstructionResult};
use crate::error::{Error, Result};
use crate::geometry::{
    derived_with_budget, elementary_barycentric, elementary_farey, elementary_stellar, geometric_realization_with_budget,
    is_unimodular_complex, RationalComplex, RationalPoint,
};
use crate::io::{complex_from_json, complex_to_value, poset_from_json, poset_to_dot, poset_to_value, trace_to_value, witness_to_value};
use crate::logic::{counter_valuation, LogicSpec};
use crate::morphism::{find_isomorphism, find_up_reduction_with_budget, DEFAULT_SEARCH_BUDGET};
use crate::nerve::{iterated_nerve_with_budget, DEFAULT_NERVE_BUDGET};
use crate::poset::FinitePoset;
use crate::random::{random_rooted_poset, seeded};
use crate::signature::Signature;
use crate::starlike::{is_alpha_connected, is_alpha_diamond_connected, is_alpha_nerve_connected, starlike_tree};

/// Largest poset size `census` samples.
pub const CENSUS_SIZE_LIMIT: usize = 8;

#[derive(Parser)]
#[command(name = "polynerve", version, about = "Nerves of finite posets, starlike logics and rational subdivisions")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Common {
    /// Input file (JSON).
    #[arg(short, long)]
    input: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// k-fold nerve of a poset.
    Nerve {
        #[command(flatten)]
        io: Common,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = DEFAULT_NERVE_BUDGET)]
        budget: u64,
    },
    /// Whether a frame validates a logic ("BD:3", "SFL:2.1,1^3", "KC", or a formula).
    Validate {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        logic: String,
    },
    /// Whether a frame validates the Jankov-Fine formula of a starlike tree.
    Jankov {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        target: Signature,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Component type of a poset.
    Contype {
        #[command(flatten)]
        io: Common,
    },
    /// Whether a poset is alpha-connected (or diamond- or nerve-connected).
    Connected {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        target: Signature,
        #[arg(long, value_enum, default_value_t = Connectedness::Plain)]
        kind: Connectedness,
    },
    /// Graded frame with a p-morphism onto the input.
    Gradify {
        #[command(flatten)]
        io: Common,
        #[arg(long, value_parser = parse_lambda)]
        lambda: Lambda,
        #[arg(long)]
        dot: bool,
    },
    /// Nervified frame with a p-morphism onto the input.
    Nervify {
        #[command(flatten)]
        io: Common,
        /// Check validity of this logic instead of pointwise upset types.
        #[arg(long, value_parser = parse_lambda)]
        lambda: Option<Lambda>,
        #[arg(long)]
        dot: bool,
    },
    /// Frame whose nerve validates the starlike logic, mapping onto the input.
    Witness {
        #[command(flatten)]
        io: Common,
        #[arg(long, value_parser = parse_lambda)]
        lambda: Lambda,
        #[arg(long)]
        dot: bool,
    },
    /// Subdivide a complex.
    Subdivide {
        #[command(flatten)]
        io: Common,
        #[arg(long, value_enum, default_value_t = Subdivision::Barycentric)]
        kind: Subdivision,
        /// Rounds of barycentric subdivision.
        #[arg(short, default_value_t = 1)]
        k: usize,
        /// Vertex indices of the simplex, for `elementary` and `farey`.
        #[arg(long, value_delimiter = ',')]
        simplex: Vec<usize>,
        /// Point such as "1/2,1/3", for `stellar`.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, default_value_t = crate::geometry::DEFAULT_SIMPLEX_BUDGET)]
        budget: u64,
    },
    /// Geometric realization of a poset as a rational complex.
    Realize {
        #[command(flatten)]
        io: Common,
        #[arg(long, default_value_t = crate::geometry::DEFAULT_SIMPLEX_BUDGET)]
        budget: u64,
    },
    /// Whether two posets are isomorphic.
    Iso {
        #[command(flatten)]
        io: Common,
        /// The second poset.
        #[arg(long)]
        with: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// CSV comparing alpha-connectedness, Jankov-Fine validity and nerve-connectedness on random rooted posets.
    Census {
        /// Maximum poset size (1 to 8).
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_lambda, default_value = "2.1")]
        lambda: Lambda,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Connectedness {
    Plain,
    Diamond,
    Nerve,
}

#[derive(Clone, Copy, ValueEnum)]
enum Subdivision {
    Barycentric,
    Elementary,
    Stellar,
    Farey,
}

/// A comma-separated signature set such as `2.1,1^3`.
#[derive(Clone)]
struct Lambda(Vec<Signature>);

fn parse_lambda(s: &str) -> std::result::Result<Lambda, String> {
    Signature::parse_list(s).map(Lambda).map_err(|e| e.to_string())
}

/// What a verb produced: the text to emit and, for boolean verbs, the verdict.
struct Outcome {
    text: String,
    verdict: Option<bool>,
}

impl Outcome {
    fn json(v: Value) -> Self {
        Outcome { text: pretty(&v), verdict: v.get("result").and_then(Value::as_bool) }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_poset(path: &PathBuf) -> Result<FinitePoset> {
    poset_from_json(&read(path)?)
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { 2 };
        }
    };
    let target = match &cli.verb {
        Verb::Census { output, .. } => output.clone(),
        Verb::Nerve { io, .. }
        | Verb::Validate { io, .. }
        | Verb::Jankov { io, .. }
        | Verb::Contype { io }
        | Verb::Connected { io, .. }
        | Verb::Gradify { io, .. }
        | Verb::Nervify { io, .. }
        | Verb::Witness { io, .. }
        | Verb::Subdivide { io, .. }
        | Verb::Realize { io, .. }
        | Verb::Iso { io, .. } => io.output.clone(),
    };
    let outcome = match execute(cli.verb) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match target {
        Some(path) => std::fs::write(&path, &outcome.text).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    match outcome.verdict {
        Some(false) => 1,
        _ => 0,
    }
}

fn construction(r: &ConstructionResult, dot: bool, name: &str) -> Outcome {
    if dot {
        return Outcome { text: poset_to_dot(&r.output, name), verdict: None };
    }
    Outcome::json(json!({
        "output": poset_to_value(&r.output),
        "witness": witness_to_value(&r.witness),
        "trace": trace_to_value(&r.trace),
    }))
}

fn execute(verb: Verb) -> Result<Outcome> {
    match verb {
        Verb::Nerve { io, k, dot, budget } => {
            let f = load_poset(&io.input)?;
            let n = iterated_nerve_with_budget(&f, k, budget)?;
            if dot {
                Ok(Outcome { text: poset_to_dot(&n, "nerve"), verdict: None })
            } else {
                Ok(Outcome::json(poset_to_value(&n)))
            }
        }
        Verb::Validate { io, logic } => {
            let f = load_poset(&io.input)?;
            let spec: LogicSpec = logic.parse()?;
            let holds = spec.validated_by(&f)?;
            let mut v = json!({ "logic": logic, "result": holds });
            if let (false, LogicSpec::Formula(phi)) = (holds, &spec) {
                if let Some(val) = counter_valuation(&f, phi)? {
                    let named: serde_json::Map<String, Value> = val
                        .iter()
                        .map(|(p, set)| (p.clone(), set.ones().map(|x| f.label(x)).collect::<Vec<_>>().into()))
                        .collect();
                    v["counter_valuation"] = Value::Object(named);
                }
            }
            Ok(Outcome::json(v))
        }
        Verb::Jankov { io, target, budget } => {
            let f = load_poset(&io.input)?;
            let q = starlike_tree(&target);
            let found = find_up_reduction_with_budget(&f, &q, budget)?;
            let mut v = json!({ "target": target.to_string(), "result": found.is_none() });
            if let Some(w) = found {
                v["witness"] = witness_to_value(&w);
            }
            Ok(Outcome::json(v))
        }
        Verb::Contype { io } => {
            let f = load_poset(&io.input)?;
            Ok(Outcome::json(json!({ "con_type": f.con_type().to_string() })))
        }
        Verb::Connected { io, target, kind } => {
            let f = load_poset(&io.input)?;
            let holds = match kind {
                Connectedness::Plain => is_alpha_connected(&f, &target),
                Connectedness::Diamond => is_alpha_diamond_connected(&f, &target),
                Connectedness::Nerve => is_alpha_nerve_connected(&f, &target),
            };
            Ok(Outcome::json(json!({ "alpha": target.to_string(), "result": holds })))
        }
        Verb::Gradify { io, lambda: Lambda(lambda), dot } => {
            let f = load_poset(&io.input)?;
            let r = if lambda.contains(&Signature::scott()) {
                gradify_with_scott(&f, &lambda)?
            } else {
                gradify_without_scott(&f, &lambda)?
            };
            Ok(construction(&r, dot, "gradified"))
        }
        Verb::Nervify { io, lambda, dot } => {
            let f = load_poset(&io.input)?;
            let r = match lambda {
                Some(Lambda(l)) => nervify_preserving(&f, &l)?,
                None => nervify(&f)?,
            };
            Ok(construction(&r, dot, "nervified"))
        }
        Verb::Witness { io, lambda: Lambda(lambda), dot } => {
            let f = load_poset(&io.input)?;
            Ok(construction(&starlike_witness(&f, &lambda)?, dot, "witness"))
        }
        Verb::Subdivide { io, kind, k, simplex, point, budget } => {
            let c = complex_from_json(&read(&io.input)?)?;
            let result = match kind {
                Subdivision::Barycentric => derived_with_budget(&c, k, budget)?,
                Subdivision::Elementary => elementary_barycentric(&c, &simplex)?,
                Subdivision::Farey => elementary_farey(&c, &simplex)?,
                Subdivision::Stellar => {
                    let text = point.ok_or_else(|| Error::InvalidInput("stellar subdivision needs --point".into()))?;
                    elementary_stellar(&c, &parse_point(&text)?)?
                }
            };
            Ok(Outcome::json(complex_summary(&result)))
        }
        Verb::Realize { io, budget } => {
            let f = load_poset(&io.input)?;
            Ok(Outcome::json(complex_summary(&geometric_realization_with_budget(&f, budget)?)))
        }
        Verb::Iso { io, with, budget } => {
            let f = load_poset(&io.input)?;
            let g = load_poset(&with)?;
            let found = find_isomorphism(&f, &g, budget)?;
            let mut v = json!({ "result": found.is_some() });
            if let Some(m) = found {
                let map: serde_json::Map<String, Value> =
                    m.iter().enumerate().map(|(x, &y)| (f.label(x).to_string(), Value::from(g.label(y)))).collect();
                v["map"] = Value::Object(map);
            }
            Ok(Outcome::json(v))
        }
        Verb::Census { size, samples, seed, lambda, budget, .. } => census(size, samples, seed, &lambda.0, budget),
    }
}

fn complex_summary(c: &RationalComplex) -> Value {
    let mut v = complex_to_value(c);
    v["f_vector"] = json!(c.f_vector());
    v["unimodular"] = json!(is_unimodular_complex(c));
    v
}

fn parse_point(text: &str) -> Result<RationalPoint> {
    let coords = text
        .split(',')
        .map(|t| t.trim().parse::<BigRational>().map_err(|_| Error::InvalidInput(format!("bad rational {t:?}"))))
        .collect::<Result<_>>()?;
    Ok(RationalPoint::new(coords))
}

fn census(size: usize, samples: usize, seed: u64, lambda: &[Signature], budget: u64) -> Result<Outcome> {
    if size == 0 || size > CENSUS_SIZE_LIMIT {
        return Err(Error::InvalidInput(format!("--size must be between 1 and {CENSUS_SIZE_LIMIT}")));
    }
    if lambda.is_empty() {
        return Err(Error::InvalidInput("--lambda needs at least one signature".into()));
    }
    let mut rng = seeded(seed);
    let mut table = csv::Writer::from_writer(Vec::new());
    let write_err = |e: csv::Error| Error::InvalidInput(e.to_string());
    table.write_record(["id", "size", "alpha", "connected", "jankov", "nerve_connected", "agree"]).map_err(write_err)?;
    for id in 0..samples {
        let n = rand::Rng::gen_range(&mut rng, 1..=size);
        let f = random_rooted_poset(&mut rng, n, 0.4);
        for alpha in lambda {
            let connected = is_alpha_connected(&f, alpha);
            let jankov = find_up_reduction_with_budget(&f, &starlike_tree(alpha), budget)?.is_none();
            let nerve_connected = is_alpha_nerve_connected(&f, alpha);
            table
                .serialize((id, n, alpha.to_string(), connected, jankov, nerve_connected, connected == jankov))
                .map_err(write_err)?;
        }
    }
    let bytes = table.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(Outcome { text: String::from_utf8(bytes).expect("csv is utf-8"), verdict: None })
}
