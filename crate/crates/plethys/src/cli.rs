//! The `plethys` command-line front end: one operation per invocation, JSON
//! in, a single JSON document out on stdout, diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 schema errors (bad flags or malformed input
//! documents), 2 domain errors (non-membership, failed preconditions), 3
//! exhausted enumeration budgets.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use plethys_core::biring::{self, BiringError};
use plethys_core::ivpoly::{IvPoly, IvPolyError, DEFAULT_COMPOSE_CAP};
use plethys_core::lambda::{self, LambdaError, LambdaTables};
use plethys_core::plethory::{self, PlethoryError, DEFAULT_WPC_BOUND};
use plethys_core::witt::{self, WittError, DEFAULT_BUDGET};
use plethys_core::{BigInt, Rat};
use serde_json::{json, Value};

use crate::json;
use crate::suite;

#[derive(Parser)]
#[command(
    name = "plethys",
    version,
    about = "Exact algebra on integer-valued polynomials: co-operations, composition, WPC closures, Witt evaluation homomorphisms, and truncated big-Witt fixed points"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Convert between the monomial basis (rational coefficients) and the
    /// binomial basis, by the forward-difference criterion
    Expand {
        /// Inline JSON document (monomial form {"coeffs": [...]}, binomial
        /// form {"basis": "binomial", ...})
        #[arg(long)]
        poly: Option<String>,
        /// File holding the document; "-" reads stdin
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Expansion of f(X+Y) in the product-binomial basis
    Coadd {
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Expansion of f(XY) in the product-binomial basis
    Comul {
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Plethystic composition f(g(X))
    Compose {
        /// Outer polynomial f (binomial-basis JSON)
        #[arg(long)]
        poly: Option<String>,
        /// Inner polynomial g (binomial-basis JSON)
        #[arg(long = "with")]
        with: String,
        /// Cap on the composed degree
        #[arg(long, default_value_t = DEFAULT_COMPOSE_CAP)]
        cap: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Membership of a rational polynomial in Int(Z^n), with its
    /// product-binomial expansion on success
    Member {
        #[arg(long)]
        poly: Option<String>,
        /// Expected arity; validated against the document when given
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bounded WPC verdict for an order
    WpcCheck {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Inline order JSON
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = DEFAULT_WPC_BOUND)]
        bound: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Iterative weak-polynomial-completion closure from below
    WLower {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = DEFAULT_WPC_BOUND)]
        bound: usize,
        /// Maximum closure passes
        #[arg(long, default_value_t = 4)]
        iters: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Largest WPC subring reachable from a candidate list
    WUpper {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        order: Option<String>,
        /// JSON array of coordinate vectors, e.g. [["0","1"],["1","0"]]
        #[arg(long)]
        candidates: String,
        #[arg(long, default_value_t = DEFAULT_WPC_BOUND)]
        bound: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Product-binomial expansion check for every grid basis member of
    /// Int(Z^arity) up to the degree, with a doubled-grid oracle
    ThetaCheck {
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = biring::DEFAULT_VAR_DEGREE_CAP)]
        cap: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Structure axiom batteries
    Axioms {
        #[arg(long)]
        degree: usize,
        /// Which battery: biring or plethory
        #[arg(long, default_value = "biring")]
        kind: String,
        /// Sample count for the relation checks (plethory battery)
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply an evaluation homomorphism to a polynomial
    WittEval {
        #[arg(long)]
        prime: u64,
        /// Target exponent k (codomain Z/p^k)
        #[arg(long)]
        exponent: u32,
        /// Degree capability d
        #[arg(long)]
        degree: u32,
        /// Residue of the p-adic evaluation point
        #[arg(long)]
        alpha: String,
        /// Precision M of the residue; defaults to the minimal k + v_p(d!)
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force census of evaluation homomorphisms into Z/p^k
    WittCensus {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        exponent: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Symbolic checks behind the torsion-freeness argument at a prime
    TorsionCheck {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Adams-fixed series and the embedded binomial series in Z/p^k
    BinFixed {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        exponent: u32,
        /// Truncation length N
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Match the embedded series against the Witt hom census at k = 1
    BinCompare {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification battery: "acceptance" or "quick"
    Suite {
        name: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

pub enum Failure {
    /// Exit 1: bad flags or malformed documents.
    Schema(String),
    /// Exit 2: a domain error; the document describes it.
    Domain(Value),
    /// Exit 3: an enumeration budget was exceeded.
    Budget(Value),
}

impl From<json::JsonError> for Failure {
    fn from(e: json::JsonError) -> Self {
        Failure::Schema(e.to_string())
    }
}

fn domain_doc(kind: &str, message: String, witness: Value) -> Value {
    json!({
        "schema_version": json::SCHEMA_VERSION,
        "error": {"kind": kind, "message": message},
        "witness": witness,
    })
}

impl From<IvPolyError> for Failure {
    fn from(e: IvPolyError) -> Self {
        match &e {
            IvPolyError::NotIntegerValued { witness } => Failure::Domain(domain_doc(
                "NotIntegerValued",
                e.to_string(),
                Value::String(witness.to_string()),
            )),
            IvPolyError::DegreeExceeded { .. } => {
                Failure::Domain(domain_doc("DegreeExceeded", e.to_string(), Value::Null))
            }
        }
    }
}

impl From<BiringError> for Failure {
    fn from(e: BiringError) -> Self {
        let kind = match &e {
            BiringError::NotIntegerValued { .. } => "NotIntegerValued",
            BiringError::DegreeExceeded { .. } => "DegreeExceeded",
            BiringError::ThetaObstruction { .. } => "ThetaObstruction",
            BiringError::NonIntegerPolynomial => "NonIntegerPolynomial",
            BiringError::ArityMismatch { .. } => "ArityMismatch",
        };
        let witness = match &e {
            BiringError::NotIntegerValued { witness } => Value::Array(
                witness.iter().map(|w| Value::String(w.to_string())).collect(),
            ),
            _ => Value::Null,
        };
        Failure::Domain(domain_doc(kind, e.to_string(), witness))
    }
}

impl From<PlethoryError> for Failure {
    fn from(e: PlethoryError) -> Self {
        let kind = match &e {
            PlethoryError::NotWpc { .. } => "NotWpc",
            PlethoryError::ActionEscape { .. } => "ActionEscape",
            PlethoryError::ClosureEscape { .. } => "ClosureEscape",
            PlethoryError::ClosureDiverged => "ClosureDiverged",
            PlethoryError::RankEscape => "RankEscape",
            PlethoryError::Lattice(_) => "DimensionMismatch",
        };
        Failure::Domain(domain_doc(kind, e.to_string(), Value::Null))
    }
}

impl From<WittError> for Failure {
    fn from(e: WittError) -> Self {
        match &e {
            WittError::BudgetExceeded { .. } => {
                Failure::Budget(domain_doc("BudgetExceeded", e.to_string(), Value::Null))
            }
            WittError::NotPrime(_) => Failure::Schema(e.to_string()),
            _ => {
                let kind = match &e {
                    WittError::PrecisionInsufficient { .. } => "PrecisionInsufficient",
                    WittError::DegreeExceeded { .. } => "DegreeExceeded",
                    WittError::ParameterMismatch => "ParameterMismatch",
                    _ => unreachable!(),
                };
                Failure::Domain(domain_doc(kind, e.to_string(), Value::Null))
            }
        }
    }
}

impl From<LambdaError> for Failure {
    fn from(e: LambdaError) -> Self {
        match &e {
            LambdaError::BudgetExceeded { .. } => {
                Failure::Budget(domain_doc("BudgetExceeded", e.to_string(), Value::Null))
            }
            LambdaError::Witt(w) => Failure::from(w.clone()),
            LambdaError::InvalidModulus => Failure::Schema(e.to_string()),
            _ => {
                let kind = match &e {
                    LambdaError::PrecisionInsufficient { .. } => "PrecisionInsufficient",
                    LambdaError::ParameterMismatch => "ParameterMismatch",
                    LambdaError::NonIntegralTable { .. } => "NonIntegralTable",
                    _ => unreachable!(),
                };
                Failure::Domain(domain_doc(kind, e.to_string(), Value::Null))
            }
        }
    }
}

fn read_document(
    inline: &Option<String>,
    input: &Option<PathBuf>,
    what: &str,
) -> Result<Value, Failure> {
    let text = match (inline, input) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => {
            if path.as_os_str() == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::Schema(format!("reading stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| Failure::Schema(format!("reading {}: {e}", path.display())))?
            }
        }
        (None, None) => {
            return Err(Failure::Schema(format!(
                "{what}: provide the document inline or via --input FILE"
            )))
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Schema(format!("{what}: invalid JSON: {e}")))
}

fn read_order(
    order: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<plethys_core::plethory::FinOrder, Failure> {
    let doc = read_document(order, input, "order")?;
    Ok(json::fin_order_from_json(&doc)?)
}

fn budget_or_env(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("PLETHYS_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

fn parse_rat_vectors(text: &str) -> Result<Vec<Vec<Rat>>, Failure> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Failure::Schema(format!("candidates: invalid JSON: {e}")))?;
    let arr = value
        .as_array()
        .ok_or_else(|| Failure::Schema("candidates: expected an array of vectors".into()))?;
    let mut out = Vec::with_capacity(arr.len());
    for (i, v) in arr.iter().enumerate() {
        let inner = v
            .as_array()
            .ok_or_else(|| Failure::Schema(format!("candidates/{i}: expected a vector")))?;
        let mut vec = Vec::with_capacity(inner.len());
        for (j, x) in inner.iter().enumerate() {
            let s = x
                .as_str()
                .ok_or_else(|| Failure::Schema(format!("candidates/{i}/{j}: expected a string")))?;
            vec.push(json::rat_from_str(s, &format!("/candidates/{i}/{j}"))?);
        }
        out.push(vec);
    }
    Ok(out)
}

/// Runs one command to a JSON document. The exit path (including writing the
/// document) is handled by [`main_entry`].
pub fn execute(command: &Command) -> Result<(Value, Option<PathBuf>, i32), Failure> {
    match command {
        Command::Expand { poly, input, output } => {
            let doc = read_document(poly, input, "poly")?;
            let obj = doc
                .as_object()
                .ok_or_else(|| Failure::Schema("poly: expected an object".into()))?;
            let out = if obj.contains_key("basis") {
                let f = json::ivpoly_from_json(&doc)?;
                json::ratpoly_to_json(&f.to_rational_poly())
            } else {
                let f = json::ratpoly_from_json(&doc)?;
                let iv = IvPoly::from_rational_poly(&f)?;
                json::ivpoly_to_json(&iv)
            };
            Ok((out, output.clone(), 0))
        }
        Command::Coadd { poly, input, output } => {
            let f = json::ivpoly_from_json(&read_document(poly, input, "poly")?)?;
            Ok((json::tensor_to_json(&biring::coadd(&f)), output.clone(), 0))
        }
        Command::Comul { poly, input, output } => {
            let f = json::ivpoly_from_json(&read_document(poly, input, "poly")?)?;
            Ok((json::tensor_to_json(&biring::comul(&f)), output.clone(), 0))
        }
        Command::Compose { poly, with, cap, input, output } => {
            let f = json::ivpoly_from_json(&read_document(poly, input, "poly")?)?;
            let g = json::ivpoly_from_json(
                &serde_json::from_str(with)
                    .map_err(|e| Failure::Schema(format!("with: invalid JSON: {e}")))?,
            )?;
            let h = f.compose_capped(&g, *cap)?;
            Ok((json::ivpoly_to_json(&h), output.clone(), 0))
        }
        Command::Member { poly, arity, input, output } => {
            let f = json::multipoly_from_json(&read_document(poly, input, "poly")?)?;
            if let Some(expected) = arity {
                if f.arity() != *expected {
                    return Err(Failure::Schema(format!(
                        "arity: document has arity {}, flag says {}",
                        f.arity(),
                        expected
                    )));
                }
            }
            let t = biring::int_zn_member(&f)?;
            Ok((json::tensor_to_json(&t), output.clone(), 0))
        }
        Command::WpcCheck { input, order, bound, output } => {
            let a = read_order(order, input)?;
            let verdict = plethory::is_wpc(&a, *bound);
            Ok((json::wpc_verdict_to_json(&verdict, *bound), output.clone(), 0))
        }
        Command::WLower { input, order, bound, iters, output } => {
            let a = read_order(order, input)?;
            let out = plethory::w_lower(&a, *bound, *iters)?;
            Ok((json::w_lower_to_json(&out, *bound, *iters), output.clone(), 0))
        }
        Command::WUpper { input, order, candidates, bound, output } => {
            let a = read_order(order, input)?;
            let cands = parse_rat_vectors(candidates)?;
            let r = plethory::w_upper(&a, &cands, *bound)?;
            Ok((json::fin_order_to_json(&r), output.clone(), 0))
        }
        Command::ThetaCheck { arity, degree, cap, output } => {
            if *arity < 2 || *degree < 1 {
                return Err(Failure::Schema(
                    "theta-check needs --arity >= 2 and --degree >= 1".into(),
                ));
            }
            let report = biring::theta_check(*arity, *degree, *cap)?;
            Ok((json::theta_report_to_json(&report), output.clone(), 0))
        }
        Command::Axioms { degree, kind, samples, output } => {
            let report = match kind.as_str() {
                "biring" => biring::verify_biring_axioms(*degree),
                "plethory" => plethory::verify_plethory_axioms(*degree, *samples, 0xa110),
                other => {
                    return Err(Failure::Schema(format!(
                        "kind: expected \"biring\" or \"plethory\", got {other:?}"
                    )))
                }
            };
            Ok((json::axiom_report_to_json(&report), output.clone(), 0))
        }
        Command::WittEval {
            prime,
            exponent,
            degree,
            alpha,
            precision,
            poly,
            input,
            output,
        } => {
            let residue = alpha
                .parse::<BigInt>()
                .map_err(|_| Failure::Schema(format!("alpha: not an integer: {alpha:?}")))?;
            let m = precision.unwrap_or(*exponent + witt::vp_factorial(*prime, *degree));
            let trunc = witt::PadicTrunc::new(*prime, m, residue)?;
            let hom = witt::EvalHom::new(trunc, *exponent, *degree)?;
            let f = json::ivpoly_from_json(&read_document(poly, input, "poly")?)?;
            let value = hom.apply(&f)?;
            Ok((json::modint_to_json(&value), output.clone(), 0))
        }
        Command::WittCensus { prime, exponent, degree, budget, output } => {
            let report = witt::hom_census(*prime, *exponent, *degree, budget_or_env(*budget))?;
            Ok((json::census_to_json(&report), output.clone(), 0))
        }
        Command::TorsionCheck { prime, output } => {
            let report = witt::torsion_argument_check(*prime)?;
            Ok((json::torsion_to_json(&report), output.clone(), 0))
        }
        Command::BinFixed { prime, exponent, bound, budget, output } => {
            let m = prime
                .checked_pow(*exponent)
                .ok_or_else(|| Failure::Schema("modulus p^k overflows".into()))?;
            let tables = LambdaTables::new(*bound)?;
            let report = lambda::bin_fixed_points(&tables, m, budget_or_env(*budget))?;
            Ok((json::bin_fixed_to_json(&report), output.clone(), 0))
        }
        Command::BinCompare { prime, bound, budget, output } => {
            let tables = LambdaTables::new(*bound)?;
            let report = lambda::bin_compare_witt(*prime, &tables, budget_or_env(*budget))?;
            Ok((json::bin_compare_to_json(&report), output.clone(), 0))
        }
        Command::Suite { name, output } => {
            let outcomes = match name.as_str() {
                "acceptance" => suite::run_acceptance(),
                "quick" => suite::run_quick(),
                other => {
                    return Err(Failure::Schema(format!(
                        "suite: expected \"acceptance\" or \"quick\", got {other:?}"
                    )))
                }
            };
            let all_passed = outcomes.iter().all(|o| o.passed());
            let results: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "id": o.id,
                        "name": o.name,
                        "passed": o.passed(),
                        "millis": o.millis as u64,
                        "limit_ms": o.limit_ms as u64,
                        "detail": o.detail,
                    })
                })
                .collect();
            let doc = json!({
                "schema_version": json::SCHEMA_VERSION,
                "suite": name,
                "verdict": if all_passed { "pass" } else { "fail" },
                "results": results,
            });
            Ok((doc, output.clone(), if all_passed { 0 } else { 2 }))
        }
    }
}

fn write_out(doc: &Value, output: &Option<PathBuf>) -> i32 {
    let text = json::to_output_string(doc);
    match output {
        None => {
            print!("{text}");
            0
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("plethys: writing {}: {e}", path.display());
                1
            }
        },
    }
}

/// Full process entry: parses arguments, runs, writes, and returns the exit
/// code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successes, anything else is a schema error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((doc, output, code)) => {
            let write_code = write_out(&doc, &output);
            if write_code != 0 {
                write_code
            } else {
                code
            }
        }
        Err(Failure::Schema(message)) => {
            eprintln!("plethys: schema error: {message}");
            1
        }
        Err(Failure::Domain(doc)) => {
            print!("{}", json::to_output_string(&doc));
            2
        }
        Err(Failure::Budget(doc)) => {
            print!("{}", json::to_output_string(&doc));
            3
        }
    }
}
