use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cliff_bundle::checks::{self, SuiteOptions};
use cliff_bundle::clifford::{
    bl_map, blade_indices, exp_contract, quantize, symbol, twisted_mul, CliffordContext,
};
use cliff_bundle::json::{
    bilinear_from_json, cliff_from_json, cliff_to_json, quadratic_from_json, quadratic_to_json,
    two_form_from_json, BilinearFormJson, BladeTermsJson, QuadraticFormJson,
};
use cliff_bundle::repcheck::rho_matrix;
use cliff_bundle::{BilinearForm, DualTwoForm, Error, FieldSpec, QuadraticForm};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

const SCHEMA: &str = "cliff-bundle/1";

#[derive(Parser)]
#[command(name = "cliff-bundle", version, about = "Exact Clifford algebra computations, JSON in and out")]
struct Cli {
    /// Field for forms that do not name one: Q or Fp:<p>
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Expected dimension; payloads of another dimension are rejected
    #[arg(long, global = true)]
    dim: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Read the payload from this file instead of standard input
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two elements of Cl(Q)
    Product,
    /// Apply bl_F: Cl(Q + Q_F) → Cl(Q)
    Deform,
    /// Pfaffian of an alternating form
    Pfaffian,
    /// Symbol map Cl(Q) → Λ(V)
    Symbol,
    /// Quantization map Λ(V) → Cl(Q)
    Quantize,
    /// Twisted product left ∘_F right on Cl(Q)
    Twist,
    /// exp of the contraction by a dual two-form
    ExpContract,
    /// Matrix of ρ_F(u) on Λ(V)
    Rho,
    /// Run a named identity suite; lists the suites when no id is given
    Check { suite: Option<String> },
}

enum Failure {
    Malformed(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_malformed_input() {
            Failure::Malformed(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

type Outcome<T> = Result<T, Failure>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductIn {
    quadratic: QuadraticFormJson,
    left: BladeTermsJson,
    right: BladeTermsJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DeformIn {
    quadratic: QuadraticFormJson,
    bilinear: BilinearFormJson,
    element: BladeTermsJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PfaffianIn {
    bilinear: BilinearFormJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementIn {
    quadratic: QuadraticFormJson,
    element: BladeTermsJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TwistIn {
    quadratic: QuadraticFormJson,
    bilinear: BilinearFormJson,
    left: BladeTermsJson,
    right: BladeTermsJson,
}

/// The two-form either as 2-blade terms or as an alternating matrix.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpIn {
    quadratic: QuadraticFormJson,
    #[serde(default)]
    dual_two_form: Option<BladeTermsJson>,
    #[serde(default)]
    alternating: Option<BilinearFormJson>,
    element: BladeTermsJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RhoIn {
    bilinear: BilinearFormJson,
    element: BladeTermsJson,
}

struct Env {
    field: FieldSpec,
    dim: Option<usize>,
}

impl Env {
    fn quadratic(&self, j: &QuadraticFormJson) -> Outcome<QuadraticForm> {
        let q = quadratic_from_json(j, self.field)?;
        self.check_dim(q.ctx().dim())?;
        Ok(q)
    }

    fn bilinear(&self, j: &BilinearFormJson) -> Outcome<BilinearForm> {
        let f = bilinear_from_json(j)?;
        self.check_dim(f.ctx().dim())?;
        Ok(f)
    }

    fn check_dim(&self, got: usize) -> Outcome<()> {
        match self.dim {
            Some(expected) if expected != got => {
                Err(Error::DimensionMismatch { expected, got }.into())
            }
            _ => Ok(()),
        }
    }
}

fn read_payload<T: DeserializeOwned>(input: &Option<PathBuf>) -> Outcome<T> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Malformed(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("invalid payload: {e}")))
}

fn quadratic_json(q: &QuadraticForm) -> Value {
    serde_json::to_value(quadratic_to_json(q)).expect("serializable")
}

fn element_json(e: &cliff_bundle::clifford::CliffElt) -> Value {
    serde_json::to_value(cliff_to_json(e)).expect("serializable")
}

fn run(cli: &Cli) -> Outcome<Value> {
    let env = Env {
        field: cli.field.unwrap_or(FieldSpec::Rationals),
        dim: cli.dim,
    };
    let input = &cli.input;
    let out = match &cli.command {
        Command::Product => {
            let p: ProductIn = read_payload(input)?;
            let cctx = CliffordContext::new(env.quadratic(&p.quadratic)?);
            let left = cliff_from_json(&p.left, &cctx)?;
            let right = cliff_from_json(&p.right, &cctx)?;
            json!({ "result": element_json(&left.mul(&right)?) })
        }
        Command::Deform => {
            let p: DeformIn = read_payload(input)?;
            let target = CliffordContext::new(env.quadratic(&p.quadratic)?);
            let f = env.bilinear(&p.bilinear)?;
            let source = target.deformed(&f)?;
            let w = cliff_from_json(&p.element, &source)?;
            json!({
                "source_quadratic": quadratic_json(source.quadratic()),
                "result": element_json(&bl_map(&f, &target, &w)?),
            })
        }
        Command::Pfaffian => {
            let p: PfaffianIn = read_payload(input)?;
            let a = env.bilinear(&p.bilinear)?;
            json!({ "pfaffian": a.pfaffian()?.to_string() })
        }
        Command::Symbol => {
            let p: ElementIn = read_payload(input)?;
            let cctx = CliffordContext::new(env.quadratic(&p.quadratic)?);
            let w = cliff_from_json(&p.element, &cctx)?;
            json!({ "result": element_json(&symbol(&w)?) })
        }
        Command::Quantize => {
            let p: ElementIn = read_payload(input)?;
            let cctx = CliffordContext::new(env.quadratic(&p.quadratic)?);
            let ext = CliffordContext::exterior(*cctx.base());
            let w = cliff_from_json(&p.element, &ext)?;
            json!({ "result": element_json(&quantize(&cctx, &w)?) })
        }
        Command::Twist => {
            let p: TwistIn = read_payload(input)?;
            let cctx = CliffordContext::new(env.quadratic(&p.quadratic)?);
            let f = env.bilinear(&p.bilinear)?;
            let left = cliff_from_json(&p.left, &cctx)?;
            let right = cliff_from_json(&p.right, &cctx)?;
            json!({ "result": element_json(&twisted_mul(&f, &left, &right)?) })
        }
        Command::ExpContract => {
            let p: ExpIn = read_payload(input)?;
            let cctx = CliffordContext::new(env.quadratic(&p.quadratic)?);
            let ctx = *cctx.base();
            let astar = match (&p.dual_two_form, &p.alternating) {
                (Some(d), None) => two_form_from_json(d, ctx)?,
                (None, Some(a)) => DualTwoForm::from_alternating(&env.bilinear(a)?)?,
                _ => {
                    return Err(Failure::Malformed(
                        "give exactly one of \"dual_two_form\" and \"alternating\"".into(),
                    ))
                }
            };
            let w = cliff_from_json(&p.element, &cctx)?;
            json!({ "result": element_json(&exp_contract(&astar, &w)?) })
        }
        Command::Rho => {
            let p: RhoIn = read_payload(input)?;
            let f = env.bilinear(&p.bilinear)?;
            let cctx = CliffordContext::new(f.quadratic());
            let u = cliff_from_json(&p.element, &cctx)?;
            let m = rho_matrix(&f, &u)?;
            let n = f.ctx().dim();
            let basis: Vec<Vec<usize>> = (0u64..1 << n)
                .map(|b| blade_indices(b).map(|i| i + 1).collect())
                .collect();
            let rows: Vec<Vec<String>> = m
                .matrix()
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|s| s.to_string()).collect())
                .collect();
            json!({ "basis": basis, "matrix": rows })
        }
        Command::Check { suite: None } => {
            let list: Vec<Value> = checks::suites()
                .iter()
                .map(|s| json!({ "id": s.id, "identity": s.summary }))
                .collect();
            json!({ "suites": list })
        }
        Command::Check { suite: Some(id) } => {
            let opts = SuiteOptions {
                seed: cli.seed,
                samples: cli.samples,
                field: cli.field,
                dim: cli.dim,
            };
            serde_json::to_value(checks::run_suite(id, &opts)?).expect("serializable")
        }
    };
    Ok(out)
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), SCHEMA.into());
    }
    v
}

fn emit(v: Value) {
    println!("{}", serde_json::to_string_pretty(&with_schema(v)).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            emit(v);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            emit(json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            ExitCode::from(1)
        }
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            emit(json!({ "error": { "kind": "malformed-input", "message": msg } }));
            ExitCode::from(2)
        }
    }
}
