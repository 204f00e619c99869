//! Command implementations. Each returns its JSON output and whether the
//! checked identities held.

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use krawtchouk::macwilliams::{moment_b_with_dual, moment_binv_with_dual, MomentPair};
use krawtchouk::oracle::CodeSpec;
use krawtchouk::scheme::xi_vector;
use krawtchouk::verify::{verify, Suite, VerifyOptions};
use krawtchouk::{
    eigenmatrix, maximal_distribution, omega_enumerator, transform_eigen, transform_functional, SchemeParams,
    SchemeSpec, TransformInput, WeightDistribution,
};

use crate::json;
use crate::CliError;

pub struct Output {
    pub value: Value,
    /// False when a checked identity failed.
    pub ok: bool,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, ok: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Eigen,
    Functional,
    #[default]
    Both,
}

fn spec_value(spec: &SchemeSpec) -> Value {
    serde_json::to_value(spec).expect("scheme specs serialize")
}

pub fn scheme_info(spec: SchemeSpec) -> Result<Output, CliError> {
    let p = SchemeParams::new(spec)?;
    let xi = xi_vector(&p)?;
    let omega = omega_enumerator(&p)?;
    let valencies_equal_xi = eigenmatrix(&p)?.rows()[0] == xi;
    Ok(Output {
        ok: valencies_equal_xi,
        value: json!({
            "scheme": spec_value(&spec),
            "b": json::rational(p.b().value()),
            "c": json::rational(p.c()),
            "n": p.n(),
            "spaceSize": json::int(p.space_size()),
            "xi": json::ints(&xi),
            "omega": omega.coeffs().iter().map(json::rational).collect::<Vec<_>>(),
            "valencies_equal_xi": valencies_equal_xi,
        }),
    })
}

pub fn scheme_eigenmatrix(spec: SchemeSpec) -> Result<Output, CliError> {
    let p = SchemeParams::new(spec)?;
    let m = eigenmatrix(&p)?;
    let involution = m.is_involution();
    let orthogonal = m.is_orthogonal();
    Ok(Output {
        ok: involution && orthogonal,
        value: json!({
            "scheme": spec_value(&spec),
            "n": p.n(),
            "matrix": m.rows().iter().map(json::ints).collect::<Vec<_>>(),
            "involution": involution,
            "orthogonal": orthogonal,
        }),
    })
}

fn transform_input(spec: SchemeSpec, weights: Vec<BigInt>, code_size: Option<BigInt>) -> Result<TransformInput, CliError> {
    let p = SchemeParams::new(spec)?;
    let dist = WeightDistribution::new(weights);
    let size = code_size.unwrap_or_else(|| dist.total());
    Ok(TransformInput::new(dist, size, p)?)
}

pub fn transform(spec: SchemeSpec, weights: Vec<BigInt>, code_size: Option<BigInt>, method: Method) -> Result<Output, CliError> {
    let input = transform_input(spec, weights, code_size)?;
    let mut value = json!({
        "scheme": spec_value(&spec),
        "weights": json::dist(input.dist()),
        "codeSize": json::int(input.code_size()),
        "dualSize": json::int(&input.dual_size()),
    });
    let (dual, agree) = match method {
        Method::Eigen => (transform_eigen(&input)?, None),
        Method::Functional => (transform_functional(&input)?, None),
        Method::Both => {
            let e = transform_eigen(&input)?;
            let f = transform_functional(&input)?;
            let agree = e == f;
            value["functional"] = json::dist(&f);
            (e, Some(agree))
        }
    };
    value["dual"] = json::dist(&dual);
    if let Some(agree) = agree {
        value["agree"] = Value::Bool(agree);
    }
    Ok(Output { value, ok: agree.unwrap_or(true) })
}

fn pair_json(m: &MomentPair) -> Value {
    json!({ "lhs": json::rational(&m.lhs), "rhs": json::rational(&m.rhs), "equal": m.balanced() })
}

/// Both moment identities at `phi`, or at every `phi` when none is given.
pub fn moments(spec: SchemeSpec, weights: Vec<BigInt>, code_size: Option<BigInt>, phi: Option<usize>) -> Result<Output, CliError> {
    let input = transform_input(spec, weights, code_size)?;
    let dual = transform_eigen(&input)?;
    let n = input.params().n();
    let phis: Vec<usize> = match phi {
        Some(p) => vec![p],
        None => (0..=n).collect(),
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for phi in phis {
        let b = moment_b_with_dual(&input, &dual, phi)?;
        let binv = moment_binv_with_dual(&input, &dual, phi)?;
        ok &= b.balanced() && binv.balanced();
        rows.push(json!({ "phi": phi, "b": pair_json(&b), "binv": pair_json(&binv) }));
    }
    let mut value = json!({
        "scheme": spec_value(&spec),
        "weights": json::dist(input.dist()),
        "codeSize": json::int(input.code_size()),
        "dual": json::dist(&dual),
        "equal": ok,
    });
    if phi.is_some() {
        let row = rows.pop().expect("one row");
        value["phi"] = row["phi"].clone();
        value["b"] = row["b"].clone();
        value["binv"] = row["binv"].clone();
    } else {
        value["moments"] = Value::Array(rows);
    }
    Ok(Output { value, ok })
}

pub fn maximal(spec: SchemeSpec, d: usize, code_size: BigInt) -> Result<Output, CliError> {
    let p = SchemeParams::new(spec)?;
    let dist = maximal_distribution(&p, d, &code_size)?;
    Ok(Output::ok(json!({
        "scheme": spec_value(&spec),
        "d": d,
        "codeSize": json::int(&code_size),
        "distribution": json::dist(&dist),
    })))
}

pub fn run_verify(spec: SchemeSpec, suite: Suite, trials: usize, seed: u64) -> Result<Output, CliError> {
    let p = SchemeParams::new(spec)?;
    let report = verify(&p, suite, VerifyOptions { trials, seed })?;
    Ok(Output { ok: report.passed, value: serde_json::to_value(&report).expect("reports serialize") })
}

/// Brute-force distribution of a code and its dual, checked against the
/// transform.
pub fn code(spec: &CodeSpec) -> Result<Output, CliError> {
    let code = spec.build()?;
    let dual = code.dual()?;
    let dist = code.weight_distribution()?;
    let dual_dist = dual.weight_distribution()?;
    let input = TransformInput::new(dist.clone(), code.size(), code.params().clone())?;
    let agrees = transform_eigen(&input)? == dual_dist && transform_functional(&input)? == dual_dist;
    let generators: Vec<Value> = dual
        .generator_elements()
        .iter()
        .map(|e| serde_json::to_value(e.data()).expect("elements serialize"))
        .collect();
    Ok(Output {
        ok: agrees,
        value: json!({
            "scheme": spec_value(&spec.scheme),
            "dimension": code.dimension(),
            "size": json::int(&code.size()),
            "distribution": json::dist(&dist),
            "dual": {
                "dimension": dual.dimension(),
                "generators": generators,
                "distribution": json::dist(&dual_dist),
            },
            "transformAgrees": agrees,
        }),
    })
}
