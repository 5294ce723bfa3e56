//! Subcommand bodies. Every function returns a JSON value whose maps are
//! sorted by key and whose big integers are strings.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use scpp_core::pfaffian::{pfaffian_check, PfaffianCheck};
use scpp_core::product::{
    box_count, genenum_product, genenum_product_swapped, minenum_all_even, minenum_product, sc_count,
};
use scpp_core::schur::{schur_determinant_oracle, schur_tableau_sum, skew_schur_tableau_sum};
use scpp_core::scpp::{count_pp, count_scpp, count_scpp_middle_line, count_scpp_signed};
use scpp_core::verify::{self, schur_value};
use scpp_core::{BigRational, Budget, BorderedCase, Method, Partition};
use serde_json::{json, Value};

use crate::grid::{Params, SweepSpec};
use crate::output::Document;
use crate::CliError;

fn need(params: &Params, key: &str) -> Result<usize, CliError> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| CliError::usage(format!("missing parameter --{key}")))
}

/// Rejects parameters the identity does not take, so typos in sweep
/// configs fail loudly instead of silently multiplying the grid.
fn only(params: &Params, allowed: &[&str]) -> Result<(), CliError> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(CliError::usage(format!(
            "unexpected parameter {k:?}; expected {}",
            allowed.join(", ")
        ))),
        None => Ok(()),
    }
}

fn abc(params: &Params) -> Result<(usize, usize, usize), CliError> {
    only(params, &["a", "b", "c"])?;
    Ok((need(params, "a")?, need(params, "b")?, need(params, "c")?))
}

fn abcc(params: &Params) -> Result<(usize, usize, usize, usize), CliError> {
    only(params, &["a", "b", "c1", "c2"])?;
    Ok((need(params, "a")?, need(params, "b")?, need(params, "c1")?, need(params, "c2")?))
}

pub const COUNT_KINDS: &[&str] = &[
    "box",
    "pp",
    "sc",
    "scpp",
    "signed",
    "middle-line",
    "genenum",
    "genenum-swapped",
    "minenum",
    "minenum-all-even",
];

pub fn count(kind: &str, params: &Params, limit: u64) -> Result<Value, CliError> {
    let budget = Budget::new(limit);
    let value = match kind {
        "box" => {
            let (a, b, c) = abc(params)?;
            box_count(a, b, c)
        }
        "sc" => {
            let (a, b, c) = abc(params)?;
            sc_count(a, b, c)
        }
        "pp" => {
            let (a, b, c) = abc(params)?;
            count_pp(a, b, c, &budget)?
        }
        "scpp" => {
            let (a, b, c) = abc(params)?;
            count_scpp(a, b, c, &budget)?
        }
        "signed" => {
            let (a, b, c) = abc(params)?;
            let s = count_scpp_signed(a, b, c, &budget)?;
            return Ok(json!({
                "negative": s.negative.to_string(),
                "positive": s.positive.to_string(),
                "value": s.total().to_string(),
            }));
        }
        "middle-line" => {
            let (a, b, c1, c2) = abcc(params)?;
            count_scpp_middle_line(a, b, c1, c2, &budget)?
        }
        "genenum" => {
            let (a, b, c1, c2) = abcc(params)?;
            genenum_product(a, b, c1, c2)?
        }
        "genenum-swapped" => {
            let (a, b, c1, c2) = abcc(params)?;
            genenum_product_swapped(a, b, c1, c2)?
        }
        "minenum" => {
            let (a, b, c) = abc(params)?;
            minenum_product(a, b, c)?
        }
        "minenum-all-even" => {
            let (a, b, c) = abc(params)?;
            minenum_all_even(a, b, c)?
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown count kind {other:?}; expected one of {}",
                COUNT_KINDS.join(", ")
            )))
        }
    };
    Ok(json!({ "value": value.to_string() }))
}

pub struct SchurArgs<'a> {
    pub shape: &'a str,
    pub inner: Option<&'a str>,
    pub n: usize,
    pub point: Option<&'a str>,
    pub oracle: bool,
    pub principal: bool,
}

pub fn schur(args: &SchurArgs) -> Result<Value, CliError> {
    let shape: Partition = args.shape.parse()?;
    let mut out = json!({ "n": args.n, "shape": shape.to_string() });
    let poly = match args.inner {
        Some(inner) => {
            if args.oracle {
                return Err(CliError::usage("--oracle supports straight shapes only"));
            }
            let inner: Partition = inner.parse()?;
            out["inner"] = json!(inner.to_string());
            skew_schur_tableau_sum(&shape, &inner, args.n)?
        }
        None if args.oracle => schur_determinant_oracle(&shape, args.n),
        None => schur_tableau_sum(&shape, args.n),
    };
    out["digest"] = json!(poly.digest());
    out["polynomial"] = json!(poly.to_string());
    out["terms"] = json!(poly.num_terms());
    if args.principal {
        out["principal"] = json!(poly.principal_specialization().to_string());
    }
    if let Some(point) = args.point {
        let xs = point
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigRational>()
                    .map_err(|_| CliError::usage(format!("bad coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if xs.len() != args.n {
            return Err(CliError::usage(format!("--point needs {} coordinates, got {}", args.n, xs.len())));
        }
        // straight shapes go through Jacobi-Trudi, a second route to the same value
        let value = match args.inner {
            None => schur_value(&shape, &xs),
            Some(_) => poly.evaluate_with(&xs, |c| BigRational::from_integer(c.clone()))?,
        };
        out["value"] = json!(value.to_string());
    }
    Ok(out)
}

fn pfaffian_json(check: &PfaffianCheck) -> Value {
    let [a, b, c1, c2] = check.params;
    json!({
        "calibration": check.calibration,
        "case": check.case.name(),
        "match": check.matches,
        "parameters": { "a": a, "b": b, "c1": c1, "c2": c2 },
        "pfaffian": check.pfaffian.to_string(),
        "prefactor": check.prefactor,
        "product": check.product.to_string(),
        "raw": check.raw.to_string(),
        "squared_is_determinant": check.squared_is_determinant,
    })
}

pub fn pfaffian(case: BorderedCase, a: usize, b: usize, c1: usize, c2: usize) -> Result<Value, CliError> {
    Ok(pfaffian_json(&pfaffian_check(case, a, b, c1, c2)?))
}

pub const IDENTITIES: &[&str] = &[
    "schurid1",
    "schurid2",
    "reduction",
    "bridge",
    "box",
    "stanley",
    "genenum",
    "minenum",
    "weight",
    "pfaffian",
];

/// Runs one identity check. `method` only affects the two Schur identities.
pub fn verify_identity(identity: &str, params: &Params, method: Option<Method>, limit: u64) -> Result<Value, CliError> {
    let budget = Budget::new(limit);
    let report = match identity {
        "schurid1" | "schurid2" => {
            only(params, &["gamma1", "gamma2", "alpha", "n"])?;
            let which = if identity == "schurid1" { 1 } else { 2 };
            verify::verify_schurid(
                which,
                need(params, "gamma1")?,
                need(params, "gamma2")?,
                need(params, "alpha")?,
                need(params, "n")?,
                method.unwrap_or(Method::FullExpansion),
                &budget,
            )?
        }
        "reduction" => {
            only(params, &["gamma", "alpha", "n"])?;
            verify::verify_stanley_reduction(need(params, "gamma")?, need(params, "alpha")?, need(params, "n")?)?
        }
        "bridge" => {
            only(params, &["gamma", "alpha", "m"])?;
            verify::verify_specialization_bridge(need(params, "gamma")?, need(params, "alpha")?, need(params, "m")?)?
        }
        "box" | "stanley" | "minenum" | "weight" => {
            let (a, b, c) = abc(params)?;
            match identity {
                "box" => verify::verify_box(a, b, c, &budget)?,
                "stanley" => verify::verify_stanley(a, b, c, &budget)?,
                "minenum" => verify::verify_minenum(a, b, c, &budget)?,
                _ => verify::verify_weight_consistency(a, b, c, &budget)?,
            }
        }
        "genenum" => {
            let (a, b, c1, c2) = abcc(params)?;
            verify::verify_genenum(a, b, c1, c2, &budget)?
        }
        "pfaffian" => {
            let (a, b, c1, c2) = abcc(params)?;
            let case = BorderedCase::ALL
                .into_iter()
                .find(|c| c.admits(a, b))
                .ok_or_else(|| scpp_core::Error::Parity(format!("no Pfaffian case for a={a}, b={b}")))?;
            return pfaffian(case, a, b, c1, c2);
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown identity {other:?}; expected one of {}",
                IDENTITIES.join(", ")
            )))
        }
    };
    Ok(serde_json::to_value(&report).expect("reports serialize"))
}

/// Runs every grid point, `workers` at a time, and returns the reports in
/// grid order followed by a summary.
///
/// Tuples rejected for parity or other preconditions are skipped; a usage
/// error (unknown identity or parameter) aborts the whole sweep.
pub fn sweep(spec: &SweepSpec, method: Option<Method>, limit: u64, workers: usize) -> Result<Document, CliError> {
    let identity = spec
        .identity
        .as_deref()
        .ok_or_else(|| CliError::usage("sweep needs an identity"))?;
    let tuples = spec.tuples();
    let next = AtomicUsize::new(0);
    let results = Mutex::new(vec![None; tuples.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(params) = tuples.get(i) else { break };
                let r = verify_identity(identity, params, method, limit);
                results.lock().expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    let results = results.into_inner().expect("workers finished");

    let (mut matched, mut mismatched, mut skipped, mut failed) = (0usize, 0usize, 0usize, 0usize);
    let mut reports = Vec::with_capacity(tuples.len());
    for (params, result) in tuples.iter().zip(results) {
        match result.expect("every tuple was run") {
            Ok(report) => {
                if report["match"] == json!(true) {
                    matched += 1;
                } else {
                    mismatched += 1;
                }
                reports.push(report);
            }
            Err(e) if e.code == "usage" => return Err(e),
            Err(e) => {
                let status = if e.code == "bad_parity" || e.code == "precondition" {
                    skipped += 1;
                    "skipped"
                } else {
                    failed += 1;
                    "error"
                };
                reports.push(json!({
                    "error": { "code": e.code, "message": e.message },
                    "identity": identity,
                    "parameters": params,
                    "status": status,
                }));
            }
        }
    }
    let summary = json!({
        "errors": failed,
        "identity": identity,
        "match": mismatched == 0 && failed == 0,
        "matched": matched,
        "mismatched": mismatched,
        "skipped": skipped,
        "total": tuples.len(),
    });
    let mut rows = reports.clone();
    rows.push(json!({ "summary": summary }));
    Ok(Document {
        json: json!({ "reports": reports, "summary": summary }),
        rows,
    })
}
