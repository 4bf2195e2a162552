use anyhow::Result;
use rankmetric::{FieldCtx, FieldSpec, LinPoly};
use serde::Serialize;
use serde_json::json;

use super::{field as parse_field, join, poly};
use crate::args::{FieldCmd, LinpolyCmd};
use crate::config::RunConfig;
use crate::output::Outcome;

#[derive(Serialize)]
struct Subfield {
    degree: usize,
    order: u64,
}

pub fn field(cmd: &FieldCmd, cfg: &RunConfig) -> Result<(String, Outcome)> {
    let FieldCmd::Info { p, e, n, modulus } = cmd;
    let spec = match modulus {
        Some(m) => FieldSpec {
            p: *p,
            e: *e,
            n: *n,
            modulus: m.clone(),
        },
        None => FieldSpec::canonical(*p, *e, *n)?,
    };
    let ctx = FieldCtx::build_with_cap(spec, cfg.cap)?;
    let subfields: Vec<Subfield> = ctx
        .subfield_lattice()
        .into_iter()
        .map(|(degree, order)| Subfield { degree, order })
        .collect();
    let report = json!({
        "field": ctx.spec(),
        "q": ctx.q(),
        "order": ctx.order(),
        "generator": ctx.generator(),
        "subfields": subfields,
    });
    let lattice: Vec<String> = subfields
        .iter()
        .map(|s| format!("F_{} (degree {} over F_q)", s.order, s.degree))
        .collect();
    let summary = format!(
        "F_{} over F_{}, modulus [{}], generator {}\nsubfields: {}",
        ctx.order(),
        ctx.q(),
        join(&ctx.spec().modulus),
        ctx.generator(),
        lattice.join(", ")
    );
    Ok(("field info".into(), Outcome::new(true, &report, summary)?))
}

#[derive(Serialize)]
struct PolyReport<'a> {
    field: &'a FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel_basis: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<&'a LinPoly>,
}

pub fn linpoly(cmd: &LinpolyCmd, cfg: &RunConfig) -> Result<(String, Outcome)> {
    let args = match cmd {
        LinpolyCmd::Rank(a) | LinpolyCmd::Kernel(a) | LinpolyCmd::Adjoint(a) => a,
        LinpolyCmd::Compose { a, .. } => a,
    };
    let ctx = parse_field(&args.field.field, cfg)?;
    let f = poly(&ctx, &args.coeffs)?;
    let mut r = PolyReport {
        field: ctx.spec(),
        rank: None,
        kernel_dim: None,
        kernel_basis: None,
        result: None,
    };
    let (name, summary, result);
    match cmd {
        LinpolyCmd::Rank(_) => {
            name = "linpoly rank";
            let k = f.rank();
            r.rank = Some(k);
            r.kernel_dim = Some(ctx.n() - k);
            summary = format!("rank {k}, kernel dimension {}", ctx.n() - k);
            result = None;
        }
        LinpolyCmd::Kernel(_) => {
            name = "linpoly kernel";
            let ker: Vec<u32> = f.kernel().iter().map(|x| x.index()).collect();
            summary = format!("kernel dimension {}, basis [{}]", ker.len(), join(&ker));
            r.kernel_dim = Some(ker.len());
            r.kernel_basis = Some(ker);
            result = None;
        }
        LinpolyCmd::Adjoint(_) => {
            name = "linpoly adjoint";
            let a = f.adjoint();
            summary = format!("[{}]", join(&a.indices()));
            result = Some(a);
        }
        LinpolyCmd::Compose { with, .. } => {
            name = "linpoly compose";
            let g = poly(&ctx, with)?;
            let c = f.compose(&g)?;
            summary = format!("[{}]", join(&c.indices()));
            result = Some(c);
        }
    }
    r.result = result.as_ref();
    Ok((name.into(), Outcome::new(true, &r, summary)?))
}
