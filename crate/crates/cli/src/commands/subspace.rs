use anyhow::{anyhow, Result};
use rankmetric::paperlab::find_c;
use rankmetric::scattered::{family_u1, family_u2, family_u3, family_u4, FamilyMember};
use rankmetric::{FieldCtx, PointedSubspace};
use serde_json::json;

use super::{field, join, poly};
use crate::args::{FamilyName, SubspaceCmd};
use crate::config::RunConfig;
use crate::output::Outcome;

fn spectrum_line(r: &rankmetric::scattered::LinearSetReport) -> String {
    let w: Vec<String> = r
        .weight_spectrum
        .iter()
        .map(|(w, k)| format!("{k} of weight {w}"))
        .collect();
    format!(
        "{} points ({}); scattered {}, maximum scattered {}",
        r.size,
        w.join(", "),
        r.is_scattered,
        r.is_maximum_scattered
    )
}

fn member(
    ctx: &std::sync::Arc<FieldCtx>,
    name: FamilyName,
    s: usize,
    delta: Option<u64>,
    c: Option<u64>,
) -> Result<FamilyMember> {
    let pick = |build: &dyn Fn(rankmetric::Fe) -> rankmetric::Result<FamilyMember>| -> Result<FamilyMember> {
        match delta {
            Some(d) => Ok(build(ctx.elem(d)?)?),
            None => {
                let mut first = None;
                for d in ctx.elements() {
                    let Ok(m) = build(d) else { continue };
                    if m.subspace.linear_set().is_ok_and(|r| r.is_scattered) {
                        return Ok(m);
                    }
                    first.get_or_insert(m);
                }
                first.ok_or_else(|| anyhow!("no admissible delta"))
            }
        }
    };
    Ok(match name {
        FamilyName::U1 => family_u1(ctx, s)?,
        FamilyName::U2 => pick(&|d| family_u2(ctx, s, d))?,
        FamilyName::U3 => pick(&|d| family_u3(ctx, s, d))?,
        FamilyName::U4 => {
            let c = match c {
                Some(c) => ctx.elem(c)?,
                None => *find_c(ctx)
                    .first()
                    .ok_or_else(|| anyhow!("x^2 + x - 1 has no root"))?,
            };
            family_u4(ctx, c)?
        }
    })
}

pub fn run(cmd: &SubspaceCmd, cfg: &RunConfig) -> Result<(String, Outcome)> {
    let out = match cmd {
        SubspaceCmd::Scattered(a) | SubspaceCmd::LinearSet(a) | SubspaceCmd::Stabiliser(a) => {
            let ctx = field(&a.field.field, cfg)?;
            let u = PointedSubspace::new(poly(&ctx, &a.f)?);
            match cmd {
                SubspaceCmd::Scattered(_) => {
                    let r = u.linear_set()?;
                    let report = json!({ "is_scattered": r.is_scattered, "linear_set": r });
                    let summary = spectrum_line(&r);
                    (
                        "subspace scattered",
                        Outcome::new(r.is_scattered, &report, summary)?,
                    )
                }
                SubspaceCmd::LinearSet(_) => {
                    let r = u.linear_set()?;
                    let summary = spectrum_line(&r);
                    ("subspace linear-set", Outcome::new(true, &r, summary)?)
                }
                _ => {
                    let r = u.stabiliser_order()?;
                    let summary = format!("stabiliser order {}", r.order);
                    ("subspace stabiliser", Outcome::new(true, &r, summary)?)
                }
            }
        }
        SubspaceCmd::Family {
            field: sel,
            name,
            s,
            delta,
            c,
            stabiliser,
        } => {
            let ctx = field(&sel.field, cfg)?;
            let m = member(&ctx, *name, *s, *delta, *c)?;
            let f = m.subspace.f();
            let ls = m.subspace.linear_set()?;
            let stab = if *stabiliser {
                Some(m.subspace.stabiliser_order()?)
            } else {
                None
            };
            let mut summary = format!("f = [{}]\n{}", join(&f.indices()), spectrum_line(&ls));
            if let Some(st) = &stab {
                summary += &format!("\nstabiliser order {}", st.order);
            }
            for w in &m.warnings {
                summary += &format!("\nwarning: {w}");
            }
            let report = json!({
                "f": f,
                "warnings": m.warnings,
                "linear_set": ls,
                "stabiliser": stab,
            });
            (
                "subspace family",
                Outcome::new(ls.is_scattered, &report, summary)?,
            )
        }
    };
    Ok((out.0.into(), out.1))
}
