use std::path::PathBuf;

use anyhow::Result;
use rankmetric::rdcode::{DistanceOptions, IDEALISER_CAP};
use rankmetric::{LinPoly, RankCode, Side};
use serde_json::json;

use super::{join, load_code, save_code};
use crate::args::{CodeCmd, CodeIn};
use crate::config::RunConfig;
use crate::output::Outcome;

fn options(c: &CodeIn, cfg: &RunConfig) -> DistanceOptions {
    DistanceOptions::default()
        .with_strategy(c.strategy)
        .with_early_exit(cfg.early_exit)
}

fn witness_line(w: Option<&LinPoly>) -> String {
    match w {
        Some(w) => format!("\nwitness rank {}: [{}]", w.rank(), join(&w.indices())),
        None => String::new(),
    }
}

fn derived(code: &RankCode, what: &str, out: &Option<PathBuf>) -> Result<Outcome> {
    if let Some(path) = out {
        save_code(code, path)?;
    }
    let report = json!({
        "dimension": code.dim(),
        "semilinear_generators": code.semilinear_gens().map(|g| g.len()),
        "code": code.to_file(),
    });
    let mut summary = format!("{what}: F_q-dimension {}", code.dim());
    if let Some(p) = out {
        summary += &format!(", written to {}", p.display());
    }
    Outcome::new(true, &report, summary)
}

pub fn run(cmd: &CodeCmd, cfg: &RunConfig) -> Result<(String, Outcome)> {
    let input = match cmd {
        CodeCmd::Mindist(c) | CodeCmd::Mrd(c) | CodeCmd::Idealisers(c) => c,
        CodeCmd::Dual { code, .. }
        | CodeCmd::Adjoint { code, .. }
        | CodeCmd::Twist { code, .. } => code,
    };
    let code = load_code(&input.input, cfg)?;
    let out = match cmd {
        CodeCmd::Mindist(c) => {
            let r = code.min_distance_with(options(c, cfg))?;
            let head = match r.min_distance {
                Some(d) => format!(
                    "minimum distance {d} ({:?}, {} checked)",
                    r.strategy, r.checked
                ),
                None => format!(
                    "stopped at a word of rank {} (early exit {:?})",
                    r.witness_rank.unwrap_or(0),
                    r.early_exit
                ),
            };
            let summary =
                head + &witness_line(r.stopped_early.then_some(r.witness.as_ref()).flatten());
            ("code mindist", Outcome::new(!r.stopped_early, &r, summary)?)
        }
        CodeCmd::Mrd(c) => {
            let r = code.is_mrd_with(options(c, cfg))?;
            let w = r.distance.as_ref().and_then(|d| d.witness.as_ref());
            let summary = format!(
                "MRD {} (dimension {}, target distance {:?})",
                r.is_mrd, r.dimension, r.target_distance
            ) + &witness_line(if r.is_mrd { None } else { w });
            ("code mrd", Outcome::new(r.is_mrd, &r, summary)?)
        }
        CodeCmd::Dual { out, .. } => ("code dual", derived(&code.delsarte_dual(), "dual", out)?),
        CodeCmd::Adjoint { out, .. } => (
            "code adjoint",
            derived(&code.adjoint_code(), "adjoint", out)?,
        ),
        CodeCmd::Twist { i, j, out, .. } => {
            let n = code.ctx().n();
            let t = code.frobenius_twist(i % n, j % n);
            ("code twist", derived(&t, "twist", out)?)
        }
        CodeCmd::Idealisers(_) => {
            let l = code.idealiser(Side::Left, IDEALISER_CAP)?;
            let r = code.idealiser(Side::Right, IDEALISER_CAP)?;
            let line = |name: &str, x: &rankmetric::rdcode::IdealiserReport| {
                format!(
                    "{name}: dimension {}, field {}, order {:?}",
                    x.dimension, x.is_field, x.field_order
                )
            };
            let summary = format!("{}\n{}", line("left", &l), line("right", &r));
            let report = json!({ "left": l, "right": r });
            ("code idealisers", Outcome::new(true, &report, summary)?)
        }
    };
    Ok((out.0.into(), out.1))
}
