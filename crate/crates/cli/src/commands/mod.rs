mod algebra;
mod code;
mod paper;
mod repro;
mod subspace;

use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use rankmetric::{Fe, FieldCtx, FieldSpec, LinPoly, RankCode};

use crate::args::Command;
use crate::config::RunConfig;
use crate::output::Outcome;

pub fn run(cmd: &Command, cfg: &RunConfig) -> Result<(String, Outcome)> {
    match cmd {
        Command::Field { cmd } => algebra::field(cmd, cfg),
        Command::Linpoly { cmd } => algebra::linpoly(cmd, cfg),
        Command::Code { cmd } => code::run(cmd, cfg),
        Command::Subspace { cmd } => subspace::run(cmd, cfg),
        Command::Paper { cmd } => paper::run(cmd, cfg),
        Command::Repro(args) => repro::run(args, cfg),
    }
}

/// `Q^N`, or a path to a FieldSpec JSON file.
pub fn field(sel: &str, cfg: &RunConfig) -> Result<Arc<FieldCtx>> {
    let spec = if let Some((q, n)) = sel.split_once('^') {
        let q: u64 = q
            .trim()
            .parse()
            .with_context(|| format!("bad field {sel:?}"))?;
        let n: u32 = n
            .trim()
            .parse()
            .with_context(|| format!("bad field {sel:?}"))?;
        FieldSpec::for_q(q, n)?
    } else {
        let text = std::fs::read_to_string(sel)
            .with_context(|| format!("{sel:?} is neither Q^N nor a readable file"))?;
        serde_json::from_str(&text).with_context(|| format!("parsing field spec {sel}"))?
    };
    Ok(FieldCtx::build_with_cap(spec, cfg.cap)?)
}

/// Comma-separated integers, an inline JSON array, or a JSON array file.
pub fn int_list(s: &str) -> Result<Vec<u64>> {
    let t = s.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).with_context(|| format!("parsing {t:?}"));
    }
    if Path::new(t).is_file() {
        let text = std::fs::read_to_string(t)?;
        return serde_json::from_str(&text).with_context(|| format!("parsing {t}"));
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .with_context(|| format!("bad integer {x:?}"))
        })
        .collect()
}

pub fn elements(ctx: &FieldCtx, s: &str) -> Result<Vec<Fe>> {
    int_list(s)?.into_iter().map(|i| Ok(ctx.elem(i)?)).collect()
}

pub fn poly(ctx: &Arc<FieldCtx>, s: &str) -> Result<LinPoly> {
    let idx = int_list(s)?;
    if idx.len() != ctx.n() {
        bail!("expected {} coefficients, got {}", ctx.n(), idx.len());
    }
    Ok(LinPoly::from_indices(ctx, &idx)?)
}

pub fn load_code(path: &Path, cfg: &RunConfig) -> Result<RankCode> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(RankCode::from_file(&file, cfg.cap)?)
}

pub fn save_code(code: &RankCode, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(&code.to_file())?;
    std::fs::write(path, format!("{json}\n")).with_context(|| format!("writing {}", path.display()))
}

pub fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
