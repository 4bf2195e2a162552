use anyhow::{bail, Result};
use rankmetric::acceptance::{format_line, Acceptance, AcceptanceConfig, CRITERIA};

use crate::args::ReproArgs;
use crate::config::RunConfig;
use crate::output::Outcome;

pub fn run(args: &ReproArgs, cfg: &RunConfig) -> Result<(String, Outcome)> {
    let ids: Vec<usize> = args
        .criteria
        .clone()
        .unwrap_or_else(|| (1..=CRITERIA).collect());
    if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > CRITERIA) {
        bail!("no criterion {bad}");
    }
    let acc = Acceptance::new(AcceptanceConfig {
        q_set: args.q_set.as_ref().map(|v| v.iter().copied().collect()),
        property_cases: args.property_cases,
        seed: cfg.seed ^ AcceptanceConfig::default().seed,
        ..AcceptanceConfig::default()
    });
    let mut outcomes = Vec::new();
    for id in ids {
        let o = acc.run(id);
        eprintln!("{}", format_line(&o));
        outcomes.push(o);
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let mut summary: Vec<String> = outcomes.iter().map(format_line).collect();
    summary.push(format!("{passed} of {} criteria pass", outcomes.len()));
    let holds = passed == outcomes.len();
    Ok((
        "repro".into(),
        Outcome::new(holds, &outcomes, summary.join("\n"))?,
    ))
}
