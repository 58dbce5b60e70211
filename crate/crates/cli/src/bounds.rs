use std::fs;
use std::path::Path;

use tcbound_core::bounds::{
    self, AttributeSet, BoundsError, InvariantState, KnowledgeBase, Report, SpaceDescriptor, Tri,
};

use crate::io::{read, read_complex, CliError, Doc};

fn engine_error(e: BoundsError) -> CliError {
    match e {
        BoundsError::NoFixpoint(_) => CliError::invariant("propagation reaches a fixpoint", e),
        BoundsError::Replay { .. } => CliError::invariant("derivation log replays", e),
        other => CliError::input(other),
    }
}

fn finish(st: InvariantState, explain: bool) -> Result<Doc, CliError> {
    st.replay().map_err(engine_error)?;
    let r = Report::new(&st, explain);
    Ok(Doc {
        value: serde_json::to_value(&r).expect("reports serialize"),
        text: r.to_text(),
    })
}

pub fn bounds(path: &Path, explain: bool, extra_kb: Option<&Path>) -> Result<Doc, CliError> {
    let d: SpaceDescriptor = read(path)?;
    let mut kb = KnowledgeBase::builtin();
    if let Some(p) = extra_kb {
        let text = fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))?;
        let extra = KnowledgeBase::from_json(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
        kb.extend(extra).map_err(CliError::input)?;
    }
    let st = bounds::seed_facts_with(&d, &kb)
        .and_then(bounds::propagate)
        .map_err(engine_error)?;
    finish(st, explain)
}

fn tri(flag: bool) -> Tri {
    if flag {
        Tri::Yes
    } else {
        Tri::Unknown
    }
}

pub fn analyze(
    path: &Path,
    simply_connected: bool,
    aspherical: bool,
    h_space: bool,
    explain: bool,
) -> Result<Doc, CliError> {
    let (_, k) = read_complex(path)?;
    let assertions = AttributeSet {
        simply_connected: tri(simply_connected),
        aspherical: tri(aspherical),
        h_space: tri(h_space),
        ..AttributeSet::default()
    };
    let st = bounds::analyze_complex(&k, assertions).map_err(engine_error)?;
    finish(st, explain)
}
