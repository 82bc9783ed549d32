//! The oracle-versus-solver harness behind `mvis verify`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use mvis::families::{
    grid_dual_witness, grid_outer_witness, gn_witnesses, ht_witnesses, reduction_gprime,
    torus_witnesses, ReductionBase,
};
use mvis::oracles::{oracle, reduction_oracle};
use mvis::{
    classify_set, solve, solve_independence, FamilySpec, Graph, OracleValue, SolveError,
    SolveOptions, SolveStats, Variant, VertexSet,
};
use serde::Serialize;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Agree,
    Disagree,
    Incomplete,
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub family: String,
    pub variant: Variant,
    pub oracle: Option<OracleValue>,
    pub solved: Option<usize>,
    pub witness: Option<VertexSet>,
    /// Classification of the explicit construction, when the family has one.
    pub explicit_witness_valid: Option<bool>,
    pub agree: bool,
    pub status: Status,
    pub note: Option<String>,
    pub stats: Option<SolveStats>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub agree: usize,
    pub disagree: usize,
    pub incomplete: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub format_version: u32,
    pub command: String,
    pub records: Vec<Record>,
    pub summary: Summary,
}

#[derive(Debug, Clone)]
pub struct Scope {
    pub cycles: bool,
    pub trees: bool,
    pub grids: bool,
    pub tori: bool,
    pub gadgets: bool,
    pub reduction: bool,
    pub max_cycle: usize,
    pub max_grid: usize,
    pub max_torus: usize,
    pub tree_count: u64,
    pub seed: u64,
    /// Check only this variant.
    pub variant: Option<Variant>,
}

fn all_variants() -> Vec<Variant> {
    Variant::ALL.to_vec()
}

/// The instance list, as (family, variants to check).
pub fn instances(scope: &Scope) -> Vec<(FamilySpec, Vec<Variant>)> {
    use FamilySpec::*;
    let mut out = Vec::new();
    if scope.cycles {
        out.extend((3..=scope.max_cycle).map(|n| (Cycle { n }, all_variants())));
    }
    if scope.trees {
        out.extend((2..=10).map(|n| (Path { n }, all_variants())));
        out.extend((0..scope.tree_count).map(|k| {
            let seed = scope.seed.wrapping_add(k);
            let n = 3 + (seed % 12) as usize;
            (RandomTree { n, seed }, all_variants())
        }));
    }
    if scope.grids {
        for n in 2..=scope.max_grid {
            out.extend((2..=n).map(|m| (Grid { n, m }, all_variants())));
        }
    }
    if scope.tori {
        for n in 3..=scope.max_torus {
            out.extend((3..=n).map(|m| (Torus { n, m }, vec![Variant::Dual, Variant::Total, Variant::Outer])));
        }
    }
    if scope.gadgets {
        out.extend((2..=4).map(|n| (Gn { n }, all_variants())));
        out.push((Ht { t: 2 }, vec![Variant::Dual, Variant::Outer]));
    }
    if scope.reduction {
        let base = ReductionBase::Family(Box::new(Path { n: 3 }));
        out.push((Reduction { base, t: 3 }, all_variants()));
    }
    out
}

fn explicit_witness(spec: &FamilySpec, v: Variant) -> Option<VertexSet> {
    use FamilySpec::*;
    match *spec {
        Grid { n, m } if n >= m => match v {
            Variant::Outer => grid_outer_witness(n, m).ok(),
            Variant::Dual => grid_dual_witness(n, m).ok(),
            _ => None,
        },
        Torus { n, m } if n >= m => torus_witnesses(n, m, v).ok(),
        Gn { n } => gn_witnesses(n, v).ok(),
        Ht { t } => ht_witnesses(t, v).ok(),
        _ => None,
    }
}

fn oracle_for(spec: &FamilySpec, g: &Graph, v: Variant, opts: &SolveOptions) -> Result<Option<OracleValue>, String> {
    if let FamilySpec::Reduction { base: ReductionBase::Family(b), t } = spec {
        let base = b.generate().map_err(|e| e.to_string())?;
        let alpha = solve_independence(&base, opts).map_err(|e| e.to_string())?;
        debug_assert_eq!(reduction_gprime(&base, *t).map(|r| r.gprime.n()).ok(), Some(g.n()));
        return Ok(Some(reduction_oracle(base.m(), *t, alpha.value)));
    }
    Ok(oracle(spec, v).ok())
}

fn check(spec: &FamilySpec, v: Variant, opts: &SolveOptions) -> Record {
    let family = spec.to_string();
    let mut rec = Record {
        family,
        variant: v,
        oracle: None,
        solved: None,
        witness: None,
        explicit_witness_valid: None,
        agree: false,
        status: Status::Incomplete,
        note: None,
        stats: None,
    };
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e) => {
            rec.note = Some(e.to_string());
            return rec;
        }
    };
    match oracle_for(spec, &g, v, opts) {
        Ok(o) => rec.oracle = o,
        Err(e) => {
            rec.note = Some(e);
            return rec;
        }
    }
    rec.explicit_witness_valid = explicit_witness(spec, v).map(|x| classify_set(&g, &x).holds(v));
    match solve(&g, v, opts) {
        Ok(r) => {
            let admitted = rec.oracle.as_ref().is_none_or(|o| o.admits(r.value));
            let witness_ok = rec.explicit_witness_valid != Some(false);
            rec.agree = admitted && witness_ok;
            rec.status = if rec.agree { Status::Agree } else { Status::Disagree };
            rec.solved = Some(r.value);
            rec.stats = Some(r.stats);
            rec.witness = Some(r.witness);
        }
        Err(SolveError::Incomplete(partial)) => {
            rec.note = Some(format!("budget exhausted; best lower bound {}", partial.value));
            rec.stats = Some(partial.stats);
        }
        Err(e) => rec.note = Some(e.to_string()),
    }
    rec
}

/// Runs every instance; `workers` instances are processed at a time.
pub fn run(scope: &Scope, opts: &SolveOptions, workers: usize, command: String) -> RunReport {
    let jobs: Vec<(FamilySpec, Variant)> = instances(scope)
        .into_iter()
        .flat_map(|(s, vs)| vs.into_iter().map(move |v| (s.clone(), v)))
        .filter(|(_, v)| scope.variant.is_none_or(|only| only == *v))
        .collect();
    let next = AtomicUsize::new(0);
    let records = Mutex::new(Vec::with_capacity(jobs.len()));
    std::thread::scope(|sc| {
        for _ in 0..workers.max(1) {
            sc.spawn(|| {
                while let Some((spec, v)) = jobs.get(next.fetch_add(1, Ordering::Relaxed)) {
                    let rec = check(spec, *v, opts);
                    records.lock().unwrap().push(rec);
                }
            });
        }
    });
    let mut records = records.into_inner().unwrap();
    records.sort_by(|a, b| (&a.family, a.variant).cmp(&(&b.family, b.variant)));
    RunReport {
        format_version: FORMAT_VERSION,
        command,
        summary: summarize(&records),
        records,
    }
}

pub fn summarize(records: &[Record]) -> Summary {
    let mut summary = Summary {
        instances: records.len(),
        ..Summary::default()
    };
    for r in records {
        match r.status {
            Status::Agree => summary.agree += 1,
            Status::Disagree => summary.disagree += 1,
            Status::Incomplete => summary.incomplete += 1,
        }
    }
    summary
}
