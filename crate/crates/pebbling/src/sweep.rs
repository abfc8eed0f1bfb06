//! Threshold sweeps over a rayon pool, and their CSV form.
//!
//! Trials for every `t` are cut into fixed chunks independent of the pool
//! size. Each trial draws from its own stream, and chunk counts are summed,
//! so the curve is identical for any number of workers.

use std::io::{self, Write};

use pebbling_core::threshold::{sweep_points, SweepRecord, ThresholdCurve, TrialRunner};
use pebbling_core::RandomModel;
use rayon::prelude::*;

const CHUNK: u64 = 250;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepParams {
    pub model: RandomModel,
    pub n: usize,
    pub t_min: u64,
    pub t_max: u64,
    pub step: u64,
    pub trials: u64,
    pub seed: u64,
}

pub fn parallel_sweep(
    p: &SweepParams,
    workers: usize,
) -> Result<ThresholdCurve, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()?;
    let points = sweep_points(p.t_min, p.t_max, p.step);
    let tasks: Vec<(usize, u64)> = points
        .iter()
        .enumerate()
        .flat_map(|(k, _)| (0..p.trials.div_ceil(CHUNK)).map(move |c| (k, c * CHUNK)))
        .collect();
    let counts: Vec<(usize, u64)> = pool.install(|| {
        tasks
            .par_iter()
            .map_init(TrialRunner::new, |runner, &(k, start)| {
                let end = (start + CHUNK).min(p.trials);
                (k, runner.count(p.model, p.n, points[k], p.seed, start..end))
            })
            .collect()
    });
    let mut solvable = vec![0u64; points.len()];
    for (k, c) in counts {
        solvable[k] += c;
    }
    let records = points
        .iter()
        .zip(solvable)
        .map(|(&t, s)| SweepRecord::new(p.model, p.n, t, p.trials, s, p.seed))
        .collect();
    Ok(ThresholdCurve::new(records))
}

pub const CSV_HEADER: &str = "model,n,t,trials,solvable_count,p_hat,seed";

pub fn write_csv<W: Write>(w: &mut W, curve: &ThresholdCurve) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in &curve.records {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.model.tag(),
            r.n,
            r.t,
            r.trials,
            r.solvable_count,
            r.p_hat,
            r.seed
        )?;
    }
    Ok(())
}

/// `# crossing t*=<t> t*/n=<ratio>`, or `# crossing none`.
pub fn crossing_line(curve: &ThresholdCurve, n: usize) -> String {
    match curve.crossing() {
        Some(t) => format!("# crossing t*={t:.4} t*/n={:.6}", t / n as f64),
        None => "# crossing none".to_owned(),
    }
}
