//! Step counts of the baseline and of the stabbing traversal on the
//! adversarial family.

use std::time::Instant;

use crate::baseline::baseline_lcp_star;
use crate::generate::gen_adversarial;
use crate::index::SuccinctWheelerIndex;
use crate::stab::lcp_star;

pub const CSV_HEADER: &str = "k,n,sigma,baseline_steps,algo1_steps,wall_ns";

/// One benchmark row. `sigma` counts user labels; `wall_ns` covers both runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparationRow {
    pub k: usize,
    pub n: usize,
    pub sigma: u32,
    pub baseline_steps: u64,
    pub algo1_steps: u64,
    pub wall_ns: u128,
}

impl SeparationRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.k, self.n, self.sigma, self.baseline_steps, self.algo1_steps, self.wall_ns
        )
    }

    /// Baseline steps per unit of traversal work.
    pub fn ratio(&self) -> f64 {
        self.baseline_steps as f64 / self.algo1_steps as f64
    }
}

/// Runs both algorithms on `gen_adversarial(k)` and checks that they agree.
pub fn measure_adversarial(k: usize) -> SeparationRow {
    let p = gen_adversarial(k);
    let idx = SuccinctWheelerIndex::build(&p).expect("family is Wheeler");
    let start = Instant::now();
    let (base, b) = baseline_lcp_star(&idx);
    let mut star = vec![0u64; p.n() - 1];
    let report = lcp_star(&idx, |i, d| star[i - 2] = d).expect("family has distinct strings");
    let wall_ns = start.elapsed().as_nanos();
    assert_eq!(base, star, "baseline and traversal disagree at k = {k}");
    SeparationRow {
        k,
        n: p.n(),
        sigma: p.sigma() - 1,
        baseline_steps: b.steps,
        algo1_steps: report.work,
        wall_ns,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_print_six_fields() {
        let row = measure_adversarial(4);
        assert_eq!((row.n, row.sigma), (10, 6));
        assert_eq!(
            row.to_csv().split(',').count(),
            CSV_HEADER.split(',').count()
        );
    }
}
