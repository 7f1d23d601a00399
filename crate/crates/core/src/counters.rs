use std::fmt;

/// Work performed by one root extraction.
///
/// `field_multiplications` counts every multiplication in the field,
/// including squarings inside exponentiations and the trial multiplications
/// of the discrete-log search, which are also tallied separately in
/// `dlog_multiplications`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Counters {
    pub nonresidue_trials: u64,
    pub loop_iterations: u64,
    pub dlog_multiplications: u64,
    pub field_multiplications: u64,
}

impl fmt::Display for Counters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trials={} loop={} dlogmul={} fieldmul={}",
            self.nonresidue_trials,
            self.loop_iterations,
            self.dlog_multiplications,
            self.field_multiplications
        )
    }
}
