use std::ops::AddAssign;

/// Work counters accumulated during a computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCount {
    /// Comparisons between two values.
    pub comparisons: u64,
    /// Evaluations of a cell `a[i] + b[j]` of an implicit sum matrix.
    pub cell_evals: u64,
    /// Divide-and-conquer combine steps.
    pub combines: u64,
}

impl OpCount {
    /// Comparisons plus cell evaluations; the figure reported by the bench.
    pub fn total(&self) -> u64 {
        self.comparisons + self.cell_evals
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, rhs: Self) {
        self.comparisons += rhs.comparisons;
        self.cell_evals += rhs.cell_evals;
        self.combines += rhs.combines;
    }
}
