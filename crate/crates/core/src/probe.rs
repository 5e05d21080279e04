/// Counts elementary steps of a solver run: bundle visits while scanning
/// residuals plus one per colored edge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WorkCounter {
    pub ops: u64,
}

impl WorkCounter {
    #[inline]
    pub(crate) fn add(&mut self, n: usize) {
        self.ops += n as u64;
    }
}
