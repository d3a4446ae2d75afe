use serde::Serialize;

/// Counted work, independent of wall clock.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Work {
    /// Arcs and edges inspected by flow, search and rewrite routines.
    pub edge_scans: u64,
    /// Number of (s,t) flow computations started.
    pub flow_calls: u64,
}

impl Work {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn scan(&mut self, count: u64) {
        self.edge_scans += count;
    }
}

impl std::ops::AddAssign for Work {
    fn add_assign(&mut self, rhs: Self) {
        self.edge_scans += rhs.edge_scans;
        self.flow_calls += rhs.flow_calls;
    }
}
