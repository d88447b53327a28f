//! Instrumentation hooks for the kernels.
//!
//! Kernels are generic over a [`Tracer`]; the untraced entry points use
//! [`NoTrace`], whose hooks compile away. Coordinates are 1-based matrix
//! cells `(row, col)` in the kernel's orientation: rows walk the longer
//! series (the first argument when lengths are equal), columns the shorter.

use alloc::vec::Vec;

pub trait Tracer {
    /// A DP cell was evaluated.
    fn cell(&mut self, row: usize, col: usize, value: f64);
    /// The cell extends the left border (it exceeds the threshold and so do
    /// all cells to its left in the row).
    fn discard_point(&mut self, _row: usize, _col: usize, _value: f64) {}
    /// The row's final pruning point: this cell and every cell after it in
    /// the row exceed the threshold.
    fn pruning_point(&mut self, _row: usize, _col: usize, _value: f64) {}
    /// The kernel gave up; the coordinates are those of the last evaluated
    /// cell.
    fn abandon(&mut self, _row: usize, _col: usize, _value: f64) {}
}

/// Discards everything.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoTrace;

impl Tracer for NoTrace {
    #[inline(always)]
    fn cell(&mut self, _row: usize, _col: usize, _value: f64) {}
}

/// Counts evaluated cells only.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CellCounter {
    pub cells: u64,
}

impl Tracer for CellCounter {
    #[inline(always)]
    fn cell(&mut self, _row: usize, _col: usize, _value: f64) {
        self.cells += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Cell,
    DiscardPoint,
    PruningPoint,
    Abandon,
}

impl TraceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TraceKind::Cell => "cell",
            TraceKind::DiscardPoint => "discard_point",
            TraceKind::PruningPoint => "pruning_point",
            TraceKind::Abandon => "abandon",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEvent {
    pub row: usize,
    pub col: usize,
    pub value: f64,
    pub kind: TraceKind,
}

/// Full record of a kernel run.
///
/// Discard points, pruning points and the abandon cell are always kept. The
/// evaluated cells themselves, and the ordered event log, are only kept when
/// built with [`KernelTrace::with_matrix`].
#[derive(Debug, Clone, Default)]
pub struct KernelTrace {
    pub cells_evaluated: u64,
    pub discard_points: Vec<(usize, usize)>,
    pub pruning_points: Vec<(usize, usize)>,
    pub abandon_cell: Option<(usize, usize)>,
    pub matrix_cells: Option<Vec<(usize, usize, f64)>>,
    events: Vec<TraceEvent>,
}

impl KernelTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_matrix() -> Self {
        Self {
            matrix_cells: Some(Vec::new()),
            ..Self::default()
        }
    }

    /// Events in the order the kernel produced them. Empty unless built with
    /// [`KernelTrace::with_matrix`].
    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn cell_value(&self, row: usize, col: usize) -> Option<f64> {
        self.matrix_cells
            .as_ref()?
            .iter()
            .find(|&&(r, c, _)| r == row && c == col)
            .map(|&(_, _, v)| v)
    }

    fn push(&mut self, row: usize, col: usize, value: f64, kind: TraceKind) {
        if self.matrix_cells.is_some() {
            self.events.push(TraceEvent {
                row,
                col,
                value,
                kind,
            });
        }
    }
}

impl Tracer for KernelTrace {
    fn cell(&mut self, row: usize, col: usize, value: f64) {
        self.cells_evaluated += 1;
        if let Some(cells) = self.matrix_cells.as_mut() {
            cells.push((row, col, value));
        }
        self.push(row, col, value, TraceKind::Cell);
    }

    fn discard_point(&mut self, row: usize, col: usize, value: f64) {
        self.discard_points.push((row, col));
        self.push(row, col, value, TraceKind::DiscardPoint);
    }

    fn pruning_point(&mut self, row: usize, col: usize, value: f64) {
        self.pruning_points.push((row, col));
        self.push(row, col, value, TraceKind::PruningPoint);
    }

    fn abandon(&mut self, row: usize, col: usize, value: f64) {
        self.abandon_cell = Some((row, col));
        self.push(row, col, value, TraceKind::Abandon);
    }
}
