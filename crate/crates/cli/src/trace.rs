//! CSV export of kernel traces.

use std::io::{self, Write};

use eapdtw_core::kernels::TraceEvent;

pub const TRACE_HEADER: &str = "row,col,value,kind";

/// Writes one line per event, in kernel order. Coordinates are the 1-based
/// matrix cells reported by the kernel.
pub fn write_trace_csv<W: Write>(mut out: W, events: &[TraceEvent]) -> io::Result<()> {
    writeln!(out, "{TRACE_HEADER}")?;
    for e in events {
        writeln!(out, "{},{},{},{}", e.row, e.col, e.value, e.kind.as_str())?;
    }
    out.flush()
}
