use super::{min2, squared_cost, RowBuffers, Tracer};

/// Plain DP scan over the band, two row buffers.
pub(crate) fn full<T: Tracer>(
    rows: &[f64],
    cols: &[f64],
    window: usize,
    buffers: &mut RowBuffers,
    tracer: &mut T,
) -> f64 {
    let lc = cols.len();
    buffers.reset(lc + 1);
    let RowBuffers { prev, curr } = buffers;
    curr[0] = 0.0;

    for (i, &x) in rows.iter().enumerate().map(|(i, x)| (i + 1, x)) {
        core::mem::swap(prev, curr);
        let first = i.saturating_sub(window).max(1);
        let last = i.saturating_add(window).min(lc);
        curr[first - 1] = f64::INFINITY;
        // the left neighbour stays in a register
        let mut left = curr[first - 1];
        for j in first..=last {
            let v = squared_cost(x, cols[j - 1]) + min2(left, min2(prev[j], prev[j - 1]));
            curr[j] = v;
            left = v;
            tracer.cell(i, j, v);
        }
    }
    curr[lc]
}
