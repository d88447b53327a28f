use super::{min2, rounding_slack, row_threshold, squared_cost, RowBuffers, Tracer};

/// DP scan that moves the left border past discard points and abandons when
/// a whole row is discarded.
pub(crate) fn left_prune<T: Tracer>(
    rows: &[f64],
    cols: &[f64],
    window: usize,
    ub: f64,
    cb: Option<&[f64]>,
    buffers: &mut RowBuffers,
    tracer: &mut T,
) -> f64 {
    let lc = cols.len();
    let ll = rows.len();
    let slack = rounding_slack(ll, lc);
    buffers.reset(lc + 1);
    let RowBuffers { prev, curr } = buffers;
    curr[0] = 0.0;
    let mut next_start = 1;

    for (i, &x) in rows.iter().enumerate().map(|(i, x)| (i + 1, x)) {
        core::mem::swap(prev, curr);
        let t = row_threshold(ub, cb, i, window, slack);
        let first = i.saturating_sub(window).max(next_start);
        let last = i.saturating_add(window).min(lc);
        next_start = first;
        curr[first - 1] = f64::INFINITY;
        let mut j = first;

        // Left neighbour is known to exceed the threshold (or lies outside
        // the band): only the top and diagonal matter.
        while j == next_start && j <= last {
            let v = squared_cost(x, cols[j - 1]) + min2(prev[j], prev[j - 1]);
            curr[j] = v;
            tracer.cell(i, j, v);
            if v > t {
                next_start += 1;
                tracer.discard_point(i, j, v);
            }
            j += 1;
        }
        if next_start > last {
            tracer.abandon(i, last, curr[last]);
            return f64::INFINITY;
        }

        let mut left = curr[j - 1];
        while j <= last {
            let v = squared_cost(x, cols[j - 1]) + min2(left, min2(prev[j], prev[j - 1]));
            curr[j] = v;
            left = v;
            tracer.cell(i, j, v);
            j += 1;
        }
    }

    let v = curr[lc];
    if v > ub {
        tracer.abandon(ll, lc, v);
        f64::INFINITY
    } else {
        v
    }
}
