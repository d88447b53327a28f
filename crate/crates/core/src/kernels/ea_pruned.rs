use super::{min2, rounding_slack, row_threshold, squared_cost, RowBuffers, Tracer};

/// Early abandoning pruned DTW.
///
/// Each row runs in four stages:
///
/// 1. while the left border keeps advancing (discard points), cells read only
///    their top and diagonal neighbours;
/// 2. up to the previous row's pruning point, the usual three-way minimum;
/// 3. at the previous pruning point the top neighbour is pruned: read the
///    diagonal (and the left one unless it was discarded); a discarded left
///    neighbour plus an exceeding cell is a border collision;
/// 4. past the previous pruning point only the left neighbour remains, and the
///    row stops at the first exceeding cell.
///
/// A cell "exceeds" when its value is strictly greater than the row's
/// threshold. The pruning point of a row is one past its last non-exceeding
/// cell.
pub(crate) fn ea_pruned<T: Tracer>(
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
    // The top border: everything after (0, 0) is +inf.
    let mut prev_pp = 1;
    tracer.pruning_point(0, 1, f64::INFINITY);
    let mut last_col = 0;

    for (i, &x) in rows.iter().enumerate().map(|(i, x)| (i + 1, x)) {
        core::mem::swap(prev, curr);
        let t = row_threshold(ub, cb, i, window, slack);
        let first = i.saturating_sub(window).max(next_start);
        let last = i.saturating_add(window).min(lc);
        if first > prev_pp {
            // Left border already inside the pruned area.
            tracer.abandon(i - 1, last_col, prev[last_col]);
            return f64::INFINITY;
        }
        next_start = first;
        let mut pp = first;
        curr[first - 1] = f64::INFINITY;
        let mut j = first;
        let stop = prev_pp.min(last + 1);

        // Stage 1: discard points.
        while j == next_start && j < stop {
            let v = squared_cost(x, cols[j - 1]) + min2(prev[j], prev[j - 1]);
            curr[j] = v;
            tracer.cell(i, j, v);
            if v <= t {
                pp = j + 1;
            } else {
                next_start += 1;
                tracer.discard_point(i, j, v);
            }
            j += 1;
        }

        // Stage 2: regular cells.
        let mut left = curr[j - 1];
        while j < stop {
            let v = squared_cost(x, cols[j - 1]) + min2(left, min2(prev[j], prev[j - 1]));
            curr[j] = v;
            left = v;
            tracer.cell(i, j, v);
            if v <= t {
                pp = j + 1;
            }
            j += 1;
        }

        // Stage 3: the column of the previous pruning point.
        if j <= last {
            let c = squared_cost(x, cols[j - 1]);
            if j == next_start {
                let v = c + prev[j - 1];
                curr[j] = v;
                tracer.cell(i, j, v);
                if v <= t {
                    pp = j + 1;
                } else {
                    tracer.abandon(i, j, v);
                    return f64::INFINITY;
                }
            } else {
                let v = c + min2(curr[j - 1], prev[j - 1]);
                curr[j] = v;
                tracer.cell(i, j, v);
                if v <= t {
                    pp = j + 1;
                }
            }
            j += 1;
        } else if j == next_start {
            // Stage 1 discarded the whole reachable row.
            tracer.abandon(i, j - 1, curr[j - 1]);
            return f64::INFINITY;
        }

        // Stage 4: only the left neighbour can be below the threshold.
        let mut left = curr[j - 1];
        while j == pp && j <= last {
            let v = squared_cost(x, cols[j - 1]) + left;
            curr[j] = v;
            left = v;
            tracer.cell(i, j, v);
            if v <= t {
                pp = j + 1;
            }
            j += 1;
        }

        if pp <= last {
            tracer.pruning_point(i, pp, curr[pp]);
        }
        prev_pp = pp;
        last_col = j - 1;
    }

    if prev_pp > lc && curr[lc] <= ub {
        curr[lc]
    } else {
        tracer.abandon(ll, last_col, curr[last_col]);
        f64::INFINITY
    }
}
