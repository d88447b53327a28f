use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::kernels::{dtw_full, dtw_windowed};
use crate::Series;

fn naive_envelope(s: &[f64], r: usize) -> (Vec<f64>, Vec<f64>) {
    let n = s.len();
    (0..n)
        .map(|i| {
            let lo = i.saturating_sub(r);
            let hi = (i + r).min(n - 1);
            let win = &s[lo..=hi];
            (
                win.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                win.iter().copied().fold(f64::INFINITY, f64::min),
            )
        })
        .unzip()
}

fn znorm(v: &[f64]) -> Vec<f64> {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    let sd = libm::sqrt(var);
    if sd < 1e-12 {
        vec![0.0; v.len()]
    } else {
        v.iter().map(|x| (x - mean) / sd).collect()
    }
}

const S: [f64; 6] = [3.0, 1.0, 4.0, 4.0, 1.0, 1.0];
const T: [f64; 6] = [1.0, 3.0, 2.0, 1.0, 2.0, 2.0];

#[test]
fn envelope_examples() {
    let wide = compute_envelope(&S, Band::Cells(10));
    assert_eq!(wide.upper(), &[4.0; 6]);
    assert_eq!(wide.lower(), &[1.0; 6]);
    assert_eq!(compute_envelope(&S, Band::Unbounded), wide);

    let zero = compute_envelope(&S, Band::Cells(0));
    assert_eq!(zero.upper(), &S);
    assert_eq!(zero.lower(), &S);

    let one = compute_envelope(&S, Band::Cells(1));
    assert_eq!(one.upper(), &[3.0, 4.0, 4.0, 4.0, 4.0, 1.0]);
    assert_eq!(one.lower(), &[1.0; 6]);
    let (u, l) = naive_envelope(&S, 1);
    assert_eq!((one.upper(), one.lower()), (&u[..], &l[..]));
}

#[test]
fn kim_examples() {
    assert_eq!(lb_kim_fl(&S, &S).unwrap(), 0.0);
    assert_eq!(lb_kim_fl(&[3.0, 0.0, 1.0], &[1.0, 0.0, 2.0]).unwrap(), 5.0);
    assert_eq!(lb_kim_fl(&S, &T).unwrap(), 4.0 + 1.0);
    assert_eq!(lb_kim_fl(&[2.0], &[5.0]).unwrap(), 9.0);
    assert!(matches!(
        lb_kim_fl(&S, &T[..5]),
        Err(Error::LengthMismatch { .. })
    ));
}

#[test]
fn keogh_examples() {
    let env = compute_envelope(&S, Band::Cells(2));
    let inside = lb_keogh(&env, &[3.0, 2.0, 2.0, 3.0, 2.0, 1.0], Band::Cells(2)).unwrap();
    assert_eq!(inside.total, 0.0);
    assert!(inside.contributions.iter().all(|&c| c == 0.0));

    let zero = compute_envelope(&S, Band::Cells(0));
    let pointwise = lb_keogh(&zero, &T, Band::Cells(0)).unwrap();
    assert_eq!(pointwise.total, 23.0);

    assert!(matches!(
        lb_keogh(&env, &T, Band::Cells(1)),
        Err(Error::WindowMismatch {
            envelope: 2,
            requested: 1
        })
    ));
    assert!(matches!(
        lb_keogh(&env, &T[..4], Band::Cells(2)),
        Err(Error::LengthMismatch { .. })
    ));
    // radii past the series length are equivalent
    let wide = compute_envelope(&S, Band::Cells(100));
    assert!(lb_keogh(&wide, &T, Band::Unbounded).is_ok());
}

#[test]
fn keogh_abandons_above_limit() {
    let env = compute_envelope(&S, Band::Cells(0));
    let r = lb_keogh_abandoning(&env, &T, Band::Cells(0), None, 10.0).unwrap();
    assert!(r.abandoned);
    assert!(r.total > 10.0 && r.total < 23.0);
    let order = [3, 0, 1, 2, 4, 5];
    let r = lb_keogh_abandoning(&env, &T, Band::Cells(0), Some(&order), 8.0).unwrap();
    assert!(r.abandoned);
    assert_eq!(r.contributions, vec![0.0, 0.0, 0.0, 9.0, 0.0, 0.0]);
    assert_eq!(r.total, 9.0);
    assert!(lb_keogh_abandoning(&env, &T, Band::Cells(0), Some(&[0, 0, 1, 2, 3, 4]), 8.0).is_err());
    assert!(lb_keogh_abandoning(&env, &T, Band::Cells(0), Some(&[0, 1]), 8.0).is_err());
}

#[test]
fn cumulative_examples() {
    assert_eq!(cumulative_bound(&[0.0; 4]).unwrap().values(), &[0.0; 4]);
    assert_eq!(
        cumulative_bound(&[1.0, 2.0, 3.0]).unwrap().values(),
        &[5.0, 3.0, 0.0]
    );
    assert_eq!(cumulative_bound(&[7.0]).unwrap().values(), &[0.0]);
    assert_eq!(
        cumulative_bound(&[1.0, -2.0, 3.0]),
        Err(Error::InvalidContribution { index: 1 })
    );
    assert!(cumulative_bound(&[]).is_err());
}

#[test]
fn magnitude_order() {
    assert_eq!(
        descending_magnitude_order(&[0.5, -2.0, 1.0, 2.0]),
        vec![1, 3, 2, 0]
    );
}

fn arb_series(min: usize, max: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, min..=max)
}

proptest! {
    #[test]
    fn envelope_matches_naive_scan(s in arb_series(1, 40), r in 0usize..45) {
        let env = compute_envelope(&s, Band::Cells(r));
        let (u, l) = naive_envelope(&s, r);
        prop_assert_eq!(env.upper(), &u[..]);
        prop_assert_eq!(env.lower(), &l[..]);
        for (j, &x) in s.iter().enumerate() {
            prop_assert!(env.lower()[j] <= x && x <= env.upper()[j]);
        }
    }

    #[test]
    fn envelope_widens_with_window(s in arb_series(1, 30), c in arb_series(30, 30), r in 0usize..30, dr in 0usize..30) {
        let c = &c[..s.len()];
        let narrow = compute_envelope(&s, Band::Cells(r));
        let wide = compute_envelope(&s, Band::Cells(r + dr));
        for j in 0..s.len() {
            prop_assert!(wide.upper()[j] >= narrow.upper()[j]);
            prop_assert!(wide.lower()[j] <= narrow.lower()[j]);
        }
        let lb_narrow = lb_keogh(&narrow, c, Band::Cells(r)).unwrap().total;
        let lb_wide = lb_keogh(&wide, c, Band::Cells(r + dr)).unwrap().total;
        prop_assert!(lb_wide <= lb_narrow);
    }

    #[test]
    fn bounds_are_sound(q in arb_series(2, 24), c in arb_series(24, 24), w in 0usize..24) {
        let qn = znorm(&q);
        let cn = znorm(&c[..q.len()]);
        let (qs, cs) = (Series::new(qn.clone()).unwrap(), Series::new(cn.clone()).unwrap());
        prop_assert!(lb_kim_fl(&qn, &cn).unwrap() <= dtw_full(&qs, &cs));
        let band = Band::Cells(w);
        let exact = dtw_windowed(&qs, &cs, band).cost();
        let eq = lb_keogh(&compute_envelope(&qn, band), &cn, band).unwrap();
        let ec = lb_keogh(&compute_envelope(&cn, band), &qn, band).unwrap();
        prop_assert!(eq.total <= exact && ec.total <= exact);
        let sum: f64 = eq.contributions.iter().sum();
        prop_assert!((sum - eq.total).abs() <= 1e-12 * sum.max(1.0));
    }

    #[test]
    fn completed_abandoning_equals_plain(q in arb_series(1, 30), c in arb_series(30, 30), w in 0usize..30, limit in 0.0f64..60.0, rotate in 0usize..30) {
        let c = &c[..q.len()];
        let band = Band::Cells(w);
        let env = compute_envelope(&q, band);
        let plain = lb_keogh(&env, c, band).unwrap();
        let mut order: Vec<usize> = (0..q.len()).collect();
        order.rotate_left(rotate % q.len());
        let r = lb_keogh_abandoning(&env, c, band, Some(&order), limit).unwrap();
        if r.abandoned {
            prop_assert!(plain.total > limit || (plain.total - limit).abs() < 1e-9);
        } else {
            prop_assert_eq!(r, plain);
        }
    }

    #[test]
    fn cumulative_is_reverse_sum(c in prop::collection::vec(0.0f64..10.0, 1..40)) {
        let cb = cumulative_bound(&c).unwrap();
        let v = cb.values();
        prop_assert_eq!(*v.last().unwrap(), 0.0);
        prop_assert!(v.windows(2).all(|w| w[0] >= w[1]));
        for k in 0..c.len() {
            let direct: f64 = c[k + 1..].iter().sum();
            prop_assert!((v[k] - direct).abs() <= 1e-12 * direct.max(1.0));
        }
        let total: f64 = c.iter().sum();
        prop_assert!((v[0] - (total - c[0])).abs() <= 1e-9 * total.max(1.0));
    }

    #[test]
    fn cumulative_steps_are_exact_on_integers(c in prop::collection::vec(0u32..1000, 1..40)) {
        let c: Vec<f64> = c.into_iter().map(f64::from).collect();
        let cb = cumulative_bound(&c).unwrap();
        let v = cb.values();
        for k in 0..c.len() - 1 {
            prop_assert_eq!(v[k] - v[k + 1], c[k + 1]);
        }
    }
}
