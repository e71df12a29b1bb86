//! Derivative-free scalar search: golden-section maximization and bisection.

/// Golden-section iteration cap.
pub const MAX_ITER: usize = 200;
/// Target bracket width in the search variable.
pub const ARG_TOL: f64 = 1e-10;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub arg: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Maximizes a unimodal function on `[lo, hi]`.
///
/// The endpoints are evaluated as well, so maxima sitting on the boundary are
/// returned exactly.
pub fn golden_section_max<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Maximum {
    debug_assert!(lo <= hi);
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iterations = 0;
    while b - a > ARG_TOL && iterations < MAX_ITER {
        iterations += 1;
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
    }
    let mut best = if f1 >= f2 {
        Maximum {
            arg: x1,
            value: f1,
            iterations,
        }
    } else {
        Maximum {
            arg: x2,
            value: f2,
            iterations,
        }
    };
    for x in [lo, hi] {
        let v = f(x);
        if v > best.value {
            best = Maximum {
                arg: x,
                value: v,
                iterations,
            };
        }
    }
    best
}

/// Finds `x` in `[lo, hi]` with `f(x) = target` for nonincreasing `f`, to
/// bracket width [`ARG_TOL`].
pub fn bisect_decreasing<F: FnMut(f64) -> f64>(mut f: F, target: f64, lo: f64, hi: f64) -> f64 {
    let mut a = lo;
    let mut b = hi;
    let mut iterations = 0;
    while b - a > ARG_TOL && iterations < MAX_ITER {
        iterations += 1;
        let mid = 0.5 * (a + b);
        if f(mid) > target {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}
