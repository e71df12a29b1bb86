//! Grid arguments: `lo:hi:k` for `k` evenly spaced points, or a comma list.

use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T>(pub Vec<T>);

fn sorted<T: PartialOrd>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl FromStr for Grid<f64> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let values = match parts.as_slice() {
            [lo, hi, k] => {
                let lo: f64 = lo
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad lower end {lo:?}: {e}"))?;
                let hi: f64 = hi
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad upper end {hi:?}: {e}"))?;
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad point count {k:?}: {e}"))?;
                if k == 0 || !(lo.is_finite() && hi.is_finite()) {
                    return Err(format!(
                        "range {s:?} needs finite ends and at least one point"
                    ));
                }
                if k == 1 {
                    vec![lo]
                } else {
                    hoeffding::report::linspace(lo, hi, k)
                }
            }
            [_] => s
                .split(',')
                .map(|x| {
                    let v: f64 = x
                        .trim()
                        .parse()
                        .map_err(|e| format!("bad number {x:?}: {e}"))?;
                    if v.is_finite() {
                        Ok(v)
                    } else {
                        Err(format!("non-finite grid value {x:?}"))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?,
            _ => return Err(format!("expected lo:hi:k or a comma list, got {s:?}")),
        };
        if values.is_empty() || !sorted(&values) {
            return Err(format!(
                "grid {s:?} must be nonempty and strictly increasing"
            ));
        }
        Ok(Grid(values))
    }
}

impl FromStr for Grid<usize> {
    type Err = String;

    /// `lo:hi` for an inclusive range, or a comma list.
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad integer {x:?}: {e}"))
        };
        let values = match s.split_once(':') {
            Some((lo, hi)) => (parse(lo)?..=parse(hi)?).collect(),
            None => s.split(',').map(parse).collect::<Result<Vec<_>, _>>()?,
        };
        if values.is_empty() || !sorted(&values) || values[0] == 0 {
            return Err(format!(
                "{s:?} must be a nonempty increasing list of positive integers"
            ));
        }
        Ok(Grid(values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges_and_lists() {
        let g: Grid<f64> = "0:1:5".parse().unwrap();
        assert_eq!(g.0, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let g: Grid<f64> = "0.1, 0.2,0.5".parse().unwrap();
        assert_eq!(g.0, vec![0.1, 0.2, 0.5]);
        let g: Grid<usize> = "1:4".parse().unwrap();
        assert_eq!(g.0, vec![1, 2, 3, 4]);
        assert_eq!("3,8,40".parse::<Grid<usize>>().unwrap().0, vec![3, 8, 40]);
    }

    #[test]
    fn rejects_unsorted_and_empty() {
        assert!("0.5,0.1".parse::<Grid<f64>>().is_err());
        assert!("1:0:0".parse::<Grid<f64>>().is_err());
        assert!("".parse::<Grid<f64>>().is_err());
        assert!("nan".parse::<Grid<f64>>().is_err());
        assert!("0:3".parse::<Grid<usize>>().is_err());
        assert!("5:2".parse::<Grid<usize>>().is_err());
    }
}
