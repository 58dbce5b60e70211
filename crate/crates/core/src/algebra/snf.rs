//! Smith normal form invariants of integer matrices with overflow detection.

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("integer overflow during Smith normal form reduction")]
pub struct Overflow;

fn ck(x: Option<i64>) -> Result<i64, Overflow> {
    x.ok_or(Overflow)
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` of a dense integer matrix.
pub fn invariant_factors(mut a: Vec<Vec<i64>>) -> Result<Vec<u64>, Overflow> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize, i64)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.map_or(true, |(_, _, b)| x.unsigned_abs() < b.unsigned_abs()) {
                    best = Some((i, j, x));
                    if x.unsigned_abs() == 1 {
                        break;
                    }
                }
            }
            if best.is_some_and(|(_, _, b)| b.unsigned_abs() == 1) {
                break;
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = ck(a[i][t].checked_div(p))?;
                    if q != 0 {
                        let (top, rest) = a.split_at_mut(i);
                        let pivot_row = &top[t];
                        for (x, &y) in rest[0].iter_mut().zip(pivot_row).skip(t) {
                            *x = ck(x.checked_sub(ck(q.checked_mul(y))?))?;
                        }
                    }
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let q = ck(a[t][j].checked_div(p))?;
                    if q != 0 {
                        for row in a.iter_mut().skip(t) {
                            let y = row[t];
                            row[j] = ck(row[j].checked_sub(ck(q.checked_mul(y))?))?;
                        }
                    }
                    clean &= a[t][j] == 0;
                }
            }
            if clean {
                break;
            }
            // a remainder smaller than the pivot survived; move it to the pivot position
            let mut best = (t, t, p.unsigned_abs());
            for i in t + 1..m {
                if a[i][t] != 0 && a[i][t].unsigned_abs() < best.2 {
                    best = (i, t, a[i][t].unsigned_abs());
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 && a[t][j].unsigned_abs() < best.2 {
                    best = (t, j, a[t][j].unsigned_abs());
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        t += 1;
    }
    let mut d: Vec<u64> = (0..t).map(|i| a[i][i].unsigned_abs()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = (d[i] / g).checked_mul(d[j]).ok_or(Overflow)?;
            d[i] = g;
            d[j] = l;
        }
    }
    Ok(d)
}
