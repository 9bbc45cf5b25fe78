//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;

/// Rank over `Q` of a dense integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(&mut small) {
        Some(r) => r,
        None => {
            let mut big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_big(&mut big)
        }
    }
}

/// Returns `None` on overflow.
fn bareiss_i128(m: &mut [Vec<i128>]) -> Option<usize> {
    let rows = m.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = m[0].len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c];
        for i in r + 1..rows {
            let factor = m[i][c];
            for j in c..cols {
                // exact division by the previous pivot
                let v = pivot.checked_mul(m[i][j])?.checked_sub(factor.checked_mul(m[r][j])?)?;
                m[i][j] = v / prev;
            }
            // columns left of c are already zero in rows below r
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != zero) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let factor = m[i][c].clone();
            for j in c..cols {
                let v = &pivot * &m[i][j] - &factor * &m[r][j];
                m[i][j] = v / &prev;
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}
