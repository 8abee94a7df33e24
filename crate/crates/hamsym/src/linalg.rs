//! Exact integer linear algebra: fraction-free Gaussian elimination for rank
//! and determinant, plus a deliberately naive determinant used to cross-check
//! the elimination on small matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Outcome of one fraction-free elimination pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub rank: usize,
    /// Exact determinant; only present for square inputs.
    pub determinant: Option<BigInt>,
}

/// Fraction-free (Bareiss) elimination over exact integers with partial
/// pivoting by absolute value. Every intermediate entry is a minor of the
/// input matrix, so the single division per update is exact and coefficient
/// growth stays polynomial in the minors rather than doubling per step.
pub fn eliminate(matrix: &[Vec<BigInt>]) -> Result<Elimination> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::domain("ragged matrix"));
    }
    let square = rows == cols;
    if rows == 0 || cols == 0 {
        return Ok(Elimination {
            rank: 0,
            determinant: square.then(BigInt::one),
        });
    }

    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut negate = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Pivot: the first row at or below `rank` with maximal |entry|.
        let mut pivot: Option<usize> = None;
        for r in rank..rows {
            if m[r][col].is_zero() {
                continue;
            }
            match pivot {
                Some(p) if m[p][col].abs() >= m[r][col].abs() => {}
                _ => pivot = Some(r),
            }
        }
        let Some(p) = pivot else {
            continue; // no pivot in this column; rank does not advance
        };
        if p != rank {
            m.swap(p, rank);
            negate = !negate;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&num % &prev).is_zero(), "fraction-free step must divide exactly");
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }

    let determinant = square.then(|| {
        if rank < rows {
            BigInt::zero()
        } else if negate {
            -prev.clone()
        } else {
            prev.clone()
        }
    });
    Ok(Elimination { rank, determinant })
}

/// Rank of an exact integer matrix.
pub fn rank(matrix: &[Vec<BigInt>]) -> Result<usize> {
    Ok(eliminate(matrix)?.rank)
}

/// Determinant by Laplace expansion, exponential on purpose: it shares no
/// code with [`eliminate`] so the two can check each other. Capped at 9×9.
pub fn naive_determinant(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::domain("naive determinant requires a square matrix"));
    }
    if n > 9 {
        return Err(Error::resource(format!(
            "naive determinant capped at 9x9, got {n}x{n}"
        )));
    }
    fn expand(matrix: &[Vec<BigInt>], row: usize, used_cols: u32) -> BigInt {
        let n = matrix.len();
        if row == n {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        let mut sign_flip = false;
        for c in 0..n {
            if used_cols >> c & 1 == 1 {
                continue;
            }
            let entry = &matrix[row][c];
            if !entry.is_zero() {
                let sub = expand(matrix, row + 1, used_cols | 1 << c);
                let term = entry * sub;
                if sign_flip {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            sign_flip = !sign_flip;
        }
        acc
    }
    Ok(expand(matrix, 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_known_cases() {
        let e = eliminate(&m(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(e.rank, 2);
        assert_eq!(e.determinant, Some(BigInt::from(-2)));

        let e = eliminate(&m(&[&[1, 2], &[2, 4]])).unwrap();
        assert_eq!(e.rank, 1);
        assert_eq!(e.determinant, Some(BigInt::zero()));

        let e = eliminate(&m(&[&[0, 1], &[0, 2]])).unwrap();
        assert_eq!(e.rank, 1);

        // Rectangular: rank only.
        let e = eliminate(&m(&[&[1, 2, 3], &[2, 4, 6]])).unwrap();
        assert_eq!(e.rank, 1);
        assert_eq!(e.determinant, None);

        let e = eliminate(&m(&[&[]])).unwrap();
        assert_eq!(e.rank, 0);
    }

    #[test]
    fn identity_and_diagonal() {
        let d = m(&[&[48, 0, 0], &[0, 48, 0], &[0, 0, 48]]);
        let e = eliminate(&d).unwrap();
        assert_eq!(e.rank, 3);
        assert_eq!(e.determinant, Some(BigInt::from(48 * 48 * 48)));
    }

    #[test]
    fn ragged_matrix_rejected() {
        let bad = vec![vec![BigInt::one()], vec![BigInt::one(), BigInt::zero()]];
        assert!(eliminate(&bad).is_err());
    }

    #[test]
    fn naive_determinant_known_values() {
        assert_eq!(naive_determinant(&m(&[&[5]])).unwrap(), BigInt::from(5));
        assert_eq!(
            naive_determinant(&m(&[&[1, 2], &[3, 4]])).unwrap(),
            BigInt::from(-2)
        );
        // Vandermonde on 1, 2, 3: det = (2-1)(3-1)(3-2) = 2.
        let v = m(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]);
        assert_eq!(naive_determinant(&v).unwrap(), BigInt::from(2));
        assert!(naive_determinant(&m(&[&[1, 2], &[3, 4, 5]])).is_err());
    }

    #[test]
    fn elimination_agrees_with_naive_determinant() {
        // Deterministic xorshift-driven random matrices up to 6x6.
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..200 {
            let n = (next() % 6 + 1) as usize;
            let mat: Vec<Vec<BigInt>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| BigInt::from((next() % 11) as i64 - 5))
                        .collect()
                })
                .collect();
            let e = eliminate(&mat).unwrap();
            let naive = naive_determinant(&mat).unwrap();
            assert_eq!(e.determinant.as_ref(), Some(&naive), "trial {trial}");
            assert_eq!(e.rank == n, !naive.is_zero(), "trial {trial}");
        }
    }
}
