use crate::exactpoly::Poly;

/// Rank of a polynomial matrix over the field of rational functions,
/// by fraction-free (Bareiss) elimination.
///
/// Every division in the elimination is exact, so the working entries stay
/// polynomials (they are minors of the input).
pub fn generic_rank(matrix: &[Vec<Poly>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<Poly>> = matrix.to_vec();
    let chart = match m.iter().flatten().next() {
        Some(p) => p.chart().clone(),
        None => return 0,
    };
    let mut prev = Poly::one(&chart);
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let cross = &(&m[row][col] * &m[r][c]) - &(&m[r][col] * &m[row][c]);
                m[r][c] = cross.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[r][col] = Poly::zero(&chart);
        }
        prev = m[row][col].clone();
        row += 1;
    }
    row
}
