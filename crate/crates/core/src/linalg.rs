//! Small exact linear algebra over [`Rat`]: row reduction, solving, and
//! orthogonal projection onto a span.

use crate::rational::Rat;

/// Row-reduces `rows` in place and returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = &Rat::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Rank of the given vectors.
pub fn rank(vectors: &[Vec<Rat>]) -> usize {
    let mut m = vectors.to_vec();
    row_reduce(&mut m).len()
}

/// Solves `Σ c_i v_i = target` for the coefficients `c`, if a solution exists.
/// When the vectors are dependent an arbitrary solution is returned.
pub fn solve_combination(vectors: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let k = vectors.len();
    let n = target.len();
    // Augmented system: rows are coordinates, columns are coefficients.
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Rat::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

/// Orthonormal-free orthogonal basis (Gram–Schmidt without normalization) of
/// the span of the given vectors.
pub fn orthogonal_basis(vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &out {
            let c = &dot(&w, b) / &dot(b, b);
            for (x, y) in w.iter_mut().zip(b) {
                *x -= &(&c * y);
            }
        }
        if w.iter().any(|x| !x.is_zero()) {
            out.push(w);
        }
    }
    out
}

/// Euclidean dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orthogonal projection of `v` onto the span of an orthogonal basis.
pub fn project(v: &[Rat], orth: &[Vec<Rat>]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); v.len()];
    for b in orth {
        let c = &dot(v, b) / &dot(b, b);
        for (x, y) in out.iter_mut().zip(b) {
            *x += &(&c * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::int(x)).collect()
    }

    #[test]
    fn rank_and_solve() {
        let vs = vec![v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[1, 0, -1])];
        assert_eq!(rank(&vs), 2);
        let c = solve_combination(&vs[..2], &v(&[2, -1, -1])).unwrap();
        assert_eq!(c, vec![Rat::int(2), Rat::int(1)]);
        assert!(solve_combination(&vs[..2], &v(&[1, 1, 1])).is_none());
    }

    #[test]
    fn projection_onto_hyperplane() {
        let orth = orthogonal_basis(&[v(&[1, -1, 0]), v(&[0, 1, -1])]);
        let p = project(&v(&[3, 0, 0]), &orth);
        assert_eq!(p, v(&[2, -1, -1]));
    }
}
