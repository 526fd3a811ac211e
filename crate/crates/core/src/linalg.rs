//! Exact linear algebra over `ℚ(q)` (fraction-free, entries in `ℚ[q, q⁻¹]`)
//! and over `ℚ`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::coeffs::{Laurent, LocScalar, Scalar, Q};
use crate::ncalg::{NCPoly, Word};

/// Rank over `ℚ(q)` by Bareiss elimination. Pivots are the first nonzero
/// entry in column order, so the run is deterministic.
pub fn rank_laurent(mut rows: Vec<Vec<Laurent>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = Laurent::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            let factor = rows[i][col].clone();
            for j in col + 1..ncols {
                let num = pivot
                    .times(&rows[i][j])
                    .minus(&factor.times(&rows[rank][j]));
                rows[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            rows[i][col] = Laurent::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank over `ℚ`.
pub fn rank_q(rows: Vec<Vec<Q>>) -> usize {
    QBasis::new(rows).rank()
}

/// Coefficient matrix of a family of polynomials: one row per polynomial,
/// one column per word occurring anywhere. Rows with `(q-1)` denominators
/// are cleared by multiplying through, which keeps ranks unchanged.
pub fn coefficient_matrix(polys: &[NCPoly<LocScalar>]) -> (Vec<Word>, Vec<Vec<Laurent>>) {
    let mut cols: BTreeMap<Word, usize> = BTreeMap::new();
    for p in polys {
        for (w, _) in p.terms() {
            let next = cols.len();
            cols.entry(w.clone()).or_insert(next);
        }
    }
    // reindex in word order
    let words: Vec<Word> = cols.keys().cloned().collect();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows = polys
        .iter()
        .map(|p| {
            let den = p
                .terms()
                .map(|(_, c)| c.denominator_power())
                .max()
                .unwrap_or(0);
            let mut row = vec![Laurent::zero(); words.len()];
            for (w, c) in p.terms() {
                let cleared = c.mul_qminus1(den);
                row[index[w]] = cleared.to_laurent().expect("denominator cleared").clone();
            }
            row
        })
        .collect();
    (words, rows)
}

/// Rank over `ℚ(q)` of the span of `polys`.
pub fn rank_over_fraction_field(polys: &[NCPoly<LocScalar>]) -> usize {
    let (_, rows) = coefficient_matrix(polys);
    rank_laurent(rows)
}

/// Whether `target` lies in the `ℚ(q)`-span of `basis`.
pub fn in_span_over_fraction_field(
    basis: &[NCPoly<LocScalar>],
    target: &NCPoly<LocScalar>,
) -> bool {
    let mut all = basis.to_vec();
    all.push(target.clone());
    rank_over_fraction_field(&all) == rank_over_fraction_field(basis)
}

/// Rank at `q = 1` of polynomials with nonnegative valuation.
pub fn rank_at_one(polys: &[NCPoly<LocScalar>]) -> crate::Result<usize> {
    let mut specialized = Vec::with_capacity(polys.len());
    for p in polys {
        specialized.push(p.try_map_coeffs(LocScalar::eval_at_one)?);
    }
    Ok(rank_q(rational_matrix(&specialized).1))
}

/// Coefficient matrix of rational polynomials.
pub fn rational_matrix(polys: &[NCPoly<Q>]) -> (Vec<Word>, Vec<Vec<Q>>) {
    let mut words: Vec<Word> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(w, _)| w.clone()))
        .collect();
    words.sort();
    words.dedup();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows = polys
        .iter()
        .map(|p| {
            let mut row = vec![Q::zero(); words.len()];
            for (w, c) in p.terms() {
                row[index[w]] = c.clone();
            }
            row
        })
        .collect();
    (words, rows)
}

/// Reduced row echelon form of a set of rational vectors, tracking how each
/// echelon row combines the inputs. Used to project a vector onto a span and
/// read off both the coordinates and the orthogonal residual.
#[derive(Clone, Debug)]
pub struct QBasis {
    // (pivot column, echelon row, combination of input rows)
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
    ninputs: usize,
    ncols: usize,
}

impl QBasis {
    pub fn new(input: Vec<Vec<Q>>) -> Self {
        let ninputs = input.len();
        let ncols = input.first().map_or(0, Vec::len);
        let mut work: Vec<(Vec<Q>, Vec<Q>)> = input
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let mut comb = vec![Q::zero(); ninputs];
                comb[i] = Q::from_integer(1.into());
                (v, comb)
            })
            .collect();
        let mut rows: Vec<(usize, Vec<Q>, Vec<Q>)> = Vec::new();
        let mut next = 0;
        for col in 0..ncols {
            let Some(p) = (next..work.len()).find(|&i| !work[i].0[col].is_zero()) else {
                continue;
            };
            work.swap(next, p);
            let inv = work[next].0[col].recip();
            let (pv, pc) = {
                let (v, c) = &work[next];
                (
                    v.iter().map(|x| x * &inv).collect::<Vec<_>>(),
                    c.iter().map(|x| x * &inv).collect::<Vec<_>>(),
                )
            };
            for (i, (v, c)) in work.iter_mut().enumerate() {
                if i == next || v[col].is_zero() {
                    continue;
                }
                let f = v[col].clone();
                axpy(v, &pv, &f);
                axpy(c, &pc, &f);
            }
            for (_, v, c) in rows.iter_mut() {
                if v[col].is_zero() {
                    continue;
                }
                let f = v[col].clone();
                axpy(v, &pv, &f);
                axpy(c, &pc, &f);
            }
            work[next] = (pv.clone(), pc.clone());
            rows.push((col, pv, pc));
            next += 1;
        }
        QBasis {
            rows,
            ninputs,
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Writes `v = Σ coeffs[i] · input[i] + residual`, with `residual`
    /// supported off the pivot columns (zero iff `v` is in the span).
    pub fn project(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        let mut res = v.to_vec();
        let mut coeffs = vec![Q::zero(); self.ninputs];
        for (col, row, comb) in &self.rows {
            let f = res[*col].clone();
            if f.is_zero() {
                continue;
            }
            axpy(&mut res, row, &f);
            for (c, k) in coeffs.iter_mut().zip(comb) {
                *c += &f * k;
            }
        }
        (coeffs, res)
    }
}

/// `v -= f · w`.
fn axpy(v: &mut [Q], w: &[Q], f: &Q) {
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero() {
            *a -= f * b;
        }
    }
}

/// `Σ |v_i|`.
pub fn l1_norm(v: &[Q]) -> Q {
    v.iter().fold(Q::zero(), |acc, x| acc + x.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::q_int;

    fn l(v: &[(i32, i64)]) -> Laurent {
        Laurent::from_terms(v.iter().map(|&(k, c)| (k, q_int(c))))
    }

    #[test]
    fn bareiss_detects_generic_rank() {
        // [[1, q], [q, q^2]] has rank 1; [[1, q], [q, 1]] has rank 2 over ℚ(q)
        let a = vec![
            vec![l(&[(0, 1)]), l(&[(1, 1)])],
            vec![l(&[(1, 1)]), l(&[(2, 1)])],
        ];
        assert_eq!(rank_laurent(a), 1);
        let b = vec![
            vec![l(&[(0, 1)]), l(&[(1, 1)])],
            vec![l(&[(1, 1)]), l(&[(0, 1)])],
        ];
        assert_eq!(rank_laurent(b), 2);
    }

    #[test]
    fn projection_coordinates_and_residual() {
        let basis = QBasis::new(vec![
            vec![q_int(1), q_int(1), q_int(0)],
            vec![q_int(0), q_int(1), q_int(1)],
            vec![q_int(1), q_int(2), q_int(1)],
        ]);
        assert_eq!(basis.rank(), 2);
        let (c, r) = basis.project(&[q_int(2), q_int(3), q_int(1)]);
        assert!(r.iter().all(Zero::is_zero));
        // coordinates reproduce the vector
        let rebuilt: Vec<Q> = (0..3)
            .map(|j| {
                c[0].clone() * [q_int(1), q_int(1), q_int(0)][j].clone()
                    + c[1].clone() * [q_int(0), q_int(1), q_int(1)][j].clone()
                    + c[2].clone() * [q_int(1), q_int(2), q_int(1)][j].clone()
            })
            .collect();
        assert_eq!(rebuilt, vec![q_int(2), q_int(3), q_int(1)]);
        let (_, r) = basis.project(&[q_int(0), q_int(0), q_int(1)]);
        assert_eq!(l1_norm(&r), q_int(1));
    }
}
