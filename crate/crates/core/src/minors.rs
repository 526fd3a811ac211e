//! Quantum minors, Plücker coordinates and degree-bounded linear algebra on
//! the quantum Grassmannian.

use itertools::Itertools;

use crate::coeffs::{Laurent, LocScalar, QConv};
use crate::error::{Error, Result};
use crate::exec::par_map;
use crate::hopf::{QuantumMatrix, TensorPoly};
use crate::linalg::{rank_at_one, rank_over_fraction_field};
use crate::ncalg::NCPoly;

/// Row and column index tuples of a quantum minor, both strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorIndex {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorIndex {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if rows.len() != cols.len() {
            return Err(Error::IndexError(format!(
                "{} rows against {} columns",
                rows.len(),
                cols.len()
            )));
        }
        if !increasing(&rows) || !increasing(&cols) {
            return Err(Error::IndexError("minor indices must increase".into()));
        }
        if rows.iter().chain(&cols).any(|&i| i == 0 || i > n) {
            return Err(Error::IndexError(format!("minor index outside 1..={n}")));
        }
        Ok(MinorIndex { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// All increasing `r`-tuples in `1..=n`, lexicographically.
pub fn r_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (1..=n).combinations(r).collect()
}

/// `D^I_K`.
pub fn quantum_minor(a: &QuantumMatrix, idx: &MinorIndex) -> NCPoly<LocScalar> {
    a.quantum_minor(&idx.rows, &idx.cols)
}

/// `D^I = D^I_{1…r}`.
pub fn plucker_coordinate(a: &QuantumMatrix, rows: &[usize]) -> NCPoly<LocScalar> {
    let cols: Vec<usize> = (1..=rows.len()).collect();
    a.quantum_minor(rows, &cols)
}

/// The Grassmannian `Gr(r, n)` inside `O_q(M_n)`.
#[derive(Clone, Debug)]
pub struct Grassmannian {
    alg: QuantumMatrix,
    r: usize,
    coords: Vec<(Vec<usize>, NCPoly<LocScalar>)>,
}

impl Grassmannian {
    pub fn new(n: usize, r: usize, conv: QConv) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::IndexError(format!(
                "need 0 < r < n, got r = {r}, n = {n}"
            )));
        }
        let alg = QuantumMatrix::new(n, conv)?;
        let subsets = r_subsets(n, r);
        let polys = par_map(&subsets, |i| plucker_coordinate(&alg, i));
        Ok(Grassmannian {
            alg,
            r,
            coords: subsets.into_iter().zip(polys).collect(),
        })
    }

    pub fn alg(&self) -> &QuantumMatrix {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn i0(&self) -> Vec<usize> {
        (1..=self.r).collect()
    }

    /// All Plücker coordinates, indexed by `r_subsets(n, r)`.
    pub fn coordinates(&self) -> &[(Vec<usize>, NCPoly<LocScalar>)] {
        &self.coords
    }

    pub fn plucker(&self, rows: &[usize]) -> NCPoly<LocScalar> {
        self.coords
            .iter()
            .find(|(i, _)| i == rows)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| plucker_coordinate(&self.alg, rows))
    }

    /// `D_0 = D^{1…r}`.
    pub fn d0(&self) -> NCPoly<LocScalar> {
        self.plucker(&self.i0())
    }

    /// Rows `1…ĵ…r i` of the big-cell generator `t_{ij}`.
    pub fn swap_rows(&self, i: usize, j: usize) -> Vec<usize> {
        (1..=self.r)
            .filter(|&k| k != j)
            .chain(std::iter::once(i))
            .collect()
    }

    /// `Δ(D^I)` against `Σ_K D^I_K ⊗ D^K`.
    pub fn coaction_identity_check(&self, rows: &[usize]) -> bool {
        let lhs = self.alg.coproduct(&self.plucker(rows));
        let mut rhs = TensorPoly::zero();
        for (k, dk) in &self.coords {
            let left = self.alg.quantum_minor(rows, k);
            rhs.add_pure(&left, dk, &LocScalar::one());
        }
        lhs == rhs
    }

    /// `c` with `D_0 · p = q^c · p · D_0`.
    pub fn commutation_exponent(&self, p: &NCPoly<LocScalar>) -> Result<i32> {
        commutation_exponent_with(&self.alg, &self.d0(), p)
    }

    /// Formal degree-`d` monomials `D^{I_1} ⋯ D^{I_d}` with `I_1 ≤ … ≤ I_d`,
    /// evaluated in `O_q(M_n)`.
    pub fn basis_slice(&self, d: usize) -> GrassmannBasisSlice {
        let idx: Vec<Vec<usize>> = (0..self.coords.len())
            .combinations_with_replacement(d)
            .collect();
        let elements = par_map(&idx, |combo| {
            let factors: Vec<_> = combo.iter().map(|&k| self.coords[k].1.clone()).collect();
            self.alg.pres().product(&factors)
        });
        let labels = idx
            .iter()
            .map(|combo| {
                combo
                    .iter()
                    .map(|&k| {
                        let s: String = self.coords[k].0.iter().map(|i| i.to_string()).collect();
                        format!("D^{s}")
                    })
                    .join("*")
            })
            .collect();
        let rank = rank_over_fraction_field(&elements);
        GrassmannBasisSlice {
            degree: d,
            labels,
            elements,
            rank,
        }
    }

    /// Number of independent quantum Plücker relations in degree `d`.
    pub fn plucker_kernel_dimension(&self, d: usize) -> usize {
        let slice = self.basis_slice(d);
        slice.elements.len() - slice.rank
    }

    /// Rank over `ℚ(q)` equals rank at `q = 1` for the degree-`d` slice.
    pub fn flatness(&self, d: usize) -> Result<FlatnessReport> {
        let slice = self.basis_slice(d);
        let at_one = rank_at_one(&slice.elements)?;
        Ok(FlatnessReport {
            degree: d,
            monomials: slice.elements.len(),
            rank_generic: slice.rank,
            rank_at_one: at_one,
        })
    }
}

/// Spanning set of the degree-`d` part of the Grassmannian ring.
#[derive(Clone, Debug)]
pub struct GrassmannBasisSlice {
    pub degree: usize,
    pub labels: Vec<String>,
    pub elements: Vec<NCPoly<LocScalar>>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    pub degree: usize,
    pub monomials: usize,
    pub rank_generic: usize,
    pub rank_at_one: usize,
}

impl FlatnessReport {
    pub fn is_flat(&self) -> bool {
        self.rank_generic == self.rank_at_one
    }
}

/// `c` with `d · p = q^c · p · d` in `a`.
pub fn commutation_exponent_with(
    a: &QuantumMatrix,
    d: &NCPoly<LocScalar>,
    p: &NCPoly<LocScalar>,
) -> Result<i32> {
    let lhs = a.mul(d, p);
    let rhs = a.mul(p, d);
    let fail = || Error::NotQCommuting(a.display(p));
    let Some((w, c)) = rhs.leading() else {
        return Err(fail());
    };
    let a = lhs.coeff(w);
    if a.denominator_power() != c.denominator_power() {
        return Err(fail());
    }
    let ratio: Laurent = a.numerator().div_exact(c.numerator()).ok_or_else(fail)?;
    let (coef, k) = ratio.as_monomial().ok_or_else(fail)?;
    if coef != crate::coeffs::q_int(1) {
        return Err(fail());
    }
    if lhs != rhs.scale(&LocScalar::q_pow(k)) {
        return Err(fail());
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(n: usize, r: usize) -> Grassmannian {
        Grassmannian::new(n, r, QConv::Standard).unwrap()
    }

    #[test]
    fn small_minors() {
        let a = QuantumMatrix::new(3, QConv::Standard).unwrap();
        let m = quantum_minor(&a, &MinorIndex::new(vec![1], vec![2], 3).unwrap());
        assert_eq!(a.display(&m), "x[1,2]");
        let m = quantum_minor(&a, &MinorIndex::new(vec![1, 3], vec![1, 2], 3).unwrap());
        assert_eq!(a.display(&m), "x[1,1]*x[3,2] - q*x[1,2]*x[3,1]");
        assert!(MinorIndex::new(vec![2, 1], vec![1, 2], 3).is_err());
        let b = QuantumMatrix::new(2, QConv::Standard).unwrap();
        assert_eq!(
            quantum_minor(&b, &MinorIndex::new(vec![1, 2], vec![1, 2], 2).unwrap()),
            b.quantum_determinant()
        );
    }

    #[test]
    fn coordinates_enumerate() {
        assert_eq!(gr(4, 2).coordinates().len(), 6);
        let g = gr(2, 1);
        assert_eq!(g.alg().display(&g.plucker(&[2])), "x[2,1]");
    }

    #[test]
    fn exponents_against_d0() {
        let g = gr(2, 1);
        assert_eq!(g.commutation_exponent(&g.plucker(&[2])).unwrap(), 1);
        assert_eq!(g.commutation_exponent(&g.d0()).unwrap(), 0);
        let g = gr(3, 1);
        assert_eq!(g.commutation_exponent(&g.plucker(&[3])).unwrap(), 1);
        let a = g.alg();
        let mixed = g.plucker(&[2]).plus(&NCPoly::one());
        assert!(matches!(
            commutation_exponent_with(a, &g.d0(), &mixed),
            Err(Error::NotQCommuting(_))
        ));
    }

    #[test]
    fn coaction_small() {
        assert!(gr(2, 1).coaction_identity_check(&[1]));
        assert!(gr(3, 2).coaction_identity_check(&[1, 3]));
    }

    #[test]
    fn kernels_small() {
        assert_eq!(gr(2, 1).plucker_kernel_dimension(1), 0);
        assert_eq!(gr(3, 1).plucker_kernel_dimension(2), 0);
    }
}
