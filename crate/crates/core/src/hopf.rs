//! Bialgebra structure of `O_q(M_n)`: quantum determinant, coproduct,
//! counit, tensor squares, and the `GL`/`SL` quotients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::coeffs::{Laurent, LocScalar, QConv, Scalar};
use crate::error::{Error, Result};
use crate::ncalg::{build_manin_presentation, Gen, MatrixShape, NCPoly, Presentation, Word};

/// Which quotient of `O_q(M_n)` the group-level computations live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GroupMode {
    /// `O_q(GL_n)`: `D_q` inverted through a central `T`.
    #[default]
    GL,
    /// `O_q(SL_n)`: `D_q = 1`.
    SL,
}

/// Inversion count of a permutation.
pub fn inversions(perm: &[usize]) -> usize {
    perm.iter()
        .enumerate()
        .map(|(a, &pa)| perm[a + 1..].iter().filter(|&&pb| pb < pa).count())
        .sum()
}

/// `(-q)^ℓ` in the given convention.
pub fn minus_q_pow(conv: QConv, l: usize) -> Laurent {
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    conv.q_pow(l as i32).scale(&crate::coeffs::q_int(sign))
}

/// `O_q(M_{m×n})` with its generators and rewriting system.
#[derive(Clone, Debug)]
pub struct QuantumMatrix {
    shape: MatrixShape,
    conv: QConv,
    pres: Arc<Presentation<LocScalar>>,
}

impl QuantumMatrix {
    pub fn new(n: usize, conv: QConv) -> Result<Self> {
        QuantumMatrix::rect(n, n, conv)
    }

    pub fn rect(m: usize, n: usize, conv: QConv) -> Result<Self> {
        Ok(QuantumMatrix {
            shape: MatrixShape::new(m, n)?,
            conv,
            pres: Arc::new(build_manin_presentation(m, n, conv)?),
        })
    }

    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    /// Side length; only meaningful for square algebras.
    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn conv(&self) -> QConv {
        self.conv
    }

    pub fn pres(&self) -> &Presentation<LocScalar> {
        &self.pres
    }

    pub fn gen(&self, i: usize, j: usize) -> Gen {
        self.shape.gen(i, j)
    }

    pub fn x(&self, i: usize, j: usize) -> NCPoly<LocScalar> {
        NCPoly::generator(self.shape.gen(i, j))
    }

    pub fn scalar(&self, l: Laurent) -> NCPoly<LocScalar> {
        NCPoly::constant(LocScalar::from_laurent(l))
    }

    pub fn nf(&self, p: &NCPoly<LocScalar>) -> NCPoly<LocScalar> {
        self.pres.normal_form(p)
    }

    pub fn mul(&self, a: &NCPoly<LocScalar>, b: &NCPoly<LocScalar>) -> NCPoly<LocScalar> {
        self.pres.multiply(a, b)
    }

    pub fn commutator(&self, a: &NCPoly<LocScalar>, b: &NCPoly<LocScalar>) -> NCPoly<LocScalar> {
        self.pres.commutator(a, b)
    }

    pub fn display(&self, p: &NCPoly<LocScalar>) -> String {
        self.pres.display(p)
    }

    /// `Σ_σ (-q)^{ℓ(σ)} x_{i_1 k_{σ(1)}} ⋯ x_{i_r k_{σ(r)}}`, normalized.
    pub fn quantum_minor(&self, rows: &[usize], cols: &[usize]) -> NCPoly<LocScalar> {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        let r = rows.len();
        let mut raw = NCPoly::zero();
        for perm in (0..r).permutations(r) {
            let word: Word = rows
                .iter()
                .zip(&perm)
                .map(|(&i, &s)| self.gen(i, cols[s]))
                .collect::<Vec<_>>()
                .as_slice()
                .into();
            let c = LocScalar::from_laurent(minus_q_pow(self.conv, inversions(&perm)));
            raw.add_term(word, c);
        }
        self.nf(&raw)
    }

    /// The quantum determinant `D_q`.
    pub fn quantum_determinant(&self) -> NCPoly<LocScalar> {
        let idx: Vec<usize> = (1..=self.shape.n).collect();
        self.quantum_minor(&idx, &idx)
    }

    /// `Δ(x_{ij}) = Σ_k x_{ik} ⊗ x_{kj}`, extended as an algebra map.
    pub fn coproduct(&self, p: &NCPoly<LocScalar>) -> TensorPoly<LocScalar> {
        let n = self.shape.n;
        let mut raw: BTreeMap<Word, BTreeMap<Word, LocScalar>> = BTreeMap::new();
        for (w, c) in p.terms() {
            let cells: Vec<_> = w.letters().iter().map(|&g| self.shape.coords(g)).collect();
            // an empty product still yields the single empty choice
            for ks in (0..cells.len()).map(|_| 1..=n).multi_cartesian_product() {
                let left: Vec<Gen> = cells
                    .iter()
                    .zip(&ks)
                    .map(|(&(i, _), &k)| self.gen(i, k))
                    .collect();
                let right: Vec<Gen> = cells
                    .iter()
                    .zip(&ks)
                    .map(|(&(_, j), &k)| self.gen(k, j))
                    .collect();
                let slot = raw
                    .entry(Word::from_slice(&left))
                    .or_default()
                    .entry(Word::from_slice(&right))
                    .or_insert_with(LocScalar::zero);
                *slot = slot.plus(c);
            }
        }
        let mut out = TensorPoly::zero();
        for (lw, rights) in raw {
            let left = self.pres.normal_form(&NCPoly::term(lw, LocScalar::one()));
            let right = self.pres.normal_form(&NCPoly::from_terms(rights));
            out.add_pure(&left, &right, &LocScalar::one());
        }
        out
    }

    /// `ε(x_{ij}) = δ_{ij}`.
    pub fn counit(&self, p: &NCPoly<LocScalar>) -> LocScalar {
        let mut s = LocScalar::zero();
        for (w, c) in p.terms() {
            if w.letters().iter().all(|&g| {
                let (i, j) = self.shape.coords(g);
                i == j
            }) {
                s = s.plus(c);
            }
        }
        s
    }

    /// `(ε ⊗ id)` applied to a tensor.
    pub fn counit_left(&self, t: &TensorPoly<LocScalar>) -> NCPoly<LocScalar> {
        let mut out = NCPoly::zero();
        for ((l, r), c) in t.terms() {
            let e = self.counit(&NCPoly::term(l.clone(), c.clone()));
            out.add_term(r.clone(), e);
        }
        out
    }

    /// `(id ⊗ ε)` applied to a tensor.
    pub fn counit_right(&self, t: &TensorPoly<LocScalar>) -> NCPoly<LocScalar> {
        let mut out = NCPoly::zero();
        for ((l, r), c) in t.terms() {
            let e = self.counit(&NCPoly::term(r.clone(), c.clone()));
            out.add_term(l.clone(), e);
        }
        out
    }

    /// Leading word for division purposes: largest exponent vector in the
    /// lexicographic order where `x_{11}` is most significant.
    ///
    /// In this order the Manin algebra has unit leading coefficients, so the
    /// leading word of a product is the merged leading words.
    fn division_lead<'a>(&self, p: &'a NCPoly<LocScalar>) -> Option<(&'a Word, &'a LocScalar)> {
        p.terms().max_by(|(a, _), (b, _)| {
            let ea = exponents(a, self.shape.len());
            let eb = exponents(b, self.shape.len());
            // more of a smaller generator wins
            ea.cmp(&eb)
        })
    }

    /// Left division by `d` with remainder: `p = s·d + rem`, where no term
    /// of `rem` has an exponent vector divisible by that of `lead(d)`.
    pub fn divide(
        &self,
        p: &NCPoly<LocScalar>,
        d: &NCPoly<LocScalar>,
    ) -> (NCPoly<LocScalar>, NCPoly<LocScalar>) {
        let (dlead, _) = self.division_lead(d).expect("division by zero");
        let dexp = exponents(dlead, self.shape.len());
        let mut rest = self.nf(p);
        let mut quot = NCPoly::zero();
        let mut rem = NCPoly::zero();
        while let Some((w, c)) = self.division_lead(&rest) {
            let (w, c) = (w.clone(), c.clone());
            let wexp = exponents(&w, self.shape.len());
            if wexp.iter().zip(&dexp).all(|(a, b)| a >= b) {
                let s: Vec<Gen> = wexp
                    .iter()
                    .zip(&dexp)
                    .enumerate()
                    .flat_map(|(g, (a, b))| std::iter::repeat_n(g as Gen, a - b))
                    .collect();
                let s = NCPoly::term(Word::from_slice(&s), LocScalar::one());
                let sd = self.mul(&s, d);
                let lc = sd.coeff(&w);
                let f = c.div_unit(&lc).expect("unit leading coefficient");
                rest = rest.minus(&sd.scale(&f));
                quot.add_scaled(&s, &f);
            } else {
                rem.add_term(w.clone(), c.clone());
                rest = rest.minus(&NCPoly::term(w, c));
            }
        }
        (quot, rem)
    }

    /// `s` with `s·d = p`, if `d` divides `p`.
    pub fn divide_exact(
        &self,
        p: &NCPoly<LocScalar>,
        d: &NCPoly<LocScalar>,
    ) -> Option<NCPoly<LocScalar>> {
        let (s, rem) = self.divide(p, d);
        rem.is_zero().then_some(s)
    }

    /// Normal form in `O_q(SL_n)`: remainder modulo the central `D_q - 1`.
    pub fn sl_reduce(&self, p: &NCPoly<LocScalar>) -> NCPoly<LocScalar> {
        let d = self.quantum_determinant().minus(&NCPoly::one());
        self.divide(p, &d).1
    }
}

fn exponents(w: &Word, ngen: usize) -> Vec<usize> {
    let mut e = vec![0usize; ngen];
    for &g in w.letters() {
        e[g as usize] += 1;
    }
    e
}

/// Element of a tensor square: `Σ c · (left word ⊗ right word)`.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorPoly<C: Scalar> {
    terms: BTreeMap<(Word, Word), C>,
}

impl<C: Scalar> Default for TensorPoly<C> {
    fn default() -> Self {
        TensorPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Scalar> TensorPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Word::empty(), Word::empty(), C::one());
        t
    }

    pub fn pure(a: &NCPoly<C>, b: &NCPoly<C>) -> Self {
        let mut t = Self::zero();
        t.add_pure(a, b, &C::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &Word, r: &Word) -> C {
        self.terms
            .get(&(l.clone(), r.clone()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, l: Word, r: Word, c: C) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        let s = match self.terms.get(&key) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    /// Adds `c · a ⊗ b`.
    pub fn add_pure(&mut self, a: &NCPoly<C>, b: &NCPoly<C>, c: &C) {
        for (l, x) in a.terms() {
            let xc = x.times(c);
            for (r, y) in b.terms() {
                self.add_term(l.clone(), r.clone(), xc.times(y));
            }
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for ((l, r), c) in &other.terms {
            t.add_term(l.clone(), r.clone(), c.clone());
        }
        t
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&C::one().negated()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut t = Self::zero();
        for ((l, r), d) in &self.terms {
            t.add_term(l.clone(), r.clone(), d.times(c));
        }
        t
    }

    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> TensorPoly<D> {
        let mut t = TensorPoly::zero();
        for ((l, r), c) in &self.terms {
            t.add_term(l.clone(), r.clone(), f(c));
        }
        t
    }

    pub fn try_map_coeffs<D: Scalar, E>(
        &self,
        mut f: impl FnMut(&C) -> std::result::Result<D, E>,
    ) -> std::result::Result<TensorPoly<D>, E> {
        let mut t = TensorPoly::zero();
        for ((l, r), c) in &self.terms {
            t.add_term(l.clone(), r.clone(), f(c)?);
        }
        Ok(t)
    }

    /// Groups terms by left word: `Σ_l l ⊗ R_l`.
    pub fn by_left(&self) -> BTreeMap<Word, NCPoly<C>> {
        let mut out: BTreeMap<Word, NCPoly<C>> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(l.clone())
                .or_default()
                .add_term(r.clone(), c.clone());
        }
        out
    }

    /// Groups terms by right word: `Σ_r L_r ⊗ r`.
    pub fn by_right(&self) -> BTreeMap<Word, NCPoly<C>> {
        let mut out: BTreeMap<Word, NCPoly<C>> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(r.clone())
                .or_default()
                .add_term(l.clone(), c.clone());
        }
        out
    }

    /// Product in `A ⊗ B`, reducing each leg in its own presentation.
    pub fn mul(&self, other: &Self, left: &Presentation<C>, right: &Presentation<C>) -> Self {
        let mut t = Self::zero();
        for ((a, x), c) in &self.terms {
            for ((b, y), d) in &other.terms {
                let l = left.nf_word_append(a, b);
                let r = right.nf_word_append(x, y);
                t.add_pure(&l, &r, &c.times(d));
            }
        }
        t
    }

    /// Both legs brought to normal form.
    pub fn normalize(&self, left: &Presentation<C>, right: &Presentation<C>) -> Self {
        let mut t = Self::zero();
        for ((a, x), c) in &self.terms {
            let l = left.normal_form(&NCPoly::term(a.clone(), C::one()));
            let r = right.normal_form(&NCPoly::term(x.clone(), C::one()));
            t.add_pure(&l, &r, c);
        }
        t
    }

    pub fn display_with(&self, left: &[String], right: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((l, r), c)| {
                let s = c.to_string();
                let pair = format!("{} ⊗ {}", l.display_with(left), r.display_with(right));
                if c.is_one() {
                    pair
                } else if s.contains(' ') {
                    format!("({s})*{pair}")
                } else {
                    format!("{s}*{pair}")
                }
            })
            .join(" + ")
    }
}

/// Element `body · D_q^{-k}` of `O_q(GL_n)`; `T = D_q^{-1}` is central.
#[derive(Clone, Debug, PartialEq)]
pub struct GLElement {
    pub body: NCPoly<LocScalar>,
    pub t_power: u32,
}

impl GLElement {
    pub fn from_poly(body: NCPoly<LocScalar>) -> Self {
        GLElement { body, t_power: 0 }
    }

    pub fn t() -> Self {
        GLElement {
            body: NCPoly::one(),
            t_power: 1,
        }
    }

    pub fn display(&self, a: &QuantumMatrix) -> String {
        match self.t_power {
            0 => a.display(&self.body),
            1 => format!("({})*T", a.display(&self.body)),
            k => format!("({})*T^{k}", a.display(&self.body)),
        }
    }
}

impl QuantumMatrix {
    fn gl_lift(&self, e: &GLElement, k: u32) -> NCPoly<LocScalar> {
        let d = self.quantum_determinant();
        let pad = self.pres.power(&d, (k - e.t_power) as usize);
        self.mul(&e.body, &pad)
    }

    pub fn gl_add(&self, a: &GLElement, b: &GLElement) -> GLElement {
        let k = a.t_power.max(b.t_power);
        self.gl_reduce(&GLElement {
            body: self.gl_lift(a, k).plus(&self.gl_lift(b, k)),
            t_power: k,
        })
    }

    pub fn gl_mul(&self, a: &GLElement, b: &GLElement) -> GLElement {
        self.gl_reduce(&GLElement {
            body: self.mul(&a.body, &b.body),
            t_power: a.t_power + b.t_power,
        })
    }

    pub fn gl_scale(&self, a: &GLElement, c: &LocScalar) -> GLElement {
        GLElement {
            body: a.body.scale(c),
            t_power: a.t_power,
        }
    }

    /// Cancels `T·D_q` pairs until the `T`-power is minimal.
    pub fn gl_reduce(&self, e: &GLElement) -> GLElement {
        let d = self.quantum_determinant();
        let mut body = self.nf(&e.body);
        let mut k = e.t_power;
        if body.is_zero() {
            return GLElement { body, t_power: 0 };
        }
        while k > 0 {
            match self.divide_exact(&body, &d) {
                Some(s) => {
                    body = s;
                    k -= 1;
                }
                None => break,
            }
        }
        GLElement { body, t_power: k }
    }

    pub fn gl_counit(&self, e: &GLElement) -> LocScalar {
        // ε(T) = ε(D_q)⁻¹ = 1
        self.counit(&e.body)
    }

    /// Group-level normal form: `SL` reduces modulo `D_q - 1`, `GL` cancels
    /// determinant powers against `T`.
    pub fn group_reduce(&self, e: &GLElement, mode: GroupMode) -> Result<GLElement> {
        match mode {
            GroupMode::GL => Ok(self.gl_reduce(e)),
            GroupMode::SL => {
                // T = D_q⁻¹ = 1 in SL
                if self.shape.m != self.shape.n {
                    return Err(Error::InvalidPresentation(
                        "SL needs a square matrix".into(),
                    ));
                }
                Ok(GLElement::from_poly(self.sl_reduce(&e.body)))
            }
        }
    }
}

impl fmt::Display for GroupMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupMode::GL => "GL",
            GroupMode::SL => "SL",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> QuantumMatrix {
        QuantumMatrix::new(n, QConv::Standard).unwrap()
    }

    #[test]
    fn determinant_small_cases() {
        let a = alg(2);
        assert_eq!(
            a.display(&a.quantum_determinant()),
            "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]"
        );
        let a = alg(1);
        assert_eq!(a.display(&a.quantum_determinant()), "x[1,1]");
    }

    #[test]
    fn determinant_is_central_and_grouplike_at_three() {
        let a = alg(3);
        let d = a.quantum_determinant();
        assert_eq!(d.len(), 6);
        for g in 0..9 {
            assert!(a.commutator(&d, &NCPoly::generator(g)).is_zero());
        }
        assert_eq!(a.coproduct(&d), TensorPoly::pure(&d, &d));
        assert_eq!(a.counit(&d), LocScalar::one());
    }

    #[test]
    fn coproduct_of_generator_and_unit() {
        let a = alg(2);
        let t = a.coproduct(&a.x(1, 1));
        let expect = TensorPoly::pure(&a.x(1, 1), &a.x(1, 1))
            .plus(&TensorPoly::pure(&a.x(1, 2), &a.x(2, 1)));
        assert_eq!(t, expect);
        assert_eq!(a.coproduct(&NCPoly::one()), TensorPoly::one());
        assert!(a.counit(&a.x(1, 2)).is_zero());
    }

    #[test]
    fn gl_cancellation() {
        let a = alg(2);
        let d = a.quantum_determinant();
        let td = a.gl_mul(&GLElement::t(), &GLElement::from_poly(d.clone()));
        assert_eq!(td, GLElement::from_poly(NCPoly::one()));
        let txd = a.gl_mul(
            &a.gl_mul(&GLElement::t(), &GLElement::from_poly(a.x(1, 1))),
            &GLElement::from_poly(d.clone()),
        );
        assert_eq!(txd, GLElement::from_poly(a.x(1, 1)));
        assert_eq!(a.gl_reduce(&GLElement::from_poly(d.clone())).body, d);
        let tx = a.gl_mul(&GLElement::t(), &GLElement::from_poly(a.x(1, 2)));
        assert_eq!(tx.t_power, 1);
    }

    #[test]
    fn sl_reduction_kills_determinant_minus_one() {
        let a = alg(2);
        let d = a.quantum_determinant();
        assert_eq!(a.sl_reduce(&d), NCPoly::one());
        let p = a.mul(&d, &a.x(2, 1)).minus(&a.x(2, 1));
        assert!(a.sl_reduce(&p).is_zero());
        assert_eq!(a.sl_reduce(&a.x(1, 2)), a.x(1, 2));
    }
}
