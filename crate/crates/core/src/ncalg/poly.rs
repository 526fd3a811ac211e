use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::word::{Gen, Word};
use crate::coeffs::Scalar;

/// Noncommutative polynomial: a finite map from words to nonzero coefficients.
///
/// Arithmetic here is in the free algebra; reduction modulo a presentation
/// happens in [`super::Presentation`].
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<C: Scalar> {
    terms: BTreeMap<Word, C>,
}

impl<C: Scalar> Default for NCPoly<C> {
    fn default() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Scalar> NCPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn generator(g: Gen) -> Self {
        Self::term(Word::letter(g), C::one())
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> C {
        self.coeff(&Word::empty())
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly<C>, c: &C) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d.times(c));
        }
    }

    pub fn plus(&self, other: &NCPoly<C>) -> NCPoly<C> {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn minus(&self, other: &NCPoly<C>) -> NCPoly<C> {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c.negated());
        }
        r
    }

    pub fn negated(&self) -> NCPoly<C> {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.negated()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> NCPoly<C> {
        let mut r = NCPoly::zero();
        r.add_scaled(self, c);
        r
    }

    /// Product in the free algebra (concatenation, no reduction).
    pub fn free_mul(&self, other: &NCPoly<C>) -> NCPoly<C> {
        let mut r = NCPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                r.add_term(a.concat(b), c.times(d));
            }
        }
        r
    }

    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> NCPoly<D> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Scalar, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<NCPoly<D>, E> {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c)?);
        }
        Ok(r)
    }

    /// Renames generators letter by letter.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Word) -> NCPoly<C> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Algebra-map substitution into the free algebra: each generator
    /// becomes a polynomial, words become ordered products.
    pub fn substitute(&self, image: impl Fn(Gen) -> NCPoly<C>) -> NCPoly<C> {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::constant(c.clone());
            for &g in w.letters() {
                acc = acc.free_mul(&image(g));
            }
            r = r.plus(&acc);
        }
        r
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let text = term_text(w, c, labels);
            if i == 0 {
                out.push_str(&text);
            } else if let Some(rest) = text.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&text);
            }
        }
        out
    }
}

fn term_text<C: Scalar>(w: &Word, c: &C, labels: &[String]) -> String {
    let cs = c.to_string();
    let simple = !cs.contains(' ');
    if w.is_empty() {
        return if simple { cs } else { format!("({cs})") };
    }
    let ws = w.display_with(labels);
    if c.is_one() {
        ws
    } else if c.negated().is_one() {
        format!("-{ws}")
    } else if simple {
        format!("{cs}*{ws}")
    } else {
        format!("({cs})*{ws}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{q_int, Laurent, LocScalar};

    fn labels() -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p: NCPoly<LocScalar> = NCPoly::generator(0);
        p.add_term(Word::letter(0), LocScalar::from_int(-1));
        assert!(p.is_zero());
    }

    #[test]
    fn display_parenthesizes_compound_coefficients() {
        let c = LocScalar::from_laurent(Laurent::q_minus_q_inv());
        let p = NCPoly::term(Word::from_slice(&[1, 0]), c)
            .plus(&NCPoly::term(
                Word::from_slice(&[0]),
                LocScalar::from_int(-2),
            ))
            .plus(&NCPoly::constant(LocScalar::one()));
        assert_eq!(p.display_with(&labels()), "1 - 2*a + (q - q^-1)*b*a");
    }

    #[test]
    fn free_mul_concatenates() {
        let a: NCPoly<crate::coeffs::Q> = NCPoly::generator(0);
        let b = NCPoly::generator(1).scale(&q_int(3));
        let ab = a.free_mul(&b);
        assert_eq!(ab.coeff(&Word::from_slice(&[0, 1])), q_int(3));
        assert_eq!(ab.len(), 1);
    }
}
