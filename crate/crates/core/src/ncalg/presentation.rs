use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use dashmap::DashMap;

use super::poly::NCPoly;
use super::word::{Gen, Word};
use crate::coeffs::Scalar;
use crate::error::{Error, Result};

/// One oriented relation `lead → replacement`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule<C: Scalar> {
    pub lead: (Gen, Gen),
    pub replacement: NCPoly<C>,
}

/// Outcome of resolving every overlap `c·b·a` of two rules both ways.
#[derive(Clone, Debug)]
pub struct ConfluenceReport<C: Scalar> {
    pub overlaps_checked: usize,
    /// `(overlap, normal form via the left rule, normal form via the right rule)`.
    pub failures: Vec<(Word, NCPoly<C>, NCPoly<C>)>,
}

impl<C: Scalar> ConfluenceReport<C> {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Algebra given by generators and quadratic rewriting rules.
///
/// The monomial order is degree first, then lexicographic in generator
/// index. Every rule `b·a → R` must have all words of `R` strictly below
/// `b·a`, so rewriting terminates.
pub struct Presentation<C: Scalar> {
    labels: Vec<String>,
    rules: HashMap<(Gen, Gen), NCPoly<C>>,
    // normal word m, generator x  ↦  nf(m·x)
    cache: DashMap<(Word, Gen), Arc<NCPoly<C>>>,
}

impl<C: Scalar> Clone for Presentation<C> {
    fn clone(&self) -> Self {
        Presentation {
            labels: self.labels.clone(),
            rules: self.rules.clone(),
            cache: DashMap::new(),
        }
    }
}

impl<C: Scalar> std::fmt::Debug for Presentation<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("generators", &self.labels)
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl<C: Scalar> Presentation<C> {
    /// Validates orientation and builds the rule table.
    pub fn new(labels: Vec<String>, rules: Vec<Rule<C>>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if labels.len() > Gen::MAX as usize {
            return Err(Error::InvalidPresentation("too many generators".into()));
        }
        let ngen = labels.len() as Gen;
        let mut table = HashMap::new();
        for rule in rules {
            let (b, a) = rule.lead;
            if b >= ngen || a >= ngen {
                return Err(Error::InvalidPresentation(format!(
                    "rule on unknown generator ({b}, {a})"
                )));
            }
            let lead = Word::from_slice(&[b, a]);
            for (w, _) in rule.replacement.terms() {
                if w.letters().iter().any(|&g| g >= ngen) {
                    return Err(Error::InvalidPresentation(format!(
                        "replacement of {} uses an unknown generator",
                        lead.display_with(&labels)
                    )));
                }
                if *w >= lead {
                    return Err(Error::InvalidPresentation(format!(
                        "{} is not above {} in the monomial order",
                        lead.display_with(&labels),
                        w.display_with(&labels)
                    )));
                }
            }
            if table.insert((b, a), rule.replacement).is_some() {
                return Err(Error::InvalidPresentation(format!(
                    "two rules for {}",
                    lead.display_with(&labels)
                )));
            }
        }
        Ok(Presentation {
            labels,
            rules: table,
            cache: DashMap::new(),
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    pub fn generator_index(&self, label: &str) -> Option<Gen> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as Gen)
    }

    pub fn rule(&self, b: Gen, a: Gen) -> Option<&NCPoly<C>> {
        self.rules.get(&(b, a))
    }

    /// Rules sorted by leading word.
    pub fn rules(&self) -> Vec<Rule<C>> {
        let mut v: Vec<_> = self
            .rules
            .iter()
            .map(|(&lead, r)| Rule {
                lead,
                replacement: r.clone(),
            })
            .collect();
        v.sort_by_key(|r| r.lead);
        v
    }

    /// Same generators and rules with coefficients pushed through `f`
    /// (e.g. evaluation at `q = 1` or `(q-1)`-adic expansion).
    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> Result<Presentation<D>> {
        let rules = self
            .rules()
            .into_iter()
            .map(|r| Rule {
                lead: r.lead,
                replacement: r.replacement.map_coeffs(&mut f),
            })
            .collect();
        Presentation::new(self.labels.clone(), rules)
    }

    /// No adjacent pair of `w` is a leading word.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        w.letters()
            .windows(2)
            .all(|p| !self.rules.contains_key(&(p[0], p[1])))
    }

    /// `nf(m·x)` for a normal word `m`.
    pub fn nf_append(&self, m: &Word, x: Gen) -> Arc<NCPoly<C>> {
        let Some(y) = m.last() else {
            return Arc::new(NCPoly::generator(x));
        };
        let Some(rep) = self.rules.get(&(y, x)) else {
            return Arc::new(NCPoly::term(m.pushed(x), C::one()));
        };
        let key = (m.clone(), x);
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let head = m.prefix();
        let mut out = NCPoly::zero();
        for (w, c) in rep.terms() {
            out.add_scaled(&self.nf_word_append(&head, w), c);
        }
        let out = Arc::new(out);
        self.cache.insert(key, out.clone());
        out
    }

    /// `nf(m·w)` for a normal word `m` and an arbitrary word `w`.
    pub fn nf_word_append(&self, m: &Word, w: &Word) -> NCPoly<C> {
        let mut acc = NCPoly::term(m.clone(), C::one());
        for &x in w.letters() {
            let mut next = NCPoly::zero();
            for (u, c) in acc.terms() {
                next.add_scaled(&self.nf_append(u, x), c);
            }
            acc = next;
        }
        acc
    }

    pub fn normal_form(&self, p: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            if self.is_normal_word(w) {
                out.add_term(w.clone(), c.clone());
            } else {
                out.add_scaled(&self.nf_word_append(&Word::empty(), w), c);
            }
        }
        out
    }

    pub fn word(&self, letters: &[Gen]) -> NCPoly<C> {
        self.nf_word_append(&Word::empty(), &Word::from_slice(letters))
    }

    pub fn generator(&self, g: Gen) -> NCPoly<C> {
        NCPoly::generator(g)
    }

    /// Product in the quotient algebra; inputs need not be normal.
    pub fn multiply(&self, p: &NCPoly<C>, r: &NCPoly<C>) -> NCPoly<C> {
        let p = self.normal_form(p);
        let mut out = NCPoly::zero();
        for (a, c) in p.terms() {
            for (b, d) in r.terms() {
                out.add_scaled(&self.nf_word_append(a, b), &c.times(d));
            }
        }
        out
    }

    pub fn product(&self, factors: &[NCPoly<C>]) -> NCPoly<C> {
        factors
            .iter()
            .fold(NCPoly::one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn power(&self, p: &NCPoly<C>, k: usize) -> NCPoly<C> {
        (0..k).fold(NCPoly::one(), |acc, _| self.multiply(&acc, p))
    }

    pub fn commutator(&self, p: &NCPoly<C>, r: &NCPoly<C>) -> NCPoly<C> {
        self.multiply(p, r).minus(&self.multiply(r, p))
    }

    /// Worklist rewriting: repeatedly rewrites the leftmost reducible pair of
    /// the largest reducible word. Independent of the memoized route.
    pub fn normal_form_budgeted(&self, p: &NCPoly<C>, budget: usize) -> Result<NCPoly<C>> {
        let mut pending: BTreeMap<Word, C> = BTreeMap::new();
        let mut done = NCPoly::zero();
        let push = |map: &mut BTreeMap<Word, C>, w: Word, c: C| {
            let slot = map.entry(w).or_insert_with(C::zero);
            *slot = slot.plus(&c);
        };
        for (w, c) in p.terms() {
            push(&mut pending, w.clone(), c.clone());
        }
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            let pos = w
                .letters()
                .windows(2)
                .position(|p| self.rules.contains_key(&(p[0], p[1])));
            match pos {
                None => done.add_term(w, c),
                Some(i) => {
                    steps += 1;
                    if steps > budget {
                        return Err(Error::StepBudgetExceeded(budget));
                    }
                    let rep = &self.rules[&(w.letters()[i], w.letters()[i + 1])];
                    for (m, d) in rep.terms() {
                        push(&mut pending, w.splice(i, 2, m), c.times(d));
                    }
                }
            }
        }
        Ok(done)
    }

    /// Diamond-lemma check over all overlaps `c·b·a` with rules on
    /// `(c, b)` and `(b, a)`.
    pub fn check_confluence(&self) -> ConfluenceReport<C> {
        let rules = self.rules();
        let mut overlaps = Vec::new();
        for r1 in &rules {
            for r2 in &rules {
                if r1.lead.1 == r2.lead.0 {
                    overlaps.push((r1.lead.0, r1.lead.1, r2.lead.1));
                }
            }
        }
        let failures = crate::exec::par_map(&overlaps, |&(c, b, a)| {
            let via_left = self.multiply(&self.rules[&(c, b)], &NCPoly::generator(a));
            let via_right = self.multiply(&NCPoly::generator(c), &self.rules[&(b, a)]);
            (via_left != via_right).then(|| (Word::from_slice(&[c, b, a]), via_left, via_right))
        })
        .into_iter()
        .flatten()
        .collect();
        ConfluenceReport {
            overlaps_checked: overlaps.len(),
            failures,
        }
    }

    /// Normal-form words of exactly the given degree, by extension of the
    /// normal words of one degree lower.
    pub fn normal_words(&self, degree: usize) -> Vec<Word> {
        let n = self.labels.len() as Gen;
        let mut layer = vec![Word::empty()];
        for _ in 0..degree {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..n {
                    if w.last().is_none_or(|y| !self.rules.contains_key(&(y, g))) {
                        next.push(w.pushed(g));
                    }
                }
            }
            layer = next;
        }
        layer
    }

    pub fn display(&self, p: &NCPoly<C>) -> String {
        p.display_with(&self.labels)
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{q_int, QConv, Q};
    use crate::ncalg::build_manin_presentation;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn manin_systems_are_confluent_with_commutative_counts() {
        for m in 1..=3 {
            for n in 1..=3 {
                let p = build_manin_presentation(m, n, QConv::Standard).unwrap();
                let rep = p.check_confluence();
                assert!(rep.is_confluent(), "{m}x{n}: {:?}", rep.failures);
                for d in 0..=3 {
                    let words = p.normal_words(d);
                    assert_eq!(words.len(), binom(m * n + d - 1, d));
                    assert!(words.iter().all(Word::is_sorted));
                }
            }
        }
    }

    #[test]
    fn worklist_agrees_with_memoized_route() {
        let p = build_manin_presentation(2, 3, QConv::Standard).unwrap();
        let w = NCPoly::term(
            Word::from_slice(&[5, 4, 3, 2, 1, 0]),
            crate::coeffs::LocScalar::one(),
        );
        let a = p.normal_form(&w);
        let b = p.normal_form_budgeted(&w, 10_000).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            p.normal_form_budgeted(&w, 2),
            Err(Error::StepBudgetExceeded(2))
        ));
    }

    #[test]
    fn orientation_is_enforced() {
        // y·x → x·y − x with x < y is admissible; x·y → y·x + x is not.
        let labels = vec!["x".to_string(), "y".to_string()];
        let good = Rule {
            lead: (1, 0),
            replacement: NCPoly::<Q>::from_terms([
                (Word::from_slice(&[0, 1]), q_int(1)),
                (Word::letter(0), q_int(-1)),
            ]),
        };
        let p = Presentation::new(labels.clone(), vec![good]).unwrap();
        let rep = p.check_confluence();
        assert_eq!(rep.overlaps_checked, 0);
        assert!(rep.is_confluent());
        let bad = Rule {
            lead: (0, 1),
            replacement: NCPoly::<Q>::from_terms([
                (Word::from_slice(&[1, 0]), q_int(1)),
                (Word::letter(0), q_int(1)),
            ]),
        };
        assert!(Presentation::new(labels, vec![bad]).is_err());
    }

    #[test]
    fn non_confluent_system_is_reported() {
        // c·b → a, b·a → c on a < b < c: the overlap c·b·a resolves to a·a vs c·c.
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let rules = vec![
            Rule {
                lead: (2, 1),
                replacement: NCPoly::<Q>::generator(0),
            },
            Rule {
                lead: (1, 0),
                replacement: NCPoly::<Q>::generator(2),
            },
        ];
        let p = Presentation::new(labels, rules).unwrap();
        let rep = p.check_confluence();
        assert_eq!(rep.overlaps_checked, 1);
        assert_eq!(rep.failures.len(), 1);
    }
}
