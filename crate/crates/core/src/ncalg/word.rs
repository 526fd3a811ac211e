use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Index of a generator inside its presentation; the index is the sort key.
pub type Gen = u16;

/// Element of the free monoid on the generators.
///
/// Ordered degree-first, then lexicographically by generator index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(g: Gen) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(letters: &[Gen]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Gen> {
        self.0.last().copied()
    }

    pub fn push(&mut self, g: Gen) {
        self.0.push(g);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pushed(&self, g: Gen) -> Word {
        let mut v = self.0.clone();
        v.push(g);
        Word(v)
    }

    /// Drops the last letter.
    pub fn prefix(&self) -> Word {
        Word(SmallVec::from_slice(
            &self.0[..self.0.len().saturating_sub(1)],
        ))
    }

    /// Letters sorted increasingly; the PBW representative of the same multiset.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Replaces `self[at..at+len]` by `middle`.
    pub fn splice(&self, at: usize, len: usize, middle: &Word) -> Word {
        let mut v: SmallVec<[Gen; 8]> = SmallVec::with_capacity(self.len() - len + middle.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[at + len..]);
        Word(v)
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&g| labels[g as usize].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl From<&[Gen]> for Word {
    fn from(v: &[Gen]) -> Self {
        Word::from_slice(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_then_lexicographic() {
        let a = Word::from_slice(&[3]);
        let b = Word::from_slice(&[0, 0]);
        let c = Word::from_slice(&[0, 1]);
        let d = Word::from_slice(&[1, 0]);
        assert!(a < b && b < c && c < d);
        assert!(Word::empty() < a);
    }

    #[test]
    fn splice_replaces_window() {
        let w = Word::from_slice(&[1, 2, 3, 4]);
        assert_eq!(
            w.splice(1, 2, &Word::from_slice(&[9])),
            Word::from_slice(&[1, 9, 4])
        );
        assert_eq!(w.splice(0, 2, &Word::empty()), Word::from_slice(&[3, 4]));
    }
}
