use super::poly::NCPoly;
use super::presentation::{Presentation, Rule};
use super::word::{Gen, Word};
use crate::coeffs::{Laurent, LocScalar, QConv, Scalar};
use crate::error::{Error, Result};

/// Row-major indexing of the generators `x[i,j]` of an `m × n` matrix
/// (1-based `i`, `j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixShape {
    pub m: usize,
    pub n: usize,
}

impl MatrixShape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidPresentation(format!(
                "empty matrix shape {m}x{n}"
            )));
        }
        Ok(MatrixShape { m, n })
    }

    pub fn square(n: usize) -> Result<Self> {
        MatrixShape::new(n, n)
    }

    pub fn len(&self) -> usize {
        self.m * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        (1..=self.m).contains(&i) && (1..=self.n).contains(&j)
    }

    /// Generator index of `x[i,j]`.
    pub fn gen(&self, i: usize, j: usize) -> Gen {
        debug_assert!(
            self.contains(i, j),
            "x[{i},{j}] outside {}x{}",
            self.m,
            self.n
        );
        ((i - 1) * self.n + (j - 1)) as Gen
    }

    pub fn try_gen(&self, i: usize, j: usize) -> Result<Gen> {
        if self.contains(i, j) {
            Ok(self.gen(i, j))
        } else {
            Err(Error::IndexError(format!(
                "x[{i},{j}] in a {}x{} matrix",
                self.m, self.n
            )))
        }
    }

    /// `(i, j)` of a generator index.
    pub fn coords(&self, g: Gen) -> (usize, usize) {
        let g = g as usize;
        (g / self.n + 1, g % self.n + 1)
    }

    pub fn labels(&self, symbol: &str) -> Vec<String> {
        (0..self.len())
            .map(|g| {
                let (i, j) = self.coords(g as Gen);
                format!("{symbol}[{i},{j}]")
            })
            .collect()
    }
}

/// Relation type of a pair `a < b` of matrix generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ManinKind {
    SameRow,
    SameColumn,
    /// `i < k`, `j > l`: plain commutation.
    AntiDiagonal,
    /// `i < k`, `j < l`: commutator `(q - q⁻¹) x_{kj} x_{il}`.
    Diagonal,
}

pub fn manin_kind((i, j): (usize, usize), (k, l): (usize, usize)) -> ManinKind {
    debug_assert!((i, j) < (k, l));
    if i == k {
        ManinKind::SameRow
    } else if j == l {
        ManinKind::SameColumn
    } else if j > l {
        ManinKind::AntiDiagonal
    } else {
        ManinKind::Diagonal
    }
}

/// Manin rule for the pair `a < b`, as the replacement of `x_b x_a` in the
/// ambient free algebra, expressed through `gen` so that the same shape can
/// be reused for other generator families (big-cell `t`, `μ`).
pub fn manin_replacement<C: Scalar>(
    a: (usize, usize),
    b: (usize, usize),
    gen: impl Fn(usize, usize) -> Gen,
    scalar: impl Fn(Laurent) -> C,
    conv: QConv,
) -> NCPoly<C> {
    let ga = gen(a.0, a.1);
    let gb = gen(b.0, b.1);
    let ab = Word::from_slice(&[ga, gb]);
    match manin_kind(a, b) {
        ManinKind::SameRow | ManinKind::SameColumn => NCPoly::term(ab, scalar(conv.q_pow(-1))),
        ManinKind::AntiDiagonal => NCPoly::term(ab, C::one()),
        ManinKind::Diagonal => {
            let (i, j) = a;
            let (k, l) = b;
            // x_kj x_il commutes to x_il x_kj (anti-diagonal pair).
            let corr = Word::from_slice(&[gen(i, l), gen(k, j)]);
            let c = conv.q().minus(&conv.q_pow(-1));
            NCPoly::term(ab, C::one()).plus(&NCPoly::term(corr, scalar(c.negated())))
        }
    }
}

/// The quantum matrix algebra `O_q(M_{m×n})` with rules oriented so that the
/// row-major larger generator moves right.
pub fn build_manin_presentation(
    m: usize,
    n: usize,
    conv: QConv,
) -> Result<Presentation<LocScalar>> {
    let shape = MatrixShape::new(m, n)?;
    Presentation::new(shape.labels("x"), manin_rules(shape, conv))
}

pub fn manin_rules(shape: MatrixShape, conv: QConv) -> Vec<Rule<LocScalar>> {
    let mut rules = Vec::new();
    let cells: Vec<_> = (1..=shape.m)
        .flat_map(|i| (1..=shape.n).map(move |j| (i, j)))
        .collect();
    for (ai, &a) in cells.iter().enumerate() {
        for &b in &cells[ai + 1..] {
            rules.push(Rule {
                lead: (shape.gen(b.0, b.1), shape.gen(a.0, a.1)),
                replacement: manin_replacement(
                    a,
                    b,
                    |i, j| shape.gen(i, j),
                    LocScalar::from_laurent,
                    conv,
                ),
            });
        }
    }
    rules
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(shape: MatrixShape, i: usize, j: usize) -> NCPoly<LocScalar> {
        NCPoly::generator(shape.gen(i, j))
    }

    #[test]
    fn rule_counts() {
        assert_eq!(
            build_manin_presentation(2, 2, QConv::Standard)
                .unwrap()
                .num_rules(),
            6
        );
        assert_eq!(
            build_manin_presentation(1, 1, QConv::Standard)
                .unwrap()
                .num_rules(),
            0
        );
        assert!(build_manin_presentation(0, 2, QConv::Standard).is_err());
    }

    #[test]
    fn row_rule_in_one_by_two() {
        let p = build_manin_presentation(1, 2, QConv::Standard).unwrap();
        let rules = p.rules();
        assert_eq!(rules.len(), 1);
        assert_eq!(p.display(&rules[0].replacement), "q^-1*x[1,1]*x[1,2]");
        assert_eq!(rules[0].lead, (1, 0));
    }

    #[test]
    fn diagonal_pair_normal_form() {
        let s = MatrixShape::square(2).unwrap();
        let p = build_manin_presentation(2, 2, QConv::Standard).unwrap();
        let w = p.multiply(&x(s, 2, 2), &x(s, 1, 1));
        assert_eq!(p.display(&w), "x[1,1]*x[2,2] + (-q + q^-1)*x[1,2]*x[2,1]");
    }

    #[test]
    fn commutators_from_the_relations() {
        let s = MatrixShape::square(2).unwrap();
        let p = build_manin_presentation(2, 2, QConv::Standard).unwrap();
        let c = p.commutator(&x(s, 1, 1), &x(s, 2, 2));
        assert_eq!(p.display(&c), "(q - q^-1)*x[1,2]*x[2,1]");
        let c = p.commutator(&x(s, 1, 1), &x(s, 2, 1));
        assert_eq!(p.display(&c), "(1 - q^-1)*x[1,1]*x[2,1]");
    }

    #[test]
    fn inverted_convention_flips_row_rule() {
        let p = build_manin_presentation(1, 2, QConv::Inverted).unwrap();
        assert_eq!(p.display(&p.rules()[0].replacement), "q*x[1,1]*x[1,2]");
    }
}
