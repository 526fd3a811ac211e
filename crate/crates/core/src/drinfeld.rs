//! Rescaled coordinates `χ_{ij} = (q-1)⁻¹(x_{ij} − δ_{ij})` on `O_q(M_n)`,
//! membership in the Drinfeld dual by valuation, semiclassical limits onto
//! `U(gl_n^*)`, and the Poisson bracket of `O(GL_n)`.

use std::sync::Arc;

use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialgebra::{glstar_table, GlStar, LieElt, Uea};
use crate::coeffs::{q_int, Laurent, LocScalar, QConv, Scalar, Q};
use crate::error::{Error, Result};
use crate::exec::par_map;
use crate::hopf::{GLElement, GroupMode, QuantumMatrix};
use crate::ncalg::{manin_rules, Gen, NCPoly, Presentation, Rule, Word};

/// Polynomial in the `χ` generators (and possibly `𝒟_−`), with its minimal
/// `(q-1)`-adic valuation.
#[derive(Clone, Debug, PartialEq)]
pub struct VeeElem {
    pub body: NCPoly<LocScalar>,
    /// `None` for zero.
    pub valuation: Option<i64>,
}

impl VeeElem {
    pub fn new(body: NCPoly<LocScalar>) -> Self {
        let valuation = min_valuation(&body);
        VeeElem { body, valuation }
    }

    /// Lies in the integral form spanned by `χ`-monomials.
    pub fn in_vee(&self) -> bool {
        self.valuation.is_none_or(|v| v >= 0)
    }
}

pub fn min_valuation(p: &NCPoly<LocScalar>) -> Option<i64> {
    p.terms().filter_map(|(_, c)| c.valuation()).min()
}

/// `O_q(M_n)` in `χ`-coordinates. In `GL` mode a central generator `𝒟_−`
/// stands for `(q-1)⁻¹(D_q⁻¹ − 1)`; in `SL` mode it is absent.
#[derive(Clone, Debug)]
pub struct VeeAlgebra {
    alg: QuantumMatrix,
    mode: GroupMode,
    pres: Arc<Presentation<LocScalar>>,
}

impl VeeAlgebra {
    pub fn new(n: usize, conv: QConv, mode: GroupMode) -> Result<Self> {
        let alg = QuantumMatrix::new(n, conv)?;
        let shape = alg.shape();
        let t2 = LocScalar::from_laurent(Laurent::q_minus_one_pow(2));
        let delta = |g: Gen| {
            let (i, j) = shape.coords(g);
            if i == j {
                LocScalar::one()
            } else {
                LocScalar::zero()
            }
        };
        let sub = |p: &NCPoly<LocScalar>| p.substitute(|g| chi_substitution(g, delta(g)));
        let mut rules = Vec::new();
        for rule in manin_rules(shape, conv) {
            let (b, a) = rule.lead;
            // (δ_b + tχ_b)(δ_a + tχ_a) = R(δ + tχ), solved for χ_b χ_a
            let lead = sub(&NCPoly::term(Word::from_slice(&[b, a]), LocScalar::one()));
            let rest = lead.minus(&NCPoly::term(Word::from_slice(&[b, a]), t2.clone()));
            let rep = sub(&rule.replacement).minus(&rest);
            let rep = rep.map_coeffs(|c| c.div_qminus1(2));
            if let Some(v) = min_valuation(&rep) {
                if v < 0 {
                    return Err(Error::NotInVee(format!(
                        "relation for {} has valuation {v}",
                        Word::from_slice(&[b, a]).display_with(&shape.labels("chi"))
                    )));
                }
            }
            rules.push(Rule {
                lead: (b, a),
                replacement: rep,
            });
        }
        let mut labels = shape.labels("chi");
        if mode == GroupMode::GL {
            let d = labels.len() as Gen;
            labels.push("Dm".into());
            for a in 0..d {
                rules.push(Rule {
                    lead: (d, a),
                    replacement: NCPoly::term(Word::from_slice(&[a, d]), LocScalar::one()),
                });
            }
        }
        Ok(VeeAlgebra {
            alg,
            mode,
            pres: Arc::new(Presentation::new(labels, rules)?),
        })
    }

    pub fn alg(&self) -> &QuantumMatrix {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn conv(&self) -> QConv {
        self.alg.conv()
    }

    pub fn mode(&self) -> GroupMode {
        self.mode
    }

    pub fn pres(&self) -> &Presentation<LocScalar> {
        &self.pres
    }

    pub fn chi_gen(&self, i: usize, j: usize) -> Gen {
        self.alg.gen(i, j)
    }

    pub fn chi(&self, i: usize, j: usize) -> NCPoly<LocScalar> {
        NCPoly::generator(self.chi_gen(i, j))
    }

    /// Index of `𝒟_−` in `GL` mode.
    pub fn dminus_gen(&self) -> Option<Gen> {
        (self.mode == GroupMode::GL).then(|| (self.n() * self.n()) as Gen)
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

    /// `χ_{ij}` written in the `x` generators.
    pub fn chi_in_x(&self, i: usize, j: usize) -> NCPoly<LocScalar> {
        let mut p = self.alg.x(i, j);
        if i == j {
            p.add_term(Word::empty(), LocScalar::one().negated());
        }
        p.map_coeffs(|c| c.div_qminus1(1))
    }

    /// Substitutes `x_{ij} = δ_{ij} + (q-1)χ_{ij}` and normalizes.
    pub fn to_vee_coordinates(&self, p: &NCPoly<LocScalar>) -> VeeElem {
        let shape = self.alg.shape();
        let body = p.substitute(|g| {
            let (i, j) = shape.coords(g);
            let d = if i == j {
                LocScalar::one()
            } else {
                LocScalar::zero()
            };
            chi_substitution(g, d)
        });
        VeeElem::new(self.pres.normal_form(&body))
    }

    /// `(q-1)⁻²[x_{ij}, x_{hk}]` rewritten in `χ`-coordinates and reduced
    /// modulo `(q-1)`, read as an element of `gl_n^*`.
    pub fn vee_commutator_limit(&self, a: (usize, usize), b: (usize, usize)) -> Result<LieElt> {
        let c = self
            .alg
            .commutator(&self.chi_in_x(a.0, a.1), &self.chi_in_x(b.0, b.1));
        let v = self.to_vee_coordinates(&c);
        if !v.in_vee() {
            return Err(Error::NotInVee(format!("[chi{a:?}, chi{b:?}]")));
        }
        self.linear_limit(&v.body)
    }

    /// Value at `q = 1` of a `χ`-polynomial of degree at most one without
    /// constant term, as a `gl_n^*` element.
    pub fn linear_limit(&self, p: &NCPoly<LocScalar>) -> Result<LieElt> {
        let shape = self.alg.shape();
        let mut out = LieElt::zero();
        for (w, c) in p.terms() {
            let c = c.eval_at_one()?;
            if c.is_zero() {
                continue;
            }
            if w.len() != 1 || Some(w.letters()[0]) == self.dminus_gen() {
                return Err(Error::NotLinear(self.display(p)));
            }
            out.add_term(shape.coords(w.letters()[0]), c);
        }
        Ok(out)
    }

    /// `U(gl_n^*)` in the same generator order as the `χ`'s.
    pub fn target(&self) -> Result<Uea> {
        Uea::new(&GlStar::new(self.n())?)
    }

    /// Reduces coefficients modulo `(q-1)` and sends `χ_{ij} ↦ 𝐄_{ij}`,
    /// `𝒟_− ↦ −Σ_k 𝐄_{kk}`.
    pub fn specialize_vee(&self, v: &NCPoly<LocScalar>, target: &Uea) -> Result<NCPoly<Q>> {
        let at_one = v.try_map_coeffs(|c| match c.valuation() {
            Some(k) if k < 0 => Err(Error::NegativeValuation(k)),
            _ => c.eval_at_one(),
        })?;
        let n = self.n();
        let dm = self.dminus_gen();
        let trace: NCPoly<Q> =
            NCPoly::from_terms((1..=n).map(|k| (Word::letter(self.chi_gen(k, k)), q_int(-1))));
        let image = at_one.substitute(|g| {
            if Some(g) == dm {
                trace.clone()
            } else {
                NCPoly::generator(g)
            }
        });
        Ok(target.normal_form(&image))
    }

    /// `[χ_a, χ_b]` at `q = 1` against the `gl_n^*` table for every ordered
    /// pair of generators, plus the image of `𝒟_−` in `GL` mode.
    pub fn vee_limit_report(&self) -> Result<VeeLimitReport> {
        let target = self.target()?;
        let n = self.n();
        let gens: Vec<(usize, usize)> = (1..=n).cartesian_product(1..=n).collect();
        let pairs: Vec<_> = gens.iter().cartesian_product(gens.iter()).collect();
        let entries = par_map(&pairs, |&(&a, &b)| -> Result<VeeLimitEntry> {
            let c = self.commutator(&self.chi(a.0, a.1), &self.chi(b.0, b.1));
            let got = self.specialize_vee(&c, &target)?;
            // the table is written for the standard convention
            let sign = q_int(self.conv().semiclassical_sign());
            let want = target.embed(&glstar_table(a, b).scale(&sign))?;
            Ok(VeeLimitEntry {
                a,
                b,
                limit: target.display(&got),
                table: target.display(&want),
                agrees: got == want,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let dminus = match self.dminus_gen() {
            Some(d) => {
                let got = self.specialize_vee(&NCPoly::generator(d), &target)?;
                let want = target.embed(&LieElt::l(n).scale(&q_int(-1)))?;
                Some(got == want)
            }
            None => None,
        };
        Ok(VeeLimitReport { n, entries, dminus })
    }

    /// `D_q − 1 ∈ (q-1)·O_q(G)^∨` and, in `O_q(GL_n)`,
    /// `D_q · (q-1)⁻¹(D_q⁻¹ − 1) = −(q-1)⁻¹(D_q − 1)`.
    pub fn determinant_identities(&self) -> (bool, bool) {
        let d = self.alg.quantum_determinant();
        let v = self.to_vee_coordinates(&d.minus(&NCPoly::one()));
        let unit = v.valuation.is_none_or(|k| k >= 1);
        let inv_t = LocScalar::one().div_qminus1(1);
        let dminus = self.alg.gl_add(
            &self.alg.gl_scale(&GLElement::t(), &inv_t),
            &GLElement::from_poly(NCPoly::constant(inv_t.negated())),
        );
        let lhs = self.alg.gl_mul(&GLElement::from_poly(d.clone()), &dminus);
        let rhs = GLElement::from_poly(d.minus(&NCPoly::one()).scale(&inv_t.negated()));
        (unit, lhs == self.alg.gl_reduce(&rhs))
    }
}

/// `δ + (q-1)·χ_g` as a polynomial.
fn chi_substitution(g: Gen, delta: LocScalar) -> NCPoly<LocScalar> {
    let mut p = NCPoly::term(
        Word::letter(g),
        LocScalar::from_laurent(Laurent::q_minus_one()),
    );
    p.add_term(Word::empty(), delta);
    p
}

#[derive(Clone, Debug)]
pub struct VeeLimitEntry {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub limit: String,
    pub table: String,
    pub agrees: bool,
}

#[derive(Clone, Debug)]
pub struct VeeLimitReport {
    pub n: usize,
    pub entries: Vec<VeeLimitEntry>,
    /// Whether `𝒟_− ↦ −Σ𝐄_{kk}`; `None` in `SL` mode.
    pub dminus: Option<bool>,
}

impl VeeLimitReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &VeeLimitEntry> + '_ {
        self.entries.iter().filter(|e| !e.agrees)
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none() && self.dminus != Some(false)
    }
}

/// Which representative of a commutative monomial is lifted to `O_q(M_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lift {
    /// Letters in increasing generator order.
    Sorted,
    /// Letters in decreasing order, then normalized.
    Reversed,
}

/// Commutative polynomial in the `x̄_{ij}`: words with sorted letters.
pub type CommPoly = NCPoly<Q>;

/// Sorts the letters of every word.
pub fn comm_normalize(p: &CommPoly) -> CommPoly {
    NCPoly::from_terms(p.terms().map(|(w, c)| (w.sorted(), c.clone())))
}

pub fn comm_mul(a: &CommPoly, b: &CommPoly) -> CommPoly {
    comm_normalize(&a.free_mul(b))
}

fn lift(alg: &QuantumMatrix, p: &CommPoly, how: Lift) -> NCPoly<LocScalar> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut letters = w.sorted().letters().to_vec();
        if how == Lift::Reversed {
            letters.reverse();
        }
        out.add_term(
            Word::from_slice(&letters),
            LocScalar::from_rational(c.clone()),
        );
    }
    alg.nf(&out)
}

/// `{ā, b̄} = (q-1)⁻¹(ab − ba)|_{q=1}` for lifts `a`, `b` of the inputs.
pub fn poisson_bracket_with(
    alg: &QuantumMatrix,
    a: &CommPoly,
    b: &CommPoly,
    how: Lift,
) -> Result<CommPoly> {
    let (la, lb) = (lift(alg, a, how), lift(alg, b, how));
    let c = alg.commutator(&la, &lb);
    let c = c.try_map_coeffs(|x| x.div_qminus1(1).eval_at_one())?;
    Ok(comm_normalize(&c))
}

pub fn poisson_bracket(alg: &QuantumMatrix, a: &CommPoly, b: &CommPoly) -> Result<CommPoly> {
    poisson_bracket_with(alg, a, b, Lift::Sorted)
}

/// One generator pair of the Poisson table.
#[derive(Clone, Debug)]
pub struct PoissonEntry {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub kind: &'static str,
    pub definitional: String,
    pub table: String,
    pub agrees: bool,
    /// The table entry for `i < ℓ, j < k` disagrees with the definition.
    pub flagged: bool,
    /// For flagged entries: the definition gives `2 x̄_{ℓj} x̄_{ik}`.
    pub flag_value_ok: bool,
}

#[derive(Clone, Debug)]
pub struct PoissonTableReport {
    pub n: usize,
    pub entries: Vec<PoissonEntry>,
    /// `{d, x̄_{ij}} = 0` and `{d⁻¹, x̄_{ij}} = 0` for all generators.
    pub determinant_central: bool,
}

impl PoissonTableReport {
    pub fn passed(&self) -> bool {
        self.determinant_central
            && self
                .entries
                .iter()
                .all(|e| if e.flagged { e.flag_value_ok } else { e.agrees })
    }

    pub fn flags(&self) -> impl Iterator<Item = &PoissonEntry> + '_ {
        self.entries.iter().filter(|e| e.flagged)
    }
}

fn xbar(alg: &QuantumMatrix, i: usize, j: usize) -> CommPoly {
    NCPoly::generator(alg.gen(i, j))
}

/// Every generator pair `x̄_a, x̄_b` with `a < b` in row-major order,
/// compared with the generator table of `O(GL_n)`.
pub fn poisson_table_report(alg: &QuantumMatrix) -> Result<PoissonTableReport> {
    let n = alg.n();
    let gens: Vec<(usize, usize)> = (1..=n).cartesian_product(1..=n).collect();
    let pairs: Vec<_> = gens.iter().tuple_combinations::<(_, _)>().collect();
    let show = |p: &CommPoly| {
        alg.pres()
            .display(&p.map_coeffs(|c| LocScalar::from_rational(c.clone())))
    };
    let sign = alg.conv().semiclassical_sign();
    let mut entries = Vec::new();
    for (&(i, j), &(l, k)) in pairs {
        let got = poisson_bracket(alg, &xbar(alg, i, j), &xbar(alg, l, k))?;
        let prod = |a: CommPoly, b: CommPoly, c: i64| comm_mul(&a, &b).scale(&q_int(c * sign));
        let (kind, table, flagged) = if i == l {
            ("row", prod(xbar(alg, i, j), xbar(alg, i, k), 1), false)
        } else if j == k {
            ("column", prod(xbar(alg, i, j), xbar(alg, l, j), 1), false)
        } else if k < j {
            ("anti-diagonal", NCPoly::zero(), false)
        } else {
            ("diagonal", prod(xbar(alg, i, j), xbar(alg, l, k), 2), true)
        };
        let flag_value = prod(xbar(alg, l, j), xbar(alg, i, k), 2);
        entries.push(PoissonEntry {
            a: (i, j),
            b: (l, k),
            kind,
            definitional: show(&got),
            table: show(&table),
            agrees: got == table,
            flagged,
            flag_value_ok: flagged && got == flag_value,
        });
    }
    Ok(PoissonTableReport {
        n,
        entries,
        determinant_central: determinant_brackets_vanish(alg)?,
    })
}

/// `{d, x̄_{ij}}` from the lift `D_q`, and `{d⁻¹, x̄_{ij}}` from `T = D_q⁻¹`
/// in `O_q(GL_n)`.
pub fn determinant_brackets_vanish(alg: &QuantumMatrix) -> Result<bool> {
    let n = alg.n();
    let d = alg.quantum_determinant();
    for (i, j) in (1..=n).cartesian_product(1..=n) {
        let x = alg.x(i, j);
        let c = alg.commutator(&d, &x);
        let c = c.try_map_coeffs(|v| v.div_qminus1(1).eval_at_one())?;
        if !c.is_zero() {
            return Ok(false);
        }
        let xe = GLElement::from_poly(x);
        let tx = alg.gl_mul(&GLElement::t(), &xe);
        let xt = alg.gl_mul(&xe, &GLElement::t());
        if tx != xt {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Random commutative polynomial of degree at most `deg` with up to `terms`
/// terms and small integer coefficients.
pub fn random_comm_poly(rng: &mut impl Rng, ngen: usize, deg: usize, terms: usize) -> CommPoly {
    let mut p = NCPoly::zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=deg);
        let letters: Vec<Gen> = (0..d).map(|_| rng.gen_range(0..ngen) as Gen).collect();
        let c = rng.gen_range(-3i64..=3);
        p.add_term(Word::from_slice(&letters).sorted(), q_int(c));
    }
    p
}

/// Antisymmetry, Leibniz, Jacobi and lift independence on one seeded triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonAxioms {
    pub seed: u64,
    pub antisymmetry: bool,
    pub leibniz: bool,
    pub jacobi: bool,
    pub lift_independent: bool,
}

impl PoissonAxioms {
    pub fn passed(&self) -> bool {
        self.antisymmetry && self.leibniz && self.jacobi && self.lift_independent
    }
}

pub fn poisson_axioms(alg: &QuantumMatrix, seed: u64) -> Result<PoissonAxioms> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ngen = alg.n() * alg.n();
    let a = random_comm_poly(&mut rng, ngen, 2, 3);
    let b = random_comm_poly(&mut rng, ngen, 2, 3);
    let c = random_comm_poly(&mut rng, ngen, 2, 3);
    let pb = |x: &CommPoly, y: &CommPoly| poisson_bracket(alg, x, y);
    let ab = pb(&a, &b)?;
    let antisymmetry = ab.plus(&pb(&b, &a)?).is_zero();
    let lhs = pb(&a, &comm_mul(&b, &c))?;
    let rhs = comm_mul(&ab, &c).plus(&comm_mul(&b, &pb(&a, &c)?));
    let leibniz = lhs == rhs;
    let jac = pb(&a, &pb(&b, &c)?)?
        .plus(&pb(&b, &pb(&c, &a)?)?)
        .plus(&pb(&c, &ab)?);
    let lift_independent = ab == poisson_bracket_with(alg, &a, &b, Lift::Reversed)?;
    Ok(PoissonAxioms {
        seed,
        antisymmetry,
        leibniz,
        jacobi: jac.is_zero(),
        lift_independent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee(n: usize, mode: GroupMode) -> VeeAlgebra {
        VeeAlgebra::new(n, QConv::Standard, mode).unwrap()
    }

    #[test]
    fn substitution_examples() {
        let v = vee(2, GroupMode::SL);
        let a = v.alg();
        let e = v.to_vee_coordinates(&a.x(1, 2));
        assert_eq!(v.display(&e.body), "(q - 1)*chi[1,2]");
        let e = v.to_vee_coordinates(&a.x(1, 1));
        assert_eq!(v.display(&e.body), "1 + (q - 1)*chi[1,1]");
        assert_eq!(e.valuation, Some(0));
    }

    #[test]
    fn chi_presentation_confluent() {
        for n in 2..=3 {
            let v = vee(n, GroupMode::GL);
            assert!(v.pres().check_confluence().is_confluent());
        }
    }

    #[test]
    fn commutator_routes_agree() {
        let v = vee(3, GroupMode::SL);
        let gens: Vec<(usize, usize)> = (1..=3).cartesian_product(1..=3).collect();
        for &a in &gens {
            for &b in &gens {
                let direct = v.commutator(&v.chi(a.0, a.1), &v.chi(b.0, b.1));
                let lim = v.vee_commutator_limit(a, b).unwrap();
                assert_eq!(v.linear_limit(&direct).unwrap(), lim, "{a:?} {b:?}");
            }
        }
        assert!(v.vee_commutator_limit((1, 1), (1, 1)).unwrap().is_zero());
    }

    #[test]
    fn commutator_limits() {
        let v = vee(4, GroupMode::SL);
        assert!(v.vee_commutator_limit((1, 2), (3, 4)).unwrap().is_zero());
        assert_eq!(
            v.vee_commutator_limit((1, 1), (1, 2)).unwrap(),
            LieElt::basis((1, 2))
        );
        // the diagonal Manin relation carries q − q⁻¹ → 2
        assert_eq!(
            v.vee_commutator_limit((1, 2), (2, 3)).unwrap(),
            LieElt::term((1, 3), q_int(2))
        );
    }

    #[test]
    fn specialization() {
        let v = vee(2, GroupMode::GL);
        let u = v.target().unwrap();
        let p = v.specialize_vee(&v.chi(2, 1), &u).unwrap();
        assert_eq!(u.display(&p), "Ed[2,1]");
        let d = NCPoly::generator(v.dminus_gen().unwrap());
        let p = v.specialize_vee(&d, &u).unwrap();
        assert_eq!(u.display(&p), "-Ed[1,1] - Ed[2,2]");
        let t = v
            .chi(1, 2)
            .scale(&LocScalar::from_laurent(Laurent::q_minus_one()));
        assert!(v.specialize_vee(&t, &u).unwrap().is_zero());
        let bad = v.chi(1, 2).scale(&LocScalar::one().div_qminus1(1));
        assert!(matches!(
            v.specialize_vee(&bad, &u),
            Err(Error::NegativeValuation(_))
        ));
    }

    #[test]
    fn determinant_identities_hold() {
        let v = vee(2, GroupMode::GL);
        assert_eq!(v.determinant_identities(), (true, true));
    }

    #[test]
    fn poisson_examples() {
        let a = QuantumMatrix::new(2, QConv::Standard).unwrap();
        let x = |i, j| xbar(&a, i, j);
        assert_eq!(
            poisson_bracket(&a, &x(1, 1), &x(1, 2)).unwrap(),
            comm_mul(&x(1, 1), &x(1, 2))
        );
        assert!(poisson_bracket(&a, &x(1, 1), &x(1, 1)).unwrap().is_zero());
        assert_eq!(
            poisson_bracket(&a, &x(1, 1), &x(2, 2)).unwrap(),
            comm_mul(&x(2, 1), &x(1, 2)).scale(&q_int(2))
        );
        let r = poisson_table_report(&a).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.flags().count(), 1);
    }

    #[test]
    fn poisson_axioms_on_seeds() {
        let a = QuantumMatrix::new(2, QConv::Standard).unwrap();
        for seed in 0..5 {
            assert!(poisson_axioms(&a, seed).unwrap().passed());
        }
    }
}
