//! The Lie bialgebras `gl_n`, `gl_n^*`, `sl_n^*` with explicit structure
//! constants, enveloping algebras as quadratic presentations, and the
//! parabolic pair `(p, p^⊥)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::iproduct;
use num_traits::{One, Zero};

use crate::coeffs::Q;
use crate::error::{Error, Result};
use crate::exec::par_map;
use crate::ncalg::{Gen, NCPoly, Presentation, Rule, Word};

/// Index `(i, j)` of `E_{ij}` or of the dual `𝐄_{ij}`, 1-based.
pub type Basis = (usize, usize);

/// Finite rational combination of basis symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElt {
    coords: BTreeMap<Basis, Q>,
}

impl LieElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: Basis) -> Self {
        Self::term(b, Q::one())
    }

    pub fn term(b: Basis, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(b, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Basis, Q)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (b, c) in it {
            e.add_term(b, c);
        }
        e
    }

    /// `e_i = E_{i,i+1}`.
    pub fn e(i: usize) -> Self {
        Self::basis((i, i + 1))
    }

    /// `f_i = E_{i+1,i}`.
    pub fn f(i: usize) -> Self {
        Self::basis((i + 1, i))
    }

    /// `g_j = E_{jj}`.
    pub fn g(j: usize) -> Self {
        Self::basis((j, j))
    }

    /// `h_i = g_i − g_{i+1}`.
    pub fn h(i: usize) -> Self {
        Self::g(i).minus(&Self::g(i + 1))
    }

    /// `l_n = g_1 + ⋯ + g_n`.
    pub fn l(n: usize) -> Self {
        Self::from_terms((1..=n).map(|j| ((j, j), Q::one())))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, b: Basis) -> Q {
        self.coords.get(&b).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Q)> + '_ {
        self.coords.iter()
    }

    pub fn add_term(&mut self, b: Basis, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry(b).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coords.remove(&b);
        }
    }

    pub fn plus(&self, other: &LieElt) -> LieElt {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &LieElt) -> LieElt {
        self.plus(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> LieElt {
        LieElt::from_terms(self.terms().map(|(b, x)| (*b, x * c)))
    }

    /// Natural pairing with a vector in the dual basis.
    pub fn pair(&self, other: &LieElt) -> Q {
        self.terms()
            .map(|(b, c)| c * other.coeff(*b))
            .fold(Q::zero(), |a, x| a + x)
    }

    pub fn display_with(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, ((i, j), c)) in self.terms().enumerate() {
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                s.push_str(&format!("{mag}*"));
            }
            s.push_str(&format!("{prefix}[{i},{j}]"));
        }
        s
    }
}

impl fmt::Display for LieElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("E"))
    }
}

/// Element of `g ⊗ g`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    coords: BTreeMap<(Basis, Basis), Q>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, a: Basis, b: Basis) -> Q {
        self.coords.get(&(a, b)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Basis, Basis), &Q)> + '_ {
        self.coords.iter()
    }

    pub fn add_term(&mut self, a: Basis, b: Basis, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry((a, b)).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coords.remove(&(a, b));
        }
    }

    /// `x ⊗ y`.
    pub fn tensor(x: &LieElt, y: &LieElt) -> Self {
        let mut t = Self::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                t.add_term(*a, *b, c * d);
            }
        }
        t
    }

    /// `x ∧ y = x ⊗ y − y ⊗ x`.
    pub fn wedge(x: &LieElt, y: &LieElt) -> Self {
        Self::tensor(x, y).minus(&Self::tensor(y, x))
    }

    pub fn plus(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(*a, *b, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Tensor2) -> Tensor2 {
        self.plus(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), x) in self.terms() {
            out.add_term(*a, *b, x * c);
        }
        out
    }

    pub fn display_with(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|(((i, j), (k, l)), c)| format!("{c}*{prefix}[{i},{j}]⊗{prefix}[{k},{l}]"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

type Tensor3 = BTreeMap<(Basis, Basis, Basis), Q>;

fn add3(t: &mut Tensor3, key: (Basis, Basis, Basis), c: Q) {
    if c.is_zero() {
        return;
    }
    let slot = t.entry(key).or_insert_with(Q::zero);
    *slot += c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

/// A finite-dimensional Lie bialgebra given on a basis.
pub trait LieBialgebra: Sync {
    fn n(&self) -> usize;

    fn basis(&self) -> Vec<Basis>;

    fn bracket_basis(&self, a: Basis, b: Basis) -> LieElt;

    fn cobracket_basis(&self, a: Basis) -> Tensor2;

    /// Symbol printed for basis vectors.
    fn prefix(&self) -> &'static str;

    fn bracket(&self, x: &LieElt, y: &LieElt) -> LieElt {
        let mut out = LieElt::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                out = out.plus(&self.bracket_basis(*a, *b).scale(&(c * d)));
            }
        }
        out
    }

    fn cobracket(&self, x: &LieElt) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (a, c) in x.terms() {
            out = out.plus(&self.cobracket_basis(*a).scale(c));
        }
        out
    }

    /// `ad_x(a ⊗ b) = [x,a] ⊗ b + a ⊗ [x,b]`.
    fn ad2(&self, x: &LieElt, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), c) in t.terms() {
            let xa = self.bracket(x, &LieElt::basis(*a));
            let xb = self.bracket(x, &LieElt::basis(*b));
            out = out
                .plus(&Tensor2::tensor(&xa, &LieElt::basis(*b)).scale(c))
                .plus(&Tensor2::tensor(&LieElt::basis(*a), &xb).scale(c));
        }
        out
    }
}

/// Counts of exhaustive identity checks and the instances that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn report(name: &str, checked: usize, failures: Vec<Option<String>>) -> CheckReport {
    CheckReport {
        name: name.into(),
        checked,
        failures: failures.into_iter().flatten().collect(),
    }
}

/// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0` over all basis triples.
pub fn jacobi_check<L: LieBialgebra>(alg: &L) -> CheckReport {
    let basis = alg.basis();
    let triples = triples_of(&basis);
    let fails = par_map(&triples, |&(a, b, c)| {
        let (ea, eb, ec) = (LieElt::basis(a), LieElt::basis(b), LieElt::basis(c));
        let s = alg
            .bracket(&ea, &alg.bracket(&eb, &ec))
            .plus(&alg.bracket(&eb, &alg.bracket(&ec, &ea)))
            .plus(&alg.bracket(&ec, &alg.bracket(&ea, &eb)));
        (!s.is_zero()).then(|| {
            format!(
                "Jacobi({a:?},{b:?},{c:?}) = {}",
                s.display_with(alg.prefix())
            )
        })
    });
    report("jacobi", triples.len(), fails)
}

/// Bracket antisymmetry over all basis pairs.
pub fn antisymmetry_check<L: LieBialgebra>(alg: &L) -> CheckReport {
    let basis = alg.basis();
    let pairs = pairs_of(&basis);
    let fails = par_map(&pairs, |&(a, b)| {
        let s = alg.bracket_basis(a, b).plus(&alg.bracket_basis(b, a));
        (!s.is_zero()).then(|| format!("[{a:?},{b:?}] + [{b:?},{a:?}] ≠ 0"))
    });
    report("antisymmetry", pairs.len(), fails)
}

/// Sum over the cyclic permutations of `(δ ⊗ id) δ(x)`, which vanishes for a
/// Lie coalgebra; also checks `δ(x)` is antisymmetric.
pub fn cojacobi_check<L: LieBialgebra>(alg: &L) -> CheckReport {
    let basis = alg.basis();
    let fails = par_map(&basis, |&x| {
        let d = alg.cobracket_basis(x);
        for ((a, b), c) in d.terms() {
            if d.coeff(*b, *a) != -c.clone() {
                return Some(format!("δ({x:?}) is not antisymmetric"));
            }
        }
        let mut t3 = Tensor3::new();
        for ((a, b), c) in d.terms() {
            for ((u, v), e) in alg.cobracket_basis(*a).terms() {
                let k = c * e;
                add3(&mut t3, (*u, *v, *b), k.clone());
                add3(&mut t3, (*v, *b, *u), k.clone());
                add3(&mut t3, (*b, *u, *v), k);
            }
        }
        (!t3.is_empty()).then(|| format!("co-Jacobi fails at {x:?} ({} terms)", t3.len()))
    });
    report("co-jacobi", basis.len(), fails)
}

/// `δ([x,y]) = ad_x δ(y) − ad_y δ(x)` over all basis pairs.
pub fn cocycle_check<L: LieBialgebra>(alg: &L) -> CheckReport {
    let basis = alg.basis();
    let pairs = pairs_of(&basis);
    let fails = par_map(&pairs, |&(a, b)| {
        let (x, y) = (LieElt::basis(a), LieElt::basis(b));
        let lhs = alg.cobracket(&alg.bracket(&x, &y));
        let rhs = alg
            .ad2(&x, &alg.cobracket(&y))
            .minus(&alg.ad2(&y, &alg.cobracket(&x)));
        (lhs != rhs).then(|| format!("cocycle fails at ({a:?},{b:?})"))
    });
    report("cocycle", pairs.len(), fails)
}

fn pairs_of(basis: &[Basis]) -> Vec<(Basis, Basis)> {
    iproduct!(basis.iter().copied(), basis.iter().copied()).collect()
}

fn triples_of(basis: &[Basis]) -> Vec<(Basis, Basis, Basis)> {
    iproduct!(
        basis.iter().copied(),
        basis.iter().copied(),
        basis.iter().copied()
    )
    .collect()
}

fn all_pairs(n: usize) -> Vec<Basis> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect()
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// `gl_n` with the matrix commutator and the standard cobracket, fixed on
/// `e_i, f_i, g_j` and extended to all `E_{ij}` as a 1-cocycle.
#[derive(Clone, Debug)]
pub struct Gl {
    n: usize,
    cob: HashMap<Basis, Tensor2>,
}

impl Gl {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexError("n must be positive".into()));
        }
        let mut g = Gl {
            n,
            cob: HashMap::new(),
        };
        for j in 1..=n {
            g.cob.insert((j, j), Tensor2::zero());
        }
        for i in 1..n {
            g.cob
                .insert((i, i + 1), Tensor2::wedge(&LieElt::h(i), &LieElt::e(i)));
            g.cob
                .insert((i + 1, i), Tensor2::wedge(&LieElt::h(i), &LieElt::f(i)));
        }
        // E_ij = [e_i, E_{i+1,j}] above the diagonal, [E_{i,j+1}, f_j] below
        for gap in 2..n {
            for i in 1..=n - gap {
                let j = i + gap;
                let d = g.extend(LieElt::e(i), LieElt::basis((i + 1, j)));
                g.cob.insert((i, j), d);
                let d = g.extend(LieElt::basis((j, i + 1)), LieElt::f(i));
                g.cob.insert((j, i), d);
            }
        }
        Ok(g)
    }

    fn extend(&self, x: LieElt, y: LieElt) -> Tensor2 {
        self.ad2(&x, &self.cobracket(&y))
            .minus(&self.ad2(&y, &self.cobracket(&x)))
    }
}

impl LieBialgebra for Gl {
    fn n(&self) -> usize {
        self.n
    }

    fn basis(&self) -> Vec<Basis> {
        all_pairs(self.n)
    }

    fn bracket_basis(&self, (i, j): Basis, (h, k): Basis) -> LieElt {
        let mut out = LieElt::zero();
        if delta(j, h) {
            out.add_term((i, k), Q::one());
        }
        if delta(k, i) {
            out.add_term((h, j), -Q::one());
        }
        out
    }

    fn cobracket_basis(&self, a: Basis) -> Tensor2 {
        self.cob.get(&a).cloned().unwrap_or_default()
    }

    fn prefix(&self) -> &'static str {
        "E"
    }
}

/// `gl_n^*` in the basis `𝐄_{ij}` dual to the elementary matrices.
#[derive(Clone, Debug)]
pub struct GlStar {
    n: usize,
}

impl GlStar {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexError("n must be positive".into()));
        }
        Ok(GlStar { n })
    }
}

/// The three-case bracket table on `𝐄_{ij}`.
pub fn glstar_table((i, j): Basis, (h, k): Basis) -> LieElt {
    use std::cmp::Ordering::*;
    let mut out = LieElt::zero();
    let mut put = |b: Basis, on: bool, sign: i64| {
        if on {
            out.add_term(b, Q::from_integer(sign.into()));
        }
    };
    match (i.cmp(&j), h.cmp(&k)) {
        (Less | Equal, Less | Equal) | (Greater, Greater) => {
            put((i, k), j == h, 1);
            put((h, j), k == i, -1);
        }
        (Equal, Greater) | (Greater, Equal) => {
            put((h, j), k == i, 1);
            put((i, k), j == h, -1);
        }
        (Less, Greater) | (Greater, Less) => {}
    }
    out
}

impl LieBialgebra for GlStar {
    fn n(&self) -> usize {
        self.n
    }

    fn basis(&self) -> Vec<Basis> {
        all_pairs(self.n)
    }

    fn bracket_basis(&self, a: Basis, b: Basis) -> LieElt {
        glstar_table(a, b)
    }

    /// `δ(𝐄_{ij}) = Σ_k 𝐄_{ik} ∧ 𝐄_{kj}`.
    fn cobracket_basis(&self, (i, j): Basis) -> Tensor2 {
        let mut out = Tensor2::zero();
        for k in 1..=self.n {
            out = out.plus(&Tensor2::wedge(
                &LieElt::basis((i, k)),
                &LieElt::basis((k, j)),
            ));
        }
        out
    }

    fn prefix(&self) -> &'static str {
        "Ed"
    }
}

/// `sl_n^* = gl_n^* / (l_n)`, with `𝐄_{nn} ≡ −Σ_{i<n} 𝐄_{ii}`.
#[derive(Clone, Debug)]
pub struct SlStar {
    inner: GlStar,
}

impl SlStar {
    /// Projection `gl_n^* → sl_n^*`.
    pub fn project(&self, x: &LieElt) -> LieElt {
        let n = self.inner.n;
        let mut out = LieElt::zero();
        for (b, c) in x.terms() {
            if *b == (n, n) {
                for i in 1..n {
                    out.add_term((i, i), -c.clone());
                }
            } else {
                out.add_term(*b, c.clone());
            }
        }
        out
    }

    fn project2(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), c) in t.terms() {
            let pa = self.project(&LieElt::basis(*a));
            let pb = self.project(&LieElt::basis(*b));
            out = out.plus(&Tensor2::tensor(&pa, &pb).scale(c));
        }
        out
    }
}

impl LieBialgebra for SlStar {
    fn n(&self) -> usize {
        self.inner.n
    }

    fn basis(&self) -> Vec<Basis> {
        let n = self.inner.n;
        all_pairs(n).into_iter().filter(|&b| b != (n, n)).collect()
    }

    fn bracket_basis(&self, a: Basis, b: Basis) -> LieElt {
        self.project(&glstar_table(a, b))
    }

    fn cobracket_basis(&self, a: Basis) -> Tensor2 {
        self.project2(&self.inner.cobracket_basis(a))
    }

    fn prefix(&self) -> &'static str {
        "Ed"
    }
}

/// Verifies `l_n` is central in `gl_n^*` and builds the quotient.
pub fn sl_star_quotient(n: usize) -> Result<SlStar> {
    let inner = GlStar::new(n)?;
    let l = LieElt::l(n);
    for b in inner.basis() {
        let c = inner.bracket(&l, &LieElt::basis(b));
        if !c.is_zero() {
            return Err(Error::NotCentral(format!(
                "l_{n}: [l_{n}, Ed[{},{}]] = {}",
                b.0,
                b.1,
                c.display_with("Ed")
            )));
        }
    }
    Ok(SlStar { inner })
}

/// `[l_n, 𝐄_{ij}]` for every basis vector.
pub fn center_check(n: usize) -> Result<CheckReport> {
    let alg = GlStar::new(n)?;
    let l = LieElt::l(n);
    let basis = alg.basis();
    let fails = basis
        .iter()
        .map(|&b| {
            let c = alg.bracket(&l, &LieElt::basis(b));
            (!c.is_zero()).then(|| format!("[l_n, {b:?}] = {}", c.display_with("Ed")))
        })
        .collect();
    Ok(report("center", basis.len(), fails))
}

/// Both duality identities between `gl_n` and `gl_n^*` over all basis
/// vectors: `⟨[f,g], x⟩ = ⟨f⊗g, δ(x)⟩` and `⟨δ(f), x⊗y⟩ = ⟨f, [x,y]⟩`.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub n: usize,
    pub bracket_vs_cobracket: CheckReport,
    pub cobracket_vs_bracket: CheckReport,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.bracket_vs_cobracket.passed() && self.cobracket_vs_bracket.passed()
    }
}

pub fn pairing_duality_check(n: usize) -> Result<DualityReport> {
    let gl = Gl::new(n)?;
    let star = GlStar::new(n)?;
    let basis = all_pairs(n);
    let triples = triples_of(&basis);
    let first = par_map(&triples, |&(f, g, x)| {
        let lhs = star.bracket_basis(f, g).coeff(x);
        let rhs = gl.cobracket_basis(x).coeff(f, g);
        (lhs != rhs).then(|| {
            format!("<[Ed{f:?}, Ed{g:?}], E{x:?}> = {lhs} but <Ed{f:?}⊗Ed{g:?}, δ(E{x:?})> = {rhs}")
        })
    });
    let second = par_map(&triples, |&(f, x, y)| {
        let lhs = star.cobracket_basis(f).coeff(x, y);
        let rhs = gl.bracket_basis(x, y).coeff(f);
        (lhs != rhs).then(|| {
            format!("<δ(Ed{f:?}), E{x:?}⊗E{y:?}> = {lhs} but <Ed{f:?}, [E{x:?}, E{y:?}]> = {rhs}")
        })
    });
    Ok(DualityReport {
        n,
        bracket_vs_cobracket: report("<[f,g],x> = <f⊗g,δ(x)>", triples.len(), first),
        cobracket_vs_bracket: report("<δ(f),x⊗y> = <f,[x,y]>", triples.len(), second),
    })
}

/// Square rational matrix, row-major, 0-based storage.
pub type Matrix = Vec<Vec<Q>>;

fn mat_zero(n: usize) -> Matrix {
    vec![vec![Q::zero(); n]; n]
}

fn mat_commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = mat_zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut s = Q::zero();
            for k in 0..n {
                s += &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Image of a `gl_n^*` element in `gl_n ⊕ gl_n`: `𝐄_{ij} ↦ (E_{ij}, 0)` for
/// `i > j`, `(−E_{ii}, E_{ii})` on the diagonal, `(0, E_{ij})` for `i < j`.
pub fn realize_in_double(n: usize, x: &LieElt) -> (Matrix, Matrix) {
    let (mut lo, mut up) = (mat_zero(n), mat_zero(n));
    for (&(i, j), c) in x.terms() {
        if i > j {
            lo[i - 1][j - 1] += c;
        } else if i == j {
            lo[i - 1][j - 1] -= c;
            up[i - 1][j - 1] += c;
        } else {
            up[i - 1][j - 1] += c;
        }
    }
    (lo, up)
}

/// `realize_in_double` is a Lie homomorphism on all basis pairs.
pub fn double_homomorphism_check(n: usize) -> Result<CheckReport> {
    let star = GlStar::new(n)?;
    let basis = star.basis();
    let pairs = pairs_of(&basis);
    let fails = par_map(&pairs, |&(a, b)| {
        let (al, au) = realize_in_double(n, &LieElt::basis(a));
        let (bl, bu) = realize_in_double(n, &LieElt::basis(b));
        let want = (mat_commutator(&al, &bl), mat_commutator(&au, &bu));
        let got = realize_in_double(n, &star.bracket_basis(a, b));
        (got != want).then(|| format!("double realization disagrees on [Ed{a:?}, Ed{b:?}]"))
    });
    Ok(report("double", pairs.len(), fails))
}

/// Universal enveloping algebra as a quadratic presentation over `ℚ`:
/// generators in row-major basis order, `b·a → a·b + [b,a]` for `a < b`.
#[derive(Clone, Debug)]
pub struct Uea {
    basis: Vec<Basis>,
    pres: Presentation<Q>,
}

impl Uea {
    pub fn new<L: LieBialgebra>(alg: &L) -> Result<Self> {
        let basis = alg.basis();
        let index: HashMap<Basis, Gen> = basis
            .iter()
            .enumerate()
            .map(|(k, b)| (*b, k as Gen))
            .collect();
        let labels = basis
            .iter()
            .map(|(i, j)| format!("{}[{i},{j}]", alg.prefix()))
            .collect();
        let mut rules = Vec::new();
        for (ka, &a) in basis.iter().enumerate() {
            for (kb, &b) in basis.iter().enumerate().skip(ka + 1) {
                let (ga, gb) = (ka as Gen, kb as Gen);
                let mut rep = NCPoly::term(Word::from_slice(&[ga, gb]), Q::one());
                for (c, x) in alg.bracket_basis(b, a).terms() {
                    rep.add_term(Word::letter(index[c]), x.clone());
                }
                rules.push(Rule {
                    lead: (gb, ga),
                    replacement: rep,
                });
            }
        }
        Ok(Uea {
            basis,
            pres: Presentation::new(labels, rules)?,
        })
    }

    pub fn pres(&self) -> &Presentation<Q> {
        &self.pres
    }

    pub fn gen(&self, b: Basis) -> Result<Gen> {
        self.basis
            .iter()
            .position(|&x| x == b)
            .map(|k| k as Gen)
            .ok_or_else(|| Error::IndexError(format!("no basis symbol {b:?}")))
    }

    /// Image of a Lie element in degree one.
    pub fn embed(&self, x: &LieElt) -> Result<NCPoly<Q>> {
        let mut p = NCPoly::zero();
        for (b, c) in x.terms() {
            p.add_term(Word::letter(self.gen(*b)?), c.clone());
        }
        Ok(p)
    }

    pub fn normal_form(&self, p: &NCPoly<Q>) -> NCPoly<Q> {
        self.pres.normal_form(p)
    }

    pub fn display(&self, p: &NCPoly<Q>) -> String {
        self.pres.display(p)
    }
}

/// `p = Lie(P)` and its annihilator `p^⊥ ⊂ gl_n^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    pub n: usize,
    pub r: usize,
    /// `E_{ij}` with `i ≤ r` or `j > r`.
    pub p: Vec<Basis>,
    /// `𝐄_{ij}` with `r < i ≤ n`, `1 ≤ j ≤ r`.
    pub p_perp: Vec<Basis>,
}

impl ParabolicData {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::IndexError(format!(
                "need 0 < r < n, got r = {r}, n = {n}"
            )));
        }
        let (p_perp, p): (Vec<Basis>, Vec<Basis>) = all_pairs(n)
            .into_iter()
            .partition(|&(i, j)| i > r && j <= r);
        Ok(ParabolicData { n, r, p, p_perp })
    }

    pub fn in_p_perp(&self, b: Basis) -> bool {
        b.0 > self.r && b.1 <= self.r
    }

    /// `p` is closed under the commutator.
    pub fn p_is_subalgebra(&self) -> bool {
        let gl = Gl {
            n: self.n,
            cob: HashMap::new(),
        };
        self.p.iter().all(|&a| {
            self.p.iter().all(|&b| {
                gl.bracket_basis(a, b)
                    .terms()
                    .all(|(c, _)| !self.in_p_perp(*c))
            })
        })
    }

    /// Every pair in `p^⊥` has zero bracket in `gl_n^*`.
    pub fn p_perp_is_abelian(&self) -> bool {
        self.p_perp
            .iter()
            .all(|&a| self.p_perp.iter().all(|&b| glstar_table(a, b).is_zero()))
    }

    /// `⟨p^⊥, p⟩ = 0`.
    pub fn annihilates(&self) -> bool {
        self.p_perp.iter().all(|&f| {
            self.p
                .iter()
                .all(|&x| LieElt::basis(f).pair(&LieElt::basis(x)).is_zero())
        })
    }
}

/// Everything the bialgebra verification reports at one `n`.
#[derive(Clone, Debug)]
pub struct BialgebraReport {
    pub n: usize,
    pub checks: Vec<CheckReport>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

/// Jacobi, co-Jacobi and cocycle for `gl_n` and `gl_n^*`, both duality
/// identities, the double realization and the center.
pub fn verify_bialgebra(n: usize) -> Result<BialgebraReport> {
    let gl = Gl::new(n)?;
    let star = GlStar::new(n)?;
    let dual = pairing_duality_check(n)?;
    let tag = |mut c: CheckReport, who: &str| {
        c.name = format!("{who} {}", c.name);
        c
    };
    let checks = vec![
        tag(antisymmetry_check(&gl), "gl"),
        tag(jacobi_check(&gl), "gl"),
        tag(cojacobi_check(&gl), "gl"),
        tag(cocycle_check(&gl), "gl"),
        tag(antisymmetry_check(&star), "gl*"),
        tag(jacobi_check(&star), "gl*"),
        tag(cojacobi_check(&star), "gl*"),
        dual.bracket_vs_cobracket,
        dual.cobracket_vs_bracket,
        double_homomorphism_check(n)?,
        center_check(n)?,
    ];
    Ok(BialgebraReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::q_int;

    #[test]
    fn glstar_generator_brackets() {
        let s = GlStar::new(3).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                assert!(s.bracket(&LieElt::e(i), &LieElt::f(j)).is_zero());
                // the table also gives −e_j, −f_j when i = j + 1
                let c = q_int((i == j) as i64 - (i == j + 1) as i64);
                assert_eq!(
                    s.bracket(&LieElt::g(i), &LieElt::e(j)),
                    LieElt::e(j).scale(&c)
                );
                assert_eq!(
                    s.bracket(&LieElt::g(i), &LieElt::f(j)),
                    LieElt::f(j).scale(&c)
                );
            }
        }
        // both strictly lower: δ_{1,3} Ed[2,2] − δ_{2,2} Ed[3,1]
        assert_eq!(
            glstar_table((2, 1), (3, 2)),
            LieElt::term((3, 1), q_int(-1))
        );
    }

    #[test]
    fn gl_cobracket_on_generators() {
        let g = Gl::new(3).unwrap();
        assert!(g.cobracket(&LieElt::g(1)).is_zero());
        assert_eq!(
            g.cobracket(&LieElt::e(1)),
            Tensor2::wedge(&LieElt::h(1), &LieElt::e(1))
        );
        // the cocycle extension doubles the root-vector term
        let d = g.cobracket_basis((1, 3));
        assert_eq!(d.coeff((1, 2), (2, 3)), q_int(2));
    }

    #[test]
    fn glstar_cobracket_diagonal() {
        let s = GlStar::new(3).unwrap();
        let d = s.cobracket_basis((1, 1));
        let mut want = Tensor2::zero();
        for k in 2..=3 {
            want = want.plus(&Tensor2::wedge(
                &LieElt::basis((1, k)),
                &LieElt::basis((k, 1)),
            ));
        }
        assert_eq!(d, want);
    }

    #[test]
    fn duality_at_two() {
        assert!(pairing_duality_check(2).unwrap().passed());
        let s = GlStar::new(2).unwrap();
        let g = Gl::new(2).unwrap();
        let lhs = s.bracket(&LieElt::g(1), &LieElt::e(1)).coeff((1, 2));
        assert_eq!(lhs, q_int(1));
        assert_eq!(g.cobracket(&LieElt::e(1)).coeff((1, 1), (1, 2)), q_int(1));
    }

    #[test]
    fn structure_identities() {
        for n in 1..=3 {
            let r = verify_bialgebra(n).unwrap();
            for c in &r.checks {
                if c.name.starts_with("<[f,g]") {
                    continue;
                }
                assert!(c.passed(), "n = {n}: {c:?}");
            }
        }
    }

    #[test]
    fn double_realization_values() {
        let (lo, up) = realize_in_double(2, &LieElt::basis((2, 1)));
        assert_eq!(lo[1][0], q_int(1));
        assert!(up.iter().flatten().all(Zero::is_zero));
        let (lo, up) = realize_in_double(2, &LieElt::basis((1, 1)));
        assert_eq!((lo[0][0].clone(), up[0][0].clone()), (q_int(-1), q_int(1)));
    }

    #[test]
    fn uea_straightening() {
        let u = Uea::new(&GlStar::new(2).unwrap()).unwrap();
        let g1 = u.gen((1, 1)).unwrap();
        let e1 = u.gen((1, 2)).unwrap();
        let p = u.normal_form(&u.pres().word(&[e1, g1]));
        assert_eq!(u.display(&p), "-Ed[1,2] + Ed[1,1]*Ed[1,2]");
        assert!(u.pres().check_confluence().is_confluent());
        let u3 = Uea::new(&GlStar::new(3).unwrap()).unwrap();
        let (a, b) = (u3.gen((2, 1)).unwrap(), u3.gen((3, 1)).unwrap());
        assert_eq!(
            u3.normal_form(&u3.pres().word(&[b, a])),
            u3.pres().word(&[a, b])
        );
    }

    #[test]
    fn sl_star() {
        let s = sl_star_quotient(2).unwrap();
        assert_eq!(s.basis().len(), 3);
        assert!(jacobi_check(&s).passed());
        assert!(cojacobi_check(&s).passed());
        assert!(center_check(4).unwrap().passed());
    }

    #[test]
    fn parabolic() {
        for (n, r) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            let p = ParabolicData::new(n, r).unwrap();
            assert_eq!(p.p.len() + p.p_perp.len(), n * n);
            assert!(p.p_perp_is_abelian());
            assert!(p.p_is_subalgebra());
            assert!(p.annihilates());
        }
    }
}
