//! Verification tasks and their reports.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use itertools::Itertools;
use qgrass_core::bialgebra::verify_bialgebra;
use qgrass_core::bigcell::{BigCell, ColumnOrder};
use qgrass_core::coeffs::QConv;
use qgrass_core::completion::{
    verify_main_theorem, verify_p_perp_image, CellCompletion, CoidealCertificate,
};
use qgrass_core::drinfeld::{poisson_axioms, poisson_table_report, VeeAlgebra};
use qgrass_core::hopf::{GroupMode, QuantumMatrix, TensorPoly};
use qgrass_core::minors::{r_subsets, Grassmannian};
use qgrass_core::ncalg::{Gen, NCPoly};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    ManinConfluence,
    QdetCentral,
    Coaction,
    PluckerKernel,
    BigCell,
    Flatness,
    Bialgebra,
    PoissonTable,
    VeeLimit,
    PPerp,
    Coideal,
    MainTheorem,
}

impl Task {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Mode {
    #[value(name = "GL", alias = "gl")]
    GL,
    #[value(name = "SL", alias = "sl")]
    SL,
}

impl From<Mode> for GroupMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::GL => GroupMode::GL,
            Mode::SL => GroupMode::SL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conv {
    Standard,
    Inverted,
}

impl From<Conv> for QConv {
    fn from(c: Conv) -> Self {
        match c {
            Conv::Standard => QConv::Standard,
            Conv::Inverted => QConv::Inverted,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub r: usize,
    pub order: usize,
    pub deg: usize,
    pub mode: Mode,
    pub q_conv: Conv,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            n: 2,
            r: 1,
            order: 3,
            deg: 2,
            mode: Mode::GL,
            q_conv: Conv::Standard,
            seed: 0,
        }
    }
}

impl Params {
    fn conv(&self) -> QConv {
        self.q_conv.into()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Params,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
    pub residual_norms: Vec<String>,
    pub flags: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    fn new(task: Task, params: &Params) -> Self {
        Report {
            check: task.name(),
            params: params.clone(),
            pass: true,
            checks: Vec::new(),
            residual_norms: Vec::new(),
            flags: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    fn line(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(CheckLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "[{}] {} n={} r={} order={} deg={} mode={:?} q-conv={:?} ({:.3?})\n",
            pass_word(self.pass),
            self.check,
            self.params.n,
            self.params.r,
            self.params.order,
            self.params.deg,
            self.params.mode,
            self.params.q_conv,
            self.wall_time
        );
        for c in &self.checks {
            s += &format!("  {} {}: {}\n", pass_word(c.pass), c.name, c.detail);
        }
        for r in &self.residual_norms {
            s += &format!("  residual {r}\n");
        }
        for f in &self.flags {
            s += &format!("  FLAG {f}\n");
        }
        s
    }
}

pub fn pass_word(p: bool) -> &'static str {
    if p {
        "PASS"
    } else {
        "FAIL"
    }
}

pub type TaskResult = Result<Report, qgrass_core::Error>;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree-`d` standard monomials of `Gr(r, n)`: chains `I_1 ≤ … ≤ I_d`
/// in the componentwise order.
pub fn standard_monomial_count(n: usize, r: usize, d: usize) -> usize {
    let subsets = r_subsets(n, r);
    (0..subsets.len())
        .combinations_with_replacement(d)
        .filter(|c| {
            c.iter()
                .tuple_windows()
                .all(|(&a, &b)| subsets[a].iter().zip(&subsets[b]).all(|(x, y)| x <= y))
        })
        .count()
}

pub fn run_task(task: Task, p: &Params) -> TaskResult {
    let start = Instant::now();
    let mut rep = Report::new(task, p);
    let conv = p.conv();
    match task {
        Task::ManinConfluence => {
            for (m, k) in (1..=p.n).cartesian_product(1..=p.n) {
                let a = QuantumMatrix::rect(m, k, conv)?;
                let c = a.pres().check_confluence();
                rep.line(
                    format!("confluence {m}x{k}"),
                    c.is_confluent(),
                    format!(
                        "{} overlaps, {} failures",
                        c.overlaps_checked,
                        c.failures.len()
                    ),
                );
                let counts: Vec<(usize, usize)> = (0..=3)
                    .map(|d| (a.pres().normal_words(d).len(), binomial(m * k + d - 1, d)))
                    .collect();
                rep.line(
                    format!("pbw counts {m}x{k}"),
                    counts.iter().all(|(a, b)| a == b),
                    counts.iter().map(|(a, b)| format!("{a}/{b}")).join(" "),
                );
            }
        }
        Task::QdetCentral => {
            let a = QuantumMatrix::new(p.n, conv)?;
            let d = a.quantum_determinant();
            let central =
                (0..p.n * p.n).all(|g| a.commutator(&d, &NCPoly::generator(g as Gen)).is_zero());
            rep.line("central", central, format!("D_q = {}", a.display(&d)));
            rep.line(
                "group-like",
                a.coproduct(&d) == TensorPoly::pure(&d, &d),
                "Δ(D_q) = D_q ⊗ D_q",
            );
        }
        Task::Coaction => {
            let g = Grassmannian::new(p.n, p.r, conv)?;
            for rows in r_subsets(p.n, p.r) {
                let label: String = rows.iter().map(|i| i.to_string()).collect();
                rep.line(
                    format!("D^{label}"),
                    g.coaction_identity_check(&rows),
                    "Δ(D^I) = Σ_K D^I_K ⊗ D^K",
                );
            }
        }
        Task::PluckerKernel => {
            let g = Grassmannian::new(p.n, p.r, conv)?;
            let kernel = g.plucker_kernel_dimension(p.deg);
            let total = binomial(binomial(p.n, p.r) + p.deg - 1, p.deg);
            let expected = total - standard_monomial_count(p.n, p.r, p.deg);
            rep.line(
                "kernel dimension",
                kernel == expected,
                format!("{kernel} (classical {expected}, {total} monomials)"),
            );
        }
        Task::BigCell => {
            let b = BigCell::new(p.n, p.r, conv)?;
            let direct = b.verify_tij_manin()?;
            let reversed = b.verify_tij_manin_with(ColumnOrder::Reversed)?;
            let rev_ok = reversed.iter().all(|c| c.pass);
            for c in &direct {
                rep.line(format!("t {} ({})", c.relation, c.kind), c.pass, "");
            }
            let failing = direct.iter().filter(|c| !c.pass).count();
            if failing > 0 {
                rep.flags.push(format!(
                    "{failing} of {} relations fail as written; with columns reversed j -> r+1-j all hold: {rev_ok}",
                    direct.len()
                ));
            }
            for (rows, ok) in b.degree_zero_identification_check(p.deg)? {
                rep.line(
                    format!("D^{:?} D_0^-1 in t-span", rows),
                    ok,
                    format!("degree <= {}", p.deg),
                );
            }
        }
        Task::Flatness => {
            let g = Grassmannian::new(p.n, p.r, conv)?;
            for d in 1..=p.deg {
                let f = g.flatness(d)?;
                rep.line(
                    format!("degree {d}"),
                    f.is_flat(),
                    format!(
                        "{} monomials, rank {} generic, {} at q=1",
                        f.monomials, f.rank_generic, f.rank_at_one
                    ),
                );
            }
        }
        Task::Bialgebra => {
            let b = verify_bialgebra(p.n)?;
            for c in &b.checks {
                let detail = match c.failures.first() {
                    None => format!("{} cases", c.checked),
                    Some(f) => {
                        format!("{} of {} cases fail, e.g. {f}", c.failures.len(), c.checked)
                    }
                };
                rep.line(c.name.clone(), c.failures.is_empty(), detail);
            }
        }
        Task::PoissonTable => {
            let a = QuantumMatrix::new(p.n, conv)?;
            let t = poisson_table_report(&a)?;
            for e in &t.entries {
                let ok = if e.flagged { e.flag_value_ok } else { e.agrees };
                rep.line(
                    format!("{{x{}{}, x{}{}}} ({})", e.a.0, e.a.1, e.b.0, e.b.1, e.kind),
                    ok,
                    format!("definition {} / table {}", e.definitional, e.table),
                );
            }
            for e in t.flags() {
                rep.flags.push(format!(
                    "{{x{}{}, x{}{}}}: table gives {}, definition gives {}",
                    e.a.0, e.a.1, e.b.0, e.b.1, e.table, e.definitional
                ));
            }
            rep.line(
                "determinant central",
                t.determinant_central,
                "{d, x} = {d^-1, x} = 0",
            );
            let seeds: Vec<u64> = (p.seed..p.seed + 50).collect();
            let bad: Vec<u64> = seeds
                .iter()
                .map(|&s| poisson_axioms(&a, s).map(|r| (s, r.passed())))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .filter(|(_, ok)| !ok)
                .map(|(s, _)| s)
                .collect();
            rep.line(
                "axioms on 50 seeds",
                bad.is_empty(),
                format!("antisymmetry, Leibniz, Jacobi; failing seeds {bad:?}"),
            );
        }
        Task::VeeLimit => {
            let v = VeeAlgebra::new(p.n, conv, p.mode.into())?;
            let r = v.vee_limit_report()?;
            for e in &r.entries {
                rep.line(
                    format!("[chi{}{}, chi{}{}]", e.a.0, e.a.1, e.b.0, e.b.1),
                    e.agrees,
                    format!("limit {} / table {}", e.limit, e.table),
                );
            }
            if let Some(ok) = r.dminus {
                rep.line("Dm", ok, "D_- -> -sum E_kk");
            }
        }
        Task::PPerp => {
            let r = verify_p_perp_image(p.n, p.r, conv)?;
            for (((i, j), img), ok) in r.images.iter().zip(&r.sign_matches) {
                rep.line(
                    format!("mu[{i},{j}] at q=1"),
                    *ok,
                    format!(
                        "{} (expected sign (-1)^{})",
                        img.display_with("Ed"),
                        p.r - j
                    ),
                );
            }
            rep.line("spans p-perp", r.spans_p_perp, "");
            rep.line("p-perp abelian", r.p_perp_abelian, "");
            rep.line("degree <= 2 images in U(p-perp)", r.inside_u_p_perp, "");
            for (d, (got, want)) in r.degree_ranks.iter().enumerate() {
                rep.line(
                    format!("rank degree {d}"),
                    got == want,
                    format!("{got}/{want}"),
                );
            }
        }
        Task::Coideal => {
            let cell = CellCompletion::new(p.n, p.r, conv, p.order + 1)?;
            for (i, j) in qgrass_core::bigcell::staircase(p.n, p.r) {
                let c = cell.coideal_membership(i, j, p.deg)?;
                push_certificate(&mut rep, &c);
            }
        }
        Task::MainTheorem => {
            let m = verify_main_theorem(p.n, p.r, p.order, p.deg, conv)?;
            for c in &m.coideal {
                push_certificate(&mut rep, c);
            }
            rep.line("p-perp image", m.perp.passed(), "");
            rep.line(
                "valuation of sum over K != I_0",
                m.sigma_valuation >= 2,
                format!("{} (need >= 2)", m.sigma_valuation),
            );
            rep.line(
                "intersection",
                m.intersection_passed(),
                format!(
                    "{} monomials, rank {} at q=1",
                    m.intersection.0, m.intersection.1
                ),
            );
        }
    }
    rep.wall_time = start.elapsed();
    Ok(rep)
}

fn push_certificate(rep: &mut Report, c: &CoidealCertificate) {
    rep.line(
        format!("coideal mu[{},{}]", c.i, c.j),
        c.pass,
        format!("mod (q-1)^{}, degree <= {}", c.order, c.degree),
    );
    rep.residual_norms.push(format!(
        "mu[{},{}]: {}",
        c.i,
        c.j,
        c.residual_norms.iter().map(|x| x.to_string()).join(" ")
    ));
}

/// Every task at the given size, run concurrently, ordered by task name.
pub fn run_all(p: &Params) -> Vec<(Task, TaskResult)> {
    let tasks = Task::value_variants();
    let mut out: Vec<(Task, TaskResult)> = std::thread::scope(|s| {
        let handles: Vec<_> = tasks
            .iter()
            .map(|&t| (t, s.spawn(move || run_task(t, p))))
            .collect();
        handles
            .into_iter()
            .map(|(t, h)| (t, h.join().expect("task thread panicked")))
            .collect()
    });
    out.sort_by_key(|(t, _)| t.name());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_monomials() {
        // 21 products of Plücker coordinates of Gr(2,4) in degree 2, one relation
        assert_eq!(standard_monomial_count(4, 2, 2), 20);
        assert_eq!(standard_monomial_count(3, 1, 2), 6);
        assert_eq!(standard_monomial_count(4, 2, 1), 6);
    }

    #[test]
    fn task_names() {
        assert_eq!(Task::ManinConfluence.name(), "manin-confluence");
        assert_eq!(Task::PPerp.name(), "p-perp");
    }
}
