//! `verify`, `compute` and `check`.
//!
//! Failed identities become failed checks; a missing prerequisite (no R for
//! `uv`, say) is an input error.

use anyhow::{anyhow, bail, Result};
use clap::ValueEnum;
use hopf_kernel::cofrobenius::{self, ModularData};
use hopf_kernel::coquasitriangular::{self as cqt, Braiding, CQTData};
use hopf_kernel::hopf::{compute_antipode, verify_hopf, Element};
use hopf_kernel::laurent::{self, LaurentHopf, Mono};
use hopf_kernel::quasitriangular::{self as qt, QTData, RMatrix};
use hopf_kernel::structure::{self, Form};
use hopf_kernel::{Bialgebra, CoFrobeniusData, Error, FinHopfAlgebra, Functional, Hopf, Report};

use crate::document::FiniteSource;
use crate::source::Loaded;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Lambda,
    A,
    Alpha,
    Chi,
    U,
    V,
    Uv,
    #[value(name = "a_alpha")]
    AAlpha,
    #[value(name = "b_alpha")]
    BAlpha,
    MinimalSubhopf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    S4,
    Uv,
    Main3,
    Factunim,
    Cor25,
    Cor3,
    Tangent,
    Minimal,
}

pub fn name_of<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

/// Runs `f`, turning kernel errors into a failed check titled `title`.
fn guard(title: &str, f: impl FnOnce() -> hopf_kernel::Result<Vec<Report>>) -> Vec<Report> {
    match f() {
        Ok(reports) => reports,
        Err(Error::Axioms(rep)) => vec![*rep],
        Err(e) => {
            let mut rep = Report::new(title);
            rep.fail(title, e.to_string());
            vec![rep]
        }
    }
}

// ---------------------------------------------------------------- finite

struct Finite {
    alg: FinHopfAlgebra,
    data: CoFrobeniusData,
}

fn validated(src: &FiniteSource) -> Result<Finite> {
    let rep = verify_hopf(&src.constants);
    if let Some(c) = rep.failures().next() {
        bail!("not a Hopf algebra: {}: {}", c.name, c.witness.clone().unwrap_or_default());
    }
    let alg = FinHopfAlgebra::new(src.constants.clone()).map_err(|e| anyhow!("{e}"))?;
    let (data, _) = cofrobenius::analyze(&alg).map_err(|e| anyhow!("co-Frobenius analysis: {e}"))?;
    Ok(Finite { alg, data })
}

fn r_matrix(src: &FiniteSource, f: &Finite) -> Result<RMatrix> {
    let t = src.r.clone().ok_or_else(|| anyhow!("this needs an R-matrix, and the source has none"))?;
    RMatrix::new(&f.alg, t).map_err(|e| anyhow!("R: {e}"))
}

/// `R` checked as a quasitriangular structure, with its Drinfeld elements.
fn qt_ready(src: &FiniteSource, f: &Finite) -> Result<std::result::Result<(RMatrix, QTData), Report>> {
    let r = r_matrix(src, f)?;
    let axioms = qt::verify_qt(&f.alg, &r);
    if !axioms.passed() {
        return Ok(Err(axioms));
    }
    let q = qt::drinfeld_elements(&f.alg, &r).map_err(|e| anyhow!("{e}"))?;
    Ok(Ok((r, q)))
}

/// A braided finite algebra: the source's σ, or else `H*` with the braiding
/// dual to `R`.
struct BraidedFinite {
    alg: FinHopfAlgebra,
    data: ModularData<usize>,
    br: Braiding<usize>,
}

fn braided(src: &FiniteSource, f: &Finite) -> Result<BraidedFinite> {
    if let Some(s) = &src.sigma {
        let br = Braiding::from_matrix(&f.alg, s).map_err(|e| anyhow!("sigma: {e}"))?;
        return Ok(BraidedFinite { alg: f.alg.clone(), data: f.data.modular(), br });
    }
    let r = r_matrix(src, f).map_err(|_| anyhow!("this needs sigma or an R-matrix, and the source has neither"))?;
    let (dual, br) = cqt::dualize_qt(&f.alg, &r).map_err(|e| anyhow!("{e}"))?;
    let (data, _) = cofrobenius::analyze(&dual).map_err(|e| anyhow!("co-Frobenius analysis of the dual: {e}"))?;
    Ok(BraidedFinite { alg: dual, data: data.modular(), br })
}

fn declared_data(alg: &FinHopfAlgebra, src: &FiniteSource) -> (Vec<(String, Functional)>, Vec<(String, Element)>, Option<Report>) {
    if src.characters.is_empty() && src.grouplikes.is_empty() {
        return (Vec::new(), Vec::new(), None);
    }
    let mut rep = Report::new("declared characters and grouplikes");
    let mut chars = Vec::new();
    for (name, f) in &src.characters {
        if rep.expect(format!("{name} is a character"), alg.is_character(f), || f.format(alg)) {
            chars.push((name.clone(), f.clone()));
        }
    }
    let mut gs = Vec::new();
    for (name, g) in &src.grouplikes {
        if rep.expect(format!("{name} is grouplike"), alg.is_grouplike(g), || alg.format(g)) {
            gs.push((name.clone(), g.clone()));
        }
    }
    (chars, gs, Some(rep))
}

/// Forward and converse integral-twist checks with `ω = u⁻¹`, falling back
/// to `ω = u` when `u⁻¹` does not co-implement `S⁻²`.
fn tangent_round_trip<H: Hopf>(alg: &H, data: &ModularData<H::Basis>, d: &CQTData<H::Basis>, test: &[H::Basis]) -> Vec<Report> {
    let mut choice = Report::new("integral twist: choice of ω");
    let fwd = match cofrobenius::tangent_forward(alg, data, &d.u_inv, &d.u, test) {
        Ok(v) => {
            choice.compute("ω", "u⁻¹");
            Ok(v)
        }
        Err(Error::Precondition(_)) => {
            choice.compute("ω", "u");
            cofrobenius::tangent_forward(alg, data, &d.u, &d.u_inv, test)
        }
        Err(e) => Err(e),
    };
    guard("integral twist", || {
        let (rho, tau, fwd) = fwd?;
        let (_, _, back) = cofrobenius::tangent_extract(alg, data, &rho, &tau, test)?;
        Ok(vec![choice, fwd, back])
    })
}

fn verify_finite(src: &FiniteSource) -> Vec<Report> {
    let mut hopf = verify_hopf(&src.constants);
    if hopf.passed() {
        if let Some(table) = &src.constants.antipode {
            match compute_antipode(&src.constants) {
                Ok(m) => {
                    hopf.expect("solved antipode = table antipode", &m == table, || "matrices differ".into());
                }
                Err(e) => hopf.fail("solved antipode = table antipode", e.to_string()),
            }
        }
    }
    let ok = hopf.passed();
    let mut out = vec![hopf];
    if !ok {
        return out;
    }
    let alg = match FinHopfAlgebra::new(src.constants.clone()) {
        Ok(a) => a,
        Err(e) => {
            out.extend(guard("Hopf algebra", || Err(e)));
            return out;
        }
    };
    let data = match cofrobenius::analyze(&alg) {
        Ok((data, rep)) => {
            out.push(rep);
            data
        }
        Err(e) => {
            out.extend(guard("co-Frobenius analysis", || Err(e)));
            return out;
        }
    };
    let (chars, grouplikes, declared) = declared_data(&alg, src);
    out.extend(declared);

    if let Some(t) = &src.r {
        out.extend(guard("quasitriangular suite", || {
            let r = RMatrix::new(&alg, t.clone())?;
            let (q, suite) = qt::qt_suite(&alg, &data, &r, &chars)?;
            let mut reps = vec![suite];
            let (_, rt) = qt::r_tilde(&alg, &r)?;
            reps.push(rt);
            reps.push(minimal_report(&alg, &r)?);

            let (dual, br) = cqt::dualize_qt(&alg, &r)?;
            let (ddata, co) = cofrobenius::analyze(&dual)?;
            reps.push(co);
            let m = ddata.modular();
            let basis = dual.basis();
            let (d, mut suite) = cqt::cqt_suite(&dual, &m, &br, &[], &basis)?;
            suite.title = format!("coquasitriangular suite: {}", dual.name());
            suite.merge(cqt::check_dual_bridge(&dual, &d, &q));
            reps.push(suite);
            reps.extend(tangent_round_trip(&dual, &m, &d, &basis));
            Ok(reps)
        }));
    }
    if let Some(s) = &src.sigma {
        out.extend(guard("coquasitriangular suite", || {
            let br = Braiding::from_matrix(&alg, s)?;
            let m = data.modular();
            let basis = alg.basis();
            let (d, mut suite) = cqt::cqt_suite(&alg, &m, &br, &grouplikes, &basis)?;
            suite.title = format!("coquasitriangular suite: {}", alg.name());
            let mut reps = vec![suite];
            reps.extend(tangent_round_trip(&alg, &m, &d, &basis));
            Ok(reps)
        }));
    }
    out
}

fn minimal_report(alg: &FinHopfAlgebra, r: &RMatrix) -> hopf_kernel::Result<Report> {
    let min = qt::minimal_subhopf(alg, r)?;
    let mut rep = min.report;
    rep.compute("L = H", (min.algebra.dim() == alg.dim()).to_string());
    Ok(rep)
}

// ---------------------------------------------------------------- laurent

fn laurent_table(alg: &LaurentHopf, window: i64, name: &str, f: &Form<Mono>) -> Report {
    let mut rep = Report::new(format!("{name} on |i| ≤ {window}"));
    for m in LaurentHopf::window(window) {
        rep.compute(format!("{name}({})", alg.label(&m)), f.at(&m).to_string());
    }
    rep
}

fn laurent_data(alg: &LaurentHopf) -> Result<ModularData<Mono>> {
    laurent::laurent_modular(alg).map_err(|e| anyhow!("{e}"))
}

// ---------------------------------------------------------------- verify

pub fn verify(loaded: &Loaded) -> Result<Vec<Report>> {
    match loaded {
        Loaded::Finite(src) => Ok(verify_finite(src)),
        Loaded::Laurent { alg, window } => {
            let window = *window;
            Ok(guard("Laurent family", || Ok(vec![laurent::laurent_window_suite_with(alg, window)?])))
        }
    }
}

// ---------------------------------------------------------------- compute

pub fn compute(loaded: &Loaded, what: Quantity) -> Result<Report> {
    match loaded {
        Loaded::Finite(src) => compute_finite(src, what),
        Loaded::Laurent { alg, window } => compute_laurent(alg, *window, what),
    }
}

fn compute_finite(src: &FiniteSource, what: Quantity) -> Result<Report> {
    let f = validated(src)?;
    let alg = &f.alg;
    let mut rep = Report::new(format!("{}: {}", alg.name(), name_of(&what)));
    let kernel = |e: Error| anyhow!("{e}");
    match what {
        Quantity::Lambda => rep.compute("lambda", f.data.lambda.format(alg)),
        Quantity::A => rep.compute("a", alg.format(&f.data.a)),
        Quantity::Alpha => rep.compute("alpha", f.data.alpha.format(alg)),
        Quantity::Chi => rep.compute("chi", cofrobenius::format_map(alg, &f.data.chi)),
        Quantity::MinimalSubhopf => {
            let r = r_matrix(src, &f)?;
            return minimal_report(alg, &r).map_err(kernel);
        }
        Quantity::U | Quantity::V | Quantity::Uv | Quantity::AAlpha | Quantity::BAlpha if src.r.is_some() => {
            let (r, q) = match qt_ready(src, &f)? {
                Ok(v) => v,
                Err(failed) => return Ok(failed),
            };
            match what {
                Quantity::U => rep.compute("u", alg.format(&q.u)),
                Quantity::V => rep.compute("v", alg.format(&q.v)),
                Quantity::Uv => rep.compute("uv", alg.format(&alg.mul(&q.u, &q.v))),
                _ => {
                    let (a, b) = qt::grouplike_maps(alg, &r, &f.data.alpha).map_err(kernel)?;
                    if what == Quantity::AAlpha {
                        rep.compute("a_alpha", alg.format(&a));
                    } else {
                        rep.compute("b_alpha", alg.format(&b));
                    }
                }
            }
        }
        _ => {
            let b = braided(src, &f)?;
            let axioms = cqt::verify_cqt(&b.alg, &b.br, &b.alg.basis());
            if !axioms.passed() {
                return Ok(axioms);
            }
            let d = cqt::cqt_functionals(&b.alg, &b.br);
            let show = |form: &Form<usize>| cqt::tabulate(&b.alg, form).format(&b.alg);
            match what {
                Quantity::U => rep.compute("u", show(&d.u)),
                Quantity::V => rep.compute("v", show(&d.v)),
                Quantity::Uv => rep.compute("u⁻¹*v", show(&structure::convolve(&b.alg, &d.u_inv, &d.v))),
                _ => {
                    let (aa, ba) = cqt::alpha_beta_g(&b.alg, &b.br, &b.data.a).map_err(kernel)?;
                    if what == Quantity::AAlpha {
                        rep.compute("α_a", show(&aa));
                    } else {
                        rep.compute("β_a", show(&ba));
                    }
                }
            }
        }
    }
    Ok(rep)
}

fn compute_laurent(alg: &LaurentHopf, window: i64, what: Quantity) -> Result<Report> {
    let data = laurent_data(alg)?;
    let kernel = |e: Error| anyhow!("{e}");
    let br = alg.braiding();
    Ok(match what {
        Quantity::Lambda => laurent_table(alg, window, "lambda", &data.lambda),
        Quantity::Alpha => laurent_table(alg, window, "alpha", &data.alpha),
        Quantity::A => {
            let mut rep = Report::new("Laurent family: a");
            rep.compute("a", alg.format(&data.a));
            rep
        }
        Quantity::Chi => {
            let mut rep = Report::new(format!("chi on |i| ≤ {window}"));
            for m in LaurentHopf::window(window) {
                rep.compute(format!("chi({})", alg.label(&m)), alg.format(&(data.chi)(&m)));
            }
            rep
        }
        Quantity::U => laurent_table(alg, window, "u", &cqt::cqt_functionals(alg, &br).u),
        Quantity::V => laurent_table(alg, window, "v", &cqt::cqt_functionals(alg, &br).v),
        Quantity::Uv => {
            let d = cqt::cqt_functionals(alg, &br);
            laurent_table(alg, window, "u⁻¹*v", &structure::convolve(alg, &d.u_inv, &d.v))
        }
        Quantity::AAlpha => laurent_table(alg, window, "α_a", &cqt::alpha_beta_g(alg, &br, &data.a).map_err(kernel)?.0),
        Quantity::BAlpha => laurent_table(alg, window, "β_a", &cqt::alpha_beta_g(alg, &br, &data.a).map_err(kernel)?.1),
        Quantity::MinimalSubhopf => bail!("minimal-subhopf needs an R-matrix on a finite-dimensional algebra"),
    })
}

// ---------------------------------------------------------------- check

pub fn check(loaded: &Loaded, theorem: Theorem) -> Result<Report> {
    match loaded {
        Loaded::Finite(src) => check_finite(src, theorem),
        Loaded::Laurent { alg, window } => check_laurent(alg, *window, theorem),
    }
}

/// The coquasitriangular theorems, generic over the algebra.
fn check_braided<H: Hopf>(alg: &H, data: &ModularData<H::Basis>, br: &Braiding<H::Basis>, test: &[H::Basis], theorem: Theorem) -> Report {
    let axioms = cqt::verify_cqt(alg, br, test);
    if !axioms.passed() {
        return axioms;
    }
    let d = cqt::cqt_functionals(alg, br);
    let mut reps = match theorem {
        Theorem::Main3 => guard("theorem", || Ok(vec![cqt::check_theorem_main3(alg, data, br, &d, test)?])),
        Theorem::Cor3 => guard("corollary", || Ok(vec![cqt::check_corollary3(alg, data, br, &d, test)?])),
        _ => tangent_round_trip(alg, data, &d, test),
    };
    let mut rep = reps.remove(0);
    for r in reps {
        rep.merge(r);
    }
    rep
}

fn check_finite(src: &FiniteSource, theorem: Theorem) -> Result<Report> {
    let f = validated(src)?;
    let alg = &f.alg;
    let kernel = |e: Error| anyhow!("{e}");
    match theorem {
        Theorem::S4 => Ok(cofrobenius::check_radford_s4(alg, &f.data.modular(), &alg.basis())),
        Theorem::Minimal => {
            let r = r_matrix(src, &f)?;
            Ok(guard("minimal subHopf algebra", || Ok(vec![minimal_report(alg, &r)?])).remove(0))
        }
        Theorem::Uv | Theorem::Factunim | Theorem::Cor25 => {
            let (r, q) = match qt_ready(src, &f)? {
                Ok(v) => v,
                Err(failed) => return Ok(failed),
            };
            Ok(match theorem {
                Theorem::Uv => {
                    let mut rep = qt::check_drinfeld(alg, &q);
                    rep.title = "uv = vu = a·b_α = a·a_α".into();
                    rep.merge(qt::check_theorem22(alg, &f.data, &r, &q).map_err(kernel)?);
                    rep
                }
                Theorem::Factunim => qt::check_lemma_factunim(alg, &f.data, &r).map_err(kernel)?,
                _ => qt::check_corollary25(alg, &f.data, &r, &q).map_err(kernel)?,
            })
        }
        Theorem::Main3 | Theorem::Cor3 | Theorem::Tangent => {
            let b = braided(src, &f)?;
            Ok(check_braided(&b.alg, &b.data, &b.br, &b.alg.basis(), theorem))
        }
    }
}

fn check_laurent(alg: &LaurentHopf, window: i64, theorem: Theorem) -> Result<Report> {
    let data = laurent_data(alg)?;
    let test = LaurentHopf::window(window);
    match theorem {
        Theorem::S4 => Ok(cofrobenius::check_radford_s4(alg, &data, &test)),
        Theorem::Main3 | Theorem::Cor3 | Theorem::Tangent => Ok(check_braided(alg, &data, &alg.braiding(), &test, theorem)),
        t => bail!("{} needs an R-matrix on a finite-dimensional algebra", name_of(&t)),
    }
}
