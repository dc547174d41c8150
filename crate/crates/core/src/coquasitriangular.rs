//! Braidings `σ: H⊗H → k`: axioms, the functionals `u, v` and their
//! inverses, the characters `α_g, β_g`, the identity
//! `u⁻¹*v = v*u⁻¹ = α*β_a = α*α_a`, the flipped braiding `σ̃` and the
//! passage from an R-matrix on `H` to a braiding on `H*`.
//!
//! Everything except [`Braiding::from_matrix`] and [`dualize_qt`] is generic
//! over the carrier, so the finite and Laurent cases share the checkers.

use num_traits::Zero;

use crate::cofrobenius::ModularData;
use crate::error::{Error, Result};
use crate::hopf::{pairs, triples, FinHopfAlgebra, Functional, Functional2};
use crate::linalg::{solve_linear, Matrix};
use crate::quasitriangular::{QTData, RMatrix};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::structure::{self, coact, convolve_at, counit_form, Bialgebra, Form, Form2, Hopf, Vector};

pub const CO_INNER_CONVENTION: &str = "co-inner: co-Inn_ω(h) = ω⁻¹(h₁)h₂ω(h₃)";

/// A bilinear form with a two-sided convolution inverse.
#[derive(Clone)]
pub struct Braiding<B> {
    pub sigma: Form2<B>,
    pub sigma_inv: Form2<B>,
}

impl<B: Ord + Clone + Send + Sync + 'static> Braiding<B> {
    pub fn new(sigma: Form2<B>, sigma_inv: Form2<B>) -> Self {
        Braiding { sigma, sigma_inv }
    }

    /// `ε⊗ε`.
    pub fn trivial<H: Bialgebra<Basis = B>>(alg: &H) -> Self {
        let e = counit_form(alg);
        let t = Form2::product(&e, &e);
        Braiding { sigma: t.clone(), sigma_inv: t }
    }
}

impl Braiding<usize> {
    /// Dense braiding; the inverse is found by a linear solve in `(H⊗H)*`.
    pub fn from_matrix(alg: &FinHopfAlgebra, sigma: &Functional2) -> Result<Self> {
        let n = alg.dim();
        if sigma.0.rows() != n || sigma.0.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: sigma.0.rows() });
        }
        let s = sigma.to_form();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for left in [true, false] {
            for h in 0..n {
                for l in 0..n {
                    let mut row = vec![Scalar::zero(); n * n];
                    for ((h1, h2), ch) in alg.comul_basis(&h).iter() {
                        for ((l1, l2), cl) in alg.comul_basis(&l).iter() {
                            let (known, unknown) = if left { (s.at(h1, l1), h2 * n + l2) } else { (s.at(h2, l2), h1 * n + l1) };
                            row[unknown] += &(&(ch * cl) * &known);
                        }
                    }
                    rows.push(row);
                    rhs.push(&alg.counit_basis(&h) * &alg.counit_basis(&l));
                }
            }
        }
        let sol = solve_linear(&Matrix::from_rows(rows)?, &rhs)?
            .particular()
            .ok_or_else(|| Error::NotInvertible("σ in (H⊗H)*".into()))?;
        let mut inv = Matrix::zeros(n, n);
        for (k, c) in sol.into_iter().enumerate() {
            inv[(k / n, k % n)] = c;
        }
        Ok(Braiding { sigma: s, sigma_inv: Functional2(inv).to_form() })
    }
}

/// The four functionals built from a braiding.
#[derive(Clone)]
pub struct CQTData<B> {
    pub u: Form<B>,
    pub u_inv: Form<B>,
    pub v: Form<B>,
    pub v_inv: Form<B>,
}

fn inv_witness<H: Bialgebra>(alg: &H, f: &Form<H::Basis>, g: &Form<H::Basis>, test: &[H::Basis]) -> Option<String> {
    let eps = counit_form(alg);
    test.iter()
        .find(|h| convolve_at(alg, f, g, h) != eps.at(h) || convolve_at(alg, g, f, h) != eps.at(h))
        .map(|h| format!("at {}", alg.label(h)))
}

fn forms_witness<H: Bialgebra>(alg: &H, f: &Form<H::Basis>, g: &Form<H::Basis>, test: &[H::Basis]) -> Option<String> {
    f.differs_from(g, test).map(|h| format!("at {}: {} ≠ {}", alg.label(h), f.at(h), g.at(h)))
}

fn forms2_witness<H: Bialgebra>(alg: &H, f: &Form2<H::Basis>, g: &Form2<H::Basis>, test: &[H::Basis]) -> Option<String> {
    pairs(test)
        .find(|(x, y)| f.at(x, y) != g.at(x, y))
        .map(|(x, y)| format!("at ({}, {}): {} ≠ {}", alg.label(x), alg.label(y), f.at(x, y), g.at(x, y)))
}

/// The braiding axioms on `test`; when they hold, also
/// `σ⁻¹ = σ∘(S⊗id) = σ∘(id⊗S⁻¹)` and `σ = σ∘(S⊗S)`.
pub fn verify_cqt<H: Hopf>(alg: &H, br: &Braiding<H::Basis>, test: &[H::Basis]) -> Report {
    let mut r = Report::new("coquasitriangular");
    let s = &br.sigma;
    let lab = |b: &H::Basis| alg.label(b);
    r.check_all("σ(hl, m) = σ(h, m₁)σ(l, m₂)", triples(test), |(h, l, m)| {
        let lhs = s.eval(&alg.mul_basis(h, l), &Vector::basis(m.clone()));
        let rhs: Scalar = alg.comul_basis(m).iter().map(|((m1, m2), c)| &(c * &s.at(h, m1)) * &s.at(l, m2)).sum();
        (lhs != rhs).then(|| format!("(h,l,m) = ({}, {}, {}): {lhs} ≠ {rhs}", lab(h), lab(l), lab(m)))
    });
    r.check_all("σ(h, lm) = σ(h₁, m)σ(h₂, l)", triples(test), |(h, l, m)| {
        let lhs = s.eval(&Vector::basis(h.clone()), &alg.mul_basis(l, m));
        let rhs: Scalar = alg.comul_basis(h).iter().map(|((h1, h2), c)| &(c * &s.at(h1, m)) * &s.at(h2, l)).sum();
        (lhs != rhs).then(|| format!("(h,l,m) = ({}, {}, {}): {lhs} ≠ {rhs}", lab(h), lab(l), lab(m)))
    });
    let one = alg.unit();
    r.check_all("σ(h, 1) = σ(1, h) = ε(h)", test.iter(), |h| {
        let hv = Vector::basis(h.clone());
        let e = alg.counit_basis(h);
        (s.eval(&hv, &one) != e || s.eval(&one, &hv) != e).then(|| format!("at {}", lab(h)))
    });
    r.check_all("l₁h₁σ(h₂, l₂) = σ(h₁, l₁)h₂l₂", pairs(test), |(h, l)| {
        let (dh, dl) = (alg.comul_basis(h), alg.comul_basis(l));
        let mut lhs = Vector::zero();
        let mut rhs = Vector::zero();
        for ((h1, h2), ch) in dh.iter() {
            for ((l1, l2), cl) in dl.iter() {
                let c = ch * cl;
                let a = s.at(h2, l2);
                if !a.is_zero() {
                    lhs.add_scaled(&(&c * &a), &alg.mul_basis(l1, h1));
                }
                let b = s.at(h1, l1);
                if !b.is_zero() {
                    rhs.add_scaled(&(&c * &b), &alg.mul_basis(h2, l2));
                }
            }
        }
        (lhs != rhs).then(|| format!("(h,l) = ({}, {}): {} ≠ {}", lab(h), lab(l), alg.format(&lhs), alg.format(&rhs)))
    });
    let eps = counit_form(alg);
    let ee = Form2::product(&eps, &eps);
    r.check_all("σ*σ⁻¹ = ε⊗ε = σ⁻¹*σ", pairs(test), |(h, l)| {
        let e = ee.at(h, l);
        let ok = structure::convolve2_at(alg, s, &br.sigma_inv, h, l) == e
            && structure::convolve2_at(alg, &br.sigma_inv, s, h, l) == e;
        (!ok).then(|| format!("at ({}, {})", lab(h), lab(l)))
    });
    if r.passed() {
        let (a1, a2) = (alg.clone(), alg.clone());
        let (s1, s2, s3) = (s.clone(), s.clone(), s.clone());
        let a3 = alg.clone();
        let s_id = Form2::new(move |x: &H::Basis, y: &H::Basis| s1.eval(&a1.antipode_basis(x), &Vector::basis(y.clone())));
        let id_s = Form2::new(move |x: &H::Basis, y: &H::Basis| s2.eval(&Vector::basis(x.clone()), &a2.antipode_inv_basis(y)));
        let ss = Form2::new(move |x: &H::Basis, y: &H::Basis| s3.eval(&a3.antipode_basis(x), &a3.antipode_basis(y)));
        let w = forms2_witness(alg, &s_id, &br.sigma_inv, test);
        r.expect("σ⁻¹ = σ∘(S⊗id)", w.is_none(), || w.unwrap_or_default());
        let w = forms2_witness(alg, &id_s, &br.sigma_inv, test);
        r.expect("σ⁻¹ = σ∘(id⊗S⁻¹)", w.is_none(), || w.unwrap_or_default());
        let w = forms2_witness(alg, &ss, s, test);
        r.expect("σ = σ∘(S⊗S)", w.is_none(), || w.unwrap_or_default());
    }
    r
}

/// `u(h) = σ(h₂, S(h₁))`, `u⁻¹(h) = σ(S²(h₂), h₁)`, `v = u∘S`,
/// `v⁻¹(h) = σ(S²(h₁), h₂)`.
pub fn cqt_functionals<H: Hopf>(alg: &H, br: &Braiding<H::Basis>) -> CQTData<H::Basis> {
    let mk = |f: fn(&H, &Form2<H::Basis>, &H::Basis) -> Scalar| {
        let (alg, s) = (alg.clone(), br.sigma.clone());
        Form::new(move |h: &H::Basis| f(&alg, &s, h))
    };
    let u = mk(|alg, s, h| {
        alg.comul_basis(h).iter().map(|((h1, h2), c)| c * &s.eval(&Vector::basis(h2.clone()), &alg.antipode_basis(h1))).sum()
    });
    let u_inv = mk(|alg, s, h| {
        alg.comul_basis(h)
            .iter()
            .map(|((h1, h2), c)| c * &s.eval(&alg.antipode_pow(&Vector::basis(h2.clone()), 2), &Vector::basis(h1.clone())))
            .sum()
    });
    let v = structure::compose_antipode(alg, &u, 1);
    let v_inv = mk(|alg, s, h| {
        alg.comul_basis(h)
            .iter()
            .map(|((h1, h2), c)| c * &s.eval(&alg.antipode_pow(&Vector::basis(h1.clone()), 2), &Vector::basis(h2.clone())))
            .sum()
    });
    CQTData { u, u_inv, v, v_inv }
}

/// Inverses, the co-inner form of `S²`, and `u*v⁻¹ = v⁻¹*u`.
pub fn check_cqt_functionals<H: Hopf>(alg: &H, d: &CQTData<H::Basis>, test: &[H::Basis]) -> Report {
    let mut r = Report::new("u, v and S²");
    let w = inv_witness(alg, &d.u, &d.u_inv, test);
    r.expect("u*u⁻¹ = ε = u⁻¹*u", w.is_none(), || w.unwrap_or_default());
    let w = inv_witness(alg, &d.v, &d.v_inv, test);
    r.expect("v*v⁻¹ = ε = v⁻¹*v", w.is_none(), || w.unwrap_or_default());
    r.check_all("S²(h) = u(h₁)h₂u⁻¹(h₃) = v⁻¹(h₁)h₂v(h₃)", test.iter(), |h| {
        let hv = Vector::basis(h.clone());
        let s2 = alg.antipode_pow(&hv, 2);
        let a = coact(alg, &d.u, &hv, &d.u_inv);
        let b = coact(alg, &d.v_inv, &hv, &d.v);
        (s2 != a || s2 != b).then(|| format!("at {}: S² = {}, via u: {}, via v: {}", alg.label(h), alg.format(&s2), alg.format(&a), alg.format(&b)))
    });
    let x = structure::convolve(alg, &d.u, &d.v_inv);
    let y = structure::convolve(alg, &d.v_inv, &d.u);
    let w = forms_witness(alg, &x, &y, test);
    r.expect("u*v⁻¹ = v⁻¹*u", w.is_none(), || w.unwrap_or_default());
    r
}

/// `α_g = σ(−, g⁻¹)` and `β_g = σ(g, −)`.
pub fn alpha_beta_g<H: Hopf>(
    alg: &H,
    br: &Braiding<H::Basis>,
    g: &Vector<H::Basis>,
) -> Result<(Form<H::Basis>, Form<H::Basis>)> {
    if !structure::is_grouplike(alg, g) {
        return Err(Error::Precondition(format!("{} is not grouplike", alg.format(g))));
    }
    let g_inv = alg.antipode(g);
    Ok((sigma_right(&br.sigma, &g_inv), sigma_left(&br.sigma, g)))
}

fn sigma_right<B: Ord + Clone + Send + Sync + 'static>(s: &Form2<B>, y: &Vector<B>) -> Form<B> {
    let (s, y) = (s.clone(), y.clone());
    Form::new(move |x: &B| s.eval(&Vector::basis(x.clone()), &y))
}

fn sigma_left<B: Ord + Clone + Send + Sync + 'static>(s: &Form2<B>, x: &Vector<B>) -> Form<B> {
    let (s, x) = (s.clone(), x.clone());
    Form::new(move |y: &B| s.eval(&x, &Vector::basis(y.clone())))
}

/// Characters `α_g, β_g` for each grouplike, multiplicativity in `g`, and
/// the functionals `𝒲_g = {σ(−,g), σ⁻¹(g,−), σ(g⁻¹,−), σ⁻¹(−,g⁻¹)}`.
///
/// Each `ω ∈ 𝒲_g` satisfies `ω(h₁)h₂ω⁻¹(h₃) = ghg⁻¹`, so its convolution
/// inverse co-implements `Inn_g` in the convention above; the inverses are
/// compared with `{α_g, β_g}` as a set.
pub fn check_alpha_beta<H: Hopf>(
    alg: &H,
    br: &Braiding<H::Basis>,
    grouplikes: &[(String, Vector<H::Basis>)],
    test: &[H::Basis],
) -> Result<Report> {
    let mut r = Report::new("characters α_g, β_g");
    r.convention(CO_INNER_CONVENTION);
    let mut maps = Vec::new();
    for (name, g) in grouplikes {
        let (a, b) = alpha_beta_g(alg, br, g)?;
        for (which, f) in [("α", &a), ("β", &b)] {
            let w = structure::character_witness(alg, f, test);
            r.expect(format!("{which}_{name} is a character"), w.is_none(), || w.unwrap_or_default());
        }
        let g_inv = alg.antipode(g);
        let s = &br.sigma;
        let si = &br.sigma_inv;
        let ws = [
            (sigma_right(s, g), sigma_right(si, g)),
            (sigma_left(si, g), sigma_left(s, g)),
            (sigma_left(s, &g_inv), sigma_left(si, &g_inv)),
            (sigma_right(si, &g_inv), sigma_right(s, &g_inv)),
        ];
        for (k, (w, w_inv)) in ws.iter().enumerate() {
            r.check_all(format!("𝒲_{name}[{}]: ω(h₁)h₂ω⁻¹(h₃) = {name}h{name}⁻¹", k + 1), test.iter(), |h| {
                let hv = Vector::basis(h.clone());
                let lhs = alg.mul(&coact(alg, w, &hv, w_inv), g);
                let rhs = alg.mul(g, &hv);
                if inv_witness(alg, w, w_inv, test).is_some() {
                    return Some("ω⁻¹ is not a convolution inverse".into());
                }
                (lhs != rhs).then(|| format!("at {}", alg.label(h)))
            });
        }
        for (which, f) in [("α", &a), ("β", &b)] {
            r.check_all(format!("co-Inn_{which}_{name} = Inn_{name}"), test.iter(), |h| {
                let hv = Vector::basis(h.clone());
                let f_inv = structure::compose_antipode(alg, f, 1);
                let lhs = alg.mul(&coact(alg, &f_inv, &hv, f), g);
                (lhs != alg.mul(g, &hv)).then(|| format!("at {}", alg.label(h)))
            });
        }
        let inverses: Vec<&Form<H::Basis>> = ws.iter().map(|(_, i)| i).collect();
        let same = |x: &Form<H::Basis>, y: &Form<H::Basis>| x.differs_from(y, test).is_none();
        let covered = inverses.iter().all(|w| same(w, &a) || same(w, &b))
            && inverses.iter().any(|w| same(w, &a))
            && inverses.iter().any(|w| same(w, &b));
        r.expect(format!("{{ω⁻¹ : ω ∈ 𝒲_{name}}} = {{α_{name}, β_{name}}}"), covered, || {
            "inverses of 𝒲 do not match {α, β}".into()
        });
        let literal = ws.iter().all(|(w, _)| same(w, &a) || same(w, &b));
        r.compute(format!("𝒲_{name} ⊆ {{α_{name}, β_{name}}} literally"), literal.to_string());
        maps.push((name, g.clone(), a, b));
    }
    r.check_all("α_{gh} = α_g*α_h, β_{gh} = β_g*β_h", pairs(&maps), |(x, y)| {
        let (a, b) = alpha_beta_g(alg, br, &alg.mul(&x.1, &y.1)).ok()?;
        let a2 = structure::convolve(alg, &x.2, &y.2);
        let b2 = structure::convolve(alg, &x.3, &y.3);
        (a.differs_from(&a2, test).is_some() || b.differs_from(&b2, test).is_some()).then(|| format!("(g, h) = ({}, {})", x.0, y.0))
    });
    Ok(r)
}

/// `u⁻¹*v = v*u⁻¹ = α*β_a = α*α_a`.
pub fn check_theorem_main3<H: Hopf>(
    alg: &H,
    data: &ModularData<H::Basis>,
    br: &Braiding<H::Basis>,
    d: &CQTData<H::Basis>,
    test: &[H::Basis],
) -> Result<Report> {
    let mut r = Report::new("u⁻¹*v = v*u⁻¹ = α*β_a = α*α_a");
    let (alpha_a, beta_a) = alpha_beta_g(alg, br, &data.a)?;
    let chain = [
        ("u⁻¹*v", structure::convolve(alg, &d.u_inv, &d.v)),
        ("v*u⁻¹", structure::convolve(alg, &d.v, &d.u_inv)),
        ("α*β_a", structure::convolve(alg, &data.alpha, &beta_a)),
        ("α*α_a", structure::convolve(alg, &data.alpha, &alpha_a)),
    ];
    for w in chain.windows(2) {
        let wit = forms_witness(alg, &w[0].1, &w[1].1, test);
        r.expect(format!("{} = {}", w[0].0, w[1].0), wit.is_none(), || wit.unwrap_or_default());
    }
    Ok(r)
}

/// `α_a = β_a`; `u⁻¹*v = α` when `a = 1`; `u∘S = u ⇔ α_a = α⁻¹`.
pub fn check_corollary3<H: Hopf>(
    alg: &H,
    data: &ModularData<H::Basis>,
    br: &Braiding<H::Basis>,
    d: &CQTData<H::Basis>,
    test: &[H::Basis],
) -> Result<Report> {
    let mut r = Report::new("α_a = β_a and consequences");
    let (alpha_a, beta_a) = alpha_beta_g(alg, br, &data.a)?;
    let w = forms_witness(alg, &alpha_a, &beta_a, test);
    r.expect("(i) α_a = β_a", w.is_none(), || w.unwrap_or_default());
    if data.a == alg.unit() {
        let lhs = structure::convolve(alg, &d.u_inv, &d.v);
        let w = forms_witness(alg, &lhs, &data.alpha, test);
        r.expect("(ii) a = 1 ⇒ u⁻¹*v = α", w.is_none(), || w.unwrap_or_default());
    } else {
        r.skip("(ii) a = 1 ⇒ u⁻¹*v = α", "a ≠ 1");
    }
    let lhs = d.v.differs_from(&d.u, test).is_none();
    let rhs = alpha_a.differs_from(&data.alpha_inv, test).is_none();
    r.compute("u∘S = u", lhs.to_string());
    r.compute("α_a = α⁻¹", rhs.to_string());
    r.expect("(iii) u∘S = u ⇔ α_a = α⁻¹", lhs == rhs, || format!("u∘S = u is {lhs}, α_a = α⁻¹ is {rhs}"));
    Ok(r)
}

/// `σ̃(x, y) = σ⁻¹(y, x)`.
pub fn sigma_tilde<B: Ord + Clone + Send + Sync + 'static>(br: &Braiding<B>) -> Braiding<B> {
    Braiding { sigma: br.sigma_inv.flipped(), sigma_inv: br.sigma.flipped() }
}

/// Axioms for `σ̃`, the swaps `ũ = v⁻¹, ṽ = u⁻¹, α̃_a = β_a, β̃_a = α_a`
/// and `σ̃̃ = σ`.
pub fn check_sigma_tilde<H: Hopf>(
    alg: &H,
    br: &Braiding<H::Basis>,
    a: &Vector<H::Basis>,
    test: &[H::Basis],
) -> Result<Report> {
    let mut r = Report::new("σ̃ = σ⁻¹∘tw");
    let t = sigma_tilde(br);
    let mut axioms = verify_cqt(alg, &t, test);
    for c in &mut axioms.checks {
        c.name = format!("σ̃: {}", c.name);
    }
    r.merge(axioms);
    let d = cqt_functionals(alg, br);
    let dt = cqt_functionals(alg, &t);
    let w = forms_witness(alg, &dt.u, &d.v_inv, test);
    r.expect("ũ = v⁻¹", w.is_none(), || w.unwrap_or_default());
    let w = forms_witness(alg, &dt.v, &d.u_inv, test);
    r.expect("ṽ = u⁻¹", w.is_none(), || w.unwrap_or_default());
    let (alpha_a, beta_a) = alpha_beta_g(alg, br, a)?;
    let (alpha_t, beta_t) = alpha_beta_g(alg, &t, a)?;
    let w = forms_witness(alg, &alpha_t, &beta_a, test);
    r.expect("α̃_a = β_a", w.is_none(), || w.unwrap_or_default());
    let w = forms_witness(alg, &beta_t, &alpha_a, test);
    r.expect("β̃_a = α_a", w.is_none(), || w.unwrap_or_default());
    let tt = sigma_tilde(&t);
    let w = forms2_witness(alg, &tt.sigma, &br.sigma, test);
    r.expect("σ̃̃ = σ", w.is_none(), || w.unwrap_or_default());
    Ok(r)
}

/// `H*` with `σ(f, g) = f(R¹)g(R²)`.
pub fn dualize_qt(alg: &FinHopfAlgebra, r: &RMatrix) -> Result<(FinHopfAlgebra, Braiding<usize>)> {
    let dual = alg.dual_hopf();
    let sigma = Functional2(r.r.0.clone());
    let sigma_inv = Functional2(r.r_inv.0.clone());
    Ok((dual, Braiding::new(sigma.to_form(), sigma_inv.to_form())))
}

/// On `H*`: `u(f) = f(u_H)`, `u⁻¹(f) = f(u_H⁻¹)`, `v(f) = f(S(u_H))`,
/// `v⁻¹(f) = f(v_H)`, for every dual basis functional `f`.
pub fn check_dual_bridge(dual: &FinHopfAlgebra, d: &CQTData<usize>, qt: &QTData) -> Report {
    let mut r = Report::new("R-matrix to braiding on H*");
    let cases = [
        ("u(f) = f(u_H)", &d.u, &qt.u),
        ("u⁻¹(f) = f(u_H⁻¹)", &d.u_inv, &qt.u_inv),
        ("v(f) = f(S(u_H))", &d.v, &qt.v_inv),
        ("v⁻¹(f) = f(v_H)", &d.v_inv, &qt.v),
    ];
    for (name, form, el) in cases {
        r.check_all(name, dual.basis(), |p| {
            let lhs = form.at(&p);
            let rhs = el.coeff(&p);
            (lhs != rhs).then(|| format!("at {}: {lhs} ≠ {rhs}", dual.label(&p)))
        });
    }
    r
}

/// Dense form of a functional on a finite algebra.
pub fn tabulate(alg: &FinHopfAlgebra, f: &Form<usize>) -> Functional {
    Functional(f.tabulate(&alg.basis()))
}

/// Every braiding check on `(H, σ)` in one report.
pub fn cqt_suite<H: Hopf>(
    alg: &H,
    data: &ModularData<H::Basis>,
    br: &Braiding<H::Basis>,
    grouplikes: &[(String, Vector<H::Basis>)],
    test: &[H::Basis],
) -> Result<(CQTData<H::Basis>, Report)> {
    let mut rep = Report::new("coquasitriangular suite");
    rep.convention(CO_INNER_CONVENTION);
    let axioms = verify_cqt(alg, br, test);
    let ok = axioms.passed();
    rep.merge(axioms);
    if !ok {
        return Err(Error::Axioms(Box::new(rep)));
    }
    let d = cqt_functionals(alg, br);
    rep.merge(check_cqt_functionals(alg, &d, test));
    let mut gs = vec![("1".to_string(), alg.unit()), ("a".to_string(), data.a.clone()), ("a⁻¹".to_string(), data.a_inv.clone())];
    gs.extend(grouplikes.iter().cloned());
    rep.merge(check_alpha_beta(alg, br, &gs, test)?);
    rep.merge(check_theorem_main3(alg, data, br, &d, test)?);
    rep.merge(check_corollary3(alg, data, br, &d, test)?);
    rep.merge(check_sigma_tilde(alg, br, &data.a, test)?);
    Ok((d, rep))
}
