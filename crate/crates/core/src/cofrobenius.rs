//! Integrals in `H*`, the distinguished grouplike `a`, the Nakayama
//! automorphism `χ`, the modular functional `α`, the `S⁴` formula and the
//! co-inner characterisation of `S²` through integrals.
//!
//! Conventions: `λ` is a left integral when `h₁ λ(h₂) = λ(h) 1` for all `h`
//! (equivalently `f * λ = f(1) λ` for all `f ∈ H*`); `a` is then defined by
//! `λ(h₁) h₂ = λ(h) a⁻¹`.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hopf::{pairs, Element, FinHopfAlgebra, Functional};
use crate::linalg::{nullspace, solve_linear, Matrix};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::structure::{self, coact, convolve_at, counit_form, Bialgebra, Form, Form2, Hopf, Vector};

pub const INTEGRAL_CONVENTION: &str = "left integral: h₁λ(h₂) = λ(h)·1, i.e. f*λ = f(1)λ; a defined by λ(h₁)h₂ = λ(h)a⁻¹";
pub const PRIMITIVE_CONVENTION: &str = "(1,g)-primitive: Δ(x) = x⊗1 + g⊗x";
pub const NORMALIZATION_CONVENTION: &str = "λ scaled so its first nonzero basis value is 1";

/// A linear endomorphism given on basis elements.
pub type BasisMap<B> = Arc<dyn Fn(&B) -> Vector<B> + Send + Sync>;

/// Modular data over any carrier.
#[derive(Clone)]
pub struct ModularData<B: Ord> {
    pub lambda: Form<B>,
    pub a: Vector<B>,
    pub a_inv: Vector<B>,
    pub chi: BasisMap<B>,
    pub alpha: Form<B>,
    pub alpha_inv: Form<B>,
}

impl<B: Ord + Clone + 'static> ModularData<B> {
    pub fn chi_of(&self, v: &Vector<B>) -> Vector<B> {
        v.map_linear(|b| (self.chi)(b))
    }
}

/// Modular data of a finite-dimensional co-Frobenius Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct CoFrobeniusData {
    pub lambda: Functional,
    pub a: Element,
    pub a_inv: Element,
    /// Column `k` holds `χ(e_k)`.
    pub chi: Matrix,
    pub alpha: Functional,
    pub alpha_inv: Functional,
}

impl CoFrobeniusData {
    pub fn modular(&self) -> ModularData<usize> {
        ModularData {
            lambda: self.lambda.to_form(),
            a: self.a.clone(),
            a_inv: self.a_inv.clone(),
            chi: matrix_map(&self.chi),
            alpha: self.alpha.to_form(),
            alpha_inv: self.alpha_inv.to_form(),
        }
    }
}

/// The basis map whose value at `e_k` is column `k`.
pub fn matrix_map(m: &Matrix) -> BasisMap<usize> {
    let m = m.clone();
    Arc::new(move |k: &usize| Element::from_terms((0..m.rows()).map(|i| (i, m[(i, *k)].clone()))))
}

fn matrix_of(alg: &FinHopfAlgebra, f: impl Fn(&usize) -> Element) -> Matrix {
    let n = alg.dim();
    let mut m = Matrix::zeros(n, n);
    for k in 0..n {
        for (i, c) in f(&k).iter() {
            m[(*i, k)] = c.clone();
        }
    }
    m
}

/// Scales so the first nonzero entry is one.
fn normalize(v: Vec<Scalar>) -> Vec<Scalar> {
    match v.iter().find(|c| !c.is_zero()).and_then(Scalar::inv) {
        Some(inv) => v.iter().map(|c| c * &inv).collect(),
        None => v,
    }
}

/// Basis of the left integrals in `H*`.
pub fn left_integrals(alg: &FinHopfAlgebra) -> Vec<Functional> {
    nullspace(&left_integral_system(alg)).into_iter().map(|v| Functional(normalize(v))).collect()
}

/// Rows `(k, r)`: coefficient of `e_r` in `h₁λ(h₂) - λ(h)1` at `h = e_k`.
pub fn left_integral_system(alg: &FinHopfAlgebra) -> Matrix {
    let n = alg.dim();
    let one = alg.unit();
    let mut m = Matrix::zeros(n * n, n);
    for k in 0..n {
        for ((p, q), c) in alg.comul_basis(&k).iter() {
            m[(k * n + p, *q)] += c;
        }
        for (r, c) in one.iter() {
            m[(k * n + r, k)] -= c;
        }
    }
    m
}

/// `a` from `λ(h₁)h₂ = λ(h)a⁻¹`, verified on every basis element.
pub fn distinguished_grouplike(alg: &FinHopfAlgebra, lambda: &Functional) -> Result<Element> {
    let lam = lambda.to_form();
    let witness = alg
        .basis()
        .into_iter()
        .find(|b| !lambda.0[*b].is_zero())
        .ok_or_else(|| Error::Precondition("λ is zero".into()))?;
    let a_inv = structure::hit_right(alg, &Element::basis(witness), &lam).scale(&lambda.0[witness].inv().unwrap());
    let a = alg.invert_element(&a_inv)?;
    let report = check_distinguished(alg, &lam, &a, &a_inv, &alg.basis());
    if !report.passed() {
        let w = report.failures().next().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
        return Err(Error::Inconsistent(w.unwrap_or_default()));
    }
    Ok(a)
}

/// `h₁λ(h₂) = λ(h)1` on `test`.
pub fn check_left_integral<H: Hopf>(alg: &H, lambda: &Form<H::Basis>, test: &[H::Basis]) -> Report {
    let mut r = Report::new("left integral");
    let one = alg.unit();
    r.check_all("left-integral law h₁λ(h₂) = λ(h)1", test.iter(), |h| {
        let lhs = structure::hit_left(alg, lambda, &Vector::basis(h.clone()));
        let rhs = one.scale(&lambda.at(h));
        (lhs != rhs).then(|| format!("at {}: {} ≠ {}", alg.label(h), alg.format(&lhs), alg.format(&rhs)))
    });
    r
}

/// Both laws defining `a`, plus grouplike and inverse checks.
pub fn check_distinguished<H: Hopf>(
    alg: &H,
    lambda: &Form<H::Basis>,
    a: &Vector<H::Basis>,
    a_inv: &Vector<H::Basis>,
    test: &[H::Basis],
) -> Report {
    let mut r = Report::new("distinguished grouplike");
    let one = alg.unit();
    r.expect("a is grouplike", structure::is_grouplike(alg, a), || format!("a = {}", alg.format(a)));
    r.expect("a·a⁻¹ = a⁻¹·a = 1", alg.mul(a, a_inv) == one && alg.mul(a_inv, a) == one, || {
        format!("a = {}, a⁻¹ = {}", alg.format(a), alg.format(a_inv))
    });
    r.check_all("λ(h₁)h₂ = λ(h)a⁻¹", test.iter(), |h| {
        let lhs = structure::hit_right(alg, &Vector::basis(h.clone()), lambda);
        let rhs = a_inv.scale(&lambda.at(h));
        (lhs != rhs).then(|| format!("at {}: {} ≠ {}", alg.label(h), alg.format(&lhs), alg.format(&rhs)))
    });
    r.check_all("λ∘S² = a⁻¹⇀λ↼a", test.iter(), |m| {
        let mv = Vector::basis(m.clone());
        let lhs = lambda.eval(&alg.antipode_pow(&mv, 2));
        let rhs = lambda.eval(&alg.mul3(a, &mv, a_inv));
        (lhs != rhs).then(|| format!("at {}: {lhs} ≠ {rhs}", alg.label(m)))
    });
    r
}

/// Solves `h ⇀ λ = λ ↼ χ(h)` column by column.
pub fn frobenius_chi(alg: &FinHopfAlgebra, lambda: &Functional) -> Result<Matrix> {
    let n = alg.dim();
    let lam = lambda.to_form();
    // (λ ↼ y)(m) = λ(y m), linear in y
    let mut pairing = Matrix::zeros(n, n);
    for m in 0..n {
        for k in 0..n {
            pairing[(m, k)] = lam.eval(&alg.mul_basis(&k, &m));
        }
    }
    let mut chi = Matrix::zeros(n, n);
    for h in 0..n {
        let rhs: Vec<Scalar> = (0..n).map(|m| lam.eval(&alg.mul_basis(&m, &h))).collect();
        let y = solve_linear(&pairing, &rhs)?
            .unique()
            .ok_or_else(|| Error::Precondition("λ ↼ (·) is not bijective; input is not co-Frobenius".into()))?;
        for (i, c) in y.into_iter().enumerate() {
            chi[(i, h)] = c;
        }
    }
    let map = matrix_map(&chi);
    let basis = alg.basis();
    if let Some((x, y)) = pairs(&basis).find(|(x, y)| alg.mul(&map(x), &map(y)) != alg.mul_basis(x, y).map_linear(|b| map(b))) {
        return Err(Error::Inconsistent(format!("χ not multiplicative at ({}, {})", alg.label(x), alg.label(y))));
    }
    if chi.rank() < n {
        return Err(Error::Inconsistent("χ is not invertible".into()));
    }
    Ok(chi)
}

/// `χ(h) = α(h₂)S⁻²(h₁)` as a matrix.
pub fn chi_by_formula(alg: &FinHopfAlgebra, alpha: &Functional) -> Matrix {
    let f = alpha.to_form();
    matrix_of(alg, |k| chi_formula_at(alg, &f, k))
}

fn chi_formula_at<H: Hopf>(alg: &H, alpha: &Form<H::Basis>, h: &H::Basis) -> Vector<H::Basis> {
    alg.comul_basis(h).map_linear(|(p, q)| alg.antipode_pow(&Vector::basis(p.clone()), -2).scale(&alpha.at(q)))
}

/// `α = ε∘χ`, checked to be a character satisfying `χ(h) = α(h₂)S⁻²(h₁)`.
pub fn modular_alpha(alg: &FinHopfAlgebra, chi: &Matrix) -> Result<Functional> {
    let map = matrix_map(chi);
    let alpha = Functional(alg.basis().iter().map(|k| alg.counit(&map(k))).collect());
    if let Some(w) = structure::character_witness(alg, &alpha.to_form(), &alg.basis()) {
        return Err(Error::Inconsistent(format!("α is not a character: {w}")));
    }
    if chi_by_formula(alg, &alpha) != *chi {
        return Err(Error::Inconsistent("χ(h) ≠ α(h₂)S⁻²(h₁)".into()));
    }
    Ok(alpha)
}

/// Runs the whole pipeline on a finite-dimensional algebra.
pub fn analyze(alg: &FinHopfAlgebra) -> Result<(CoFrobeniusData, Report)> {
    let mut report = Report::new(format!("co-Frobenius data: {}", alg.name()));
    report.convention(INTEGRAL_CONVENTION);
    report.convention(NORMALIZATION_CONVENTION);
    let integrals = left_integrals(alg);
    report.compute("dim ∫_l", integrals.len().to_string());
    if integrals.len() != 1 {
        report.fail("left integrals one-dimensional", format!("dimension {}", integrals.len()));
        return Err(Error::Precondition(format!("space of left integrals has dimension {}", integrals.len())));
    }
    report.pass("left integrals one-dimensional");
    let lambda = integrals.into_iter().next().unwrap();
    let a = distinguished_grouplike(alg, &lambda)?;
    let a_inv = alg.invert_element(&a)?;
    let chi = frobenius_chi(alg, &lambda)?;
    let alpha = modular_alpha(alg, &chi)?;
    let alpha_inv = alg.conv_inverse(&alpha)?;
    report.compute("lambda", lambda.format(alg));
    report.compute("a", alg.format(&a));
    report.compute("alpha", alpha.format(alg));
    report.compute("chi", format_map(alg, &chi));
    let data = CoFrobeniusData { lambda, a, a_inv, chi, alpha, alpha_inv };
    let basis = alg.basis();
    let modular = data.modular();
    report.merge(check_left_integral(alg, &modular.lambda, &basis));
    report.merge(check_distinguished(alg, &modular.lambda, &data.a, &data.a_inv, &basis));
    report.merge(verify_integral_identities(alg, &modular, &basis, &basis));
    report.merge(check_chi_alpha(alg, &modular, &basis));
    report.expect("χ by solve = χ by formula", chi_by_formula(alg, &data.alpha) == data.chi, || {
        format!("formula gives {}", format_map(alg, &chi_by_formula(alg, &data.alpha)))
    });
    report.merge(check_radford_s4(alg, &modular, &basis));
    Ok((data, report))
}

pub fn format_map(alg: &FinHopfAlgebra, m: &Matrix) -> String {
    let map = matrix_map(m);
    let parts: Vec<String> = alg.basis().iter().map(|k| format!("{}↦{}", alg.label(k), alg.format(&map(k)))).collect();
    format!("[{}]", parts.join(", "))
}

/// Both integral identities on all pairs of `test`, and injectivity of
/// `h ↦ h⇀λ` and `h ↦ λ↼h` from `test` into functionals restricted to `probe`.
pub fn verify_integral_identities<H: Hopf>(
    alg: &H,
    data: &ModularData<H::Basis>,
    test: &[H::Basis],
    probe: &[H::Basis],
) -> Report {
    let mut r = Report::new("integral identities");
    let lam = &data.lambda;
    r.check_all("λ(hl₂)l₁ = λ(h₂l)S(h₁)", pairs(test), |(h, l)| {
        let hv = Vector::basis(h.clone());
        let lhs = alg.comul_basis(l).map_linear(|(l1, l2)| {
            Vector::term(lam.eval(&alg.mul_basis(h, l2)), l1.clone())
        });
        let rhs = alg.comul_basis(h).map_linear(|(h1, h2)| {
            alg.antipode_basis(h1).scale(&lam.eval(&alg.mul_basis(h2, l)))
        });
        let _ = hv;
        (lhs != rhs).then(|| format!("(h,l) = ({}, {}): {} ≠ {}", alg.label(h), alg.label(l), alg.format(&lhs), alg.format(&rhs)))
    });
    r.check_all("λ(hl₁)l₂ = λ(h₁l)S⁻¹(h₂)a⁻¹", pairs(test), |(h, l)| {
        let lhs = alg.comul_basis(l).map_linear(|(l1, l2)| {
            Vector::term(lam.eval(&alg.mul_basis(h, l1)), l2.clone())
        });
        let rhs = alg.comul_basis(h).map_linear(|(h1, h2)| {
            alg.mul(&alg.antipode_inv_basis(h2), &data.a_inv).scale(&lam.eval(&alg.mul_basis(h1, l)))
        });
        (lhs != rhs).then(|| format!("(h,l) = ({}, {}): {} ≠ {}", alg.label(h), alg.label(l), alg.format(&lhs), alg.format(&rhs)))
    });
    let rank_of = |f: &dyn Fn(&H::Basis, &H::Basis) -> Scalar| {
        let rows: Vec<Vec<Scalar>> = test.iter().map(|h| probe.iter().map(|m| f(h, m)).collect()).collect();
        Matrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
    };
    let left = rank_of(&|h, m| lam.eval(&alg.mul_basis(m, h)));
    r.expect("h ↦ h⇀λ injective", left == test.len(), || format!("rank {left} < {}", test.len()));
    let right = rank_of(&|h, m| lam.eval(&alg.mul_basis(h, m)));
    r.expect("h ↦ λ↼h injective", right == test.len(), || format!("rank {right} < {}", test.len()));
    r
}

/// `χ` an algebra map satisfying `h⇀λ = λ↼χ(h)`; `α = ε∘χ` a character with
/// two-sided inverse; `χ(h) = α(h₂)S⁻²(h₁)`.
pub fn check_chi_alpha<H: Hopf>(alg: &H, data: &ModularData<H::Basis>, test: &[H::Basis]) -> Report {
    let mut r = Report::new("Nakayama automorphism and modular functional");
    let lam = &data.lambda;
    r.check_all("h⇀λ = λ↼χ(h)", pairs(test), |(h, m)| {
        let lhs = lam.eval(&alg.mul_basis(m, h));
        let rhs = lam.eval(&alg.mul(&(data.chi)(h), &Vector::basis(m.clone())));
        (lhs != rhs).then(|| format!("(h,m) = ({}, {}): {lhs} ≠ {rhs}", alg.label(h), alg.label(m)))
    });
    r.check_all("χ multiplicative", pairs(test), |(x, y)| {
        let lhs = data.chi_of(&alg.mul_basis(x, y));
        let rhs = alg.mul(&(data.chi)(x), &(data.chi)(y));
        (lhs != rhs).then(|| format!("at ({}, {})", alg.label(x), alg.label(y)))
    });
    r.expect("χ(1) = 1", data.chi_of(&alg.unit()) == alg.unit(), || "χ(1) ≠ 1".into());
    r.check_all("α = ε∘χ", test.iter(), |h| {
        let e = alg.counit(&(data.chi)(h));
        (e != data.alpha.at(h)).then(|| format!("at {}", alg.label(h)))
    });
    let w = structure::character_witness(alg, &data.alpha, test);
    r.expect("α is a character", w.is_none(), || w.unwrap_or_default());
    let eps = counit_form(alg);
    r.check_all("α*α⁻¹ = ε = α⁻¹*α", test.iter(), |h| {
        let ok = convolve_at(alg, &data.alpha, &data.alpha_inv, h) == eps.at(h)
            && convolve_at(alg, &data.alpha_inv, &data.alpha, h) == eps.at(h);
        (!ok).then(|| format!("at {}", alg.label(h)))
    });
    r.check_all("χ(h) = α(h₂)S⁻²(h₁)", test.iter(), |h| {
        let lhs = (data.chi)(h);
        let rhs = chi_formula_at(alg, &data.alpha, h);
        (lhs != rhs).then(|| format!("at {}: {} ≠ {}", alg.label(h), alg.format(&lhs), alg.format(&rhs)))
    });
    r
}

/// `S⁴(h) = a(α⇀h↼α⁻¹)a⁻¹ = α⁻¹(h₁)ah₂a⁻¹α(h₃)`, three ways.
pub fn check_radford_s4<H: Hopf>(alg: &H, data: &ModularData<H::Basis>, test: &[H::Basis]) -> Report {
    let mut r = Report::new("S⁴ formula");
    r.check_all("S⁴(h) = a(α⇀h↼α⁻¹)a⁻¹ = α⁻¹(h₁)ah₂a⁻¹α(h₃)", test.iter(), |h| {
        let hv = Vector::basis(h.clone());
        let s4 = alg.antipode_pow(&hv, 4);
        let inner = structure::sandwich(alg, &data.alpha, &hv, &data.alpha_inv);
        let first = alg.mul3(&data.a, &inner, &data.a_inv);
        let second = alg.comul2_basis(h).map_linear(|(p, q, s)| {
            let c = &data.alpha_inv.at(p) * &data.alpha.at(s);
            if c.is_zero() {
                return Vector::zero();
            }
            alg.mul3(&data.a, &Vector::basis(q.clone()), &data.a_inv).scale(&c)
        });
        (s4 != first || s4 != second).then(|| {
            format!("at {}: S⁴ = {}, first form = {}, second form = {}", alg.label(h), alg.format(&s4), alg.format(&first), alg.format(&second))
        })
    });
    r
}

/// For `w` implementing `S²` by conjugation: `χ(w⁻¹)w = α(a⁻¹)1`, and
/// `α(w⁻¹) = α(a⁻¹)` when `ε(w) = 1`.
pub fn remark21_check<H: Hopf>(
    alg: &H,
    data: &ModularData<H::Basis>,
    w: &Vector<H::Basis>,
    w_inv: &Vector<H::Basis>,
    test: &[H::Basis],
) -> Report {
    let mut r = Report::new("S² inner: χ(w⁻¹)w = α(a⁻¹)1");
    let one = alg.unit();
    let pre = alg.mul(w, w_inv) == one
        && alg.mul(w_inv, w) == one
        && test.iter().all(|h| {
            let hv = Vector::basis(h.clone());
            alg.mul(&alg.antipode_pow(&hv, 2), w) == alg.mul(w, &hv)
        });
    if !r.expect("precondition S² = Inn_w", pre, || format!("w = {} does not implement S²", alg.format(w))) {
        return r;
    }
    let alpha_a_inv = data.alpha.eval(&data.a_inv);
    let lhs = alg.mul(&data.chi_of(w_inv), w);
    let rhs = one.scale(&alpha_a_inv);
    r.expect("χ(w⁻¹)w = α(a⁻¹)1", lhs == rhs, || format!("{} ≠ {}", alg.format(&lhs), alg.format(&rhs)));
    if alg.counit(w).is_one() {
        let v = data.alpha.eval(w_inv);
        r.expect("α(w⁻¹) = α(a⁻¹)", v == alpha_a_inv, || format!("{v} ≠ {alpha_a_inv}"));
    } else {
        r.skip("α(w⁻¹) = α(a⁻¹)", format!("ε(w) = {} ≠ 1", alg.counit(w)));
    }
    r
}

/// `λ(lh) = ρ(h₁⊗l₁)λ(h₂l₂)τ(h₃⊗l₃)` on all pairs; returns the first failure.
pub fn eq_c_witness<H: Hopf>(
    alg: &H,
    lambda: &Form<H::Basis>,
    rho: &Form2<H::Basis>,
    tau: &Form2<H::Basis>,
    test: &[H::Basis],
) -> Option<String> {
    for (h, l) in pairs(test) {
        let lhs = lambda.eval(&alg.mul_basis(l, h));
        let dh = alg.comul2_basis(h);
        let dl = alg.comul2_basis(l);
        let mut rhs = Scalar::zero();
        for ((h1, h2, h3), ch) in dh.iter() {
            for ((l1, l2, l3), cl) in dl.iter() {
                let p = rho.at(h1, l1);
                if p.is_zero() {
                    continue;
                }
                let t = tau.at(h3, l3);
                if t.is_zero() {
                    continue;
                }
                let m = lambda.eval(&alg.mul_basis(h2, l2));
                rhs += &(&(&(ch * cl) * &p) * &(&m * &t));
            }
        }
        if lhs != rhs {
            return Some(format!("(h,l) = ({}, {}): {lhs} ≠ {rhs}", alg.label(h), alg.label(l)));
        }
    }
    None
}

/// From `S⁻²(h) = ω⁻¹(h₁)h₂ω(h₃)` builds `ρ = ω⁻¹⊗ε`, `τ = (ω⊗ε)*(α⊗ε)`.
pub fn tangent_forward<H: Hopf>(
    alg: &H,
    data: &ModularData<H::Basis>,
    omega: &Form<H::Basis>,
    omega_inv: &Form<H::Basis>,
    test: &[H::Basis],
) -> Result<(Form2<H::Basis>, Form2<H::Basis>, Report)> {
    let mut r = Report::new("S⁻² co-inner ⇒ integral twist (forward)");
    let eps = counit_form(alg);
    let pre = test.iter().find(|h| {
        let hv = Vector::basis((*h).clone());
        alg.antipode_pow(&hv, -2) != coact(alg, omega_inv, &hv, omega)
    });
    if let Some(h) = pre {
        r.fail("precondition S⁻²(h) = ω⁻¹(h₁)h₂ω(h₃)", format!("at {}", alg.label(h)));
        return Err(Error::Precondition(format!("ω does not co-implement S⁻² at {}", alg.label(h))));
    }
    r.pass("precondition S⁻²(h) = ω⁻¹(h₁)h₂ω(h₃)");
    let inv_ok = test.iter().all(|h| convolve_at(alg, omega, omega_inv, h) == eps.at(h) && convolve_at(alg, omega_inv, omega, h) == eps.at(h));
    if !r.expect("ω*ω⁻¹ = ε = ω⁻¹*ω", inv_ok, || "ω⁻¹ is not a convolution inverse".into()) {
        return Err(Error::Precondition("ω⁻¹ is not a convolution inverse of ω".into()));
    }
    let rho = Form2::product(omega_inv, &eps);
    let omega_alpha = structure::convolve(alg, omega, &data.alpha);
    let tau = Form2::product(&omega_alpha, &eps);
    let w = eq_c_witness(alg, &data.lambda, &rho, &tau, test);
    r.expect("λ(lh) = ρ(h₁⊗l₁)λ(h₂l₂)τ(h₃⊗l₃)", w.is_none(), || w.unwrap_or_default());
    Ok((rho, tau, r))
}

/// Recovers `ρ'`, `τ''` with `S⁻²(h) = ρ'(h₁)h₂τ''(h₃)` from a pair satisfying
/// the integral twist identity; refuses the input otherwise.
pub fn tangent_extract<H: Hopf>(
    alg: &H,
    data: &ModularData<H::Basis>,
    rho: &Form2<H::Basis>,
    tau: &Form2<H::Basis>,
    test: &[H::Basis],
) -> Result<(Form<H::Basis>, Form<H::Basis>, Report)> {
    let mut r = Report::new("integral twist ⇒ S⁻² co-inner (converse)");
    if let Some(w) = eq_c_witness(alg, &data.lambda, rho, tau, test) {
        r.fail("λ(lh) = ρ(h₁⊗l₁)λ(h₂l₂)τ(h₃⊗l₃)", w.clone());
        return Err(Error::Precondition(format!("integral twist identity fails: {w}")));
    }
    r.pass("λ(lh) = ρ(h₁⊗l₁)λ(h₂l₂)τ(h₃⊗l₃)");

    let rho_prime = {
        let (alg, rho) = (alg.clone(), rho.clone());
        Form::new(move |h: &H::Basis| {
            alg.comul_basis(h).iter().map(|((h1, h2), c)| {
                let s = alg.antipode_basis(h2);
                let v: Scalar = s.iter().map(|(b, cb)| cb * &rho.at(h1, b)).sum();
                c * &v
            }).sum()
        })
    };
    let tau_prime = {
        let (alg, tau, a_inv) = (alg.clone(), tau.clone(), data.a_inv.clone());
        Form::new(move |h: &H::Basis| {
            alg.comul_basis(h).iter().map(|((h1, h2), c)| {
                let arg = alg.mul(&alg.antipode_inv_basis(h1), &a_inv);
                let v: Scalar = arg.iter().map(|(b, cb)| cb * &tau.at(h2, b)).sum();
                c * &v
            }).sum()
        })
    };
    let tau_pp = structure::convolve(alg, &tau_prime, &data.alpha_inv);
    let eps = counit_form(alg);

    r.check_all("χ(h) = ρ'(h₁)h₂τ'(h₃)", test.iter(), |h| {
        let hv = Vector::basis(h.clone());
        let lhs = (data.chi)(h);
        let rhs = coact(alg, &rho_prime, &hv, &tau_prime);
        (lhs != rhs).then(|| format!("at {}: {} ≠ {}", alg.label(h), alg.format(&lhs), alg.format(&rhs)))
    });
    r.check_all("ρ'*τ'' = ε = τ''*ρ'", test.iter(), |h| {
        let ok = convolve_at(alg, &rho_prime, &tau_pp, h) == eps.at(h) && convolve_at(alg, &tau_pp, &rho_prime, h) == eps.at(h);
        (!ok).then(|| format!("at {}", alg.label(h)))
    });
    let rho_s = structure::compose_antipode(alg, &rho_prime, -2);
    let tau_s = structure::compose_antipode(alg, &tau_pp, -2);
    r.expect("ρ' = ρ'∘S⁻²", rho_prime.differs_from(&rho_s, test).is_none(), || "ρ' not S⁻²-invariant".into());
    r.expect("τ'' = τ''∘S⁻²", tau_pp.differs_from(&tau_s, test).is_none(), || "τ'' not S⁻²-invariant".into());
    r.check_all("S⁻²(h) = ρ'(h₁)h₂τ''(h₃)", test.iter(), |h| {
        let hv = Vector::basis(h.clone());
        let lhs = alg.antipode_pow(&hv, -2);
        let rhs = coact(alg, &rho_prime, &hv, &tau_pp);
        (lhs != rhs).then(|| format!("at {}: {} ≠ {}", alg.label(h), alg.format(&lhs), alg.format(&rhs)))
    });
    Ok((rho_prime, tau_pp, r))
}

/// Adds `delta` to `τ` at one basis pair.
pub fn perturb<B: Ord + Clone + PartialEq + Send + Sync + 'static>(tau: &Form2<B>, at: (B, B), delta: Scalar) -> Form2<B> {
    let tau = tau.clone();
    Form2::new(move |x: &B, y: &B| {
        let v = tau.at(x, y);
        if *x == at.0 && *y == at.1 {
            &v + &delta
        } else {
            v
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::report::Status;
    use num_traits::One;

    fn int(v: &[i64]) -> Functional {
        Functional(v.iter().map(|&x| Scalar::from(x)).collect())
    }

    #[test]
    fn kc2_integral() {
        let c2 = presets::group_algebra(2);
        let ints = left_integrals(&c2);
        assert_eq!(ints, vec![int(&[1, 0])]);
        // oracle: f*λ = f(1)λ on a basis of H*
        let lam = ints[0].clone();
        for k in 0..2 {
            let mut f = vec![Scalar::zero(); 2];
            f[k] = Scalar::one();
            let f = Functional(f);
            let lhs = c2.convolve(&f, &lam);
            let rhs = Functional(lam.0.iter().map(|v| v * &f.0[0]).collect());
            assert_eq!(lhs, rhs);
        }
        assert_eq!(distinguished_grouplike(&c2, &lam).unwrap(), c2.unit());
        assert_eq!(frobenius_chi(&c2, &lam).unwrap(), Matrix::identity(2));
    }

    /// Rank by fraction-free integer elimination, independent of `linalg`.
    fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i][c] != 0 {
                    let (a, b) = (rows[rank][c], rows[i][c]);
                    for j in 0..cols {
                        rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn sweedler_integral_system_oracle() {
        let h = presets::sweedler4();
        // h₁λ(h₂) - λ(h)1 written out by hand. Unknowns λ(1), λ(g), λ(x), λ(gx).
        // Δ(1) = 1⊗1, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx.
        #[rustfmt::skip]
        let explicit: Vec<Vec<i128>> = vec![
            // h = 1: λ(1)1 - λ(1)1
            vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 0],
            // h = g: gλ(g) - λ(g)1
            vec![0, -1, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 0],
            // h = x: xλ(1) + gλ(x) - λ(x)1
            vec![0, 0, -1, 0], vec![0, 0, 1, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 0],
            // h = gx: gxλ(g) + 1λ(gx) - λ(gx)1
            vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 1, 0, 0],
        ];
        assert_eq!(integer_rank(explicit.clone()), 3);
        let sys = left_integral_system(&h);
        let as_int: Vec<Vec<i128>> = (0..16)
            .map(|i| sys.row(i).iter().map(|s| s.to_string().parse::<i128>().unwrap()).collect())
            .collect();
        assert_eq!(as_int, explicit);
        let ints = left_integrals(&h);
        assert_eq!(ints, vec![int(&[0, 0, 0, 1])]);
        assert!(check_left_integral(&h, &ints[0].to_form(), &h.basis()).passed());
    }

    #[test]
    fn sweedler_modular_data() {
        let h = presets::sweedler4();
        let (data, report) = analyze(&h).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(data.a, h.element("g").unwrap());
        assert_eq!(data.alpha, presets::sweedler_alpha(&h));
        let chi = matrix_map(&data.chi);
        assert_eq!(chi(&1), -&h.element("g").unwrap());
        // oracle: α(x₂)S⁻²(x₁) with Δ(x) = x⊗1 + g⊗x gives S⁻²(x) = -x
        assert_eq!(chi(&2), -&h.element("x").unwrap());
        assert_eq!(chi(&3), h.element("gx").unwrap());
    }

    #[test]
    fn wrong_a_breaks_second_identity() {
        let h = presets::sweedler4();
        let (data, _) = analyze(&h).unwrap();
        let mut m = data.modular();
        m.a = h.unit();
        m.a_inv = h.unit();
        let r = verify_integral_identities(&h, &m, &h.basis(), &h.basis());
        let c = r.checks.iter().find(|c| c.name.starts_with("λ(hl₁)")).unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(r.checks[0].status, Status::Pass);
        // direct evaluation at (h,l) = (gx, 1): λ(gx)·1 against λ(gx)S⁻¹(g)a⁻¹ + λ(g)S⁻¹(gx)a⁻¹
        let lam = &m.lambda;
        let lhs = h.unit().scale(&lam.at(&3));
        let s_inv_g = h.element("g").unwrap();
        let rhs = h.mul(&s_inv_g, &m.a_inv).scale(&lam.at(&3));
        assert_eq!(lam.at(&1), Scalar::zero());
        assert_ne!(lhs, rhs);
        let lhs_true = h.unit();
        assert_eq!(lhs_true, h.mul(&s_inv_g, &data.a_inv));
    }

    #[test]
    fn radford_negative_control() {
        let h = presets::sweedler4();
        let (data, _) = analyze(&h).unwrap();
        let mut m = data.modular();
        let g = h.element("g").unwrap();
        m.a = h.mul(&m.a, &g);
        m.a_inv = h.invert_element(&m.a).unwrap();
        assert!(!check_radford_s4(&h, &m, &h.basis()).passed());
    }

    #[test]
    fn kc4_all_pass() {
        let c4 = presets::group_algebra(4);
        let (data, report) = analyze(&c4).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(data.a, c4.unit());
        assert_eq!(data.alpha, c4.counit_functional());
    }

    #[test]
    fn remark21() {
        let c2 = presets::group_algebra(2);
        let (d, _) = analyze(&c2).unwrap();
        let one = c2.unit();
        assert!(remark21_check(&c2, &d.modular(), &one, &one, &c2.basis()).passed());

        let h = presets::sweedler4();
        let (d, _) = analyze(&h).unwrap();
        let g = h.element("g").unwrap();
        let r = remark21_check(&h, &d.modular(), &g, &g, &h.basis());
        assert!(r.passed(), "{r}");
        assert_eq!(r.status_of("α(w⁻¹) = α(a⁻¹)"), Some(Status::Pass));
        let w = g.scale(&Scalar::from(2));
        let w_inv = h.invert_element(&w).unwrap();
        let r = remark21_check(&h, &d.modular(), &w, &w_inv, &h.basis());
        assert!(r.passed(), "{r}");
        assert_eq!(r.status_of("α(w⁻¹) = α(a⁻¹)"), Some(Status::Skipped));
        let x = h.unit();
        let r = remark21_check(&h, &d.modular(), &x, &x, &h.basis());
        assert!(!r.passed());
    }

    #[test]
    fn tangent_on_kc2() {
        let c2 = presets::group_algebra(2);
        let (d, _) = analyze(&c2).unwrap();
        let m = d.modular();
        let eps = counit_form(&c2);
        let basis = c2.basis();
        let (rho, tau, r) = tangent_forward(&c2, &m, &eps, &eps, &basis).unwrap();
        assert!(r.passed());
        for x in &basis {
            for y in &basis {
                let e = &eps.at(x) * &eps.at(y);
                assert_eq!(rho.at(x, y), e);
                assert_eq!(tau.at(x, y), e);
            }
        }
        let (rp, tpp, r) = tangent_extract(&c2, &m, &rho, &tau, &basis).unwrap();
        assert!(r.passed(), "{r}");
        assert!(rp.differs_from(&eps, &basis).is_none());
        assert!(tpp.differs_from(&eps, &basis).is_none());
        let bad = perturb(&tau, (0, 0), Scalar::one());
        assert!(tangent_extract(&c2, &m, &rho, &bad, &basis).is_err());
    }

    #[test]
    fn tangent_rejects_bad_omega() {
        let h = presets::sweedler4();
        let (d, _) = analyze(&h).unwrap();
        let eps = counit_form(&h);
        assert!(tangent_forward(&h, &d.modular(), &eps, &eps, &h.basis()).is_err());
    }
}
