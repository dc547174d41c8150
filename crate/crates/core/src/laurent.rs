//! The infinite-dimensional Hopf algebra generated by a grouplike `g` of
//! infinite order and a `(1,g)`-primitive `x` with `gx = -xg`, `x² = 0`.
//!
//! Basis `gⁱxʲ` (`i ∈ ℤ`, `j ∈ {0,1}`). Structure maps are closed forms on all
//! of ℤ; a window `|i| ≤ N` only bounds the grid the checks run over.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::cofrobenius::{self, ModularData, INTEGRAL_CONVENTION, PRIMITIVE_CONVENTION};
use crate::coquasitriangular::{self, Braiding};
use crate::error::{Error, Result};
use crate::hopf::{check_antipode_axiom, check_bialgebra_axioms};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::structure::{self, Bialgebra, Form, Form2, Hopf, Tensor, Vector};

/// The monomial `gⁱxʲ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub i: i64,
    pub j: u8,
}

impl Mono {
    pub fn new(i: i64, j: u8) -> Self {
        assert!(j < 2, "x² = 0");
        Mono { i, j }
    }

    pub fn g(i: i64) -> Self {
        Mono { i, j: 0 }
    }

    pub fn gx(i: i64) -> Self {
        Mono { i, j: 1 }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.i {
            0 => String::new(),
            1 => "g".into(),
            i => format!("g^{i}"),
        };
        match (g.is_empty(), self.j) {
            (true, 0) => write!(f, "1"),
            (true, _) => write!(f, "x"),
            (false, 0) => write!(f, "{g}"),
            (false, _) => write!(f, "{g}x"),
        }
    }
}

pub type LaurentElement = Vector<Mono>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentHopf {
    field: Field,
}

impl LaurentHopf {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn over_field(field: Field) -> Self {
        LaurentHopf { field }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn c(&self, s: Scalar) -> Scalar {
        self.field.embed(&s)
    }

    fn signed(&self, k: i64, m: Mono) -> LaurentElement {
        Vector::term(self.c(Scalar::sign(k)), m)
    }

    /// `{gⁱxʲ : |i| ≤ n, j ∈ {0,1}}`.
    pub fn window(n: i64) -> Vec<Mono> {
        (-n..=n).flat_map(|i| [Mono::g(i), Mono::gx(i)]).collect()
    }

    /// `λ(gⁱxʲ) = δ_{i,-1}δ_{j,1}`.
    pub fn lambda(&self) -> Form<Mono> {
        let one = self.c(Scalar::from(1));
        Form::new(move |m: &Mono| if m.i == -1 && m.j == 1 { one.clone() } else { Scalar::zero() })
    }

    /// `α(gⁱxʲ) = δ_{j,0}(-1)ⁱ`.
    pub fn alpha_closed(&self) -> Form<Mono> {
        let f = self.field;
        Form::new(move |m: &Mono| if m.j == 0 { f.embed(&Scalar::sign(m.i)) } else { Scalar::zero() })
    }

    /// `σ(gⁱxʲ, gᵗxˢ) = δ_{s,0}δ_{j,0}(-1)^{it}`.
    pub fn sigma(&self) -> Form2<Mono> {
        let f = self.field;
        Form2::new(move |a: &Mono, b: &Mono| {
            if a.j == 0 && b.j == 0 {
                f.embed(&Scalar::sign(a.i * b.i))
            } else {
                Scalar::zero()
            }
        })
    }

    /// `u(gⁱxʲ) = δ_{j,0}(-1)ⁱ`.
    pub fn u_closed(&self) -> Form<Mono> {
        self.alpha_closed()
    }

    /// The braiding with `σ⁻¹ = σ∘(S⊗id)`.
    pub fn braiding(&self) -> Braiding<Mono> {
        self.braiding_from(self.sigma())
    }

    /// `σ(gⁱ, gᵗ) = (-1)^{(i+1)t}`: a sign-shifted form that is not a braiding.
    pub fn flipped_braiding(&self) -> Braiding<Mono> {
        let f = self.field;
        self.braiding_from(Form2::new(move |a: &Mono, b: &Mono| {
            if a.j == 0 && b.j == 0 {
                f.embed(&Scalar::sign((a.i + 1) * b.i))
            } else {
                Scalar::zero()
            }
        }))
    }

    fn braiding_from(&self, sigma: Form2<Mono>) -> Braiding<Mono> {
        let (alg, s) = (self.clone(), sigma.clone());
        let inv = Form2::new(move |a: &Mono, b: &Mono| s.eval(&alg.antipode_basis(a), &Vector::basis(*b)));
        Braiding::new(sigma, inv)
    }
}

impl Bialgebra for LaurentHopf {
    type Basis = Mono;

    fn unit(&self) -> LaurentElement {
        Vector::term(self.c(Scalar::from(1)), Mono::g(0))
    }

    /// `gⁱxʲ · gᵗxˢ = (-1)^{jt} g^{i+t}x^{j+s}`.
    fn mul_basis(&self, a: &Mono, b: &Mono) -> LaurentElement {
        if a.j + b.j > 1 {
            return Vector::zero();
        }
        self.signed(a.j as i64 * b.i, Mono::new(a.i + b.i, a.j + b.j))
    }

    /// `Δ(gⁱx) = gⁱx⊗gⁱ + g^{i+1}⊗gⁱx`.
    fn comul_basis(&self, m: &Mono) -> Tensor<Mono> {
        let one = self.c(Scalar::from(1));
        if m.j == 0 {
            return Vector::term(one, (*m, *m));
        }
        Vector::from_terms([((*m, Mono::g(m.i)), one.clone()), ((Mono::g(m.i + 1), *m), one)])
    }

    fn counit_basis(&self, m: &Mono) -> Scalar {
        self.c(Scalar::from(if m.j == 0 { 1 } else { 0 }))
    }

    fn label(&self, b: &Mono) -> String {
        b.to_string()
    }
}

impl Hopf for LaurentHopf {
    /// `S(gⁱ) = g⁻ⁱ`, `S(gⁱx) = -(-1)ⁱ g^{-1-i}x`.
    fn antipode_basis(&self, m: &Mono) -> LaurentElement {
        if m.j == 0 {
            return Vector::term(self.c(Scalar::from(1)), Mono::g(-m.i));
        }
        self.signed(m.i + 1, Mono::gx(-1 - m.i))
    }

    /// `S⁻¹(gⁱx) = (-1)ⁱ g^{-1-i}x`.
    fn antipode_inv_basis(&self, m: &Mono) -> LaurentElement {
        if m.j == 0 {
            return Vector::term(self.c(Scalar::from(1)), Mono::g(-m.i));
        }
        self.signed(m.i, Mono::gx(-1 - m.i))
    }
}

/// The monomial `m` with `λ(y·m) ≠ 0`.
fn partner(y: &Mono) -> Mono {
    Mono::new(-1 - y.i, 1 - y.j)
}

/// `a`, `χ` and `α` obtained from the closed-form `λ`: `a⁻¹` from
/// `λ(h₁)h₂ = λ(h)a⁻¹` at `h = g⁻¹x`, `χ` from `λ(mh) = λ(χ(h)m)` by pairing
/// against the dual monomials.
pub fn laurent_modular(alg: &LaurentHopf) -> Result<ModularData<Mono>> {
    let lambda = alg.lambda();
    let witness = Mono::gx(-1);
    let lw = lambda.at(&witness).inv().ok_or_else(|| Error::Inconsistent("λ(g⁻¹x) = 0".into()))?;
    let a_inv = structure::hit_right(alg, &Vector::basis(witness), &lambda).scale(&lw);
    if !structure::is_grouplike(alg, &a_inv) {
        return Err(Error::Inconsistent(format!("a⁻¹ = {} is not grouplike", alg.format(&a_inv))));
    }
    let a = alg.antipode(&a_inv);
    let chi: cofrobenius::BasisMap<Mono> = {
        let (alg, lambda) = (alg.clone(), lambda.clone());
        Arc::new(move |h: &Mono| {
            let mut out = Vector::zero();
            for t in h.i - 2..=h.i + 2 {
                for s in 0..2 {
                    let y = Mono::new(t, s);
                    let m = partner(&y);
                    let num = lambda.eval(&alg.mul_basis(&m, h));
                    if num.is_zero() {
                        continue;
                    }
                    let den = lambda.eval(&alg.mul_basis(&y, &m)).inv().expect("dual monomials pair nontrivially");
                    out.add_term(y, &num * &den);
                }
            }
            out
        })
    };
    let alpha = {
        let (alg, chi) = (alg.clone(), chi.clone());
        Form::new(move |h: &Mono| alg.counit(&chi(h)))
    };
    let alpha_inv = structure::compose_antipode(alg, &alpha, 1);
    Ok(ModularData { lambda, a, a_inv, chi, alpha, alpha_inv })
}

/// Every identity on the window `|i| ≤ n`.
pub fn laurent_window_suite(n: i64) -> Result<Report> {
    laurent_window_suite_with(&LaurentHopf::new(), n)
}

pub fn laurent_window_suite_with(alg: &LaurentHopf, n: i64) -> Result<Report> {
    if n < 2 {
        return Err(Error::Precondition(format!("window must be at least 2, got {n}")));
    }
    let window = LaurentHopf::window(n);
    let probe = LaurentHopf::window(n + 2);
    let mut rep = Report::new(format!("Laurent family, window |i| ≤ {n}"));
    rep.convention(PRIMITIVE_CONVENTION);
    rep.convention(INTEGRAL_CONVENTION);
    rep.compute("window size", window.len().to_string());

    let mut ax = check_bialgebra_axioms(alg, &window);
    ax.merge(check_antipode_axiom(alg, |b| alg.antipode_basis(b), &window));
    rep.merge(ax);
    rep.check_all("S∘S⁻¹ = S⁻¹∘S = id", window.iter(), |h| {
        let hv = Vector::basis(*h);
        (alg.antipode(&alg.antipode_inv(&hv)) != hv || alg.antipode_inv(&alg.antipode(&hv)) != hv).then(|| format!("at {h}"))
    });

    let data = laurent_modular(alg)?;
    rep.compute("a", alg.format(&data.a));
    rep.compute("alpha", data.alpha.tabulate(&window).iter().zip(&window).map(|(v, m)| format!("{m}:{v}")).collect::<Vec<_>>().join(" "));
    rep.merge(cofrobenius::check_left_integral(alg, &data.lambda, &window));
    rep.merge(cofrobenius::check_distinguished(alg, &data.lambda, &data.a, &data.a_inv, &window));
    rep.merge(cofrobenius::verify_integral_identities(alg, &data, &window, &probe));
    rep.merge(cofrobenius::check_chi_alpha(alg, &data, &window));
    let alpha_closed = alg.alpha_closed();
    rep.expect("α = δ_{j,0}(-1)ⁱ", data.alpha.differs_from(&alpha_closed, &window).is_none(), || "computed α differs".into());
    rep.check_all("χ(gⁱxʲ) = (-1)^{i+j}gⁱxʲ", window.iter(), |h| {
        let expected = alg.signed(h.i + h.j as i64, *h);
        ((data.chi)(h) != expected).then(|| format!("at {h}: {}", alg.format(&(data.chi)(h))))
    });
    rep.merge(cofrobenius::check_radford_s4(alg, &data, &window));
    rep.check_all("S⁴ = id", window.iter(), |h| {
        let hv = Vector::basis(*h);
        (alg.antipode_pow(&hv, 4) != hv).then(|| format!("at {h}"))
    });
    let g = Vector::basis(Mono::g(1));
    rep.merge(cofrobenius::remark21_check(alg, &data, &g, &Vector::basis(Mono::g(-1)), &window));

    let br = alg.braiding();
    let (d, cqt) = coquasitriangular::cqt_suite(alg, &data, &br, &[("g".into(), g)], &window)?;
    rep.merge(cqt);
    let u_closed = alg.u_closed();
    rep.expect("u = δ_{j,0}(-1)ⁱ", d.u.differs_from(&u_closed, &window).is_none(), || "computed u differs".into());
    rep.expect("u = v = u⁻¹ = v⁻¹", [&d.v, &d.u_inv, &d.v_inv].iter().all(|f| f.differs_from(&d.u, &window).is_none()), || {
        "the four functionals differ".into()
    });
    let (alpha_a, beta_a) = coquasitriangular::alpha_beta_g(alg, &br, &data.a)?;
    rep.expect("β_a = δ_{j,0}(-1)ⁱ", beta_a.differs_from(&alpha_closed, &window).is_none(), || "β_a differs".into());
    rep.expect("α_a = β_a", alpha_a.differs_from(&beta_a, &window).is_none(), || "α_a ≠ β_a".into());

    let (rho, tau, fwd) = cofrobenius::tangent_forward(alg, &data, &d.u_inv, &d.u, &window)?;
    rep.merge(fwd);
    let (_, _, back) = cofrobenius::tangent_extract(alg, &data, &rho, &tau, &window)?;
    rep.merge(back);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn el(terms: &[(i64, i64, u8)]) -> LaurentElement {
        Vector::from_terms(terms.iter().map(|&(c, i, j)| (Mono::new(i, j), Scalar::from(c))))
    }

    #[test]
    fn relations() {
        let h = LaurentHopf::new();
        let g = el(&[(1, 1, 0)]);
        let g_inv = el(&[(1, -1, 0)]);
        let x = el(&[(1, 0, 1)]);
        assert_eq!(h.mul(&g, &g_inv), h.unit());
        assert_eq!(h.mul(&x, &g), el(&[(-1, 1, 1)]));
        assert_eq!(h.mul(&g, &x), el(&[(1, 1, 1)]));
        assert!(h.mul(&x, &x).is_zero());
        assert_eq!(h.antipode(&x), el(&[(-1, -1, 1)]));
        assert_eq!(Mono::new(-3, 1).to_string(), "g^-3x");
        assert_eq!(Mono::g(0).to_string(), "1");
    }

    #[test]
    fn antipode_at_g5x() {
        let h = LaurentHopf::new();
        let m = Mono::gx(5);
        // Δ(g⁵x) = g⁵x⊗g⁵ + g⁶⊗g⁵x, so S(g⁵x)g⁵ + g⁻⁶g⁵x must vanish
        let s = h.antipode_basis(&m);
        let lhs = &h.mul(&s, &el(&[(1, 5, 0)])) + &h.mul(&el(&[(1, -6, 0)]), &el(&[(1, 5, 1)]));
        assert!(lhs.is_zero());
        assert!(check_antipode_axiom(&h, |b| h.antipode_basis(b), &[m]).passed());
    }

    #[test]
    fn closed_forms() {
        let h = LaurentHopf::new();
        assert_eq!(h.lambda().at(&Mono::gx(-1)), Scalar::from(1));
        assert_eq!(h.alpha_closed().at(&Mono::g(3)), Scalar::from(-1));
        assert_eq!(h.sigma().at(&Mono::g(2), &Mono::g(3)), Scalar::from(1));
    }

    #[test]
    fn computed_a_is_g() {
        let h = LaurentHopf::new();
        let d = laurent_modular(&h).unwrap();
        assert_eq!(d.a, el(&[(1, 1, 0)]));
        assert_eq!(d.a_inv, el(&[(1, -1, 0)]));
    }

    #[test]
    fn window_suites() {
        let r = laurent_window_suite(2).unwrap();
        assert!(r.passed(), "{r}");
        let r = laurent_window_suite(5).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.computed_value("window size"), Some("22"));
        assert!(laurent_window_suite(1).is_err());
    }

    #[test]
    fn flipped_sigma_fails() {
        let h = LaurentHopf::new();
        let w = LaurentHopf::window(5);
        let r = coquasitriangular::verify_cqt(&h, &h.flipped_braiding(), &w);
        let c = &r.checks[0];
        assert_eq!(c.status, Status::Fail);
        assert!(c.witness.as_ref().unwrap().starts_with("(h,l,m) = "));
    }
}
