//! R-matrices on finite-dimensional Hopf algebras: axioms, Drinfeld
//! elements, the grouplike maps `η ↦ a_η, b_η`, the `uv` identities and the
//! minimal quasitriangular subHopf algebra.

use std::collections::BTreeSet;

use crate::cofrobenius::{self, matrix_map, CoFrobeniusData};
use crate::error::{Error, Result};
use crate::hopf::{pairs, Element, FinHopfAlgebra, Functional, StructureConstants, Tensor2};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::structure::{self, flip, Bialgebra, Hopf, Tensor, Tensor3, Vector};

pub const R_CONVENTION: &str = "R = Σ R[i][j] e_i⊗e_j; u = S(R²)R¹, v = S(u)⁻¹";

/// An invertible `R ∈ H ⊗ H` with its inverse cached.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    pub r: Tensor2,
    pub r_inv: Tensor2,
}

impl RMatrix {
    pub fn new(alg: &FinHopfAlgebra, r: Tensor2) -> Result<Self> {
        if r.dim() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: r.dim() });
        }
        let r_inv = alg.t2_invert(&r)?;
        Ok(RMatrix { r, r_inv })
    }

    pub fn trivial(alg: &FinHopfAlgebra) -> Self {
        let one = alg.t2_one();
        RMatrix { r: one.clone(), r_inv: one }
    }

    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        nonzero(&self.r)
    }
}

fn nonzero(t: &Tensor2) -> Vec<(usize, usize, Scalar)> {
    t.0.entries().filter(|(_, _, c)| !c.is_zero()).map(|(i, j, c)| (i, j, c.clone())).collect()
}

/// Drinfeld elements and their inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct QTData {
    pub u: Element,
    pub u_inv: Element,
    pub v: Element,
    pub v_inv: Element,
}

fn format_triple(alg: &FinHopfAlgebra, (a, b, c): &(usize, usize, usize)) -> String {
    format!("{}⊗{}⊗{}", alg.label(a), alg.label(b), alg.label(c))
}

/// First coefficient where two elements of `H⊗H⊗H` differ.
fn triple_witness(alg: &FinHopfAlgebra, lhs: &Tensor3<usize>, rhs: &Tensor3<usize>) -> Option<String> {
    let keys: BTreeSet<&(usize, usize, usize)> = lhs.iter().chain(rhs.iter()).map(|(k, _)| k).collect();
    keys.into_iter().find(|k| lhs.coeff(k) != rhs.coeff(k)).map(|k| {
        format!("coefficient of {}: {} ≠ {}", format_triple(alg, k), lhs.coeff(k), rhs.coeff(k))
    })
}

fn t2_witness(alg: &FinHopfAlgebra, lhs: &Tensor2, rhs: &Tensor2) -> Option<String> {
    lhs.0.entries().find(|(i, j, c)| **c != rhs.0[(*i, *j)]).map(|(i, j, c)| {
        format!("coefficient of {}⊗{}: {} ≠ {}", alg.label(&i), alg.label(&j), c, rhs.0[(i, j)])
    })
}

/// `Δ^cop(h)·R = R·Δ(h)` on every basis element.
pub fn verify_almost_cocommutative(alg: &FinHopfAlgebra, r: &RMatrix) -> Report {
    let mut rep = Report::new("almost cocommutative");
    let rt = r.r.to_tensor();
    rep.check_all("Δ^cop(h)R = RΔ(h)", alg.basis(), |h| {
        let d = alg.comul_basis(&h);
        let lhs = alg.tensor_mul(&flip(&d), &rt);
        let rhs = alg.tensor_mul(&rt, &d);
        (lhs != rhs).then(|| format!("at h = {}: {} ≠ {}", alg.label(&h), alg.format_tensor(&lhs), alg.format_tensor(&rhs)))
    });
    rep
}

/// Hexagons, counit conditions and almost cocommutativity; when those hold,
/// also `R⁻¹ = (S⊗id)R = (id⊗S⁻¹)R` and `(S⊗S)R = R`.
pub fn verify_qt(alg: &FinHopfAlgebra, r: &RMatrix) -> Report {
    let mut rep = Report::new("quasitriangular");
    rep.convention(R_CONVENTION);
    let terms = r.terms();
    let mut lhs1 = Tensor3::zero();
    let mut lhs2 = Tensor3::zero();
    let mut rhs1 = Tensor3::zero();
    let mut rhs2 = Tensor3::zero();
    for (i, j, c) in &terms {
        for ((p, q), d) in alg.comul_basis(i).iter() {
            lhs1.add_term((*p, *q, *j), c * d);
        }
        for ((p, q), d) in alg.comul_basis(j).iter() {
            lhs2.add_term((*i, *p, *q), c * d);
        }
        for (k, l, c2) in &terms {
            let cc = c * c2;
            for (m, d) in alg.mul_basis(j, l).iter() {
                rhs1.add_term((*i, *k, *m), &cc * d);
            }
            for (m, d) in alg.mul_basis(i, k).iter() {
                rhs2.add_term((*m, *l, *j), &cc * d);
            }
        }
    }
    let w = triple_witness(alg, &lhs1, &rhs1);
    rep.expect("(Δ⊗id)R = R₁₃R₂₃", w.is_none(), || w.unwrap_or_default());
    let w = triple_witness(alg, &lhs2, &rhs2);
    rep.expect("(id⊗Δ)R = R₁₃R₁₂", w.is_none(), || w.unwrap_or_default());
    let one = alg.unit();
    let left: Element = Vector::from_terms(terms.iter().map(|(i, j, c)| (*j, c * &alg.counit_basis(i))));
    let right: Element = Vector::from_terms(terms.iter().map(|(i, j, c)| (*i, c * &alg.counit_basis(j))));
    rep.expect("ε(R¹)R² = 1", left == one, || alg.format(&left));
    rep.expect("ε(R²)R¹ = 1", right == one, || alg.format(&right));
    rep.merge(verify_almost_cocommutative(alg, r));
    if rep.passed() {
        let id = Matrix::identity(alg.dim());
        let s_id = alg.t2_map(&r.r, alg.antipode_matrix(), &id);
        let w = t2_witness(alg, &s_id, &r.r_inv);
        rep.expect("R⁻¹ = (S⊗id)R", w.is_none(), || w.unwrap_or_default());
        let id_s = alg.t2_map(&r.r, &id, alg.antipode_inv_matrix());
        let w = t2_witness(alg, &id_s, &r.r_inv);
        rep.expect("R⁻¹ = (id⊗S⁻¹)R", w.is_none(), || w.unwrap_or_default());
        let ss = alg.t2_apply_ss(&r.r);
        let w = t2_witness(alg, &ss, &r.r);
        rep.expect("(S⊗S)R = R", w.is_none(), || w.unwrap_or_default());
    }
    rep
}

/// `u = S(R²)R¹` and `v = S(u)⁻¹`.
pub fn drinfeld_elements(alg: &FinHopfAlgebra, r: &RMatrix) -> Result<QTData> {
    let mut u = Element::zero();
    for (i, j, c) in r.terms() {
        u.add_scaled(&c, &alg.mul(&alg.antipode_basis(&j), &Element::basis(i)));
    }
    let u_inv = alg.invert_element(&u)?;
    let v_inv = alg.antipode(&u);
    let v = alg.invert_element(&v_inv)?;
    Ok(QTData { u, u_inv, v, v_inv })
}

/// `S²(h)u = uh` and `S²(h)v = vh`.
pub fn check_drinfeld(alg: &FinHopfAlgebra, qt: &QTData) -> Report {
    let mut rep = Report::new("Drinfeld elements");
    rep.compute("u", alg.format(&qt.u));
    rep.compute("v", alg.format(&qt.v));
    for (name, w) in [("u", &qt.u), ("v", &qt.v)] {
        rep.check_all(format!("S²(h) = {name}h{name}⁻¹"), alg.basis(), |h| {
            let hv = Element::basis(h);
            let lhs = alg.mul(&alg.antipode_pow(&hv, 2), w);
            let rhs = alg.mul(w, &hv);
            (lhs != rhs).then(|| format!("at {}", alg.label(&h)))
        });
    }
    rep
}

/// `Δ(u) = (u⊗u)(R₂₁R)⁻¹ = (R₂₁R)⁻¹(u⊗u)` and `uv` grouplike.
pub fn verify_delta_u(alg: &FinHopfAlgebra, r: &RMatrix, qt: &QTData) -> Result<Report> {
    let mut rep = Report::new("Δ(u)");
    let q = alg.t2_multiply(&r.r.t2_flip(), &r.r);
    let q_inv = alg.t2_invert(&q)?;
    let n = alg.dim();
    let du = Tensor2::from_tensor(n, &alg.comul(&qt.u));
    let uu = Tensor2::from_tensor(n, &structure::tensor_square(&qt.u));
    let right = alg.t2_multiply(&uu, &q_inv);
    let left = alg.t2_multiply(&q_inv, &uu);
    let w = t2_witness(alg, &du, &right);
    rep.expect("Δ(u) = (u⊗u)(R₂₁R)⁻¹", w.is_none(), || w.unwrap_or_default());
    let w = t2_witness(alg, &du, &left);
    rep.expect("Δ(u) = (R₂₁R)⁻¹(u⊗u)", w.is_none(), || w.unwrap_or_default());
    let uv = alg.mul(&qt.u, &qt.v);
    rep.expect("uv grouplike", alg.is_grouplike(&uv), || format!("uv = {}", alg.format(&uv)));
    Ok(rep)
}

/// `a_η = η(R¹)R²` and `b_η = η(S⁻¹(R²))R¹` for a character `η`.
pub fn grouplike_maps(alg: &FinHopfAlgebra, r: &RMatrix, eta: &Functional) -> Result<(Element, Element)> {
    if let Some(w) = structure::character_witness(alg, &eta.to_form(), &alg.basis()) {
        return Err(Error::Precondition(format!("not a character: {w}")));
    }
    let mut a = Element::zero();
    let mut b = Element::zero();
    for (i, j, c) in r.terms() {
        a.add_term(j, &c * &eta.0[i]);
        b.add_term(i, &c * &eta.eval(&alg.antipode_inv_basis(&j)));
    }
    Ok((a, b))
}

/// The convolution inverse `η∘S` of a character.
pub fn character_inverse(alg: &FinHopfAlgebra, eta: &Functional) -> Functional {
    Functional(alg.basis().iter().map(|k| eta.eval(&alg.antipode_basis(k))).collect())
}

/// Grouplike values, multiplicativity on pairs, centrality of `a_η b_{η⁻¹}`.
pub fn check_grouplike_maps(alg: &FinHopfAlgebra, r: &RMatrix, chars: &[(String, Functional)]) -> Result<Report> {
    let mut rep = Report::new("grouplike maps a_η, b_η");
    let mut maps = Vec::new();
    for (name, eta) in chars {
        let (a, b) = grouplike_maps(alg, r, eta)?;
        rep.compute(format!("a_{name}"), alg.format(&a));
        rep.compute(format!("b_{name}"), alg.format(&b));
        rep.expect(format!("a_{name}, b_{name} grouplike"), alg.is_grouplike(&a) && alg.is_grouplike(&b), || {
            format!("a = {}, b = {}", alg.format(&a), alg.format(&b))
        });
        let (_, b_inv) = grouplike_maps(alg, r, &character_inverse(alg, eta))?;
        let z = alg.mul(&a, &b_inv);
        rep.check_all(format!("a_{name}b_{{{name}⁻¹}} central"), alg.basis(), |h| {
            let hv = Element::basis(h);
            (alg.mul(&z, &hv) != alg.mul(&hv, &z)).then(|| format!("does not commute with {}", alg.label(&h)))
        });
        maps.push((name, eta, a, b));
    }
    rep.check_all("a_{η*θ} = a_η a_θ, b_{η*θ} = b_η b_θ", pairs(&maps), |(x, y)| {
        let (a, b) = grouplike_maps(alg, r, &alg.convolve(x.1, y.1)).ok()?;
        (a != alg.mul(&x.2, &y.2) || b != alg.mul(&x.3, &y.3)).then(|| format!("(η, θ) = ({}, {})", x.0, y.0))
    });
    Ok(rep)
}

/// `a_α = b_α`.
pub fn check_lemma_factunim(alg: &FinHopfAlgebra, cofrob: &CoFrobeniusData, r: &RMatrix) -> Result<Report> {
    let mut rep = Report::new("a_α = b_α");
    let (a, b) = grouplike_maps(alg, r, &cofrob.alpha)?;
    rep.compute("a_alpha", alg.format(&a));
    rep.compute("b_alpha", alg.format(&b));
    rep.expect("a_α = b_α", a == b, || format!("a_α = {}, b_α = {}", alg.format(&a), alg.format(&b)));
    let (_, b_inv) = grouplike_maps(alg, r, &character_inverse(alg, &cofrob.alpha))?;
    let prod = alg.mul(&a, &b_inv);
    rep.expect("a_α b_{α⁻¹} = 1", prod == alg.unit(), || alg.format(&prod));
    Ok(rep)
}

/// `uv = vu = a b_α = a a_α` and `S⁴ = Inn_{uv}`.
pub fn check_theorem22(alg: &FinHopfAlgebra, cofrob: &CoFrobeniusData, r: &RMatrix, qt: &QTData) -> Result<Report> {
    let mut rep = Report::new("uv = vu = a·b_α = a·a_α");
    let (a_alpha, b_alpha) = grouplike_maps(alg, r, &cofrob.alpha)?;
    let chain = [
        ("uv", alg.mul(&qt.u, &qt.v)),
        ("vu", alg.mul(&qt.v, &qt.u)),
        ("a·b_α", alg.mul(&cofrob.a, &b_alpha)),
        ("a·a_α", alg.mul(&cofrob.a, &a_alpha)),
    ];
    for (name, x) in &chain {
        rep.compute(*name, alg.format(x));
    }
    for w in chain.windows(2) {
        rep.expect(format!("{} = {}", w[0].0, w[1].0), w[0].1 == w[1].1, || {
            format!("{} ≠ {}", alg.format(&w[0].1), alg.format(&w[1].1))
        });
    }
    let uv = &chain[0].1;
    rep.check_all("S⁴(h) = (uv)h(uv)⁻¹", alg.basis(), |h| {
        let hv = Element::basis(h);
        let lhs = alg.mul(&alg.antipode_pow(&hv, 4), uv);
        let rhs = alg.mul(uv, &hv);
        (lhs != rhs).then(|| format!("at {}", alg.label(&h)))
    });
    Ok(rep)
}

/// `α = ε ⇒ vu = a`, and `S(u) = u ⇔ a_α = a⁻¹`.
pub fn check_corollary25(alg: &FinHopfAlgebra, cofrob: &CoFrobeniusData, r: &RMatrix, qt: &QTData) -> Result<Report> {
    let (a_alpha, _) = grouplike_maps(alg, r, &cofrob.alpha)?;
    Ok(corollary25_with(alg, cofrob, qt, &a_alpha))
}

/// As [`check_corollary25`] with `a_α` supplied by the caller.
pub fn corollary25_with(alg: &FinHopfAlgebra, cofrob: &CoFrobeniusData, qt: &QTData, a_alpha: &Element) -> Report {
    let mut rep = Report::new("S(u) = u ⇔ a_α = a⁻¹");
    if cofrob.alpha == alg.counit_functional() {
        let vu = alg.mul(&qt.v, &qt.u);
        rep.expect("α = ε ⇒ vu = a", vu == cofrob.a, || format!("vu = {}, a = {}", alg.format(&vu), alg.format(&cofrob.a)));
    } else {
        rep.skip("α = ε ⇒ vu = a", "α ≠ ε");
    }
    let lhs = alg.antipode(&qt.u) == qt.u;
    let rhs = *a_alpha == cofrob.a_inv;
    rep.compute("S(u) = u", lhs.to_string());
    rep.compute("a_α = a⁻¹", rhs.to_string());
    rep.expect("S(u) = u ⇔ a_α = a⁻¹", lhs == rhs, || format!("S(u) = u is {lhs}, a_α = a⁻¹ is {rhs}"));
    rep
}

/// The four contractions `γ⁻¹(U¹)U², γ(R¹)R², γ(U²)U¹, γ⁻¹(R²)R¹`, each
/// checked to implement `h ↦ γ⁻¹(h₁)h₂γ(h₃)` by conjugation.
pub fn w_gamma_set(alg: &FinHopfAlgebra, r: &RMatrix, gamma: &Functional) -> Result<(Vec<Element>, Report)> {
    if let Some(w) = structure::character_witness(alg, &gamma.to_form(), &alg.basis()) {
        return Err(Error::Precondition(format!("not a character: {w}")));
    }
    let mut rep = Report::new("W_γ");
    let g_inv = character_inverse(alg, gamma);
    let contract = |t: &Tensor2, f: &Functional, keep_right: bool| -> Element {
        Vector::from_terms(nonzero(t).into_iter().map(|(i, j, c)| if keep_right { (j, &c * &f.0[i]) } else { (i, &c * &f.0[j]) }))
    };
    let ws = vec![
        contract(&r.r_inv, &g_inv, true),
        contract(&r.r, gamma, true),
        contract(&r.r_inv, gamma, false),
        contract(&r.r, &g_inv, false),
    ];
    let (gf, gif) = (gamma.to_form(), g_inv.to_form());
    for (k, w) in ws.iter().enumerate() {
        rep.check_all(format!("w{} implements γ⁻¹(h₁)h₂γ(h₃)", k + 1), alg.basis(), |h| {
            let hv = Element::basis(h);
            let co = structure::coact(alg, &gif, &hv, &gf);
            (alg.mul(&co, w) != alg.mul(w, &hv)).then(|| format!("w = {} fails at {}", alg.format(w), alg.label(&h)))
        });
    }
    if verify_qt(alg, r).passed() {
        let (a, b) = grouplike_maps(alg, r, gamma)?;
        let ok = ws.iter().all(|w| *w == a || *w == b) && ws.contains(&a) && ws.contains(&b);
        rep.expect("W_γ = {a_γ, b_γ}", ok, || {
            format!("W_γ = {{{}}}", ws.iter().map(|w| alg.format(w)).collect::<Vec<_>>().join(", "))
        });
    }
    let mut distinct: Vec<Element> = Vec::new();
    for w in ws {
        if !distinct.contains(&w) {
            distinct.push(w);
        }
    }
    Ok((distinct, rep))
}

fn dense(alg: &FinHopfAlgebra, x: &Element) -> Vec<Scalar> {
    (0..alg.dim()).map(|i| x.coeff(&i)).collect()
}

/// `R̃ = R₂₁⁻¹`, compared with `R²⊗S(R¹)` and run through the axioms.
pub fn r_tilde(alg: &FinHopfAlgebra, r: &RMatrix) -> Result<(RMatrix, Report)> {
    let rt = alg.t2_invert(&r.r.t2_flip())?;
    let rt = RMatrix::new(alg, rt)?;
    let mut rep = Report::new("R̃ = R₂₁⁻¹");
    let formula = alg.t2_map(&r.r, alg.antipode_matrix(), &Matrix::identity(alg.dim())).t2_flip();
    let w = t2_witness(alg, &rt.r, &formula);
    rep.expect("R₂₁⁻¹ = R²⊗S(R¹)", w.is_none(), || w.unwrap_or_default());
    let mut qt = verify_qt(alg, &rt);
    qt.title = "R̃ quasitriangular".into();
    for c in &mut qt.checks {
        c.name = format!("R̃: {}", c.name);
    }
    rep.merge(qt);
    rep.compute("R̃ = R", (rt.r == r.r).to_string());
    Ok((rt, rep))
}

/// The minimal quasitriangular subHopf algebra and its comparison data.
#[derive(Clone, Debug)]
pub struct MinimalSubHopf {
    pub algebra: FinHopfAlgebra,
    /// Image of each basis element of `L` in `H`.
    pub inclusion: Vec<Element>,
    pub r: RMatrix,
    pub report: Report,
}

/// Row-reduced basis of the span of `vectors`.
fn span(vectors: Vec<Vec<Scalar>>, n: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    if vectors.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let m = Matrix::from_rows(vectors).expect("uniform length");
    let (red, pivots) = m.rref();
    let rows = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
    debug_assert!(pivots.iter().all(|p| *p < n));
    (rows, pivots)
}

/// Smallest subHopf algebra containing the legs of a rank factorisation of
/// `R`, with the restricted structure and its modular data.
pub fn minimal_subhopf(alg: &FinHopfAlgebra, r: &RMatrix) -> Result<MinimalSubHopf> {
    let n = alg.dim();
    let to_el = |v: &[Scalar]| Element::from_terms(v.iter().cloned().enumerate());
    let mut gens: Vec<Vec<Scalar>> = vec![dense(alg, &alg.unit())];
    let (cols, _) = span((0..n).map(|j| r.r.0.column(j)).collect(), n);
    let (rows, _) = span((0..n).map(|i| r.r.0.row(i).to_vec()).collect(), n);
    let rank = cols.len();
    gens.extend(cols);
    gens.extend(rows);
    let (mut basis, _) = span(gens, n);
    let mut pivots;
    let mut rounds = 0;
    loop {
        rounds += 1;
        if rounds > n + 1 {
            return Err(Error::Inconsistent("subHopf closure did not stabilise".into()));
        }
        let els: Vec<Element> = basis.iter().map(|v| to_el(v)).collect();
        let mut next = basis.clone();
        for x in &els {
            for y in &els {
                next.push(dense(alg, &alg.mul(x, y)));
            }
            next.push(dense(alg, &alg.antipode(x)));
            let d = Tensor2::from_tensor(n, &alg.comul(x));
            next.extend((0..n).map(|j| d.0.column(j)));
            next.extend((0..n).map(|i| d.0.row(i).to_vec()));
        }
        let (nb, np) = span(next, n);
        let done = nb.len() == basis.len();
        basis = nb;
        pivots = np;
        if done {
            break;
        }
    }
    let m = basis.len();
    let inclusion: Vec<Element> = basis.iter().map(|v| to_el(v)).collect();
    // coordinates in the reduced basis are read off at the pivot columns
    let coords = |x: &Element| -> Element { Element::from_terms(pivots.iter().enumerate().map(|(k, p)| (k, x.coeff(p)))) };
    let labels: Vec<String> = inclusion
        .iter()
        .map(|x| match x.as_basis() {
            Some(b) if x.coeff(b).is_one() => alg.label(b),
            _ => format!("({})", alg.format(x)),
        })
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut sc = StructureConstants::empty(format!("L({})", alg.name()), &refs);
    sc.unit = coords(&alg.unit());
    let mut s = Matrix::zeros(m, m);
    for k in 0..m {
        for l in 0..m {
            sc.mult[k][l] = coords(&alg.mul(&inclusion[k], &inclusion[l]));
        }
        let d = alg.comul(&inclusion[k]);
        let mut t = Tensor::zero();
        for (a, pa) in pivots.iter().enumerate() {
            for (b, pb) in pivots.iter().enumerate() {
                t.add_term((a, b), d.coeff(&(*pa, *pb)));
            }
        }
        sc.comult[k] = t;
        sc.counit[k] = alg.counit(&inclusion[k]);
        for (i, c) in coords(&alg.antipode(&inclusion[k])).iter() {
            s[(*i, k)] = c.clone();
        }
    }
    sc.antipode = Some(s);
    let l_alg = FinHopfAlgebra::new(sc)?;
    let mut rl = Matrix::zeros(m, m);
    for (a, pa) in pivots.iter().enumerate() {
        for (b, pb) in pivots.iter().enumerate() {
            rl[(a, b)] = r.r.0[(*pa, *pb)].clone();
        }
    }
    let r_l = RMatrix::new(&l_alg, Tensor2(rl))?;

    let mut rep = Report::new("minimal quasitriangular subHopf algebra");
    rep.compute("rank R", rank.to_string());
    rep.compute("dim L", m.to_string());
    rep.compute("basis L", format!("[{}]", labels.join(", ")));
    let back = |x: &Element| x.map_linear(|k| inclusion[*k].clone());
    let restored = Tensor2::from_tensor(n, &r_l.r.to_tensor().map_linear(|(a, b)| {
        structure::tensor_of(&inclusion[*a], &inclusion[*b])
    }));
    rep.expect("R ∈ L⊗L", restored == r.r, || "R has legs outside L".into());
    rep.merge(verify_qt(&l_alg, &r_l));

    let (h_data, _) = cofrobenius::analyze(alg)?;
    let (l_data, _) = cofrobenius::analyze(&l_alg)?;
    let a_same = back(&l_data.a) == h_data.a;
    let alpha_restricted = Functional(inclusion.iter().map(|x| h_data.alpha.eval(x)).collect());
    let alpha_same = l_data.alpha == alpha_restricted;
    let chi_h = matrix_map(&h_data.chi);
    let chi_l = matrix_map(&l_data.chi);
    let chi_same = (0..m).all(|k| back(&chi_l(&k)) == inclusion[k].map_linear(|b| chi_h(b)));
    rep.compute("a_L", l_alg.format(&l_data.a));
    rep.compute("alpha_L", l_data.alpha.format(&l_alg));
    rep.compute("a_L = a_H", a_same.to_string());
    rep.compute("α_L = α_H|L", alpha_same.to_string());
    rep.compute("χ_L = χ_H|L", chi_same.to_string());
    rep.expect("a_L = a_H ⇔ α_L = α_H|L", a_same == alpha_same, || {
        format!("a_L = a_H is {a_same}, α_L = α_H|L is {alpha_same}")
    });
    rep.expect("α_L = α_H|L ⇔ χ_L = χ_H|L", alpha_same == chi_same, || {
        format!("α_L = α_H|L is {alpha_same}, χ_L = χ_H|L is {chi_same}")
    });
    Ok(MinimalSubHopf { algebra: l_alg, inclusion, r: r_l, report: rep })
}

/// Every quasitriangular check on `(H, R)` in one report.
pub fn qt_suite(
    alg: &FinHopfAlgebra,
    cofrob: &CoFrobeniusData,
    r: &RMatrix,
    extra_chars: &[(String, Functional)],
) -> Result<(QTData, Report)> {
    let mut rep = Report::new(format!("quasitriangular suite: {}", alg.name()));
    let axioms = verify_qt(alg, r);
    let ok = axioms.passed();
    rep.merge(axioms);
    if !ok {
        return Err(Error::Axioms(Box::new(rep)));
    }
    let qt = drinfeld_elements(alg, r)?;
    rep.merge(check_drinfeld(alg, &qt));
    rep.merge(verify_delta_u(alg, r, &qt)?);
    let mut chars = vec![
        ("ε".to_string(), alg.counit_functional()),
        ("α".to_string(), cofrob.alpha.clone()),
        ("α⁻¹".to_string(), cofrob.alpha_inv.clone()),
    ];
    chars.extend(extra_chars.iter().cloned());
    rep.merge(check_grouplike_maps(alg, r, &chars)?);
    rep.merge(check_lemma_factunim(alg, cofrob, r)?);
    rep.merge(check_theorem22(alg, cofrob, r, &qt)?);
    rep.merge(check_corollary25(alg, cofrob, r, &qt)?);
    Ok((qt, rep))
}
