//! Carrier-independent Hopf structure.
//!
//! Everything here works for any algebra exposing its structure maps on basis
//! elements, finite-dimensional (basis `usize`) or not (the Laurent family).
//! Elements are finite-support vectors; functionals are evaluators.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Finite-support vector over an ordered basis. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord + Clone> Default for Vector<B> {
    fn default() -> Self {
        Vector::zero()
    }
}

impl<B: Ord + Clone> Vector<B> {
    pub fn zero() -> Self {
        Vector { terms: BTreeMap::new() }
    }

    pub fn basis(b: B) -> Self {
        Vector::term(Scalar::one(), b)
    }

    pub fn term(c: Scalar, b: B) -> Self {
        let mut v = Vector::zero();
        v.add_term(b, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, Scalar)>) -> Self {
        let mut v = Vector::zero();
        for (b, c) in terms {
            v.add_term(b, c);
        }
        v
    }

    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector<B>) {
        if c.is_zero() {
            return;
        }
        for (b, v) in &other.terms {
            self.add_term(b.clone(), c * v);
        }
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut v = Vector::zero();
        v.add_scaled(c, self);
        v
    }

    /// Linear extension of a map defined on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, f: impl Fn(&B) -> Vector<C>) -> Vector<C> {
        let mut out = Vector::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// The unique basis element with coefficient one, if the vector is exactly that.
    pub fn as_basis(&self) -> Option<&B> {
        match self.terms.iter().next() {
            Some((b, c)) if self.terms.len() == 1 && c.is_one() => Some(b),
            _ => None,
        }
    }
}

impl<B: Ord + Clone> Add for &Vector<B> {
    type Output = Vector<B>;
    fn add(self, rhs: &Vector<B>) -> Vector<B> {
        let mut v = self.clone();
        v.add_scaled(&Scalar::one(), rhs);
        v
    }
}

impl<B: Ord + Clone> Sub for &Vector<B> {
    type Output = Vector<B>;
    fn sub(self, rhs: &Vector<B>) -> Vector<B> {
        let mut v = self.clone();
        v.add_scaled(&-Scalar::one(), rhs);
        v
    }
}

impl<B: Ord + Clone> Neg for &Vector<B> {
    type Output = Vector<B>;
    fn neg(self) -> Vector<B> {
        self.scale(&-Scalar::one())
    }
}

pub type Tensor<B> = Vector<(B, B)>;
pub type Tensor3<B> = Vector<(B, B, B)>;

/// Structure maps of a bialgebra given on basis elements.
pub trait Bialgebra: Clone + Send + Sync + 'static {
    type Basis: Clone + Ord + Debug + Send + Sync + 'static;

    fn unit(&self) -> Vector<Self::Basis>;
    fn mul_basis(&self, x: &Self::Basis, y: &Self::Basis) -> Vector<Self::Basis>;
    fn comul_basis(&self, x: &Self::Basis) -> Tensor<Self::Basis>;
    fn counit_basis(&self, x: &Self::Basis) -> Scalar;
    fn label(&self, b: &Self::Basis) -> String;

    fn mul(&self, x: &Vector<Self::Basis>, y: &Vector<Self::Basis>) -> Vector<Self::Basis> {
        let mut out = Vector::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&(ca * cb), &self.mul_basis(a, b));
            }
        }
        out
    }

    fn mul3(
        &self,
        x: &Vector<Self::Basis>,
        y: &Vector<Self::Basis>,
        z: &Vector<Self::Basis>,
    ) -> Vector<Self::Basis> {
        self.mul(&self.mul(x, y), z)
    }

    fn comul(&self, x: &Vector<Self::Basis>) -> Tensor<Self::Basis> {
        x.map_linear(|b| self.comul_basis(b))
    }

    /// `(Δ ⊗ id)Δ`, i.e. `h₁ ⊗ h₂ ⊗ h₃`.
    fn comul2_basis(&self, x: &Self::Basis) -> Tensor3<Self::Basis> {
        self.comul_basis(x).map_linear(|(p, q)| {
            self.comul_basis(p).map_linear(|(r, s)| Vector::basis((r.clone(), s.clone(), q.clone())))
        })
    }

    fn counit(&self, x: &Vector<Self::Basis>) -> Scalar {
        x.iter().map(|(b, c)| c * &self.counit_basis(b)).sum()
    }

    /// Product in `H ⊗ H`.
    fn tensor_mul(&self, x: &Tensor<Self::Basis>, y: &Tensor<Self::Basis>) -> Tensor<Self::Basis> {
        let mut out = Vector::zero();
        for ((a, b), c1) in x.iter() {
            for ((p, q), c2) in y.iter() {
                let left = self.mul_basis(a, p);
                let right = self.mul_basis(b, q);
                let c = c1 * c2;
                for (l, cl) in left.iter() {
                    for (r, cr) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &c * &(cl * cr));
                    }
                }
            }
        }
        out
    }

    fn format(&self, v: &Vector<Self::Basis>) -> String {
        format_terms(v.iter().map(|(b, c)| (self.label(b), c)))
    }

    fn format_tensor(&self, v: &Tensor<Self::Basis>) -> String {
        format_terms(v.iter().map(|((a, b), c)| (format!("{}⊗{}", self.label(a), self.label(b)), c)))
    }
}

/// A bialgebra with bijective antipode.
pub trait Hopf: Bialgebra {
    fn antipode_basis(&self, x: &Self::Basis) -> Vector<Self::Basis>;
    fn antipode_inv_basis(&self, x: &Self::Basis) -> Vector<Self::Basis>;

    fn antipode(&self, x: &Vector<Self::Basis>) -> Vector<Self::Basis> {
        x.map_linear(|b| self.antipode_basis(b))
    }

    fn antipode_inv(&self, x: &Vector<Self::Basis>) -> Vector<Self::Basis> {
        x.map_linear(|b| self.antipode_inv_basis(b))
    }

    /// `S^k` for any integer `k`.
    fn antipode_pow(&self, x: &Vector<Self::Basis>, k: i32) -> Vector<Self::Basis> {
        let mut v = x.clone();
        for _ in 0..k.unsigned_abs() {
            v = if k > 0 { self.antipode(&v) } else { self.antipode_inv(&v) };
        }
        v
    }
}

/// Human-readable linear combination, `0` when empty.
pub fn format_terms<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let neg = c.is_negative_repr();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&label);
        } else {
            out.push_str(&format!("{mag}*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A linear functional given by its values on basis elements.
pub struct Form<B>(Arc<dyn Fn(&B) -> Scalar + Send + Sync>);

impl<B> Clone for Form<B> {
    fn clone(&self) -> Self {
        Form(self.0.clone())
    }
}

impl<B: Ord + Clone + 'static> Form<B> {
    pub fn new(f: impl Fn(&B) -> Scalar + Send + Sync + 'static) -> Self {
        Form(Arc::new(f))
    }

    pub fn at(&self, b: &B) -> Scalar {
        (self.0)(b)
    }

    pub fn eval(&self, v: &Vector<B>) -> Scalar {
        v.iter().filter_map(|(b, c)| {
            let x = self.at(b);
            (!x.is_zero()).then(|| c * &x)
        }).sum()
    }

    /// Tabulates the values on a fixed list of basis elements.
    pub fn tabulate(&self, basis: &[B]) -> Vec<Scalar> {
        basis.iter().map(|b| self.at(b)).collect()
    }

    /// First basis element of `test` where the two functionals differ.
    pub fn differs_from<'a>(&self, other: &Form<B>, test: &'a [B]) -> Option<&'a B> {
        test.iter().find(|b| self.at(b) != other.at(b))
    }
}

/// A bilinear form on `H ⊗ H` given on basis pairs.
pub struct Form2<B>(Arc<dyn Fn(&B, &B) -> Scalar + Send + Sync>);

impl<B> Clone for Form2<B> {
    fn clone(&self) -> Self {
        Form2(self.0.clone())
    }
}

impl<B: Ord + Clone + 'static> Form2<B> {
    pub fn new(f: impl Fn(&B, &B) -> Scalar + Send + Sync + 'static) -> Self {
        Form2(Arc::new(f))
    }

    pub fn at(&self, x: &B, y: &B) -> Scalar {
        (self.0)(x, y)
    }

    pub fn eval(&self, x: &Vector<B>, y: &Vector<B>) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let v = self.at(a, b);
                if !v.is_zero() {
                    acc += &(&(ca * cb) * &v);
                }
            }
        }
        acc
    }

    pub fn eval_tensor(&self, t: &Tensor<B>) -> Scalar {
        t.iter().map(|((a, b), c)| c * &self.at(a, b)).sum()
    }

    /// `(x, y) ↦ self(y, x)`.
    pub fn flipped(&self) -> Form2<B> {
        let f = self.clone();
        Form2::new(move |x, y| f.at(y, x))
    }

    /// `f ⊗ g`.
    pub fn product(f: &Form<B>, g: &Form<B>) -> Form2<B> {
        let (f, g) = (f.clone(), g.clone());
        Form2::new(move |x, y| &f.at(x) * &g.at(y))
    }
}

pub fn counit_form<H: Bialgebra>(alg: &H) -> Form<H::Basis> {
    let alg = alg.clone();
    Form::new(move |b| alg.counit_basis(b))
}

/// `(f * g)(h) = f(h₁) g(h₂)` at a single basis element.
pub fn convolve_at<H: Bialgebra>(alg: &H, f: &Form<H::Basis>, g: &Form<H::Basis>, h: &H::Basis) -> Scalar {
    alg.comul_basis(h)
        .iter()
        .map(|((p, q), c)| {
            let fp = f.at(p);
            if fp.is_zero() {
                Scalar::zero()
            } else {
                &(c * &fp) * &g.at(q)
            }
        })
        .sum()
}

pub fn convolve<H: Bialgebra>(alg: &H, f: &Form<H::Basis>, g: &Form<H::Basis>) -> Form<H::Basis> {
    let (alg, f, g) = (alg.clone(), f.clone(), g.clone());
    Form::new(move |h| convolve_at(&alg, &f, &g, h))
}

/// Convolution in `(H ⊗ H)*`: `(σ * τ)(h ⊗ l) = σ(h₁, l₁) τ(h₂, l₂)`.
pub fn convolve2_at<H: Bialgebra>(
    alg: &H,
    f: &Form2<H::Basis>,
    g: &Form2<H::Basis>,
    h: &H::Basis,
    l: &H::Basis,
) -> Scalar {
    let dh = alg.comul_basis(h);
    let dl = alg.comul_basis(l);
    let mut acc = Scalar::zero();
    for ((h1, h2), ch) in dh.iter() {
        for ((l1, l2), cl) in dl.iter() {
            let a = f.at(h1, l1);
            if a.is_zero() {
                continue;
            }
            acc += &(&(&(ch * cl) * &a) * &g.at(h2, l2));
        }
    }
    acc
}

/// `f ∘ S^k`.
pub fn compose_antipode<H: Hopf>(alg: &H, f: &Form<H::Basis>, k: i32) -> Form<H::Basis> {
    let (alg, f) = (alg.clone(), f.clone());
    Form::new(move |b: &H::Basis| f.eval(&alg.antipode_pow(&Vector::basis(b.clone()), k)))
}

/// `left(h₁) h₂ right(h₃)`.
pub fn coact<H: Bialgebra>(
    alg: &H,
    left: &Form<H::Basis>,
    h: &Vector<H::Basis>,
    right: &Form<H::Basis>,
) -> Vector<H::Basis> {
    h.map_linear(|b| {
        alg.comul2_basis(b).map_linear(|(p, q, r)| {
            let c = &left.at(p) * &right.at(r);
            Vector::term(c, q.clone())
        })
    })
}

/// `l* ⇀ h ↼ m* = m*(h₁) h₂ l*(h₃)`.
pub fn sandwich<H: Bialgebra>(
    alg: &H,
    l_star: &Form<H::Basis>,
    h: &Vector<H::Basis>,
    m_star: &Form<H::Basis>,
) -> Vector<H::Basis> {
    coact(alg, m_star, h, l_star)
}

/// `l* ⇀ h = h₁ l*(h₂)`.
pub fn hit_left<H: Bialgebra>(alg: &H, l_star: &Form<H::Basis>, h: &Vector<H::Basis>) -> Vector<H::Basis> {
    sandwich(alg, l_star, h, &counit_form(alg))
}

/// `h ↼ m* = m*(h₁) h₂`.
pub fn hit_right<H: Bialgebra>(alg: &H, h: &Vector<H::Basis>, m_star: &Form<H::Basis>) -> Vector<H::Basis> {
    sandwich(alg, &counit_form(alg), h, m_star)
}

/// `(h ⇀ m* ↼ l)(m) = m*(l m h)`.
pub fn act_both<H: Bialgebra>(
    alg: &H,
    h: &Vector<H::Basis>,
    m_star: &Form<H::Basis>,
    l: &Vector<H::Basis>,
) -> Form<H::Basis> {
    let (alg, h, m_star, l) = (alg.clone(), h.clone(), m_star.clone(), l.clone());
    Form::new(move |m: &H::Basis| m_star.eval(&alg.mul3(&l, &Vector::basis(m.clone()), &h)))
}

/// `h ⇀ m*`, i.e. `m ↦ m*(m h)`.
pub fn act_left<H: Bialgebra>(alg: &H, h: &Vector<H::Basis>, m_star: &Form<H::Basis>) -> Form<H::Basis> {
    act_both(alg, h, m_star, &alg.unit())
}

/// `m* ↼ l`, i.e. `m ↦ m*(l m)`.
pub fn act_right<H: Bialgebra>(alg: &H, m_star: &Form<H::Basis>, l: &Vector<H::Basis>) -> Form<H::Basis> {
    act_both(alg, &alg.unit(), m_star, l)
}

pub fn is_grouplike<H: Bialgebra>(alg: &H, x: &Vector<H::Basis>) -> bool {
    alg.counit(x).is_one() && alg.comul(x) == tensor_square(x)
}

pub fn tensor_square<B: Ord + Clone>(x: &Vector<B>) -> Tensor<B> {
    let mut t = Vector::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in x.iter() {
            t.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    t
}

pub fn tensor_of<B: Ord + Clone>(x: &Vector<B>, y: &Vector<B>) -> Tensor<B> {
    let mut t = Vector::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            t.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    t
}

pub fn flip<B: Ord + Clone>(t: &Tensor<B>) -> Tensor<B> {
    Vector::from_terms(t.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())))
}

/// Checks `f(xy) = f(x) f(y)` on test pairs and `f(1) = 1`; returns a witness on failure.
pub fn character_witness<H: Bialgebra>(alg: &H, f: &Form<H::Basis>, test: &[H::Basis]) -> Option<String> {
    if !f.eval(&alg.unit()).is_one() {
        return Some("value at 1 is not 1".into());
    }
    for x in test {
        for y in test {
            let lhs = f.eval(&alg.mul_basis(x, y));
            let rhs = &f.at(x) * &f.at(y);
            if lhs != rhs {
                return Some(format!("f({}·{}) = {lhs} but f({})f({}) = {rhs}", alg.label(x), alg.label(y), alg.label(x), alg.label(y)));
            }
        }
    }
    None
}
