//! Finite-dimensional Hopf algebras given by structure constants.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{invert_matrix, solve_linear, Matrix};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::structure::{self, Bialgebra, Form, Form2, Hopf, Tensor, Vector};

/// An element of a finite-dimensional algebra, in basis coordinates.
pub type Element = Vector<usize>;

/// Raw, unvalidated structure constants.
///
/// `antipode`, when present, holds `S(e_j)` in column `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Element>>,
    pub unit: Element,
    pub comult: Vec<Tensor<usize>>,
    pub counit: Vec<Scalar>,
    pub antipode: Option<Matrix>,
}

impl StructureConstants {
    /// All-zero tables over the given basis, unit `e_0`.
    pub fn empty(name: impl Into<String>, labels: &[&str]) -> Self {
        let n = labels.len();
        StructureConstants {
            name: name.into(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            mult: vec![vec![Element::zero(); n]; n],
            unit: Element::basis(0),
            comult: vec![Tensor::zero(); n],
            counit: vec![Scalar::zero(); n],
            antipode: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Maps every constant into `field`.
    pub fn over_field(&self, field: Field) -> Self {
        let v = |e: &Element| Element::from_terms(e.iter().map(|(b, c)| (*b, field.embed(c))));
        let t = |e: &Tensor<usize>| Tensor::from_terms(e.iter().map(|(b, c)| (*b, field.embed(c))));
        StructureConstants {
            name: self.name.clone(),
            labels: self.labels.clone(),
            mult: self.mult.iter().map(|row| row.iter().map(v).collect()).collect(),
            unit: v(&self.unit),
            comult: self.comult.iter().map(t).collect(),
            counit: self.counit.iter().map(|c| field.embed(c)).collect(),
            antipode: self.antipode.as_ref().map(|m| m.map(|c| field.embed(c))),
        }
    }

    fn shape_problems(&self) -> Option<String> {
        let n = self.dim();
        if n == 0 {
            return Some("empty basis".into());
        }
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n) {
            return Some("multiplication table is not n×n".into());
        }
        if self.comult.len() != n || self.counit.len() != n {
            return Some("comultiplication/counit tables have wrong length".into());
        }
        let out_of_range = |e: &Element| e.iter().any(|(b, _)| *b >= n);
        if self.mult.iter().flatten().any(out_of_range) || out_of_range(&self.unit) {
            return Some("basis index out of range".into());
        }
        if self.comult.iter().any(|t| t.iter().any(|((a, b), _)| *a >= n || *b >= n)) {
            return Some("basis index out of range in comultiplication".into());
        }
        if let Some(s) = &self.antipode {
            if s.rows() != n || s.cols() != n {
                return Some("antipode matrix is not n×n".into());
            }
        }
        None
    }

    fn antipode_column(m: &Matrix, j: usize) -> Element {
        Element::from_terms((0..m.rows()).map(|i| (i, m[(i, j)].clone())))
    }
}

impl Bialgebra for StructureConstants {
    type Basis = usize;

    fn unit(&self) -> Element {
        self.unit.clone()
    }

    fn mul_basis(&self, x: &usize, y: &usize) -> Element {
        self.mult[*x][*y].clone()
    }

    fn comul_basis(&self, x: &usize) -> Tensor<usize> {
        self.comult[*x].clone()
    }

    fn counit_basis(&self, x: &usize) -> Scalar {
        self.counit[*x].clone()
    }

    fn label(&self, b: &usize) -> String {
        self.labels.get(*b).cloned().unwrap_or_else(|| format!("e{b}"))
    }
}

/// Checks the bialgebra axioms on `test` (all of it for triples and pairs).
pub fn check_bialgebra_axioms<H: Bialgebra>(alg: &H, test: &[H::Basis]) -> Report {
    let mut r = Report::new("bialgebra axioms");
    let one = alg.unit();
    let lab = |b: &H::Basis| alg.label(b);
    r.check_all("associativity", triples(test), |(x, y, z)| {
        let (x, y, z) = (Vector::basis(x.clone()), Vector::basis(y.clone()), Vector::basis(z.clone()));
        let l = alg.mul(&alg.mul(&x, &y), &z);
        let rr = alg.mul(&x, &alg.mul(&y, &z));
        (l != rr).then(|| format!("({}·{})·{} ≠ {}·({}·{})", alg.format(&x), alg.format(&y), alg.format(&z), alg.format(&x), alg.format(&y), alg.format(&z)))
    });
    r.check_all("unit laws", test.iter(), |h| {
        let hv = Vector::basis(h.clone());
        (alg.mul(&one, &hv) != hv || alg.mul(&hv, &one) != hv).then(|| format!("unit law fails at {}", lab(h)))
    });
    r.check_all("coassociativity", test.iter(), |h| {
        let left = alg.comul2_basis(h);
        let right = alg.comul_basis(h).map_linear(|(p, q)| {
            alg.comul_basis(q).map_linear(|(s, t)| Vector::basis((p.clone(), s.clone(), t.clone())))
        });
        (left != right).then(|| format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ at {}", lab(h)))
    });
    r.check_all("counit laws", test.iter(), |h| {
        let d = alg.comul_basis(h);
        let hv = Vector::basis(h.clone());
        let left = d.map_linear(|(p, q)| Vector::term(alg.counit_basis(p), q.clone()));
        let right = d.map_linear(|(p, q)| Vector::term(alg.counit_basis(q), p.clone()));
        (left != hv || right != hv).then(|| format!("counit law fails at {}", lab(h)))
    });
    r.check_all("comultiplication is multiplicative", pairs(test), |(x, y)| {
        let lhs = alg.comul(&alg.mul_basis(x, y));
        let rhs = alg.tensor_mul(&alg.comul_basis(x), &alg.comul_basis(y));
        (lhs != rhs).then(|| format!("Δ({}·{}) ≠ Δ({})Δ({})", lab(x), lab(y), lab(x), lab(y)))
    });
    r.expect("comultiplication is unital", alg.comul(&one) == structure::tensor_square(&one), || "Δ(1) ≠ 1⊗1".into());
    r.check_all("counit is multiplicative", pairs(test), |(x, y)| {
        let lhs = alg.counit(&alg.mul_basis(x, y));
        let rhs = &alg.counit_basis(x) * &alg.counit_basis(y);
        (lhs != rhs).then(|| format!("ε({}·{}) ≠ ε({})ε({})", lab(x), lab(y), lab(x), lab(y)))
    });
    r.expect("counit is unital", alg.counit(&one).is_one(), || "ε(1) ≠ 1".into());
    r
}

/// Checks `m(S⊗id)Δ = ηε = m(id⊗S)Δ` on `test`.
pub fn check_antipode_axiom<H: Bialgebra>(
    alg: &H,
    antipode: impl Fn(&H::Basis) -> Vector<H::Basis>,
    test: &[H::Basis],
) -> Report {
    let mut r = Report::new("antipode axiom");
    let one = alg.unit();
    r.check_all("antipode axiom", test.iter(), |h| {
        let d = alg.comul_basis(h);
        let target = one.scale(&alg.counit_basis(h));
        let left = d.map_linear(|(p, q)| alg.mul(&antipode(p), &Vector::basis(q.clone())));
        let right = d.map_linear(|(p, q)| alg.mul(&Vector::basis(p.clone()), &antipode(q)));
        if left != target {
            Some(format!("S({}₁){}₂ = {} ≠ {}", alg.label(h), alg.label(h), alg.format(&left), alg.format(&target)))
        } else if right != target {
            Some(format!("{}₁S({}₂) = {} ≠ {}", alg.label(h), alg.label(h), alg.format(&right), alg.format(&target)))
        } else {
            None
        }
    });
    r
}

pub(crate) fn pairs<B>(test: &[B]) -> impl Iterator<Item = (&B, &B)> {
    test.iter().flat_map(move |x| test.iter().map(move |y| (x, y)))
}

pub(crate) fn triples<B>(test: &[B]) -> impl Iterator<Item = (&B, &B, &B)> {
    test.iter().flat_map(move |x| test.iter().flat_map(move |y| test.iter().map(move |z| (x, y, z))))
}

/// Solves for `S` as the convolution inverse of the identity map.
pub fn compute_antipode(sc: &StructureConstants) -> Result<Matrix> {
    let n = sc.dim();
    // Unknown S[i][p] at index i*n + p; equations per (k, r) for both sides.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for side in 0..2 {
        for k in 0..n {
            let mut eqs = vec![vec![Scalar::zero(); n * n]; n];
            for ((p, q), c) in sc.comult[k].iter() {
                // side 0: S(e_p) e_q ; side 1: e_p S(e_q)
                let (s_arg, other) = if side == 0 { (*p, *q) } else { (*q, *p) };
                for i in 0..n {
                    let prod = if side == 0 { &sc.mult[i][other] } else { &sc.mult[other][i] };
                    for (r, cr) in prod.iter() {
                        eqs[*r][i * n + s_arg] += &(c * cr);
                    }
                }
            }
            for (r, eq) in eqs.into_iter().enumerate() {
                rows.push(eq);
                rhs.push(&sc.counit[k] * &sc.unit.coeff(&r));
            }
        }
    }
    let a = Matrix::from_rows(rows)?;
    let sol = solve_linear(&a, &rhs)?.unique().ok_or(Error::NoAntipode)?;
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for p in 0..n {
            s[(i, p)] = sol[i * n + p].clone();
        }
    }
    Ok(s)
}

/// Full Hopf-axiom suite on raw constants.
pub fn verify_hopf(sc: &StructureConstants) -> Report {
    let mut r = Report::new(format!("Hopf axioms: {}", sc.name));
    if let Some(problem) = sc.shape_problems() {
        r.fail("table shapes", problem);
        return r;
    }
    r.pass("table shapes");
    let test: Vec<usize> = (0..sc.dim()).collect();
    r.merge(check_bialgebra_axioms(sc, &test));
    let s = match &sc.antipode {
        Some(m) => m.clone(),
        None => match compute_antipode(sc) {
            Ok(m) => m,
            Err(_) => {
                r.fail("antipode axiom", "no solution: bialgebra without antipode");
                return r;
            }
        },
    };
    r.merge(check_antipode_axiom(sc, |j| StructureConstants::antipode_column(&s, *j), &test));
    r.expect("antipode invertible", invert_matrix(&s).is_ok(), || "S matrix is singular".into());
    r
}

struct Inner {
    sc: StructureConstants,
    antipode: Matrix,
    antipode_inv: Matrix,
}

/// A validated finite-dimensional Hopf algebra. Cheap to clone.
#[derive(Clone)]
pub struct FinHopfAlgebra {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for FinHopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinHopfAlgebra").field("name", &self.inner.sc.name).field("basis", &self.inner.sc.labels).finish()
    }
}

impl PartialEq for FinHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.inner.sc == other.inner.sc
    }
}

impl FinHopfAlgebra {
    /// Validates every axiom; computes the antipode when it is omitted.
    pub fn new(mut sc: StructureConstants) -> Result<Self> {
        let report = verify_hopf(&sc);
        if !report.passed() {
            return Err(Error::Axioms(Box::new(report)));
        }
        let antipode = match sc.antipode.take() {
            Some(m) => m,
            None => compute_antipode(&sc)?,
        };
        let antipode_inv = invert_matrix(&antipode)?;
        sc.antipode = Some(antipode.clone());
        Ok(FinHopfAlgebra { inner: Arc::new(Inner { sc, antipode, antipode_inv }) })
    }

    pub fn name(&self) -> &str {
        &self.inner.sc.name
    }

    pub fn dim(&self) -> usize {
        self.inner.sc.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.sc.labels
    }

    pub fn basis(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.inner.sc
    }

    pub fn field(&self) -> Field {
        self.inner.sc.counit.iter().map(Scalar::field).find(|f| *f != Field::Rationals).unwrap_or_default()
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.inner.antipode
    }

    pub fn antipode_inv_matrix(&self) -> &Matrix {
        &self.inner.antipode_inv
    }

    pub fn element(&self, label: &str) -> Option<Element> {
        self.inner.sc.index_of(label).map(Element::basis)
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        match x.iter().map(|(b, _)| *b).find(|b| *b >= self.dim()) {
            Some(b) => Err(Error::DimensionMismatch { expected: self.dim(), found: b + 1 }),
            None => Ok(()),
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    pub fn comultiply(&self, x: &Element) -> Result<Tensor2> {
        self.check_element(x)?;
        Ok(Tensor2::from_tensor(self.dim(), &self.comul(x)))
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (i, c) in self.mul(x, &Element::basis(j)).iter() {
                m[(*i, j)] = c.clone();
            }
        }
        m
    }

    /// Two-sided multiplicative inverse.
    pub fn invert_element(&self, x: &Element) -> Result<Element> {
        let n = self.dim();
        let one = self.unit();
        let rhs: Vec<Scalar> = (0..n).map(|i| one.coeff(&i)).collect();
        let y = solve_linear(&self.left_mult_matrix(x), &rhs)?
            .particular()
            .map(|v| Element::from_terms(v.into_iter().enumerate()))
            .ok_or_else(|| Error::NotInvertible(self.format(x)))?;
        if self.mul(&y, x) != one {
            return Err(Error::NotInvertible(self.format(x)));
        }
        Ok(y)
    }

    /// Convolution product of dense functionals.
    pub fn convolve(&self, f: &Functional, g: &Functional) -> Functional {
        Functional::from_form(self, &structure::convolve(self, &f.to_form(), &g.to_form()))
    }

    /// Convolution inverse by linear solve of `f*x = ε = x*f`.
    pub fn conv_inverse(&self, f: &Functional) -> Result<Functional> {
        let n = self.dim();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for left in [true, false] {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n];
                for ((p, q), c) in self.comul_basis(&k).iter() {
                    let (known, unknown) = if left { (p, q) } else { (q, p) };
                    row[*unknown] += &(c * &f.0[*known]);
                }
                rows.push(row);
                rhs.push(self.counit_basis(&k));
            }
        }
        let sol = solve_linear(&Matrix::from_rows(rows)?, &rhs)?
            .particular()
            .ok_or_else(|| Error::NotInvertible("functional in H*".into()))?;
        Ok(Functional(sol))
    }

    pub fn is_grouplike(&self, x: &Element) -> bool {
        structure::is_grouplike(self, x)
    }

    pub fn is_character(&self, f: &Functional) -> bool {
        structure::character_witness(self, &f.to_form(), &self.basis()).is_none()
    }

    pub fn counit_functional(&self) -> Functional {
        Functional(self.inner.sc.counit.clone())
    }

    // --- H ⊗ H ---

    pub fn t2_multiply(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        Tensor2::from_tensor(self.dim(), &self.tensor_mul(&x.to_tensor(), &y.to_tensor()))
    }

    pub fn t2_one(&self) -> Tensor2 {
        Tensor2::from_tensor(self.dim(), &structure::tensor_square(&self.unit()))
    }

    /// Two-sided inverse in `H ⊗ H` by linear solve.
    pub fn t2_invert(&self, x: &Tensor2) -> Result<Tensor2> {
        let n = self.dim();
        let xt = x.to_tensor();
        let mut m = Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                let col = self.tensor_mul(&xt, &Tensor::basis((i, j)));
                for ((a, b), c) in col.iter() {
                    m[(a * n + b, i * n + j)] = c.clone();
                }
            }
        }
        let one = self.t2_one();
        let rhs: Vec<Scalar> = (0..n * n).map(|k| one.0[(k / n, k % n)].clone()).collect();
        let sol = solve_linear(&m, &rhs)?
            .particular()
            .ok_or_else(|| Error::NotInvertible("tensor in H⊗H".into()))?;
        let mut y = Matrix::zeros(n, n);
        for k in 0..n * n {
            y[(k / n, k % n)] = sol[k].clone();
        }
        let y = Tensor2(y);
        if self.t2_multiply(&y, x) != one {
            return Err(Error::NotInvertible("tensor in H⊗H (one-sided only)".into()));
        }
        Ok(y)
    }

    /// `(f ⊗ g)(X)` for linear maps given as matrices.
    pub fn t2_map(&self, x: &Tensor2, left: &Matrix, right: &Matrix) -> Tensor2 {
        Tensor2(left.mul(&x.0).and_then(|m| m.mul(&right.transpose())).expect("square maps"))
    }

    pub fn t2_apply_ss(&self, x: &Tensor2) -> Tensor2 {
        self.t2_map(x, self.antipode_matrix(), self.antipode_matrix())
    }

    /// `H*` with convolution as product and the transpose of `m` as coproduct.
    pub fn dual_hopf(&self) -> FinHopfAlgebra {
        let sc = &self.inner.sc;
        let n = self.dim();
        let mut d = StructureConstants::empty(format!("dual of {}", sc.name), &[]);
        d.labels = sc.labels.iter().map(|l| format!("{l}*")).collect();
        d.mult = vec![vec![Element::zero(); n]; n];
        d.comult = vec![Tensor::zero(); n];
        for k in 0..n {
            for ((i, j), c) in sc.comult[k].iter() {
                d.mult[*i][*j].add_term(k, c.clone());
            }
        }
        for i in 0..n {
            for j in 0..n {
                for (k, c) in sc.mult[i][j].iter() {
                    d.comult[*k].add_term((i, j), c.clone());
                }
            }
        }
        d.unit = Element::from_terms(sc.counit.iter().cloned().enumerate());
        d.counit = (0..n).map(|k| sc.unit.coeff(&k)).collect();
        d.antipode = Some(self.antipode_matrix().transpose());
        FinHopfAlgebra::new(d).expect("dual of a Hopf algebra is a Hopf algebra")
    }

    /// Same algebra with every constant mapped into `field`.
    pub fn over_field(&self, field: Field) -> Result<FinHopfAlgebra> {
        FinHopfAlgebra::new(self.inner.sc.over_field(field))
    }
}

impl Bialgebra for FinHopfAlgebra {
    type Basis = usize;

    fn unit(&self) -> Element {
        self.inner.sc.unit.clone()
    }

    fn mul_basis(&self, x: &usize, y: &usize) -> Element {
        self.inner.sc.mult[*x][*y].clone()
    }

    fn comul_basis(&self, x: &usize) -> Tensor<usize> {
        self.inner.sc.comult[*x].clone()
    }

    fn counit_basis(&self, x: &usize) -> Scalar {
        self.inner.sc.counit[*x].clone()
    }

    fn label(&self, b: &usize) -> String {
        self.inner.sc.label(b)
    }
}

impl Hopf for FinHopfAlgebra {
    fn antipode_basis(&self, x: &usize) -> Element {
        StructureConstants::antipode_column(&self.inner.antipode, *x)
    }

    fn antipode_inv_basis(&self, x: &usize) -> Element {
        StructureConstants::antipode_column(&self.inner.antipode_inv, *x)
    }
}

/// Element of `H*`: values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional(pub Vec<Scalar>);

impl Functional {
    pub fn from_form(alg: &FinHopfAlgebra, f: &Form<usize>) -> Self {
        Functional(f.tabulate(&alg.basis()))
    }

    pub fn to_form(&self) -> Form<usize> {
        let v = self.0.clone();
        Form::new(move |b: &usize| v[*b].clone())
    }

    pub fn eval(&self, x: &Element) -> Scalar {
        x.iter().map(|(b, c)| c * &self.0[*b]).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn format(&self, alg: &FinHopfAlgebra) -> String {
        let parts: Vec<String> =
            self.0.iter().enumerate().map(|(i, v)| format!("{}↦{}", alg.label(&i), v)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Element of `H ⊗ H` as an `n × n` coefficient matrix over `e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2(pub Matrix);

impl Tensor2 {
    pub fn zeros(n: usize) -> Self {
        Tensor2(Matrix::zeros(n, n))
    }

    pub fn from_tensor(n: usize, t: &Tensor<usize>) -> Self {
        let mut m = Matrix::zeros(n, n);
        for ((i, j), c) in t.iter() {
            m[(*i, *j)] = c.clone();
        }
        Tensor2(m)
    }

    pub fn from_triples(n: usize, triples: &[(Scalar, usize, usize)]) -> Self {
        let mut t = Tensor::zero();
        for (c, i, j) in triples {
            t.add_term((*i, *j), c.clone());
        }
        Tensor2::from_tensor(n, &t)
    }

    pub fn to_tensor(&self) -> Tensor<usize> {
        Tensor::from_terms(self.0.entries().map(|(i, j, c)| ((i, j), c.clone())))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn t2_flip(&self) -> Tensor2 {
        Tensor2(self.0.transpose())
    }
}

/// Element of `(H ⊗ H)*`: values on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional2(pub Matrix);

impl Functional2 {
    pub fn to_form(&self) -> Form2<usize> {
        let m = self.0.clone();
        Form2::new(move |x: &usize, y: &usize| m[(*x, *y)].clone())
    }

    pub fn from_form(n: usize, f: &Form2<usize>) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f.at(&i, &j);
            }
        }
        Functional2(m)
    }

    pub fn product(f: &Functional, g: &Functional) -> Self {
        let n = f.0.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = &f.0[i] * &g.0[j];
            }
        }
        Functional2(m)
    }
}

impl Form2<usize> {
    /// Contraction with a dense tensor.
    pub fn eval_t2(&self, t: &Tensor2) -> Scalar {
        t.0.entries().filter(|(_, _, c)| !c.is_zero()).map(|(i, j, c)| c * &self.at(&i, &j)).sum()
    }
}
