//! Built-in example algebras.

use num_traits::{One, Zero};

use crate::hopf::{Element, FinHopfAlgebra, Functional, StructureConstants, Tensor2};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::structure::Tensor;

/// Group algebra of the cyclic group of order `n`, basis `1, g, g^2, …`.
pub fn group_algebra(n: usize) -> FinHopfAlgebra {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut sc = StructureConstants::empty(format!("kC{n}"), &refs);
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            sc.mult[i][j] = Element::basis((i + j) % n);
        }
        sc.comult[i] = Tensor::basis((i, i));
        sc.counit[i] = Scalar::one();
        s[((n - i) % n, i)] = Scalar::one();
    }
    sc.antipode = Some(s);
    FinHopfAlgebra::new(sc).expect("group algebra")
}

/// The sign character `g^k ↦ (-1)^k` of `kC_n`, `n` even.
pub fn sign_character(n: usize) -> Functional {
    assert!(n % 2 == 0, "sign character needs even order");
    Functional((0..n).map(|k| Scalar::sign(k as i64)).collect())
}

/// `R = 1 ⊗ 1` (or `ε ⊗ ε` as a braiding) for any algebra.
pub fn trivial_r(alg: &FinHopfAlgebra) -> Tensor2 {
    alg.t2_one()
}

pub fn sweedler_index(i: i64, j: i64) -> usize {
    (i.rem_euclid(2) + 2 * j) as usize
}

/// Sweedler's four-dimensional algebra, basis `1, g, x, gx`, with
/// `Δ(x) = x ⊗ 1 + g ⊗ x`.
pub fn sweedler4() -> FinHopfAlgebra {
    let mut sc = StructureConstants::empty("H4", &["1", "g", "x", "gx"]);
    let mut s = Matrix::zeros(4, 4);
    for i in 0..2i64 {
        for j in 0..2i64 {
            let a = sweedler_index(i, j);
            for t in 0..2i64 {
                for k in 0..2i64 {
                    if j + k < 2 {
                        sc.mult[a][sweedler_index(t, k)] =
                            Element::term(Scalar::sign(j * t), sweedler_index(i + t, j + k));
                    }
                }
            }
            if j == 0 {
                sc.comult[a] = Tensor::basis((a, a));
                sc.counit[a] = Scalar::one();
                s[(a, a)] = Scalar::one();
            } else {
                let mut d = Tensor::zero();
                d.add_term((a, sweedler_index(i, 0)), Scalar::one());
                d.add_term((sweedler_index(i + 1, 0), a), Scalar::one());
                sc.comult[a] = d;
                // S(g^i x) = -(-1)^i g^{-1-i} x
                s[(sweedler_index(-1 - i, 1), a)] = -Scalar::sign(i);
            }
        }
    }
    sc.antipode = Some(s);
    FinHopfAlgebra::new(sc).expect("Sweedler algebra")
}

/// `g^i x^j ↦ δ_{j,0} (-1)^i` on Sweedler's algebra.
pub fn sweedler_alpha(h: &FinHopfAlgebra) -> Functional {
    let _ = h;
    Functional(vec![Scalar::one(), -Scalar::one(), Scalar::zero(), Scalar::zero()])
}

/// `R_ξ = c + ξ b` on Sweedler's algebra.
pub fn sweedler_r(h: &FinHopfAlgebra, xi: &Scalar) -> Tensor2 {
    let half = Scalar::ratio(1, 2);
    let (one, g, x, gx) = (0, 1, 2, 3);
    let mut t = vec![
        (half.clone(), one, one),
        (half.clone(), one, g),
        (half.clone(), g, one),
        (-&half, g, g),
    ];
    let hx = &half * xi;
    t.extend([(hx.clone(), x, x), (-&hx, x, gx), (hx.clone(), gx, x), (hx, gx, gx)]);
    let t: Vec<_> = t.into_iter().map(|(c, i, j)| (h.field().embed(&c), i, j)).collect();
    Tensor2::from_triples(h.dim(), &t)
}
