//! Test support for the lefschetz workspace: seeded random generators for
//! ideals, quotient submodules and matrix pairs, plus oracles that share no
//! algorithmic route with the production code they check (cofactor
//! determinants, minor enumeration, Lagrange reconstruction).

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lefschetz::field::{FieldSpec, Scalar};
use lefschetz::groebner::buchberger;
use lefschetz::linalg::{Matrix, UniPoly};
use lefschetz::module::{from_quotient_submodule, GradedModule};
use lefschetz::poly::{expand_power_ideal, BiPoly, IdealGens, Monomial};

const Q: FieldSpec = FieldSpec::Rationals;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random Artinian homogeneous ideal: a power of `(x, y)` plus a few
/// monomials and homogeneous binomials of lower degree.
pub fn random_artinian_ideal(rng: &mut StdRng) -> IdealGens {
    let e: u32 = rng.gen_range(3..=6);
    let mut gens: Vec<BiPoly> = expand_power_ideal(Q, e).unwrap().gens().to_vec();
    for _ in 0..rng.gen_range(0..=2) {
        let d = rng.gen_range(2..e);
        let a = rng.gen_range(0..=d);
        gens.push(BiPoly::monomial(Q, Monomial::new(a, d - a)));
    }
    for _ in 0..rng.gen_range(0..=2) {
        let d = rng.gen_range(2..e);
        let a1 = rng.gen_range(0..=d);
        let a2 = rng.gen_range(0..=d);
        if a1 == a2 {
            continue;
        }
        let c = Scalar::from_integer(Q, [-2i64, -1, 1, 2][rng.gen_range(0..4)]);
        let binom = BiPoly::monomial(Q, Monomial::new(a1, d - a1))
            .sub(&BiPoly::term(Q, Monomial::new(a2, d - a2), c))
            .unwrap();
        gens.push(binom);
    }
    IdealGens::new(Q, gens).unwrap()
}

/// Random homogeneous module generators with nonzero classes: combinations
/// of standard monomials, so the class never vanishes.
pub fn random_submodule_gens(rng: &mut StdRng, ideal: &IdealGens) -> Vec<BiPoly> {
    let gb = buchberger(ideal);
    let top = gb.artinian_top_degree().expect("generator includes a power of (x,y)");
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(0..top);
        let std_mons = gb.standard_monomials(d);
        if std_mons.is_empty() {
            continue;
        }
        let lead = std_mons[rng.gen_range(0..std_mons.len())];
        let mut g = BiPoly::monomial(Q, lead);
        if std_mons.len() > 1 && rng.gen_bool(0.5) {
            let other = std_mons[rng.gen_range(0..std_mons.len())];
            if other != lead {
                let c = Scalar::from_integer(Q, rng.gen_range(1..=3));
                g = g.add(&BiPoly::term(Q, other, c)).unwrap();
            }
        }
        gens.push(g);
    }
    if gens.is_empty() {
        gens.push(BiPoly::one(Q));
    }
    gens
}

/// A random quotient submodule of a random Artinian quotient ring, the
/// module population the acceptance suites range over. Per-degree
/// dimensions stay at most 6 because the ideal contains `(x, y)^e`
/// with `e <= 6`.
pub fn random_module(rng: &mut StdRng) -> GradedModule {
    let ideal = random_artinian_ideal(rng);
    let gens = random_submodule_gens(rng, &ideal);
    from_quotient_submodule(&ideal, &gens, Q).expect("generated from standard monomials")
}

/// A random two-component module given directly by matrices (no
/// commutativity constraint applies to a single step).
pub fn random_pair(rng: &mut StdRng, h0: usize, h1: usize) -> GradedModule {
    let a = random_matrix(rng, h1, h0);
    let b = random_matrix(rng, h1, h0);
    GradedModule::pair(a, b).expect("matching shapes")
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zero(Q, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, Scalar::from_integer(Q, rng.gen_range(-3..=3)));
        }
    }
    m
}

/// A random pair whose `x` map kills the first generator and whose `y` map
/// kills the second, so both kernels are nonzero and the kernel-quotient
/// reduction has work to do. Requires `h0 >= 2`.
pub fn random_pair_with_kernels(rng: &mut StdRng, h0: usize, h1: usize) -> GradedModule {
    assert!(h0 >= 2);
    let mut a = random_matrix(rng, h1, h0);
    let mut b = random_matrix(rng, h1, h0);
    for i in 0..h1 {
        a.set(i, 0, Q.zero());
        b.set(i, 1, Q.zero());
    }
    GradedModule::pair(a, b).expect("matching shapes")
}

/// A random square pair with a zeroed target row, so the corresponding
/// degree-1 coordinate is unreachable and the pair has a minimal generator
/// in degree 1.
pub fn random_pair_with_degree_one_generator(rng: &mut StdRng, n: usize) -> GradedModule {
    assert!(n >= 1);
    let mut a = random_matrix(rng, n, n);
    let mut b = random_matrix(rng, n, n);
    let row = rng.gen_range(0..n);
    for j in 0..n {
        a.set(row, j, Q.zero());
        b.set(row, j, Q.zero());
    }
    GradedModule::pair(a, b).expect("matching shapes")
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// Determinant by cofactor expansion along the first row; exponential, for
/// cross-checking elimination on small matrices only.
pub fn det_cofactor(m: &Matrix) -> Scalar {
    assert_eq!(m.rows(), m.cols(), "square");
    let n = m.rows();
    let field = m.field();
    if n == 0 {
        return field.one();
    }
    let mut acc = field.zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let minor = submatrix(m, 1..n, j);
        let term = &det_cofactor(&minor) * m.get(0, j);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn submatrix(m: &Matrix, rows: std::ops::Range<usize>, skip_col: usize) -> Matrix {
    let field = m.field();
    let mut out = Matrix::zero(field, rows.len(), m.cols() - 1);
    for (ri, i) in rows.enumerate() {
        let mut cj = 0;
        for j in 0..m.cols() {
            if j == skip_col {
                continue;
            }
            out.set(ri, cj, m.get(i, j).clone());
            cj += 1;
        }
    }
    out
}

/// Determinant of the pencil `g*a + b` by cofactor expansion over
/// polynomial entries.
pub fn pencil_det_cofactor(a: &Matrix, b: &Matrix) -> UniPoly {
    let entries: Vec<Vec<UniPoly>> = (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| UniPoly::linear(a.get(i, j).clone(), b.get(i, j).clone()))
                .collect()
        })
        .collect();
    poly_det_cofactor(a.field(), &entries)
}

fn poly_det_cofactor(field: FieldSpec, m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut acc = UniPoly::zero(field);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let term = poly_det_cofactor(field, &minor).mul(&m[0][j]);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Generic rank of the pencil by brute-force minor enumeration: the largest
/// `k` such that some `k x k` minor of `g*a + b` is a nonzero polynomial.
pub fn pencil_rank_by_minors(a: &Matrix, b: &Matrix) -> usize {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    let max = a.rows().min(a.cols());
    for k in (1..=max).rev() {
        for rows in combinations(a.rows(), k) {
            for cols in combinations(a.cols(), k) {
                let pick = |m: &Matrix| {
                    let field = m.field();
                    let mut s = Matrix::zero(field, k, k);
                    for (ri, &i) in rows.iter().enumerate() {
                        for (cj, &j) in cols.iter().enumerate() {
                            s.set(ri, cj, m.get(i, j).clone());
                        }
                    }
                    s
                };
                if !pencil_det_cofactor(&pick(a), &pick(b)).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 0..=n - k {
        for mut rest in combinations(n - first - 1, k - 1) {
            for r in &mut rest {
                *r += first + 1;
            }
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// Dimension of the degree-`d` piece of the ideal, Groebner-free: the rank
/// of the coefficient matrix of all degree-`d` multiples of the generators.
pub fn ideal_degree_dim(gens: &IdealGens, d: u32) -> usize {
    let monos = Monomial::all_of_degree(d);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in gens.gens() {
        let e = g.homogeneous_degree().expect("homogeneous generators");
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(d - e) {
            let prod = g.mul_term(&m, &gens.field().one());
            rows.push(monos.iter().map(|mm| prod.coeff(mm)).collect());
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(gens.field(), rows).unwrap().rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cofactor_matches_literal_determinants() {
        let m = Matrix::from_int_rows(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(det_cofactor(&m), Scalar::from_integer(Q, -2));
        assert_eq!(det_cofactor(&Matrix::identity(Q, 4)), Q.one());
    }

    #[test]
    fn generators_are_deterministic_per_seed() {
        let a = random_module(&mut rng(7));
        let b = random_module(&mut rng(7));
        assert_eq!(a, b);
    }

    #[test]
    fn random_modules_are_small_and_valid() {
        for seed in 0..20 {
            let m = random_module(&mut rng(seed));
            assert!(!m.is_zero());
            assert!(m.dims().iter().all(|&d| d <= 6), "dims {:?}", m.dims());
        }
    }
}
