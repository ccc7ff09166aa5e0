//! Finite graded modules over `K[x,y]`, stored as per-degree dimensions plus
//! multiplication matrices for `x` and `y`.
//!
//! A module with components `M_0, ..., M_s` keeps `mul_x[i]` and `mul_y[i]`
//! of shape `dims[i+1] x dims[i]` mapping component `i` to component `i+1`.
//! Construction always verifies the shape chain and the commutation law
//! `mul_y[i+1] * mul_x[i] = mul_x[i+1] * mul_y[i]` (because `xy = yx`).
//! The `shift` records which actual degree component 0 lives in; quotient
//! submodule construction normalizes the lowest nonzero component to
//! index 0 and stores its degree here.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::groebner::buchberger;
use crate::linalg::{solve_column, Matrix};
use crate::poly::{BiPoly, IdealGens, Monomial};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ModuleError {
    #[error("ideal is not Artinian: the quotient has standard monomials in every degree")]
    NonArtinianIdeal,
    #[error("generator `{0}` is not homogeneous")]
    GeneratorNotHomogeneous(String),
    #[error("all generators reduce to zero modulo the ideal")]
    AllGeneratorsVanish,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("empty direct sum")]
    EmptySum,
    #[error("matrix shapes do not chain at component {0}")]
    ShapeChain(usize),
    #[error("multiplication matrices do not commute at component {0}")]
    CommutativityViolation(usize),
    #[error("component index {index} out of range for {len} components")]
    DegreeOutOfRange { index: usize, len: usize },
    #[error("seed vector at component {0} has the wrong dimension")]
    SeedDimension(usize),
    #[error("submodule is not closed under multiplication at component {0}")]
    NotClosed(usize),
    #[error("embedded submodule does not match the ambient module at component {0}")]
    EmbeddingMismatch(usize),
}

/// A finite graded module, immutable after construction.
#[derive(Debug, Clone)]
pub struct GradedModule {
    field: FieldSpec,
    shift: i64,
    dims: Vec<usize>,
    mul_x: Vec<Matrix>,
    mul_y: Vec<Matrix>,
    labels: Option<Vec<String>>,
}

/// Labels are presentation metadata for traces; module equality ignores them.
impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.shift == other.shift
            && self.dims == other.dims
            && self.mul_x == other.mul_x
            && self.mul_y == other.mul_y
    }
}

impl Eq for GradedModule {}

/// The Hilbert function: per-degree dimensions with leading and trailing
/// zeros trimmed and `shift` pointing at the first retained degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    pub shift: i64,
    pub values: Vec<usize>,
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A submodule carried together with per-component inclusion matrices into
/// its ambient module (columns are the sub-basis vectors in ambient
/// coordinates). Quotient construction consumes exactly this data.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedSubmodule {
    pub module: GradedModule,
    pub inclusions: Vec<Matrix>,
}

impl GradedModule {
    pub fn new(
        field: FieldSpec,
        shift: i64,
        dims: Vec<usize>,
        mul_x: Vec<Matrix>,
        mul_y: Vec<Matrix>,
        labels: Option<Vec<String>>,
    ) -> Result<GradedModule, ModuleError> {
        let maps = dims.len().saturating_sub(1);
        if mul_x.len() != maps || mul_y.len() != maps {
            return Err(ModuleError::ShapeChain(0));
        }
        for i in 0..maps {
            for m in [&mul_x[i], &mul_y[i]] {
                if m.field() != field {
                    return Err(ModuleError::FieldMismatch);
                }
                if (m.rows(), m.cols()) != (dims[i + 1], dims[i]) {
                    return Err(ModuleError::ShapeChain(i));
                }
            }
        }
        for i in 0..maps.saturating_sub(1) {
            let yx = mul_y[i + 1].matmul(&mul_x[i]).expect("shapes chain");
            let xy = mul_x[i + 1].matmul(&mul_y[i]).expect("shapes chain");
            if yx != xy {
                return Err(ModuleError::CommutativityViolation(i));
            }
        }
        Ok(GradedModule {
            field,
            shift,
            dims,
            mul_x,
            mul_y,
            labels,
        })
    }

    /// The module with no components at all.
    pub fn zero(field: FieldSpec) -> GradedModule {
        GradedModule {
            field,
            shift: 0,
            dims: Vec::new(),
            mul_x: Vec::new(),
            mul_y: Vec::new(),
            labels: None,
        }
    }

    /// A two-component module from its pair of multiplication matrices
    /// (no commutation condition applies to a single step).
    pub fn pair(a: Matrix, b: Matrix) -> Result<GradedModule, ModuleError> {
        let field = a.field();
        let dims = vec![a.cols(), a.rows()];
        GradedModule::new(field, 0, dims, vec![a], vec![b], None)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn mul_x(&self, i: usize) -> &Matrix {
        &self.mul_x[i]
    }

    pub fn mul_y(&self, i: usize) -> &Matrix {
        &self.mul_y[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn hilbert_function(&self) -> HilbertFunction {
        let first = self.dims.iter().position(|&d| d > 0);
        let Some(first) = first else {
            return HilbertFunction {
                shift: 0,
                values: Vec::new(),
            };
        };
        let last = self.dims.iter().rposition(|&d| d > 0).unwrap();
        HilbertFunction {
            shift: self.shift + first as i64,
            values: self.dims[first..=last].to_vec(),
        }
    }

    /// Regrade by `k`: component degrees all move up by `k`.
    pub fn shifted(&self, k: i64) -> GradedModule {
        let mut m = self.clone();
        m.shift += k;
        m
    }

    /// The dual module: reversed dimensions, transposed multiplication
    /// maps, grading negated. An involution.
    pub fn dual(&self) -> GradedModule {
        if self.is_empty() {
            return GradedModule::zero(self.field);
        }
        let t = self.len();
        GradedModule {
            field: self.field,
            shift: -(self.shift + t as i64 - 1),
            dims: self.dims.iter().rev().cloned().collect(),
            mul_x: (0..t - 1)
                .map(|j| self.mul_x[t - 2 - j].transpose())
                .collect(),
            mul_y: (0..t - 1)
                .map(|j| self.mul_y[t - 2 - j].transpose())
                .collect(),
            labels: None,
        }
    }

    /// The two-component module formed by components `i` and `i+1`, with
    /// the grading normalized to start at 0.
    pub fn degree_pair(&self, i: usize) -> Result<GradedModule, ModuleError> {
        if i + 1 >= self.len() {
            return Err(ModuleError::DegreeOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(GradedModule {
            field: self.field,
            shift: 0,
            dims: vec![self.dims[i], self.dims[i + 1]],
            mul_x: vec![self.mul_x[i].clone()],
            mul_y: vec![self.mul_y[i].clone()],
            labels: if i == 0 { self.labels.clone() } else { None },
        })
    }

    /// Per-component counts of minimal generators: the dimension of the
    /// cokernel of `S_1 * M_{i-1} -> M_i`. Component indices are internal
    /// (0-based after the shift).
    pub fn minimal_generator_degrees(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            let count = if i == 0 {
                self.dims[0]
            } else {
                let stacked = self.mul_x[i - 1]
                    .hstack(&self.mul_y[i - 1])
                    .expect("same row count");
                self.dims[i] - stacked.rank()
            };
            if count > 0 {
                out.push((i, count));
            }
        }
        out
    }

    /// The submodule generated by the given seed vectors (component index,
    /// coordinates), closed under both multiplications.
    pub fn submodule_generated(
        &self,
        seeds: &[(usize, Vec<Scalar>)],
    ) -> Result<EmbeddedSubmodule, ModuleError> {
        for (i, v) in seeds {
            if *i >= self.len() {
                return Err(ModuleError::DegreeOutOfRange {
                    index: *i,
                    len: self.len(),
                });
            }
            if v.len() != self.dims[*i] {
                return Err(ModuleError::SeedDimension(*i));
            }
        }
        let mut bases: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); self.len()];
        for i in 0..self.len() {
            let mut acc = SpanAccumulator::new(self.field, self.dims[i]);
            let mut basis_i = Vec::new();
            let mut candidates: Vec<Vec<Scalar>> = Vec::new();
            if i > 0 {
                for v in &bases[i - 1] {
                    candidates.push(self.mul_x[i - 1].mul_vec(v));
                }
                for v in &bases[i - 1] {
                    candidates.push(self.mul_y[i - 1].mul_vec(v));
                }
            }
            candidates.extend(
                seeds
                    .iter()
                    .filter(|(d, _)| *d == i)
                    .map(|(_, v)| v.clone()),
            );
            for c in candidates {
                if acc.try_insert(&c) {
                    basis_i.push(c);
                }
            }
            bases[i] = basis_i;
        }

        let sub_dims: Vec<usize> = bases.iter().map(Vec::len).collect();
        let inclusions: Vec<Matrix> = (0..self.len())
            .map(|i| columns_matrix(self.field, self.dims[i], &bases[i]))
            .collect();
        let mut mul_x = Vec::new();
        let mut mul_y = Vec::new();
        for i in 0..self.len().saturating_sub(1) {
            mul_x.push(induced_map(&self.mul_x[i], &bases[i], &inclusions[i + 1]));
            mul_y.push(induced_map(&self.mul_y[i], &bases[i], &inclusions[i + 1]));
        }
        let module = GradedModule::new(self.field, self.shift, sub_dims, mul_x, mul_y, None)?;
        Ok(EmbeddedSubmodule { module, inclusions })
    }

    /// Quotient by an embedded submodule. Verifies that the submodule is
    /// closed under both multiplications inside this module.
    pub fn quotient(&self, sub: &EmbeddedSubmodule) -> Result<GradedModule, ModuleError> {
        if sub.inclusions.len() != self.len() || sub.module.field != self.field {
            return Err(ModuleError::EmbeddingMismatch(0));
        }
        for i in 0..self.len() {
            let inc = &sub.inclusions[i];
            if inc.rows() != self.dims[i] || inc.cols() != sub.module.dims[i] {
                return Err(ModuleError::EmbeddingMismatch(i));
            }
        }
        // closure check: images of sub basis vectors stay in the sub
        for i in 0..self.len().saturating_sub(1) {
            let inc = &sub.inclusions[i];
            let next = &sub.inclusions[i + 1];
            for j in 0..inc.cols() {
                for mul in [&self.mul_x[i], &self.mul_y[i]] {
                    let w = mul.mul_vec(&inc.col(j));
                    if solve_column(next, &w).is_none() {
                        return Err(ModuleError::NotClosed(i));
                    }
                }
            }
        }

        // per-component reduced bases of the sub and complement coordinates
        let mut reducers: Vec<Matrix> = Vec::new();
        let mut complements: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.len() {
            let red = sub.inclusions[i].transpose().rref();
            let rows: Vec<Vec<Scalar>> = (0..red.rank)
                .map(|r| red.matrix.row(r).to_vec())
                .collect();
            complements.push(
                (0..self.dims[i])
                    .filter(|c| !red.pivots.contains(c))
                    .collect(),
            );
            reducers.push(Matrix::from_rows(self.field, rows).expect("rectangular"));
        }
        let project = |i: usize, v: &[Scalar]| -> Vec<Scalar> {
            let mut v = v.to_vec();
            let red = &reducers[i];
            for r in 0..red.rows() {
                let pivot = (0..red.cols())
                    .find(|&c| red.get(r, c).is_one())
                    .expect("rref row pivot");
                let f = v[pivot].clone();
                if !f.is_zero() {
                    for c in 0..red.cols() {
                        v[c] = &v[c] - &(&f * red.get(r, c));
                    }
                }
            }
            complements[i].iter().map(|&c| v[c].clone()).collect()
        };

        let q_dims: Vec<usize> = complements.iter().map(Vec::len).collect();
        let mut mul_x = Vec::new();
        let mut mul_y = Vec::new();
        for i in 0..self.len().saturating_sub(1) {
            let build = |mul: &Matrix| {
                let cols: Vec<Vec<Scalar>> = complements[i]
                    .iter()
                    .map(|&j| {
                        let mut e = vec![self.field.zero(); self.dims[i]];
                        e[j] = self.field.one();
                        project(i + 1, &mul.mul_vec(&e))
                    })
                    .collect();
                columns_matrix(self.field, q_dims[i + 1], &cols)
            };
            mul_x.push(build(&self.mul_x[i]));
            mul_y.push(build(&self.mul_y[i]));
        }
        let m = GradedModule::new(self.field, self.shift, q_dims, mul_x, mul_y, None)?;
        Ok(m.trimmed())
    }

    /// Drop zero components at both ends, adjusting the shift.
    pub fn trimmed(&self) -> GradedModule {
        let Some(first) = self.dims.iter().position(|&d| d > 0) else {
            return GradedModule::zero(self.field);
        };
        let last = self.dims.iter().rposition(|&d| d > 0).unwrap();
        GradedModule {
            field: self.field,
            shift: self.shift + first as i64,
            dims: self.dims[first..=last].to_vec(),
            mul_x: self.mul_x[first..last].to_vec(),
            mul_y: self.mul_y[first..last].to_vec(),
            labels: if first == 0 { self.labels.clone() } else { None },
        }
    }
}

/// `S/I` as a graded module; the ideal must be Artinian.
pub fn cyclic(ideal: &IdealGens, field: FieldSpec) -> Result<GradedModule, ModuleError> {
    from_quotient_submodule(ideal, &[BiPoly::one(field)], field)
}

/// The submodule of `S/I` generated by the classes of the given homogeneous
/// polynomials.
///
/// Component bases come from closing the generators under `x` and `y`:
/// within each degree the multiples of the previous basis come first
/// (x-images, then y-images), then the new generators, keeping the first
/// independent set in that order. At the lowest degree this makes the
/// generator classes themselves the basis, in input order, so multiplication
/// matrices are expressed against the presentation the caller wrote down.
pub fn from_quotient_submodule(
    ideal: &IdealGens,
    gens: &[BiPoly],
    field: FieldSpec,
) -> Result<GradedModule, ModuleError> {
    if ideal.field() != field || gens.iter().any(|g| g.field() != field) {
        return Err(ModuleError::FieldMismatch);
    }
    let gb = buchberger(ideal);
    let top = gb
        .artinian_top_degree()
        .ok_or(ModuleError::NonArtinianIdeal)?;

    let mut reduced: Vec<(u32, BiPoly)> = Vec::new();
    for g in gens {
        if g.homogeneous_degree().is_none() {
            return Err(ModuleError::GeneratorNotHomogeneous(g.to_string()));
        }
        let nf = gb.normal_form(g);
        if !nf.is_zero() {
            reduced.push((nf.homogeneous_degree().expect("nonzero homogeneous"), nf));
        }
    }
    if reduced.is_empty() {
        return Err(ModuleError::AllGeneratorsVanish);
    }

    let d_min = reduced.iter().map(|(d, _)| *d).min().unwrap();
    let mut bases: Vec<Vec<BiPoly>> = Vec::new();
    let mut coord_rows: Vec<Vec<Vec<Scalar>>> = Vec::new();
    for d in d_min..top {
        let std_mons = gb.standard_monomials(d);
        let mut acc = SpanAccumulator::new(field, std_mons.len());
        let mut basis = Vec::new();
        let mut rows = Vec::new();
        let mut candidates: Vec<BiPoly> = Vec::new();
        if let Some(prev) = bases.last() {
            for var in [Monomial::new(1, 0), Monomial::new(0, 1)] {
                for p in prev {
                    candidates.push(gb.normal_form(&p.mul_term(&var, &field.one())));
                }
            }
        }
        candidates.extend(
            reduced
                .iter()
                .filter(|(gd, _)| *gd == d)
                .map(|(_, g)| g.clone()),
        );
        for c in candidates {
            if c.is_zero() {
                continue;
            }
            let v: Vec<Scalar> = std_mons.iter().map(|m| c.coeff(m)).collect();
            if acc.try_insert(&v) {
                basis.push(c);
                rows.push(v);
            }
        }
        bases.push(basis);
        coord_rows.push(rows);
    }

    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut mul_x = Vec::new();
    let mut mul_y = Vec::new();
    for i in 0..bases.len().saturating_sub(1) {
        let next = columns_matrix(
            field,
            gb.standard_monomials(d_min + i as u32 + 1).len(),
            &coord_rows[i + 1],
        );
        let std_next = gb.standard_monomials(d_min + i as u32 + 1);
        let build = |var: Monomial| -> Matrix {
            let cols: Vec<Vec<Scalar>> = bases[i]
                .iter()
                .map(|p| {
                    let img = gb.normal_form(&p.mul_term(&var, &field.one()));
                    let v: Vec<Scalar> = std_next.iter().map(|m| img.coeff(m)).collect();
                    solve_column(&next, &v).expect("closure keeps images inside the span")
                })
                .collect();
            columns_matrix(field, dims[i + 1], &cols)
        };
        mul_x.push(build(Monomial::new(1, 0)));
        mul_y.push(build(Monomial::new(0, 1)));
    }

    let labels = Some(bases[0].iter().map(BiPoly::to_string).collect());
    let m = GradedModule::new(field, d_min as i64, dims, mul_x, mul_y, labels)?;
    Ok(m.trimmed())
}

/// Direct sum with components matched by actual degree (shift-aware);
/// multiplication matrices are block-diagonal.
pub fn direct_sum(parts: &[GradedModule]) -> Result<GradedModule, ModuleError> {
    let field = parts.first().ok_or(ModuleError::EmptySum)?.field();
    if parts.iter().any(|p| p.field() != field) {
        return Err(ModuleError::FieldMismatch);
    }
    let live: Vec<&GradedModule> = parts.iter().filter(|p| !p.is_empty()).collect();
    if live.is_empty() {
        return Ok(GradedModule::zero(field));
    }
    let shift = live.iter().map(|p| p.shift).min().unwrap();
    let end = live.iter().map(|p| p.shift + p.len() as i64).max().unwrap();
    let len = (end - shift) as usize;

    let part_dim = |p: &GradedModule, gi: usize| -> usize {
        let local = shift + gi as i64 - p.shift;
        if local < 0 || local as usize >= p.len() {
            0
        } else {
            p.dims[local as usize]
        }
    };
    let dims: Vec<usize> = (0..len)
        .map(|gi| live.iter().map(|p| part_dim(p, gi)).sum())
        .collect();

    let mut mul_x = Vec::new();
    let mut mul_y = Vec::new();
    for gi in 0..len.saturating_sub(1) {
        let mut mx = Matrix::zero(field, dims[gi + 1], dims[gi]);
        let mut my = Matrix::zero(field, dims[gi + 1], dims[gi]);
        let mut row_off = 0;
        let mut col_off = 0;
        for p in &live {
            let (src, dst) = (part_dim(p, gi), part_dim(p, gi + 1));
            let local = (shift + gi as i64 - p.shift) as isize;
            if src > 0 && dst > 0 {
                let li = local as usize;
                for r in 0..dst {
                    for c in 0..src {
                        mx.set(row_off + r, col_off + c, p.mul_x[li].get(r, c).clone());
                        my.set(row_off + r, col_off + c, p.mul_y[li].get(r, c).clone());
                    }
                }
            }
            row_off += dst;
            col_off += src;
        }
        mul_x.push(mx);
        mul_y.push(my);
    }

    // concatenated labels only make sense when every part starts at the
    // global starting degree and is itself labelled
    let labels = live
        .iter()
        .map(|p| {
            if p.shift == shift {
                p.labels.clone()
            } else {
                None
            }
        })
        .collect::<Option<Vec<_>>>()
        .map(|ls| ls.concat());

    GradedModule::new(field, shift, dims, mul_x, mul_y, labels)
}

/// Incremental row-space accumulator for greedy basis extraction.
struct SpanAccumulator {
    ambient: usize,
    rows: Vec<(usize, Vec<Scalar>)>, // (pivot, normalized row)
}

impl SpanAccumulator {
    fn new(_field: FieldSpec, ambient: usize) -> SpanAccumulator {
        SpanAccumulator {
            ambient,
            rows: Vec::new(),
        }
    }

    /// Returns true (and absorbs the vector) when it enlarges the span.
    fn try_insert(&mut self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let f = v[*pivot].clone();
            if !f.is_zero() {
                for c in 0..self.ambient {
                    v[c] = &v[c] - &(&f * &row[c]);
                }
            }
        }
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        for c in &mut v {
            *c = &inv * c;
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }
}

fn columns_matrix(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
    let mut m = Matrix::zero(field, rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        debug_assert_eq!(col.len(), rows);
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m
}

/// Express the ambient images of sub-basis vectors in the next component's
/// sub-basis (columns of `next_inclusion`).
fn induced_map(ambient_mul: &Matrix, basis: &[Vec<Scalar>], next_inclusion: &Matrix) -> Matrix {
    let cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|v| {
            let w = ambient_mul.mul_vec(v);
            solve_column(next_inclusion, &w).expect("closure keeps images inside the span")
        })
        .collect();
    columns_matrix(ambient_mul.field(), next_inclusion.cols(), &cols)
}
