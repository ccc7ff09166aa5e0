//! Deciders for the weak Lefschetz property.
//!
//! Three independent routes are implemented for a two-component pair:
//!
//! * [`kernel_quotient_check`]: the reduction loop. Injectivity of `x`
//!   or `y` concludes positively; a common kernel vector or overlapping
//!   kernel images conclude negatively; otherwise pass to the quotient by
//!   the submodule the kernels generate and recurse.
//! * [`determinant_method`]: for square pairs generated in degree 0. Search
//!   for an independent set `{z_1 e_1, ..., z_n e_n}` with `z_i` a variable,
//!   change basis so the multiplication matrices take block form, and test
//!   whether `det(g*A + B)` vanishes identically.
//! * [`pencil_oracle`]: compares the generic rank of the pencil of the two
//!   multiplication matrices against the required rank. Shares no decision
//!   logic with the other two.
//!
//! [`has_wlp`] runs a full module degree by degree, dualizing decreasing
//! pairs so every check is an injectivity check, and ships a witness linear
//! form verified by direct rank computation.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{pencil_generic_rank, polydet, solve_column, Matrix, Subspace, UniPoly};
use crate::module::{direct_sum, GradedModule};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum WlpError {
    #[error("expected a module concentrated in two consecutive degrees, got {0} components")]
    NotTwoComponents(usize),
    #[error("pair has decreasing dimensions ({0},{1}); dualize before calling")]
    DecreasingPair(usize, usize),
    #[error("determinant method needs dimensions (n,n) with n >= 1, got ({0},{1}); use the algorithm method")]
    PairNotSquare(usize, usize),
    #[error("determinant method needs a pair minimally generated in degree 0; use the algorithm method")]
    NotDegreeZeroGenerated,
}

/// One of the two ring variables, used as a generator multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::Y => write!(f, "y"),
        }
    }
}

/// A linear form `a*x + b*y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub x_coeff: Scalar,
    pub y_coeff: Scalar,
}

impl LinearForm {
    pub fn new(x_coeff: Scalar, y_coeff: Scalar) -> LinearForm {
        LinearForm { x_coeff, y_coeff }
    }

    pub fn pure_x(field: FieldSpec) -> LinearForm {
        LinearForm::new(field.one(), field.zero())
    }

    pub fn pure_y(field: FieldSpec) -> LinearForm {
        LinearForm::new(field.zero(), field.one())
    }

    pub fn is_mixed(&self) -> bool {
        !self.x_coeff.is_zero() && !self.y_coeff.is_zero()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |f: &mut fmt::Formatter<'_>, c: &Scalar, v: char| {
            if c.is_one() {
                write!(f, "{v}")
            } else {
                write!(f, "{c}*{v}")
            }
        };
        match (self.x_coeff.is_zero(), self.y_coeff.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => term(f, &self.x_coeff, 'x'),
            (true, false) => term(f, &self.y_coeff, 'y'),
            (false, false) => {
                term(f, &self.x_coeff, 'x')?;
                write!(f, " + ")?;
                term(f, &self.y_coeff, 'y')
            }
        }
    }
}

/// Which decision procedure to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Algorithm,
    Determinant,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Auto => "auto",
            Method::Algorithm => "algorithm",
            Method::Determinant => "determinant",
            Method::Oracle => "oracle",
        };
        write!(f, "{s}")
    }
}

/// Verdict data for one degree transition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    /// Actual degree (shift-aware) of the source component.
    pub degree: i64,
    pub required_rank: usize,
    pub generic_rank: usize,
    pub method: Method,
}

impl DegreeCheck {
    pub fn passes(&self) -> bool {
        self.generic_rank == self.required_rank
    }
}

/// One step of a decision trace.
#[derive(Debug, Clone, PartialEq)]
pub enum TraceStep {
    /// Kernel of multiplication by a variable; empty kernel means injective.
    InjectionCheck { var: Var, kernel: Subspace },
    /// Intersection of the two kernels.
    KernelMeet { meet: Subspace },
    /// Intersection `y*Ker(x) meet x*Ker(y)` of the kernel images.
    ImageMeet { meet: Subspace },
    /// Pass to the quotient by the submodule the kernels generate; each
    /// component drops by `removed`.
    QuotientStep { removed: usize, dims: (usize, usize) },
    /// The pair was replaced by its dual to turn surjectivity into
    /// injectivity.
    Dualize,
    /// Exhaustive search for independent one-variable multiples of the
    /// generators.
    MultiplierSearch { assignment: Option<Vec<Var>> },
    /// Block-form matrices and the pencil determinant certificate.
    DeterminantStep {
        mat_x: Matrix,
        mat_y: Matrix,
        p: UniPoly,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceEntry {
    /// Actual degree of the pair the step ran on.
    pub degree: i64,
    pub step: TraceStep,
}

/// Full decision report: verdict, witness, per-degree rank table, trace.
#[derive(Debug, Clone, PartialEq)]
pub struct WlpReport {
    pub verdict: bool,
    pub witness: Option<LinearForm>,
    /// Set over finite fields: the steps compute the generic (Zariski-open)
    /// answer, but a witness need not exist among the finitely many linear
    /// forms, so treat the verdict as the answer over an infinite extension.
    pub finite_field_caveat: bool,
    pub per_degree: Vec<DegreeCheck>,
    pub trace: Vec<TraceEntry>,
}

impl WlpReport {
    fn new(field: FieldSpec, verdict: bool) -> WlpReport {
        WlpReport {
            verdict,
            witness: None,
            finite_field_caveat: field.is_finite(),
            per_degree: Vec::new(),
            trace: Vec::new(),
        }
    }
}

fn require_pair(pair: &GradedModule) -> Result<(usize, usize), WlpError> {
    match pair.dims() {
        [h0, h1] => Ok((*h0, *h1)),
        dims => Err(WlpError::NotTwoComponents(dims.len())),
    }
}

/// True when the module needs a minimal generator in internal degree 1,
/// i.e. `S_1 * M_0` does not span `M_1`. For a square pair this obstructs
/// the weak Lefschetz property outright: the image of any linear form is
/// too small to be injective or surjective.
pub fn has_degree_one_generator(m: &GradedModule) -> bool {
    m.minimal_generator_degrees()
        .iter()
        .any(|(degree, count)| *degree == 1 && *count > 0)
}

/// Exhaustive search over the `2^n` assignments of a variable to each
/// degree-0 basis element, looking for `{z_1 e_1, ..., z_n e_n}` linearly
/// independent in the degree-1 component. Assignments are tried in
/// lexicographic order with `x < y`, and the first hit is returned.
///
/// A failed search proves the pair has no weak Lefschetz property when
/// `h_0 <= h_1` (for any fixed minimal generating set, independence of some
/// assignment is necessary).
pub fn search_independent_multipliers(
    pair: &GradedModule,
) -> Result<Option<Vec<Var>>, WlpError> {
    let (h0, _) = require_pair(pair)?;
    if has_degree_one_generator(pair) {
        return Err(WlpError::NotDegreeZeroGenerated);
    }
    let n = h0;
    assert!(n < 32, "assignment search is exponential in the generator count");
    let a = pair.mul_x(0);
    let b = pair.mul_y(0);
    for mask in 0u64..(1u64 << n) {
        let assignment: Vec<Var> = (0..n)
            .map(|i| {
                if mask >> (n - 1 - i) & 1 == 0 {
                    Var::X
                } else {
                    Var::Y
                }
            })
            .collect();
        let cols: Vec<Vec<Scalar>> = assignment
            .iter()
            .enumerate()
            .map(|(i, z)| match z {
                Var::X => a.col(i),
                Var::Y => b.col(i),
            })
            .collect();
        let m = Matrix::from_rows(pair.field(), cols).expect("equal column heights");
        if m.rank() == n {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// The determinant method for a pair with dimensions `(n, n)` minimally
/// generated in degree 0.
///
/// If multiplication by `x` or by `y` is already bijective the verdict is
/// positive with that pure witness. Otherwise a successful multiplier
/// search reorders the generators so the `x`-assigned ones come first and
/// rewrites the degree-1 component in the basis
/// `{x e_1, ..., x e_r, y e_{r+1}, ..., y e_n}`; in that basis `A` has an
/// identity block on top and `B` one on the bottom, and the pair has the
/// weak Lefschetz property iff `p(g) = det(g*A + B)` is not identically
/// zero. The returned polynomial is that certificate; when it is nonzero
/// the witness is `t*x + y` for the smallest nonnegative integer `t` with
/// `p(t) != 0`.
pub fn determinant_method(pair: &GradedModule) -> Result<(WlpReport, UniPoly), WlpError> {
    let (h0, h1) = require_pair(pair)?;
    if h0 != h1 || h0 == 0 {
        return Err(WlpError::PairNotSquare(h0, h1));
    }
    if has_degree_one_generator(pair) {
        return Err(WlpError::NotDegreeZeroGenerated);
    }
    let n = h0;
    let field = pair.field();
    let a = pair.mul_x(0);
    let b = pair.mul_y(0);
    let mut report = WlpReport::new(field, false);

    for (mat, var) in [(a, Var::X), (b, Var::Y)] {
        let kernel = mat.kernel_basis();
        let injective = kernel.is_zero();
        report.trace.push(TraceEntry {
            degree: pair.shift(),
            step: TraceStep::InjectionCheck { var, kernel },
        });
        if injective {
            report.verdict = true;
            report.witness = Some(match var {
                Var::X => LinearForm::pure_x(field),
                Var::Y => LinearForm::pure_y(field),
            });
            let p = polydet(a, b).expect("square pair");
            finish_pair_report(&mut report, pair, Method::Determinant);
            return Ok((report, p));
        }
    }

    let assignment = search_independent_multipliers(pair)?;
    report.trace.push(TraceEntry {
        degree: pair.shift(),
        step: TraceStep::MultiplierSearch {
            assignment: assignment.clone(),
        },
    });
    let Some(assignment) = assignment else {
        // no independent set of one-variable multiples exists, so no linear
        // form can be injective
        let p = polydet(a, b).expect("square pair");
        debug_assert!(p.is_zero());
        finish_pair_report(&mut report, pair, Method::Determinant);
        return Ok((report, p));
    };

    // reorder generators: x-assigned first, then y-assigned (stable)
    let order: Vec<usize> = assignment
        .iter()
        .enumerate()
        .filter(|(_, z)| **z == Var::X)
        .chain(assignment.iter().enumerate().filter(|(_, z)| **z == Var::Y))
        .map(|(i, _)| i)
        .collect();
    // new degree-1 basis: the assigned columns, in the new generator order
    let basis_cols: Vec<Vec<Scalar>> = order
        .iter()
        .map(|&i| match assignment[i] {
            Var::X => a.col(i),
            Var::Y => b.col(i),
        })
        .collect();
    let u = columns(field, h1, &basis_cols);
    let change = |mat: &Matrix| -> Matrix {
        let cols: Vec<Vec<Scalar>> = order
            .iter()
            .map(|&i| solve_column(&u, &mat.col(i)).expect("u is invertible"))
            .collect();
        columns(field, n, &cols)
    };
    let mat_x = change(a);
    let mat_y = change(b);
    let p = polydet(&mat_x, &mat_y).expect("square pair");
    report.trace.push(TraceEntry {
        degree: pair.shift(),
        step: TraceStep::DeterminantStep {
            mat_x,
            mat_y,
            p: p.clone(),
        },
    });

    if !p.is_zero() {
        report.verdict = true;
        report.witness = p
            .smallest_nonroot()
            .map(|t| LinearForm::new(t, field.one()));
    }
    finish_pair_report(&mut report, pair, Method::Determinant);
    Ok((report, p))
}

/// Outcome of one cycle of the kernel-quotient reduction.
#[derive(Debug, Clone, PartialEq)]
pub enum ReductionOutcome {
    /// `Ker(x) = 0`: the pair has the property with witness `x`.
    InjectiveX,
    /// `Ker(y) = 0`: witness `y`.
    InjectiveY,
    /// A vector killed by both variables; no linear form is injective.
    CommonKernel(Subspace),
    /// `y*Ker(x)` meets `x*Ker(y)`: the images of the kernels collapse and
    /// no linear form is injective.
    OverlappingImages(Subspace),
    /// All four tests passed; the verdict equals the verdict for the
    /// quotient by the submodule generated by both kernels.
    Reduced {
        quotient: GradedModule,
        removed: usize,
    },
}

/// Run one reduction cycle on a non-decreasing pair.
pub fn reduction_step(pair: &GradedModule) -> Result<ReductionOutcome, WlpError> {
    Ok(reduce_with_trace(pair)?.0)
}

fn reduce_with_trace(
    pair: &GradedModule,
) -> Result<(ReductionOutcome, Vec<TraceStep>), WlpError> {
    let (h0, h1) = require_pair(pair)?;
    if h0 > h1 {
        return Err(WlpError::DecreasingPair(h0, h1));
    }
    let a = pair.mul_x(0);
    let b = pair.mul_y(0);
    let mut steps = Vec::new();

    let ker_x = a.kernel_basis();
    steps.push(TraceStep::InjectionCheck {
        var: Var::X,
        kernel: ker_x.clone(),
    });
    if ker_x.is_zero() {
        return Ok((ReductionOutcome::InjectiveX, steps));
    }
    let ker_y = b.kernel_basis();
    steps.push(TraceStep::InjectionCheck {
        var: Var::Y,
        kernel: ker_y.clone(),
    });
    if ker_y.is_zero() {
        return Ok((ReductionOutcome::InjectiveY, steps));
    }

    let meet = ker_x.meet(&ker_y).expect("same component");
    steps.push(TraceStep::KernelMeet { meet: meet.clone() });
    if !meet.is_zero() {
        return Ok((ReductionOutcome::CommonKernel(meet), steps));
    }

    let y_ker_x = ker_x.image_under(b);
    let x_ker_y = ker_y.image_under(a);
    let image_meet = y_ker_x.meet(&x_ker_y).expect("same component");
    steps.push(TraceStep::ImageMeet {
        meet: image_meet.clone(),
    });
    if !image_meet.is_zero() {
        return Ok((ReductionOutcome::OverlappingImages(image_meet), steps));
    }

    let removed = ker_x.dim() + ker_y.dim();
    let seeds: Vec<(usize, Vec<Scalar>)> = (0..ker_x.dim())
        .map(|i| (0, ker_x.basis().row(i).to_vec()))
        .chain((0..ker_y.dim()).map(|i| (0, ker_y.basis().row(i).to_vec())))
        .collect();
    let sub = pair
        .submodule_generated(&seeds)
        .expect("kernel seeds live in component 0");
    let quotient = pair.quotient(&sub).expect("kernel submodule is closed");
    steps.push(TraceStep::QuotientStep {
        removed,
        dims: (h0 - removed, h1 - removed),
    });
    Ok((ReductionOutcome::Reduced { quotient, removed }, steps))
}

/// The kernel-quotient decision procedure for a pair with `h_0 <= h_1`.
///
/// Positive verdicts from the injectivity tests carry the pure witness; a
/// positive verdict reached through quotients carries a mixed witness
/// `t*x + y` found by direct rank search on the original pair (pure
/// witnesses cannot lift once both kernels were nonzero).
pub fn kernel_quotient_check(pair: &GradedModule) -> Result<WlpReport, WlpError> {
    require_pair(pair)?;
    let field = pair.field();
    let (outcome, steps) = reduce_with_trace(pair)?;
    let mut report = WlpReport::new(field, false);
    report.trace = steps
        .into_iter()
        .map(|step| TraceEntry {
            degree: pair.shift(),
            step,
        })
        .collect();

    match outcome {
        ReductionOutcome::InjectiveX => {
            report.verdict = true;
            report.witness = Some(LinearForm::pure_x(field));
        }
        ReductionOutcome::InjectiveY => {
            report.verdict = true;
            report.witness = Some(LinearForm::pure_y(field));
        }
        ReductionOutcome::CommonKernel(_) | ReductionOutcome::OverlappingImages(_) => {}
        ReductionOutcome::Reduced { quotient, .. } => {
            let inner_verdict = if quotient.len() < 2 {
                // at most one component left: every map is to or from zero
                true
            } else {
                let inner = kernel_quotient_check(&quotient)?;
                report.trace.extend(inner.trace);
                if inner.verdict {
                    if let Some(w) = &inner.witness {
                        if w.is_mixed() {
                            report.witness = Some(w.clone());
                        }
                    }
                }
                inner.verdict
            };
            report.verdict = inner_verdict;
            if report.verdict && report.witness.is_none() {
                // upgrade to a mixed witness on the original pair; pure
                // forms are ruled out here because both kernels were nonzero
                report.witness = mixed_witness_search(pair);
                debug_assert!(
                    report.witness.is_some() || field.is_finite(),
                    "a mixed witness exists over the rationals"
                );
            }
        }
    }
    if !report.verdict {
        report.witness = None;
    }
    finish_pair_report(&mut report, pair, Method::Algorithm);
    Ok(report)
}

/// Smallest positive integer `t` such that `t*x + y` achieves the required
/// rank on the pair, if any exists within the root bound.
fn mixed_witness_search(pair: &GradedModule) -> Option<LinearForm> {
    let (h0, h1) = (pair.dims()[0], pair.dims()[1]);
    let required = h0.min(h1);
    let field = pair.field();
    let limit = match field {
        FieldSpec::Rationals => required as u64 + 1,
        FieldSpec::Prime(p) => (p - 1).min(required as u64 + 1),
    };
    for t in 1..=limit {
        let s = Scalar::from_integer(field, t as i64);
        if pair.mul_x(0).pencil_at(pair.mul_y(0), &s, &field.one()).rank() == required {
            return Some(LinearForm::new(s, field.one()));
        }
    }
    None
}

/// The independent oracle: the pair has the property iff the generic rank
/// of the matrix pencil equals the required rank. The pure specializations
/// are folded in to cover the `(1:0)` point of the pencil.
pub fn pencil_oracle(pair: &GradedModule) -> Result<WlpReport, WlpError> {
    let (h0, h1) = require_pair(pair)?;
    let field = pair.field();
    let a = pair.mul_x(0);
    let b = pair.mul_y(0);
    let required = h0.min(h1);
    let generic = pencil_generic_rank(a, b).expect("same shape");
    let generic = generic.max(a.rank()).max(b.rank());
    let mut report = WlpReport::new(field, generic == required);
    if report.verdict {
        report.witness = witness_by_rank_search(pair);
    }
    report.per_degree.push(DegreeCheck {
        degree: pair.shift(),
        required_rank: required,
        generic_rank: generic,
        method: Method::Oracle,
    });
    Ok(report)
}

fn finish_pair_report(report: &mut WlpReport, pair: &GradedModule, method: Method) {
    let (h0, h1) = (pair.dims()[0], pair.dims()[1]);
    let generic = pencil_generic_rank(pair.mul_x(0), pair.mul_y(0))
        .expect("same shape")
        .max(pair.mul_x(0).rank())
        .max(pair.mul_y(0).rank());
    let check = DegreeCheck {
        degree: pair.shift(),
        required_rank: h0.min(h1),
        generic_rank: generic,
        method,
    };
    debug_assert_eq!(report.verdict, check.passes(), "verdict matches pencil rank");
    report.per_degree.push(check);
}

/// Verify that a linear form achieves maximal rank at every degree.
pub fn verify_witness(m: &GradedModule, form: &LinearForm) -> bool {
    (0..m.len().saturating_sub(1)).all(|i| {
        let required = m.dims()[i].min(m.dims()[i + 1]);
        m.mul_x(i)
            .pencil_at(m.mul_y(i), &form.x_coeff, &form.y_coeff)
            .rank()
            == required
    })
}

/// Witness search for a full module: the smallest nonnegative integer `t`
/// with `t*x + y` of maximal rank everywhere (so `t = 0` proposes `y`),
/// then `x` on its own. The bound `1 + sum of required ranks` dominates the
/// number of integers any nonzero collection of maximal minors can exclude.
fn witness_by_rank_search(m: &GradedModule) -> Option<LinearForm> {
    let field = m.field();
    let bound: usize = 1 + (0..m.len().saturating_sub(1))
        .map(|i| m.dims()[i].min(m.dims()[i + 1]))
        .sum::<usize>();
    let limit = match field {
        FieldSpec::Rationals => bound as u64,
        FieldSpec::Prime(p) => (p - 1).min(bound as u64),
    };
    for t in 0..=limit {
        let form = LinearForm::new(Scalar::from_integer(field, t as i64), field.one());
        if verify_witness(m, &form) {
            return Some(form);
        }
    }
    let x = LinearForm::pure_x(field);
    verify_witness(m, &x).then_some(x)
}

/// Decide the weak Lefschetz property of a finite graded module.
///
/// Each consecutive degree pair is checked after dualizing when the
/// dimensions decrease, so surjectivity is always tested as injectivity of
/// the transposed maps. `Auto` runs the kernel-quotient algorithm (and
/// cross-checks the pencil oracle in debug builds); `Determinant` is only
/// legal when every pair is square and degree-0 generated, and fails loudly
/// otherwise rather than switching silently.
pub fn has_wlp(m: &GradedModule, method: Method) -> Result<WlpReport, WlpError> {
    let field = m.field();
    let mut report = WlpReport::new(field, true);
    for i in 0..m.len().saturating_sub(1) {
        let degree = m.shift() + i as i64;
        let pair = m.degree_pair(i).expect("index in range");
        let dualized = m.dims()[i] > m.dims()[i + 1];
        let work = if dualized {
            report.trace.push(TraceEntry {
                degree,
                step: TraceStep::Dualize,
            });
            pair.dual()
        } else {
            pair
        };
        let pair_report = match method {
            Method::Auto => {
                let rep = kernel_quotient_check(&work)?;
                #[cfg(debug_assertions)]
                {
                    let oracle = pencil_oracle(&work)?;
                    debug_assert_eq!(rep.verdict, oracle.verdict, "oracle cross-check");
                }
                rep
            }
            Method::Algorithm => kernel_quotient_check(&work)?,
            Method::Determinant => determinant_method(&work)?.0,
            Method::Oracle => pencil_oracle(&work)?,
        };
        report.verdict &= pair_report.verdict;
        report
            .trace
            .extend(pair_report.trace.into_iter().map(|mut e| {
                e.degree = degree;
                e
            }));
        for mut check in pair_report.per_degree {
            check.degree = degree;
            report.per_degree.push(check);
        }
    }
    if report.verdict {
        report.witness = witness_by_rank_search(m);
        debug_assert!(
            report.witness.is_some() || field.is_finite(),
            "witness exists over the rationals whenever the verdict is positive"
        );
    }
    Ok(report)
}

/// Per-degree growth behavior of a Hilbert function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Behavior {
    Increase,
    Decrease,
    FlatOrAbsent,
}

/// Direct-sum analysis: the sum has the property iff every part does and no
/// degree sees one part's Hilbert function strictly increase while
/// another's strictly decreases (an injectivity requirement against a
/// surjectivity requirement).
#[derive(Debug, Clone)]
pub struct DirectSumAnalysis {
    pub sum_verdict: bool,
    pub part_reports: Vec<WlpReport>,
    /// Degrees `d` where the `d -> d+1` transitions of two parts conflict.
    pub behavior_conflicts: Vec<i64>,
}

pub fn direct_sum_analysis(parts: &[GradedModule]) -> Result<DirectSumAnalysis, WlpError> {
    let mut part_reports = Vec::with_capacity(parts.len());
    for p in parts {
        part_reports.push(has_wlp(p, Method::Auto)?);
    }

    let live: Vec<&GradedModule> = parts.iter().filter(|p| !p.is_zero()).collect();
    let mut conflicts = Vec::new();
    if !live.is_empty() {
        let lo = live.iter().map(|p| p.shift()).min().unwrap();
        let hi = live
            .iter()
            .map(|p| p.shift() + p.len() as i64)
            .max()
            .unwrap();
        for d in lo..hi {
            let dim_at = |p: &GradedModule, deg: i64| -> usize {
                let local = deg - p.shift();
                if local < 0 || local as usize >= p.len() {
                    0
                } else {
                    p.dims()[local as usize]
                }
            };
            let behaviors: Vec<Behavior> = live
                .iter()
                .map(|p| {
                    let (a, b) = (dim_at(p, d), dim_at(p, d + 1));
                    match a.cmp(&b) {
                        std::cmp::Ordering::Less => Behavior::Increase,
                        std::cmp::Ordering::Greater => Behavior::Decrease,
                        std::cmp::Ordering::Equal => Behavior::FlatOrAbsent,
                    }
                })
                .collect();
            if behaviors.contains(&Behavior::Increase) && behaviors.contains(&Behavior::Decrease)
            {
                conflicts.push(d);
            }
        }
    }

    Ok(DirectSumAnalysis {
        sum_verdict: part_reports.iter().all(|r| r.verdict) && conflicts.is_empty(),
        part_reports,
        behavior_conflicts: conflicts,
    })
}

/// Consistency entry point used by property tests: the analysis verdict
/// must equal the verdict for the assembled sum.
pub fn direct_sum_verdicts_agree(parts: &[GradedModule]) -> Result<bool, WlpError> {
    let analysis = direct_sum_analysis(parts)?;
    let sum = direct_sum(parts).expect("same field");
    let direct = has_wlp(&sum, Method::Auto)?;
    Ok(analysis.sum_verdict == direct.verdict)
}

fn columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
    let mut m = Matrix::zero(field, rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m
}
