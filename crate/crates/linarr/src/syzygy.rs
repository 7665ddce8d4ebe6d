//! Jacobian syzygies of the defining polynomial of a line arrangement.
//!
//! For f the product of the arrangement's linear forms, this module works
//! with the graded module of triples (a, b, c) of homogeneous polynomials
//! satisfying a f_x + b f_y + c f_z = 0. Graded pieces are kernels of exact
//! integer coefficient matrices (rows indexed by monomials of the target
//! degree, columns by the three blocks of source monomials), so every
//! dimension below is exact.
//!
//! The minimal generator degrees are found degree by degree: in each degree
//! r the span of x, y, z times a basis of the previous graded piece is
//! compared against the full graded piece, and the dimension gap is the
//! number of new generators. The Milnor algebra Hilbert function and the
//! total Tjurina number fall out of the same dimension data by rank-nullity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{monomial_count, monomial_index, monomials, Exponents, HomPoly};
use crate::rational::Rat;

/// Syzygy and Hilbert data of one arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyAnalysis {
    pub d: usize,
    /// Minimal degree of a nontrivial Jacobian relation.
    pub mdr: usize,
    /// Dimension of the degree-r piece of the syzygy module, for r up to
    /// the generator search cap.
    pub ar_dims: BTreeMap<usize, usize>,
    /// Sorted degrees of a minimal generating set (the exponents).
    pub gen_degrees: Vec<usize>,
    /// Hilbert function of the Milnor algebra for degrees up to 3d-2.
    pub milnor_dims: BTreeMap<usize, usize>,
    /// Total Tjurina number: the stabilized Milnor dimension.
    pub tau: usize,
}

/// The defining polynomial: product of the canonical linear forms.
pub fn defining_polynomial(a: &Arrangement) -> HomPoly {
    let mut f = HomPoly::monomial([0, 0, 0], crate::rational::rat(1));
    for line in a.lines() {
        let coeffs: [Rat; 3] = [
            Rat::from_integer(line.coeffs()[0].clone()),
            Rat::from_integer(line.coeffs()[1].clone()),
            Rat::from_integer(line.coeffs()[2].clone()),
        ];
        f = f.mul(&HomPoly::linear(&coeffs));
    }
    f
}

/// The three partial derivatives (f_x, f_y, f_z).
pub fn partials(f: &HomPoly) -> [HomPoly; 3] {
    [f.partial(0), f.partial(1), f.partial(2)]
}

/// Partial-derivative term lists with denominators cleared by one global
/// scaling, which changes neither the rank nor the kernel of the maps below.
type ScaledPartials = [Vec<(Exponents, BigInt)>; 3];

fn scaled_partials(f: &HomPoly) -> ScaledPartials {
    let parts = partials(f);
    let mut denom_lcm = BigInt::one();
    for p in &parts {
        for (_, c) in p.terms() {
            denom_lcm = num_integer::Integer::lcm(&denom_lcm, c.denom());
        }
    }
    parts.map(|p| {
        p.terms()
            .map(|(e, c)| (*e, c.numer() * (&denom_lcm / c.denom())))
            .collect()
    })
}

/// One row of the transposed degree-r Jacobian map: the coefficients of
/// m * f_axis over the monomials of degree r + d - 1 in reverse
/// lexicographic position (so leading terms sit far left and reduction
/// chains stay short), optionally followed by a unit suffix that tracks the
/// row combination.
#[allow(clippy::too_many_arguments)]
fn transpose_row(
    scaled: &ScaledPartials,
    d: usize,
    r: usize,
    axis: usize,
    m: &Exponents,
    n_target: usize,
    total: usize,
    suffix_pos: Option<usize>,
) -> Vec<BigInt> {
    let target_deg = r + d - 1;
    let mut row = vec![BigInt::ZERO; total];
    for (e, c) in &scaled[axis] {
        let t = [e[0] + m[0], e[1] + m[1], e[2] + m[2]];
        row[n_target - 1 - monomial_index(target_deg, &t)] = c.clone();
    }
    if let Some(pos) = suffix_pos {
        row[n_target + pos] = BigInt::one();
    }
    row
}

/// Rank of the degree-r Jacobian map, restricted to the given source pairs
/// (all of them when `kept` is None).
fn jacobian_rank(scaled: &ScaledPartials, d: usize, r: usize, kept: Option<&[usize]>) -> usize {
    let src = monomials(r);
    let dim = src.len();
    let n_target = monomial_count(r + d - 1);
    let all: Vec<usize>;
    let pairs: &[usize] = match kept {
        Some(k) => k,
        None => {
            all = (0..3 * dim).collect();
            &all
        }
    };
    linalg::online_reduce(
        pairs.len(),
        n_target,
        n_target,
        |i| {
            let p = pairs[i];
            transpose_row(scaled, d, r, p / dim, &src[p % dim], n_target, n_target, None)
        },
        false,
    )
    .rank
}

/// Kernel of the degree-r Jacobian map restricted to the given source
/// pairs, as primitive integer vectors over the full source coordinates
/// (zero on the omitted pairs).
fn jacobian_kernel(
    scaled: &ScaledPartials,
    d: usize,
    r: usize,
    kept: Option<&[usize]>,
) -> Vec<Vec<BigInt>> {
    let src = monomials(r);
    let dim = src.len();
    let n_target = monomial_count(r + d - 1);
    let all: Vec<usize>;
    let pairs: &[usize] = match kept {
        Some(k) => k,
        None => {
            all = (0..3 * dim).collect();
            &all
        }
    };
    let total = n_target + pairs.len();
    let result = linalg::online_reduce(
        pairs.len(),
        n_target,
        total,
        |i| {
            let p = pairs[i];
            transpose_row(scaled, d, r, p / dim, &src[p % dim], n_target, total, Some(i))
        },
        false,
    );
    result
        .kernels
        .into_iter()
        .map(|suffix| {
            let mut v = vec![BigInt::ZERO; 3 * dim];
            for (i, c) in suffix.into_iter().enumerate() {
                v[pairs[i]] = c;
            }
            v
        })
        .collect()
}

/// Dimension of the degree-r piece of the syzygy module.
pub fn ar_dimension(f: &HomPoly, r: usize) -> usize {
    let scaled = scaled_partials(f);
    3 * monomial_count(r) - jacobian_rank(&scaled, f.degree(), r, None)
}

/// A basis of the degree-r syzygies as polynomial triples; each returned
/// triple (a, b, c) satisfies a f_x + b f_y + c f_z = 0 exactly.
pub fn ar_basis(f: &HomPoly, r: usize) -> Vec<[HomPoly; 3]> {
    let scaled = scaled_partials(f);
    let src = monomials(r);
    jacobian_kernel(&scaled, f.degree(), r, None)
        .into_iter()
        .map(|v| {
            [0, 1, 2].map(|axis| {
                let mut p = HomPoly::zero(r);
                for (m_idx, m) in src.iter().enumerate() {
                    let c = &v[axis * src.len() + m_idx];
                    if !num_traits::Zero::is_zero(c) {
                        p = p.add(&HomPoly::monomial(*m, Rat::from_integer(c.clone())));
                    }
                }
                p
            })
        })
        .collect()
}

/// Minimal degree r with a nonzero degree-r syzygy; at most d - 1 for the
/// reduced polynomials produced by arrangements.
pub fn mdr(f: &HomPoly) -> Result<usize> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Precondition("mdr needs degree >= 2".into()));
    }
    for r in 0..d {
        if ar_dimension(f, r) > 0 {
            return Ok(r);
        }
    }
    Err(Error::Inconsistent(format!(
        "no Jacobian syzygy found through degree {}; input may not be reduced",
        d - 1
    )))
}

/// Shift every basis vector of the degree-(r-1) piece by x, y and z into
/// degree-r coordinates.
fn shifted_vectors(kernel: &[Vec<BigInt>], r_from: usize, r_to: usize) -> Vec<Vec<BigInt>> {
    debug_assert_eq!(r_to, r_from + 1);
    let src = monomials(r_from);
    let src_dim = src.len();
    let dst_dim = monomial_count(r_to);
    // shift_map[axis][m] = index of m * axis-variable in degree r_to
    let shift_map: [Vec<usize>; 3] = [0, 1, 2].map(|axis| {
        src.iter()
            .map(|m| {
                let mut e = *m;
                e[axis] += 1;
                monomial_index(r_to, &e)
            })
            .collect()
    });
    let mut out = Vec::with_capacity(3 * kernel.len());
    for v in kernel {
        for map in &shift_map {
            let mut w = vec![BigInt::ZERO; 3 * dst_dim];
            for block in 0..3 {
                for (m_idx, target) in map.iter().enumerate() {
                    let c = &v[block * src_dim + m_idx];
                    if !num_traits::Zero::is_zero(c) {
                        w[block * dst_dim + target] = c.clone();
                    }
                }
            }
            out.push(w);
        }
    }
    out
}

struct DegreeSweep {
    ar_dims: BTreeMap<usize, usize>,
    gen_degrees: Vec<usize>,
    truncated: bool,
}

/// Walk degrees 0..=r_max, recording graded dimensions and new minimal
/// generators. New generators appearing exactly at the cap mean the search
/// may be incomplete, which is reported as truncation.
///
/// The degree-r piece decomposes as (shifts of the degree r-1 basis) plus
/// new generators. The shifted span is echelonized once; its leading source
/// coordinates index columns of the Jacobian map that are linear
/// combinations of the others, so they are dropped before the rank
/// computation, and the kernel of the reduced map is exactly the space of
/// new generators.
fn sweep(scaled: &ScaledPartials, d: usize, r_max: usize) -> DegreeSweep {
    let mut ar_dims = BTreeMap::new();
    let mut gen_degrees = Vec::new();
    let mut truncated = false;
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..=r_max {
        let m_cols = 3 * monomial_count(r);
        let (spanned, mut span_rows, is_span_pivot) = if basis.is_empty() {
            (0, Vec::new(), vec![false; m_cols])
        } else {
            let shifted = shifted_vectors(&basis, r - 1, r);
            let res =
                linalg::online_reduce(shifted.len(), m_cols, m_cols, |i| shifted[i].clone(), true);
            let mut mask = vec![false; m_cols];
            for &p in &res.pivots {
                mask[p] = true;
            }
            (res.rank, res.rows, mask)
        };
        let kept: Vec<usize> = (0..m_cols).filter(|i| !is_span_pivot[*i]).collect();
        let rank = jacobian_rank(scaled, d, r, Some(&kept));
        let new_dim = kept.len() - rank;
        let a_r = spanned + new_dim;
        ar_dims.insert(r, a_r);
        for _ in 0..new_dim {
            gen_degrees.push(r);
        }
        if r == r_max {
            truncated = new_dim > 0;
            break;
        }
        if new_dim > 0 {
            let mut new_vectors = jacobian_kernel(scaled, d, r, Some(&kept));
            debug_assert_eq!(new_vectors.len(), new_dim);
            span_rows.append(&mut new_vectors);
        }
        basis = span_rows;
    }
    DegreeSweep {
        ar_dims,
        gen_degrees,
        truncated,
    }
}

/// Sorted multiset of minimal generator degrees of the syzygy module,
/// searching degrees up to r_max (use `2 * f.degree()` by default).
pub fn minimal_generator_degrees(f: &HomPoly, r_max: usize) -> Result<Vec<usize>> {
    let d = f.degree();
    if d < 2 || r_max + 1 < d {
        return Err(Error::Precondition(format!(
            "generator search needs degree >= 2 and r_max >= d - 1 (got d = {d}, r_max = {r_max})"
        )));
    }
    let s = sweep(&scaled_partials(f), d, r_max);
    if s.truncated {
        return Err(Error::Truncated { r_max });
    }
    Ok(s.gen_degrees)
}

/// Hilbert function of the Milnor algebra S / (f_x, f_y, f_z) in degree k.
pub fn milnor_hilbert(f: &HomPoly, k: usize) -> usize {
    let d = f.degree();
    if k + 1 < d {
        // The Jacobian ideal lives in degrees >= d - 1.
        return monomial_count(k);
    }
    let scaled = scaled_partials(f);
    monomial_count(k) - jacobian_rank(&scaled, d, k + 1 - d, None)
}

fn stabilized_tau(d: usize, milnor_at: impl Fn(usize) -> usize) -> Result<usize> {
    let degrees = [3 * d - 4, 3 * d - 3, 3 * d - 2];
    let values = degrees.map(&milnor_at);
    if values[0] == values[1] && values[1] == values[2] {
        Ok(values[0])
    } else {
        Err(Error::NonStabilized { degrees, values })
    }
}

/// Total Tjurina number as the stabilized Milnor dimension, probed at the
/// three degrees 3d-4, 3d-3, 3d-2, which must agree.
pub fn tau_algebraic(f: &HomPoly) -> Result<usize> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Precondition(
            "tau_algebraic needs degree >= 2".into(),
        ));
    }
    let scaled = scaled_partials(f);
    stabilized_tau(d, |k| {
        monomial_count(k) - jacobian_rank(&scaled, d, k + 1 - d, None)
    })
}

/// Full syzygy analysis with the default generator search cap 2d.
pub fn analyze(a: &Arrangement) -> Result<SyzygyAnalysis> {
    analyze_with(a, 2 * a.d())
}

/// Full syzygy analysis with an explicit generator search cap.
pub fn analyze_with(a: &Arrangement, r_max: usize) -> Result<SyzygyAnalysis> {
    let d = a.d();
    if d < 2 {
        return Err(Error::Precondition("analysis needs d >= 2 lines".into()));
    }
    if r_max + 1 < d {
        return Err(Error::Precondition(format!(
            "r_max = {r_max} is below d - 1 = {}",
            d - 1
        )));
    }
    let f = defining_polynomial(a);
    let scaled = scaled_partials(&f);

    let s = sweep(&scaled, d, r_max);
    if s.truncated {
        return Err(Error::Truncated { r_max });
    }
    let mut ar_dims = s.ar_dims;
    // Milnor dimensions through 3d-2 need syzygy dimensions through 2d-1.
    for r in (r_max + 1)..=(2 * d - 1) {
        ar_dims.insert(r, 3 * monomial_count(r) - jacobian_rank(&scaled, d, r, None));
    }

    let mdr = match ar_dims.iter().find(|(_, &dim)| dim > 0) {
        Some((&r, _)) if r < d => r,
        _ => {
            return Err(Error::Inconsistent(
                "no Jacobian syzygy found through degree d - 1".into(),
            ))
        }
    };
    if s.gen_degrees.first() != Some(&mdr) {
        return Err(Error::Inconsistent(
            "smallest generator degree disagrees with the minimal relation degree".into(),
        ));
    }

    // dim M_k = dim S_k - (3 dim S_{k-d+1} - dim AR_{k-d+1}) by rank-nullity.
    let mut milnor_dims = BTreeMap::new();
    for k in 0..=(3 * d - 2) {
        let dim = if k + 1 < d {
            monomial_count(k)
        } else {
            let r = k + 1 - d;
            monomial_count(k) - (3 * monomial_count(r) - ar_dims[&r])
        };
        milnor_dims.insert(k, dim);
    }
    let tau = stabilized_tau(d, |k| milnor_dims[&k])?;

    Ok(SyzygyAnalysis {
        d,
        mdr,
        ar_dims,
        gen_degrees: s.gen_degrees,
        milnor_dims,
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{
        complete_quadrilateral, generic_four_lines, pencil, random_arrangement, triangle,
    };
    use crate::rational::rat;

    fn var(axis: usize) -> HomPoly {
        let mut e = [0u32; 3];
        e[axis] = 1;
        HomPoly::monomial(e, rat(1))
    }

    /// Independent check that a triple annihilates the gradient, using
    /// polynomial arithmetic rather than linear algebra.
    fn is_syzygy(f: &HomPoly, triple: &[HomPoly; 3]) -> bool {
        let parts = partials(f);
        let mut acc = HomPoly::zero(triple[0].degree() + f.degree() - 1);
        for (t, p) in triple.iter().zip(parts.iter()) {
            acc = acc.add(&t.mul(p));
        }
        acc.is_zero()
    }

    #[test]
    fn defining_polynomial_examples() {
        assert_eq!(defining_polynomial(&triangle()).to_string(), "x*y*z");
        let xy = Arrangement::from_int_coeffs(&[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert_eq!(defining_polynomial(&xy).to_string(), "x*y");
        let two = Arrangement::from_int_coeffs(&[[1, 0, 0], [1, -1, 0]]).unwrap();
        let f = defining_polynomial(&two);
        assert_eq!(f.coeff(&[2, 0, 0]), rat(1));
        assert_eq!(f.coeff(&[1, 1, 0]), rat(-1));
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn euler_identity_on_random_products() {
        for seed in [1, 7, 23] {
            let a = random_arrangement(4, seed, 5).unwrap();
            let f = defining_polynomial(&a);
            let parts = partials(&f);
            let mut acc = HomPoly::zero(f.degree());
            for (axis, p) in parts.iter().enumerate() {
                acc = acc.add(&var(axis).mul(p));
            }
            assert_eq!(acc, f.scale(&rat(f.degree() as i64)), "seed {seed}");
        }
    }

    #[test]
    fn ar_dimensions_of_triangle() {
        let f = defining_polynomial(&triangle());
        assert_eq!(ar_dimension(&f, 0), 0);
        assert_eq!(ar_dimension(&f, 1), 2);
        // Free with exponents (1,1): dim AR_r = 2 * dim S_{r-1}.
        assert_eq!(ar_dimension(&f, 2), 6);
        assert_eq!(ar_dimension(&f, 3), 12);
        for triple in ar_basis(&f, 1) {
            assert!(is_syzygy(&f, &triple));
        }
    }

    #[test]
    fn ar_dimensions_of_quadrilateral() {
        let f = defining_polynomial(&complete_quadrilateral());
        assert_eq!(ar_dimension(&f, 0), 0);
        assert_eq!(ar_dimension(&f, 1), 0);
        assert_eq!(ar_dimension(&f, 2), 1);
        // Free with exponents (2,3): dim AR_3 = dim S_1 + dim S_0 = 4.
        assert_eq!(ar_dimension(&f, 3), 4);
        for triple in ar_basis(&f, 2) {
            assert!(is_syzygy(&f, &triple));
        }
    }

    #[test]
    fn mdr_examples() {
        assert_eq!(mdr(&defining_polynomial(&triangle())).unwrap(), 1);
        assert_eq!(mdr(&defining_polynomial(&complete_quadrilateral())).unwrap(), 2);
        assert_eq!(mdr(&defining_polynomial(&generic_four_lines())).unwrap(), 2);
        // A pencil is a cone: one partial vanishes identically.
        assert_eq!(mdr(&defining_polynomial(&pencil(4).unwrap())).unwrap(), 0);
    }

    #[test]
    fn generator_degrees_examples() {
        let f = defining_polynomial(&triangle());
        assert_eq!(minimal_generator_degrees(&f, 6).unwrap(), vec![1, 1]);

        let f = defining_polynomial(&complete_quadrilateral());
        assert_eq!(minimal_generator_degrees(&f, 12).unwrap(), vec![2, 3]);

        let f = defining_polynomial(&generic_four_lines());
        assert_eq!(minimal_generator_degrees(&f, 8).unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn generator_search_cap_validation() {
        let f = defining_polynomial(&complete_quadrilateral());
        assert!(minimal_generator_degrees(&f, 4).is_err());
        assert!(minimal_generator_degrees(&f, 5).is_ok());
    }

    #[test]
    fn milnor_hilbert_examples() {
        let f = defining_polynomial(&triangle());
        assert_eq!(milnor_hilbert(&f, 0), 1);
        assert_eq!(milnor_hilbert(&f, 1), 3);
        // S/(yz, xz, xy) has only the pure powers in each degree >= 2.
        for k in 2..8 {
            assert_eq!(milnor_hilbert(&f, k), 3, "degree {k}");
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_algebraic(&defining_polynomial(&triangle())).unwrap(), 3);
        assert_eq!(
            tau_algebraic(&defining_polynomial(&complete_quadrilateral())).unwrap(),
            19
        );
        // One ordinary triple point: tau = (3-1)^2 = 4.
        assert_eq!(
            tau_algebraic(&defining_polynomial(&pencil(3).unwrap())).unwrap(),
            4
        );
        assert_eq!(
            tau_algebraic(&defining_polynomial(&generic_four_lines())).unwrap(),
            6
        );
    }

    #[test]
    fn analyze_examples() {
        let s = analyze(&triangle()).unwrap();
        assert_eq!((s.d, s.mdr, s.tau), (3, 1, 3));
        assert_eq!(s.gen_degrees, vec![1, 1]);

        let s = analyze(&complete_quadrilateral()).unwrap();
        assert_eq!((s.d, s.mdr, s.tau), (6, 2, 19));
        assert_eq!(s.gen_degrees, vec![2, 3]);

        let s = analyze(&generic_four_lines()).unwrap();
        assert_eq!((s.d, s.mdr, s.tau), (4, 2, 6));
        assert_eq!(s.gen_degrees, vec![2, 2, 2]);
    }

    #[test]
    fn analyze_agrees_with_combinatorial_tau() {
        for seed in 0..12 {
            let a = random_arrangement(5, seed, 3).unwrap();
            let s = analyze(&a).unwrap();
            assert_eq!(s.tau, a.profile().tau_combinatorial(), "seed {seed}");
            assert_eq!(s.mdr, *s.gen_degrees.first().unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn two_lines_are_free_with_exponents_zero_one() {
        let xy = Arrangement::from_int_coeffs(&[[1, 0, 0], [0, 1, 0]]).unwrap();
        let s = analyze(&xy).unwrap();
        assert_eq!(s.gen_degrees, vec![0, 1]);
        assert_eq!(s.tau, 1);
    }
}
